#include "covertree/instance.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "covertree/errors.hpp"
#include "covertree/rng.hpp"

namespace covertree {

bool SetCoverInstance::feasible() const { return coverable() == n; }

int SetCoverInstance::coverable() const {
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  int count = 0;
  for (const auto& s : sets) {
    for (int e : s) {
      if (e >= 0 && e < n && !seen[e]) {
        seen[e] = 1;
        ++count;
      }
    }
  }
  return count;
}

int SetCoverInstance::max_set_size() const {
  std::size_t best = 0;
  for (const auto& s : sets) best = std::max(best, s.size());
  return static_cast<int>(best);
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  /// Next non-blank line split into integers. Returns false at end of input.
  bool next(std::vector<long long>& values) {
    std::string line;
    while (std::getline(in_, line)) {
      ++lineNo_;
      values.clear();
      std::istringstream tokens(line);
      std::string tok;
      while (tokens >> tok) {
        long long v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size()) {
          throw ParseError(lineNo_, "expected an integer, got '" + tok + "'");
        }
        values.push_back(v);
      }
      if (!values.empty()) return true;
    }
    return false;
  }

  int line() const { return lineNo_; }

 private:
  std::istream& in_;
  int lineNo_ = 0;
};

SetCoverInstance read_body(LineReader& reader) {
  std::vector<long long> v;
  if (!reader.next(v)) throw ParseError(reader.line(), "missing header \"n m\"");
  if (v.size() != 2) throw ParseError(reader.line(), "header must be \"n m\"");
  if (v[0] < 1) throw ParseError(reader.line(), "n must be positive");
  if (v[1] < 1) throw ParseError(reader.line(), "m must be positive");
  if (v[0] > (1LL << 30) || v[1] > (1LL << 30)) throw ParseError(reader.line(), "header values too large");

  SetCoverInstance sc;
  sc.n = static_cast<int>(v[0]);
  const auto m = static_cast<int>(v[1]);
  sc.sets.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    if (!reader.next(v)) {
      throw ParseError(reader.line(), "expected " + std::to_string(m) + " sets, found " + std::to_string(i));
    }
    const int line = reader.line();
    if (v[0] < 0) throw ParseError(line, "negative set size");
    if (v[0] == 0) throw ParseError(line, "empty set");
    if (static_cast<long long>(v.size()) - 1 != v[0]) {
      throw ParseError(line, "set size " + std::to_string(v[0]) + " but " + std::to_string(v.size() - 1) +
                                 " elements listed");
    }
    std::vector<int> set;
    set.reserve(v.size() - 1);
    for (std::size_t j = 1; j < v.size(); ++j) {
      if (v[j] < 1 || v[j] > sc.n) throw ParseError(line, "element " + std::to_string(v[j]) + " out of range");
      set.push_back(static_cast<int>(v[j] - 1));
    }
    std::sort(set.begin(), set.end());
    if (std::adjacent_find(set.begin(), set.end()) != set.end()) throw ParseError(line, "repeated element in set");
    sc.sets.push_back(std::move(set));
  }
  if (reader.next(v)) throw ParseError(reader.line(), "trailing data after the last set");
  return sc;
}

void write_body(std::ostream& out, const SetCoverInstance& sc) {
  out << sc.n << ' ' << sc.m() << '\n';
  for (const auto& s : sc.sets) {
    out << s.size();
    for (int e : s) out << ' ' << e + 1;
    out << '\n';
  }
}

}  // namespace

SetCoverInstance parse_set_cover(std::istream& in) {
  LineReader reader(in);
  return read_body(reader);
}

SetCoverInstance parse_set_cover(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_set_cover(in);
}

PartialCoverInstance parse_partial_cover(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_partial_cover(std::string_view(buf.str()));
}

PartialCoverInstance parse_partial_cover(std::string_view text) {
  // Split off the "p P" line, then reuse the set-cover reader with line numbers intact.
  std::size_t pos = 0;
  int lineNo = 0;
  std::string first;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    ++lineNo;
    std::string line(text.substr(pos, end - pos));
    pos = end + 1;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    first = std::move(line);
    break;
  }
  std::istringstream head(first);
  std::string keyword;
  long long p = 0;
  std::string extra;
  if (!(head >> keyword) || keyword != "p" || !(head >> p) || (head >> extra)) {
    throw ParseError(lineNo, "expected \"p P\"");
  }
  std::istringstream rest{std::string(pos <= text.size() ? text.substr(pos) : std::string_view{})};
  PartialCoverInstance pc;
  try {
    pc.base = parse_set_cover(rest);
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    const auto colon = msg.find(": ");
    throw ParseError(e.line() + lineNo, colon == std::string::npos ? msg : msg.substr(colon + 2));
  }
  if (p < 1 || p > pc.base.n) throw ParseError(lineNo, "p must lie in 1..n");
  pc.p = static_cast<int>(p);
  return pc;
}

std::string serialize_set_cover(const SetCoverInstance& sc) {
  std::ostringstream out;
  write_body(out, sc);
  return out.str();
}

std::string serialize_partial_cover(const PartialCoverInstance& pc) {
  std::ostringstream out;
  out << "p " << pc.p << '\n';
  write_body(out, pc.base);
  return out.str();
}

SetCoverInstance random_instance(int n, int m, int maxSetSize, std::uint64_t seed, bool makeFeasible) {
  if (n < 1 || m < 1) throw std::invalid_argument("random_instance: n and m must be positive");
  if (maxSetSize < 1 || maxSetSize > n) throw std::invalid_argument("random_instance: need 1 <= maxSetSize <= n");

  Rng rng(seed);
  SetCoverInstance sc;
  sc.n = n;
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < m; ++i) {
    const int size = rng.uniform_int(1, maxSetSize);
    std::iota(pool.begin(), pool.end(), 0);
    // Partial Fisher-Yates: the first `size` slots become a uniform subset.
    for (int j = 0; j < size; ++j) {
      const int pick = j + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - j)));
      std::swap(pool[j], pool[pick]);
    }
    std::vector<int> set(pool.begin(), pool.begin() + size);
    std::sort(set.begin(), set.end());
    sc.sets.push_back(std::move(set));
  }
  if (makeFeasible) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (const auto& s : sc.sets)
      for (int e : s) seen[e] = 1;
    for (int e = 0; e < n; ++e)
      if (!seen[e]) sc.sets.push_back({e});
  }
  return sc;
}

std::vector<std::string> validate(const SetCoverInstance& sc) {
  std::vector<std::string> findings;
  std::vector<char> seen(static_cast<std::size_t>(std::max(sc.n, 0)), 0);
  for (const auto& s : sc.sets)
    for (int e : s)
      if (e >= 0 && e < sc.n) seen[e] = 1;
  bool covered = true;
  for (int e = 0; e < sc.n; ++e) {
    if (!seen[e]) {
      covered = false;
      findings.push_back("union misses element " + std::to_string(e + 1));
    }
  }
  if (covered) findings.insert(findings.begin(), "feasible");

  for (int i = 0; i < sc.m(); ++i) {
    const auto& s = sc.sets[i];
    if (s.empty()) findings.push_back("set " + std::to_string(i + 1) + " is empty");
    for (int e : s) {
      if (e < 0 || e >= sc.n) {
        findings.push_back("set " + std::to_string(i + 1) + " has element " + std::to_string(e + 1) +
                           " out of range");
      }
    }
  }

  for (int i = 0; i < sc.m(); ++i) {
    for (int j = i + 1; j < sc.m(); ++j) {
      if (sc.sets[i] == sc.sets[j]) {
        findings.push_back("duplicate sets at indices " + std::to_string(i + 1) + "," + std::to_string(j + 1));
      }
    }
  }
  return findings;
}

}  // namespace covertree
