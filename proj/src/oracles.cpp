#include "starfact/oracles.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include <json.hpp>

namespace starfact::oracles {

std::string OracleReport::to_json_line() const {
  nlohmann::json j;
  j["subject"] = subject;
  j["instance"] = instance;
  j["expected"] = expected;
  j["actual"] = actual;
  j["pass"] = pass;
  return j.dump();
}

OracleReport make_report(std::string subject, std::string instance, std::string expected, std::string actual) {
  const bool pass = expected == actual;
  return OracleReport{std::move(subject), std::move(instance), std::move(expected), std::move(actual), pass};
}

namespace {

int count_cycles(const std::vector<int>& images) {
  std::vector<bool> seen(images.size() + 1, false);
  int cycles = 0;
  for (int x = 1; x <= static_cast<int>(images.size()); ++x) {
    if (seen[x]) continue;
    ++cycles;
    for (int y = x; !seen[y]; y = images[y - 1]) seen[y] = true;
  }
  return cycles;
}

}  // namespace

std::vector<StarFactorization> brute_star_factorizations(const Permutation& perm, int pivot, std::uint64_t budget) {
  const int n = perm.size();
  if (pivot < 1 || pivot > n) fail(ErrorKind::kInvalidArgument, "pivot outside [1, n]");
  const std::vector<int>& target = perm.images();
  const int length = n + count_cycles(target) - 2;

  std::vector<int> letters;
  for (int i = 1; i <= n; ++i)
    if (i != pivot) letters.push_back(i);
  const auto base = static_cast<std::uint64_t>(letters.size());
  std::uint64_t candidates = 1;
  for (int q = 0; q < length; ++q) {
    if (base != 0 && candidates > budget / base) fail(ErrorKind::kBoundExceeded, "candidate words exceed the budget");
    candidates *= base;
  }
  if (candidates > budget) fail(ErrorKind::kBoundExceeded, "candidate words exceed the budget");

  std::vector<StarFactorization> out;
  if (base == 0) {
    if (length == 0) out.emplace_back(n, pivot, std::vector<int>{});
    return out;
  }
  std::vector<std::size_t> digit(length, 0);
  std::vector<int> word(length, letters[0]);
  while (true) {
    bool matches = true;
    for (int x = 1; x <= n && matches; ++x) {
      int y = x;
      for (int q = length - 1; q >= 0; --q) {
        if (y == pivot)
          y = word[q];
        else if (y == word[q])
          y = pivot;
      }
      matches = y == target[x - 1];
    }
    if (matches && std::set<int>(word.begin(), word.end()).size() == letters.size())
      out.emplace_back(n, pivot, word);

    int q = length - 1;
    while (q >= 0 && digit[q] + 1 == letters.size()) {
      digit[q] = 0;
      word[q] = letters[0];
      --q;
    }
    if (q < 0) break;
    ++digit[q];
    word[q] = letters[digit[q]];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LabeledPartition> brute_lnc(const TypeVector& x, int bound) {
  int total = 0;
  for (int v : x) {
    if (v < 1) fail(ErrorKind::kInvalidArgument, "type vector entries must be positive");
    total += v;
  }
  if (x.empty()) fail(ErrorKind::kInvalidArgument, "empty type vector");
  if (total > bound) fail(ErrorKind::kBoundExceeded, "|x| exceeds the brute-force bound");

  std::vector<int> word;
  for (std::size_t i = 0; i < x.size(); ++i) word.insert(word.end(), x[i], static_cast<int>(i) + 1);
  std::vector<LabeledPartition> out;
  do {
    // Crossing: positions a < b < c < d with w[a] = w[c] != w[b] = w[d].
    bool crossing = false;
    for (int a = 0; a < total && !crossing; ++a)
      for (int c = a + 2; c < total && !crossing; ++c) {
        if (word[c] != word[a]) continue;
        for (int b = a + 1; b < c && !crossing; ++b) {
          if (word[b] == word[a]) continue;
          for (int d = c + 1; d < total; ++d)
            if (word[d] == word[b]) {
              crossing = true;
              break;
            }
        }
      }
    if (crossing) continue;
    LabeledPartition p;
    p.ground_size = total;
    p.parts.resize(x.size());
    for (int q = 0; q < total; ++q) p.parts[word[q] - 1].push_back(q + 1);
    out.push_back(std::move(p));
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

bool subword_leq_oracle(const Permutation& lower, const Permutation& upper, int pivot, int bound) {
  if (lower.size() != upper.size()) fail(ErrorKind::kInvalidArgument, "permutations of different sizes");
  if (lower.size() > bound) fail(ErrorKind::kBoundExceeded, "n exceeds the subword oracle bound");
  std::set<std::vector<int>> small;
  for (const auto& g : enumerate_factorizations(lower, pivot)) small.insert(g.companions());
  if (small.empty()) return false;
  const std::size_t want = small.begin()->size();

  for (const auto& delta : enumerate_factorizations(upper, pivot)) {
    const std::vector<int>& word = delta.companions();
    if (want > word.size()) continue;
    // Walk every subset of positions of size `want` through a selection mask.
    std::vector<bool> pick(word.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(want), true);
    do {
      std::vector<int> sub;
      for (std::size_t q = 0; q < word.size(); ++q)
        if (pick[q]) sub.push_back(word[q]);
      if (small.count(sub)) return true;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return false;
}

bool reachability_leq_oracle(const Permutation& lower, const Permutation& upper, int bound) {
  if (lower.size() != upper.size()) fail(ErrorKind::kInvalidArgument, "permutations of different sizes");
  const int n = lower.size();
  if (n > bound) fail(ErrorKind::kBoundExceeded, "n exceeds the reachability oracle bound");
  const std::vector<int>& goal = upper.images();
  const int goal_cycles = count_cycles(goal);

  // Cutting a cycle at the gaps after a and after b, for a and b on the same
  // cycle, leaves the arcs a+ .. b and b+ .. a: swap the images of a and b.
  std::set<std::vector<int>> seen{lower.images()};
  std::deque<std::vector<int>> queue{lower.images()};
  while (!queue.empty()) {
    const std::vector<int> cur = queue.front();
    queue.pop_front();
    if (cur == goal) return true;
    if (count_cycles(cur) >= goal_cycles) continue;
    for (int a = 1; a <= n; ++a)
      for (int b = cur[a - 1]; b != a; b = cur[b - 1]) {
        if (b < a) continue;
        std::vector<int> next = cur;
        std::swap(next[a - 1], next[b - 1]);
        if (seen.insert(next).second) queue.push_back(std::move(next));
      }
  }
  return false;
}

bool hypercube_iso(const IntervalPoset& interval, int max_rank) {
  const HasseDiagram& h = interval.diagram;
  const std::size_t size = h.vertices.size();
  if (size == 0) return false;
  int lo_rank = h.ranks[0], hi_rank = h.ranks[0];
  for (int r : h.ranks) {
    lo_rank = std::min(lo_rank, r);
    hi_rank = std::max(hi_rank, r);
  }
  const int rank = hi_rank - lo_rank;
  if (rank > max_rank) fail(ErrorKind::kBoundExceeded, "interval rank exceeds the hypercube bound");
  if (size != (std::size_t{1} << rank)) return false;

  // Reflexive-transitive closure of the cover relation.
  std::vector<std::vector<bool>> below(size, std::vector<bool>(size, false));
  for (std::size_t v = 0; v < size; ++v) below[v][v] = true;
  for (const auto& [lo, hi] : h.edges) below[lo][hi] = true;
  for (std::size_t k = 0; k < size; ++k)
    for (std::size_t i = 0; i < size; ++i)
      if (below[i][k])
        for (std::size_t j = 0; j < size; ++j)
          if (below[k][j]) below[i][j] = true;

  std::vector<std::size_t> bottoms;
  for (std::size_t v = 0; v < size; ++v) {
    bool minimal = true;
    for (std::size_t u = 0; u < size; ++u)
      if (u != v && below[u][v]) minimal = false;
    if (minimal) bottoms.push_back(v);
  }
  if (bottoms.size() != 1) return false;
  const std::size_t bottom = bottoms[0];

  std::vector<std::size_t> atoms;
  for (const auto& [lo, hi] : h.edges)
    if (lo == bottom) atoms.push_back(hi);
  if (static_cast<int>(atoms.size()) != rank) return false;

  std::vector<unsigned> mask(size, 0);
  for (std::size_t v = 0; v < size; ++v)
    for (std::size_t a = 0; a < atoms.size(); ++a)
      if (below[atoms[a]][v]) mask[v] |= 1u << a;
  std::set<unsigned> distinct(mask.begin(), mask.end());
  if (distinct.size() != size) return false;
  for (std::size_t v = 0; v < size; ++v)
    for (std::size_t w = 0; w < size; ++w)
      if (below[v][w] != ((mask[v] & mask[w]) == mask[v])) return false;
  return true;
}

}  // namespace starfact::oracles
