#include "starfact/star.hpp"

#include <algorithm>
#include <cctype>

#include "text.hpp"

namespace starfact {

StarFactorization::StarFactorization(int n, int pivot, std::vector<int> companions)
    : n_(n), pivot_(pivot), companions_(std::move(companions)) {
  if (n < 1) fail(ErrorKind::kInvalidArgument, "factorization size must be positive");
  if (pivot < 1 || pivot > n)
    fail(ErrorKind::kInvalidArgument, "pivot " + std::to_string(pivot) + " outside [1, " +
                                          std::to_string(n) + "]");
  for (int i : companions_)
    if (i < 1 || i > n || i == pivot)
      fail(ErrorKind::kInvalidArgument,
           "(" + std::to_string(pivot) + " " + std::to_string(i) + ") is not a star transposition");
}

std::vector<Transposition> StarFactorization::factors() const {
  std::vector<Transposition> out;
  out.reserve(companions_.size());
  for (int i : companions_) out.push_back({pivot_, i});
  return out;
}

Permutation StarFactorization::product() const {
  const auto fs = factors();
  return product_right_to_left(fs, n_);
}

std::string StarFactorization::to_string() const {
  std::string out;
  const std::string head = "(" + std::to_string(pivot_) + " ";
  for (int i : companions_) out += head + std::to_string(i) + ")";
  return out;
}

StarFactorization parse_factorization(std::string_view text, int n, int pivot_if_empty) {
  const auto groups = detail::parse_parenthesized_groups(text);
  if (groups.empty()) return StarFactorization(n, pivot_if_empty, {});
  const int pivot = groups.front().front();
  std::vector<int> companions;
  for (const auto& g : groups) {
    if (g.size() != 2) fail(ErrorKind::kParse, "every factor must be a transposition");
    if (g[0] != pivot)
      fail(ErrorKind::kParse, "factor (" + std::to_string(g[0]) + " " + std::to_string(g[1]) +
                                  ") does not start with pivot " + std::to_string(pivot));
    companions.push_back(g[1]);
  }
  for (int i : companions)
    if (i > n || pivot > n) fail(ErrorKind::kParse, "factor element exceeds n");
  return StarFactorization(n, pivot, std::move(companions));
}

std::string format_word(std::span<const int> word) {
  const bool compact = std::all_of(word.begin(), word.end(), [](int c) { return c >= 1 && c <= 9; });
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!compact && i) out += ',';
    out += std::to_string(word[i]);
  }
  return out;
}

CycleWord parse_word(std::string_view text) {
  CycleWord word;
  if (text.find(',') == std::string_view::npos) {
    for (char ch : text) {
      if (ch < '1' || ch > '9') fail(ErrorKind::kParse, "bad letter in word");
      word.push_back(ch - '0');
    }
    return word;
  }
  std::size_t i = 0;
  while (i <= text.size()) {
    std::size_t j = text.find(',', i);
    if (j == std::string_view::npos) j = text.size();
    std::string_view tok = text.substr(i, j - i);
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      fail(ErrorKind::kParse, "bad letter in word");
    int v = std::stoi(std::string(tok));
    if (v < 1) fail(ErrorKind::kParse, "word letters are positive labels");
    word.push_back(v);
    i = j + 1;
  }
  return word;
}

bool verify_star_factorization(const StarFactorization& delta, const Permutation& perm) {
  if (delta.size() != perm.size())
    fail(ErrorKind::kInvalidArgument, "factorization and permutation have different sizes");
  const int n = perm.size();
  const int m = perm.cycle_count();
  if (static_cast<int>(delta.length()) != n + m - 2) return false;
  std::vector<bool> used(n + 1, false);
  for (int i : delta.companions()) used[i] = true;
  for (int i = 1; i <= n; ++i)
    if (i != delta.pivot() && !used[i]) return false;
  return delta.product() == perm;
}

CycleWord cycle_word(const StarFactorization& delta, const Permutation& perm) {
  if (!verify_star_factorization(delta, perm))
    fail(ErrorKind::kDomain, delta.to_string() + " is not a minimal transitive star factorization of " +
                                 perm.to_string());
  CycleWord word;
  word.reserve(delta.length());
  for (int i : delta.companions()) word.push_back(perm.cycle_label(i));
  return word;
}

namespace {

// Linear noncrossing test of the label partition: no scattered i j i j.
bool free_of_abab(std::span<const int> word, int m) {
  std::vector<int> last(m + 1, -1);
  for (std::size_t q = 0; q < word.size(); ++q) last[word[q]] = static_cast<int>(q);
  std::vector<bool> open(m + 1, false);
  std::vector<int> stack;
  for (std::size_t q = 0; q < word.size(); ++q) {
    const int c = word[q];
    if (open[c]) {
      if (stack.back() != c) return false;
    } else if (last[c] != static_cast<int>(q)) {
      open[c] = true;
      stack.push_back(c);
    }
    if (open[c] && last[c] == static_cast<int>(q)) {
      open[c] = false;
      stack.pop_back();
    }
  }
  return true;
}

std::vector<int> multiplicities(const Permutation& perm, int p) {
  std::vector<int> want(perm.cycle_count() + 1, 0);
  for (int j = 1; j <= perm.cycle_count(); ++j) {
    const int len = static_cast<int>(perm.cycle(j).size());
    want[j] = j == p ? len - 1 : len + 1;
  }
  return want;
}

}  // namespace

bool is_valid_word(std::span<const int> word, const Permutation& perm, int pivot) {
  const int m = perm.cycle_count();
  const int p = pivot_cycle_index(perm, pivot);
  std::vector<int> count(m + 1, 0);
  for (int c : word) {
    if (c < 1 || c > m) return false;
    ++count[c];
  }
  if (count != multiplicities(perm, p)) return false;
  if (!free_of_abab(word, m)) return false;

  // No i p i: no p strictly between the first and last occurrence of i.
  std::vector<int> first(m + 1, -1), last(m + 1, -1);
  for (std::size_t q = 0; q < word.size(); ++q) {
    if (first[word[q]] < 0) first[word[q]] = static_cast<int>(q);
    last[word[q]] = static_cast<int>(q);
  }
  for (std::size_t q = 0; q < word.size(); ++q) {
    if (word[q] != p) continue;
    for (int i = 1; i <= m; ++i)
      if (i != p && first[i] >= 0 && first[i] < static_cast<int>(q) && static_cast<int>(q) < last[i])
        return false;
  }
  return true;
}

StarFactorization fill_word(std::span<const int> word, const Permutation& perm, int pivot,
                            const std::map<int, int>& doubled) {
  if (!is_valid_word(word, perm, pivot))
    fail(ErrorKind::kInvalidArgument, "word " + format_word(word) + " is not valid for " +
                                          perm.to_string() + " with pivot " + std::to_string(pivot));
  const int m = perm.cycle_count();
  const int p = perm.cycle_label(pivot);

  // Factor sequence each cycle contributes to its own positions, left to right.
  std::vector<std::vector<int>> sequence(m + 1);
  for (int j = 1; j <= m; ++j) {
    const Cycle& cycle = perm.cycle(j);
    const std::size_t t = cycle.size();
    if (j == p) {
      // C_p = (k b_2 ... b_t) contributes (k b_t) ... (k b_2).
      const auto elems = cycle.elements();
      const std::size_t at = std::find(elems.begin(), elems.end(), pivot) - elems.begin();
      for (std::size_t q = t - 1; q >= 1; --q) sequence[j].push_back(cycle.at_cyclic(at + q));
      continue;
    }
    auto it = doubled.find(j);
    if (it == doubled.end())
      fail(ErrorKind::kInvalidArgument, "no doubled element given for cycle " + std::to_string(j));
    const auto elems = cycle.elements();
    const auto pos = std::find(elems.begin(), elems.end(), it->second);
    if (pos == elems.end())
      fail(ErrorKind::kInvalidArgument, std::to_string(it->second) + " is not in cycle " +
                                            cycle.to_string());
    // C_j = (a_1 ... a_t), c_j = a_s: a_s a_{s-1} ... a_1 a_t ... a_{s+1} a_s.
    const std::size_t s = pos - elems.begin();
    for (std::size_t q = 0; q < t; ++q) sequence[j].push_back(cycle.at_cyclic(s + t - q));
    sequence[j].push_back(it->second);
  }

  std::vector<std::size_t> next(m + 1, 0);
  std::vector<int> companions;
  companions.reserve(word.size());
  for (int c : word) companions.push_back(sequence[c][next[c]++]);
  return StarFactorization(perm.size(), pivot, std::move(companions));
}

namespace {

class WordSearch {
 public:
  WordSearch(const Permutation& perm, int pivot)
      : m_(perm.cycle_count()),
        p_(pivot_cycle_index(perm, pivot)),
        remaining_(multiplicities(perm, p_)),
        positions_(m_ + 1) {
    int total = 0;
    for (int j = 1; j <= m_; ++j) total += remaining_[j];
    word_.reserve(total);
    length_ = total;
  }

  // Visits valid words in lexicographic order; stops when visit returns false.
  bool run(const std::function<bool(const CycleWord&)>& visit) { return extend(visit); }

 private:
  bool extend(const std::function<bool(const CycleWord&)>& visit) {
    if (static_cast<int>(word_.size()) == length_) return visit(word_);
    for (int c = 1; c <= m_; ++c) {
      if (remaining_[c] == 0 || !can_append(c)) continue;
      positions_[c].push_back(static_cast<int>(word_.size()));
      word_.push_back(c);
      --remaining_[c];
      const bool go_on = extend(visit);
      ++remaining_[c];
      word_.pop_back();
      positions_[c].pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  // Every forbidden pattern ends at some letter, so checking the patterns
  // completed by the appended letter c is enough.
  bool can_append(int c) const {
    if (c != p_ && !positions_[c].empty() && !positions_[p_].empty() &&
        positions_[p_].back() > positions_[c].front())
      return false;  // c p c
    for (int i = 1; i <= m_; ++i) {
      if (i == c || positions_[i].size() < 2) continue;
      const int lo = positions_[i].front();
      const int hi = positions_[i].back();
      for (int q : positions_[c])
        if (lo < q && q < hi) return false;  // i c i c
    }
    return true;
  }

  int m_;
  int p_;
  int length_ = 0;
  std::vector<int> remaining_;
  std::vector<std::vector<int>> positions_;
  CycleWord word_;
};

}  // namespace

std::vector<CycleWord> enumerate_valid_words(const Permutation& perm, int pivot) {
  std::vector<CycleWord> out;
  WordSearch(perm, pivot).run([&](const CycleWord& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

void for_each_factorization(const Permutation& perm, int pivot,
                            const std::function<bool(const StarFactorization&)>& visit) {
  const int m = perm.cycle_count();
  const int p = pivot_cycle_index(perm, pivot);
  std::vector<int> labels;
  std::vector<std::vector<int>> choices;
  for (int j = 1; j <= m; ++j) {
    if (j == p) continue;
    auto elems = perm.cycle(j).elements();
    std::vector<int> sorted(elems.begin(), elems.end());
    std::sort(sorted.begin(), sorted.end());
    labels.push_back(j);
    choices.push_back(std::move(sorted));
  }

  WordSearch(perm, pivot).run([&](const CycleWord& word) {
    std::vector<std::size_t> odometer(labels.size(), 0);
    while (true) {
      std::map<int, int> doubled;
      for (std::size_t q = 0; q < labels.size(); ++q) doubled[labels[q]] = choices[q][odometer[q]];
      if (!visit(fill_word(word, perm, pivot, doubled))) return false;
      // Last label varies fastest.
      std::size_t q = labels.size();
      while (q > 0) {
        --q;
        if (++odometer[q] < choices[q].size()) break;
        odometer[q] = 0;
        if (q == 0) return true;
      }
      if (labels.empty()) return true;
    }
  });
}

std::vector<StarFactorization> enumerate_factorizations(const Permutation& perm, int pivot) {
  std::vector<StarFactorization> out;
  for_each_factorization(perm, pivot, [&](const StarFactorization& d) {
    out.push_back(d);
    return true;
  });
  return out;
}

BigInt count_factorizations(const Permutation& perm) {
  const int n = perm.size();
  const int m = perm.cycle_count();
  BigInt product = 1;
  for (int len : perm.cycle_lengths()) product *= len;
  return factorial(n + m - 2) * product / factorial(n);
}

}  // namespace starfact
