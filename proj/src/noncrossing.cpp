#include "starfact/noncrossing.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace starfact {

namespace {

void check_type(const TypeVector& x) {
  if (x.empty()) fail(ErrorKind::kInvalidArgument, "type vector must have at least one part");
  for (int v : x)
    if (v < 1) fail(ErrorKind::kInvalidArgument, "type vector entries must be positive");
}

}  // namespace

TypeVector parse_type_vector(std::string_view text) {
  TypeVector x;
  std::size_t i = 0;
  while (i <= text.size()) {
    std::size_t j = text.find(',', i);
    if (j == std::string_view::npos) j = text.size();
    std::string_view tok = text.substr(i, j - i);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (tok.empty() || tok.size() > 6 ||
        !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      fail(ErrorKind::kParse, "bad type vector \"" + std::string(text) + "\"");
    x.push_back(std::stoi(std::string(tok)));
    i = j + 1;
  }
  for (int v : x)
    if (v < 1) fail(ErrorKind::kParse, "type vector entries must be positive");
  return x;
}

std::string format_type_vector(const TypeVector& x) {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(x[i]);
  }
  return out;
}

int total_size(const TypeVector& x) {
  int total = 0;
  for (int v : x) total += v;
  return total;
}

std::string to_string(const LabeledPartition& partition) {
  std::string out;
  for (std::size_t i = 0; i < partition.parts.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(i + 1) + ":{";
    for (std::size_t q = 0; q < partition.parts[i].size(); ++q) {
      if (q) out += ',';
      out += std::to_string(partition.parts[i][q]);
    }
    out += '}';
  }
  return out;
}

std::vector<int> label_word(const LabeledPartition& partition) {
  std::vector<int> word(partition.ground_size, 0);
  for (std::size_t i = 0; i < partition.parts.size(); ++i)
    for (int x : partition.parts[i]) {
      if (x < 1 || x > partition.ground_size || word[x - 1] != 0)
        fail(ErrorKind::kInvalidArgument, "parts do not partition the ground set");
      word[x - 1] = static_cast<int>(i) + 1;
    }
  if (std::find(word.begin(), word.end(), 0) != word.end())
    fail(ErrorKind::kInvalidArgument, "parts do not cover the ground set");
  return word;
}

LabeledPartition partition_from_labels(std::span<const int> labels) {
  LabeledPartition out;
  out.ground_size = static_cast<int>(labels.size());
  int m = 0;
  for (int c : labels) m = std::max(m, c);
  out.parts.resize(m);
  for (std::size_t q = 0; q < labels.size(); ++q) out.parts[labels[q] - 1].push_back(static_cast<int>(q) + 1);
  return out;
}

bool is_noncrossing_cyclic(std::span<const int> word) {
  // A cyclic alternation i j i j survives any linearization as ijij or jiji,
  // so the linear stack test decides the cyclic question.
  int max_label = 0;
  for (int c : word) max_label = std::max(max_label, c);
  std::vector<int> last(max_label + 1, -1);
  for (std::size_t q = 0; q < word.size(); ++q) last[word[q]] = static_cast<int>(q);
  std::vector<bool> open(max_label + 1, false);
  std::vector<int> stack;
  for (std::size_t q = 0; q < word.size(); ++q) {
    const int c = word[q];
    if (open[c] && stack.back() != c) return false;
    if (!open[c] && last[c] != static_cast<int>(q)) {
      open[c] = true;
      stack.push_back(c);
    } else if (open[c] && last[c] == static_cast<int>(q)) {
      open[c] = false;
      stack.pop_back();
    }
  }
  return true;
}

bool is_noncrossing_partition(const LabeledPartition& partition) {
  const auto word = label_word(partition);
  return is_noncrossing_cyclic(word);
}

TypeVector type_vector(const Permutation& perm, int pivot) {
  const int p = pivot_cycle_index(perm, pivot);
  TypeVector x = perm.cycle_lengths();
  for (int j = 1; j <= perm.cycle_count(); ++j)
    if (j != p) x[j - 1] += 1;
  return x;
}

PresentedNecklace bar_insert(std::span<const int> word, int p) {
  PresentedNecklace out;
  out.beads.assign(word.begin(), word.end());
  out.beads.push_back(p);
  out.inserted = word.size();
  return out;
}

std::size_t least_rotation(std::span<const int> s) {
  // Two-candidate scan for the minimal cyclic shift.
  const std::size_t n = s.size();
  if (n == 0) return 0;
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const int a = s[(i + k) % n];
    const int b = s[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b)
      i += k + 1;
    else
      j += k + 1;
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

Necklace canonical_necklace(std::span<const int> beads) {
  const std::size_t offset = least_rotation(beads);
  Necklace out;
  out.beads.reserve(beads.size());
  for (std::size_t q = 0; q < beads.size(); ++q) out.beads.push_back(beads[(offset + q) % beads.size()]);
  return out;
}

namespace {

// Lexicographic generation of noncrossing label words of type x. A prefix is
// extended only while no label that still has beads to place is buried under
// another open label.
void for_each_lnc_word(const TypeVector& x, const std::function<void(const std::vector<int>&)>& visit) {
  const int m = static_cast<int>(x.size());
  const int total = total_size(x);
  std::vector<int> remaining(x.begin(), x.end());
  remaining.insert(remaining.begin(), 0);
  std::vector<int> word;
  std::vector<int> stack;
  std::vector<bool> started(m + 1, false);

  std::function<void()> extend = [&] {
    if (static_cast<int>(word.size()) == total) {
      visit(word);
      return;
    }
    for (int c = 1; c <= m; ++c) {
      if (remaining[c] == 0) continue;
      if (started[c] && stack.back() != c) continue;
      const auto saved_stack = stack;
      const bool saved_started = started[c];
      word.push_back(c);
      --remaining[c];
      if (!started[c]) {
        started[c] = true;
        if (remaining[c] > 0) stack.push_back(c);
      } else if (remaining[c] == 0) {
        stack.pop_back();
      }
      extend();
      stack = saved_stack;
      started[c] = saved_started;
      ++remaining[c];
      word.pop_back();
    }
  };
  extend();
}

void check_bound(const TypeVector& x, int bound) {
  check_type(x);
  if (total_size(x) > bound)
    fail(ErrorKind::kBoundExceeded, "|x| = " + std::to_string(total_size(x)) +
                                        " exceeds the enumeration bound " + std::to_string(bound));
}

}  // namespace

std::vector<LabeledPartition> enumerate_lnc(const TypeVector& x, int bound) {
  check_bound(x, bound);
  std::vector<LabeledPartition> out;
  for_each_lnc_word(x, [&](const std::vector<int>& w) { out.push_back(partition_from_labels(w)); });
  return out;
}

std::vector<Necklace> enumerate_lncn(const TypeVector& x, int bound) {
  check_bound(x, bound);
  std::vector<Necklace> out;
  // Every rotation of a noncrossing word is noncrossing, so keeping the words
  // that are their own least rotation picks one per class.
  for_each_lnc_word(x, [&](const std::vector<int>& w) {
    if (least_rotation(w) == 0) out.push_back(Necklace{w});
  });
  return out;
}

BigInt count_lncn(const TypeVector& x) {
  check_type(x);
  const int m = static_cast<int>(x.size());
  const auto ones = std::count(x.begin(), x.end(), 1);
  if (m < 2 || ones > 1)
    fail(ErrorKind::kDomain,
         "type " + format_type_vector(x) +
             " is outside the counting formula regime (needs m >= 2 and at most one part of size 1); "
             "enumerate instead");
  return falling_factorial(total_size(x) - 1, m - 2);
}

BigInt count_lnc(const TypeVector& x) {
  check_type(x);
  return falling_factorial(total_size(x), static_cast<int>(x.size()) - 1);
}

}  // namespace starfact
