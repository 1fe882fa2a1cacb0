#include "starfact/bijection.hpp"

#include <algorithm>
#include <map>

namespace starfact {

std::string to_string(const SFPreimage& pre) {
  std::string out = "necklace=" + format_word(pre.necklace) + ";origin=0;d=";
  for (std::size_t i = 0; i < pre.d.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(pre.d[i]);
  }
  return out;
}

namespace {

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i <= text.size()) {
    std::size_t j = text.find(',', i);
    if (j == std::string_view::npos) j = text.size();
    const std::string tok(text.substr(i, j - i));
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 6)
      fail(ErrorKind::kParse, "bad integer list \"" + std::string(text) + "\"");
    out.push_back(std::stoi(tok));
    i = j + 1;
  }
  return out;
}

}  // namespace

SFPreimage parse_preimage(std::string_view text, const Permutation& perm, int pivot) {
  std::map<std::string, std::string, std::less<>> fields;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t j = text.find(';', i);
    if (j == std::string_view::npos) j = text.size();
    std::string_view item = text.substr(i, j - i);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) fail(ErrorKind::kParse, "preimage field without '='");
    fields[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
    i = j + 1;
  }
  for (const char* key : {"necklace", "origin", "d"})
    if (!fields.count(key)) fail(ErrorKind::kParse, std::string("preimage is missing ") + key);

  SFPreimage pre{parse_word(fields["necklace"]), parse_int_list(fields["d"]), perm, pivot};
  std::size_t origin = 0;
  try {
    origin = std::stoul(fields["origin"]);
  } catch (const std::exception&) {
    fail(ErrorKind::kParse, "bad preimage origin");
  }
  if (pre.necklace.empty() || origin >= pre.necklace.size()) fail(ErrorKind::kParse, "bad preimage origin");
  std::rotate(pre.necklace.begin(), pre.necklace.begin() + static_cast<std::ptrdiff_t>(origin), pre.necklace.end());
  pre.degenerate = perm.cycle_count() == 1;
  validate_preimage(pre);
  return pre;
}

void validate_preimage(const SFPreimage& pre) {
  const Permutation& perm = pre.perm;
  const int m = perm.cycle_count();
  const TypeVector want = type_vector(perm, pre.pivot);
  TypeVector have(m, 0);
  for (int c : pre.necklace) {
    if (c < 1 || c > m) fail(ErrorKind::kInvalidArgument, "necklace label outside [1, m]");
    ++have[c - 1];
  }
  if (have != want)
    fail(ErrorKind::kInvalidArgument, "necklace type " + format_type_vector(have) + " does not match " +
                                          format_type_vector(want));
  if (!is_noncrossing_cyclic(pre.necklace)) fail(ErrorKind::kInvalidArgument, "necklace has a crossing");
  if (static_cast<int>(pre.d.size()) != m) fail(ErrorKind::kInvalidArgument, "d has the wrong length");
  for (int j = 1; j <= m; ++j)
    if (pre.d[j - 1] < 1 || pre.d[j - 1] > static_cast<int>(perm.cycle(j).size()))
      fail(ErrorKind::kInvalidArgument, "d_" + std::to_string(j) + " = " + std::to_string(pre.d[j - 1]) +
                                            " is out of range");
}

namespace {

std::size_t nth_bead(const std::vector<int>& beads, int label, int ordinal) {
  int seen = 0;
  for (std::size_t q = 0; q < beads.size(); ++q)
    if (beads[q] == label && ++seen == ordinal) return q;
  fail(ErrorKind::kInvalidArgument, "necklace has fewer than " + std::to_string(ordinal) + " beads labeled " +
                                        std::to_string(label));
}

int kth_smallest(const Cycle& cycle, int k) {
  std::vector<int> sorted(cycle.elements().begin(), cycle.elements().end());
  std::sort(sorted.begin(), sorted.end());
  return sorted.at(k - 1);
}

StarFactorization single_cycle_factorization(const Permutation& perm, int pivot) {
  const CycleWord word(perm.size() - 1, 1);
  return fill_word(word, perm, pivot, {});
}

}  // namespace

StarFactorization sf(const SFPreimage& pre) {
  validate_preimage(pre);
  const Permutation& perm = pre.perm;
  const int m = perm.cycle_count();
  if (m == 1) return single_cycle_factorization(perm, pre.pivot);

  const int p = perm.cycle_label(pre.pivot);
  const std::size_t removed = nth_bead(pre.necklace, p, pre.d[p - 1]);
  const std::size_t len = pre.necklace.size();
  CycleWord word;
  word.reserve(len - 1);
  for (std::size_t q = 1; q < len; ++q) word.push_back(pre.necklace[(removed + q) % len]);

  std::map<int, int> doubled;
  for (int j = 1; j <= m; ++j)
    if (j != p) doubled[j] = kth_smallest(perm.cycle(j), pre.d[j - 1]);
  return fill_word(word, perm, pre.pivot, doubled);
}

SFPreimage sf_inverse(const StarFactorization& delta, const Permutation& perm) {
  const CycleWord word = cycle_word(delta, perm);
  const int m = perm.cycle_count();
  if (m == 1) return SFPreimage{std::vector<int>(perm.size(), 1), DTuple{1}, perm, delta.pivot(), true};

  const int p = perm.cycle_label(delta.pivot());
  DTuple d(m, 0);
  std::map<int, int> uses;
  for (int i : delta.companions()) ++uses[i];
  for (int j = 1; j <= m; ++j) {
    if (j == p) continue;
    std::vector<int> sorted(perm.cycle(j).elements().begin(), perm.cycle(j).elements().end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t r = 0; r < sorted.size(); ++r)
      if (uses[sorted[r]] == 2) d[j - 1] = static_cast<int>(r) + 1;
    if (d[j - 1] == 0) fail(ErrorKind::kDefect, "no doubled factor for cycle " + std::to_string(j));
  }

  PresentedNecklace bar = bar_insert(word, p);
  const auto first_one = std::find(bar.beads.begin(), bar.beads.end(), 1);
  const std::size_t origin = static_cast<std::size_t>(first_one - bar.beads.begin());
  const std::size_t len = bar.beads.size();
  std::vector<int> beads;
  beads.reserve(len);
  for (std::size_t q = 0; q < len; ++q) beads.push_back(bar.beads[(origin + q) % len]);
  const std::size_t inserted = (*bar.inserted + len - origin) % len;
  d[p - 1] = static_cast<int>(std::count(beads.begin(), beads.begin() + static_cast<std::ptrdiff_t>(inserted) + 1, p));
  return SFPreimage{std::move(beads), std::move(d), perm, delta.pivot(), false};
}

namespace {

// direction +1 reads counterclockwise (increasing index), -1 clockwise.
SFPreimage shift_along(const SFPreimage& pre, int new_pivot, int direction) {
  validate_preimage(pre);
  const Permutation& perm = pre.perm;
  const int p = perm.cycle_label(pre.pivot);
  const int target = pivot_cycle_index(perm, new_pivot);
  SFPreimage out = pre;
  out.pivot = new_pivot;
  if (p == target) return out;

  const auto len = static_cast<std::ptrdiff_t>(pre.necklace.size());
  auto at = [&](std::ptrdiff_t offset) {
    return static_cast<std::size_t>(((offset % len) + len) % len);
  };
  const auto anchor = static_cast<std::ptrdiff_t>(nth_bead(pre.necklace, p, pre.d[p - 1]));
  std::ptrdiff_t t = 1;
  while (pre.necklace[at(anchor + direction * t)] != target) ++t;
  std::vector<int> s;  // s_1 ... s_t, s_t being the first target bead
  for (std::ptrdiff_t q = 1; q <= t; ++q) s.push_back(pre.necklace[at(anchor + direction * q)]);

  for (std::ptrdiff_t h = t; h >= 1; --h) {
    // p s_1 ... s_{h-1} p s_h ... s_{t-1}
    std::vector<int> segment{p};
    segment.insert(segment.end(), s.begin(), s.begin() + (h - 1));
    segment.push_back(p);
    segment.insert(segment.end(), s.begin() + (h - 1), s.begin() + (t - 1));
    std::vector<int> candidate = pre.necklace;
    for (std::ptrdiff_t q = 0; q <= t; ++q) candidate[at(anchor + direction * q)] = segment[q];
    if (is_noncrossing_cyclic(candidate)) {
      out.necklace = std::move(candidate);
      return out;
    }
  }
  fail(ErrorKind::kDefect, "shift found no noncrossing insertion point for " + to_string(pre));
}

}  // namespace

SFPreimage shift(const SFPreimage& pre, int new_pivot) { return shift_along(pre, new_pivot, +1); }

SFPreimage shift_inverse(const SFPreimage& pre, int new_pivot) { return shift_along(pre, new_pivot, -1); }

StarFactorization pivot_change(const StarFactorization& delta, const Permutation& perm, int new_pivot) {
  SFPreimage pre = sf_inverse(delta, perm);
  if (pre.degenerate) {
    pivot_cycle_index(perm, new_pivot);
    return single_cycle_factorization(perm, new_pivot);
  }
  return sf(shift(pre, new_pivot));
}

}  // namespace starfact
