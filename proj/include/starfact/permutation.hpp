#ifndef STARFACT_PERMUTATION_HPP
#define STARFACT_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "starfact/error.hpp"

namespace starfact {

/// A cycle on positive integers. Stored rotated so that its minimal element
/// comes first, which makes equality coincide with rotation-equality.
class Cycle {
 public:
  Cycle() = default;
  explicit Cycle(std::vector<int> elements);

  std::span<const int> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  int operator[](std::size_t i) const { return elements_[i]; }
  int min_element() const { return elements_.front(); }
  bool contains(int x) const;

  /// Element at cyclic offset i, i.e. elements()[i mod size()].
  int at_cyclic(std::size_t i) const { return elements_[i % elements_.size()]; }

  std::string to_string() const;

  friend bool operator==(const Cycle&, const Cycle&) = default;
  friend auto operator<=>(const Cycle&, const Cycle&) = default;

 private:
  std::vector<int> elements_;
};

/// An element of S_n in canonical disjoint-cycle form: fixed points are
/// explicit singleton cycles, each cycle starts at its minimum, and cycles are
/// sorted by minimal element. Cycle labels are 1-based in that order.
class Permutation {
 public:
  static Permutation identity(int n);
  /// Cycles may be given in any order and rotation; omitted points of [n]
  /// become fixed points.
  static Permutation from_cycles(int n, std::vector<Cycle> cycles);
  /// images[x-1] = pi(x).
  static Permutation from_images(std::vector<int> images);

  int size() const { return n_; }
  int cycle_count() const { return static_cast<int>(cycles_.size()); }
  const std::vector<Cycle>& cycles() const { return cycles_; }
  const Cycle& cycle(int label) const { return cycles_.at(label - 1); }
  std::vector<int> cycle_lengths() const;
  const std::vector<int>& images() const { return images_; }

  int operator()(int x) const { return images_[x - 1]; }
  /// 1-based label of the cycle containing x.
  int cycle_label(int x) const { return labels_[x - 1]; }

  std::string to_string() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  Permutation() = default;

  int n_ = 0;
  std::vector<Cycle> cycles_;
  std::vector<int> images_;
  std::vector<int> labels_;
};

/// Parses cycle notation such as "(1 3)(2 8 5)" or the compact "(13)(285)".
/// A cycle without separators is read one digit per element. When n is
/// omitted it defaults to the largest element mentioned.
Permutation parse_permutation(std::string_view text, std::optional<int> n = std::nullopt);

struct CycleData {
  int m = 0;
  std::vector<int> lengths;
};

CycleData cycle_data(const Permutation& perm);

/// Label p of the cycle containing the pivot k.
int pivot_cycle_index(const Permutation& perm, int pivot);

struct Transposition {
  int a = 0;
  int b = 0;
};

/// pi(x) = g_1(g_2(...g_r(x)...)) for factors g_1 ... g_r.
Permutation product_right_to_left(std::span<const Transposition> factors, int n);

/// True iff some contiguous arc of c, of length |d| <= |c|, equals d as a cycle.
bool is_excerpt(const Cycle& d, const Cycle& c);

/// Inserts a rotation of `a` (starting at a[rotation]) as a contiguous block
/// into gap `gap` of `b`, the gap between b[gap] and b[gap + 1 mod |b|].
Cycle merge_cycles(const Cycle& a, std::size_t rotation, const Cycle& b, std::size_t gap);

/// Cuts `c` at the given gaps (gap g lies between c[g] and c[g + 1 mod |c|])
/// and returns the arcs between consecutive cuts.
std::vector<Cycle> slice_cycle(const Cycle& c, std::span<const std::size_t> cuts);

/// a (a-1) ... (a-b+1); (a)_0 = 1.
BigInt falling_factorial(const BigInt& a, int b);
BigInt factorial(int n);
BigInt binomial(int n, int k);

}  // namespace starfact

#endif  // STARFACT_PERMUTATION_HPP
