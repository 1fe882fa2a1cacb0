#ifndef STARFACT_NONCROSSING_HPP
#define STARFACT_NONCROSSING_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "starfact/permutation.hpp"

namespace starfact {

/// Part sizes (x_1, ..., x_m), all positive.
using TypeVector = std::vector<int>;

TypeVector parse_type_vector(std::string_view text);  // "3,4,2,2"
std::string format_type_vector(const TypeVector& x);
int total_size(const TypeVector& x);

/// A necklace read from a fixed origin: beads[0] is the topmost bead and
/// increasing index is counterclockwise reading order.
struct PresentedNecklace {
  std::vector<int> beads;
  std::optional<std::size_t> inserted;  // bead added by bar_insert, if any

  friend bool operator==(const PresentedNecklace&, const PresentedNecklace&) = default;
};

/// Rotation class, represented by its lexicographically least rotation.
struct Necklace {
  std::vector<int> beads;

  friend bool operator==(const Necklace&, const Necklace&) = default;
  friend auto operator<=>(const Necklace&, const Necklace&) = default;
};

/// Partition of [ground_size]; parts[i] (sorted) carries label i + 1.
struct LabeledPartition {
  int ground_size = 0;
  std::vector<std::vector<int>> parts;

  friend bool operator==(const LabeledPartition&, const LabeledPartition&) = default;
  friend auto operator<=>(const LabeledPartition&, const LabeledPartition&) = default;
};

/// "1:{1,2} 2:{3,4}".
std::string to_string(const LabeledPartition& partition);
/// Label of every point of [N], in order.
std::vector<int> label_word(const LabeledPartition& partition);
LabeledPartition partition_from_labels(std::span<const int> labels);

/// True iff no two labels alternate i..j..i..j around the circle.
bool is_noncrossing_cyclic(std::span<const int> word);
bool is_noncrossing_partition(const LabeledPartition& partition);

/// l_i + 1 for cycles not containing the pivot, l_p for the pivot cycle.
TypeVector type_vector(const Permutation& perm, int pivot);

/// Appends one bead p after the last letter, so it sits between the last and
/// first letters of the word once the necklace is closed.
PresentedNecklace bar_insert(std::span<const int> word, int p);

/// Offset of the lexicographically least rotation (smallest such offset).
std::size_t least_rotation(std::span<const int> beads);
Necklace canonical_necklace(std::span<const int> beads);
inline Necklace canonical_necklace(const PresentedNecklace& necklace) {
  return canonical_necklace(necklace.beads);
}

inline constexpr int kDefaultEnumerationBound = 12;

/// Labeled noncrossing partitions of type x in lexicographic order of their
/// label words. Throws kBoundExceeded when |x| > bound.
std::vector<LabeledPartition> enumerate_lnc(const TypeVector& x, int bound = kDefaultEnumerationBound);
/// One canonical representative per rotation class, sorted.
std::vector<Necklace> enumerate_lncn(const TypeVector& x, int bound = kDefaultEnumerationBound);

/// (|x| - 1)_{m-2}. Only defined for m >= 2 with at most one part of size 1;
/// other inputs throw kDomain (use enumerate_lncn for those).
BigInt count_lncn(const TypeVector& x);
/// (|x|)_{m-1}.
BigInt count_lnc(const TypeVector& x);

}  // namespace starfact

#endif  // STARFACT_NONCROSSING_HPP
