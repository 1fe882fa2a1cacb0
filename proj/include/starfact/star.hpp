#ifndef STARFACT_STAR_HPP
#define STARFACT_STAR_HPP

#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "starfact/permutation.hpp"

namespace starfact {

/// A product (k i_1)(k i_2)...(k i_r) of star transpositions sharing the pivot
/// k, multiplied right to left. Only the companions i_j are stored.
class StarFactorization {
 public:
  StarFactorization(int n, int pivot, std::vector<int> companions);

  int size() const { return n_; }
  int pivot() const { return pivot_; }
  const std::vector<int>& companions() const { return companions_; }
  std::size_t length() const { return companions_.size(); }

  std::vector<Transposition> factors() const;
  Permutation product() const;

  /// "(6 8)(6 1)...", pivot written first in every factor.
  std::string to_string() const;

  friend bool operator==(const StarFactorization&, const StarFactorization&) = default;
  friend auto operator<=>(const StarFactorization&, const StarFactorization&) = default;

 private:
  int n_;
  int pivot_;
  std::vector<int> companions_;
};

/// Parses "(k i1)(k i2)...". The pivot is the first element of the first
/// factor and every factor must start with it. An empty string is the empty
/// factorization, which needs `pivot` to be given explicitly.
StarFactorization parse_factorization(std::string_view text, int n, int pivot_if_empty = 1);

/// Letters are 1-based cycle labels.
using CycleWord = std::vector<int>;

/// Digit string when every letter is <= 9, comma-separated otherwise.
std::string format_word(std::span<const int> word);
CycleWord parse_word(std::string_view text);

/// True iff the product is pi, every generator (k i) appears, and the length
/// is n + m - 2.
bool verify_star_factorization(const StarFactorization& delta, const Permutation& perm);

CycleWord cycle_word(const StarFactorization& delta, const Permutation& perm);

bool is_valid_word(std::span<const int> word, const Permutation& perm, int pivot);

/// Builds the factorization whose cycle word is `word`. `doubled` maps every
/// non-pivot cycle label j to the element c_j whose factor (k c_j) appears
/// twice.
StarFactorization fill_word(std::span<const int> word, const Permutation& perm, int pivot,
                            const std::map<int, int>& doubled);

/// All valid words in lexicographic order.
std::vector<CycleWord> enumerate_valid_words(const Permutation& perm, int pivot);

/// Streams every minimal transitive star factorization of perm with the given
/// pivot, ordered lexicographically by (word, doubled choices by cycle label).
/// The visitor returns false to stop early.
void for_each_factorization(const Permutation& perm, int pivot,
                            const std::function<bool(const StarFactorization&)>& visit);
std::vector<StarFactorization> enumerate_factorizations(const Permutation& perm, int pivot);

/// (n+m-2)!/n! * l_1 ... l_m.
BigInt count_factorizations(const Permutation& perm);

}  // namespace starfact

#endif  // STARFACT_STAR_HPP
