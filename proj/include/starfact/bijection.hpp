#ifndef STARFACT_BIJECTION_HPP
#define STARFACT_BIJECTION_HPP

#include <string>
#include <string_view>
#include <vector>

#include "starfact/noncrossing.hpp"
#include "starfact/permutation.hpp"
#include "starfact/star.hpp"

namespace starfact {

/// (d_1, ..., d_m) with d_i in [l_i].
using DTuple = std::vector<int>;

/// A point of the domain of the necklace bijection for (perm, pivot): a
/// presented labeled noncrossing necklace of type type_vector(perm, pivot)
/// together with a d-tuple. For the pivot cycle p, d_p picks which p-bead
/// (counting from the origin) is the inserted one; for every other cycle j,
/// d_j ranks the element of C_j whose factor is doubled.
struct SFPreimage {
  std::vector<int> necklace;  // origin at index 0, reading order = increasing index
  DTuple d;
  Permutation perm;
  int pivot = 1;
  bool degenerate = false;  // single-cycle case: the domain collapses to one point

  friend bool operator==(const SFPreimage&, const SFPreimage&) = default;
};

/// "necklace=<word>;origin=0;d=<comma list>".
std::string to_string(const SFPreimage& pre);
SFPreimage parse_preimage(std::string_view text, const Permutation& perm, int pivot);

/// Throws kInvalidArgument unless the necklace has the right type, is
/// noncrossing and d is in bounds.
void validate_preimage(const SFPreimage& pre);

/// Removes the d_p-th p-bead, reads the rest starting just after it as the
/// cycle word and fills it with the doubled elements chosen by d.
StarFactorization sf(const SFPreimage& pre);

/// Inverse of sf under the presentation convention that the origin is the
/// first bead labeled 1 in omega(delta) followed by the inserted p.
SFPreimage sf_inverse(const StarFactorization& delta, const Permutation& perm);

/// Moves the preimage from pivot `pivot` to pivot `new_pivot`: starting at the
/// anchor d_p-th p-bead, scans counterclockwise to the first p'-bead, drops
/// it, and inserts a p-bead at the latest position of that stretch that keeps
/// the necklace noncrossing. The d-tuple and origin are unchanged.
SFPreimage shift(const SFPreimage& pre, int new_pivot);

/// The clockwise mirror of shift, taking a preimage for pivot k' back to k.
SFPreimage shift_inverse(const SFPreimage& pre, int new_pivot);

/// sf_{k'} o shift o sf_k^{-1}.
StarFactorization pivot_change(const StarFactorization& delta, const Permutation& perm, int new_pivot);

}  // namespace starfact

#endif  // STARFACT_BIJECTION_HPP
