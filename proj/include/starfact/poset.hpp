#ifndef STARFACT_POSET_HPP
#define STARFACT_POSET_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "starfact/permutation.hpp"

namespace starfact {

/// sigma <= pi in Star(n): every cycle of pi sits inside one cycle of sigma,
/// the pi-cycles inside each sigma-cycle form a noncrossing partition of its
/// cyclic word, and each pi-cycle is read in the sigma-cycle's cyclic order.
/// Equivalently, pi is reachable from sigma by repeatedly slicing one cycle
/// into two arcs.
bool leq(const Permutation& lower, const Permutation& upper);

/// Elements covered by pi: merges of two of its cycles. Sum_{i<j} l_i l_j.
std::vector<Permutation> covers_down(const Permutation& perm);
/// Elements covering pi: one cycle cut into two arcs. Sum_i binom(l_i, 2).
std::vector<Permutation> covers_up(const Permutation& perm);

/// Vertices with cover edges (lower, upper) given as vertex indices.
/// ranks[v] is the cycle count of vertices[v].
struct HasseDiagram {
  int n = 0;
  std::vector<Permutation> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<int> ranks;

  std::size_t index_of(const Permutation& perm) const;  // throws kInvalidArgument if absent
  std::vector<std::size_t> minimal_elements() const;
  std::vector<std::size_t> maximal_elements() const;
  /// Successor lists along cover edges.
  std::vector<std::vector<std::size_t>> up_adjacency() const;
};

inline constexpr int kDefaultPosetBound = 7;

/// Star(n) on all of S_n. Vertices sorted by rank, then one-line notation.
HasseDiagram build_poset(int n, int bound = kDefaultPosetBound);

/// The interval [lower, upper] with its cover edges.
struct IntervalPoset {
  Permutation lower;
  Permutation upper;
  HasseDiagram diagram;
};

IntervalPoset interval(const Permutation& lower, const Permutation& upper);

/// The cover star of a single element: perm together with its upper or lower
/// covers, for diagram output.
HasseDiagram cover_diagram(const Permutation& perm, bool upward);

/// Set partition of [d]: blocks sorted internally and by first element.
using SetPartition = std::vector<std::vector<int>>;

/// NC(d) ordered by refinement (finer is smaller).
struct NCLattice {
  int d = 0;
  std::vector<SetPartition> elements;

  std::size_t index_of(const SetPartition& partition) const;
  bool leq(std::size_t finer, std::size_t coarser) const;
  std::vector<std::pair<std::size_t, std::size_t>> cover_edges() const;
};

inline constexpr int kNCLatticeBound = 8;
NCLattice nc_lattice(int d, int bound = kNCLatticeBound);

/// Refinement test on partitions of the same ground set.
bool refines(const SetPartition& finer, const SetPartition& coarser);
/// Kreweras complement of a noncrossing partition of [d].
SetPartition kreweras_complement(const SetPartition& partition, int d);

/// Certificate that [lower, upper] is isomorphic to NC(d_1) x ... x NC(d_s).
struct NCIsoCertificate {
  std::vector<Cycle> factors;      // cycles of `lower`, in label order
  std::vector<int> excerpt_counts;  // d_i: cycles of `upper` inside factors[i]
  /// partitions[v][i]: for interval vertex v, the partition of the d_i
  /// excerpts of factors[i] by the cycle of v that contains them.
  std::vector<std::vector<SetPartition>> partitions;
  bool into_product = false;    // every image lies in the product of NC(d_i)
  bool bijective = false;       // the map hits each tuple exactly once
  bool order_reversing = false;  // v <= w iff partitions[w] refines partitions[v]
  bool self_dual = false;       // Kreweras complement is an anti-automorphism of each NC(d_i)
  bool order_preserving_iso = false;  // Kreweras o phi is an order isomorphism
  bool pass = false;

  /// "NC(3) x NC(2)".
  std::string structure() const;
};

NCIsoCertificate interval_nc_iso(const Permutation& lower, const Permutation& upper);

/// Block sizes (> 1) of the Kreweras complements of the partitions that the
/// cycles of `upper` cut out of each cycle of `lower`. [lower, upper] is
/// isomorphic to the product of NC(b) over these sizes. When every cycle of
/// `upper` is a contiguous arc of its enclosing cycle this is the list of
/// excerpt counts d_i > 1; otherwise the two differ.
std::vector<int> interval_nc_type(const Permutation& lower, const Permutation& upper);

/// Every cycle of `lower` holds at most two cycles of `upper`.
bool is_boolean_interval(const Permutation& lower, const Permutation& upper);

/// Number of boolean intervals [sigma, pi] with pi as top element.
BigInt count_boolean_above(const Permutation& perm);
/// Number of boolean intervals [pi, tau] with pi as bottom element.
BigInt count_boolean_below(const Permutation& perm);

BigInt catalan(int d);

/// Graphviz rendering: vertices labeled by cycle notation, one edge per cover,
/// one rank per subgraph.
std::string to_dot(const HasseDiagram& diagram, const std::string& name = "Star");
/// {"n": n, "vertices": [...], "edges": [[lo, hi], ...], "ranks": [...]}.
std::string to_json(const HasseDiagram& diagram);

}  // namespace starfact

#endif  // STARFACT_POSET_HPP
