#ifndef STARFACT_ORACLES_HPP
#define STARFACT_ORACLES_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "starfact/noncrossing.hpp"
#include "starfact/permutation.hpp"
#include "starfact/poset.hpp"
#include "starfact/star.hpp"

/// Brute-force reference implementations. They are deliberately slow and
/// reimplement products, crossing tests and slicing from scratch so that they
/// can check the main library.
namespace starfact::oracles {

struct OracleReport {
  std::string subject;
  std::string instance;
  std::string expected;
  std::string actual;
  bool pass = false;

  /// One-line JSON object.
  std::string to_json_line() const;
};

OracleReport make_report(std::string subject, std::string instance, std::string expected, std::string actual);

inline constexpr std::uint64_t kDefaultWordBudget = 100'000'000;

/// Every word over the star generators of length n + m - 2 whose product is
/// perm and which uses every generator. Sorted. Throws kBoundExceeded when
/// (n-1)^(n+m-2) exceeds the budget.
std::vector<StarFactorization> brute_star_factorizations(const Permutation& perm, int pivot,
                                                         std::uint64_t budget = kDefaultWordBudget);

inline constexpr int kDefaultLncBound = 11;

/// Filters every arrangement of the labels of x by a quadruple crossing test.
std::vector<LabeledPartition> brute_lnc(const TypeVector& x, int bound = kDefaultLncBound);

inline constexpr int kDefaultSubwordBound = 4;

/// Some factorization of `lower` is a scattered subword of some factorization
/// of `upper`, both with the given pivot.
bool subword_leq_oracle(const Permutation& lower, const Permutation& upper, int pivot,
                        int bound = kDefaultSubwordBound);

inline constexpr int kDefaultReachabilityBound = 6;

/// Breadth-first search from `lower` along single two-cut slicings.
bool reachability_leq_oracle(const Permutation& lower, const Permutation& upper,
                             int bound = kDefaultReachabilityBound);

inline constexpr int kDefaultHypercubeRank = 6;

/// True iff the interval is isomorphic to the boolean lattice of its rank,
/// checked from its cover edges alone.
bool hypercube_iso(const IntervalPoset& interval, int max_rank = kDefaultHypercubeRank);

/// The oracle agreement suite over S_1 ... S_max_n. Each report covers one
/// family of instances; `on_report` sees them as they are produced.
std::vector<OracleReport> run_selftest(int max_n, const std::function<void(const OracleReport&)>& on_report = {});

}  // namespace starfact::oracles

#endif  // STARFACT_ORACLES_HPP
