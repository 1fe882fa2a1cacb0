#include <algorithm>
#include <numeric>

#include "starfact/oracles.hpp"

namespace starfact::oracles {

namespace {

std::vector<Permutation> symmetric_group(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do out.push_back(Permutation::from_images(images));
  while (std::next_permutation(images.begin(), images.end()));
  return out;
}

void compositions(int total, std::vector<int>& prefix, std::vector<TypeVector>& out) {
  if (total == 0) {
    out.push_back(prefix);
    return;
  }
  for (int part = 1; part <= total; ++part) {
    prefix.push_back(part);
    compositions(total - part, prefix, out);
    prefix.pop_back();
  }
}

std::string group_name(int n) { return "S_" + std::to_string(n); }

}  // namespace

std::vector<OracleReport> run_selftest(int max_n, const std::function<void(const OracleReport&)>& on_report) {
  if (max_n < 1) fail(ErrorKind::kInvalidArgument, "max-n must be positive");
  std::vector<OracleReport> reports;
  auto record = [&](OracleReport r) {
    if (on_report) on_report(r);
    reports.push_back(std::move(r));
  };
  auto tally = [&](const std::string& subject, const std::string& instance, long checked, long agreed) {
    record(make_report(subject, instance, std::to_string(checked), std::to_string(agreed)));
  };

  for (int n = 1; n <= max_n; ++n) {
    long checked = 0, agreed = 0;
    for (const auto& perm : symmetric_group(n))
      for (int k = 1; k <= n; ++k) {
        ++checked;
        BigInt seen = 0;
        for_each_factorization(perm, k, [&](const StarFactorization&) {
          ++seen;
          return true;
        });
        if (seen == count_factorizations(perm)) ++agreed;
      }
    tally("count_factorizations", group_name(n) + " all pivots", checked, agreed);
  }

  for (int n = 1; n <= std::min(max_n, 4); ++n) {
    long checked = 0, agreed = 0;
    for (const auto& perm : symmetric_group(n))
      for (int k = 1; k <= n; ++k) {
        ++checked;
        auto mine = enumerate_factorizations(perm, k);
        std::sort(mine.begin(), mine.end());
        if (mine == brute_star_factorizations(perm, k)) ++agreed;
      }
    tally("brute_star_factorizations", group_name(n) + " all pivots", checked, agreed);
  }

  const int lnc_max = std::min(8, max_n + 3);
  for (int total = 1; total <= lnc_max; ++total) {
    std::vector<TypeVector> xs;
    std::vector<int> prefix;
    compositions(total, prefix, xs);
    long checked = 0, agreed = 0;
    for (const auto& x : xs) {
      ++checked;
      auto brute = brute_lnc(x);
      auto mine = enumerate_lnc(x);
      std::sort(brute.begin(), brute.end());
      std::sort(mine.begin(), mine.end());
      if (brute == mine && BigInt(brute.size()) == count_lnc(x)) ++agreed;
    }
    tally("brute_lnc", "|x| = " + std::to_string(total), checked, agreed);
  }

  for (int n = 1; n <= std::min(max_n, 4); ++n) {
    const auto group = symmetric_group(n);
    long checked = 0, agreed = 0;
    for (const auto& lower : group)
      for (const auto& upper : group) {
        ++checked;
        const bool order = leq(lower, upper);
        bool same = order == reachability_leq_oracle(lower, upper);
        for (int k = 1; k <= n && same; ++k) same = order == subword_leq_oracle(lower, upper, k);
        if (same) ++agreed;
      }
    tally("subword_leq_oracle", group_name(n) + " all pairs, all pivots", checked, agreed);
  }

  for (int n = 1; n <= std::min(max_n, 5); ++n) {
    const auto group = symmetric_group(n);
    long checked = 0, agreed = 0;
    for (const auto& lower : group)
      for (const auto& upper : group) {
        if (!leq(lower, upper)) continue;
        ++checked;
        if (hypercube_iso(interval(lower, upper)) == is_boolean_interval(lower, upper)) ++agreed;
      }
    tally("hypercube_iso", group_name(n) + " comparable pairs", checked, agreed);
  }
  return reports;
}

}  // namespace starfact::oracles
