// Acceptance checks. Prints one PASS/FAIL line per criterion. All checks are
// exact integer or byte comparisons (tolerance zero).
//
//   acceptance                 run every criterion
//   acceptance --criterion N   run criterion N only

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "starfact/bijection.hpp"
#include "starfact/noncrossing.hpp"
#include "starfact/oracles.hpp"
#include "starfact/permutation.hpp"
#include "starfact/poset.hpp"
#include "starfact/star.hpp"
#include "test_util.hpp"

using namespace starfact;
using starfact::testing::P;
using starfact::testing::symmetric_group;

namespace {

// Collects failed sub-checks; a criterion passes when none failed.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  template <typename A, typename B>
  void equal(const A& actual, const B& expected, const std::string& what) {
    std::ostringstream a, e;
    a << actual;
    e << expected;
    expect(a.str() == e.str(), what + ": expected " + e.str() + ", got " + a.str());
  }
  void note(const std::string& text) { notes_.push_back(text); }

  bool pass() const { return failures_.empty(); }
  int checks() const { return checks_; }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  int checks_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

const char* kDelta = "(6 8)(6 1)(6 3)(6 1)(6 2)(6 5)(6 8)(6 7)(6 4)(6 4)";
const char* kDeltaRotated = "(6 4)(6 4)(6 7)(6 8)(6 3)(6 1)(6 3)(6 2)(6 5)(6 8)";
const char* kDeltaPrime = "(3 1)(3 8)(3 2)(3 5)(3 7)(3 4)(3 4)(3 6)(3 7)(3 8)";

// Counting formula checked exhaustively, plus brute force on S_4.
void counting_formula(Check& c) {
  for (int n = 2; n <= 5; ++n) {
    int instances = 0, agree = 0;
    for (const auto& pi : symmetric_group(n))
      for (int k = 1; k <= n; ++k) {
        ++instances;
        BigInt seen = 0;
        for_each_factorization(pi, k, [&](const StarFactorization&) {
          ++seen;
          return true;
        });
        if (seen == count_factorizations(pi)) ++agree;
      }
    c.equal(agree, instances, "enumeration = (n+m-2)!/n! prod l_i over S_" + std::to_string(n) + " all pivots");
  }
  int instances = 0, agree = 0;
  for (const auto& pi : symmetric_group(4))
    for (int k = 1; k <= 4; ++k) {
      ++instances;
      auto mine = enumerate_factorizations(pi, k);
      std::sort(mine.begin(), mine.end());
      if (mine == oracles::brute_star_factorizations(pi, k)) ++agree;
    }
  c.equal(agree, instances, "enumeration = brute-force generator search over S_4 all pivots");
}

void golden_path(Check& c) {
  const auto pi = P("(13)(285)(4)(67)");
  const auto delta = parse_factorization(kDelta, 8);
  c.expect(verify_star_factorization(delta, pi), "example factorization verifies with k = 6");
  c.equal(format_word(cycle_word(delta, pi)), "2111222433", "cycle word");
  const SFPreimage alpha{parse_word("11122243342"), {1, 3, 1, 2}, pi, 6};
  c.equal(sf(alpha).to_string(), kDelta, "sf(presentation, (1,3,1,2))");
  c.equal(sf(SFPreimage{alpha.necklace, {2, 3, 1, 1}, pi, 6}).to_string(), kDeltaRotated, "sf(presentation, (2,3,1,1))");
  c.equal(to_string(sf_inverse(delta, pi)), "necklace=11122243342;origin=0;d=1,3,1,2", "sf_inverse");
  const auto beta = shift(alpha, 3);
  c.equal(format_word(beta.necklace), "21122243344", "shift to pivot 3");
  c.equal(pivot_change(delta, pi, 3).to_string(), kDeltaPrime, "pivot change to k' = 3");
}

void bijections(Check& c) {
  // sf o sf_inverse = id on every factorization set of S_5.
  long total = 0, bad = 0;
  std::string first;
  for (const auto& pi : symmetric_group(5)) {
    if (pi.cycle_count() < 2) continue;
    for (int k = 1; k <= 5; ++k)
      for_each_factorization(pi, k, [&](const StarFactorization& delta) {
        ++total;
        if (sf(sf_inverse(delta, pi)) != delta) {
          if (!bad++) first = delta.to_string();
        }
        return true;
      });
  }
  c.expect(bad == 0, "sf o sf_inverse = id: " + std::to_string(bad) + " of " + std::to_string(total) +
                         " factorizations differ" + (bad ? ", first " + first : ""));
  c.note("sf o sf_inverse checked on " + std::to_string(total) + " factorizations of S_5 (m >= 2)");

  // shift_inverse o shift = id on every preimage, n <= 4, all pivot pairs.
  total = bad = 0;
  first.clear();
  for (int n = 2; n <= 4; ++n)
    for (const auto& pi : symmetric_group(n)) {
      if (pi.cycle_count() < 2) continue;
      for (int k = 1; k <= n; ++k)
        for (const auto& delta : enumerate_factorizations(pi, k)) {
          const auto pre = sf_inverse(delta, pi);
          for (int k2 = 1; k2 <= n; ++k2) {
            ++total;
            bool ok = false;
            try {
              ok = shift_inverse(shift(pre, k2), k) == pre;
            } catch (const Error&) {
            }
            if (!ok && !bad++)
              first = pi.to_string() + " k=" + std::to_string(k) + " k'=" + std::to_string(k2) + " " + to_string(pre);
          }
        }
    }
  c.expect(bad == 0, "shift_inverse o shift = id: " + std::to_string(bad) + " of " + std::to_string(total) +
                         " preimage/pivot pairs differ" + (bad ? ", first " + first : ""));

  // pivot_change is a bijection between factorization sets of S_5.
  long pairs = 0, broken = 0;
  first.clear();
  for (const auto& pi : symmetric_group(5))
    for (int k = 1; k <= 5; ++k) {
      const auto source = enumerate_factorizations(pi, k);
      for (int k2 = 1; k2 <= 5; ++k2) {
        ++pairs;
        const auto target = enumerate_factorizations(pi, k2);
        std::set<StarFactorization> image;
        for (const auto& delta : source) image.insert(pivot_change(delta, pi, k2));
        const bool ok = image.size() == source.size() && image == std::set<StarFactorization>(target.begin(), target.end());
        if (!ok && !broken++)
          first = pi.to_string() + " k=" + std::to_string(k) + " k'=" + std::to_string(k2) + " image " +
                  std::to_string(image.size()) + "/" + std::to_string(target.size());
      }
    }
  c.expect(broken == 0, "pivot_change bijective: " + std::to_string(broken) + " of " + std::to_string(pairs) +
                            " (pi, k, k') triples are not bijections" + (broken ? ", first " + first : ""));
  if (broken) {
    const auto id = Permutation::identity(4);
    const SFPreimage a{parse_word("1324423"), {1, 1, 1, 1}, id, 1};
    const SFPreimage b{parse_word("1344223"), {1, 1, 1, 1}, id, 1};
    c.note("shift collision: " + format_word(a.necklace) + " and " + format_word(b.necklace) + " (identity of S_4, k=1 -> k'=2) both map to " +
           format_word(shift(a, 2).necklace) + " / " + format_word(shift(b, 2).necklace));
  }
}

// Every cycle of `upper` is a contiguous arc of the cycle of `lower` holding it.
bool arcs_only(const Permutation& lower, const Permutation& upper) {
  for (const auto& d : upper.cycles())
    if (!is_excerpt(d, lower.cycle(lower.cycle_label(d[0])))) return false;
  return true;
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

void noncrossing_counts(Check& c) {
  c.equal(enumerate_lnc({2, 2}).size(), 4, "|L-NC(2,2)|");
  c.equal(enumerate_lncn({2, 2}).size(), 1, "|L-NCN(2,2)|");
  int lnc_checked = 0, lncn_checked = 0;
  for (int total = 1; total <= 8; ++total) {
    std::vector<TypeVector> xs;
    std::vector<int> prefix;
    compositions(total, prefix, xs);
    for (const auto& x : xs) {
      ++lnc_checked;
      c.equal(count_lnc(x), oracles::brute_lnc(x).size(), "count_lnc vs brute force for " + format_type_vector(x));
      const bool in_regime = x.size() >= 2 && std::count(x.begin(), x.end(), 1) <= 1;
      if (in_regime) {
        ++lncn_checked;
        c.equal(count_lncn(x), enumerate_lncn(x).size(), "count_lncn vs enumeration for " + format_type_vector(x));
      }
    }
  }
  c.note(std::to_string(lnc_checked) + " compositions for L-NC, " + std::to_string(lncn_checked) + " in the L-NCN regime");
  const auto ncn = enumerate_lncn({3, 4, 2, 2});
  c.equal(ncn.size(), 90, "|L-NCN(3,4,2,2)|");
  const auto pi = P("(13)(285)(4)(67)");
  BigInt product = 1;
  for (int l : pi.cycle_lengths()) product *= l;
  c.equal(BigInt(ncn.size()) * product, 1080, "90 * prod l_i");
  c.equal(count_factorizations(pi), 1080, "count_factorizations((13)(285)(4)(67))");
}

void poset_structure(Check& c) {
  const auto h = build_poset(3);
  std::set<std::string> vertices;
  for (const auto& v : h.vertices) vertices.insert(v.to_string());
  c.expect(vertices == std::set<std::string>{"(1 2 3)", "(1 3 2)", "(1 2)(3)", "(1 3)(2)", "(1)(2 3)", "(1)(2)(3)"},
           "Star(3) vertex set");
  c.equal(h.minimal_elements().size(), 2, "Star(3) minimal elements");
  std::set<std::pair<std::string, std::string>> edges, lower_edges;
  for (const auto& [lo, hi] : h.edges) {
    edges.emplace(h.vertices[lo].to_string(), h.vertices[hi].to_string());
    if (h.ranks[lo] == 1) lower_edges.emplace(h.vertices[lo].to_string(), h.vertices[hi].to_string());
  }
  std::set<std::pair<std::string, std::string>> expected_edges;
  for (const char* middle : {"(1 2)(3)", "(1 3)(2)", "(1)(2 3)"}) {
    expected_edges.emplace("(1 2 3)", middle);
    expected_edges.emplace("(1 3 2)", middle);
  }
  c.equal(lower_edges.size(), 6, "Star(3) cover edges between the 3-cycles and rank 2");
  for (const char* middle : {"(1 2)(3)", "(1 3)(2)", "(1)(2 3)"}) expected_edges.emplace(middle, "(1)(2)(3)");
  c.expect(edges == expected_edges, "Star(3) edge set");

  for (int n = 1; n <= 5; ++n) {
    const auto p = build_poset(n);
    bool graded = true;
    for (const auto& [lo, hi] : p.edges) graded = graded && p.ranks[hi] == p.ranks[lo] + 1;
    c.expect(graded, "Star(" + std::to_string(n) + ") covers raise the cycle count by one");
    // Lengths of all maximal chains: from each minimal element, every path
    // following covers must end at a maximal element after n elements.
    const auto up = p.up_adjacency();
    std::vector<std::set<int>> lengths(p.vertices.size());
    for (std::size_t v = p.vertices.size(); v-- > 0;) {  // vertices sorted by rank
      if (up[v].empty()) lengths[v] = {1};
      for (std::size_t w : up[v])
        for (int l : lengths[w]) lengths[v].insert(l + 1);
    }
    std::set<int> chain_lengths;
    for (std::size_t v : p.minimal_elements()) chain_lengths.insert(lengths[v].begin(), lengths[v].end());
    c.expect(chain_lengths == std::set<int>{n}, "Star(" + std::to_string(n) + ") maximal chains have n elements");
    c.equal(BigInt(p.minimal_elements().size()), factorial(n - 1), "Star(" + std::to_string(n) + ") minimal elements");
    c.equal(p.maximal_elements().size(), 1, "Star(" + std::to_string(n) + ") maximal elements");
  }

  int instances = 0, agree = 0;
  for (const auto& pi : symmetric_group(6)) {
    ++instances;
    const auto l = pi.cycle_lengths();
    long down = 0, upc = 0;
    for (std::size_t i = 0; i < l.size(); ++i) {
      upc += l[i] * (l[i] - 1) / 2;
      for (std::size_t j = i + 1; j < l.size(); ++j) down += l[i] * l[j];
    }
    if (static_cast<long>(covers_down(pi).size()) == down && static_cast<long>(covers_up(pi).size()) == upc) ++agree;
  }
  c.equal(agree, instances, "cover-count formulas over S_6");
}

void order_equivalence(Check& c) {
  long pairs = 0, mismatches = 0;
  std::string first;
  for (int n = 1; n <= 4; ++n) {
    const auto group = symmetric_group(n);
    for (const auto& lo : group)
      for (const auto& hi : group) {
        ++pairs;
        const bool order = leq(lo, hi);
        bool ok = order == oracles::reachability_leq_oracle(lo, hi);
        for (int k = 1; k <= n; ++k) ok = ok && oracles::subword_leq_oracle(lo, hi, k) == order;
        if (!ok && !mismatches++) first = lo.to_string() + " vs " + hi.to_string();
      }
  }
  c.expect(mismatches == 0, "subword (every pivot) = leq = reachability: " + std::to_string(mismatches) + " of " +
                                std::to_string(pairs) + " pairs disagree" + (mismatches ? ", first " + first : ""));
  const auto a = P("(1234)"), b = P("(13)(2)(4)", 4), d = P("(13)(24)");
  for (int k = 1; k <= 4; ++k) {
    c.expect(oracles::subword_leq_oracle(a, b, k), "witness pair related at k = " + std::to_string(k));
    c.expect(!oracles::subword_leq_oracle(a, d, k), "non-pair unrelated at k = " + std::to_string(k));
  }
  c.expect(leq(a, b) && !leq(a, d), "leq on witness and non-pair");
}

void interval_structure(Check& c) {
  const auto lo = P("(12345)(678)"), hi = P("(15)(23)(4)(67)(8)");
  c.equal(interval(lo, hi).diagram.vertices.size(), 10, "two-cycle interval size");
  const auto cert = interval_nc_iso(lo, hi);
  c.expect(cert.pass, "two-cycle interval certificate");
  c.equal(cert.structure(), "NC(3) x NC(2)", "two-cycle interval structure");

  long pairs = 0, failures = 0, arc_pairs = 0, arc_failures = 0, kreweras_agree = 0;
  std::string first;
  const auto group = symmetric_group(5);
  for (const auto& s : group)
    for (const auto& t : group) {
      if (!leq(s, t)) continue;
      ++pairs;
      const auto iso = interval_nc_iso(s, t);
      BigInt product = 1;
      for (int d : iso.excerpt_counts) product *= catalan(d);
      const bool ok = iso.pass && BigInt(iso.partitions.size()) == product;
      if (!ok && !failures++) first = s.to_string() + " " + t.to_string();
      if (arcs_only(s, t)) {
        ++arc_pairs;
        if (!ok) ++arc_failures;
      }
      BigInt general = 1;
      for (int b : interval_nc_type(s, t)) general *= catalan(b);
      if (BigInt(iso.partitions.size()) == general) ++kreweras_agree;
    }
  c.expect(failures == 0, "all comparable pairs of S_5: size = prod Catalan(d_i) and certificate passes (" +
                              std::to_string(failures) + " of " + std::to_string(pairs) + " fail" +
                              (failures ? ", first " + first : "") + ")");
  c.note(std::to_string(pairs) + " comparable pairs in S_5; " + std::to_string(arc_pairs) +
         " have every upper cycle a contiguous arc, and " + std::to_string(arc_failures) + " of those fail");
  c.note("size = prod Catalan over Kreweras block sizes holds on " + std::to_string(kreweras_agree) + " of " +
         std::to_string(pairs) + " pairs");
}

void boolean_intervals(Check& c) {
  const auto group = symmetric_group(5);
  long pairs = 0, mismatches = 0;
  for (const auto& s : group)
    for (const auto& t : group) {
      if (!leq(s, t)) continue;
      ++pairs;
      if (is_boolean_interval(s, t) != oracles::hypercube_iso(interval(s, t))) ++mismatches;
    }
  c.expect(mismatches == 0, "is_boolean_interval = hypercube test on " + std::to_string(pairs) + " pairs (" +
                                std::to_string(mismatches) + " disagree)");
  long arc_mismatches = 0, kreweras_agree = 0;
  for (const auto& s : group)
    for (const auto& t : group) {
      if (!leq(s, t)) continue;
      const bool cube = oracles::hypercube_iso(interval(s, t));
      if (arcs_only(s, t) && cube != is_boolean_interval(s, t)) ++arc_mismatches;
      const auto type = interval_nc_type(s, t);
      if (cube == std::all_of(type.begin(), type.end(), [](int b) { return b <= 2; })) ++kreweras_agree;
    }
  c.note(std::to_string(arc_mismatches) + " disagreements among pairs whose upper cycles are contiguous arcs");
  c.note("hypercube test = all Kreweras blocks of size <= 2 on " + std::to_string(kreweras_agree) + " of " +
         std::to_string(pairs) + " pairs");

  const auto top = P("(123)(4)");
  c.equal(count_boolean_above(top), 4, "count_boolean_above((123)(4))");
  std::set<std::string> found;
  for (const auto& s : symmetric_group(4))
    if (leq(s, top) && is_boolean_interval(s, top)) found.insert(s.to_string());
  c.expect(found == std::set<std::string>{"(1 2 3)(4)", "(1 4 2 3)", "(1 2 4 3)", "(1 2 3 4)"},
           "the four boolean intervals below (123)(4)");

  std::vector<BigInt> involutions{1, 1};  // I(0), I(1)
  for (int n = 2; n <= 5; ++n) involutions.push_back(involutions[n - 1] + (n - 1) * involutions[n - 2]);
  const std::vector<int> reference{1, 2, 4, 10, 26};
  for (int n = 1; n <= 5; ++n) {
    c.equal(involutions[n], reference[n - 1], "involution recurrence I(" + std::to_string(n) + ")");
    c.equal(count_boolean_above(Permutation::identity(n)), involutions[n],
            "count_boolean_above(identity of S_" + std::to_string(n) + ")");
  }

  for (int n = 1; n <= 5; ++n) {
    const auto g = symmetric_group(n);
    long agree = 0;
    for (const auto& pi : g) {
      long below = 0, above = 0;
      for (const auto& other : g) {
        if (leq(pi, other) && is_boolean_interval(pi, other)) ++below;
        if (leq(other, pi) && is_boolean_interval(other, pi)) ++above;
      }
      if (count_boolean_below(pi) == below && count_boolean_above(pi) == above) ++agree;
    }
    c.equal(agree, g.size(), "boolean counts vs exhaustive scan over S_" + std::to_string(n));
  }
}

void degenerate_cases(Check& c) {
  const auto one = Permutation::identity(1);
  const auto empty = parse_factorization("", 1);
  c.expect(verify_star_factorization(empty, one), "n = 1 empty factorization verifies");
  const auto all = enumerate_factorizations(one, 1);
  c.expect(all.size() == 1 && all[0].length() == 0, "n = 1 enumeration is the empty factorization");
  c.equal(count_factorizations(one), 1, "n = 1 count");

  int cycles = 0;
  for (int n = 2; n <= 5; ++n)
    for (const auto& pi : symmetric_group(n)) {
      if (pi.cycle_count() != 1) continue;
      ++cycles;
      for (int k = 1; k <= n; ++k) {
        const auto set = enumerate_factorizations(pi, k);
        c.expect(set.size() == 1, "single factorization for " + pi.to_string());
        if (set.size() != 1) continue;
        const auto pre = sf_inverse(set[0], pi);
        c.expect(pre.degenerate && pre.necklace == std::vector<int>(n, 1) && pre.d == DTuple{1},
                 "degenerate preimage for " + pi.to_string());
        c.expect(sf(pre) == set[0], "sf of degenerate preimage for " + pi.to_string());
        for (int k2 = 1; k2 <= n; ++k2)
          c.expect(pivot_change(set[0], pi, k2) == enumerate_factorizations(pi, k2).at(0),
                   "pivot change of " + set[0].to_string() + " to " + std::to_string(k2));
      }
    }
  c.note(std::to_string(cycles) + " n-cycles for n <= 5");
}

struct Criterion {
  int id;
  const char* title;
  std::function<void(Check&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "factorization counts equal the product formula and the brute-force search", counting_formula},
      {2, "worked example reproduces byte-exact", golden_path},
      {3, "necklace and pivot-change maps are bijections", bijections},
      {4, "noncrossing partition and necklace counts", noncrossing_counts},
      {5, "Star(n) structure: Star(3) diagram, grading, extremes, cover counts", poset_structure},
      {6, "order equivalence and pivot independence", order_equivalence},
      {7, "intervals are products of noncrossing partition lattices", interval_structure},
      {8, "boolean intervals and their counts", boolean_intervals},
      {9, "degenerate cases n = 1 and m = 1", degenerate_cases},
  };

  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }

  bool all_pass = true;
  bool ran = false;
  for (const auto& criterion : criteria) {
    if (only && criterion.id != only) continue;
    ran = true;
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("unexpected exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all_pass = all_pass && check.pass();
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(1);
    line << (check.pass() ? "PASS" : "FAIL") << " criterion " << criterion.id << ": " << criterion.title << " ("
         << check.checks() << " checks, " << check.failures().size() << " failed, " << seconds << " s)";
    std::cout << line.str() << '\n';
    for (const auto& f : check.failures()) std::cout << "    failed: " << f << '\n';
    for (const auto& n : check.notes()) std::cout << "    note: " << n << '\n';
  }
  if (!ran) {
    std::cerr << "no such criterion\n";
    return 2;
  }
  return all_pass ? 0 : 1;
}
