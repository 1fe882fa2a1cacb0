#include "starfact/poset.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "starfact/noncrossing.hpp"

namespace starfact {

namespace {

void check_same_size(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size())
    fail(ErrorKind::kInvalidArgument, "permutations of different sizes: " + std::to_string(a.size()) + " and " +
                                          std::to_string(b.size()));
}

void require_leq(const Permutation& lower, const Permutation& upper) {
  if (!leq(lower, upper))
    fail(ErrorKind::kDomain, lower.to_string() + " and " + upper.to_string() + " are not comparable");
}

Permutation replace_cycles(const Permutation& perm, std::initializer_list<int> drop, std::vector<Cycle> add) {
  std::vector<Cycle> cycles;
  for (int j = 1; j <= perm.cycle_count(); ++j)
    if (std::find(drop.begin(), drop.end(), j) == drop.end()) cycles.push_back(perm.cycle(j));
  for (auto& c : add) cycles.push_back(std::move(c));
  return Permutation::from_cycles(perm.size(), std::move(cycles));
}

// Vertices by (rank, one-line notation).
bool vertex_order(const Permutation& a, const Permutation& b) {
  if (a.cycle_count() != b.cycle_count()) return a.cycle_count() < b.cycle_count();
  return a.images() < b.images();
}

HasseDiagram diagram_from(int n, std::vector<Permutation> vertices) {
  std::sort(vertices.begin(), vertices.end(), vertex_order);
  HasseDiagram out;
  out.n = n;
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t v = 0; v < vertices.size(); ++v) index.emplace(vertices[v].images(), v);
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    out.ranks.push_back(vertices[v].cycle_count());
    for (const auto& up : covers_up(vertices[v])) {
      auto it = index.find(up.images());
      if (it != index.end()) out.edges.emplace_back(v, it->second);
    }
  }
  std::sort(out.edges.begin(), out.edges.end());
  out.vertices = std::move(vertices);
  return out;
}

}  // namespace

bool leq(const Permutation& lower, const Permutation& upper) {
  check_same_size(lower, upper);
  const int n = lower.size();
  // Every cycle of upper lies inside one cycle of lower.
  for (const auto& d : upper.cycles()) {
    const int home = lower.cycle_label(d[0]);
    for (int x : d.elements())
      if (lower.cycle_label(x) != home) return false;
  }
  std::vector<int> position(n + 1, 0);
  for (const auto& c : lower.cycles())
    for (std::size_t q = 0; q < c.size(); ++q) position[c[q]] = static_cast<int>(q);

  for (const auto& c : lower.cycles()) {
    std::vector<int> labels;
    labels.reserve(c.size());
    for (int x : c.elements()) labels.push_back(upper.cycle_label(x));
    if (!is_noncrossing_cyclic(labels)) return false;
  }
  // Each block read in the order of its enclosing cycle must be the block itself.
  for (const auto& d : upper.cycles()) {
    std::vector<int> elems(d.elements().begin(), d.elements().end());
    std::sort(elems.begin(), elems.end(), [&](int a, int b) { return position[a] < position[b]; });
    if (Cycle(std::move(elems)) != d) return false;
  }
  return true;
}

std::vector<Permutation> covers_down(const Permutation& perm) {
  std::set<Permutation> found;
  const int m = perm.cycle_count();
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      const Cycle& a = perm.cycle(i);
      const Cycle& b = perm.cycle(j);
      for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t g = 0; g < b.size(); ++g) found.insert(replace_cycles(perm, {i, j}, {merge_cycles(a, r, b, g)}));
    }
  return {found.begin(), found.end()};
}

std::vector<Permutation> covers_up(const Permutation& perm) {
  std::set<Permutation> found;
  for (int j = 1; j <= perm.cycle_count(); ++j) {
    const Cycle& c = perm.cycle(j);
    for (std::size_t g1 = 0; g1 < c.size(); ++g1)
      for (std::size_t g2 = g1 + 1; g2 < c.size(); ++g2) {
        const std::size_t cuts[] = {g1, g2};
        found.insert(replace_cycles(perm, {j}, slice_cycle(c, cuts)));
      }
  }
  return {found.begin(), found.end()};
}

std::size_t HasseDiagram::index_of(const Permutation& perm) const {
  const auto it = std::lower_bound(vertices.begin(), vertices.end(), perm, vertex_order);
  if (it == vertices.end() || *it != perm)
    fail(ErrorKind::kInvalidArgument, perm.to_string() + " is not a vertex of the diagram");
  return static_cast<std::size_t>(it - vertices.begin());
}

std::vector<std::size_t> HasseDiagram::minimal_elements() const {
  std::vector<bool> has_lower(vertices.size(), false);
  for (const auto& [lo, hi] : edges) has_lower[hi] = true;
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < vertices.size(); ++v)
    if (!has_lower[v]) out.push_back(v);
  return out;
}

std::vector<std::size_t> HasseDiagram::maximal_elements() const {
  std::vector<bool> has_upper(vertices.size(), false);
  for (const auto& [lo, hi] : edges) has_upper[lo] = true;
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < vertices.size(); ++v)
    if (!has_upper[v]) out.push_back(v);
  return out;
}

std::vector<std::vector<std::size_t>> HasseDiagram::up_adjacency() const {
  std::vector<std::vector<std::size_t>> out(vertices.size());
  for (const auto& [lo, hi] : edges) out[lo].push_back(hi);
  return out;
}

HasseDiagram build_poset(int n, int bound) {
  if (n < 1) fail(ErrorKind::kInvalidArgument, "n must be positive");
  if (n > bound)
    fail(ErrorKind::kBoundExceeded, "n = " + std::to_string(n) + " exceeds the poset bound " + std::to_string(bound));
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i + 1;
  std::vector<Permutation> all;
  do all.push_back(Permutation::from_images(images));
  while (std::next_permutation(images.begin(), images.end()));
  return diagram_from(n, std::move(all));
}

IntervalPoset interval(const Permutation& lower, const Permutation& upper) {
  require_leq(lower, upper);
  std::set<Permutation> seen{lower};
  std::deque<Permutation> queue{lower};
  while (!queue.empty()) {
    const Permutation cur = queue.front();
    queue.pop_front();
    for (auto& next : covers_up(cur))
      if (!seen.count(next) && leq(next, upper)) {
        seen.insert(next);
        queue.push_back(std::move(next));
      }
  }
  return IntervalPoset{lower, upper, diagram_from(lower.size(), {seen.begin(), seen.end()})};
}

HasseDiagram cover_diagram(const Permutation& perm, bool upward) {
  std::vector<Permutation> vertices = upward ? covers_up(perm) : covers_down(perm);
  vertices.push_back(perm);
  HasseDiagram out = diagram_from(perm.size(), std::move(vertices));
  // Only the edges through perm belong to the cover star.
  const std::size_t centre = out.index_of(perm);
  std::erase_if(out.edges, [&](const auto& e) { return e.first != centre && e.second != centre; });
  return out;
}

// ---------------------------------------------------------------------------
// NC(d)

namespace {

SetPartition normalize(SetPartition blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::erase_if(blocks, [](const auto& b) { return b.empty(); });
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

SetPartition blocks_from_labels(const std::vector<int>& labels) {
  std::map<int, std::vector<int>> by_label;
  for (std::size_t q = 0; q < labels.size(); ++q) by_label[labels[q]].push_back(static_cast<int>(q) + 1);
  SetPartition out;
  for (auto& [label, block] : by_label) out.push_back(std::move(block));
  return normalize(std::move(out));
}

std::vector<int> labels_of(const SetPartition& partition, int d) {
  std::vector<int> labels(d, 0);
  for (std::size_t b = 0; b < partition.size(); ++b)
    for (int x : partition[b]) labels.at(x - 1) = static_cast<int>(b) + 1;
  return labels;
}

}  // namespace

bool refines(const SetPartition& finer, const SetPartition& coarser) {
  std::map<int, std::size_t> home;
  for (std::size_t b = 0; b < coarser.size(); ++b)
    for (int x : coarser[b]) home[x] = b;
  for (const auto& block : finer) {
    if (block.empty()) continue;
    const auto first = home.find(block.front());
    if (first == home.end()) return false;
    for (int x : block) {
      const auto it = home.find(x);
      if (it == home.end() || it->second != first->second) return false;
    }
  }
  return true;
}

SetPartition kreweras_complement(const SetPartition& partition, int d) {
  // Cycles of sigma_P^{-1} o c with c = (1 2 ... d) and sigma_P the product of
  // the blocks read increasingly.
  std::vector<int> inverse(d + 1, 0);
  for (const auto& block : partition)
    for (std::size_t q = 0; q < block.size(); ++q) inverse[block[(q + 1) % block.size()]] = block[q];
  std::vector<int> labels(d, 0);
  int next_label = 0;
  for (int start = 1; start <= d; ++start) {
    if (labels[start - 1]) continue;
    ++next_label;
    for (int x = start; !labels[x - 1];) {
      labels[x - 1] = next_label;
      x = inverse[x % d + 1];
    }
  }
  return blocks_from_labels(labels);
}

std::size_t NCLattice::index_of(const SetPartition& partition) const {
  const SetPartition key = normalize(partition);
  const auto it = std::find(elements.begin(), elements.end(), key);
  if (it == elements.end()) fail(ErrorKind::kInvalidArgument, "not an element of NC(" + std::to_string(d) + ")");
  return static_cast<std::size_t>(it - elements.begin());
}

bool NCLattice::leq(std::size_t finer, std::size_t coarser) const {
  return refines(elements.at(finer), elements.at(coarser));
}

std::vector<std::pair<std::size_t, std::size_t>> NCLattice::cover_edges() const {
  // NC(d) is graded by block count, so covers are refinements that lose one block.
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < elements.size(); ++a)
    for (std::size_t b = 0; b < elements.size(); ++b)
      if (elements[a].size() == elements[b].size() + 1 && refines(elements[a], elements[b])) out.emplace_back(a, b);
  return out;
}

NCLattice nc_lattice(int d, int bound) {
  if (d < 1) fail(ErrorKind::kInvalidArgument, "d must be positive");
  if (d > bound)
    fail(ErrorKind::kBoundExceeded, "d = " + std::to_string(d) + " exceeds the NC bound " + std::to_string(bound));
  NCLattice out;
  out.d = d;
  // Restricted growth strings enumerate set partitions once each.
  std::vector<int> rgs(d, 1);
  std::vector<int> prefix_max(d, 1);
  while (true) {
    if (is_noncrossing_cyclic(rgs)) out.elements.push_back(blocks_from_labels(rgs));
    int q = d - 1;
    while (q > 0 && rgs[q] > prefix_max[q - 1]) --q;
    if (q == 0) break;
    ++rgs[q];
    prefix_max[q] = std::max(prefix_max[q - 1], rgs[q]);
    for (int r = q + 1; r < d; ++r) {
      rgs[r] = 1;
      prefix_max[r] = prefix_max[q];
    }
  }
  return out;
}

BigInt catalan(int d) {
  if (d < 0) fail(ErrorKind::kInvalidArgument, "Catalan index must be nonnegative");
  return binomial(2 * d, d) / (d + 1);
}

// ---------------------------------------------------------------------------
// Interval structure

std::string NCIsoCertificate::structure() const {
  std::string out;
  for (std::size_t i = 0; i < excerpt_counts.size(); ++i) {
    if (i) out += " x ";
    out += "NC(" + std::to_string(excerpt_counts[i]) + ")";
  }
  return out;
}

NCIsoCertificate interval_nc_iso(const Permutation& lower, const Permutation& upper) {
  require_leq(lower, upper);
  NCIsoCertificate cert;
  const int n = lower.size();
  const int s = lower.cycle_count();
  cert.factors = lower.cycles();

  // excerpt[x]: index (1-based) of the upper-cycle through x among those in its
  // factor, ordered by first appearance along the factor.
  std::vector<int> excerpt(n + 1, 0);
  std::vector<std::vector<int>> representatives(s);
  for (int i = 0; i < s; ++i) {
    std::map<int, int> index_of_label;
    for (int x : cert.factors[i].elements()) {
      const int label = upper.cycle_label(x);
      auto [it, fresh] = index_of_label.emplace(label, static_cast<int>(index_of_label.size()) + 1);
      if (fresh) representatives[i].push_back(x);
      excerpt[x] = it->second;
    }
    cert.excerpt_counts.push_back(static_cast<int>(index_of_label.size()));
  }

  const IntervalPoset iv = interval(lower, upper);
  const auto& vertices = iv.diagram.vertices;
  for (const auto& tau : vertices) {
    std::vector<SetPartition> image;
    for (int i = 0; i < s; ++i) {
      std::vector<int> labels;
      for (int x : representatives[i]) labels.push_back(tau.cycle_label(x));
      image.push_back(blocks_from_labels(labels));
    }
    cert.partitions.push_back(std::move(image));
  }

  std::map<int, NCLattice> lattices;
  for (int d : cert.excerpt_counts)
    if (!lattices.count(d)) lattices.emplace(d, nc_lattice(d));

  cert.into_product = true;
  for (const auto& image : cert.partitions)
    for (int i = 0; i < s; ++i)
      if (!is_noncrossing_cyclic(labels_of(image[i], cert.excerpt_counts[i]))) cert.into_product = false;

  BigInt product_size = 1;
  for (int d : cert.excerpt_counts) product_size *= catalan(d);
  const std::set<std::vector<SetPartition>> distinct(cert.partitions.begin(), cert.partitions.end());
  cert.bijective = cert.into_product && distinct.size() == cert.partitions.size() &&
                   BigInt(cert.partitions.size()) == product_size;

  auto product_leq = [&](const std::vector<SetPartition>& a, const std::vector<SetPartition>& b) {
    for (int i = 0; i < s; ++i)
      if (!refines(a[i], b[i])) return false;
    return true;
  };

  cert.order_reversing = true;
  for (std::size_t v = 0; v < vertices.size() && cert.order_reversing; ++v)
    for (std::size_t w = 0; w < vertices.size(); ++w)
      if (leq(vertices[v], vertices[w]) != product_leq(cert.partitions[w], cert.partitions[v])) {
        cert.order_reversing = false;
        break;
      }

  cert.self_dual = true;
  for (const auto& [d, lattice] : lattices) {
    std::vector<SetPartition> images;
    for (const auto& p : lattice.elements) images.push_back(kreweras_complement(p, d));
    const std::set<SetPartition> hit(images.begin(), images.end());
    if (hit.size() != lattice.elements.size()) cert.self_dual = false;
    for (const auto& q : images)
      if (!is_noncrossing_cyclic(labels_of(q, d))) cert.self_dual = false;
    for (std::size_t a = 0; a < images.size() && cert.self_dual; ++a)
      for (std::size_t b = 0; b < images.size(); ++b)
        if (refines(lattice.elements[a], lattice.elements[b]) != refines(images[b], images[a])) {
          cert.self_dual = false;
          break;
        }
  }

  std::vector<std::vector<SetPartition>> dual;
  for (const auto& image : cert.partitions) {
    std::vector<SetPartition> k;
    for (int i = 0; i < s; ++i) k.push_back(kreweras_complement(image[i], cert.excerpt_counts[i]));
    dual.push_back(std::move(k));
  }
  cert.order_preserving_iso = cert.bijective;
  for (std::size_t v = 0; v < vertices.size() && cert.order_preserving_iso; ++v)
    for (std::size_t w = 0; w < vertices.size(); ++w)
      if (leq(vertices[v], vertices[w]) != product_leq(dual[v], dual[w])) {
        cert.order_preserving_iso = false;
        break;
      }

  cert.pass = cert.into_product && cert.bijective && cert.order_reversing && cert.self_dual &&
              cert.order_preserving_iso;
  return cert;
}

std::vector<int> interval_nc_type(const Permutation& lower, const Permutation& upper) {
  require_leq(lower, upper);
  std::vector<int> sizes;
  for (const auto& c : lower.cycles()) {
    std::vector<int> labels;
    for (int x : c.elements()) labels.push_back(upper.cycle_label(x));
    const int len = static_cast<int>(c.size());
    for (const auto& block : kreweras_complement(blocks_from_labels(labels), len))
      if (block.size() > 1) sizes.push_back(static_cast<int>(block.size()));
  }
  return sizes;
}

bool is_boolean_interval(const Permutation& lower, const Permutation& upper) {
  require_leq(lower, upper);
  for (const auto& c : lower.cycles()) {
    std::set<int> inside;
    for (int x : c.elements()) inside.insert(upper.cycle_label(x));
    if (inside.size() > 2) return false;
  }
  return true;
}

BigInt count_boolean_above(const Permutation& perm) {
  // A matched pair {i, j} weighs l_i l_j, so a matching weighs the product of
  // l_v over its matched vertices. Group by the matched vertex set: there are
  // (2t-1)!! perfect matchings on a set of size 2t.
  const auto lengths = perm.cycle_lengths();
  std::vector<BigInt> e(lengths.size() + 1, 0);  // elementary symmetric sums
  e[0] = 1;
  for (int l : lengths)
    for (std::size_t k = e.size() - 1; k >= 1; --k) e[k] += e[k - 1] * l;
  BigInt total = 0;
  BigInt double_factorial = 1;  // (2t-1)!!
  for (std::size_t t = 0; 2 * t < e.size(); ++t) {
    if (t > 0) double_factorial *= 2 * static_cast<int>(t) - 1;
    total += e[2 * t] * double_factorial;
  }
  return total;
}

BigInt count_boolean_below(const Permutation& perm) {
  BigInt total = 1;
  for (int l : perm.cycle_lengths()) total *= 1 + binomial(l, 2);
  return total;
}

// ---------------------------------------------------------------------------
// Output

std::string to_dot(const HasseDiagram& diagram, const std::string& name) {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=plaintext];\n";
  std::map<int, std::vector<std::size_t>> by_rank;
  for (std::size_t v = 0; v < diagram.vertices.size(); ++v) by_rank[diagram.ranks[v]].push_back(v);
  for (const auto& [rank, members] : by_rank) {
    out << "  subgraph rank_" << rank << " {\n    rank=same;\n";
    for (std::size_t v : members) out << "    v" << v << " [label=\"" << diagram.vertices[v].to_string() << "\"];\n";
    out << "  }\n";
  }
  for (const auto& [lo, hi] : diagram.edges) out << "  v" << lo << " -> v" << hi << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_json(const HasseDiagram& diagram) {
  nlohmann::json doc;
  doc["n"] = diagram.n;
  doc["vertices"] = nlohmann::json::array();
  for (const auto& v : diagram.vertices) doc["vertices"].push_back(v.to_string());
  doc["edges"] = nlohmann::json::array();
  for (const auto& [lo, hi] : diagram.edges) doc["edges"].push_back({lo, hi});
  doc["ranks"] = diagram.ranks;
  return doc.dump();
}

}  // namespace starfact
