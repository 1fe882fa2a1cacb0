#include "starfact/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "text.hpp"

namespace starfact {

Cycle::Cycle(std::vector<int> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) fail(ErrorKind::kInvalidArgument, "empty cycle");
  std::vector<int> sorted = elements_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(ErrorKind::kInvalidArgument, "repeated element in cycle");
  auto min_it = std::min_element(elements_.begin(), elements_.end());
  std::rotate(elements_.begin(), min_it, elements_.end());
}

bool Cycle::contains(int x) const {
  return std::find(elements_.begin(), elements_.end(), x) != elements_.end();
}

std::string Cycle::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(elements_[i]);
  }
  return out + ")";
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(n);
  for (int x = 1; x <= n; ++x) images[x - 1] = x;
  return from_images(std::move(images));
}

Permutation Permutation::from_cycles(int n, std::vector<Cycle> cycles) {
  if (n < 1) fail(ErrorKind::kInvalidArgument, "permutation size must be positive");
  std::vector<int> images(n, 0);
  for (const Cycle& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      int x = c[i];
      if (x < 1 || x > n)
        fail(ErrorKind::kInvalidArgument,
             "element " + std::to_string(x) + " outside [1, " + std::to_string(n) + "]");
      if (images[x - 1] != 0)
        fail(ErrorKind::kInvalidArgument, "element " + std::to_string(x) + " appears twice");
      images[x - 1] = c.at_cyclic(i + 1);
    }
  }
  for (int x = 1; x <= n; ++x)
    if (images[x - 1] == 0) images[x - 1] = x;
  return from_images(std::move(images));
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  if (n < 1) fail(ErrorKind::kInvalidArgument, "permutation size must be positive");
  std::vector<bool> hit(n, false);
  for (int y : images) {
    if (y < 1 || y > n || hit[y - 1])
      fail(ErrorKind::kInvalidArgument, "image list is not a permutation");
    hit[y - 1] = true;
  }

  Permutation perm;
  perm.n_ = n;
  perm.images_ = std::move(images);
  perm.labels_.assign(n, 0);
  // Scanning x upward discovers cycles in order of their minimal element.
  for (int x = 1; x <= n; ++x) {
    if (perm.labels_[x - 1] != 0) continue;
    const int label = static_cast<int>(perm.cycles_.size()) + 1;
    std::vector<int> elems;
    for (int y = x; perm.labels_[y - 1] == 0; y = perm.images_[y - 1]) {
      perm.labels_[y - 1] = label;
      elems.push_back(y);
    }
    perm.cycles_.emplace_back(std::move(elems));
  }
  return perm;
}

std::vector<int> Permutation::cycle_lengths() const {
  std::vector<int> out;
  out.reserve(cycles_.size());
  for (const Cycle& c : cycles_) out.push_back(static_cast<int>(c.size()));
  return out;
}

std::string Permutation::to_string() const {
  std::string out;
  for (const Cycle& c : cycles_) out += c.to_string();
  return out;
}

namespace {

int parse_element(std::string_view token) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    fail(ErrorKind::kParse, "bad element '" + std::string(token) + "'");
  if (value < 1) fail(ErrorKind::kParse, "element " + std::to_string(value) + " is < 1");
  return value;
}

std::vector<int> parse_cycle_body(std::string_view body) {
  std::vector<int> elems;
  const bool spaced = body.find_first_of(" \t,") != std::string_view::npos;
  if (!spaced) {
    for (char ch : body) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        fail(ErrorKind::kParse, "unexpected character '" + std::string(1, ch) + "'");
      elems.push_back(parse_element(std::string_view(&ch, 1)));
    }
    return elems;
  }
  std::size_t i = 0;
  while (i < body.size()) {
    while (i < body.size() && (body[i] == ' ' || body[i] == '\t' || body[i] == ',')) ++i;
    std::size_t j = i;
    while (j < body.size() && body[j] != ' ' && body[j] != '\t' && body[j] != ',') ++j;
    if (j > i) elems.push_back(parse_element(body.substr(i, j - i)));
    i = j;
  }
  return elems;
}

}  // namespace

namespace detail {

std::vector<std::vector<int>> parse_parenthesized_groups(std::string_view text) {
  std::vector<std::vector<int>> groups;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') fail(ErrorKind::kParse, "expected '(' in \"" + std::string(text) + "\"");
    std::size_t close = text.find(')', i);
    if (close == std::string_view::npos) fail(ErrorKind::kParse, "unbalanced parentheses");
    std::string_view body = text.substr(i + 1, close - i - 1);
    if (body.find('(') != std::string_view::npos) fail(ErrorKind::kParse, "nested parentheses");
    std::vector<int> elems = parse_cycle_body(body);
    if (elems.empty()) fail(ErrorKind::kParse, "empty cycle");
    groups.push_back(std::move(elems));
    i = close + 1;
    skip_space();
  }
  return groups;
}

}  // namespace detail

Permutation parse_permutation(std::string_view text, std::optional<int> n) {
  std::vector<std::vector<int>> raw = detail::parse_parenthesized_groups(text);
  if (raw.empty() && !n) fail(ErrorKind::kParse, "no cycles in \"" + std::string(text) + "\" and no size given");

  int max_elem = 0;
  std::vector<int> seen;
  for (const auto& c : raw)
    for (int x : c) {
      max_elem = std::max(max_elem, x);
      seen.push_back(x);
    }
  std::sort(seen.begin(), seen.end());
  if (auto dup = std::adjacent_find(seen.begin(), seen.end()); dup != seen.end())
    fail(ErrorKind::kParse, "duplicate element " + std::to_string(*dup));
  const int size = n.value_or(max_elem);
  if (size < 1) fail(ErrorKind::kParse, "permutation size must be positive");
  if (size < max_elem)
    fail(ErrorKind::kParse, "n = " + std::to_string(size) + " is smaller than element " +
                                std::to_string(max_elem));

  std::vector<Cycle> cycles;
  for (auto& c : raw) cycles.emplace_back(std::move(c));
  return Permutation::from_cycles(size, std::move(cycles));
}

CycleData cycle_data(const Permutation& perm) {
  return CycleData{perm.cycle_count(), perm.cycle_lengths()};
}

int pivot_cycle_index(const Permutation& perm, int pivot) {
  if (pivot < 1 || pivot > perm.size())
    fail(ErrorKind::kInvalidArgument, "pivot " + std::to_string(pivot) + " outside [1, " +
                                          std::to_string(perm.size()) + "]");
  return perm.cycle_label(pivot);
}

Permutation product_right_to_left(std::span<const Transposition> factors, int n) {
  std::vector<int> images(n);
  for (int x = 1; x <= n; ++x) images[x - 1] = x;
  // Apply g_r first: compose each new factor on the left, walking backwards.
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    if (it->a < 1 || it->a > n || it->b < 1 || it->b > n || it->a == it->b)
      fail(ErrorKind::kInvalidArgument, "transposition (" + std::to_string(it->a) + " " +
                                            std::to_string(it->b) + ") is not on [n]");
    for (int& y : images) {
      if (y == it->a)
        y = it->b;
      else if (y == it->b)
        y = it->a;
    }
  }
  return Permutation::from_images(std::move(images));
}

bool is_excerpt(const Cycle& d, const Cycle& c) {
  if (d.size() == 0 || d.size() > c.size()) return false;
  for (std::size_t start = 0; start < c.size(); ++start) {
    std::vector<int> arc;
    for (std::size_t j = 0; j < d.size(); ++j) arc.push_back(c.at_cyclic(start + j));
    if (Cycle(std::move(arc)) == d) return true;
  }
  return false;
}

Cycle merge_cycles(const Cycle& a, std::size_t rotation, const Cycle& b, std::size_t gap) {
  if (rotation >= a.size() || gap >= b.size())
    fail(ErrorKind::kInvalidArgument, "rotation or gap out of range");
  for (int x : a.elements())
    if (b.contains(x)) fail(ErrorKind::kInvalidArgument, "merge_cycles: overlapping supports");
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  for (std::size_t i = 0; i <= gap; ++i) out.push_back(b[i]);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a.at_cyclic(rotation + i));
  for (std::size_t i = gap + 1; i < b.size(); ++i) out.push_back(b[i]);
  return Cycle(std::move(out));
}

std::vector<Cycle> slice_cycle(const Cycle& c, std::span<const std::size_t> cuts) {
  if (cuts.empty()) fail(ErrorKind::kInvalidArgument, "slice_cycle needs at least one cut");
  std::vector<std::size_t> sorted(cuts.begin(), cuts.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || sorted.back() >= c.size())
    fail(ErrorKind::kInvalidArgument, "slice_cycle: cuts must be distinct gaps of the cycle");

  const std::size_t t = c.size();
  std::vector<Cycle> arcs;
  for (std::size_t q = 0; q < sorted.size(); ++q) {
    std::size_t from = sorted[q] + 1;
    std::size_t to = q + 1 < sorted.size() ? sorted[q + 1] + 1 : sorted.front() + 1 + t;
    std::vector<int> arc;
    for (std::size_t i = from; i < to; ++i) arc.push_back(c.at_cyclic(i));
    arcs.emplace_back(std::move(arc));
  }
  return arcs;
}

BigInt falling_factorial(const BigInt& a, int b) {
  if (b < 0) fail(ErrorKind::kInvalidArgument, "falling factorial needs a nonnegative length");
  BigInt out = 1;
  for (int i = 0; i < b; ++i) out *= a - i;
  return out;
}

BigInt factorial(int n) {
  if (n < 0) fail(ErrorKind::kInvalidArgument, "factorial of a negative number");
  return falling_factorial(n, n);
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  return falling_factorial(n, k) / factorial(k);
}

}  // namespace starfact
