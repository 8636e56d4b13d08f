#include "gcode/group_table.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "gcode/error.hpp"

namespace gcode {

FiniteGroupTable::FiniteGroupTable(std::string name, int order, std::vector<int> table, std::vector<int> generators,
                                   std::vector<std::string> element_names)
    : name_(std::move(name)),
      order_(order),
      table_(std::move(table)),
      generators_(std::move(generators)),
      element_names_(std::move(element_names)) {
  if (order_ < 1) throw std::invalid_argument("group order must be positive");
  const auto n = static_cast<std::size_t>(order_);
  if (table_.size() != n * n) throw std::invalid_argument("Cayley table has wrong size");
  for (int x : table_) {
    if (x < 0 || x >= order_) throw std::invalid_argument("Cayley table entry out of range");
  }
  for (int a = 0; a < order_; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a) throw std::invalid_argument("label 0 is not the identity");
  }
  inverse_.assign(n, -1);
  for (int a = 0; a < order_; ++a) {
    std::vector<bool> row(n, false);
    for (int b = 0; b < order_; ++b) {
      const int c = mul(a, b);
      if (row[static_cast<std::size_t>(c)]) throw std::invalid_argument("Cayley table row is not a permutation");
      row[static_cast<std::size_t>(c)] = true;
      if (c == 0) inverse_[static_cast<std::size_t>(a)] = b;
    }
  }
  if (order_ <= 64) {
    for (int a = 0; a < order_; ++a) {
      for (int b = 0; b < order_; ++b) {
        const int ab = mul(a, b);
        for (int c = 0; c < order_; ++c) {
          if (mul(ab, c) != mul(a, mul(b, c))) throw std::invalid_argument("Cayley table is not associative");
        }
      }
    }
  }
  for (int g : generators_) {
    if (g < 0 || g >= order_) throw std::invalid_argument("generator label out of range");
  }
  if (static_cast<int>(subgroup(generators_).size()) != order_) {
    throw std::invalid_argument("generators do not generate the group");
  }
  if (!element_names_.empty() && element_names_.size() != n) throw std::invalid_argument("wrong number of element names");
}

FiniteGroupTable FiniteGroupTable::from_perm_group(const PermGroupSmall& g, std::string name) {
  const auto& els = g.elements();
  const int n = static_cast<int>(els.size());
  std::vector<int> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      table[static_cast<std::size_t>(a * n + b)] = static_cast<int>(g.index_of(els[static_cast<std::size_t>(a)] * els[static_cast<std::size_t>(b)]));
    }
  }
  std::vector<int> gens;
  for (const auto& x : g.generators()) gens.push_back(static_cast<int>(g.index_of(x)));
  std::vector<std::string> names;
  for (const auto& e : els) names.push_back(e.to_cycles());
  return FiniteGroupTable(std::move(name), n, std::move(table), std::move(gens), std::move(names));
}

std::string FiniteGroupTable::element_name(int a) const {
  if (!element_names_.empty()) return element_names_[static_cast<std::size_t>(a)];
  return "g" + std::to_string(a);
}

int FiniteGroupTable::element_order(int a) const {
  int k = 1;
  for (int x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

int FiniteGroupTable::centralizer_size(int a) const {
  int c = 0;
  for (int b = 0; b < order_; ++b) c += mul(a, b) == mul(b, a);
  return c;
}

bool FiniteGroupTable::is_abelian() const {
  for (int a : generators_) {
    for (int b : generators_) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

bool FiniteGroupTable::is_cyclic() const {
  for (int a = 0; a < order_; ++a) {
    if (element_order(a) == order_) return true;
  }
  return false;
}

std::vector<int> FiniteGroupTable::center() const {
  std::vector<int> z;
  for (int a = 0; a < order_; ++a) {
    if (centralizer_size(a) == order_) z.push_back(a);
  }
  return z;
}

std::vector<int> FiniteGroupTable::subgroup(std::span<const int> gens) const {
  std::vector<bool> seen(static_cast<std::size_t>(order_), false);
  std::vector<int> out{0};
  seen[0] = true;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int g : gens) {
      const int y = mul(g, out[head]);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool FiniteGroupTable::is_subgroup(std::span<const int> labels) const {
  std::vector<bool> in(static_cast<std::size_t>(order_), false);
  for (int x : labels) in[static_cast<std::size_t>(x)] = true;
  if (!in[0]) return false;
  for (int a : labels) {
    for (int b : labels) {
      if (!in[static_cast<std::size_t>(mul(a, b))]) return false;
    }
  }
  return true;
}

bool FiniteGroupTable::is_normal(std::span<const int> sub) const {
  std::vector<bool> in(static_cast<std::size_t>(order_), false);
  for (int x : sub) in[static_cast<std::size_t>(x)] = true;
  for (int g = 0; g < order_; ++g) {
    for (int x : sub) {
      if (!in[static_cast<std::size_t>(mul(mul(g, x), inv(g)))]) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> FiniteGroupTable::normal_subgroups() const {
  // Every normal subgroup is a join of normal closures of single elements.
  auto normal_closure = [&](std::vector<int> gens) {
    std::vector<int> conj;
    for (int x : gens) {
      for (int g = 0; g < order_; ++g) conj.push_back(mul(mul(g, x), inv(g)));
    }
    return subgroup(conj);
  };
  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> atoms;
  for (int a = 0; a < order_; ++a) {
    auto n = normal_closure({a});
    if (found.insert(n).second) atoms.push_back(n);
  }
  std::vector<std::vector<int>> work(found.begin(), found.end());
  for (std::size_t head = 0; head < work.size(); ++head) {
    for (const auto& atom : atoms) {
      std::vector<int> joined = work[head];
      joined.insert(joined.end(), atom.begin(), atom.end());
      auto n = subgroup(joined);
      if (found.insert(n).second) work.push_back(std::move(n));
    }
  }
  return {found.begin(), found.end()};
}

bool FiniteGroupTable::quotient_is_cyclic(std::span<const int> normal_labels) const {
  std::vector<bool> in(static_cast<std::size_t>(order_), false);
  for (int x : normal_labels) in[static_cast<std::size_t>(x)] = true;
  const int index = order_ / static_cast<int>(normal_labels.size());
  for (int g = 0; g < order_; ++g) {
    int k = 1;
    for (int x = g; !in[static_cast<std::size_t>(x)]; x = mul(x, g)) ++k;
    if (k == index) return true;
  }
  return false;
}

Permutation FiniteGroupTable::left_regular(int g) const {
  std::vector<int> images(static_cast<std::size_t>(order_));
  for (int x = 0; x < order_; ++x) images[static_cast<std::size_t>(x)] = mul(g, x);
  return Permutation(std::move(images));
}

Permutation FiniteGroupTable::right_regular(int g) const {
  std::vector<int> images(static_cast<std::size_t>(order_));
  const int gi = inv(g);
  for (int x = 0; x < order_; ++x) images[static_cast<std::size_t>(x)] = mul(x, gi);
  return Permutation(std::move(images));
}

FiniteGroupTable FiniteGroupTable::direct_product(const FiniteGroupTable& other, std::string name) const {
  const int n1 = order_, n2 = other.order_;
  const int n = n1 * n2;
  std::vector<int> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int x = mul(a % n1, b % n1);
      const int y = other.mul(a / n1, b / n1);
      table[static_cast<std::size_t>(a * n + b)] = x + n1 * y;
    }
  }
  std::vector<int> gens;
  for (int g : generators_) gens.push_back(g);
  for (int g : other.generators_) gens.push_back(n1 * g);
  std::vector<std::string> names;
  for (int a = 0; a < n; ++a) names.push_back("(" + element_name(a % n1) + "," + other.element_name(a / n1) + ")");
  if (name.empty()) name = name_ + "X" + other.name_;
  return FiniteGroupTable(std::move(name), n, std::move(table), std::move(gens), std::move(names));
}

namespace {

std::string power_name(const std::string& base, int e) {
  if (e == 0) return "";
  if (e == 1) return base;
  return base + "^" + std::to_string(e);
}

std::string word_name(const std::string& a, int i, const std::string& b, int j) {
  std::string s = power_name(a, i);
  const std::string t = power_name(b, j);
  if (!s.empty() && !t.empty()) s += "*";
  s += t;
  return s.empty() ? "1" : s;
}

// <a,b | a^n = b^m = 1, b a b^-1 = a^r>, label i + n j for a^i b^j.
FiniteGroupTable metacyclic(std::string name, int n, int m, int r, const std::string& a = "a",
                            const std::string& b = "b") {
  std::vector<int> rpow(static_cast<std::size_t>(m) + 1, 1 % n);
  for (int j = 1; j <= m; ++j) rpow[static_cast<std::size_t>(j)] = static_cast<int>((static_cast<long long>(rpow[static_cast<std::size_t>(j - 1)]) * r) % n);
  if (rpow[static_cast<std::size_t>(m)] != 1 % n) {
    throw ParseError("metacyclic parameters need r^m = 1 mod n");
  }
  const int order = n * m;
  std::vector<int> table(static_cast<std::size_t>(order) * static_cast<std::size_t>(order));
  for (int x = 0; x < order; ++x) {
    for (int y = 0; y < order; ++y) {
      const int i = x % n, j = x / n, k = y % n, l = y / n;
      const int ai = static_cast<int>((i + static_cast<long long>(rpow[static_cast<std::size_t>(j)]) * k) % n);
      table[static_cast<std::size_t>(x * order + y)] = ai + n * ((j + l) % m);
    }
  }
  std::vector<int> gens;
  if (n > 1) gens.push_back(1);
  if (m > 1) gens.push_back(n);
  std::vector<std::string> names;
  for (int x = 0; x < order; ++x) names.push_back(word_name(a, x % n, b, x / n));
  return FiniteGroupTable(std::move(name), order, std::move(table), std::move(gens), std::move(names));
}

FiniteGroupTable cyclic(std::string name, int n) {
  std::vector<int> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a * n + b)] = (a + b) % n;
  }
  std::vector<int> gens;
  if (n > 1) gens.push_back(1);
  std::vector<std::string> names;
  for (int a = 0; a < n; ++a) names.push_back(a == 0 ? "1" : power_name("g", a));
  return FiniteGroupTable(std::move(name), n, std::move(table), std::move(gens), std::move(names));
}

FiniteGroupTable abelian(std::string name, const std::vector<int>& factors) {
  FiniteGroupTable g = cyclic("C" + std::to_string(factors.at(0)), factors[0]);
  for (std::size_t i = 1; i < factors.size(); ++i) g = g.direct_product(cyclic("C" + std::to_string(factors[i]), factors[i]));
  const int n = g.order();
  std::vector<int> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a * n + b)] = g.mul(a, b);
  }
  std::vector<std::string> names;
  for (int a = 0; a < n; ++a) names.push_back(g.element_name(a));
  return FiniteGroupTable(std::move(name), n, std::move(table), g.generators(), std::move(names));
}

FiniteGroupTable from_perms(std::string name, std::size_t degree, const std::vector<std::string>& cycles) {
  std::vector<Permutation> gens;
  for (const auto& c : cycles) gens.push_back(Permutation::from_cycles(degree, c));
  const auto g = PermGroupSmall::closure(degree, gens, 1u << 20);
  FiniteGroupTable t = FiniteGroupTable::from_perm_group(g, "");
  const int n = t.order();
  std::vector<int> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a * n + b)] = t.mul(a, b);
  }
  std::vector<std::string> names;
  for (int a = 0; a < n; ++a) names.push_back(t.element_name(a));
  return FiniteGroupTable(std::move(name), n, std::move(table), t.generators(), std::move(names));
}

FiniteGroupTable quaternion8() {
  // Labels: 0..3 = 1, i, j, k; 4..7 = their negatives.
  const int unit[4][4] = {{0, 1, 2, 3}, {1, 4, 3, 6}, {2, 7, 4, 1}, {3, 2, 5, 4}};
  // unit[x][y] gives the product of basis units x, y with sign encoded (+4 = negative).
  std::vector<int> table(64);
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      int prod = unit[a % 4][b % 4];
      const int sign = (a / 4 + b / 4 + prod / 4) % 2;
      table[static_cast<std::size_t>(a * 8 + b)] = prod % 4 + 4 * sign;
    }
  }
  return FiniteGroupTable("Q8", 8, std::move(table), {1, 2}, {"1", "i", "j", "k", "-1", "-i", "-j", "-k"});
}

int parse_int(std::string_view s, std::string_view spec) {
  if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError("malformed group spec: " + std::string(spec));
  }
  return std::stoi(std::string(s));
}

std::vector<int> parse_list(std::string_view s, char sep, std::string_view spec) {
  std::vector<int> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(parse_int(s.substr(start, pos == std::string_view::npos ? pos : pos - start), spec));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

FiniteGroupTable atom_from_spec(std::string_view s) {
  const std::string name(s);
  if (s == "Q8") return quaternion8();
  if (s == "A4") return from_perms("A4", 4, {"(1,2,3)", "(1,2)(3,4)"});
  if (s.starts_with("MC:")) {
    const auto v = parse_list(s.substr(3), ',', s);
    if (v.size() != 3 || v[0] < 1 || v[1] < 1) throw ParseError("MC spec needs n,m,r: " + name);
    return metacyclic(name, v[0], v[1], v[2]);
  }
  if (s.starts_with("A:")) {
    const auto v = parse_list(s.substr(2), 'x', s);
    for (int d : v) {
      if (d < 1) throw ParseError("abelian factor must be positive: " + name);
    }
    return abelian(name, v);
  }
  if (s.empty()) throw ParseError("empty group spec");
  const char kind = s[0];
  const auto rest = s.substr(1);
  switch (kind) {
    case 'C': {
      const int n = parse_int(rest, s);
      if (n < 1) throw ParseError("cyclic order must be positive: " + name);
      return cyclic(name, n);
    }
    case 'D': {
      const int n = parse_int(rest, s);
      if (n < 2 || n % 2 != 0) throw ParseError("dihedral order must be even: " + name);
      return metacyclic(name, n / 2, 2, n / 2 - 1 + (n == 2 ? 1 : 0), "r", "s");
    }
    case 'E': {
      const auto caret = rest.find('^');
      if (caret == std::string_view::npos) throw ParseError("elementary abelian spec needs E<p>^<m>: " + name);
      const int p = parse_int(rest.substr(0, caret), s);
      const int m = parse_int(rest.substr(caret + 1), s);
      if (!is_prime(static_cast<std::uint64_t>(p)) || m < 1) throw ParseError("bad elementary abelian parameters: " + name);
      return abelian(name, std::vector<int>(static_cast<std::size_t>(m), p));
    }
    case 'S': {
      const int k = parse_int(rest, s);
      if (k < 1 || k > 6) throw ParseError("symmetric degree must be in 1..6: " + name);
      std::vector<std::string> gens;
      if (k >= 2) gens.push_back("(1,2)");
      if (k >= 3) {
        std::string c = "(";
        for (int i = 1; i <= k; ++i) c += std::to_string(i) + (i < k ? "," : ")");
        gens.push_back(c);
      }
      if (k == 1) return cyclic(name, 1);
      return from_perms(name, static_cast<std::size_t>(k), gens);
    }
    default:
      throw ParseError("unknown group spec: " + name);
  }
}

}  // namespace

FiniteGroupTable group_from_spec(std::string_view spec) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i < spec.size();) {
    if (spec[i] == 'X') {
      parts.push_back(spec.substr(start, i - start));
      start = i = i + 1;
    } else if (spec.substr(i).starts_with("\xC3\x97")) {
      parts.push_back(spec.substr(start, i - start));
      start = i = i + 2;
    } else {
      ++i;
    }
  }
  parts.push_back(spec.substr(start));
  for (auto& part : parts) {
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
  }
  FiniteGroupTable g = atom_from_spec(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i) g = g.direct_product(atom_from_spec(parts[i]));
  if (parts.size() == 1) return g;
  const int n = g.order();
  std::vector<int> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a * n + b)] = g.mul(a, b);
  }
  std::vector<std::string> names;
  for (int a = 0; a < n; ++a) names.push_back(g.element_name(a));
  return FiniteGroupTable(std::string(spec), n, std::move(table), g.generators(), std::move(names));
}

namespace {

struct ElementClass {
  int order;
  int centralizer;
  auto operator<=>(const ElementClass&) const = default;
};

std::vector<ElementClass> element_classes(const FiniteGroupTable& g) {
  std::vector<ElementClass> out;
  for (int a = 0; a < g.order(); ++a) out.push_back({g.element_order(a), g.centralizer_size(a)});
  return out;
}

// Generators chosen by descending element order; keeps the search tree shallow.
std::vector<int> search_generators(const FiniteGroupTable& g) {
  std::vector<int> labels(static_cast<std::size_t>(g.order()));
  std::iota(labels.begin(), labels.end(), 0);
  std::stable_sort(labels.begin(), labels.end(), [&](int a, int b) { return g.element_order(a) > g.element_order(b); });
  std::vector<int> gens;
  std::vector<int> current{0};
  for (int a : labels) {
    if (std::binary_search(current.begin(), current.end(), a)) continue;
    gens.push_back(a);
    current = g.subgroup(gens);
    if (static_cast<int>(current.size()) == g.order()) break;
  }
  return gens;
}

}  // namespace

std::optional<std::vector<int>> are_isomorphic(const FiniteGroupTable& g1, const FiniteGroupTable& g2,
                                               std::size_t bound) {
  if (g1.order() != g2.order()) return std::nullopt;
  if (static_cast<std::size_t>(g1.order()) > bound) {
    throw CapExceeded("isomorphism test beyond order " + std::to_string(bound));
  }
  const int n = g1.order();
  const auto c1 = element_classes(g1);
  const auto c2 = element_classes(g2);
  {
    auto s1 = c1, s2 = c2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
    if (g1.is_abelian() != g2.is_abelian() || g1.center().size() != g2.center().size()) return std::nullopt;
  }
  const auto gens = search_generators(g1);
  std::vector<int> images(gens.size(), -1);

  // Extends the assignment gens[0..depth) -> images to the generated subgroup;
  // returns false on an inconsistency or a collision.
  auto extend = [&](std::size_t depth, std::vector<int>& map) {
    map.assign(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    map[0] = 0;
    used[0] = true;
    std::vector<int> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int x = queue[head];
      for (std::size_t i = 0; i < depth; ++i) {
        const int y = g1.mul(gens[i], x);
        const int fy = g2.mul(images[i], map[static_cast<std::size_t>(x)]);
        if (map[static_cast<std::size_t>(y)] == -1) {
          if (used[static_cast<std::size_t>(fy)]) return false;
          map[static_cast<std::size_t>(y)] = fy;
          used[static_cast<std::size_t>(fy)] = true;
          queue.push_back(y);
        } else if (map[static_cast<std::size_t>(y)] != fy) {
          return false;
        }
      }
    }
    return true;
  };

  std::vector<int> map;
  std::optional<std::vector<int>> result;
  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == gens.size()) {
      if (!extend(depth, map)) return false;
      // The image of a generating set closing consistently on all of G is a
      // homomorphism; it is a bijection because no collision occurred.
      result = map;
      return true;
    }
    const ElementClass want = c1[static_cast<std::size_t>(gens[depth])];
    for (int cand = 0; cand < n; ++cand) {
      if (c2[static_cast<std::size_t>(cand)] != want) continue;
      images[depth] = cand;
      if (!extend(depth + 1, map)) continue;
      if (self(self, depth + 1)) return true;
    }
    return false;
  };
  if (gens.empty()) return std::vector<int>{0};
  search(search, 0);
  return result;
}

std::optional<std::vector<int>> are_isomorphic(const PermGroupSmall& g1, const PermGroupSmall& g2,
                                               std::size_t bound) {
  if (g1.order() != g2.order()) return std::nullopt;
  if (g1.order() > bound) throw CapExceeded("isomorphism test beyond order " + std::to_string(bound));
  return are_isomorphic(FiniteGroupTable::from_perm_group(g1), FiniteGroupTable::from_perm_group(g2), bound);
}

std::optional<std::vector<int>> are_isomorphic(const PermGroupSmall& g1, const FiniteGroupTable& g2,
                                               std::size_t bound) {
  if (g1.order() != static_cast<std::size_t>(g2.order())) return std::nullopt;
  if (g1.order() > bound) throw CapExceeded("isomorphism test beyond order " + std::to_string(bound));
  return are_isomorphic(FiniteGroupTable::from_perm_group(g1), g2, bound);
}

const std::vector<FiniteGroupTable>& groups_of_order(int n) {
  static const std::map<int, std::vector<FiniteGroupTable>> table = [] {
    const std::vector<std::vector<const char*>> specs = {
        {"C1"},
        {"C2"},
        {"C3"},
        {"C4", "E2^2"},
        {"C5"},
        {"C6", "S3"},
        {"C7"},
        {"C8", "A:2x4", "E2^3", "D8", "Q8"},
        {"C9", "E3^2"},
        {"C10", "D10"},
        {"C11"},
        {"C12", "A:2x6", "D12", "A4", "MC:3,4,2"},
        {"C13"},
    };
    std::map<int, std::vector<FiniteGroupTable>> out;
    for (std::size_t i = 0; i < specs.size(); ++i) {
      for (const char* s : specs[i]) out[static_cast<int>(i) + 1].push_back(group_from_spec(s));
    }
    return out;
  }();
  if (n < 1 || n > kMaxTabulatedOrder) {
    throw std::invalid_argument("no built-in group list for order " + std::to_string(n));
  }
  return table.at(n);
}

std::string identify_group(const FiniteGroupTable& g) {
  if (g.order() <= kMaxTabulatedOrder) {
    for (const auto& cand : groups_of_order(g.order())) {
      if (are_isomorphic(g, cand)) return cand.name();
    }
    throw std::logic_error("group of order " + std::to_string(g.order()) + " missing from the built-in list");
  }
  return "order-" + std::to_string(g.order());
}

std::string identify_group(const PermGroupSmall& g) {
  if (g.order() > static_cast<std::size_t>(kMaxTabulatedOrder)) return "order-" + std::to_string(g.order());
  return identify_group(FiniteGroupTable::from_perm_group(g));
}

}  // namespace gcode
