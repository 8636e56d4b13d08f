#include "gcode/groupalg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "gcode/classify.hpp"
#include "gcode/error.hpp"

namespace gcode {

GroupAlgebra::GroupAlgebra(FiniteField field, FiniteGroupTable group)
    : field_(std::move(field)), group_(std::move(group)) {}

Vec GroupAlgebra::basis(int g) const {
  Vec e(dimension(), 0);
  e.at(static_cast<std::size_t>(g)) = 1;
  return e;
}

Vec GroupAlgebra::mul(std::span<const Rep> a, std::span<const Rep> b) const {
  const int n = group_.order();
  if (a.size() != dimension() || b.size() != dimension()) throw std::invalid_argument("group algebra element of wrong length");
  Vec out(dimension(), 0);
  for (int g = 0; g < n; ++g) {
    const Rep x = a[static_cast<std::size_t>(g)];
    if (x == 0) continue;
    for (int h = 0; h < n; ++h) {
      const Rep y = b[static_cast<std::size_t>(h)];
      if (y == 0) continue;
      auto& slot = out[static_cast<std::size_t>(group_.mul(g, h))];
      slot = field_.add(slot, field_.mul(x, y));
    }
  }
  return out;
}

Vec GroupAlgebra::left_mul(int g, std::span<const Rep> x) const {
  Vec out(dimension(), 0);
  for (int h = 0; h < group_.order(); ++h) out[static_cast<std::size_t>(group_.mul(g, h))] = x[static_cast<std::size_t>(h)];
  return out;
}

Vec GroupAlgebra::right_mul(std::span<const Rep> x, int g) const {
  Vec out(dimension(), 0);
  for (int h = 0; h < group_.order(); ++h) out[static_cast<std::size_t>(group_.mul(h, g))] = x[static_cast<std::size_t>(h)];
  return out;
}

IndexBijection::IndexBijection(std::vector<int> label) : label_(std::move(label)), coordinate_(label_.size(), label_.size()) {
  for (std::size_t i = 0; i < label_.size(); ++i) {
    const int g = label_[i];
    if (g < 0 || static_cast<std::size_t>(g) >= label_.size() || coordinate_[static_cast<std::size_t>(g)] != label_.size()) {
      throw std::invalid_argument("coordinate-to-group map is not a bijection");
    }
    coordinate_[static_cast<std::size_t>(g)] = i;
  }
}

IndexBijection IndexBijection::identity(std::size_t n) {
  std::vector<int> label(n);
  for (std::size_t i = 0; i < n; ++i) label[i] = static_cast<int>(i);
  return IndexBijection(std::move(label));
}

Vec IndexBijection::to_algebra(std::span<const Rep> x) const {
  if (x.size() != size()) throw std::invalid_argument("word length does not match the group order");
  Vec out(size());
  for (std::size_t i = 0; i < size(); ++i) out[static_cast<std::size_t>(label_[i])] = x[i];
  return out;
}

Vec IndexBijection::from_algebra(std::span<const Rep> a) const {
  if (a.size() != size()) throw std::invalid_argument("group algebra element of wrong length");
  Vec out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = a[static_cast<std::size_t>(label_[i])];
  return out;
}

LinearCode IndexBijection::to_algebra(const LinearCode& c) const {
  std::vector<Vec> rows;
  for (const auto& r : c.generator()) rows.push_back(to_algebra(r));
  return LinearCode::from_rows(c.field(), size(), rows);
}

LinearCode IndexBijection::from_algebra(const LinearCode& ideal) const {
  std::vector<Vec> rows;
  for (const auto& r : ideal.generator()) rows.push_back(from_algebra(r));
  return LinearCode::from_rows(ideal.field(), size(), rows);
}

IndexBijection regular_subgroup_phi(const PermGroupSmall& h) {
  if (!h.is_regular()) throw std::invalid_argument("group is not regular");
  std::vector<int> label(h.degree());
  const auto& els = h.elements();
  for (std::size_t k = 0; k < els.size(); ++k) label[static_cast<std::size_t>(els[k](0))] = static_cast<int>(k);
  return IndexBijection(std::move(label));
}

bool is_ideal(const LinearCode& ideal, const GroupAlgebra& algebra, Sidedness sided) {
  if (ideal.length() != algebra.dimension()) throw std::invalid_argument("code length does not match the group order");
  for (int g : algebra.group().generators()) {
    for (const auto& x : ideal.generator()) {
      if (!ideal.contains(algebra.left_mul(g, x))) return false;
      if (sided == Sidedness::two_sided && !ideal.contains(algebra.right_mul(x, g))) return false;
    }
  }
  return true;
}

namespace {

bool stable(const LinearCode& c, const FiniteGroupTable& g, const IndexBijection& phi, Sidedness sided) {
  if (c.length() != static_cast<std::size_t>(g.order()) || phi.size() != c.length()) {
    throw std::invalid_argument("code length, group order and bijection size differ");
  }
  return is_ideal(phi.to_algebra(c), GroupAlgebra(c.field(), g), sided);
}

}  // namespace

bool is_left_ideal(const LinearCode& c, const FiniteGroupTable& g, const IndexBijection& phi) {
  return stable(c, g, phi, Sidedness::left);
}

bool is_two_sided_ideal(const LinearCode& c, const FiniteGroupTable& g, const IndexBijection& phi) {
  return stable(c, g, phi, Sidedness::two_sided);
}

LinearCode ideal_generated(const GroupAlgebra& algebra, std::span<const Vec> gens, Sidedness sided, const Caps& caps) {
  if (algebra.dimension() > caps.max_iso_order) {
    throw CapExceeded("ideal generation limited to groups of order " + std::to_string(caps.max_iso_order));
  }
  Echelon span(algebra.field(), algebra.dimension());
  std::vector<Vec> queue;
  for (const auto& x : gens) {
    if (span.insert(x)) queue.push_back(x);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int g : algebra.group().generators()) {
      Vec y = algebra.left_mul(g, queue[head]);
      if (span.insert(y)) queue.push_back(std::move(y));
      if (sided == Sidedness::two_sided) {
        Vec z = algebra.right_mul(queue[head], g);
        if (span.insert(z)) queue.push_back(std::move(z));
      }
    }
  }
  return LinearCode::from_rows(algebra.field(), algebra.dimension(), span.rref());
}

std::vector<LinearCode> enumerate_ideals(const GroupAlgebra& algebra, Sidedness sided, const Caps& caps) {
  const std::size_t n = algebra.dimension();
  const auto& f = algebra.field();
  const auto& g = algebra.group();
  const std::uint64_t q = f.q();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= q;
    if (total > caps.max_ambient_words) {
      throw CapExceeded("ideal enumeration needs q^|G| <= " + std::to_string(caps.max_ambient_words));
    }
  }
  auto encode = [&](const Vec& x) {
    std::uint64_t code = 0;
    for (std::size_t i = n; i-- > 0;) code = code * q + x[i];
    return code;
  };
  std::vector<bool> visited(total, false);
  std::map<std::vector<Vec>, LinearCode> principal;
  Vec x(n, 0);
  for (std::uint64_t code = 1; code < total; ++code) {
    if (visited[code]) continue;
    std::uint64_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = static_cast<Rep>(c % q);
      c /= q;
    }
    // Generators of the same principal ideal: lambda g x (h).
    const int right_count = sided == Sidedness::two_sided ? g.order() : 1;
    for (int a = 0; a < g.order(); ++a) {
      const Vec ax = algebra.left_mul(a, x);
      for (int b = 0; b < right_count; ++b) {
        const Vec axb = sided == Sidedness::two_sided ? algebra.right_mul(ax, b) : ax;
        for (Rep lambda = 1; lambda < q; ++lambda) {
          Vec y = axb;
          for (auto& v : y) v = f.mul(v, lambda);
          visited[encode(y)] = true;
        }
      }
    }
    const Vec gens[] = {x};
    auto ideal = ideal_generated(algebra, gens, sided, caps);
    principal.emplace(ideal.generator(), std::move(ideal));
  }
  std::map<std::vector<Vec>, LinearCode> all;
  const auto zero = LinearCode::zero(f, n);
  all.emplace(zero.generator(), zero);
  std::vector<LinearCode> work{zero};
  for (std::size_t head = 0; head < work.size(); ++head) {
    for (const auto& [key, p] : principal) {
      const auto& cur = work[head];
      const bool inside = std::all_of(p.generator().begin(), p.generator().end(),
                                      [&](const Vec& r) { return cur.contains(r); });
      if (inside) continue;
      auto s = sum(cur, p);
      if (all.emplace(s.generator(), s).second) {
        work.push_back(std::move(s));
        if (work.size() > caps.max_subspaces) throw CapExceeded("too many ideals");
      }
    }
  }
  std::vector<LinearCode> out;
  for (auto& [key, c] : all) out.push_back(std::move(c));
  std::stable_sort(out.begin(), out.end(),
                   [](const LinearCode& a, const LinearCode& b) { return a.dimension() < b.dimension(); });
  return out;
}

std::vector<Permutation> f_phi(const FiniteGroupTable& g, const IndexBijection& phi) {
  if (phi.size() != static_cast<std::size_t>(g.order())) throw std::invalid_argument("bijection size differs from group order");
  std::vector<Permutation> out;
  for (int a = 0; a < g.order(); ++a) {
    std::vector<int> images(phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i) images[i] = static_cast<int>(phi.coordinate(g.mul(a, phi(i))));
    out.emplace_back(std::move(images));
  }
  return out;
}

bool sigma_translation_identity_holds(const FiniteGroupTable& g, const IndexBijection& phi) {
  const auto f = f_phi(g, phi);
  const auto h = PermGroupSmall::closure(phi.size(), f, f.size());
  if (h.order() != f.size() || !h.is_regular()) return false;
  const int i0 = static_cast<int>(phi.coordinate(0));
  for (int a = 0; a < g.order(); ++a) {
    // f^{-1}(f(a)) = a; phi^{-1}(phi(e_i) a) = e_{coordinate(phi(i) a)}.
    const auto sigma = anti_iso_sigma(h, i0, f[static_cast<std::size_t>(a)]);
    for (std::size_t i = 0; i < phi.size(); ++i) {
      if (static_cast<std::size_t>(sigma(static_cast<int>(i))) != phi.coordinate(g.mul(phi(i), a))) return false;
    }
  }
  return true;
}

namespace {

bool commute_within(const FiniteGroupTable& g, std::span<const int> s) {
  for (int a : s) {
    for (int b : s) {
      if (g.mul(a, b) != g.mul(b, a)) return false;
    }
  }
  return true;
}

std::size_t product_size(const FiniteGroupTable& g, std::span<const int> a, std::span<const int> b) {
  std::vector<bool> hit(static_cast<std::size_t>(g.order()), false);
  std::size_t count = 0;
  for (int x : a) {
    for (int y : b) {
      const auto xy = static_cast<std::size_t>(g.mul(x, y));
      if (!hit[xy]) {
        hit[xy] = true;
        ++count;
      }
    }
  }
  return count;
}

}  // namespace

std::optional<AbelianFactorization> find_abelian_factorization(const FiniteGroupTable& g) {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> abelian;
  for (int a = 0; a < g.order(); ++a) {
    for (int b = a; b < g.order(); ++b) {
      if (g.mul(a, b) != g.mul(b, a)) continue;
      const int gens[] = {a, b};
      auto s = g.subgroup(gens);
      if (seen.insert(s).second) abelian.push_back(std::move(s));
    }
  }
  std::stable_sort(abelian.begin(), abelian.end(),
                   [](const auto& x, const auto& y) { return x.size() > y.size(); });
  for (const auto& a : abelian) {
    for (auto it = abelian.rbegin(); it != abelian.rend(); ++it) {
      if (product_size(g, a, *it) == static_cast<std::size_t>(g.order())) return AbelianFactorization{a, *it};
    }
  }
  return std::nullopt;
}

void validate_abelian_factorization(const FiniteGroupTable& g, const AbelianFactorization& ab) {
  for (const auto* s : {&ab.a, &ab.b}) {
    if (!g.is_subgroup(*s)) throw std::invalid_argument("factor is not a subgroup");
    if (!commute_within(g, *s)) throw std::invalid_argument("factor is not abelian");
  }
  if (product_size(g, ab.a, ab.b) != static_cast<std::size_t>(g.order())) {
    throw std::invalid_argument("AB does not cover the group");
  }
}

ABTheoremReport check_ab_theorem(const FiniteGroupTable& g, const AbelianFactorization& ab, const FiniteField& field,
                                 const Caps& caps) {
  validate_abelian_factorization(g, ab);
  const std::size_t n = static_cast<std::size_t>(g.order());
  ABTheoremReport report;
  report.group = g.name();
  report.q = field.q();

  // x -> a x and x -> x b^{-1} commute; with AB = G they generate an abelian
  // transitive, hence regular, group.
  std::vector<Permutation> gens;
  for (int a : ab.a) gens.push_back(g.left_regular(a));
  for (int b : ab.b) gens.push_back(g.right_regular(b));
  const auto k = PermGroupSmall::closure(n, gens, caps.max_group_elements);
  const bool k_ok = k.order() == n && k.is_abelian() && k.is_regular();

  const GroupAlgebra algebra(field, g);
  const auto ideals = enumerate_ideals(algebra, Sidedness::two_sided, caps);
  report.ideals = ideals.size();
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    const auto& ideal = ideals[i];
    const std::string tag = "ideal " + std::to_string(i) + " (dimension " + std::to_string(ideal.dimension()) + ")";
    bool certified = k_ok;
    for (const auto& s : k.generators()) certified = certified && permute(ideal, s) == ideal;
    if (certified) {
      ++report.by_certificate;
    } else {
      report.violations.push_back(tag + ": <L_A, R_B> is not an abelian regular subgroup of PAut");
    }
    if (n <= caps.max_length) {
      try {
        if (is_abelian_group_code(ideal, caps)) {
          ++report.by_search;
        } else {
          report.violations.push_back(tag + ": no abelian regular subgroup in PAut");
        }
      } catch (const CapExceeded&) {
        // PAut too large to enumerate; the certificate alone decides.
      }
    }
  }
  return report;
}

}  // namespace gcode
