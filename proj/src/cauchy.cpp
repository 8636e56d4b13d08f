#include "gcode/cauchy.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "gcode/error.hpp"

namespace gcode {

namespace {

long long mod(long long a, long long n) {
  const long long r = a % n;
  return r < 0 ? r + n : r;
}

void check_pgl_cap(const FiniteField& field, const Caps& caps) {
  if (field.q() > caps.max_pgl_field) {
    throw CapExceeded("PGL_2 enumeration limited to q <= " + std::to_string(caps.max_pgl_field));
  }
}

std::vector<ProjectivePoint> sorted_points(std::span<const ProjectivePoint> pts) {
  std::vector<ProjectivePoint> out(pts.begin(), pts.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool maps_set_onto(const Homography& t, std::span<const ProjectivePoint> from,
                   const std::vector<ProjectivePoint>& to_sorted) {
  for (const auto& z : from) {
    if (!std::binary_search(to_sorted.begin(), to_sorted.end(), t(z))) return false;
  }
  return true;
}

void check_k_regime(const CauchySpec& spec) {
  spec.validate();
  if (spec.k < 2 || spec.k + 2 > spec.length()) {
    throw std::invalid_argument("the PGL_2 description needs 2 <= k <= n - 2");
  }
}

void check_comparable(const CauchySpec& a, const CauchySpec& b) {
  check_k_regime(a);
  check_k_regime(b);
  if (!(a.field == b.field) || a.k != b.k || a.length() != b.length()) {
    throw std::invalid_argument("Cauchy specs differ in field, dimension or length");
  }
}

CauchySpec spec_on(const FiniteField& field, std::size_t k, ScalingMap f) {
  CauchySpec s{field, k, f.domain, std::move(f)};
  s.validate();
  return s;
}

}  // namespace

ProjectivePoint ProjectivePoint::from_coords(const FiniteField& field, Rep x, Rep y) {
  if (y != 0) return finite(field.div(x, y));
  if (x != 0) return infinity();
  throw std::invalid_argument("[0,0] is not a projective point");
}

std::string ProjectivePoint::to_string() const { return is_infinity() ? "inf" : std::to_string(rep_); }

std::vector<ProjectivePoint> proj_line(const FiniteField& field) {
  auto out = field_points(field);
  out.push_back(ProjectivePoint::infinity());
  return out;
}

std::pair<Rep, Rep> coordinatize(ProjectivePoint z) {
  return z.is_infinity() ? std::pair<Rep, Rep>{1, 0} : std::pair<Rep, Rep>{z.value(), 1};
}

Rep theta_of_matrix(const FiniteField& field, const std::array<Rep, 4>& m, ProjectivePoint z) {
  const auto [x, y] = coordinatize(z);
  const Rep second = field.add(field.mul(m[2], x), field.mul(m[3], y));
  if (second != 0) return second;
  return field.add(field.mul(m[0], x), field.mul(m[1], y));
}

Homography::Homography(FiniteField field, Rep a, Rep b, Rep c, Rep d) : field_(std::move(field)), m_{a, b, c, d} {
  for (Rep x : m_) {
    if (!field_.contains(x)) throw std::invalid_argument("matrix entry outside the field");
  }
  if (field_.sub(field_.mul(a, d), field_.mul(b, c)) == 0) throw std::invalid_argument("singular matrix");
  const Rep lead = *std::find_if(m_.begin(), m_.end(), [](Rep x) { return x != 0; });
  const Rep s = field_.inv(lead);
  for (Rep& x : m_) x = field_.mul(x, s);
}

ProjectivePoint Homography::operator()(ProjectivePoint z) const {
  const auto [x, y] = coordinatize(z);
  const auto& f = field_;
  return ProjectivePoint::from_coords(f, f.add(f.mul(m_[0], x), f.mul(m_[1], y)),
                                      f.add(f.mul(m_[2], x), f.mul(m_[3], y)));
}

Homography Homography::inverse() const {
  return Homography(field_, m_[3], field_.neg(m_[1]), field_.neg(m_[2]), m_[0]);
}

Homography operator*(const Homography& s, const Homography& t) {
  const auto& f = s.field_;
  const auto& a = s.m_;
  const auto& b = t.m_;
  return Homography(f, f.add(f.mul(a[0], b[0]), f.mul(a[1], b[2])), f.add(f.mul(a[0], b[1]), f.mul(a[1], b[3])),
                    f.add(f.mul(a[2], b[0]), f.mul(a[3], b[2])), f.add(f.mul(a[2], b[1]), f.mul(a[3], b[3])));
}

std::string Homography::to_string() const {
  return "[[" + std::to_string(m_[0]) + "," + std::to_string(m_[1]) + "],[" + std::to_string(m_[2]) + "," +
         std::to_string(m_[3]) + "]]";
}

std::vector<Homography> pgl2(const FiniteField& field, const Caps& caps) {
  check_pgl_cap(field, caps);
  const Rep q = field.q();
  std::vector<Homography> out;
  out.reserve(static_cast<std::size_t>(q) * q * q);
  // Leading entry 1: either a = 1, or a = 0 and b = 1.
  for (Rep c = 1; c < q; ++c) {
    for (Rep d = 0; d < q; ++d) out.emplace_back(field, 0, 1, c, d);
  }
  for (Rep b = 0; b < q; ++b) {
    for (Rep c = 0; c < q; ++c) {
      for (Rep d = 0; d < q; ++d) {
        if (d != field.mul(b, c)) out.emplace_back(field, 1, b, c, d);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Homography> setwise_stabilizer(const FiniteField& field, std::span<const ProjectivePoint> x,
                                           const Caps& caps) {
  const auto target = sorted_points(x);
  std::vector<Homography> out;
  for (auto& t : pgl2(field, caps)) {
    if (maps_set_onto(t, x, target)) out.push_back(std::move(t));
  }
  return out;
}

void ScalingMap::validate(const FiniteField& field) const {
  if (domain.size() != values.size()) throw std::invalid_argument("scaling map domain and values differ in size");
  const auto sorted = sorted_points(domain);
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("scaling map domain has repeated points");
  }
  for (const auto& z : domain) {
    if (!z.is_infinity() && !field.contains(z.value())) throw std::invalid_argument("point outside the field");
  }
  for (Rep v : values) {
    if (v == 0 || !field.contains(v)) throw std::invalid_argument("scaling values must be nonzero field elements");
  }
}

Rep ScalingMap::operator()(ProjectivePoint z) const {
  const auto it = std::find(domain.begin(), domain.end(), z);
  if (it == domain.end()) throw std::out_of_range("point " + z.to_string() + " is not in the scaling map domain");
  return values[static_cast<std::size_t>(it - domain.begin())];
}

ScalingMap constant_map(std::span<const ProjectivePoint> domain, Rep c) {
  return ScalingMap{{domain.begin(), domain.end()}, Vec(domain.size(), c)};
}

ScalingMap power_map(const FiniteField& field, std::span<const ProjectivePoint> domain, long long m) {
  ScalingMap f{{domain.begin(), domain.end()}, {}};
  for (const auto& z : domain) {
    f.values.push_back(z.is_infinity() || z.value() == 0 ? 1 : field.pow(z.value(), m));
  }
  return f;
}

std::vector<ProjectivePoint> multiplicative_group_points(const FiniteField& field) {
  std::vector<ProjectivePoint> out;
  for (std::uint32_t i = 0; i + 1 < field.q(); ++i) out.push_back(ProjectivePoint::finite(field.exp(i)));
  return out;
}

std::vector<ProjectivePoint> field_points(const FiniteField& field) {
  std::vector<ProjectivePoint> out;
  for (Rep x = 0; x < field.q(); ++x) out.push_back(ProjectivePoint::finite(x));
  return out;
}

ScalingMap f_m_map(const FiniteField& field, long long m) {
  return power_map(field, multiplicative_group_points(field), m);
}

ScalingMap f_mm_map(const FiniteField& field, long long m, long long m2) {
  if (field.q() % 2 == 0) throw std::invalid_argument("f_{m,m'} needs odd q");
  ScalingMap f{multiplicative_group_points(field), {}};
  for (long long e = 0; e + 1 < field.q(); ++e) f.values.push_back(field.exp((e / 2) * 2 * m + (e % 2) * m2));
  return f;
}

void CauchySpec::validate() const {
  const std::size_t n = alpha.size();
  if (k < 1 || k >= n) throw std::invalid_argument("Cauchy code needs 1 <= k < n");
  f.validate(field);
  const auto a = sorted_points(alpha);
  if (std::adjacent_find(a.begin(), a.end()) != a.end()) throw std::invalid_argument("location vector has repeated entries");
  if (sorted_points(f.domain) != a) throw std::invalid_argument("scaling map must be defined exactly on the location set");
  for (const auto& z : alpha) {
    if (!z.is_infinity() && !field.contains(z.value())) throw std::invalid_argument("location outside the field");
  }
}

LinearCode cauchy_code(const CauchySpec& spec) {
  spec.validate();
  const auto& field = spec.field;
  const std::size_t n = spec.length();
  std::vector<Vec> rows(spec.k, Vec(n));
  for (std::size_t j = 0; j < n; ++j) {
    const auto [x, y] = coordinatize(spec.alpha[j]);
    const Rep s = spec.f(spec.alpha[j]);
    for (std::size_t i = 0; i < spec.k; ++i) {
      const auto e = static_cast<long long>(i);
      rows[i][j] = field.mul(s, field.mul(field.pow(x, e), field.pow(y, static_cast<long long>(spec.k) - 1 - e)));
    }
  }
  return LinearCode::from_rows(field, n, rows);
}

bool scaling_compatible(const Homography& t, std::size_t k, const ScalingMap& f1, const ScalingMap& f2) {
  const auto& field = t.field();
  std::optional<Rep> lambda;
  for (std::size_t i = 0; i < f1.domain.size(); ++i) {
    const auto z = f1.domain[i];
    const auto it = std::find(f2.domain.begin(), f2.domain.end(), t(z));
    if (it == f2.domain.end()) return false;
    const Rep image = f2.values[static_cast<std::size_t>(it - f2.domain.begin())];
    const Rep twisted = field.mul(field.pow(t.theta(z), static_cast<long long>(k) - 1), f1.values[i]);
    const Rep ratio = field.div(image, twisted);
    if (!lambda) lambda = ratio;
    else if (*lambda != ratio) return false;
  }
  return true;
}

std::vector<Homography> gamma_kf(const FiniteField& field, std::size_t k, const ScalingMap& f, const Caps& caps) {
  f.validate(field);
  std::vector<Homography> out;
  for (auto& t : setwise_stabilizer(field, f.domain, caps)) {
    if (scaling_compatible(t, k, f, f)) out.push_back(std::move(t));
  }
  return out;
}

Permutation index_permutation(const Homography& t, std::span<const ProjectivePoint> alpha) {
  std::map<ProjectivePoint, int> index;
  for (std::size_t i = 0; i < alpha.size(); ++i) index.emplace(alpha[i], static_cast<int>(i));
  std::vector<int> images(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    const auto it = index.find(t(alpha[i]));
    if (it == index.end()) throw std::invalid_argument("homography does not preserve the location set");
    images[i] = it->second;
  }
  return Permutation(std::move(images));
}

PermGroupSmall paut_via_gamma(const CauchySpec& spec, const Caps& caps) {
  check_k_regime(spec);
  const std::size_t n = spec.length();
  std::vector<Permutation> perms;
  for (const auto& t : gamma_kf(spec.field, spec.k, spec.f, caps)) perms.push_back(index_permutation(t, spec.alpha));
  // Gamma_{k,f} is a group acting faithfully (n >= 3), so the images are closed.
  const auto all = PermGroupSmall::closure(n, perms, perms.size());
  const auto gens = small_generating_set(all);
  return PermGroupSmall::closure(n, gens, perms.size());
}

std::optional<Homography> codes_equal(const CauchySpec& a, const CauchySpec& b, const Caps& caps) {
  check_comparable(a, b);
  for (const auto& t : pgl2(a.field, caps)) {
    bool moves = true;
    for (std::size_t i = 0; i < a.length() && moves; ++i) moves = t(a.alpha[i]) == b.alpha[i];
    if (moves && scaling_compatible(t, a.k, a.f, b.f)) return t;
  }
  return std::nullopt;
}

std::optional<Homography> permutation_equivalent(const CauchySpec& a, const CauchySpec& b, const Caps& caps) {
  check_comparable(a, b);
  const auto target = sorted_points(b.alpha);
  for (const auto& t : pgl2(a.field, caps)) {
    if (maps_set_onto(t, a.alpha, target) && scaling_compatible(t, a.k, a.f, b.f)) return t;
  }
  return std::nullopt;
}

CauchySpec relocate(const CauchySpec& spec, std::span<const ProjectivePoint> target, const Caps& caps) {
  spec.validate();
  const auto& field = spec.field;
  const auto to = sorted_points(target);
  if (to.size() != spec.length() || std::adjacent_find(to.begin(), to.end()) != to.end()) {
    throw std::invalid_argument("target must be a set with as many points as the location vector");
  }
  if (static_cast<std::size_t>(field.q()) + 1 > to.size() + 3) {
    throw std::invalid_argument("relocation needs location sets whose complements have at most 3 points");
  }
  std::optional<Homography> found;
  const auto id = Homography::identity(field);
  if (maps_set_onto(id, spec.alpha, to)) {
    found = id;
  } else {
    for (const auto& t : pgl2(field, caps)) {
      if (maps_set_onto(t, spec.alpha, to)) {
        found = t;
        break;
      }
    }
  }
  if (!found) throw std::logic_error("triple transitivity failed to relocate");
  CauchySpec out{field, spec.k, {}, {}};
  for (const auto& z : spec.alpha) {
    out.alpha.push_back((*found)(z));
    out.f.domain.push_back((*found)(z));
    out.f.values.push_back(field.mul(field.pow(found->theta(z), static_cast<long long>(spec.k) - 1), spec.f(z)));
  }
  return out;
}

bool is_elementary_abelian(const PermGroupSmall& g) {
  if (!g.is_abelian()) return false;
  std::set<int> orders;
  for (const auto& x : g.elements()) {
    if (!x.is_identity()) orders.insert(x.order());
  }
  return orders.size() <= 1 && (orders.empty() || is_prime(static_cast<std::uint64_t>(*orders.begin())));
}

bool is_dihedral(const PermGroupSmall& g) {
  const std::size_t n = g.order();
  if (n < 4 || n % 2 != 0) return false;
  for (const auto& x : g.elements()) {
    if (static_cast<std::size_t>(x.order()) != n / 2) continue;
    const auto x_inv = x.inverse();
    const Permutation one(g.degree());
    std::set<Permutation> rotations;
    Permutation p = one;
    for (std::size_t i = 0; i < n / 2; ++i, p = x * p) rotations.insert(p);
    for (const auto& y : g.elements()) {
      if (!rotations.contains(y) && y * y == one && y * x * y == x_inv) return true;
    }
  }
  return false;
}

CauchyGroupStructure cauchy_group_structure(const CauchySpec& spec, const Caps& caps) {
  CauchyGroupStructure s;
  const auto p = paut_via_gamma(spec, caps);
  s.gamma_order = p.order();
  s.all_witnesses_elementary_abelian = s.all_witnesses_cyclic = true;
  for (auto& h : regular_subgroups(p, SubgroupListing::conjugacy_representatives, caps)) {
    s.has_abelian_witness = s.has_abelian_witness || h.is_abelian();
    s.has_cyclic_witness = s.has_cyclic_witness || h.is_cyclic();
    s.all_witnesses_elementary_abelian = s.all_witnesses_elementary_abelian && is_elementary_abelian(h);
    s.all_witnesses_cyclic = s.all_witnesses_cyclic && h.is_cyclic();
    std::string type = identify_group(h);
    s.witnesses.push_back(Witness{std::move(h), std::move(type)});
  }
  s.is_left_group_code = !s.witnesses.empty();
  return s;
}

LengthQReport classify_length_q(const CauchySpec& spec, const Caps& caps) {
  spec.validate();
  const std::uint32_t q = spec.field.q();
  if (spec.length() != q) throw std::invalid_argument("length must equal q");
  if (spec.k < 2 || spec.k + 2 > q) throw std::invalid_argument("dimension must satisfy 2 <= k <= q - 2");
  LengthQReport r{relocate(spec, field_points(spec.field), caps), false, {}, false, {}};
  const auto& v = r.relocated.f.values;
  r.scaling_constant = std::all_of(v.begin(), v.end(), [&](Rep x) { return x == v.front(); });
  r.structure = cauchy_group_structure(spec, caps);
  const bool types_ok = std::all_of(r.structure.witnesses.begin(), r.structure.witnesses.end(), [&](const Witness& w) {
    return is_elementary_abelian(w.group) && w.group.order() == q;
  });
  r.consistent = r.scaling_constant == r.structure.is_left_group_code && types_ok;
  r.notes.push_back("location set moved to F; a left group code iff the moved scaling map is constant");
  if (r.scaling_constant) r.notes.push_back("equivalent to the parity-check extended narrow-sense Reed-Solomon code");
  r.notes.push_back("only an elementary abelian group of order " + std::to_string(q) + " can occur");
  return r;
}

LengthQm1Report classify_length_qm1(const CauchySpec& spec, const Caps& caps) {
  spec.validate();
  const auto& field = spec.field;
  const std::uint32_t q = field.q();
  const long long order = q - 1;
  if (spec.length() != q - 1) throw std::invalid_argument("length must equal q - 1");
  if (spec.k < 2 || spec.k + 3 > q) throw std::invalid_argument("dimension must satisfy 2 <= k <= q - 3");
  const auto moved = relocate(spec, multiplicative_group_points(field), caps);
  LengthQm1Report r{spec_on(field, spec.k, f_m_map(field, 0)), moved.f(ProjectivePoint::finite(1)), false, 0, false, 0, 0,
                    {}, false, false, false, {}};
  // v[e] = f(xi^e) / f(1).
  Vec v;
  for (const auto& z : r.normalized.alpha) v.push_back(field.div(moved.f(z), r.normalization));
  r.normalized.f.values = v;
  const auto matches = [&](const ScalingMap& g) { return g.values == v; };
  r.m = field.log(v[1]);
  r.predicted_cyclic = matches(f_m_map(field, r.m));
  if (q % 2 == 1) {
    const long long m1 = field.log(v[2 % v.size()]);
    if (m1 % 2 == 0) {
      r.dm = m1 / 2;
      r.dm2 = field.log(v[1]);
      const bool congruences =
          mod(4 * r.dm + 2 * (static_cast<long long>(spec.k) - 1), order) == 0 &&
          mod(2 * r.dm2 + static_cast<long long>(spec.k) - 1, order) == 0;
      r.predicted_dihedral = congruences && matches(f_mm_map(field, r.dm, r.dm2));
    }
  }
  r.structure = cauchy_group_structure(r.normalized, caps);
  bool types_ok = true;
  for (const auto& w : r.structure.witnesses) {
    const bool cyc = w.group.is_cyclic();
    const bool dih = is_dihedral(w.group);
    r.computed_cyclic = r.computed_cyclic || cyc;
    r.computed_dihedral = r.computed_dihedral || dih;
    types_ok = types_ok && (cyc || dih);
  }
  r.consistent = types_ok && r.predicted_cyclic == r.computed_cyclic && r.predicted_dihedral == r.computed_dihedral;
  r.notes.push_back("location set moved to F* = (1, xi, ..., xi^" + std::to_string(q - 2) +
                    ") and scaling divided by f(1) = " + std::to_string(r.normalization));
  r.notes.push_back("only cyclic and dihedral groups of order " + std::to_string(q - 1) + " can occur");
  return r;
}

bool em_equivalent(std::uint32_t q, std::size_t k, long long m, long long m2) {
  const long long order = static_cast<long long>(q) - 1;
  if (order < 1) throw std::invalid_argument("q must be at least 2");
  return mod(m2 - m, order) == 0 || mod(m2 + m + static_cast<long long>(k) - 1, order) == 0;
}

std::vector<FamilyMember> dihedral_family(const FiniteField& field, std::size_t k) {
  const long long q = field.q();
  const long long kk = static_cast<long long>(k);
  if (q % 2 == 0 || k % 2 == 0 || k < 2 || kk + 3 > q) {
    throw std::invalid_argument("dihedral family needs odd q, odd k and 2 <= k <= q - 3");
  }
  const long long order = q - 1;
  // m2 solves 2X + k - 1 = 0 (two classes mod q - 1). 4m + 2(k-1) = 0 fixes 2m
  // mod q - 1 to one value when q = 3 mod 4 and to two values when q = 1 mod 4.
  const long long base = mod((1 - kk) / 2, order);
  const std::vector<long long> m2s{base, mod((q - kk) / 2, order)};
  std::vector<long long> ms{base};
  if (q % 4 == 1) ms.push_back(mod((1 + q - 2 * kk) / 4, order));
  std::vector<FamilyMember> out;
  for (long long m : ms) {
    for (long long m2 : m2s) {
      auto f = f_mm_map(field, m, m2);
      const bool power = f.values == f_m_map(field, m2).values;
      out.push_back(FamilyMember{m, m2, power, spec_on(field, k, std::move(f))});
    }
  }
  return out;
}

LengthQm2Report length_qm2_check(const FiniteField& field, std::size_t k, const Caps& caps) {
  const std::uint32_t q = field.q();
  if (q < 6 || k < 2 || k + 4 > q) throw std::invalid_argument("length q - 2 analysis needs 2 <= k <= q - 4");
  LengthQm2Report r;
  r.q = q;
  r.k = k;
  const std::size_t n = q - 2;
  r.divisibility_allows = 6 % n == 0;
  const auto line = proj_line(field);
  std::vector<std::pair<std::vector<ProjectivePoint>, std::vector<Homography>>> locations;
  if (q <= caps.max_pgl_field) {
    r.stabilizers_checked = true;
    r.stabilizer_orders_divide_6 = true;
    const auto group = pgl2(field, caps);
    for (std::size_t a = 0; a < line.size(); ++a) {
      for (std::size_t b = a + 1; b < line.size(); ++b) {
        for (std::size_t c = b + 1; c < line.size(); ++c) {
          std::vector<ProjectivePoint> loc;
          for (std::size_t i = 0; i < line.size(); ++i) {
            if (i != a && i != b && i != c) loc.push_back(line[i]);
          }
          const std::vector<ProjectivePoint> complement{line[a], line[b], line[c]};
          std::vector<Homography> stab;
          for (const auto& t : group) {
            if (maps_set_onto(t, complement, complement)) stab.push_back(t);
          }
          r.stabilizer_orders_divide_6 = r.stabilizer_orders_divide_6 && 6 % stab.size() == 0;
          locations.emplace_back(std::move(loc), std::move(stab));
        }
      }
    }
  } else {
    r.notes.push_back("q exceeds the PGL_2 cap; complement stabilizers not enumerated");
  }
  if (!r.divisibility_allows) {
    r.notes.push_back(std::to_string(n) + " does not divide 6: no left group Cauchy code of length q - 2");
    return r;
  }
  for (const auto& [loc, stab] : locations) {
    ++r.location_sets_searched;
    if (stab.size() < n) continue;
    // Scalings with f(loc[0]) = 1, odometer over F*.
    ScalingMap f = constant_map(loc, 1);
    std::vector<std::uint32_t> logs(n, 0);
    while (true) {
      std::size_t compatible = 0;
      for (const auto& t : stab) compatible += scaling_compatible(t, k, f, f) ? 1 : 0;
      if (compatible >= n) {
        CauchySpec spec{field, k, loc, f};
        auto s = cauchy_group_structure(spec, caps);
        if (s.is_left_group_code) {
          r.witness_type = s.witnesses.front().iso_type;
          r.witness = std::move(spec);
          r.notes.push_back("left " + r.witness_type + " Cauchy code found by exhaustive search");
          return r;
        }
      }
      std::size_t i = 1;
      while (i < n && logs[i] + 2 == q) {
        logs[i] = 0;
        f.values[i] = 1;
        ++i;
      }
      if (i == n) break;
      f.values[i] = field.exp(++logs[i]);
    }
  }
  r.notes.push_back("search exhausted without a left group code");
  return r;
}

DivisibilityReport location_divisibility_check(const CauchySpec& spec, const Caps& caps) {
  check_k_regime(spec);
  const auto& v = spec.f.values;
  if (!std::all_of(v.begin(), v.end(), [&](Rep x) { return x == v.front(); })) {
    throw std::invalid_argument("divisibility check needs a constant scaling map");
  }
  const auto& field = spec.field;
  DivisibilityReport r;
  r.n = spec.length();
  r.q = field.q();
  r.divides = (static_cast<std::size_t>(r.q) * (r.q - 1)) % r.n == 0;
  const auto gamma = gamma_kf(field, spec.k, spec.f, caps);
  r.gamma_fixes_infinity = std::all_of(gamma.begin(), gamma.end(), [](const Homography& t) { return t.matrix()[2] == 0; });
  r.structure = cauchy_group_structure(spec, caps);
  r.consistent = !r.structure.is_left_group_code || r.divides;
  r.coprime_to_q_minus_1 = std::gcd(r.n, static_cast<std::size_t>(r.q - 1)) == 1;
  r.coprime_to_q = std::gcd(r.n, static_cast<std::size_t>(r.q)) == 1;

  std::set<Rep> finite;
  bool has_infinity = false;
  for (const auto& z : spec.alpha) {
    if (z.is_infinity()) has_infinity = true;
    else finite.insert(z.value());
  }
  const auto closed = [&](const std::set<Rep>& s, bool additive) {
    for (Rep a : s) {
      for (Rep b : s) {
        if (!s.contains(additive ? field.add(a, b) : field.mul(a, b))) return false;
      }
    }
    return true;
  };
  if (!has_infinity && finite.contains(0) && finite.contains(1) && closed(finite, true) && closed(finite, false)) {
    r.subfield_pattern = "additive";
  } else if (!has_infinity && !finite.contains(0) && finite.contains(1) && closed(finite, false)) {
    auto with_zero = finite;
    with_zero.insert(0);
    if (closed(with_zero, true)) r.subfield_pattern = "multiplicative";
  }

  const auto& s = r.structure;
  r.corollaries_hold = r.consistent && r.gamma_fixes_infinity;
  if (r.coprime_to_q_minus_1) r.corollaries_hold = r.corollaries_hold && s.all_witnesses_elementary_abelian;
  if (r.coprime_to_q) r.corollaries_hold = r.corollaries_hold && s.all_witnesses_cyclic;
  const auto any_of = [&](bool (*pred)(const PermGroupSmall&)) {
    return std::any_of(s.witnesses.begin(), s.witnesses.end(), [&](const Witness& w) { return pred(w.group); });
  };
  if (r.subfield_pattern == "additive") {
    r.corollaries_hold = r.corollaries_hold && any_of(+[](const PermGroupSmall& g) { return is_elementary_abelian(g); });
    r.notes.push_back("L is a subfield K: expected a (K,+)-code");
  } else if (r.subfield_pattern == "multiplicative") {
    r.corollaries_hold = r.corollaries_hold && any_of(+[](const PermGroupSmall& g) { return g.is_cyclic(); });
    r.notes.push_back("L is K* for a subfield K: expected a (K*,.)-code");
  }
  if (r.coprime_to_q_minus_1) r.notes.push_back("n coprime to q - 1: witnesses must be elementary abelian");
  if (r.coprime_to_q) r.notes.push_back("n coprime to q: witnesses must be cyclic");
  return r;
}

CauchyAnalysis analyze_cauchy(const CauchySpec& spec, const Caps& caps) {
  spec.validate();
  const auto& field = spec.field;
  const std::size_t n = spec.length(), k = spec.k;
  const std::uint32_t q = field.q();
  CauchyAnalysis a(cauchy_code(spec));
  a.mds = is_mds(a.code);
  double words = 1;
  for (std::size_t i = 0; i < k; ++i) words *= q;
  if (words <= static_cast<double>(caps.max_codewords)) a.min_distance = min_distance(a.code, caps.max_codewords);
  if (k == 1 || k + 1 == n) {
    const auto basis = k == 1 ? a.code : dual(a.code);
    a.one_dim = classify_one_dim(field, basis.generator().front());
    a.notes.push_back(k == 1 ? "k = 1: classified as a one-dimensional code"
                             : "k = n - 1: classified through the one-dimensional dual");
    return a;
  }
  a.structure = cauchy_group_structure(spec, caps);
  if (n == q) {
    a.length_q = classify_length_q(spec, caps);
  } else if (n + 1 == q) {
    if (k + 3 <= q) a.length_qm1 = classify_length_qm1(spec, caps);
    else a.notes.push_back("k = q - 2 at length q - 1 lies outside the cyclic/dihedral classification");
  } else if (n + 2 == q) {
    a.notes.push_back("length q - 2: a left group code forces q = 8 and the group S3");
  }
  const auto& v = spec.f.values;
  if (std::all_of(v.begin(), v.end(), [&](Rep x) { return x == v.front(); })) {
    a.divisibility = location_divisibility_check(spec, caps);
  }
  return a;
}

}  // namespace gcode
