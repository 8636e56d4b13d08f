#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gcode/caps.hpp"
#include "gcode/classify.hpp"
#include "gcode/gf.hpp"
#include "gcode/lincode.hpp"
#include "gcode/perm.hpp"

namespace gcode {

// A point of P^1(F_q) in normal form: [x,1] for finite x, [1,0] for infinity.
// Ordering puts finite points first by rep, then infinity.
class ProjectivePoint {
 public:
  ProjectivePoint() = default;
  static ProjectivePoint finite(Rep x) { return ProjectivePoint(x); }
  static ProjectivePoint infinity() { return ProjectivePoint(kInfinity); }
  // Normal form of [x,y]; throws std::invalid_argument for [0,0].
  static ProjectivePoint from_coords(const FiniteField& field, Rep x, Rep y);

  bool is_infinity() const { return rep_ == kInfinity; }
  // The finite coordinate; undefined for infinity.
  Rep value() const { return rep_; }
  // "inf" or the integer rep.
  std::string to_string() const;

  friend auto operator<=>(const ProjectivePoint&, const ProjectivePoint&) = default;

 private:
  static constexpr Rep kInfinity = UINT32_MAX;
  explicit ProjectivePoint(Rep rep) : rep_(rep) {}
  Rep rep_ = 0;
};

// All q + 1 points: the finite ones ascending, then infinity.
std::vector<ProjectivePoint> proj_line(const FiniteField& field);
// (x, 1) or (1, 0).
std::pair<Rep, Rep> coordinatize(ProjectivePoint z);

// theta for the matrix [[a,b],[c,d]] taken as given (no normalization): the
// second coordinate of T(coordinatize(z)) if nonzero, else the first.
Rep theta_of_matrix(const FiniteField& field, const std::array<Rep, 4>& m, ProjectivePoint z);

// An element of PGL_2(F_q), stored by the representative whose first nonzero
// entry in row-major order is 1.
class Homography {
 public:
  // Throws std::invalid_argument when ad - bc = 0.
  Homography(FiniteField field, Rep a, Rep b, Rep c, Rep d);
  static Homography identity(const FiniteField& field) { return Homography(field, 1, 0, 0, 1); }

  const FiniteField& field() const { return field_; }
  const std::array<Rep, 4>& matrix() const { return m_; }

  ProjectivePoint operator()(ProjectivePoint z) const;
  // theta of the normalized representative; other representatives scale it
  // by a constant.
  Rep theta(ProjectivePoint z) const { return theta_of_matrix(field_, m_, z); }
  Homography inverse() const;
  // (s * t)(z) = s(t(z)).
  friend Homography operator*(const Homography& s, const Homography& t);

  // "[[a,b],[c,d]]".
  std::string to_string() const;

  friend bool operator==(const Homography& s, const Homography& t) { return s.m_ == t.m_; }
  friend auto operator<=>(const Homography& s, const Homography& t) { return s.m_ <=> t.m_; }

 private:
  FiniteField field_;
  std::array<Rep, 4> m_;
};

// Every element of PGL_2(F_q), q^3 - q of them, sorted by matrix. Throws
// CapExceeded when q > caps.max_pgl_field.
std::vector<Homography> pgl2(const FiniteField& field, const Caps& caps = {});
// {T : T(X) = X}, sorted.
std::vector<Homography> setwise_stabilizer(const FiniteField& field, std::span<const ProjectivePoint> x,
                                           const Caps& caps = {});

// A map f : L -> F*, with values aligned to the domain.
struct ScalingMap {
  std::vector<ProjectivePoint> domain;
  Vec values;

  // Throws std::invalid_argument on size mismatch, repeated points, zero or
  // out-of-field values.
  void validate(const FiniteField& field) const;
  // Throws std::out_of_range when z is not in the domain.
  Rep operator()(ProjectivePoint z) const;
};

ScalingMap constant_map(std::span<const ProjectivePoint> domain, Rep c = 1);
// z^m on F* and 1 at 0 and infinity.
ScalingMap power_map(const FiniteField& field, std::span<const ProjectivePoint> domain, long long m);
// F* in the order 1, xi, xi^2, ..., xi^{q-2} for the canonical primitive xi.
std::vector<ProjectivePoint> multiplicative_group_points(const FiniteField& field);
// F in ascending rep order.
std::vector<ProjectivePoint> field_points(const FiniteField& field);
// f_m(z) = z^m on F*.
ScalingMap f_m_map(const FiniteField& field, long long m);
// f_{m,m2}(xi^{2t+r}) = xi^{2tm + r m2}, r in {0,1}; throws
// std::invalid_argument for even q.
ScalingMap f_mm_map(const FiniteField& field, long long m, long long m2);

struct CauchySpec {
  FiniteField field;
  std::size_t k = 0;
  std::vector<ProjectivePoint> alpha;  // location vector
  ScalingMap f;                        // defined exactly on the entries of alpha

  std::size_t length() const { return alpha.size(); }
  // Throws std::invalid_argument unless 1 <= k < n, alpha is duplicate-free
  // and f is a valid scaling map on exactly the entries of alpha.
  void validate() const;
};

// Rows (f(a_j) P_i(a_j))_j for P_i = X^i Y^{k-1-i}.
LinearCode cauchy_code(const CauchySpec& spec);

// f2(T z) = lambda theta_T(z)^{k-1} f1(z) on the domain of f1, for a single
// lambda in F*. Requires T to map the domain of f1 into that of f2.
bool scaling_compatible(const Homography& t, std::size_t k, const ScalingMap& f1, const ScalingMap& f2);

// Gamma_{k,f}: elements of the setwise stabilizer of the domain satisfying
// f o T = lambda theta_T^{k-1} f. Sorted.
std::vector<Homography> gamma_kf(const FiniteField& field, std::size_t k, const ScalingMap& f, const Caps& caps = {});

// The coordinate permutation i -> j where T(alpha_i) = alpha_j.
Permutation index_permutation(const Homography& t, std::span<const ProjectivePoint> alpha);

// Image of Gamma_{k,f} in S_n; equals PAut of the code for 2 <= k <= n - 2.
// Throws std::invalid_argument outside that range.
PermGroupSmall paut_via_gamma(const CauchySpec& spec, const Caps& caps = {});

// A T with alpha2_i = T(alpha1_i) for all i and a compatible scaling, which
// certifies equality of the two codes; nullopt if none exists.
std::optional<Homography> codes_equal(const CauchySpec& a, const CauchySpec& b, const Caps& caps = {});
// As codes_equal but only T(L1) = L2 is required, which certifies that the
// codes are permutation equivalent.
std::optional<Homography> permutation_equivalent(const CauchySpec& a, const CauchySpec& b, const Caps& caps = {});

// The same code written with location set target (|target| = n, complements
// of size at most 3): alpha2 = T o alpha and f2(T z) = theta_T(z)^{k-1} f(z).
// The identity is used when the sets already agree.
CauchySpec relocate(const CauchySpec& spec, std::span<const ProjectivePoint> target, const Caps& caps = {});

// Regular subgroups of paut_via_gamma, up to conjugacy, with derived flags.
struct CauchyGroupStructure {
  std::size_t gamma_order = 0;
  std::vector<Witness> witnesses;
  bool is_left_group_code = false;
  bool has_abelian_witness = false;
  bool has_cyclic_witness = false;
  bool all_witnesses_elementary_abelian = false;  // vacuous when there is none
  bool all_witnesses_cyclic = false;              // vacuous when there is none
};
CauchyGroupStructure cauchy_group_structure(const CauchySpec& spec, const Caps& caps = {});

bool is_elementary_abelian(const PermGroupSmall& g);
bool is_dihedral(const PermGroupSmall& g);

// Length q. A left group code iff the scaling becomes constant after moving
// the location set to F; then every witness is elementary abelian of order q.
struct LengthQReport {
  CauchySpec relocated;            // location set F
  bool scaling_constant = false;   // the predicted verdict
  CauchyGroupStructure structure;  // the computed verdict
  bool consistent = false;         // prediction matches computation
  std::vector<std::string> notes;
};
LengthQReport classify_length_q(const CauchySpec& spec, const Caps& caps = {});

// Length q - 1, 2 <= k <= q - 3. After moving to F* = (1, xi, ...) and
// scaling so f(1) = 1: cyclic iff f = f_m; dihedral iff q is odd and
// f = f_{m,m2} with 4m + 2(k-1) = 2 m2 + k - 1 = 0 mod (q-1).
struct LengthQm1Report {
  CauchySpec normalized;  // location F*, f(1) = 1
  Rep normalization = 1;  // the scalar that was divided out
  bool predicted_cyclic = false;
  long long m = 0;  // f(xi) = xi^m when predicted_cyclic
  bool predicted_dihedral = false;
  long long dm = 0, dm2 = 0;  // f = f_{dm,dm2} when predicted_dihedral
  CauchyGroupStructure structure;
  bool computed_cyclic = false;
  bool computed_dihedral = false;
  bool consistent = false;
  std::vector<std::string> notes;
};
LengthQm1Report classify_length_qm1(const CauchySpec& spec, const Caps& caps = {});

// E_m and E_{m2} (dimension k, location F*) are permutation equivalent iff
// m2 = m or m2 = -m - (k-1) mod (q-1).
bool em_equivalent(std::uint32_t q, std::size_t k, long long m, long long m2);

struct FamilyMember {
  long long m = 0;   // f_{m,m2}, exponents reduced mod q - 1
  long long m2 = 0;
  bool reduces_to_power_map = false;  // f_{m,m2} = f_{m2}
  CauchySpec spec;
};
// Scaling maps f_{m,m2} on F* meeting the dihedral congruences, one per
// distinct map: four when q = 1 mod 4, two when q = 3 mod 4. Requires q and
// k odd and 2 <= k <= q - 3.
std::vector<FamilyMember> dihedral_family(const FiniteField& field, std::size_t k);

// Length q - 2, 2 <= k <= q - 4. Every Gamma_{k,f} permutes the 3-point
// complement, so a left group code needs q - 2 | 6, i.e. q = 8 (S_3).
struct LengthQm2Report {
  std::uint32_t q = 0;
  std::size_t k = 0;
  bool divisibility_allows = false;         // (q - 2) | 6
  bool stabilizers_checked = false;         // every complement examined
  bool stabilizer_orders_divide_6 = false;  // |Gamma_L| divides 6 for all of them
  std::size_t location_sets_searched = 0;
  std::optional<CauchySpec> witness;  // a left group code of length q - 2
  std::string witness_type;
  std::vector<std::string> notes;
};
// For q = 8 searches every 6-subset and every scaling with f(first) = 1.
LengthQm2Report length_qm2_check(const FiniteField& field, std::size_t k, const Caps& caps = {});

// Constant scaling, 2 <= k <= n - 2.
struct DivisibilityReport {
  std::size_t n = 0;
  std::uint32_t q = 0;
  bool divides = false;         // n | q(q-1)
  bool gamma_fixes_infinity = false;  // Gamma_{k,1} inside the affine group
  CauchyGroupStructure structure;
  bool consistent = false;  // left group code implies divides
  bool coprime_to_q_minus_1 = false;  // then witnesses must be elementary abelian
  bool coprime_to_q = false;          // then witnesses must be cyclic
  std::string subfield_pattern;       // "additive", "multiplicative" or ""
  bool corollaries_hold = false;
  std::vector<std::string> notes;
};
DivisibilityReport location_divisibility_check(const CauchySpec& spec, const Caps& caps = {});

// Everything the command line reports for one spec: the code, its MDS
// check, and the classification that applies to its length and dimension.
struct CauchyAnalysis {
  explicit CauchyAnalysis(LinearCode c) : code(std::move(c)) {}

  LinearCode code;
  bool mds = false;
  std::optional<std::size_t> min_distance;  // when q^k <= caps.max_codewords
  std::optional<CauchyGroupStructure> structure;  // 2 <= k <= n - 2
  std::optional<LengthQReport> length_q;
  std::optional<LengthQm1Report> length_qm1;
  std::optional<DivisibilityReport> divisibility;  // constant scaling
  std::optional<OneDimReport> one_dim;  // k = 1 (the code) or k = n - 1 (its dual)
  std::vector<std::string> notes;
};
CauchyAnalysis analyze_cauchy(const CauchySpec& spec, const Caps& caps = {});

}  // namespace gcode
