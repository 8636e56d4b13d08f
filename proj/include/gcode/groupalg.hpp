#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gcode/caps.hpp"
#include "gcode/gf.hpp"
#include "gcode/group_table.hpp"
#include "gcode/lincode.hpp"
#include "gcode/perm.hpp"

namespace gcode {

// The group algebra FG. An element is a Vec of length |G| whose entry at
// label g is the coefficient of g.
class GroupAlgebra {
 public:
  GroupAlgebra(FiniteField field, FiniteGroupTable group);

  const FiniteField& field() const { return field_; }
  const FiniteGroupTable& group() const { return group_; }
  std::size_t dimension() const { return static_cast<std::size_t>(group_.order()); }

  Vec basis(int g) const;
  Vec mul(std::span<const Rep> a, std::span<const Rep> b) const;
  // g * x and x * g for a group element g.
  Vec left_mul(int g, std::span<const Rep> x) const;
  Vec right_mul(std::span<const Rep> x, int g) const;

 private:
  FiniteField field_;
  FiniteGroupTable group_;
};

enum class Sidedness { left, two_sided };

// A bijection phi from coordinates {0..n-1} to group labels: label[i] = phi(e_i).
class IndexBijection {
 public:
  explicit IndexBijection(std::vector<int> label);
  static IndexBijection identity(std::size_t n);

  std::size_t size() const { return label_.size(); }
  int operator()(std::size_t i) const { return label_[i]; }
  // Coordinate carrying label g.
  std::size_t coordinate(int g) const { return coordinate_[static_cast<std::size_t>(g)]; }
  const std::vector<int>& labels() const { return label_; }

  // phi extended linearly: F^n -> FG, and its inverse.
  Vec to_algebra(std::span<const Rep> x) const;
  Vec from_algebra(std::span<const Rep> a) const;
  LinearCode to_algebra(const LinearCode& c) const;
  LinearCode from_algebra(const LinearCode& ideal) const;

 private:
  std::vector<int> label_;
  std::vector<std::size_t> coordinate_;
};

// For regular H, phi(e_{h(0)}) = h, with h labelled by its index in
// H.elements(), i.e. the labelling of FiniteGroupTable::from_perm_group(H).
IndexBijection regular_subgroup_phi(const PermGroupSmall& h);

// phi(C) is stable under left (and for two_sided also right) multiplication
// by the generators of G.
bool is_left_ideal(const LinearCode& c, const FiniteGroupTable& g, const IndexBijection& phi);
bool is_two_sided_ideal(const LinearCode& c, const FiniteGroupTable& g, const IndexBijection& phi);
bool is_ideal(const LinearCode& ideal, const GroupAlgebra& algebra, Sidedness sided);

// Smallest left (or two-sided) ideal containing gens, in FG coordinates.
LinearCode ideal_generated(const GroupAlgebra& algebra, std::span<const Vec> gens, Sidedness sided,
                           const Caps& caps = {});

// Every left (or two-sided) ideal of FG, sorted by (dimension, generator).
// Each ideal is a sum of principal ideals; principal ideals are computed once
// per orbit of F* x G (x G on the right for two-sided) acting on FG. Throws
// CapExceeded when q^|G| > caps.max_ambient_words.
std::vector<LinearCode> enumerate_ideals(const GroupAlgebra& algebra, Sidedness sided, const Caps& caps = {});

// f_phi(g) is the coordinate permutation i -> phi^{-1}(g phi(e_i)); indexed by label.
std::vector<Permutation> f_phi(const FiniteGroupTable& g, const IndexBijection& phi);

// With H = f_phi(G) and i0 = phi^{-1}(1):
// sigma_h(x) = phi^{-1}(phi(x) f_phi^{-1}(h)) for all h in H and x in F^n.
// Checked on the standard basis, which suffices by linearity.
bool sigma_translation_identity_holds(const FiniteGroupTable& g, const IndexBijection& phi);

// Abelian subgroups A, B with AB = G, as sorted label sets.
struct AbelianFactorization {
  std::vector<int> a;
  std::vector<int> b;
};
// Searches subgroups generated by at most two elements, preferring large A.
std::optional<AbelianFactorization> find_abelian_factorization(const FiniteGroupTable& g);
// Throws std::invalid_argument unless A and B are abelian subgroups with AB = G.
void validate_abelian_factorization(const FiniteGroupTable& g, const AbelianFactorization& ab);

struct ABTheoremReport {
  std::string group;
  std::uint32_t q = 0;
  std::size_t ideals = 0;        // two-sided ideals examined
  std::size_t by_certificate = 0;  // abelian regular subgroup <L_A, R_B> verified inside PAut
  std::size_t by_search = 0;       // abelian regular subgroup found by the generic PAut search
  std::vector<std::string> violations;
  bool passed() const { return violations.empty(); }
};

// Every two-sided ideal of F_q G must be an abelian group code. For each
// ideal the commuting group generated by left multiplication by A and right
// multiplication by B is checked to be abelian, regular and inside PAut; when
// |G| <= caps.max_length the generic abelian-group-code search is run as well.
ABTheoremReport check_ab_theorem(const FiniteGroupTable& g, const AbelianFactorization& ab, const FiniteField& field,
                                 const Caps& caps = {});

}  // namespace gcode
