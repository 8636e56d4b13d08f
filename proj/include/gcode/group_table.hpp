#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gcode/perm.hpp"

namespace gcode {

// An abstract finite group given by its Cayley table. Elements are labelled
// 0..n-1 and label 0 is the identity.
class FiniteGroupTable {
 public:
  // Validates the group axioms (associativity exhaustively for n <= 64).
  FiniteGroupTable(std::string name, int order, std::vector<int> table, std::vector<int> generators,
                   std::vector<std::string> element_names = {});

  // Labels follow the sorted element list of g (identity first).
  static FiniteGroupTable from_perm_group(const PermGroupSmall& g, std::string name = "");

  const std::string& name() const { return name_; }
  int order() const { return order_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a * order_ + b)]; }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  const std::vector<int>& generators() const { return generators_; }
  std::string element_name(int a) const;

  int element_order(int a) const;
  int centralizer_size(int a) const;
  bool is_abelian() const;
  bool is_cyclic() const;
  std::vector<int> center() const;

  // Sorted labels of the subgroup generated by gens.
  std::vector<int> subgroup(std::span<const int> gens) const;
  bool is_subgroup(std::span<const int> labels) const;
  bool is_normal(std::span<const int> subgroup_labels) const;
  std::vector<std::vector<int>> normal_subgroups() const;
  // G/N cyclic for a normal subgroup N.
  bool quotient_is_cyclic(std::span<const int> normal_labels) const;

  // Left regular action g: x -> g x, as a permutation of labels.
  Permutation left_regular(int g) const;
  // Right action g: x -> x g^{-1}.
  Permutation right_regular(int g) const;

  FiniteGroupTable direct_product(const FiniteGroupTable& other, std::string name = "") const;

 private:
  std::string name_;
  int order_;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<int> generators_;
  std::vector<std::string> element_names_;
};

// Group spec mini-language:
//   C<n>            cyclic of order n
//   D<n>            dihedral of order n (n even)
//   E<p>^<m>        elementary abelian p-group of order p^m
//   S<k>            symmetric group on k letters
//   A:<d1>x<d2>...  abelian product C_{d1} x C_{d2} x ...
//   MC:<n>,<m>,<r>  <a,b | a^n = b^m = 1, b a b^-1 = a^r>, r^m = 1 mod n
//   Q8, A4          quaternion group, alternating group on 4 letters
//   G X H (or G × H) direct product
// Throws ParseError on malformed input.
FiniteGroupTable group_from_spec(std::string_view spec);

// An isomorphism as a label map G1 -> G2, or nullopt. Throws CapExceeded if
// the order exceeds `bound`.
std::optional<std::vector<int>> are_isomorphic(const FiniteGroupTable& g1, const FiniteGroupTable& g2,
                                               std::size_t bound = 64);
std::optional<std::vector<int>> are_isomorphic(const PermGroupSmall& g1, const PermGroupSmall& g2,
                                               std::size_t bound = 64);
std::optional<std::vector<int>> are_isomorphic(const PermGroupSmall& g1, const FiniteGroupTable& g2,
                                               std::size_t bound = 64);

constexpr int kMaxTabulatedOrder = 13;

// Every group of order n up to isomorphism, for 1 <= n <= 13, named by the
// spec string that builds it.
const std::vector<FiniteGroupTable>& groups_of_order(int n);

// Name of the isomorphism type from the built-in list, else "order-<n>".
std::string identify_group(const FiniteGroupTable& g);
std::string identify_group(const PermGroupSmall& g);

}  // namespace gcode
