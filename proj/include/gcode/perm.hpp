#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gcode/gf.hpp"

namespace gcode {

// A permutation of {0, ..., n-1}. Text I/O uses 1-based disjoint-cycle
// notation, e.g. "(1,2,3)(4,5,6)"; the identity prints as "()".
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);  // identity
  explicit Permutation(std::vector<int> images);

  static Permutation from_cycles(std::size_t degree, std::string_view text);
  static Permutation cycle(std::size_t degree, std::span<const int> points);  // 0-based points

  std::size_t degree() const { return images_.size(); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  bool has_fixed_point() const;
  Permutation inverse() const;
  int order() const;
  std::string to_cycles() const;

  // (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<int> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& a);

// result[s(i)] = x[i]: the linear extension of e_i -> e_{s(i)}.
Vec apply_to_word(const Permutation& s, std::span<const Rep> x);

// A permutation group held as its full sorted element list.
class PermGroupSmall {
 public:
  // Breadth-first closure. Throws CapExceeded when the group has more than
  // `cap` elements.
  static PermGroupSmall closure(std::size_t degree, std::span<const Permutation> generators, std::size_t cap);
  static PermGroupSmall closure(std::span<const Permutation> generators, std::size_t cap);
  static PermGroupSmall trivial(std::size_t degree);
  static PermGroupSmall symmetric(std::size_t degree, std::size_t cap);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  bool contains(const Permutation& p) const;
  // Position of p in elements(); p must belong to the group.
  std::size_t index_of(const Permutation& p) const;
  bool contains_all(std::span<const Permutation> ps) const;
  bool is_subgroup_of(const PermGroupSmall& other) const;

  bool is_transitive() const;
  bool is_regular() const;
  bool is_abelian() const;
  bool is_cyclic() const;

  friend bool operator==(const PermGroupSmall& a, const PermGroupSmall& b) {
    return a.degree_ == b.degree_ && a.elements_ == b.elements_;
  }

 private:
  PermGroupSmall(std::size_t degree, std::vector<Permutation> elements, std::vector<Permutation> generators)
      : degree_(degree), elements_(std::move(elements)), generators_(std::move(generators)) {}

  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
  std::vector<Permutation> generators_;
};

// Greedy generating set: repeatedly adjoin the smallest element not yet
// generated. Deterministic for a given element set.
std::vector<Permutation> small_generating_set(const PermGroupSmall& g);

// For regular H, psi(h) = h(i0) is a bijection
// H -> points and sigma_h(i) = psi^{-1}(i)(h(i0)) is an anti-isomorphism of
// H onto its centralizer in S_n.
Permutation anti_iso_sigma(const PermGroupSmall& h_group, int i0, const Permutation& h);
PermGroupSmall centralizer_of_regular(const PermGroupSmall& h_group, int i0 = 0);

// Orbit of point under the group generated by gens.
std::vector<int> orbit(std::span<const Permutation> gens, std::size_t degree, int point);

}  // namespace gcode
