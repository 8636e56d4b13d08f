#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gcode/caps.hpp"
#include "gcode/gf.hpp"
#include "gcode/perm.hpp"

namespace gcode {

// Incrementally maintained reduced row-echelon basis of a subspace of F^n.
class Echelon {
 public:
  Echelon(FiniteField field, std::size_t length);

  // Reduces v against the basis in place; true iff the result is zero.
  bool reduce(Vec& v) const;
  bool contains(std::span<const Rep> v) const;
  // Adds v to the span; true iff the dimension grew.
  bool insert(std::span<const Rep> v);

  std::size_t rank() const { return rows_.size(); }
  std::size_t length() const { return length_; }
  const FiniteField& field() const { return field_; }
  // Rows of the reduced row-echelon form, ordered by pivot column.
  std::vector<Vec> rref() const;
  std::vector<std::size_t> pivots() const;

 private:
  FiniteField field_;
  std::size_t length_;
  std::vector<Vec> rows_;  // each normalized to 1 at its pivot and zero at other pivots
  std::vector<std::size_t> pivots_;
};

// A linear code over F_q held in canonical form: the reduced row-echelon
// generator matrix of the row space.
class LinearCode {
 public:
  static LinearCode from_rows(const FiniteField& field, std::size_t length, std::span<const Vec> rows);
  static LinearCode zero(const FiniteField& field, std::size_t length);
  static LinearCode full(const FiniteField& field, std::size_t length);

  const FiniteField& field() const { return field_; }
  std::size_t length() const { return length_; }
  std::size_t dimension() const { return gen_.size(); }
  const std::vector<Vec>& generator() const { return gen_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(std::span<const Rep> x) const;
  // Codeword for a coefficient vector of length dimension().
  Vec encode(std::span<const Rep> coefficients) const;

  friend bool operator==(const LinearCode& a, const LinearCode& b) {
    return a.field_ == b.field_ && a.length_ == b.length_ && a.gen_ == b.gen_;
  }

 private:
  LinearCode(FiniteField field, std::size_t length, std::vector<Vec> gen, std::vector<std::size_t> pivots)
      : field_(std::move(field)), length_(length), gen_(std::move(gen)), pivots_(std::move(pivots)) {}

  FiniteField field_;
  std::size_t length_;
  std::vector<Vec> gen_;
  std::vector<std::size_t> pivots_;
};

LinearCode dual(const LinearCode& c);
LinearCode permute(const LinearCode& c, const Permutation& s);
inline bool equal(const LinearCode& a, const LinearCode& b) { return a == b; }
// Span of two codes of the same length.
LinearCode sum(const LinearCode& a, const LinearCode& b);

std::size_t weight(std::span<const Rep> x);

// Exhaustive minimum nonzero weight; throws CapExceeded if q^k > cap and
// std::domain_error for the zero code.
std::size_t min_distance(const LinearCode& c, std::uint64_t cap = 2000000);
// Every k columns of the generator matrix are independent.
bool is_mds(const LinearCode& c);

// Invariant under every coordinate permutation (PAut = S_n).
bool is_symmetric_invariant(const LinearCode& c);

// Full permutation automorphism group by backtracking. Throws CapExceeded when
// the length exceeds caps.max_length or the group exceeds
// caps.max_group_elements.
PermGroupSmall paut(const LinearCode& c, const Caps& caps = {});

}  // namespace gcode
