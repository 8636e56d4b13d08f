#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace gcode {

// Integer encoding of an element of F_{p^m}: the residue polynomial
// c_0 + c_1 x + ... + c_{m-1} x^{m-1} is stored as sum c_i p^i.
using Rep = std::uint32_t;
using Vec = std::vector<Rep>;

class FiniteField {
 public:
  static constexpr std::uint32_t kDefaultMaxOrder = 4096;

  // F_{p^m} with the lexicographically smallest monic irreducible modulus of
  // degree m (coefficients compared from x^{m-1} down to the constant term).
  static FiniteField make(std::uint32_t p, std::uint32_t m = 1,
                          std::uint32_t max_order = kDefaultMaxOrder);
  // Accepts a prime power q.
  static FiniteField of_order(std::uint32_t q, std::uint32_t max_order = kDefaultMaxOrder);

  std::uint32_t p() const;
  std::uint32_t m() const;
  std::uint32_t q() const;
  // Monic modulus, low degree first (length m + 1); empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const;

  Rep zero() const { return 0; }
  Rep one() const { return 1; }
  bool contains(Rep a) const { return a < q(); }

  Rep add(Rep a, Rep b) const;
  Rep sub(Rep a, Rep b) const;
  Rep neg(Rep a) const;
  Rep mul(Rep a, Rep b) const;
  Rep div(Rep a, Rep b) const;
  Rep inv(Rep a) const;
  Rep pow(Rep a, long long e) const;

  // Smallest-rep element of multiplicative order q - 1.
  Rep primitive_element() const;
  // Discrete log to the base primitive_element(); a must be nonzero.
  std::uint32_t log(Rep a) const;
  // primitive_element()^e, any integer e.
  Rep exp(long long e) const;
  std::uint32_t multiplicative_order(Rep a) const;

  // "p" or "p^m".
  std::string name() const;
  // "p^m" followed by the modulus coefficients (prime fields: just "p").
  std::string describe() const;

  friend bool operator==(const FiniteField& a, const FiniteField& b) {
    return a.impl_ == b.impl_ || (a.p() == b.p() && a.m() == b.m());
  }

 private:
  struct Impl;
  explicit FiniteField(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

bool is_prime(std::uint64_t n);
// (p, m) with q = p^m, or (0, 0) when q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q);

// Value-semantic element carrying its field, for arithmetic at the API edge.
// Bulk code works on Rep/Vec with explicit FiniteField calls.
class FieldElement {
 public:
  FieldElement(FiniteField field, Rep rep);

  const FiniteField& field() const { return field_; }
  Rep rep() const { return rep_; }
  bool is_zero() const { return rep_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement pow(long long e) const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.rep_ == b.rep_;
  }

 private:
  const FiniteField& common(const FieldElement& o) const;

  FiniteField field_;
  Rep rep_;
};

}  // namespace gcode
