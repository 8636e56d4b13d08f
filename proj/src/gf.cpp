#include "gcode/gf.hpp"

#include <stdexcept>

#include "gcode/error.hpp"

namespace gcode {

namespace {

using Poly = std::vector<std::uint32_t>;  // low degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic divisor, coefficients mod p.
Poly poly_mod(Poly a, const Poly& monic, std::uint32_t p) {
  trim(a);
  const std::size_t d = monic.size() - 1;
  while (a.size() > d) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - d;
    for (std::size_t i = 0; i <= d; ++i) {
      a[shift + i] = (a[shift + i] + p - (lead * monic[i]) % p) % p;
    }
    trim(a);
  }
  return a;
}

Poly digits(std::uint32_t rep, std::uint32_t p, std::uint32_t m) {
  Poly c(m, 0);
  for (std::uint32_t i = 0; i < m; ++i) {
    c[i] = rep % p;
    rep /= p;
  }
  return c;
}

std::uint32_t undigits(const Poly& c, std::uint32_t p) {
  std::uint32_t rep = 0;
  for (std::size_t i = c.size(); i-- > 0;) rep = rep * p + c[i];
  return rep;
}

bool is_irreducible(const Poly& monic, std::uint32_t p) {
  const std::uint32_t m = static_cast<std::uint32_t>(monic.size() - 1);
  for (std::uint32_t d = 1; d <= m / 2; ++d) {
    std::uint32_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint32_t low = 0; low < count; ++low) {
      Poly div = digits(low, p, d);
      div.push_back(1);
      if (poly_mod(monic, div, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q) {
  if (q < 2) return {0, 0};
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t m = 0;
  while (q % p == 0) {
    q /= p;
    ++m;
  }
  if (q != 1) return {0, 0};
  return {static_cast<std::uint32_t>(p), m};
}

struct FiniteField::Impl {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  std::uint32_t q = 0;
  Poly modulus;
  std::vector<Rep> exp_table;  // xi^i for i in [0, 2(q-1))
  std::vector<std::uint32_t> log_table;
  std::vector<Rep> neg_table;
  std::vector<std::uint16_t> add_table;  // only when q <= 256
  Rep primitive = 1;

  Rep slow_mul(Rep a, Rep b) const {
    if (m == 1) return static_cast<Rep>((std::uint64_t{a} * b) % p);
    const Poly x = digits(a, p, m);
    const Poly y = digits(b, p, m);
    Poly prod(2 * m, 0);
    for (std::uint32_t i = 0; i < m; ++i) {
      for (std::uint32_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
    }
    Poly r = poly_mod(prod, modulus, p);
    r.resize(m, 0);
    return undigits(r, p);
  }

  Rep slow_add(Rep a, Rep b) const {
    if (m == 1) return (a + b) % p;
    if (p == 2) return a ^ b;
    Rep out = 0;
    Rep scale = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
      out += ((a % p + b % p) % p) * scale;
      a /= p;
      b /= p;
      scale *= p;
    }
    return out;
  }

  Rep slow_neg(Rep a) const {
    Rep out = 0;
    Rep scale = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
      out += ((p - a % p) % p) * scale;
      a /= p;
      scale *= p;
    }
    return out;
  }
};

FiniteField FiniteField::make(std::uint32_t p, std::uint32_t m, std::uint32_t max_order) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (m < 1) throw std::invalid_argument("field extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > max_order) {
      throw CapExceeded("field order " + std::to_string(p) + "^" + std::to_string(m) + " exceeds bound " +
                        std::to_string(max_order));
    }
  }

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->m = m;
  impl->q = static_cast<std::uint32_t>(q);

  if (m > 1) {
    // Scanning low = 0, 1, ... visits monic polynomials in lexicographic order
    // of (c_{m-1}, ..., c_0).
    for (std::uint32_t low = 0;; ++low) {
      Poly cand = digits(low, p, m);
      cand.push_back(1);
      if (is_irreducible(cand, p)) {
        impl->modulus = std::move(cand);
        break;
      }
    }
  }

  const std::uint32_t qq = impl->q;
  impl->neg_table.resize(qq);
  for (Rep a = 0; a < qq; ++a) impl->neg_table[a] = impl->slow_neg(a);
  if (qq <= 256) {
    impl->add_table.resize(std::size_t{qq} * qq);
    for (Rep a = 0; a < qq; ++a) {
      for (Rep b = 0; b < qq; ++b) impl->add_table[std::size_t{a} * qq + b] = static_cast<std::uint16_t>(impl->slow_add(a, b));
    }
  }

  // Smallest element of order q - 1.
  const std::uint32_t order = qq - 1;
  if (order == 1) {
    impl->primitive = 1;
  } else {
    for (Rep g = 2; g < qq; ++g) {
      Rep x = g;
      std::uint32_t k = 1;
      while (x != 1) {
        x = impl->slow_mul(x, g);
        ++k;
      }
      if (k == order) {
        impl->primitive = g;
        break;
      }
    }
  }
  impl->exp_table.resize(2 * std::size_t{order});
  impl->log_table.assign(qq, 0);
  Rep x = 1;
  for (std::uint32_t i = 0; i < 2 * order; ++i) {
    impl->exp_table[i] = x;
    if (i < order) impl->log_table[x] = i;
    x = impl->slow_mul(x, impl->primitive);
  }
  return FiniteField(std::move(impl));
}

FiniteField FiniteField::of_order(std::uint32_t q, std::uint32_t max_order) {
  const auto [p, m] = prime_power(q);
  if (p == 0) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return make(p, m, max_order);
}

std::uint32_t FiniteField::p() const { return impl_->p; }
std::uint32_t FiniteField::m() const { return impl_->m; }
std::uint32_t FiniteField::q() const { return impl_->q; }
const std::vector<std::uint32_t>& FiniteField::modulus() const { return impl_->modulus; }

Rep FiniteField::add(Rep a, Rep b) const {
  const Impl& f = *impl_;
  if (f.m == 1) {
    const Rep s = a + b;
    return s >= f.p ? s - f.p : s;
  }
  if (f.p == 2) return a ^ b;
  if (!f.add_table.empty()) return f.add_table[std::size_t{a} * f.q + b];
  return f.slow_add(a, b);
}

Rep FiniteField::neg(Rep a) const { return impl_->neg_table[a]; }

Rep FiniteField::sub(Rep a, Rep b) const { return add(a, neg(b)); }

Rep FiniteField::mul(Rep a, Rep b) const {
  if (a == 0 || b == 0) return 0;
  const Impl& f = *impl_;
  return f.exp_table[f.log_table[a] + f.log_table[b]];
}

Rep FiniteField::inv(Rep a) const {
  if (a == 0) throw std::domain_error("inverse of zero in F_" + name());
  const Impl& f = *impl_;
  const std::uint32_t order = f.q - 1;
  return f.exp_table[(order - f.log_table[a]) % order];
}

Rep FiniteField::div(Rep a, Rep b) const {
  if (b == 0) throw std::domain_error("division by zero in F_" + name());
  return mul(a, inv(b));
}

Rep FiniteField::pow(Rep a, long long e) const {
  if (a == 0) {
    if (e == 0) return 1;
    if (e < 0) throw std::domain_error("negative power of zero");
    return 0;
  }
  const long long order = impl_->q - 1;
  long long r = (static_cast<long long>(impl_->log_table[a]) * (e % order)) % order;
  if (r < 0) r += order;
  return impl_->exp_table[static_cast<std::size_t>(r)];
}

Rep FiniteField::primitive_element() const { return impl_->primitive; }

std::uint32_t FiniteField::log(Rep a) const {
  if (a == 0) throw std::domain_error("logarithm of zero");
  return impl_->log_table[a];
}

Rep FiniteField::exp(long long e) const {
  const long long order = impl_->q - 1;
  long long r = e % order;
  if (r < 0) r += order;
  return impl_->exp_table[static_cast<std::size_t>(r)];
}

std::uint32_t FiniteField::multiplicative_order(Rep a) const {
  if (a == 0) throw std::domain_error("zero has no multiplicative order");
  const std::uint32_t order = impl_->q - 1;
  const std::uint32_t l = impl_->log_table[a];
  std::uint32_t g = order, x = l;
  while (x != 0) {
    const std::uint32_t t = g % x;
    g = x;
    x = t;
  }
  return order / g;
}

std::string FiniteField::name() const {
  if (m() == 1) return std::to_string(p());
  return std::to_string(p()) + "^" + std::to_string(m());
}

std::string FiniteField::describe() const {
  std::string s = name();
  if (m() > 1) {
    s += " modulus";
    for (auto c : modulus()) s += " " + std::to_string(c);
  }
  return s;
}

FieldElement::FieldElement(FiniteField field, Rep rep) : field_(std::move(field)), rep_(rep) {
  if (!field_.contains(rep_)) {
    throw std::invalid_argument("value " + std::to_string(rep) + " is not an element of F_" + field_.name());
  }
}

const FiniteField& FieldElement::common(const FieldElement& o) const {
  if (!(field_ == o.field_)) {
    throw std::invalid_argument("operands from different fields F_" + field_.name() + " and F_" + o.field_.name());
  }
  return field_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const { return {field_, common(o).add(rep_, o.rep_)}; }
FieldElement FieldElement::operator-(const FieldElement& o) const { return {field_, common(o).sub(rep_, o.rep_)}; }
FieldElement FieldElement::operator*(const FieldElement& o) const { return {field_, common(o).mul(rep_, o.rep_)}; }
FieldElement FieldElement::operator/(const FieldElement& o) const { return {field_, common(o).div(rep_, o.rep_)}; }
FieldElement FieldElement::operator-() const { return {field_, field_.neg(rep_)}; }
FieldElement FieldElement::inv() const { return {field_, field_.inv(rep_)}; }
FieldElement FieldElement::pow(long long e) const { return {field_, field_.pow(rep_, e)}; }

}  // namespace gcode
