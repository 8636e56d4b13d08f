#include "gcode/lincode.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "gcode/error.hpp"

namespace gcode {

Echelon::Echelon(FiniteField field, std::size_t length) : field_(std::move(field)), length_(length) {}

bool Echelon::reduce(Vec& v) const {
  if (v.size() != length_) throw std::invalid_argument("vector length does not match the ambient space");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rep c = v[pivots_[r]];
    if (c == 0) continue;
    const Rep neg = field_.neg(c);
    const Vec& row = rows_[r];
    for (std::size_t j = 0; j < length_; ++j) {
      if (row[j] != 0) v[j] = field_.add(v[j], field_.mul(neg, row[j]));
    }
  }
  return std::all_of(v.begin(), v.end(), [](Rep x) { return x == 0; });
}

bool Echelon::contains(std::span<const Rep> v) const {
  Vec w(v.begin(), v.end());
  return reduce(w);
}

bool Echelon::insert(std::span<const Rep> v) {
  Vec w(v.begin(), v.end());
  if (reduce(w)) return false;
  std::size_t pivot = 0;
  while (w[pivot] == 0) ++pivot;
  const Rep scale = field_.inv(w[pivot]);
  for (auto& x : w) x = field_.mul(x, scale);
  for (auto& row : rows_) {
    const Rep c = row[pivot];
    if (c == 0) continue;
    const Rep neg = field_.neg(c);
    for (std::size_t j = 0; j < length_; ++j) {
      if (w[j] != 0) row[j] = field_.add(row[j], field_.mul(neg, w[j]));
    }
  }
  rows_.push_back(std::move(w));
  pivots_.push_back(pivot);
  return true;
}

std::vector<Vec> Echelon::rref() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
  std::vector<Vec> out;
  for (auto i : order) out.push_back(rows_[i]);
  return out;
}

std::vector<std::size_t> Echelon::pivots() const {
  auto p = pivots_;
  std::sort(p.begin(), p.end());
  return p;
}

LinearCode LinearCode::from_rows(const FiniteField& field, std::size_t length, std::span<const Vec> rows) {
  Echelon e(field, length);
  for (const auto& r : rows) {
    if (r.size() != length) throw std::invalid_argument("ragged generator rows");
    for (Rep x : r) {
      if (!field.contains(x)) throw std::invalid_argument("entry " + std::to_string(x) + " is not in F_" + field.name());
    }
    e.insert(r);
  }
  return LinearCode(field, length, e.rref(), e.pivots());
}

LinearCode LinearCode::zero(const FiniteField& field, std::size_t length) { return LinearCode(field, length, {}, {}); }

LinearCode LinearCode::full(const FiniteField& field, std::size_t length) {
  std::vector<Vec> rows;
  std::vector<std::size_t> piv;
  for (std::size_t i = 0; i < length; ++i) {
    Vec r(length, 0);
    r[i] = 1;
    rows.push_back(std::move(r));
    piv.push_back(i);
  }
  return LinearCode(field, length, std::move(rows), std::move(piv));
}

bool LinearCode::contains(std::span<const Rep> x) const {
  if (x.size() != length_) throw std::invalid_argument("word length does not match code length");
  Vec v(x.begin(), x.end());
  for (std::size_t r = 0; r < gen_.size(); ++r) {
    const Rep c = v[pivots_[r]];
    if (c == 0) continue;
    const Rep neg = field_.neg(c);
    for (std::size_t j = 0; j < length_; ++j) {
      if (gen_[r][j] != 0) v[j] = field_.add(v[j], field_.mul(neg, gen_[r][j]));
    }
  }
  return std::all_of(v.begin(), v.end(), [](Rep a) { return a == 0; });
}

Vec LinearCode::encode(std::span<const Rep> coefficients) const {
  if (coefficients.size() != gen_.size()) throw std::invalid_argument("coefficient count does not match dimension");
  Vec out(length_, 0);
  for (std::size_t r = 0; r < gen_.size(); ++r) {
    const Rep c = coefficients[r];
    if (c == 0) continue;
    for (std::size_t j = 0; j < length_; ++j) out[j] = field_.add(out[j], field_.mul(c, gen_[r][j]));
  }
  return out;
}

LinearCode dual(const LinearCode& c) {
  const auto& f = c.field();
  const std::size_t n = c.length();
  const auto& gen = c.generator();
  const auto& piv = c.pivots();
  std::vector<bool> is_pivot(n, false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<Vec> rows;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    Vec h(n, 0);
    h[j] = 1;
    for (std::size_t r = 0; r < gen.size(); ++r) h[piv[r]] = f.neg(gen[r][j]);
    rows.push_back(std::move(h));
  }
  return LinearCode::from_rows(f, n, rows);
}

LinearCode permute(const LinearCode& c, const Permutation& s) {
  if (s.degree() != c.length()) throw std::invalid_argument("permutation degree does not match code length");
  std::vector<Vec> rows;
  for (const auto& g : c.generator()) rows.push_back(apply_to_word(s, g));
  return LinearCode::from_rows(c.field(), c.length(), rows);
}

LinearCode sum(const LinearCode& a, const LinearCode& b) {
  if (a.length() != b.length() || !(a.field() == b.field())) throw std::invalid_argument("codes are not comparable");
  std::vector<Vec> rows = a.generator();
  rows.insert(rows.end(), b.generator().begin(), b.generator().end());
  return LinearCode::from_rows(a.field(), a.length(), rows);
}

std::size_t weight(std::span<const Rep> x) {
  return static_cast<std::size_t>(std::count_if(x.begin(), x.end(), [](Rep a) { return a != 0; }));
}

std::size_t min_distance(const LinearCode& c, std::uint64_t cap) {
  const std::size_t k = c.dimension();
  if (k == 0) throw std::domain_error("the zero code has no nonzero codeword");
  const std::uint64_t q = c.field().q();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    total *= q;
    if (total > cap) throw CapExceeded("minimum distance needs q^k <= " + std::to_string(cap));
  }
  std::size_t best = c.length();
  // Projective enumeration: the leading nonzero coefficient is 1.
  Vec coeff(k, 0);
  for (std::size_t lead = 0; lead < k; ++lead) {
    std::fill(coeff.begin(), coeff.end(), 0);
    coeff[lead] = 1;
    while (true) {
      best = std::min(best, weight(c.encode(coeff)));
      std::size_t i = lead + 1;
      while (i < k && coeff[i] == q - 1) coeff[i++] = 0;
      if (i >= k) break;
      ++coeff[i];
    }
  }
  return best;
}

bool is_mds(const LinearCode& c) {
  const std::size_t k = c.dimension(), n = c.length();
  if (k == 0) return false;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    Echelon e(c.field(), k);
    for (std::size_t j = 0; j < n; ++j) {
      if (!pick[j]) continue;
      Vec col(k);
      for (std::size_t r = 0; r < k; ++r) col[r] = c.generator()[r][j];
      if (!e.insert(col)) return false;
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return true;
}

bool is_symmetric_invariant(const LinearCode& c) {
  const std::size_t n = c.length();
  if (n <= 1) return true;
  const int swap[] = {0, 1};
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  return permute(c, Permutation::cycle(n, swap)) == c && permute(c, Permutation::cycle(n, all)) == c;
}

}  // namespace gcode
