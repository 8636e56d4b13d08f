#include "gcode/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "gcode/error.hpp"

namespace gcode {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || seen[static_cast<std::size_t>(x)]) {
      throw std::invalid_argument("image list is not a permutation");
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree, std::string_view text) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '(' in cycle notation: " + std::string(text));
    ++pos;
    std::vector<int> cyc;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) throw ParseError("expected point in cycle notation: " + std::string(text));
      const int pt = std::stoi(std::string(text.substr(start, pos - start)));
      if (pt < 1 || static_cast<std::size_t>(pt) > degree) {
        throw ParseError("point " + std::to_string(pt) + " outside 1.." + std::to_string(degree));
      }
      if (used[static_cast<std::size_t>(pt - 1)]) throw ParseError("point repeated in cycle notation: " + std::string(text));
      used[static_cast<std::size_t>(pt - 1)] = true;
      cyc.push_back(pt - 1);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        skip_ws();
      }
    }
    if (pos >= text.size()) throw ParseError("unterminated cycle: " + std::string(text));
    ++pos;
    for (std::size_t i = 0; i < cyc.size(); ++i) images[static_cast<std::size_t>(cyc[i])] = cyc[(i + 1) % cyc.size()];
    skip_ws();
  }
  return Permutation(std::move(images));
}

Permutation Permutation::cycle(std::size_t degree, std::span<const int> points) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    images[static_cast<std::size_t>(points[i])] = points[(i + 1) % points.size()];
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

bool Permutation::has_fixed_point() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] == static_cast<int>(i)) return true;
  }
  return false;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  Permutation out;
  out.images_ = std::move(inv);
  return out;
}

int Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  long long l = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    long long len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
      seen[j] = true;
      ++len;
    }
    l = std::lcm(l, len);
  }
  return static_cast<int>(l);
}

std::string Permutation::to_cycles() const {
  std::string s;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == static_cast<int>(i)) continue;
    s += '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
      seen[j] = true;
      if (!first) s += ',';
      s += std::to_string(j + 1);
      first = false;
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("composing permutations of different degrees");
  std::vector<int> out(a.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.images_[static_cast<std::size_t>(b.images_[i])];
  Permutation r;
  r.images_ = std::move(out);
  return r;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int x : p.images()) {
    h ^= static_cast<std::size_t>(x);
    h *= 1099511628211ull;
  }
  return h;
}

Permutation compose(const Permutation& a, const Permutation& b) { return a * b; }
Permutation inverse(const Permutation& a) { return a.inverse(); }

Vec apply_to_word(const Permutation& s, std::span<const Rep> x) {
  if (s.degree() != x.size()) throw std::invalid_argument("permutation degree does not match word length");
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[static_cast<std::size_t>(s(static_cast<int>(i)))] = x[i];
  return out;
}

PermGroupSmall PermGroupSmall::closure(std::size_t degree, std::span<const Permutation> generators, std::size_t cap) {
  for (const auto& g : generators) {
    if (g.degree() != degree) throw std::invalid_argument("generators of mixed degree");
  }
  if (cap < 1) throw std::invalid_argument("closure cap must be positive");
  std::vector<Permutation> gens;
  for (const auto& g : generators) {
    if (!g.is_identity() && std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  }
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> order;
  Permutation id(degree);
  seen.insert(id);
  order.push_back(id);
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const auto& g : gens) {
      Permutation next = g * order[head];
      if (seen.insert(next).second) {
        order.push_back(std::move(next));
        if (order.size() > cap) {
          throw CapExceeded("permutation group exceeds " + std::to_string(cap) + " elements");
        }
      }
    }
  }
  std::sort(order.begin(), order.end());
  return PermGroupSmall(degree, std::move(order), std::move(gens));
}

PermGroupSmall PermGroupSmall::closure(std::span<const Permutation> generators, std::size_t cap) {
  if (generators.empty()) throw std::invalid_argument("closure needs a degree when there are no generators");
  return closure(generators.front().degree(), generators, cap);
}

PermGroupSmall PermGroupSmall::trivial(std::size_t degree) {
  return PermGroupSmall(degree, {Permutation(degree)}, {});
}

PermGroupSmall PermGroupSmall::symmetric(std::size_t degree, std::size_t cap) {
  std::uint64_t fact = 1;
  for (std::size_t i = 2; i <= degree; ++i) {
    fact *= i;
    if (fact > cap) throw CapExceeded("S_" + std::to_string(degree) + " exceeds " + std::to_string(cap) + " elements");
  }
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> elems;
  elems.reserve(fact);
  do {
    elems.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  std::vector<Permutation> gens;
  if (degree >= 2) {
    const int swap[] = {0, 1};
    gens.push_back(Permutation::cycle(degree, swap));
  }
  if (degree >= 3) {
    std::vector<int> all(degree);
    std::iota(all.begin(), all.end(), 0);
    gens.push_back(Permutation::cycle(degree, all));
  }
  return PermGroupSmall(degree, std::move(elems), std::move(gens));
}

bool PermGroupSmall::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::size_t PermGroupSmall::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) throw std::invalid_argument("permutation is not in the group");
  return static_cast<std::size_t>(it - elements_.begin());
}

bool PermGroupSmall::contains_all(std::span<const Permutation> ps) const {
  return std::all_of(ps.begin(), ps.end(), [&](const Permutation& p) { return contains(p); });
}

bool PermGroupSmall::is_subgroup_of(const PermGroupSmall& other) const {
  return degree_ == other.degree_ && other.contains_all(generators_);
}

std::vector<int> orbit(std::span<const Permutation> gens, std::size_t degree, int point) {
  std::vector<bool> seen(degree, false);
  std::vector<int> out{point};
  seen[static_cast<std::size_t>(point)] = true;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& g : gens) {
      const int y = g(out[head]);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool PermGroupSmall::is_transitive() const {
  if (degree_ == 0) return true;
  return orbit(generators_, degree_, 0).size() == degree_;
}

bool PermGroupSmall::is_regular() const {
  const bool by_transitivity = order() == degree_ && is_transitive();
  bool by_fixed_points = order() == degree_;
  if (by_fixed_points) {
    for (const auto& e : elements_) {
      if (!e.is_identity() && e.has_fixed_point()) {
        by_fixed_points = false;
        break;
      }
    }
  }
  if (by_transitivity != by_fixed_points) {
    throw std::logic_error("regularity characterizations disagree");
  }
  return by_transitivity;
}

bool PermGroupSmall::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t j = i + 1; j < generators_.size(); ++j) {
      if (generators_[i] * generators_[j] != generators_[j] * generators_[i]) return false;
    }
  }
  return true;
}

bool PermGroupSmall::is_cyclic() const {
  const auto n = static_cast<int>(order());
  return std::any_of(elements_.begin(), elements_.end(), [n](const Permutation& e) { return e.order() == n; });
}

std::vector<Permutation> small_generating_set(const PermGroupSmall& g) {
  std::vector<Permutation> gens;
  std::unordered_set<Permutation, PermutationHash> generated{Permutation(g.degree())};
  for (const auto& e : g.elements()) {
    if (generated.count(e)) continue;
    gens.push_back(e);
    const auto sub = PermGroupSmall::closure(g.degree(), gens, g.order());
    generated.insert(sub.elements().begin(), sub.elements().end());
    if (generated.size() == g.order()) break;
  }
  return gens;
}

namespace {

// psi^{-1}: point i -> the unique element of H sending i0 to i.
std::vector<const Permutation*> psi_inverse(const PermGroupSmall& h_group, int i0) {
  if (!h_group.is_regular()) throw std::invalid_argument("group is not regular");
  if (i0 < 0 || static_cast<std::size_t>(i0) >= h_group.degree()) throw std::invalid_argument("base point out of range");
  std::vector<const Permutation*> inv(h_group.degree(), nullptr);
  for (const auto& e : h_group.elements()) inv[static_cast<std::size_t>(e(i0))] = &e;
  return inv;
}

Permutation sigma_with(const std::vector<const Permutation*>& psi_inv, int i0, const Permutation& h) {
  const int target = h(i0);
  std::vector<int> images(psi_inv.size());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = (*psi_inv[i])(target);
  return Permutation(std::move(images));
}

}  // namespace

Permutation anti_iso_sigma(const PermGroupSmall& h_group, int i0, const Permutation& h) {
  if (!h_group.contains(h)) throw std::invalid_argument("element is not in the regular group");
  return sigma_with(psi_inverse(h_group, i0), i0, h);
}

PermGroupSmall centralizer_of_regular(const PermGroupSmall& h_group, int i0) {
  const auto psi_inv = psi_inverse(h_group, i0);
  std::vector<Permutation> gens;
  for (const auto& g : h_group.generators()) gens.push_back(sigma_with(psi_inv, i0, g));
  return PermGroupSmall::closure(h_group.degree(), gens, h_group.order());
}

}  // namespace gcode
