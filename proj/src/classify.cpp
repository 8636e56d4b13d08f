#include "gcode/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "gcode/error.hpp"

namespace gcode {

namespace {

void check_length(const LinearCode& c, const Caps& caps) {
  if (c.length() == 0) throw std::invalid_argument("classification needs a code of positive length");
  if (c.length() > caps.max_length) {
    throw CapExceeded("classification limited to length " + std::to_string(caps.max_length));
  }
}

PermGroupSmall regular_image(const FiniteGroupTable& g) {
  std::vector<Permutation> gens;
  for (int a : g.generators()) gens.push_back(g.left_regular(a));
  return PermGroupSmall::closure(static_cast<std::size_t>(g.order()), gens, static_cast<std::size_t>(g.order()));
}

bool centralizer_inside(const PermGroupSmall& h, const PermGroupSmall& p) {
  return centralizer_of_regular(h, 0).is_subgroup_of(p);
}

std::size_t factorial(std::size_t n) {
  std::size_t out = 1;
  for (std::size_t i = 2; i <= n; ++i) out *= i;
  return out;
}

std::vector<Permutation> symmetric_generators(std::size_t n) {
  if (n < 2) return {};
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  const int swap[] = {0, 1};
  if (n == 2) return {Permutation::cycle(n, swap)};
  return {Permutation::cycle(n, swap), Permutation::cycle(n, all)};
}

}  // namespace

ClassificationReport classify_code(const LinearCode& c, const Caps& caps) {
  check_length(c, caps);
  const std::size_t n = c.length();
  ClassificationReport r;
  r.length = n;
  r.dimension = c.dimension();
  if (is_symmetric_invariant(c)) {
    r.paut_is_symmetric = true;
    r.paut_order = factorial(n);
    r.paut_generators = symmetric_generators(n);
    for (const auto& g : groups_of_order(static_cast<int>(n))) {
      Witness w{regular_image(g), g.name()};
      r.left_witnesses.push_back(w);
      r.two_sided_witnesses.push_back(std::move(w));
    }
    r.is_left_group_code = r.is_group_code = r.is_abelian_group_code = r.is_cyclic_group_code = true;
    r.notes.push_back("PAut is the full symmetric group; witnesses are regular representations, one per isomorphism type");
    return r;
  }
  const auto p = paut(c, caps);
  r.paut_order = p.order();
  r.paut_generators = p.generators();
  for (auto& h : regular_subgroups(p, SubgroupListing::conjugacy_representatives, caps)) {
    const bool two_sided = centralizer_inside(h, p);
    r.is_abelian_group_code = r.is_abelian_group_code || h.is_abelian();
    r.is_cyclic_group_code = r.is_cyclic_group_code || h.is_cyclic();
    Witness w{std::move(h), ""};
    w.iso_type = identify_group(w.group);
    if (two_sided) r.two_sided_witnesses.push_back(w);
    r.left_witnesses.push_back(std::move(w));
  }
  r.is_left_group_code = !r.left_witnesses.empty();
  r.is_group_code = !r.two_sided_witnesses.empty();
  r.notes.push_back("witnesses are representatives of the PAut-conjugacy classes of regular subgroups");
  return r;
}

bool is_left_group_code(const LinearCode& c, const Caps& caps) {
  check_length(c, caps);
  if (is_symmetric_invariant(c)) return true;
  return find_regular_subgroup(paut(c, caps), {}, {}, caps).has_value();
}

bool is_group_code(const LinearCode& c, const Caps& caps) {
  check_length(c, caps);
  if (is_symmetric_invariant(c)) return true;
  const auto p = paut(c, caps);
  return find_regular_subgroup(p, [&](const PermGroupSmall& h) { return centralizer_inside(h, p); }, {}, caps)
      .has_value();
}

bool is_abelian_group_code(const LinearCode& c, const Caps& caps) {
  check_length(c, caps);
  if (is_symmetric_invariant(c)) return true;
  const auto abelian = [](const PermGroupSmall& h) { return h.is_abelian(); };
  return find_regular_subgroup(paut(c, caps), {}, abelian, caps).has_value();
}

bool is_cyclic_group_code(const LinearCode& c, const Caps& caps) {
  check_length(c, caps);
  if (is_symmetric_invariant(c)) return true;
  const auto p = paut(c, caps);
  const std::size_t n = c.length();
  return std::any_of(p.elements().begin(), p.elements().end(), [&](const Permutation& x) {
    return orbit(std::span(&x, 1), n, 0).size() == n;
  });
}

std::optional<GCodeWitness> is_left_g_code(const LinearCode& c, const FiniteGroupTable& g, const Caps& caps) {
  check_length(c, caps);
  if (static_cast<std::size_t>(g.order()) != c.length()) throw std::invalid_argument("group order differs from code length");
  if (is_symmetric_invariant(c)) return GCodeWitness{regular_image(g), IndexBijection::identity(c.length())};
  for (auto& h : regular_subgroups(paut(c, caps), SubgroupListing::conjugacy_representatives, caps)) {
    const auto iso = are_isomorphic(h, g, caps.max_iso_order);
    if (!iso) continue;
    const auto phi_h = regular_subgroup_phi(h);
    std::vector<int> labels(c.length());
    for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = (*iso)[static_cast<std::size_t>(phi_h(i))];
    return GCodeWitness{std::move(h), IndexBijection(std::move(labels))};
  }
  return std::nullopt;
}

OneDimReport classify_one_dim(const FiniteField& field, std::span<const Rep> v) {
  if (std::all_of(v.begin(), v.end(), [](Rep x) { return x == 0; })) {
    throw std::invalid_argument("one-dimensional classification needs a nonzero vector");
  }
  OneDimReport r;
  r.n = v.size();
  if (std::any_of(v.begin(), v.end(), [](Rep x) { return x == 0; })) return r;
  std::map<Rep, std::size_t> ratio_count;
  for (Rep x : v) ++ratio_count[field.div(x, v[0])];
  const std::size_t h = ratio_count.size();
  const std::size_t order = field.q() - 1;
  if (order % h != 0 || r.n % h != 0) return r;
  for (const auto& [ratio, count] : ratio_count) {
    if (field.pow(ratio, static_cast<long long>(h)) != 1 || count != r.n / h) return r;
  }
  r.is_left_group_code = true;
  r.h = h;
  r.s = r.n / h;
  r.u = *std::min_element(v.begin(), v.end());
  r.xi = field.exp(static_cast<long long>(order / h));
  return r;
}

bool one_dim_admissible(const OneDimReport& report, const FiniteGroupTable& g) {
  if (!report.is_left_group_code || static_cast<std::size_t>(g.order()) != report.n) return false;
  for (const auto& nsub : g.normal_subgroups()) {
    if (nsub.size() == report.s && g.quotient_is_cyclic(nsub)) return true;
  }
  return false;
}

bool one_dim_cyclic_corollary_check(const FiniteField& field, std::span<const Rep> v) {
  const auto report = classify_one_dim(field, v);
  if (!report.is_left_group_code) throw std::invalid_argument("vector does not span a left group code");
  return one_dim_admissible(report, group_from_spec("C" + std::to_string(report.n)));
}

}  // namespace gcode
