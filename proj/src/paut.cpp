#include <algorithm>
#include <map>
#include <stdexcept>

#include "gcode/error.hpp"
#include "gcode/lincode.hpp"

namespace gcode {

namespace {

constexpr std::uint64_t kEnumerationLimit = 20000;

// All codewords up to scalars (leading coefficient 1), or empty when there
// are more than the limit.
std::vector<Vec> projective_codewords(const LinearCode& c, std::uint64_t limit) {
  const std::size_t k = c.dimension();
  const std::uint64_t q = c.field().q();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    total *= q;
    if (total > limit) return {};
  }
  std::vector<Vec> out;
  Vec coeff(k, 0);
  for (std::size_t lead = 0; lead < k; ++lead) {
    std::fill(coeff.begin(), coeff.end(), 0);
    coeff[lead] = 1;
    while (true) {
      out.push_back(c.encode(coeff));
      std::size_t i = lead + 1;
      while (i < k && coeff[i] == q - 1) coeff[i++] = 0;
      if (i >= k) break;
      ++coeff[i];
    }
  }
  return out;
}

// Sizes of the classes of mutually proportional nonzero columns; 0 for a zero column.
std::vector<std::size_t> parallel_class_sizes(const LinearCode& c) {
  const auto& f = c.field();
  const std::size_t n = c.length(), k = c.dimension();
  std::vector<Vec> cols(n, Vec(k));
  for (std::size_t j = 0; j < n; ++j) {
    Rep lead = 0;
    for (std::size_t r = 0; r < k; ++r) {
      const Rep x = c.generator()[r][j];
      if (lead == 0 && x != 0) lead = f.inv(x);
      cols[j][r] = x;
    }
    if (lead != 0) {
      for (auto& x : cols[j]) x = f.mul(x, lead);
    }
  }
  std::map<Vec, std::size_t> count;
  for (const auto& col : cols) ++count[col];
  std::vector<std::size_t> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    const bool zero = std::all_of(cols[j].begin(), cols[j].end(), [](Rep x) { return x == 0; });
    out[j] = zero ? 0 : count[cols[j]];
  }
  return out;
}

// For each coordinate, the number of words of each weight that are nonzero there.
std::vector<std::vector<std::size_t>> weight_profile(const std::vector<Vec>& words, std::size_t n) {
  std::vector<std::vector<std::size_t>> prof(n, std::vector<std::size_t>(n + 1, 0));
  for (const auto& w : words) {
    const std::size_t wt = weight(w);
    for (std::size_t j = 0; j < n; ++j) {
      if (w[j] != 0) ++prof[j][wt];
    }
  }
  return prof;
}

// Basis of the subcode of c supported inside `in`.
std::vector<Vec> shortened_basis(const LinearCode& c, const std::vector<bool>& in) {
  const std::size_t k = c.dimension();
  if (k == 0) return {};
  std::vector<Vec> constraints;
  for (std::size_t j = 0; j < c.length(); ++j) {
    if (in[j]) continue;
    Vec row(k);
    for (std::size_t r = 0; r < k; ++r) row[r] = c.generator()[r][j];
    constraints.push_back(std::move(row));
  }
  const LinearCode kernel = dual(LinearCode::from_rows(c.field(), k, constraints));
  std::vector<Vec> out;
  for (const auto& a : kernel.generator()) out.push_back(c.encode(a));
  return out;
}

class AutomorphismSearch {
 public:
  AutomorphismSearch(const LinearCode& code, const Caps& caps)
      : code_(code), dual_(dual(code)), n_(code.length()), caps_(caps) {}

  std::vector<Permutation> run() {
    choose_order();
    compute_keys();
    compute_checks();
    image_.assign(n_, -1);
    used_.assign(n_, false);
    search(0);
    return std::move(found_);
  }

 private:
  void choose_order() {
    words_ = projective_codewords(code_, kEnumerationLimit);
    dual_words_ = projective_codewords(dual_, kEnumerationLimit);
    std::vector<const Vec*> pool;
    for (const auto& w : words_) pool.push_back(&w);
    for (const auto& w : dual_words_) pool.push_back(&w);
    std::vector<bool> chosen(n_, false);
    // Greedily complete the support of the word needing the fewest new
    // positions, so shortened-code checks start as early as possible.
    while (order_.size() < n_) {
      const Vec* best = nullptr;
      std::size_t best_missing = n_ + 1;
      for (const Vec* w : pool) {
        std::size_t missing = 0;
        for (std::size_t j = 0; j < n_; ++j) missing += (*w)[j] != 0 && !chosen[j];
        if (missing > 0 && missing < best_missing) {
          best_missing = missing;
          best = w;
        }
      }
      if (best == nullptr) break;
      for (std::size_t j = 0; j < n_; ++j) {
        if ((*best)[j] != 0 && !chosen[j]) {
          chosen[j] = true;
          order_.push_back(j);
        }
      }
    }
    for (std::size_t j = 0; j < n_; ++j) {
      if (!chosen[j]) order_.push_back(j);
    }
  }

  void compute_keys() {
    const auto pc = parallel_class_sizes(code_);
    const auto pd = parallel_class_sizes(dual_);
    const auto wc = weight_profile(words_, n_);
    const auto wd = weight_profile(dual_words_, n_);
    std::map<std::vector<std::size_t>, int> ids;
    key_.resize(n_);
    for (std::size_t j = 0; j < n_; ++j) {
      std::vector<std::size_t> k{pc[j], pd[j]};
      k.insert(k.end(), wc[j].begin(), wc[j].end());
      k.insert(k.end(), wd[j].begin(), wd[j].end());
      key_[j] = ids.emplace(std::move(k), static_cast<int>(ids.size())).first->second;
    }
  }

  // checks_[d]: new basis vectors of the shortened codes once order_[0..d) is assigned.
  void compute_checks() {
    checks_.assign(n_ + 1, {});
    dual_checks_.assign(n_ + 1, {});
    Echelon seen(code_.field(), n_), seen_dual(code_.field(), n_);
    std::vector<bool> in(n_, false);
    for (std::size_t d = 1; d <= n_; ++d) {
      in[order_[d - 1]] = true;
      for (auto& v : shortened_basis(code_, in)) {
        if (seen.insert(v)) checks_[d].push_back(std::move(v));
      }
      for (auto& v : shortened_basis(dual_, in)) {
        if (seen_dual.insert(v)) dual_checks_[d].push_back(std::move(v));
      }
    }
  }

  // Image of v under the partial assignment lies in the code whose
  // orthogonal complement is spanned by `checks`.
  bool image_in(const Vec& v, const std::vector<Vec>& orthogonal) const {
    const auto& f = code_.field();
    for (const auto& h : orthogonal) {
      Rep s = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        if (v[i] != 0) s = f.add(s, f.mul(v[i], h[static_cast<std::size_t>(image_[i])]));
      }
      if (s != 0) return false;
    }
    return true;
  }

  void search(std::size_t depth) {
    if (depth == n_) {
      found_.emplace_back(image_);
      if (found_.size() > caps_.max_group_elements) {
        throw CapExceeded("automorphism group exceeds " + std::to_string(caps_.max_group_elements) + " elements");
      }
      return;
    }
    const std::size_t i = order_[depth];
    for (std::size_t j = 0; j < n_; ++j) {
      if (used_[j] || key_[j] != key_[i]) continue;
      image_[i] = static_cast<int>(j);
      used_[j] = true;
      bool ok = true;
      for (const auto& v : checks_[depth + 1]) {
        if (!image_in(v, dual_.generator())) {
          ok = false;
          break;
        }
      }
      if (ok) {
        for (const auto& v : dual_checks_[depth + 1]) {
          if (!image_in(v, code_.generator())) {
            ok = false;
            break;
          }
        }
      }
      if (ok) search(depth + 1);
      used_[j] = false;
      image_[i] = -1;
    }
  }

  const LinearCode& code_;
  LinearCode dual_;
  std::size_t n_;
  const Caps& caps_;
  std::vector<Vec> words_, dual_words_;
  std::vector<std::size_t> order_;
  std::vector<int> key_;
  std::vector<std::vector<Vec>> checks_, dual_checks_;
  std::vector<int> image_;
  std::vector<bool> used_;
  std::vector<Permutation> found_;
};

}  // namespace

PermGroupSmall paut(const LinearCode& c, const Caps& caps) {
  const std::size_t n = c.length();
  if (n > caps.max_length) {
    throw CapExceeded("automorphism search limited to length " + std::to_string(caps.max_length));
  }
  if (n == 0) return PermGroupSmall::trivial(0);
  if (is_symmetric_invariant(c)) return PermGroupSmall::symmetric(n, caps.max_group_elements);
  AutomorphismSearch search(c, caps);
  auto elements = search.run();
  std::sort(elements.begin(), elements.end());
  // Each new generator at least doubles the group, so this takes at most
  // log2 |PAut| closures; the result must reproduce exactly the found set.
  std::vector<Permutation> gens;
  auto all = PermGroupSmall::trivial(n);
  for (const auto& e : elements) {
    if (all.contains(e)) continue;
    gens.push_back(e);
    all = PermGroupSmall::closure(n, gens, caps.max_group_elements);
  }
  if (all.order() != elements.size() || all.elements() != elements) {
    throw std::logic_error("automorphism search returned a non-group");
  }
  return PermGroupSmall::closure(n, small_generating_set(all), caps.max_group_elements);
}

}  // namespace gcode
