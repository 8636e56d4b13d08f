#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <unordered_set>

#include "gcode/classify.hpp"
#include "gcode/error.hpp"

namespace gcode {

namespace {

struct Semiregular {
  std::vector<Permutation> elements;  // sorted
  std::vector<Permutation> generators;
};

// <k, x> if it is semiregular of order dividing n, else nullopt.
std::optional<Semiregular> extend(const Semiregular& k, const Permutation& x, std::size_t n) {
  Semiregular out{k.elements, k.generators};
  out.generators.push_back(x);
  std::unordered_set<Permutation, PermutationHash> seen(k.elements.begin(), k.elements.end());
  std::vector<Permutation> queue = k.elements;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& g : out.generators) {
      Permutation y = g * queue[head];
      if (seen.contains(y)) continue;
      if (y.has_fixed_point() || seen.size() + 1 > n) return std::nullopt;
      seen.insert(y);
      queue.push_back(std::move(y));
    }
  }
  if (n % seen.size() != 0) return std::nullopt;
  out.elements.assign(seen.begin(), seen.end());
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

PermGroupSmall as_group(const Semiregular& k, std::size_t n) {
  return PermGroupSmall::closure(n, k.generators, k.elements.size());
}

class RegularSearch {
 public:
  RegularSearch(const PermGroupSmall& p, const Caps& caps, const std::function<bool(const PermGroupSmall&)>& accept,
                const std::function<bool(const PermGroupSmall&)>& prune, bool first_only)
      : n_(p.degree()), accept_(accept), prune_(prune), first_only_(first_only), rng_(caps.seed) {
    if (n_ > caps.max_length) throw CapExceeded("regular subgroup search limited to degree " + std::to_string(caps.max_length));
    if (p.order() > caps.max_group_elements) {
      throw CapExceeded("regular subgroup search limited to groups of " + std::to_string(caps.max_group_elements) +
                        " elements");
    }
    shuffle_ = caps.seed != 0;
    by_image_.resize(n_);
    for (const auto& x : p.elements()) {
      if (x.has_fixed_point() || n_ % static_cast<std::size_t>(x.order()) != 0) continue;
      by_image_[static_cast<std::size_t>(x(0))].push_back(x);
    }
  }

  std::vector<Semiregular> run() {
    if (n_ == 0) return {};
    Semiregular trivial{{Permutation(n_)}, {}};
    visit(trivial);
    return std::move(found_);
  }

 private:
  void visit(const Semiregular& k) {
    if (done()) return;
    if (!visited_.insert(k.elements).second) return;
    if (prune_ && !prune_(as_group(k, n_))) return;
    if (k.elements.size() == n_) {
      if (!accept_ || accept_(as_group(k, n_))) found_.push_back(k);
      return;
    }
    std::vector<bool> covered(n_, false);
    for (const auto& e : k.elements) covered[static_cast<std::size_t>(e(0))] = true;
    std::size_t target = 0;
    while (covered[target]) ++target;
    // A regular supergroup has exactly one element sending 0 to target.
    auto candidates = by_image_[target];
    if (shuffle_) std::shuffle(candidates.begin(), candidates.end(), rng_);
    for (const auto& x : candidates) {
      if (auto child = extend(k, x, n_)) visit(*child);
      if (done()) return;
    }
  }

  bool done() const { return first_only_ && !found_.empty(); }

  std::size_t n_;
  const std::function<bool(const PermGroupSmall&)>& accept_;
  const std::function<bool(const PermGroupSmall&)>& prune_;
  bool first_only_;
  bool shuffle_ = false;
  std::mt19937_64 rng_;
  std::vector<std::vector<Permutation>> by_image_;
  std::set<std::vector<Permutation>> visited_;
  std::vector<Semiregular> found_;
};

}  // namespace

std::vector<PermGroupSmall> regular_subgroups(const PermGroupSmall& p, SubgroupListing listing, const Caps& caps) {
  const std::function<bool(const PermGroupSmall&)> none;
  auto found = RegularSearch(p, caps, none, none, false).run();
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.elements < b.elements; });
  const std::size_t n = p.degree();
  std::vector<PermGroupSmall> out;
  if (listing == SubgroupListing::all) {
    for (const auto& k : found) out.push_back(as_group(k, n));
    return out;
  }
  std::map<std::vector<Permutation>, std::size_t> index;
  for (std::size_t i = 0; i < found.size(); ++i) index.emplace(found[i].elements, i);
  std::vector<std::size_t> parent(found.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& s : p.generators()) {
      const auto s_inv = s.inverse();
      std::vector<Permutation> conj;
      for (const auto& e : found[i].elements) conj.push_back(s * e * s_inv);
      std::sort(conj.begin(), conj.end());
      const std::size_t j = index.at(conj);
      const std::size_t a = root(i), b = root(j);
      // The smaller index is the lexicographically smaller element list.
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    if (root(i) == i) out.push_back(as_group(found[i], n));
  }
  return out;
}

std::optional<PermGroupSmall> find_regular_subgroup(const PermGroupSmall& p,
                                                    const std::function<bool(const PermGroupSmall&)>& accept,
                                                    const std::function<bool(const PermGroupSmall&)>& prune,
                                                    const Caps& caps) {
  auto found = RegularSearch(p, caps, accept, prune, true).run();
  if (found.empty()) return std::nullopt;
  return as_group(found.front(), p.degree());
}

}  // namespace gcode
