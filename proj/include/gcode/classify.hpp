#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gcode/caps.hpp"
#include "gcode/group_table.hpp"
#include "gcode/groupalg.hpp"
#include "gcode/lincode.hpp"
#include "gcode/perm.hpp"

namespace gcode {

enum class SubgroupListing { all, conjugacy_representatives };

// Regular subgroups of the permutation group p, found by growing semiregular
// subgroups one fixed-point-free generator at a time. Representatives are the
// lexicographically smallest element lists of their p-conjugacy classes; the
// result is sorted and independent of caps.seed.
std::vector<PermGroupSmall> regular_subgroups(const PermGroupSmall& p,
                                              SubgroupListing listing = SubgroupListing::conjugacy_representatives,
                                              const Caps& caps = {});

// Some regular subgroup of p satisfying `accept`, or nullopt. `prune` is
// applied to every intermediate subgroup and must be inherited by subgroups
// (e.g. commutativity), so rejecting a partial group rejects all its
// extensions.
std::optional<PermGroupSmall> find_regular_subgroup(const PermGroupSmall& p,
                                                    const std::function<bool(const PermGroupSmall&)>& accept,
                                                    const std::function<bool(const PermGroupSmall&)>& prune = {},
                                                    const Caps& caps = {});

struct Witness {
  PermGroupSmall group;
  std::string iso_type;
};

struct ClassificationReport {
  std::size_t length = 0;
  std::size_t dimension = 0;
  std::size_t paut_order = 0;
  std::vector<Permutation> paut_generators;
  bool paut_is_symmetric = false;
  bool is_left_group_code = false;
  std::vector<Witness> left_witnesses;  // one per conjugacy class in PAut
  bool is_group_code = false;
  std::vector<Witness> two_sided_witnesses;
  bool is_abelian_group_code = false;
  bool is_cyclic_group_code = false;
  std::vector<std::string> notes;
};

// When PAut(C) = S_n the witnesses are the regular representations of the
// built-in groups of order n, one per isomorphism type.
ClassificationReport classify_code(const LinearCode& c, const Caps& caps = {});

bool is_left_group_code(const LinearCode& c, const Caps& caps = {});
// Some regular H in PAut(C) has its centralizer in S_n inside PAut(C).
bool is_group_code(const LinearCode& c, const Caps& caps = {});
bool is_abelian_group_code(const LinearCode& c, const Caps& caps = {});
bool is_cyclic_group_code(const LinearCode& c, const Caps& caps = {});

struct GCodeWitness {
  PermGroupSmall h;
  // phi(e_i) as labels of the requested group; phi(C) is a left ideal.
  IndexBijection phi;
};

std::optional<GCodeWitness> is_left_g_code(const LinearCode& c, const FiniteGroupTable& g, const Caps& caps = {});

// Entries of v form the coset u<xi> of the order-h subgroup of F*, each value
// repeated s = n/h times.
struct OneDimReport {
  bool is_left_group_code = false;
  std::size_t n = 0;
  std::size_t h = 0;
  std::size_t s = 0;
  Rep u = 0;   // smallest-rep element of the coset
  Rep xi = 0;  // primitive_element^((q-1)/h)
};

// Throws std::invalid_argument for the zero vector.
OneDimReport classify_one_dim(const FiniteField& field, std::span<const Rep> v);
// G admits span{v} as a left G-code iff G has a normal subgroup of order s
// with cyclic quotient.
bool one_dim_admissible(const OneDimReport& report, const FiniteGroupTable& g);
// C_n is always admissible; throws std::invalid_argument when v does not
// span a left group code.
bool one_dim_cyclic_corollary_check(const FiniteField& field, std::span<const Rep> v);

}  // namespace gcode
