#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "gcode/cauchy.hpp"
#include "gcode/gf.hpp"
#include "gcode/lincode.hpp"

namespace gcode {

// Text formats. Blank lines and lines starting with '#' are skipped; every
// malformed input raises ParseError carrying the 1-based line number.
//
// Code file:
//   q n k          q written "p", "p^m" or as the integer p^m
//   k rows of n integer reps
//
// Cauchy spec file:
//   q k
//   location line  integers for finite points, "inf" for infinity, or one of
//                  the keywords F, Fstar (1, xi, ..., xi^{q-2}), P1
//   scaling line   "const c" | "fm m" | "fmm m m2" | n nonzero integer reps
// fm and fmm take the value 1 at 0 and at infinity.

FiniteField parse_field(std::string_view token, int line = 0);

LinearCode parse_code(std::istream& in);
LinearCode parse_code_text(std::string_view text);
// "q n k" header then the canonical generator rows; an optional comment
// becomes a leading "# ..." line.
std::string format_code(const LinearCode& c, std::string_view comment = "");

Vec parse_vector(const FiniteField& field, std::string_view text, int line = 0);

std::vector<ProjectivePoint> parse_locations(const FiniteField& field, std::string_view text, int line = 0);
ScalingMap parse_scaling(const FiniteField& field, std::span<const ProjectivePoint> alpha, std::string_view text,
                         int line = 0);

CauchySpec parse_cauchy_spec(std::istream& in);
CauchySpec parse_cauchy_spec_text(std::string_view text);
// Round-trips through parse_cauchy_spec with an explicit value list.
std::string format_cauchy_spec(const CauchySpec& spec);

}  // namespace gcode
