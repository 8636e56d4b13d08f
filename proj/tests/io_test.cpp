#include <gtest/gtest.h>

#include <functional>

#include "gcode/error.hpp"
#include "gcode/io.hpp"

using namespace gcode;

namespace {

int line_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST(ParseField, AcceptsPrimePowerForms) {
  EXPECT_EQ(parse_field("7").q(), 7u);
  EXPECT_EQ(parse_field("2^3").q(), 8u);
  EXPECT_EQ(parse_field("9").q(), 9u);
  EXPECT_THROW(parse_field("6"), ParseError);
  EXPECT_THROW(parse_field("x"), ParseError);
  EXPECT_THROW(parse_field("4^2"), ParseError);
}

TEST(CodeFile, RoundTrip) {
  const auto c = parse_code_text("# comment\n\n11 6 2\n2 5 4 2 4 5\n4 8 10 7 1 3\n");
  EXPECT_EQ(c.length(), 6u);
  EXPECT_EQ(c.dimension(), 2u);
  const auto text = format_code(c, "again");
  EXPECT_EQ(text.rfind("# again\n", 0), 0u);
  EXPECT_EQ(parse_code_text(text), c);
}

TEST(CodeFile, PrimePowerFieldRoundTrip) {
  const auto c = parse_code_text("2^2 3 1\n1 2 3\n");
  EXPECT_EQ(c.field().q(), 4u);
  EXPECT_EQ(parse_code_text(format_code(c)), c);
}

TEST(CodeFile, ErrorsCarryLineNumbers) {
  EXPECT_EQ(line_of([] { parse_code_text("# c\n5 3\n"); }), 2);
  EXPECT_EQ(line_of([] { parse_code_text("5 3 1\n1 2\n"); }), 2);
  EXPECT_EQ(line_of([] { parse_code_text("5 3 2\n1 2 3\n\n1 2 7\n"); }), 4);
  EXPECT_EQ(line_of([] { parse_code_text("5 3 1\n1 2 3\n1 1 1\n"); }), 3);
  EXPECT_EQ(line_of([] { parse_code_text("5 3 2\n1 2 3\n"); }), 3);
  // Dependent rows contradict the declared dimension.
  EXPECT_EQ(line_of([] { parse_code_text("5 3 2\n1 2 3\n2 4 1\n"); }), 1);
  EXPECT_EQ(line_of([] { parse_code_text("5 3 4\n"); }), 1);
}

TEST(ParseError, MessageHasLinePrefix) {
  try {
    parse_code_text("5 3 1\n1 x 3\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("line 2: ", 0), 0u);
  }
}

TEST(Locations, KeywordsAndPoints) {
  const auto f = FiniteField::make(5);
  EXPECT_EQ(parse_locations(f, "F").size(), 5u);
  EXPECT_EQ(parse_locations(f, "Fstar").size(), 4u);
  EXPECT_EQ(parse_locations(f, "P1").size(), 6u);
  const auto pts = parse_locations(f, "0 3 inf");
  ASSERT_EQ(pts.size(), 3u);
  EXPECT_EQ(pts[1], ProjectivePoint::finite(3));
  EXPECT_TRUE(pts[2].is_infinity());
  EXPECT_THROW(parse_locations(f, "0 5"), ParseError);
  EXPECT_THROW(parse_locations(f, ""), ParseError);
}

TEST(Scaling, FormsAgreeWithLibraryMaps) {
  const auto f = FiniteField::make(7);
  const auto alpha = parse_locations(f, "P1");
  const auto c = parse_scaling(f, alpha, "const 3");
  for (const auto& z : alpha) EXPECT_EQ(c(z), 3u);
  const auto fm = parse_scaling(f, alpha, "fm 2");
  for (const auto& z : alpha) {
    const Rep expect = z.is_infinity() || z.value() == 0 ? 1 : f.pow(z.value(), 2);
    EXPECT_EQ(fm(z), expect);
  }
  const auto f8 = FiniteField::make(2, 3);
  EXPECT_THROW(parse_scaling(f8, parse_locations(f8, "Fstar"), "fmm 1 2"), ParseError);  // needs odd q
  EXPECT_THROW(parse_scaling(f, alpha, "const 0"), ParseError);
  EXPECT_THROW(parse_scaling(f, alpha, "1 2 3"), ParseError);
  EXPECT_THROW(parse_scaling(f, alpha, "const"), ParseError);
}

TEST(CauchySpecFile, RoundTripAndLineNumbers) {
  const auto spec = parse_cauchy_spec_text("# d\n13 3\nFstar\nfmm 2 11\n");
  EXPECT_EQ(spec.length(), 12u);
  const auto again = parse_cauchy_spec_text(format_cauchy_spec(spec));
  EXPECT_EQ(cauchy_code(again), cauchy_code(spec));
  EXPECT_TRUE(codes_equal(again, spec));
  EXPECT_EQ(line_of([] { parse_cauchy_spec_text("5 2\n0 1 2\n1 1\n"); }), 3);
  EXPECT_EQ(line_of([] { parse_cauchy_spec_text("5 2\n0 1 1\nconst 1\n"); }), 2);  // repeated location
  EXPECT_EQ(line_of([] { parse_cauchy_spec_text("5 4\n0 1 2\nconst 1\n"); }), 1);  // k > n
  EXPECT_EQ(line_of([] { parse_cauchy_spec_text("5 2\n0 1 2\nconst 1\nextra\n"); }), 4);
  EXPECT_EQ(line_of([] { parse_cauchy_spec_text("5\n"); }), 1);
}
