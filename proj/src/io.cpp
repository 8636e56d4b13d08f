#include "gcode/io.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "gcode/error.hpp"

namespace gcode {

namespace {

std::vector<std::string> split_ws(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

long long parse_int(std::string_view tok, int line, const char* what) {
  long long v = 0;
  const auto* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc() || ptr != end) throw ParseError(std::string("expected ") + what + ", got '" + std::string(tok) + "'", line);
  return v;
}

std::size_t parse_count(std::string_view tok, int line, const char* what) {
  const long long v = parse_int(tok, line, what);
  if (v < 0) throw ParseError(std::string(what) + " must be non-negative", line);
  return static_cast<std::size_t>(v);
}

// Next line that is neither blank nor a comment.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::optional<std::string> next() {
    for (std::string s; std::getline(in_, s);) {
      ++line_;
      if (!s.empty() && s.back() == '\r') s.pop_back();
      const auto first = s.find_first_not_of(" \t");
      if (first == std::string::npos || s[first] == '#') continue;
      return s;
    }
    return std::nullopt;
  }
  std::string require(const char* what) {
    auto s = next();
    if (!s) throw ParseError(std::string("unexpected end of input, expected ") + what, line_ + 1);
    return *s;
  }
  int line() const { return line_; }

 private:
  std::istream& in_;
  int line_ = 0;
};

// Rethrows library precondition errors as parse errors at `line`.
template <class Fn>
auto at_line(int line, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError&) {
    throw;
  } catch (const CapExceeded&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(e.what(), line);
  }
}

}  // namespace

FiniteField parse_field(std::string_view token, int line) {
  return at_line(line, [&] {
    const auto caret = token.find('^');
    if (caret == std::string_view::npos) {
      return FiniteField::of_order(static_cast<std::uint32_t>(parse_count(token, line, "field order")));
    }
    const auto p = parse_count(token.substr(0, caret), line, "field characteristic");
    const auto m = parse_count(token.substr(caret + 1), line, "extension degree");
    return FiniteField::make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(m));
  });
}

Vec parse_vector(const FiniteField& field, std::string_view text, int line) {
  Vec out;
  for (const auto& tok : split_ws(text)) {
    const long long v = parse_int(tok, line, "field element");
    if (v < 0 || !field.contains(static_cast<Rep>(v))) {
      throw ParseError("field element " + tok + " out of range for F_" + field.name(), line);
    }
    out.push_back(static_cast<Rep>(v));
  }
  return out;
}

LinearCode parse_code(std::istream& in) {
  LineReader r(in);
  const auto header = split_ws(r.require("header 'q n k'"));
  const int hline = r.line();
  if (header.size() != 3) throw ParseError("header must be 'q n k'", hline);
  const auto field = parse_field(header[0], hline);
  const std::size_t n = parse_count(header[1], hline, "length n");
  const std::size_t k = parse_count(header[2], hline, "dimension k");
  if (k > n) throw ParseError("dimension exceeds length", hline);
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < k; ++i) {
    const auto text = r.require("generator row");
    auto row = parse_vector(field, text, r.line());
    if (row.size() != n) {
      throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(n), r.line());
    }
    rows.push_back(std::move(row));
  }
  if (r.next()) throw ParseError("trailing content after " + std::to_string(k) + " rows", r.line());
  auto code = LinearCode::from_rows(field, n, rows);
  if (code.dimension() != k) {
    throw ParseError("rows span dimension " + std::to_string(code.dimension()) + ", header says " + std::to_string(k),
                     hline);
  }
  return code;
}

LinearCode parse_code_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_code(in);
}

std::string format_code(const LinearCode& c, std::string_view comment) {
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << "\n";
  out << c.field().name() << " " << c.length() << " " << c.dimension() << "\n";
  for (const auto& row : c.generator()) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << "\n";
  }
  return out.str();
}

std::vector<ProjectivePoint> parse_locations(const FiniteField& field, std::string_view text, int line) {
  const auto toks = split_ws(text);
  if (toks.size() == 1) {
    if (toks[0] == "F") return field_points(field);
    if (toks[0] == "Fstar") return multiplicative_group_points(field);
    if (toks[0] == "P1") return proj_line(field);
  }
  std::vector<ProjectivePoint> out;
  for (const auto& tok : toks) {
    if (tok == "inf") {
      out.push_back(ProjectivePoint::infinity());
      continue;
    }
    const long long v = parse_int(tok, line, "location (integer or inf)");
    if (v < 0 || !field.contains(static_cast<Rep>(v))) throw ParseError("location " + tok + " outside the field", line);
    out.push_back(ProjectivePoint::finite(static_cast<Rep>(v)));
  }
  if (out.empty()) throw ParseError("empty location vector", line);
  auto sorted = out;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw ParseError("repeated location", line);
  return out;
}

ScalingMap parse_scaling(const FiniteField& field, std::span<const ProjectivePoint> alpha, std::string_view text,
                         int line) {
  const auto toks = split_ws(text);
  if (toks.empty()) throw ParseError("empty scaling line", line);
  const auto from_fstar = [&](const ScalingMap& on_fstar) {
    ScalingMap f{{alpha.begin(), alpha.end()}, {}};
    for (const auto& z : alpha) f.values.push_back(z.is_infinity() || z.value() == 0 ? 1 : on_fstar(z));
    return f;
  };
  return at_line(line, [&] {
    if (toks[0] == "const") {
      if (toks.size() != 2) throw ParseError("expected 'const c'", line);
      const auto c = parse_vector(field, toks[1], line);
      auto f = constant_map(alpha, c[0]);
      f.validate(field);
      return f;
    }
    if (toks[0] == "fm") {
      if (toks.size() != 2) throw ParseError("expected 'fm m'", line);
      return from_fstar(f_m_map(field, parse_int(toks[1], line, "exponent")));
    }
    if (toks[0] == "fmm") {
      if (toks.size() != 3) throw ParseError("expected 'fmm m m2'", line);
      return from_fstar(f_mm_map(field, parse_int(toks[1], line, "exponent"), parse_int(toks[2], line, "exponent")));
    }
    ScalingMap f{{alpha.begin(), alpha.end()}, parse_vector(field, text, line)};
    if (f.values.size() != alpha.size()) {
      throw ParseError("scaling has " + std::to_string(f.values.size()) + " values for " +
                           std::to_string(alpha.size()) + " locations",
                       line);
    }
    f.validate(field);
    return f;
  });
}

CauchySpec parse_cauchy_spec(std::istream& in) {
  LineReader r(in);
  const auto header = split_ws(r.require("header 'q k'"));
  const int hline = r.line();
  if (header.size() != 2) throw ParseError("header must be 'q k'", hline);
  const auto field = parse_field(header[0], hline);
  const std::size_t k = parse_count(header[1], hline, "dimension k");
  const auto loc_text = r.require("location line");
  const auto alpha = parse_locations(field, loc_text, r.line());
  const auto scale_text = r.require("scaling line");
  const int sline = r.line();
  CauchySpec spec{field, k, alpha, parse_scaling(field, alpha, scale_text, sline)};
  if (r.next()) throw ParseError("trailing content after the scaling line", r.line());
  at_line(hline, [&] {
    spec.validate();
    return 0;
  });
  return spec;
}

CauchySpec parse_cauchy_spec_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_cauchy_spec(in);
}

std::string format_cauchy_spec(const CauchySpec& spec) {
  std::ostringstream out;
  out << spec.field.name() << " " << spec.k << "\n";
  for (std::size_t i = 0; i < spec.alpha.size(); ++i) out << (i ? " " : "") << spec.alpha[i].to_string();
  out << "\n";
  for (std::size_t i = 0; i < spec.alpha.size(); ++i) out << (i ? " " : "") << spec.f(spec.alpha[i]);
  out << "\n";
  return out.str();
}

}  // namespace gcode
