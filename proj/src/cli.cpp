#include "gcode/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "gcode/cauchy.hpp"
#include "gcode/classify.hpp"
#include "gcode/error.hpp"
#include "gcode/groupalg.hpp"
#include "gcode/io.hpp"

namespace gcode {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json cycles(const std::vector<Permutation>& perms) {
  Json a = Json::array();
  for (const auto& p : perms) a.push_back(p.to_cycles());
  return a;
}

Json witnesses(const std::vector<Witness>& ws) {
  Json a = Json::array();
  for (const auto& w : ws) a.push_back({{"type", w.iso_type}, {"order", w.group.order()}, {"generators", cycles(w.group.generators())}});
  return a;
}

Json one_dim_json(const OneDimReport& r) {
  Json j{{"left_group_code", r.is_left_group_code}, {"n", r.n}};
  if (r.is_left_group_code) {
    j["h"] = r.h;
    j["s"] = r.s;
    j["u"] = r.u;
    j["xi"] = r.xi;
  }
  return j;
}

Json admissibility(const OneDimReport& r, const std::vector<FiniteGroupTable>& groups) {
  Json a = Json::array();
  for (const auto& g : groups) a.push_back({{"group", g.name()}, {"admissible", one_dim_admissible(r, g)}});
  return a;
}

std::vector<FiniteGroupTable> groups_for(const std::vector<std::string>& specs, std::size_t n) {
  std::vector<FiniteGroupTable> out;
  for (const auto& s : specs) out.push_back(group_from_spec(s));
  if (specs.empty() && n >= 1 && n <= static_cast<std::size_t>(kMaxTabulatedOrder)) {
    out = groups_of_order(static_cast<int>(n));
  }
  return out;
}

Json structure_json(const CauchyGroupStructure& s) {
  return {{"gamma_order", s.gamma_order},
          {"left_group_code", s.is_left_group_code},
          {"witnesses", witnesses(s.witnesses)},
          {"abelian_witness", s.has_abelian_witness},
          {"cyclic_witness", s.has_cyclic_witness}};
}

std::string verdict(const CauchyGroupStructure& s) {
  if (!s.is_left_group_code) return "not a left group code";
  bool cyclic = false, dihedral_only = false;
  std::string types;
  for (const auto& w : s.witnesses) {
    types += (types.empty() ? "" : ", ") + w.iso_type;
    cyclic = cyclic || w.group.is_cyclic();
    dihedral_only = dihedral_only || (is_dihedral(w.group) && !w.group.is_abelian());
  }
  if (!cyclic && dihedral_only && s.witnesses.size() == 1) return "dihedral-only left group code (" + types + ")";
  return "left group code (" + types + ")";
}

Json cauchy_json(const CauchySpec& spec, const Caps& caps) {
  const auto a = analyze_cauchy(spec, caps);
  Json j{{"spec", format_cauchy_spec(spec)},
         {"length", spec.length()},
         {"dimension", spec.k},
         {"generator_matrix", format_code(a.code)},
         {"mds", a.mds}};
  if (a.min_distance) j["min_distance"] = *a.min_distance;
  if (a.one_dim) j["one_dim"] = one_dim_json(*a.one_dim);
  if (a.structure) {
    j["verdict"] = verdict(*a.structure);
    j["structure"] = structure_json(*a.structure);
  }
  if (a.length_q) {
    const auto& r = *a.length_q;
    j["length_q"] = {{"relocated_spec", format_cauchy_spec(r.relocated)},
                     {"scaling_constant", r.scaling_constant},
                     {"consistent", r.consistent},
                     {"notes", r.notes}};
  }
  if (a.length_qm1) {
    const auto& r = *a.length_qm1;
    Json x{{"normalized_spec", format_cauchy_spec(r.normalized)},
           {"normalization", r.normalization},
           {"predicted_cyclic", r.predicted_cyclic}};
    if (r.predicted_cyclic) x["m"] = r.m;
    x["predicted_dihedral"] = r.predicted_dihedral;
    if (r.predicted_dihedral) x["dihedral_exponents"] = {r.dm, r.dm2};
    x["computed_cyclic"] = r.computed_cyclic;
    x["computed_dihedral"] = r.computed_dihedral;
    x["consistent"] = r.consistent;
    x["notes"] = r.notes;
    j["length_qm1"] = x;
  }
  if (a.divisibility) {
    const auto& r = *a.divisibility;
    j["divisibility"] = {{"n_divides_q_q_minus_1", r.divides},
                         {"gamma_fixes_infinity", r.gamma_fixes_infinity},
                         {"subfield_pattern", r.subfield_pattern},
                         {"consistent", r.consistent},
                         {"corollaries_hold", r.corollaries_hold},
                         {"notes", r.notes}};
  }
  j["notes"] = a.notes;
  return j;
}

// Human rendering of a report document: "key: value", nested blocks indented.
void render(const Json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  const auto scalar = [](const Json& v) -> std::string {
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  };
  for (const auto& [key, v] : j.items()) {
    if (v.is_object()) {
      out << pad << key << ":\n";
      render(v, out, indent + 2);
    } else if (v.is_array()) {
      if (v.empty()) {
        out << pad << key << ": (none)\n";
      } else if (std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_primitive(); })) {
        const bool lines = key == "notes" || key == "phi" || key == "violations";
        out << pad << key << ":" << (lines ? "\n" : "");
        for (const auto& e : v) out << (lines ? pad + "  " : " ") << scalar(e) << (lines ? "\n" : "");
        if (!lines) out << "\n";
      } else {
        out << pad << key << ":\n";
        for (const auto& e : v) {
          out << pad << "  -\n";
          render(e, out, indent + 4);
        }
      }
    } else if (v.is_string() && v.get<std::string>().find('\n') != std::string::npos) {
      out << pad << key << ":\n";
      std::istringstream lines(v.get<std::string>());
      for (std::string line; std::getline(lines, line);) out << pad << "  " << line << "\n";
    } else {
      out << pad << key << ": " << scalar(v) << "\n";
    }
  }
}

// Machine documents are flat: nested objects become dotted keys, arrays stay.
void flatten_into(const Json& j, const std::string& prefix, Json& out) {
  for (const auto& [key, v] : j.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (v.is_object()) {
      flatten_into(v, name, out);
    } else {
      out[name] = v;
    }
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide whether linear codes are (left, two-sided, abelian) group codes and analyse Cauchy codes.",
               "gcode"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Caps caps;
  bool machine = false;
  app.add_flag("--machine", machine, "Print one JSON document instead of text");
  app.add_option("--cap-n", caps.max_length, "Largest code length for automorphism and classification searches");
  app.add_option("--cap-group", caps.max_group_elements, "Largest permutation group enumerated");
  app.add_option("--seed", caps.seed, "Candidate order for randomized searches (never changes results)");

  std::string code_file, group_spec;
  auto* paut_cmd = app.add_subcommand("paut", "Permutation automorphism group of a code file");
  paut_cmd->add_option("code-file", code_file, "Code file: 'q n k' then k rows")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Group-code classification of a code file");
  classify_cmd->add_option("code-file", code_file, "Code file: 'q n k' then k rows")->required();
  classify_cmd->add_option("--group", group_spec, "Also decide left G-codes for this group spec (e.g. S3, C2XC2)");

  std::string spec_file, loc, scale, q_text;
  std::size_t k = 0;
  bool search_qm2 = false;
  auto* cauchy_cmd = app.add_subcommand("cauchy", "Construct and classify a Cauchy code");
  cauchy_cmd->add_option("spec-file", spec_file, "Cauchy spec file: 'q k', locations, scaling");
  cauchy_cmd->add_option("--q", q_text, "Field order (p, p^m or integer)");
  cauchy_cmd->add_option("--k", k, "Dimension");
  cauchy_cmd->add_option("--loc", loc, "Locations: integers and inf, or F, Fstar, P1");
  cauchy_cmd->add_option("--scale", scale, "'const c', 'fm m', 'fmm m m2' or explicit values")->default_val("const 1");
  cauchy_cmd->add_flag("--search-qm2", search_qm2, "Search all length q-2 Cauchy codes for a left group code");

  std::string vector_text;
  std::vector<std::string> groups;
  auto* onedim_cmd = app.add_subcommand("onedim", "Classify the one-dimensional code spanned by a vector");
  onedim_cmd->add_option("--q", q_text, "Field order")->required();
  onedim_cmd->add_option("--vector", vector_text, "Space-separated integer reps")->required();
  onedim_cmd->add_option("--group", groups, "Group specs to test (default: every group of order n)");

  bool two_sided = false;
  auto* ideals_cmd = app.add_subcommand("ideals", "Enumerate the left (or two-sided) ideals of F_q G");
  ideals_cmd->add_option("--group", group_spec, "Group spec")->required();
  ideals_cmd->add_option("--q", q_text, "Field order")->required();
  ideals_cmd->add_flag("--two-sided", two_sided, "Two-sided ideals only");

  auto* ab_cmd = app.add_subcommand("check-ab", "Check that two-sided ideals of F_q G are abelian group codes");
  ab_cmd->add_option("--group", group_spec, "Group spec with an abelian factorization G = AB")->required();
  ab_cmd->add_option("--q", q_text, "Field order")->required();

  std::vector<const char*> argv{"gcode"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "usage error: " << e.what() << "\n" << "run 'gcode --help' for usage\n";
    return kExitUsage;
  }

  try {
    Json doc{{"schema", kMachineSchema}};
    if (paut_cmd->parsed() || classify_cmd->parsed()) {
      const auto code = parse_code_text(read_file(code_file));
      const auto r = classify_code(code, caps);
      doc["command"] = paut_cmd->parsed() ? "paut" : "classify";
      doc["length"] = r.length;
      doc["dimension"] = r.dimension;
      doc["paut_order"] = r.paut_order;
      doc["paut_generators"] = cycles(r.paut_generators);
      doc["paut_is_symmetric"] = r.paut_is_symmetric;
      doc["transitive"] = orbit(r.paut_generators, r.length, 0).size() == r.length;
      if (paut_cmd->parsed()) {
        doc["regular_subgroup_classes"] = witnesses(r.left_witnesses);
      } else {
        doc["left_group_code"] = r.is_left_group_code;
        doc["left_witnesses"] = witnesses(r.left_witnesses);
        doc["group_code"] = r.is_group_code;
        doc["two_sided_witnesses"] = witnesses(r.two_sided_witnesses);
        doc["abelian_group_code"] = r.is_abelian_group_code;
        doc["cyclic_group_code"] = r.is_cyclic_group_code;
        if (r.dimension == 1) {
          const auto od = classify_one_dim(code.field(), code.generator().front());
          doc["one_dim"] = one_dim_json(od);
          doc["one_dim"]["admissibility"] = admissibility(od, groups_for({}, r.length));
        }
        if (!group_spec.empty()) {
          const auto g = group_from_spec(group_spec);
          const auto w = is_left_g_code(code, g, caps);
          doc["group"] = g.name();
          doc["left_g_code"] = w.has_value();
          if (w) {
            Json phi = Json::array();
            for (std::size_t i = 0; i < code.length(); ++i) {
              phi.push_back(std::to_string(i + 1) + " -> " + g.element_name(w->phi(i)));
            }
            doc["witness_generators"] = cycles(w->h.generators());
            doc["phi"] = phi;
          }
        }
        doc["notes"] = r.notes;
      }
    } else if (cauchy_cmd->parsed()) {
      doc["command"] = "cauchy";
      if (search_qm2) {
        if (q_text.empty() || k == 0) throw UsageError("--search-qm2 needs --q and --k");
        const auto r = length_qm2_check(parse_field(q_text), k, caps);
        doc["q"] = r.q;
        doc["k"] = r.k;
        doc["divisibility_allows"] = r.divisibility_allows;
        doc["stabilizers_checked"] = r.stabilizers_checked;
        doc["stabilizer_orders_divide_6"] = r.stabilizer_orders_divide_6;
        doc["location_sets_searched"] = r.location_sets_searched;
        doc["found"] = r.witness.has_value();
        if (r.witness) {
          doc["witness_type"] = r.witness_type;
          doc["analysis"] = cauchy_json(*r.witness, caps);
        }
        doc["notes"] = r.notes;
      } else {
        CauchySpec spec = [&] {
          if (!spec_file.empty()) {
            if (!q_text.empty() || !loc.empty()) throw UsageError("give either a spec file or --q/--k/--loc, not both");
            return parse_cauchy_spec_text(read_file(spec_file));
          }
          if (q_text.empty() || k == 0 || loc.empty()) throw UsageError("cauchy needs a spec file or --q, --k and --loc");
          return parse_cauchy_spec_text(q_text + " " + std::to_string(k) + "\n" + loc + "\n" + scale + "\n");
        }();
        doc.update(cauchy_json(spec, caps));
      }
    } else if (onedim_cmd->parsed()) {
      const auto field = parse_field(q_text);
      const auto v = parse_vector(field, vector_text);
      const auto r = classify_one_dim(field, v);
      doc["command"] = "onedim";
      doc.update(one_dim_json(r));
      doc["admissibility"] = admissibility(r, groups_for(groups, v.size()));
    } else if (ideals_cmd->parsed()) {
      const auto g = group_from_spec(group_spec);
      const GroupAlgebra algebra(parse_field(q_text), g);
      const auto ideals = enumerate_ideals(algebra, two_sided ? Sidedness::two_sided : Sidedness::left, caps);
      std::string labels;
      for (int a = 0; a < g.order(); ++a) labels += (a ? " " : "") + g.element_name(a);
      doc["command"] = "ideals";
      doc["group"] = g.name();
      doc["q"] = algebra.field().q();
      doc["sidedness"] = two_sided ? "two-sided" : "left";
      doc["coordinates"] = labels;
      doc["count"] = ideals.size();
      Json list = Json::array();
      for (const auto& ideal : ideals) {
        const std::string comment = (two_sided ? "two-sided" : "left") + std::string(" ideal of F_") +
                                    algebra.field().name() + "[" + g.name() + "], coordinates " + labels;
        list.push_back({{"dimension", ideal.dimension()}, {"code", format_code(ideal, comment)}});
      }
      doc["ideals"] = list;
    } else if (ab_cmd->parsed()) {
      const auto g = group_from_spec(group_spec);
      const auto ab = find_abelian_factorization(g);
      if (!ab) throw std::invalid_argument(g.name() + " has no factorization AB with A, B abelian");
      const auto r = check_ab_theorem(g, *ab, parse_field(q_text), caps);
      const auto names = [&](const std::vector<int>& ls) {
        Json a = Json::array();
        for (int x : ls) a.push_back(g.element_name(x));
        return a;
      };
      doc["command"] = "check-ab";
      doc["group"] = r.group;
      doc["q"] = r.q;
      doc["a"] = names(ab->a);
      doc["b"] = names(ab->b);
      doc["two_sided_ideals"] = r.ideals;
      doc["by_certificate"] = r.by_certificate;
      doc["by_search"] = r.by_search;
      doc["violations"] = r.violations;
      doc["passed"] = r.passed();
    }
    if (machine) {
      Json flat = Json::object();
      flatten_into(doc, "", flat);
      out << flat.dump(2) << "\n";
    } else {
      doc.erase("schema");
      render(doc, out, 0);
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::domain_error& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::out_of_range& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitParse;
  }
}

}  // namespace gcode
