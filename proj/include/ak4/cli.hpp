#pragma once

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ak4/selftest.hpp"

namespace ak4 {

/// Exit-code contract, kept scriptable for parameter sweeps:
///   0  success (classify: tamed)
///   10 classify: not tamed
///   12 unreadable or malformed input files
///   13 domain errors (non-unimodular, orientation mismatch, cone on non-tamed J, ...)
///   14 internal invariant violations (theorem checks)
/// CLI11 usage errors keep CLI11's own nonzero codes.
namespace cli_detail {

using Q = Rational;

inline constexpr int exit_not_tamed = 10;
inline constexpr int exit_parse = 12;
inline constexpr int exit_domain = 13;
inline constexpr int exit_internal = 14;

struct LieFile {
  int dimension = 0;
  std::vector<BracketTerm<Q>> terms;
};

/// Parses the .lie syntax without constructing (validate wants the Jacobi
/// verdict rather than a construction failure).
inline LieFile parse_lie_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  // reuse the strict reader for syntax, but collect terms via the unchecked path
  std::istringstream syntax_pass(buffer.str());
  LieFile out;
  std::string line;
  int line_no = 0;
  while (std::getline(syntax_pass, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (out.dimension == 0) {
      std::string count;
      if (first != "dim" || !(ls >> count)) throw ParseError("expected header 'dim n'", line_no);
      try {
        out.dimension = std::stoi(count);
      } catch (const std::exception&) {
        throw ParseError("malformed dimension '" + count + "'", line_no);
      }
      if (out.dimension < 1) throw ParseError("dimension must be positive", line_no);
      continue;
    }
    std::string js, ks, cs, extra;
    if (!(ls >> js >> ks >> cs) || (ls >> extra))
      throw ParseError("expected 'i j k p/q'", line_no);
    try {
      out.terms.push_back(
          {std::stoi(first), std::stoi(js), std::stoi(ks), Rational::from_string(cs)});
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    } catch (const std::exception&) {
      throw ParseError("malformed index in 'i j k p/q'", line_no);
    }
  }
  if (out.dimension == 0) throw ParseError("missing 'dim n' header");
  return out;
}

inline AlmostComplexStructure<Q> load_acs(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_acs(in, n);
}

inline Orientation<Q> make_orientation(int zeta_sign) {
  if (zeta_sign != 1 && zeta_sign != -1)
    throw ParseError("--zeta accepts only 1 or -1");
  return Orientation<Q>::scaled(4, Q(zeta_sign));
}

inline void print_form(std::ostream& out, const KForm<Q>& f) {
  if (f.is_zero()) {
    out << "0";
    return;
  }
  bool first = true;
  for (MultiIndex I : index_basis(f.dimension(), f.grade())) {
    const Q c = f.coefficient(I);
    if (c == Q(0)) continue;
    if (!first) out << " + ";
    out << "(" << c << ") f^" << I.str();
    first = false;
  }
}

inline void print_vector(std::ostream& out, const KVector<Q>& v) {
  bool first = true;
  for (MultiIndex I : index_basis(v.dimension(), v.grade())) {
    const Q c = v.coefficient(I);
    if (c == Q(0)) continue;
    if (!first) out << " + ";
    out << "(" << c << ") f_" << I.str();
    first = false;
  }
  if (first) out << "0";
}

inline int cmd_validate(const std::string& algebra_path, bool json, std::ostream& out) {
  const LieFile file = parse_lie_file(algebra_path);
  const auto g = LieAlgebra<Q>::unchecked(file.dimension, file.terms);
  const auto jacobi = check_jacobi(g);
  Json report;
  report["dim"] = file.dimension;
  report["jacobi"] = jacobi.holds;
  if (!jacobi.holds) {
    report["jacobi_violation"] = {jacobi.triple[0], jacobi.triple[1], jacobi.triple[2]};
    if (json)
      out << report.dump(2) << "\n";
    else
      out << "jacobi: FAIL at triple (" << jacobi.triple[0] << ", " << jacobi.triple[1] << ", "
          << jacobi.triple[2] << ")\n";
    return exit_domain;
  }
  report["unimodular"] = is_unimodular(g);
  std::vector<int> betti_numbers;
  for (int k = 0; k <= file.dimension; ++k) betti_numbers.push_back(betti(g, k));
  report["betti"] = betti_numbers;
  if (json) {
    out << report.dump(2) << "\n";
  } else {
    out << "dim: " << file.dimension << "\n";
    out << "jacobi: ok\n";
    out << "unimodular: " << (report["unimodular"].get<bool>() ? "true" : "false") << "\n";
    out << "betti:";
    for (int b : betti_numbers) out << " " << b;
    out << "\n";
  }
  return 0;
}

inline LieAlgebra<Q> load_algebra_checked(const std::string& path) {
  const LieFile file = parse_lie_file(path);
  return LieAlgebra<Q>(file.dimension, file.terms);
}

inline int cmd_classify(const std::string& algebra_path, const std::string& j_path, int zeta_sign,
                        bool json, std::ostream& out) {
  const auto g = load_algebra_checked(algebra_path);
  const auto o = make_orientation(zeta_sign);
  const auto j = load_acs(j_path, g.dimension());
  const auto c = classify(g, o, j);
  if (json) {
    Json report = to_json(c);
    report["zeta_sign"] = zeta_sign;
    out << report.dump(2) << "\n";
  } else {
    out << "tamed: " << (c.tamed ? "true" : "false") << "\n";
    out << "almost_kahler: " << (c.almost_kahler ? "true" : "false") << "\n";
    out << "integrable: " << (c.integrable ? "true" : "false") << "\n";
    out << "b2: " << c.report.b2 << "  b_plus: " << c.report.b_plus
        << "  h_plus: " << c.report.h_plus << "  h_minus: " << c.report.h_minus << "\n";
    out << "H+ representatives:\n";
    for (const auto& f : c.report.h_plus_reps) {
      out << "  ";
      print_form(out, f);
      out << "\n";
    }
    out << "H- representatives:\n";
    for (const auto& f : c.report.h_minus_reps) {
      out << "  ";
      print_form(out, f);
      out << "\n";
    }
    if (c.compatible_form) {
      out << "compatible form: ";
      print_form(out, *c.compatible_form);
      out << "\n";
    }
    if (c.obstruction) {
      out << "obstruction vector v (v ^ Jv is exact, pairs to 0 with every closed form): ";
      print_vector(out, *c.obstruction);
      out << "\n";
    }
  }
  return c.tamed ? 0 : exit_not_tamed;
}

inline std::vector<Q> parse_coordinates(const std::string& text) {
  std::vector<Q> coords;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) coords.push_back(Rational::from_string(token));
  return coords;
}

inline int cmd_cone(const std::string& algebra_path, const std::string& j_path,
                    const std::string& class_text, int zeta_sign, bool json, std::ostream& out) {
  const auto g = load_algebra_checked(algebra_path);
  const auto o = make_orientation(zeta_sign);
  const auto j = load_acs(j_path, g.dimension());
  const auto semi = class_text.find(';');
  const auto plus = parse_coordinates(class_text.substr(0, semi));
  const auto minus = semi == std::string::npos
                         ? std::vector<Q>{}
                         : parse_coordinates(class_text.substr(semi + 1));
  const auto rep = j_cohomology(g, o, j);
  if (rep.h_minus != rep.b_plus - 1)
    throw NotTamedError("cone: J is not tamed, both cones are empty");
  const auto verdict = cone_membership(g, o, j, plus, minus);
  if (json) {
    Json report = to_json(verdict);
    report["h_plus_basis"] = Json::array();
    for (const auto& f : rep.h_plus_reps) report["h_plus_basis"].push_back(to_json(f));
    report["h_minus_basis"] = Json::array();
    for (const auto& f : rep.h_minus_reps) report["h_minus_basis"].push_back(to_json(f));
    out << report.dump(2) << "\n";
  } else {
    out << "coordinates are taken in the representative bases:\n";
    out << "H+ basis:\n";
    for (const auto& f : rep.h_plus_reps) {
      out << "  ";
      print_form(out, f);
      out << "\n";
    }
    out << "H- basis:\n";
    for (const auto& f : rep.h_minus_reps) {
      out << "  ";
      print_form(out, f);
      out << "\n";
    }
    out << "in_compatible_cone: " << (verdict.in_compatible_cone ? "true" : "false") << "\n";
    out << "in_tamed_cone: " << (verdict.in_tamed_cone ? "true" : "false") << "\n";
  }
  return 0;
}

inline int cmd_catalog(bool list, const std::string& show, const std::string& export_name,
                       const std::string& export_path, bool json, std::ostream& out) {
  if (list) {
    Json names = Json::array();
    for (const auto& name : catalog_list<Q>()) {
      if (json)
        names.push_back(name);
      else
        out << name << "\n";
    }
    if (json) out << names.dump(2) << "\n";
    return 0;
  }
  if (!show.empty()) {
    const auto& entry = catalog_get<Q>(show);
    if (json) {
      Json report;
      report["name"] = entry.name;
      report["description"] = entry.description;
      report["b2"] = entry.expected_b2;
      report["b_plus"] = entry.expected_b_plus;
      report["unimodular"] = entry.expected_unimodular;
      Json brackets = Json::array();
      for (const auto& t : entry.algebra.bracket_terms())
        brackets.push_back({{"i", t.i}, {"j", t.j}, {"k", t.k}, {"c", t.c.str()}});
      report["brackets"] = brackets;
      Json families = Json::array();
      for (const auto& [name, maker] : entry.families) families.push_back(name);
      report["families"] = families;
      out << report.dump(2) << "\n";
    } else {
      out << entry.name << ": " << entry.description << "\n";
      out << "b2 = " << entry.expected_b2 << ", b+ = " << entry.expected_b_plus << "\n";
      std::ostringstream lie;
      write_lie(lie, entry.algebra, entry.description);
      out << lie.str();
      for (const auto& [name, maker] : entry.families) out << "family: " << name << "\n";
    }
    return 0;
  }
  if (!export_name.empty()) {
    const auto& entry = catalog_get<Q>(export_name);
    std::ofstream file(export_path);
    if (!file) throw ParseError("cannot write '" + export_path + "'");
    write_lie(file, entry.algebra, entry.description);
    out << "wrote " << export_path << "\n";
    return 0;
  }
  throw ParseError("catalog: pass --list, --show NAME, or --export NAME PATH");
}

}  // namespace cli_detail

/// Parses and runs one CLI invocation; `args` excludes the program name.
inline int run_cli(std::vector<std::string> args, std::ostream& out = std::cout,
                   std::ostream& err = std::cerr) {
  using namespace cli_detail;
  CLI::App app{"exact tamed / almost-Kaehler classification on 4-dimensional Lie algebras"};
  app.require_subcommand(1);

  std::string algebra_path, j_path, class_text, show_name, export_name, export_path;
  int zeta_sign = 1;
  bool json = false;
  bool list = false;
  std::uint64_t seed = 0x5eedULL;

  auto* validate = app.add_subcommand("validate", "check a .lie file: Jacobi, unimodularity, Betti");
  validate->add_option("algebra", algebra_path, "path to a .lie file")->required();
  validate->add_flag("--json", json, "emit JSON");

  auto* classify_cmd = app.add_subcommand("classify", "tamed/almost-Kaehler verdict with witness");
  classify_cmd->add_option("algebra", algebra_path, "path to a .lie file")->required();
  classify_cmd->add_option("J", j_path, "path to a J matrix file")->required();
  classify_cmd->add_option("--zeta", zeta_sign, "orientation sign for zeta = +-f_1234");
  classify_cmd->add_flag("--json", json, "emit JSON");

  auto* cone = app.add_subcommand("cone", "tamed/compatible cone membership of a class");
  cone->add_option("algebra", algebra_path, "path to a .lie file")->required();
  cone->add_option("J", j_path, "path to a J matrix file")->required();
  cone->add_option("--class", class_text, "coordinates 'a,b,c[;d]' in the emitted bases")
      ->required();
  cone->add_option("--zeta", zeta_sign, "orientation sign for zeta = +-f_1234");
  cone->add_flag("--json", json, "emit JSON");

  auto* cat = app.add_subcommand("catalog", "the five unimodular symplectic algebras");
  cat->add_flag("--list", list, "list entry names");
  cat->add_option("--show", show_name, "print one entry");
  cat->add_option("--export", export_name, "entry to export as .lie");
  cat->add_option("--out", export_path, "output path for --export");
  cat->add_flag("--json", json, "emit JSON");

  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  selftest->add_option("--seed", seed, "seed for the randomized sweeps");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (validate->parsed()) return cmd_validate(algebra_path, json, out);
    if (classify_cmd->parsed()) return cmd_classify(algebra_path, j_path, zeta_sign, json, out);
    if (cone->parsed()) return cmd_cone(algebra_path, j_path, class_text, zeta_sign, json, out);
    if (cat->parsed()) return cmd_catalog(list, show_name, export_name, export_path, json, out);
    if (selftest->parsed()) return run_acceptance_verbose(out, seed) ? 0 : 1;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_parse;
  } catch (const std::domain_error& e) {
    // NotUnimodular, OrientationMismatch, NotTamed, invalid charts, metric issues
    err << "error: " << e.what() << "\n";
    return exit_domain;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_domain;
  } catch (const std::logic_error& e) {
    err << "internal error (theorem check failed): " << e.what() << "\n";
    return exit_internal;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_domain;
  }
  return 0;
}

}  // namespace ak4
