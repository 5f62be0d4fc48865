#pragma once

#include <istream>
#include <json.hpp>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ak4/catalog.hpp"

namespace ak4 {

using Json = nlohmann::json;

/// Reads the `.lie` structure-constant format:
///   dim n
///   i j k p/q     # coefficient of f_k in [f_i, f_j], i < j
/// with '#' comments and blank lines allowed.
inline LieAlgebra<Rational> read_lie(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  std::vector<BracketTerm<Rational>> terms;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank or comment-only line
    if (n < 0) {
      std::string count;
      if (first != "dim" || !(ls >> count))
        throw ParseError("expected header 'dim n'", line_no);
      try {
        n = std::stoi(count);
      } catch (const std::exception&) {
        throw ParseError("malformed dimension '" + count + "'", line_no);
      }
      std::string extra;
      if (ls >> extra) throw ParseError("trailing tokens after 'dim n'", line_no);
      continue;
    }
    std::string js, ks, cs, extra;
    if (!(ls >> js >> ks >> cs)) throw ParseError("expected 'i j k p/q'", line_no);
    if (ls >> extra) throw ParseError("trailing tokens after 'i j k p/q'", line_no);
    int i, j, k;
    try {
      i = std::stoi(first);
      j = std::stoi(js);
      k = std::stoi(ks);
    } catch (const std::exception&) {
      throw ParseError("malformed index in 'i j k p/q'", line_no);
    }
    Rational c;
    try {
      c = Rational::from_string(cs);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
    if (!(1 <= i && i < j)) throw ParseError("structure constants require 1 <= i < j", line_no);
    terms.push_back({i, j, k, c});
  }
  if (n < 0) throw ParseError("missing 'dim n' header");
  try {
    return LieAlgebra<Rational>(n, terms);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

inline void write_lie(std::ostream& out, const LieAlgebra<Rational>& g,
                      const std::string& comment = "") {
  if (!comment.empty()) out << "# " << comment << "\n";
  out << "dim " << g.dimension() << "\n";
  for (const auto& t : g.bracket_terms())
    out << t.i << " " << t.j << " " << t.k << " " << t.c << "\n";
}

/// Reads a J matrix file: n rows of n whitespace-separated rationals, row h
/// column k giving A_{hk} with J f_k = sum_h A_{hk} f_h.
inline AlmostComplexStructure<Rational> read_acs(std::istream& in, int n) {
  Mat<Rational> m(n, n);
  int line_no = 0;
  int row = 0;
  std::string line;
  while (row < n && std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string tok;
    int col = 0;
    while (ls >> tok) {
      if (col >= n) throw ParseError("too many entries in matrix row", line_no);
      try {
        m(row, col) = Rational::from_string(tok);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line_no);
      }
      ++col;
    }
    if (col == 0) continue;  // blank line
    if (col != n) throw ParseError("expected " + std::to_string(n) + " entries in matrix row",
                                   line_no);
    ++row;
  }
  if (row != n) throw ParseError("matrix file ended before " + std::to_string(n) + " rows");
  try {
    return AlmostComplexStructure<Rational>::from_matrix(m);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

/// Forms and vectors serialize as {"<indices>": "p/q"}; rationals are always
/// strings, never floating point.
template <Side V>
Json to_json(const Exterior<Rational, V>& e) {
  Json out = Json::object();
  for (const auto& [I, c] : e.terms()) out[I.str()] = c.str();
  return out;
}

template <typename E>
E exterior_from_json(const Json& j, int n, int k) {
  E out(n, k);
  for (const auto& [key, value] : j.items()) {
    std::vector<int> indices;
    for (char ch : key) {
      if (ch < '1' || ch > '9') throw ParseError("malformed index string '" + key + "'");
      indices.push_back(ch - '0');
    }
    out.add_term(indices, Rational::from_string(value.template get<std::string>()));
  }
  return out;
}

inline Json to_json(const JCohomologyReport<Rational>& rep) {
  Json out;
  out["b2"] = rep.b2;
  out["b_plus"] = rep.b_plus;
  out["h_plus"] = rep.h_plus;
  out["h_minus"] = rep.h_minus;
  out["h_plus_basis"] = Json::array();
  for (const auto& f : rep.h_plus_reps) out["h_plus_basis"].push_back(to_json(f));
  out["h_minus_basis"] = Json::array();
  for (const auto& f : rep.h_minus_reps) out["h_minus_basis"].push_back(to_json(f));
  return out;
}

inline Json to_json(const Classification<Rational>& c) {
  Json out;
  out["tamed"] = c.tamed;
  out["almost_kahler"] = c.almost_kahler;
  out["integrable"] = c.integrable;
  out["cohomology"] = to_json(c.report);
  if (c.compatible_form) {
    out["witness"]["type"] = "compatible_form";
    out["witness"]["form"] = to_json(*c.compatible_form);
  } else if (c.obstruction) {
    out["witness"]["type"] = "obstruction_vector";
    out["witness"]["vector"] = to_json(*c.obstruction);
  }
  return out;
}

inline Json to_json(const ConeVerdict<Rational>& v) {
  Json out;
  out["j_tamed"] = v.j_tamed;
  out["in_compatible_cone"] = v.in_compatible_cone;
  out["in_tamed_cone"] = v.in_tamed_cone;
  out["h_plus_part"] = to_json(v.h_plus_part);
  out["h_minus_part"] = to_json(v.h_minus_part);
  return out;
}

}  // namespace ak4
