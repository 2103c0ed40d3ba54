#pragma once

/*
  JSON, CSV and LaTeX output for the tables. JSON is canonical:
    {meta: {rank, family, version, order}, labels: [...], tables: {name: [[coeffs]]}}
  Polynomials are arrays of decimal coefficient strings, ascending degree.
  Partitions are integer arrays, bipartitions pairs of them.
*/

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "exotic/exact_algebra.hpp"
#include "exotic/fake_degrees.hpp"
#include "exotic/ff_oracle.hpp"
#include "exotic/green_tables.hpp"
#include "exotic/partitions.hpp"
#include "exotic/shoji_solver.hpp"

namespace exotic {

EXOTIC_ERROR(ParseError);

inline constexpr const char* kFormatVersion = "1";

using Json = nlohmann::ordered_json;

inline Json to_json(const Partition& p) { return Json(p.parts()); }

inline Json to_json(const Bipartition& b) { return Json::array({to_json(b.first), to_json(b.second)}); }

// bipartition for the exotic family, its first component for the symmetric one
inline Json label_json(Family f, const Bipartition& b) {
  return f == Family::exotic ? to_json(b) : to_json(b.first);
}

inline Json to_json(const ClassLabel& c) { return Json::array({to_json(c.positive), to_json(c.negative)}); }

inline Json to_json(const ExactPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coefficients()) a.push_back(c.get_str());
  return a;
}

inline ExactPoly poly_from_json(const Json& j) {
  std::vector<Rational> c;
  for (const auto& s : j) {
    Rational r;
    if (r.set_str(s.get<std::string>(), 10) != 0) throw ParseError("bad coefficient " + s.dump());
    r.canonicalize();
    c.push_back(r);
  }
  return ExactPoly(std::move(c));
}

inline Partition partition_from_json(const Json& j) { return Partition(j.get<std::vector<int>>()); }

inline Bipartition bipartition_from_json(const Json& j) {
  return {partition_from_json(j.at(0)), partition_from_json(j.at(1))};
}

inline Json table_json(const std::vector<std::vector<ExactPoly>>& t) {
  Json rows = Json::array();
  for (const auto& r : t) {
    Json row = Json::array();
    for (const auto& p : r) row.push_back(to_json(p));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::vector<std::vector<ExactPoly>> table_from_json(const Json& j) {
  std::vector<std::vector<ExactPoly>> t;
  for (const auto& r : j) {
    t.emplace_back();
    for (const auto& p : r) t.back().push_back(poly_from_json(p));
  }
  return t;
}

inline Json meta_json(int rank, Family f, const std::vector<Bipartition>& order) {
  Json o = Json::array();
  for (const auto& b : order) o.push_back(label_json(f, b));
  return Json{{"rank", rank}, {"family", family_name(f)}, {"version", kFormatVersion}, {"order", o}};
}

inline Json kostka_json(const KostkaSolution& sol) {
  const Family f = sol.r == 2 ? Family::exotic : Family::symmetric;
  Json j;
  j["meta"] = meta_json(sol.rank, f, sol.labels);
  Json a = Json::array();
  for (const auto& b : sol.labels) a.push_back(diagonal_exponent(sol.r, b));
  j["meta"][f == Family::exotic ? "a_values" : "n_values"] = a;
  j["labels"] = j["meta"]["order"];
  Json lam = Json::array();
  for (const auto& x : sol.xi) lam.push_back(Json::array({to_json(x)}));
  j["tables"] = Json{{"K", table_json(sol.P)}, {"Lambda", lam}};
  return j;
}

inline Json omega_json(const OmegaMatrix& om) {
  const Family f = om.r == 2 ? Family::exotic : Family::symmetric;
  Json j;
  j["meta"] = meta_json(om.rank, f, om.labels);
  j["labels"] = j["meta"]["order"];
  j["tables"] = Json{{"Omega", table_json(om.entries)}};
  return j;
}

inline Json green_json(const GreenTable& g, const ICTable& ic) {
  Json j;
  j["meta"] = meta_json(g.rank, g.family, g.cols);
  j["meta"]["sign_exponent"] = g.sign_exponent;
  j["labels"] = j["meta"]["order"];
  Json classes = Json::array();
  for (std::size_t i = 0; i < g.rows.size(); ++i) {
    Json c = g.family == Family::exotic ? to_json(g.rows[i]) : to_json(g.rows[i].positive);
    classes.push_back(Json{{"class", c}, {"size", g.class_sizes[i].get_str()}});
  }
  j["classes"] = classes;
  j["tables"] = Json{{"G", table_json(g.entries)}, {"IC", table_json(ic.entries)}};
  return j;
}

inline Json census_json(const OrbitCensus& c) {
  Json orbits = Json::array();
  auto mat = [](const FqMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows; ++i) {
      Json r = Json::array();
      for (int k = 0; k < m.cols; ++k) r.push_back(m(i, k));
      rows.push_back(r);
    }
    return rows;
  };
  for (const auto& o : c.orbits) {
    Json v = Json::array();
    for (int x : o.representative.v.e) v.push_back(x);
    orbits.push_back(Json{{"label", to_json(o.label)}, {"size", o.size}, {"x", mat(o.representative.x)}, {"v", v}});
  }
  return Json{{"meta", Json{{"rank", c.n}, {"q", c.q}, {"version", kFormatVersion}, {"total", c.total}}},
              {"orbits", orbits}};
}

// ---------------------------------------------------------------------------
// CSV: one block per table, "table,<name>" then a header row of column
// labels and one row per row label. A cell holds the coefficients in
// ascending degree separated by spaces; the zero polynomial is an empty cell.

struct CsvTable {
  std::string name;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<std::vector<ExactPoly>> entries;
  friend bool operator==(const CsvTable&, const CsvTable&) = default;
};

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::vector<std::string> csv_split(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted) throw ParseError("unterminated quote in CSV line");
  out.push_back(cur);
  return out;
}

inline std::string coeff_cell(const ExactPoly& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ' ';
    s += p[i].get_str();
  }
  return s;
}

inline ExactPoly poly_from_cell(const std::string& s) {
  std::istringstream is(s);
  std::vector<Rational> c;
  std::string tok;
  while (is >> tok) {
    Rational r;
    if (r.set_str(tok, 10) != 0) throw ParseError("bad coefficient '" + tok + "'");
    r.canonicalize();
    c.push_back(r);
  }
  return ExactPoly(std::move(c));
}

}  // namespace detail

inline std::string write_csv(const std::vector<CsvTable>& tables) {
  std::ostringstream os;
  for (const auto& t : tables) {
    os << "table," << detail::csv_field(t.name) << "\n";
    for (const auto& c : t.col_labels) os << "," << detail::csv_field(c);
    os << "\n";
    for (std::size_t i = 0; i < t.row_labels.size(); ++i) {
      os << detail::csv_field(t.row_labels[i]);
      for (const auto& p : t.entries[i]) os << "," << detail::csv_field(detail::coeff_cell(p));
      os << "\n";
    }
  }
  return os.str();
}

inline std::vector<CsvTable> parse_csv(const std::string& text) {
  std::vector<CsvTable> out;
  std::istringstream is(text);
  std::string line;
  bool header_pending = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto f = detail::csv_split(line);
    if (f.size() == 2 && f[0] == "table") {
      out.push_back({f[1], {}, {}, {}});
      header_pending = true;
      continue;
    }
    if (out.empty()) throw ParseError("CSV data before any table header");
    auto& t = out.back();
    if (header_pending) {
      t.col_labels.assign(f.begin() + 1, f.end());
      header_pending = false;
      continue;
    }
    if (f.size() != t.col_labels.size() + 1) throw ParseError("CSV row has the wrong number of cells");
    t.row_labels.push_back(f[0]);
    t.entries.emplace_back();
    for (std::size_t k = 1; k < f.size(); ++k) t.entries.back().push_back(detail::poly_from_cell(f[k]));
  }
  return out;
}

inline std::string label_string(Family f, const Bipartition& b) {
  return f == Family::exotic ? b.to_string() : "(" + b.first.to_string() + ")";
}

inline std::string class_string(Family f, const ClassLabel& c) {
  return f == Family::exotic ? c.to_string() : "(" + c.positive.to_string() + ")";
}

inline std::vector<CsvTable> green_csv_tables(const GreenTable& g, const ICTable& ic) {
  CsvTable gt{"G", {}, {}, g.entries}, it{"IC", {}, {}, ic.entries};
  for (const auto& r : g.rows) gt.row_labels.push_back(class_string(g.family, r));
  for (const auto& c : g.cols) {
    gt.col_labels.push_back(label_string(g.family, c));
    it.row_labels.push_back(label_string(g.family, c));
    it.col_labels.push_back(label_string(g.family, c));
  }
  return {gt, it};
}

inline std::vector<CsvTable> kostka_csv_tables(const KostkaSolution& sol) {
  const Family f = sol.r == 2 ? Family::exotic : Family::symmetric;
  CsvTable k{"K", {}, {}, sol.P}, l{"Lambda", {}, {"xi"}, {}};
  for (const auto& b : sol.labels) {
    k.row_labels.push_back(label_string(f, b));
    k.col_labels.push_back(label_string(f, b));
    l.row_labels.push_back(label_string(f, b));
  }
  for (const auto& x : sol.xi) l.entries.push_back({x});
  return {k, l};
}

inline std::vector<CsvTable> omega_csv_tables(const OmegaMatrix& om) {
  const Family f = om.r == 2 ? Family::exotic : Family::symmetric;
  CsvTable t{"Omega", {}, {}, om.entries};
  for (const auto& b : om.labels) {
    t.row_labels.push_back(label_string(f, b));
    t.col_labels.push_back(label_string(f, b));
  }
  return {t};
}

// ---------------------------------------------------------------------------
// LaTeX

inline std::string latex_poly(const ExactPoly& p, const std::string& var = "q") {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    const Rational& x = p[i];
    if (x == 0) continue;
    Rational a = x < 0 ? Rational(-x) : x;
    os << (first ? (x < 0 ? "-" : "") : (x < 0 ? " - " : " + "));
    first = false;
    if (a != 1 || i == 0) {
      if (a.get_den() == 1) os << a.get_num().get_str();
      else os << "\\frac{" << a.get_num().get_str() << "}{" << a.get_den().get_str() << "}";
    }
    if (i > 0) os << var;
    if (i > 1) os << "^{" << i << "}";
  }
  return os.str();
}

inline std::string latex_label(Family f, const Bipartition& b) {
  auto part = [](const Partition& p) { return p.empty() ? std::string("\\varnothing") : p.to_string(); };
  if (f == Family::symmetric) return "(" + part(b.first) + ")";
  return "(" + part(b.first) + ";" + part(b.second) + ")";
}

/*
  Signed Green values (-1)^n G(w, M). For the symmetric family each entry is
  written as Psi_w(q) times the character sum, Psi_w(q) = prod (q^{w_i} + 1).
*/
inline std::string green_latex(const GreenTable& g) {
  std::ostringstream os;
  const bool neg = g.sign_exponent % 2 != 0;
  os << "\\begin{tabular}{l" << std::string(g.cols.size(), 'c') << "}\n";
  os << "$w$";
  for (const auto& c : g.cols) os << " & $" << latex_label(g.family, c) << "$";
  os << " \\\\\n\\hline\n";
  for (std::size_t i = 0; i < g.rows.size(); ++i) {
    const auto& w = g.rows[i];
    if (g.family == Family::exotic) {
      os << "$(" << (w.positive.empty() ? "\\varnothing" : w.positive.to_string()) << ";"
         << (w.negative.empty() ? "\\varnothing" : w.negative.to_string()) << ")$";
    } else {
      os << "$(" << w.positive.to_string() << ")$";
    }
    ExactPoly psi;
    std::string psi_tex;
    if (g.family == Family::symmetric) {
      psi = psi_poly(w.positive);
      for (int k : w.positive.parts()) psi_tex += "(" + latex_poly(ExactPoly::monomial(Rational(1), static_cast<std::size_t>(k)) + ExactPoly(1)) + ")";
    }
    for (std::size_t j = 0; j < g.cols.size(); ++j) {
      ExactPoly e = neg ? -g.entries[i][j] : g.entries[i][j];
      os << " & $";
      if (g.family == Family::symmetric && !e.is_zero()) {
        ExactPoly inner = exact_quotient(e, psi);
        os << psi_tex << "\\left(" << latex_poly(inner) << "\\right)";
      } else {
        os << latex_poly(e);
      }
      os << "$";
    }
    os << " \\\\\n";
  }
  os << "\\end{tabular}\n";
  return os.str();
}

inline std::string matrix_latex(Family f, const std::vector<Bipartition>& labels,
                                const std::vector<std::vector<ExactPoly>>& t, const std::string& var) {
  std::ostringstream os;
  os << "\\begin{tabular}{l" << std::string(labels.size(), 'c') << "}\n";
  for (const auto& c : labels) os << " & $" << latex_label(f, c) << "$";
  os << " \\\\\n\\hline\n";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    os << "$" << latex_label(f, labels[i]) << "$";
    for (const auto& p : t[i]) os << " & $" << latex_poly(p, var) << "$";
    os << " \\\\\n";
  }
  os << "\\end{tabular}\n";
  return os.str();
}

}  // namespace exotic
