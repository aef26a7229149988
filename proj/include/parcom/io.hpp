#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "parcom/algpcom.hpp"
#include "parcom/hopfpc.hpp"

// JSON wire formats. Entries are exact rationals serialized as canonical
// "p" / "p/q" strings; matrices are arrays of rows. Objects are emitted with
// sorted keys and no volatile fields, so identical inputs produce
// byte-identical output.
namespace parcom::io {

using nlohmann::json;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

inline void save_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

// ---- matrices and vectors ---------------------------------------------------

inline json matrix_json(const LinMap& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json vector_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const Rational& x : v) out.push_back(x.str());
  return out;
}

inline Rational entry_from(const json& j, const std::string& what) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(what + ": " + e.what());
  }
  throw ParseError(what + ": entries must be integers or \"p/q\" strings");
}

inline LinMap matrix_from(const json& j, std::size_t rows, std::size_t cols,
                          const std::string& what) {
  if (!j.is_array() || j.size() != rows)
    throw ParseError(what + ": expected " + std::to_string(rows) + " rows");
  LinMap m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = j[i];
    if (!row.is_array() || row.size() != cols)
      throw ParseError(what + ": expected " + std::to_string(cols) + " columns");
    for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = entry_from(row[c], what);
  }
  return m;
}

inline const json& field(const json& j, const std::string& key, const std::string& what) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(what + ": missing field '" + key + "'");
  return *it;
}

inline std::size_t size_from(const json& f, const std::string& what) {
  // parsed files store nonnegative ints as unsigned, in-memory literals as signed
  if (f.is_number_unsigned()) return f.get<std::size_t>();
  if (f.is_number_integer() && f.get<long long>() >= 0)
    return static_cast<std::size_t>(f.get<long long>());
  throw ParseError(what + ": expected a nonnegative size");
}

inline std::size_t dim_field(const json& j, const std::string& key, const std::string& what) {
  return size_from(field(j, key, what), what + ": '" + key + "'");
}

// ---- structures -------------------------------------------------------------

inline json structure_json(const Coalgebra& c) {
  return {{"kind", "coalgebra"},
          {"dim", c.dim},
          {"delta", matrix_json(c.delta)},
          {"eps", matrix_json(c.eps)}};
}

inline json structure_json(const Algebra& a) {
  return {{"kind", "algebra"},
          {"dim", a.dim},
          {"mu", matrix_json(a.mu)},
          {"unit", matrix_json(a.unit)}};
}

inline json structure_json(const Bialgebra& b) {
  return {{"kind", "bialgebra"}, {"dim", b.dim()},
          {"delta", matrix_json(b.delta())}, {"eps", matrix_json(b.eps())},
          {"mu", matrix_json(b.mu())},       {"unit", matrix_json(b.unit())}};
}

inline json structure_json(const HopfAlgebra& h) {
  json j = structure_json(h.bi);
  j["kind"] = "hopf";
  j["antipode"] = matrix_json(h.antipode);
  return j;
}

inline std::vector<std::vector<std::size_t>> table_from(const json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) throw ParseError(what + ": expected a multiplication table");
  std::vector<std::vector<std::size_t>> t;
  for (const json& row : j) {
    if (!row.is_array() || row.size() != j.size()) throw ParseError(what + ": ragged table");
    std::vector<std::size_t> r;
    for (const json& e : row) r.push_back(size_from(e, what + ": table entry"));
    t.push_back(std::move(r));
  }
  return t;
}

// Named builders accepted anywhere a structure object is expected.
inline std::optional<HopfAlgebra> hopf_fixture(const std::string& name) {
  if (name == "kc2") return kc2();
  if (name == "ks3") return ks3();
  if (name == "sweedler") return sweedler_h4();
  return std::nullopt;
}

inline HopfAlgebra hopf_from(const json& j) {
  const std::string what = "structure";
  if (j.contains("fixture")) {
    const std::string name = field(j, "fixture", what).get<std::string>();
    if (auto h = hopf_fixture(name)) return *h;
    throw ParseError(what + ": unknown hopf fixture '" + name + "'");
  }
  const std::string kind = field(j, "kind", what).get<std::string>();
  if (kind == "group") {
    try {
      return group_algebra(FiniteGroup::from_table(table_from(field(j, "table", what), what)));
    } catch (const AxiomViolation& e) {
      throw ParseError(what + ": " + e.what());
    }
  }
  if (kind != "hopf") throw ParseError(what + ": kind '" + kind + "' is not a Hopf algebra");
  const std::size_t n = dim_field(j, "dim", what);
  Bialgebra bi{Coalgebra{n, matrix_from(field(j, "delta", what), n * n, n, "delta"),
                         matrix_from(field(j, "eps", what), 1, n, "eps")},
               Algebra{n, matrix_from(field(j, "mu", what), n, n * n, "mu"),
                       matrix_from(field(j, "unit", what), n, 1, "unit")}};
  if (j.contains("antipode"))
    return HopfAlgebra{std::move(bi), matrix_from(j["antipode"], n, n, "antipode")};
  auto s = find_antipode(bi);
  if (!s) throw ParseError(what + ": no antipode given and none exists");
  return HopfAlgebra{std::move(bi), std::move(*s)};
}

inline Bialgebra bialgebra_from(const json& j) {
  const std::string what = "structure";
  if (j.contains("fixture")) {
    const std::string name = field(j, "fixture", what).get<std::string>();
    if (name == "truncated-powers") return truncated_powers_bialgebra();
    if (auto h = hopf_fixture(name)) return h->bi;
    throw ParseError(what + ": unknown bialgebra fixture '" + name + "'");
  }
  const std::string kind = field(j, "kind", what).get<std::string>();
  if (kind == "hopf" || kind == "group") return hopf_from(j).bi;
  if (kind != "bialgebra") throw ParseError(what + ": kind '" + kind + "' is not a bialgebra");
  const std::size_t n = dim_field(j, "dim", what);
  return Bialgebra{Coalgebra{n, matrix_from(field(j, "delta", what), n * n, n, "delta"),
                             matrix_from(field(j, "eps", what), 1, n, "eps")},
                   Algebra{n, matrix_from(field(j, "mu", what), n, n * n, "mu"),
                           matrix_from(field(j, "unit", what), n, 1, "unit")}};
}

inline Coalgebra coalgebra_from(const json& j) {
  const std::string what = "structure";
  const std::string kind =
      j.contains("fixture") ? "fixture" : field(j, "kind", what).get<std::string>();
  if (kind == "fixture" || kind == "hopf" || kind == "group" || kind == "bialgebra")
    return bialgebra_from(j).co;
  if (kind != "coalgebra") throw ParseError(what + ": kind '" + kind + "' is not a coalgebra");
  const std::size_t n = dim_field(j, "dim", what);
  return Coalgebra{n, matrix_from(field(j, "delta", what), n * n, n, "delta"),
                   matrix_from(field(j, "eps", what), 1, n, "eps")};
}

inline Algebra algebra_from(const json& j) {
  const std::string what = "structure";
  const std::string kind =
      j.contains("fixture") ? "fixture" : field(j, "kind", what).get<std::string>();
  if (kind == "fixture" || kind == "hopf" || kind == "group" || kind == "bialgebra") {
    Bialgebra b = bialgebra_from(j);
    return b.alg;
  }
  if (kind != "algebra") throw ParseError(what + ": kind '" + kind + "' is not an algebra");
  const std::size_t n = dim_field(j, "dim", what);
  return Algebra{n, matrix_from(field(j, "mu", what), n, n * n, "mu"),
                 matrix_from(field(j, "unit", what), n, 1, "unit")};
}

// ---- data files -------------------------------------------------------------

inline json datum_json(const PartialComoduleDatum& d) {
  return {{"coalgebra", structure_json(d.H)},
          {"x_dim", d.x_dim},
          {"bullet_dim", d.bullet_dim},
          {"pi", matrix_json(d.pi)},
          {"rho", matrix_json(d.rho)},
          {"direction", d.direction == Direction::Standard ? "std" : "op"}};
}

inline PartialComoduleDatum datum_from(const json& j) {
  const std::string what = "datum";
  Coalgebra h = coalgebra_from(field(j, "coalgebra", what));
  const std::size_t m = dim_field(j, "x_dim", what);
  const std::size_t k = dim_field(j, "bullet_dim", what);
  Direction dir = Direction::Standard;
  if (j.contains("direction")) {
    const std::string d = j["direction"].get<std::string>();
    if (d == "op")
      dir = Direction::Opposite;
    else if (d != "std")
      throw ParseError(what + ": direction must be \"std\" or \"op\"");
  }
  const std::size_t n = h.dim;
  return PartialComoduleDatum{std::move(h), m, k,
                              matrix_from(field(j, "pi", what), k, m * n, "pi"),
                              matrix_from(field(j, "rho", what), k, m, "rho"), dir};
}

inline json module_json(const PartialModule& pm) {
  return {{"hopf", structure_json(pm.H)}, {"m_dim", pm.m_dim},
          {"lambda", matrix_json(pm.lambda)}};
}

inline PartialModule module_from(const json& j) {
  const std::string what = "module";
  HopfAlgebra h = hopf_from(field(j, "hopf", what));
  const std::size_t m = dim_field(j, "m_dim", what);
  const std::size_t n = h.dim();
  return PartialModule{std::move(h), m,
                       matrix_from(field(j, "lambda", what), m, n * m, "lambda")};
}

inline json parrep_json(const PartialGroupRep& r) {
  json pi = json::object();
  for (std::size_t g = 0; g < r.G.order; ++g) pi[std::to_string(g)] = matrix_json(r.pi[g]);
  return {{"group", r.G.table}, {"v_dim", r.v_dim}, {"pi", std::move(pi)}};
}

inline PartialGroupRep parrep_from(const json& j) {
  const std::string what = "parrep";
  FiniteGroup g;
  try {
    g = FiniteGroup::from_table(table_from(field(j, "group", what), what));
  } catch (const AxiomViolation& e) {
    throw ParseError(what + ": " + e.what());
  }
  const std::size_t v = dim_field(j, "v_dim", what);
  const json& pi = field(j, "pi", what);
  PartialGroupRep r{std::move(g), v, {}};
  for (std::size_t e = 0; e < r.G.order; ++e) {
    const std::string key = std::to_string(e);
    if (!pi.contains(key)) throw ParseError(what + ": missing pi[\"" + key + "\"]");
    r.pi.push_back(matrix_from(pi[key], v, v, "pi[" + key + "]"));
  }
  return r;
}

inline json apc_json(const AlgebraicPartialComodule& a) {
  return {{"hopf", structure_json(a.H)}, {"m_dim", a.m_dim},
          {"partial_coaction", matrix_json(a.partial_coaction)}};
}

struct ApcInput {
  AlgebraicPartialComodule apc;
  std::optional<std::size_t> truncation;  // set when loaded from the fixture form
};

inline ApcInput apc_from(const json& j) {
  const std::string what = "apc";
  if (j.contains("fixture")) {
    const std::string name = j["fixture"].get<std::string>();
    if (name != "sweedler_trunc") throw ParseError(what + ": unknown fixture '" + name + "'");
    const std::size_t n = dim_field(j, "N", what);
    if (n < 1) throw ParseError(what + ": N must be >= 1");
    return ApcInput{sweedler_truncation(n).apc, n};
  }
  HopfAlgebra h = hopf_from(field(j, "hopf", what));
  const std::size_t m = dim_field(j, "m_dim", what);
  const std::size_t n = h.dim();
  return ApcInput{
      AlgebraicPartialComodule{
          std::move(h), m,
          matrix_from(field(j, "partial_coaction", what), m * n, m, "partial_coaction")},
      std::nullopt};
}

inline json subspace_json(const Subspace& s) {
  return {{"ambient_dim", s.ambient_dim()}, {"basis", matrix_json(s.basis())}};
}

inline json hopfpc_json(const HopfPartialComodule& h) {
  return {{"bialgebra", structure_json(h.B)},
          {"datum", datum_json(h.datum)},
          {"act_m", matrix_json(h.act_m)},
          {"act_bullet", matrix_json(h.act_bullet)}};
}

inline HopfPartialComodule hopfpc_from(const json& j) {
  const std::string what = "hopfpc";
  Bialgebra b = bialgebra_from(field(j, "bialgebra", what));
  PartialComoduleDatum d = datum_from(field(j, "datum", what));
  const std::size_t n = b.dim(), m = d.x_dim, k = d.bullet_dim;
  if (d.H.dim != n) throw ParseError(what + ": datum coalgebra dim != bialgebra dim");
  return HopfPartialComodule{std::move(b), std::move(d),
                             matrix_from(field(j, "act_m", what), m, m * n, "act_m"),
                             matrix_from(field(j, "act_bullet", what), k, k * n, "act_bullet")};
}

struct PairInput {
  HopfAlgebra hopf;
  FundamentalPair pair;
};

inline json pair_json(const FundamentalPair& p, const HopfAlgebra& h) {
  return {{"hopf", structure_json(h)}, {"v_dim", p.v_dim},
          {"N", matrix_json(p.n.basis())}};
}

inline PairInput pair_from(const json& j) {
  const std::string what = "pair";
  HopfAlgebra h = hopf_from(field(j, "hopf", what));
  const std::size_t v = dim_field(j, "v_dim", what);
  const std::size_t ambient = v * h.dim();
  const json& rows = field(j, "N", what);
  if (!rows.is_array()) throw ParseError(what + ": N must be an array of basis rows");
  std::vector<std::vector<Rational>> gens;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    LinMap r = matrix_from(json::array({rows[i]}), 1, ambient, "N row");
    gens.push_back(r.row(0));
  }
  return PairInput{std::move(h), FundamentalPair{v, Subspace::span_vectors(ambient, gens)}};
}

// ---- certificates and check results ----------------------------------------

inline json certificate_json(const GlobCertificate& c) {
  json j{{"equalizer_dim", c.equalizer_dim},
         {"gl1", c.gl1_ok},
         {"pushout", c.pushout_ok},
         {"proper", c.proper_ok}};
  if (c.roundtrip_iso) j["iso"] = matrix_json(*c.roundtrip_iso);
  return j;
}

inline json axiom_report_json(const AxiomReport& r) {
  json j{{"ok", r.ok}};
  if (!r.ok) {
    j["failing"] = r.identity;
    j["witness_column"] = r.witness;
  }
  return j;
}

inline json gpc_check_json(const GpcCheck& c) {
  json j{{"ok", c.ok},
         {"gpc1", c.gpc1_ok},
         {"gpc2_criterion", c.criterion_verdict},
         {"gpc2_definitional", c.definitional_ok}};
  if (!c.ok) {
    j["failing"] = c.failure.reason;
    if (!c.failure.witness.empty()) j["witness"] = vector_json(c.failure.witness);
  }
  return j;
}

}  // namespace parcom::io
