#include "natbundle/json_io.hpp"

#include <algorithm>

#include <json.hpp>

#include "natbundle/errors.hpp"

namespace natbundle {

using nlohmann::json;

namespace {

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw ParseError((path.empty() ? std::string("/") : path) + ": " + what);
}

const json& field(const json& j, const std::string& path, const char* key) {
  if (!j.is_object()) bad(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(path, std::string("missing field '") + key + "'");
  return *it;
}

long as_long(const json& j, const std::string& path) {
  if (!j.is_number_integer()) bad(path, "expected an integer");
  return j.get<long>();
}

std::uint64_t as_u64(const json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    bad(path, "expected a non-negative integer");
  return j.get<std::uint64_t>();
}

bool as_bool(const json& j, const std::string& path) {
  if (!j.is_boolean()) bad(path, "expected true or false");
  return j.get<bool>();
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) bad(path, "expected a string");
  return j.get<std::string>();
}

const json& as_array(const json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array");
  return j;
}

Rational as_rational(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  try {
    return parse_rational(as_string(j, path));
  } catch (const ParseError& e) {
    bad(path, e.what());
  }
}

std::vector<int> as_int_list(const json& j, const std::string& path) {
  std::vector<int> out;
  std::size_t i = 0;
  for (const json& v : as_array(j, path)) {
    out.push_back(static_cast<int>(as_long(v, path + "/" + std::to_string(i))));
    ++i;
  }
  return out;
}

json laurent_json(const LaurentPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(json::array({e, to_string(c)}));
  return out;
}

LaurentPoly laurent_parse(const json& j, Var var, const std::string& path) {
  LaurentPoly p(var);
  std::size_t i = 0;
  for (const json& term : as_array(j, path)) {
    const std::string tp = path + "/" + std::to_string(i++);
    if (!term.is_array() || term.size() != 2) bad(tp, "expected [exponent, \"p/q\"]");
    p.add_term(static_cast<int>(as_long(term[0], tp + "/0")), as_rational(term[1], tp + "/1"));
  }
  return p;
}

json rows_json(const LaurentMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(laurent_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

LaurentMatrix rows_parse(const json& j, Var var, std::size_t rows, std::size_t cols, const std::string& path) {
  as_array(j, path);
  if (j.size() != rows) bad(path, "expected " + std::to_string(rows) + " rows, found " + std::to_string(j.size()));
  LaurentMatrix m(var, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string rp = path + "/" + std::to_string(i);
    const json& row = as_array(j[i], rp);
    if (row.size() != cols)
      bad(rp, "expected " + std::to_string(cols) + " entries, found " + std::to_string(row.size()));
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = laurent_parse(row[c], var, rp + "/" + std::to_string(c));
  }
  return m;
}

Var var_parse(const json& j, const std::string& path) {
  try {
    return parse_var(as_string(j, path));
  } catch (const Error& e) {
    bad(path, e.what());
  }
}

json params_json(const HilbertParams& p) {
  return json{{"alpha", to_string(p.alpha)},
              {"beta", to_string(p.beta)},
              {"gamma", to_string(p.gamma)},
              {"rank", p.rank}};
}

HilbertParams params_parse(const json& j, const std::string& path) {
  HilbertParams p;
  p.alpha = as_rational(field(j, path, "alpha"), path + "/alpha");
  p.beta = as_rational(field(j, path, "beta"), path + "/beta");
  p.gamma = as_rational(field(j, path, "gamma"), path + "/gamma");
  p.rank = as_long(field(j, path, "rank"), path + "/rank");
  return p;
}

json ranks_json(const std::vector<TwistRank>& v) {
  json out = json::array();
  for (const TwistRank& t : v) out.push_back(json{{"m", t.m}, {"rows", t.rows}, {"cols", t.cols}, {"rank", t.rank}});
  return out;
}

std::vector<TwistRank> ranks_parse(const json& j, const std::string& path) {
  std::vector<TwistRank> out;
  std::size_t i = 0;
  for (const json& t : as_array(j, path)) {
    const std::string tp = path + "/" + std::to_string(i++);
    TwistRank r;
    r.m = as_long(field(t, tp, "m"), tp + "/m");
    r.rows = as_u64(field(t, tp, "rows"), tp + "/rows");
    r.cols = as_u64(field(t, tp, "cols"), tp + "/cols");
    r.rank = as_u64(field(t, tp, "rank"), tp + "/rank");
    out.push_back(r);
  }
  return out;
}

json window_json(const TableWindow& w) { return json::array({w.n_lo, w.n_hi, w.m_lo, w.m_hi}); }

TableWindow window_parse(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 4) bad(path, "expected [n_lo, n_hi, m_lo, m_hi]");
  return TableWindow{as_long(j[0], path + "/0"), as_long(j[1], path + "/1"), as_long(j[2], path + "/2"),
                     as_long(j[3], path + "/3")};
}

}  // namespace

std::string laurent_to_json(const LaurentPoly& p) { return laurent_json(p).dump(); }

LaurentPoly laurent_from_json(const std::string& text, Var var) { return laurent_parse(parse_text(text), var, ""); }

std::string matrix_to_json(const LaurentMatrix& m) {
  return json{{"var", std::string(1, var_name(m.var()))}, {"rows", rows_json(m)}}.dump(2);
}

LaurentMatrix matrix_from_json(const std::string& text) {
  const json j = parse_text(text);
  const Var var = j.is_object() && j.contains("var") ? var_parse(j["var"], "/var") : Var::z;
  const json& rows = as_array(field(j, "", "rows"), "/rows");
  const std::size_t nc = rows.empty() ? 0 : as_array(rows[0], "/rows/0").size();
  return rows_parse(rows, var, rows.size(), nc, "/rows");
}

std::string cocycle_to_json(const ExtCocycle& e) {
  return json{{"var", std::string(1, var_name(e.var()))},
              {"f1", e.sub},
              {"f2", e.quot},
              {"entries", rows_json(e.entries)}}
      .dump(2);
}

ExtCocycle cocycle_from_json(const std::string& text) {
  const json j = parse_text(text);
  const Var var = j.is_object() && j.contains("var") ? var_parse(j["var"], "/var") : Var::z;
  std::vector<int> f1 = as_int_list(field(j, "", "f1"), "/f1");
  std::vector<int> f2 = as_int_list(field(j, "", "f2"), "/f2");
  LaurentMatrix m = rows_parse(field(j, "", "entries"), var, f1.size(), f2.size(), "/entries");
  return make_cocycle(std::move(f1), std::move(f2), std::move(m));
}

std::string certificate_to_json(const Certificate& c) {
  const ConstantBundleDesc& d = c.desc;
  json digest{{"window", window_json(c.table_digest.window)},
              {"cells", c.table_digest.cells},
              {"h0_sum", c.table_digest.h0_sum},
              {"h1_sum", c.table_digest.h1_sum},
              {"h2_sum", c.table_digest.h2_sum},
              {"regions",
               {{"H0R", c.table_digest.h0r},
                {"H1R", c.table_digest.h1r},
                {"H2R", c.table_digest.h2r},
                {"boundary", c.table_digest.boundary}}},
              {"fingerprint", c.table_digest.fingerprint}};
  json out{{"params", params_json(c.request.params)},
           {"swapped", d.axis_swapped},
           {"shift", json::array({d.sx, d.sy})},
           {"F", d.fiber_type().components()},
           {"F1", d.f1.components()},
           {"F2", d.f2.components()},
           {"eta0", rows_json(d.eta.eta0.entries)},
           {"eta1", rows_json(d.eta.eta1.entries)},
           {"seed", c.seed_used},
           {"resamples", c.resample_count},
           {"verified_window", c.request.verify_window},
           {"coeff_bound", c.request.coeff_bound},
           {"max_resamples", c.request.max_resamples},
           {"genericity", {{"plus_one", ranks_json(c.genericity.plus_one)},
                           {"minus_two", ranks_json(c.genericity.minus_two)},
                           {"pass", c.genericity.pass}}},
           {"table_digest", std::move(digest)}};
  return out.dump(2);
}

Certificate certificate_from_json(const std::string& text) {
  const json j = parse_text(text);
  Certificate c;
  c.request.params = params_parse(field(j, "", "params"), "/params");
  c.seed_used = as_u64(field(j, "", "seed"), "/seed");
  c.request.seed = c.seed_used;
  c.resample_count = as_long(field(j, "", "resamples"), "/resamples");
  c.request.verify_window = as_long(field(j, "", "verified_window"), "/verified_window");
  if (j.contains("coeff_bound")) c.request.coeff_bound = as_long(j["coeff_bound"], "/coeff_bound");
  if (j.contains("max_resamples")) c.request.max_resamples = as_long(j["max_resamples"], "/max_resamples");

  const bool swapped = as_bool(field(j, "", "swapped"), "/swapped");
  const json& shift = field(j, "", "shift");
  if (!shift.is_array() || shift.size() != 2) bad("/shift", "expected [sx, sy]");
  const std::vector<int> f = as_int_list(field(j, "", "F"), "/F");
  const SplittingType f1(as_int_list(field(j, "", "F1"), "/F1"));
  const SplittingType f2(as_int_list(field(j, "", "F2"), "/F2"));
  const std::size_t r1 = static_cast<std::size_t>(std::count(f.begin(), f.end(), 0));
  const std::size_t r2 = static_cast<std::size_t>(std::count(f.begin(), f.end(), -1));
  if (r1 + r2 != f.size()) bad("/F", "fiber type must consist of 0 and -1 entries");
  auto eta = [&](const char* key) {
    const std::string p = std::string("/") + key;
    return ExtCocycle{f1.components(), f2.components(),
                      rows_parse(field(j, "", key), Var::w, f1.rank(), f2.rank(), p)};
  };
  try {
    c.desc = make_desc(r1, r2, f1, f2, BigradedEta{eta("eta0"), eta("eta1")}, as_long(shift[0], "/shift/0"),
                       as_long(shift[1], "/shift/1"), swapped);
  } catch (const ShapeError& e) {
    bad("", e.what());
  }

  if (j.contains("genericity")) {
    const json& g = j["genericity"];
    c.genericity.plus_one = ranks_parse(field(g, "/genericity", "plus_one"), "/genericity/plus_one");
    c.genericity.minus_two = ranks_parse(field(g, "/genericity", "minus_two"), "/genericity/minus_two");
    c.genericity.pass = g.contains("pass") ? as_bool(g["pass"], "/genericity/pass") : false;
  }
  if (j.contains("table_digest")) {
    const json& d = j["table_digest"];
    const std::string p = "/table_digest";
    TableDigest& t = c.table_digest;
    t.window = window_parse(field(d, p, "window"), p + "/window");
    t.cells = as_long(field(d, p, "cells"), p + "/cells");
    t.h0_sum = as_long(field(d, p, "h0_sum"), p + "/h0_sum");
    t.h1_sum = as_long(field(d, p, "h1_sum"), p + "/h1_sum");
    t.h2_sum = as_long(field(d, p, "h2_sum"), p + "/h2_sum");
    const json& reg = field(d, p, "regions");
    t.h0r = as_long(field(reg, p + "/regions", "H0R"), p + "/regions/H0R");
    t.h1r = as_long(field(reg, p + "/regions", "H1R"), p + "/regions/H1R");
    t.h2r = as_long(field(reg, p + "/regions", "H2R"), p + "/regions/H2R");
    t.boundary = as_long(field(reg, p + "/regions", "boundary"), p + "/regions/boundary");
    t.fingerprint = as_string(field(d, p, "fingerprint"), p + "/fingerprint");
  }
  return c;
}

std::string table_to_json(const CohomologyTable& t) {
  json cells = json::array();
  for (const auto& [key, c] : t.cells)
    cells.push_back(json{{"n", key.first},
                         {"m", key.second},
                         {"h0", c.h0},
                         {"h1", c.h1},
                         {"h2", c.h2},
                         {"chi", c.chi},
                         {"region", region_name(c.region)}});
  return json{{"window", window_json(t.window)}, {"cells", std::move(cells)}}.dump(2);
}

CohomologyTable table_from_json(const std::string& text) {
  const json j = parse_text(text);
  CohomologyTable t;
  t.window = window_parse(field(j, "", "window"), "/window");
  std::size_t i = 0;
  for (const json& c : as_array(field(j, "", "cells"), "/cells")) {
    const std::string p = "/cells/" + std::to_string(i++);
    CellCohomology cell;
    cell.h0 = as_long(field(c, p, "h0"), p + "/h0");
    cell.h1 = as_long(field(c, p, "h1"), p + "/h1");
    cell.h2 = as_long(field(c, p, "h2"), p + "/h2");
    cell.chi = as_long(field(c, p, "chi"), p + "/chi");
    try {
      cell.region = parse_region(as_string(field(c, p, "region"), p + "/region"));
    } catch (const ParseError& e) {
      bad(p + "/region", e.what());
    }
    t.cells[{as_long(field(c, p, "n"), p + "/n"), as_long(field(c, p, "m"), p + "/m")}] = cell;
  }
  return t;
}

}  // namespace natbundle
