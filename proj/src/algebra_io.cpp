#include "omegalie/algebra_io.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "omegalie/errors.hpp"

namespace omegalie {

using nlohmann::json;

namespace {

mpz_class integer_from_json(const json& j, const char* what) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<std::uint64_t>()));
    return mpz_class(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    mpz_class z;
    if (s.empty() || z.set_str(s, 10) != 0) {
      throw SchemaError(std::string(what) + ": '" + s + "' is not an integer");
    }
    return z;
  }
  throw SchemaError(std::string(what) + ": expected an integer");
}

mpq_class rational_from_parts(const json& num, const json& den, const char* what) {
  const mpz_class n = integer_from_json(num, what);
  const mpz_class d = integer_from_json(den, what);
  if (sgn(d) <= 0) throw SchemaError(std::string(what) + ": denominator must be positive");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (g != 1) throw SchemaError(std::string(what) + ": rational not in lowest terms");
  return mpq_class(n, d);
}

mpq_class rational_from_pair(const json& pair, const char* what) {
  if (!pair.is_array() || pair.size() != 2) {
    throw SchemaError(std::string(what) + ": expected [numerator, denominator]");
  }
  return rational_from_parts(pair[0], pair[1], what);
}

const json& require(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(std::string("missing field '") + key + "'");
  return *it;
}

std::string require_string(const json& obj, const char* key) {
  const json& v = require(obj, key);
  if (!v.is_string()) throw SchemaError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::vector<std::string> string_list(const json& obj, const char* key) {
  const json& v = require(obj, key);
  if (!v.is_array()) throw SchemaError(std::string("field '") + key + "' must be an array");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string()) throw SchemaError(std::string("entries of '") + key + "' must be strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

const json& optional_array(const json& obj, const char* key) {
  static const json empty = json::array();
  auto it = obj.find(key);
  if (it == obj.end()) return empty;
  if (!it->is_array()) throw SchemaError(std::string("field '") + key + "' must be an array");
  return *it;
}

json rational_to_json(const mpq_class& q) {
  return json::array({integer_to_json(q.get_num()), integer_to_json(q.get_den())});
}

}  // namespace

json integer_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return json(static_cast<std::int64_t>(z.get_si()));
  return json(z.get_str());
}

json scalar_to_json(const GaussianRational& z) {
  json j = json::object();
  j["re"] = rational_to_json(z.re());
  j["im"] = rational_to_json(z.im());
  return j;
}

GaussianRational scalar_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("scalar must be an object with 're' and 'im'");
  return {rational_from_pair(require(j, "re"), "re"), rational_from_pair(require(j, "im"), "im")};
}

json vector_to_json(std::span<const GaussianRational> v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(scalar_to_json(x));
  return out;
}

json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r)));
  return out;
}

OmegaSuperAlgebra load_algebra_json(const json& doc) {
  if (!doc.is_object()) throw SchemaError("algebra document must be a JSON object");
  AlgebraBuilder builder(require_string(doc, "name"), string_list(doc, "even_basis"),
                         string_list(doc, "odd_basis"));

  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& entry : optional_array(doc, "brackets")) {
    if (!entry.is_object()) throw SchemaError("bracket entries must be objects");
    const std::size_t i = builder.index(require_string(entry, "left"));
    const std::size_t j = builder.index(require_string(entry, "right"));
    if (!seen.emplace(i, j).second) throw SchemaError("bracket listed twice");
    const json& value = require(entry, "value");
    if (!value.is_array()) throw SchemaError("bracket 'value' must be an array");
    Vector v(builder.dim());
    std::set<std::size_t> terms;
    for (const auto& term : value) {
      if (!term.is_array() || term.size() != 5 || !term[4].is_string()) {
        throw SchemaError("bracket term must be [re_num, re_den, im_num, im_den, basis]");
      }
      const std::size_t k = builder.index(term[4].get<std::string>());
      if (!terms.insert(k).second) throw SchemaError("basis element repeated in bracket value");
      v[k] = GaussianRational(rational_from_parts(term[0], term[1], "bracket coefficient"),
                              rational_from_parts(term[2], term[3], "bracket coefficient"));
    }
    builder.bracket(i, j, v);
  }

  seen.clear();
  for (const auto& entry : optional_array(doc, "omega")) {
    if (!entry.is_object()) throw SchemaError("omega entries must be objects");
    const std::size_t i = builder.index(require_string(entry, "left"));
    const std::size_t j = builder.index(require_string(entry, "right"));
    if (!seen.emplace(i, j).second) throw SchemaError("omega entry listed twice");
    builder.omega(i, j,
                  GaussianRational(rational_from_pair(require(entry, "re"), "omega re"),
                                   rational_from_pair(require(entry, "im"), "omega im")));
  }
  return builder.build();
}

OmegaSuperAlgebra load_algebra(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  return load_algebra_json(doc);
}

OmegaSuperAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open algebra file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_algebra(buf.str());
}

json algebra_to_json(const OmegaSuperAlgebra& a) {
  std::vector<std::size_t> order = coordinates_of_degree(a, Parity::even);
  const auto odd = coordinates_of_degree(a, Parity::odd);
  order.insert(order.end(), odd.begin(), odd.end());

  json doc = json::object();
  doc["name"] = a.name();
  json even_basis = json::array(), odd_basis = json::array();
  for (auto i : order) {
    (a.degree(i) == Parity::even ? even_basis : odd_basis).push_back(a.basis_names()[i]);
  }
  doc["even_basis"] = even_basis;
  doc["odd_basis"] = odd_basis;

  json brackets = json::array();
  for (std::size_t p = 0; p < order.size(); ++p) {
    for (std::size_t q = p; q < order.size(); ++q) {
      const std::size_t i = order[p], j = order[q];
      if (p == q && a.degree(i) == Parity::even) continue;
      const Vector v = a.bracket_of_basis(i, j);
      if (is_zero(v)) continue;
      json value = json::array();
      for (auto k : order) {
        if (v[k].is_zero()) continue;
        value.push_back(json::array({integer_to_json(v[k].re().get_num()),
                                     integer_to_json(v[k].re().get_den()),
                                     integer_to_json(v[k].im().get_num()),
                                     integer_to_json(v[k].im().get_den()), a.basis_names()[k]}));
      }
      brackets.push_back(
          {{"left", a.basis_names()[i]}, {"right", a.basis_names()[j]}, {"value", value}});
    }
  }
  doc["brackets"] = brackets;

  json omega = json::array();
  for (auto i : order) {
    for (auto j : order) {
      const auto& w = a.omega()(i, j);
      if (w.is_zero()) continue;
      omega.push_back({{"left", a.basis_names()[i]},
                       {"right", a.basis_names()[j]},
                       {"re", rational_to_json(w.re())},
                       {"im", rational_to_json(w.im())}});
    }
  }
  doc["omega"] = omega;
  return doc;
}

}  // namespace omegalie
