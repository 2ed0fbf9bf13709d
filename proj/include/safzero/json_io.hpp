// JSON serialization for certificates and classifier output (schema "v1").
// Numbers are decimal strings so that arbitrary-precision values survive
// the round trip.

#pragma once

#include <json.hpp>

#include "families.hpp"
#include "numclass.hpp"
#include "veech.hpp"

namespace safzero {

using json = nlohmann::ordered_json;

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Rat rat_from_str(const std::string& s) {
  Rat r(s);
  r.canonicalize();
  return r;
}

inline json poly_to_json(const ZPoly& p) {
  json a = json::array();
  for (int i = 0; i <= p.degree(); ++i) a.push_back(p.coeff(i).get_str());
  return a;
}

inline ZPoly poly_from_json(const json& a) {
  std::vector<Int> c;
  for (const auto& s : a) c.emplace_back(s.get<std::string>());
  return ZPoly{std::move(c)};
}

inline json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline IntMatrix matrix_from_json(const json& rows) {
  std::size_t r = rows.size(), c = rows.empty() ? 0 : rows[0].size();
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m(i, j) = Int(rows[i][j].get<std::string>());
  return m;
}

inline json nf_vector_to_json(const std::vector<NFElement>& v) {
  json out = json::array();
  for (const auto& e : v) {
    json coords = json::array();
    for (const auto& c : e.coords()) coords.push_back(rat_str(c));
    out.push_back(std::move(coords));
  }
  return out;
}

inline std::vector<NFElement> nf_vector_from_json(const json& a,
                                                  const FieldPtr& field) {
  std::vector<NFElement> v;
  for (const auto& coords : a) {
    std::vector<Rat> c;
    for (const auto& s : coords) c.push_back(rat_from_str(s.get<std::string>()));
    v.emplace_back(field, std::move(c));
  }
  return v;
}

inline json certificate_to_json(const PseudoAnosovCertificate& c) {
  json j;
  j["version"] = "v1";
  j["loop"] = {{"start", c.loop.base.str()}, {"word", c.loop.word_str()}};
  j["matrix"] = matrix_to_json(c.matrix);
  j["char_poly"] = poly_to_json(c.char_poly);
  j["min_poly"] = poly_to_json(c.min_poly);
  const Interval& iv = c.dilatation.field->root_interval();
  j["theta_interval"] = {rat_str(iv.lo), rat_str(iv.hi)};
  j["lengths"] = nf_vector_to_json(c.dilatation.lengths);
  j["heights"] = nf_vector_to_json(c.dilatation.heights);
  j["stratum"] = {{"multiplicities", c.stratum.multiplicities},
                  {"genus", c.stratum.genus},
                  {"sigma", c.stratum.sigma}};
  j["hyperelliptic"] = c.hyperelliptic;
  j["saf"] = {{"thm1", c.saf_zero_thm1}};
  if (c.saf_tensor_zero.has_value()) j["saf"]["tensor"] = *c.saf_tensor_zero;
  j["suspension_ok"] = c.suspension_ok;
  return j;
}

inline PseudoAnosovCertificate certificate_from_json(const json& j) {
  if (j.at("version") != "v1")
    throw std::invalid_argument("certificate_from_json: unknown schema version");
  PseudoAnosovCertificate c;
  c.loop = LoopWord{parse_permutation(j.at("loop").at("start").get<std::string>()),
                    parse_word(j.at("loop").at("word").get<std::string>())};
  c.matrix = matrix_from_json(j.at("matrix"));
  c.char_poly = poly_from_json(j.at("char_poly"));
  c.min_poly = poly_from_json(j.at("min_poly"));
  Interval iv{rat_from_str(j.at("theta_interval")[0].get<std::string>()),
              rat_from_str(j.at("theta_interval")[1].get<std::string>())};
  auto field = std::make_shared<NumberField>(c.min_poly, iv);
  c.dilatation.field = field;
  c.dilatation.theta = NFElement::generator(field);
  c.dilatation.lengths = nf_vector_from_json(j.at("lengths"), field);
  c.dilatation.heights = nf_vector_from_json(j.at("heights"), field);
  const auto& st = j.at("stratum");
  c.stratum.multiplicities = st.at("multiplicities").get<std::vector<int>>();
  c.stratum.genus = st.at("genus").get<int>();
  c.stratum.sigma = st.at("sigma").get<int>();
  c.hyperelliptic = j.at("hyperelliptic").get<bool>();
  c.saf_zero_thm1 = j.at("saf").at("thm1").get<bool>();
  if (j.at("saf").contains("tensor"))
    c.saf_tensor_zero = j.at("saf").at("tensor").get<bool>();
  c.suspension_ok = j.at("suspension_ok").get<bool>();
  return c;
}

inline json family_check_to_json(const FamilyCheck& r) {
  json j;
  j["version"] = "v1";
  j["family"] = r.family;
  j["k"] = r.k;
  j["word_len"] = r.word_len;
  j["charpoly_ok"] = r.charpoly_ok;
  if (r.matrix_ok.has_value()) j["matrix_ok"] = *r.matrix_ok;
  j["saf_zero"] = r.saf_zero;
  j["dilatation_minpoly"] = poly_to_json(r.dilatation_minpoly);
  j["pass"] = r.pass();
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

}  // namespace safzero
