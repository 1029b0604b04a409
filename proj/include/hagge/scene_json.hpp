#pragma once

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hagge/digest.hpp"
#include "hagge/theorems.hpp"

namespace hagge {

inline constexpr const char* kSchemaVersion = "1";

/// Parsed scene file. Scalars stay exact strings ("a" or "a/b" over the
/// rationals, least nonnegative residues over a prime field); documents are
/// never touched by floating point. parse(render(doc)) == doc, byte for byte.
struct SceneDocument {
  using Triple = std::array<std::string, 3>;

  std::string schema_version = kSchemaVersion;
  std::string kind;  // "t1" | "t2"
  FieldSpec field;
  std::map<std::string, Triple> points;
  // sigma: either sample points spanning it (3 for a circle, 5 for a conic)
  // or the six upper-triangle entries (m00, m01, m02, m11, m12, m22)
  std::vector<Triple> sigma_through;
  std::vector<std::string> sigma_matrix;
  std::optional<std::array<Triple, 2>> steiner_seeds;

  bool operator==(const SceneDocument&) const = default;
};

namespace detail {

inline nlohmann::json field_to_json(const FieldSpec& f) {
  nlohmann::json j;
  j["kind"] = f.is_rational() ? "rational" : "prime";
  if (!f.is_rational()) j["p"] = std::to_string(f.p);
  return j;
}

inline FieldSpec field_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    throw Error(ErrorCode::InvalidDocument, "bad field object");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "rational") {
    if (j.size() != 1) throw Error(ErrorCode::InvalidDocument, "bad field object");
    return FieldSpec::rationals();
  }
  if (kind != "prime" || j.size() != 2 || !j.contains("p") || !j.at("p").is_string())
    throw Error(ErrorCode::InvalidDocument, "bad field object");
  try {
    return FieldSpec::prime(std::stoull(j.at("p").get<std::string>()));
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidDocument, "bad prime modulus");
  }
}

inline SceneDocument::Triple triple_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 3) throw Error(ErrorCode::InvalidDocument, "bad triple");
  SceneDocument::Triple t;
  for (int i = 0; i < 3; ++i) {
    if (!j[static_cast<std::size_t>(i)].is_string())
      throw Error(ErrorCode::InvalidDocument, "triple entries must be strings");
    t[static_cast<std::size_t>(i)] = j[static_cast<std::size_t>(i)].get<std::string>();
  }
  return t;
}

}  // namespace detail

inline nlohmann::json scene_document_to_json(const SceneDocument& doc) {
  nlohmann::json j;
  j["schema_version"] = doc.schema_version;
  j["kind"] = doc.kind;
  j["field"] = detail::field_to_json(doc.field);
  nlohmann::json pts = nlohmann::json::object();
  for (const auto& [name, t] : doc.points) pts[name] = t;
  j["points"] = pts;
  nlohmann::json sigma = nlohmann::json::object();
  if (!doc.sigma_through.empty()) sigma["through"] = doc.sigma_through;
  if (!doc.sigma_matrix.empty()) sigma["matrix"] = doc.sigma_matrix;
  j["sigma"] = sigma;
  if (doc.steiner_seeds) j["steiner_seeds"] = *doc.steiner_seeds;
  return j;
}

inline std::string render_scene_document(const SceneDocument& doc) {
  return scene_document_to_json(doc).dump(2) + "\n";
}

inline SceneDocument parse_scene_document(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidDocument, e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::InvalidDocument, "top level must be an object");
  for (const auto& [key, _] : j.items()) {
    if (key != "schema_version" && key != "kind" && key != "field" && key != "points" &&
        key != "sigma" && key != "steiner_seeds")
      throw Error(ErrorCode::InvalidDocument, "unknown key '" + key + "'");
  }
  for (const char* req : {"schema_version", "kind", "field", "points", "sigma"})
    if (!j.contains(req)) throw Error(ErrorCode::InvalidDocument, std::string("missing '") + req + "'");

  SceneDocument doc;
  if (!j.at("schema_version").is_string() ||
      (doc.schema_version = j.at("schema_version").get<std::string>()) != kSchemaVersion)
    throw Error(ErrorCode::InvalidDocument, "unsupported schema_version");
  if (!j.at("kind").is_string()) throw Error(ErrorCode::InvalidDocument, "bad kind");
  doc.kind = j.at("kind").get<std::string>();
  if (doc.kind != "t1" && doc.kind != "t2")
    throw Error(ErrorCode::InvalidDocument, "kind must be 't1' or 't2'");
  doc.field = detail::field_from_json(j.at("field"));
  if (doc.kind == "t1" && !doc.field.is_rational())
    throw Error(ErrorCode::InvalidDocument, "t1 scenes require the rational field");

  if (!j.at("points").is_object()) throw Error(ErrorCode::InvalidDocument, "bad points");
  for (const auto& [name, val] : j.at("points").items())
    doc.points[name] = detail::triple_from_json(val);
  const std::vector<std::string> need =
      doc.kind == "t1" ? std::vector<std::string>{"A", "B", "C", "D"}
                       : std::vector<std::string>{"A", "B", "C", "D", "E", "F"};
  if (doc.points.size() != need.size())
    throw Error(ErrorCode::InvalidDocument, "wrong point set");
  for (const auto& name : need)
    if (!doc.points.contains(name))
      throw Error(ErrorCode::InvalidDocument, "missing point '" + name + "'");

  const auto& sigma = j.at("sigma");
  if (!sigma.is_object() || sigma.size() != 1 ||
      !(sigma.contains("through") || sigma.contains("matrix")))
    throw Error(ErrorCode::InvalidDocument, "sigma needs exactly one of 'through'/'matrix'");
  if (sigma.contains("through")) {
    if (!sigma.at("through").is_array())
      throw Error(ErrorCode::InvalidDocument, "bad sigma.through");
    for (const auto& t : sigma.at("through")) doc.sigma_through.push_back(detail::triple_from_json(t));
    const std::size_t want = doc.kind == "t1" ? 3 : 5;
    if (doc.sigma_through.size() != want)
      throw Error(ErrorCode::InvalidDocument, "sigma.through needs " + std::to_string(want) + " points");
  } else {
    if (!sigma.at("matrix").is_array() || sigma.at("matrix").size() != 6)
      throw Error(ErrorCode::InvalidDocument, "sigma.matrix needs 6 entries");
    for (const auto& e : sigma.at("matrix")) {
      if (!e.is_string()) throw Error(ErrorCode::InvalidDocument, "matrix entries must be strings");
      doc.sigma_matrix.push_back(e.get<std::string>());
    }
  }

  if (j.contains("steiner_seeds")) {
    if (doc.kind != "t2") throw Error(ErrorCode::InvalidDocument, "steiner_seeds only for t2");
    const auto& s = j.at("steiner_seeds");
    if (!s.is_array() || s.size() != 2) throw Error(ErrorCode::InvalidDocument, "bad steiner_seeds");
    doc.steiner_seeds = {detail::triple_from_json(s[0]), detail::triple_from_json(s[1])};
  }
  return doc;
}

// ---- document -> typed scene ----

namespace detail {

template <Field K>
ProjPoint<K> point_from_triple(const SceneDocument::Triple& t, const ScalarMaker<K>& mk) {
  return ProjPoint<K>(Vec3<K>{mk.parse(t[0]), mk.parse(t[1]), mk.parse(t[2])});
}

template <Field K>
Conic<K> sigma_from_document(const SceneDocument& doc, const ScalarMaker<K>& mk) {
  if (!doc.sigma_matrix.empty()) {
    std::array<K, 6> m = {mk.parse(doc.sigma_matrix[0]), mk.parse(doc.sigma_matrix[1]),
                          mk.parse(doc.sigma_matrix[2]), mk.parse(doc.sigma_matrix[3]),
                          mk.parse(doc.sigma_matrix[4]), mk.parse(doc.sigma_matrix[5])};
    return Conic<K>::from_upper(m[0], m[1], m[2], m[3], m[4], m[5]);
  }
  if (doc.sigma_through.size() == 3) {
    return circle_through_three(point_from_triple(doc.sigma_through[0], mk),
                                point_from_triple(doc.sigma_through[1], mk),
                                point_from_triple(doc.sigma_through[2], mk));
  }
  return conic_through_five(std::array<ProjPoint<K>, 5>{
      point_from_triple(doc.sigma_through[0], mk), point_from_triple(doc.sigma_through[1], mk),
      point_from_triple(doc.sigma_through[2], mk), point_from_triple(doc.sigma_through[3], mk),
      point_from_triple(doc.sigma_through[4], mk)});
}

}  // namespace detail

inline SceneT1 scene_t1_from_document(const SceneDocument& doc) {
  if (doc.kind != "t1") throw Error(ErrorCode::InvalidDocument, "not a t1 document");
  const ScalarMaker<Rat> mk;
  return SceneT1::make(detail::point_from_triple(doc.points.at("A"), mk),
                       detail::point_from_triple(doc.points.at("B"), mk),
                       detail::point_from_triple(doc.points.at("C"), mk),
                       detail::point_from_triple(doc.points.at("D"), mk),
                       detail::sigma_from_document(doc, mk));
}

template <Field K>
SceneT2<K> scene_t2_from_document(const SceneDocument& doc, const ScalarMaker<K>& mk) {
  if (doc.kind != "t2") throw Error(ErrorCode::InvalidDocument, "not a t2 document");
  std::array<K, 3> seed1 = {mk.from_int(1), mk.from_int(1), mk.from_int(1)};
  std::array<K, 3> seed2 = {mk.from_int(1), mk.from_int(2), mk.from_int(3)};
  if (doc.steiner_seeds) {
    for (int i = 0; i < 3; ++i) {
      seed1[static_cast<std::size_t>(i)] = mk.parse((*doc.steiner_seeds)[0][static_cast<std::size_t>(i)]);
      seed2[static_cast<std::size_t>(i)] = mk.parse((*doc.steiner_seeds)[1][static_cast<std::size_t>(i)]);
    }
  }
  return SceneT2<K>::make(detail::point_from_triple(doc.points.at("A"), mk),
                          detail::point_from_triple(doc.points.at("B"), mk),
                          detail::point_from_triple(doc.points.at("C"), mk),
                          detail::point_from_triple(doc.points.at("D"), mk),
                          detail::point_from_triple(doc.points.at("E"), mk),
                          detail::point_from_triple(doc.points.at("F"), mk),
                          detail::sigma_from_document(doc, mk), seed1, seed2);
}

// ---- typed scene -> document ----

namespace detail {

template <Field K>
SceneDocument::Triple triple_of_point(const ProjPoint<K>& p) {
  return {p.coords()[0].str(), p.coords()[1].str(), p.coords()[2].str()};
}

template <Field K>
std::vector<std::string> matrix_strings(const Conic<K>& c) {
  const auto& m = c.matrix();
  return {m.at(0, 0).str(), m.at(0, 1).str(), m.at(0, 2).str(),
          m.at(1, 1).str(), m.at(1, 2).str(), m.at(2, 2).str()};
}

}  // namespace detail

inline SceneDocument document_of_scene(const SceneT1& s) {
  SceneDocument doc;
  doc.kind = "t1";
  doc.field = FieldSpec::rationals();
  doc.points["A"] = detail::triple_of_point(s.a);
  doc.points["B"] = detail::triple_of_point(s.b);
  doc.points["C"] = detail::triple_of_point(s.c);
  doc.points["D"] = detail::triple_of_point(s.d);
  doc.sigma_matrix = detail::matrix_strings(s.sigma);
  return doc;
}

template <Field K>
SceneDocument document_of_scene(const SceneT2<K>& s, const FieldSpec& field) {
  SceneDocument doc;
  doc.kind = "t2";
  doc.field = field;
  doc.points["A"] = detail::triple_of_point(s.a);
  doc.points["B"] = detail::triple_of_point(s.b);
  doc.points["C"] = detail::triple_of_point(s.c);
  doc.points["D"] = detail::triple_of_point(s.d);
  doc.points["E"] = detail::triple_of_point(s.e);
  doc.points["F"] = detail::triple_of_point(s.f);
  doc.sigma_matrix = detail::matrix_strings(s.sigma);
  doc.steiner_seeds = {SceneDocument::Triple{s.seed1[0].str(), s.seed1[1].str(), s.seed1[2].str()},
                       SceneDocument::Triple{s.seed2[0].str(), s.seed2[1].str(), s.seed2[2].str()}};
  return doc;
}

// ---- certificates ----

template <Field K>
nlohmann::json certificate_to_json(const ConcurrencyCertificate<K>& cert) {
  nlohmann::json j;
  j["common_point"] = cert.common.str();
  j["chords"] = {cert.chords[0].str(), cert.chords[1].str(), cert.chords[2].str()};
  j["involution"] = cert.involution_ok;
  nlohmann::json six;
  six["U"] = cert.six.u.str();
  six["V"] = cert.six.v.str();
  six["W"] = cert.six.w.str();
  six["X"] = cert.six.x.str();
  six["Y"] = cert.six.y.str();
  six["Z"] = cert.six.z.str();
  j["six"] = six;
  nlohmann::json trace = nlohmann::json::array();
  for (const auto& f : cert.trace) {
    nlohmann::json tf;
    tf["name"] = f.name;
    tf["ok"] = f.ok;
    trace.push_back(tf);
  }
  j["trace"] = trace;
  return j;
}

template <Field K>
std::string certificate_digest(const ConcurrencyCertificate<K>& cert) {
  return digest_hex(certificate_to_json(cert).dump());
}

}  // namespace hagge
