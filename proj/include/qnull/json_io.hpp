#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "module.hpp"
#include "mpoly.hpp"
#include "rabinowitsch.hpp"
#include "roots.hpp"
#include "upoly.hpp"

namespace qnull {

using nlohmann::json;

// Rationals travel as "num/den" (or "num") strings, never as floating point.

inline json to_json(const Rat& r) { return r.str(); }
inline Rat rat_from_json(const json& j) {
  if (!j.is_string()) throw InvalidInput("rational must be a \"num/den\" string");
  return Rat::parse(j.get<std::string>());
}

inline json to_json(const Quat& q) {
  return {{"w", q.w().str()}, {"x", q.x().str()}, {"y", q.y().str()}, {"z", q.z().str()}};
}
inline Quat quat_from_json(const json& j) {
  if (j.is_string()) throw InvalidInput("quaternion must be an object with w, x, y, z");
  return {rat_from_json(j.at("w")), rat_from_json(j.at("x")), rat_from_json(j.at("y")), rat_from_json(j.at("z"))};
}

/// Array of quaternion objects, low to high.
inline json to_json(const UPoly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}
inline UPoly upoly_from_json(const json& j) {
  std::vector<Quat> v;
  for (const auto& c : j) v.push_back(quat_from_json(c));
  return UPoly(std::move(v));
}

inline json to_json(const MPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exponents", e}, {"coeff", to_json(c)}});
  return {{"nvars", p.nvars()}, {"terms", terms}};
}
inline MPoly mpoly_from_json(const json& j) {
  MPoly p(j.at("nvars").get<std::size_t>());
  for (const auto& t : j.at("terms")) p.add_term(t.at("exponents").get<Exponents>(), quat_from_json(t.at("coeff")));
  return p;
}

inline json to_json(const CommutingPoint& pt) {
  json comps = json::array();
  for (const auto& c : pt.components()) comps.push_back(to_json(c));
  return {{"components", comps}};
}
inline CommutingPoint point_from_json(const json& j) {
  std::vector<Quat> v;
  for (const auto& c : j.at("components")) v.push_back(quat_from_json(c));
  return CommutingPoint(std::move(v));
}

inline json to_json(const QVector& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_json(q));
  return out;
}
inline QVector qvector_from_json(const json& j) {
  QVector v;
  for (const auto& q : j) v.push_back(quat_from_json(q));
  return v;
}

/// {"m": m, "mats": [ [[q, ...], ...], ... ]} with row-major matrices.
inline json to_json(const ModulePresentation& mod) {
  json mats = json::array();
  for (const auto& a : mod.mats) {
    json rows = json::array();
    for (std::size_t r = 0; r < a.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(to_json(a(r, c)));
      rows.push_back(row);
    }
    mats.push_back(rows);
  }
  return {{"m", mod.m}, {"mats", mats}};
}
inline ModulePresentation module_from_json(const json& j) {
  ModulePresentation mod;
  mod.m = j.at("m").get<std::size_t>();
  for (const auto& rows : j.at("mats")) {
    std::vector<std::vector<Quat>> data;
    for (const auto& row : rows) data.push_back(qvector_from_json(row));
    mod.mats.emplace_back(data);
  }
  return mod;
}

inline json to_json(const EigenTuple& t) { return {{"v", to_json(t.v)}, {"point", to_json(t.point)}}; }

inline json to_json(const LeftIdealGens& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.gens) gens.push_back(to_json(g));
  return {{"nvars", ideal.nvars}, {"gens", gens}};
}

/// {"N": N, "cofactors": [[mpoly per generator] per k = 0..N]}.
inline json to_json(const RabinowitschCertificate& cert) {
  json cof = json::array();
  for (const auto& row : cert.cofactors) {
    json r = json::array();
    for (const auto& h : row) r.push_back(to_json(h));
    cof.push_back(r);
  }
  return {{"N", cert.N}, {"cofactors", cof}};
}
inline RabinowitschCertificate certificate_from_json(const json& j) {
  RabinowitschCertificate cert;
  cert.N = j.at("N").get<unsigned>();
  for (const auto& row : j.at("cofactors")) {
    std::vector<MPoly> r;
    for (const auto& h : row) r.push_back(mpoly_from_json(h));
    cert.cofactors.push_back(std::move(r));
  }
  return cert;
}

inline json to_json(const RootClass& rc) {
  if (rc.kind == RootClass::Kind::Isolated) return {{"kind", "isolated"}, {"root", to_json(rc.root)}};
  return {{"kind", "sphere"}, {"t", rc.t.str()}, {"n", rc.n.str()}};
}

}  // namespace qnull
