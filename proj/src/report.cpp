#include "mpasym/report.hpp"

#include <cstdio>

namespace mpasym {

namespace {

std::string classification_label(const RationalGF& gf, const MultiplePointData& mp,
                                 const Classification& cl) {
  const int d = gf.nvars() - 1;
  const int n = mp.multiplicity - 1;
  if (cl.single_ray && n >= 1) return "single_ray";
  if (d == 1 && n == 1 && cl.completely_nondegenerate) return "double_point_2d";
  if (cl.completely_nondegenerate) return "completely_nondegenerate";
  if (cl.transverse) return "transverse";
  if (cl.nondegenerate) return "nondegenerate";
  if (n == 0) return "smooth";
  return "degenerate";
}

}  // namespace

std::string float_str(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12e", x);
  return buf;
}

Json rational_json(const Rational& q) {
  Json j;
  j["decimal"] = float_str(to_double(q));
  j["exact"] = rational_to_string(q);
  return j;
}

Json classify_report(const RationalGF& gf, const MultiplePointData& mp,
                     const Classification& cl, const Cone& cone) {
  Json j;
  Json point = Json::array();
  for (const Rational& c : mp.point.coordinates) point.push_back(rational_json(c));
  j["point"] = point;
  j["multiplicity"] = mp.multiplicity;

  Json c;
  c["label"] = classification_label(gf, mp, cl);
  c["rank"] = cl.rank;
  c["rho"] = cl.rho;
  c["nondegenerate"] = cl.nondegenerate;
  c["transverse"] = cl.transverse;
  c["completely_nondegenerate"] = cl.completely_nondegenerate;
  c["single_ray"] = cl.single_ray;
  j["classification"] = c;

  Json rays = Json::array();
  for (const auto& ray : cone.rays) {
    Json r = Json::array();
    for (const Rational& x : ray) r.push_back(rational_to_string(x));
    rays.push_back(r);
  }
  j["cone"] = Json{{"dim", cone.dim}, {"rays", rays}};
  j["phi"] = rational_json(mp.phi_value);

  Json m;
  switch (mp.minimality.kind) {
    case MinimalityStatus::Kind::Pass: m["status"] = "pass"; break;
    case MinimalityStatus::Kind::Fail: m["status"] = "fail"; break;
    case MinimalityStatus::Kind::Unchecked: m["status"] = "unchecked"; break;
  }
  m["margin"] = float_str(mp.minimality.margin);
  m["samples"] = mp.minimality.samples;
  if (!mp.minimality.witness.empty()) {
    Json w = Json::array();
    for (const auto& z : mp.minimality.witness)
      w.push_back(Json{{"im", float_str(z.imag())}, {"re", float_str(z.real())}});
    m["witness"] = w;
  }
  j["minimality"] = m;

  Json warnings = Json::array();
  if (mp.minimality.kind != MinimalityStatus::Kind::Pass)
    warnings.push_back("strict minimality was not confirmed by the sampling heuristic");
  for (const SheetJet& s : mp.sheets)
    if (!s.condition_ii_ok) {
      warnings.push_back("a sheet has a vanishing first derivative at the point");
      break;
    }
  j["warnings"] = warnings;

  if (gf.nvars() == 2 && mp.multiplicity == 2) {
    DoublePointLocal dp = double_point_local_2d(gf.denominator, mp.point);
    j["det_hess"] = rational_json(dp.det_hess);
    Json slopes = Json::array();
    if (dp.c0_exact) {
      slopes.push_back(rational_json(*dp.c0_exact));
      slopes.push_back(rational_json(*dp.c1_exact));
    } else {
      slopes.push_back(float_str(dp.c0));
      slopes.push_back(float_str(dp.c1));
    }
    j["tangent_slopes"] = slopes;
  }
  return j;
}

Json asym_report(const RationalGF& gf, const MultiplePointData& mp, const Classification& cl,
                 const AsymptoticResult& res, const std::vector<long>& r) {
  Json j = classify_report(gf, mp, cl, res.cone);
  Json lead;
  lead["theorem"] = theorem_name(res.theorem);
  lead["b0"] = float_str(res.b0);
  if (res.b0_exact) lead["b0_exact"] = rational_to_string(*res.b0_exact);
  lead["power"] = float_str(res.power);
  lead["boundary_halved"] = res.boundary_halved;
  Json pl = Json::array();
  for (double x : res.prefactor_log) pl.push_back(float_str(x));
  lead["prefactor_log"] = pl;
  j["leading"] = lead;
  j["direction"] = r;
  j["prediction"] = float_str(evaluate_prediction(res, r));
  for (const std::string& w : res.warnings) {
    bool seen = false;
    for (const auto& e : j["warnings"])
      if (e == w) seen = true;
    if (!seen) j["warnings"].push_back(w);
  }
  return j;
}

std::string dump_report(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace mpasym
