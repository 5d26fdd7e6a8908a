#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "mpasym/asymptotics.hpp"

namespace mpasym {

using Json = nlohmann::json;

/// "%.12e"; all floats in reports go through this so output is
/// byte-reproducible.
std::string float_str(double x);

/// {"decimal": "%.12e", "exact": "p/q"}
Json rational_json(const Rational& q);

/// Base report: point, multiplicity, classification, cone, phi,
/// minimality, warnings.  2D double points also get det_hess and the
/// scaled tangent slopes.
Json classify_report(const RationalGF& gf, const MultiplePointData& mp,
                     const Classification& cl, const Cone& cone);

/// Base report plus the leading-term block and the numeric prediction
/// at the integer direction r.
Json asym_report(const RationalGF& gf, const MultiplePointData& mp, const Classification& cl,
                 const AsymptoticResult& res, const std::vector<long>& r);

/// Sorted keys, two-space indent, trailing newline.
std::string dump_report(const Json& j);

}  // namespace mpasym
