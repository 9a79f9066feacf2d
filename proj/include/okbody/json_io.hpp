#pragma once

#include <json.hpp>

#include "okbody/slices.hpp"
#include "okbody/toric.hpp"
#include "okbody/zariski.hpp"

namespace okb {

using Json = nlohmann::json;

// Rationals travel as "p/q" strings ("n" when integral); a scalar that may be
// irrational is either such a string or {"a":"p/q","b":"p/q","d":n}.
Json to_json(const Rational& r);
Json to_json(const QuadNum& q);
Rational rational_from_json(const Json& j);
QuadNum scalar_from_json(const Json& j);

Json to_json(const VecQ& v);
VecQ vecq_from_json(const Json& j);

Json to_json(const SurfaceModel& s);
SurfaceModel surface_from_json(const Json& j);

Json to_json(const FlagData& f);
FlagData flag_from_json(const Json& j);

Json to_json(const ZariskiDecomposition& z);
Json to_json(const SegmentWalk& w);
Json to_json(const OkounkovPolygon& p);

Json to_json(const PolyQ& p);
PolyQ polyq_from_json(const Json& j);

Json to_json(const ToricSurface& t);
ToricSurface fan_from_json(const Json& j);
Json to_json(const Realization& r);

struct ToricBodyInput {
    ToricSurface fan;
    std::vector<Rational> a;
    int i1 = -1;
    int i2 = -1;
};
ToricBodyInput toric_body_input_from_json(const Json& j);

DivisorPath path_from_json(const Json& j);
Json slice_to_json(const SliceBody& body, const NonPolyhedralityReport& cert);

} // namespace okb
