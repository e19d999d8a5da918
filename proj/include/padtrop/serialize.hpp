#pragma once

// JSON views of library results. Rationals are written as strings and
// infinity as "inf".

#include "padtrop/amplitude.hpp"
#include "padtrop/clmeasure.hpp"
#include "padtrop/counting.hpp"

#include <json.hpp>

namespace padtrop {

using Json = nlohmann::ordered_json;

Json to_json(const Valuation& v);
Json to_json(const TropPoint2& p);
Json to_json(const Point2& p);
Json to_json(const LatticePoint& p);
Json to_json(const CombType& t);
Json to_json(const MarkedTree& tree);
Json to_json(const PlaneTropicalCurve& c);
Json to_json(const DualSubdivision& s);
Json to_json(const Certificate& c);
Json to_json(const CountResult& r);
Json to_json(const MumfordResult& r);
Json to_json(const ConvergenceReport& r);
Json to_json(const McResult& r);
Json to_json(const Veneziano4& v);
Json to_json(const DiscreteMeasure& m);
Json to_json(const CellMeasure& m);

}  // namespace padtrop
