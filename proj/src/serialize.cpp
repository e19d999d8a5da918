#include "padtrop/serialize.hpp"

namespace padtrop {

Json to_json(const Valuation& v) { return v.is_infinite() ? Json("inf") : Json(to_string(v.value())); }

Json to_json(const TropPoint2& p) { return Json::array({to_json(p.x), to_json(p.y)}); }

Json to_json(const Point2& p) { return Json::array({to_string(p(0)), to_string(p(1))}); }

Json to_json(const LatticePoint& p) { return Json::array({p(0), p(1)}); }

Json to_json(const CombType& t) {
  Json splits = Json::array();
  for (Split s : t.splits()) {
    Json side = Json::array();
    for (int i = 0; i < t.n(); ++i)
      if (s >> i & 1U) side.push_back(i + 1);
    splits.push_back(side);
  }
  return {{"n", t.n()}, {"name", t.str()}, {"dimension", t.dimension()}, {"binary", t.is_binary()}, {"splits", splits}};
}

Json to_json(const MarkedTree& tree) {
  Json vertices = Json::array();
  for (int v = 0; v < tree.num_vertices(); ++v) {
    Json vj = {{"id", v}, {"degree", tree.degree(v)}};
    if (tree.has_depths()) vj["depth"] = to_string(tree.depth(v));
    vertices.push_back(vj);
  }
  Json edges = Json::array();
  for (const auto& e : tree.edges()) edges.push_back({{"u", e.u}, {"v", e.v}, {"length", to_string(e.length)}});
  Json ends = Json::array();
  for (int label = 1; label <= tree.num_ends(); ++label) ends.push_back({{"label", label}, {"vertex", tree.end_vertex(label)}});
  return {{"vertices", vertices}, {"edges", edges}, {"ends", ends}, {"reference_end", tree.reference_end()},
          {"type", to_json(comb_type_of(tree))}};
}

Json to_json(const PlaneTropicalCurve& c) {
  Json vertices = Json::array();
  for (const auto& v : c.vertices()) vertices.push_back(to_json(v));
  Json edges = Json::array();
  for (const auto& e : c.edges())
    edges.push_back({{"from", e.from}, {"to", e.to}, {"direction", to_json(e.direction)}, {"weight", e.weight}});
  Json rays = Json::array();
  for (const auto& r : c.rays()) rays.push_back({{"from", r.from}, {"direction", to_json(r.direction)}, {"weight", r.weight}});
  return {{"vertices", vertices}, {"edges", edges}, {"rays", rays}};
}

Json to_json(const DualSubdivision& s) {
  Json cells = Json::array();
  for (const auto& cell : s.cells) {
    Json corners = Json::array();
    for (const auto& q : cell.corners) corners.push_back(to_json(q));
    cells.push_back(corners);
  }
  return {{"degree", s.degree}, {"cells", cells}};
}

Json to_json(const Certificate& c) {
  Json j = {{"kind", to_string(c.kind)}, {"reason", c.reason}};
  if (c.resource_exceeded) j["resource_exceeded"] = true;
  return j;
}

Json to_json(const CountResult& r) {
  Json curves = Json::array();
  for (const auto& c : r.curves)
    curves.push_back({{"multiplicity", c.multiplicity}, {"curve", to_json(c.curve)}, {"subdivision", to_json(c.subdivision)}});
  return {{"d", r.d}, {"g", r.g}, {"N", to_string(r.N)}, {"certificate", to_json(r.certificate)}, {"curves", curves}};
}

Json to_json(const MumfordResult& r) {
  Json j = {{"certified", r.certified}, {"configs_tried", r.configs_tried}};
  if (r.certified) {
    j["N"] = to_string(r.N);
    Json rows = Json::array();
    const auto& m = r.config->matrix();
    for (int i = 0; i < 3; ++i) rows.push_back(Json::array({to_string(m(i, 0)), to_string(m(i, 1)), to_string(m(i, 2))}));
    j["config"] = rows;
    Json pts = Json::array();
    for (const auto& p : r.tropical_points) pts.push_back(to_json(p));
    j["tropical_points"] = pts;
  } else {
    j["reason"] = r.reason;
  }
  if (r.resource_exceeded) j["resource_exceeded"] = true;
  return j;
}

Json to_json(const ConvergenceReport& r) {
  return {{"convergent", r.convergent}, {"margin", r.margin}, {"worst", r.worst}};
}

Json to_json(const McResult& r) {
  Json j = {{"estimate", r.estimate}, {"std_error", r.std_error}, {"samples", r.samples},
            {"window", Json::array({r.v_min, r.v_max})}, {"convergence", to_json(r.convergence)}};
  if (!r.warning.empty()) j["warning"] = r.warning;
  return j;
}

Json to_json(const Veneziano4& v) {
  Json regions = Json::array();
  for (const auto& r : v.regions)
    regions.push_back({{"region", to_string(r.region)}, {"exponent", r.exponent}, {"value", r.value}, {"convergent", r.convergent}});
  return {{"value", v.value}, {"regions", regions}};
}

Json to_json(const DiscreteMeasure& m) {
  Json atoms = Json::array();
  for (const auto& a : m.atoms) atoms.push_back({{"position", to_string(a.position)}, {"mass", to_string(a.mass)}});
  return {{"atoms", atoms}, {"total_mass", to_string(m.total_mass())}};
}

Json to_json(const CellMeasure& m) {
  Json cells = Json::array();
  long maximal = 0;
  for (const auto& c : m.cells) {
    if (c.type.is_binary()) ++maximal;
    cells.push_back({{"type", c.type.str()}, {"dimension", c.type.dimension()}, {"weight", to_string(c.weight)}});
  }
  return {{"n", m.n}, {"lambda", m.lambda}, {"types", m.cells.size()}, {"maximal", maximal},
          {"total_mass", to_string(m.total_mass())}, {"cells", cells}};
}

}  // namespace padtrop
