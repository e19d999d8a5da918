#include "padtrop/job.hpp"

#include "padtrop/clmeasure.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace padtrop {

namespace {

constexpr std::int64_t max_samples = 1'000'000'000;
constexpr long max_window = 400;
constexpr long max_chain = 100'000;
constexpr long max_mc_prime = 251;

std::string child(const std::string& ptr, const std::string& key) { return ptr + "/" + key; }
std::string child(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

Json bigint_json(const BigInt& z) {
  if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max())
    return Json(z.convert_to<std::int64_t>());
  return Json(to_string(z));
}

// Field accessors that record which keys of each object were read.
class Reader {
 public:
  explicit Reader(std::vector<std::string>& warnings) : warnings_(warnings) {}

  const Json& object(const Json& j, const std::string& ptr, std::initializer_list<const char*> known) {
    if (!j.is_object()) throw InputError(ptr.empty() ? "/" : ptr, "expected a JSON object");
    const std::set<std::string> names(known.begin(), known.end());
    for (const auto& [key, value] : j.items())
      if (!names.count(key)) warnings_.push_back(fmt::format("unknown field {} ignored", child(ptr, key)));
    return j;
  }

  static const Json& require(const Json& obj, const std::string& ptr, const char* key) {
    if (!obj.contains(key)) throw InputError(child(ptr, key), fmt::format("missing required field \"{}\"", key));
    return obj[key];
  }

  static long integer(const Json& j, const std::string& ptr) {
    if (j.is_number_integer()) {
      if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<long>::max()))
        throw InputError(ptr, "integer out of range");
      return j.get<long>();
    }
    throw InputError(ptr, "expected an integer");
  }

  static long integer_in(const Json& j, const std::string& ptr, long lo, long hi) {
    const long v = integer(j, ptr);
    if (v < lo || v > hi) throw InputError(ptr, fmt::format("{} is outside [{}, {}]", v, lo, hi));
    return v;
  }

  static std::uint64_t seed(const Json& j, const std::string& ptr) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long>() >= 0))
      throw InputError(ptr, "expected a non-negative integer seed");
    return j.get<std::uint64_t>();
  }

  static double real(const Json& j, const std::string& ptr) {
    if (!j.is_number()) throw InputError(ptr, "expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw InputError(ptr, "expected a finite number");
    return v;
  }

  static Rational rational(const Json& j, const std::string& ptr) {
    if (j.is_number_integer()) return Rational(BigInt(integer(j, ptr)));
    if (!j.is_string()) throw InputError(ptr, "expected a rational as a string or an integer");
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw InputError(ptr, e.what());
    }
  }

  static const Json& array(const Json& j, const std::string& ptr, std::size_t min_size = 0) {
    if (!j.is_array()) throw InputError(ptr, "expected an array");
    if (j.size() < min_size) throw InputError(ptr, fmt::format("expected at least {} entries", min_size));
    return j;
  }

  static long prime(const Json& j, const std::string& ptr) {
    const long p = integer(j, ptr);
    if (!is_prime(p)) throw InputError(ptr, fmt::format("{} is not prime", p));
    return p;
  }

  static FieldParams field(const Json& obj, const std::string& ptr) {
    const long p = prime(require(obj, ptr, "p"), child(ptr, "p"));
    const long e = obj.contains("e") ? integer_in(obj["e"], child(ptr, "e"), 1, 1'000'000) : 1;
    return FieldParams(p, e);
  }

  static ProjPoint2 point2(const Json& j, const std::string& ptr) {
    array(j, ptr);
    if (j.size() != 3) throw InputError(ptr, "expected homogeneous coordinates [x0, x1, x2]");
    const Rational x0 = rational(j[0], child(ptr, 0)), x1 = rational(j[1], child(ptr, 1)), x2 = rational(j[2], child(ptr, 2));
    if (x0 == 0 && x1 == 0 && x2 == 0) throw InputError(ptr, "homogeneous coordinates are all zero");
    return ProjPoint2(x0, x1, x2);
  }

  static std::vector<ProjPoint2> points2(const Json& j, const std::string& ptr) {
    array(j, ptr, 1);
    std::vector<ProjPoint2> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
      out.push_back(point2(j[i], child(ptr, i)));
      for (std::size_t k = 0; k + 1 < out.size(); ++k)
        if (out[k] == out.back()) throw InputError(child(ptr, i), fmt::format("duplicate of point {}", k));
    }
    return out;
  }

  void warn(std::string message) { warnings_.push_back(std::move(message)); }

 private:
  std::vector<std::string>& warnings_;
};

void check_genus(long d, long g) {
  if (g > max_genus(d))
    throw InputError("/g", fmt::format("g = {} exceeds (d-1)(d-2)/2 = {}", g, max_genus(d)));
}

std::uint64_t job_seed(const Json& doc, const char* key, const JobOptions& options, std::vector<std::string>& warnings) {
  std::optional<std::uint64_t> in_doc;
  if (doc.contains(key)) in_doc = Reader::seed(doc[key], child("", key));
  if (options.seed) {
    if (in_doc && *in_doc != *options.seed)
      warnings.push_back(fmt::format("--seed {} overrides /{} = {}", *options.seed, key, *in_doc));
    return *options.seed;
  }
  if (!in_doc) throw InputError(child("", key), fmt::format("a seed is required: give \"{}\" or --seed", key));
  return *in_doc;
}

DendrogramJob parse_dendrogram(const Json& doc, Reader& r) {
  r.object(doc, "", {"p", "e", "points"});
  DendrogramJob job;
  job.params = Reader::field(doc, "");
  const Json& pts = Reader::array(Reader::require(doc, "", "points"), "/points", 3);
  if (pts.size() > 32) throw InputError("/points", "at most 32 points are supported");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string ptr = child("/points", i);
    if (pts[i].is_string() && pts[i].get<std::string>() == "inf") {
      job.points.push_back(ProjPoint1::infinity());
    } else {
      job.points.push_back(ProjPoint1::finite(Reader::rational(pts[i], ptr)));
    }
    for (std::size_t k = 0; k < i; ++k)
      if (job.points[k] == job.points[i]) throw InputError(ptr, fmt::format("duplicate of point {}", k));
  }
  return job;
}

TropicalizeJob parse_tropicalize(const Json& doc, Reader& r) {
  r.object(doc, "", {"p", "e", "config", "points"});
  TropicalizeJob job;
  job.params = Reader::field(doc, "");
  if (doc.contains("config")) {
    const Json& rows = Reader::array(doc["config"], "/config");
    if (rows.size() != 3) throw InputError("/config", "expected a 3x3 matrix");
    for (int i = 0; i < 3; ++i) {
      const std::string rp = child("/config", static_cast<std::size_t>(i));
      const Json& row = Reader::array(rows[static_cast<std::size_t>(i)], rp);
      if (row.size() != 3) throw InputError(rp, "expected a row of 3 rationals");
      for (int k = 0; k < 3; ++k) job.config(i, k) = Reader::rational(row[static_cast<std::size_t>(k)], child(rp, static_cast<std::size_t>(k)));
    }
    if (job.config.determinant() == 0) throw InputError("/config", "the three lines are not in general position");
  }
  job.points = Reader::points2(Reader::require(doc, "", "points"), "/points");
  return job;
}

CountJob parse_count(const Json& doc, Reader& r) {
  r.object(doc, "", {"d", "g", "method", "points"});
  CountJob job;
  job.d = Reader::integer_in(Reader::require(doc, "", "d"), "/d", 1, 1000);
  job.g = Reader::integer_in(Reader::require(doc, "", "g"), "/g", 0, std::numeric_limits<long>::max());
  check_genus(job.d, job.g);
  const Json& m = Reader::require(doc, "", "method");
  const std::string name = m.is_string() ? m.get<std::string>() : "";
  if (name == "lattice")
    job.method = CountMethod::Lattice;
  else if (name == "recursion")
    job.method = CountMethod::Recursion;
  else if (name == "direct")
    job.method = CountMethod::Direct;
  else
    throw InputError("/method", "method must be \"lattice\", \"recursion\" or \"direct\"");
  if (job.method == CountMethod::Recursion && job.g != 0)
    throw InputError("/g", "the Kontsevich recursion counts rational curves only (g = 0)");
  if (job.method != CountMethod::Direct) {
    if (doc.contains("points")) r.warn("/points is only used by the direct method; ignored");
    return job;
  }
  const Json& pts = Reader::array(Reader::require(doc, "", "points"), "/points");
  const long need = incidence_count(job.d, job.g);
  if (static_cast<long>(pts.size()) != need)
    throw InputError("/points", fmt::format("expected 3d + g - 1 = {} points, got {}", need, pts.size()));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string ptr = child("/points", i);
    const Json& q = Reader::array(pts[i], ptr);
    if (q.size() != 2) throw InputError(ptr, "expected a tropical point [x, y]");
    job.points.push_back({Valuation(Reader::rational(q[0], child(ptr, 0))), Valuation(Reader::rational(q[1], child(ptr, 1)))});
    for (std::size_t k = 0; k < i; ++k)
      if (job.points[k] == job.points[i]) throw InputError(ptr, fmt::format("duplicate of point {}", k));
  }
  return job;
}

MumfordJob parse_mumford(const Json& doc, Reader& r, const JobOptions& options, std::vector<std::string>& warnings) {
  r.object(doc, "", {"p", "e", "d", "g", "points", "config_pool_seed"});
  MumfordJob job;
  job.params = Reader::field(doc, "");
  job.d = Reader::integer_in(Reader::require(doc, "", "d"), "/d", 1, 1000);
  job.g = Reader::integer_in(Reader::require(doc, "", "g"), "/g", 0, std::numeric_limits<long>::max());
  check_genus(job.d, job.g);
  job.points = Reader::points2(Reader::require(doc, "", "points"), "/points");
  const long need = incidence_count(job.d, job.g);
  if (static_cast<long>(job.points.size()) != need)
    throw InputError("/points", fmt::format("expected 3d + g - 1 = {} points, got {}", need, job.points.size()));
  job.pool_seed = job_seed(doc, "config_pool_seed", options, warnings);
  return job;
}

ExponentTable parse_exponents(const Json& j, Reader& r, std::optional<std::pair<double, double>>& four) {
  const std::string ptr = "/exponents";
  if (j.is_object() && j.contains("a")) {
    r.object(j, ptr, {"a", "b"});
    const double a = Reader::real(j["a"], child(ptr, "a"));
    const double b = Reader::real(Reader::require(j, ptr, "b"), child(ptr, "b"));
    four = {a, b};
    return four_point_exponents(a, b);
  }
  r.object(j, ptr, {"to0", "to1", "pair"});
  ExponentTable t;
  const Json& to0 = Reader::array(Reader::require(j, ptr, "to0"), child(ptr, "to0"), 1);
  const std::size_t m = to0.size();
  if (m > 20) throw InputError(child(ptr, "to0"), "at most 20 variables are supported");
  const Json& to1 = Reader::array(Reader::require(j, ptr, "to1"), child(ptr, "to1"));
  if (to1.size() != m) throw InputError(child(ptr, "to1"), fmt::format("expected {} entries", m));
  for (std::size_t i = 0; i < m; ++i) {
    t.to0.push_back(Reader::real(to0[i], child(child(ptr, "to0"), i)));
    t.to1.push_back(Reader::real(to1[i], child(child(ptr, "to1"), i)));
  }
  t.pair = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
  if (m > 1 || j.contains("pair")) {
    const std::string pp = child(ptr, "pair");
    const Json& rows = Reader::array(Reader::require(j, ptr, "pair"), pp);
    if (rows.size() != m) throw InputError(pp, fmt::format("expected a {}x{} matrix", m, m));
    for (std::size_t i = 0; i < m; ++i) {
      const Json& row = Reader::array(rows[i], child(pp, i));
      if (row.size() != m) throw InputError(child(pp, i), fmt::format("expected {} entries", m));
      for (std::size_t k = 0; k < m; ++k)
        t.pair(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = Reader::real(row[k], child(child(pp, i), k));
    }
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < i; ++k)
        if (t.pair(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) !=
            t.pair(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i)))
          throw InputError(child(child(pp, i), k), "pair exponents must be symmetric");
  }
  return t;
}

AmplitudeJob parse_amplitude(const Json& doc, Reader& r, const JobOptions& options, std::vector<std::string>& warnings) {
  r.object(doc, "", {"p", "momenta", "exponents", "samples", "seed", "window"});
  AmplitudeJob job;
  job.p = Reader::prime(Reader::require(doc, "", "p"), "/p");
  if (job.p > max_mc_prime) throw InputError("/p", fmt::format("Monte-Carlo sampling supports p <= {}", max_mc_prime));
  const bool has_momenta = doc.contains("momenta"), has_exponents = doc.contains("exponents");
  if (has_momenta == has_exponents) throw InputError("/momenta", "give exactly one of \"momenta\" and \"exponents\"");
  if (has_momenta) {
    const Json& ks = Reader::array(doc["momenta"], "/momenta", 4);
    if (ks.size() > 23) throw InputError("/momenta", "at most 23 momenta are supported");
    std::vector<Eigen::VectorXd> momenta;
    for (std::size_t i = 0; i < ks.size(); ++i) {
      const std::string ptr = child("/momenta", i);
      const Json& k = Reader::array(ks[i], ptr, 1);
      Eigen::VectorXd v(static_cast<Eigen::Index>(k.size()));
      for (std::size_t c = 0; c < k.size(); ++c) v(static_cast<Eigen::Index>(c)) = Reader::real(k[c], child(ptr, c));
      momenta.push_back(v);
    }
    try {
      job.kinematics.emplace(std::move(momenta));
    } catch (const std::invalid_argument& e) {
      throw InputError("/momenta", e.what());
    }
    job.exponents = exponents_of(*job.kinematics);
    if (job.kinematics->n() == 4) job.four_point = {{job.kinematics->dot(1, 2), job.kinematics->dot(1, 3)}};
  } else {
    job.exponents = parse_exponents(doc["exponents"], r, job.four_point);
  }
  job.mc.samples = doc.contains("samples") ? Reader::integer_in(doc["samples"], "/samples", 2, max_samples) : 100000;
  job.mc.seed = job_seed(doc, "seed", options, warnings);
  if (doc.contains("window")) {
    const Json& w = Reader::array(doc["window"], "/window");
    if (w.size() != 2) throw InputError("/window", "expected [v_min, v_max]");
    const long lo = Reader::integer_in(w[0], "/window/0", -max_window, max_window);
    const long hi = Reader::integer_in(w[1], "/window/1", -max_window, max_window);
    if (lo > hi) throw InputError("/window", "v_min exceeds v_max");
    job.mc.window = {{lo, hi}};
  }
  if (options.samples) {
    if (*options.samples < 2 || *options.samples > max_samples)
      throw InputError("/samples", fmt::format("--samples must lie in [2, {}]", max_samples));
    if (doc.contains("samples") && job.mc.samples != *options.samples)
      warnings.push_back(fmt::format("--samples {} overrides /samples = {}", *options.samples, job.mc.samples));
    job.mc.samples = *options.samples;
  }
  if (options.window) {
    const auto [lo, hi] = *options.window;
    if (lo > hi || lo < -max_window || hi > max_window)
      throw InputError("/window", fmt::format("--window must satisfy -{0} <= v_min <= v_max <= {0}", max_window));
    if (job.mc.window && *job.mc.window != *options.window) warnings.push_back("--window overrides /window");
    job.mc.window = options.window;
  }
  job.mc.threads = options.threads;
  return job;
}

CellsJob parse_cells(const Json& doc, Reader& r) {
  r.object(doc, "", {"n", "lambda"});
  CellsJob job;
  job.n = static_cast<int>(Reader::integer_in(Reader::require(doc, "", "n"), "/n", 3, 8));
  if (doc.contains("lambda")) {
    job.lambda = Reader::real(doc["lambda"], "/lambda");
    if (!(job.lambda > 0)) throw InputError("/lambda", "lambda must be positive");
  }
  return job;
}

MeasureJob parse_measure(const Json& doc, Reader& r) {
  r.object(doc, "", {"chain_N"});
  return {Reader::integer_in(Reader::require(doc, "", "chain_N"), "/chain_N", 1, max_chain)};
}

std::optional<std::string> curves_svg(const std::vector<CountedCurve>& curves, const std::vector<TropPoint2>& pts) {
  if (curves.empty()) return std::nullopt;
  PlaneTropicalCurve all = curves.front().curve;
  for (std::size_t i = 1; i < curves.size(); ++i) all = PlaneTropicalCurve::union_of(all, curves[i].curve);
  std::vector<Point2> marked;
  for (const auto& q : pts)
    if (q.is_finite()) marked.push_back(q.finite());
  return to_svg(all, marked);
}

ExitCode certificate_exit(const Certificate& c) {
  if (c.resource_exceeded) return ExitCode::ResourceLimit;
  return c.kind == CertificateKind::General ? ExitCode::Success : ExitCode::Inconclusive;
}

}  // namespace

std::string to_string(Subcommand s) {
  switch (s) {
    case Subcommand::Dendrogram: return "dendrogram";
    case Subcommand::Tropicalize: return "tropicalize";
    case Subcommand::Count: return "count";
    case Subcommand::Mumford: return "mumford";
    case Subcommand::Amplitude: return "amplitude";
    case Subcommand::Cells: return "cells";
    case Subcommand::Measure: return "measure";
  }
  return "?";
}

Subcommand parse_subcommand(const std::string& name) {
  for (auto s : {Subcommand::Dendrogram, Subcommand::Tropicalize, Subcommand::Count, Subcommand::Mumford,
                 Subcommand::Amplitude, Subcommand::Cells, Subcommand::Measure})
    if (to_string(s) == name) return s;
  throw InputError("", fmt::format("unknown subcommand \"{}\"", name));
}

Json error_body(const std::string& kind, const std::string& message, const std::string& pointer) {
  Json e = {{"kind", kind}, {"message", message}};
  if (!pointer.empty()) e["pointer"] = pointer;
  return {{"error", e}};
}

JobSpec parse_input(Subcommand sub, const std::string& document, const JobOptions& options) {
  Json doc;
  try {
    doc = Json::parse(document);
  } catch (const Json::parse_error& e) {
    throw InputError("", fmt::format("malformed JSON at byte {}: {}", e.byte, e.what()));
  }
  if (options.threads < 1) throw InputError("", "--threads must be at least 1");
  JobSpec job;
  job.subcommand = sub;
  job.options = options;
  Reader r(job.warnings);
  switch (sub) {
    case Subcommand::Dendrogram: job.request = parse_dendrogram(doc, r); break;
    case Subcommand::Tropicalize: job.request = parse_tropicalize(doc, r); break;
    case Subcommand::Count: job.request = parse_count(doc, r); break;
    case Subcommand::Mumford: job.request = parse_mumford(doc, r, options, job.warnings); break;
    case Subcommand::Amplitude: job.request = parse_amplitude(doc, r, options, job.warnings); break;
    case Subcommand::Cells: job.request = parse_cells(doc, r); break;
    case Subcommand::Measure: job.request = parse_measure(doc, r); break;
  }
  if (sub != Subcommand::Amplitude) {
    if (options.samples) job.warnings.push_back("--samples applies to amplitude only; ignored");
    if (options.window) job.warnings.push_back("--window applies to amplitude only; ignored");
  }
  return job;
}

JobResult execute(const JobSpec& job) {
  JobResult res;
  Json& body = res.body;
  body["subcommand"] = to_string(job.subcommand);
  const unsigned threads = job.options.threads;
  CountLimits limits;
  limits.threads = threads;
  limits.max_nodes_per_type = job.options.max_nodes_per_type;

  if (const auto* j = std::get_if<DendrogramJob>(&job.request)) {
    const MarkedTree tree = build_dendrogram(j->points, j->params);
    std::vector<std::string> names;
    for (const auto& q : j->points) names.push_back(q.str());
    body["tree"] = to_json(tree);
    res.svg = to_svg(tree, names);
    res.dot = to_dot(tree, names);
  } else if (const auto* j = std::get_if<TropicalizeJob>(&job.request)) {
    const LineConfig cfg(j->config);
    Json pts = Json::array();
    for (std::size_t i = 0; i < j->points.size(); ++i) {
      try {
        pts.push_back(to_json(tropicalize(j->points[i], cfg, j->params)));
      } catch (const std::domain_error& e) {
        throw InputError(child("/points", i), e.what());
      }
    }
    body["points"] = pts;
  } else if (const auto* j = std::get_if<CountJob>(&job.request)) {
    body["d"] = j->d;
    body["g"] = j->g;
    switch (j->method) {
      case CountMethod::Lattice:
        body["method"] = "lattice";
        if (j->d > 6) throw ResourceLimitError("lattice-path enumeration is limited to d <= 6");
        body["N"] = bigint_json(count_lattice_paths(j->d, j->g, threads));
        break;
      case CountMethod::Recursion:
        body["method"] = "recursion";
        body["N"] = bigint_json(kontsevich_N(j->d));
        break;
      case CountMethod::Direct: {
        body["method"] = "direct";
        const CountResult r = count_through(j->d, j->g, j->points, limits);
        Json rj = to_json(r);
        body["N"] = bigint_json(r.N);
        body["certificate"] = rj["certificate"];
        body["curves"] = rj["curves"];
        res.exit_code = certificate_exit(r.certificate);
        if (r.certificate.kind == CertificateKind::General) res.svg = curves_svg(r.curves, j->points);
        break;
      }
    }
  } else if (const auto* j = std::get_if<MumfordJob>(&job.request)) {
    const auto pool = default_config_pool(j->params, j->pool_seed);
    const MumfordResult r = mumford_count(j->points, j->d, j->g, pool, j->params, limits);
    body["d"] = j->d;
    body["g"] = j->g;
    body.update(to_json(r));
    if (r.certified) {
      body["N"] = bigint_json(r.N);
      if (r.count) res.svg = curves_svg(r.count->curves, r.tropical_points);
    } else {
      body["explanation"] = "no line configuration in the pool put the tropical points in general position";
      res.exit_code = r.resource_exceeded ? ExitCode::ResourceLimit : ExitCode::Inconclusive;
    }
  } else if (const auto* j = std::get_if<AmplitudeJob>(&job.request)) {
    const McResult r = amplitude_n_mc(j->p, j->exponents, j->mc);
    body["p"] = j->p;
    body["n"] = j->exponents.variables() + 3;
    body["seed"] = j->mc.seed;
    body.update(to_json(r));
    if (j->four_point && r.convergence.convergent) {
      const Veneziano4 v = veneziano4(j->p, j->four_point->first, j->four_point->second, ContinuationMode::StrictConvergent);
      body["closed_form"] = to_json(v);
    }
    if (!r.convergence.convergent) res.exit_code = ExitCode::Inconclusive;
  } else if (const auto* j = std::get_if<CellsJob>(&job.request)) {
    body.update(to_json(moduli_cell_measure(j->n, j->lambda)));
  } else if (const auto* j = std::get_if<MeasureJob>(&job.request)) {
    const DiscreteMeasure m = cl_chain_measure(j->chain_N);
    body["chain_N"] = j->chain_N;
    body.update(to_json(m));
    body["weak_convergence_error"] = to_string(weak_convergence_error(j->chain_N));
    res.svg = to_svg(m);
  }
  if (!job.warnings.empty()) body["warnings"] = job.warnings;
  return res;
}

JobResult run_job(Subcommand sub, const std::string& document, const JobOptions& options) {
  JobResult res;
  try {
    res = execute(parse_input(sub, document, options));
  } catch (const InputError& e) {
    res = {ExitCode::InvalidInput, error_body("invalid_input", e.what(), e.pointer().empty() ? "/" : e.pointer()), {}, {}};
  } catch (const ResourceLimitError& e) {
    res = {ExitCode::ResourceLimit, error_body("resource_limit", e.what()), {}, {}};
  } catch (const std::invalid_argument& e) {
    res = {ExitCode::InvalidInput, error_body("invalid_input", e.what(), "/"), {}, {}};
  } catch (const std::domain_error& e) {
    res = {ExitCode::InvalidInput, error_body("invalid_input", e.what(), "/"), {}, {}};
  }
  return res;
}

}  // namespace padtrop
