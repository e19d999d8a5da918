#pragma once

// Command-line jobs: JSON input documents validated into typed requests and
// dispatched to the library. Results are JSON plus optional SVG/DOT figures.

#include "padtrop/amplitude.hpp"
#include "padtrop/counting.hpp"
#include "padtrop/serialize.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace padtrop {

enum class Subcommand { Dendrogram, Tropicalize, Count, Mumford, Amplitude, Cells, Measure };
std::string to_string(Subcommand s);
// Throws InputError for unknown names.
Subcommand parse_subcommand(const std::string& name);

// Schema violation; `pointer` is the JSON pointer of the offending value.
class InputError : public std::runtime_error {
 public:
  InputError(std::string pointer, const std::string& message)
      : std::runtime_error(message), pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

enum class ExitCode : int { Success = 0, InvalidInput = 2, Inconclusive = 3, ResourceLimit = 4 };

struct DendrogramJob {
  FieldParams params{2};
  std::vector<ProjPoint1> points;
};

struct TropicalizeJob {
  FieldParams params{2};
  Matrix3q config = Matrix3q::Identity();
  std::vector<ProjPoint2> points;
};

enum class CountMethod { Lattice, Recursion, Direct };

struct CountJob {
  long d = 1;
  long g = 0;
  CountMethod method = CountMethod::Lattice;
  std::vector<TropPoint2> points;
};

struct MumfordJob {
  FieldParams params{2};
  long d = 1;
  long g = 0;
  std::vector<ProjPoint2> points;
  std::uint64_t pool_seed = 0;
};

struct AmplitudeJob {
  long p = 2;
  std::optional<Kinematics> kinematics;
  ExponentTable exponents;
  // Set for four-point exponent input, enabling the closed form.
  std::optional<std::pair<double, double>> four_point;
  McOptions mc;
};

struct CellsJob {
  int n = 4;
  double lambda = 1;
};

struct MeasureJob {
  long chain_N = 1;
};

struct JobOptions {
  std::optional<std::string> out_path;
  std::optional<std::string> svg_path;
  std::optional<std::string> dot_path;
  std::optional<std::uint64_t> seed;
  // Amplitude only; override the document like --seed does.
  std::optional<std::int64_t> samples;
  std::optional<std::pair<long, long>> window;
  unsigned threads = 1;
  std::uint64_t max_nodes_per_type = CountLimits{}.max_nodes_per_type;
};

struct JobSpec {
  Subcommand subcommand = Subcommand::Dendrogram;
  std::variant<DendrogramJob, TropicalizeJob, CountJob, MumfordJob, AmplitudeJob, CellsJob, MeasureJob> request;
  JobOptions options;
  std::vector<std::string> warnings;
};

// Parses and validates a document. Throws InputError; unknown fields become
// warnings. --seed, --samples and --window override the document.
JobSpec parse_input(Subcommand sub, const std::string& document, const JobOptions& options = {});

struct JobResult {
  ExitCode exit_code = ExitCode::Success;
  Json body;
  std::optional<std::string> svg;
  std::optional<std::string> dot;
};

JobResult execute(const JobSpec& job);

// parse_input then execute, with input errors, bad values rejected by the
// library and resource limits turned into error bodies and exit codes.
JobResult run_job(Subcommand sub, const std::string& document, const JobOptions& options = {});

// Machine-readable error object.
Json error_body(const std::string& kind, const std::string& message, const std::string& pointer = "");

}  // namespace padtrop
