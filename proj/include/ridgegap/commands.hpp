#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ridgegap/domain.hpp"
#include "ridgegap/json_io.hpp"
#include "ridgegap/network.hpp"
#include "ridgegap/verify.hpp"

namespace ridgegap {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kBadInput = 1;
inline constexpr int kComputation = 2;
inline constexpr int kDisagreement = 3;
inline constexpr int kUnreachable = 4;
inline constexpr int kBlowup = 5;
}  // namespace exit_code

struct ProblemSpec {
  std::size_t dims = 2;
  std::vector<double> a{1.0, 0.0};
  std::vector<double> b{0.0, 1.0};
  // exactly one of points / box
  std::optional<std::vector<Point>> points;
  std::optional<std::array<double, 4>> box;  ///< c1 d1 c2 d2 in projection coordinates
  std::size_t grid = 9;
  std::string f;                              ///< expression in x1..x{dims}
  std::optional<std::vector<double>> values;  ///< explicit f values at `points`
  std::string activation = "sigmoid";
  double epsilon = 0.05;
  std::optional<double> tol;
  std::size_t max_len = 4;
  std::size_t quadrature_order = 64;
  std::size_t check_grid = 65;
  std::size_t m_cap = 257;
  FitSolver solver = FitSolver::Minimax;
  bool timings = false;

  /// Throws InvalidInput.
  void validate() const;
  /// Strict reader for the problem format in docs/problem.schema.json.
  static ProblemSpec from_json(const json& j);
  json to_json() const;
};

/// Loads points (and optionally values) from a JSON file holding either an
/// array of points or {"points": [...], "values": [...]}.
void load_points_file(const std::string& path, ProblemSpec& spec);

struct Outcome {
  int exit_code = exit_code::kOk;
  json report;                    ///< empty object when nothing was computed
  std::optional<json> error;      ///< {"kind", "message", ...}
  std::vector<std::string> warnings;
};

/// {"kind": ..., "message": ..., offset/expected/node when the error has them}
json error_object(const std::exception& e);

Outcome cmd_error(const ProblemSpec& spec);
Outcome cmd_fit_network(const ProblemSpec& spec);

struct EnumerateOutcome {
  int exit_code = exit_code::kOk;
  std::vector<json> lines;  ///< {"pts", "firstEdge", "value"}, by |value| descending
  bool partial = false;
  std::optional<json> error;
};

EnumerateOutcome cmd_enumerate_paths(const ProblemSpec& spec);

Outcome cmd_verify(std::uint64_t seed, std::size_t trials, Fault fault = Fault::None);

/// Grid sizes 2, 3, 5, 9, ... below spec.grid, then spec.grid itself.
std::vector<std::size_t> refinement_sizes(std::size_t grid);

/// CSV "m,lowerBound,bestRidge" over refinement_sizes for a box problem.
/// Resolutions run on up to `jobs` threads; rows stay in resolution order.
std::string refinement_csv(const ProblemSpec& spec, std::size_t jobs);

/// Report text: two-space indented JSON with a trailing newline.
std::string render(const json& j);

}  // namespace ridgegap
