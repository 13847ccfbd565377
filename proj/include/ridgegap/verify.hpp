#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "ridgegap/json_io.hpp"
#include "ridgegap/random_instances.hpp"

namespace ridgegap {

/// Deliberate defects used to check that the harness notices broken code.
enum class Fault {
  None,
  /// B-edges weighted (f(u) - f(v))/2 like A-edges, so every cycle mean
  /// telescopes to zero.
  FlippedBEdgeSign,
};

Fault fault_from_string(const std::string& s);
const char* to_string(Fault f) noexcept;

/// sup_closed_path, or its faulty variant.
double sup_value(const SampledDomain& domain, std::span<const double> fvals, Fault fault);

struct SuiteTally {
  std::size_t pass = 0;
  std::size_t fail = 0;
};

struct VerifySummary {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::map<std::string, SuiteTally> suites;
  std::optional<json> counterexample;  ///< first failure, minimized

  bool passed() const;
  json to_json() const;
};

/// Runs the duality, annihilation, sandwich and Fubini suites `trials` times
/// each from a generator seeded with `seed`.
VerifySummary run_verify(std::uint64_t seed, std::size_t trials, Fault fault = Fault::None);

/// Dumps an instance as {"dirs": ..., "points": ..., "f": ...}.
json instance_to_json(const SampledDomain& domain, std::span<const double> fvals);

}  // namespace ridgegap
