#pragma once

// Hilbert's axioms compiled to sampled predicates, run against either model,
// plus the hand-built counterexamples for the log-euclidean plane.

#include <logeuclid/models.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace logeuclid {

enum class AxiomId {
  I1,
  I2,
  I2bis,
  I2weak,
  I3,
  II1,
  II2,
  II3,
  II4Pasch,
  III1,
  III2,
  III3,
  III4,
  III5,
  IV1,
  VArchimedes,
  Thm1,
};

const std::vector<AxiomId>& all_axioms();
std::string axiom_name(AxiomId id);
/// Throws UnsupportedAxiom for unknown names.
AxiomId parse_axiom(std::string_view name);
/// "all" or a comma separated list of names.
std::vector<AxiomId> parse_axiom_list(std::string_view list);

enum class ModelKind { LogEuclidean, Euclidean };
std::string model_name(ModelKind kind);
/// Throws InvalidInput for unknown names.
ModelKind parse_model(std::string_view name);

enum class ExpectedStatus { Holds, Fails, ReportOnly };
std::string to_string(ExpectedStatus status);
ExpectedStatus expected_status(ModelKind model, AxiomId axiom);

struct TrialConfig {
  std::uint64_t master_seed = 42;
  std::size_t n_trials = 1000;
  double r_min = 0.05;
  double r_max = 20.0;
};

/// Seed of one trial; depends only on the inputs, never on run order.
std::uint64_t trial_seed(std::uint64_t master_seed, AxiomId axiom, std::size_t trial);

inline constexpr std::size_t kMaxWitnesses = 10;

struct AxiomReport {
  AxiomId axiom = AxiomId::I1;
  std::string model;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::size_t vacuous = 0;  ///< trials whose premise did not hold
  std::uint64_t seed = 0;
  std::vector<Json> witnesses;  ///< first kMaxWitnesses failures by trial index
  ExpectedStatus expected = ExpectedStatus::Holds;

  bool matches_expected() const;
};

Json to_json(const AxiomReport& report);

/// Throws UnsupportedAxiom (never for ids of the enum) and InvalidInput for
/// zero trials or bad bounds.
std::vector<AxiomReport> run_axiom_suite(ModelKind model, const TrialConfig& cfg,
                                         const std::vector<AxiomId>& axioms);

/// Same as above with the reports dumped as a JSON array.
Json reports_to_json(const std::vector<AxiomReport>& reports);

Json theorem1_counterexample();
Json i2bis_counterexample();
Json weak_i2_counterexample();
Json sas_counterexample();
/// Ten parallels to Chord(1, 0) through (1, 2pi).
Json parallels_counterexample();

/// k distinct lines through p none of which meets l. Throws
/// PreconditionViolation when p lies on l, InvalidInput for k < 2 and
/// InsufficientParallels when the sweep finds fewer than k.
template <GeometryModel M>
std::vector<typename M::Line> parallels_witness(const M& model, const typename M::Line& l,
                                                const typename M::Point& p, std::size_t k) {
  if (k < 2) throw Error(ErrorCode::InvalidInput, "ask for at least two parallels");
  if (model.on_line(p, l)) throw Error(ErrorCode::PreconditionViolation, "point lies on the line");
  auto found = model.parallels(l, p, k);
  if (found.size() < k) {
    throw Error(ErrorCode::InsufficientParallels,
                "found " + std::to_string(found.size()) + " of " + std::to_string(k) + " parallels");
  }
  return found;
}

std::vector<Line> parallels_witness(const Line& l, const SurfacePoint& p, std::size_t k);

/// Replays a witness from scratch: true iff every claim it makes still
/// holds. Suite witnesses claim a failed trial. Throws MalformedWitness.
bool verify_counterexample(const Json& witness);

/// Applies a similarity to every point, line and ray angle of a named witness.
Json transform_witness(const Json& witness, double rotation, double scale);

}  // namespace logeuclid
