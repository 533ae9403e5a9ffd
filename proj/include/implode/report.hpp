#pragma once

#include <json.hpp>

#include "implode/basicaffine.hpp"
#include "implode/implosion.hpp"
#include "implode/quantization.hpp"

namespace implode {

using Json = nlohmann::ordered_json;

// Fixed 12-significant-digit float representation; reports must be
// byte-identical across reruns of the same configuration.
double round12(double x);

Json face_to_json(const Face& f);
Json weight_to_json(const Weight& w);
Weight weight_from_json(const Json& j, int rank);

Json smoothness_to_json(const Smoothness& s);
Json strata_report(const RootDatum& d);
Json smooth_locus_report(const RootDatum& d);
Json faces_report(const RootDatum& d);
Json describe_group_report(const RootDatum& d);
Json character_to_json(const TCharacter& t);
Json embedded_point_to_json(const EmbeddedPoint& v);

// One verification check line: name, seed, count, measured residual, pinned
// tolerance and verdict.
struct CheckLine {
  std::string name;
  std::uint64_t seed = 0;
  int count = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double min_value = std::numeric_limits<double>::quiet_NaN();
};
Json check_to_json(const CheckLine& c);

struct SuiteResult {
  Json report;
  bool pass = true;
};

// Named verification suites: geometry, contact, embedding, quadric, hilbert.
// `tolerance_override` <= 0 keeps the per-check defaults.
SuiteResult run_verify_suite(const std::string& suite, const RootDatum& d,
                             std::uint64_t seed, int count,
                             double tolerance_override = 0.0);

// Group specs accepted by the CLI and tests: series+rank ("A2", "G2"),
// classical names ("SU(3)", "SO(3)", "U(2)", "T1"), optional "-adjoint"
// suffix on series+rank.
RootDatum parse_group_spec(const std::string& spec);
RootDatum datum_from_json(const Json& j);

// SU(n) realization rank for a datum, if it has one (A-series simply
// connected); 0 otherwise.
int su_realization_rank(const RootDatum& d);

}  // namespace implode
