#pragma once

#include <atomic>
#include <optional>
#include <string>
#include <vector>

#include "rhf/braid.hpp"
#include "rhf/homology.hpp"
#include "rhf/index.hpp"
#include "rhf/signs.hpp"

namespace rhf {

// bumped whenever the band model or a sign convention changes
inline constexpr int kConventionVersion = 1;
inline constexpr const char* kVersion = "1.0.0";

struct GradingCheck {
  long long pairs = 0;
  long long failures = 0;       // (-1)^mu disagrees with sgn x sgn y
  long long missing = 0;        // no domain inside a class
  long long asymmetric = 0;     // domain not multiplicity-symmetric
  long long relation = 0;       // ind != 2 ind_R + (sigma_x - sigma_y)/2
  std::string first_error;
  bool undefined = false;       // periodic domains with n_w = 0 exist, so gradings are not relative invariants

  bool ok() const { return failures == 0 && missing == 0 && asymmetric == 0 && relation == 0 && first_error.empty(); }
};

struct AnalysisOptions {
  int jobs = 1;
  bool generators_only = false;  // skip signs
  bool check_gradings = false;
  const std::atomic<bool>* cancel = nullptr;
};

struct Analysis {
  RealDiagram diagram;
  Topology topology;
  HomologyPresentation h1;
  std::vector<Generator> generators;
  SpinCPartition partition;
  std::vector<int> signs;
  std::optional<ChiReport> chi;
  std::optional<GradingCheck> gradings;
};

struct Cancelled : std::runtime_error {
  Cancelled() : std::runtime_error("cancelled") {}
};

Analysis analyze_diagram(RealDiagram d, const AnalysisOptions& opt = {});
// also checks |H1| = class count = Burau determinant
Analysis analyze_braid(const BraidWord& b, const AnalysisOptions& opt = {});

GradingCheck check_gradings(const Analysis& a, const std::atomic<bool>* cancel = nullptr);

// raw per-class sums, before normalization
std::vector<long long> raw_class_sums(const RealDiagram& d, const std::vector<Generator>& gens);

}  // namespace rhf
