#pragma once

// Randomized property checks over generated balls and curves. Every check
// compares a nonnegative defect against a tolerance; a defect above its
// tolerance is a violation.

#include <cstdint>
#include <string>
#include <vector>

namespace normgeom {

enum class CurveKind { Generic, Symmetric, ConstantWidth, BallMultiple };

std::string kind_name(CurveKind kind);

struct CorpusConfig {
  std::uint64_t seed = 42;
  int n = 100;
  // Replaces the measure set by its sign-flipped-width variant, to confirm
  // the harness reports failures.
  bool inject_fault = false;
};

struct Violation {
  int instance = 0;
  std::string check;
  double value = 0.0;
  double tol = 0.0;
  std::string detail;
};

struct CheckSummary {
  std::string check;
  int evaluated = 0;
  int failed = 0;
  // Largest value / tol seen.
  double worst_ratio = 0.0;
};

struct CorpusInstance {
  int index = 0;
  std::string ball;
  bool distorted = false;
  CurveKind kind = CurveKind::Generic;
};

struct CorpusReport {
  CorpusConfig config;
  std::vector<CorpusInstance> instances;
  std::vector<CheckSummary> checks;
  std::vector<Violation> violations;
};

CorpusReport run_corpus(const CorpusConfig& config);

}  // namespace normgeom
