#pragma once

#include <string>
#include <vector>

#include "dspforge/instance.hpp"

namespace dspforge {

enum class CheckStatus { Pass, Fail, NotApplicable };

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

struct VerificationReport {
  std::string fingerprint;
  Variant variant = Variant::DInt;
  int n = 0, k = 0;
  GadgetFlags flags;
  std::vector<Check> checks;

  bool all_pass() const;
  const Check* find(const std::string& name) const;
};

struct VerifyOptions {
  /// Pairs with more shortest paths than this only get the distance half of
  /// the canonical-shortest check.
  std::size_t enumeration_limit = 100'000;
};

/// Runs every structural check applicable to the instance's variant:
/// simple, terminals, cost-model, size-formula, dag, planar,
/// one-planar-embedding, degree, level-containment, canonical-shortest.
VerificationReport verify_instance(const DspInstance& inst, const VerifyOptions& opts = {});

std::string to_string(CheckStatus s);
std::string report_to_json(const VerificationReport& r);

}  // namespace dspforge
