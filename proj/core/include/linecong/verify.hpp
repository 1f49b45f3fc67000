#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linecong/scene.hpp"

namespace linecong {

enum class CheckStatus { pass, fail, not_applicable };

std::string_view to_string(CheckStatus s);

struct IdentityResult {
  std::string name;
  CheckStatus status = CheckStatus::not_applicable;
  double max_residual = 0.0;
  double tolerance = 0.0;
  int points = 0;   // points where the identity applied
  int skipped = 0;  // points where evaluation failed or the precondition was unmet
  std::string note;
};

struct VerifyReport {
  std::string scene;
  std::uint64_t seed = 0;
  int requested_points = 0;
  std::vector<IdentityResult> identities;

  bool all_pass() const;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  int points = 200;
  double tol = 1e-9;  // base tolerance for the matrix identities
};

/// Runs every identity that applies to the scene at seeded random points.
/// Residuals are relative to (1 + size of the compared quantity).
VerifyReport verify_scene(const CongruenceScene& scene, const VerifyOptions& options = {});

}  // namespace linecong
