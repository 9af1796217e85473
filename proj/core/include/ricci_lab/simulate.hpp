#pragma once

#include <cstdint>

#include "ricci_lab/drift.hpp"
#include "ricci_lab/path.hpp"
#include "ricci_lab/rng.hpp"

namespace ricci_lab {

struct SimSpec {
  Vec x0;
  double start_time = 0.0;
  double horizon = 1.0;   // simulate on [start_time, start_time + horizon]
  double step = 1e-3;
  uint64_t seed = 0;
  uint32_t stream_salt = 0;
  double guard_radius = 50.0;  // lifetime guard on rho(x0, x_t)
  bool reflect = false;        // Skorokhod projection at the boundary
};

// Validates the spec against the dynamics; throws StepTooLarge /
// PointOutsideChart / ConfigInvalid.
void validate_sim(const Dynamics& dyn, const SimSpec& spec);

// Geodesic Euler-Maruyama on the orthonormal frame bundle. Pure in
// (seed, stream_salt, path_index): identical arguments give bit-identical
// paths regardless of scheduling.
PathSample simulate_path(const Dynamics& dyn, const SimSpec& spec, uint64_t path_index);

// Reflecting variant for manifolds with boundary: proposals leaving the
// domain are projected back along the inward normal, the pushback distance
// is the local-time increment.
PathSample simulate_reflected_path(const Dynamics& dyn, const SimSpec& spec,
                                   uint64_t path_index);

}  // namespace ricci_lab
