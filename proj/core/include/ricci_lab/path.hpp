#pragma once

#include <cstdint>
#include <vector>

#include "ricci_lab/types.hpp"

namespace ricci_lab {

// One frame-bundle node: base point, orthonormal frame (chart_dim x dim,
// columns are the frame vectors), current time.
struct FramePoint {
  Vec x;
  Mat u;
  double t = 0.0;
};

// One discretized frame-bundle trajectory on a uniform grid. Brownian
// increments are retained so common-random-number reuse and dumps stay
// possible after the fact.
struct PathSample {
  double start_time = 0.0;
  double h = 0.0;
  int n_steps = 0;
  int dim = 0;
  int chart_dim = 0;

  std::vector<double> node_x;          // (n_steps+1) * chart_dim
  std::vector<double> node_u;          // (n_steps+1) * chart_dim * dim
  std::vector<double> brownian;        // n_steps * dim
  std::vector<double> local_time;      // n_steps, zero off the boundary
  std::vector<uint8_t> boundary_hit;   // n_steps

  bool diverged = false;     // hit the lifetime guard radius
  int diverged_at = -1;
  double max_distance = 0.0; // running max of rho(x0, x_t)
  uint64_t path_index = 0;

  int n_nodes() const { return n_steps + 1; }
  double time_at(int node) const { return start_time + h * node; }

  Eigen::Map<const Vec> x_at(int node) const {
    return Eigen::Map<const Vec>(node_x.data() + size_t(node) * chart_dim, chart_dim);
  }
  Eigen::Map<const Eigen::MatrixXd> u_at(int node) const {
    return Eigen::Map<const Eigen::MatrixXd>(
        node_u.data() + size_t(node) * chart_dim * dim, chart_dim, dim);
  }
  Eigen::Map<const Vec> dB_at(int step) const {
    return Eigen::Map<const Vec>(brownian.data() + size_t(step) * dim, dim);
  }

  FramePoint frame_point(int node) const {
    FramePoint fp;
    fp.x = x_at(node);
    fp.u = u_at(node);
    fp.t = time_at(node);
    return fp;
  }

  double total_local_time() const {
    double s = 0.0;
    for (double v : local_time) s += v;
    return s;
  }

  // Parallel transport matrix //_{0,node} relative to node 0 (chart coords):
  // u_node * u_0^{-1}, an isometry between the two tangent spaces.
  Mat transport_from_start(const Mat& g0, int node) const {
    Mat u0 = u_at(0);
    Mat un = u_at(node);
    return un * (u0.transpose() * g0);
  }
};

}  // namespace ricci_lab
