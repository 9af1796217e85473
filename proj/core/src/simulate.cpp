#include "ricci_lab/simulate.hpp"

#include <cmath>

namespace ricci_lab {

void validate_sim(const Dynamics& dyn, const SimSpec& spec) {
  const ManifoldModel& m = dyn.manifold;
  if (!(spec.step > 0.0)) throw ConfigInvalid("step must be positive");
  if (!(spec.horizon > 0.0)) throw ConfigInvalid("horizon must be positive");
  const double steps = spec.horizon / spec.step;
  if (std::abs(steps - std::round(steps)) > 1e-6 * std::max(1.0, steps))
    throw ConfigInvalid("horizon must be a multiple of the step");
  if (!m.contains(spec.x0)) throw PointOutsideChart("x0 outside chart");
  if (std::sqrt(2.0 * spec.step) > 0.1 * m.injectivity_radius())
    throw StepTooLarge("sqrt(2h) exceeds 0.1 x injectivity radius");
  if (!dyn.drift.compatible_with(m))
    throw ConfigInvalid("drift kind incompatible with manifold kind");
  if (dyn.flow) {
    const double end = spec.start_time + spec.horizon;
    if (end >= dyn.flow->horizon())
      throw ConfigInvalid("horizon exceeds the metric flow lifetime");
  }
  if (spec.reflect && !m.has_boundary())
    throw ConfigInvalid("reflection requested on a boundaryless manifold");
}

namespace {

// One Newton step of the polar map pushes u^T G u back to the identity;
// transports are exact isometries so the defect is roundoff only.
void reorthonormalize(Mat& u, const Mat& g) {
  Mat b = u.transpose() * g * u;
  const int d = int(b.rows());
  u = u * (1.5 * Mat::Identity(d, d) - 0.5 * b);
}

PathSample run(const Dynamics& dyn, const SimSpec& spec, uint64_t path_index,
               bool reflect) {
  const ManifoldModel& m = dyn.manifold;
  const int d = m.dim();
  const int cd = m.chart_dim();
  const int n = int(std::llround(spec.horizon / spec.step));
  const double h = spec.step;
  const double sqrt_h = std::sqrt(h);
  const bool evolving = dyn.evolving();
  const bool flat_chart = m.kind() == ManifoldKind::Euclidean ||
                          m.kind() == ManifoldKind::FlatTorus ||
                          m.kind() == ManifoldKind::EuclideanBall ||
                          m.kind() == ManifoldKind::HalfSpace;
  const bool zero_drift = dyn.drift.is_zero();

  PathSample p;
  p.start_time = spec.start_time;
  p.h = h;
  p.n_steps = n;
  p.dim = d;
  p.chart_dim = cd;
  p.path_index = path_index;
  p.node_x.resize(size_t(n + 1) * cd);
  p.node_u.resize(size_t(n + 1) * cd * d);
  p.brownian.assign(size_t(n) * d, 0.0);
  p.local_time.assign(n, 0.0);
  p.boundary_hit.assign(n, 0);

  Vec x = spec.x0;
  Mat u = m.canonical_frame(x);
  if (evolving) u /= std::sqrt(dyn.metric_scale(spec.start_time));

  auto store = [&](int node, const Vec& xx, const Mat& uu) {
    Eigen::Map<Vec>(p.node_x.data() + size_t(node) * cd, cd) = xx;
    Eigen::Map<Eigen::MatrixXd>(p.node_u.data() + size_t(node) * cd * d, cd, d) = uu;
  };
  store(0, x, u);

  NormalStream rng(spec.seed, spec.stream_salt, path_index);
  Vec dB(d), step_vec(cd);

  for (int k = 0; k < n; ++k) {
    const double t = spec.start_time + k * h;
    for (int i = 0; i < d; ++i) {
      dB[i] = sqrt_h * rng.next();
      p.brownian[size_t(k) * d + i] = dB[i];
    }
    step_vec.noalias() = std::sqrt(2.0) * (u * dB);
    if (!zero_drift) step_vec += h * dyn.drift.value(m, x);

    Vec x_new;
    double dl = 0.0;
    if (reflect) {
      x_new = x + step_vec;  // boundary kinds are flat charts
      dl = m.project_into_domain(x_new);
      if (dl > 0.0) {
        p.local_time[k] = dl;
        p.boundary_hit[k] = 1;
      }
    } else {
      x_new = m.exp_map(x, step_vec);
    }

    if (flat_chart) {
      // transport is trivial
    } else {
      u = m.transport_along(x, step_vec, x_new, u);
    }
    const double g_scale = evolving ? dyn.metric_scale(t + h) : 1.0;
    if (!flat_chart || evolving) {
      Mat g = m.metric_at(x_new) * g_scale;
      reorthonormalize(u, g);
    }

    x = x_new;
    store(k + 1, x, u);

    const double dist = m.distance(spec.x0, x);
    if (dist > p.max_distance) p.max_distance = dist;
    if (dist >= spec.guard_radius) {
      p.diverged = true;
      p.diverged_at = k + 1;
      // Freeze the remaining nodes; the path is excluded from estimates.
      for (int j = k + 1; j < n; ++j) store(j + 1, x, u);
      break;
    }
  }
  return p;
}

}  // namespace

PathSample simulate_path(const Dynamics& dyn, const SimSpec& spec, uint64_t path_index) {
  return run(dyn, spec, path_index, spec.reflect && dyn.manifold.has_boundary());
}

PathSample simulate_reflected_path(const Dynamics& dyn, const SimSpec& spec,
                                   uint64_t path_index) {
  if (!dyn.manifold.has_boundary())
    throw ConfigInvalid("simulate_reflected_path wants a manifold with boundary");
  return run(dyn, spec, path_index, true);
}

}  // namespace ricci_lab
