#pragma once

#include <functional>
#include <string>

#include "ricci_lab/manifold.hpp"
#include "ricci_lab/types.hpp"

namespace ricci_lab {

enum class DriftKind { Zero, LinearOU, GradPotential, Custom };

// The vector field Z of the generator L = Delta + Z, together with its
// covariant-derivative oracle. GradPotential holds V with Z = -grad V, the
// overdamped-Langevin convention, so Ric^Z picks up +Hess V.
class DriftField {
 public:
  static DriftField zero();
  static DriftField linear_ou(double lambda);
  // V(x) = 0.5 x^T A x + b.x on flat kinds; Z = -grad V = -(Ax + b).
  static DriftField grad_potential(Mat quad, Vec lin);
  static DriftField custom(std::function<Vec(const Vec&)> value,
                           std::function<Mat(const Vec&)> nabla);

  DriftKind kind() const { return kind_; }
  double lambda() const { return lambda_; }
  const Mat& quad() const { return quad_; }
  const Vec& lin() const { return lin_; }

  bool is_zero() const { return kind_ == DriftKind::Zero; }
  // Only flat charts admit the built-in linear drifts.
  bool compatible_with(const ManifoldModel& m) const;

  Vec value(const ManifoldModel& m, const Vec& x) const;
  // nabla Z as an endomorphism of T_xM in chart coordinates.
  Mat nabla(const ManifoldModel& m, const Vec& x) const;

 private:
  DriftKind kind_ = DriftKind::Zero;
  double lambda_ = 0.0;
  Mat quad_;
  Vec lin_;
  std::function<Vec(const Vec&)> custom_value_;
  std::function<Mat(const Vec&)> custom_nabla_;
};

// Bakry-Emery tensor Ric^Z = Ric - nabla Z as an endomorphism of T_xM.
Mat ricci_z_endomorphism(const ManifoldModel& m, const DriftField& z, const Vec& x);

// C^1 conformal scale family g_t = c(t) * g_base with spatially constant
// c(t) = c0 + c1 t. Covers static-as-evolving, the expanding sphere and its
// wrong-rate falsification variant.
struct MetricFlow {
  double c0 = 1.0;
  double c1 = 0.0;

  double scale(double t) const { return c0 + c1 * t; }
  double scale_dot(double) const { return c1; }
  double horizon() const {
    if (c1 >= 0.0) return std::numeric_limits<double>::infinity();
    return -c0 / c1;
  }
};

// Bundled dynamics: model space, drift, optional metric flow.
struct Dynamics {
  ManifoldModel manifold;
  DriftField drift;
  std::optional<MetricFlow> flow;

  double metric_scale(double t) const { return flow ? flow->scale(t) : 1.0; }
  bool evolving() const { return flow.has_value(); }

  // R_t^Z = Ric_t - nabla^t Z - 0.5 d/dt g_t as an endomorphism w.r.t. g_t;
  // collapses to Ric^Z when no flow is present.
  Mat curvature_endomorphism(double t, const Vec& x) const;
};

// How the curvature endomorphism looks in any orthonormal frame; used to
// pick fast paths in the damped-transport integrator.
enum class CurvatureProfileKind {
  Zero,              // identically zero
  ScalarConstant,    // alpha * id, alpha fixed
  ScalarOfTime,      // alpha(t) * id
  ChartConstant,     // fixed matrix in chart coords, frames never rotate
  General,
};

struct CurvatureProfile {
  CurvatureProfileKind kind = CurvatureProfileKind::General;
  double alpha = 0.0;
  std::function<double(double)> alpha_of_time;
  Mat chart_matrix;
};

CurvatureProfile classify_curvature(const Dynamics& dyn);

}  // namespace ricci_lab
