#pragma once

#include <optional>
#include <string>

#include "ricci_lab/errors.hpp"
#include "ricci_lab/types.hpp"

namespace ricci_lab {

enum class ManifoldKind {
  Euclidean,
  Sphere,
  Hyperbolic,
  FlatTorus,
  EuclideanBall,
  HalfSpace,
};

std::string to_string(ManifoldKind k);

// Inward unit normal, second fundamental form (as an endomorphism of the
// full tangent space, zero on the normal direction) and the rank-one
// projector onto the normal at a boundary point.
struct BoundaryData {
  Vec normal;       // inward unit normal, chart coordinates
  Mat second_form;  // II endomorphism, chart coordinates
  Mat normal_projector;
};

// Analytic model space. Charts: Sphere uses embedding coordinates in
// R^{d+1}; Hyperbolic the Poincare ball of radius `scale`; everything else
// is Cartesian. All oracles are closed-form and immutable, safe to share
// across threads.
class ManifoldModel {
 public:
  static ManifoldModel euclidean(int dim);
  static ManifoldModel sphere(int dim, double radius);
  static ManifoldModel hyperbolic(int dim, double scale);
  static ManifoldModel flat_torus(int dim, Vec periods);
  static ManifoldModel euclidean_ball(int dim, double radius);
  static ManifoldModel half_space(int dim);

  ManifoldKind kind() const { return kind_; }
  int dim() const { return dim_; }
  int chart_dim() const { return chart_dim_; }
  bool has_boundary() const { return kind_ == ManifoldKind::EuclideanBall ||
                                     kind_ == ManifoldKind::HalfSpace; }
  double radius() const { return radius_; }
  double scale() const { return scale_; }
  const Vec& periods() const { return periods_; }
  double injectivity_radius() const;

  // Chart membership. `on_boundary` is set when the point sits on d(M).
  bool contains(const Vec& x, bool* on_boundary = nullptr) const;
  void require_inside(const Vec& x) const;  // throws PointOutsideChart

  Mat metric_at(const Vec& x) const;
  Mat metric_inverse_at(const Vec& x) const;
  Tensor3 christoffel_at(const Vec& x) const;

  // Ricci tensor as an endomorphism of T_xM in chart coordinates
  // (index raised with the metric).
  Mat ricci_endomorphism(const Vec& x) const;

  Vec exp_map(const Vec& x, const Vec& v) const;
  Vec log_map(const Vec& x, const Vec& y) const;
  double distance(const Vec& x, const Vec& y) const;

  // Parallel transport of v from T_xM to T_yM along the minimal geodesic.
  Vec transport_geodesic(const Vec& x, const Vec& y, const Vec& v) const;
  // Same, but for all columns at once and with the initial velocity of the
  // geodesic already known (avoids a log and stays exact at conjugate-ish
  // points); `y` must equal exp_map(x, v0).
  Mat transport_along(const Vec& x, const Vec& v0, const Vec& y, const Mat& columns) const;

  // Riemannian norm/inner product at x.
  double norm(const Vec& x, const Vec& v) const;
  double inner(const Vec& x, const Vec& v, const Vec& w) const;

  // Projects an ambient/chart vector onto T_xM (identity except on the sphere).
  Vec tangent_project(const Vec& x, const Vec& v) const;

  // Deterministic orthonormal frame at x: chart_dim x dim matrix u with
  // u^T G(x) u = I.
  Mat canonical_frame(const Vec& x) const;

  BoundaryData boundary_data(const Vec& x) const;  // throws NotABoundaryPoint
  // Distance from x to the boundary (+inf for boundaryless kinds).
  double boundary_distance(const Vec& x) const;
  // Project a proposed point back into the closure along the normal;
  // returns pushback distance (local time increment), 0 if inside.
  double project_into_domain(Vec& x) const;

  // Constant-curvature helpers: sn(r) solves sn'' + kappa sn = 0,
  // sn(0)=0, sn'(0)=1, with kappa the sectional curvature.
  double sectional_curvature() const;
  double sn(double r) const;
  double sn_over_r(double r) const;  // sn(r)/r, smooth at 0
  double cs(double r) const;         // sn'(r)

  // Wraps a chart point into the fundamental domain (torus only).
  Vec canonicalize(const Vec& x) const;

 private:
  ManifoldModel() = default;

  ManifoldKind kind_ = ManifoldKind::Euclidean;
  int dim_ = 0;
  int chart_dim_ = 0;
  double radius_ = 0.0;  // sphere / ball
  double scale_ = 0.0;   // hyperbolic
  Vec periods_;          // torus

  // Poincare ball helpers.
  double conformal_lambda(const Vec& x) const;
  Vec mobius_add(const Vec& a, const Vec& b) const;
  Vec gyration(const Vec& u, const Vec& w, const Vec& v) const;
};

}  // namespace ricci_lab
