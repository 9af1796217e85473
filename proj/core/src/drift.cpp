#include "ricci_lab/drift.hpp"

namespace ricci_lab {

DriftField DriftField::zero() { return DriftField{}; }

DriftField DriftField::linear_ou(double lambda) {
  DriftField z;
  z.kind_ = DriftKind::LinearOU;
  z.lambda_ = lambda;
  return z;
}

DriftField DriftField::grad_potential(Mat quad, Vec lin) {
  DriftField z;
  z.kind_ = DriftKind::GradPotential;
  z.quad_ = std::move(quad);
  z.lin_ = std::move(lin);
  return z;
}

DriftField DriftField::custom(std::function<Vec(const Vec&)> value,
                              std::function<Mat(const Vec&)> nabla) {
  DriftField z;
  z.kind_ = DriftKind::Custom;
  z.custom_value_ = std::move(value);
  z.custom_nabla_ = std::move(nabla);
  return z;
}

bool DriftField::compatible_with(const ManifoldModel& m) const {
  switch (kind_) {
    case DriftKind::Zero:
    case DriftKind::Custom:
      return true;
    case DriftKind::LinearOU:
    case DriftKind::GradPotential:
      return m.kind() == ManifoldKind::Euclidean ||
             m.kind() == ManifoldKind::FlatTorus ||
             m.kind() == ManifoldKind::EuclideanBall ||
             m.kind() == ManifoldKind::HalfSpace;
  }
  return false;
}

Vec DriftField::value(const ManifoldModel& m, const Vec& x) const {
  switch (kind_) {
    case DriftKind::Zero:
      return Vec::Zero(m.chart_dim());
    case DriftKind::LinearOU:
      return -lambda_ * x;
    case DriftKind::GradPotential:
      return -(quad_ * x + lin_);
    case DriftKind::Custom:
      return custom_value_(x);
  }
  return Vec();
}

Mat DriftField::nabla(const ManifoldModel& m, const Vec& x) const {
  const int cd = m.chart_dim();
  switch (kind_) {
    case DriftKind::Zero:
      return Mat::Zero(cd, cd);
    case DriftKind::LinearOU:
      return -lambda_ * Mat::Identity(cd, cd);
    case DriftKind::GradPotential:
      return -quad_;
    case DriftKind::Custom:
      return custom_nabla_(x);
  }
  return Mat();
}

Mat ricci_z_endomorphism(const ManifoldModel& m, const DriftField& z, const Vec& x) {
  bool on_bd = false;
  if (!m.contains(x, &on_bd) || on_bd)
    throw PointOutsideChart("ricci_z_endomorphism wants an interior point");
  return m.ricci_endomorphism(x) - z.nabla(m, x);
}

Mat Dynamics::curvature_endomorphism(double t, const Vec& x) const {
  Mat base = manifold.ricci_endomorphism(x) - drift.nabla(manifold, x);
  if (!flow) return base;
  const double c = flow->scale(t);
  // Ric and nabla Z are scale-invariant as bilinear forms; raising the index
  // with g_t divides by c. The flow term 0.5 d/dt g_t becomes
  // (cdot / 2c) * id.
  return base / c - (flow->scale_dot(t) / (2.0 * c)) *
                        Mat::Identity(manifold.chart_dim(), manifold.chart_dim());
}

CurvatureProfile classify_curvature(const Dynamics& dyn) {
  CurvatureProfile p;
  const auto mk = dyn.manifold.kind();
  const auto zk = dyn.drift.kind();
  const bool flat = mk == ManifoldKind::Euclidean || mk == ManifoldKind::FlatTorus ||
                    mk == ManifoldKind::EuclideanBall || mk == ManifoldKind::HalfSpace;

  double ric_scalar = 0.0;
  bool ric_isotropic = true;
  if (mk == ManifoldKind::Sphere)
    ric_scalar = double(dyn.manifold.dim() - 1) /
                 (dyn.manifold.radius() * dyn.manifold.radius());
  else if (mk == ManifoldKind::Hyperbolic)
    ric_scalar = -double(dyn.manifold.dim() - 1) /
                 (dyn.manifold.scale() * dyn.manifold.scale());
  else if (!flat)
    ric_isotropic = false;

  if (zk == DriftKind::Custom || !ric_isotropic) {
    p.kind = CurvatureProfileKind::General;
    return p;
  }

  const bool drift_isotropic = zk == DriftKind::Zero || zk == DriftKind::LinearOU;
  const double drift_scalar = zk == DriftKind::LinearOU ? dyn.drift.lambda() : 0.0;

  if (drift_isotropic) {
    const double alpha0 = ric_scalar + drift_scalar;
    if (!dyn.flow) {
      p.kind = alpha0 == 0.0 ? CurvatureProfileKind::Zero
                             : CurvatureProfileKind::ScalarConstant;
      p.alpha = alpha0;
    } else {
      MetricFlow f = *dyn.flow;
      p.kind = CurvatureProfileKind::ScalarOfTime;
      p.alpha_of_time = [alpha0, f](double t) {
        const double c = f.scale(t);
        return alpha0 / c - f.scale_dot(t) / (2.0 * c);
      };
    }
    return p;
  }

  // GradPotential on a flat chart: frames never rotate, endomorphism is the
  // constant Hessian in chart coordinates.
  if (zk == DriftKind::GradPotential && flat && !dyn.flow) {
    p.kind = CurvatureProfileKind::ChartConstant;
    p.chart_matrix = dyn.drift.quad();
    return p;
  }
  p.kind = CurvatureProfileKind::General;
  return p;
}

}  // namespace ricci_lab
