#include "ricci_lab/test_function.hpp"

#include <cmath>

namespace ricci_lab {

Mat ScalarField::hessian(const Vec&) const {
  throw std::logic_error("this field has no hessian oracle");
}

namespace {
// 1 - smoothstep5 on [0,1]: C^2 at both ends.
double bump(double s, double* d1, double* d2) {
  if (s <= 0.0) {
    if (d1) *d1 = 0.0;
    if (d2) *d2 = 0.0;
    return 1.0;
  }
  if (s >= 1.0) {
    if (d1) *d1 = 0.0;
    if (d2) *d2 = 0.0;
    return 0.0;
  }
  const double s2 = s * s, s3 = s2 * s;
  if (d1) *d1 = -(30.0 * s2 * s2 - 60.0 * s3 + 30.0 * s2);
  if (d2) *d2 = -(120.0 * s3 - 180.0 * s2 + 60.0 * s);
  return 1.0 - (6.0 * s2 * s3 - 15.0 * s2 * s2 + 10.0 * s3);
}
}  // namespace

double TestFunction::chi(double rho, double rc, double* d1, double* d2) {
  const double half = 0.5 * rc;
  const double s = (rho - half) / half;
  double b1 = 0.0, b2 = 0.0;
  const double v = bump(s, d1 ? &b1 : nullptr, d2 ? &b2 : nullptr);
  if (d1) *d1 = b1 / half;
  if (d2) *d2 = b2 / (half * half);
  return v;
}

TestFunction::TestFunction(const ManifoldModel& m, Vec pin_point, Vec pin_direction,
                           double cutoff_radius, double metric_scale_at_pin)
    : m_(&m), x_(std::move(pin_point)), rc_(cutoff_radius) {
  // The pin promises grad^s f(x) = X in the (possibly scaled) metric at the
  // pin time; with g_s = c g_base that means the base gradient is c X.
  X_ = metric_scale_at_pin * pin_direction;
  frame_ = m.canonical_frame(x_);
  coframe_ = frame_.transpose() * m.metric_at(x_);
  Xw_ = coframe_ * X_;
}

Vec TestFunction::normal_coords(const Vec& y) const {
  return coframe_ * m_->log_map(x_, y);
}

double TestFunction::value(const Vec& y) const {
  const double rho = m_->distance(x_, y);
  if (rho >= rc_) return 0.0;
  Vec w = normal_coords(y);
  return Xw_.dot(w) * chi(rho, rc_);
}

Vec TestFunction::gradient(const Vec& y) const {
  const int cd = m_->chart_dim();
  const double rho = m_->distance(x_, y);
  if (rho >= rc_) return Vec::Zero(cd);
  Vec w = normal_coords(y);
  const double r = w.norm();

  // Euclidean gradient of F(w) = <Xw, w> chi(|w|) in normal coordinates.
  double c1 = 0.0;
  const double c0 = chi(rho, rc_, &c1);
  Vec dF = c0 * Xw_;
  if (r > 0.0) dF += (Xw_.dot(w) * c1 / r) * w;

  // Raise the index with the polar-form metric and push forward through
  // d(exp_x): radial part transports, transverse part picks up r/sn(r).
  Vec a;
  if (r > 0.0) {
    Vec what = w / r;
    const double radial = what.dot(dF);
    const double f = 1.0 / m_->sn_over_r(r);
    a = f * dF + (1.0 - f) * radial * what;
  } else {
    a = dF;
  }
  Vec v0 = frame_ * w;  // initial velocity of the geodesic x -> y
  Mat cols(cd, 1);
  cols.col(0) = frame_ * a;
  return m_->transport_along(x_, v0, y, cols).col(0);
}

Mat TestFunction::hessian(const Vec& y) const {
  const int cd = m_->chart_dim();
  const int d = m_->dim();
  const double rho = m_->distance(x_, y);
  if (rho >= rc_) return Mat::Zero(cd, cd);
  Vec w = normal_coords(y);
  const double r = w.norm();

  double c1 = 0.0, c2 = 0.0;
  const double c0 = chi(rho, rc_, &c1, &c2);
  const double fx = Xw_.dot(w);

  // Euclidean derivatives of F(w) = <Xw,w> chi(|w|).
  Vec dF = c0 * Xw_;
  Mat d2F = Mat::Zero(d, d);
  if (r > 0.0) {
    Vec what = w / r;
    dF += (fx * c1 / r) * w;
    d2F = c1 * (Xw_ * what.transpose() + what * Xw_.transpose()) +
          fx * (c2 * what * what.transpose() +
                (c1 / r) * (Mat::Identity(d, d) - what * what.transpose()));
  }

  // Christoffel symbols of the polar-form metric g = A (I - P) + P,
  // A = (sn(r)/r)^2, P = ww^T/r^2; they vanish at w = 0.
  Mat hess_n = d2F;
  if (r > 1e-14) {
    Vec what = w / r;
    const double sr = m_->sn_over_r(r);
    const double A = sr * sr;
    // A'(r) = 2 sn(r) (cs(r) r - sn(r)) / r^3
    const double snr = m_->sn(r), csr = m_->cs(r);
    const double Ap = 2.0 * snr * (csr * r - snr) / (r * r * r);

    Tensor3 dg(d);  // dg(k,i,j) = d_k g_ij
    for (int k = 0; k < d; ++k)
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          double s = Ap * what[k] * ((i == j ? 1.0 : 0.0) - what[i] * what[j]);
          const double dP =
              ((i == k ? 1.0 : 0.0) - what[i] * what[k]) * what[j] / r +
              what[i] * ((j == k ? 1.0 : 0.0) - what[j] * what[k]) / r;
          s += (1.0 - A) * dP;
          dg.at(k, i, j) = s;
        }
    Mat ginv = (1.0 / A) * (Mat::Identity(d, d) - what * what.transpose()) +
               what * what.transpose();
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        double corr = 0.0;
        for (int k = 0; k < d; ++k) {
          double gam = 0.0;  // Gamma^k_ij = 0.5 g^{kl}(d_i g_lj + d_j g_li - d_l g_ij)
          for (int l = 0; l < d; ++l)
            gam += 0.5 * ginv(k, l) *
                   (dg.at(i, l, j) + dg.at(j, l, i) - dg.at(l, i, j));
          corr += gam * dF[k];
        }
        hess_n(i, j) -= corr;
      }
  }

  // Pull back to chart coordinates through J^{-1} = S^{-1} u^T G T_{y->x}.
  Mat Tyx(cd, cd);
  {
    Mat id = Mat::Identity(cd, cd);
    Vec v0y = m_->log_map(y, x_);
    Tyx = m_->transport_along(y, v0y, x_, id);
  }
  Mat Jinv = coframe_ * Tyx;  // d x cd, before the transverse scaling
  if (r > 0.0) {
    Vec what = w / r;
    const double inv_sr = 1.0 / m_->sn_over_r(r);
    Jinv = (inv_sr * (Mat::Identity(d, d) - what * what.transpose()) +
            what * what.transpose()) *
           Jinv;
  }
  return Jinv.transpose() * hess_n * Jinv;
}

TestFunction pinned_test_function(const ManifoldModel& m, const Vec& x, const Vec& X,
                                  double cutoff_radius, double metric_scale_at_pin) {
  bool on_bd = false;
  if (!m.contains(x, &on_bd) || on_bd)
    throw PointOutsideChart("pin point must be interior");
  if (!(cutoff_radius > 0.0) || cutoff_radius >= m.injectivity_radius() ||
      cutoff_radius >= m.boundary_distance(x))
    throw CutoffTooLarge("cutoff radius must stay below the injectivity radius "
                         "and the distance to the boundary");
  return TestFunction(m, x, X, cutoff_radius, metric_scale_at_pin);
}

BallAngularField::BallAngularField(const ManifoldModel& ball, Vec boundary_point,
                                   Vec tangent, double cutoff_arc)
    : R_(ball.radius()), arc_(cutoff_arc) {
  xhat_ = boundary_point / boundary_point.norm();
  X_ = std::move(tangent);
}

double BallAngularField::value(const Vec& y) const {
  const double r = y.norm();
  if (r < 1e-12) return 0.0;
  Vec yhat = y / r;
  const double ang = std::acos(std::clamp(xhat_.dot(yhat), -1.0, 1.0));
  const double arc = R_ * ang;
  if (arc >= arc_) return 0.0;
  double s = (arc - 0.5 * arc_) / (0.5 * arc_);
  return R_ * X_.dot(yhat) * bump(s, nullptr, nullptr);
}

Vec BallAngularField::gradient(const Vec& y) const {
  const int d = int(y.size());
  const double r = y.norm();
  if (r < 1e-12) return Vec::Zero(d);
  Vec yhat = y / r;
  const double cosang = std::clamp(xhat_.dot(yhat), -1.0, 1.0);
  const double ang = std::acos(cosang);
  const double arc = R_ * ang;
  if (arc >= arc_) return Vec::Zero(d);

  const double half = 0.5 * arc_;
  double b1 = 0.0;
  const double c0 = bump((arc - half) / half, &b1, nullptr);
  const double c1 = b1 / half;  // d chi / d arc

  Vec grad_dot = (X_ - X_.dot(yhat) * yhat) / r;  // grad <X, yhat>
  Vec g = R_ * c0 * grad_dot;
  if (c1 != 0.0) {
    const double sinang = std::sin(ang);
    if (sinang > 1e-12) {
      Vec grad_ang = -(xhat_ - cosang * yhat) / (r * sinang);
      g += R_ * X_.dot(yhat) * c1 * R_ * grad_ang;
    }
  }
  return g;
}

std::unique_ptr<ScalarField> boundary_pinned_field(const ManifoldModel& m, const Vec& x,
                                                   const Vec& X, double cutoff_radius) {
  bool on_bd = false;
  if (!m.contains(x, &on_bd) || !on_bd)
    throw NotABoundaryPoint("boundary pin wants a boundary point");
  if (m.kind() == ManifoldKind::HalfSpace) {
    // Tangential X keeps Nf = 0 on the whole boundary.
    return std::make_unique<TestFunction>(m, x, X, cutoff_radius);
  }
  if (m.kind() == ManifoldKind::EuclideanBall)
    return std::make_unique<BallAngularField>(m, x, X, cutoff_radius);
  throw NotABoundaryPoint("no boundary field for " + to_string(m.kind()));
}

}  // namespace ricci_lab
