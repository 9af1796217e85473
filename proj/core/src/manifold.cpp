#include "ricci_lab/manifold.hpp"

#include <cmath>
#include <limits>

namespace ricci_lab {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kChartTol = 1e-9;

double sinc(double t) {  // sin(t)/t
  if (std::abs(t) < 1e-6) return 1.0 - t * t / 6.0;
  return std::sin(t) / t;
}
double sinhc(double t) {  // sinh(t)/t
  if (std::abs(t) < 1e-6) return 1.0 + t * t / 6.0;
  return std::sinh(t) / t;
}
}  // namespace

std::string to_string(ManifoldKind k) {
  switch (k) {
    case ManifoldKind::Euclidean: return "euclidean";
    case ManifoldKind::Sphere: return "sphere";
    case ManifoldKind::Hyperbolic: return "hyperbolic";
    case ManifoldKind::FlatTorus: return "flat_torus";
    case ManifoldKind::EuclideanBall: return "euclidean_ball";
    case ManifoldKind::HalfSpace: return "half_space";
  }
  return "?";
}

ManifoldModel ManifoldModel::euclidean(int dim) {
  ManifoldModel m;
  m.kind_ = ManifoldKind::Euclidean;
  m.dim_ = dim;
  m.chart_dim_ = dim;
  return m;
}

ManifoldModel ManifoldModel::sphere(int dim, double radius) {
  ManifoldModel m;
  m.kind_ = ManifoldKind::Sphere;
  m.dim_ = dim;
  m.chart_dim_ = dim + 1;
  m.radius_ = radius;
  return m;
}

ManifoldModel ManifoldModel::hyperbolic(int dim, double scale) {
  ManifoldModel m;
  m.kind_ = ManifoldKind::Hyperbolic;
  m.dim_ = dim;
  m.chart_dim_ = dim;
  m.scale_ = scale;
  return m;
}

ManifoldModel ManifoldModel::flat_torus(int dim, Vec periods) {
  ManifoldModel m;
  m.kind_ = ManifoldKind::FlatTorus;
  m.dim_ = dim;
  m.chart_dim_ = dim;
  m.periods_ = std::move(periods);
  return m;
}

ManifoldModel ManifoldModel::euclidean_ball(int dim, double radius) {
  ManifoldModel m;
  m.kind_ = ManifoldKind::EuclideanBall;
  m.dim_ = dim;
  m.chart_dim_ = dim;
  m.radius_ = radius;
  return m;
}

ManifoldModel ManifoldModel::half_space(int dim) {
  ManifoldModel m;
  m.kind_ = ManifoldKind::HalfSpace;
  m.dim_ = dim;
  m.chart_dim_ = dim;
  return m;
}

double ManifoldModel::injectivity_radius() const {
  switch (kind_) {
    case ManifoldKind::Sphere: return kPi * radius_;
    case ManifoldKind::FlatTorus: return 0.5 * periods_.minCoeff();
    default: return std::numeric_limits<double>::infinity();
  }
}

bool ManifoldModel::contains(const Vec& x, bool* on_boundary) const {
  if (on_boundary) *on_boundary = false;
  if (x.size() != chart_dim_) return false;
  switch (kind_) {
    case ManifoldKind::Euclidean:
    case ManifoldKind::FlatTorus:
      return true;
    case ManifoldKind::Sphere:
      return std::abs(x.norm() - radius_) <= kChartTol * (1.0 + radius_);
    case ManifoldKind::Hyperbolic:
      return x.norm() < scale_ * (1.0 - 1e-12);
    case ManifoldKind::EuclideanBall: {
      const double r = x.norm();
      if (r > radius_ * (1.0 + kChartTol)) return false;
      if (on_boundary) *on_boundary = r >= radius_ * (1.0 - kChartTol);
      return true;
    }
    case ManifoldKind::HalfSpace: {
      const double xd = x[dim_ - 1];
      if (xd < -kChartTol) return false;
      if (on_boundary) *on_boundary = xd <= kChartTol;
      return true;
    }
  }
  return false;
}

void ManifoldModel::require_inside(const Vec& x) const {
  if (!contains(x))
    throw PointOutsideChart("point outside " + to_string(kind_) + " chart");
}

double ManifoldModel::conformal_lambda(const Vec& x) const {
  const double c = 1.0 / (scale_ * scale_);
  return 2.0 / (1.0 - c * x.squaredNorm());
}

Mat ManifoldModel::metric_at(const Vec& x) const {
  require_inside(x);
  Mat g = Mat::Identity(chart_dim_, chart_dim_);
  if (kind_ == ManifoldKind::Hyperbolic) {
    const double l = conformal_lambda(x);
    g *= l * l;
  }
  return g;
}

Mat ManifoldModel::metric_inverse_at(const Vec& x) const {
  Mat g = metric_at(x);
  if (kind_ == ManifoldKind::Hyperbolic) {
    const double l = conformal_lambda(x);
    return Mat::Identity(chart_dim_, chart_dim_) / (l * l);
  }
  return g;  // identity for all other kinds
}

Tensor3 ManifoldModel::christoffel_at(const Vec& x) const {
  bool on_bd = false;
  if (!contains(x, &on_bd) || on_bd)
    throw PointOutsideChart("christoffel_at wants an interior point");
  Tensor3 gamma(chart_dim_);
  switch (kind_) {
    case ManifoldKind::Euclidean:
    case ManifoldKind::FlatTorus:
    case ManifoldKind::EuclideanBall:
    case ManifoldKind::HalfSpace:
      break;  // flat
    case ManifoldKind::Sphere: {
      // Ambient-coordinate correction tensor of the round embedding:
      // geodesics satisfy x'' + Gamma(x', x') = 0 with
      // Gamma^k_{ij} = x_k delta_ij / R^2.
      const double r2 = radius_ * radius_;
      for (int k = 0; k < chart_dim_; ++k)
        for (int i = 0; i < chart_dim_; ++i)
          gamma.at(k, i, i) = x[k] / r2;
      break;
    }
    case ManifoldKind::Hyperbolic: {
      // Conformal metric g = e^{2phi} delta with phi = log lambda.
      const double c = 1.0 / (scale_ * scale_);
      const double denom = 1.0 - c * x.squaredNorm();
      Vec dphi = 2.0 * c / denom * x;
      for (int k = 0; k < chart_dim_; ++k)
        for (int i = 0; i < chart_dim_; ++i)
          for (int j = 0; j < chart_dim_; ++j) {
            double s = 0.0;
            if (k == i) s += dphi[j];
            if (k == j) s += dphi[i];
            if (i == j) s -= dphi[k];
            gamma.at(k, i, j) = s;
          }
      break;
    }
  }
  return gamma;
}

Mat ManifoldModel::ricci_endomorphism(const Vec& x) const {
  require_inside(x);
  switch (kind_) {
    case ManifoldKind::Euclidean:
    case ManifoldKind::FlatTorus:
    case ManifoldKind::EuclideanBall:
    case ManifoldKind::HalfSpace:
      return Mat::Zero(chart_dim_, chart_dim_);
    case ManifoldKind::Sphere: {
      // Ric = (d-1)/R^2 on the tangent space; zero on the normal.
      const double a = double(dim_ - 1) / (radius_ * radius_);
      Vec n = x / x.norm();
      return a * (Mat::Identity(chart_dim_, chart_dim_) - n * n.transpose());
    }
    case ManifoldKind::Hyperbolic: {
      const double a = -double(dim_ - 1) / (scale_ * scale_);
      return a * Mat::Identity(chart_dim_, chart_dim_);
    }
  }
  return Mat();
}

double ManifoldModel::sectional_curvature() const {
  switch (kind_) {
    case ManifoldKind::Sphere: return 1.0 / (radius_ * radius_);
    case ManifoldKind::Hyperbolic: return -1.0 / (scale_ * scale_);
    default: return 0.0;
  }
}

double ManifoldModel::sn(double r) const {
  const double k = sectional_curvature();
  if (k > 0) {
    const double s = std::sqrt(k);
    return std::sin(s * r) / s;
  }
  if (k < 0) {
    const double s = std::sqrt(-k);
    return std::sinh(s * r) / s;
  }
  return r;
}

double ManifoldModel::sn_over_r(double r) const {
  const double k = sectional_curvature();
  if (k > 0) return sinc(std::sqrt(k) * r);
  if (k < 0) return sinhc(std::sqrt(-k) * r);
  return 1.0;
}

double ManifoldModel::cs(double r) const {
  const double k = sectional_curvature();
  if (k > 0) return std::cos(std::sqrt(k) * r);
  if (k < 0) return std::cosh(std::sqrt(-k) * r);
  return 1.0;
}

Vec ManifoldModel::canonicalize(const Vec& x) const {
  if (kind_ != ManifoldKind::FlatTorus) return x;
  Vec y = x;
  for (int i = 0; i < dim_; ++i) {
    y[i] = std::fmod(y[i], periods_[i]);
    if (y[i] < 0) y[i] += periods_[i];
  }
  return y;
}

Vec ManifoldModel::exp_map(const Vec& x, const Vec& v) const {
  require_inside(x);
  switch (kind_) {
    case ManifoldKind::Euclidean:
    case ManifoldKind::EuclideanBall:
    case ManifoldKind::HalfSpace:
      return x + v;
    case ManifoldKind::FlatTorus:
      return canonicalize(x + v);
    case ManifoldKind::Sphere: {
      const double nv = v.norm();
      if (nv == 0.0) return x;
      const double theta = nv / radius_;
      return std::cos(theta) * x + (radius_ * std::sin(theta) / nv) * v;
    }
    case ManifoldKind::Hyperbolic: {
      const double ne = v.norm();
      if (ne == 0.0) return x;
      const double c = 1.0 / (scale_ * scale_);
      const double sc = std::sqrt(c);
      const double tg = conformal_lambda(x) * ne;  // metric length
      Vec w = std::tanh(sc * tg / 2.0) / (sc * ne) * v;
      return mobius_add(x, w);
    }
  }
  return x;
}

Vec ManifoldModel::log_map(const Vec& x, const Vec& y) const {
  require_inside(x);
  require_inside(y);
  switch (kind_) {
    case ManifoldKind::Euclidean:
    case ManifoldKind::EuclideanBall:
    case ManifoldKind::HalfSpace:
      return y - x;
    case ManifoldKind::FlatTorus: {
      Vec v = y - x;
      for (int i = 0; i < dim_; ++i) {
        const double L = periods_[i];
        v[i] = std::remainder(v[i], L);
        if (std::abs(std::abs(v[i]) - 0.5 * L) < 1e-12)
          throw OutsideInjectivityRadius("torus log at cut locus");
      }
      return v;
    }
    case ManifoldKind::Sphere: {
      const double r2 = radius_ * radius_;
      double cosv = x.dot(y) / r2;
      cosv = std::clamp(cosv, -1.0, 1.0);
      const double theta = std::acos(cosv);
      if (theta >= kPi * (1.0 - 1e-9))
        throw OutsideInjectivityRadius("sphere log near antipode");
      Vec w = y - cosv * x;
      const double nw = w.norm();
      if (nw < 1e-300) return Vec::Zero(chart_dim_);
      return (radius_ * theta / nw) * w;
    }
    case ManifoldKind::Hyperbolic: {
      Vec om = mobius_add(-x, y);
      const double no = om.norm();
      if (no == 0.0) return Vec::Zero(chart_dim_);
      const double c = 1.0 / (scale_ * scale_);
      const double sc = std::sqrt(c);
      const double t = 2.0 / (sc * conformal_lambda(x)) * std::atanh(sc * no);
      return (t / no) * om;
    }
  }
  return Vec();
}

double ManifoldModel::distance(const Vec& x, const Vec& y) const {
  switch (kind_) {
    case ManifoldKind::Euclidean:
    case ManifoldKind::EuclideanBall:
    case ManifoldKind::HalfSpace:
      return (y - x).norm();
    case ManifoldKind::FlatTorus: {
      double s = 0.0;
      for (int i = 0; i < dim_; ++i) {
        const double di = std::remainder(y[i] - x[i], periods_[i]);
        s += di * di;
      }
      return std::sqrt(s);
    }
    case ManifoldKind::Sphere: {
      double cosv = std::clamp(x.dot(y) / (radius_ * radius_), -1.0, 1.0);
      return radius_ * std::acos(cosv);
    }
    case ManifoldKind::Hyperbolic: {
      const double c = 1.0 / (scale_ * scale_);
      const double sc = std::sqrt(c);
      const double no = mobius_add(-x, y).norm();
      return 2.0 / sc * std::atanh(std::min(sc * no, 1.0 - 1e-16));
    }
  }
  return 0.0;
}

Vec ManifoldModel::mobius_add(const Vec& a, const Vec& b) const {
  const double c = 1.0 / (scale_ * scale_);
  const double ab = a.dot(b), na2 = a.squaredNorm(), nb2 = b.squaredNorm();
  const double den = 1.0 + 2.0 * c * ab + c * c * na2 * nb2;
  return ((1.0 + 2.0 * c * ab + c * nb2) * a + (1.0 - c * na2) * b) / den;
}

Vec ManifoldModel::gyration(const Vec& u, const Vec& w, const Vec& v) const {
  // gyr[u,w] is linear and orthogonal; evaluate on a safely scaled copy.
  const double nv = v.norm();
  if (nv == 0.0) return v;
  const double s = 0.05 * scale_ / nv;
  Vec vs = s * v;
  Vec res = mobius_add(u, mobius_add(w, vs));
  res = mobius_add(-mobius_add(u, w), res);
  return res / s;
}

Mat ManifoldModel::transport_along(const Vec& x, const Vec& v0, const Vec& y,
                                   const Mat& columns) const {
  switch (kind_) {
    case ManifoldKind::Euclidean:
    case ManifoldKind::FlatTorus:
    case ManifoldKind::EuclideanBall:
    case ManifoldKind::HalfSpace:
      return columns;
    case ManifoldKind::Sphere: {
      const double nv = v0.norm();
      if (nv == 0.0) return columns;
      const double theta = nv / radius_;
      Vec u = v0 / nv;
      Vec xr = x / radius_;
      Mat out = columns;
      // v + <u,v>((cos-1)u - sin * x/R), columnwise
      Eigen::Matrix<double, 1, Eigen::Dynamic, Eigen::RowMajor, 1, kMaxDim> coeff =
          u.transpose() * columns;
      out.noalias() += ((std::cos(theta) - 1.0) * u - std::sin(theta) * xr) * coeff;
      (void)y;
      return out;
    }
    case ManifoldKind::Hyperbolic: {
      const double ratio = conformal_lambda(x) / conformal_lambda(y);
      Mat out(chart_dim_, columns.cols());
      for (int j = 0; j < columns.cols(); ++j)
        out.col(j) = ratio * gyration(y, -x, columns.col(j));
      return out;
    }
  }
  return columns;
}

Vec ManifoldModel::transport_geodesic(const Vec& x, const Vec& y, const Vec& v) const {
  Vec v0 = log_map(x, y);
  Mat cols(chart_dim_, 1);
  cols.col(0) = v;
  return transport_along(x, v0, y, cols).col(0);
}

double ManifoldModel::norm(const Vec& x, const Vec& v) const {
  return std::sqrt(inner(x, v, v));
}

double ManifoldModel::inner(const Vec& x, const Vec& v, const Vec& w) const {
  if (kind_ == ManifoldKind::Hyperbolic) {
    const double l = conformal_lambda(x);
    return l * l * v.dot(w);
  }
  return v.dot(w);
}

Vec ManifoldModel::tangent_project(const Vec& x, const Vec& v) const {
  if (kind_ != ManifoldKind::Sphere) return v;
  Vec n = x / x.norm();
  return v - n.dot(v) * n;
}

Mat ManifoldModel::canonical_frame(const Vec& x) const {
  require_inside(x);
  switch (kind_) {
    case ManifoldKind::Euclidean:
    case ManifoldKind::FlatTorus:
    case ManifoldKind::EuclideanBall:
    case ManifoldKind::HalfSpace:
      return Mat::Identity(dim_, dim_);
    case ManifoldKind::Hyperbolic:
      return Mat::Identity(dim_, dim_) / conformal_lambda(x);
    case ManifoldKind::Sphere: {
      // Householder complement of the unit normal gives a deterministic
      // orthonormal tangent basis.
      Vec n = x / x.norm();
      Vec e = Vec::Zero(chart_dim_);
      e[chart_dim_ - 1] = (n[chart_dim_ - 1] >= 0.0) ? 1.0 : -1.0;
      Vec w = n + e;
      Mat H = Mat::Identity(chart_dim_, chart_dim_) -
              (2.0 / w.squaredNorm()) * (w * w.transpose());
      // Columns of H are orthonormal; column chart_dim-1 is -+n, drop it.
      Mat u(chart_dim_, dim_);
      for (int j = 0; j < dim_; ++j) u.col(j) = H.col(j);
      return u;
    }
  }
  return Mat();
}

BoundaryData ManifoldModel::boundary_data(const Vec& x) const {
  bool on_bd = false;
  if (!contains(x, &on_bd) || !on_bd)
    throw NotABoundaryPoint("boundary_data wants a boundary point of " + to_string(kind_));
  BoundaryData bd;
  if (kind_ == ManifoldKind::HalfSpace) {
    bd.normal = Vec::Zero(dim_);
    bd.normal[dim_ - 1] = 1.0;
    bd.second_form = Mat::Zero(dim_, dim_);
  } else {  // EuclideanBall
    Vec n = -x / x.norm();
    bd.normal = n;
    // II(X,Y) = -<grad_X N, Y> with N = -x/|x|: equals (1/R) id on T(dM).
    bd.second_form = (Mat::Identity(dim_, dim_) - n * n.transpose()) / radius_;
  }
  bd.normal_projector = bd.normal * bd.normal.transpose();
  return bd;
}

double ManifoldModel::boundary_distance(const Vec& x) const {
  switch (kind_) {
    case ManifoldKind::EuclideanBall: return radius_ - x.norm();
    case ManifoldKind::HalfSpace: return x[dim_ - 1];
    default: return std::numeric_limits<double>::infinity();
  }
}

double ManifoldModel::project_into_domain(Vec& x) const {
  switch (kind_) {
    case ManifoldKind::EuclideanBall: {
      const double r = x.norm();
      if (r <= radius_) return 0.0;
      x *= radius_ / r;
      return r - radius_;
    }
    case ManifoldKind::HalfSpace: {
      const double xd = x[dim_ - 1];
      if (xd >= 0.0) return 0.0;
      x[dim_ - 1] = 0.0;
      return -xd;
    }
    default:
      return 0.0;
  }
}

}  // namespace ricci_lab
