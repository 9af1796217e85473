#pragma once

#include <Eigen/Dense>
#include <cstdint>

namespace ricci_lab {

// Chart dimensions stay tiny (spheres embed in d+1), so everything lives on
// the stack.
inline constexpr int kMaxDim = 8;

using Vec = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, kMaxDim, 1>;
using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0, kMaxDim, kMaxDim>;

// Rank-3 array for Christoffel symbols, Gamma^k_{ij} = at(k,i,j).
struct Tensor3 {
  int d = 0;
  Eigen::Matrix<double, Eigen::Dynamic, 1, 0, kMaxDim * kMaxDim * kMaxDim, 1> v;

  explicit Tensor3(int dim = 0) : d(dim) {
    v.setZero(dim * dim * dim);
  }
  double& at(int k, int i, int j) { return v[(k * d + i) * d + j]; }
  double at(int k, int i, int j) const { return v[(k * d + i) * d + j]; }
};

}  // namespace ricci_lab
