#pragma once

#include <Eigen/Dense>
#include <vector>

#include "core/siren.hpp"
#include "core/types.hpp"

namespace nh {

// Second-order space-time jet of f at one point: value, time derivative,
// spatial gradient and spatial Hessian. For 3-input networks dt is zero.
struct Jet2 {
  double value = 0.0;
  double dt = 0.0;
  Vec3 grad = Vec3::Zero();
  Mat3 hess = Mat3::Zero();
};

// Adjoint seed for the reverse pass: the derivative of some scalar with
// respect to each jet component.
struct JetAdjoint {
  double value = 0.0;
  double dt = 0.0;
  Vec3 grad = Vec3::Zero();
  Mat3 hess = Mat3::Zero();
};

// Gradient (or any additive quantity) mirroring the parameter layout of a
// SirenNetwork.
struct ParamGrad {
  std::vector<Eigen::MatrixXd> weights;
  std::vector<Eigen::VectorXd> biases;

  static ParamGrad zeros_like(const SirenNetwork& net);
  void set_zero();
  void add(const ParamGrad& other);
  void add_scaled(double a, const ParamGrad& other);
  void scale(double a);
  std::size_t size() const;

  // Flat views in a fixed order (layer by layer, weights column-major, then
  // bias); used by finite-difference tests and serialization.
  void to_flat(std::vector<double>& out) const;
  void from_flat(const std::vector<double>& in);
};

// Evaluates jets of one network and holds the forward record needed for the
// exact reverse pass to the parameters. Buffers are sized on first use and
// reused; one engine per worker thread.
//
// The forward recursion, with z_i = s_i (W_i a_{i-1} + b_i), s_1 = omega0 and
// s_i = 1 otherwise:
//   a_i = sin(z_i)
//   J_i = diag(cos z_i) G_i,              G_i = s_i W_i J_{i-1}
//   H_i[k] = cos(z_ik) K_i[k] - sin(z_ik) q q^T,  q = spatial part of G_i row k,
//                                         K_i = s_i W_i H_{i-1}
// and the linear output layer contracts a_d, J_d, H_d into value, gradient
// and Hessian. backward() propagates adjoint seeds through the same graph.
class JetEngine {
 public:
  explicit JetEngine(const SirenNetwork& net);

  const SirenNetwork& net() const { return *net_; }

  // Jet at x (length input_dim). When with_hessian is false the Hessian
  // recursion is skipped and the returned hess is zero.
  Jet2 forward(Eigen::Ref<const Eigen::VectorXd> x, bool with_hessian);

  Jet2 forward(const Vec3& p, double t, bool with_hessian);

  // Accumulates d(seed . jet)/d(theta) into grad for the most recent
  // forward(). seed.hess must be zero if the forward ran without the Hessian.
  void backward(const JetAdjoint& seed, ParamGrad& grad) const;

 private:
  const SirenNetwork* net_;
  int m_ = 0;  // input dimension
  bool has_hess_ = false;

  // Forward record, index i = 0..d: A_[0] = x, A_[i] = sin(z_i).
  std::vector<Eigen::VectorXd> A_;
  std::vector<Eigen::VectorXd> C_;  // cos(z_i), index 1..d (slot 0 unused)
  std::vector<Eigen::MatrixXd> J_;  // J_[0] = I_m
  std::vector<Eigen::MatrixXd> G_;  // pre-activation Jacobians, index 1..d
  std::vector<Eigen::MatrixXd> H_;  // per-unit Hessians, n x 9 (row k = row-major 3x3); H_[0] empty
  std::vector<Eigen::MatrixXd> K_;  // pre-activation Hessians, index 2..d

  // Reverse scratch.
  mutable Eigen::VectorXd abar_, zbar_;
  mutable Eigen::MatrixXd jbar_, hbar_, gbar_, kbar_;
  mutable Eigen::MatrixXd jbar_prev_, hbar_prev_;
};

// One-shot public jet of a space-time network (input_dim 4 required).
Jet2 jet(const SirenNetwork& net, const Vec3& p, double t);

}  // namespace nh
