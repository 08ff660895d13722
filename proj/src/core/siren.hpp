#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "core/types.hpp"

namespace nh {

// Sinusoidal MLP. Layer i maps activations through sin(W_i a + b_i); the
// first layer applies the frequency scale, sin(omega0 * (W_1 x + b_1)), and
// the last layer is linear with scalar output. Input dimension is 3 for
// static condition networks and 4 for space-time networks.
struct SirenNetwork {
  int input_dim = 4;
  double omega0 = 30.0;
  std::vector<Eigen::MatrixXd> weights;  // depth()+1 matrices
  std::vector<Eigen::VectorXd> biases;   // matching row counts
  std::string metadata;                  // free-form annotation, round-trips through checkpoints

  int depth() const { return static_cast<int>(weights.size()) - 1; }

  // Hidden-layer widths, i.e. output sizes of layers 1..d.
  std::vector<int> hidden_widths() const;

  std::size_t parameter_count() const;

  // Checks the dimension chain, finiteness and omega0 > 0; throws
  // InvalidArgumentError on violation.
  void validate() const;
};

// Evaluates the network at x (length input_dim).
double forward(const SirenNetwork& net, Eigen::Ref<const Eigen::VectorXd> x);

// SIREN initialization: first layer uniform in [-1/N1, 1/N1], deeper layers
// uniform in [-sqrt(6/fan_in), sqrt(6/fan_in)]. Deterministic per seed.
SirenNetwork init_standard(int input_dim, const std::vector<int>& hidden_widths,
                           double omega0, std::uint64_t seed);

// Embeds a 3-input condition network into a 4-input space-time network of
// equal depth and at-least-equal widths so that f(p, t) = g(p) for all t.
SirenNetwork init_from_condition(const SirenNetwork& g, const std::vector<int>& target_widths);

// Builds the 3-input network g(p) = f(p, t) by folding the time column of the
// first layer into its bias.
SirenNetwork extract_slice(const SirenNetwork& f, double t);

}  // namespace nh
