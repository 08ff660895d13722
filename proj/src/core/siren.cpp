#include "core/siren.hpp"

#include <cmath>
#include <sstream>

#include "core/errors.hpp"
#include "core/rng.hpp"

namespace nh {

std::vector<int> SirenNetwork::hidden_widths() const {
  std::vector<int> widths;
  widths.reserve(weights.size() - 1);
  for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
    widths.push_back(static_cast<int>(weights[i].rows()));
  }
  return widths;
}

std::size_t SirenNetwork::parameter_count() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    n += static_cast<std::size_t>(weights[i].size()) + static_cast<std::size_t>(biases[i].size());
  }
  return n;
}

void SirenNetwork::validate() const {
  if (input_dim != 3 && input_dim != 4) {
    throw InvalidArgumentError("SirenNetwork: input_dim must be 3 or 4, got " +
                               std::to_string(input_dim));
  }
  if (!(omega0 > 0.0) || !std::isfinite(omega0)) {
    throw InvalidArgumentError("SirenNetwork: omega0 must be positive and finite");
  }
  if (weights.size() < 2 || weights.size() != biases.size()) {
    throw InvalidArgumentError("SirenNetwork: need d+1 weight/bias pairs with d >= 1");
  }
  Eigen::Index prev = input_dim;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i].cols() != prev) {
      std::ostringstream msg;
      msg << "SirenNetwork: layer " << i + 1 << " expects " << weights[i].cols()
          << " inputs but the previous layer produces " << prev;
      throw InvalidArgumentError(msg.str());
    }
    if (biases[i].size() != weights[i].rows()) {
      throw InvalidArgumentError("SirenNetwork: bias size mismatch at layer " +
                                 std::to_string(i + 1));
    }
    if (!weights[i].allFinite() || !biases[i].allFinite()) {
      throw InvalidArgumentError("SirenNetwork: non-finite parameter at layer " +
                                 std::to_string(i + 1));
    }
    prev = weights[i].rows();
  }
  if (prev != 1) {
    throw InvalidArgumentError("SirenNetwork: output layer must produce a scalar");
  }
}

double forward(const SirenNetwork& net, Eigen::Ref<const Eigen::VectorXd> x) {
  if (x.size() != net.input_dim) {
    throw InvalidArgumentError("forward: input has length " + std::to_string(x.size()) +
                               ", network expects " + std::to_string(net.input_dim));
  }
  const int d = net.depth();
  Eigen::VectorXd a = x;
  Eigen::VectorXd z;
  for (int i = 0; i < d; ++i) {
    z.noalias() = net.weights[i] * a;
    z += net.biases[i];
    if (i == 0) z *= net.omega0;
    a = z.array().sin();
  }
  return net.weights[d].row(0).dot(a) + net.biases[d][0];
}

SirenNetwork init_standard(int input_dim, const std::vector<int>& hidden_widths,
                           double omega0, std::uint64_t seed) {
  if (hidden_widths.empty()) {
    throw InvalidArgumentError("init_standard: need at least one hidden layer");
  }
  for (int w : hidden_widths) {
    if (w < 1) throw InvalidArgumentError("init_standard: hidden widths must be positive");
  }

  SirenNetwork net;
  net.input_dim = input_dim;
  net.omega0 = omega0;

  Rng rng(mix_seed(seed, 0x5192e));
  auto fill_uniform = [&rng](Eigen::MatrixXd& m, double bound) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      for (Eigen::Index r = 0; r < m.rows(); ++r) {
        m(r, c) = rng.uniform(-bound, bound);
      }
    }
  };

  int fan_in = input_dim;
  const std::size_t layers = hidden_widths.size() + 1;
  for (std::size_t i = 0; i < layers; ++i) {
    const int fan_out = (i < hidden_widths.size()) ? hidden_widths[i] : 1;
    Eigen::MatrixXd w(fan_out, fan_in);
    Eigen::VectorXd b(fan_out);
    const double w_bound =
        (i == 0) ? 1.0 / static_cast<double>(fan_in) : std::sqrt(6.0 / static_cast<double>(fan_in));
    fill_uniform(w, w_bound);
    // Biases follow the cited architecture's linear-layer default.
    const double b_bound = 1.0 / std::sqrt(static_cast<double>(fan_in));
    for (Eigen::Index r = 0; r < b.size(); ++r) b[r] = rng.uniform(-b_bound, b_bound);
    net.weights.push_back(std::move(w));
    net.biases.push_back(std::move(b));
    fan_in = fan_out;
  }
  net.validate();
  return net;
}

SirenNetwork init_from_condition(const SirenNetwork& g, const std::vector<int>& target_widths) {
  g.validate();
  if (g.input_dim != 3) {
    throw InvalidArgumentError("init_from_condition: condition network must have input_dim 3");
  }
  const std::vector<int> source_widths = g.hidden_widths();
  if (target_widths.size() != source_widths.size()) {
    throw InvalidArgumentError("init_from_condition: depth mismatch (target has " +
                               std::to_string(target_widths.size()) + " hidden layers, source " +
                               std::to_string(source_widths.size()) + ")");
  }
  for (std::size_t i = 0; i < target_widths.size(); ++i) {
    if (target_widths[i] < source_widths[i]) {
      throw InvalidArgumentError("init_from_condition: target width " +
                                 std::to_string(target_widths[i]) + " at layer " +
                                 std::to_string(i + 1) + " is smaller than the source width " +
                                 std::to_string(source_widths[i]));
    }
  }

  SirenNetwork f;
  f.input_dim = 4;
  f.omega0 = g.omega0;

  const int d = g.depth();
  int prev_total = 4;
  int prev_source = 3;
  for (int i = 0; i < d; ++i) {
    const int rows_source = source_widths[i];
    const int rows_total = target_widths[i];
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(rows_total, prev_total);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(rows_total);
    w.topLeftCorner(rows_source, prev_source) = g.weights[i];
    b.head(rows_source) = g.biases[i];
    if (i > 0) {
      // Identity on the padding block; the padded activations stay at
      // sin(0) = 0 because the first layer zeroes them.
      const int extra_rows = rows_total - rows_source;
      const int extra_cols = prev_total - prev_source;
      const int k = std::min(extra_rows, extra_cols);
      for (int j = 0; j < k; ++j) w(rows_source + j, prev_source + j) = 1.0;
    }
    f.weights.push_back(std::move(w));
    f.biases.push_back(std::move(b));
    prev_total = rows_total;
    prev_source = rows_source;
  }
  Eigen::MatrixXd w_out = Eigen::MatrixXd::Zero(1, prev_total);
  w_out.leftCols(prev_source) = g.weights[d];
  f.weights.push_back(std::move(w_out));
  f.biases.push_back(g.biases[d]);
  f.validate();
  return f;
}

SirenNetwork extract_slice(const SirenNetwork& f, double t) {
  f.validate();
  if (f.input_dim != 4) {
    throw InvalidArgumentError("extract_slice: expected a 4-input space-time network");
  }
  SirenNetwork g;
  g.input_dim = 3;
  g.omega0 = f.omega0;
  g.weights = f.weights;
  g.biases = f.biases;
  // First layer: A1 (p, t) + a1 = B1 p + (a1 + t u) with u the time column.
  // omega0 multiplies the whole affine expression, so the bias shift needs no
  // extra scaling.
  const Eigen::VectorXd time_column = f.weights[0].col(3);
  g.weights[0] = f.weights[0].leftCols(3).eval();
  g.biases[0] = f.biases[0] + t * time_column;
  g.validate();
  return g;
}

}  // namespace nh
