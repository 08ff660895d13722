#pragma once

#include <Eigen/Core>

namespace nh {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

// Training and sampling happen inside this box; time intervals come from the
// problem definition.
inline constexpr double kDomainMin = -1.0;
inline constexpr double kDomainMax = 1.0;

// Spatial gradients with a norm below this are treated as degenerate when a
// unit normal or a curvature is required.
inline constexpr double kGradEpsilon = 1e-6;

}  // namespace nh
