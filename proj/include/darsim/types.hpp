#pragma once

#include <Eigen/Dense>

namespace darsim {

using Vec2 = Eigen::Vector2d;
using Vec4 = Eigen::Vector4d;
using Vec8 = Eigen::Matrix<double, 8, 1>;
using Mat4 = Eigen::Matrix4d;

}  // namespace darsim
