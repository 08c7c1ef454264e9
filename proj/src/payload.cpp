#include "darsim/payload.hpp"

#include <cmath>

namespace darsim {

ObjectKinematics object_kinematics(const RobotParams& p, const Vec4& theta,
                                   const Vec4& theta_dot, const Vec4& theta_ddot) {
  const double l1 = p.length[0], l2 = p.length[1];
  const double s1 = std::sin(theta[0]), c1 = std::cos(theta[0]);
  const double s12 = std::sin(theta[0] + theta[1]);
  const double c12 = std::cos(theta[0] + theta[1]);
  const double qd1 = theta_dot[0];
  const double qd12 = theta_dot[0] + theta_dot[1];
  const double qdd1 = theta_ddot[0];
  const double qdd12 = theta_ddot[0] + theta_ddot[1];

  ObjectKinematics k;
  k.x_m = p.base_separation / 2.0 + l1 * c1 + l2 * c12 - p.object_length / 2.0;
  k.y_m = l1 * s1 + l2 * s12;
  // exact second time-derivatives of the position formulas
  k.xdd_m = -l1 * (qdd1 * s1 + qd1 * qd1 * c1) -
            l2 * (qdd12 * s12 + qd12 * qd12 * c12);
  k.ydd_m = l1 * (qdd1 * c1 - qd1 * qd1 * s1) +
            l2 * (qdd12 * c12 - qd12 * qd12 * s12);
  return k;
}

GraspForces grasp_forces(const RobotParams& p, double xdd_m, double ydd_m) {
  const double m = p.payload_mass;
  const double mu = p.friction_mu;
  const double fy = m * ydd_m / 2.0;
  const double fz = m * p.gravity / 2.0;
  const double base = std::hypot(fy, fz) / mu;

  GraspForces f;
  f.fs1y = f.fs2y = fy;
  f.fs1z = f.fs2z = fz;
  if (xdd_m >= 0.0) {
    f.f1 = base;
    f.f2 = base + m * xdd_m;
  } else {
    f.f1 = base - m * xdd_m;
    f.f2 = base;
  }

  // friction cone with relative slack: the allocation puts the smaller
  // force exactly on the boundary
  const double lhs = fy * fy + fz * fz;
  const double slack = 1.0 + 1e-9;
  f.cone_ok = lhs <= mu * f.f1 * mu * f.f1 * slack &&
              lhs <= mu * f.f2 * mu * f.f2 * slack;
  return f;
}

}  // namespace darsim
