#include "darsim/dynamics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace darsim {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("RobotParams: " + what);
}

}  // namespace

void RobotParams::validate() const {
  for (int i = 0; i < 4; ++i) {
    const std::string n = std::to_string(i + 1);
    require(mass[i] > 0.0, "link mass m" + n + " must be > 0");
    require(inertia[i] > 0.0, "link inertia I" + n + " must be > 0");
    require(length[i] > 0.0, "link length l" + n + " must be > 0");
    require(com_offset[i] > 0.0, "COM offset k" + n + " must be > 0");
    require(com_offset[i] <= length[i], "COM offset k" + n + " must be <= l" + n);
    require(viscous[i] >= 0.0, "viscous coefficient b" + n + " must be >= 0");
  }
  require(object_length > 0.0, "object length d1 must be > 0");
  require(base_separation > 0.0, "base separation d2 must be > 0");
  require(friction_mu > 0.0 && friction_mu < 1.0, "friction coefficient mu must satisfy 0 < mu < 1");
  require(payload_mass > 0.0, "payload mass must be > 0");
  require(gravity > 0.0, "gravity must be > 0");
}

RobotParams RobotParams::table1() {
  RobotParams p;
  p.mass = {1.5, 1.5, 1.5, 1.5};
  p.inertia = {0.18, 0.18, 0.18, 0.18};
  p.length = {1.2, 1.2, 1.2, 1.2};
  p.com_offset = {0.48, 0.48, 0.48, 0.48};
  p.viscous = {110.0, 110.0, 110.0, 110.0};
  p.object_length = 0.25;
  p.base_separation = 1.2;
  p.friction_mu = 0.35;
  p.payload_mass = 1.5;
  p.gravity = 9.8;
  return p;
}

InertiaConstants inertia_constants(const RobotParams& p) {
  InertiaConstants a;
  a.a1 = p.mass[0] * p.com_offset[0] * p.com_offset[0] +
         p.mass[1] * p.length[0] * p.length[0] + p.inertia[0];
  a.a2 = p.mass[1] * p.com_offset[1] * p.com_offset[1] + p.inertia[1];
  a.a3 = p.mass[1] * p.length[0] * p.com_offset[1];
  a.a4 = p.mass[2] * p.com_offset[2] * p.com_offset[2] +
         p.mass[3] * p.length[2] * p.length[2] + p.inertia[2];
  a.a5 = p.mass[3] * p.com_offset[3] * p.com_offset[3] + p.inertia[3];
  a.a6 = p.mass[3] * p.length[2] * p.com_offset[3];
  return a;
}

Mat4 mass_matrix(const RobotParams& p, const Vec4& theta) {
  const InertiaConstants a = inertia_constants(p);
  const double c2 = std::cos(theta[1]);
  const double c4 = std::cos(theta[3]);
  Mat4 m = Mat4::Zero();
  m(0, 0) = a.a1 + a.a2 + 2.0 * a.a3 * c2;
  m(0, 1) = m(1, 0) = a.a2 + a.a3 * c2;
  m(1, 1) = a.a2;
  m(2, 2) = a.a4 + a.a5 + 2.0 * a.a6 * c4;
  m(2, 3) = m(3, 2) = a.a5 + a.a6 * c4;
  m(3, 3) = a.a5;
  return m;
}

// Lagrangian Coriolis-centripetal vector of the block-diagonal M(theta)
// above; the shoulder rows carry 2*qd1*qd2 (resp. 2*qd3*qd4) cross terms,
// which keeps d/dt(qd' M qd / 2) consistent with the applied power.
Vec4 coriolis_vector(const RobotParams& p, const JointState& state) {
  const InertiaConstants a = inertia_constants(p);
  const double s2 = std::sin(state.theta[1]);
  const double s4 = std::sin(state.theta[3]);
  const double qd1 = state.theta_dot[0];
  const double qd2 = state.theta_dot[1];
  const double qd3 = state.theta_dot[2];
  const double qd4 = state.theta_dot[3];
  Vec4 c;
  c[0] = -a.a3 * s2 * (qd2 * qd2 + 2.0 * qd1 * qd2);
  c[1] = a.a3 * s2 * qd1 * qd1;
  c[2] = -a.a6 * s4 * (qd4 * qd4 + 2.0 * qd3 * qd4);
  c[3] = a.a6 * s4 * qd3 * qd3;
  return c;
}

Vec4 viscous_friction(const RobotParams& p, const Vec4& theta_dot) {
  Vec4 beta;
  for (int i = 0; i < 4; ++i) beta[i] = p.viscous[i] * theta_dot[i];
  return beta;
}

Mat4 jacobian(const RobotParams& p, const Vec4& theta) {
  const double l1 = p.length[0], l2 = p.length[1];
  const double l3 = p.length[2], l4 = p.length[3];
  const double s1 = std::sin(theta[0]), c1 = std::cos(theta[0]);
  const double s12 = std::sin(theta[0] + theta[1]);
  const double c12 = std::cos(theta[0] + theta[1]);
  const double s3 = std::sin(theta[2]), c3 = std::cos(theta[2]);
  const double s34 = std::sin(theta[2] + theta[3]);
  const double c34 = std::cos(theta[2] + theta[3]);
  Mat4 j = Mat4::Zero();
  j(0, 0) = -l1 * s1 - l2 * s12;
  j(0, 1) = -l1 * c1 - l2 * c12;
  j(1, 0) = -l2 * s12;
  j(1, 1) = -l2 * c12;
  j(2, 2) = l3 * s3 + l4 * s34;
  j(2, 3) = -l3 * c3 - l4 * c34;
  j(3, 2) = l4 * s34;
  j(3, 3) = -l4 * c34;
  return j;
}

Vec4 forward_dynamics(const RobotParams& p, const JointState& state,
                      const Vec4& u, const Vec4& contact_force,
                      const Vec4& disturbance) {
  const Mat4 m = mass_matrix(p, state.theta);
  const Vec4 rhs = u + jacobian(p, state.theta) * contact_force -
                   coriolis_vector(p, state) -
                   viscous_friction(p, state.theta_dot) - disturbance;
  Eigen::LLT<Mat4> llt(m);
  if (llt.info() != Eigen::Success)
    throw std::runtime_error("forward_dynamics: mass matrix is not positive definite");
  return llt.solve(rhs);
}

double kinetic_energy(const RobotParams& p, const JointState& state) {
  return 0.5 * state.theta_dot.dot(mass_matrix(p, state.theta) * state.theta_dot);
}

}  // namespace darsim
