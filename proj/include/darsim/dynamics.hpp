#pragma once

#include <array>

#include "darsim/types.hpp"

namespace darsim {

// Physical constants of the two planar 2-DoF arms, the payload and the
// contact friction. Links are numbered 1,2 (arm 1) and 3,4 (arm 2).
struct RobotParams {
  std::array<double, 4> mass{};        // m_i  [kg]
  std::array<double, 4> inertia{};     // I_i  [kg m^2]
  std::array<double, 4> length{};      // l_i  [m]
  std::array<double, 4> com_offset{};  // k_i, joint-to-COM distance [m]
  std::array<double, 4> viscous{};     // b_i  [N m s]
  double object_length = 0.0;          // d1 [m]
  double base_separation = 0.0;        // d2 [m]
  double friction_mu = 0.0;            // dry friction coefficient
  double payload_mass = 0.0;           // m [kg]
  double gravity = 9.8;                // [m/s^2]

  // Throws std::invalid_argument naming the violated invariant.
  void validate() const;

  static RobotParams table1();
};

struct JointState {
  Vec4 theta = Vec4::Zero();      // joint angles [rad]
  Vec4 theta_dot = Vec4::Zero();  // joint velocities [rad/s]
};

// Derived inertia constants A1..A6 of the closed-form model.
struct InertiaConstants {
  double a1, a2, a3, a4, a5, a6;
};

InertiaConstants inertia_constants(const RobotParams& params);

// M(theta): symmetric positive definite, block-diagonal per arm.
Mat4 mass_matrix(const RobotParams& params, const Vec4& theta);

// Coriolis-centripetal 4-vector. Quadratic in theta_dot; viscous friction
// is NOT included here (it lives in viscous_friction).
Vec4 coriolis_vector(const RobotParams& params, const JointState& state);

// beta = (b_i * theta_dot_i)
Vec4 viscous_friction(const RobotParams& params, const Vec4& theta_dot);

// Contact-force Jacobian. Torques from the contact-force vector
// F = (F1, Fs1y, F2, Fs2y) are jacobian(...) * F.
Mat4 jacobian(const RobotParams& params, const Vec4& theta);

// Solves M(theta) qdd = u + J F - C - beta - Td for the joint accelerations.
// Throws std::runtime_error if the mass matrix fails to factor.
Vec4 forward_dynamics(const RobotParams& params, const JointState& state,
                      const Vec4& u, const Vec4& contact_force,
                      const Vec4& disturbance);

// 1/2 qd' M qd
double kinetic_energy(const RobotParams& params, const JointState& state);

}  // namespace darsim
