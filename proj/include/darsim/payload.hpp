#pragma once

#include "darsim/dynamics.hpp"
#include "darsim/types.hpp"

namespace darsim {

// Planar position and acceleration of the payload centre of mass,
// evaluated through the arm-1 kinematic chain.
struct ObjectKinematics {
  double x_m, y_m;      // COM position [m]
  double xdd_m, ydd_m;  // COM acceleration [m/s^2]
};

ObjectKinematics object_kinematics(const RobotParams& params, const Vec4& theta,
                                   const Vec4& theta_dot, const Vec4& theta_ddot);

// Grasp normal forces and friction-force components at the two contacts.
struct GraspForces {
  double f1 = 0.0, f2 = 0.0;      // applied normal forces [N]
  double fs1y = 0.0, fs2y = 0.0;  // y friction components [N]
  double fs1z = 0.0, fs2z = 0.0;  // z friction components [N]
  bool cone_ok = true;            // both contacts inside the friction cone

  // Contact-force vector (F1, Fs1y, F2, Fs2y) entering the arm dynamics.
  Vec4 contact_vector() const { return Vec4(f1, fs1y, f2, fs2y); }
};

// Allocates the applied forces from the object COM acceleration. The lighter
// contact sits exactly on the friction-cone boundary by construction, so
// cone_ok is evaluated with a small relative slack.
GraspForces grasp_forces(const RobotParams& params, double xdd_m, double ydd_m);

}  // namespace darsim
