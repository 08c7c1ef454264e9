#pragma once

#include <stdexcept>

#include "darsim/dynamics.hpp"
#include "darsim/types.hpp"

namespace darsim {

// Reference-generation parameters for the two-phase protocol: an exponential
// approach blend over [0, approach_duration), then transport of the object
// COM along a half circle swept linearly in time.
struct TrajectoryConfig {
  Vec2 start_1 = Vec2::Zero();  // arm-1 end-effector at t = 0 [m]
  Vec2 start_2 = Vec2::Zero();
  Vec2 goal_1 = Vec2::Zero();   // grasp points reached at t = approach_duration
  Vec2 goal_2 = Vec2::Zero();
  Vec2 circle_center = Vec2::Zero();  // obstacle position (x0, y0) [m]
  double circle_radius = 0.0;         // r_m [m]
  double grasp_offset = 0.0;          // end-effector offset from COM, d1/2 [m]
  double approach_duration = 2.0;     // [s]
  double transport_duration = 4.0;    // [s]
  double dt = 1e-3;                   // finite-difference step for reference velocities [s]
  int elbow_sign_1 = +1;              // IK branch per arm, fixed for the whole run
  int elbow_sign_2 = -1;

  // Throws std::invalid_argument naming the violated invariant; checks that
  // every commanded end-effector point stays reachable over the protocol.
  void validate(const RobotParams& params) const;

  static TrajectoryConfig table1(const RobotParams& params);
};

struct CartesianReference {
  Vec2 ee1, ee2;  // commanded end-effector points [m]
  Vec2 object;    // object COM point [m]
};

struct JointReference {
  Vec4 theta_r = Vec4::Zero();
  Vec4 theta_r_dot = Vec4::Zero();
};

struct UnreachableTarget : std::runtime_error {
  UnreachableTarget(const std::string& msg, double dist, double reach_min, double reach_max)
      : std::runtime_error(msg), distance(dist), min_reach(reach_min), max_reach(reach_max) {}
  double distance, min_reach, max_reach;
};

CartesianReference cartesian_reference(const TrajectoryConfig& cfg, double t);

// Object COM acceleration of the reference curve (feedforward input to the
// grasp-force allocation). Zero during approach and after transport ends.
Vec2 object_reference_acceleration(const TrajectoryConfig& cfg, double t);

// Planar 2R chain; arm is 1 or 2, angles are the (shoulder, elbow) pair.
Vec2 forward_kinematics(const RobotParams& params, int arm, const Vec2& angles);

// Closed-form inverse kinematics; elbow_sign selects the branch.
// Throws UnreachableTarget when the target leaves the reachable annulus.
Vec2 inverse_kinematics(const RobotParams& params, int arm, const Vec2& target,
                        int elbow_sign);

// Joint-space reference: IK of the Cartesian reference, velocities by
// central finite differences with step cfg.dt.
JointReference joint_reference(const RobotParams& params, const TrajectoryConfig& cfg,
                               double t);

}  // namespace darsim
