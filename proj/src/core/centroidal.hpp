#pragma once

#include "core/types.hpp"

namespace vcgait {

/// DCM from CoM state: xi = x + xdot / omega.
Vec3 dcm_from_state(const Vec3& com, const Vec3& com_vel, double omega);

/// VRP from CoP: vertical shift by g / omega^2, horizontal components untouched.
Vec3 vrp_from_cop(const Vec3& cop, double omega, double g = 9.81);

/// Inverse of vrp_from_cop.
Vec3 cop_from_vrp(const Vec3& vrp, double omega, double g = 9.81);

/// Builds a state with a consistent derived DCM.
CentroidalState make_state(const Vec3& com, const Vec3& com_vel, double omega, double t = 0.0,
                           Phase phase = Phase::Stance);

}  // namespace vcgait
