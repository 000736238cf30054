#pragma once

#include "core/types.hpp"

namespace vcgait {

/// Fixed data of the step currently being executed. gamma = e^{omega * T_s}
/// encodes the committed stance duration; vrp_measured is the VRP the
/// controller believes in at the current instant (equals vrp0 unless a CoP
/// perturbation is injected).
struct StepContext {
    Vec3 vrp0 = Vec3::Zero();
    double omega = 7.0;
    double gamma = 1.0;
    double t_f = 0.0;
    StanceSide stance_side = StanceSide::Right;
    Vec3 vrp_measured = Vec3::Zero();

    double stance_duration() const { return std::log(gamma) / omega; }
};

inline StepContext make_step_context(const Vec3& vrp0, double omega, double gamma, double t_f,
                                     StanceSide side) {
    StepContext ctx;
    ctx.vrp0 = vrp0;
    ctx.omega = omega;
    ctx.gamma = gamma;
    ctx.t_f = t_f;
    ctx.stance_side = side;
    ctx.vrp_measured = vrp0;
    return ctx;
}

/// Exact stance propagation of the linear dynamics xdd = omega^2 (x - vrp0).
///
/// The DCM evolves as xi_t = e^{omega t}(xi_0 - vrp0) + vrp0 and the CoM as
/// x_t = 0.5 (xi_t + vrp0 + e^{-omega t}(2 x_0 - xi_0 - vrp0)). The returned
/// velocity is recomputed from xdot = omega (xi - x) so the DCM identity holds
/// exactly at the output.
///
/// Preconditions: state0.t == 0, 0 <= t <= stance duration of ctx.
CentroidalState propagate_stance(const CentroidalState& state0, const StepContext& ctx, double t);

/// Ballistic propagation from the take-off state by dt >= 0. Both the CoM and
/// the DCM follow free-fall parabolas; the horizontal velocity is preserved
/// exactly.
CentroidalState propagate_flight(const CentroidalState& takeoff, double omega, double g,
                                 double dt);

/// Belief at the current instant about the CoM velocity at take-off: the
/// nominal value during stance, the measurement rolled back through gravity
/// during flight.
Vec3 project_takeoff_velocity(const CentroidalState& state, const Vec3& nominal_vel_ts,
                              double t_s, double g);

/// Belief at the current instant about the DCM at take-off, by evolving the
/// measurement forward (stance) or backward (flight) in time.
///
/// During stance the result is affine in ctx.gamma with slope
/// e^{-omega t}(xi_t - vrp_measured); the step controller relies on that.
Vec3 project_takeoff_dcm(const CentroidalState& state, const StepContext& ctx, double g);

/// CoM position at take-off predicted from a mid-stance measurement.
/// Errors with OutOfRange if ctx.gamma < e^{omega t} (take-off in the past).
Vec3 com_at_takeoff(const CentroidalState& state, const StepContext& ctx);

/// VRP at the end of the step (touchdown) as a function of the take-off
/// beliefs, the flight duration and the DCM offset:
///   r_vrp,T = 0.5 T_f^2 g + T_f (v + g/omega) + xi - b
/// with g the (downward) gravity vector.
Vec3 end_of_step_vrp(const Vec3& v_tilde, const Vec3& xi_tilde, double t_f, const Vec3& b,
                     double omega, double g);

}  // namespace vcgait
