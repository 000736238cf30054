#pragma once

#include <Eigen/Dense>

#include <array>
#include <stdexcept>
#include <string>

namespace vcgait {

using Vec3 = Eigen::Vector3d;
using Vec2 = Eigen::Vector2d;

enum class ErrorCode {
    InvalidInput,
    OutOfRange,
    DegenerateGait,
    SolverFailure,
    InfeasibleWindow,
    StateInvalid,
    ConfigError,
    SimulationFailed,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

enum class Phase { Stance, Flight };

enum class StanceSide { Right, Left };

inline StanceSide other_side(StanceSide s) {
    return s == StanceSide::Right ? StanceSide::Left : StanceSide::Right;
}

/// Per-step alternation factor (-1)^n with n=1 for right stance, n=2 for left.
inline double alternation_sign(StanceSide s) {
    return s == StanceSide::Right ? -1.0 : 1.0;
}

inline const char* side_name(StanceSide s) {
    return s == StanceSide::Right ? "right" : "left";
}

/// Point-mass state. The DCM is derived data and must satisfy
/// dcm = com + com_vel / omega for the active step frequency.
struct CentroidalState {
    Vec3 com = Vec3::Zero();
    Vec3 com_vel = Vec3::Zero();
    Vec3 dcm = Vec3::Zero();
    double t = 0.0;  // clock since step start [s]
    Phase phase = Phase::Stance;
};

/// Gait hyperparameters and physical bounds. All SI units.
struct GaitSpec {
    double omega = 7.0;       // virtual-constraint frequency [1/s]
    double g = 9.81;          // gravity [m/s^2]
    double t_s_nom = 0.25;    // nominal stance duration [s]
    double dz0 = 0.15;        // z0_nom - z_vrp0_nom [m]; 0 selects LIPM walking
    Vec3 v_des = Vec3::Zero();
    double pelvis_width = 0.10;
    Vec2 du_min = Vec2(-0.30, -0.25);
    Vec2 du_max = Vec2(0.30, 0.25);
    double z_min = 0.15;
    double z_max = 0.45;
    double t_min = 0.10;      // minimum stance time for walking [s]
    double b_x_min = -0.15;
    double b_x_max = 0.15;
    double b_y_in_max = 0.03;   // allowed inward DCM-offset magnitude [m]
    double b_y_out_max = 0.12;  // allowed outward DCM-offset magnitude [m]
    double mu_s = 0.8;
    std::array<double, 4> weights = {1.0, 1.0, 1.0, 1000.0};

    void validate() const;
};

inline void GaitSpec::validate() const {
    auto fail = [](const std::string& msg) { throw Error(ErrorCode::InvalidInput, msg); };
    if (!(omega > 0.0) || !std::isfinite(omega)) fail("omega must be positive and finite");
    if (!(g > 0.0)) fail("g must be positive");
    if (!(t_s_nom > 0.0)) fail("t_s_nom must be positive");
    if (!std::isfinite(dz0)) fail("dz0 must be finite");
    if (!v_des.allFinite()) fail("v_des must be finite");
    if (v_des.z() != 0.0) fail("v_des must have zero vertical component");
    if (!(pelvis_width >= 0.0)) fail("pelvis_width must be non-negative");
    if (!(z_min < z_max)) fail("z_min must be below z_max");
    if (!(du_min.x() < du_max.x()) || !(du_min.y() < du_max.y()))
        fail("du_min must be componentwise below du_max");
    if (!(t_min > 0.0)) fail("t_min must be positive");
    if (!(t_s_nom > t_min)) fail("t_s_nom must exceed t_min");
    if (!(b_x_min < b_x_max)) fail("b_x_min must be below b_x_max");
    if (!(b_y_in_max >= 0.0) || !(b_y_out_max >= 0.0)) fail("lateral b bounds must be non-negative");
    if (!(mu_s >= 0.0)) fail("mu_s must be non-negative");
    for (double w : weights)
        if (!(w >= 0.0) || !std::isfinite(w)) fail("weights must be non-negative and finite");
    if (!(weights[3] > 0.0)) fail("DCM-offset weight must be positive");
}

}  // namespace vcgait
