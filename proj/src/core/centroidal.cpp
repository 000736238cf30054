#include "core/centroidal.hpp"

namespace vcgait {

Vec3 dcm_from_state(const Vec3& com, const Vec3& com_vel, double omega) {
    if (!(omega > 0.0) || !std::isfinite(omega))
        throw Error(ErrorCode::InvalidInput, "dcm_from_state: omega must be positive");
    if (!com.allFinite() || !com_vel.allFinite())
        throw Error(ErrorCode::InvalidInput, "dcm_from_state: non-finite state");
    return com + com_vel / omega;
}

Vec3 vrp_from_cop(const Vec3& cop, double omega, double g) {
    if (!(omega > 0.0) || !std::isfinite(omega))
        throw Error(ErrorCode::InvalidInput, "vrp_from_cop: omega must be positive");
    if (!cop.allFinite()) throw Error(ErrorCode::InvalidInput, "vrp_from_cop: non-finite cop");
    return cop + Vec3(0.0, 0.0, g / (omega * omega));
}

Vec3 cop_from_vrp(const Vec3& vrp, double omega, double g) {
    if (!(omega > 0.0) || !std::isfinite(omega))
        throw Error(ErrorCode::InvalidInput, "cop_from_vrp: omega must be positive");
    return vrp - Vec3(0.0, 0.0, g / (omega * omega));
}

CentroidalState make_state(const Vec3& com, const Vec3& com_vel, double omega, double t,
                           Phase phase) {
    CentroidalState s;
    s.com = com;
    s.com_vel = com_vel;
    s.dcm = dcm_from_state(com, com_vel, omega);
    s.t = t;
    s.phase = phase;
    return s;
}

}  // namespace vcgait
