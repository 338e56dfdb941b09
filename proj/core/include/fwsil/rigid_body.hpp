#pragma once

#include <Eigen/Core>
#include <cmath>
#include <stdexcept>

#include "fwsil/math_util.hpp"

namespace fwsil {

// 12-state body-frame rigid body state. Body axes are the conventional
// flat-Earth set: x forward, y to the right wing, z down. (u,v,w) are the
// body components of the velocity over ground; aerodynamic quantities are
// formed from the wind-relative velocity where wind is present. Altitude h
// is positive up.
struct RigidBodyState {
    double u = 0.0, v = 0.0, w = 0.0;        // body velocity [m/s]
    double p = 0.0, q = 0.0, r = 0.0;        // body rates [rad/s]
    double phi = 0.0, theta = 0.0, psi = 0.0; // roll, pitch, yaw [rad]
    double x = 0.0, y = 0.0;                 // North, East [m]
    double h = 0.0;                          // altitude [m]

    static constexpr int kDim = 12;

    Eigen::Matrix<double, 12, 1> to_vector() const {
        Eigen::Matrix<double, 12, 1> s;
        s << u, v, w, p, q, r, phi, theta, psi, x, y, h;
        return s;
    }
    static RigidBodyState from_vector(const Eigen::Matrix<double, 12, 1>& s) {
        RigidBodyState st;
        st.u = s(0); st.v = s(1); st.w = s(2);
        st.p = s(3); st.q = s(4); st.r = s(5);
        st.phi = s(6); st.theta = s(7); st.psi = s(8);
        st.x = s(9); st.y = s(10); st.h = s(11);
        return st;
    }

    double airspeed() const { return std::sqrt(u * u + v * v + w * w); }
    double alpha() const { return std::atan2(w, u); }

    bool finite() const { return to_vector().allFinite(); }

    void validate() const {
        if (!finite())
            throw std::invalid_argument("rigid body state has non-finite fields");
        if (std::abs(phi) >= kPi)
            throw std::invalid_argument("roll angle out of (-pi, pi)");
        if (std::abs(theta) >= kPi / 2.0)
            throw std::invalid_argument("pitch angle out of (-pi/2, pi/2)");
    }
};

struct ControlInputs {
    double throttle = 0.0;  // fraction in [0, 1]
    double elevator = 0.0;  // symmetric elevon deflection [rad]
    double aileron = 0.0;   // antisymmetric elevon deflection [rad]

    Eigen::Vector3d to_vector() const { return {throttle, elevator, aileron}; }
    static ControlInputs from_vector(const Eigen::Vector3d& c) {
        return {c(0), c(1), c(2)};
    }
};

}  // namespace fwsil
