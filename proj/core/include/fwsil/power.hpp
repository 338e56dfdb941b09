#pragma once

#include <stdexcept>

namespace fwsil {

/// Brushless motor constants. The speed-torque slope r1 and the
/// current-torque slope dI/dtau are construction identities of the other
/// constants, so they are exposed as functions rather than stored fields.
struct MotorConstants {
    double no_load_current_a = 0.8;    // I0
    double stall_current_a = 389.50;   // I_ST
    double stall_torque_nm = 14.9;     // tau_ST
    double nominal_voltage_v = 7.4;    // V0
    double nominal_speed_rpm = 7562.8; // omega0

    double speed_torque_slope() const {  // r1 [rpm/(N m)]
        return -nominal_speed_rpm / stall_torque_nm;
    }
    double current_torque_slope() const {  // dI/dtau [A/(N m)]
        return (stall_current_a - no_load_current_a) / stall_torque_nm;
    }
    void validate() const {
        if (!(stall_current_a > no_load_current_a) || no_load_current_a < 0.0)
            throw std::invalid_argument("motor: require I_ST > I0 >= 0");
        if (!(stall_torque_nm > 0.0))
            throw std::invalid_argument("motor: stall torque must be positive");
        if (!(nominal_speed_rpm > 0.0))
            throw std::invalid_argument("motor: nominal speed must be positive");
    }
};

/// Battery charge state with immutable-update semantics.
struct BatteryState {
    double energy_j = 133200.0;    // E_b remaining
    double capacity_j = 133200.0;  // initial energy
    double discharge_efficiency = 0.85;  // eta_b
    bool empty = false;

    double percent_remaining() const {
        return capacity_j > 0.0 ? 100.0 * energy_j / capacity_j : 0.0;
    }
    void validate() const {
        if (!(capacity_j > 0.0) || energy_j < 0.0 || energy_j > capacity_j)
            throw std::invalid_argument("battery: require 0 <= E_b <= capacity");
        if (!(discharge_efficiency > 0.0) || discharge_efficiency > 1.0)
            throw std::invalid_argument("battery: efficiency must be in (0,1]");
    }
};

/// Propeller load constants. Torque and thrust are quadratic in rotation
/// speed with a linear advance-ratio rolloff; the two gains are calibrated
/// against the cruise condition (see calibrate_propulsion in trim.hpp).
struct PropellerParams {
    double diameter_m = 0.24;
    double torque_gain = 0.0;        // k_q [N m / (rad/s)^2], calibrated
    double thrust_gain = 0.0;        // k_t [N / (rad/s)^2], calibrated
    double torque_advance_slope = 0.15;  // f(J) = max(0, 1 - slope*J)
    double thrust_advance_slope = 0.15;
    double cruise_throttle = 0.45;   // throttle that sustains level cruise
};

struct TorqueSpeed {
    double torque_nm = 0.0;
    double omega_rpm = 0.0;
};

/// Commanded propeller speed and the aerodynamic load torque it sees.
TorqueSpeed propeller_torque(double throttle, double airspeed_mps,
                             const MotorConstants& motor,
                             const PropellerParams& prop);

struct CurrentVoltage {
    double current_a = 0.0;
    double voltage_v = 0.0;
};

/// Motor electrical state for a given load torque and speed.
/// Throws if torque is negative or beyond stall.
CurrentVoltage motor_current_voltage(double torque_nm, double omega_rpm,
                                     const MotorConstants& motor);

/// One discharge step: E' = E - V*I*dt/eta_b, clamped at zero.
BatteryState update_charge(const BatteryState& battery, double current_a,
                           double voltage_v, double dt_s);

/// Advance ratio J = V / (n D) with n in rev/s; returns 0 at zero speed.
double advance_ratio(double airspeed_mps, double omega_rpm, double diameter_m);

}  // namespace fwsil
