#include "fwsil/power.hpp"

#include <algorithm>
#include <cmath>

#include "fwsil/math_util.hpp"

namespace fwsil {

double advance_ratio(double airspeed_mps, double omega_rpm, double diameter_m) {
    const double rev_per_s = omega_rpm / 60.0;
    if (rev_per_s <= 1e-9) return 0.0;
    return airspeed_mps / (rev_per_s * diameter_m);
}

TorqueSpeed propeller_torque(double throttle, double airspeed_mps,
                             const MotorConstants& motor,
                             const PropellerParams& prop) {
    if (throttle < 0.0 || throttle > 1.0)
        throw std::invalid_argument("propeller_torque: throttle must be in [0,1]");
    TorqueSpeed out;
    out.omega_rpm = throttle * motor.nominal_speed_rpm;
    if (out.omega_rpm <= 0.0) return out;  // no command, no load
    const double omega_rad = out.omega_rpm * 2.0 * kPi / 60.0;
    const double j = advance_ratio(airspeed_mps, out.omega_rpm, prop.diameter_m);
    const double rolloff = std::max(0.0, 1.0 - prop.torque_advance_slope * j);
    out.torque_nm = prop.torque_gain * omega_rad * omega_rad * rolloff;
    return out;
}

CurrentVoltage motor_current_voltage(double torque_nm, double omega_rpm,
                                     const MotorConstants& motor) {
    if (torque_nm < 0.0 || torque_nm > motor.stall_torque_nm)
        throw std::invalid_argument(
            "motor_current_voltage: torque outside [0, stall torque]");
    CurrentVoltage out;
    // I = I0 + (dI/dtau) tau, written in endpoint form so that tau = tau_ST
    // reproduces the stall current exactly.
    const double ratio = torque_nm / motor.stall_torque_nm;
    out.current_a = motor.no_load_current_a +
                    (motor.stall_current_a - motor.no_load_current_a) * ratio;
    // V = (omega - r1 tau) V0 / omega0
    out.voltage_v = (omega_rpm - motor.speed_torque_slope() * torque_nm) *
                    motor.nominal_voltage_v / motor.nominal_speed_rpm;
    return out;
}

BatteryState update_charge(const BatteryState& battery, double current_a,
                           double voltage_v, double dt_s) {
    if (!(dt_s > 0.0))
        throw std::invalid_argument("update_charge: dt must be positive");
    if (current_a < 0.0 || voltage_v < 0.0)
        throw std::invalid_argument("update_charge: current and voltage must be >= 0");
    BatteryState out = battery;
    const double draw = voltage_v * current_a * dt_s / battery.discharge_efficiency;
    out.energy_j = battery.energy_j - draw;
    if (out.energy_j <= 0.0) {
        out.energy_j = 0.0;
        out.empty = true;
    }
    return out;
}

}  // namespace fwsil
