#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>

#include "fwsil/power.hpp"

namespace fwsil {

// Dimensionless stability and control derivatives for a small flying wing.
// Rates are normalized the usual way (p b/2V, q c/2V, r b/2V). All numbers
// live in the vehicle config file, not in code.
struct AeroCoefficients {
    // lift / drag / pitch
    double cl0 = 0.0, cl_alpha = 0.0, cl_q = 0.0, cl_elevator = 0.0;
    double cd0 = 0.0, induced_drag_factor = 0.0, cd_elevator = 0.0;
    double cm0 = 0.0, cm_alpha = 0.0, cm_q = 0.0, cm_elevator = 0.0;
    // side force / roll / yaw
    double cy_beta = 0.0, cy_p = 0.0, cy_r = 0.0, cy_aileron = 0.0;
    double croll_beta = 0.0, croll_p = 0.0, croll_r = 0.0, croll_aileron = 0.0;
    double cn_beta = 0.0, cn_p = 0.0, cn_r = 0.0, cn_aileron = 0.0;
};

struct ActuatorLimits {
    double elevon_full_throw_rad = 0.4363323129985824;  // 25 deg
    double elevon_saturation_fraction = 0.20;           // +-20% of full throw

    double elevon_limit_rad() const {
        return elevon_full_throw_rad * elevon_saturation_fraction;
    }
};

struct VehicleParams {
    std::string name = "unnamed";

    double mass_kg = 0.0;
    double jx_kgm2 = 0.0, jy_kgm2 = 0.0, jz_kgm2 = 0.0, jxz_kgm2 = 0.0;
    double gravity_mps2 = 9.80665;
    double air_density_kgpm3 = 1.2133;

    double wing_area_m2 = 0.0;
    double wing_span_m = 0.0;
    double mean_chord_m = 0.0;

    double reference_airspeed_mps = 13.5;
    double reference_altitude_m = 100.0;
    double min_airspeed_mps = 8.0;   // aero model validity range
    double max_airspeed_mps = 22.0;

    AeroCoefficients aero;
    ActuatorLimits actuators;
    MotorConstants motor;
    PropellerParams propeller;
    BatteryState battery;

    double inertia_determinant() const {
        return jx_kgm2 * jz_kgm2 - jxz_kgm2 * jxz_kgm2;
    }

    void validate() const {
        if (!(mass_kg > 0.0)) throw std::invalid_argument("vehicle: mass must be positive");
        if (!(jx_kgm2 > 0.0 && jy_kgm2 > 0.0 && jz_kgm2 > 0.0))
            throw std::invalid_argument("vehicle: principal inertias must be positive");
        if (!(inertia_determinant() > 0.0))
            throw std::invalid_argument("vehicle: inertia matrix not positive definite");
        if (!(wing_area_m2 > 0.0 && wing_span_m > 0.0 && mean_chord_m > 0.0))
            throw std::invalid_argument("vehicle: geometry must be positive");
        if (!(reference_airspeed_mps > 0.0))
            throw std::invalid_argument("vehicle: reference airspeed must be positive");
        motor.validate();
        battery.validate();
    }
};

/// Uncertainty sample indices into the +-30% box (speed, mass, inertia).
struct UncertaintyBox {
    double speed_fraction = 0.3;
    double mass_fraction = 0.3;
    double inertia_fraction = 0.3;

    Eigen::Vector3d half_widths() const {
        return {speed_fraction, mass_fraction, inertia_fraction};
    }
};

/// Scale mass, all inertias and the reference airspeed by (1 + q_i).
/// q = (q_speed, q_mass, q_inertia), each within the uncertainty box.
VehicleParams perturb_model(const VehicleParams& nominal,
                            const Eigen::Vector3d& q,
                            const UncertaintyBox& box = {});

/// Parse a vehicle parameter file (JSON, strict schema) and calibrate the
/// propulsion gains against the cruise condition unless they are pinned.
VehicleParams load_vehicle_params(const std::string& path);
VehicleParams parse_vehicle_params(const std::string& json_text);

}  // namespace fwsil
