#pragma once

#include "evacsim/errors.hpp"

namespace evacsim {

/// Van Bogaert coefficient set. Defaults are the worked reference case for a
/// 3025 m² single-compartment ground-floor space.
struct VanBogaertParams {
    double s = 3.0;   // area coefficient
    double i = 0.75;  // compartment coefficient
    double fd = 0.36; // density factor
    double h = 1.0;   // height coefficient
    double r = 1.0;   // risk coefficient
};

/// Maximum admissible evacuation time in seconds: S·I·Fd·H·R·300.
///
/// The product is evaluated as 300·S·I·Fd·H·R in that order; with the default
/// coefficients this yields 243.0 on the nose, matching the reference value
/// (the other association orders land one ulp off).
double van_bogaert_tmax(const VanBogaertParams& p);

/// Predetchenskii & Milinskii inputs. Ph is the horizontal projection area of
/// one person, A the floor area.
struct PmInputs {
    long n = 1000;
    double ph = 0.125;  // m^2 per person
    double area = 3025; // m^2
};

/// Dimensionless crowd density Da = N·Ph/A: the fraction of floor covered by
/// people. Values beyond roughly 0.92 describe a physically jammed crowd;
/// they are returned as-is.
double dimensionless_density(const PmInputs& inp);

/// Horizontal walking speed in m/s at density Da:
/// (112·Da^4 − 380·Da^3 + 434·Da^2 − 217·Da + 57) / 60.
double pm_walking_velocity(double da);

/// Emergency walking speed in m/s: V·(1.49 − 0.36·Da).
double pm_emergency_velocity(double v, double da);

} // namespace evacsim
