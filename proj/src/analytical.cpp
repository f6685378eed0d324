#include "evacsim/analytical.hpp"

#include <string>

namespace evacsim {

double van_bogaert_tmax(const VanBogaertParams& p) {
    auto check = [](double v, const char* name) {
        if (v < 0.0)
            throw NegativeCoefficient(std::string(name) + " must be >= 0, got " + std::to_string(v));
    };
    check(p.s, "S");
    check(p.i, "I");
    check(p.fd, "Fd");
    check(p.h, "H");
    check(p.r, "R");
    return 300.0 * p.s * p.i * p.fd * p.h * p.r;
}

double dimensionless_density(const PmInputs& inp) {
    if (inp.area <= 0.0)
        throw NonPositiveArea("floor area must be > 0 m^2, got " + std::to_string(inp.area));
    if (inp.ph <= 0.0)
        throw NonPositiveArea("per-person projection area must be > 0 m^2, got " +
                              std::to_string(inp.ph));
    if (inp.n < 0)
        throw NegativeDensity("occupant count must be >= 0, got " + std::to_string(inp.n));
    return static_cast<double>(inp.n) * inp.ph / inp.area;
}

double pm_walking_velocity(double da) {
    if (da < 0.0)
        throw NegativeDensity("density must be >= 0, got " + std::to_string(da));
    return (112.0 * da * da * da * da - 380.0 * da * da * da + 434.0 * da * da - 217.0 * da +
            57.0) /
           60.0;
}

double pm_emergency_velocity(double v, double da) {
    if (v < 0.0)
        throw NegativeDensity("velocity must be >= 0, got " + std::to_string(v));
    if (da < 0.0)
        throw NegativeDensity("density must be >= 0, got " + std::to_string(da));
    return v * (1.49 - 0.36 * da);
}

} // namespace evacsim
