#include "thzsim/atmosphere.hpp"

#include <cmath>
#include <stdexcept>

namespace thzsim::atmosphere {

namespace {

constexpr double kSpeedOfLight = 299792458.0;  // m/s

// Buck-equation constants for saturated water vapour pressure.
constexpr double kQ1 = 6.1121;
constexpr double kQ2 = 1.0007;
constexpr double kQ3 = 3.46e-6;   // 1/hPa
constexpr double kQ4 = 17.502;
constexpr double kQ5 = 273.15;    // K
constexpr double kQ6 = 32.18;     // K

// Cubic background term of the absorption coefficient.
constexpr double kC0 = -6.36e-3;
constexpr double kC1 = 9.06e-14;  // 1/Hz
constexpr double kC2 = -3.94e-25; // 1/Hz^2
constexpr double kC3 = 5.54e-37;  // 1/Hz^3

// Water vapour line centres in wavenumber units [1/cm].
constexpr double kLine1Center = 10.835;
constexpr double kLine2Center = 12.664;

constexpr double kFreqMin = 100e9;
constexpr double kFreqMax = 450e9;

}  // namespace

void AtmosphericConditions::validate() const {
    if (!(temperature_k >= 200.0)) {
        throw std::domain_error("temperature must be >= 200 K");
    }
    if (!(pressure_pa > 0.0)) {
        throw std::domain_error("pressure must be positive");
    }
    if (!(relative_humidity >= 0.0 && relative_humidity <= 100.0)) {
        throw std::domain_error("relative humidity must be in [0, 100]");
    }
}

double saturated_water_vapor_pressure(double temperature_k, double pressure_pa) {
    if (!(temperature_k > kQ6)) {
        throw std::domain_error("temperature must exceed 32.18 K");
    }
    if (!(pressure_pa > 0.0)) {
        throw std::domain_error("pressure must be positive");
    }
    const double pressure_hpa = pressure_pa / 100.0;
    const double exponent = kQ4 * (temperature_k - kQ5) / (temperature_k - kQ6);
    return kQ1 * (kQ2 + kQ3 * pressure_hpa) * std::exp(exponent);
}

double volume_mixing_ratio(const AtmosphericConditions& conditions) {
    conditions.validate();
    const double pw_hpa =
        saturated_water_vapor_pressure(conditions.temperature_k, conditions.pressure_pa);
    const double pressure_hpa = conditions.pressure_pa / 100.0;
    return conditions.relative_humidity / 100.0 * pw_hpa / pressure_hpa;
}

AbsorptionBreakdown absorption_coefficient(double frequency_hz,
                                           const AtmosphericConditions& conditions) {
    if (!(frequency_hz >= kFreqMin && frequency_hz <= kFreqMax)) {
        throw std::domain_error("frequency outside the 100-450 GHz absorption model window");
    }
    const double nu = volume_mixing_ratio(conditions);

    AbsorptionBreakdown out;
    out.mixing_ratio = nu;
    out.g_term = kC0 + kC1 * frequency_hz + kC2 * frequency_hz * frequency_hz +
                 kC3 * frequency_hz * frequency_hz * frequency_hz;

    // Spectral variable is the wavenumber f/(100 c) in 1/cm, which places the
    // resonances near 325 and 380 GHz.
    const double wavenumber = frequency_hz / (100.0 * kSpeedOfLight);

    const double d1 = 0.4093 * nu + 0.0925;
    const double o1 = wavenumber - kLine1Center;
    out.y1_term = 0.2205 * nu * (0.1303 * nu + 0.0294) / (d1 * d1 + o1 * o1);

    const double d2 = 0.537 * nu + 0.0956;
    const double o2 = wavenumber - kLine2Center;
    out.y2_term = 2.014 * nu * (0.1702 * nu + 0.0303) / (d2 * d2 + o2 * o2);

    out.coefficient = out.g_term + out.y1_term + out.y2_term;
    if (out.coefficient < 0.0) {
        // The cubic fit goes negative below its intended range; negative
        // absorption is unphysical.
        out.coefficient = 0.0;
        out.clamped = true;
    }
    return out;
}

double absorption_gain(double frequency_hz, const AtmosphericConditions& conditions,
                       double distance_m) {
    if (!(distance_m >= 0.0)) {
        throw std::domain_error("distance must be non-negative");
    }
    const AbsorptionBreakdown breakdown = absorption_coefficient(frequency_hz, conditions);
    return std::exp(-0.5 * breakdown.coefficient * distance_m);
}

}  // namespace thzsim::atmosphere
