#ifndef THZSIM_ATMOSPHERE_HPP
#define THZSIM_ATMOSPHERE_HPP

namespace thzsim::atmosphere {

/// Ambient medium state feeding the water-vapour absorption model.
struct AtmosphericConditions {
    double temperature_k = 296.0;       // absolute temperature [K]
    double pressure_pa = 101325.0;      // ambient pressure [Pa]
    double relative_humidity = 50.0;    // [%], 0..100

    void validate() const;
};

/// Term-by-term decomposition of the absorption coefficient [1/m].
struct AbsorptionBreakdown {
    double g_term = 0.0;
    double y1_term = 0.0;
    double y2_term = 0.0;
    double coefficient = 0.0;   // g_term + y1_term + y2_term, clamped at 0
    double mixing_ratio = 0.0;
    bool clamped = false;       // set when the raw sum was negative
};

// Saturated water vapour partial pressure [hPa]. Pressure input in Pa.
double saturated_water_vapor_pressure(double temperature_k, double pressure_pa);

// Water vapour volume mixing ratio, dimensionless.
double volume_mixing_ratio(const AtmosphericConditions& conditions);

// Absorption coefficient at a carrier frequency [Hz]. Valid 100..450 GHz.
AbsorptionBreakdown absorption_coefficient(double frequency_hz,
                                           const AtmosphericConditions& conditions);

// Amplitude gain exp(-k_a d / 2) over a path of length distance_m.
double absorption_gain(double frequency_hz, const AtmosphericConditions& conditions,
                       double distance_m);

}  // namespace thzsim::atmosphere

#endif
