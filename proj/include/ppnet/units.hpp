/**
 * \file include/ppnet/units.hpp
 *
 * \brief Conversions between the human units used at the command line
 *  (dBm, dB, GHz, MHz, metres, per-km^2) and the SI linear units the
 *  formula layer works in, plus the free-space path-loss constant for a
 *  given carrier frequency.
 *
 * <hr/>
 *
 * Copyright 2026 The ppnet Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PPNET_UNITS_HPP
#define PPNET_UNITS_HPP

#include <cmath>
#include <numbers>
#include <string>

#include <ppnet/errors.hpp>

namespace ppnet {

/// Radio-engineering speed of light used by the path-loss constant
/// kappa = (4 pi f_c / c)^2; the customary rounded 3e8 m/s.
inline constexpr double speed_of_light_m_per_s = 3.0e8;

/// dBm -> Watts: 10^((x - 30) / 10). -inf maps to 0 W.
inline double dbm_to_watt(double dbm)
{
    return std::pow(10.0, (dbm - 30.0) / 10.0);
}

/// Watts -> dBm. 0 W maps to -inf.
/// \throw domain_error for negative power.
inline double watt_to_dbm(double watt)
{
    if (watt < 0.0 || std::isnan(watt))
    {
        throw domain_error("watt_to_dbm: power must be >= 0 W");
    }
    return 30.0 + 10.0 * std::log10(watt);
}

/// dB -> linear ratio: 10^(x / 10). -inf maps to 0.
inline double db_to_linear(double db)
{
    return std::pow(10.0, db / 10.0);
}

/// Linear ratio -> dB. 0 maps to -inf.
/// \throw domain_error for negative ratios.
inline double linear_to_db(double linear)
{
    if (linear < 0.0 || std::isnan(linear))
    {
        throw domain_error("linear_to_db: ratio must be >= 0");
    }
    return 10.0 * std::log10(linear);
}

inline double ghz_to_hz(double ghz) { return ghz * 1.0e9; }

inline double hz_to_ghz(double hz) { return hz * 1.0e-9; }

inline double mhz_to_hz(double mhz) { return mhz * 1.0e6; }

inline double hz_to_mhz(double hz) { return hz * 1.0e-6; }

inline double per_km2_to_per_m2(double per_km2) { return per_km2 * 1.0e-6; }

inline double per_m2_to_per_km2(double per_m2) { return per_m2 * 1.0e6; }

/// Average cell radius -> density: a disc of radius R per point,
/// lambda = 1 / (pi R^2).
/// \throw domain_error unless R > 0 and finite.
inline double cell_radius_to_density(double radius_m)
{
    if (!(radius_m > 0.0) || !std::isfinite(radius_m))
    {
        throw domain_error(
            "cell_radius_to_density: radius must be positive and finite");
    }
    return 1.0 / (std::numbers::pi * radius_m * radius_m);
}

/// Density -> average cell radius: R = 1 / sqrt(pi lambda).
/// \throw domain_error unless lambda > 0 and finite.
inline double density_to_cell_radius(double lambda_per_m2)
{
    if (!(lambda_per_m2 > 0.0) || !std::isfinite(lambda_per_m2))
    {
        throw domain_error(
            "density_to_cell_radius: density must be positive and finite");
    }
    return 1.0 / std::sqrt(std::numbers::pi * lambda_per_m2);
}

/// Free-space path-loss constant kappa = (4 pi f_c / c)^2 for a carrier
/// frequency in Hz, so that l(r) = kappa r^beta.
/// \throw domain_error unless f_c > 0 and finite.
inline double carrier_kappa(double fc_hz)
{
    if (!(fc_hz > 0.0) || !std::isfinite(fc_hz))
    {
        throw domain_error(
            "carrier_kappa: carrier frequency must be positive and finite");
    }
    const double ratio =
        4.0 * std::numbers::pi * fc_hz / speed_of_light_m_per_s;
    return ratio * ratio;
}

} // namespace ppnet

#endif // PPNET_UNITS_HPP
