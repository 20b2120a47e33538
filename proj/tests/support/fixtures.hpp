/**
 * \file tests/support/fixtures.hpp
 *
 * \brief Shared test fixture: the reference parameter setup used across
 *  the suite (2.1 GHz carrier, 20 MHz band, -174 dBm/Hz noise, 5 dB
 *  thresholds, 250 m cell radius, 121 MTs/km^2, 43/51.14/48.75 dBm power
 *  levels), with all unit conversions frozen to 17 significant digits
 *  from 30-digit arbitrary-precision arithmetic.
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

#ifndef PPNET_TESTS_SUPPORT_FIXTURES_HPP
#define PPNET_TESTS_SUPPORT_FIXTURES_HPP

#include <ppnet/netmodel.hpp>

namespace ppnet_test {

struct reference_setup
{
    ppnet::system_params<double> params;
    ppnet::power_profile<double> power;
    double lambda_bs;
};

/// Reference setup: all values in SI linear units.
inline reference_setup make_reference_setup()
{
    reference_setup s;
    s.params.beta = 3.5;
    s.params.kappa = 7737.7698504540572;          // (4*pi*2.1e9/3e8)^2
    s.params.bandwidth_hz = 2.0e7;
    s.params.n0_w_per_hz = 3.9810717055349695e-21; // -174 dBm/Hz
    s.params.gamma_d = 3.1622776601683795;         // 5 dB
    s.params.gamma_a = 3.1622776601683795;         // 5 dB
    s.params.alpha = 3.5;
    s.params.lambda_mt = 1.21e-4;                  // 121 per km^2
    s.power.p_tx_w = 19.952623149688796;           // 43 dBm
    s.power.p_circ_w = 130.01695780332903;         // 51.14 dBm
    s.power.p_idle_w = 74.989420933245583;         // 48.75 dBm
    s.lambda_bs = 5.0929581789406507e-6;           // 1/(pi * 250^2)
    return s;
}

/// Frozen eta = kappa * (B_W * N0) * gamma_a for the reference setup.
inline constexpr double reference_eta = 1.9482550190702731e-9;

} // namespace ppnet_test

#endif // PPNET_TESTS_SUPPORT_FIXTURES_HPP
