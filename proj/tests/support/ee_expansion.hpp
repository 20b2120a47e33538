/**
 * \file tests/support/ee_expansion.hpp
 *
 * \brief Test-side literal expansion of the unified energy-efficiency
 *  formula. The library computes EE as the PSE/P_grid ratio of its
 *  already-tested components; this header re-assembles the closed-form
 *  expansion directly from the model primitives (the per-area BS density
 *  cancels in the ratio):
 *
 *    EE = B_W log2(1 + gamma_D) L Q
 *         / [(1 + Upsilon L) (L (P + Delta_P) + P_idle + M P_circ)].
 *
 *  Agreement between the two evaluation paths validates the
 *  transcription of both.
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

#ifndef PPNET_TESTS_SUPPORT_EE_EXPANSION_HPP
#define PPNET_TESTS_SUPPORT_EE_EXPANSION_HPP

#include <cmath>

#include <ppnet/netmodel.hpp>
#include <ppnet/specfun.hpp>

namespace ppnet_test {

inline double ee_expansion(double p_tx_w,
                           double lambda_bs,
                           const ppnet::system_params<double>& params,
                           const ppnet::power_profile<double>& power,
                           ppnet::load_model load)
{
    const double x = params.lambda_mt / lambda_bs;
    const double big_l = ppnet::aux_L(x, params.alpha);
    const double big_m = ppnet::aux_M(x, load, params.alpha);
    const double ups = ppnet::upsilon(params.beta, params.gamma_d);
    const double q = ppnet::aux_Q(lambda_bs, p_tx_w, params);
    const double numer =
        params.bandwidth_hz * std::log2(1.0 + params.gamma_d) * big_l * q;
    const double denom = (1.0 + ups * big_l)
        * (big_l * (p_tx_w + power.delta_p_w()) + power.p_idle_w
           + big_m * power.p_circ_w);
    return numer / denom;
}

} // namespace ppnet_test

#endif // PPNET_TESTS_SUPPORT_EE_EXPANSION_HPP
