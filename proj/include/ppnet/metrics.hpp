/**
 * \file ppnet/metrics.hpp
 *
 * \brief Closed-form network metrics: coverage probability, potential
 *  spectral efficiency (PSE) under the association-aware model and under
 *  the fully-loaded baseline, grid power consumption per load model, and
 *  energy efficiency.
 *
 * Coverage is reported for the "typical MT is selected" branch; the
 * scheduling probability is folded into the PSE, never double-counted.
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

#ifndef PPNET_METRICS_HPP
#define PPNET_METRICS_HPP

#include <cmath>

#include <ppnet/errors.hpp>
#include <ppnet/netmodel.hpp>
#include <ppnet/specfun.hpp>

namespace ppnet {

/**
 * \brief Bundle of the four closed-form network metrics at one
 *  operating point.
 */
template <typename RealT = double>
struct network_metrics
{
    RealT coverage;            ///< probability in [0, 1]
    RealT pse_bits_per_sec_m2; ///< potential spectral efficiency
    RealT p_grid_w_per_m2;     ///< network power consumption per area
    RealT ee_bits_per_joule;   ///< energy efficiency = PSE / P_grid
};

/**
 * \brief Coverage probability of the typical MT:
 *  P_cov = Q(lambda_BS, P_tx) / (1 + Upsilon L(lambda_MT/lambda_BS)).
 *
 * \return probability in [0, 1]
 */
template <typename RealT>
RealT coverage_probability(RealT p_tx_w,
                           RealT lambda_bs,
                           const system_params<RealT>& params)
{
    const RealT q = aux_Q(lambda_bs, p_tx_w, params);
    if (q == RealT(0))
    {
        return RealT(0);
    }
    const RealT big_l = aux_L(params.lambda_mt / lambda_bs, params.alpha);
    const RealT ups = upsilon(params.beta, params.gamma_d);
    return q / (RealT(1) + ups * big_l);
}

/**
 * \brief Potential spectral efficiency under the association-aware
 *  model:
 *  PSE = B_W log2(1+gamma_D) lambda_BS L / (1 + Upsilon L) * Q,
 * identical for both load models.
 *
 * \return bit/s/m^2
 */
template <typename RealT>
RealT pse(RealT p_tx_w, RealT lambda_bs, const system_params<RealT>& params)
{
    const RealT q = aux_Q(lambda_bs, p_tx_w, params);
    if (q == RealT(0))
    {
        return RealT(0);
    }
    const RealT big_l = aux_L(params.lambda_mt / lambda_bs, params.alpha);
    const RealT ups = upsilon(params.beta, params.gamma_d);
    return params.bandwidth_hz * std::log2(RealT(1) + params.gamma_d)
         * lambda_bs * big_l / (RealT(1) + ups * big_l) * q;
}

/**
 * \brief Fully-loaded interference-limited baseline PSE:
 *  PSE_0 = lambda_BS B_W log2(1+gamma_D) / (1 + Upsilon),
 * independent of the transmit power.
 *
 * \return bit/s/m^2
 */
template <typename RealT>
RealT pse_baseline(RealT lambda_bs, const system_params<RealT>& params)
{
    params.validate();
    if (!(lambda_bs >= RealT(0)))
    {
        throw domain_error("pse_baseline: lambda_bs must be >= 0");
    }
    const RealT ups = upsilon(params.beta, params.gamma_d);
    return lambda_bs * params.bandwidth_hz
         * std::log2(RealT(1) + params.gamma_d) / (RealT(1) + ups);
}

/**
 * \brief Network power consumption per unit area.
 *
 * lm1: lambda_BS (P_tx + P_circ) L + lambda_BS P_idle (1 - L);
 * lm2: lambda_BS P_tx L + lambda_MT P_circ + lambda_BS P_idle (1 - L).
 *
 * \return Watts/m^2, > 0 whenever P_idle > 0
 */
template <typename RealT>
RealT power_grid(RealT p_tx_w,
                 RealT lambda_bs,
                 const system_params<RealT>& params,
                 const power_profile<RealT>& power,
                 load_model load)
{
    params.validate();
    power.validate();
    if (!(p_tx_w >= RealT(0)))
    {
        throw domain_error("power_grid: p_tx_w must be >= 0");
    }
    if (!(lambda_bs >= RealT(0)))
    {
        throw domain_error("power_grid: lambda_bs must be >= 0");
    }
    if (lambda_bs == RealT(0))
    {
        return load == load_model::lm2 ? params.lambda_mt * power.p_circ_w
                                       : RealT(0);
    }
    const RealT big_l = aux_L(params.lambda_mt / lambda_bs, params.alpha);
    const RealT idle = lambda_bs * power.p_idle_w * (RealT(1) - big_l);
    if (load == load_model::lm1)
    {
        return lambda_bs * (p_tx_w + power.p_circ_w) * big_l + idle;
    }
    return lambda_bs * p_tx_w * big_l + params.lambda_mt * power.p_circ_w
         + idle;
}

/**
 * \brief Energy efficiency EE = PSE / P_grid.
 *
 * \return bit/Joule
 * \throw degenerate_network_error if P_grid = 0 (requires P_idle = 0 and
 *  an idle network), where the ratio is undefined
 */
template <typename RealT>
RealT energy_efficiency(RealT p_tx_w,
                        RealT lambda_bs,
                        const system_params<RealT>& params,
                        const power_profile<RealT>& power,
                        load_model load)
{
    const RealT denom = power_grid(p_tx_w, lambda_bs, params, power, load);
    if (denom == RealT(0))
    {
        throw degenerate_network_error(
            "energy_efficiency: network consumes no power");
    }
    return pse(p_tx_w, lambda_bs, params) / denom;
}

/**
 * \brief Evaluate all four metrics at one operating point.
 */
template <typename RealT>
network_metrics<RealT> evaluate_metrics(RealT p_tx_w,
                                        RealT lambda_bs,
                                        const system_params<RealT>& params,
                                        const power_profile<RealT>& power,
                                        load_model load)
{
    network_metrics<RealT> m;
    m.coverage = coverage_probability(p_tx_w, lambda_bs, params);
    m.pse_bits_per_sec_m2 = pse(p_tx_w, lambda_bs, params);
    m.p_grid_w_per_m2 = power_grid(p_tx_w, lambda_bs, params, power, load);
    m.ee_bits_per_joule =
        energy_efficiency(p_tx_w, lambda_bs, params, power, load);
    return m;
}

} // namespace ppnet

#endif // PPNET_METRICS_HPP
