/**
 * \file ppnet/netmodel.hpp
 *
 * \brief Building blocks of the closed-form network model: system and
 *  power-profile records, the load function L and its companion M, the
 *  coverage pilot function Q, first/second derivatives of all three in
 *  transmit power and BS density, the stationary-gap functions whose
 *  roots locate the energy-efficiency optima, the cell-load PMF, and the
 *  BS activity probabilities.
 *
 * All quantities are strictly SI linear (Watts, Hz, per-m^2, linear
 * ratios); dB/dBm handling lives in the command-line front end.
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

#ifndef PPNET_NETMODEL_HPP
#define PPNET_NETMODEL_HPP

#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include <ppnet/errors.hpp>
#include <ppnet/specfun.hpp>

namespace ppnet {

/// BS scheduling discipline: lm1 serves one randomly chosen associated
/// MT with the full band and power; lm2 serves all associated MTs with
/// evenly split band and power.
enum class load_model
{
    lm1 = 1,
    lm2 = 2
};

/**
 * \brief Immutable system-level parameters (SI linear units).
 */
template <typename RealT = double>
struct system_params
{
    RealT beta;         ///< path-loss exponent, > 2
    RealT kappa;        ///< path-loss constant (4 pi f_c / c)^2
    RealT bandwidth_hz; ///< transmission bandwidth [Hz]
    RealT n0_w_per_hz;  ///< noise power spectral density [W/Hz]
    RealT gamma_d;      ///< linear SIR decoding threshold, >= 0
    RealT gamma_a;      ///< linear average-SNR association threshold, >= 0
    RealT alpha = RealT(3.5); ///< Voronoi cell-size shape constant
    RealT lambda_mt;    ///< MT density [1/m^2], > 0

    /// Total noise power sigma_N^2 = B_W * N0 [W].
    RealT noise_w() const
    {
        return bandwidth_hz * n0_w_per_hz;
    }

    /// Association scale eta = kappa * sigma_N^2 * gamma_a [W].
    RealT eta() const
    {
        return kappa * noise_w() * gamma_a;
    }

    /// \throw domain_error if any invariant is violated.
    void validate() const
    {
        if (!(beta > RealT(2)))
        {
            throw domain_error("system_params: beta must be > 2");
        }
        if (!(kappa > RealT(0)))
        {
            throw domain_error("system_params: kappa must be > 0");
        }
        if (!(bandwidth_hz > RealT(0)))
        {
            throw domain_error("system_params: bandwidth_hz must be > 0");
        }
        if (!(n0_w_per_hz > RealT(0)))
        {
            throw domain_error("system_params: n0_w_per_hz must be > 0");
        }
        if (!(gamma_d >= RealT(0)))
        {
            throw domain_error("system_params: gamma_d must be >= 0");
        }
        if (!(gamma_a >= RealT(0)))
        {
            throw domain_error("system_params: gamma_a must be >= 0");
        }
        if (!(alpha > RealT(1)))
        {
            throw domain_error("system_params: alpha must be > 1");
        }
        if (!(lambda_mt > RealT(0)))
        {
            throw domain_error("system_params: lambda_mt must be > 0");
        }
    }
};

/**
 * \brief BS power consumption profile (SI Watts).
 *
 * p_tx_w is the configured default transmit power; operations that sweep
 * or optimize the transmit power take it as an explicit argument.
 */
template <typename RealT = double>
struct power_profile
{
    RealT p_tx_w;   ///< transmit power [W], >= 0
    RealT p_circ_w; ///< circuit power while transmitting [W], >= 0
    RealT p_idle_w; ///< idle power [W], 0 <= p_idle_w <= p_circ_w

    /// Derived Delta_P = p_circ_w - p_idle_w >= 0.
    RealT delta_p_w() const
    {
        return p_circ_w - p_idle_w;
    }

    /// \throw domain_error if any invariant is violated.
    void validate() const
    {
        if (!(p_tx_w >= RealT(0)))
        {
            throw domain_error("power_profile: p_tx_w must be >= 0");
        }
        if (!(p_idle_w >= RealT(0)))
        {
            throw domain_error("power_profile: p_idle_w must be >= 0");
        }
        if (!(p_idle_w <= p_circ_w))
        {
            throw domain_error("power_profile: requires p_idle_w <= p_circ_w");
        }
    }
};

/**
 * \brief Probability that a BS is in transmission mode:
 *  L(x) = 1 - (1 + x/alpha)^(-alpha), with x = lambda_MT/lambda_BS.
 *
 * Evaluated as -expm1(-alpha*log1p(x/alpha)) to keep full relative
 * precision for small x.
 *
 * \param x MT-to-BS density ratio, >= 0
 * \param alpha cell-size shape constant, > 1
 * \return value in [0, 1), increasing in x, bounded above by x
 */
template <typename RealT>
RealT aux_L(RealT x, RealT alpha)
{
    if (!(x >= RealT(0)))
    {
        throw domain_error("aux_L: x must be >= 0");
    }
    if (!(alpha > RealT(1)))
    {
        throw domain_error("aux_L: alpha must be > 1");
    }
    return -std::expm1(-alpha * std::log1p(x / alpha));
}

/**
 * \brief Load-model companion function: 0 under lm1, x - L(x) under lm2.
 *
 * Under lm2 it is the mean number of served MTs per BS in excess of the
 * activity probability, which is what multiplies the circuit power.
 */
template <typename RealT>
RealT aux_M(RealT x, load_model load, RealT alpha)
{
    if (load == load_model::lm1)
    {
        return RealT(0);
    }
    return x - aux_L(x, alpha);
}

namespace detail {

/// Exponent T of the pilot function Q = 1 - exp(-T):
/// T = pi * lambda_BS * (P/eta)^(2/beta) * (1 + Upsilon * L(lambda_MT/lambda_BS)).
/// Requires gamma_a > 0, lambda_bs > 0, p_tx_w > 0.
template <typename RealT>
RealT pilot_exponent(RealT lambda_bs,
                     RealT p_tx_w,
                     const system_params<RealT>& params)
{
    const RealT big_l = aux_L(params.lambda_mt / lambda_bs, params.alpha);
    const RealT ups = upsilon(params.beta, params.gamma_d);
    return std::numbers::pi_v<RealT> * lambda_bs
         * std::pow(p_tx_w / params.eta(), RealT(2) / params.beta)
         * (RealT(1) + ups * big_l);
}

} // namespace detail

/**
 * \brief Coverage pilot function
 *  Q = 1 - exp(-pi lambda_BS (P/eta)^(2/beta) (1 + Upsilon L)).
 *
 * Conventions: Q = 0 at lambda_bs = 0 or p_tx_w = 0 (limit conventions);
 * Q = 1 when gamma_a = 0 for lambda_bs > 0 (no association constraint).
 *
 * \return probability in [0, 1]
 */
template <typename RealT>
RealT aux_Q(RealT lambda_bs, RealT p_tx_w, const system_params<RealT>& params)
{
    params.validate();
    if (!(lambda_bs >= RealT(0)))
    {
        throw domain_error("aux_Q: lambda_bs must be >= 0");
    }
    if (!(p_tx_w >= RealT(0)))
    {
        throw domain_error("aux_Q: p_tx_w must be >= 0");
    }
    if (lambda_bs == RealT(0))
    {
        return RealT(0);
    }
    if (params.gamma_a == RealT(0))
    {
        return RealT(1);
    }
    if (p_tx_w == RealT(0))
    {
        return RealT(0);
    }
    return -std::expm1(-detail::pilot_exponent(lambda_bs, p_tx_w, params));
}

/**
 * \brief First and second derivatives of Q in the transmit power.
 *
 * With T' = (2/beta) T / P:
 *   dQ/dP   = T' exp(-T)              >= 0,
 *   d2Q/dP2 = dQ/dP * ((2/beta - 1)/P - T')  <= 0.
 *
 * Convention: (0, 0) when gamma_a = 0 (Q constant at 1) or lambda_bs = 0.
 *
 * \throw domain_error at p_tx_w <= 0 (power-law singularity of the
 *  derivative formulas) unless the gamma_a = 0 convention applies first.
 */
template <typename RealT>
std::pair<RealT, RealT> aux_Q_dP(RealT lambda_bs,
                                 RealT p_tx_w,
                                 const system_params<RealT>& params)
{
    params.validate();
    if (params.gamma_a == RealT(0))
    {
        return {RealT(0), RealT(0)};
    }
    if (!(p_tx_w > RealT(0)))
    {
        throw domain_error("aux_Q_dP: p_tx_w must be > 0");
    }
    if (!(lambda_bs >= RealT(0)))
    {
        throw domain_error("aux_Q_dP: lambda_bs must be >= 0");
    }
    if (lambda_bs == RealT(0))
    {
        return {RealT(0), RealT(0)};
    }
    const RealT t = detail::pilot_exponent(lambda_bs, p_tx_w, params);
    const RealT tp = (RealT(2) / params.beta) * t / p_tx_w;
    const RealT d1 = tp * std::exp(-t);
    const RealT d2 = d1 * ((RealT(2) / params.beta - RealT(1)) / p_tx_w - tp);
    return {d1, d2};
}

/**
 * \brief First and second derivatives of L(lambda_MT/lambda_BS) in the
 *  BS density:
 *   dL/dl   = -(lambda_MT/l^2) (1 + x/alpha)^-(alpha+1)      <= 0,
 *   d2L/dl2 = (lambda_MT/l^3) (1 + x/alpha)^-(alpha+1)
 *             * [2 - ((1+alpha)/alpha) x / (1 + x/alpha)],
 * whose sign flips exactly at x = 2 alpha/(alpha - 1).
 */
template <typename RealT>
std::pair<RealT, RealT> aux_L_dlambda(RealT lambda_bs,
                                      RealT lambda_mt,
                                      RealT alpha)
{
    if (!(lambda_bs > RealT(0)))
    {
        throw domain_error("aux_L_dlambda: lambda_bs must be > 0");
    }
    if (!(lambda_mt >= RealT(0)))
    {
        throw domain_error("aux_L_dlambda: lambda_mt must be >= 0");
    }
    if (!(alpha > RealT(1)))
    {
        throw domain_error("aux_L_dlambda: alpha must be > 1");
    }
    const RealT x = lambda_mt / lambda_bs;
    const RealT v = std::pow(RealT(1) + x / alpha, -(alpha + RealT(1)));
    const RealT d1 = -(lambda_mt / (lambda_bs * lambda_bs)) * v;
    const RealT bracket = RealT(2)
        - ((RealT(1) + alpha) / alpha) * x / (RealT(1) + x / alpha);
    const RealT d2 =
        (lambda_mt / (lambda_bs * lambda_bs * lambda_bs)) * v * bracket;
    return {d1, d2};
}

/**
 * \brief First and second derivatives of M in the BS density:
 *  (0, 0) under lm1; under lm2
 *   dM/dl   = -(lambda_MT/l^2) [1 - (1 + x/alpha)^-(alpha+1)]  <= 0,
 *   d2M/dl2 = 2 (lambda_MT/l^3) [1 - (1 + x/alpha)^-(alpha+1)]
 *             + ((1+alpha)/alpha) (lambda_MT^2/l^4)
 *               (1 + x/alpha)^-(alpha+2)                        >= 0.
 */
template <typename RealT>
std::pair<RealT, RealT> aux_M_dlambda(RealT lambda_bs,
                                      RealT lambda_mt,
                                      RealT alpha,
                                      load_model load)
{
    if (load == load_model::lm1)
    {
        return {RealT(0), RealT(0)};
    }
    if (!(lambda_bs > RealT(0)))
    {
        throw domain_error("aux_M_dlambda: lambda_bs must be > 0");
    }
    if (!(lambda_mt >= RealT(0)))
    {
        throw domain_error("aux_M_dlambda: lambda_mt must be >= 0");
    }
    if (!(alpha > RealT(1)))
    {
        throw domain_error("aux_M_dlambda: alpha must be > 1");
    }
    const RealT x = lambda_mt / lambda_bs;
    const RealT l2 = lambda_bs * lambda_bs;
    const RealT v = std::pow(RealT(1) + x / alpha, -(alpha + RealT(1)));
    const RealT w = std::pow(RealT(1) + x / alpha, -(alpha + RealT(2)));
    const RealT g = RealT(1) - v;
    const RealT d1 = -(lambda_mt / l2) * g;
    const RealT d2 = RealT(2) * (lambda_mt / (l2 * lambda_bs)) * g
        + ((RealT(1) + alpha) / alpha)
              * (lambda_mt * lambda_mt / (l2 * l2)) * w;
    return {d1, d2};
}

/**
 * \brief Derivative of Q in the BS density:
 *  dQ/dl = pi (P/eta)^(2/beta) [1 + Upsilon L + Upsilon l dL/dl] exp(-T),
 * non-negative because L + l dL/dl >= 0.
 *
 * Convention: 0 when gamma_a = 0 (Q constant at 1).
 */
template <typename RealT>
RealT aux_Q_dlambda(RealT lambda_bs,
                    RealT p_tx_w,
                    const system_params<RealT>& params)
{
    params.validate();
    if (params.gamma_a == RealT(0))
    {
        return RealT(0);
    }
    if (!(lambda_bs > RealT(0)))
    {
        throw domain_error("aux_Q_dlambda: lambda_bs must be > 0");
    }
    if (!(p_tx_w > RealT(0)))
    {
        throw domain_error("aux_Q_dlambda: p_tx_w must be > 0");
    }
    const RealT big_l = aux_L(params.lambda_mt / lambda_bs, params.alpha);
    const RealT ld =
        aux_L_dlambda(lambda_bs, params.lambda_mt, params.alpha).first;
    const RealT ups = upsilon(params.beta, params.gamma_d);
    const RealT scale =
        std::pow(p_tx_w / params.eta(), RealT(2) / params.beta);
    const RealT t = std::numbers::pi_v<RealT> * lambda_bs * scale
        * (RealT(1) + ups * big_l);
    const RealT dt = std::numbers::pi_v<RealT> * scale
        * (RealT(1) + ups * big_l + ups * lambda_bs * ld);
    return std::exp(-t) * dt;
}

/**
 * \brief Signed stationarity gap in the transmit power.
 *
 * The stationary-value function is
 *   S_P(P) = L [Q/Q'_P - (P + Delta_P)] - P_circ M,
 * and the unique energy-efficiency stationary point P* solves
 * S_P(P*) = P_idle. The returned gap is
 *
 *   gap(P) = P_idle - S_P(P),
 *
 * which carries the sign of dEE/dP: positive below P*, negative above it
 * (S_P is increasing). Q/Q'_P is evaluated in the cancellation-free form
 * P (beta/2) expm1(T)/T.
 *
 * When gamma_a = 0, Q is constant at 1, EE is strictly decreasing in P
 * and the gap is -infinity everywhere.
 */
template <typename RealT>
RealT stationary_gap_power(RealT p_tx_w,
                           RealT lambda_bs,
                           const system_params<RealT>& params,
                           const power_profile<RealT>& power,
                           load_model load)
{
    params.validate();
    power.validate();
    if (!(p_tx_w > RealT(0)))
    {
        throw domain_error("stationary_gap_power: p_tx_w must be > 0");
    }
    if (!(lambda_bs > RealT(0)))
    {
        throw domain_error("stationary_gap_power: lambda_bs must be > 0");
    }
    if (params.gamma_a == RealT(0))
    {
        return -std::numeric_limits<RealT>::infinity();
    }
    const RealT x = params.lambda_mt / lambda_bs;
    const RealT big_l = aux_L(x, params.alpha);
    const RealT big_m = aux_M(x, load, params.alpha);
    const RealT t = detail::pilot_exponent(lambda_bs, p_tx_w, params);
    const RealT q_over_qp =
        p_tx_w * (params.beta / RealT(2)) * std::expm1(t) / t;
    const RealT s_p =
        big_l * (q_over_qp - (p_tx_w + power.delta_p_w()))
        - power.p_circ_w * big_m;
    return power.p_idle_w - s_p;
}

/**
 * \brief Signed stationarity gap in the BS density.
 *
 * The stationary-value function is
 *   S_D(l) = (P_circ/L') (L M' - L' M) + Upsilon L^2 (P + Delta_P)
 *          + Upsilon P_circ L^2 (M'/L')
 *          - [L Q'_l / (L' Q)] (1 + Upsilon L)
 *            [L (P + Delta_P) + P_idle + P_circ M],
 * and the unique stationary point l* solves S_D(l*) = P_idle. The
 * returned gap is
 *
 *   gap(l) = S_D(l) - P_idle,
 *
 * which carries the sign of dEE/dl: positive below l*, negative above.
 */
template <typename RealT>
RealT stationary_gap_density(RealT lambda_bs,
                             RealT p_tx_w,
                             const system_params<RealT>& params,
                             const power_profile<RealT>& power,
                             load_model load)
{
    params.validate();
    power.validate();
    if (!(lambda_bs > RealT(0)))
    {
        throw domain_error("stationary_gap_density: lambda_bs must be > 0");
    }
    if (!(p_tx_w > RealT(0)))
    {
        throw domain_error("stationary_gap_density: p_tx_w must be > 0");
    }
    const RealT x = params.lambda_mt / lambda_bs;
    const RealT big_l = aux_L(x, params.alpha);
    const RealT big_m = aux_M(x, load, params.alpha);
    const RealT ld =
        aux_L_dlambda(lambda_bs, params.lambda_mt, params.alpha).first;
    const RealT md =
        aux_M_dlambda(lambda_bs, params.lambda_mt, params.alpha, load).first;
    const RealT ups = upsilon(params.beta, params.gamma_d);
    const RealT q = aux_Q(lambda_bs, p_tx_w, params);
    const RealT qd = aux_Q_dlambda(lambda_bs, p_tx_w, params);
    const RealT p_eff = p_tx_w + power.delta_p_w();

    const RealT term1 =
        (power.p_circ_w / ld) * (big_l * md - ld * big_m);
    const RealT term2 = ups * big_l * big_l * p_eff;
    const RealT term3 = ups * power.p_circ_w * big_l * big_l * (md / ld);
    const RealT term4 = -(big_l * qd / (ld * q))
        * (RealT(1) + ups * big_l)
        * (big_l * p_eff + power.p_idle_w + power.p_circ_w * big_m);
    const RealT s_d = term1 + term2 + term3 + term4;
    return s_d - power.p_idle_w;
}

/**
 * \brief Closed-form PMF of the number of other MTs sharing the typical
 *  MT's cell:
 *
 *   pmf(u) = alpha^(alpha+1) Gamma(u + alpha + 1) r^u
 *            / [Gamma(alpha+1) Gamma(u+1) (alpha + r)^(u+alpha+1)],
 *
 * with r = lambda_MT/lambda_BS, evaluated in log-space for overflow
 * safety. It satisfies Sum_u pmf(u)/(u+1) = L(r)/r.
 *
 * \param u number of other MTs in the cell, >= 0
 * \param ratio MT-to-BS density ratio r, >= 0
 * \param alpha cell-size shape constant, > 1
 */
template <typename RealT>
RealT pmf_cell_load(int u, RealT ratio, RealT alpha)
{
    if (u < 0)
    {
        throw domain_error("pmf_cell_load: u must be >= 0");
    }
    if (!(ratio >= RealT(0)))
    {
        throw domain_error("pmf_cell_load: ratio must be >= 0");
    }
    if (!(alpha > RealT(1)))
    {
        throw domain_error("pmf_cell_load: alpha must be > 1");
    }
    if (ratio == RealT(0))
    {
        return u == 0 ? RealT(1) : RealT(0);
    }
    const RealT ru = static_cast<RealT>(u);
    const RealT lp = (alpha + RealT(1)) * std::log(alpha)
        + log_gamma(ru + alpha + RealT(1)) + ru * std::log(ratio)
        - log_gamma(alpha + RealT(1)) - log_gamma(ru + RealT(1))
        - (ru + alpha + RealT(1)) * std::log(alpha + ratio);
    return std::exp(lp);
}

/**
 * \brief BS activity probabilities: (transmission mode, idle mode)
 *  = (L(ratio), 1 - L(ratio)).
 */
template <typename RealT>
std::pair<RealT, RealT> tx_idle_probabilities(RealT ratio, RealT alpha)
{
    const RealT big_l = aux_L(ratio, alpha);
    return {big_l, RealT(1) - big_l};
}

} // namespace ppnet

#endif // PPNET_NETMODEL_HPP
