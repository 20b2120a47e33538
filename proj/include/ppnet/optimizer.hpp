/**
 * \file ppnet/optimizer.hpp
 *
 * \brief Energy-efficiency optimizers built on the stationary-gap
 *  functions: the 1-D solver for the optimal transmit power at fixed BS
 *  density, its mirror for the optimal density at fixed power, the
 *  alternating joint optimizer, shift-direction predictors for how an
 *  optimum moves when the other coordinate changes, and an exhaustive
 *  log-grid search used as a cross-validation oracle.
 *
 * Every optimum is the unique stationary point of a unimodal, strictly
 * pseudo-concave slice of the EE surface, clamped into a box:
 *
 *     P_opt = max(p_min, min(P*, p_max)),
 *     l_opt = max(lambda_min, min(l*, lambda_max)),
 *
 * where P* solves S_P(P*) = P_idle and l* solves S_D(l*) = P_idle. The
 * solvers locate the sign change of the corresponding gap function
 * (positive below the root, negative above), bisect, and polish with
 * Newton steps driven by a finite-difference slope.
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

#ifndef PPNET_OPTIMIZER_HPP
#define PPNET_OPTIMIZER_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <ppnet/errors.hpp>
#include <ppnet/metrics.hpp>
#include <ppnet/netmodel.hpp>

namespace ppnet {

/// Which box edge (if any) the reported optimum was clamped to.
enum class clamp_status
{
    interior,
    at_p_min,
    at_p_max,
    at_lambda_min,
    at_lambda_max,
    multiple_clamps
};

/// Which coordinates an exhaustive grid search scans.
enum class grid_problem
{
    power_only,
    density_only,
    joint
};

/// Grid resolution per free dimension; unused dimensions are ignored.
struct grid_size
{
    std::size_t n_p = 0;
    std::size_t n_lambda = 0;
};

/**
 * \brief Box constraints and solver tolerances.
 *
 * root_tol is relative: the 1-D solvers stop once the final Newton step
 * moves the log of the coordinate by less than root_tol and the gap
 * residual has dropped below root_tol * P_idle (absolute fallback of
 * root_tol * 1 W when the profile has no idle draw). alt_eps bounds the
 * relative EE change between alternating rounds.
 */
template <typename RealT = double>
struct optimization_bounds
{
    RealT p_min_w = RealT(1e-5);
    RealT p_max_w = RealT(1e3);
    RealT lambda_min = RealT(1e-8);
    RealT lambda_max = RealT(1e-2);
    RealT root_tol = RealT(1e-10);
    RealT alt_eps = RealT(1e-6);
    int max_alt_iters = 100;

    /// \throw domain_error if any invariant is violated.
    void validate() const
    {
        if (!(p_min_w > RealT(0)) || !(p_min_w < p_max_w)
            || !std::isfinite(p_max_w))
        {
            throw domain_error(
                "optimization_bounds: requires 0 < p_min_w < p_max_w");
        }
        if (!(lambda_min > RealT(0)) || !(lambda_min < lambda_max)
            || !std::isfinite(lambda_max))
        {
            throw domain_error(
                "optimization_bounds: requires 0 < lambda_min < lambda_max");
        }
        if (!(root_tol > RealT(0)) || !(alt_eps > RealT(0)))
        {
            throw domain_error(
                "optimization_bounds: tolerances must be > 0");
        }
        if (max_alt_iters < 1)
        {
            throw domain_error(
                "optimization_bounds: max_alt_iters must be >= 1");
        }
    }
};

/**
 * \brief Result of any optimizer run.
 *
 * The report always carries a full operating point: a power-only solve
 * echoes the caller's density in lambda_opt (and vice versa). iterations
 * counts stationary-gap evaluations for the 1-D solvers, alternating
 * rounds for the joint solver, and objective evaluations for the grid
 * search. ee_trace holds one EE value per alternating round and is
 * non-decreasing; one-shot solvers store the single final value.
 */
template <typename RealT = double>
struct optimum_report
{
    RealT p_opt_w = RealT(0);
    RealT lambda_opt = RealT(0);
    RealT ee_opt = RealT(0);
    int iterations = 0;
    clamp_status clamped = clamp_status::interior;
    std::vector<RealT> ee_trace{};
};

/// Alternation hit max_alt_iters before meeting alt_eps; carries the
/// best operating point reached (narrowed to double precision).
class max_iterations_error : public non_convergent_error
{
public:
    max_iterations_error(const std::string& what_arg,
                         optimum_report<double> best)
        : non_convergent_error(what_arg), best_so_far(std::move(best))
    {
    }

    optimum_report<double> best_so_far;
};

namespace detail {

/// Where the stationary point sits relative to the search box.
enum class root_side
{
    interior,
    below_box,
    above_box
};

template <typename RealT>
struct root_location
{
    RealT x = RealT(0); ///< the root itself (interior case only)
    root_side side = root_side::interior;
    int evals = 0; ///< stationary-gap evaluations spent
};

/// Gap residuals are measured in Watts against the idle draw; a
/// profile with no idle draw falls back to an absolute 1 W scale.
template <typename RealT>
RealT residual_tolerance(const power_profile<RealT>& power, RealT root_tol)
{
    const RealT scale =
        power.p_idle_w > RealT(0) ? power.p_idle_w : RealT(1);
    return root_tol * scale;
}

/**
 * \brief Locates the root of a below-root-positive gap function.
 *
 * Evaluates the gap at the box edges first. A sign change inside the
 * box is refined by log-space bisection followed by Newton polish with
 * a central finite-difference slope (escaped or degenerate Newton steps
 * fall back to the bracket midpoint). When both edges share a sign, the
 * bracket expands outward by factors of 10 — at most six decades — only
 * to confirm that a sign change exists; the caller then clamps to the
 * nearer edge. No sign change within [lo/1e6, hi*1e6], or an
 * inconsistent sign pattern, signals inconsistent parameters.
 *
 * \throw bracket_failure_error as described above.
 * \throw non_convergent_error if refinement stalls (not expected for
 *  the smooth gap functions this library produces).
 */
template <typename RealT, typename GapFn>
root_location<RealT> locate_stationary(GapFn&& gap_at,
                                       RealT lo,
                                       RealT hi,
                                       RealT rel_tol,
                                       RealT res_tol,
                                       const char* who)
{
    root_location<RealT> loc;
    auto eval = [&](RealT x) {
        ++loc.evals;
        const RealT g = gap_at(x);
        if (std::isnan(g))
        {
            throw bracket_failure_error(
                std::string(who)
                + ": stationary gap evaluated to NaN "
                  "(inconsistent parameters)");
        }
        return g;
    };

    const RealT g_lo = eval(lo);
    const RealT g_hi = eval(hi);

    if (g_lo == RealT(0) && g_hi < RealT(0))
    {
        loc.x = lo;
        return loc;
    }
    if (g_lo > RealT(0) && g_hi == RealT(0))
    {
        loc.x = hi;
        return loc;
    }
    if (g_lo < RealT(0) && g_hi < RealT(0))
    {
        // Root below the box: confirm the sign change exists, then let
        // the caller clamp to the lower edge.
        for (int k = 1; k <= 6; ++k)
        {
            if (eval(lo * std::pow(RealT(10), RealT(-k))) > RealT(0))
            {
                loc.side = root_side::below_box;
                return loc;
            }
        }
        throw bracket_failure_error(
            std::string(who)
            + ": no sign change of the stationary gap within six decades "
              "below the box");
    }
    if (g_lo > RealT(0) && g_hi > RealT(0))
    {
        for (int k = 1; k <= 6; ++k)
        {
            if (eval(hi * std::pow(RealT(10), RealT(k))) < RealT(0))
            {
                loc.side = root_side::above_box;
                return loc;
            }
        }
        throw bracket_failure_error(
            std::string(who)
            + ": no sign change of the stationary gap within six decades "
              "above the box");
    }
    if (!(g_lo > RealT(0) && g_hi < RealT(0)))
    {
        // Covers (-,+), (0,+), (-,0) and (0,0): incompatible with a
        // unique below-root-positive sign structure.
        throw bracket_failure_error(
            std::string(who)
            + ": gap signs contradict the below-root-positive structure");
    }

    // Interior root. Work on t = log(x) so tolerances are relative.
    RealT ta = std::log(lo);
    RealT tb = std::log(hi);

    // Phase 1: bisection down to a hand-span bracket.
    while (tb - ta > RealT(0.02))
    {
        const RealT tm = (ta + tb) / RealT(2);
        const RealT gm = eval(std::exp(tm));
        if (gm == RealT(0))
        {
            loc.x = std::exp(tm);
            return loc;
        }
        (gm > RealT(0) ? ta : tb) = tm;
    }

    // Phase 2: Newton polish with a central finite-difference slope.
    const RealT h = RealT(1e-6);
    RealT t = (ta + tb) / RealT(2);
    RealT g = eval(std::exp(t));
    for (int it = 0; it < 80; ++it)
    {
        if (g == RealT(0))
        {
            loc.x = std::exp(t);
            return loc;
        }
        (g > RealT(0) ? ta : tb) = t;

        const RealT slope =
            (eval(std::exp(t + h)) - eval(std::exp(t - h))) / (RealT(2) * h);
        RealT t_next = t - g / slope;
        if (!std::isfinite(t_next) || !(slope < RealT(0))
            || !(t_next > ta && t_next < tb))
        {
            t_next = (ta + tb) / RealT(2); // Newton escaped: bisect instead
        }
        const RealT g_next = eval(std::exp(t_next));
        const bool settled = std::abs(g_next) <= res_tol
                             && std::abs(t_next - t) <= rel_tol;
        t = t_next;
        g = g_next;
        if (settled)
        {
            loc.x = std::exp(t);
            return loc;
        }
    }

    // Newton stalled: finish the job with plain bisection.
    const RealT t_floor =
        std::max(rel_tol, RealT(8) * std::numeric_limits<RealT>::epsilon());
    while (tb - ta > t_floor)
    {
        const RealT tm = (ta + tb) / RealT(2);
        const RealT gm = eval(std::exp(tm));
        if (gm == RealT(0))
        {
            loc.x = std::exp(tm);
            return loc;
        }
        (gm > RealT(0) ? ta : tb) = tm;
    }
    loc.x = std::exp((ta + tb) / RealT(2));
    if (!(std::abs(eval(loc.x)) <= res_tol))
    {
        throw non_convergent_error(
            std::string(who)
            + ": stationary-gap refinement stalled above the residual "
              "tolerance");
    }
    return loc;
}

/// Absolute gap band treated as "stationary" by the shift predictors;
/// wide enough to absorb the residual a solver leaves at its own root,
/// far below any genuine shift signal.
template <typename RealT>
RealT shift_deadband(RealT coordinate_power_w,
                     const power_profile<RealT>& power)
{
    return RealT(1e-8)
           * (coordinate_power_w + power.p_circ_w + power.p_idle_w);
}

template <typename RealT>
optimum_report<double> to_double_report(const optimum_report<RealT>& rep)
{
    optimum_report<double> out;
    out.p_opt_w = static_cast<double>(rep.p_opt_w);
    out.lambda_opt = static_cast<double>(rep.lambda_opt);
    out.ee_opt = static_cast<double>(rep.ee_opt);
    out.iterations = rep.iterations;
    out.clamped = rep.clamped;
    out.ee_trace.reserve(rep.ee_trace.size());
    for (const RealT v : rep.ee_trace)
    {
        out.ee_trace.push_back(static_cast<double>(v));
    }
    return out;
}

} // namespace detail

/**
 * \brief Optimal transmit power at a fixed BS density.
 *
 * Solves S_P(P*) = P_idle and clamps the root into
 * [p_min_w, p_max_w]. With gamma_a = 0 association is free, coverage is
 * already certain at any power, EE is strictly decreasing in P, and the
 * solver short-circuits to the lower edge without root finding.
 *
 * \throw domain_error on invalid inputs.
 * \throw bracket_failure_error if no sign change of the stationary gap
 *  exists within [p_min_w/1e6, p_max_w*1e6].
 */
template <typename RealT = double>
optimum_report<RealT> optimal_power(RealT lambda_bs,
                                    const system_params<RealT>& params,
                                    const power_profile<RealT>& power,
                                    load_model load,
                                    const optimization_bounds<RealT>& bounds)
{
    bounds.validate();
    params.validate();
    power.validate();
    if (!(lambda_bs > RealT(0)) || !std::isfinite(lambda_bs))
    {
        throw domain_error(
            "optimal_power: lambda_bs must be positive and finite");
    }

    optimum_report<RealT> rep;
    rep.lambda_opt = lambda_bs;
    if (params.gamma_a == RealT(0))
    {
        rep.p_opt_w = bounds.p_min_w;
        rep.clamped = clamp_status::at_p_min;
    }
    else
    {
        const auto loc = detail::locate_stationary(
            [&](RealT p) {
                return stationary_gap_power(p, lambda_bs, params, power,
                                            load);
            },
            bounds.p_min_w, bounds.p_max_w, bounds.root_tol,
            detail::residual_tolerance(power, bounds.root_tol),
            "optimal_power");
        rep.iterations = loc.evals;
        switch (loc.side)
        {
        case detail::root_side::interior:
            rep.p_opt_w = loc.x;
            break;
        case detail::root_side::below_box:
            rep.p_opt_w = bounds.p_min_w;
            rep.clamped = clamp_status::at_p_min;
            break;
        case detail::root_side::above_box:
            rep.p_opt_w = bounds.p_max_w;
            rep.clamped = clamp_status::at_p_max;
            break;
        }
    }
    rep.ee_opt =
        energy_efficiency(rep.p_opt_w, lambda_bs, params, power, load);
    rep.ee_trace = {rep.ee_opt};
    return rep;
}

/**
 * \brief Optimal BS density at a fixed transmit power.
 *
 * Solves S_D(l*) = P_idle and clamps the root into
 * [lambda_min, lambda_max].
 *
 * \throw domain_error on invalid inputs.
 * \throw bracket_failure_error if no sign change of the stationary gap
 *  exists within [lambda_min/1e6, lambda_max*1e6].
 */
template <typename RealT = double>
optimum_report<RealT> optimal_density(RealT p_tx_w,
                                      const system_params<RealT>& params,
                                      const power_profile<RealT>& power,
                                      load_model load,
                                      const optimization_bounds<RealT>& bounds)
{
    bounds.validate();
    params.validate();
    power.validate();
    if (!(p_tx_w > RealT(0)) || !std::isfinite(p_tx_w))
    {
        throw domain_error(
            "optimal_density: p_tx_w must be positive and finite");
    }

    optimum_report<RealT> rep;
    rep.p_opt_w = p_tx_w;
    const auto loc = detail::locate_stationary(
        [&](RealT l) {
            return stationary_gap_density(l, p_tx_w, params, power, load);
        },
        bounds.lambda_min, bounds.lambda_max, bounds.root_tol,
        detail::residual_tolerance(power, bounds.root_tol),
        "optimal_density");
    rep.iterations = loc.evals;
    switch (loc.side)
    {
    case detail::root_side::interior:
        rep.lambda_opt = loc.x;
        break;
    case detail::root_side::below_box:
        rep.lambda_opt = bounds.lambda_min;
        rep.clamped = clamp_status::at_lambda_min;
        break;
    case detail::root_side::above_box:
        rep.lambda_opt = bounds.lambda_max;
        rep.clamped = clamp_status::at_lambda_max;
        break;
    }
    rep.ee_opt =
        energy_efficiency(p_tx_w, rep.lambda_opt, params, power, load);
    rep.ee_trace = {rep.ee_opt};
    return rep;
}

/**
 * \brief Joint optimum via alternating 1-D solves.
 *
 * Starting from initial_lambda, repeats { P <- optimal_power(lambda);
 * lambda <- optimal_density(P); V <- EE(P, lambda) } until the relative
 * EE improvement |V - V0| / V drops to alt_eps. Each round can only
 * improve the objective, so ee_trace is non-decreasing (up to ulp-level
 * jitter in the terminal rounds) and the limit is a first-order (KKT)
 * point of the box-constrained joint problem.
 *
 * The EE surface is much flatter than its coordinates near the optimum,
 * so once the EE criterion is met the solver keeps alternating — still
 * within max_alt_iters, and for at most a bounded polish budget — until
 * the per-round coordinate moves fall to the root_tol scale. This makes
 * independent runs land on a common (P, lambda) to near root_tol
 * instead of merely a common EE value.
 *
 * \throw domain_error if initial_lambda lies outside the density box.
 * \throw max_iterations_error (carrying the best round reached) if
 *  max_alt_iters rounds do not meet alt_eps.
 */
template <typename RealT = double>
optimum_report<RealT> joint_optimize(const system_params<RealT>& params,
                                     const power_profile<RealT>& power,
                                     load_model load,
                                     const optimization_bounds<RealT>& bounds,
                                     RealT initial_lambda)
{
    bounds.validate();
    params.validate();
    power.validate();
    if (!(initial_lambda >= bounds.lambda_min
          && initial_lambda <= bounds.lambda_max))
    {
        throw domain_error(
            "joint_optimize: initial_lambda must lie inside the density "
            "box");
    }

    optimum_report<RealT> rep;
    RealT lambda = initial_lambda;
    RealT v_prev = RealT(0);
    RealT log_p_prev = std::numeric_limits<RealT>::quiet_NaN();
    RealT log_l_prev = std::numeric_limits<RealT>::quiet_NaN();
    int ee_converged_rounds = 0;
    for (int round = 1; round <= bounds.max_alt_iters; ++round)
    {
        const auto rp = optimal_power(lambda, params, power, load, bounds);
        const auto rd =
            optimal_density(rp.p_opt_w, params, power, load, bounds);
        lambda = rd.lambda_opt;

        const RealT v = rd.ee_opt; // EE at the full round iterate (P, l)
        rep.p_opt_w = rp.p_opt_w;
        rep.lambda_opt = rd.lambda_opt;
        rep.ee_opt = v;
        rep.iterations = round;
        rep.ee_trace.push_back(v);

        const bool p_edge = rp.clamped != clamp_status::interior;
        const bool l_edge = rd.clamped != clamp_status::interior;
        rep.clamped = p_edge && l_edge ? clamp_status::multiple_clamps
                      : p_edge         ? rp.clamped
                      : l_edge         ? rd.clamped
                                       : clamp_status::interior;

        const RealT log_p = std::log(rp.p_opt_w);
        const RealT log_l = std::log(rd.lambda_opt);
        const RealT move =
            std::max(std::abs(log_p - log_p_prev),
                     std::abs(log_l - log_l_prev)); // NaN on round one
        log_p_prev = log_p;
        log_l_prev = log_l;

        if (std::abs(v - v_prev) <= bounds.alt_eps * std::abs(v))
        {
            ++ee_converged_rounds;
            if (move <= RealT(3) * bounds.root_tol
                || ee_converged_rounds > 40)
            {
                return rep;
            }
        }
        v_prev = v;
    }
    if (ee_converged_rounds >= 1)
    {
        return rep; // EE criterion met; cap cut the coordinate polish short
    }
    throw max_iterations_error(
        "joint_optimize: alternation did not reach alt_eps within "
        "max_alt_iters rounds",
        detail::to_double_report(rep));
}

/**
 * \brief Direction the optimal power moves when the density changes.
 *
 * Returns the sign of dEE/dP evaluated at (p_opt_at_old_lambda,
 * new_lambda): +1 means the optimum under new_lambda lies above the old
 * one, -1 below, 0 unchanged (within a small absolute band that absorbs
 * the solver residual at a re-supplied root).
 *
 * \throw domain_error on invalid inputs.
 */
template <typename RealT = double>
int shift_sign_power(RealT p_opt_at_old_lambda,
                     RealT new_lambda,
                     const system_params<RealT>& params,
                     const power_profile<RealT>& power,
                     load_model load)
{
    const RealT g = stationary_gap_power(p_opt_at_old_lambda, new_lambda,
                                         params, power, load);
    const RealT band = detail::shift_deadband(p_opt_at_old_lambda, power);
    if (g > band)
    {
        return 1;
    }
    if (g < -band)
    {
        return -1;
    }
    return 0;
}

/**
 * \brief Direction the optimal density moves when the power changes.
 *
 * Returns the sign of dEE/dlambda evaluated at (lambda_opt_at_old_p,
 * new_p); conventions as in shift_sign_power.
 *
 * \throw domain_error on invalid inputs.
 */
template <typename RealT = double>
int shift_sign_density(RealT lambda_opt_at_old_p,
                       RealT new_p,
                       const system_params<RealT>& params,
                       const power_profile<RealT>& power,
                       load_model load)
{
    const RealT g = stationary_gap_density(lambda_opt_at_old_p, new_p,
                                           params, power, load);
    const RealT band = detail::shift_deadband(new_p, power);
    if (g > band)
    {
        return 1;
    }
    if (g < -band)
    {
        return -1;
    }
    return 0;
}

/**
 * \brief Exhaustive log-spaced grid search over the box.
 *
 * Evaluates EE on a log grid in each free coordinate (power, density,
 * or both) and returns the argmax. 1-D problems need the other
 * coordinate pinned via fixed_p_tx_w / fixed_lambda_bs; the fixed
 * arguments are ignored for coordinates the grid scans. A one-point
 * grid degenerates to the lower bound of its dimension. The report
 * flags argmaxes that land on the first or last point of a multi-point
 * dimension with the matching clamp status, since the true optimum then
 * likely sits outside the box. Deterministic by construction.
 *
 * \throw domain_error on invalid grid sizes or missing fixed
 *  coordinates.
 */
template <typename RealT = double>
optimum_report<RealT>
brute_force_grid(grid_problem problem,
                 grid_size dims,
                 const system_params<RealT>& params,
                 const power_profile<RealT>& power,
                 load_model load,
                 const optimization_bounds<RealT>& bounds,
                 RealT fixed_p_tx_w = std::numeric_limits<RealT>::quiet_NaN(),
                 RealT fixed_lambda_bs =
                     std::numeric_limits<RealT>::quiet_NaN())
{
    bounds.validate();
    params.validate();
    power.validate();
    const bool scan_p = problem != grid_problem::density_only;
    const bool scan_l = problem != grid_problem::power_only;
    if (scan_p && dims.n_p < 1)
    {
        throw domain_error("brute_force_grid: n_p must be >= 1");
    }
    if (scan_l && dims.n_lambda < 1)
    {
        throw domain_error("brute_force_grid: n_lambda must be >= 1");
    }
    if (!scan_p
        && !(std::isfinite(fixed_p_tx_w) && fixed_p_tx_w > RealT(0)))
    {
        throw domain_error(
            "brute_force_grid: density_only requires a positive "
            "fixed_p_tx_w");
    }
    if (!scan_l
        && !(std::isfinite(fixed_lambda_bs) && fixed_lambda_bs > RealT(0)))
    {
        throw domain_error(
            "brute_force_grid: power_only requires a positive "
            "fixed_lambda_bs");
    }

    auto grid_point = [](RealT lo, RealT hi, std::size_t n, std::size_t i) {
        if (n == 1)
        {
            return lo;
        }
        return lo
               * std::exp(std::log(hi / lo) * RealT(i) / RealT(n - 1));
    };

    const std::size_t np = scan_p ? dims.n_p : 1;
    const std::size_t nl = scan_l ? dims.n_lambda : 1;
    optimum_report<RealT> best;
    best.ee_opt = -std::numeric_limits<RealT>::infinity();
    std::size_t best_i = 0;
    std::size_t best_j = 0;
    for (std::size_t i = 0; i < np; ++i)
    {
        const RealT p = scan_p
                            ? grid_point(bounds.p_min_w, bounds.p_max_w,
                                         np, i)
                            : fixed_p_tx_w;
        for (std::size_t j = 0; j < nl; ++j)
        {
            const RealT l =
                scan_l ? grid_point(bounds.lambda_min, bounds.lambda_max,
                                    nl, j)
                       : fixed_lambda_bs;
            const RealT ee =
                energy_efficiency(p, l, params, power, load);
            ++best.iterations;
            if (ee > best.ee_opt)
            {
                best.ee_opt = ee;
                best.p_opt_w = p;
                best.lambda_opt = l;
                best_i = i;
                best_j = j;
            }
        }
    }
    best.ee_trace = {best.ee_opt};

    const bool p_edge =
        scan_p && np >= 2 && (best_i == 0 || best_i == np - 1);
    const bool l_edge =
        scan_l && nl >= 2 && (best_j == 0 || best_j == nl - 1);
    const clamp_status p_side =
        best_i == 0 ? clamp_status::at_p_min : clamp_status::at_p_max;
    const clamp_status l_side = best_j == 0 ? clamp_status::at_lambda_min
                                            : clamp_status::at_lambda_max;
    best.clamped = p_edge && l_edge ? clamp_status::multiple_clamps
                   : p_edge         ? p_side
                   : l_edge         ? l_side
                                    : clamp_status::interior;
    return best;
}

} // namespace ppnet

#endif // PPNET_OPTIMIZER_HPP
