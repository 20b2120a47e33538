/**
 * \file ppnet/mcsim.hpp
 *
 * \brief Monte Carlo validation of the closed-form network metrics: PPP
 *  realizations on a disc window, nearest-BS association of actual
 *  terminal positions, per-link Rayleigh fading, and campaign-level
 *  estimators with confidence intervals.
 *
 * The simulator is intentionally independent of the closed-form metric
 * path it validates: coverage, spectral efficiency, and grid power are
 * measured from sampled geometry, not from the analytical
 * approximations (independent activity thinning, cell-load pmf).
 *
 * Interference from beyond the finite window is completed by its
 * mean-field value, with the active-BS density measured on the same
 * realization (see \ref evaluate_typical). This cancels the window
 * truncation bias to first order — the slowly decaying path-loss tail
 * would otherwise inflate coverage by whole percents at practical
 * window sizes — so the window only needs the geometric floors of
 * \ref auto_window_radius.
 *
 * Estimator conventions:
 *  - The coverage estimator averages the scheduled-branch indicator
 *    (association gate and full-power SIR gate), without the LM1
 *    selection lottery. That is the event the closed form models; the
 *    lottery is independent of the link geometry given the cell
 *    population, so conditioning it out only removes variance. The
 *    strict per-realization event including the realized lottery draw
 *    is still reported by \ref evaluate_typical.
 *  - The PSE estimator weights each covered realization by
 *    1/(population + 1): the scheduling probability under LM1 (its
 *    conditional expectation, replacing the realized Bernoulli draw)
 *    and the bandwidth share under LM2. Both load models therefore
 *    estimate the same area spectral efficiency.
 *  - Grid power counts only the stationary terminal process; the probe
 *    terminal at the origin is a Palm addition and does not perturb
 *    areal averages.
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

#ifndef PPNET_MCSIM_HPP
#define PPNET_MCSIM_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <ppnet/errors.hpp>
#include <ppnet/netmodel.hpp>

namespace ppnet {

/// The empty-window resample cap was exhausted without drawing any BS.
class empty_realization_error : public simulation_error
{
public:
    explicit empty_realization_error(const std::string& what)
    : simulation_error(what)
    {
    }
};

/**
 * \brief Campaign configuration.
 */
struct sim_config
{
    /// Disc window radius in meters; a non-positive value asks
    /// \ref estimate_metrics to apply the \ref auto_window_radius rule.
    double window_radius_m = 0.0;

    /// Number of independent realizations in a campaign, >= 1.
    int num_realizations = 1000;

    /// Campaign seed; together with the realization index it keys an
    /// independent random stream per realization.
    std::uint64_t rng_seed = 1;

    /// Two-sided confidence level for interval half-widths, in (0, 1).
    double confidence_level = 0.95;

    /// \throw domain_error on any out-of-range field.
    void validate() const
    {
        if (!(window_radius_m >= 0.0)
            || !std::isfinite(window_radius_m))
        {
            throw domain_error(
                "sim_config: window_radius_m must be finite and >= 0");
        }
        if (num_realizations < 1)
        {
            throw domain_error("sim_config: num_realizations must be >= 1");
        }
        if (!(confidence_level > 0.0) || !(confidence_level < 1.0))
        {
            throw domain_error(
                "sim_config: confidence_level must lie in (0, 1)");
        }
    }
};

/**
 * \brief One sampled network: BS and MT positions on the disc window,
 *  plus every random quantity the evaluation needs, so that evaluating
 *  a realization is deterministic.
 */
struct realization
{
    double window_radius_m = 0.0;

    /// BS coordinates (meters, window centre at the origin).
    std::vector<double> bs_x;
    std::vector<double> bs_y;

    /// Unit-mean exponential fading gain of each BS-to-origin link.
    std::vector<double> fade;

    /// Stationary MT coordinates; the probe MT at the origin is
    /// implicit and never appears here.
    std::vector<double> mt_x;
    std::vector<double> mt_y;

    /// Uniform [0, 1) draw deciding the LM1 scheduling lottery of the
    /// probe MT.
    double sched_u = 0.0;

    /// Number of empty windows discarded before this draw succeeded.
    int resample_attempts = 0;
};

/**
 * \brief Deterministic evaluation of one realization at the probe MT.
 */
struct typical_outcome
{
    /// Index of the BS serving the origin (nearest, hence least path
    /// loss).
    std::size_t serving_index = 0;

    /// Stationary MTs sharing the serving cell with the probe.
    int n_bar = 0;

    /// BSs with at least one associated stationary MT.
    long loaded_count = 0;

    /// Stationary MTs in the window (all of them associate somewhere).
    long mt_count = 0;

    /// Average-SNR association gate (requires positive transmit power).
    bool association_ok = false;

    /// Scheduling outcome for the probe: LM1 lottery draw, always true
    /// under LM2.
    bool selected = false;

    /// Full-power SIR at the origin over loaded interferers; the
    /// per-terminal power split of LM2 cancels between signal and
    /// interference. Infinite when no interferer is active.
    double sir = 0.0;

    /// Strict per-realization coverage event: association gate,
    /// scheduling, and SIR gate all satisfied.
    bool covered = false;

    /// 1/(n_bar + 1): LM1 scheduling probability and LM2 bandwidth
    /// share.
    double pse_weight = 0.0;
};

/// Sample mean with a two-sided confidence-interval half-width.
struct mc_estimate
{
    double mean = 0.0;
    double half_width = 0.0;
    long n = 0;
};

/// Campaign result: the four network metrics plus bookkeeping.
struct mc_metrics
{
    mc_estimate coverage;
    mc_estimate pse;    ///< bit/s per square meter
    mc_estimate p_grid; ///< W per square meter
    mc_estimate ee;     ///< bit/J, ratio estimate with delta-method CI

    /// Window radius actually simulated (auto rule applied if asked).
    double window_radius_m = 0.0;

    /// Total empty windows discarded across the campaign.
    long resample_total = 0;

    /// Some half-width exceeds 10% of its estimate: results are
    /// reported but should not be trusted at face value.
    bool insufficient_samples = false;
};

namespace detail {

/// Two-sided normal quantile for confidence level c: z with
/// Phi(z) = (1 + c)/2, found by Newton iteration on std::erf.
inline double normal_quantile_two_sided(double confidence)
{
    const double q = 0.5 * (1.0 + confidence);
    double z = 1.0;
    for (int it = 0; it < 64; ++it)
    {
        const double f = 0.5 * (1.0 + std::erf(z / std::numbers::sqrt2)) - q;
        const double pdf =
            std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi);
        const double step = f / pdf;
        z -= step;
        if (std::abs(step) <= 1e-13 * (1.0 + std::abs(z)))
        {
            break;
        }
    }
    return z;
}

/// Fresh engine for (seed, realization index, resample attempt): an
/// independent, reproducible stream per draw.
inline std::mt19937_64 make_stream(std::uint64_t seed,
                                   std::uint64_t draw_index,
                                   std::uint32_t attempt)
{
    std::seed_seq seq{
        static_cast<std::uint32_t>(seed),
        static_cast<std::uint32_t>(seed >> 32),
        static_cast<std::uint32_t>(draw_index),
        static_cast<std::uint32_t>(draw_index >> 32),
        attempt,
        std::uint32_t{0x9e3779b9},
    };
    return std::mt19937_64(seq);
}

/// Uniform point on the disc of the given radius.
template <typename Rng>
inline void draw_disc_point(Rng& rng, double radius, double& x, double& y)
{
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const double r = radius * std::sqrt(u01(rng));
    const double phi = 2.0 * std::numbers::pi * u01(rng);
    x = r * std::cos(phi);
    y = r * std::sin(phi);
}

/**
 * \brief Bucket grid over the window for nearest-BS queries.
 *
 * Buckets are sized for about one BS each; a query scans square rings
 * outward and stops once no unvisited ring can beat the best distance
 * found. Points outside the window are clamped into edge buckets,
 * which preserves correctness (their true distance only exceeds the
 * ring lower bound).
 */
class nearest_grid
{
public:
    nearest_grid(const std::vector<double>& xs,
                 const std::vector<double>& ys,
                 double radius)
    : xs_(xs)
    , ys_(ys)
    {
        const std::size_t n = xs.size();
        nb_ = std::max<std::size_t>(
            1, static_cast<std::size_t>(
                   std::ceil(std::sqrt(static_cast<double>(n)))));
        origin_ = -radius;
        cell_ = 2.0 * radius / static_cast<double>(nb_);
        if (!(cell_ > 0.0))
        {
            nb_ = 1;
            cell_ = 1.0;
        }
        buckets_.assign(nb_ * nb_, {});
        for (std::size_t i = 0; i < n; ++i)
        {
            buckets_[bucket_of(xs[i], ys[i])].push_back(i);
        }
    }

    /// Index of the point nearest to (x, y); the grid must be
    /// non-empty.
    std::size_t nearest(double x, double y) const
    {
        const long cx = coord(x);
        const long cy = coord(y);
        std::size_t best = std::numeric_limits<std::size_t>::max();
        double best_d2 = std::numeric_limits<double>::infinity();

        const long k_max = static_cast<long>(nb_);
        for (long k = 0; k <= k_max; ++k)
        {
            if (best != std::numeric_limits<std::size_t>::max() && k >= 2)
            {
                const double safe = static_cast<double>(k - 1) * cell_;
                if (safe * safe > best_d2)
                {
                    break;
                }
            }
            scan_ring(cx, cy, k, x, y, best, best_d2);
        }
        return best;
    }

private:
    long coord(double v) const
    {
        const double t = (v - origin_) / cell_;
        long i = static_cast<long>(std::floor(t));
        if (i < 0)
        {
            i = 0;
        }
        if (i >= static_cast<long>(nb_))
        {
            i = static_cast<long>(nb_) - 1;
        }
        return i;
    }

    std::size_t bucket_of(double x, double y) const
    {
        return static_cast<std::size_t>(coord(y)) * nb_
               + static_cast<std::size_t>(coord(x));
    }

    void scan_bucket(long ix, long iy, double x, double y,
                     std::size_t& best, double& best_d2) const
    {
        if (ix < 0 || iy < 0 || ix >= static_cast<long>(nb_)
            || iy >= static_cast<long>(nb_))
        {
            return;
        }
        const auto& bucket =
            buckets_[static_cast<std::size_t>(iy) * nb_
                     + static_cast<std::size_t>(ix)];
        for (const std::size_t i : bucket)
        {
            const double dx = xs_[i] - x;
            const double dy = ys_[i] - y;
            const double d2 = dx * dx + dy * dy;
            if (d2 < best_d2)
            {
                best_d2 = d2;
                best = i;
            }
        }
    }

    void scan_ring(long cx, long cy, long k, double x, double y,
                   std::size_t& best, double& best_d2) const
    {
        if (k == 0)
        {
            scan_bucket(cx, cy, x, y, best, best_d2);
            return;
        }
        for (long ix = cx - k; ix <= cx + k; ++ix)
        {
            scan_bucket(ix, cy - k, x, y, best, best_d2);
            scan_bucket(ix, cy + k, x, y, best, best_d2);
        }
        for (long iy = cy - k + 1; iy <= cy + k - 1; ++iy)
        {
            scan_bucket(cx - k, iy, x, y, best, best_d2);
            scan_bucket(cx + k, iy, x, y, best, best_d2);
        }
    }

    const std::vector<double>& xs_;
    const std::vector<double>& ys_;
    std::size_t nb_ = 1;
    double origin_ = 0.0;
    double cell_ = 1.0;
    std::vector<std::vector<std::size_t>> buckets_;
};

} // namespace detail

/**
 * \brief Window radius rule: large enough that boundary artifacts stay
 *  far below campaign noise.
 *
 * The radius is the largest of
 *  - 5 / sqrt(pi lambda_bs), keeping the zero-BS probability below
 *    exp(-25),
 *  - ten times the maximum association range implied by the
 *    average-SNR gate,
 *  - a 3 km floor, keeping hundreds of cells in view so loaded-fraction
 *    and interference statistics are well mixed per realization.
 *
 * Interference beyond the window needs no radius headroom: its mean
 * field is added during evaluation (\ref evaluate_typical).
 *
 * \throw domain_error on non-positive density or negative power
 */
inline double auto_window_radius(double p_tx_w,
                                 double lambda_bs,
                                 const system_params<double>& params)
{
    params.validate();
    if (!(lambda_bs > 0.0))
    {
        throw domain_error("auto_window_radius: lambda_bs must be > 0");
    }
    if (!(p_tx_w >= 0.0))
    {
        throw domain_error("auto_window_radius: p_tx_w must be >= 0");
    }

    double radius = 3000.0;
    radius = std::max(radius,
                      5.0 / std::sqrt(std::numbers::pi * lambda_bs));

    const double eta = params.eta();
    if (eta > 0.0 && p_tx_w > 0.0)
    {
        const double reach = std::pow(p_tx_w / eta, 1.0 / params.beta)
                             * std::pow(params.kappa, -1.0 / params.beta);
        radius = std::max(radius, 10.0 * reach);
    }
    return radius;
}

/**
 * \brief Draw one realization: Poisson BS and MT counts on the disc,
 *  uniform positions, exponential link fading, and the LM1 lottery
 *  draw.
 *
 * Empty BS draws are discarded and redrawn from a fresh stream, up to
 * a cap of 1000 attempts; the discard count is recorded on the result.
 * Identical arguments always reproduce the identical realization.
 *
 * \throw domain_error on non-positive lambda_bs, negative lambda_mt,
 *  or a config without an explicit positive window radius
 * \throw empty_realization_error when the resample cap is exhausted
 */
inline realization sample_realization(double lambda_bs,
                                      double lambda_mt,
                                      const sim_config& config,
                                      std::uint64_t draw_index)
{
    config.validate();
    if (!(lambda_bs > 0.0))
    {
        throw domain_error("sample_realization: lambda_bs must be > 0");
    }
    if (!(lambda_mt >= 0.0))
    {
        throw domain_error("sample_realization: lambda_mt must be >= 0");
    }
    if (!(config.window_radius_m > 0.0))
    {
        throw domain_error(
            "sample_realization: window_radius_m must be resolved to > 0");
    }

    const double radius = config.window_radius_m;
    const double area = std::numbers::pi * radius * radius;

    constexpr std::uint32_t max_attempts = 1000;
    for (std::uint32_t attempt = 0; attempt < max_attempts; ++attempt)
    {
        auto rng = detail::make_stream(config.rng_seed, draw_index, attempt);

        std::poisson_distribution<long> bs_count(lambda_bs * area);
        const long n_bs = bs_count(rng);
        if (n_bs == 0)
        {
            continue;
        }

        realization out;
        out.window_radius_m = radius;
        out.resample_attempts = static_cast<int>(attempt);
        out.bs_x.resize(static_cast<std::size_t>(n_bs));
        out.bs_y.resize(static_cast<std::size_t>(n_bs));
        out.fade.resize(static_cast<std::size_t>(n_bs));
        std::exponential_distribution<double> unit_exp(1.0);
        for (long i = 0; i < n_bs; ++i)
        {
            detail::draw_disc_point(rng, radius,
                                    out.bs_x[static_cast<std::size_t>(i)],
                                    out.bs_y[static_cast<std::size_t>(i)]);
            out.fade[static_cast<std::size_t>(i)] = unit_exp(rng);
        }

        long n_mt = 0;
        if (lambda_mt > 0.0)
        {
            std::poisson_distribution<long> mt_count(lambda_mt * area);
            n_mt = mt_count(rng);
        }
        out.mt_x.resize(static_cast<std::size_t>(n_mt));
        out.mt_y.resize(static_cast<std::size_t>(n_mt));
        for (long i = 0; i < n_mt; ++i)
        {
            detail::draw_disc_point(rng, radius,
                                    out.mt_x[static_cast<std::size_t>(i)],
                                    out.mt_y[static_cast<std::size_t>(i)]);
        }

        std::uniform_real_distribution<double> u01(0.0, 1.0);
        out.sched_u = u01(rng);
        return out;
    }
    throw empty_realization_error(
        "sample_realization: no BS drawn in " + std::to_string(max_attempts)
        + " attempts at draw index " + std::to_string(draw_index)
        + "; the window is too small for the BS density");
}

/**
 * \brief Evaluate one realization at the probe MT: actual nearest-BS
 *  association of every terminal, the average-SNR gate, the scheduling
 *  outcome, and the full-power SIR over loaded interferers.
 *
 * \throw domain_error on negative transmit power
 * \throw simulation_error on a realization without BSs
 */
inline typical_outcome evaluate_typical(const realization& real,
                                        double p_tx_w,
                                        const system_params<double>& params,
                                        load_model load)
{
    params.validate();
    if (!(p_tx_w >= 0.0))
    {
        throw domain_error("evaluate_typical: p_tx_w must be >= 0");
    }
    const std::size_t n_bs = real.bs_x.size();
    if (n_bs == 0 || real.bs_y.size() != n_bs || real.fade.size() != n_bs
        || real.mt_x.size() != real.mt_y.size())
    {
        throw simulation_error(
            "evaluate_typical: realization must hold at least one BS and "
            "consistently sized arrays");
    }

    const detail::nearest_grid grid(real.bs_x, real.bs_y,
                                    real.window_radius_m);

    typical_outcome out;
    out.serving_index = grid.nearest(0.0, 0.0);
    out.mt_count = static_cast<long>(real.mt_x.size());

    std::vector<int> population(n_bs, 0);
    for (std::size_t m = 0; m < real.mt_x.size(); ++m)
    {
        ++population[grid.nearest(real.mt_x[m], real.mt_y[m])];
    }
    for (const int c : population)
    {
        if (c > 0)
        {
            ++out.loaded_count;
        }
    }
    out.n_bar = population[out.serving_index];
    out.pse_weight = 1.0 / (static_cast<double>(out.n_bar) + 1.0);

    // Scheduling: LM1 picks one cell member uniformly; LM2 serves all.
    out.selected =
        (load == load_model::lm1)
            ? real.sched_u * (static_cast<double>(out.n_bar) + 1.0) < 1.0
            : true;

    const double r0 = std::hypot(real.bs_x[out.serving_index],
                                 real.bs_y[out.serving_index]);
    const double serving_loss = params.kappa * std::pow(r0, params.beta);

    if (p_tx_w > 0.0)
    {
        const double snr = p_tx_w / (serving_loss * params.noise_w());
        out.association_ok = snr >= params.gamma_a;

        double interference = 0.0;
        for (std::size_t i = 0; i < n_bs; ++i)
        {
            if (i == out.serving_index || population[i] == 0)
            {
                continue;
            }
            const double ri = std::hypot(real.bs_x[i], real.bs_y[i]);
            interference +=
                p_tx_w * real.fade[i] / (params.kappa
                                         * std::pow(ri, params.beta));
        }
        // Mean-field completion of the interference from active BSs
        // beyond the window, with the active density measured on this
        // realization: 2 pi lambda_act P R^(2-beta) / (kappa (beta-2)).
        // Cancels the window truncation bias to first order; the
        // neglected tail fluctuation enters coverage only at second
        // order in the (small) tail mean.
        interference += 2.0 * static_cast<double>(out.loaded_count)
                        * p_tx_w
                        * std::pow(real.window_radius_m, -params.beta)
                        / (params.kappa * (params.beta - 2.0));
        const double signal =
            p_tx_w * real.fade[out.serving_index] / serving_loss;
        out.sir = interference > 0.0
                      ? signal / interference
                      : std::numeric_limits<double>::infinity();
    }
    else
    {
        // No pilot, nothing to hear: the association gate fails.
        out.association_ok = false;
        out.sir = 0.0;
    }

    out.covered =
        out.association_ok && out.selected && out.sir >= params.gamma_d;
    return out;
}

/**
 * \brief Run a campaign and estimate coverage, PSE, grid power, and
 *  energy efficiency with confidence intervals.
 *
 * Realizations are drawn from independent streams keyed by
 * (config.rng_seed, index), so campaigns are reproducible and the
 * reduction order is fixed. The EE estimate is the ratio of the PSE
 * and grid-power means; its half-width comes from the delta method
 * with the sampled covariance.
 *
 * \throw domain_error on invalid arguments
 * \throw degenerate_network_error when the sampled grid power is zero
 */
inline mc_metrics estimate_metrics(double p_tx_w,
                                   double lambda_bs,
                                   const system_params<double>& params,
                                   const power_profile<double>& power,
                                   load_model load,
                                   const sim_config& config)
{
    params.validate();
    power.validate();
    config.validate();
    if (!(lambda_bs > 0.0))
    {
        throw domain_error("estimate_metrics: lambda_bs must be > 0");
    }
    if (!(p_tx_w >= 0.0))
    {
        throw domain_error("estimate_metrics: p_tx_w must be >= 0");
    }

    sim_config local = config;
    if (!(local.window_radius_m > 0.0))
    {
        local.window_radius_m =
            auto_window_radius(p_tx_w, lambda_bs, params);
    }
    const double area =
        std::numbers::pi * local.window_radius_m * local.window_radius_m;
    const double rate_scale =
        params.lambda_mt * params.bandwidth_hz
        * std::log2(1.0 + params.gamma_d);

    const long n = local.num_realizations;
    double sum_c = 0.0;
    double sum_cc = 0.0;
    double sum_x = 0.0;
    double sum_xx = 0.0;
    double sum_y = 0.0;
    double sum_yy = 0.0;
    double sum_xy = 0.0;
    long resample_total = 0;

    for (long i = 0; i < n; ++i)
    {
        const realization real = sample_realization(
            lambda_bs, params.lambda_mt, local,
            static_cast<std::uint64_t>(i));
        const typical_outcome out =
            evaluate_typical(real, p_tx_w, params, load);
        resample_total += real.resample_attempts;

        const bool scheduled_branch_covered =
            out.association_ok && out.sir >= params.gamma_d;
        const double c = scheduled_branch_covered ? 1.0 : 0.0;
        const double x = rate_scale * out.pse_weight * c;

        const long n_bs = static_cast<long>(real.bs_x.size());
        const double idle_draw =
            static_cast<double>(n_bs - out.loaded_count) * power.p_idle_w;
        const double circuit_draw =
            load == load_model::lm1
                ? static_cast<double>(out.loaded_count) * power.p_circ_w
                : static_cast<double>(out.mt_count) * power.p_circ_w;
        const double y =
            (static_cast<double>(out.loaded_count) * p_tx_w + circuit_draw
             + idle_draw)
            / area;

        sum_c += c;
        sum_cc += c * c;
        sum_x += x;
        sum_xx += x * x;
        sum_y += y;
        sum_yy += y * y;
        sum_xy += x * y;
    }

    const double dn = static_cast<double>(n);
    const double z =
        detail::normal_quantile_two_sided(local.confidence_level);

    const auto finish = [&](double sum, double sum_sq) {
        mc_estimate est;
        est.n = n;
        est.mean = sum / dn;
        if (n >= 2)
        {
            const double var =
                std::max(0.0, (sum_sq - dn * est.mean * est.mean)
                                  / (dn - 1.0));
            est.half_width = z * std::sqrt(var / dn);
        }
        else
        {
            est.half_width = std::numeric_limits<double>::infinity();
        }
        return est;
    };

    mc_metrics result;
    result.window_radius_m = local.window_radius_m;
    result.resample_total = resample_total;
    result.coverage = finish(sum_c, sum_cc);
    result.pse = finish(sum_x, sum_xx);
    result.p_grid = finish(sum_y, sum_yy);

    if (!(result.p_grid.mean > 0.0))
    {
        throw degenerate_network_error(
            "estimate_metrics: sampled grid power is zero, energy "
            "efficiency is undefined");
    }
    result.ee.n = n;
    result.ee.mean = result.pse.mean / result.p_grid.mean;
    if (n >= 2)
    {
        const double mx = result.pse.mean;
        const double my = result.p_grid.mean;
        const double var_x =
            std::max(0.0, (sum_xx - dn * mx * mx) / (dn - 1.0));
        const double var_y =
            std::max(0.0, (sum_yy - dn * my * my) / (dn - 1.0));
        const double cov_xy = (sum_xy - dn * mx * my) / (dn - 1.0);
        const double var_ratio =
            std::max(0.0, (var_x / (my * my)
                           + mx * mx * var_y / (my * my * my * my)
                           - 2.0 * mx * cov_xy / (my * my * my))
                              / dn);
        result.ee.half_width = z * std::sqrt(var_ratio);
    }
    else
    {
        result.ee.half_width = std::numeric_limits<double>::infinity();
    }

    const auto too_wide = [](const mc_estimate& est) {
        return est.mean == 0.0 ? est.half_width > 0.0
                               : est.half_width > 0.1 * std::abs(est.mean);
    };
    result.insufficient_samples =
        too_wide(result.coverage) || too_wide(result.pse)
        || too_wide(result.p_grid) || too_wide(result.ee);
    return result;
}

} // namespace ppnet

#endif // PPNET_MCSIM_HPP
