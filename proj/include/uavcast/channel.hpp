#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "uavcast/errors.hpp"
#include "uavcast/model.hpp"

namespace uavcast {

namespace detail {

inline double log_poisson_pmf(long k, double mean) {
    return -mean + static_cast<double>(k) * std::log(mean) - std::lgamma(static_cast<double>(k) + 1.0);
}

/// Pr(Poisson(mean) <= k), summed around the dominant terms only.
inline double poisson_cdf(long k, double mean) {
    if (k < 0) return 0.0;
    if (mean <= 0.0) return 1.0;
    const double sd = std::sqrt(mean);
    if (static_cast<double>(k) >= mean + 14.0 * sd + 40.0) return 1.0;
    const long mode = static_cast<long>(mean);
    const long j0 = std::min(k, mode);
    const double head = std::exp(log_poisson_pmf(j0, mean));
    double sum = head;
    double term = head;
    for (long j = j0; j > 0; --j) {  // pmf(j-1) = pmf(j) * j / mean
        term *= static_cast<double>(j) / mean;
        sum += term;
        if (term < sum * 1e-18) break;
    }
    term = head;
    for (long j = j0 + 1; j <= k; ++j) {  // pmf(j) = pmf(j-1) * mean / j
        term *= mean / static_cast<double>(j);
        sum += term;
    }
    return std::min(sum, 1.0);
}

}  // namespace detail

/// First-order Marcum Q-function Q1(a,b) = Pr(chi'^2_2(a^2) > b^2).
///
/// Evaluated as a Poisson mixture of Poisson tail probabilities,
///   Q1(a,b) = sum_k pois(k; a^2/2) * Pr(Poisson(b^2/2) <= k),
/// with the outer sum windowed around its mode so the computation stays in
/// range for large a, b (no unscaled Bessel evaluations).
inline double marcum_q1(double a, double b) {
    if (!(a >= 0.0) || !(b >= 0.0)) throw std::domain_error("marcum_q1 requires finite a,b >= 0");
    if (b == 0.0) return 1.0;
    const double x = 0.5 * a * a;
    const double y = 0.5 * b * b;
    if (x == 0.0) return std::exp(-y);

    const double sd = std::sqrt(x);
    const long k_lo = std::max<long>(0, static_cast<long>(std::floor(x - 14.0 * sd - 40.0)));
    const long k_hi = static_cast<long>(std::ceil(x + 14.0 * sd + 40.0));

    double weight = std::exp(detail::log_poisson_pmf(k_lo, x));
    double tail = detail::poisson_cdf(k_lo, y);
    double tail_inc = std::exp(detail::log_poisson_pmf(k_lo + 1, y));
    double sum = weight * tail;
    for (long k = k_lo + 1; k <= k_hi; ++k) {
        weight *= x / static_cast<double>(k);
        tail += tail_inc;
        tail_inc *= y / static_cast<double>(k + 1);
        sum += weight * tail;
    }
    return std::clamp(sum, 0.0, 1.0);
}

/// ccdf of the small-scale fading power gain |g|^2 at z.
///
/// LoS: unit gain, so F(z) = 1 for z <= 1 and 0 beyond.  Rician(Kc):
/// F(z) = Q1(sqrt(2 Kc), sqrt(2 (Kc+1) z)).
inline double ccdf_fading(const FadingModel& model, double z) {
    if (!(z >= 0.0)) throw std::domain_error("ccdf_fading requires finite z >= 0");
    if (model.is_los()) return z <= 1.0 + 1e-12 ? 1.0 : 0.0;
    const double kc = model.k_factor_Kc;
    return marcum_q1(std::sqrt(2.0 * kc), std::sqrt(2.0 * (kc + 1.0) * z));
}

struct SnrDerived {
    double gamma_th = 0.0;    // SNR threshold 2^(R/B) - 1
    double gamma_bar0 = 0.0;  // mean SNR at 1 m, P*beta0/(sigma^2*Gamma)
};

inline SnrDerived snr_derived(const ChannelParams& ch) {
    ch.validate();
    SnrDerived out;
    out.gamma_th = std::exp2(ch.rate_R / ch.bandwidth_B) - 1.0;
    out.gamma_bar0 = ch.tx_power_P * ch.ref_gain_beta0 / (ch.noise_power_sigma2 * ch.snr_gap_Gamma);
    return out;
}

namespace detail {

inline double success_prob_sq(const ChannelParams& ch, const SnrDerived& snr, double sq_dist_3d) {
    const double z = (snr.gamma_th / snr.gamma_bar0) * std::pow(sq_dist_3d, 0.5 * ch.pathloss_alpha);
    return ccdf_fading(ch.fading, z);
}

}  // namespace detail

/// Probability that one packet is received at horizontal distance horiz_dist.
inline double packet_success_prob(const ChannelParams& ch, double horiz_dist) {
    if (!(horiz_dist >= 0.0)) throw std::domain_error("horiz_dist must be >= 0");
    const SnrDerived snr = snr_derived(ch);
    return detail::success_prob_sq(ch, snr, ch.altitude_H * ch.altitude_H + horiz_dist * horiz_dist);
}

/// p_D: per-packet success probability at horizontal distance exactly D.
inline double threshold_success_prob(const ChannelParams& ch, double D) {
    return packet_success_prob(ch, D);
}

/// D*: horizontal distance at which the mean received SNR equals gamma_th.
inline double critical_distance(const ChannelParams& ch) {
    const SnrDerived snr = snr_derived(ch);
    const double reach_sq = std::pow(snr.gamma_bar0 / snr.gamma_th, 2.0 / ch.pathloss_alpha);
    const double h_sq = ch.altitude_H * ch.altitude_H;
    if (reach_sq < h_sq * (1.0 - 1e-12))
        throw infeasible_geometry_error(
            "threshold SNR is unreachable at any horizontal distance (altitude too high or link too weak)");
    return std::sqrt(std::max(0.0, reach_sq - h_sq));
}

/// The scenario's auxiliary distance, defaulting to the critical distance.
inline double resolve_aux_distance(const Scenario& scenario) {
    return scenario.aux_distance_D ? *scenario.aux_distance_D : critical_distance(scenario.channel);
}

}  // namespace uavcast
