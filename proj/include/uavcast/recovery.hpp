#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "uavcast/errors.hpp"

namespace uavcast {

namespace detail {

inline void validate_prob(double p, const char* what) {
    if (!(p >= -1e-12 && p <= 1.0 + 1e-12))
        throw invalid_parameters_error(std::string(what) + " must lie in [0,1]");
}

inline double clamp_prob(double p) { return std::clamp(p, 0.0, 1.0); }

inline double log_binom_pmf(long n, long k, double lp, double lq) {
    return std::lgamma(static_cast<double>(n) + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
           std::lgamma(static_cast<double>(n - k) + 1.0) + static_cast<double>(k) * lp +
           static_cast<double>(n - k) * lq;
}

}  // namespace detail

/// Full pmf of a sum of independent Bernoulli trials (exact convolution DP).
inline std::vector<double> poisson_binomial_pmf(const std::vector<double>& probs) {
    std::vector<double> dp(probs.size() + 1, 0.0);
    dp[0] = 1.0;
    long count = 0;
    for (double p : probs) {
        detail::validate_prob(p, "trial probability");
        p = detail::clamp_prob(p);
        ++count;
        for (long j = count; j >= 1; --j) dp[j] = dp[j] * (1.0 - p) + dp[j - 1] * p;
        dp[0] *= (1.0 - p);
    }
    return dp;
}

/// Pr(sum of Bernoulli(probs) >= threshold), exact DP truncated at the
/// threshold with an absorbing upper state; O(n * threshold).
inline double poisson_binomial_ccdf(const std::vector<double>& probs, long threshold) {
    if (threshold <= 0) return 1.0;
    if (threshold > static_cast<long>(probs.size())) return 0.0;
    std::vector<double> dp(threshold, 0.0);
    dp[0] = 1.0;
    double absorbed = 0.0;
    for (double p : probs) {
        detail::validate_prob(p, "trial probability");
        p = detail::clamp_prob(p);
        absorbed += dp[threshold - 1] * p;
        for (long j = threshold - 1; j >= 1; --j) dp[j] = dp[j] * (1.0 - p) + dp[j - 1] * p;
        dp[0] *= (1.0 - p);
    }
    return std::min(absorbed, 1.0);
}

/// Pr(Binomial(n,p) >= threshold) via tail summation on the smaller tail.
inline double binomial_ccdf(long n, double p, long threshold) {
    detail::validate_prob(p, "binomial p");
    p = detail::clamp_prob(p);
    if (threshold <= 0) return 1.0;
    if (threshold > n) return 0.0;
    if (p <= 0.0) return 0.0;
    if (p >= 1.0) return 1.0;
    const double lp = std::log(p), lq = std::log1p(-p);
    if (static_cast<double>(threshold) <= static_cast<double>(n) * p) {
        // ccdf is large: compute the lower tail P(X <= threshold-1) instead
        double term = std::exp(detail::log_binom_pmf(n, threshold - 1, lp, lq));
        double sum = term;
        for (long k = threshold - 1; k >= 1; --k) {
            term *= (static_cast<double>(k) / static_cast<double>(n - k + 1)) * ((1.0 - p) / p);
            sum += term;
            if (term < sum * 1e-18) break;
        }
        return std::clamp(1.0 - sum, 0.0, 1.0);
    }
    double term = std::exp(detail::log_binom_pmf(n, threshold, lp, lq));
    double sum = term;
    for (long k = threshold; k < n; ++k) {
        term *= (static_cast<double>(n - k) / static_cast<double>(k + 1)) * (p / (1.0 - p));
        sum += term;
        if (term < sum * 1e-18) break;
    }
    return std::min(sum, 1.0);
}

/// Per-slot packet success probabilities; each slot carries L packets that
/// share the slot's probability.
struct SlotSuccessProfile {
    std::vector<double> per_slot_prob;
    long packets_per_slot_L = 1;

    void validate() const {
        if (packets_per_slot_L < 1) throw invalid_parameters_error("packets_per_slot_L must be >= 1");
        for (double p : per_slot_prob) detail::validate_prob(p, "slot probability");
    }
};

/// Exact file-recovery probability Pr(received >= n_info packets).
inline double recovery_prob_exact(const SlotSuccessProfile& profile, long n_info) {
    profile.validate();
    std::vector<double> packet_probs;
    packet_probs.reserve(profile.per_slot_prob.size() * profile.packets_per_slot_L);
    for (double p : profile.per_slot_prob)
        for (long l = 0; l < profile.packets_per_slot_L; ++l) packet_probs.push_back(p);
    return poisson_binomial_ccdf(packet_probs, n_info);
}

/// Binomial lower bound on the recovery probability: only connection slots
/// count and every such packet succeeds with exactly p_D.
inline double recovery_prob_lower_bound(long n_conn_slots, long L, double p_D, long n_info) {
    if (n_conn_slots < 0 || L < 0 || n_info < 0)
        throw invalid_parameters_error("counts must be non-negative");
    return binomial_ccdf(n_conn_slots * L, p_D, n_info);
}

inline double gaussian_q(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

/// Gaussian approximation of recovery_prob_lower_bound.
inline double gaussian_lb_approx(long n_conn_slots, long L, double p_D, long n_info) {
    detail::validate_prob(p_D, "p_D");
    const double trials = static_cast<double>(n_conn_slots) * static_cast<double>(L);
    const double variance = trials * p_D * (1.0 - p_D);
    if (!(variance > 0.0))
        throw invalid_parameters_error("gaussian_lb_approx is degenerate for p_D in {0,1} or zero trials");
    return gaussian_q((static_cast<double>(n_info) - trials * p_D) / std::sqrt(variance));
}

/// Inverse of gaussian_q: x with Q(x) = p.  Rational initial guess (Acklam)
/// refined by Newton steps on Q itself.
inline double inverse_gaussian_q(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::domain_error("inverse_gaussian_q requires p in (0,1)");
    static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                   -2.759285104469687e+02, 1.383577518672690e+02,
                                   -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                   -1.556989798598866e+02, 6.680131188771972e+01,
                                   -1.328068155288572e+01};
    static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                   -2.400758277161838e+00, -2.549732539343734e+00,
                                   4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                   2.445134137142996e+00, 3.754408661907416e+00};
    const double q = p;  // Phi^-1(p), then negate: Q(x) = Phi(-x)
    constexpr double p_low = 0.02425;
    double x;
    if (q < p_low) {
        const double r = std::sqrt(-2.0 * std::log(q));
        x = (((((c[0] * r + c[1]) * r + c[2]) * r + c[3]) * r + c[4]) * r + c[5]) /
            ((((d[0] * r + d[1]) * r + d[2]) * r + d[3]) * r + 1.0);
    } else if (q <= 1.0 - p_low) {
        const double u = q - 0.5;
        const double r = u * u;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * u /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double r = std::sqrt(-2.0 * std::log1p(-q));
        x = -(((((c[0] * r + c[1]) * r + c[2]) * r + c[3]) * r + c[4]) * r + c[5]) /
            ((((d[0] * r + d[1]) * r + d[2]) * r + d[3]) * r + 1.0);
    }
    x = -x;
    for (int iter = 0; iter < 2; ++iter) {
        const double pdf = std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
        if (pdf <= 0.0) break;
        x += (gaussian_q(x) - p) / pdf;
    }
    return x;
}

/// Minimum connection slots/time implied by the recovery-probability target.
struct ConnectionRequirement {
    long min_slots_Mmin = 0;
    double min_time_Tmin = 0.0;
    double p_D = 0.0;
    double A = 0.0;  // required sqrt of packet-trial count before slot rounding
};

/// Inverts the Gaussian tail approximation for the slot-count requirement and
/// verifies the result against the exact binomial tail, nudging the slot
/// count up when the approximation landed short of the target.
inline ConnectionRequirement min_connection_requirement(double p_D, long n_info, long L,
                                                        double Pbar, double delta_t) {
    detail::validate_prob(p_D, "p_D");
    p_D = detail::clamp_prob(p_D);
    if (n_info < 1 || L < 1) throw invalid_parameters_error("n_info and L must be >= 1");
    if (!(Pbar > 0.0 && Pbar < 1.0)) throw invalid_parameters_error("Pbar must be in (0,1)");
    if (!(delta_t > 0.0)) throw invalid_parameters_error("delta_t must be > 0");
    if (p_D <= 0.0) throw infeasible_error("p_D = 0: no connection distance can meet the target");

    ConnectionRequirement req;
    req.p_D = p_D;
    constexpr long kMaxSlots = 1000000000L;
    if (p_D >= 1.0) {
        req.A = std::sqrt(static_cast<double>(n_info));
        req.min_slots_Mmin = (n_info + L - 1) / L;
    } else {
        const double qi = inverse_gaussian_q(Pbar);
        const double n_inf = static_cast<double>(n_info);
        req.A = (std::sqrt(4.0 * n_inf + (1.0 - p_D) * qi * qi) - qi * std::sqrt(1.0 - p_D)) /
                (2.0 * std::sqrt(p_D));
        const double slots = req.A * req.A / static_cast<double>(L);
        if (!(slots <= static_cast<double>(kMaxSlots)))
            throw infeasible_error("connection requirement exceeds the slot-count guard (1e9)");
        req.min_slots_Mmin = static_cast<long>(std::ceil(slots - 1e-9));
        int bumps = 0;
        while (binomial_ccdf(req.min_slots_Mmin * L, p_D, n_info) < Pbar) {
            ++req.min_slots_Mmin;
            if (++bumps > 64)
                throw solver_failure_error("slot requirement failed to verify against the binomial tail");
        }
    }
    req.min_time_Tmin = static_cast<double>(req.min_slots_Mmin) * delta_t;
    return req;
}

/// ccdf dominance of a Poisson-binomial sum over the binomial with the
/// smallest per-trial probability; exact DP on both sides.
inline bool lemma1_dominance_check(const std::vector<double>& probs, double p_hat) {
    detail::validate_prob(p_hat, "p_hat");
    for (double p : probs) {
        detail::validate_prob(p, "trial probability");
        if (p_hat > p + 1e-12)
            throw invalid_parameters_error("lemma1_dominance_check requires p_hat <= min(probs)");
    }
    const std::vector<double> pmf_x = poisson_binomial_pmf(probs);
    const std::vector<double> pmf_ref =
        poisson_binomial_pmf(std::vector<double>(probs.size(), detail::clamp_prob(p_hat)));
    double ccdf_x = 0.0, ccdf_ref = 0.0;
    for (long x = static_cast<long>(probs.size()); x >= 0; --x) {
        ccdf_x += pmf_x[x];
        ccdf_ref += pmf_ref[x];
        if (ccdf_x < ccdf_ref - 1e-12) return false;
    }
    return true;
}

}  // namespace uavcast
