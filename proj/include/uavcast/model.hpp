#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uavcast/errors.hpp"
#include "uavcast/geometry.hpp"

namespace uavcast {

// All quantities are SI internally: meters, seconds, watts, Hz, bits.
// dB / dBm values are converted once at the configuration boundary.

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double dbm_to_watts(double dbm) { return 1e-3 * std::pow(10.0, dbm / 10.0); }

struct FadingModel {
    enum class Kind { LoS, Rician };

    Kind kind = Kind::LoS;
    double k_factor_Kc = 0.0;  // Rician K-factor, power ratio of LoS to scattered component

    static FadingModel los() { return {Kind::LoS, 0.0}; }
    static FadingModel rician(double kc) {
        if (!(kc >= 0.0)) throw invalid_parameters_error("Rician K-factor must be >= 0");
        return {Kind::Rician, kc};
    }
    bool is_los() const { return kind == Kind::LoS; }
};

struct ChannelParams {
    double tx_power_P = 0.0;         // watts
    double bandwidth_B = 0.0;        // Hz
    double noise_power_sigma2 = 0.0; // watts
    double snr_gap_Gamma = 1.0;      // linear, >= 1
    double ref_gain_beta0 = 0.0;     // channel power gain at 1 m, linear
    double pathloss_alpha = 2.0;     // >= 2
    double altitude_H = 0.0;         // meters, > 0
    double rate_R = 0.0;             // bits/s
    FadingModel fading = FadingModel::los();

    void validate() const {
        if (!(tx_power_P > 0.0)) throw invalid_parameters_error("tx_power_P must be > 0");
        if (!(bandwidth_B > 0.0)) throw invalid_parameters_error("bandwidth_B must be > 0");
        if (!(noise_power_sigma2 > 0.0)) throw invalid_parameters_error("noise_power_sigma2 must be > 0");
        if (!(snr_gap_Gamma >= 1.0)) throw invalid_parameters_error("snr_gap_Gamma must be >= 1");
        if (!(ref_gain_beta0 > 0.0)) throw invalid_parameters_error("ref_gain_beta0 must be > 0");
        if (!(pathloss_alpha >= 2.0)) throw invalid_parameters_error("pathloss_alpha must be >= 2");
        if (!(altitude_H > 0.0)) throw invalid_parameters_error("altitude_H must be > 0");
        if (!(rate_R > 0.0)) throw invalid_parameters_error("rate_R must be > 0");
    }
};

struct RlncParams {
    double file_bits_W = 0.0;      // bits
    double packet_bits_Rp = 0.0;   // bits/packet
    double slot_len_delta_t = 0.0; // seconds
    double max_speed_Vmax = 0.0;   // m/s
    double target_prob_Pbar = 0.0; // in (0,1)

    void validate() const {
        if (!(file_bits_W > 0.0)) throw invalid_parameters_error("file_bits_W must be > 0");
        if (!(packet_bits_Rp > 0.0)) throw invalid_parameters_error("packet_bits_Rp must be > 0");
        if (!(slot_len_delta_t > 0.0)) throw invalid_parameters_error("slot_len_delta_t must be > 0");
        if (!(max_speed_Vmax > 0.0)) throw invalid_parameters_error("max_speed_Vmax must be > 0");
        if (!(target_prob_Pbar > 0.0 && target_prob_Pbar < 1.0))
            throw invalid_parameters_error("target_prob_Pbar must be in (0,1)");
    }
};

struct DerivedCounts {
    long n_info = 0;           // N' = W / Rp
    long packets_per_slot = 0; // L  = delta_t / Tp
    double packet_time = 0.0;  // Tp = Rp / R, seconds
};

namespace detail {

inline long require_integer(double value, const char* relation) {
    const double rounded = std::round(value);
    if (!(std::abs(value - rounded) <= 1e-6 * std::max(1.0, std::abs(value))) || rounded < 1.0)
        throw invalid_parameters_error(std::string(relation) + " must be a positive integer, got " +
                                       std::to_string(value));
    return static_cast<long>(rounded);
}

}  // namespace detail

/// Packet bookkeeping: N' = W/Rp, Tp = Rp/R, L = delta_t/Tp.
inline DerivedCounts derive_counts(const RlncParams& rlnc, const ChannelParams& channel) {
    rlnc.validate();
    channel.validate();
    DerivedCounts out;
    out.n_info = detail::require_integer(rlnc.file_bits_W / rlnc.packet_bits_Rp, "N' = W/Rp");
    out.packet_time = rlnc.packet_bits_Rp / channel.rate_R;
    out.packets_per_slot =
        detail::require_integer(rlnc.slot_len_delta_t / out.packet_time, "L = delta_t/Tp");
    return out;
}

struct Scenario {
    std::vector<Vec2> gts;
    ChannelParams channel;
    RlncParams rlnc;
    std::optional<double> aux_distance_D;  // nullopt = resolve to the critical distance

    void validate() const {
        channel.validate();
        rlnc.validate();
        if (gts.empty()) throw invalid_parameters_error("scenario needs at least one GT");
        for (const auto& w : gts)
            if (!std::isfinite(w.x) || !std::isfinite(w.y))
                throw invalid_parameters_error("GT coordinates must be finite");
        if (aux_distance_D && !(*aux_distance_D >= 0.0))
            throw invalid_parameters_error("aux_distance_D must be >= 0");
    }

    /// Non-fatal configuration concerns (the slot length should keep the UAV
    /// displacement per slot small relative to the altitude).
    std::vector<std::string> warnings() const {
        std::vector<std::string> out;
        if (rlnc.slot_len_delta_t * rlnc.max_speed_Vmax > channel.altitude_H / 10.0)
            out.push_back("slot_len_delta_t * max_speed_Vmax exceeds altitude_H/10; "
                          "per-slot distances may not be approximately constant");
        return out;
    }
};

/// Piecewise-linear ground track: dwell at waypoint i for dwell_times[i],
/// then travel leg i over segment_travel_times[i].
struct Trajectory {
    std::vector<Vec2> waypoints;
    std::vector<double> segment_travel_times;  // size = waypoints.size() - 1
    std::vector<double> dwell_times;           // size = waypoints.size()

    void validate(double v_max) const {
        if (waypoints.empty()) throw invalid_parameters_error("trajectory needs >= 1 waypoint");
        if (segment_travel_times.size() + 1 != waypoints.size() ||
            dwell_times.size() != waypoints.size())
            throw invalid_parameters_error("trajectory time vectors do not match waypoint count");
        for (double d : dwell_times)
            if (!(d >= 0.0)) throw invalid_parameters_error("dwell times must be >= 0");
        for (std::size_t i = 0; i < segment_travel_times.size(); ++i) {
            const double len = dist(waypoints[i], waypoints[i + 1]);
            const double t = segment_travel_times[i];
            if (!(t >= 0.0)) throw invalid_parameters_error("travel times must be >= 0");
            if (len > 1e-12 && !(len / t <= v_max * (1.0 + 1e-9)))
                throw invalid_parameters_error("leg exceeds maximum speed");
        }
    }

    double total_time() const {
        double t = 0.0;
        for (double d : dwell_times) t += d;
        for (double s : segment_travel_times) t += s;
        return t;
    }
};

/// Ground position at mission time t; constant during dwells, linear along legs.
inline Vec2 sample_position(const Trajectory& traj, double t) {
    const double total = traj.total_time();
    if (!(t >= -1e-9) || !(t <= total + 1e-9))
        throw std::domain_error("sample time outside [0, total_time]");
    t = std::clamp(t, 0.0, total);
    double cursor = 0.0;
    const std::size_t n = traj.waypoints.size();
    for (std::size_t i = 0; i < n; ++i) {
        cursor += traj.dwell_times[i];
        if (t <= cursor) return traj.waypoints[i];
        if (i + 1 == n) break;
        const double leg = traj.segment_travel_times[i];
        if (t <= cursor + leg) {
            const double frac = leg > 0.0 ? (t - cursor) / leg : 1.0;
            return lerp(traj.waypoints[i], traj.waypoints[i + 1], frac);
        }
        cursor += leg;
    }
    return traj.waypoints.back();
}

}  // namespace uavcast
