#pragma once

#include <cstdint>
#include <limits>

#include "quickdet/rng.hpp"

namespace quickdet {

/// Zero-mean Gaussian pre/post pair: pre-change N(0, sigma2), post-change
/// N(0, sigma2 + signal_power). The log-likelihood ratio and KL divergence
/// have closed forms, cached at construction. All likelihood arithmetic is
/// log-domain; the raw ratio is never formed.
class GaussianVariancePair {
public:
    GaussianVariancePair(double sigma2, double signal_power);

    /// signal_power from SNR in dB: P = sigma2 * 10^(snr_db/10).
    static GaussianVariancePair from_snr_db(double sigma2, double snr_db);

    double sigma2() const { return sigma2_; }
    double signal_power() const { return signal_power_; }
    double snr_db() const;

    /// KL divergence I(f1, f0) = (1/2)[log(1/(1 + P/sigma2)) + P/sigma2].
    /// Zero iff signal_power is zero.
    double kl_divergence() const;

    /// log f1(x) - log f0(x) for a real sample x.
    double llr(double x) const { return log_ratio_term_ + quad_coeff_ * x * x; }

    /// Log densities, for cross-checking the closed-form llr.
    double log_density_pre(double x) const;
    double log_density_post(double x) const;

    double sample_pre(TrialRng& rng) const;
    double sample_post(TrialRng& rng) const;

    /// Standard deviations of the two regimes, for callers that scale their
    /// own unit-normal draws (one distribution object per trial).
    double pre_std() const { return std_pre_; }
    double post_std() const { return std_post_; }

private:
    double sigma2_;
    double signal_power_;
    double log_ratio_term_;  // -(1/2) log(1 + P/sigma2)
    double quad_coeff_;      // P / (2 sigma2 (sigma2 + P))
    double std_pre_;
    double std_post_;
};

/// Change-time regime: the observation distribution switches from f0 to f1 at
/// slot `change_point` (inclusive). `kNeverChanges` encodes the no-change
/// measure.
struct ChangeSpec {
    static constexpr std::uint64_t kNeverChanges = std::numeric_limits<std::uint64_t>::max();

    std::uint64_t change_point = kNeverChanges;

    static ChangeSpec at(std::uint64_t t);
    static ChangeSpec never() { return ChangeSpec{kNeverChanges}; }

    bool is_post_change(std::uint64_t slot) const { return slot >= change_point; }
    bool never_changes() const { return change_point == kNeverChanges; }
};

/// One slot's observation: either a real sample (energy was spent) or the
/// trivial marker. The flag is authoritative; `value` is NaN when trivial so
/// no real sample can be confused with the marker.
struct Observation {
    double value = std::numeric_limits<double>::quiet_NaN();
    bool took_sample = false;

    static Observation trivial() { return Observation{}; }
    static Observation sampled(double x) { return Observation{x, true}; }
};

/// Log-likelihood ratio of an observation: the closed form for non-trivial
/// samples, exactly 0 for trivial ones.
double llr(const GaussianVariancePair& pair, const Observation& obs);

/// Draws X_k: from f0 while k precedes the change point, from f1 after.
double sample(const GaussianVariancePair& pair, const ChangeSpec& spec, std::uint64_t slot,
              TrialRng& rng);

}  // namespace quickdet
