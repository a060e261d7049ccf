#include "quickdet/observation.hpp"

#include <cmath>
#include <stdexcept>

namespace quickdet {

namespace {
constexpr double kLog2Pi = 1.8378770664093454836;
}

GaussianVariancePair::GaussianVariancePair(double sigma2, double signal_power)
    : sigma2_(sigma2), signal_power_(signal_power) {
    if (!(sigma2 > 0.0)) throw std::invalid_argument("GaussianVariancePair: sigma2 must be > 0");
    if (!(signal_power >= 0.0))
        throw std::invalid_argument("GaussianVariancePair: signal_power must be >= 0");
    const double post_var = sigma2_ + signal_power_;
    log_ratio_term_ = -0.5 * std::log1p(signal_power_ / sigma2_);
    quad_coeff_ = signal_power_ / (2.0 * sigma2_ * post_var);
    std_pre_ = std::sqrt(sigma2_);
    std_post_ = std::sqrt(post_var);
}

GaussianVariancePair GaussianVariancePair::from_snr_db(double sigma2, double snr_db) {
    return GaussianVariancePair(sigma2, sigma2 * std::pow(10.0, snr_db / 10.0));
}

double GaussianVariancePair::snr_db() const {
    return 10.0 * std::log10(signal_power_ / sigma2_);
}

double GaussianVariancePair::kl_divergence() const {
    // (1/2)[log(1/(1+P/sigma2)) + P/sigma2]; the log term is the cached
    // llr constant, so reuse it.
    return log_ratio_term_ + 0.5 * signal_power_ / sigma2_;
}

double GaussianVariancePair::log_density_pre(double x) const {
    return -0.5 * (kLog2Pi + std::log(sigma2_)) - x * x / (2.0 * sigma2_);
}

double GaussianVariancePair::log_density_post(double x) const {
    const double v = sigma2_ + signal_power_;
    return -0.5 * (kLog2Pi + std::log(v)) - x * x / (2.0 * v);
}

double GaussianVariancePair::sample_pre(TrialRng& rng) const {
    std::normal_distribution<double> unit;
    return std_pre_ * unit(rng);
}

double GaussianVariancePair::sample_post(TrialRng& rng) const {
    std::normal_distribution<double> unit;
    return std_post_ * unit(rng);
}

ChangeSpec ChangeSpec::at(std::uint64_t t) {
    if (t < 1) throw std::invalid_argument("ChangeSpec: change_point must be >= 1");
    return ChangeSpec{t};
}

double llr(const GaussianVariancePair& pair, const Observation& obs) {
    return obs.took_sample ? pair.llr(obs.value) : 0.0;
}

double sample(const GaussianVariancePair& pair, const ChangeSpec& spec, std::uint64_t slot,
              TrialRng& rng) {
    return spec.is_post_change(slot) ? pair.sample_post(rng) : pair.sample_pre(rng);
}

}  // namespace quickdet
