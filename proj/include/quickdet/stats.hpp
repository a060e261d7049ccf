#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace quickdet {

/// Monte Carlo point estimate: sample mean, its standard error, trial count.
struct MetricEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t trials = 0;
};

/// Welford accumulator for streaming mean/variance.
class RunningStat {
public:
    void add(double x) {
        ++count_;
        const double delta = x - mean_;
        mean_ += delta / static_cast<double>(count_);
        m2_ += delta * (x - mean_);
    }

    std::uint64_t count() const { return count_; }
    double mean() const { return mean_; }

    /// Unbiased sample variance; requires at least two samples.
    double variance() const {
        if (count_ < 2) throw std::logic_error("RunningStat: variance needs >= 2 samples");
        return m2_ / static_cast<double>(count_ - 1);
    }

    double std_error() const { return std::sqrt(variance() / static_cast<double>(count_)); }

    MetricEstimate estimate() const { return {mean(), std_error(), count()}; }

private:
    std::uint64_t count_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

/// Standard error of a difference/sum of two independent estimates.
inline double combined_se(double se_a, double se_b) {
    return std::sqrt(se_a * se_a + se_b * se_b);
}

}  // namespace quickdet
