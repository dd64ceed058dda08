#pragma once

#include <vector>

#include "speccon/errors.hpp"

namespace speccon::copula {

// Empirical CDF of one channel: F(x) = #{samples <= x} / n.
class EmpiricalCdf {
public:
    // Sorts a copy of the samples. Throws TooFewSamples (n < 2) or
    // NonFiniteInput.
    static EmpiricalCdf fit(const std::vector<double>& samples);

    double cdf(double x) const;

    // Generalized inverse: smallest sample z with F(z) >= y, for y in (0, 1].
    // Throws OutOfRange otherwise.
    double inverse(double y) const;

    std::size_t size() const { return sorted_.size(); }
    const std::vector<double>& sorted_samples() const { return sorted_; }

private:
    explicit EmpiricalCdf(std::vector<double> sorted) : sorted_(std::move(sorted)) {}
    std::vector<double> sorted_;
};

// Standard normal CDF, accurate to double precision.
double gaussian_cdf(double x);

// Standard normal quantile for p in (0, 1): rational approximation refined by
// one Newton step against gaussian_cdf. Throws OutOfRange outside (0, 1).
double gaussian_quantile(double p);

// Maps one channel to latent Gaussian margins: output[i] =
// quantile(midrank(channel[i]) / (n+1)). Mid-ranks keep ties symmetric, and
// the n+1 rescaling keeps the extremes finite. Rank-preserving and invariant
// under strictly monotone transforms of the input.
std::vector<double> to_gaussian(const std::vector<double>& channel);

}  // namespace speccon::copula
