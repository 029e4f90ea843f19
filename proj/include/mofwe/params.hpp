#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace mofwe {

/// Parameters of the baseline flexible Weibull extension distribution.
/// alpha acts per unit x, beta in units of x; both must be positive.
struct FweParams {
    double alpha;
    double beta;

    FweParams(double alpha_, double beta_) : alpha(alpha_), beta(beta_) {
        if (!(alpha > 0.0) || !std::isfinite(alpha))
            throw std::domain_error("FweParams: alpha must be positive, got " + std::to_string(alpha_));
        if (!(beta > 0.0) || !std::isfinite(beta))
            throw std::domain_error("FweParams: beta must be positive, got " + std::to_string(beta_));
    }
};

/// Parameters of the Marshall-Olkin flexible Weibull extension distribution.
/// theta is the dimensionless tilt parameter; theta = 1 recovers the baseline.
struct MoFweParams {
    double alpha;
    double beta;
    double theta;

    MoFweParams(double alpha_, double beta_, double theta_)
        : alpha(alpha_), beta(beta_), theta(theta_) {
        if (!(alpha > 0.0) || !std::isfinite(alpha))
            throw std::domain_error("MoFweParams: alpha must be positive, got " + std::to_string(alpha_));
        if (!(beta > 0.0) || !std::isfinite(beta))
            throw std::domain_error("MoFweParams: beta must be positive, got " + std::to_string(beta_));
        if (!(theta > 0.0) || !std::isfinite(theta))
            throw std::domain_error("MoFweParams: theta must be positive, got " + std::to_string(theta_));
    }

    /// 1 - theta, always derived, never stored.
    double theta_bar() const { return 1.0 - theta; }

    FweParams baseline() const { return FweParams(alpha, beta); }
};

/// Log of a density. value may be -infinity where the density vanishes;
/// exponentiating always yields a finite nonnegative density.
struct LogDensity {
    double value;

    double density() const { return std::exp(value); }
};

} // namespace mofwe
