#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mofwe/dataset.hpp"
#include "mofwe/params.hpp"

namespace mofwe {

/// Marshall-Olkin tilt parameter; theta = 1 is the identity transform.
struct TiltParameter {
    double theta;

    explicit TiltParameter(double theta_) : theta(theta_) {
        if (!(theta > 0.0))
            throw std::domain_error("TiltParameter: theta must be positive");
    }
};

/// Contract shared by every lifetime model the toolkit can fit or transform:
/// a cdf and a log density on (0, inf), plus parameter metadata. log_pdf is
/// the primary density accessor so likelihood sums stay stable for all
/// families.
class DistributionFamily {
public:
    virtual ~DistributionFamily() = default;

    virtual std::string_view name() const = 0;
    virtual std::span<const std::string_view> param_names() const = 0;
    std::size_t param_count() const { return param_names().size(); }

    virtual double cdf(double x, std::span<const double> params) const = 0;
    virtual double log_pdf(double x, std::span<const double> params) const = 0;

    double pdf(double x, std::span<const double> params) const {
        return std::exp(log_pdf(x, params));
    }

    /// Analytic gradient of the log-likelihood over a sample, when the
    /// family has one; fitting falls back to finite differences otherwise.
    virtual std::optional<std::vector<double>> score(const Dataset& data,
                                                     std::span<const double> params) const {
        (void)data;
        (void)params;
        return std::nullopt;
    }

    /// Deterministic starting points for maximum-likelihood fitting.
    virtual std::vector<std::vector<double>> default_starts(const Dataset& data) const = 0;
};

// Generic Marshall-Olkin transform over an arbitrary baseline.
double mo_cdf(const DistributionFamily& baseline, std::span<const double> params,
              const TiltParameter& tilt, double x);
double mo_pdf(const DistributionFamily& baseline, std::span<const double> params,
              const TiltParameter& tilt, double x);
double mo_sf(const DistributionFamily& baseline, std::span<const double> params,
             const TiltParameter& tilt, double x);
double mo_hazard(const DistributionFamily& baseline, std::span<const double> params,
                 const TiltParameter& tilt, double x);
double mo_reversed_hazard(const DistributionFamily& baseline, std::span<const double> params,
                          const TiltParameter& tilt, double x);
double mo_cumulative_hazard(const DistributionFamily& baseline, std::span<const double> params,
                            const TiltParameter& tilt, double x);

/// Baseline flexible Weibull extension, parameters (alpha, beta).
class FweFamily final : public DistributionFamily {
public:
    std::string_view name() const override { return "fwe"; }
    std::span<const std::string_view> param_names() const override;
    double cdf(double x, std::span<const double> params) const override;
    double log_pdf(double x, std::span<const double> params) const override;
    std::optional<std::vector<double>> score(const Dataset& data,
                                             std::span<const double> params) const override;
    std::vector<std::vector<double>> default_starts(const Dataset& data) const override;
};

/// Two-parameter Weibull with cdf 1 - exp(-(alpha*x)^beta).
class WeibullFamily final : public DistributionFamily {
public:
    std::string_view name() const override { return "weibull"; }
    std::span<const std::string_view> param_names() const override;
    double cdf(double x, std::span<const double> params) const override;
    double log_pdf(double x, std::span<const double> params) const override;
    std::vector<std::vector<double>> default_starts(const Dataset& data) const override;
};

/// Linear failure rate with cdf 1 - exp(-a*x - b*x^2/2).
class LfrFamily final : public DistributionFamily {
public:
    std::string_view name() const override { return "lfr"; }
    std::span<const std::string_view> param_names() const override;
    double cdf(double x, std::span<const double> params) const override;
    double log_pdf(double x, std::span<const double> params) const override;
    std::vector<std::vector<double>> default_starts(const Dataset& data) const override;
};

/// The three-parameter Marshall-Olkin flexible Weibull extension itself,
/// exposed through the family contract so the fitting machinery treats it
/// uniformly. Parameters (alpha, beta, theta).
class MoFweFamily final : public DistributionFamily {
public:
    std::string_view name() const override { return "mofwe"; }
    std::span<const std::string_view> param_names() const override;
    double cdf(double x, std::span<const double> params) const override;
    double log_pdf(double x, std::span<const double> params) const override;
    std::optional<std::vector<double>> score(const Dataset& data,
                                             std::span<const double> params) const override;
    std::vector<std::vector<double>> default_starts(const Dataset& data) const override;
};

/// The families fitted natively by the comparison harness: FWE, Weibull, LFR.
std::vector<std::shared_ptr<const DistributionFamily>> comparator_families();

/// Look up any supported family ("mofwe", "fwe", "weibull", "lfr") by name.
std::shared_ptr<const DistributionFamily> family_by_name(std::string_view name);

} // namespace mofwe
