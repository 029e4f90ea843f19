#include "mofwe/fwe.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mofwe {

namespace detail {

void require_positive_x(double x, const char* fn) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw std::domain_error(std::string(fn) + ": x must be positive, got " + std::to_string(x));
}

LinkEval eval_link(double x, double alpha, double beta) {
    LinkEval e;
    e.w = alpha * x - beta / x;
    e.dw = alpha + beta / (x * x);
    e.expw = std::exp(e.w);
    e.surv = std::exp(-e.expw);
    return e;
}

} // namespace detail

double fwe_link(double x, const FweParams& p) {
    detail::require_positive_x(x, "fwe_link");
    return p.alpha * x - p.beta / x;
}

double fwe_cdf(double x, const FweParams& p) {
    detail::require_positive_x(x, "fwe_cdf");
    const auto e = detail::eval_link(x, p.alpha, p.beta);
    return -std::expm1(-e.expw);
}

double fwe_sf(double x, const FweParams& p) {
    detail::require_positive_x(x, "fwe_sf");
    const auto e = detail::eval_link(x, p.alpha, p.beta);
    return e.surv;
}

double fwe_pdf(double x, const FweParams& p) {
    detail::require_positive_x(x, "fwe_pdf");
    const auto e = detail::eval_link(x, p.alpha, p.beta);
    // dw * exp(w - e^w) avoids the 0*inf that dw * expw * surv hits when
    // expw overflows.
    return e.dw * std::exp(e.w - e.expw);
}

double fwe_hazard(double x, const FweParams& p) {
    detail::require_positive_x(x, "fwe_hazard");
    const auto e = detail::eval_link(x, p.alpha, p.beta);
    return e.dw * e.expw;
}

double fwe_reversed_hazard(double x, const FweParams& p) {
    detail::require_positive_x(x, "fwe_reversed_hazard");
    const auto e = detail::eval_link(x, p.alpha, p.beta);
    const double cdf = -std::expm1(-e.expw);
    return e.dw * std::exp(e.w - e.expw) / cdf;
}

} // namespace mofwe
