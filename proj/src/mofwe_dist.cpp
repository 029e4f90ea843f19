#include "mofwe/mofwe_dist.hpp"

#include <cmath>

namespace mofwe {

namespace {

// 1 - (1-theta) * surv, the Marshall-Olkin denominator. Lies between
// min(1, theta) and max(1, theta), so it never cancels to zero.
inline double mo_denominator(double surv, double theta) {
    return 1.0 - (1.0 - theta) * surv;
}

} // namespace

double mofwe_cdf(double x, const MoFweParams& p) {
    detail::require_positive_x(x, "mofwe_cdf");
    const auto e = detail::eval_link(x, p.alpha, p.beta);
    const double g = -std::expm1(-e.expw);
    return g / mo_denominator(e.surv, p.theta);
}

double mofwe_pdf(double x, const MoFweParams& p) {
    detail::require_positive_x(x, "mofwe_pdf");
    const auto e = detail::eval_link(x, p.alpha, p.beta);
    const double den = mo_denominator(e.surv, p.theta);
    return p.theta * e.dw * std::exp(e.w - e.expw) / (den * den);
}

LogDensity mofwe_log_pdf(double x, const MoFweParams& p) {
    detail::require_positive_x(x, "mofwe_log_pdf");
    const auto e = detail::eval_link(x, p.alpha, p.beta);
    // For large links surv underflows to exactly 0 and the log1p term
    // vanishes; w - expw then carries the whole (huge negative) tail.
    const double tail = -2.0 * std::log1p(-(1.0 - p.theta) * e.surv);
    return LogDensity{std::log(p.theta) + std::log(e.dw) + e.w - e.expw + tail};
}

double mofwe_sf(double x, const MoFweParams& p) {
    detail::require_positive_x(x, "mofwe_sf");
    const auto e = detail::eval_link(x, p.alpha, p.beta);
    return p.theta * e.surv / mo_denominator(e.surv, p.theta);
}

double mofwe_hazard(double x, const MoFweParams& p) {
    detail::require_positive_x(x, "mofwe_hazard");
    const auto e = detail::eval_link(x, p.alpha, p.beta);
    // Closed form; never divides pdf by a survival that may have
    // underflowed to zero.
    return e.dw * e.expw / mo_denominator(e.surv, p.theta);
}

double mofwe_reversed_hazard(double x, const MoFweParams& p) {
    detail::require_positive_x(x, "mofwe_reversed_hazard");
    const auto e = detail::eval_link(x, p.alpha, p.beta);
    const double g = -std::expm1(-e.expw);
    return e.dw * std::exp(e.w - e.expw) / (g * mo_denominator(e.surv, p.theta));
}

double mofwe_cumulative_hazard(double x, const MoFweParams& p) {
    detail::require_positive_x(x, "mofwe_cumulative_hazard");
    const auto e = detail::eval_link(x, p.alpha, p.beta);
    // -log sf expanded; exact even where sf itself underflows.
    return e.expw - std::log(p.theta) + std::log(mo_denominator(e.surv, p.theta));
}

double mofwe_log_pdf_deriv(double x, const MoFweParams& p) {
    detail::require_positive_x(x, "mofwe_log_pdf_deriv");
    const auto e = detail::eval_link(x, p.alpha, p.beta);
    const double den = mo_denominator(e.surv, p.theta);
    const double ddw = -2.0 * p.beta / (x * x * x);
    return ddw / e.dw + e.dw * (1.0 - e.expw)
         - 2.0 * (1.0 - p.theta) * e.dw * e.expw * e.surv / den;
}

} // namespace mofwe
