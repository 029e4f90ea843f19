#pragma once

#include "mofwe/params.hpp"

namespace mofwe {

namespace detail {

/// Shared per-point pieces of every FWE / MO-FWE formula.
struct LinkEval {
    double w;     // alpha*x - beta/x
    double dw;    // d/dx of the link: alpha + beta/x^2
    double expw;  // e^w
    double surv;  // e^{-e^w}, the baseline survival
};

void require_positive_x(double x, const char* fn);
LinkEval eval_link(double x, double alpha, double beta);

} // namespace detail

/// The link alpha*x - beta/x; strictly increasing on (0, inf).
double fwe_link(double x, const FweParams& p);

double fwe_cdf(double x, const FweParams& p);
double fwe_pdf(double x, const FweParams& p);
double fwe_sf(double x, const FweParams& p);
double fwe_hazard(double x, const FweParams& p);
double fwe_reversed_hazard(double x, const FweParams& p);

} // namespace mofwe
