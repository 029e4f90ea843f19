#pragma once

#include "mofwe/fwe.hpp"
#include "mofwe/params.hpp"

namespace mofwe {

double mofwe_cdf(double x, const MoFweParams& p);
double mofwe_pdf(double x, const MoFweParams& p);

/// Log density, evaluated without ever forming e^{e^{link}}, so it stays
/// finite far into the right tail where the plain pdf underflows.
LogDensity mofwe_log_pdf(double x, const MoFweParams& p);

double mofwe_sf(double x, const MoFweParams& p);
double mofwe_hazard(double x, const MoFweParams& p);
double mofwe_reversed_hazard(double x, const MoFweParams& p);
double mofwe_cumulative_hazard(double x, const MoFweParams& p);

/// d/dx log pdf; the sign change of this locates the mode.
double mofwe_log_pdf_deriv(double x, const MoFweParams& p);

} // namespace mofwe
