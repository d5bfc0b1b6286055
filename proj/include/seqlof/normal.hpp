#pragma once

namespace seqlof {

// Standard normal CDF.
double normal_cdf(double x);

// Standard normal density.
double normal_pdf(double x);

// Inverse of the standard normal CDF on (0,1).
//
// Rational approximation (Acklam) polished with one Halley step against
// erfc, giving errors far below 1e-12 over the whole open interval.
// Throws DomainError for p outside (0,1).
double normal_quantile(double p);

} // namespace seqlof
