// Numeric Bloch-Wigner dilogarithm D(z) = Im Li2(z) + arg(1-z) log|z|,
// the analytic companion of the five-term relation.  Double precision,
// absolute accuracy around 1e-13 over the tested ranges.

#pragma once

#include <complex>

#include "confhom/crossratio.hpp"

namespace confhom {

/// DomainError at z = 0 and z = 1.  Exactly zero on real arguments.
double bloch_wigner_D(std::complex<double> z);

/// D(x) - D(y) + D(y/x) - D((1-x^-1)/(1-y^-1)) + D((1-x)/(1-y)); vanishes
/// analytically, returned value is the numerical residual.
double check_five_term_numeric(std::complex<double> x, std::complex<double> y);

/// Embedding of Q or Q(i) into C; the flag flips i -> -i (negates D values).
std::complex<double> embed(const FieldElement& a, bool conjugate_embedding = false);

/// Sum of n_a * D(embed(a)); zero on sums over Q and on five-term expansions.
double evaluate_on_formal_sum(const FormalSum& s, bool conjugate_embedding = false);

} // namespace confhom
