#pragma once

#include <span>

#include "pdcalc/core.hpp"

namespace pdcalc {

// Correlation takes the same scalar triple a conditional does.
using CorrelationInput = FirstOrderPrior;

// Pearson correlation of two events: (pAB - pA*pB) / sqrt(pA(1-pA)pB(1-pB)).
// Exactly zero at degenerate marginals (pA or pB in {0, 1}); the result is
// clamped into [-1, 1] against rounding overshoot.
double correlation(const CorrelationInput& input);

// Credence of a two-step derivation: k1*k2/(k1+k2), the harmonic composition.
// Symmetric, zero-absorbing, and equal credences halve: f(x, x) = x/2 exactly.
double cross_credence(double k1, double k2);

// n-step composition: 1/sum(1/k_i). A singleton chain is returned unchanged;
// any zero link collapses the chain to zero.
double cross_credence_chain(std::span<const double> credences);

// Credence transferred to a conclusion whose own credence k2 is at stake,
// derived through a correlated premise of credence k1:
// |rho|*k1*k2 / (|rho|*k1 + k2). The correlation discounts the premise side.
double unilateral_cross_credence(double rho, double k1, double k2);

// Both sides discounted: |rho| * k1*k2/(k1+k2).
double bilateral_cross_credence(double rho, double k1, double k2);

} // namespace pdcalc
