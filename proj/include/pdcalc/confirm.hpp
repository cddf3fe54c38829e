#pragma once

#include "pdcalc/core.hpp"

namespace pdcalc {

// Whether the credence-theoretic degree uses the raw credence ratio or
// discounts it by the accord of old and new belief.
enum class PdctMode { straight, offsetting };

// Classical degree of confirmation of A by B: P(A | B) - P(A).
double first_order_confirmation(const FirstOrderPrior& prior);

// Degrees of confirmation that an indirect update confers on the hypothesis.
struct ConfirmationReport {
    double first_order;      // P(A | B) - P(A), B the partition's first cell
    double credence_gain;    // (k10 - k0) / k0
    double probability_gain; // P10(A) - P0(A)
    double pdct;             // lambda * (k10/k0) * P10(A) - P0(A)
    double accord_used;      // lambda: 1 for straight, Eq. accord for offsetting
    bool lambda_clamped;
};

// Runs the indirect update of the (binary-partition) prior by the evidence
// and reports all confirmation degrees at once.
ConfirmationReport pdct_confirmation(const JointPrior& prior, const BinaryEvidence& evidence,
                                     PdctMode mode);

} // namespace pdcalc
