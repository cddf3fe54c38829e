#pragma once

#include <span>

#include "pdcalc/core.hpp"

namespace pdcalc {

// P(A | B) = P(A&B) / P(B). Conditioning on a null event is an error.
double conditionalize(const FirstOrderPrior& prior);

// Jeffrey's rule: P'(A) = sum_j newB_j * P(A | B_j), terms with newB_j = 0
// skipped. The new distribution must live on the prior's B-partition.
double jeffrey_update(const JointPrior& prior, const Distribution& new_b);

// Result of an indirect update: the revised belief in A with its credence,
// the correlation-scaled credence each B-cell contributed, and the weights
// actually applied (the evidence distribution, renormalized by those
// credences when they differ).
struct IndirectUpdateResult {
    BinaryEvidence updated;
    std::vector<double> per_cell_credences;
    Distribution normalized_weights;
};

// Credence-mediated update of A from evidence about B. Each cell's share of
// the evidence credence is discounted by its correlation with A; the revised
// probability is the conditional mean under the renormalized weights. On a
// two-cell partition this reduces to Jeffrey's rule for the probability, with
// a single correlation fixing the credence. Evidence of credence zero returns
// the Jeffrey probability at credence zero; a positive-credence evidence whose
// every cell decouples from A (all correlations zero) is degenerate.
IndirectUpdateResult pd_indirect_update(const JointPrior& prior, const AlphaEvidence& evidence);

// Merges the evidence multiset (straight merge, canonical order) and applies
// pd_indirect_update once. Input order cannot affect the result.
IndirectUpdateResult pd_sequential_update(const JointPrior& prior,
                                          std::span<const AlphaEvidence> evidences);

} // namespace pdcalc
