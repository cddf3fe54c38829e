#include "pdcalc/confirm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pdcalc/updating.hpp"

namespace pdcalc {

double first_order_confirmation(const FirstOrderPrior& prior) {
    return conditionalize(prior) - prior.p_a();
}

ConfirmationReport pdct_confirmation(const JointPrior& prior, const BinaryEvidence& evidence,
                                     PdctMode mode) {
    if (prior.b_partition().size() != 2)
        throw CalcError(Errc::validation, "confirmation needs a binary partition");
    const Distribution dist = validate_distribution({evidence.p, 1.0 - evidence.p},
                                                    prior.b_partition());
    const IndirectUpdateResult update =
        pd_indirect_update(prior, AlphaEvidence(evidence.credence, dist));

    const double k0 = prior.credence();
    const double k10 = update.updated.credence;
    const double p0 = prior.p_a();
    const double p10 = update.updated.p;

    double lambda = 1.0;
    bool clamped = false;
    if (mode == PdctMode::offsetting) {
        // Accord of the old and new belief in A, weighted by their credences.
        const double k1 = evidence.credence;
        lambda = 1.0 - 2.0 * std::abs(p0 - p10) * std::sqrt(k0 * k1) / (k0 + k1);
        if (lambda < 0.0 || lambda > 1.0) {
            if (lambda < -tol_sum || lambda > 1.0 + tol_sum)
                throw std::logic_error("confirmation accord out of bounds");
            lambda = std::clamp(lambda, 0.0, 1.0);
            clamped = true;
        }
    }

    const double first_order =
        first_order_confirmation(FirstOrderPrior::validated(p0, prior.cell(0, 0), prior.p_b(0)));

    return ConfirmationReport{
        first_order,
        (k10 - k0) / k0,
        p10 - p0,
        lambda * (k10 / k0) * p10 - p0,
        lambda,
        clamped,
    };
}

} // namespace pdcalc
