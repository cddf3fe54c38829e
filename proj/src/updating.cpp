#include "pdcalc/updating.hpp"

#include <algorithm>
#include <cmath>

#include "pdcalc/association.hpp"
#include "pdcalc/merge.hpp"

namespace pdcalc {

double conditionalize(const FirstOrderPrior& prior) {
    if (prior.p_b() <= tol_sum)
        throw CalcError(Errc::condition_on_null, "conditioning event has no mass");
    return prior.p_ab() / prior.p_b();
}

double jeffrey_update(const JointPrior& prior, const Distribution& new_b) {
    if (new_b.partition() != prior.b_partition())
        throw CalcError(Errc::partition_mismatch, "new distribution on a different partition");
    double updated = 0.0;
    for (std::size_t j = 0; j < new_b.size(); ++j) {
        const double w = new_b.at(j);
        if (w == 0.0)
            continue;
        const double pb = prior.p_b(j);
        if (pb <= tol_sum)
            throw CalcError(Errc::condition_on_null, "conditioning cell has no mass");
        updated += w * (prior.cell(0, j) / pb);
    }
    return std::clamp(updated, 0.0, 1.0);
}

namespace {

// Correlation of A with cell B_j under the joint prior.
double cell_correlation(const JointPrior& prior, double pa, std::size_t j) {
    return correlation(FirstOrderPrior::validated(pa, prior.cell(0, j), prior.p_b(j)));
}

} // namespace

IndirectUpdateResult pd_indirect_update(const JointPrior& prior, const AlphaEvidence& evidence) {
    if (evidence.dist.partition() != prior.b_partition())
        throw CalcError(Errc::partition_mismatch, "evidence on a different partition");
    const double k0 = prior.credence();
    if (!(k0 > 0.0))
        throw CalcError(Errc::validation, "prior credence must be positive");
    const double k1 = require_nonnegative_credence(evidence.credence, "indirect update");

    const double pa = prior.p_a();
    const std::size_t m = prior.columns();
    const auto& q = evidence.dist;

    for (std::size_t j = 0; j < m; ++j)
        if (q.at(j) > 0.0 && prior.p_b(j) <= tol_sum)
            throw CalcError(Errc::condition_on_null, "conditioning cell has no mass");

    std::vector<double> cell_credence(m);
    for (std::size_t j = 0; j < m; ++j) {
        const double rho = cell_correlation(prior, pa, j);
        cell_credence[j] = unilateral_cross_credence(rho, k1, k0);
    }

    auto conditional_mean = [&](const Distribution& weights) {
        double acc = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            const double w = weights.at(j);
            if (w == 0.0)
                continue;
            const double pb = prior.p_b(j);
            if (pb <= tol_sum)
                throw CalcError(Errc::condition_on_null, "conditioning cell has no mass");
            acc += w * (prior.cell(0, j) / pb);
        }
        return std::clamp(acc, 0.0, 1.0);
    };

    if (k1 == 0.0) {
        // Vacuous evidence: every cell credence is zero, so the weights stay
        // the evidence's own and the revised belief carries no credence.
        const double p = conditional_mean(q);
        return IndirectUpdateResult{BinaryEvidence(0.0, p), std::move(cell_credence), q};
    }

    if (m == 2) {
        // Two cells complement each other: one correlation fixes the credence
        // and the evidence weights apply as they stand.
        const double k10 = cell_credence[0];
        if (k10 <= tol_sum)
            throw CalcError(Errc::degenerate, "evidence carries no credence for the question");
        const double p = conditional_mean(q);
        return IndirectUpdateResult{BinaryEvidence(k10, p), std::move(cell_credence), q};
    }

    std::vector<WeightedBinaryEntry> entries(m);
    for (std::size_t j = 0; j < m; ++j)
        entries[j] = WeightedBinaryEntry{cell_credence[j], q.at(j)};
    AlphaEvidence combined = [&] {
        try {
            return normalize(WeightedBinarySet(prior.b_partition(), std::move(entries)));
        } catch (const CalcError& err) {
            if (err.code() == Errc::degenerate)
                throw CalcError(Errc::degenerate, "evidence carries no credence for the question");
            throw;
        }
    }();
    const double p = conditional_mean(combined.dist);
    return IndirectUpdateResult{BinaryEvidence(combined.credence, p), std::move(cell_credence),
                                std::move(combined.dist)};
}

IndirectUpdateResult pd_sequential_update(const JointPrior& prior,
                                          std::span<const AlphaEvidence> evidences) {
    if (evidences.empty())
        throw CalcError(Errc::validation, "nothing to update with");
    if (evidences.size() == 1)
        return pd_indirect_update(prior, evidences.front());
    // Floating-point addition is order-sensitive; a canonical order makes the
    // result independent of how the caller listed the evidences.
    std::vector<AlphaEvidence> sorted(evidences.begin(), evidences.end());
    std::sort(sorted.begin(), sorted.end(), [](const AlphaEvidence& a, const AlphaEvidence& b) {
        if (a.credence != b.credence)
            return a.credence < b.credence;
        return std::lexicographical_compare(a.dist.probs().begin(), a.dist.probs().end(),
                                            b.dist.probs().begin(), b.dist.probs().end());
    });
    return pd_indirect_update(prior, spd_merge(sorted));
}

} // namespace pdcalc
