#include "pdcalc/merge.hpp"

#include <cmath>
#include <stdexcept>

namespace pdcalc {

void MergeState::add(double credence, std::span<const double> dist) {
    if (m_mass.empty())
        m_mass.assign(dist.size(), 0.0);
    if (dist.size() != m_mass.size())
        throw CalcError(Errc::partition_mismatch, "merge operand has wrong cell count");
    m_weight += credence;
    for (std::size_t j = 0; j < m_mass.size(); ++j)
        m_mass[j] += credence * dist[j];
}

void MergeState::add(const MergeState& other) {
    if (other.empty())
        return;
    if (m_mass.empty())
        m_mass.assign(other.m_mass.size(), 0.0);
    if (other.m_mass.size() != m_mass.size())
        throw CalcError(Errc::partition_mismatch, "merge operand has wrong cell count");
    m_weight += other.m_weight;
    for (std::size_t j = 0; j < m_mass.size(); ++j)
        m_mass[j] += other.m_mass[j];
}

bool MergeState::extractable() const {
    return std::abs(m_weight) > tol_sum;
}

std::vector<double> MergeState::mean() const {
    if (!extractable())
        throw CalcError(Errc::zero_total_credence, "merged credence cancels to zero");
    std::vector<double> out(m_mass.size());
    for (std::size_t j = 0; j < out.size(); ++j)
        out[j] = m_mass[j] / m_weight;
    return out;
}

AlphaEvidence spd_merge(std::span<const AlphaEvidence> evidences) {
    if (evidences.empty())
        throw CalcError(Errc::validation, "nothing to merge");
    const Partition& partition = evidences.front().dist.partition();
    MergeState state(partition.size());
    for (const auto& e : evidences) {
        if (e.dist.partition() != partition)
            throw CalcError(Errc::partition_mismatch, "merge operands on different partitions");
        state.add(e.credence, e.dist.probs());
    }
    // Counter-evidence exceeding its positive counterpart leaves mass that is
    // not a distribution; validation rejects it here.
    return AlphaEvidence(state.weight(),
                         validate_distribution(state.mean(), partition));
}

AlphaEvidence scale_by_truth_probability(const AlphaEvidence& evidence, double truth_probability) {
    if (!std::isfinite(truth_probability) || truth_probability < 0.0 || truth_probability > 1.0)
        throw CalcError(Errc::range, "truth probability outside [0, 1]");
    return AlphaEvidence(truth_probability * evidence.credence, evidence.dist);
}

AlphaEvidence normalize(const WeightedBinarySet& set) {
    const auto& entries = set.entries();
    // Equal credences on an already-proper distribution pass through exactly.
    bool equal = true;
    double q_sum = 0.0;
    for (const auto& e : entries) {
        if (e.credence != entries.front().credence)
            equal = false;
        q_sum += e.q;
    }
    if (equal && std::abs(q_sum - 1.0) <= tol_sum) {
        std::vector<double> q(entries.size());
        for (std::size_t j = 0; j < q.size(); ++j)
            q[j] = entries[j].q;
        return AlphaEvidence(entries.front().credence,
                             validate_distribution(std::move(q), set.partition()));
    }
    double total = 0.0;
    for (const auto& e : entries)
        total += e.credence * e.q;
    if (total <= tol_sum)
        throw CalcError(Errc::degenerate, "normalization has no credence mass");
    std::vector<double> probs(entries.size());
    for (std::size_t j = 0; j < probs.size(); ++j)
        probs[j] = entries[j].credence * entries[j].q / total;
    return AlphaEvidence(total, validate_distribution(std::move(probs), set.partition()));
}

AccordReport accord(std::span<const BinaryEvidence> evidences) {
    if (evidences.empty())
        throw CalcError(Errc::validation, "accord of an empty set");
    double weight = 0.0;
    double mass = 0.0;
    for (const auto& e : evidences) {
        require_nonnegative_credence(e.credence, "accord");
        weight += e.credence;
        mass += e.credence * e.p;
    }
    if (weight <= tol_sum)
        throw CalcError(Errc::zero_total_credence, "accord of zero total credence");
    const double pbar = mass / weight;
    double varsum = 0.0;
    for (const auto& e : evidences) {
        const double d = e.p - pbar;
        varsum += e.credence * d * d;
    }
    double sigma = std::sqrt(varsum / weight);
    // sigma <= 1/2 for [0,1]-valued evidence; anything past float drift is a bug.
    bool clamped = false;
    if (sigma > 0.5) {
        if (sigma > 0.5 + tol_sum)
            throw std::logic_error("accord sigma out of bounds");
        sigma = 0.5;
        clamped = true;
    }
    const double lambda = 1.0 - 2.0 * sigma;
    return AccordReport{pbar, sigma, lambda, clamped};
}

AlphaEvidence opd_merge(std::span<const BinaryEvidence> evidences, const Partition& partition) {
    if (partition.size() != 2)
        throw CalcError(Errc::validation, "offsetting merge needs a two-cell partition");
    const AccordReport report = accord(evidences);
    double weight = 0.0;
    for (const auto& e : evidences)
        weight += e.credence;
    const double credence = report.lambda * weight;
    std::vector<double> probs{report.pbar, 1.0 - report.pbar};
    return AlphaEvidence(credence, validate_distribution(std::move(probs), partition));
}

} // namespace pdcalc
