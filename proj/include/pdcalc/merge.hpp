#pragma once

#include <span>
#include <vector>

#include "pdcalc/core.hpp"

namespace pdcalc {

// Running state of a straight merge: total credence and credence-weighted
// probability mass. Counter-evidence cancels here exactly, before any
// division happens; a distribution is only extracted at the end.
class MergeState {
public:
    MergeState() = default;
    explicit MergeState(std::size_t size) : m_mass(size, 0.0) {}

    void add(double credence, std::span<const double> dist);
    void add(const MergeState& other);

    double weight() const { return m_weight; }
    const std::vector<double>& mass() const { return m_mass; }
    bool empty() const { return m_mass.empty(); }

    // Extraction is defined iff |weight| > TOL_SUM.
    bool extractable() const;
    std::vector<double> mean() const;

private:
    double m_weight = 0.0;
    std::vector<double> m_mass;
};

// Straight merge: total credence is the sum of credences, the distribution is
// the credence-weighted mean. Negative credences (counter-evidence) are
// admitted; they may cancel the merger down to zero weight, which is an error
// on extraction.
AlphaEvidence spd_merge(std::span<const AlphaEvidence> evidences);

// An evidence known to hold only with probability p carries p times the
// credence: [k; d] true with probability p is equivalent to [p*k; d].
AlphaEvidence scale_by_truth_probability(const AlphaEvidence& evidence, double truth_probability);

// Converts per-cell credence-tagged weights into a single evidence: total
// credence sum(k_j * q_j), cell probabilities k_j*q_j renormalized. An
// equi-credible proper distribution passes through exactly.
AlphaEvidence normalize(const WeightedBinarySet& set);

// Agreement statistics of a set of binary evidences: credence-weighted mean,
// standard deviation, and the accord lambda = 1 - 2*sigma in [0, 1]. The
// clamped flag records ulp-level drift absorbed at the boundary.
struct AccordReport {
    double pbar;
    double sigma;
    double lambda;
    bool clamped;
};

AccordReport accord(std::span<const BinaryEvidence> evidences);

// Offsetting merge: the straight-merge mean distribution, with total credence
// discounted by the accord factor. Total discord yields credence zero, not an
// error. Credences must be nonnegative; the operation is defined on the whole
// multiset at once and is not built from a binary operator.
AlphaEvidence opd_merge(std::span<const BinaryEvidence> evidences,
                        const Partition& partition = binary_partition());

} // namespace pdcalc
