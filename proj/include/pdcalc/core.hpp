#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pdcalc/error.hpp"

namespace pdcalc {

// Tolerance for simplex and validation checks (sums to one, nonnegativity).
inline constexpr double tol_sum = 1e-9;
// Tolerance for algebraic identities between independently computed routes.
inline constexpr double tol_eq = 1e-12;

// Checks a credence value: any finite real. Contexts that forbid
// counter-evidence additionally require nonnegativity; see require_nonnegative.
double require_finite_credence(double credence, const char* context);
double require_nonnegative_credence(double credence, const char* context);

// An ordered, exhaustive set of mutually exclusive outcomes. Cell labels are
// unique and order is significant: distributions index into it positionally.
class Partition {
public:
    explicit Partition(std::vector<std::string> labels);

    std::size_t size() const { return m_labels.size(); }
    const std::vector<std::string>& labels() const { return m_labels; }
    const std::string& label(std::size_t i) const { return m_labels[i]; }

    bool operator==(const Partition&) const = default;

private:
    std::vector<std::string> m_labels;
};

// The two-cell partition used when no labels are supplied.
const Partition& binary_partition();

// A probability distribution over a partition, kept in canonical form:
// every entry in [0, 1] and the floating-point sum exactly 1.0, so that
// validation is idempotent and serialization round-trips bitwise.
class Distribution {
public:
    static Distribution validated(Partition partition, std::vector<double> probs);

    const Partition& partition() const { return m_partition; }
    const std::vector<double>& probs() const { return m_probs; }
    double at(std::size_t i) const { return m_probs[i]; }
    std::size_t size() const { return m_probs.size(); }

    bool operator==(const Distribution&) const = default;

private:
    Distribution(Partition partition, std::vector<double> probs)
        : m_partition(std::move(partition)), m_probs(std::move(probs)) {}

    Partition m_partition;
    std::vector<double> m_probs;
};

// Validates a probability vector against a partition and returns it in
// canonical form. Rejects entries below -TOL_SUM (NEGATIVE_PROB) and sums
// off by more than TOL_SUM (SUM_VIOLATION); residual drift is clamped away.
Distribution validate_distribution(std::vector<double> probs, const Partition& partition);

// Clamps an almost-simplex vector into canonical form. Precondition: entries
// within tolerance of [0, 1] and sum within tolerance of 1 (checked by callers).
void canonicalize_simplex(std::vector<double>& probs);

// First-order evidence with a second-order weight: "distribution d, with
// credence k". Credence may be negative only in straight-merge contexts
// (counter-evidence).
struct AlphaEvidence {
    AlphaEvidence(double credence, Distribution dist);

    double credence;
    Distribution dist;
};

// Evidence about a single proposition: [k; p] on {A, not-A}.
struct BinaryEvidence {
    BinaryEvidence(double credence, double p);

    double credence;
    double p;
};

// One cell's entry in a set pending normalization: relative credence k >= 0
// attached to an unnormalized weight q in [0, 1].
struct WeightedBinaryEntry {
    double credence;
    double q;
};

// A per-cell credence-tagged weight vector over a partition, the input shape
// of normalization. Entry j refers to cell j.
class WeightedBinarySet {
public:
    WeightedBinarySet(Partition partition, std::vector<WeightedBinaryEntry> entries);

    const Partition& partition() const { return m_partition; }
    const std::vector<WeightedBinaryEntry>& entries() const { return m_entries; }
    std::size_t size() const { return m_entries.size(); }

private:
    Partition m_partition;
    std::vector<WeightedBinaryEntry> m_entries;
};

// A credence-tagged joint distribution of a binary proposition A against a
// partition {B_1..B_m}: row 0 holds P(A & B_j), row 1 holds P(~A & B_j).
// Cells are kept in canonical simplex form over the flattened table.
class JointPrior {
public:
    static JointPrior validated(double credence, Partition b_partition,
                                std::array<std::vector<double>, 2> cells);

    double credence() const { return m_credence; }
    const Partition& b_partition() const { return m_b_partition; }
    const std::array<std::vector<double>, 2>& cells() const { return m_cells; }
    double cell(std::size_t row, std::size_t j) const { return m_cells[row][j]; }
    std::size_t columns() const { return m_cells[0].size(); }

    double p_a() const;                    // marginal of A
    double p_b(std::size_t j) const;       // marginal of B_j
    std::vector<double> b_marginals() const;

private:
    JointPrior(double credence, Partition b_partition, std::array<std::vector<double>, 2> cells)
        : m_credence(credence), m_b_partition(std::move(b_partition)), m_cells(std::move(cells)) {}

    double m_credence;
    Partition m_b_partition;
    std::array<std::vector<double>, 2> m_cells;
};

// Marginals of a joint prior: P(A) and the vector P(B_j).
std::pair<double, std::vector<double>> joint_marginals(const JointPrior& prior);

// The scalar triple (P(A), P(A&B), P(B)) from which a conditional probability
// or a correlation coefficient is formed. Construction enforces the Frechet
// bounds max(0, pA+pB-1) <= pAB <= min(pA, pB) within tolerance, then clamps
// pAB exactly into that interval.
class FirstOrderPrior {
public:
    static FirstOrderPrior validated(double p_a, double p_ab, double p_b);

    double p_a() const { return m_p_a; }
    double p_ab() const { return m_p_ab; }
    double p_b() const { return m_p_b; }

private:
    FirstOrderPrior(double p_a, double p_ab, double p_b)
        : m_p_a(p_a), m_p_ab(p_ab), m_p_b(p_b) {}

    double m_p_a;
    double m_p_ab;
    double m_p_b;
};

} // namespace pdcalc
