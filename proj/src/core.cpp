#include "pdcalc/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace pdcalc {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::negative_prob: return "NEGATIVE_PROB";
        case Errc::sum_violation: return "SUM_VIOLATION";
        case Errc::negative_credence: return "NEGATIVE_CREDENCE";
        case Errc::range: return "RANGE";
        case Errc::validation: return "VALIDATION";
        case Errc::parse: return "PARSE";
        case Errc::io: return "IO";
        case Errc::zero_total_credence: return "ZERO_TOTAL_CREDENCE";
        case Errc::degenerate: return "DEGENERATE";
        case Errc::condition_on_null: return "CONDITION_ON_NULL";
        case Errc::partition_mismatch: return "PARTITION_MISMATCH";
    }
    return "UNKNOWN";
}

int errc_exit_code(Errc code) {
    switch (code) {
        case Errc::negative_prob:
        case Errc::sum_violation:
        case Errc::negative_credence:
        case Errc::range:
        case Errc::validation:
        case Errc::parse:
            return 2;
        case Errc::io:
            return 1;
        case Errc::zero_total_credence:
        case Errc::degenerate:
        case Errc::condition_on_null:
            return 3;
        case Errc::partition_mismatch:
            return 4;
    }
    return 1;
}

double require_finite_credence(double credence, const char* context) {
    if (!std::isfinite(credence))
        throw CalcError(Errc::validation, std::string(context) + ": credence must be finite");
    return credence;
}

double require_nonnegative_credence(double credence, const char* context) {
    require_finite_credence(credence, context);
    if (credence < 0.0)
        throw CalcError(Errc::negative_credence,
                        std::string(context) + ": credence must be nonnegative");
    return credence;
}

Partition::Partition(std::vector<std::string> labels) : m_labels(std::move(labels)) {
    if (m_labels.size() < 2)
        throw CalcError(Errc::validation, "partition needs at least two cells");
    std::set<std::string> seen;
    for (const auto& label : m_labels) {
        if (label.empty())
            throw CalcError(Errc::validation, "partition labels must be non-empty");
        if (!seen.insert(label).second)
            throw CalcError(Errc::validation, "duplicate partition label: " + label);
    }
}

const Partition& binary_partition() {
    static const Partition p(std::vector<std::string>{"A", "~A"});
    return p;
}

void canonicalize_simplex(std::vector<double>& probs) {
    for (auto& x : probs)
        x = std::clamp(x, 0.0, 1.0);
    // Scale to unit mass, then absorb the last rounding residue into the
    // final entry; one or two rounds reach an exact floating-point sum of 1.
    for (int iter = 0; iter < 8; ++iter) {
        double sum = std::accumulate(probs.begin(), probs.end(), 0.0);
        if (sum == 1.0)
            return;
        for (auto& x : probs)
            x /= sum;
        double head = std::accumulate(probs.begin(), probs.end() - 1, 0.0);
        probs.back() = std::clamp(1.0 - head, 0.0, 1.0);
    }
}

namespace {

void check_almost_simplex(const std::vector<double>& probs, const char* context) {
    // Scan for negative entries before oversized ones: an entry above one in
    // near-unit mass always comes with a negative entry elsewhere, and the
    // negative cell is the diagnosis (counter-evidence overshoot).
    for (double x : probs) {
        if (!std::isfinite(x))
            throw CalcError(Errc::validation, std::string(context) + ": non-finite probability");
        if (x < -tol_sum)
            throw CalcError(Errc::negative_prob, std::string(context) + ": negative probability");
    }
    double sum = 0.0;
    for (double x : probs) {
        if (x > 1.0 + tol_sum)
            throw CalcError(Errc::validation,
                            std::string(context) + ": probability exceeds one");
        sum += x;
    }
    if (std::abs(sum - 1.0) > tol_sum)
        throw CalcError(Errc::sum_violation, std::string(context) + ": mass does not sum to one");
}

} // namespace

Distribution Distribution::validated(Partition partition, std::vector<double> probs) {
    if (probs.size() != partition.size())
        throw CalcError(Errc::validation, "distribution length does not match partition");
    check_almost_simplex(probs, "distribution");
    canonicalize_simplex(probs);
    return Distribution(std::move(partition), std::move(probs));
}

Distribution validate_distribution(std::vector<double> probs, const Partition& partition) {
    return Distribution::validated(partition, std::move(probs));
}

AlphaEvidence::AlphaEvidence(double credence_, Distribution dist_)
    : credence(require_finite_credence(credence_, "evidence")), dist(std::move(dist_)) {}

BinaryEvidence::BinaryEvidence(double credence_, double p_)
    : credence(require_finite_credence(credence_, "binary evidence")), p(p_) {
    if (!std::isfinite(p) || p < -tol_sum || p > 1.0 + tol_sum)
        throw CalcError(Errc::range, "binary evidence probability outside [0, 1]");
    p = std::clamp(p, 0.0, 1.0);
}

WeightedBinarySet::WeightedBinarySet(Partition partition, std::vector<WeightedBinaryEntry> entries)
    : m_partition(std::move(partition)), m_entries(std::move(entries)) {
    if (m_entries.size() != m_partition.size())
        throw CalcError(Errc::validation, "weighted set length does not match partition");
    for (auto& e : m_entries) {
        require_nonnegative_credence(e.credence, "weighted set");
        if (!std::isfinite(e.q) || e.q < -tol_sum || e.q > 1.0 + tol_sum)
            throw CalcError(Errc::range, "weighted set entry outside [0, 1]");
        e.q = std::clamp(e.q, 0.0, 1.0);
    }
}

JointPrior JointPrior::validated(double credence, Partition b_partition,
                                 std::array<std::vector<double>, 2> cells) {
    require_finite_credence(credence, "joint prior");
    const std::size_t m = b_partition.size();
    if (cells[0].size() != m || cells[1].size() != m)
        throw CalcError(Errc::validation, "joint table width does not match partition");
    std::vector<double> flat;
    flat.reserve(2 * m);
    flat.insert(flat.end(), cells[0].begin(), cells[0].end());
    flat.insert(flat.end(), cells[1].begin(), cells[1].end());
    check_almost_simplex(flat, "joint table");
    canonicalize_simplex(flat);
    std::copy(flat.begin(), flat.begin() + m, cells[0].begin());
    std::copy(flat.begin() + m, flat.end(), cells[1].begin());
    return JointPrior(credence, std::move(b_partition), std::move(cells));
}

double JointPrior::p_a() const {
    return std::accumulate(m_cells[0].begin(), m_cells[0].end(), 0.0);
}

double JointPrior::p_b(std::size_t j) const {
    return m_cells[0][j] + m_cells[1][j];
}

std::vector<double> JointPrior::b_marginals() const {
    std::vector<double> out(columns());
    for (std::size_t j = 0; j < out.size(); ++j)
        out[j] = p_b(j);
    return out;
}

std::pair<double, std::vector<double>> joint_marginals(const JointPrior& prior) {
    return {prior.p_a(), prior.b_marginals()};
}

FirstOrderPrior FirstOrderPrior::validated(double p_a, double p_ab, double p_b) {
    for (double x : {p_a, p_ab, p_b})
        if (!std::isfinite(x) || x < -tol_sum || x > 1.0 + tol_sum)
            throw CalcError(Errc::range, "first-order probability outside [0, 1]");
    p_a = std::clamp(p_a, 0.0, 1.0);
    p_b = std::clamp(p_b, 0.0, 1.0);
    const double hi = std::min(p_a, p_b);
    // Rounding in p_a + p_b - 1 can drift the lower bound an ulp either side
    // of the upper one. A certain marginal has an exact bound (the other
    // marginal); otherwise cap so the interval stays well formed.
    double lo = std::max(0.0, p_a + p_b - 1.0);
    if (p_a == 1.0)
        lo = p_b;
    else if (p_b == 1.0)
        lo = p_a;
    lo = std::min(lo, hi);
    if (p_ab < lo - tol_sum || p_ab > hi + tol_sum)
        throw CalcError(Errc::validation, "joint probability violates Frechet bounds");
    p_ab = std::clamp(p_ab, lo, hi);
    return FirstOrderPrior(p_a, p_ab, p_b);
}

} // namespace pdcalc
