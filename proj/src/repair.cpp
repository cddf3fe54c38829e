#include "pdcalc/repair.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pdcalc/association.hpp"
#include "pdcalc/merge.hpp"

namespace pdcalc {

namespace {

std::vector<double> flatten(const ContingencyTable& table) {
    std::vector<double> flat;
    flat.reserve(2 * table[0].size());
    flat.insert(flat.end(), table[0].begin(), table[0].end());
    flat.insert(flat.end(), table[1].begin(), table[1].end());
    return flat;
}

ContingencyTable unflatten(std::vector<double> flat, std::size_t columns) {
    ContingencyTable table;
    table[0].assign(flat.begin(), flat.begin() + columns);
    table[1].assign(flat.begin() + columns, flat.end());
    return table;
}

double checked_truth_probability(double p) {
    if (!std::isfinite(p) || p < 0.0 || p > 1.0)
        throw CalcError(Errc::range, "truth probability outside [0, 1]");
    return p;
}

void check_target(const ContingencyEvidence& evidence, std::size_t target) {
    if (target >= evidence.columns())
        throw CalcError(Errc::validation, "constraint column out of range");
}

} // namespace

ContingencyEvidence ContingencyEvidence::validated(double credence, ContingencyTable table) {
    require_finite_credence(credence, "contingency evidence");
    if (!(credence > 0.0))
        throw CalcError(Errc::validation, "contingency evidence needs positive credence");
    if (table[0].size() != table[1].size() || table[0].empty())
        throw CalcError(Errc::validation, "contingency table rows must match and be non-empty");
    std::vector<double> flat = flatten(table);
    double sum = 0.0;
    for (double x : flat) {
        if (!std::isfinite(x))
            throw CalcError(Errc::validation, "contingency table: non-finite cell");
        if (x < -tol_sum)
            throw CalcError(Errc::negative_prob, "contingency table: negative cell");
        if (x > 1.0 + tol_sum)
            throw CalcError(Errc::validation, "contingency table: cell exceeds one");
        sum += x;
    }
    if (std::abs(sum - 1.0) > tol_sum)
        throw CalcError(Errc::sum_violation, "contingency table mass does not sum to one");
    canonicalize_simplex(flat);
    return ContingencyEvidence(credence, unflatten(std::move(flat), table[0].size()));
}

ContingencyTable constrained_table(const ContingencyTable& table, std::size_t target_column) {
    if (target_column >= table[0].size())
        throw CalcError(Errc::validation, "constraint column out of range");
    const double top_mass = std::accumulate(table[0].begin(), table[0].end(), 0.0);
    ContingencyTable out;
    out[0].assign(table[0].size(), 0.0);
    out[0][target_column] = top_mass;
    out[1] = table[1];
    return out;
}

ContingencyEvidence impose_constraint(const ContingencyEvidence& evidence,
                                      const ImplicationConstraint& constraint) {
    check_target(evidence, constraint.target_column);
    require_nonnegative_credence(constraint.credence, "constraint");
    const double effective =
        checked_truth_probability(constraint.truth_probability) * constraint.credence;
    if (effective == 0.0)
        return evidence;
    const ContingencyTable asserted = constrained_table(evidence.table(), constraint.target_column);
    MergeState state(2 * evidence.columns());
    state.add(evidence.credence(), flatten(evidence.table()));
    state.add(effective, flatten(asserted));
    return ContingencyEvidence::validated(state.weight(),
                                          unflatten(state.mean(), evidence.columns()));
}

double constraint_cross_credence(double table_credence, double effective_credence) {
    return cross_credence(effective_credence, table_credence);
}

double repaired_conditional(double a, double b, double c, double ratio) {
    for (double x : {a, b, c}) {
        if (!std::isfinite(x) || x < -tol_sum)
            throw CalcError(Errc::validation, "conditional cell outside [0, inf)");
    }
    if (!std::isfinite(ratio) || ratio < 0.0)
        throw CalcError(Errc::range, "credence ratio must be a nonnegative real");
    a = std::max(a, 0.0);
    b = std::max(b, 0.0);
    c = std::max(c, 0.0);
    const double w = ratio / (1.0 + ratio);
    const double moved = a + w * b;
    const double denom = moved + c;
    if (denom <= tol_sum)
        throw CalcError(Errc::degenerate, "conditional has no mass");
    return moved / denom;
}

ContingencyEvidence impose_constraints(const ContingencyEvidence& evidence,
                                       std::span<const ImplicationConstraint> constraints) {
    std::vector<double> weights;
    weights.reserve(constraints.size());
    bool any_mass = false;
    for (const auto& c : constraints) {
        check_target(evidence, c.target_column);
        require_nonnegative_credence(c.credence, "constraint");
        const double effective = checked_truth_probability(c.truth_probability) * c.credence;
        const double w = constraint_cross_credence(evidence.credence(), effective);
        weights.push_back(w);
        any_mass = any_mass || w > 0.0;
    }
    if (!any_mass)
        return evidence;
    MergeState state(2 * evidence.columns());
    state.add(evidence.credence(), flatten(evidence.table()));
    for (std::size_t i = 0; i < constraints.size(); ++i) {
        if (weights[i] == 0.0)
            continue;
        state.add(weights[i],
                  flatten(constrained_table(evidence.table(), constraints[i].target_column)));
    }
    return ContingencyEvidence::validated(state.weight(),
                                          unflatten(state.mean(), evidence.columns()));
}

} // namespace pdcalc
