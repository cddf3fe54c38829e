#pragma once

#include <array>
#include <span>
#include <vector>

#include "pdcalc/core.hpp"

namespace pdcalc {

using ContingencyTable = std::array<std::vector<double>, 2>;

// A credence-tagged 2-by-n contingency table: row 0 is the hypothesis, row 1
// its complement, columns are the candidate implications. Cells are kept in
// canonical simplex form over the flattened table.
class ContingencyEvidence {
public:
    static ContingencyEvidence validated(double credence, ContingencyTable table);

    double credence() const { return m_credence; }
    const ContingencyTable& table() const { return m_table; }
    std::size_t columns() const { return m_table[0].size(); }

private:
    ContingencyEvidence(double credence, ContingencyTable table)
        : m_credence(credence), m_table(std::move(table)) {}

    double m_credence;
    ContingencyTable m_table;
};

// "The hypothesis implies column i": newly recognized with credence, possibly
// uncertain (truth_probability discounts the credence). Columns are 0-based.
struct ImplicationConstraint {
    double credence;
    std::size_t target_column;
    double truth_probability = 1.0;
};

// The table a constraint asserts: all top-row mass collected into the target
// column, bottom row untouched.
ContingencyTable constrained_table(const ContingencyTable& table, std::size_t target_column);

// Revises a table by one constraint: straight-merges the original against the
// constrained table at effective credence p*ktilde. A zero-credence
// constraint leaves the evidence unchanged.
ContingencyEvidence impose_constraint(const ContingencyEvidence& evidence,
                                      const ImplicationConstraint& constraint);

// Discount weight the multi-constraint reviser gives one constraint: the
// cross-credence of the constraint's effective credence against the table's.
// Reported alongside revisions; the single-constraint merge does not use it.
double constraint_cross_credence(double table_credence, double effective_credence);

// Revised conditional P(A | B_target) after constraining, in closed form:
// (a + w*b) / (a + w*b + c) with w = ratio/(1+ratio), where a is the target's
// top cell, b the top mass elsewhere, c the target's bottom cell, and ratio
// the constraint-to-table credence ratio.
double repaired_conditional(double a, double b, double c, double ratio);

// Revises a table by several constraints at once, each derived from the
// original table and discounted by its cross-credence against it. Order of
// the constraint list cannot matter. Disagrees with impose_constraint on a
// singleton list by design: that route applies the full effective credence.
ContingencyEvidence impose_constraints(const ContingencyEvidence& evidence,
                                       std::span<const ImplicationConstraint> constraints);

} // namespace pdcalc
