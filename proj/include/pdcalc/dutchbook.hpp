#pragma once

#include "pdcalc/core.hpp"

namespace pdcalc {

// A conditional-bet book against an agent whose posted conditional belief is
// 1 - r while the coherent value is 1 - b: three bets priced at fair value,
// plus the agent's stake mismatch delta = b - (1 - r).
struct BetScenario {
    BetScenario(double p_b, double b, double r);

    double p_b; // probability of the conditioning event, in [0, 1]
    double b;   // coherent complement-conditional, in [0, 1]
    double r;   // posted belief parameter, in (0, 1)
};

struct BetOutcome {
    double delta;          // stake mismatch b - (1 - r)
    double price_a;        // pB * b
    double price_b;        // (1 - pB) * b
    double price_c;        // pB * delta
    double total_price;    // b + pB * delta
    double loss_if_not_b;  // total - b
    double loss_if_b;      // total - (1 - r) - delta
};

// Settles the book both ways. The two losses coincide at pB * delta: a
// guaranteed gain for whichever side delta favors, and exactly zero when the
// posted belief is coherent (delta = 0) or the condition never obtains.
BetOutcome evaluate_bets(const BetScenario& scenario);

} // namespace pdcalc
