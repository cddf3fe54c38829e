#include "pdcalc/dutchbook.hpp"

#include <cmath>

namespace pdcalc {

BetScenario::BetScenario(double p_b_, double b_, double r_) : p_b(p_b_), b(b_), r(r_) {
    if (!std::isfinite(p_b) || p_b < 0.0 || p_b > 1.0)
        throw CalcError(Errc::range, "condition probability outside [0, 1]");
    if (!std::isfinite(b) || b < 0.0 || b > 1.0)
        throw CalcError(Errc::range, "coherent bet value outside [0, 1]");
    if (!std::isfinite(r) || r <= 0.0 || r >= 1.0)
        throw CalcError(Errc::range, "posted belief parameter outside (0, 1)");
}

BetOutcome evaluate_bets(const BetScenario& s) {
    const double delta = s.b - (1.0 - s.r);
    const double price_a = s.p_b * s.b;
    const double price_b = (1.0 - s.p_b) * s.b;
    const double price_c = s.p_b * delta;
    // The three prices sum to b + pB*delta; the collapsed form keeps the
    // coherent case (delta == 0) exactly lossless in floating point.
    const double total = s.b + s.p_b * delta;
    const double loss_if_not_b = total - s.b;
    const double loss_if_b = total - (1.0 - s.r) - delta;
    return BetOutcome{delta, price_a, price_b, price_c, total, loss_if_not_b, loss_if_b};
}

} // namespace pdcalc
