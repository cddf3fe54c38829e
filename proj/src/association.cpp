#include "pdcalc/association.hpp"

#include <algorithm>
#include <cmath>

namespace pdcalc {

double correlation(const CorrelationInput& input) {
    const double pa = input.p_a();
    const double pb = input.p_b();
    if (pa <= 0.0 || pa >= 1.0 || pb <= 0.0 || pb >= 1.0)
        return 0.0;
    const double rho =
        (input.p_ab() - pa * pb) / std::sqrt(pa * (1.0 - pa) * pb * (1.0 - pb));
    return std::clamp(rho, -1.0, 1.0);
}

double cross_credence(double k1, double k2) {
    require_nonnegative_credence(k1, "cross-credence");
    require_nonnegative_credence(k2, "cross-credence");
    if (k1 == k2)
        return k1 / 2.0;
    if (k1 == 0.0 || k2 == 0.0)
        return 0.0;
    return k1 * k2 / (k1 + k2);
}

double cross_credence_chain(std::span<const double> credences) {
    if (credences.empty())
        throw CalcError(Errc::validation, "empty credence chain");
    for (double k : credences)
        require_nonnegative_credence(k, "credence chain");
    if (credences.size() == 1)
        return credences.front();
    double reciprocal_sum = 0.0;
    for (double k : credences) {
        if (k == 0.0)
            return 0.0;
        reciprocal_sum += 1.0 / k;
    }
    return 1.0 / reciprocal_sum;
}

namespace {

double checked_abs_rho(double rho) {
    if (!std::isfinite(rho) || std::abs(rho) > 1.0 + tol_sum)
        throw CalcError(Errc::range, "correlation outside [-1, 1]");
    return std::min(std::abs(rho), 1.0);
}

} // namespace

double unilateral_cross_credence(double rho, double k1, double k2) {
    const double r = checked_abs_rho(rho);
    require_nonnegative_credence(k1, "cross-credence");
    require_nonnegative_credence(k2, "cross-credence");
    if (r == 0.0)
        return 0.0;
    const double denom = r * k1 + k2;
    if (denom == 0.0)
        return 0.0;
    return r * k1 * k2 / denom;
}

double bilateral_cross_credence(double rho, double k1, double k2) {
    const double r = checked_abs_rho(rho);
    return r * cross_credence(k1, k2);
}

} // namespace pdcalc
