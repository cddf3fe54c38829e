#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "pdcalc/core.hpp"

namespace support {

// Error code raised by a callable, if any. Tests assert the exact class.
inline pdcalc::Errc thrown_code(const std::function<void()>& f) {
    try {
        f();
    } catch (const pdcalc::CalcError& err) {
        return err.code();
    }
    throw std::runtime_error("expected a CalcError");
}

inline bool near(double a, double b, double tol) {
    return std::abs(a - b) <= tol;
}

inline std::mt19937_64 rng(std::uint64_t seed) {
    return std::mt19937_64{seed};
}

inline double uniform(std::mt19937_64& gen, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
}

inline std::size_t pick(std::mt19937_64& gen, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(gen);
}

// A random point of the m-simplex, in canonical form.
inline std::vector<double> random_simplex(std::mt19937_64& gen, std::size_t m) {
    std::vector<double> v(m);
    double sum = 0.0;
    for (auto& x : v) {
        x = -std::log(uniform(gen, 1e-12, 1.0));
        sum += x;
    }
    for (auto& x : v)
        x /= sum;
    pdcalc::canonicalize_simplex(v);
    return v;
}

inline pdcalc::Partition labeled_partition(std::size_t m) {
    std::vector<std::string> labels;
    labels.reserve(m);
    for (std::size_t i = 0; i < m; ++i)
        labels.push_back("c" + std::to_string(i + 1));
    return pdcalc::Partition(std::move(labels));
}

inline pdcalc::Distribution random_distribution(std::mt19937_64& gen,
                                                const pdcalc::Partition& partition) {
    return pdcalc::validate_distribution(random_simplex(gen, partition.size()), partition);
}

// --- independent straight-merge oracle -------------------------------------
//
// Credences are small rationals num/den. The merge of [num_i/den_i; p_i] is,
// by the unit-share argument, the merge of N_i identical unit evidences over
// the common denominator D: N_i = num_i * D / den_i. Total credence and the
// weighted mean are then computed in exact integer arithmetic (all counts
// stay far below 2^53), one rounding at the final division. This shares no
// code and no summation order with MergeState.

struct RationalCredence {
    std::int64_t num;
    std::int64_t den;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct UnitMergeResult {
    double credence;
    std::vector<double> probs;
    std::int64_t share_count; // total N across evidences
};

inline UnitMergeResult unit_merge(const std::vector<RationalCredence>& credences,
                                  const std::vector<std::vector<double>>& dists) {
    std::int64_t common = 1;
    for (const auto& c : credences)
        common *= c.den;
    std::vector<std::int64_t> shares(credences.size());
    std::int64_t total = 0;
    for (std::size_t i = 0; i < credences.size(); ++i) {
        shares[i] = credences[i].num * (common / credences[i].den);
        total += shares[i];
    }
    const std::size_t m = dists.front().size();
    std::vector<double> probs(m);
    for (std::size_t j = 0; j < m; ++j) {
        double mass = 0.0;
        for (std::size_t i = 0; i < dists.size(); ++i)
            mass += static_cast<double>(shares[i]) * dists[i][j];
        probs[j] = mass / static_cast<double>(total);
    }
    return UnitMergeResult{static_cast<double>(total) / static_cast<double>(common),
                           std::move(probs), total};
}

struct RationalMultiset {
    std::vector<RationalCredence> credences;
    std::vector<std::vector<double>> dists;
};

// Random multiset of up to max_n evidences with rational credences
// num/den <= max_num/1, denominators <= max_den, over an m-cell simplex.
inline RationalMultiset random_rational_multiset(std::mt19937_64& gen, std::size_t max_n,
                                                 std::int64_t max_num, std::int64_t max_den,
                                                 std::size_t m) {
    RationalMultiset out;
    const std::size_t n = pick(gen, 1, max_n);
    for (std::size_t i = 0; i < n; ++i) {
        out.credences.push_back(RationalCredence{
            static_cast<std::int64_t>(pick(gen, 1, static_cast<std::size_t>(max_num))),
            static_cast<std::int64_t>(pick(gen, 1, static_cast<std::size_t>(max_den)))});
        out.dists.push_back(random_simplex(gen, m));
    }
    return out;
}

} // namespace support
