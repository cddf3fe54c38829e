#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pdcalc/merge.hpp"
#include "support.hpp"

using namespace pdcalc;
using support::near;
using support::thrown_code;

namespace {

const Partition& p2() {
    static const Partition p({"A", "~A"});
    return p;
}

AlphaEvidence ev(double credence, std::vector<double> probs) {
    return AlphaEvidence(credence, validate_distribution(std::move(probs), p2()));
}

} // namespace

TEST_CASE("straight merge sums credences and averages distributions") {
    const auto merged = spd_merge(std::vector<AlphaEvidence>{ev(1, {0.6, 0.4}), ev(1, {0.6, 0.4})});
    CHECK(merged.credence == 2.0);
    CHECK(merged.dist.at(0) == 0.6);

    const auto mixed = spd_merge(std::vector<AlphaEvidence>{ev(2, {0.9, 0.1}), ev(1, {0.3, 0.7})});
    CHECK(near(mixed.credence, 3.0, tol_eq));
    CHECK(near(mixed.dist.at(0), 0.7, tol_eq));
}

TEST_CASE("counter-evidence cancels its positive counterpart") {
    const auto merged = spd_merge(std::vector<AlphaEvidence>{
        ev(1.5, {0.2, 0.8}), ev(-1.5, {0.2, 0.8}), ev(2.0, {0.7, 0.3})});
    CHECK(near(merged.credence, 2.0, tol_eq));
    CHECK(near(merged.dist.at(0), 0.7, tol_eq));
}

TEST_CASE("full cancellation is not extractable") {
    CHECK(thrown_code([] {
              spd_merge(std::vector<AlphaEvidence>{ev(1, {0.2, 0.8}), ev(-1, {0.6, 0.4})});
          }) == Errc::zero_total_credence);
}

TEST_CASE("excess counter-evidence cannot leave a distribution behind") {
    CHECK(thrown_code([] {
              spd_merge(std::vector<AlphaEvidence>{ev(2, {0.9, 0.1}), ev(-1, {0.1, 0.9})});
          }) == Errc::negative_prob);
}

TEST_CASE("straight merge errors") {
    CHECK(thrown_code([] { spd_merge(std::vector<AlphaEvidence>{}); }) == Errc::validation);
    const Partition other({"X", "Y"});
    CHECK(thrown_code([&] {
              spd_merge(std::vector<AlphaEvidence>{
                  ev(1, {0.6, 0.4}),
                  AlphaEvidence(1.0, validate_distribution({0.6, 0.4}, other))});
          }) == Errc::partition_mismatch);
}

TEST_CASE("straight merge agrees with the integer unit-share oracle") {
    auto gen = support::rng(41);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t m = support::pick(gen, 2, 6);
        const Partition partition = support::labeled_partition(m);
        const auto multiset = support::random_rational_multiset(gen, 6, 12, 12, m);
        std::vector<AlphaEvidence> evidences;
        for (std::size_t i = 0; i < multiset.credences.size(); ++i)
            evidences.emplace_back(multiset.credences[i].value(),
                                   validate_distribution(multiset.dists[i], partition));
        const auto expected = support::unit_merge(multiset.credences, multiset.dists);
        const auto merged = spd_merge(evidences);
        CHECK(near(merged.credence, expected.credence, tol_eq));
        for (std::size_t j = 0; j < m; ++j)
            CHECK(near(merged.dist.at(j), expected.probs[j], tol_eq));
    }
}

TEST_CASE("straight merge is order-insensitive and fold-insensitive") {
    auto gen = support::rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t m = support::pick(gen, 2, 5);
        const Partition partition = support::labeled_partition(m);
        const std::size_t n = support::pick(gen, 2, 6);
        std::vector<AlphaEvidence> evidences;
        for (std::size_t i = 0; i < n; ++i)
            evidences.emplace_back(support::uniform(gen, 0.1, 5.0),
                                   support::random_distribution(gen, partition));

        const auto direct = spd_merge(evidences);

        std::vector<AlphaEvidence> reversed(evidences.rbegin(), evidences.rend());
        const auto backwards = spd_merge(reversed);
        CHECK(near(direct.credence, backwards.credence, tol_eq));
        for (std::size_t j = 0; j < m; ++j)
            CHECK(near(direct.dist.at(j), backwards.dist.at(j), tol_eq));

        // Pairwise left fold through intermediate extractions.
        AlphaEvidence folded = evidences.front();
        for (std::size_t i = 1; i < n; ++i)
            folded = spd_merge(std::vector<AlphaEvidence>{folded, evidences[i]});
        CHECK(near(direct.credence, folded.credence, tol_eq));
        for (std::size_t j = 0; j < m; ++j)
            CHECK(near(direct.dist.at(j), folded.dist.at(j), tol_eq));
    }
}

TEST_CASE("merge state composes associatively") {
    auto gen = support::rng(43);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t m = support::pick(gen, 2, 4);
        MergeState left(m), right(m), all(m);
        const std::size_t n = support::pick(gen, 2, 6);
        for (std::size_t i = 0; i < n; ++i) {
            const auto probs = support::random_simplex(gen, m);
            const double k = support::uniform(gen, -1.0, 3.0);
            (i < n / 2 ? left : right).add(k, probs);
            all.add(k, probs);
        }
        MergeState combined(m);
        combined.add(left);
        combined.add(right);
        CHECK(near(combined.weight(), all.weight(), tol_eq));
        for (std::size_t j = 0; j < m; ++j)
            CHECK(near(combined.mass()[j], all.mass()[j], tol_eq));
    }
}

TEST_CASE("truth-probability scaling") {
    const auto e = ev(4, {0.3, 0.7});
    const auto half = scale_by_truth_probability(e, 0.5);
    CHECK(half.credence == 2.0);
    CHECK(half.dist.probs() == e.dist.probs());

    const auto certain = scale_by_truth_probability(e, 1.0);
    CHECK(certain.credence == 4.0);

    const auto impossible = scale_by_truth_probability(e, 0.0);
    CHECK(impossible.credence == 0.0);

    CHECK(thrown_code([&] { scale_by_truth_probability(e, 1.2); }) == Errc::range);
    CHECK(thrown_code([&] { scale_by_truth_probability(e, -0.1); }) == Errc::range);
}

TEST_CASE("scaling by m/n equals merging m copies at credence k/n") {
    auto gen = support::rng(44);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t m_cells = support::pick(gen, 2, 4);
        const Partition partition = support::labeled_partition(m_cells);
        const AlphaEvidence e(support::uniform(gen, 0.2, 4.0),
                              support::random_distribution(gen, partition));
        const std::size_t num = support::pick(gen, 1, 8);
        const std::size_t den = support::pick(gen, static_cast<std::size_t>(num), 9);
        const auto scaled =
            scale_by_truth_probability(e, static_cast<double>(num) / static_cast<double>(den));
        std::vector<AlphaEvidence> copies(
            num, AlphaEvidence(e.credence / static_cast<double>(den), e.dist));
        const auto merged = spd_merge(copies);
        CHECK(near(scaled.credence, merged.credence, tol_eq));
        for (std::size_t j = 0; j < m_cells; ++j)
            CHECK(near(scaled.dist.at(j), merged.dist.at(j), tol_eq));
    }
}

TEST_CASE("normalization worked example") {
    const auto result = normalize(WeightedBinarySet(p2(), {{2.0, 0.5}, {1.0, 0.5}}));
    CHECK(near(result.credence, 1.5, tol_eq));
    CHECK(near(result.dist.at(0), 2.0 / 3.0, tol_eq));
    CHECK(near(result.dist.at(1), 1.0 / 3.0, tol_eq));
}

TEST_CASE("equi-credible proper distributions normalize to themselves exactly") {
    auto gen = support::rng(45);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t m = support::pick(gen, 2, 6);
        const Partition partition = support::labeled_partition(m);
        const Distribution d = support::random_distribution(gen, partition);
        const double k = support::uniform(gen, 0.1, 5.0);
        std::vector<WeightedBinaryEntry> entries;
        for (std::size_t j = 0; j < m; ++j)
            entries.push_back({k, d.at(j)});
        const auto result = normalize(WeightedBinarySet(partition, entries));
        CHECK(result.credence == k);
        CHECK(result.dist.probs() == d.probs());
    }
}

TEST_CASE("normalization silences zero-weight cells") {
    const auto result = normalize(WeightedBinarySet(p2(), {{1.0, 0.0}, {3.0, 1.0}}));
    CHECK(near(result.credence, 3.0, tol_eq));
    CHECK(result.dist.at(0) == 0.0);
    CHECK(result.dist.at(1) == 1.0);
}

TEST_CASE("normalization of an all-zero set is degenerate") {
    CHECK(thrown_code([] {
              normalize(WeightedBinarySet(p2(), {{1.0, 0.0}, {0.0, 1.0}}));
          }) == Errc::degenerate);
}

TEST_CASE("normalization is permutation-covariant") {
    auto gen = support::rng(46);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t m = support::pick(gen, 2, 5);
        std::vector<WeightedBinaryEntry> entries;
        for (std::size_t j = 0; j < m; ++j)
            entries.push_back({support::uniform(gen, 0.0, 3.0), support::uniform(gen, 0.0, 1.0)});
        if (std::accumulate(entries.begin(), entries.end(), 0.0,
                            [](double acc, const WeightedBinaryEntry& e) {
                                return acc + e.credence * e.q;
                            }) <= 1e-3)
            continue;

        std::vector<std::size_t> perm(m);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        std::shuffle(perm.begin(), perm.end(), gen);

        std::vector<std::string> base_labels, perm_labels;
        std::vector<WeightedBinaryEntry> permuted(m);
        for (std::size_t j = 0; j < m; ++j) {
            base_labels.push_back("c" + std::to_string(j + 1));
            perm_labels.push_back("c" + std::to_string(perm[j] + 1));
            permuted[j] = entries[perm[j]];
        }
        const auto direct = normalize(WeightedBinarySet(Partition(base_labels), entries));
        const auto shuffled = normalize(WeightedBinarySet(Partition(perm_labels), permuted));
        CHECK(near(direct.credence, shuffled.credence, tol_eq));
        for (std::size_t j = 0; j < m; ++j)
            CHECK(near(direct.dist.at(perm[j]), shuffled.dist.at(j), tol_eq));
    }
}

TEST_CASE("accord of two evidences matches the closed two-point form") {
    auto gen = support::rng(47);
    for (int trial = 0; trial < 300; ++trial) {
        const BinaryEvidence e1(support::uniform(gen, 0.1, 4.0), support::uniform(gen, 0.0, 1.0));
        const BinaryEvidence e2(support::uniform(gen, 0.1, 4.0), support::uniform(gen, 0.0, 1.0));
        const auto report = accord(std::vector<BinaryEvidence>{e1, e2});
        const double expected = 1.0 - 2.0 * std::abs(e1.p - e2.p) *
                                          std::sqrt(e1.credence * e2.credence) /
                                          (e1.credence + e2.credence);
        CHECK(near(report.lambda, expected, tol_eq));
    }
}

TEST_CASE("accord worked example and extremes") {
    const auto split = accord(std::vector<BinaryEvidence>{{1.0, 0.2}, {1.0, 0.6}});
    CHECK(near(split.pbar, 0.4, tol_eq));
    CHECK(near(split.sigma, 0.2, tol_eq));
    CHECK(near(split.lambda, 0.6, tol_eq));

    const auto discord = accord(std::vector<BinaryEvidence>{{2.0, 0.0}, {2.0, 1.0}});
    CHECK(discord.sigma == 0.5);
    CHECK(discord.lambda == 0.0);

    const auto unison = accord(std::vector<BinaryEvidence>{{1.0, 0.3}, {2.0, 0.3}, {0.5, 0.3}});
    CHECK(near(unison.lambda, 1.0, tol_eq));
    CHECK(near(unison.sigma, 0.0, tol_eq));
}

TEST_CASE("accord stays inside [0, 1] and flags any boundary clamp") {
    auto gen = support::rng(48);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = support::pick(gen, 1, 6);
        std::vector<BinaryEvidence> evidences;
        for (std::size_t i = 0; i < n; ++i)
            evidences.emplace_back(support::uniform(gen, 0.01, 5.0),
                                   support::uniform(gen, 0.0, 1.0));
        const auto report = accord(evidences);
        CHECK(report.lambda >= 0.0);
        CHECK(report.lambda <= 1.0);
        CHECK(report.sigma >= 0.0);
        CHECK(report.sigma <= 0.5);
        if (report.clamped)
            CHECK(near(report.sigma, 0.5, tol_sum));
    }
}

TEST_CASE("accord errors") {
    CHECK(thrown_code([] { accord(std::vector<BinaryEvidence>{}); }) == Errc::validation);
    CHECK(thrown_code([] {
              accord(std::vector<BinaryEvidence>{{-1.0, 0.5}, {2.0, 0.5}});
          }) == Errc::negative_credence);
    CHECK(thrown_code([] {
              accord(std::vector<BinaryEvidence>{{0.0, 0.5}, {0.0, 0.7}});
          }) == Errc::zero_total_credence);
}

TEST_CASE("offsetting merge discounts by discord") {
    const auto half = opd_merge(std::vector<BinaryEvidence>{{1.0, 0.2}, {1.0, 0.6}});
    CHECK(near(half.credence, 1.2, tol_eq));
    CHECK(near(half.dist.at(0), 0.4, tol_eq));

    // Total discord: the merger keeps the mean but carries no credence.
    const auto dead = opd_merge(std::vector<BinaryEvidence>{{1.0, 0.0}, {1.0, 1.0}});
    CHECK(std::abs(dead.credence) <= tol_eq);
    CHECK(near(dead.dist.at(0), 0.5, tol_eq));

    // Unanimous evidence: offsetting reduces to straight merging.
    const auto same = opd_merge(std::vector<BinaryEvidence>{{1.5, 0.3}, {2.5, 0.3}});
    CHECK(near(same.credence, 4.0, tol_eq));
    CHECK(near(same.dist.at(0), 0.3, tol_eq));
}

TEST_CASE("offsetting merge ignores zero-credence members") {
    const auto base = opd_merge(std::vector<BinaryEvidence>{{1.0, 0.2}, {1.0, 0.6}});
    const auto padded =
        opd_merge(std::vector<BinaryEvidence>{{1.0, 0.2}, {0.0, 0.9}, {1.0, 0.6}});
    CHECK(near(base.credence, padded.credence, tol_eq));
    CHECK(near(base.dist.at(0), padded.dist.at(0), tol_eq));
}

TEST_CASE("offsetting merge rejects counter-evidence") {
    CHECK(thrown_code([] {
              opd_merge(std::vector<BinaryEvidence>{{-1.0, 0.2}, {2.0, 0.6}});
          }) == Errc::negative_credence);
}

TEST_CASE("offsetting merge never exceeds the straight credence") {
    auto gen = support::rng(49);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = support::pick(gen, 1, 6);
        std::vector<BinaryEvidence> evidences;
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            evidences.emplace_back(support::uniform(gen, 0.01, 5.0),
                                   support::uniform(gen, 0.0, 1.0));
            total += evidences.back().credence;
        }
        const auto merged = opd_merge(evidences);
        CHECK(merged.credence <= total + tol_eq);
        CHECK(merged.credence >= -tol_eq);
    }
}
