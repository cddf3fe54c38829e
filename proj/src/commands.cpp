#include "pdcalc/commands.hpp"

#include <cmath>
#include <numeric>

#include "pdcalc/dutchbook.hpp"
#include "pdcalc/evidence_json.hpp"

namespace pdcalc {

using nlohmann::ordered_json;

namespace {

std::string render(const ordered_json& j) {
    return j.dump(2) + "\n";
}

const EvidenceList& as_evidences(const EvidenceFile& file, const char* command) {
    if (const auto* list = std::get_if<EvidenceList>(&file.payload))
        return *list;
    throw CalcError(Errc::validation, std::string(command) + " needs an \"evidences\" file");
}

const JointPrior& as_joint(const EvidenceFile& file, const char* command) {
    if (const auto* joint = std::get_if<JointPrior>(&file.payload))
        return *joint;
    throw CalcError(Errc::validation, std::string(command) + " needs a \"joint\" file");
}

// The single evidence a command consumes from an evidence-list file.
const AlphaEvidence& single_evidence(const EvidenceList& list, const char* command) {
    if (list.evidences.size() != 1)
        throw CalcError(Errc::validation,
                        std::string(command) + " needs exactly one evidence in the file");
    return list.evidences.front();
}

ordered_json evidence_list_json(const Partition& partition, const AlphaEvidence& evidence) {
    EvidenceFile out{EvidenceList{partition, {evidence}}};
    return evidence_file_to_json(out);
}

} // namespace

CommandResult cmd_merge(std::span<const EvidenceFile> files, MergeMode mode) {
    if (files.empty())
        throw CalcError(Errc::validation, "merge needs at least one input file");
    std::vector<AlphaEvidence> evidences;
    for (const auto& file : files) {
        const EvidenceList& list = as_evidences(file, "merge");
        if (list.partition != as_evidences(files.front(), "merge").partition)
            throw CalcError(Errc::partition_mismatch, "input files on different partitions");
        evidences.insert(evidences.end(), list.evidences.begin(), list.evidences.end());
    }
    const Partition& partition = as_evidences(files.front(), "merge").partition;

    CommandResult result;
    if (mode == MergeMode::spd) {
        const AlphaEvidence merged = spd_merge(evidences);
        result.output = render(evidence_list_json(partition, merged));
        return result;
    }

    if (partition.size() != 2)
        throw CalcError(Errc::validation, "offsetting merge needs a two-cell partition");
    std::vector<BinaryEvidence> binary;
    binary.reserve(evidences.size());
    for (const auto& e : evidences)
        binary.emplace_back(e.credence, e.dist.at(0));
    const AccordReport report = accord(binary);
    if (report.clamped)
        result.warnings.push_back("accord factor clamped into [0, 1]");
    const AlphaEvidence merged = opd_merge(binary, partition);
    if (std::abs(merged.credence) <= tol_sum)
        result.warnings.push_back("merged credence is zero within tolerance (total discord)");
    result.output = render(evidence_list_json(partition, merged));
    return result;
}

CommandResult cmd_normalize(const EvidenceFile& file) {
    const auto* set = std::get_if<WeightedBinarySet>(&file.payload);
    if (!set)
        throw CalcError(Errc::validation, "normalize needs a \"weighted_set\" file");
    const AlphaEvidence result = normalize(*set);
    return CommandResult{render(evidence_list_json(set->partition(), result)), {}};
}

CommandResult cmd_update(const EvidenceFile& prior_file, const EvidenceFile& evidence_file,
                         UpdateMethod method) {
    const JointPrior& prior = as_joint(prior_file, "update");
    const EvidenceList& list = as_evidences(evidence_file, "update");

    if (method == UpdateMethod::jeffrey) {
        const AlphaEvidence& evidence = single_evidence(list, "update --jeffrey");
        const double updated = jeffrey_update(prior, evidence.dist);
        return CommandResult{render(ordered_json{{"updated_probability", updated}}), {}};
    }

    const IndirectUpdateResult update =
        list.evidences.size() == 1
            ? pd_indirect_update(prior, list.evidences.front())
            : pd_sequential_update(prior, list.evidences);

    const Distribution dist = validate_distribution(
        {update.updated.p, 1.0 - update.updated.p}, binary_partition());
    ordered_json out =
        evidence_list_json(binary_partition(), AlphaEvidence(update.updated.credence, dist));
    out["report"] = ordered_json{
        {"per_cell_credences", update.per_cell_credences},
        {"normalized_weights",
         {{"partition", update.normalized_weights.partition().labels()},
          {"probs", update.normalized_weights.probs()}}},
    };
    return CommandResult{render(out), {}};
}

CommandResult cmd_repair(const EvidenceFile& table_file,
                         std::span<const ImplicationConstraint> constraints) {
    const auto* evidence = std::get_if<ContingencyEvidence>(&table_file.payload);
    if (!evidence)
        throw CalcError(Errc::validation, "repair needs a \"contingency\" file");
    if (constraints.empty())
        throw CalcError(Errc::validation, "repair needs at least one constraint");

    ordered_json report;
    ContingencyEvidence revised = [&] {
        if (constraints.size() == 1) {
            const ImplicationConstraint& c = constraints.front();
            ContingencyEvidence out = impose_constraint(*evidence, c);
            const double effective = c.truth_probability * c.credence;
            const auto& t = evidence->table();
            const double a = t[0][c.target_column];
            const double b =
                std::accumulate(t[0].begin(), t[0].end(), 0.0) - a;
            const double cc = t[1][c.target_column];
            report["cross_credence"] =
                constraint_cross_credence(evidence->credence(), effective);
            report["repaired_conditional"] =
                repaired_conditional(a, b, cc, effective / evidence->credence());
            return out;
        }
        ContingencyEvidence out = impose_constraints(*evidence, constraints);
        std::vector<double> cross;
        std::vector<double> conditionals;
        for (const auto& c : constraints) {
            cross.push_back(constraint_cross_credence(evidence->credence(),
                                                      c.truth_probability * c.credence));
            const double top = out.table()[0][c.target_column];
            const double col = top + out.table()[1][c.target_column];
            if (col <= tol_sum)
                throw CalcError(Errc::degenerate, "constraint column has no mass");
            conditionals.push_back(top / col);
        }
        report["constraint_cross_credences"] = cross;
        report["posterior_conditionals"] = conditionals;
        return out;
    }();

    ordered_json out = evidence_file_to_json(EvidenceFile{std::move(revised)});
    out["report"] = std::move(report);
    return CommandResult{render(out), {}};
}

CommandResult cmd_confirm(const EvidenceFile& prior_file, const EvidenceFile& evidence_file,
                          PdctMode mode) {
    const JointPrior& prior = as_joint(prior_file, "confirm");
    const EvidenceList& list = as_evidences(evidence_file, "confirm");
    const AlphaEvidence& evidence = single_evidence(list, "confirm");
    if (evidence.dist.partition() != prior.b_partition())
        throw CalcError(Errc::partition_mismatch, "evidence on a different partition");

    const ConfirmationReport report = pdct_confirmation(
        prior, BinaryEvidence(evidence.credence, evidence.dist.at(0)), mode);

    CommandResult result;
    if (report.lambda_clamped)
        result.warnings.push_back("accord factor clamped into [0, 1]");
    result.output = render(ordered_json{
        {"first_order", report.first_order},
        {"credence_gain", report.credence_gain},
        {"probability_gain", report.probability_gain},
        {"pdct", report.pdct},
        {"accord_used", report.accord_used},
        {"lambda_clamped", report.lambda_clamped},
    });
    return result;
}

CommandResult cmd_dutchbook(const EvidenceFile& bet_file) {
    const auto* scenario = std::get_if<BetScenario>(&bet_file.payload);
    if (!scenario)
        throw CalcError(Errc::validation, "dutchbook needs a \"bet\" file");
    const BetOutcome outcome = evaluate_bets(*scenario);
    return CommandResult{render(ordered_json{
                             {"delta", outcome.delta},
                             {"price_a", outcome.price_a},
                             {"price_b", outcome.price_b},
                             {"price_c", outcome.price_c},
                             {"total_price", outcome.total_price},
                             {"loss_if_not_b", outcome.loss_if_not_b},
                             {"loss_if_b", outcome.loss_if_b},
                         }),
                         {}};
}

} // namespace pdcalc
