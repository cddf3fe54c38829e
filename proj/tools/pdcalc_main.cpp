// pdcalc: credence-tagged evidence calculus.
//
// Reads evidence files (JSON; see docs/evidence_format.md), dispatches to the
// calculus, and prints deterministic output: results on stdout, warnings on
// stderr. Exit codes: 1 usage or I/O, 2 validation, 3 degenerate computation,
// 4 partition mismatch.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pdcalc/commands.hpp"

namespace {

using namespace pdcalc;

std::vector<EvidenceFile> load_all(const std::vector<std::string>& paths) {
    std::vector<EvidenceFile> files;
    files.reserve(paths.size());
    for (const auto& path : paths)
        files.push_back(load_evidence_file(path));
    return files;
}

// "COL:CREDENCE[:PROB]" with 1-based column index.
ImplicationConstraint parse_constraint(const std::string& text) {
    const auto first = text.find(':');
    if (first == std::string::npos)
        throw CalcError(Errc::validation, "constraint must be COL:CREDENCE[:PROB]");
    const auto second = text.find(':', first + 1);
    try {
        const long column = std::stol(text.substr(0, first));
        if (column < 1)
            throw CalcError(Errc::validation, "constraint column is 1-based");
        ImplicationConstraint c{0.0, static_cast<std::size_t>(column - 1), 1.0};
        if (second == std::string::npos) {
            c.credence = std::stod(text.substr(first + 1));
        } else {
            c.credence = std::stod(text.substr(first + 1, second - first - 1));
            c.truth_probability = std::stod(text.substr(second + 1));
        }
        return c;
    } catch (const std::logic_error&) {
        throw CalcError(Errc::validation, "cannot parse constraint \"" + text + "\"");
    }
}

int emit(const CommandResult& result) {
    for (const auto& warning : result.warnings)
        std::cerr << "warning: " << warning << "\n";
    std::cout << result.output;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"credence-tagged evidence calculus"};
    app.require_subcommand(1);

    std::vector<std::string> merge_paths;
    std::string merge_mode = "spd";
    auto* merge = app.add_subcommand("merge", "merge evidences (straight or offsetting)");
    merge->add_option("files", merge_paths, "evidence files")->required()->expected(-1);
    merge->add_option("--mode", merge_mode, "spd (straight) or opd (offsetting)")
        ->check(CLI::IsMember({"spd", "opd"}));

    std::string normalize_path;
    auto* normalize = app.add_subcommand("normalize", "normalize a weighted set");
    normalize->add_option("file", normalize_path, "weighted-set file")->required();

    std::string update_prior, update_evidence;
    bool jeffrey = false, pd = false;
    auto* update = app.add_subcommand("update", "update a joint prior by evidence");
    update->add_option("prior", update_prior, "joint-prior file")->required();
    update->add_option("evidence", update_evidence, "evidence file")->required();
    auto* jeffrey_flag = update->add_flag("--jeffrey", jeffrey, "probability-kinematics update");
    update->add_flag("--pd", pd, "credence-mediated update")->excludes(jeffrey_flag);

    std::string repair_path;
    std::vector<std::string> constraint_args;
    auto* repair = app.add_subcommand("repair", "impose implication constraints on a table");
    repair->add_option("table", repair_path, "contingency file")->required();
    repair->add_option("--constraint", constraint_args, "COL:CREDENCE[:PROB], 1-based column")
        ->required();

    std::string confirm_prior, confirm_evidence;
    bool straight = false, offsetting = false;
    auto* confirm = app.add_subcommand("confirm", "confirmation degrees of an update");
    confirm->add_option("prior", confirm_prior, "joint-prior file")->required();
    confirm->add_option("evidence", confirm_evidence, "evidence file")->required();
    auto* straight_flag = confirm->add_flag("--straight", straight, "raw credence ratio");
    confirm->add_flag("--offsetting", offsetting, "accord-discounted")->excludes(straight_flag);

    std::string dutchbook_path;
    auto* dutchbook = app.add_subcommand("dutchbook", "settle the conditional-bet book");
    dutchbook->add_option("bet", dutchbook_path, "bet file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (merge->parsed()) {
            const auto files = load_all(merge_paths);
            return emit(cmd_merge(files, merge_mode == "spd" ? MergeMode::spd : MergeMode::opd));
        }
        if (normalize->parsed())
            return emit(cmd_normalize(load_evidence_file(normalize_path)));
        if (update->parsed()) {
            if (jeffrey == pd)
                throw CalcError(Errc::validation, "update needs exactly one of --jeffrey, --pd");
            return emit(cmd_update(load_evidence_file(update_prior),
                                   load_evidence_file(update_evidence),
                                   jeffrey ? UpdateMethod::jeffrey : UpdateMethod::pd));
        }
        if (repair->parsed()) {
            std::vector<ImplicationConstraint> constraints;
            constraints.reserve(constraint_args.size());
            for (const auto& text : constraint_args)
                constraints.push_back(parse_constraint(text));
            return emit(cmd_repair(load_evidence_file(repair_path), constraints));
        }
        if (confirm->parsed())
            return emit(cmd_confirm(load_evidence_file(confirm_prior),
                                    load_evidence_file(confirm_evidence),
                                    offsetting ? PdctMode::offsetting : PdctMode::straight));
        if (dutchbook->parsed())
            return emit(cmd_dutchbook(load_evidence_file(dutchbook_path)));
    } catch (const CalcError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return errc_exit_code(err.code());
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 1;
}
