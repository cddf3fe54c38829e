#pragma once

#include <span>
#include <string>
#include <vector>

#include "pdcalc/confirm.hpp"
#include "pdcalc/evidence_file.hpp"
#include "pdcalc/merge.hpp"
#include "pdcalc/repair.hpp"
#include "pdcalc/updating.hpp"

namespace pdcalc {

enum class MergeMode { spd, opd };
enum class UpdateMethod { jeffrey, pd };

// Output text for standard output plus warning lines for standard error.
// Commands throw CalcError; the CLI maps codes to exit statuses.
struct CommandResult {
    std::string output;
    std::vector<std::string> warnings;
};

CommandResult cmd_merge(std::span<const EvidenceFile> files, MergeMode mode);
CommandResult cmd_normalize(const EvidenceFile& file);
CommandResult cmd_update(const EvidenceFile& prior, const EvidenceFile& evidence,
                         UpdateMethod method);
CommandResult cmd_repair(const EvidenceFile& table,
                         std::span<const ImplicationConstraint> constraints);
CommandResult cmd_confirm(const EvidenceFile& prior, const EvidenceFile& evidence, PdctMode mode);
CommandResult cmd_dutchbook(const EvidenceFile& bet);

} // namespace pdcalc
