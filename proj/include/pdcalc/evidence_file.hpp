#pragma once

#include <string>
#include <variant>
#include <vector>

#include "pdcalc/core.hpp"
#include "pdcalc/dutchbook.hpp"
#include "pdcalc/repair.hpp"

namespace pdcalc {

// A batch of evidences over one partition, as carried by an evidence file.
struct EvidenceList {
    Partition partition;
    std::vector<AlphaEvidence> evidences;
};

// Exactly one payload kind per file.
using EvidencePayload = std::variant<EvidenceList, WeightedBinarySet, JointPrior,
                                     FirstOrderPrior, ContingencyEvidence, BetScenario>;

struct EvidenceFile {
    EvidencePayload payload;
};

// Parses the JSON text of an evidence file. Schema violations raise PARSE;
// value violations raise the usual validation errors. A top-level "report"
// object (as written by update/repair output) is accepted and ignored.
EvidenceFile parse_evidence_file(const std::string& text);

EvidenceFile load_evidence_file(const std::string& path);

// Serializes with shortest round-trip number formatting; parsing the result
// reproduces every value bit for bit.
std::string dump_evidence_file(const EvidenceFile& file);

} // namespace pdcalc
