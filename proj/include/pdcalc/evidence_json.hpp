#pragma once

#include <json.hpp>

#include "pdcalc/evidence_file.hpp"

namespace pdcalc {

// JSON form of a payload, keys in canonical order. Used by commands that
// attach a "report" object next to the payload before printing.
nlohmann::ordered_json evidence_file_to_json(const EvidenceFile& file);

} // namespace pdcalc
