#include "pdcalc/evidence_json.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace pdcalc {

using nlohmann::ordered_json;

namespace {

double number_at(const ordered_json& obj, const char* key) {
    if (!obj.contains(key) || !obj[key].is_number())
        throw CalcError(Errc::parse, std::string("expected number at \"") + key + "\"");
    return obj[key].get<double>();
}

std::vector<double> number_array(const ordered_json& arr, const char* what) {
    if (!arr.is_array())
        throw CalcError(Errc::parse, std::string("expected array for ") + what);
    std::vector<double> out;
    out.reserve(arr.size());
    for (const auto& x : arr) {
        if (!x.is_number())
            throw CalcError(Errc::parse, std::string("expected numbers in ") + what);
        out.push_back(x.get<double>());
    }
    return out;
}

Partition parse_partition(const ordered_json& j) {
    if (!j.is_array())
        throw CalcError(Errc::parse, "\"partition\" must be an array of labels");
    std::vector<std::string> labels;
    labels.reserve(j.size());
    for (const auto& x : j) {
        if (!x.is_string())
            throw CalcError(Errc::parse, "partition labels must be strings");
        labels.push_back(x.get<std::string>());
    }
    return Partition(std::move(labels));
}

ContingencyTable parse_table(const ordered_json& j, const char* what) {
    if (!j.is_array() || j.size() != 2)
        throw CalcError(Errc::parse, std::string(what) + " must have exactly two rows");
    return ContingencyTable{number_array(j[0], what), number_array(j[1], what)};
}

void check_keys(const ordered_json& obj, const std::set<std::string>& allowed,
                const char* where) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (!allowed.contains(key))
            throw CalcError(Errc::parse,
                            std::string("unexpected key \"") + key + "\" in " + where);
    }
}

EvidenceFile parse_payload(const ordered_json& root) {
    if (!root.is_object())
        throw CalcError(Errc::parse, "evidence file must be a JSON object");

    const bool has_partition = root.contains("partition");
    std::vector<std::string> kinds;
    for (const char* k : {"evidences", "weighted_set", "joint", "first_order",
                          "contingency", "bet"})
        if (root.contains(k))
            kinds.push_back(k);
    if (kinds.size() != 1)
        throw CalcError(Errc::parse, "evidence file must carry exactly one payload kind");
    const std::string& kind = kinds.front();

    check_keys(root, {"partition", kind, "report"}, "evidence file");

    if (kind == "evidences" || kind == "weighted_set") {
        if (!has_partition)
            throw CalcError(Errc::parse, "\"" + kind + "\" needs a \"partition\"");
    } else if (has_partition) {
        throw CalcError(Errc::parse, "\"" + kind + "\" carries its own structure; no \"partition\"");
    }

    if (kind == "evidences") {
        Partition partition = parse_partition(root["partition"]);
        const auto& arr = root["evidences"];
        if (!arr.is_array() || arr.empty())
            throw CalcError(Errc::parse, "\"evidences\" must be a non-empty array");
        std::vector<AlphaEvidence> evidences;
        evidences.reserve(arr.size());
        for (const auto& e : arr) {
            if (!e.is_object())
                throw CalcError(Errc::parse, "each evidence must be an object");
            check_keys(e, {"credence", "dist"}, "evidence");
            if (!e.contains("dist"))
                throw CalcError(Errc::parse, "each evidence needs a \"dist\"");
            evidences.emplace_back(number_at(e, "credence"),
                                   validate_distribution(number_array(e["dist"], "\"dist\""),
                                                         partition));
        }
        return EvidenceFile{EvidenceList{std::move(partition), std::move(evidences)}};
    }

    if (kind == "weighted_set") {
        Partition partition = parse_partition(root["partition"]);
        const auto& arr = root["weighted_set"];
        if (!arr.is_array())
            throw CalcError(Errc::parse, "\"weighted_set\" must be an array");
        std::vector<WeightedBinaryEntry> entries;
        entries.reserve(arr.size());
        for (const auto& e : arr) {
            if (!e.is_object())
                throw CalcError(Errc::parse, "each weighted entry must be an object");
            check_keys(e, {"credence", "q"}, "weighted entry");
            entries.push_back(WeightedBinaryEntry{number_at(e, "credence"), number_at(e, "q")});
        }
        return EvidenceFile{WeightedBinarySet(std::move(partition), std::move(entries))};
    }

    if (kind == "joint") {
        const auto& j = root["joint"];
        if (!j.is_object())
            throw CalcError(Errc::parse, "\"joint\" must be an object");
        check_keys(j, {"credence", "b_partition", "cells"}, "\"joint\"");
        if (!j.contains("b_partition") || !j.contains("cells"))
            throw CalcError(Errc::parse, "\"joint\" needs \"b_partition\" and \"cells\"");
        Partition b = parse_partition(j["b_partition"]);
        ContingencyTable cells = parse_table(j["cells"], "\"cells\"");
        return EvidenceFile{JointPrior::validated(
            number_at(j, "credence"), std::move(b),
            std::array<std::vector<double>, 2>{std::move(cells[0]), std::move(cells[1])})};
    }

    if (kind == "first_order") {
        const auto& j = root["first_order"];
        if (!j.is_object())
            throw CalcError(Errc::parse, "\"first_order\" must be an object");
        check_keys(j, {"pA", "pAB", "pB"}, "\"first_order\"");
        return EvidenceFile{FirstOrderPrior::validated(number_at(j, "pA"), number_at(j, "pAB"),
                                                       number_at(j, "pB"))};
    }

    if (kind == "contingency") {
        const auto& j = root["contingency"];
        if (!j.is_object())
            throw CalcError(Errc::parse, "\"contingency\" must be an object");
        check_keys(j, {"credence", "table"}, "\"contingency\"");
        if (!j.contains("table"))
            throw CalcError(Errc::parse, "\"contingency\" needs a \"table\"");
        return EvidenceFile{
            ContingencyEvidence::validated(number_at(j, "credence"),
                                           parse_table(j["table"], "\"table\""))};
    }

    const auto& j = root["bet"];
    if (!j.is_object())
        throw CalcError(Errc::parse, "\"bet\" must be an object");
    check_keys(j, {"pB", "b", "r"}, "\"bet\"");
    return EvidenceFile{BetScenario(number_at(j, "pB"), number_at(j, "b"), number_at(j, "r"))};
}

} // namespace

EvidenceFile parse_evidence_file(const std::string& text) {
    ordered_json root;
    try {
        root = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& err) {
        throw CalcError(Errc::parse, err.what());
    }
    return parse_payload(root);
}

EvidenceFile load_evidence_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw CalcError(Errc::io, "cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_evidence_file(buffer.str());
}

namespace {

ordered_json partition_json(const Partition& partition) {
    ordered_json arr = ordered_json::array();
    for (const auto& label : partition.labels())
        arr.push_back(label);
    return arr;
}

ordered_json table_json(const ContingencyTable& table) {
    return ordered_json::array({table[0], table[1]});
}

struct PayloadToJson {
    ordered_json operator()(const EvidenceList& list) const {
        ordered_json out;
        out["partition"] = partition_json(list.partition);
        ordered_json arr = ordered_json::array();
        for (const auto& e : list.evidences)
            arr.push_back(ordered_json{{"credence", e.credence}, {"dist", e.dist.probs()}});
        out["evidences"] = std::move(arr);
        return out;
    }
    ordered_json operator()(const WeightedBinarySet& set) const {
        ordered_json out;
        out["partition"] = partition_json(set.partition());
        ordered_json arr = ordered_json::array();
        for (const auto& e : set.entries())
            arr.push_back(ordered_json{{"credence", e.credence}, {"q", e.q}});
        out["weighted_set"] = std::move(arr);
        return out;
    }
    ordered_json operator()(const JointPrior& prior) const {
        return ordered_json{{"joint",
                             {{"credence", prior.credence()},
                              {"b_partition", partition_json(prior.b_partition())},
                              {"cells", ordered_json::array({prior.cells()[0], prior.cells()[1]})}}}};
    }
    ordered_json operator()(const FirstOrderPrior& prior) const {
        return ordered_json{{"first_order",
                             {{"pA", prior.p_a()}, {"pAB", prior.p_ab()}, {"pB", prior.p_b()}}}};
    }
    ordered_json operator()(const ContingencyEvidence& evidence) const {
        return ordered_json{{"contingency",
                             {{"credence", evidence.credence()},
                              {"table", table_json(evidence.table())}}}};
    }
    ordered_json operator()(const BetScenario& bet) const {
        return ordered_json{{"bet", {{"pB", bet.p_b}, {"b", bet.b}, {"r", bet.r}}}};
    }
};

} // namespace

ordered_json evidence_file_to_json(const EvidenceFile& file) {
    return std::visit(PayloadToJson{}, file.payload);
}

std::string dump_evidence_file(const EvidenceFile& file) {
    return evidence_file_to_json(file).dump(2) + "\n";
}

} // namespace pdcalc
