#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <maxlot/profile_io.hpp>
#include <maxlot/search.hpp>
#include <maxlot/solver.hpp>
#include <maxlot/version.hpp>

namespace maxlot {

/// One structured record per CLI invocation. Rendering is byte-stable for
/// fixed inputs, flags, seed, and tool version; no timing data is included.
struct ReportRecord {
    std::string command;
    std::string mechanism;
    std::string property;
    std::string campaign;
    std::vector<std::pair<std::string, std::string>> scope;
    std::string outcome;
    std::vector<std::pair<std::string, std::string>> details;
    std::string version{kVersion};
    std::optional<std::uint64_t> seed;
};

inline std::string lottery_to_string(const Alternatives& alts, const Lottery& lottery) {
    std::string out;
    for (int i = 0; i < lottery.size(); ++i) {
        if (i > 0) out += ", ";
        out += alts.label(i) + ": " + to_string(lottery[i]);
    }
    return out;
}

inline std::string ranking_to_string(const Alternatives& alts, const WeakOrder& order) {
    std::string out;
    bool first_class = true;
    for (const auto& cls : order.classes()) {
        if (!first_class) out += " > ";
        first_class = false;
        bool first_alt = true;
        for (int alt : cls) {
            if (!first_alt) out += " = ";
            first_alt = false;
            out += alts.label(alt);
        }
    }
    return out;
}

inline std::string matrix_to_string(const SSBMatrix& matrix) {
    std::string out;
    for (int x = 0; x < matrix.size(); ++x) {
        if (x > 0) out += "; ";
        for (int y = 0; y < matrix.size(); ++y) {
            if (y > 0) out += " ";
            out += to_string(matrix.at(x, y));
        }
    }
    return out;
}

namespace detail {

inline void append_violation_details(std::vector<std::pair<std::string, std::string>>& details,
                                     const Alternatives& alts, const AuditViolation& violation) {
    if (const auto* v = std::get_if<WelfareViolation>(&violation)) {
        details.emplace_back("violating-alternative", alts.label(v->alternative));
        details.emplace_back("value", to_string(v->value));
    } else if (const auto* w = std::get_if<AbstentionWitness>(&violation)) {
        details.emplace_back("witness-profile", serialize_profile(w->full_profile));
        details.emplace_back("witness-abstainers", serialize_profile(w->abstainers));
        details.emplace_back("outcome-present", lottery_to_string(alts, w->outcome_present));
        details.emplace_back("outcome-absent", lottery_to_string(alts, w->outcome_absent));
        details.emplace_back("deficit", to_string(w->deficit));
        details.emplace_back("inequality", w->inequality);
    } else if (const auto* c = std::get_if<CancellationViolation>(&violation)) {
        details.emplace_back("cancelling-order", ranking_to_string(alts, c->order));
        details.emplace_back("base-outcome", lottery_to_string(alts, c->base_outcome));
        details.emplace_back("extended-outcome", lottery_to_string(alts, c->extended_outcome));
    } else if (const auto* h = std::get_if<HomogeneityViolation>(&violation)) {
        details.emplace_back("factor", std::to_string(h->factor));
        details.emplace_back("base-outcome", lottery_to_string(alts, h->base_outcome));
        details.emplace_back("replicated-outcome", lottery_to_string(alts, h->replicated_outcome));
    } else if (const auto* cd = std::get_if<CondorcetViolation>(&violation)) {
        details.emplace_back("condorcet-winner", alts.label(cd->winner));
        details.emplace_back("outcome", lottery_to_string(alts, cd->outcome));
    } else if (const auto* e = std::get_if<EfficiencyViolation>(&violation)) {
        details.emplace_back("dominated", alts.label(e->dominated));
        details.emplace_back("dominator", alts.label(e->dominator));
        details.emplace_back("probability", to_string(e->probability));
    } else if (const auto* imp = std::get_if<ImplicationViolation>(&violation)) {
        details.emplace_back("failing-mechanism", imp->mechanism);
        append_violation_details(details, alts, AuditViolation{imp->ordinal_witness});
    } else if (const auto* s = std::get_if<SignMatrixViolation>(&violation)) {
        details.emplace_back("matrix", matrix_to_string(s->matrix));
    }
}

}  // namespace detail

inline ReportRecord record_from_audit(const AuditReport& report) {
    ReportRecord record;
    record.command = "audit";
    record.campaign = report.campaign;
    record.mechanism = report.mechanism;
    record.property = report.property;
    record.seed = report.seed;
    record.scope.emplace_back("alternatives", std::to_string(report.alternatives));
    if (report.max_voters > 0)
        record.scope.emplace_back("max-voters", std::to_string(report.max_voters));
    record.scope.emplace_back("domain", report.domain);
    record.scope.emplace_back("budget", std::to_string(report.budget));
    record.scope.emplace_back("mode", report.mode);
    if (report.space > 0) record.scope.emplace_back("space", std::to_string(report.space));
    record.scope.emplace_back("inspected", std::to_string(report.inspected));
    for (const auto& note : report.notes) record.scope.push_back(note);
    record.outcome = std::string(outcome_name(report.outcome));
    if (report.witness) {
        record.details.emplace_back("witness-index", std::to_string(report.witness->index));
        const Alternatives alts = report.witness->profile
                                      ? report.witness->profile->alternatives()
                                      : Alternatives::default_labels(report.alternatives);
        if (report.witness->profile && !std::holds_alternative<AbstentionWitness>(report.witness->violation) &&
            !std::holds_alternative<ImplicationViolation>(report.witness->violation))
            record.details.emplace_back("witness-profile",
                                        serialize_profile(*report.witness->profile));
        detail::append_violation_details(record.details, alts, report.witness->violation);
    }
    return record;
}

/// Text rendering: the headline outcome first, then every field as
/// "key: value" lines; multi-line values are indented.
inline std::string to_text(const ReportRecord& record) {
    std::string out = record.outcome + "\n";
    auto emit = [&out](std::string_view key, std::string_view value) {
        if (value.empty()) return;
        if (value.find('\n') == std::string_view::npos) {
            out += std::string(key) + ": " + std::string(value) + "\n";
            return;
        }
        out += std::string(key) + ":\n";
        std::size_t start = 0;
        for (std::size_t i = 0; i <= value.size(); ++i) {
            if (i == value.size() || value[i] == '\n') {
                if (i > start) out += "    " + std::string(value.substr(start, i - start)) + "\n";
                start = i + 1;
            }
        }
    };
    emit("command", record.command);
    emit("campaign", record.campaign);
    emit("mechanism", record.mechanism);
    emit("property", record.property);
    for (const auto& [key, value] : record.scope) emit(key, value);
    for (const auto& [key, value] : record.details) emit(key, value);
    emit("version", record.version);
    if (record.seed) emit("seed", std::to_string(*record.seed));
    return out;
}

/// Machine rendering: one ordered JSON object.
inline std::string to_json(const ReportRecord& record) {
    nlohmann::ordered_json j;
    j["command"] = record.command;
    if (!record.campaign.empty()) j["campaign"] = record.campaign;
    if (!record.mechanism.empty()) j["mechanism"] = record.mechanism;
    if (!record.property.empty()) j["property"] = record.property;
    nlohmann::ordered_json scope = nlohmann::ordered_json::object();
    for (const auto& [key, value] : record.scope) scope[key] = value;
    j["scope"] = std::move(scope);
    j["outcome"] = record.outcome;
    nlohmann::ordered_json details = nlohmann::ordered_json::object();
    for (const auto& [key, value] : record.details) details[key] = value;
    j["details"] = std::move(details);
    j["version"] = record.version;
    if (record.seed)
        j["seed"] = *record.seed;
    else
        j["seed"] = nullptr;
    return j.dump(2) + "\n";
}

}  // namespace maxlot
