#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <maxlot/maxlot.hpp>

namespace {

// Exit codes: 0 success / expected outcome, 1 witness found (check) or
// unexpected audit outcome, 2 profile parse errors, 3 unknown
// mechanism/property/campaign, 4 property-profile mismatch.
constexpr int kExitWitness = 1;
constexpr int kExitParse = 2;
constexpr int kExitUnknownId = 3;
constexpr int kExitMismatch = 4;

std::string read_file(const std::string& path) {
    std::ifstream stream(path, std::ios::binary);
    if (!stream) throw maxlot::ParseError("cannot open file '" + path + "'", 1, 1);
    std::ostringstream buffer;
    buffer << stream.rdbuf();
    return buffer.str();
}

void emit(const maxlot::ReportRecord& record, const std::string& format,
          const std::string& out_path) {
    if (format == "machine")
        std::cout << maxlot::to_json(record);
    else
        std::cout << maxlot::to_text(record);
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw maxlot::Error("cannot write '" + out_path + "'");
        out << maxlot::to_json(record);
    }
}

std::string ranges_to_string(const maxlot::Alternatives& alts,
                             const maxlot::MaximalAnalysis& analysis) {
    std::string out;
    for (int i = 0; i < alts.size(); ++i) {
        if (i > 0) out += ", ";
        out += alts.label(i) + ": [" + maxlot::to_string(analysis.per_alternative_range[i].first) +
               ", " + maxlot::to_string(analysis.per_alternative_range[i].second) + "]";
    }
    return out;
}

int run_solve(const std::string& path, const std::string& mechanism_name,
              const std::string& format, const std::string& out_path) {
    const maxlot::Mechanism& mech = maxlot::mechanism_by_name(mechanism_name);
    const maxlot::Profile profile = maxlot::parse_profile(read_file(path));
    const maxlot::Alternatives& alts = profile.alternatives();
    const maxlot::Lottery outcome = mech.apply(profile);

    maxlot::ReportRecord record;
    record.command = "solve";
    record.mechanism = std::string(mech.name());
    record.scope.emplace_back("file", path);
    record.scope.emplace_back("voters", std::to_string(profile.voter_count()));

    std::string line = maxlot::lottery_to_string(alts, outcome);
    const auto winner = maxlot::condorcet_winner(maxlot::aggregate(profile));
    if (mech.id() == maxlot::MechanismId::ML) {
        const maxlot::MaximalAnalysis analysis = maxlot::uniqueness_analysis(maxlot::aggregate(profile));
        line += analysis.unique ? " (unique)" : " (not unique)";
        record.details.emplace_back("unique", analysis.unique ? "yes" : "no");
        record.details.emplace_back("ranges", ranges_to_string(alts, analysis));
    }
    if (winner && (mech.id() == maxlot::MechanismId::ML || mech.id() == maxlot::MechanismId::CU))
        line += " (Condorcet winner: " + alts.label(*winner) + ")";
    record.outcome = std::move(line);
    emit(record, format, out_path);
    return 0;
}

int run_check(const std::string& path, const std::string& mechanism_name,
              const std::string& property_name, const std::string& format,
              const std::string& out_path) {
    const maxlot::Mechanism& mech = maxlot::mechanism_by_name(mechanism_name);
    const maxlot::PropertyId property = maxlot::property_by_name(property_name);
    const maxlot::Profile profile = maxlot::parse_profile(read_file(path));

    maxlot::ReportRecord record;
    record.command = "check";
    record.mechanism = std::string(mech.name());
    record.property = std::string(maxlot::property_name(property));
    record.scope.emplace_back("file", path);
    record.scope.emplace_back("voters", std::to_string(profile.voter_count()));

    const auto violation = maxlot::run_property(mech, property, profile);
    if (!violation) {
        record.outcome = "pass";
        emit(record, format, out_path);
        return 0;
    }
    record.outcome = "witness-found";
    record.details.emplace_back("profile", maxlot::serialize_profile(profile));
    maxlot::detail::append_violation_details(record.details, profile.alternatives(),
                                             maxlot::widen_violation(*violation));
    emit(record, format, out_path);
    return kExitWitness;
}

int run_audit(const std::string& campaign_name, const maxlot::SearchBudget& budget, int jobs,
              const std::string& format, const std::string& out_path) {
    const maxlot::CampaignId campaign = maxlot::campaign_by_name(campaign_name);
    const maxlot::AuditReport report = maxlot::audit_theorem(campaign, budget, jobs);
    emit(maxlot::record_from_audit(report), format, out_path);
    return maxlot::audit_matches_expectation(campaign, report) ? 0 : kExitWitness;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact maximal-lottery solver and axiom audit tool"};
    app.require_subcommand(1);

    std::string file, mechanism_name = "ml", property_name, campaign_name;
    std::string format = "text", out_path, domain_name = "strict";
    int alts = 3, voters = 4, jobs = 1;
    long long budget = 200000;
    std::uint64_t seed = 42;

    auto add_output_flags = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "machine"}));
        cmd->add_option("--out", out_path, "also write a machine-readable report to this file");
    };

    CLI::App* solve = app.add_subcommand("solve", "compute a mechanism outcome for a profile file");
    solve->add_option("file", file, "profile file")->required();
    solve->add_option("--mechanism", mechanism_name, "ml | cu | copeland | rd");
    add_output_flags(solve);

    CLI::App* check = app.add_subcommand("check", "run one axiom checker on a profile file");
    check->add_option("file", file, "profile file")->required();
    check->add_option("--mechanism", mechanism_name, "ml | cu | copeland | rd");
    check->add_option("--property", property_name, "axiom to check")->required();
    add_output_flags(check);

    CLI::App* audit = app.add_subcommand("audit", "run a named audit campaign");
    audit->add_option("campaign", campaign_name, "campaign id")->required();
    audit->add_option("--alts", alts, "number of alternatives");
    audit->add_option("--voters", voters, "maximum electorate size");
    audit->add_option("--domain", domain_name, "voter type domain")
        ->check(CLI::IsMember({"strict", "weak"}));
    audit->add_option("--budget", budget, "maximum number of profiles to inspect");
    audit->add_option("--seed", seed, "random stream seed");
    audit->add_option("--jobs", jobs, "parallel search shards");
    add_output_flags(audit);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return run_solve(file, mechanism_name, format, out_path);
        if (check->parsed())
            return run_check(file, mechanism_name, property_name, format, out_path);
        maxlot::SearchBudget search_budget;
        search_budget.alternatives = alts;
        search_budget.max_voters = voters;
        search_budget.domain =
            domain_name == "weak" ? maxlot::Domain::WeakOrders : maxlot::Domain::StrictOrders;
        search_budget.max_profiles = budget;
        search_budget.seed = seed;
        return run_audit(campaign_name, search_budget, jobs, format, out_path);
    } catch (const maxlot::UnknownMechanismError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnknownId;
    } catch (const maxlot::UnknownPropertyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnknownId;
    } catch (const maxlot::UnknownCampaignError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnknownId;
    } catch (const maxlot::NonOrdinalProfileError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const maxlot::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const maxlot::NotSkewSymmetricError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const maxlot::EmptyProfileError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const maxlot::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
}
