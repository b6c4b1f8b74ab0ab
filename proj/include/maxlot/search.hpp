#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

#include <maxlot/enumeration.hpp>
#include <maxlot/example_profiles.hpp>
#include <maxlot/properties.hpp>
#include <maxlot/random.hpp>

namespace maxlot {

/// Deterministic description of a search: the seed fully determines the
/// random stream, independently of how many worker threads shard the scan.
struct SearchBudget {
    int alternatives = 3;
    int max_voters = 4;
    Domain domain = Domain::StrictOrders;
    long long max_profiles = 200000;
    std::uint64_t seed = 42;
};

enum class CampaignId {
    Thm1,
    Prop1,
    Cor1,
    Cor2Contrapositive,
    Cor3Contrapositive,
    Lemma1,
    MoulinContrast,
    CuInefficiency,
};

inline std::string_view campaign_name(CampaignId id) {
    switch (id) {
        case CampaignId::Thm1: return "thm1";
        case CampaignId::Prop1: return "prop1";
        case CampaignId::Cor1: return "cor1";
        case CampaignId::Cor2Contrapositive: return "cor2-contrapositive";
        case CampaignId::Cor3Contrapositive: return "cor3-contrapositive";
        case CampaignId::Lemma1: return "lemma1";
        case CampaignId::MoulinContrast: return "moulin-contrast";
        case CampaignId::CuInefficiency: return "cu-inefficiency";
    }
    throw UnknownCampaignError("invalid campaign id");
}

inline std::vector<CampaignId> all_campaign_ids() {
    return {CampaignId::Thm1,
            CampaignId::Prop1,
            CampaignId::Cor1,
            CampaignId::Cor2Contrapositive,
            CampaignId::Cor3Contrapositive,
            CampaignId::Lemma1,
            CampaignId::MoulinContrast,
            CampaignId::CuInefficiency};
}

inline CampaignId campaign_by_name(std::string_view name) {
    for (CampaignId id : all_campaign_ids())
        if (campaign_name(id) == name) return id;
    throw UnknownCampaignError("unknown campaign '" + std::string(name) + "'");
}

enum class AuditOutcome { PassExhaustive, PassSampled, WitnessFound };

inline std::string_view outcome_name(AuditOutcome outcome) {
    switch (outcome) {
        case AuditOutcome::PassExhaustive: return "pass-exhaustive";
        case AuditOutcome::PassSampled: return "pass-sampled";
        case AuditOutcome::WitnessFound: return "witness-found";
    }
    return "unknown";
}

/// A mechanism passing full participation on a profile while failing ordinal
/// participation would contradict the refinement between the two axioms.
struct ImplicationViolation {
    std::string mechanism;
    AbstentionWitness ordinal_witness;
    friend bool operator==(const ImplicationViolation& a, const ImplicationViolation& b) {
        return a.mechanism == b.mechanism && a.ordinal_witness == b.ordinal_witness;
    }
};

/// A {-1, 0, +1} skew-symmetric matrix on which the degenerate-uniqueness
/// equivalence failed.
struct SignMatrixViolation {
    SSBMatrix matrix;
    friend bool operator==(const SignMatrixViolation& a, const SignMatrixViolation& b) {
        return a.matrix == b.matrix;
    }
};

using AuditViolation =
    std::variant<WelfareViolation, AbstentionWitness, CancellationViolation, HomogeneityViolation,
                 CondorcetViolation, EfficiencyViolation, ImplicationViolation, SignMatrixViolation>;

inline AuditViolation widen_violation(Violation violation) {
    return std::visit([](auto&& v) { return AuditViolation{std::move(v)}; }, std::move(violation));
}

struct WitnessRecord {
    unsigned long long index = 0;  // position in the deterministic scan order
    std::optional<Profile> profile;
    AuditViolation violation;
};

/// Result of a search or audit campaign. Every field is deterministic for a
/// fixed budget; wall-clock timing never enters a report.
struct AuditReport {
    std::string campaign;  // empty for a bare find_counterexample search
    std::string mechanism;
    std::string property;
    int alternatives = 0;
    int max_voters = 0;
    std::string domain;
    long long budget = 0;
    std::uint64_t seed = 0;
    std::string mode;  // exhaustive | sampled | exhaustive+sampled | fixed
    /// Exhaustively enumerated space when known (0 otherwise).
    unsigned long long space = 0;
    /// Profiles inspected: witness index + 1 on a hit, the full scope
    /// otherwise. Independent of the worker count.
    unsigned long long inspected = 0;
    AuditOutcome outcome = AuditOutcome::PassExhaustive;
    std::optional<WitnessRecord> witness;
    std::vector<std::pair<std::string, std::string>> notes;
};

/// Outcome each campaign is designed to produce; used for exit codes.
inline bool audit_matches_expectation(CampaignId id, const AuditReport& report) {
    switch (id) {
        case CampaignId::Thm1:
        case CampaignId::Prop1:
        case CampaignId::Cor1:
        case CampaignId::Lemma1:
            return report.outcome != AuditOutcome::WitnessFound;
        case CampaignId::Cor2Contrapositive:
        case CampaignId::Cor3Contrapositive: {
            if (report.outcome != AuditOutcome::WitnessFound || !report.witness) return false;
            const auto* w = std::get_if<AbstentionWitness>(&report.witness->violation);
            return w != nullptr && w->property == PropertyId::Participation;
        }
        case CampaignId::MoulinContrast: {
            if (report.outcome != AuditOutcome::WitnessFound || !report.witness) return false;
            const auto* w = std::get_if<AbstentionWitness>(&report.witness->violation);
            return w != nullptr && w->property == PropertyId::OrdinalParticipation;
        }
        case CampaignId::CuInefficiency:
            return report.outcome == AuditOutcome::WitnessFound && report.witness &&
                   std::holds_alternative<EfficiencyViolation>(report.witness->violation);
    }
    return false;
}

namespace detail {

/// Scans indices 0..total-1 for the first hit, sharded over `jobs` workers in
/// fixed-size chunks claimed in increasing order. The minimum hit index wins,
/// so the result is identical for every worker count. Workers claim chunks
/// monotonically, which keeps any forward-only per-worker state valid.
template <class MakeState, class Check>
std::optional<WitnessRecord> scan_indices(unsigned long long total, int jobs, MakeState make_state,
                                          Check check) {
    if (total == 0) return std::nullopt;
    if (jobs <= 1) {
        auto state = make_state();
        for (unsigned long long i = 0; i < total; ++i)
            if (auto hit = check(i, state)) return hit;
        return std::nullopt;
    }

    constexpr unsigned long long kChunk = 64;
    std::atomic<unsigned long long> next_chunk{0};
    std::atomic<unsigned long long> best{~0ull};
    std::mutex hits_mutex;
    std::map<unsigned long long, WitnessRecord> hits;

    auto worker = [&] {
        auto state = make_state();
        for (;;) {
            const unsigned long long chunk = next_chunk.fetch_add(1);
            const unsigned long long start = chunk * kChunk;
            if (start >= total || start >= best.load()) return;
            const unsigned long long end = std::min(total, start + kChunk);
            for (unsigned long long i = start; i < end; ++i) {
                if (i >= best.load()) break;
                if (auto hit = check(i, state)) {
                    unsigned long long current = best.load();
                    while (i < current && !best.compare_exchange_weak(current, i)) {
                    }
                    std::lock_guard<std::mutex> lock(hits_mutex);
                    hits.emplace(i, std::move(*hit));
                    break;
                }
            }
        }
    };

    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(jobs));
    for (int j = 0; j < jobs; ++j) workers.emplace_back(worker);
    for (auto& w : workers) w.join();

    const unsigned long long winner = best.load();
    if (winner == ~0ull) return std::nullopt;
    auto it = hits.find(winner);
    if (it == hits.end()) throw Error("internal error: lost witness record");
    return it->second;
}

/// Saturating count of all anonymous profiles of sizes 1..max_voters.
inline unsigned long long profile_space(unsigned long long types, int max_voters) {
    constexpr unsigned long long cap = ~0ull;
    unsigned long long total = 0;
    for (int n = 1; n <= max_voters; ++n) {
        const unsigned long long block = multiset_count(types, static_cast<unsigned long long>(n));
        if (block == cap || total > cap - block) return cap;
        total += block;
    }
    return total;
}

inline Profile profile_from_counts(const Alternatives& alternatives,
                                   const std::vector<WeakOrder>& types,
                                   const std::vector<long long>& counts) {
    std::vector<Profile::Entry> entries;
    for (std::size_t t = 0; t < types.size(); ++t)
        if (counts[t] > 0) entries.emplace_back(types[t], counts[t]);
    return Profile(alternatives, std::move(entries));
}

struct WorkerState {
    std::optional<MultisetStream> stream;  // exhaustive scans only
    EvalCache cache;
};

/// Per-profile audit step shared by searches and campaigns: run the checker,
/// and re-verify any violation with an independent cache-free evaluation
/// before reporting it.
inline std::optional<WitnessRecord> check_profile(const Mechanism& mech, PropertyId property,
                                                  Profile profile, unsigned long long index,
                                                  EvalCache* cache) {
    auto violation = run_property(mech, property, profile, cache);
    if (!violation) return std::nullopt;
    if (!reverify_violation(mech, property, profile, *violation))
        throw Error("witness failed independent re-verification");
    return WitnessRecord{index, std::move(profile), widen_violation(std::move(*violation))};
}

}  // namespace detail

/// Runs the property checker over every anonymous profile of sizes
/// 1..max_voters when that space fits within max_profiles, otherwise over
/// seeded random draws; returns the first verified witness (minimum scan
/// index) or an exhaustion report.
inline AuditReport find_counterexample(const Mechanism& mech, PropertyId property,
                                       const SearchBudget& budget, int jobs = 1) {
    const Alternatives alternatives = Alternatives::default_labels(budget.alternatives);
    const std::vector<WeakOrder> types = domain_types(budget.alternatives, budget.domain);
    const unsigned long long space = detail::profile_space(types.size(), budget.max_voters);
    const bool exhaustive = space <= static_cast<unsigned long long>(budget.max_profiles);

    AuditReport report;
    report.mechanism = std::string(mech.name());
    report.property = std::string(property_name(property));
    report.alternatives = budget.alternatives;
    report.max_voters = budget.max_voters;
    report.domain = std::string(domain_name(budget.domain));
    report.budget = budget.max_profiles;
    report.seed = budget.seed;

    std::optional<WitnessRecord> witness;
    if (exhaustive) {
        report.mode = "exhaustive";
        report.space = space;
        witness = detail::scan_indices(
            space, jobs,
            [&] {
                detail::WorkerState state;
                state.stream.emplace(static_cast<int>(types.size()), budget.max_voters);
                return state;
            },
            [&](unsigned long long i, detail::WorkerState& state) {
                state.stream->seek(i);
                Profile profile =
                    detail::profile_from_counts(alternatives, types, state.stream->counts());
                return detail::check_profile(mech, property, std::move(profile), i, &state.cache);
            });
        report.outcome = witness ? AuditOutcome::WitnessFound : AuditOutcome::PassExhaustive;
        report.inspected = witness ? witness->index + 1 : space;
    } else {
        report.mode = "sampled";
        const auto total = static_cast<unsigned long long>(budget.max_profiles);
        witness = detail::scan_indices(
            total, jobs, [] { return detail::WorkerState{}; },
            [&](unsigned long long i, detail::WorkerState& state) {
                Profile profile =
                    random_profile(alternatives, types, budget.max_voters, budget.seed, i);
                return detail::check_profile(mech, property, std::move(profile), i, &state.cache);
            });
        report.outcome = witness ? AuditOutcome::WitnessFound : AuditOutcome::PassSampled;
        report.inspected = witness ? witness->index + 1 : total;
    }
    report.witness = std::move(witness);
    return report;
}

namespace detail {

inline AuditReport audit_lemma1(const SearchBudget& budget, int jobs) {
    const int m = budget.alternatives;
    const int cells = m * (m - 1) / 2;
    unsigned long long total = 1;
    for (int c = 0; c < cells; ++c) total *= 3;

    AuditReport report;
    report.campaign = "lemma1";
    report.alternatives = m;
    report.domain = "sign-matrices";
    report.budget = budget.max_profiles;
    report.seed = budget.seed;
    report.mode = "exhaustive";
    report.space = total;

    auto matrix_at = [m, cells](unsigned long long index) {
        std::vector<Rational> entries(static_cast<std::size_t>(m) * static_cast<std::size_t>(m),
                                      Rational(0));
        unsigned long long rest = index;
        for (int x = 0; x < m; ++x)
            for (int y = x + 1; y < m; ++y) {
                const int digit = static_cast<int>(rest % 3);
                rest /= 3;
                const Rational value{digit - 1};
                entries[static_cast<std::size_t>(x * m + y)] = value;
                entries[static_cast<std::size_t>(y * m + x)] = -value;
            }
        (void)cells;
        return SSBMatrix(m, std::move(entries));
    };

    auto witness = scan_indices(
        total, jobs, [] { return 0; },
        [&](unsigned long long i, int&) -> std::optional<WitnessRecord> {
            SSBMatrix matrix = matrix_at(i);
            if (verify_lemma1(matrix)) return std::nullopt;
            return WitnessRecord{i, std::nullopt, SignMatrixViolation{std::move(matrix)}};
        });
    report.outcome = witness ? AuditOutcome::WitnessFound : AuditOutcome::PassExhaustive;
    report.inspected = witness ? witness->index + 1 : total;
    report.witness = std::move(witness);
    return report;
}

inline std::optional<WitnessRecord> prop1_check(const Profile& profile, unsigned long long index,
                                                EvalCache* cache) {
    for (MechanismId id : all_mechanism_ids()) {
        const Mechanism& mech = mechanism(id);
        if (check_participation(mech, profile, cache)) continue;
        auto ordinal = check_ordinal_participation(mech, profile, cache);
        if (!ordinal) continue;
        // Independent re-verification before reporting.
        auto again = check_ordinal_participation(mech, profile, nullptr);
        if (!again || !(*again == *ordinal) || !reverify(mech, *ordinal) ||
            check_participation(mech, profile, nullptr))
            throw Error("witness failed independent re-verification");
        return WitnessRecord{index, profile,
                             ImplicationViolation{std::string(mech.name()), std::move(*ordinal)}};
    }
    return std::nullopt;
}

inline AuditReport audit_prop1(const SearchBudget& budget, int jobs) {
    const Alternatives alternatives = Alternatives::default_labels(budget.alternatives);
    const std::vector<WeakOrder> types = domain_types(budget.alternatives, budget.domain);
    const unsigned long long space = profile_space(types.size(), budget.max_voters);
    const bool exhaustive = space <= static_cast<unsigned long long>(budget.max_profiles);

    AuditReport report;
    report.campaign = "prop1";
    report.mechanism = "all";
    report.property = "participation => ordinal-participation";
    report.alternatives = budget.alternatives;
    report.max_voters = budget.max_voters;
    report.domain = std::string(domain_name(budget.domain));
    report.budget = budget.max_profiles;
    report.seed = budget.seed;

    std::optional<WitnessRecord> witness;
    if (exhaustive) {
        report.mode = "exhaustive";
        report.space = space;
        witness = scan_indices(
            space, jobs,
            [&] {
                WorkerState state;
                state.stream.emplace(static_cast<int>(types.size()), budget.max_voters);
                return state;
            },
            [&](unsigned long long i, WorkerState& state) {
                state.stream->seek(i);
                return prop1_check(profile_from_counts(alternatives, types, state.stream->counts()),
                                   i, &state.cache);
            });
        report.outcome = witness ? AuditOutcome::WitnessFound : AuditOutcome::PassExhaustive;
        report.inspected = witness ? witness->index + 1 : space;
    } else {
        report.mode = "sampled";
        const auto total = static_cast<unsigned long long>(budget.max_profiles);
        witness = scan_indices(
            total, jobs, [] { return WorkerState{}; },
            [&](unsigned long long i, WorkerState& state) {
                return prop1_check(
                    random_profile(alternatives, types, budget.max_voters, budget.seed, i), i,
                    &state.cache);
            });
        report.outcome = witness ? AuditOutcome::WitnessFound : AuditOutcome::PassSampled;
        report.inspected = witness ? witness->index + 1 : total;
    }
    report.witness = std::move(witness);
    report.notes.emplace_back("mechanisms", "ml,cu,copeland,rd");
    return report;
}

inline AuditReport audit_cor3(const SearchBudget& budget, int jobs) {
    const Mechanism& cu = mechanism(MechanismId::CU);
    const Alternatives alternatives = Alternatives::default_labels(budget.alternatives);
    const std::vector<WeakOrder> types = domain_types(budget.alternatives, budget.domain);
    const unsigned long long space = profile_space(types.size(), budget.max_voters);
    const bool exhaustive = space <= static_cast<unsigned long long>(budget.max_profiles);

    // Stage 1: verify cancellation and homogeneity over a deterministic
    // sub-scope before hunting the participation witness.
    const unsigned long long axiom_scope =
        std::min<unsigned long long>(2000, exhaustive ? space
                                                      : static_cast<unsigned long long>(
                                                            budget.max_profiles));
    std::optional<WitnessRecord> axiom_witness = scan_indices(
        axiom_scope, jobs,
        [&] {
            WorkerState state;
            if (exhaustive)
                state.stream.emplace(static_cast<int>(types.size()), budget.max_voters);
            return state;
        },
        [&](unsigned long long i, WorkerState& state) -> std::optional<WitnessRecord> {
            Profile profile = [&] {
                if (exhaustive) {
                    state.stream->seek(i);
                    return profile_from_counts(alternatives, types, state.stream->counts());
                }
                return random_profile(alternatives, types, budget.max_voters, budget.seed, i);
            }();
            if (auto hit = check_profile(cu, PropertyId::Cancellation, profile, i, &state.cache))
                return hit;
            return check_profile(cu, PropertyId::Homogeneity, std::move(profile), i, &state.cache);
        });

    AuditReport report = find_counterexample(cu, PropertyId::Participation, budget, jobs);
    report.campaign = "cor3-contrapositive";
    report.notes.emplace_back("axiom-scope", std::to_string(axiom_scope));
    report.notes.emplace_back("cancellation", axiom_witness ? "violated" : "pass");
    report.notes.emplace_back("homogeneity",
                              axiom_witness ? "violated" : "pass (k <= " +
                                                               std::to_string(kHomogeneityFactorLimit) + ")");
    if (axiom_witness) {
        // CU provably satisfies both axioms; reaching this would be a defect
        // worth surfacing as the report's witness.
        report.outcome = AuditOutcome::WitnessFound;
        report.witness = std::move(axiom_witness);
    }
    return report;
}

inline AuditReport audit_moulin(const SearchBudget& budget, int jobs) {
    const Mechanism& copeland = mechanism(MechanismId::Copeland);
    const Alternatives alternatives = Alternatives::default_labels(budget.alternatives);
    const std::vector<WeakOrder> types = domain_types(budget.alternatives, budget.domain);

    // Stage A exhausts small electorate sizes (at most a tenth of the
    // budget), then stage B samples with the full voter range.
    const auto budget_total = static_cast<unsigned long long>(budget.max_profiles);
    int exhaustive_voters = 0;
    unsigned long long exhaustive_total = 0;
    for (int n = 1; n <= budget.max_voters; ++n) {
        const unsigned long long next = profile_space(types.size(), n);
        if (next > budget_total / 10) break;
        exhaustive_voters = n;
        exhaustive_total = next;
    }
    const unsigned long long sampled_total =
        budget_total > exhaustive_total ? budget_total - exhaustive_total : 0;
    const unsigned long long total = exhaustive_total + sampled_total;

    auto witness = scan_indices(
        total, jobs,
        [&] {
            WorkerState state;
            if (exhaustive_voters > 0)
                state.stream.emplace(static_cast<int>(types.size()), exhaustive_voters);
            return state;
        },
        [&](unsigned long long i, WorkerState& state) {
            Profile profile = [&] {
                if (i < exhaustive_total) {
                    state.stream->seek(i);
                    return profile_from_counts(alternatives, types, state.stream->counts());
                }
                return random_profile(alternatives, types, budget.max_voters, budget.seed,
                                      i - exhaustive_total);
            }();
            return check_profile(copeland, PropertyId::OrdinalParticipation, std::move(profile), i,
                                 &state.cache);
        });

    AuditReport report;
    report.campaign = "moulin-contrast";
    report.mechanism = std::string(copeland.name());
    report.property = std::string(property_name(PropertyId::OrdinalParticipation));
    report.alternatives = budget.alternatives;
    report.max_voters = budget.max_voters;
    report.domain = std::string(domain_name(budget.domain));
    report.budget = budget.max_profiles;
    report.seed = budget.seed;
    report.mode = "exhaustive+sampled";
    report.space = exhaustive_total;
    report.outcome = witness ? AuditOutcome::WitnessFound : AuditOutcome::PassSampled;
    report.inspected = witness ? witness->index + 1 : total;
    report.witness = std::move(witness);
    report.notes.emplace_back("exhaustive-voters", "1.." + std::to_string(exhaustive_voters));
    report.notes.emplace_back("exhaustive-count", std::to_string(exhaustive_total));
    report.notes.emplace_back("sampled-count", std::to_string(sampled_total));
    return report;
}

inline AuditReport audit_cu_inefficiency(const SearchBudget& budget) {
    const Mechanism& cu = mechanism(MechanismId::CU);
    const Profile profile = dominated_alternative_profile();

    AuditReport report;
    report.campaign = "cu-inefficiency";
    report.mechanism = std::string(cu.name());
    report.property = std::string(property_name(PropertyId::ExPostEfficiency));
    report.alternatives = profile.alternative_count();
    report.max_voters = static_cast<int>(profile.voter_count());
    report.domain = "fixed-profile";
    report.budget = budget.max_profiles;
    report.seed = budget.seed;
    report.mode = "fixed";
    report.space = 1;
    report.inspected = 1;
    auto witness = check_profile(cu, PropertyId::ExPostEfficiency, profile, 0, nullptr);
    report.outcome = witness ? AuditOutcome::WitnessFound : AuditOutcome::PassExhaustive;
    report.witness = std::move(witness);
    report.notes.emplace_back("profile", "dominated-alternative-profile");
    return report;
}

}  // namespace detail

/// Runs one of the named audit campaigns at the given budget.
inline AuditReport audit_theorem(CampaignId campaign, const SearchBudget& budget, int jobs = 1) {
    switch (campaign) {
        case CampaignId::Thm1: {
            AuditReport report =
                find_counterexample(mechanism(MechanismId::ML), PropertyId::Participation, budget,
                                    jobs);
            report.campaign = "thm1";
            return report;
        }
        case CampaignId::Cor1: {
            AuditReport report = find_counterexample(mechanism(MechanismId::ML),
                                                     PropertyId::OrdinalParticipation, budget, jobs);
            report.campaign = "cor1";
            return report;
        }
        case CampaignId::Prop1:
            return detail::audit_prop1(budget, jobs);
        case CampaignId::Cor2Contrapositive: {
            AuditReport report = find_counterexample(mechanism(MechanismId::CU),
                                                     PropertyId::Participation, budget, jobs);
            report.campaign = "cor2-contrapositive";
            return report;
        }
        case CampaignId::Cor3Contrapositive:
            return detail::audit_cor3(budget, jobs);
        case CampaignId::Lemma1:
            return detail::audit_lemma1(budget, jobs);
        case CampaignId::MoulinContrast:
            return detail::audit_moulin(budget, jobs);
        case CampaignId::CuInefficiency:
            return detail::audit_cu_inefficiency(budget);
    }
    throw UnknownCampaignError("invalid campaign id");
}

}  // namespace maxlot
