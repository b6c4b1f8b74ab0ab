#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include <maxlot/enumeration.hpp>
#include <maxlot/errors.hpp>
#include <maxlot/mechanisms.hpp>
#include <maxlot/profile.hpp>
#include <maxlot/solver.hpp>

namespace maxlot {

// ---------------------------------------------------------------------------
// Lottery comparisons induced by a weak order.

enum class SDResult { StrictlyDominates, StrictlyDominated, Equivalent, Incomparable };

/// Compares p against q by exact upper-contour-set probabilities: p strictly
/// dominates q when every contour difference is >= 0 and at least one is > 0.
inline SDResult sd_compare(const WeakOrder& order, const Lottery& p, const Lottery& q) {
    if (order.alternative_count() != p.size() || p.size() != q.size())
        throw DimensionMismatchError("sd_compare dimension mismatch");
    bool above = false, below = false;
    Rational diff{0};
    for (const auto& cls : order.classes()) {
        for (int alt : cls) diff += p[alt] - q[alt];
        if (diff > 0)
            above = true;
        else if (diff < 0)
            below = true;
    }
    if (above && below) return SDResult::Incomparable;
    if (above) return SDResult::StrictlyDominates;
    if (below) return SDResult::StrictlyDominated;
    return SDResult::Equivalent;
}

/// Sign of the canonical SSB value of (p, q): positive means p is more likely
/// to yield the better alternative than q is.
inline int pc_compare(const WeakOrder& order, const Lottery& p, const Lottery& q) {
    return sign_of(ssb_value(canonical_ssb(order), p, q));
}

// ---------------------------------------------------------------------------
// Property identifiers.

enum class PropertyId {
    WelfareMax,
    Participation,
    OrdinalParticipation,
    Cancellation,
    Homogeneity,
    Condorcet,
    ExPostEfficiency,
};

inline constexpr long long kHomogeneityFactorLimit = 3;

inline std::string_view property_name(PropertyId id) {
    switch (id) {
        case PropertyId::WelfareMax: return "welfare-max";
        case PropertyId::Participation: return "participation";
        case PropertyId::OrdinalParticipation: return "ordinal-participation";
        case PropertyId::Cancellation: return "cancellation";
        case PropertyId::Homogeneity: return "homogeneity";
        case PropertyId::Condorcet: return "condorcet";
        case PropertyId::ExPostEfficiency: return "ex-post-efficiency";
    }
    throw UnknownPropertyError("invalid property id");
}

inline std::vector<PropertyId> all_property_ids() {
    return {PropertyId::WelfareMax,  PropertyId::Participation, PropertyId::OrdinalParticipation,
            PropertyId::Cancellation, PropertyId::Homogeneity,   PropertyId::Condorcet,
            PropertyId::ExPostEfficiency};
}

inline PropertyId property_by_name(std::string_view name) {
    for (PropertyId id : all_property_ids())
        if (property_name(id) == name) return id;
    throw UnknownPropertyError("unknown property '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Violation records.

/// Machine-checkable evidence that a group of abstainers beats participating.
struct AbstentionWitness {
    Profile full_profile;
    Profile abstainers;  // non-empty strict sub-multiset of full_profile
    Lottery outcome_present;
    Lottery outcome_absent;
    /// The group SSB sum  sum_{i in S} phi_i(f(P), f(P\S)); strictly negative.
    Rational deficit;
    PropertyId property = PropertyId::Participation;
    std::string inequality;

    friend bool operator==(const AbstentionWitness& a, const AbstentionWitness& b) {
        return a.full_profile == b.full_profile && a.abstainers == b.abstainers &&
               a.outcome_present == b.outcome_present && a.outcome_absent == b.outcome_absent &&
               a.deficit == b.deficit && a.property == b.property && a.inequality == b.inequality;
    }
};

struct WelfareViolation {
    int alternative;
    Rational value;  // strictly negative column value at the outcome
    friend bool operator==(const WelfareViolation&, const WelfareViolation&) = default;
};

struct CancellationViolation {
    WeakOrder order;
    Lottery base_outcome;
    Lottery extended_outcome;
    friend bool operator==(const CancellationViolation& a, const CancellationViolation& b) {
        return a.order == b.order && a.base_outcome == b.base_outcome &&
               a.extended_outcome == b.extended_outcome;
    }
};

struct HomogeneityViolation {
    long long factor;
    Lottery base_outcome;
    Lottery replicated_outcome;
    friend bool operator==(const HomogeneityViolation& a, const HomogeneityViolation& b) {
        return a.factor == b.factor && a.base_outcome == b.base_outcome &&
               a.replicated_outcome == b.replicated_outcome;
    }
};

struct CondorcetViolation {
    int winner;
    Lottery outcome;
    friend bool operator==(const CondorcetViolation& a, const CondorcetViolation& b) {
        return a.winner == b.winner && a.outcome == b.outcome;
    }
};

struct EfficiencyViolation {
    int dominated;
    int dominator;
    Rational probability;
    friend bool operator==(const EfficiencyViolation&, const EfficiencyViolation&) = default;
};

using Violation = std::variant<WelfareViolation, AbstentionWitness, CancellationViolation,
                               HomogeneityViolation, CondorcetViolation, EfficiencyViolation>;

/// Memo for mechanism outcomes keyed by aggregate fingerprint. Each search
/// worker owns one; checkers never share state implicitly.
struct EvalCache {
    std::unordered_map<std::string, Lottery> ml_outcomes;
};

struct AbstentionStats {
    unsigned long long subsets_inspected = 0;
};

// ---------------------------------------------------------------------------
// Abstention scan machinery.

namespace detail {

inline std::string margin_key(const std::vector<long long>& margins) {
    return std::string(reinterpret_cast<const char*>(margins.data()),
                       margins.size() * sizeof(long long));
}

inline std::string margin_key(const std::vector<Rational>& margins) {
    std::string key;
    for (const Rational& e : margins) {
        key += e.str();
        key += ';';
    }
    return key;
}

inline SSBMatrix matrix_from_margins(const std::vector<long long>& margins, int m) {
    std::vector<Rational> entries;
    entries.reserve(margins.size());
    for (long long v : margins) entries.emplace_back(v);
    return SSBMatrix(m, std::move(entries));
}

inline SSBMatrix matrix_from_margins(const std::vector<Rational>& margins, int m) {
    return SSBMatrix(m, margins);
}

/// Evaluates a mechanism on the subprofile described by `removals`, given the
/// subprofile's aggregate margins. Fast paths keep the logic of the public
/// mechanisms (same scoring templates); anything unknown falls back to
/// Mechanism::apply on a materialized subprofile.
template <class Num>
Lottery eval_on_margins(const Mechanism& mech, const Profile& profile,
                        const std::vector<long long>& removals, const std::vector<Num>& margins,
                        EvalCache* cache) {
    const int m = profile.alternative_count();
    switch (mech.id()) {
        case MechanismId::CU: {
            if (auto winner = condorcet_winner_entries(margins, m))
                return Lottery::degenerate_at(m, *winner);
            return Lottery::uniform(m);
        }
        case MechanismId::Copeland:
            return Lottery::degenerate_at(m, copeland_choice_entries(margins, m));
        case MechanismId::ML: {
            if (auto winner = condorcet_winner_entries(margins, m))
                return Lottery::degenerate_at(m, *winner);
            if (cache != nullptr) {
                std::string key = margin_key(margins);
                if (auto it = cache->ml_outcomes.find(key); it != cache->ml_outcomes.end())
                    return it->second;
                Lottery outcome = lex_maximal(matrix_from_margins(margins, m));
                cache->ml_outcomes.emplace(std::move(key), outcome);
                return outcome;
            }
            return lex_maximal(matrix_from_margins(margins, m));
        }
        case MechanismId::RD: {
            std::vector<Profile::Entry> rest;
            const auto& entries = profile.entries();
            for (std::size_t t = 0; t < entries.size(); ++t)
                if (entries[t].second - removals[t] > 0)
                    rest.emplace_back(entries[t].first, entries[t].second - removals[t]);
            return rd_choice(rest, m);
        }
    }
    return mech.apply(profile.without(removals));
}

/// Iterates every non-empty strict sub-multiset of the profile in canonical
/// order (removal counts as a base-(multiplicity+1) counter over canonically
/// sorted types, last type least significant, i.e. lexicographically
/// increasing removal vectors), maintaining the subprofile aggregate
/// incrementally. The judge sees (removals, outcome_absent) and returns the
/// (deficit, inequality) pair of a violation, or nullopt.
template <class Num, class Judge>
std::optional<AbstentionWitness> scan_submultisets(const Mechanism& mech, const Profile& profile,
                                                   const Lottery& outcome_present,
                                                   PropertyId property, EvalCache* cache,
                                                   AbstentionStats* stats, Judge judge) {
    const int m = profile.alternative_count();
    const auto& entries = profile.entries();
    const int type_count = profile.type_count();

    std::vector<std::vector<Num>> type_margins(static_cast<std::size_t>(type_count));
    for (int t = 0; t < type_count; ++t) {
        const SSBMatrix phi = voter_type_ssb(entries[static_cast<std::size_t>(t)].first);
        auto& row = type_margins[static_cast<std::size_t>(t)];
        row.reserve(phi.entries().size());
        for (const Rational& e : phi.entries()) {
            if constexpr (std::is_same_v<Num, long long>)
                row.push_back(e > 0 ? 1 : (e < 0 ? -1 : 0));  // canonical entries only
            else
                row.push_back(e);
        }
    }

    std::vector<Num> margins(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), Num(0));
    for (int t = 0; t < type_count; ++t)
        for (std::size_t i = 0; i < margins.size(); ++i)
            margins[i] += Num(entries[static_cast<std::size_t>(t)].second) *
                          type_margins[static_cast<std::size_t>(t)][i];

    std::vector<long long> removals(static_cast<std::size_t>(type_count), 0);
    for (;;) {
        // Advance the odometer; removing one voter of type t subtracts its
        // matrix once, a digit reset adds the full multiplicity back.
        int pos = type_count - 1;
        while (pos >= 0 &&
               removals[static_cast<std::size_t>(pos)] == entries[static_cast<std::size_t>(pos)].second) {
            const long long full = entries[static_cast<std::size_t>(pos)].second;
            removals[static_cast<std::size_t>(pos)] = 0;
            for (std::size_t i = 0; i < margins.size(); ++i)
                margins[i] += Num(full) * type_margins[static_cast<std::size_t>(pos)][i];
            --pos;
        }
        if (pos < 0) break;
        ++removals[static_cast<std::size_t>(pos)];
        for (std::size_t i = 0; i < margins.size(); ++i)
            margins[i] -= type_margins[static_cast<std::size_t>(pos)][i];

        bool all_full = true;
        for (int t = 0; t < type_count && all_full; ++t)
            if (removals[static_cast<std::size_t>(t)] != entries[static_cast<std::size_t>(t)].second)
                all_full = false;
        if (all_full) break;  // S must be a strict sub-multiset

        if (stats != nullptr) ++stats->subsets_inspected;
        Lottery absent = eval_on_margins(mech, profile, removals, margins, cache);
        if (auto hit = judge(removals, absent)) {
            return AbstentionWitness{profile,
                                     profile.sub_multiset(removals),
                                     outcome_present,
                                     std::move(absent),
                                     std::move(hit->first),
                                     property,
                                     std::move(hit->second)};
        }
    }
    return std::nullopt;
}

/// w[t][y] = ssb_value(phi_t, outcome_present, e_y): the per-type row needed
/// by every group-deficit evaluation.
inline std::vector<std::vector<Rational>> present_values(const Profile& profile,
                                                         const Lottery& present) {
    const int m = profile.alternative_count();
    std::vector<std::vector<Rational>> w;
    w.reserve(profile.entries().size());
    for (const auto& [type, count] : profile.entries()) {
        const SSBMatrix phi = voter_type_ssb(type);
        std::vector<Rational> row(static_cast<std::size_t>(m), Rational(0));
        for (int y = 0; y < m; ++y)
            for (int x = 0; x < m; ++x)
                if (present[x] != 0) row[static_cast<std::size_t>(y)] += present[x] * phi.at(x, y);
        w.push_back(std::move(row));
    }
    return w;
}

inline Rational group_deficit(const std::vector<std::vector<Rational>>& w,
                              const std::vector<long long>& removals, const Lottery& absent) {
    Rational total{0};
    for (std::size_t t = 0; t < removals.size(); ++t) {
        if (removals[t] == 0) continue;
        Rational value{0};
        for (int y = 0; y < absent.size(); ++y)
            if (absent[y] != 0) value += absent[y] * w[t][static_cast<std::size_t>(y)];
        total += Rational(removals[t]) * value;
    }
    return total;
}

inline constexpr std::string_view kParticipationInequality =
    "sum_{i in S} phi_i(f(P), f(P minus S)) >= 0";
inline constexpr std::string_view kOrdinalParticipationInequality =
    "no S where every abstainer strictly SD-prefers f(P minus S) to f(P); "
    "group SSB sum reported as deficit";

template <class Num>
std::optional<AbstentionWitness> participation_scan(const Mechanism& mech, const Profile& profile,
                                                    EvalCache* cache, AbstentionStats* stats) {
    const Lottery present = mech.apply(profile);
    const auto w = present_values(profile, present);
    auto judge = [&](const std::vector<long long>& removals,
                     const Lottery& absent) -> std::optional<std::pair<Rational, std::string>> {
        if (absent == present) return std::nullopt;  // deficit is identically 0
        Rational deficit = group_deficit(w, removals, absent);
        if (deficit < 0) return std::make_pair(std::move(deficit), std::string(kParticipationInequality));
        return std::nullopt;
    };
    return scan_submultisets<Num>(mech, profile, present, PropertyId::Participation, cache, stats,
                                  judge);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Axiom checkers.

/// None when f(profile) is welfare-maximizing for the aggregate; otherwise
/// the first alternative whose column value is negative, with that value.
inline std::optional<WelfareViolation> check_welfare_maximizing(const Mechanism& mech,
                                                                const Profile& profile) {
    const Lottery outcome = mech.apply(profile);
    const SSBMatrix matrix = aggregate(profile);
    const int m = matrix.size();
    for (int y = 0; y < m; ++y) {
        Rational column{0};
        for (int x = 0; x < m; ++x)
            if (outcome[x] != 0) column += outcome[x] * matrix.at(x, y);
        if (column < 0) return WelfareViolation{y, std::move(column)};
    }
    return std::nullopt;
}

/// Enumerates every non-empty strict sub-multiset S of the profile and
/// returns the first one (canonical order) whose group SSB sum against the
/// abstention outcome is strictly negative.
inline std::optional<AbstentionWitness> check_participation(const Mechanism& mech,
                                                            const Profile& profile,
                                                            EvalCache* cache = nullptr,
                                                            AbstentionStats* stats = nullptr) {
    if (profile.is_ordinal())
        return detail::participation_scan<long long>(mech, profile, cache, stats);
    return detail::participation_scan<Rational>(mech, profile, cache, stats);
}

/// Returns the first sub-multiset S (canonical order) such that every voter
/// type in S strictly SD-prefers the abstention outcome. Ordinal profiles
/// only.
inline std::optional<AbstentionWitness> check_ordinal_participation(
    const Mechanism& mech, const Profile& profile, EvalCache* cache = nullptr,
    AbstentionStats* stats = nullptr) {
    if (!profile.is_ordinal())
        throw NonOrdinalProfileError("ordinal participation needs an ordinal profile");
    const Lottery present = mech.apply(profile);
    const auto w = detail::present_values(profile, present);
    const auto& entries = profile.entries();
    auto judge = [&](const std::vector<long long>& removals,
                     const Lottery& absent) -> std::optional<std::pair<Rational, std::string>> {
        if (absent == present) return std::nullopt;
        for (std::size_t t = 0; t < removals.size(); ++t) {
            if (removals[t] == 0) continue;
            const WeakOrder& order = std::get<WeakOrder>(entries[t].first);
            if (sd_compare(order, absent, present) != SDResult::StrictlyDominates)
                return std::nullopt;
        }
        // PC refines SD, so the group sum is strictly negative here.
        Rational deficit = detail::group_deficit(w, removals, absent);
        return std::make_pair(std::move(deficit),
                              std::string(detail::kOrdinalParticipationInequality));
    };
    return detail::scan_submultisets<long long>(mech, profile, present,
                                                PropertyId::OrdinalParticipation, cache, stats,
                                                judge);
}

/// Compares f(P) with f(P plus {order, reverse(order)}).
inline std::optional<CancellationViolation> check_cancellation(const Mechanism& mech,
                                                               const Profile& profile,
                                                               const WeakOrder& order) {
    const Lottery base = mech.apply(profile);
    const Profile extended =
        profile.extended_with(order, 1).extended_with(order.reversed(), 1);
    Lottery after = mech.apply(extended);
    if (after == base) return std::nullopt;
    return CancellationViolation{order, base, std::move(after)};
}

/// Compares f(P) with f(replicate(P, k)) for k = 2..k_max.
inline std::optional<HomogeneityViolation> check_homogeneity(const Mechanism& mech,
                                                             const Profile& profile,
                                                             long long k_max) {
    if (k_max < 2) throw InvalidFactorError("homogeneity check needs k_max >= 2");
    const Lottery base = mech.apply(profile);
    for (long long k = 2; k <= k_max; ++k) {
        Lottery replicated = mech.apply(replicate(profile, k));
        if (replicated != base) return HomogeneityViolation{k, base, std::move(replicated)};
    }
    return std::nullopt;
}

/// When a Condorcet winner exists, f must put probability 1 on it.
inline std::optional<CondorcetViolation> check_condorcet_consistency(const Mechanism& mech,
                                                                     const Profile& profile) {
    const auto winner = condorcet_winner(aggregate(profile));
    if (!winner) return std::nullopt;
    Lottery outcome = mech.apply(profile);
    if (outcome == Lottery::degenerate_at(profile.alternative_count(), *winner))
        return std::nullopt;
    return CondorcetViolation{*winner, std::move(outcome)};
}

/// x Pareto-dominates y when every voter weakly prefers x to y and at least
/// one strictly prefers it. Ordinal profiles only.
inline bool pareto_dominates(const Profile& profile, int x, int y) {
    if (!profile.is_ordinal())
        throw NonOrdinalProfileError("Pareto dominance needs an ordinal profile");
    bool strict = false;
    for (const auto& [type, count] : profile.entries()) {
        const WeakOrder& order = std::get<WeakOrder>(type);
        if (order.rank_of(x) > order.rank_of(y)) return false;
        if (order.rank_of(x) < order.rank_of(y)) strict = true;
    }
    return strict;
}

inline std::vector<int> pareto_dominators(const Profile& profile, int y) {
    std::vector<int> dominators;
    for (int x = 0; x < profile.alternative_count(); ++x)
        if (x != y && pareto_dominates(profile, x, y)) dominators.push_back(x);
    return dominators;
}

/// Reports a Pareto-dominated alternative that receives positive probability.
inline std::optional<EfficiencyViolation> check_ex_post_efficiency(const Mechanism& mech,
                                                                   const Profile& profile) {
    const Lottery outcome = mech.apply(profile);
    for (int y = 0; y < profile.alternative_count(); ++y) {
        if (outcome[y] == 0) continue;
        const std::vector<int> dominators = pareto_dominators(profile, y);
        if (!dominators.empty()) return EfficiencyViolation{y, dominators.front(), outcome[y]};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Uniform dispatch and witness re-verification.

/// Runs the named property checker. Cancellation quantifies over every weak
/// order of the instance; homogeneity checks factors up to
/// kHomogeneityFactorLimit.
inline std::optional<Violation> run_property(const Mechanism& mech, PropertyId property,
                                             const Profile& profile, EvalCache* cache = nullptr) {
    switch (property) {
        case PropertyId::WelfareMax:
            if (auto v = check_welfare_maximizing(mech, profile)) return Violation{*v};
            return std::nullopt;
        case PropertyId::Participation:
            if (auto v = check_participation(mech, profile, cache)) return Violation{*v};
            return std::nullopt;
        case PropertyId::OrdinalParticipation:
            if (auto v = check_ordinal_participation(mech, profile, cache)) return Violation{*v};
            return std::nullopt;
        case PropertyId::Cancellation:
            for (const WeakOrder& order : enumerate_weak_orders(profile.alternative_count()))
                if (auto v = check_cancellation(mech, profile, order)) return Violation{*v};
            return std::nullopt;
        case PropertyId::Homogeneity:
            if (auto v = check_homogeneity(mech, profile, kHomogeneityFactorLimit))
                return Violation{*v};
            return std::nullopt;
        case PropertyId::Condorcet:
            if (auto v = check_condorcet_consistency(mech, profile)) return Violation{*v};
            return std::nullopt;
        case PropertyId::ExPostEfficiency:
            if (auto v = check_ex_post_efficiency(mech, profile)) return Violation{*v};
            return std::nullopt;
    }
    throw UnknownPropertyError("invalid property id");
}

/// Recomputes both outcomes and the deficit of a stored witness from scratch
/// and compares exactly.
inline bool reverify(const Mechanism& mech, const AbstentionWitness& witness) {
    const Lottery present = mech.apply(witness.full_profile);
    const Profile rest = witness.full_profile.minus(witness.abstainers);
    const Lottery absent = mech.apply(rest);
    if (present != witness.outcome_present || absent != witness.outcome_absent) return false;
    Rational deficit{0};
    for (const auto& [type, count] : witness.abstainers.entries())
        deficit += Rational(count) * ssb_value(voter_type_ssb(type), present, absent);
    if (deficit != witness.deficit) return false;
    if (witness.property == PropertyId::Participation) return deficit < 0;
    // Ordinal participation: every abstainer must strictly SD-prefer absence.
    for (const auto& [type, count] : witness.abstainers.entries())
        if (sd_compare(std::get<WeakOrder>(type), absent, present) != SDResult::StrictlyDominates)
            return false;
    return deficit < 0;
}

/// Independent second evaluation of a reported violation: re-runs the checker
/// without any cache and demands the identical record.
inline bool reverify_violation(const Mechanism& mech, PropertyId property, const Profile& profile,
                               const Violation& violation) {
    const auto again = run_property(mech, property, profile, nullptr);
    if (!again || !(*again == violation)) return false;
    if (const auto* witness = std::get_if<AbstentionWitness>(&violation))
        return reverify(mech, *witness);
    return true;
}

}  // namespace maxlot
