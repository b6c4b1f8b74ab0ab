#pragma once

#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include <maxlot/errors.hpp>
#include <maxlot/lottery.hpp>
#include <maxlot/profile.hpp>
#include <maxlot/solver.hpp>

namespace maxlot {

enum class MechanismId { ML, CU, Copeland, RD };

/// Copeland score = pairwise wins minus pairwise losses; ties broken by the
/// global alternative order. Works on any margin entry type that compares
/// against 0.
template <class Num>
int copeland_choice_entries(const std::vector<Num>& entries, int m) {
    int best = 0;
    int best_score = -2 * m;
    for (int x = 0; x < m; ++x) {
        int score = 0;
        for (int y = 0; y < m; ++y) {
            if (y == x) continue;
            const auto& margin = entries[static_cast<std::size_t>(x * m + y)];
            if (margin > 0)
                ++score;
            else if (margin < 0)
                --score;
        }
        if (score > best_score) {
            best_score = score;
            best = x;
        }
    }
    return best;
}

namespace detail {

inline void require_ordinal(const Profile& profile, std::string_view mechanism) {
    if (!profile.is_ordinal())
        throw NonOrdinalProfileError(std::string(mechanism) +
                                     " is defined on ordinal profiles only");
}

/// Shared body of random dictatorship: every voter contributes weight 1/n,
/// split equally over their top indifference class.
inline Lottery rd_choice(const std::vector<Profile::Entry>& entries, int m) {
    std::vector<Rational> probs(static_cast<std::size_t>(m), Rational(0));
    long long n = 0;
    for (const auto& [type, count] : entries) n += count;
    for (const auto& [type, count] : entries) {
        const auto& top = std::get<WeakOrder>(type).top_class();
        const Rational share{Int(count), Int(n) * Int(top.size())};
        for (int alt : top) probs[static_cast<std::size_t>(alt)] += share;
    }
    return Lottery(std::move(probs));
}

}  // namespace detail

/// A mechanism is a pure, deterministic, anonymous function from profiles to
/// lotteries.
class Mechanism {
  public:
    virtual ~Mechanism() = default;
    virtual MechanismId id() const = 0;
    /// CLI-facing identifier: ml, cu, copeland, rd.
    virtual std::string_view name() const = 0;
    virtual std::string_view description() const = 0;
    virtual Lottery apply(const Profile& profile) const = 0;
    /// For mechanisms whose outcome depends on the profile only through its
    /// aggregate SSB matrix; nullopt for the others.
    virtual std::optional<Lottery> apply_to_aggregate(const SSBMatrix&) const {
        return std::nullopt;
    }
};

namespace detail {

class MaximalLotteryMechanism final : public Mechanism {
  public:
    MechanismId id() const override { return MechanismId::ML; }
    std::string_view name() const override { return "ml"; }
    std::string_view description() const override {
        return "lexicographic selection from the welfare-maximizing lotteries of the aggregate";
    }
    Lottery apply(const Profile& profile) const override { return lex_maximal(aggregate(profile)); }
    std::optional<Lottery> apply_to_aggregate(const SSBMatrix& matrix) const override {
        return lex_maximal(matrix);
    }
};

class CondorcetUniformMechanism final : public Mechanism {
  public:
    MechanismId id() const override { return MechanismId::CU; }
    std::string_view name() const override { return "cu"; }
    std::string_view description() const override {
        return "the Condorcet winner when one exists, otherwise the uniform lottery";
    }
    Lottery apply(const Profile& profile) const override {
        require_ordinal(profile, name());
        return *apply_to_aggregate(aggregate(profile));
    }
    std::optional<Lottery> apply_to_aggregate(const SSBMatrix& matrix) const override {
        if (auto winner = condorcet_winner(matrix))
            return Lottery::degenerate_at(matrix.size(), *winner);
        return Lottery::uniform(matrix.size());
    }
};

class CopelandMechanism final : public Mechanism {
  public:
    MechanismId id() const override { return MechanismId::Copeland; }
    std::string_view name() const override { return "copeland"; }
    std::string_view description() const override {
        return "degenerate lottery on the Copeland winner (wins minus losses, lexicographic ties)";
    }
    Lottery apply(const Profile& profile) const override {
        require_ordinal(profile, name());
        return *apply_to_aggregate(aggregate(profile));
    }
    std::optional<Lottery> apply_to_aggregate(const SSBMatrix& matrix) const override {
        return Lottery::degenerate_at(matrix.size(),
                                      copeland_choice_entries(matrix.entries(), matrix.size()));
    }
};

class RandomDictatorshipMechanism final : public Mechanism {
  public:
    MechanismId id() const override { return MechanismId::RD; }
    std::string_view name() const override { return "rd"; }
    std::string_view description() const override {
        return "each voter contributes weight 1/n, split equally over their top class";
    }
    Lottery apply(const Profile& profile) const override {
        require_ordinal(profile, name());
        return rd_choice(profile.entries(), profile.alternative_count());
    }
};

}  // namespace detail

inline const Mechanism& mechanism(MechanismId id) {
    static const detail::MaximalLotteryMechanism ml;
    static const detail::CondorcetUniformMechanism cu;
    static const detail::CopelandMechanism copeland;
    static const detail::RandomDictatorshipMechanism rd;
    switch (id) {
        case MechanismId::ML: return ml;
        case MechanismId::CU: return cu;
        case MechanismId::Copeland: return copeland;
        case MechanismId::RD: return rd;
    }
    throw UnknownMechanismError("invalid mechanism id");
}

inline const Mechanism& mechanism_by_name(std::string_view name) {
    for (MechanismId id : {MechanismId::ML, MechanismId::CU, MechanismId::Copeland, MechanismId::RD})
        if (mechanism(id).name() == name) return mechanism(id);
    throw UnknownMechanismError("unknown mechanism '" + std::string(name) + "'");
}

inline std::vector<MechanismId> all_mechanism_ids() {
    return {MechanismId::ML, MechanismId::CU, MechanismId::Copeland, MechanismId::RD};
}

inline Lottery ml_mechanism(const Profile& profile) {
    return mechanism(MechanismId::ML).apply(profile);
}
inline Lottery cu_mechanism(const Profile& profile) {
    return mechanism(MechanismId::CU).apply(profile);
}
inline Lottery copeland_mechanism(const Profile& profile) {
    return mechanism(MechanismId::Copeland).apply(profile);
}
inline Lottery rd_mechanism(const Profile& profile) {
    return mechanism(MechanismId::RD).apply(profile);
}

}  // namespace maxlot
