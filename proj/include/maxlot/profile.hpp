#pragma once

#include <utility>
#include <variant>
#include <vector>

#include <maxlot/alternatives.hpp>
#include <maxlot/errors.hpp>
#include <maxlot/ssb_matrix.hpp>
#include <maxlot/weak_order.hpp>

namespace maxlot {

/// A voter type: either an ordinal weak order or a raw skew-symmetric SSB
/// matrix.
using VoterType = std::variant<WeakOrder, SSBMatrix>;

inline int voter_type_size(const VoterType& type) {
    return std::holds_alternative<WeakOrder>(type)
               ? std::get<WeakOrder>(type).alternative_count()
               : std::get<SSBMatrix>(type).size();
}

/// Canonical SSB matrix of a voter type: the canonical representation for
/// weak orders, the matrix itself otherwise.
inline SSBMatrix voter_type_ssb(const VoterType& type) {
    if (std::holds_alternative<WeakOrder>(type)) return canonical_ssb(std::get<WeakOrder>(type));
    return std::get<SSBMatrix>(type);
}

/// Strict total order on voter types used for the canonical profile layout:
/// weak orders (by rank vector) before raw matrices (by entries).
inline bool voter_type_less(const VoterType& a, const VoterType& b) {
    if (a.index() != b.index()) return a.index() < b.index();
    if (std::holds_alternative<WeakOrder>(a))
        return std::get<WeakOrder>(a) < std::get<WeakOrder>(b);
    return std::get<SSBMatrix>(a) < std::get<SSBMatrix>(b);
}

/// An anonymous preference profile: a multiset of voter types with positive
/// multiplicities. Two profiles with the same type multiset compare equal
/// regardless of construction order.
class Profile {
  public:
    using Entry = std::pair<VoterType, long long>;

    Profile(Alternatives alternatives, std::vector<Entry> entries)
        : alternatives_(std::move(alternatives)) {
        for (auto& [type, count] : entries) {
            if (count <= 0) throw Error("voter multiplicity must be positive");
            if (voter_type_size(type) != alternatives_.size())
                throw DimensionMismatchError("voter type dimension does not match alternatives");
            add_entry(std::move(type), count);
        }
        if (entries_.empty()) throw EmptyProfileError("profile has no voters");
        recount();
    }

    const Alternatives& alternatives() const { return alternatives_; }
    int alternative_count() const { return alternatives_.size(); }

    /// Canonically sorted (type, multiplicity) entries.
    const std::vector<Entry>& entries() const { return entries_; }
    int type_count() const { return static_cast<int>(entries_.size()); }
    long long voter_count() const { return voter_count_; }

    bool is_ordinal() const {
        for (const auto& [type, count] : entries_)
            if (!std::holds_alternative<WeakOrder>(type)) return false;
        return true;
    }

    /// Profile with `count` extra voters of the given type.
    Profile extended_with(VoterType type, long long count) const {
        std::vector<Entry> entries = entries_;
        entries.emplace_back(std::move(type), count);
        return Profile(alternatives_, std::move(entries));
    }

    /// Multiset union.
    Profile merged_with(const Profile& other) const {
        if (!(alternatives_ == other.alternatives_))
            throw DimensionMismatchError("merging profiles over different alternative lists");
        std::vector<Entry> entries = entries_;
        entries.insert(entries.end(), other.entries_.begin(), other.entries_.end());
        return Profile(alternatives_, std::move(entries));
    }

    /// Profile with removals[t] voters of type t taken away. Throws
    /// EmptyProfileError when nothing remains.
    Profile without(const std::vector<long long>& removals) const {
        if (removals.size() != entries_.size()) throw Error("removal vector length mismatch");
        std::vector<Entry> rest;
        for (std::size_t t = 0; t < entries_.size(); ++t) {
            const long long r = removals[t];
            if (r < 0 || r > entries_[t].second) throw Error("removal count out of range");
            if (entries_[t].second - r > 0) rest.emplace_back(entries_[t].first, entries_[t].second - r);
        }
        return Profile(alternatives_, std::move(rest));
    }

    /// Multiset difference; `sub` must be a sub-multiset of this profile.
    Profile minus(const Profile& sub) const {
        if (!(alternatives_ == sub.alternatives_))
            throw DimensionMismatchError("subtracting profile over different alternative list");
        std::vector<long long> removals(entries_.size(), 0);
        for (const auto& [type, count] : sub.entries_) {
            bool found = false;
            for (std::size_t t = 0; t < entries_.size() && !found; ++t) {
                if (entries_[t].first == type) {
                    removals[t] = count;
                    found = true;
                }
            }
            if (!found) throw Error("profile to subtract is not a sub-multiset");
        }
        return without(removals);
    }

    /// The sub-multiset given by the removal vector, as its own profile.
    Profile sub_multiset(const std::vector<long long>& removals) const {
        if (removals.size() != entries_.size()) throw Error("removal vector length mismatch");
        std::vector<Entry> taken;
        for (std::size_t t = 0; t < entries_.size(); ++t) {
            const long long r = removals[t];
            if (r < 0 || r > entries_[t].second) throw Error("removal count out of range");
            if (r > 0) taken.emplace_back(entries_[t].first, r);
        }
        return Profile(alternatives_, std::move(taken));
    }

    friend bool operator==(const Profile& a, const Profile& b) {
        return a.alternatives_ == b.alternatives_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const Profile& a, const Profile& b) { return !(a == b); }

  private:
    void add_entry(VoterType type, long long count) {
        auto pos = entries_.begin();
        while (pos != entries_.end() && voter_type_less(pos->first, type)) ++pos;
        if (pos != entries_.end() && pos->first == type)
            pos->second += count;
        else
            entries_.insert(pos, Entry{std::move(type), count});
    }

    void recount() {
        voter_count_ = 0;
        for (const auto& [type, count] : entries_) voter_count_ += count;
    }

    Alternatives alternatives_;
    std::vector<Entry> entries_;
    long long voter_count_ = 0;
};

/// Multiplicity-weighted entrywise sum of the voters' SSB matrices, using the
/// canonical representation for ordinal types.
inline SSBMatrix aggregate(const Profile& profile) {
    if (profile.voter_count() == 0) throw EmptyProfileError("aggregate of empty profile");
    const int m = profile.alternative_count();
    std::vector<Rational> sum(static_cast<std::size_t>(m) * static_cast<std::size_t>(m),
                              Rational(0));
    for (const auto& [type, count] : profile.entries()) {
        const SSBMatrix phi = voter_type_ssb(type);
        const Rational factor{count};
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += factor * phi.entries()[i];
    }
    return SSBMatrix(m, std::move(sum));
}

/// Every multiplicity scaled by k, so aggregate(replicate(P, k)) equals
/// k * aggregate(P).
inline Profile replicate(const Profile& profile, long long k) {
    if (k < 1) throw InvalidFactorError("replication factor must be at least 1");
    std::vector<Profile::Entry> entries;
    entries.reserve(profile.entries().size());
    for (const auto& [type, count] : profile.entries()) entries.emplace_back(type, count * k);
    return Profile(profile.alternatives(), std::move(entries));
}

}  // namespace maxlot
