#pragma once

#include <algorithm>
#include <limits>
#include <set>
#include <vector>

#include <maxlot/errors.hpp>
#include <maxlot/lottery.hpp>
#include <maxlot/profile.hpp>
#include <maxlot/weak_order.hpp>

namespace maxlot {

enum class Domain { StrictOrders, WeakOrders };

inline std::string_view domain_name(Domain domain) {
    return domain == Domain::StrictOrders ? "strict" : "weak";
}

/// All m! linear orders, sorted by rank vector.
inline std::vector<WeakOrder> enumerate_strict_orders(int m) {
    std::vector<int> ranks(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) ranks[static_cast<std::size_t>(i)] = i;
    std::vector<WeakOrder> orders;
    do {
        orders.push_back(WeakOrder::from_ranks(ranks));
    } while (std::next_permutation(ranks.begin(), ranks.end()));
    return orders;
}

/// All ordered partitions of the alternative set, enumerated as rank vectors
/// in lexicographic order (ranks must cover an initial segment 0..k).
inline std::vector<WeakOrder> enumerate_weak_orders(int m) {
    std::vector<WeakOrder> orders;
    std::vector<int> ranks(static_cast<std::size_t>(m), 0);
    for (;;) {
        int max_rank = 0;
        for (int r : ranks) max_rank = std::max(max_rank, r);
        std::vector<bool> used(static_cast<std::size_t>(max_rank + 1), false);
        for (int r : ranks) used[static_cast<std::size_t>(r)] = true;
        if (std::find(used.begin(), used.end(), false) == used.end())
            orders.push_back(WeakOrder::from_ranks(ranks));
        int pos = m - 1;
        while (pos >= 0 && ranks[static_cast<std::size_t>(pos)] == m - 1) {
            ranks[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++ranks[static_cast<std::size_t>(pos)];
    }
    return orders;
}

inline std::vector<WeakOrder> domain_types(int m, Domain domain) {
    return domain == Domain::StrictOrders ? enumerate_strict_orders(m) : enumerate_weak_orders(m);
}

/// C(types + size - 1, size), saturating at the maximum representable value.
inline unsigned long long multiset_count(unsigned long long types, unsigned long long size) {
    constexpr unsigned long long cap = std::numeric_limits<unsigned long long>::max();
    unsigned long long result = 1;
    for (unsigned long long i = 1; i <= size; ++i) {
        const unsigned long long factor = types - 1 + i;
        if (result > cap / factor) return cap;
        result = result * factor / i;  // exact: product of i consecutive terms divides by i!
    }
    return result;
}

/// Count vectors over `types` slots summing to `size`, visited in
/// lexicographically decreasing order, starting from (size, 0, ..., 0).
/// The visitor returns false to stop early; for_each_multiset returns false
/// when stopped.
template <class Visit>
bool for_each_multiset(int types, long long size, Visit visit) {
    std::vector<long long> counts(static_cast<std::size_t>(types), 0);
    counts[0] = size;
    for (;;) {
        if (!visit(counts)) return false;
        // Successor: decrement the rightmost positive slot before the last,
        // dump everything to its right (plus one) into the next slot.
        int pos = types - 2;
        while (pos >= 0 && counts[static_cast<std::size_t>(pos)] == 0) --pos;
        if (pos < 0) return true;
        long long tail = 0;
        for (int t = pos + 1; t < types; ++t) {
            tail += counts[static_cast<std::size_t>(t)];
            counts[static_cast<std::size_t>(t)] = 0;
        }
        --counts[static_cast<std::size_t>(pos)];
        counts[static_cast<std::size_t>(pos + 1)] = tail + 1;
    }
}

/// Forward-only cursor over all anonymous profiles (count vectors) of sizes
/// 1..max_voters over a fixed type list, each size block in lexicographically
/// decreasing count order. Used by the sharded exhaustive search.
class MultisetStream {
  public:
    MultisetStream(int types, int max_voters) : types_(types), max_voters_(max_voters) {
        counts_.assign(static_cast<std::size_t>(types_), 0);
        counts_[0] = 1;
    }

    const std::vector<long long>& counts() const { return counts_; }
    long long size() const { return size_; }
    unsigned long long position() const { return position_; }
    bool exhausted() const { return exhausted_; }

    void step() {
        if (exhausted_) return;
        ++position_;
        int pos = types_ - 2;
        while (pos >= 0 && counts_[static_cast<std::size_t>(pos)] == 0) --pos;
        if (pos >= 0) {
            long long tail = 0;
            for (int t = pos + 1; t < types_; ++t) {
                tail += counts_[static_cast<std::size_t>(t)];
                counts_[static_cast<std::size_t>(t)] = 0;
            }
            --counts_[static_cast<std::size_t>(pos)];
            counts_[static_cast<std::size_t>(pos + 1)] = tail + 1;
            return;
        }
        if (size_ == max_voters_) {
            exhausted_ = true;
            return;
        }
        ++size_;
        std::fill(counts_.begin(), counts_.end(), 0);
        counts_[0] = size_;
    }

    void seek(unsigned long long position) {
        while (!exhausted_ && position_ < position) step();
    }

  private:
    int types_;
    int max_voters_;
    std::vector<long long> counts_;
    long long size_ = 1;
    unsigned long long position_ = 0;
    bool exhausted_ = false;
};

/// Every anonymous profile of `voters` voters over the given domain, visited
/// exactly once in the canonical order above. Returns false when the visitor
/// stopped early.
template <class Visit>
bool enumerate_profiles(const Alternatives& alternatives, long long voters, Domain domain,
                        Visit visit) {
    if (voters < 1) throw Error("profile size must be at least 1");
    const std::vector<WeakOrder> types = domain_types(alternatives.size(), domain);
    return for_each_multiset(
        static_cast<int>(types.size()), voters, [&](const std::vector<long long>& counts) {
            std::vector<Profile::Entry> entries;
            for (std::size_t t = 0; t < types.size(); ++t)
                if (counts[t] > 0) entries.emplace_back(types[t], counts[t]);
            return visit(Profile(alternatives, std::move(entries)));
        });
}

/// All lotteries whose probabilities can be written over a common denominator
/// of at most max_denominator, deduplicated and sorted.
inline std::vector<Lottery> enumerate_lotteries(int m, int max_denominator) {
    std::set<std::vector<Rational>> seen;
    for (int den = 1; den <= max_denominator; ++den) {
        for_each_multiset(m, den, [&](const std::vector<long long>& counts) {
            std::vector<Rational> probs;
            probs.reserve(static_cast<std::size_t>(m));
            for (long long c : counts) probs.emplace_back(Int(c), Int(den));
            seen.insert(std::move(probs));
            return true;
        });
    }
    std::vector<Lottery> lotteries;
    lotteries.reserve(seen.size());
    for (const auto& probs : seen) lotteries.emplace_back(probs);
    return lotteries;
}

}  // namespace maxlot
