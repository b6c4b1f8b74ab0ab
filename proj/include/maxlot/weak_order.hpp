#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include <maxlot/errors.hpp>

namespace maxlot {

/// A complete, reflexive, transitive preference relation over the alternative
/// set, stored as an ordered partition into indifference classes. An earlier
/// class is strictly preferred to every later class.
class WeakOrder {
  public:
    /// Classes of alternative indices; must partition {0, ..., m-1}.
    explicit WeakOrder(std::vector<std::vector<int>> classes) : classes_(std::move(classes)) {
        std::size_t m = 0;
        for (const auto& cls : classes_) {
            if (cls.empty()) throw Error("empty indifference class");
            m += cls.size();
        }
        if (m == 0) throw Error("weak order over empty alternative set");
        ranks_.assign(m, -1);
        for (std::size_t k = 0; k < classes_.size(); ++k) {
            auto& cls = classes_[k];
            std::sort(cls.begin(), cls.end());
            for (int alt : cls) {
                if (alt < 0 || static_cast<std::size_t>(alt) >= m)
                    throw Error("alternative index out of range in weak order");
                if (ranks_[static_cast<std::size_t>(alt)] != -1)
                    throw Error("alternative appears twice in weak order");
                ranks_[static_cast<std::size_t>(alt)] = static_cast<int>(k);
            }
        }
    }

    /// rank[alt] = index of the class containing alt; ranks must form an
    /// initial segment 0..k.
    static WeakOrder from_ranks(const std::vector<int>& ranks) {
        int max_rank = -1;
        for (int r : ranks) max_rank = std::max(max_rank, r);
        std::vector<std::vector<int>> classes(static_cast<std::size_t>(max_rank + 1));
        for (std::size_t alt = 0; alt < ranks.size(); ++alt) {
            const int r = ranks[alt];
            if (r < 0 || r > max_rank) throw Error("invalid rank vector");
            classes[static_cast<std::size_t>(r)].push_back(static_cast<int>(alt));
        }
        return WeakOrder(std::move(classes));
    }

    int alternative_count() const { return static_cast<int>(ranks_.size()); }
    int class_count() const { return static_cast<int>(classes_.size()); }
    const std::vector<std::vector<int>>& classes() const { return classes_; }
    const std::vector<int>& ranks() const { return ranks_; }
    int rank_of(int alt) const { return ranks_[static_cast<std::size_t>(alt)]; }
    const std::vector<int>& top_class() const { return classes_.front(); }

    /// x strictly preferred to y.
    bool prefers(int x, int y) const { return rank_of(x) < rank_of(y); }
    bool indifferent(int x, int y) const { return rank_of(x) == rank_of(y); }

    /// The completely opposed preference: class order reversed.
    WeakOrder reversed() const {
        std::vector<std::vector<int>> rev(classes_.rbegin(), classes_.rend());
        return WeakOrder(std::move(rev));
    }

    friend bool operator==(const WeakOrder& a, const WeakOrder& b) { return a.ranks_ == b.ranks_; }
    friend bool operator!=(const WeakOrder& a, const WeakOrder& b) { return !(a == b); }
    friend bool operator<(const WeakOrder& a, const WeakOrder& b) { return a.ranks_ < b.ranks_; }

  private:
    std::vector<std::vector<int>> classes_;
    std::vector<int> ranks_;
};

}  // namespace maxlot
