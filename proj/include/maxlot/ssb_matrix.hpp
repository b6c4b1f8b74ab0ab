#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <maxlot/errors.hpp>
#include <maxlot/lottery.hpp>
#include <maxlot/rational.hpp>
#include <maxlot/weak_order.hpp>

namespace maxlot {

/// A skew-symmetric rational matrix over the alternative set. Entry (x, y) is
/// the SSB utility of degenerate lottery x against degenerate lottery y;
/// bilinearity extends it to all lottery pairs (see ssb_value).
class SSBMatrix {
  public:
    /// Entries in row-major order; throws NotSkewSymmetricError unless
    /// entries[x][y] == -entries[y][x] for all x, y.
    SSBMatrix(int size, std::vector<Rational> entries)
        : size_(size), entries_(std::move(entries)) {
        if (size_ <= 0 || entries_.size() != static_cast<std::size_t>(size_) * static_cast<std::size_t>(size_))
            throw Error("SSB matrix entry count does not match size");
        for (int x = 0; x < size_; ++x)
            for (int y = x; y < size_; ++y)
                if (at(x, y) != -at(y, x))
                    throw NotSkewSymmetricError("entry (" + std::to_string(x) + "," +
                                                std::to_string(y) + ") breaks skew-symmetry");
    }

    static SSBMatrix zero(int size) {
        return SSBMatrix(size, std::vector<Rational>(
                                   static_cast<std::size_t>(size) * static_cast<std::size_t>(size),
                                   Rational(0)));
    }

    int size() const { return size_; }

    const Rational& at(int x, int y) const {
        return entries_[static_cast<std::size_t>(x) * static_cast<std::size_t>(size_) +
                        static_cast<std::size_t>(y)];
    }

    const std::vector<Rational>& entries() const { return entries_; }

    friend bool operator==(const SSBMatrix& a, const SSBMatrix& b) {
        return a.size_ == b.size_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const SSBMatrix& a, const SSBMatrix& b) { return !(a == b); }
    friend bool operator<(const SSBMatrix& a, const SSBMatrix& b) {
        if (a.size_ != b.size_) return a.size_ < b.size_;
        return a.entries_ < b.entries_;
    }

  private:
    int size_;
    std::vector<Rational> entries_;
};

/// Canonical utility representation of a weak order: entry (x, y) is +1 when
/// x is ranked strictly above y, -1 when strictly below, 0 when tied.
inline SSBMatrix canonical_ssb(const WeakOrder& order) {
    const int m = order.alternative_count();
    std::vector<Rational> entries(static_cast<std::size_t>(m) * static_cast<std::size_t>(m),
                                  Rational(0));
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            const int rx = order.rank_of(x), ry = order.rank_of(y);
            if (rx < ry)
                entries[static_cast<std::size_t>(x * m + y)] = 1;
            else if (rx > ry)
                entries[static_cast<std::size_t>(x * m + y)] = -1;
        }
    return SSBMatrix(m, std::move(entries));
}

/// Entrywise negation; the negation of a canonical matrix is the canonical
/// matrix of the reversed weak order.
inline SSBMatrix negate(const SSBMatrix& matrix) {
    std::vector<Rational> entries;
    entries.reserve(matrix.entries().size());
    for (const Rational& e : matrix.entries()) entries.push_back(-e);
    return SSBMatrix(matrix.size(), std::move(entries));
}

inline SSBMatrix add(const SSBMatrix& a, const SSBMatrix& b) {
    if (a.size() != b.size()) throw DimensionMismatchError("adding SSB matrices of unequal size");
    std::vector<Rational> entries;
    entries.reserve(a.entries().size());
    for (std::size_t i = 0; i < a.entries().size(); ++i)
        entries.push_back(a.entries()[i] + b.entries()[i]);
    return SSBMatrix(a.size(), std::move(entries));
}

inline SSBMatrix scale(const SSBMatrix& matrix, const Rational& factor) {
    std::vector<Rational> entries;
    entries.reserve(matrix.entries().size());
    for (const Rational& e : matrix.entries()) entries.push_back(e * factor);
    return SSBMatrix(matrix.size(), std::move(entries));
}

/// The exact bilinear value sum_x sum_y p(x) q(y) phi(x, y).
inline Rational ssb_value(const SSBMatrix& matrix, const Lottery& p, const Lottery& q) {
    const int m = matrix.size();
    if (p.size() != m || q.size() != m)
        throw DimensionMismatchError("lottery dimension does not match SSB matrix");
    Rational total{0};
    for (int x = 0; x < m; ++x) {
        if (p[x] == 0) continue;
        Rational row{0};
        for (int y = 0; y < m; ++y) {
            if (q[y] == 0) continue;
            row += q[y] * matrix.at(x, y);
        }
        total += p[x] * row;
    }
    return total;
}

/// Recovers the weak order whose canonical representation is `matrix`, or
/// nullopt when the sign pattern is not that of a weak order.
inline std::optional<WeakOrder> weak_order_from_canonical(const SSBMatrix& matrix) {
    const int m = matrix.size();
    for (const Rational& e : matrix.entries())
        if (e != 0 && e != 1 && e != -1) return std::nullopt;
    // Each alternative's rank is the number of alternatives strictly above it;
    // the pattern is a weak order iff this assignment reproduces the signs.
    std::vector<int> above(static_cast<std::size_t>(m), 0);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            if (matrix.at(y, x) == 1) ++above[static_cast<std::size_t>(x)];
    std::vector<int> distinct = above;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<int> ranks(static_cast<std::size_t>(m));
    for (int x = 0; x < m; ++x) {
        const auto it = std::lower_bound(distinct.begin(), distinct.end(),
                                         above[static_cast<std::size_t>(x)]);
        ranks[static_cast<std::size_t>(x)] = static_cast<int>(it - distinct.begin());
    }
    WeakOrder candidate = WeakOrder::from_ranks(ranks);
    if (canonical_ssb(candidate) != matrix) return std::nullopt;
    return candidate;
}

}  // namespace maxlot
