#pragma once

#include <cassert>
#include <optional>
#include <utility>
#include <vector>

#include <maxlot/errors.hpp>
#include <maxlot/lottery.hpp>
#include <maxlot/rational.hpp>
#include <maxlot/simplex.hpp>
#include <maxlot/ssb_matrix.hpp>

namespace maxlot {

/// True iff ssb_value(M, p, e_y) >= 0 for every alternative y. By bilinearity
/// this decides the welfare-maximization condition against all lotteries q.
inline bool is_welfare_maximizing(const SSBMatrix& matrix, const Lottery& p) {
    const int m = matrix.size();
    if (p.size() != m) throw DimensionMismatchError("lottery dimension does not match matrix");
    for (int y = 0; y < m; ++y) {
        Rational column{0};
        for (int x = 0; x < m; ++x)
            if (p[x] != 0) column += p[x] * matrix.at(x, y);
        if (column < 0) return false;
    }
    return true;
}

/// The alternative beating every other one with strictly positive margin, if
/// any. At most one such alternative can exist.
template <class Num>
std::optional<int> condorcet_winner_entries(const std::vector<Num>& entries, int m) {
    for (int x = 0; x < m; ++x) {
        bool all_positive = true;
        for (int y = 0; y < m && all_positive; ++y)
            if (y != x && !(entries[static_cast<std::size_t>(x * m + y)] > 0)) all_positive = false;
        if (all_positive) return x;
    }
    return std::nullopt;
}

inline std::optional<int> condorcet_winner(const SSBMatrix& matrix) {
    return condorcet_winner_entries(matrix.entries(), matrix.size());
}

namespace detail {

/// The welfare-maximizing polytope {p >= 0, sum p = 1, p^T M >= 0} with an
/// optional list of coordinates pinned to previously computed values.
class MaximalPolytope {
  public:
    explicit MaximalPolytope(const SSBMatrix& matrix) : matrix_(matrix) {}

    void fix(int coordinate, Rational value) { fixes_.emplace_back(coordinate, std::move(value)); }

    /// direction > 0 maximizes p[coordinate], direction < 0 minimizes it,
    /// coordinate < 0 asks for any feasible point. Returns the coordinate
    /// value and the point. The polytope of a skew-symmetric matrix is never
    /// empty, so infeasibility is a caller bug.
    std::pair<Rational, Lottery> solve(int coordinate, int direction) const {
        const int m = matrix_.size();
        const std::size_t vars = 2 * static_cast<std::size_t>(m);  // p then surplus
        std::vector<std::vector<Rational>> rows;
        std::vector<Rational> rhs;

        std::vector<Rational> sum_row(vars, Rational(0));
        for (int x = 0; x < m; ++x) sum_row[static_cast<std::size_t>(x)] = 1;
        rows.push_back(std::move(sum_row));
        rhs.emplace_back(1);

        for (int y = 0; y < m; ++y) {
            std::vector<Rational> row(vars, Rational(0));
            for (int x = 0; x < m; ++x) row[static_cast<std::size_t>(x)] = matrix_.at(x, y);
            row[static_cast<std::size_t>(m + y)] = -1;
            rows.push_back(std::move(row));
            rhs.emplace_back(0);
        }

        for (const auto& [coord, value] : fixes_) {
            std::vector<Rational> row(vars, Rational(0));
            row[static_cast<std::size_t>(coord)] = 1;
            rows.push_back(std::move(row));
            rhs.push_back(value);
        }

        std::vector<Rational> objective(vars, Rational(0));
        if (coordinate >= 0) objective[static_cast<std::size_t>(coordinate)] = direction;

        auto solution = Simplex::maximize(std::move(rows), std::move(rhs), objective);
        if (!solution) throw Error("welfare-maximizing polytope unexpectedly empty");
        std::vector<Rational> probs(solution->x.begin(),
                                    solution->x.begin() + static_cast<std::ptrdiff_t>(m));
        Lottery point{std::move(probs)};
        Rational value =
            coordinate >= 0 ? point[coordinate] : Rational(0);
        return {std::move(value), std::move(point)};
    }

  private:
    const SSBMatrix& matrix_;
    std::vector<std::pair<int, Rational>> fixes_;
};

}  // namespace detail

/// Some welfare-maximizing lottery, computed as a basic feasible point of the
/// polytope. Skew-symmetry guarantees one exists (the symmetric zero-sum game
/// has value 0).
inline Lottery maximal_witness(const SSBMatrix& matrix) {
    if (auto winner = condorcet_winner(matrix))
        return Lottery::degenerate_at(matrix.size(), *winner);
    auto [value, point] = detail::MaximalPolytope(matrix).solve(-1, 0);
    assert(is_welfare_maximizing(matrix, point));
    return point;
}

/// The welfare-maximizing lottery that lexicographically maximizes
/// (p(a1), p(a2), ...) in the global alternative order: at most one exact LP
/// per coordinate, each pinning the coordinates already maximized.
inline Lottery lex_maximal(const SSBMatrix& matrix) {
    const int m = matrix.size();
    if (auto winner = condorcet_winner(matrix)) return Lottery::degenerate_at(m, *winner);
    detail::MaximalPolytope polytope(matrix);
    Rational remaining{1};
    std::optional<Lottery> last;
    for (int coord = 0; coord < m; ++coord) {
        auto [value, point] = polytope.solve(coord, +1);
        last = std::move(point);
        remaining -= value;
        if (remaining == 0) break;  // all later coordinates are forced to 0
        polytope.fix(coord, std::move(value));
    }
    assert(is_welfare_maximizing(matrix, *last));
    return *last;
}

/// Exact uniqueness analysis of the welfare-maximizing polytope.
struct MaximalAnalysis {
    Lottery witness;
    Lottery lex_choice;
    bool unique = false;
    /// Exact [min, max] probability each alternative receives over the
    /// polytope.
    std::vector<std::pair<Rational, Rational>> per_alternative_range;
};

/// Decides uniqueness exactly with two LPs per alternative (minimum and
/// maximum probability over the polytope).
inline MaximalAnalysis uniqueness_analysis(const SSBMatrix& matrix) {
    const int m = matrix.size();
    if (auto winner = condorcet_winner(matrix)) {
        Lottery point = Lottery::degenerate_at(m, *winner);
        std::vector<std::pair<Rational, Rational>> ranges;
        ranges.reserve(static_cast<std::size_t>(m));
        for (int x = 0; x < m; ++x) {
            Rational v{x == *winner ? 1 : 0};
            ranges.emplace_back(v, v);
        }
        return MaximalAnalysis{point, point, true, std::move(ranges)};
    }
    detail::MaximalPolytope polytope(matrix);
    Lottery witness = polytope.solve(-1, 0).second;
    assert(is_welfare_maximizing(matrix, witness));
    std::vector<std::pair<Rational, Rational>> ranges;
    ranges.reserve(static_cast<std::size_t>(m));
    bool unique = true;
    for (int x = 0; x < m; ++x) {
        Rational low = polytope.solve(x, -1).first;
        Rational high = polytope.solve(x, +1).first;
        if (low != high) unique = false;
        ranges.emplace_back(std::move(low), std::move(high));
    }
    Lottery lex_choice = unique ? witness : lex_maximal(matrix);
    return MaximalAnalysis{std::move(witness), std::move(lex_choice), unique, std::move(ranges)};
}

/// Checks that a degenerate lottery on x is the unique welfare-maximizing
/// lottery exactly when row x is strictly positive off the diagonal, for
/// every alternative x. The left side is decided purely by per-coordinate
/// maximum LPs (the polytope equals {e_x} iff every other coordinate has
/// maximum 0), so the check never assumes the equivalence it verifies.
inline bool verify_lemma1(const SSBMatrix& matrix) {
    const int m = matrix.size();
    const detail::MaximalPolytope polytope(matrix);
    std::vector<Rational> coordinate_max;
    coordinate_max.reserve(static_cast<std::size_t>(m));
    for (int y = 0; y < m; ++y) coordinate_max.push_back(polytope.solve(y, +1).first);
    for (int x = 0; x < m; ++x) {
        bool unique_at_x = true;
        for (int y = 0; y < m && unique_at_x; ++y)
            if (y != x && coordinate_max[static_cast<std::size_t>(y)] != 0) unique_at_x = false;
        bool row_positive = true;
        for (int y = 0; y < m && row_positive; ++y)
            if (y != x && !(matrix.at(x, y) > 0)) row_positive = false;
        if (unique_at_x != row_positive) return false;
    }
    return true;
}

}  // namespace maxlot
