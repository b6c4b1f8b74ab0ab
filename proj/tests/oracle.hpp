#pragma once

// Brute-force reference analysis of the welfare-maximizing polytope
// {p >= 0, sum p = 1, p^T M >= 0}: enumerate every (m-1)-subset of the
// inequality constraints, solve the tight equality system by Gaussian
// elimination, and keep the feasible solutions as vertices. Deliberately
// independent of the library's simplex path.

#include <algorithm>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include <maxlot/lottery.hpp>
#include <maxlot/rational.hpp>
#include <maxlot/ssb_matrix.hpp>

namespace maxlot::testing {

/// Exact solve of a square system by Gauss-Jordan; nullopt when singular.
inline std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a,
                                                         std::vector<Rational> b) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        const Rational inv = a[col][col];
        for (std::size_t j = 0; j < n; ++j) a[col][j] /= inv;
        b[col] /= inv;
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            const Rational factor = a[row][col];
            for (std::size_t j = 0; j < n; ++j) a[row][j] -= factor * a[col][j];
            b[row] -= factor * b[col];
        }
    }
    return b;
}

struct OracleAnalysis {
    std::vector<std::vector<Rational>> vertices;  // deduplicated, sorted
    std::vector<Rational> lex_max;
    bool unique = false;
    std::vector<std::pair<Rational, Rational>> ranges;
};

inline bool oracle_feasible(const SSBMatrix& matrix, const std::vector<Rational>& p) {
    const int m = matrix.size();
    for (int x = 0; x < m; ++x)
        if (p[static_cast<std::size_t>(x)] < 0) return false;
    for (int y = 0; y < m; ++y) {
        Rational column{0};
        for (int x = 0; x < m; ++x)
            column += p[static_cast<std::size_t>(x)] * matrix.at(x, y);
        if (column < 0) return false;
    }
    return true;
}

inline OracleAnalysis oracle_analyze(const SSBMatrix& matrix) {
    const int m = matrix.size();
    // Constraint i < m: p_i >= 0; constraint m + y: (M^T p)_y >= 0.
    auto constraint_row = [&](int c) {
        std::vector<Rational> row(static_cast<std::size_t>(m), Rational(0));
        if (c < m) {
            row[static_cast<std::size_t>(c)] = 1;
        } else {
            const int y = c - m;
            for (int x = 0; x < m; ++x) row[static_cast<std::size_t>(x)] = matrix.at(x, y);
        }
        return row;
    };

    std::set<std::vector<Rational>> vertex_set;
    std::vector<int> subset(static_cast<std::size_t>(m - 1));
    for (int i = 0; i < m - 1; ++i) subset[static_cast<std::size_t>(i)] = i;
    const int constraints = 2 * m;
    for (;;) {
        std::vector<std::vector<Rational>> rows;
        std::vector<Rational> rhs;
        rows.emplace_back(static_cast<std::size_t>(m), Rational(1));  // sum p = 1
        rhs.emplace_back(1);
        for (int c : subset) {
            rows.push_back(constraint_row(c));
            rhs.emplace_back(0);
        }
        if (auto solution = solve_square(std::move(rows), std::move(rhs)))
            if (oracle_feasible(matrix, *solution)) vertex_set.insert(std::move(*solution));

        // next (m-1)-combination of {0, ..., 2m-1}
        if (m == 1) break;
        int k = m - 2;
        while (k >= 0 && subset[static_cast<std::size_t>(k)] == constraints - (m - 1) + k) --k;
        if (k < 0) break;
        ++subset[static_cast<std::size_t>(k)];
        for (int j = k + 1; j < m - 1; ++j)
            subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
    }

    OracleAnalysis analysis;
    analysis.vertices.assign(vertex_set.begin(), vertex_set.end());
    if (analysis.vertices.empty())
        throw Error("oracle found no vertices; the polytope is never empty");
    analysis.unique = analysis.vertices.size() == 1;
    analysis.lex_max = *std::max_element(analysis.vertices.begin(), analysis.vertices.end());
    for (int x = 0; x < m; ++x) {
        Rational low = analysis.vertices.front()[static_cast<std::size_t>(x)];
        Rational high = low;
        for (const auto& vertex : analysis.vertices) {
            low = std::min(low, vertex[static_cast<std::size_t>(x)]);
            high = std::max(high, vertex[static_cast<std::size_t>(x)]);
        }
        analysis.ranges.emplace_back(std::move(low), std::move(high));
    }
    return analysis;
}

}  // namespace maxlot::testing
