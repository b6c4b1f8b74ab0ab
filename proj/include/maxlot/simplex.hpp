#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <maxlot/errors.hpp>
#include <maxlot/rational.hpp>

namespace maxlot::detail {

/// Dense exact-rational simplex for the tiny linear programs this library
/// solves. Maximizes c.x subject to A x = b, x >= 0, using the two-phase
/// method with Bland's smallest-index rule, which cannot cycle. All pivoting
/// is exact; there are no tolerances.
class Simplex {
  public:
    struct Solution {
        Rational objective;
        std::vector<Rational> x;
    };

    /// Returns nullopt when the program is infeasible. The feasible regions
    /// built by this library are subsets of the probability simplex, so an
    /// unbounded objective indicates a caller bug and throws.
    static std::optional<Solution> maximize(std::vector<std::vector<Rational>> rows,
                                            std::vector<Rational> rhs,
                                            const std::vector<Rational>& objective) {
        const std::size_t var_count = objective.size();
        std::size_t row_count = rows.size();
        for (std::size_t r = 0; r < row_count; ++r) {
            if (rows[r].size() != var_count) throw Error("simplex row length mismatch");
            if (rhs[r] < 0) {
                for (Rational& a : rows[r]) a = -a;
                rhs[r] = -rhs[r];
            }
        }

        // Tableau layout: structural variables, one artificial per row, rhs.
        const std::size_t total = var_count + row_count;
        std::vector<std::vector<Rational>> t(row_count,
                                             std::vector<Rational>(total + 1, Rational(0)));
        std::vector<std::size_t> basis(row_count);
        for (std::size_t r = 0; r < row_count; ++r) {
            for (std::size_t j = 0; j < var_count; ++j) t[r][j] = std::move(rows[r][j]);
            t[r][var_count + r] = 1;
            t[r][total] = std::move(rhs[r]);
            basis[r] = var_count + r;
        }

        // Phase 1: maximize minus the sum of artificials.
        std::vector<Rational> cost(total, Rational(0));
        for (std::size_t j = var_count; j < total; ++j) cost[j] = -1;
        std::vector<Rational> z = reduced_costs(t, basis, cost, total);
        run(t, basis, z, total, total);
        if (z[total] != 0) return std::nullopt;

        // Drive leftover artificials out of the basis; rows that cannot be
        // pivoted are redundant and get dropped.
        for (std::size_t r = 0; r < t.size();) {
            if (basis[r] < var_count) {
                ++r;
                continue;
            }
            std::size_t pivot_col = var_count;
            for (std::size_t j = 0; j < var_count; ++j)
                if (t[r][j] != 0) {
                    pivot_col = j;
                    break;
                }
            if (pivot_col == var_count) {
                t.erase(t.begin() + static_cast<std::ptrdiff_t>(r));
                basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(r));
            } else {
                pivot(t, basis, r, pivot_col, total);
                ++r;
            }
        }

        // Phase 2: original objective, artificial columns barred.
        std::vector<Rational> cost2(total, Rational(0));
        for (std::size_t j = 0; j < var_count; ++j) cost2[j] = objective[j];
        z = reduced_costs(t, basis, cost2, total);
        run(t, basis, z, var_count, total);

        Solution solution;
        solution.objective = z[total];
        solution.x.assign(var_count, Rational(0));
        for (std::size_t r = 0; r < t.size(); ++r)
            if (basis[r] < var_count) solution.x[basis[r]] = t[r][total];
        return solution;
    }

  private:
    /// z[j] = c_B B^-1 A_j - c_j for all columns, z[total] = current objective.
    static std::vector<Rational> reduced_costs(const std::vector<std::vector<Rational>>& t,
                                               const std::vector<std::size_t>& basis,
                                               const std::vector<Rational>& cost,
                                               std::size_t total) {
        std::vector<Rational> z(total + 1, Rational(0));
        for (std::size_t j = 0; j < total; ++j) z[j] = -cost[j];
        for (std::size_t r = 0; r < t.size(); ++r) {
            const Rational coef = z[basis[r]];
            if (coef == 0) continue;
            for (std::size_t j = 0; j <= total; ++j)
                if (t[r][j] != 0) z[j] -= coef * t[r][j];
        }
        return z;
    }

    /// Bland's rule main loop; only columns below `allowed` may enter.
    static void run(std::vector<std::vector<Rational>>& t, std::vector<std::size_t>& basis,
                    std::vector<Rational>& z, std::size_t allowed, std::size_t total) {
        for (;;) {
            std::size_t entering = allowed;
            for (std::size_t j = 0; j < allowed; ++j)
                if (z[j] < 0) {
                    entering = j;
                    break;
                }
            if (entering == allowed) return;

            std::size_t leaving = t.size();
            Rational best_ratio{0};
            for (std::size_t r = 0; r < t.size(); ++r) {
                if (t[r][entering] <= 0) continue;
                Rational ratio = t[r][total] / t[r][entering];
                if (leaving == t.size() || ratio < best_ratio ||
                    (ratio == best_ratio && basis[r] < basis[leaving])) {
                    leaving = r;
                    best_ratio = std::move(ratio);
                }
            }
            if (leaving == t.size())
                throw Error("unbounded linear program; feasible set should be a polytope");

            pivot(t, basis, leaving, entering, total);
            const Rational coef = z[entering];
            if (coef != 0)
                for (std::size_t j = 0; j <= total; ++j)
                    if (t[leaving][j] != 0) z[j] -= coef * t[leaving][j];
        }
    }

    static void pivot(std::vector<std::vector<Rational>>& t, std::vector<std::size_t>& basis,
                      std::size_t row, std::size_t col, std::size_t total) {
        const Rational inv = t[row][col];
        for (std::size_t j = 0; j <= total; ++j)
            if (t[row][j] != 0) t[row][j] /= inv;
        for (std::size_t r = 0; r < t.size(); ++r) {
            if (r == row) continue;
            const Rational factor = t[r][col];
            if (factor == 0) continue;
            for (std::size_t j = 0; j <= total; ++j)
                if (t[row][j] != 0) t[r][j] -= factor * t[row][j];
        }
        basis[row] = col;
    }
};

}  // namespace maxlot::detail
