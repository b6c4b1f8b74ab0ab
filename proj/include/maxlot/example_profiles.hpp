#pragma once

#include <maxlot/profile.hpp>

namespace maxlot {

/// Three voters whose strict orders form a majority cycle over {a, b, c}.
inline Profile cyclic_profile() {
    const Alternatives alts = Alternatives::default_labels(3);
    return Profile(alts, {
                             {WeakOrder({{0}, {1}, {2}}), 1},  // a > b > c
                             {WeakOrder({{1}, {2}, {0}}), 1},  // b > c > a
                             {WeakOrder({{2}, {0}, {1}}), 1},  // c > a > b
                         });
}

/// Two voters a > b > c against one voter b > c > a; a beats both rivals.
inline Profile majority_winner_profile() {
    const Alternatives alts = Alternatives::default_labels(3);
    return Profile(alts, {
                             {WeakOrder({{0}, {1}, {2}}), 2},
                             {WeakOrder({{1}, {2}, {0}}), 1},
                         });
}

/// Three voters over {a, b, c, d}: a, b, c form a majority cycle and every
/// voter ranks d last, so d is Pareto-dominated and no Condorcet winner
/// exists.
inline Profile dominated_alternative_profile() {
    const Alternatives alts = Alternatives::default_labels(4);
    return Profile(alts, {
                             {WeakOrder({{0}, {1}, {2}, {3}}), 1},  // a > b > c > d
                             {WeakOrder({{1}, {2}, {0}, {3}}), 1},  // b > c > a > d
                             {WeakOrder({{2}, {0}, {1}, {3}}), 1},  // c > a > b > d
                         });
}

}  // namespace maxlot
