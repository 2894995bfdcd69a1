// Exhaustive matching enumeration, the oracle for the assignment and
// bottleneck solvers.
#pragma once

#include <functional>
#include <vector>

#include "triwass/matching.hpp"
#include "triwass/rng.hpp"

namespace triwass::oracles {

struct CostTables {
    std::vector<std::vector<Rational>> pair;
    std::vector<Rational> del_a, del_b;
};

// minimum over all partial injections A -> B, aggregated by p
inline Rational brute_force_matching(const CostTables& t, PExp p) {
    const int m = int(t.del_a.size()), n = int(t.del_b.size());
    std::vector<bool> used(n, false);
    Rational best(0);
    bool first = true;
    auto agg = [&](const Rational& acc, const Rational& c) {
        return p.infinite ? std::max(acc, c) : acc + rat_pow(c, p.value);
    };
    std::function<void(int, Rational)> rec = [&](int i, Rational acc) {
        if (i == m) {
            Rational total = acc;
            for (int j = 0; j < n; ++j)
                if (!used[j]) total = agg(total, t.del_b[j]);
            if (first || total < best) {
                best = total;
                first = false;
            }
            return;
        }
        rec(i + 1, agg(acc, t.del_a[i]));
        for (int j = 0; j < n; ++j) {
            if (used[j]) continue;
            used[j] = true;
            rec(i + 1, agg(acc, t.pair[i][j]));
            used[j] = false;
        }
    };
    rec(0, Rational(0));
    return best;
}

// positional oracle: bars are tagged by index through distinct degrees
inline PairCost table_cost(const CostTables& t) {
    return [t](const std::optional<DerivedBar>& x,
               const std::optional<DerivedBar>& y) -> Rational {
        if (!x && !y) return Rational(0);
        if (!x) return t.del_b[y->degree];
        if (!y) return t.del_a[x->degree];
        return t.pair[x->degree][y->degree];
    };
}

inline DerivedBarcode indexed_bars(int count) {
    DerivedBarcode bc;
    for (int i = 0; i < count; ++i) dbar_add(bc, i, Interval(1, 1));
    return bc;
}

inline CostTables random_tables(int m, int n, Rng& rng) {
    CostTables t;
    auto r = [&] { return Rational(rng.range(0, 12), rng.range(1, 6)); };
    t.pair.assign(m, std::vector<Rational>(n));
    for (auto& row : t.pair)
        for (auto& c : row) c = r();
    for (int i = 0; i < m; ++i) t.del_a.push_back(r());
    for (int j = 0; j < n; ++j) t.del_b.push_back(r());
    return t;
}

}  // namespace triwass::oracles
