// Wasserstein distances between derived barcodes by optimal matching.
//
// Finite p: exact Hungarian assignment on the standard (|A|+|B|) augmented
// matrix of p-th-power costs; the reported value is the p-th power of the
// distance (kept rational), with decimal roots rendered only at the
// presentation layer.  p = infinity: bottleneck matching by binary search
// over the candidate costs with a matching feasibility check that admits
// deletions at or below the threshold.
#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "triwass/metrics.hpp"

namespace triwass {

struct PExp {
    bool infinite = false;
    unsigned value = 1;

    static PExp finite(unsigned p) {
        if (p < 1) throw input_error("p must be >= 1");
        return {false, p};
    }
    static PExp inf() { return {true, 1}; }

    std::string str() const { return infinite ? "inf" : std::to_string(value); }
};

inline PExp parse_p(const std::string& s) {
    if (s == "inf") return PExp::inf();
    try {
        long v = std::stol(s);
        if (v < 1) throw input_error("p must be >= 1 or 'inf'");
        return PExp::finite(unsigned(v));
    } catch (const std::logic_error&) {
        throw input_error("invalid exponent '" + s + "'");
    }
}

struct DerivedBar {
    Interval I;
    int degree = 0;

    friend bool operator==(const DerivedBar& x, const DerivedBar& y) {
        return x.I == y.I && x.degree == y.degree;
    }
};

// Total symmetric cost on (bars + {0})^2; nullopt is the zero object.
using PairCost =
    std::function<Rational(const std::optional<DerivedBar>&, const std::optional<DerivedBar>&)>;

// The provable envelope: distance to zero is the weight (stability) and
// distinct bars go through zero.
inline PairCost default_pair_distance(const WeightFamily& fam, QuiverPtr quiver,
                                      std::uint32_t mod = kDefaultPrime) {
    auto bar_weight = [fam, quiver, mod](const DerivedBar& x) {
        return integrated_weight(realize_bar(quiver, x.I, x.degree, mod), fam);
    };
    return [bar_weight](const std::optional<DerivedBar>& x,
                        const std::optional<DerivedBar>& y) -> Rational {
        if (!x && !y) return Rational(0);
        if (!x) return bar_weight(*y);
        if (!y) return bar_weight(*x);
        if (*x == *y) return Rational(0);
        return bar_weight(*x) + bar_weight(*y);
    };
}

struct MatchedPair {
    int a = 0, b = 0;  // indices into the flattened bar lists
    Rational cost;
};

struct MatchingResult {
    PExp p;
    std::vector<DerivedBar> bars_a, bars_b;
    std::vector<MatchedPair> matched;
    std::vector<std::pair<int, Rational>> unmatched_a, unmatched_b;
    // finite p: sum of p-th powers; p = inf: the bottleneck value.
    Rational total;
};

inline std::vector<DerivedBar> flatten_bars(const DerivedBarcode& bc) {
    std::vector<DerivedBar> out;
    for (const auto& [k, mult] : bc)
        for (int i = 0; i < mult; ++i) out.push_back({k.second, k.first});
    return out;
}

namespace matching_detail {

// Exact min-cost perfect assignment (Jonker-Volgenant style potentials).
// Returns row -> column.
inline std::vector<int> hungarian(const std::vector<std::vector<Rational>>& cost) {
    const int n = int(cost.size());
    if (n == 0) return {};
    std::vector<Rational> u(n + 1, Rational(0)), v(n + 1, Rational(0));
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<Rational> minv(n + 1, Rational(0));
        std::vector<bool> has_minv(n + 1, false);  // minv valid flag (stands in for +inf)
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            int i0 = p[j0], j1 = -1;
            Rational delta(0);
            bool has_delta = false;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                Rational cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (!has_minv[j] || cur < minv[j]) {
                    minv[j] = cur;
                    has_minv[j] = true;
                    way[j] = j0;
                }
                if (!has_delta || minv[j] < delta) {
                    delta = minv[j];
                    has_delta = true;
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else if (has_minv[j]) {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }
    std::vector<int> row_to_col(n, -1);
    for (int j = 1; j <= n; ++j)
        if (p[j]) row_to_col[p[j] - 1] = j - 1;
    return row_to_col;
}

struct Instance {
    std::vector<std::vector<Rational>> pair;  // m x n
    std::vector<Rational> del_a, del_b;
    int m() const { return int(del_a.size()); }
    int n() const { return int(del_b.size()); }
};

// Row -> column assignment on the (m+n) augmented matrix of p-th powers.
inline std::vector<int> assignment_solution(const Instance& inst, unsigned p) {
    const int m = inst.m(), n = inst.n(), N = m + n;
    if (N == 0) return {};
    Rational big(1);
    std::vector<std::vector<Rational>> c(N, std::vector<Rational>(N, Rational(0)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            c[i][j] = rat_pow(inst.pair[i][j], p);
            big += c[i][j];
        }
    std::vector<Rational> pa(m), pb(n);
    for (int i = 0; i < m; ++i) {
        pa[i] = rat_pow(inst.del_a[i], p);
        big += pa[i];
    }
    for (int j = 0; j < n; ++j) {
        pb[j] = rat_pow(inst.del_b[j], p);
        big += pb[j];
    }
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k) c[i][n + k] = (k == i ? pa[i] : big);
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) c[m + k][j] = (k == j ? pb[j] : big);
    std::vector<int> sol = hungarian(c);
    for (int i = 0; i < m; ++i)
        if (sol[i] >= n && sol[i] != n + i) throw internal_error("assignment used a big-M cell");
    for (int k = 0; k < n; ++k)
        if (sol[m + k] < n && sol[m + k] != k) throw internal_error("assignment used a big-M cell");
    return sol;
}

inline Rational assignment_value(const Instance& inst, unsigned p) {
    std::vector<int> sol = assignment_solution(inst, p);
    const int m = inst.m(), n = inst.n();
    Rational total(0);
    for (int i = 0; i < m; ++i)
        total += sol[i] < n ? rat_pow(inst.pair[i][sol[i]], p) : rat_pow(inst.del_a[i], p);
    for (int k = 0; k < n; ++k)
        if (sol[m + k] == k) total += rat_pow(inst.del_b[k], p);
    return total;
}

// Matching with deletions covering every bar at cost <= t: left vertices
// are the A-bars plus one dummy per B-bar, right vertices the B-bars plus
// one dummy per A-bar; dummy-dummy edges are free.
inline bool bottleneck_feasible(const Instance& inst, const Rational& t,
                                std::vector<int>* left_match_out = nullptr) {
    const int m = inst.m(), n = inst.n();
    const int L = m + n, R = n + m;
    auto allowed = [&](int l, int r) {
        if (l < m && r < n) return inst.pair[l][r] <= t;
        if (l < m) return r - n == l && inst.del_a[l] <= t;
        if (r < n) return l - m == r && inst.del_b[r] <= t;
        return true;  // dummy-dummy
    };
    std::vector<int> match_r(R, -1), match_l(L, -1);
    std::vector<bool> visited(R);
    std::function<bool(int)> augment = [&](int l) {
        for (int r = 0; r < R; ++r) {
            if (visited[r] || !allowed(l, r)) continue;
            visited[r] = true;
            if (match_r[r] < 0 || augment(match_r[r])) {
                match_r[r] = l;
                match_l[l] = r;
                return true;
            }
        }
        return false;
    };
    for (int l = 0; l < L; ++l) {
        visited.assign(R, false);
        if (!augment(l)) return false;
    }
    if (left_match_out) *left_match_out = match_l;
    return true;
}

inline Rational bottleneck_value(const Instance& inst) {
    std::vector<Rational> cand{Rational(0)};
    for (const auto& row : inst.pair)
        for (const auto& c : row) cand.push_back(c);
    for (const auto& c : inst.del_a) cand.push_back(c);
    for (const auto& c : inst.del_b) cand.push_back(c);
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    int lo = 0, hi = int(cand.size()) - 1;
    while (!bottleneck_feasible(inst, cand[hi]))
        throw internal_error("bottleneck: maximal threshold infeasible");
    while (lo < hi) {
        int mid = (lo + hi) / 2;
        if (bottleneck_feasible(inst, cand[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    return cand[lo];
}

// Optimal value only: p-th-power sum for finite p, bottleneck for inf.
inline Rational instance_value(const Instance& inst, PExp p) {
    return p.infinite ? bottleneck_value(inst) : assignment_value(inst, p.value);
}

inline Instance sub_instance(const Instance& inst, const std::vector<int>& rows,
                             const std::vector<int>& cols) {
    Instance s;
    for (int i : rows) {
        s.del_a.push_back(inst.del_a[i]);
        std::vector<Rational> row;
        for (int j : cols) row.push_back(inst.pair[i][j]);
        s.pair.push_back(std::move(row));
    }
    for (int j : cols) s.del_b.push_back(inst.del_b[j]);
    return s;
}

}  // namespace matching_detail

inline MatchingResult wasserstein(const DerivedBarcode& a, const DerivedBarcode& b, PExp p,
                                  const PairCost& dist) {
    MatchingResult res;
    res.p = p;
    res.bars_a = flatten_bars(a);
    res.bars_b = flatten_bars(b);
    const int m = int(res.bars_a.size()), n = int(res.bars_b.size());

    matching_detail::Instance inst;
    inst.pair.assign(m, std::vector<Rational>(n));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) inst.pair[i][j] = dist(res.bars_a[i], res.bars_b[j]);
    for (int i = 0; i < m; ++i) inst.del_a.push_back(dist(res.bars_a[i], std::nullopt));
    for (int j = 0; j < n; ++j) inst.del_b.push_back(dist(std::nullopt, res.bars_b[j]));
    for (int i = 0; i < m; ++i)
        if (inst.del_a[i] < 0) throw input_error("negative deletion cost");
    for (int j = 0; j < n; ++j)
        if (inst.del_b[j] < 0) throw input_error("negative deletion cost");

    const Rational optimum = matching_detail::instance_value(inst, p);
    res.total = optimum;

    // Canonical optimal matching: walk the A-bars in order and commit, for
    // each, the smallest B-partner (else deletion) that keeps the residual
    // instance optimal.  For p = inf the residual test caps costs at the
    // bottleneck value instead of re-adding committed powers.
    std::vector<int> avail_b;
    for (int j = 0; j < n; ++j) avail_b.push_back(j);
    Rational committed(0);  // finite p: committed p-th powers
    auto residual_ok = [&](const std::vector<int>& rows, const std::vector<int>& cols,
                           const Rational& extra, const Rational& forced_cost) {
        matching_detail::Instance s = matching_detail::sub_instance(inst, rows, cols);
        if (p.infinite)
            return forced_cost <= optimum &&
                   matching_detail::bottleneck_value(s) <= optimum;
        return committed + extra + matching_detail::assignment_value(s, p.value) == optimum;
    };
    std::vector<int> rest_rows;
    for (int i = 0; i < m; ++i) rest_rows.push_back(i);
    for (int i = 0; i < m; ++i) {
        rest_rows.erase(rest_rows.begin());
        bool placed = false;
        for (std::size_t jj = 0; jj < avail_b.size() && !placed; ++jj) {
            int j = avail_b[jj];
            std::vector<int> cols = avail_b;
            cols.erase(cols.begin() + jj);
            Rational c = inst.pair[i][j];
            if (residual_ok(rest_rows, cols, rat_pow(c, p.infinite ? 1 : p.value), c)) {
                res.matched.push_back({i, j, c});
                committed += rat_pow(c, p.infinite ? 1 : p.value);
                avail_b.erase(avail_b.begin() + jj);
                placed = true;
            }
        }
        if (!placed) {
            Rational c = inst.del_a[i];
            if (!residual_ok(rest_rows, avail_b, rat_pow(c, p.infinite ? 1 : p.value), c))
                throw internal_error("matching canonicalization lost the optimum");
            res.unmatched_a.push_back({i, c});
            committed += rat_pow(c, p.infinite ? 1 : p.value);
        }
    }
    for (int j : avail_b) res.unmatched_b.push_back({j, inst.del_b[j]});

    // The parts must recompose to the reported total exactly.
    Rational check(0);
    for (const auto& mp : res.matched)
        check = p.infinite ? std::max(check, mp.cost) : check + rat_pow(mp.cost, p.value);
    for (const auto& [i, c] : res.unmatched_a)
        check = p.infinite ? std::max(check, c) : check + rat_pow(c, p.value);
    for (const auto& [j, c] : res.unmatched_b)
        check = p.infinite ? std::max(check, c) : check + rat_pow(c, p.value);
    if (check != res.total) throw internal_error("matching total does not recompose");
    return res;
}

}  // namespace triwass
