// Acceptance suite: one criterion per function, one PASS/FAIL line each,
// everything compared exactly.  Usage: acceptance [criterion numbers];
// default runs all ten.  Exits nonzero if any selected criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "matching_oracle.hpp"
#include "oracles.hpp"
#include "triwass/exactness.hpp"
#include "triwass/reflect.hpp"

using namespace triwass;

namespace {

constexpr std::uint32_t Q = 32003;

QuiverPtr quiver_of(int n, unsigned mask) {
    std::vector<Arrow> ori;
    for (int e = 0; e + 1 < n; ++e)
        ori.push_back(mask >> e & 1 ? Arrow::Backward : Arrow::Forward);
    return make_quiver(n, std::move(ori));
}

std::vector<QuiverPtr> all_orientations(int n) {
    std::vector<QuiverPtr> out;
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) out.push_back(quiver_of(n, mask));
    return out;
}

std::vector<Reflection> valid_reflections(const AnQuiver& q) {
    std::vector<Reflection> out;
    for (int v = 1; v <= q.n; ++v) {
        if (is_sink(q, v)) out.push_back({v, ReflectionKind::SinkPlus});
        if (is_source(q, v)) out.push_back({v, ReflectionKind::SourceMinus});
    }
    return out;
}

struct Criterion {
    int number;
    std::string name;
    std::function<bool(std::string&)> run;
    double limit_seconds;  // 0 = no stated limit
};

// 1. hdim and abs-chi produce zero violations over 1000 random cone
// triangles each (A_n, n <= 5, dims <= 3, up to 4 terms).
bool criterion1(std::string& detail) {
    int violations = 0;
    for (auto fam : {WeightFamily::hdim(), WeightFamily::abs_chi()}) {
        int done = 0;
        int chunk = 0;
        for (int n : {2, 3, 4, 5}) {
            for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) ++chunk;
        }
        int per = (1000 + chunk - 1) / chunk;
        std::uint64_t seed = fam.kind == FamilyKind::Hdim ? 1001 : 2002;
        for (int n : {2, 3, 4, 5})
            for (unsigned mask = 0; mask < (1u << (n - 1)) && done < 1000; ++mask) {
                int trials = std::min(per, 1000 - done);
                ExactnessReport r = check_exactness(quiver_of(n, mask), fam, trials,
                                                    seed + mask + 31 * n, Q);
                violations += int(r.violations.size());
                done += trials;
            }
        detail += family_name(fam) + ": 1000 trials, ";
    }
    detail += "violations: " + std::to_string(violations);
    return violations == 0;
}

// 2. restricted_path_metric(X, 0) = integrate(hdim(X)) for all 30
// indecomposable derived bars of A_4 over pools with 20 random objects.
bool criterion2(std::string& detail) {
    auto q = make_quiver(4, {Arrow::Forward, Arrow::Backward, Arrow::Forward});
    Rng rng(3003);
    WeightFamily hd = WeightFamily::hdim();
    int checked = 0, wrong = 0;
    for (int a = 1; a <= 4; ++a)
        for (int b = a; b <= 4; ++b)
            for (int deg = -1; deg <= 1; ++deg) {
                RepComplex x = realize_bar(q, Interval(a, b), deg, Q);
                std::vector<RepComplex> pool{x, zero_complex(q, Q)};
                for (int k = 0; k < 20; ++k) pool.push_back(random_complex(q, Q, rng));
                ExtRational d = restricted_path_metric(x, zero_complex(q, Q), hd, pool, 6);
                ++checked;
                if (d != ExtRational(integrated_weight(x, hd))) ++wrong;
            }
    detail = std::to_string(checked) + " bars, mismatches: " + std::to_string(wrong);
    return wrong == 0;
}

// 3. lower <= restricted_path_metric <= upper on 200 random pairs.
bool criterion3(std::string& detail) {
    Rng rng(4004);
    int wrong = 0;
    for (int t = 0; t < 200; ++t) {
        int n = rng.range(2, 5);
        auto q = quiver_of(n, rng.below(1u << (n - 1)));
        WeightFamily fam = t % 2 ? WeightFamily::abs_chi() : WeightFamily::hdim();
        RepComplex a = random_complex(q, Q, rng);
        RepComplex b = random_complex(q, Q, rng);
        std::vector<RepComplex> pool{a, b, zero_complex(q, Q)};
        for (int k = 0; k < 5; ++k) pool.push_back(random_complex(q, Q, rng));
        Bounds bd = bounds(a, b, fam);
        ExtRational d = restricted_path_metric(a, b, fam, pool, 5);
        if (d.is_infinite() || bd.lower > d.finite() || d.finite() > bd.upper) ++wrong;
    }
    detail = "200 pairs, out of bounds: " + std::to_string(wrong);
    return wrong == 0;
}

// 4. assignment/bottleneck solvers equal brute force on 500 random
// instances with <= 6 bars per side, p in {1, 2, inf}.
bool criterion4(std::string& detail) {
    Rng rng(5005);
    int wrong = 0;
    for (int t = 0; t < 500; ++t) {
        int m = rng.range(0, 6), n = rng.range(0, 6);
        oracles::CostTables tables = oracles::random_tables(m, n, rng);
        for (PExp p : {PExp::finite(1), PExp::finite(2), PExp::inf()}) {
            MatchingResult r = wasserstein(oracles::indexed_bars(m), oracles::indexed_bars(n), p,
                                           oracles::table_cost(tables));
            if (r.total != oracles::brute_force_matching(tables, p)) ++wrong;
        }
    }
    detail = "500 instances x 3 exponents, mismatches: " + std::to_string(wrong);
    return wrong == 0;
}

// 5. p-subadditivity and the metric axioms for W_p with the envelope
// oracle over 500 random splits/triples.
bool criterion5(std::string& detail) {
    Rng rng(6006);
    int wrong = 0;
    for (int t = 0; t < 500; ++t) {
        int n = rng.range(2, 4);
        auto q = quiver_of(n, rng.below(1u << (n - 1)));
        PairCost env = default_pair_distance(t % 2 ? WeightFamily::abs_chi()
                                                   : WeightFamily::hdim(),
                                             q, Q);
        DerivedBarcode a1 = random_derived_barcode(q, rng, 3);
        DerivedBarcode a2 = random_derived_barcode(q, rng, 3);
        DerivedBarcode b1 = random_derived_barcode(q, rng, 3);
        DerivedBarcode b2 = random_derived_barcode(q, rng, 3);
        DerivedBarcode a = dbar_union(a1, a2), b = dbar_union(b1, b2);
        DerivedBarcode c = random_derived_barcode(q, rng, 4);
        for (PExp p : {PExp::finite(1), PExp::finite(2), PExp::inf()}) {
            Rational whole = wasserstein(a, b, p, env).total;
            Rational w1 = wasserstein(a1, b1, p, env).total;
            Rational w2 = wasserstein(a2, b2, p, env).total;
            if (p.infinite ? whole > std::max(w1, w2) : whole > w1 + w2) ++wrong;
            if (wasserstein(a, a, p, env).total != 0) ++wrong;
            Rational ab = whole, ba = wasserstein(b, a, p, env).total;
            if (ab != ba) ++wrong;
            Rational ac = wasserstein(a, c, p, env).total;
            Rational cb = wasserstein(c, b, p, env).total;
            if (p.infinite) {
                if (ab > std::max(ac, cb)) ++wrong;
            } else if (p.value == 1) {
                if (ab > ac + cb) ++wrong;
            } else {
                Rational excess = ab - ac - cb;
                if (excess > 0 && excess * excess > ac * cb * 4) ++wrong;
            }
        }
    }
    detail = "500 triples/splits, violations: " + std::to_string(wrong);
    return wrong == 0;
}

// 6. abs_chi equals the Euler-form oracle on 500 random complexes.
bool criterion6(std::string& detail) {
    Rng rng(7007);
    int wrong = 0;
    for (int t = 0; t < 500; ++t) {
        int n = rng.range(2, 5);
        auto q = quiver_of(n, rng.below(1u << (n - 1)));
        RepComplex c = random_complex(q, Q, rng);
        WeightVector v = abs_chi(c);
        std::vector<int> chi(n, 0);
        for (int i = c.lo; i <= c.hi; ++i) {
            Rep h = cohomology(c, i);
            for (int p = 0; p < n; ++p) chi[p] += (i % 2 ? -1 : 1) * h.dims[p];
        }
        for (int p = 0; p < n; ++p) {
            std::vector<int> ep(n, 0);
            ep[p] = 1;
            long long e = euler_form(*q, chi, ep);
            if (v[p] != Rational(e < 0 ? -e : e)) ++wrong;
        }
    }
    detail = "500 complexes, mismatches: " + std::to_string(wrong);
    return wrong == 0;
}

// 7. derived_barcode(cone(f)) = barcode(ker f)[-1 degree] + barcode(coker f)
// for 200 random stalk morphisms.
bool criterion7(std::string& detail) {
    Rng rng(8008);
    int wrong = 0;
    for (int t = 0; t < 200; ++t) {
        int n = rng.range(2, 5);
        auto q = quiver_of(n, rng.below(1u << (n - 1)));
        Rep a = random_rep(q, 3, Q, rng);
        Rep b = random_rep(q, 3, Q, rng);
        RepMorphism f = random_natural_morphism(a, b, rng);
        ChainMorphism cf = make_chain_morphism(stalk(a, 0), stalk(b, 0), 0, {f});
        DerivedBarcode expect;
        for (const auto& [I, m] : decompose(kernel(f).first)) dbar_add(expect, -1, I, m);
        for (const auto& [I, m] : decompose(cokernel(f).first)) dbar_add(expect, 0, I, m);
        if (derived_barcode(cone(cf)) != expect) ++wrong;
    }
    detail = "200 stalk morphisms, mismatches: " + std::to_string(wrong);
    return wrong == 0;
}

// 8. decompose equals rank inclusion-exclusion on 500 equioriented random
// reps (n <= 6) and Krull-Schmidt additivity on 200 random direct sums.
bool criterion8(std::string& detail) {
    Rng rng(9009);
    int wrong = 0;
    for (int t = 0; t < 500; ++t) {
        int n = rng.range(2, 6);
        auto q = make_quiver(n, std::vector<Arrow>(n - 1, Arrow::Forward));
        Rep m = random_rep(q, 4, Q, rng);
        if (decompose(m) != oracles::rank_ie_barcode(m)) ++wrong;
    }
    int ks_wrong = 0;
    for (int t = 0; t < 200; ++t) {
        int n = rng.range(2, 5);
        auto q = quiver_of(n, rng.below(1u << (n - 1)));
        Rep a = random_rep(q, 3, Q, rng);
        Rep b = random_rep(q, 3, Q, rng);
        if (decompose(direct_sum(a, b)) != barcode_union(decompose(a), decompose(b))) ++ks_wrong;
    }
    detail = "rank-IE mismatches: " + std::to_string(wrong) +
             ", Krull-Schmidt mismatches: " + std::to_string(ks_wrong);
    return wrong == 0 && ks_wrong == 0;
}

// 9. isometry_report over all interval stalks, all orientations of A_n
// (n <= 5), every valid reflection, p in {1, 2, inf}: no discrepancies.
bool criterion9(std::string& detail) {
    int reports = 0, bad = 0;
    for (int n = 2; n <= 5; ++n) {
        for (const auto& q : all_orientations(n)) {
            std::vector<RepComplex> objects;
            for (int a = 1; a <= n; ++a)
                for (int b = a; b <= n; ++b)
                    objects.push_back(stalk(interval_rep(q, Interval(a, b), Q), 0));
            for (const Reflection& r : valid_reflections(*q)) {
                for (PExp p : {PExp::finite(1), PExp::finite(2), PExp::inf()}) {
                    IsometryReport rep =
                        isometry_report(objects, WeightFamily::abs_chi(), r, p, Q);
                    ++reports;
                    if (!rep.ok()) ++bad;
                }
            }
        }
    }
    detail = std::to_string(reports) + " reports, with discrepancies: " + std::to_string(bad);
    return reports > 0 && bad == 0;
}

// 10. negative controls: the total-dimension weight violates within 1000
// trials, and the shift-skipping transport produces a discrepancy.
bool criterion10(std::string& detail) {
    auto q = make_quiver(3, {Arrow::Forward, Arrow::Forward});
    ExactnessReport r = check_exactness(q, WeightFamily::total_dim_control(), 1000, 12321, Q);
    bool weight_control = !r.violations.empty();

    DerivedBarcode tb;
    dbar_add(tb, 0, Interval(3, 3));
    dbar_add(tb, 0, Interval(1, 3));
    WeightFamily fam = WeightFamily::hom_into(realize_complex(q, tb, Q));
    std::vector<RepComplex> objects;
    for (int a = 1; a <= 3; ++a)
        for (int b = a; b <= 3; ++b)
            objects.push_back(stalk(interval_rep(q, Interval(a, b), Q), 0));
    Reflection refl{3, ReflectionKind::SinkPlus};
    IsometryReport clean = isometry_report(objects, fam, refl, PExp::finite(1), Q);
    IsometryReport broken =
        isometry_report(objects, fam, refl, PExp::finite(1), Q, /*skip_simple_shift=*/true);
    bool transport_control = clean.ok() && !broken.ok();

    detail = "weight-control violations: " + std::to_string(r.violations.size()) +
             ", wrong-transport discrepancies: " + std::to_string(broken.discrepancies.size());
    return weight_control && transport_control;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<Criterion> criteria{
        {1, "exactness suite (hdim, abs-chi; 1000 cone triangles each)", criterion1, 120.0},
        {2, "stability pinch for every derived bar of A_4", criterion2, 0.0},
        {3, "sandwich bounds on 200 random pairs", criterion3, 0.0},
        {4, "matching solvers equal brute force (500 instances)", criterion4, 60.0},
        {5, "W_p subadditivity and metric axioms (500 cases)", criterion5, 0.0},
        {6, "abs-chi equals the Euler-form oracle (500 complexes)", criterion6, 0.0},
        {7, "cone-of-stalk law (200 morphisms)", criterion7, 0.0},
        {8, "decomposition oracles (rank IE, Krull-Schmidt)", criterion8, 0.0},
        {9, "isometry across every reflection of A_n, n <= 5", criterion9, 300.0},
        {10, "negative controls report failures", criterion10, 0.0},
    };

    std::set<int> selected;
    for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

    bool all_ok = true;
    for (const Criterion& c : criteria) {
        if (!selected.empty() && !selected.count(c.number)) continue;
        std::string detail;
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail += std::string(" exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit_seconds > 0 && secs > c.limit_seconds) {
            ok = false;
            detail += " [over the " + std::to_string(int(c.limit_seconds)) + " s limit]";
        }
        std::printf("criterion %2d: %s  (%.1f s)  %s  [%s]\n", c.number,
                    ok ? "PASS" : "FAIL", secs, c.name.c_str(), detail.c_str());
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
