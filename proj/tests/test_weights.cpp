#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "triwass/exactness.hpp"
#include "triwass/weights.hpp"

using namespace triwass;

namespace {
constexpr std::uint32_t Q = 32003;

QuiverPtr quiv(std::vector<Arrow> o) {
    const int n = int(o.size()) + 1;
    return make_quiver(n, std::move(o));
}

std::vector<QuiverPtr> all_orientations(int n) {
    std::vector<QuiverPtr> out;
    for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
        std::vector<Arrow> ori;
        for (int e = 0; e < n - 1; ++e)
            ori.push_back(mask >> e & 1 ? Arrow::Backward : Arrow::Forward);
        out.push_back(make_quiver(n, ori));
    }
    return out;
}

// alternating sum of cohomology dimension vectors
std::vector<long long> chi_vector(const RepComplex& c) {
    std::vector<long long> chi(c.quiver->n, 0);
    for (int i = c.lo; i <= c.hi; ++i) {
        Rep h = cohomology(c, i);
        for (int p = 0; p < c.quiver->n; ++p) chi[p] += (i % 2 ? -1 : 1) * h.dims[p];
    }
    return chi;
}
}  // namespace

TEST_CASE("euler weight pinned cases") {
    auto q = quiv({Arrow::Forward, Arrow::Backward});
    WeightFamily hd = WeightFamily::hdim();

    CHECK(integrated_weight(zero_complex(q, Q), hd) == 0);
    CHECK(integrated_weight(zero_complex(q, Q), WeightFamily::abs_chi()) == 0);

    Rep m = interval_rep(q, Interval(1, 2), Q);
    CHECK(weight_vector(stalk(m, 0), hd) == WeightVector{1, 1, 0});

    // two-term complex with H^0 of dim 2 and H^1 of dim 1 at the only vertex
    auto a1 = make_quiver(1, {});
    Rep k2 = make_rep(a1, {2}, {}, Q);
    Rep k1 = make_rep(a1, {1}, {}, Q);
    RepComplex c = make_complex(a1, 0, {k2, k1}, {zero_morphism(k2, k1)}, Q);
    CHECK(cohomology(c, 0).dims[0] == 2);
    CHECK(cohomology(c, 1).dims[0] == 1);
    CHECK(euler_weight(c, hd, 1) == 1);
    CHECK_THROWS_AS(euler_weight(c, hd, 2), input_error);
}

TEST_CASE("hdim pinned cases") {
    auto q = quiv({Arrow::Forward, Arrow::Forward});
    Rng rng(71);
    Rep m = random_rep(q, 3, Q, rng);
    WeightVector v = hdim(stalk(m, 0));
    for (int p = 0; p < 3; ++p) CHECK(v[p] == m.dims[p]);

    RepComplex ac = cone(identity_chain_morphism(stalk(m, 0)));
    CHECK(hdim(ac) == WeightVector(3, Rational(0)));

    RepComplex c = random_complex(q, Q, rng);
    CHECK(hdim(shift(c, 1)) == hdim(c));
}

TEST_CASE("abs_chi agrees with the Euler-form oracle") {
    CHECK(euler_weight(stalk(simple_rep(quiv({Arrow::Forward}), 2, Q), 0),
                       WeightFamily::abs_chi(), 2) == 1);
    for (const auto& q : all_orientations(4)) {
        Rng rng(83);
        for (int t = 0; t < 10; ++t) {
            RepComplex c = random_complex(q, Q, rng);
            WeightVector v = abs_chi(c);
            std::vector<long long> chi = chi_vector(c);
            for (int p = 0; p < q->n; ++p) {
                std::vector<int> ep(q->n, 0), ch(q->n);
                ep[p] = 1;
                for (int k = 0; k < q->n; ++k) ch[k] = int(chi[k]);
                long long e = euler_form(*q, ch, ep);
                CHECK(v[p] == Rational(e < 0 ? -e : e));
            }
        }
    }
}

TEST_CASE("integration against the measure") {
    auto q3 = quiv({Arrow::Forward, Arrow::Forward});
    CHECK(integrate(WeightVector(3, Rational(0)), *q3) == 0);
    CHECK(integrate(hdim(stalk(interval_rep(q3, Interval(1, 3), Q), 0)), *q3) == 3);
    CHECK_THROWS_AS(integrate(WeightVector(2, Rational(0)), *q3), input_error);

    // cell-length measure: weight of an interval stalk is its measured size
    auto q = make_quiver(3, {Arrow::Forward, Arrow::Backward},
                         {Rational(0), Rational(1, 2), Rational(2)},
                         {Rational(1, 2), Rational(3, 2), Rational(1)});
    CHECK(integrate(hdim(stalk(interval_rep(q, Interval(1, 2), Q), 0)), *q) == Rational(2));
    CHECK(integrate(hdim(stalk(interval_rep(q, Interval(1, 3), Q), 0)), *q) == Rational(3));
}

TEST_CASE("hom-into families evaluate through derived Hom") {
    auto q = quiv({Arrow::Forward});
    // Hom into the simple stalk S_2 equals the abs-chi value at vertex 2
    RepComplex target = stalk(simple_rep(q, 2, Q), 0);
    WeightFamily f = WeightFamily::hom_into(target);
    Rng rng(89);
    for (int t = 0; t < 10; ++t) {
        RepComplex c = random_complex(q, Q, rng);
        CHECK(euler_weight(c, f, 1) == euler_weight(c, WeightFamily::abs_chi(), 2));
    }
}

TEST_CASE("suspension invariance of every family") {
    auto q = quiv({Arrow::Backward, Arrow::Forward});
    std::vector<WeightFamily> fams{WeightFamily::hdim(), WeightFamily::abs_chi(),
                                   WeightFamily::hom_into(stalk(simple_rep(q, 2, Q), 0))};
    Rng rng(97);
    for (int t = 0; t < 8; ++t) {
        RepComplex c = random_complex(q, Q, rng);
        for (const auto& fam : fams) {
            Rational w = integrated_weight(c, fam);
            for (int l = -2; l <= 2; ++l) CHECK(integrated_weight(shift(c, l), fam) == w);
        }
    }
}

TEST_CASE("exactness harness: hdim and abs-chi have no violations") {
    auto q = quiv({Arrow::Forward, Arrow::Backward});
    ExactnessReport r1 = check_exactness(q, WeightFamily::hdim(), 120, 7, Q);
    CHECK(r1.trials == 120);
    CHECK(r1.ok());
    ExactnessReport r2 = check_exactness(q, WeightFamily::abs_chi(), 60, 11, Q);
    CHECK(r2.ok());
    CHECK_THROWS_AS(check_exactness(q, WeightFamily::hdim(), 0, 1, Q), input_error);
}

TEST_CASE("exactness harness over GF(2)") {
    auto q = quiv({Arrow::Backward, Arrow::Forward});
    CHECK(check_exactness(q, WeightFamily::hdim(), 60, 17, 2).ok());
    CHECK(check_exactness(q, WeightFamily::abs_chi(), 40, 19, 2).ok());
}

TEST_CASE("exactness harness: the total-dimension control weight fails") {
    auto q = quiv({Arrow::Forward, Arrow::Backward});
    ExactnessReport r = check_exactness(q, WeightFamily::total_dim_control(), 200, 13, Q);
    CHECK(!r.ok());
    // the reported violations carry the failed law and the weights
    CHECK(!r.violations.front().inequality.empty());
}

TEST_CASE("cohomology long exact sequence: alternating weight sum vanishes") {
    auto q = quiv({Arrow::Forward, Arrow::Forward});
    Rng rng(101);
    for (int t = 0; t < 12; ++t) {
        RepComplex x = random_complex(q, Q, rng);
        RepComplex y = random_complex(q, Q, rng);
        ChainMorphism f = random_chain_morphism(x, y, rng);
        RepComplex z = cone(f);
        std::vector<long long> cx = chi_vector(x), cy = chi_vector(y), cz = chi_vector(z);
        for (int p = 0; p < q->n; ++p) CHECK(cx[p] - cy[p] + cz[p] == 0);
    }
}
