// Randomized exactness harness: builds cone triangles X -> Y -> C_f and
// checks the three subadditivity inequalities and suspension invariance of
// an integrated weight family, reporting violations verbatim.
#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "triwass/random.hpp"
#include "triwass/weights.hpp"

namespace triwass {

struct ExactnessViolation {
    int trial = 0;
    std::uint64_t seed = 0;      // per-trial seed, replays the instance
    std::string inequality;      // which law failed
    std::string triangle_dims;   // term dims of X, Y, Z
    Rational wx, wy, wz;
};

struct ExactnessReport {
    int trials = 0;
    std::vector<ExactnessViolation> violations;
    bool ok() const { return violations.empty(); }
};

namespace exactness_detail {

inline std::string complex_dims(const RepComplex& c) {
    std::ostringstream os;
    os << "[";
    for (int i = c.lo; i <= c.hi; ++i) {
        if (i > c.lo) os << " ";
        os << i << ":(";
        const Rep t = c.term(i);
        for (int p = 0; p < c.quiver->n; ++p) os << (p ? "," : "") << t.dims[p];
        os << ")";
    }
    os << "]";
    return os.str();
}

}  // namespace exactness_detail

inline ExactnessReport check_exactness(const QuiverPtr& quiver, const WeightFamily& fam,
                                       int trials, std::uint64_t seed,
                                       std::uint32_t mod = kDefaultPrime,
                                       const RandomComplexParams& params = {}) {
    if (trials < 1) throw input_error("check_exactness: trials must be >= 1");
    ExactnessReport report;
    report.trials = trials;
    Rng master(seed);
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t trial_seed = master.fork_seed();
        Rng rng(trial_seed);
        RepComplex x = random_complex(quiver, mod, rng, params);
        RepComplex y = random_complex(quiver, mod, rng, params);
        ChainMorphism f = random_chain_morphism(x, y, rng);
        RepComplex z = cone(f);
        Rational wx = integrated_weight(x, fam);
        Rational wy = integrated_weight(y, fam);
        Rational wz = integrated_weight(z, fam);
        std::string dims = "X" + exactness_detail::complex_dims(x) + " Y" +
                           exactness_detail::complex_dims(y) + " Z" +
                           exactness_detail::complex_dims(z);
        auto violate = [&](const std::string& law) {
            report.violations.push_back({t, trial_seed, law, dims, wx, wy, wz});
        };
        if (wx > wy + wz) violate("w(X) <= w(Y) + w(Z)");
        if (wy > wx + wz) violate("w(Y) <= w(X) + w(Z)");
        if (wz > wx + wy) violate("w(Z) <= w(X) + w(Y)");
        if (integrated_weight(shift(x, 1), fam) != wx) violate("w(X[1]) == w(X)");
        if (integrated_weight(shift(y, 1), fam) != wy) violate("w(Y[1]) == w(Y)");
        if (integrated_weight(shift(z, 1), fam) != wz) violate("w(Z[1]) == w(Z)");
        // weights live on isomorphism classes: evaluating on the derived
        // normal form (same object in D^b) must give the same value
        auto normal = [&](const RepComplex& c) {
            return realize_complex(quiver, derived_barcode(c), mod);
        };
        if (integrated_weight(normal(x), fam) != wx) violate("w(X) == w(X') for X' iso X");
        if (integrated_weight(normal(y), fam) != wy) violate("w(Y) == w(Y') for Y' iso Y");
        if (integrated_weight(normal(z), fam) != wz) violate("w(Z) == w(Z') for Z' iso Z");
    }
    return report;
}

}  // namespace triwass
