// Euler-characteristic weights on bounded complexes: the stalkwise
// cohomology family (hdim), the derived-Hom-into-simples family (|chi|),
// Hom into a fixed complex, and measure integration over the vertex set.
//
// TotalDim is a deliberately non-exact control weight (raw term dimension,
// no alternating signs); it exists so the exactness harness has a family
// that must fail.
#pragma once

#include <string>
#include <vector>

#include "triwass/complex.hpp"

namespace triwass {

enum class FamilyKind { Hdim, AbsChi, HomInto, HomIntoPerVertex, TotalDim };

struct WeightFamily {
    FamilyKind kind = FamilyKind::Hdim;
    std::vector<RepComplex> targets;  // HomInto: one; HomIntoPerVertex: one per vertex

    static WeightFamily hdim() { return {FamilyKind::Hdim, {}}; }
    static WeightFamily abs_chi() { return {FamilyKind::AbsChi, {}}; }
    static WeightFamily hom_into(RepComplex target) {
        return {FamilyKind::HomInto, {std::move(target)}};
    }
    static WeightFamily hom_into_per_vertex(std::vector<RepComplex> targets) {
        return {FamilyKind::HomIntoPerVertex, std::move(targets)};
    }
    static WeightFamily total_dim_control() { return {FamilyKind::TotalDim, {}}; }
};

inline std::string family_name(const WeightFamily& f) {
    switch (f.kind) {
        case FamilyKind::Hdim: return "hdim";
        case FamilyKind::AbsChi: return "abs-chi";
        case FamilyKind::HomInto: return "hom-into";
        case FamilyKind::HomIntoPerVertex: return "hom-into-per-vertex";
        case FamilyKind::TotalDim: return "total-dim";
    }
    return "?";
}

using WeightVector = std::vector<Rational>;

// dim Hom_D(A, B) for direct sums of shifted intervals: a pair of bars
// (I, d), (J, e) contributes Hom(M_I, M_J) when e = d and Ext^1(M_I, M_J)
// when e = d - 1; higher Ext vanishes (hereditary).
inline long long derived_hom_dim(const QuiverPtr& quiver, const DerivedBarcode& a,
                                 const DerivedBarcode& b, std::uint32_t mod = kDefaultPrime) {
    long long total = 0;
    for (const auto& [ka, ma] : a)
        for (const auto& [kb, mb] : b) {
            if (kb.first == ka.first)
                total += (long long)ma * mb *
                         hom_dim(interval_rep(quiver, ka.second, mod),
                                 interval_rep(quiver, kb.second, mod));
            else if (kb.first == ka.first - 1)
                total += (long long)ma * mb *
                         ext1_dim(interval_rep(quiver, ka.second, mod),
                                  interval_rep(quiver, kb.second, mod));
        }
    return total;
}

namespace weight_detail {

// |sum_i (-1)^i dim Hom_D(c[-i], target)| given both barcodes.
inline Rational hom_euler_weight(const QuiverPtr& quiver, const DerivedBarcode& src,
                                 const DerivedBarcode& target, std::uint32_t mod) {
    if (src.empty() || target.empty()) return Rational(0);
    int dmin = src.begin()->first.first, dmax = src.rbegin()->first.first;
    int emin = target.begin()->first.first, emax = target.rbegin()->first.first;
    long long acc = 0;
    for (int i = emin - dmax; i <= emax - dmin + 1; ++i) {
        long long f = derived_hom_dim(quiver, dbar_shift_degrees(src, i), target, mod);
        acc += (i % 2 == 0 ? f : -f);
    }
    return Rational(acc < 0 ? -acc : acc);
}

}  // namespace weight_detail

// The family evaluated at every vertex: w_F(c)(p) for p = 1..n, stored
// 0-based.
inline WeightVector weight_vector(const RepComplex& c, const WeightFamily& fam) {
    const AnQuiver& q = *c.quiver;
    WeightVector out(q.n, Rational(0));
    switch (fam.kind) {
        case FamilyKind::Hdim: {
            for (int p = 0; p < q.n; ++p) {
                long long acc = 0;
                for (int i = c.lo; i <= c.hi; ++i) {
                    int h = cohomology(c, i).dims[p];
                    acc += (i % 2 == 0 ? h : -h);
                }
                out[p] = Rational(acc < 0 ? -acc : acc);
            }
            break;
        }
        case FamilyKind::AbsChi: {
            DerivedBarcode src = derived_barcode(c);
            for (int p = 0; p < q.n; ++p) {
                DerivedBarcode simple;
                dbar_add(simple, 0, Interval(p + 1, p + 1));
                out[p] = weight_detail::hom_euler_weight(c.quiver, src, simple, c.mod);
            }
            break;
        }
        case FamilyKind::HomInto: {
            if (fam.targets.size() != 1) throw input_error("hom-into family needs one target");
            if (!same_quiver(fam.targets[0].quiver, c.quiver))
                throw input_error("hom-into target lives over a different quiver");
            DerivedBarcode src = derived_barcode(c);
            DerivedBarcode tgt = derived_barcode(fam.targets[0]);
            Rational w = weight_detail::hom_euler_weight(c.quiver, src, tgt, c.mod);
            for (int p = 0; p < q.n; ++p) out[p] = w;
            break;
        }
        case FamilyKind::HomIntoPerVertex: {
            if (int(fam.targets.size()) != q.n)
                throw input_error("per-vertex family needs one target per vertex");
            for (const RepComplex& t : fam.targets)
                if (!same_quiver(t.quiver, c.quiver))
                    throw input_error("per-vertex target lives over a different quiver");
            DerivedBarcode src = derived_barcode(c);
            for (int p = 0; p < q.n; ++p)
                out[p] = weight_detail::hom_euler_weight(c.quiver, src,
                                                         derived_barcode(fam.targets[p]), c.mod);
            break;
        }
        case FamilyKind::TotalDim: {
            for (int p = 0; p < q.n; ++p) {
                long long acc = 0;
                for (int i = c.lo; i <= c.hi; ++i) acc += c.term(i).dims[p];
                out[p] = Rational(acc);
            }
            break;
        }
    }
    return out;
}

// Single-vertex view of the family (vertex is 1-based).
inline Rational euler_weight(const RepComplex& c, const WeightFamily& fam, int vertex) {
    if (vertex < 1 || vertex > c.quiver->n) throw input_error("euler_weight: vertex out of range");
    return weight_vector(c, fam)[vertex - 1];
}

inline WeightVector hdim(const RepComplex& c) { return weight_vector(c, WeightFamily::hdim()); }

inline WeightVector abs_chi(const RepComplex& c) {
    return weight_vector(c, WeightFamily::abs_chi());
}

// sum_p mu(p) v(p).
inline Rational integrate(const WeightVector& v, const AnQuiver& q) {
    if (int(v.size()) != q.n) throw input_error("integrate: length mismatch");
    Rational acc(0);
    for (int p = 0; p < q.n; ++p) acc += q.measure[p] * v[p];
    return acc;
}

inline Rational integrated_weight(const RepComplex& c, const WeightFamily& fam) {
    return integrate(weight_vector(c, fam), *c.quiver);
}

}  // namespace triwass
