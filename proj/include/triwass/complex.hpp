// Bounded complexes of representations: shift, mapping cone, cohomology,
// quasi-isomorphisms, and derived barcodes via the hereditary decomposition.
//
// Cohomological indexing, increasing differentials, suspension = [1] with
// (X[l])^i = X^{i+l} and differentials scaled by (-1)^l.
#pragma once

#include <utility>
#include <vector>

#include "triwass/decompose.hpp"
#include "triwass/quiver.hpp"

namespace triwass {

struct RepComplex {
    QuiverPtr quiver;
    std::uint32_t mod = kDefaultPrime;
    int lo = 0, hi = -1;             // inclusive window; lo > hi is the zero complex
    std::vector<Rep> terms;          // hi - lo + 1
    std::vector<RepMorphism> diffs;  // d^i : terms[i] -> terms[i+1]

    bool is_zero_object() const { return lo > hi; }

    Rep term(int i) const {
        if (i < lo || i > hi) return zero_rep(quiver, mod);
        return terms[i - lo];
    }

    RepMorphism diff(int i) const {
        if (i < lo || i >= hi) return zero_morphism(term(i), term(i + 1));
        return diffs[i - lo];
    }

    friend bool operator==(const RepComplex& x, const RepComplex& y) {
        if (!same_quiver(x.quiver, y.quiver) || x.lo != y.lo || x.hi != y.hi) return false;
        for (int i = x.lo; i <= x.hi; ++i) {
            if (!(x.terms[i - x.lo] == y.terms[i - y.lo])) return false;
            if (i < x.hi && x.diffs[i - x.lo].components != y.diffs[i - y.lo].components)
                return false;
        }
        return true;
    }
    friend bool operator!=(const RepComplex& x, const RepComplex& y) { return !(x == y); }
};

inline RepComplex zero_complex(QuiverPtr quiver, std::uint32_t mod = kDefaultPrime) {
    RepComplex c;
    c.quiver = std::move(quiver);
    c.mod = mod;
    return c;
}

// Validates shapes, naturality of every differential, and d.d = 0; trims
// zero boundary terms so equal objects compare equal.
inline RepComplex make_complex(QuiverPtr quiver, int lo, std::vector<Rep> terms,
                               std::vector<RepMorphism> diffs, std::uint32_t mod = kDefaultPrime) {
    if (diffs.size() + 1 != terms.size() && !(terms.empty() && diffs.empty()))
        throw input_error("complex: need one differential between consecutive terms");
    for (const Rep& t : terms)
        if (!same_quiver(t.quiver, quiver)) throw input_error("complex: term quiver mismatch");
    for (std::size_t k = 0; k < diffs.size(); ++k) {
        if (!(diffs[k].source == terms[k]) || !(diffs[k].target == terms[k + 1]))
            throw input_error("complex: differential endpoints mismatch at degree " +
                              std::to_string(lo + int(k)));
        if (!is_natural(diffs[k]))
            throw input_error("complex: differential not natural at degree " +
                              std::to_string(lo + int(k)));
    }
    for (std::size_t k = 0; k + 1 < diffs.size(); ++k)
        for (int p = 0; p < quiver->n; ++p)
            if (!(diffs[k + 1].components[p] * diffs[k].components[p]).is_zero())
                throw input_error("complex: d.d != 0 at degree " + std::to_string(lo + int(k)) +
                                  ", vertex " + std::to_string(p + 1));

    std::size_t first = 0, last = terms.size();
    while (first < last && terms[first].is_zero()) ++first;
    while (last > first && terms[last - 1].is_zero()) --last;
    if (first == last) return zero_complex(std::move(quiver), mod);

    RepComplex c;
    c.quiver = std::move(quiver);
    c.mod = mod;
    c.lo = lo + int(first);
    c.hi = lo + int(last) - 1;
    c.terms.assign(terms.begin() + first, terms.begin() + last);
    if (last - first > 1) c.diffs.assign(diffs.begin() + first, diffs.begin() + (last - 1));
    return c;
}

inline RepComplex stalk(const Rep& m, int degree) {
    return make_complex(m.quiver, degree, {m}, {}, m.modulus());
}

inline RepComplex shift(const RepComplex& c, int l) {
    if (c.is_zero_object()) return c;
    std::vector<Rep> terms;
    std::vector<RepMorphism> diffs;
    for (int i = c.lo - l; i <= c.hi - l; ++i) terms.push_back(c.term(i + l));
    for (int i = c.lo - l; i < c.hi - l; ++i) {
        RepMorphism d = c.diff(i + l);
        if (l % 2 != 0)
            for (Matrix& comp : d.components) comp = -comp;
        diffs.push_back(std::move(d));
    }
    return make_complex(c.quiver, c.lo - l, std::move(terms), std::move(diffs), c.mod);
}

struct ChainMorphism {
    RepComplex source, target;
    int lo = 0, hi = -1;
    std::vector<RepMorphism> comps;  // f^i : source.term(i) -> target.term(i)

    RepMorphism component(int i) const {
        if (i < lo || i > hi) return zero_morphism(source.term(i), target.term(i));
        return comps[i - lo];
    }
};

inline ChainMorphism make_chain_morphism(RepComplex source, RepComplex target,
                                         int lo, std::vector<RepMorphism> comps) {
    if (!same_quiver(source.quiver, target.quiver))
        throw input_error("chain morphism: quiver mismatch");
    ChainMorphism f;
    f.source = std::move(source);
    f.target = std::move(target);
    f.lo = lo;
    f.hi = lo + int(comps.size()) - 1;
    f.comps = std::move(comps);
    for (int i = f.lo; i <= f.hi; ++i) {
        const RepMorphism& fi = f.comps[i - f.lo];
        if (!(fi.source == f.source.term(i)) || !(fi.target == f.target.term(i)))
            throw input_error("chain morphism: component endpoints mismatch at degree " +
                              std::to_string(i));
    }
    const int a = std::min(f.source.lo, f.target.lo) - 1;
    const int b = std::max(f.source.hi, f.target.hi);
    for (int i = a; i <= b; ++i) {
        RepMorphism fi = f.component(i), fnext = f.component(i + 1);
        RepMorphism ds = f.source.diff(i), dt = f.target.diff(i);
        for (int p = 0; p < f.source.quiver->n; ++p)
            if (fnext.components[p] * ds.components[p] != dt.components[p] * fi.components[p])
                throw input_error("chain morphism: square does not commute at degree " +
                                  std::to_string(i) + ", vertex " + std::to_string(p + 1));
    }
    return f;
}

inline ChainMorphism zero_chain_morphism(const RepComplex& source, const RepComplex& target) {
    return make_chain_morphism(source, target, 0, {});
}

inline ChainMorphism identity_chain_morphism(const RepComplex& c) {
    std::vector<RepMorphism> comps;
    for (int i = c.lo; i <= c.hi; ++i) comps.push_back(identity_morphism(c.term(i)));
    if (comps.empty()) return zero_chain_morphism(c, c);
    return make_chain_morphism(c, c, c.lo, std::move(comps));
}

// C_f^i = Y^i + X^{i+1} with differential (d_Y, f^{i+1}; 0, -d_X^{i+1}).
inline RepComplex cone(const ChainMorphism& f) {
    const RepComplex& X = f.source;
    const RepComplex& Y = f.target;
    const QuiverPtr& quiver = X.quiver;
    if (X.is_zero_object() && Y.is_zero_object()) return zero_complex(quiver, X.mod);
    int lo = std::min(Y.is_zero_object() ? X.lo - 1 : Y.lo, X.is_zero_object() ? Y.lo : X.lo - 1);
    int hi = std::max(Y.is_zero_object() ? X.hi - 1 : Y.hi, X.is_zero_object() ? Y.hi : X.hi - 1);
    std::vector<Rep> terms;
    for (int i = lo; i <= hi; ++i) terms.push_back(direct_sum(Y.term(i), X.term(i + 1)));
    std::vector<RepMorphism> diffs;
    for (int i = lo; i < hi; ++i) {
        RepMorphism dy = Y.diff(i), dxn = X.diff(i + 1), fn = f.component(i + 1);
        std::vector<Matrix> comps;
        for (int p = 0; p < quiver->n; ++p)
            comps.push_back(Matrix::block2x2(dy.components[p], fn.components[p],
                                             Matrix(dxn.components[p].rows(),
                                                    dy.components[p].cols(), X.mod),
                                             -dxn.components[p]));
        diffs.push_back(make_morphism(terms[i - lo], terms[i - lo + 1], std::move(comps)));
    }
    return make_complex(quiver, lo, std::move(terms), std::move(diffs), X.mod);
}

namespace coho_detail {

// Concrete model of H^i: per vertex a kernel basis K, the image expressed
// in kernel coordinates G, a projection Pi onto a chosen complement of the
// image, and a section C of Pi.
struct CohomologyData {
    std::vector<Matrix> K, Pi, C;
    Rep h;
};

inline CohomologyData cohomology_data(const RepComplex& c, int i) {
    const AnQuiver& q = *c.quiver;
    CohomologyData d;
    RepMorphism di = c.diff(i), dprev = c.diff(i - 1);
    std::vector<int> hdims(q.n);
    for (int p = 0; p < q.n; ++p) {
        Matrix K = di.components[p].kernel_basis();
        auto G = K.solve(dprev.components[p]);
        if (!G) throw internal_error("cohomology: image not inside kernel");
        Matrix Pi = G->cokernel_projection();
        auto C = Pi.solve(Matrix::identity(Pi.rows(), c.mod));
        if (!C) throw internal_error("cohomology: projection has no section");
        hdims[p] = Pi.rows();
        d.K.push_back(std::move(K));
        d.Pi.push_back(std::move(Pi));
        d.C.push_back(std::move(*C));
    }
    std::vector<Matrix> hmaps;
    const Rep ti = c.term(i);
    for (int e = 0; e + 1 < q.n; ++e) {
        int s = q.orientation[e] == Arrow::Forward ? e : e + 1;
        int t = e + (e + 1) - s;
        auto Y = d.K[t].solve(ti.maps[e] * d.K[s]);
        if (!Y) throw internal_error("cohomology: edge map does not preserve kernels");
        hmaps.push_back(d.Pi[t] * *Y * d.C[s]);
    }
    d.h = make_rep(c.quiver, std::move(hdims), std::move(hmaps), c.mod);
    return d;
}

}  // namespace coho_detail

inline Rep cohomology(const RepComplex& c, int i) {
    if (i < c.lo || i > c.hi) return zero_rep(c.quiver, c.mod);
    return coho_detail::cohomology_data(c, i).h;
}

// Induced map H^i(f) in the chosen complement bases.
inline RepMorphism cohomology_map(const ChainMorphism& f, int i) {
    auto src = coho_detail::cohomology_data(f.source, i);
    auto tgt = coho_detail::cohomology_data(f.target, i);
    RepMorphism fi = f.component(i);
    std::vector<Matrix> comps;
    for (int p = 0; p < f.source.quiver->n; ++p) {
        auto Y = tgt.K[p].solve(fi.components[p] * src.K[p]);
        if (!Y) throw internal_error("cohomology_map: kernels not preserved");
        comps.push_back(tgt.Pi[p] * *Y * src.C[p]);
    }
    return make_morphism(src.h, tgt.h, std::move(comps));
}

inline bool is_quasi_iso(const ChainMorphism& f) {
    int a = std::min(f.source.lo, f.target.lo), b = std::max(f.source.hi, f.target.hi);
    for (int i = a; i <= b; ++i) {
        RepMorphism hf = cohomology_map(f, i);
        for (int p = 0; p < f.source.quiver->n; ++p) {
            const Matrix& m = hf.components[p];
            if (m.rows() != m.cols() || m.rank() != m.rows()) return false;
        }
    }
    return true;
}

// Multiset of (degree, interval) -> multiplicity.
using DerivedBarcode = std::map<std::pair<int, Interval>, int>;

inline void dbar_add(DerivedBarcode& bc, int degree, Interval I, int mult = 1) {
    if (mult == 0) return;
    int& m = bc[{degree, I}];
    m += mult;
    if (m == 0) bc.erase({degree, I});
}

inline DerivedBarcode dbar_union(const DerivedBarcode& x, const DerivedBarcode& y) {
    DerivedBarcode r = x;
    for (const auto& [k, m] : y) dbar_add(r, k.first, k.second, m);
    return r;
}

// Degrees + delta: the barcode of c[-delta] when applied to barcode of c.
inline DerivedBarcode dbar_shift_degrees(const DerivedBarcode& bc, int delta) {
    DerivedBarcode r;
    for (const auto& [k, m] : bc) dbar_add(r, k.first + delta, k.second, m);
    return r;
}

inline DerivedBarcode derived_barcode(const RepComplex& c) {
    DerivedBarcode out;
    for (int i = c.lo; i <= c.hi; ++i)
        for (const auto& [I, mult] : decompose(cohomology(c, i))) dbar_add(out, i, I, mult);
    return out;
}

// The complex with zero differentials realizing a derived barcode; per
// hereditarity this is isomorphic in the derived category to any complex
// with that barcode.
inline RepComplex realize_complex(QuiverPtr quiver, const DerivedBarcode& bc,
                                  std::uint32_t mod = kDefaultPrime) {
    if (bc.empty()) return zero_complex(std::move(quiver), mod);
    int lo = bc.begin()->first.first, hi = bc.rbegin()->first.first;
    std::vector<Rep> terms;
    for (int i = lo; i <= hi; ++i) {
        Barcode slice;
        for (const auto& [k, m] : bc)
            if (k.first == i) barcode_add(slice, k.second, m);
        terms.push_back(rep_from_barcode(quiver, slice, mod));
    }
    std::vector<RepMorphism> diffs;
    for (int i = lo; i < hi; ++i) diffs.push_back(zero_morphism(terms[i - lo], terms[i - lo + 1]));
    return make_complex(std::move(quiver), lo, std::move(terms), std::move(diffs), mod);
}

inline RepComplex realize_bar(QuiverPtr quiver, Interval I, int degree,
                              std::uint32_t mod = kDefaultPrime) {
    DerivedBarcode bc;
    dbar_add(bc, degree, I);
    return realize_complex(std::move(quiver), bc, mod);
}

}  // namespace triwass
