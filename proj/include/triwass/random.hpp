// Random instances for the exactness harness and the property suites.
// Morphisms are drawn uniformly from the exact solution space of the
// relevant naturality system, so sampling never biases toward zero maps
// and never needs rejection.
#pragma once

#include <vector>

#include "triwass/complex.hpp"
#include "triwass/rng.hpp"

namespace triwass {

inline Matrix random_matrix(int rows, int cols, std::uint32_t mod, Rng& rng) {
    Matrix m(rows, cols, mod);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = rng.below(mod);
    return m;
}

inline Rep random_rep(const QuiverPtr& quiver, int max_dim, std::uint32_t mod, Rng& rng) {
    std::vector<int> dims(quiver->n);
    for (int& d : dims) d = rng.range(0, max_dim);
    std::vector<Matrix> maps;
    for (int e = 0; e + 1 < quiver->n; ++e) {
        auto [r, c] = rep_detail::edge_shape(*quiver, dims, e);
        maps.push_back(random_matrix(r, c, mod, rng));
    }
    return make_rep(quiver, std::move(dims), std::move(maps), mod);
}

inline RepMorphism random_natural_morphism(const Rep& a, const Rep& b, Rng& rng) {
    Matrix basis = rep_detail::hom_system(a, b).kernel_basis();
    Matrix coeffs = random_matrix(basis.cols(), 1, a.modulus(), rng);
    return rep_detail::morphism_from_vector(a, b, basis * coeffs);
}

struct RandomComplexParams {
    int max_dim = 3;    // per-vertex term dimension bound
    int max_terms = 4;  // support window length bound
    int lo_min = -2, lo_max = 1;
};

namespace random_detail {

// Natural morphisms g : a -> b with g . pre = 0 (pre : z -> a), as the
// kernel of naturality rows plus composition rows.
inline Matrix constrained_hom_system(const Rep& a, const Rep& b, const RepMorphism* pre) {
    Matrix sys = rep_detail::hom_system(a, b);
    if (!pre) return sys;
    const AnQuiver& q = *a.quiver;
    const std::uint32_t mod = a.modulus();
    std::vector<int> offset(q.n + 1, 0);
    for (int p = 0; p < q.n; ++p) offset[p + 1] = offset[p] + b.dims[p] * a.dims[p];
    std::vector<std::vector<std::uint32_t>> rows;
    for (int p = 0; p < q.n; ++p) {
        const Matrix& D = pre->components[p];  // a.dims[p] x z.dims[p]
        for (int i = 0; i < b.dims[p]; ++i)
            for (int j = 0; j < D.cols(); ++j) {
                std::vector<std::uint32_t> row(offset[q.n], 0);
                for (int k = 0; k < a.dims[p]; ++k)
                    row[offset[p] + i * a.dims[p] + k] = D.at(k, j);
                rows.push_back(std::move(row));
            }
    }
    Matrix full(sys.rows() + int(rows.size()), sys.cols(), mod);
    for (int i = 0; i < sys.rows(); ++i)
        for (int j = 0; j < sys.cols(); ++j) full.at(i, j) = sys.at(i, j);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < sys.cols(); ++j) full.at(sys.rows() + int(i), j) = rows[i][j];
    return full;
}

}  // namespace random_detail

inline RepComplex random_complex(const QuiverPtr& quiver, std::uint32_t mod, Rng& rng,
                                 const RandomComplexParams& params = {}) {
    const int len = rng.range(1, params.max_terms);
    const int lo = rng.range(params.lo_min, params.lo_max);
    std::vector<Rep> terms;
    for (int k = 0; k < len; ++k) terms.push_back(random_rep(quiver, params.max_dim, mod, rng));
    std::vector<RepMorphism> diffs;
    for (int k = 0; k + 1 < len; ++k) {
        const RepMorphism* pre = k == 0 ? nullptr : &diffs.back();
        Matrix basis =
            random_detail::constrained_hom_system(terms[k], terms[k + 1], pre).kernel_basis();
        Matrix coeffs = random_matrix(basis.cols(), 1, mod, rng);
        diffs.push_back(
            rep_detail::morphism_from_vector(terms[k], terms[k + 1], basis * coeffs));
    }
    return make_complex(quiver, lo, std::move(terms), std::move(diffs), mod);
}

namespace random_detail {

// Unknowns per degree and vertex, row-major; constraints are the
// per-degree naturality systems plus the commuting squares with the
// differentials on both sides.
struct ChainHomSystem {
    int ulo, uhi;
    std::vector<std::vector<int>> offset;  // [degree - ulo][vertex] -> start of block
    int unknowns = 0;
    Matrix sys;
};

inline ChainHomSystem chain_hom_system(const RepComplex& x, const RepComplex& y) {
    const AnQuiver& q = *x.quiver;
    const std::uint32_t mod = x.mod;
    ChainHomSystem s;
    s.ulo = std::min(x.lo, y.lo);
    s.uhi = std::max(x.hi, y.hi);
    if (x.is_zero_object() && y.is_zero_object()) {
        s.ulo = 0;
        s.uhi = -1;
    }
    std::vector<Rep> xt, yt;
    for (int i = s.ulo; i <= s.uhi; ++i) {
        xt.push_back(x.term(i));
        yt.push_back(y.term(i));
    }
    s.offset.assign(std::max(0, s.uhi - s.ulo + 1), std::vector<int>(q.n + 1, 0));
    for (int i = s.ulo; i <= s.uhi; ++i) {
        int base = i == s.ulo ? 0 : s.offset[i - s.ulo - 1][q.n];
        s.offset[i - s.ulo][0] = base;
        for (int p = 0; p < q.n; ++p)
            s.offset[i - s.ulo][p + 1] =
                s.offset[i - s.ulo][p] + yt[i - s.ulo].dims[p] * xt[i - s.ulo].dims[p];
    }
    s.unknowns = s.uhi < s.ulo ? 0 : s.offset[s.uhi - s.ulo][q.n];
    auto idx = [&](int deg, int p, int r, int c) {
        return s.offset[deg - s.ulo][p] + r * xt[deg - s.ulo].dims[p] + c;
    };

    std::vector<std::vector<std::uint32_t>> rows;
    // per-degree edge naturality: f_t A - B f_s = 0
    for (int i = s.ulo; i <= s.uhi; ++i) {
        const Rep& xa = xt[i - s.ulo];
        const Rep& yb = yt[i - s.ulo];
        for (int e = 0; e + 1 < q.n; ++e) {
            int sv = q.orientation[e] == Arrow::Forward ? e : e + 1;
            int tv = e + (e + 1) - sv;
            for (int r = 0; r < yb.dims[tv]; ++r)
                for (int c = 0; c < xa.dims[sv]; ++c) {
                    std::vector<std::uint32_t> row(s.unknowns, 0);
                    for (int k = 0; k < xa.dims[tv]; ++k)
                        row[idx(i, tv, r, k)] = fp_detail::add_mod(
                            row[idx(i, tv, r, k)], xa.maps[e].at(k, c), mod);
                    for (int k = 0; k < yb.dims[sv]; ++k)
                        row[idx(i, sv, k, c)] = fp_detail::sub_mod(
                            row[idx(i, sv, k, c)], yb.maps[e].at(r, k), mod);
                    rows.push_back(std::move(row));
                }
        }
    }
    // commuting squares: f^{i+1} dX^i - dY^i f^i = 0
    for (int i = s.ulo; i < s.uhi; ++i) {
        RepMorphism dx = x.diff(i), dy = y.diff(i);
        for (int p = 0; p < q.n; ++p) {
            int rows_out = yt[i + 1 - s.ulo].dims[p];
            int cols_out = xt[i - s.ulo].dims[p];
            for (int r = 0; r < rows_out; ++r)
                for (int c = 0; c < cols_out; ++c) {
                    std::vector<std::uint32_t> row(s.unknowns, 0);
                    for (int k = 0; k < xt[i + 1 - s.ulo].dims[p]; ++k)
                        row[idx(i + 1, p, r, k)] = fp_detail::add_mod(
                            row[idx(i + 1, p, r, k)], dx.components[p].at(k, c), mod);
                    for (int k = 0; k < yt[i - s.ulo].dims[p]; ++k)
                        row[idx(i, p, k, c)] = fp_detail::sub_mod(
                            row[idx(i, p, k, c)], dy.components[p].at(r, k), mod);
                    rows.push_back(std::move(row));
                }
        }
    }
    s.sys = Matrix(int(rows.size()), s.unknowns, mod);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < s.unknowns; ++j) s.sys.at(int(i), j) = rows[i][j];
    return s;
}

inline ChainMorphism chain_morphism_from_vector(const RepComplex& x, const RepComplex& y,
                                                const ChainHomSystem& s, const Matrix& v) {
    const AnQuiver& q = *x.quiver;
    std::vector<RepMorphism> comps;
    for (int i = s.ulo; i <= s.uhi; ++i) {
        Rep xa = x.term(i), yb = y.term(i);
        std::vector<Matrix> mats;
        for (int p = 0; p < q.n; ++p) {
            Matrix m(yb.dims[p], xa.dims[p], x.mod);
            for (int r = 0; r < m.rows(); ++r)
                for (int c = 0; c < m.cols(); ++c)
                    m.at(r, c) = v.at(s.offset[i - s.ulo][p] + r * xa.dims[p] + c, 0);
            mats.push_back(std::move(m));
        }
        comps.push_back(make_morphism(std::move(xa), std::move(yb), std::move(mats)));
    }
    if (comps.empty()) return zero_chain_morphism(x, y);
    return make_chain_morphism(x, y, s.ulo, std::move(comps));
}

}  // namespace random_detail

inline ChainMorphism random_chain_morphism(const RepComplex& x, const RepComplex& y, Rng& rng) {
    auto s = random_detail::chain_hom_system(x, y);
    Matrix basis = s.sys.kernel_basis();
    Matrix coeffs = random_matrix(basis.cols(), 1, x.mod, rng);
    Matrix v = basis * coeffs;
    if (v.rows() == 0) return zero_chain_morphism(x, y);
    return random_detail::chain_morphism_from_vector(x, y, s, v);
}

inline DerivedBarcode random_derived_barcode(const QuiverPtr& quiver, Rng& rng, int max_bars,
                                             int deg_lo = -1, int deg_hi = 1, int max_mult = 2) {
    DerivedBarcode bc;
    int bars = rng.range(0, max_bars);
    for (int k = 0; k < bars; ++k) {
        int a = rng.range(1, quiver->n);
        int b = rng.range(a, quiver->n);
        dbar_add(bc, rng.range(deg_lo, deg_hi), Interval(a, b), rng.range(1, max_mult));
    }
    return bc;
}

}  // namespace triwass
