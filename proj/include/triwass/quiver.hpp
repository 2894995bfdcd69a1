// A_n-type quivers with orientation, vertex positions and a vertex measure;
// pointwise finite-dimensional representations and their morphisms.
//
// Vertices are 1..n in the public API (Interval endpoints, simples); the
// backing arrays are 0-based. Edge e joins vertices e+1 and e+2; Forward
// means the arrow e+1 -> e+2, Backward the arrow e+2 -> e+1.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "triwass/matrix.hpp"
#include "triwass/rational.hpp"

namespace triwass {

enum class Arrow { Forward, Backward };

struct AnQuiver {
    int n = 1;
    std::vector<Arrow> orientation;   // n-1 entries
    std::vector<Rational> positions;  // strictly increasing
    std::vector<Rational> measure;    // nonnegative

    friend bool operator==(const AnQuiver& a, const AnQuiver& b) {
        return a.n == b.n && a.orientation == b.orientation && a.positions == b.positions &&
               a.measure == b.measure;
    }
};

using QuiverPtr = std::shared_ptr<const AnQuiver>;

inline QuiverPtr make_quiver(int n, std::vector<Arrow> orientation,
                             std::vector<Rational> positions, std::vector<Rational> measure) {
    if (n < 1) throw input_error("quiver: vertex count must be >= 1");
    if (int(orientation.size()) != n - 1)
        throw input_error("quiver: orientation length must be n-1");
    if (int(positions.size()) != n) throw input_error("quiver: positions length must be n");
    if (int(measure.size()) != n) throw input_error("quiver: measure length must be n");
    for (int i = 0; i + 1 < n; ++i)
        if (!(positions[i] < positions[i + 1]))
            throw input_error("quiver: positions must be strictly increasing");
    for (const auto& m : measure)
        if (m < 0) throw input_error("quiver: measure values must be nonnegative");
    auto q = std::make_shared<AnQuiver>();
    q->n = n;
    q->orientation = std::move(orientation);
    q->positions = std::move(positions);
    q->measure = std::move(measure);
    return q;
}

// Unit positions 0..n-1 and unit measure; enough for anything that only
// consumes the orientation.
inline QuiverPtr make_quiver(int n, std::vector<Arrow> orientation) {
    std::vector<Rational> pos, mu;
    for (int i = 0; i < n; ++i) {
        pos.emplace_back(i);
        mu.emplace_back(1);
    }
    return make_quiver(n, std::move(orientation), std::move(pos), std::move(mu));
}

inline bool same_quiver(const QuiverPtr& a, const QuiverPtr& b) {
    return a == b || (a && b && *a == *b);
}

// Closed vertex interval [a, b], 1-based.
struct Interval {
    int a = 1, b = 1;

    Interval() = default;
    Interval(int a_, int b_) : a(a_), b(b_) {
        if (a > b) throw input_error("interval: a > b");
    }
    bool contains(int v) const { return a <= v && v <= b; }

    friend bool operator==(Interval x, Interval y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(Interval x, Interval y) { return !(x == y); }
    friend bool operator<(Interval x, Interval y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    }
};

// Multiset of intervals with positive multiplicities, in canonical order.
using Barcode = std::map<Interval, int>;

inline void barcode_add(Barcode& bc, Interval I, int mult = 1) {
    if (mult == 0) return;
    int& m = bc[I];
    m += mult;
    if (m == 0) bc.erase(I);
}

inline Barcode barcode_union(const Barcode& x, const Barcode& y) {
    Barcode r = x;
    for (const auto& [I, m] : y) barcode_add(r, I, m);
    return r;
}

struct Rep {
    QuiverPtr quiver;
    std::vector<int> dims;     // per vertex
    std::vector<Matrix> maps;  // per edge, shaped by the arrow direction
    std::uint32_t mod_ = kDefaultPrime;

    std::uint32_t modulus() const { return mod_; }

    bool is_zero() const {
        for (int d : dims)
            if (d) return false;
        return true;
    }

    int total_dim() const {
        int t = 0;
        for (int d : dims) t += d;
        return t;
    }

    friend bool operator==(const Rep& x, const Rep& y) {
        return same_quiver(x.quiver, y.quiver) && x.dims == y.dims && x.maps == y.maps;
    }
};

namespace rep_detail {

// Shape of the edge-e matrix of a representation with vertex dims `dims`.
inline std::pair<int, int> edge_shape(const AnQuiver& q, const std::vector<int>& dims, int e) {
    if (q.orientation[e] == Arrow::Forward) return {dims[e + 1], dims[e]};
    return {dims[e], dims[e + 1]};
}

}  // namespace rep_detail

inline Rep make_rep(QuiverPtr quiver, std::vector<int> dims, std::vector<Matrix> maps,
                    std::uint32_t q = kDefaultPrime) {
    if (int(dims.size()) != quiver->n) throw input_error("rep: dims length mismatch");
    if (int(maps.size()) != quiver->n - 1) throw input_error("rep: maps length mismatch");
    for (int d : dims)
        if (d < 0) throw input_error("rep: negative dimension");
    for (int e = 0; e + 1 < quiver->n; ++e) {
        auto [r, c] = rep_detail::edge_shape(*quiver, dims, e);
        if (maps[e].rows() != r || maps[e].cols() != c)
            throw input_error("rep: edge " + std::to_string(e + 1) + " matrix shape mismatch");
        if (maps[e].modulus() != q) throw input_error("rep: mixed moduli");
    }
    Rep m;
    m.quiver = std::move(quiver);
    m.dims = std::move(dims);
    m.maps = std::move(maps);
    m.mod_ = q;
    return m;
}

inline Rep zero_rep(QuiverPtr quiver, std::uint32_t q = kDefaultPrime) {
    std::vector<int> dims(quiver->n, 0);
    std::vector<Matrix> maps;
    for (int e = 0; e + 1 < quiver->n; ++e) maps.emplace_back(0, 0, q);
    return make_rep(std::move(quiver), std::move(dims), std::move(maps), q);
}

// The interval indecomposable M_I: indicator dims, identity inside I.
inline Rep interval_rep(QuiverPtr quiver, Interval I, std::uint32_t q = kDefaultPrime) {
    if (I.a < 1 || I.b > quiver->n) throw input_error("interval out of quiver range");
    std::vector<int> dims(quiver->n, 0);
    for (int v = I.a; v <= I.b; ++v) dims[v - 1] = 1;
    std::vector<Matrix> maps;
    for (int e = 0; e + 1 < quiver->n; ++e) {
        auto [r, c] = rep_detail::edge_shape(*quiver, dims, e);
        Matrix m(r, c, q);
        if (I.contains(e + 1) && I.contains(e + 2)) m.at(0, 0) = 1;
        maps.push_back(std::move(m));
    }
    return make_rep(std::move(quiver), std::move(dims), std::move(maps), q);
}

inline Rep simple_rep(QuiverPtr quiver, int vertex, std::uint32_t q = kDefaultPrime) {
    return interval_rep(std::move(quiver), Interval(vertex, vertex), q);
}

inline Rep direct_sum(const Rep& x, const Rep& y) {
    if (!same_quiver(x.quiver, y.quiver)) throw input_error("direct_sum: quiver mismatch");
    const std::uint32_t q = x.modulus();
    std::vector<int> dims(x.dims.size());
    for (std::size_t p = 0; p < dims.size(); ++p) dims[p] = x.dims[p] + y.dims[p];
    std::vector<Matrix> maps;
    for (std::size_t e = 0; e < x.maps.size(); ++e) {
        Matrix top = Matrix::hstack(x.maps[e],
                                    Matrix(x.maps[e].rows(), y.maps[e].cols(), q));
        Matrix bot = Matrix::hstack(Matrix(y.maps[e].rows(), x.maps[e].cols(), q), y.maps[e]);
        maps.push_back(Matrix::vstack(top, bot));
    }
    return make_rep(x.quiver, std::move(dims), std::move(maps), q);
}

inline Rep rep_from_barcode(QuiverPtr quiver, const Barcode& bc,
                            std::uint32_t q = kDefaultPrime) {
    Rep acc = zero_rep(quiver, q);
    for (const auto& [I, mult] : bc)
        for (int k = 0; k < mult; ++k) acc = direct_sum(acc, interval_rep(quiver, I, q));
    return acc;
}

struct RepMorphism {
    Rep source, target;
    std::vector<Matrix> components;  // per vertex: target.dims[p] x source.dims[p]
};

inline bool is_natural(const RepMorphism& f) {
    const AnQuiver& q = *f.source.quiver;
    for (int e = 0; e + 1 < q.n; ++e) {
        if (q.orientation[e] == Arrow::Forward) {
            if (f.components[e + 1] * f.source.maps[e] != f.target.maps[e] * f.components[e])
                return false;
        } else {
            if (f.components[e] * f.source.maps[e] != f.target.maps[e] * f.components[e + 1])
                return false;
        }
    }
    return true;
}

inline RepMorphism make_morphism(Rep source, Rep target, std::vector<Matrix> components) {
    if (!same_quiver(source.quiver, target.quiver))
        throw input_error("morphism: quiver mismatch");
    if (int(components.size()) != source.quiver->n)
        throw input_error("morphism: component count mismatch");
    for (int p = 0; p < source.quiver->n; ++p)
        if (components[p].rows() != target.dims[p] || components[p].cols() != source.dims[p])
            throw input_error("morphism: component shape mismatch at vertex " +
                              std::to_string(p + 1));
    RepMorphism f{std::move(source), std::move(target), std::move(components)};
    if (!is_natural(f)) throw input_error("morphism: naturality violated");
    return f;
}

inline RepMorphism zero_morphism(const Rep& source, const Rep& target) {
    std::vector<Matrix> comps;
    for (int p = 0; p < source.quiver->n; ++p)
        comps.emplace_back(target.dims[p], source.dims[p], source.modulus());
    return make_morphism(source, target, std::move(comps));
}

inline RepMorphism identity_morphism(const Rep& m) {
    std::vector<Matrix> comps;
    for (int d : m.dims) comps.push_back(Matrix::identity(d, m.modulus()));
    return make_morphism(m, m, std::move(comps));
}

// Pointwise kernel with induced edge maps; second component is the
// inclusion K -> source.
inline std::pair<Rep, RepMorphism> kernel(const RepMorphism& f) {
    const AnQuiver& q = *f.source.quiver;
    const std::uint32_t mod = f.source.modulus();
    std::vector<Matrix> incl;  // K_p basis columns inside source
    std::vector<int> dims;
    for (int p = 0; p < q.n; ++p) {
        incl.push_back(f.components[p].kernel_basis());
        dims.push_back(incl.back().cols());
    }
    std::vector<Matrix> maps;
    for (int e = 0; e + 1 < q.n; ++e) {
        int s = q.orientation[e] == Arrow::Forward ? e : e + 1;
        int t = e + (e + 1) - s;
        auto lifted = incl[t].solve(f.source.maps[e] * incl[s]);
        if (!lifted) throw internal_error("kernel: induced map does not restrict");
        maps.push_back(std::move(*lifted));
    }
    Rep k = make_rep(f.source.quiver, std::move(dims), std::move(maps), mod);
    RepMorphism inclusion = make_morphism(k, f.source, std::move(incl));
    return {std::move(k), std::move(inclusion)};
}

// Pointwise cokernel with induced edge maps; second component is the
// projection target -> C.
inline std::pair<Rep, RepMorphism> cokernel(const RepMorphism& f) {
    const AnQuiver& q = *f.source.quiver;
    const std::uint32_t mod = f.source.modulus();
    std::vector<Matrix> proj;
    std::vector<int> dims;
    for (int p = 0; p < q.n; ++p) {
        proj.push_back(f.components[p].cokernel_projection());
        dims.push_back(proj.back().rows());
    }
    std::vector<Matrix> maps;
    for (int e = 0; e + 1 < q.n; ++e) {
        int s = q.orientation[e] == Arrow::Forward ? e : e + 1;
        int t = e + (e + 1) - s;
        // B with B * proj_s = proj_t * targetmap; solve the transposed system.
        auto bt = proj[s].transpose().solve((proj[t] * f.target.maps[e]).transpose());
        if (!bt) throw internal_error("cokernel: induced map does not descend");
        maps.push_back(bt->transpose());
    }
    Rep c = make_rep(f.source.quiver, std::move(dims), std::move(maps), mod);
    RepMorphism projection = make_morphism(f.target, c, std::move(proj));
    return {std::move(c), std::move(projection)};
}

namespace rep_detail {

// Naturality system for morphisms source -> target: unknowns are the
// stacked row-major entries of the components, one block per vertex.
inline Matrix hom_system(const Rep& a, const Rep& b) {
    const AnQuiver& q = *a.quiver;
    const std::uint32_t mod = a.modulus();
    std::vector<int> offset(q.n + 1, 0);
    for (int p = 0; p < q.n; ++p) offset[p + 1] = offset[p] + b.dims[p] * a.dims[p];
    const int unknowns = offset[q.n];
    auto idx = [&](int p, int r, int c) { return offset[p] + r * a.dims[p] + c; };

    std::vector<std::vector<std::uint32_t>> rows;
    auto add_edge_rows = [&](int e, int s, int t) {
        const Matrix& A = a.maps[e];
        const Matrix& B = b.maps[e];
        // f_t * A - B * f_s = 0, entrywise (i, j).
        for (int i = 0; i < b.dims[t]; ++i)
            for (int j = 0; j < a.dims[s]; ++j) {
                std::vector<std::uint32_t> row(unknowns, 0);
                for (int k = 0; k < a.dims[t]; ++k)
                    row[idx(t, i, k)] =
                        fp_detail::add_mod(row[idx(t, i, k)], A.at(k, j), mod);
                for (int k = 0; k < b.dims[s]; ++k)
                    row[idx(s, k, j)] = fp_detail::sub_mod(row[idx(s, k, j)], B.at(i, k), mod);
                rows.push_back(std::move(row));
            }
    };
    for (int e = 0; e + 1 < q.n; ++e) {
        if (q.orientation[e] == Arrow::Forward)
            add_edge_rows(e, e, e + 1);
        else
            add_edge_rows(e, e + 1, e);
    }
    Matrix sys(int(rows.size()), unknowns, mod);
    for (int i = 0; i < int(rows.size()); ++i)
        for (int j = 0; j < unknowns; ++j) sys.at(i, j) = rows[i][j];
    return sys;
}

inline RepMorphism morphism_from_vector(const Rep& a, const Rep& b, const Matrix& v) {
    const AnQuiver& q = *a.quiver;
    std::vector<Matrix> comps;
    int off = 0;
    for (int p = 0; p < q.n; ++p) {
        Matrix m(b.dims[p], a.dims[p], a.modulus());
        for (int r = 0; r < b.dims[p]; ++r)
            for (int c = 0; c < a.dims[p]; ++c) m.at(r, c) = v.at(off + r * a.dims[p] + c, 0);
        off += b.dims[p] * a.dims[p];
        comps.push_back(std::move(m));
    }
    return make_morphism(a, b, std::move(comps));
}

}  // namespace rep_detail

inline int hom_dim(const Rep& a, const Rep& b) {
    if (!same_quiver(a.quiver, b.quiver)) throw input_error("hom_dim: quiver mismatch");
    Matrix sys = rep_detail::hom_system(a, b);
    return sys.cols() - sys.rank();
}

// <x, y> = sum_p x_p y_p - sum_{arrows s->t} x_s y_t.
inline long long euler_form(const AnQuiver& q, const std::vector<int>& x,
                            const std::vector<int>& y) {
    if (int(x.size()) != q.n || int(y.size()) != q.n)
        throw input_error("euler_form: dimension vector length mismatch");
    long long v = 0;
    for (int p = 0; p < q.n; ++p) v += (long long)x[p] * y[p];
    for (int e = 0; e + 1 < q.n; ++e) {
        int s = q.orientation[e] == Arrow::Forward ? e : e + 1;
        int t = e + (e + 1) - s;
        v -= (long long)x[s] * y[t];
    }
    return v;
}

// Hereditary: <dim a, dim b> = hom - ext^1, so ext^1 = hom - <,>.
inline int ext1_dim(const Rep& a, const Rep& b) {
    long long e = hom_dim(a, b) - euler_form(*a.quiver, a.dims, b.dims);
    if (e < 0) throw internal_error("ext1_dim: negative value, Euler form identity broken");
    return int(e);
}

}  // namespace triwass
