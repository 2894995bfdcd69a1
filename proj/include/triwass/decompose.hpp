// Interval decomposition of A_n representations by left-to-right basis
// adaptation (sequential zigzag reduction), any orientation, O(n d^3).
//
// State: the restriction to vertices 1..p is maintained as a set of open
// bars, each with a birth vertex and a basis vector of V_p; crossing an
// edge closes some bars, extends the rest, and opens new ones.
//
// A vector of bar x may only be corrected by adding vectors of bar y when
// the prefix modules admit a morphism bar_x -> bar_y that is nonzero at p.
// For interval prefixes that holds exactly when the younger of the two
// bars has a Backward arrow at its left boundary (then younger corrects
// older) or a Forward one (then older corrects younger).  This induces the
// total processing order below: bars opened through a Backward arrow,
// youngest first, then the rest, oldest first.  Reductions always add an
// earlier-processed bar into a later one, so every column operation is a
// legal change of basis and the closed bars form the (unique) barcode.
#pragma once

#include <algorithm>
#include <vector>

#include "triwass/quiver.hpp"

namespace triwass {

namespace decompose_detail {

struct OpenBar {
    int birth;           // 1-based vertex
    bool left_backward;  // arrow type at the left boundary (false for birth 1)
    int order;           // creation index, ties only
    Matrix vec;          // column in V_p for the current vertex p
};

inline bool before(const OpenBar& x, const OpenBar& y) {
    if (x.left_backward != y.left_backward) return x.left_backward;
    if (x.birth != y.birth) return x.left_backward ? x.birth > y.birth : x.birth < y.birth;
    return x.order < y.order;
}

inline int first_nonzero_row(const Matrix& col) {
    for (int r = 0; r < col.rows(); ++r)
        if (col.at(r, 0)) return r;
    return -1;
}

// col -= (col[pivot]/basis[pivot]) * basis, in place.
inline void eliminate(Matrix& col, const Matrix& basis, int pivot) {
    std::uint32_t v = col.at(pivot, 0);
    if (!v) return;
    const std::uint32_t q = col.modulus();
    std::uint32_t f = fp_detail::mul_mod(v, fp_detail::inv_mod(basis.at(pivot, 0), q), q);
    for (int r = 0; r < col.rows(); ++r)
        col.at(r, 0) = fp_detail::sub_mod(col.at(r, 0), fp_detail::mul_mod(f, basis.at(r, 0), q),
                                          q);
}

}  // namespace decompose_detail

inline Barcode decompose(const Rep& m) {
    using namespace decompose_detail;
    const AnQuiver& q = *m.quiver;
    const std::uint32_t mod = m.modulus();

    Barcode out;
    std::vector<OpenBar> open;
    int next_order = 0;

    for (int r = 0; r < m.dims[0]; ++r) {
        Matrix v(m.dims[0], 1, mod);
        v.at(r, 0) = 1;
        open.push_back({1, false, next_order++, std::move(v)});
    }

    for (int e = 0; e + 1 < q.n; ++e) {
        const int left_vertex = e + 1;  // 1-based; crossing into left_vertex + 1
        std::sort(open.begin(), open.end(), before);
        std::vector<OpenBar> still_open;

        if (q.orientation[e] == Arrow::Forward) {
            const Matrix& f = m.maps[e];
            // Bars whose image stays independent survive; the rest are
            // reduced to zero by earlier bars and close here.
            std::vector<std::pair<int, Matrix>> accepted;  // (pivot row, image column)
            for (OpenBar& bar : open) {
                Matrix img = f * bar.vec;
                for (const auto& [pr, col] : accepted) eliminate(img, col, pr);
                int pivot = first_nonzero_row(img);
                if (pivot < 0) {
                    barcode_add(out, Interval(bar.birth, left_vertex));
                } else {
                    accepted.emplace_back(pivot, img);
                    bar.vec = std::move(img);
                    still_open.push_back(std::move(bar));
                }
            }
            std::vector<bool> pivot_row(m.dims[e + 1], false);
            for (const auto& [pr, col] : accepted) pivot_row[pr] = true;
            for (int r = 0; r < m.dims[e + 1]; ++r) {
                if (pivot_row[r]) continue;
                Matrix v(m.dims[e + 1], 1, mod);
                v.at(r, 0) = 1;
                still_open.push_back({left_vertex + 1, false, next_order++, std::move(v)});
            }
        } else {
            const Matrix& g = m.maps[e];  // V_{p+1} -> V_p
            const Matrix pi = g.cokernel_projection();
            // Bars whose vector lands in im(g), after correction by earlier
            // bars, continue; bars independent modulo im(g) close here.
            std::vector<std::pair<int, Matrix>> dying;  // (pivot row in coker, coker column)
            std::vector<Matrix> dying_full;             // matching full columns
            for (OpenBar& bar : open) {
                Matrix y = pi * bar.vec;
                Matrix x = bar.vec;
                for (std::size_t k = 0; k < dying.size(); ++k) {
                    std::uint32_t v = y.at(dying[k].first, 0);
                    if (!v) continue;
                    std::uint32_t fac = fp_detail::mul_mod(
                        v, fp_detail::inv_mod(dying[k].second.at(dying[k].first, 0), mod), mod);
                    for (int r = 0; r < y.rows(); ++r)
                        y.at(r, 0) = fp_detail::sub_mod(
                            y.at(r, 0), fp_detail::mul_mod(fac, dying[k].second.at(r, 0), mod),
                            mod);
                    for (int r = 0; r < x.rows(); ++r)
                        x.at(r, 0) = fp_detail::sub_mod(
                            x.at(r, 0), fp_detail::mul_mod(fac, dying_full[k].at(r, 0), mod),
                            mod);
                }
                int pivot = first_nonzero_row(y);
                if (pivot < 0) {
                    auto lifted = g.solve(x);
                    if (!lifted) throw internal_error("decompose: lift across backward edge");
                    bar.vec = std::move(*lifted);
                    still_open.push_back(std::move(bar));
                } else {
                    dying.emplace_back(pivot, std::move(y));
                    dying_full.push_back(std::move(x));
                    barcode_add(out, Interval(bar.birth, left_vertex));
                }
            }
            Matrix ker = g.kernel_basis();
            for (int c = 0; c < ker.cols(); ++c)
                still_open.push_back(
                    {left_vertex + 1, true, next_order++, ker.col_slice(c, c + 1)});
        }
        open = std::move(still_open);
    }

    for (const OpenBar& bar : open) barcode_add(out, Interval(bar.birth, q.n));
    return out;
}

inline std::vector<int> barcode_dims(const AnQuiver& q, const Barcode& bc) {
    std::vector<int> dims(q.n, 0);
    for (const auto& [I, mult] : bc)
        for (int v = I.a; v <= I.b; ++v) dims[v - 1] += mult;
    return dims;
}

}  // namespace triwass
