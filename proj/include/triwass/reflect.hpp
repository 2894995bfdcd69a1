// Sink/source reflection functors on A_n as concrete derived equivalences:
// quiver reflection, module reflection by kernels/cokernels at the vertex,
// the induced map on derived barcodes, weight-family transport, and the
// isometry report comparing weights, bounds and Wasserstein values across
// the equivalence.
//
// On derived barcodes the reflected simple at the vertex moves one degree
// up (R+) or down (R-); the direction is pinned by the Hom-preservation
// suite in the tests, not by convention.
#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "triwass/matching.hpp"

namespace triwass {

enum class ReflectionKind { SinkPlus, SourceMinus };

struct Reflection {
    int vertex = 1;  // 1-based
    ReflectionKind kind = ReflectionKind::SinkPlus;
};

inline bool is_sink(const AnQuiver& q, int v) {
    if (v >= 2 && q.orientation[v - 2] != Arrow::Forward) return false;
    if (v <= q.n - 1 && q.orientation[v - 1] != Arrow::Backward) return false;
    return q.n > 1;
}

inline bool is_source(const AnQuiver& q, int v) {
    if (v >= 2 && q.orientation[v - 2] != Arrow::Backward) return false;
    if (v <= q.n - 1 && q.orientation[v - 1] != Arrow::Forward) return false;
    return q.n > 1;
}

inline void require_valid(const AnQuiver& q, const Reflection& r) {
    if (r.vertex < 1 || r.vertex > q.n) throw input_error("reflection: vertex out of range");
    if (r.kind == ReflectionKind::SinkPlus && !is_sink(q, r.vertex))
        throw input_error("reflection: vertex " + std::to_string(r.vertex) + " is not a sink");
    if (r.kind == ReflectionKind::SourceMinus && !is_source(q, r.vertex))
        throw input_error("reflection: vertex " + std::to_string(r.vertex) + " is not a source");
}

inline Reflection inverse(const Reflection& r) {
    return {r.vertex, r.kind == ReflectionKind::SinkPlus ? ReflectionKind::SourceMinus
                                                         : ReflectionKind::SinkPlus};
}

// Same vertices, positions and measure; incident arrows reversed.
inline QuiverPtr reflect_quiver(const QuiverPtr& q, const Reflection& r) {
    require_valid(*q, r);
    std::vector<Arrow> ori = q->orientation;
    auto flip = [](Arrow a) { return a == Arrow::Forward ? Arrow::Backward : Arrow::Forward; };
    if (r.vertex >= 2) ori[r.vertex - 2] = flip(ori[r.vertex - 2]);
    if (r.vertex <= q->n - 1) ori[r.vertex - 1] = flip(ori[r.vertex - 1]);
    return make_quiver(q->n, std::move(ori), q->positions, q->measure);
}

// R+ at a sink: the new stalk is the kernel of the sum map from the
// neighbours; the reversed arrows are the components of its inclusion.
// R- at a source is dual with the cokernel of the map into the neighbours.
inline Rep reflect_rep(const Rep& m, const Reflection& r) {
    const AnQuiver& q = *m.quiver;
    require_valid(q, r);
    QuiverPtr rq = reflect_quiver(m.quiver, r);
    const std::uint32_t mod = m.modulus();
    const int v = r.vertex;
    const bool has_left = v >= 2, has_right = v <= q.n - 1;
    const int dl = has_left ? m.dims[v - 2] : 0;
    const int dr = has_right ? m.dims[v] : 0;

    std::vector<int> dims = m.dims;
    std::vector<Matrix> maps = m.maps;
    if (r.kind == ReflectionKind::SinkPlus) {
        // rows of the kernel basis split by neighbour: left block on top
        Matrix sum = has_left && has_right ? Matrix::hstack(m.maps[v - 2], m.maps[v - 1])
                     : has_left            ? m.maps[v - 2]
                                           : m.maps[v - 1];
        Matrix ker = sum.kernel_basis();
        dims[v - 1] = ker.cols();
        if (has_left) maps[v - 2] = ker.row_slice(0, dl);         // now Backward: V_v -> V_{v-1}
        if (has_right) maps[v - 1] = ker.row_slice(dl, dl + dr);  // now Forward: V_v -> V_{v+1}
    } else {
        Matrix stacked = has_left && has_right ? Matrix::vstack(m.maps[v - 2], m.maps[v - 1])
                         : has_left            ? m.maps[v - 2]
                                               : m.maps[v - 1];
        Matrix proj = stacked.cokernel_projection();
        dims[v - 1] = proj.rows();
        if (has_left) maps[v - 2] = proj.col_slice(0, dl);         // now Forward: V_{v-1} -> V_v
        if (has_right) maps[v - 1] = proj.col_slice(dl, dl + dr);  // now Backward: V_{v+1} -> V_v
    }
    return make_rep(std::move(rq), std::move(dims), std::move(maps), mod);
}

// Summand-wise action on derived barcodes: the simple at the reflected
// vertex shifts degree by +1 (R+) or -1 (R-); every other interval maps to
// the decomposition of its module reflection in the same degree.
inline DerivedBarcode reflect_derived(const DerivedBarcode& bc, const QuiverPtr& quiver,
                                      const Reflection& r, std::uint32_t mod = kDefaultPrime,
                                      bool skip_simple_shift = false) {
    require_valid(*quiver, r);
    DerivedBarcode out;
    const Interval simple(r.vertex, r.vertex);
    const int delta = r.kind == ReflectionKind::SinkPlus ? 1 : -1;
    for (const auto& [k, mult] : bc) {
        const auto& [deg, I] = k;
        if (I == simple) {
            dbar_add(out, skip_simple_shift ? deg : deg + delta, I, mult);
            continue;
        }
        for (const auto& [J, m2] : decompose(reflect_rep(interval_rep(quiver, I, mod), r)))
            dbar_add(out, deg, J, mult * m2);
    }
    return out;
}

// Transport of a weight family across the equivalence.  HomInto maps its
// target through the reflection; AbsChi becomes the per-vertex family of
// Hom into the reflected simple stalks.  Hdim is not representable and
// cannot be transported.
inline WeightFamily transport_family(const WeightFamily& fam, const QuiverPtr& quiver,
                                     const Reflection& r, std::uint32_t mod = kDefaultPrime,
                                     bool skip_simple_shift = false) {
    require_valid(*quiver, r);
    QuiverPtr rq = reflect_quiver(quiver, r);
    switch (fam.kind) {
        case FamilyKind::HomInto: {
            if (fam.targets.size() != 1) throw input_error("hom-into family needs one target");
            DerivedBarcode t = reflect_derived(derived_barcode(fam.targets[0]), quiver, r, mod,
                                               skip_simple_shift);
            return WeightFamily::hom_into(realize_complex(rq, t, mod));
        }
        case FamilyKind::AbsChi: {
            std::vector<RepComplex> targets;
            for (int p = 1; p <= quiver->n; ++p) {
                DerivedBarcode s;
                dbar_add(s, 0, Interval(p, p));
                targets.push_back(realize_complex(
                    rq, reflect_derived(s, quiver, r, mod, skip_simple_shift), mod));
            }
            return WeightFamily::hom_into_per_vertex(std::move(targets));
        }
        case FamilyKind::HomIntoPerVertex: {
            std::vector<RepComplex> targets;
            for (const RepComplex& t : fam.targets)
                targets.push_back(realize_complex(
                    rq, reflect_derived(derived_barcode(t), quiver, r, mod, skip_simple_shift),
                    mod));
            return WeightFamily::hom_into_per_vertex(std::move(targets));
        }
        default:
            throw input_error("family '" + family_name(fam) +
                              "' is not representable and cannot be transported");
    }
}

struct IsometryDiscrepancy {
    std::string pair;      // which objects
    std::string quantity;  // which invariant broke
    std::string before, after;
};

struct IsometryReport {
    int pairs_checked = 0;
    std::vector<IsometryDiscrepancy> discrepancies;
    bool ok() const { return discrepancies.empty(); }
};

// Checks, object by object and pair by pair, that the transported family
// reproduces Euler weights, the sandwich bounds, and the envelope
// Wasserstein value across the reflection.
inline IsometryReport isometry_report(const std::vector<RepComplex>& objects,
                                      const WeightFamily& fam, const Reflection& r, PExp p,
                                      std::uint32_t mod = kDefaultPrime,
                                      bool skip_simple_shift = false) {
    if (objects.empty()) return {};
    const QuiverPtr quiver = objects.front().quiver;
    require_valid(*quiver, r);
    WeightFamily tfam = transport_family(fam, quiver, r, mod, skip_simple_shift);
    QuiverPtr rq = reflect_quiver(quiver, r);

    std::vector<DerivedBarcode> before_bc, after_bc;
    std::vector<RepComplex> after_obj;
    for (const RepComplex& x : objects) {
        if (!same_quiver(x.quiver, quiver)) throw input_error("isometry: quiver mismatch");
        before_bc.push_back(derived_barcode(x));
        after_bc.push_back(reflect_derived(before_bc.back(), quiver, r, mod));
        after_obj.push_back(realize_complex(rq, after_bc.back(), mod));
    }

    IsometryReport report;
    auto note = [&](std::string pair, std::string what, std::string lhs, std::string rhs) {
        report.discrepancies.push_back(
            {std::move(pair), std::move(what), std::move(lhs), std::move(rhs)});
    };

    const int N = int(objects.size());
    for (int i = 0; i < N; ++i) {
        WeightVector wv = weight_vector(objects[i], fam);
        WeightVector twv = weight_vector(after_obj[i], tfam);
        for (int v = 0; v < quiver->n; ++v)
            if (wv[v] != twv[v])
                note("object " + std::to_string(i) + ", vertex " + std::to_string(v + 1),
                     "euler weight", rat_to_string(wv[v]), rat_to_string(twv[v]));
    }

    PairCost env_before = default_pair_distance(fam, quiver, mod);
    PairCost env_after = default_pair_distance(tfam, rq, mod);
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
            ++report.pairs_checked;
            std::string pair = std::to_string(i) + "," + std::to_string(j);
            Bounds b0 = bounds(objects[i], objects[j], fam);
            Bounds b1 = bounds(after_obj[i], after_obj[j], tfam);
            if (b0.lower != b1.lower)
                note(pair, "lower bound", rat_to_string(b0.lower), rat_to_string(b1.lower));
            if (b0.upper != b1.upper)
                note(pair, "upper bound", rat_to_string(b0.upper), rat_to_string(b1.upper));
            MatchingResult w0 = wasserstein(before_bc[i], before_bc[j], p, env_before);
            MatchingResult w1 = wasserstein(after_bc[i], after_bc[j], p, env_after);
            if (w0.total != w1.total)
                note(pair, "wasserstein (p=" + p.str() + ")", rat_to_string(w0.total),
                     rat_to_string(w1.total));
        }
    return report;
}

}  // namespace triwass
