// JSON schemas for every value the CLI reads or writes.  Rationals are
// serialized as "p/q" strings so no precision is lost in transit; matrices
// are row-major integer arrays with shapes inferred from the dims.
#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "triwass/exactness.hpp"
#include "triwass/matching.hpp"
#include "triwass/reflect.hpp"

namespace triwass {

using Json = nlohmann::json;

namespace json_detail {

inline const Json& field(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw input_error(std::string("missing field '") + key + "'");
    return *it;
}

inline Matrix matrix_from_json(const Json& j, int rows, int cols, std::uint32_t mod,
                               const std::string& where) {
    if (!j.is_array() || int(j.size()) != rows * cols)
        throw input_error(where + ": expected " + std::to_string(rows * cols) +
                          " row-major entries");
    Matrix m(rows, cols, mod);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.set(r, c, j[std::size_t(r) * cols + c].get<long long>());
    return m;
}

inline Json matrix_to_json(const Matrix& m) {
    Json out = Json::array();
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) out.push_back(m.at(r, c));
    return out;
}

}  // namespace json_detail

// ---- quiver ---------------------------------------------------------------
// {n, orientation: ["F"|"B"...], positions: ["p/q"...], measure: ["p/q"...]}

inline QuiverPtr quiver_from_json(const Json& j) {
    int n = json_detail::field(j, "n").get<int>();
    std::vector<Arrow> ori;
    for (const auto& s : json_detail::field(j, "orientation")) {
        std::string v = s.get<std::string>();
        if (v == "F")
            ori.push_back(Arrow::Forward);
        else if (v == "B")
            ori.push_back(Arrow::Backward);
        else
            throw input_error("orientation entries must be \"F\" or \"B\"");
    }
    std::vector<Rational> pos, mu;
    for (const auto& s : json_detail::field(j, "positions"))
        pos.push_back(parse_rational(s.get<std::string>()));
    for (const auto& s : json_detail::field(j, "measure"))
        mu.push_back(parse_rational(s.get<std::string>()));
    return make_quiver(n, std::move(ori), std::move(pos), std::move(mu));
}

inline Json quiver_to_json(const AnQuiver& q) {
    Json j;
    j["n"] = q.n;
    Json ori = Json::array();
    for (Arrow a : q.orientation) ori.push_back(a == Arrow::Forward ? "F" : "B");
    j["orientation"] = std::move(ori);
    Json pos = Json::array(), mu = Json::array();
    for (const auto& p : q.positions) pos.push_back(rat_to_string(p));
    for (const auto& m : q.measure) mu.push_back(rat_to_string(m));
    j["positions"] = std::move(pos);
    j["measure"] = std::move(mu);
    return j;
}

// ---- representation ---------------------------------------------------------
// {dims: [...], maps: [[row-major entries]...]}

inline Rep rep_from_json(const Json& j, const QuiverPtr& quiver, std::uint32_t mod) {
    std::vector<int> dims = json_detail::field(j, "dims").get<std::vector<int>>();
    if (int(dims.size()) != quiver->n) throw input_error("rep: dims length mismatch");
    const Json& maps = json_detail::field(j, "maps");
    if (int(maps.size()) != quiver->n - 1) throw input_error("rep: maps length mismatch");
    std::vector<Matrix> ms;
    for (int e = 0; e + 1 < quiver->n; ++e) {
        auto [r, c] = rep_detail::edge_shape(*quiver, dims, e);
        ms.push_back(json_detail::matrix_from_json(maps[e], r, c, mod,
                                                   "rep edge " + std::to_string(e + 1)));
    }
    return make_rep(quiver, std::move(dims), std::move(ms), mod);
}

inline Json rep_to_json(const Rep& m) {
    Json j;
    j["dims"] = m.dims;
    Json maps = Json::array();
    for (const Matrix& mat : m.maps) maps.push_back(json_detail::matrix_to_json(mat));
    j["maps"] = std::move(maps);
    return j;
}

// ---- complex ----------------------------------------------------------------
// {lo, hi, terms: [Rep...], diffs: [[vertex matrices]...]}

inline RepComplex complex_from_json(const Json& j, const QuiverPtr& quiver, std::uint32_t mod) {
    int lo = json_detail::field(j, "lo").get<int>();
    int hi = json_detail::field(j, "hi").get<int>();
    if (lo > hi) return zero_complex(quiver, mod);
    const Json& terms_j = json_detail::field(j, "terms");
    const Json& diffs_j = json_detail::field(j, "diffs");
    if (int(terms_j.size()) != hi - lo + 1) throw input_error("complex: terms length mismatch");
    if (int(diffs_j.size()) != hi - lo) throw input_error("complex: diffs length mismatch");
    std::vector<Rep> terms;
    for (const auto& t : terms_j) terms.push_back(rep_from_json(t, quiver, mod));
    std::vector<RepMorphism> diffs;
    for (int k = 0; k + 1 < int(terms.size()); ++k) {
        const Json& comps = diffs_j[k];
        if (int(comps.size()) != quiver->n)
            throw input_error("complex: differential at degree " + std::to_string(lo + k) +
                              " needs one matrix per vertex");
        std::vector<Matrix> mats;
        for (int p = 0; p < quiver->n; ++p)
            mats.push_back(json_detail::matrix_from_json(
                comps[p], terms[k + 1].dims[p], terms[k].dims[p], mod,
                "differential at degree " + std::to_string(lo + k) + ", vertex " +
                    std::to_string(p + 1)));
        diffs.push_back(make_morphism(terms[k], terms[k + 1], std::move(mats)));
    }
    return make_complex(quiver, lo, std::move(terms), std::move(diffs), mod);
}

inline Json complex_to_json(const RepComplex& c) {
    Json j;
    j["lo"] = c.lo;
    j["hi"] = c.hi;
    Json terms = Json::array(), diffs = Json::array();
    for (int i = c.lo; i <= c.hi; ++i) terms.push_back(rep_to_json(c.term(i)));
    for (int i = c.lo; i < c.hi; ++i) {
        Json comps = Json::array();
        for (const Matrix& m : c.diff(i).components)
            comps.push_back(json_detail::matrix_to_json(m));
        diffs.push_back(std::move(comps));
    }
    j["terms"] = std::move(terms);
    j["diffs"] = std::move(diffs);
    return j;
}

// ---- barcode ----------------------------------------------------------------
// {bars: [{interval: [a, b], degree, mult}...]}

inline DerivedBarcode barcode_from_json(const Json& j) {
    DerivedBarcode bc;
    for (const auto& bar : json_detail::field(j, "bars")) {
        const Json& iv = json_detail::field(bar, "interval");
        if (!iv.is_array() || iv.size() != 2) throw input_error("bar interval must be [a, b]");
        int a = iv[0].get<int>(), b = iv[1].get<int>();
        if (a > b) throw input_error("bar interval has a > b");
        int degree = bar.value("degree", 0);
        int mult = bar.value("mult", 1);
        if (mult < 1) throw input_error("bar multiplicity must be positive");
        dbar_add(bc, degree, Interval(a, b), mult);
    }
    return bc;
}

inline Json barcode_to_json(const DerivedBarcode& bc) {
    Json bars = Json::array();
    for (const auto& [k, mult] : bc) {
        Json bar;
        bar["interval"] = {k.second.a, k.second.b};
        bar["degree"] = k.first;
        bar["mult"] = mult;
        bars.push_back(std::move(bar));
    }
    Json j;
    j["bars"] = std::move(bars);
    return j;
}

// ---- cost table for injected pair oracles ------------------------------------
// {pair: [["p/q"...] per A-bar], delete_a: [...], delete_b: [...]} with
// entries indexed by the flattened (sorted) bar order of the two barcodes.

inline PairCost cost_table_from_json(const Json& j, const DerivedBarcode& a,
                                     const DerivedBarcode& b) {
    std::vector<DerivedBar> fa = flatten_bars(a), fb = flatten_bars(b);
    const int m = int(fa.size()), n = int(fb.size());
    std::vector<std::vector<Rational>> pair(m, std::vector<Rational>(n));
    const Json& pj = json_detail::field(j, "pair");
    if (int(pj.size()) != m) throw input_error("cost table: pair rows mismatch");
    for (int i = 0; i < m; ++i) {
        if (int(pj[i].size()) != n) throw input_error("cost table: pair columns mismatch");
        for (int k = 0; k < n; ++k) pair[i][k] = parse_rational(pj[i][k].get<std::string>());
    }
    auto del = [&](const char* key, int len) {
        std::vector<Rational> v;
        for (const auto& s : json_detail::field(j, key))
            v.push_back(parse_rational(s.get<std::string>()));
        if (int(v.size()) != len) throw input_error(std::string("cost table: ") + key + " length");
        return v;
    };
    std::vector<Rational> da = del("delete_a", m), db = del("delete_b", n);

    auto find_index = [](const std::vector<DerivedBar>& bars, const DerivedBar& x) {
        for (std::size_t i = 0; i < bars.size(); ++i)
            if (bars[i] == x) return int(i);
        return -1;
    };
    return [=](const std::optional<DerivedBar>& x,
               const std::optional<DerivedBar>& y) -> Rational {
        auto describe = [](const DerivedBar& b) {
            return "([" + std::to_string(b.I.a) + "," + std::to_string(b.I.b) + "], deg " +
                   std::to_string(b.degree) + ")";
        };
        if (!x && !y) return Rational(0);
        if (!x) {
            int k = find_index(fb, *y);
            if (k < 0) throw input_error("cost table has no entry for bar " + describe(*y));
            return db[k];
        }
        if (!y) {
            int i = find_index(fa, *x);
            if (i < 0) throw input_error("cost table has no entry for bar " + describe(*x));
            return da[i];
        }
        int i = find_index(fa, *x), k = find_index(fb, *y);
        if (i < 0 || k < 0)
            throw input_error("cost table has no entry for pair " + describe(*x) + ", " +
                              describe(*y));
        return pair[i][k];
    };
}

// ---- results ------------------------------------------------------------------

inline Json matching_to_json(const MatchingResult& r) {
    Json j;
    j["p"] = r.p.str();
    j["value_pth_power"] = rat_to_string(r.total);
    j["value_decimal"] =
        r.p.infinite ? rat_root_decimal(rat_abs(r.total), 1) : rat_root_decimal(r.total, r.p.value);
    Json matching = Json::array();
    for (const auto& mp : r.matched) {
        Json e;
        e["a"] = mp.a;
        e["b"] = mp.b;
        e["cost"] = rat_to_string(mp.cost);
        matching.push_back(std::move(e));
    }
    j["matching"] = std::move(matching);
    Json ua = Json::array(), ub = Json::array();
    for (const auto& [i, c] : r.unmatched_a) {
        Json e;
        e["a"] = i;
        e["cost"] = rat_to_string(c);
        ua.push_back(std::move(e));
    }
    for (const auto& [i, c] : r.unmatched_b) {
        Json e;
        e["b"] = i;
        e["cost"] = rat_to_string(c);
        ub.push_back(std::move(e));
    }
    j["unmatched_a"] = std::move(ua);
    j["unmatched_b"] = std::move(ub);
    return j;
}

inline Json exactness_to_json(const ExactnessReport& r) {
    Json j;
    j["trials"] = r.trials;
    Json v = Json::array();
    for (const auto& viol : r.violations) {
        Json e;
        e["trial"] = viol.trial;
        e["seed"] = viol.seed;
        e["failed_inequality"] = viol.inequality;
        e["triangle_dims"] = viol.triangle_dims;
        e["weights"] = {rat_to_string(viol.wx), rat_to_string(viol.wy), rat_to_string(viol.wz)};
        v.push_back(std::move(e));
    }
    j["violations"] = std::move(v);
    return j;
}

inline Json isometry_to_json(const IsometryReport& r) {
    Json j;
    j["pairs_checked"] = r.pairs_checked;
    Json d = Json::array();
    for (const auto& disc : r.discrepancies) {
        Json e;
        e["pair"] = disc.pair;
        e["quantity"] = disc.quantity;
        e["before"] = disc.before;
        e["after"] = disc.after;
        d.push_back(std::move(e));
    }
    j["discrepancies"] = std::move(d);
    return j;
}

inline Json weight_vector_to_json(const WeightVector& v, const Rational& integrated) {
    Json j;
    Json vec = Json::array();
    for (const auto& r : v) vec.push_back(rat_to_string(r));
    j["vector"] = std::move(vec);
    j["integrated"] = rat_to_string(integrated);
    return j;
}

inline Json bounds_to_json(const Bounds& b) {
    Json j;
    j["lower"] = rat_to_string(b.lower);
    j["upper"] = rat_to_string(b.upper);
    return j;
}

}  // namespace triwass
