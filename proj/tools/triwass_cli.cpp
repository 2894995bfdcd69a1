// triwass: batch CLI for exact weights, path-metric bounds and Wasserstein
// distances on bounded complexes of A_n representations.
//
// Every command reads and writes JSON (schemas in the library headers and
// README).  Output is deterministic for fixed inputs and seed.  Exit codes:
// 0 success, 1 input error, 2 internal-consistency error, 3 a check-style
// command found violations.

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "triwass/json_io.hpp"

using namespace triwass;

namespace {

std::uint32_t field_prime_from_env() {
    const char* env = std::getenv("TRIWASS_FIELD_PRIME");
    if (!env) return kDefaultPrime;
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (!end || *end != '\0' || v < 2 || v > 0x7fffffffu)
        throw input_error("TRIWASS_FIELD_PRIME must be a prime < 2^31");
    return checked_prime(std::uint32_t(v));
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw input_error(path + ": " + e.what());
    }
}

// stdout plus optional file, written once.
void emit(const Json& j, const std::string& out_path) {
    std::string text = j.dump(2) + "\n";
    std::fputs(text.c_str(), stdout);
    if (out_path.empty()) return;
    std::string tmp = out_path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw input_error("cannot write '" + out_path + "'");
        out << text;
    }
    if (std::rename(tmp.c_str(), out_path.c_str()) != 0)
        throw input_error("cannot move output into place at '" + out_path + "'");
}

ChainMorphism chain_morphism_from_json(const Json& j, const RepComplex& src,
                                       const RepComplex& tgt, std::uint32_t mod) {
    int lo = json_detail::field(j, "lo").get<int>();
    const Json& comps_j = json_detail::field(j, "components");
    std::vector<RepMorphism> comps;
    for (int k = 0; k < int(comps_j.size()); ++k) {
        const Json& mats_j = comps_j[k];
        const int deg = lo + k;
        Rep s = src.term(deg), t = tgt.term(deg);
        if (int(mats_j.size()) != src.quiver->n)
            throw input_error("morphism: one matrix per vertex required at degree " +
                              std::to_string(deg));
        std::vector<Matrix> mats;
        for (int p = 0; p < src.quiver->n; ++p)
            mats.push_back(json_detail::matrix_from_json(
                mats_j[p], t.dims[p], s.dims[p], mod,
                "morphism degree " + std::to_string(deg) + ", vertex " + std::to_string(p + 1)));
        comps.push_back(make_morphism(std::move(s), std::move(t), std::move(mats)));
    }
    if (comps.empty()) return zero_chain_morphism(src, tgt);
    return make_chain_morphism(src, tgt, lo, std::move(comps));
}

struct FamilyArgs {
    std::string name = "hdim";
    std::string target_path;

    WeightFamily build(const QuiverPtr& quiver, std::uint32_t mod) const {
        if (name == "hdim") return WeightFamily::hdim();
        if (name == "abs-chi") return WeightFamily::abs_chi();
        if (name == "total-dim") return WeightFamily::total_dim_control();
        if (name == "hom-into") {
            if (target_path.empty()) throw input_error("family 'hom-into' requires --target");
            return WeightFamily::hom_into(
                complex_from_json(load_json(target_path), quiver, mod));
        }
        throw input_error("unknown family '" + name +
                          "' (expected hdim, abs-chi, hom-into, total-dim)");
    }
};

Reflection reflection_from(const std::string& kind, int vertex) {
    if (kind == "plus") return {vertex, ReflectionKind::SinkPlus};
    if (kind == "minus") return {vertex, ReflectionKind::SourceMinus};
    throw input_error("reflection kind must be 'plus' (sink) or 'minus' (source)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact weights, path-metric bounds and Wasserstein distances "
                 "for complexes of A_n-type persistence modules"};
    app.require_subcommand(1);

    std::string quiver_path, rep_path, complex_path, a_path, b_path, morphism_path;
    std::string source_path, target_complex_path, out_path, costs_path, p_str = "1";
    FamilyArgs fam;
    std::vector<std::string> pool_paths, object_paths;
    int degree = 0, vertex = 1, max_len = 8, trials = 1000;
    int max_dim = 3, max_terms = 4;
    std::string kind = "plus";
    std::uint64_t seed = 0;
    bool use_intervals = false, negative_control = false;

    auto add_out = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "also write the JSON here");
    };
    auto add_quiver = [&](CLI::App* cmd) {
        cmd->add_option("--quiver", quiver_path, "quiver JSON file")->required();
    };
    auto add_family = [&](CLI::App* cmd) {
        cmd->add_option("--family", fam.name, "hdim | abs-chi | hom-into | total-dim");
        cmd->add_option("--target", fam.target_path, "target complex for hom-into");
    };

    CLI::App* cmd_decompose =
        app.add_subcommand("decompose", "interval decomposition of a representation");
    add_quiver(cmd_decompose);
    cmd_decompose->add_option("--rep", rep_path, "representation JSON")->required();
    add_out(cmd_decompose);

    CLI::App* cmd_cohomology =
        app.add_subcommand("cohomology", "cohomology of a complex in one degree");
    add_quiver(cmd_cohomology);
    cmd_cohomology->add_option("--complex", complex_path)->required();
    cmd_cohomology->add_option("--degree", degree)->required();
    add_out(cmd_cohomology);

    CLI::App* cmd_cone = app.add_subcommand("cone", "mapping cone of a chain morphism");
    add_quiver(cmd_cone);
    cmd_cone->add_option("--source", source_path, "source complex JSON")->required();
    cmd_cone->add_option("--target", target_complex_path, "target complex JSON")->required();
    cmd_cone->add_option("--morphism", morphism_path, "chain morphism JSON")->required();
    add_out(cmd_cone);

    CLI::App* cmd_weight =
        app.add_subcommand("weight", "vertexwise and integrated family weight");
    add_quiver(cmd_weight);
    cmd_weight->add_option("--complex", complex_path)->required();
    add_family(cmd_weight);
    add_out(cmd_weight);

    CLI::App* cmd_bounds = app.add_subcommand("bounds", "lower/upper path-metric bounds");
    add_quiver(cmd_bounds);
    cmd_bounds->add_option("--a", a_path)->required();
    cmd_bounds->add_option("--b", b_path)->required();
    add_family(cmd_bounds);
    add_out(cmd_bounds);

    CLI::App* cmd_path = app.add_subcommand("path-oracle", "restricted path metric over a pool");
    add_quiver(cmd_path);
    cmd_path->add_option("--a", a_path)->required();
    cmd_path->add_option("--b", b_path)->required();
    cmd_path->add_option("--pool", pool_paths, "pool complex JSON files")->required();
    cmd_path->add_option("--max-len", max_len, "maximum number of legs");
    add_family(cmd_path);
    add_out(cmd_path);

    CLI::App* cmd_wass = app.add_subcommand("wasserstein", "W_p between two barcodes");
    cmd_wass->add_option("--a", a_path, "barcode JSON")->required();
    cmd_wass->add_option("--b", b_path, "barcode JSON")->required();
    cmd_wass->add_option("--p", p_str, "1, 2, ... or inf");
    cmd_wass->add_option("--quiver", quiver_path, "quiver JSON (for the envelope oracle)");
    add_family(cmd_wass);
    cmd_wass->add_option("--costs", costs_path,
                         "explicit cost table JSON instead of the envelope");
    add_out(cmd_wass);

    CLI::App* cmd_reflect =
        app.add_subcommand("reflect", "reflection functor at a sink or source");
    add_quiver(cmd_reflect);
    cmd_reflect->add_option("--vertex", vertex)->required();
    cmd_reflect->add_option("--kind", kind, "plus (sink) | minus (source)");
    cmd_reflect->add_option("--rep", rep_path, "representation to reflect");
    cmd_reflect->add_option("--barcode", b_path, "derived barcode to reflect");
    add_out(cmd_reflect);

    CLI::App* cmd_check = app.add_subcommand("check-exact", "randomized exactness check");
    add_quiver(cmd_check);
    add_family(cmd_check);
    cmd_check->add_option("--trials", trials);
    cmd_check->add_option("--seed", seed, "random seed (required; no wall-clock default)")
        ->required();
    cmd_check->add_option("--max-dim", max_dim, "term dimension bound");
    cmd_check->add_option("--max-terms", max_terms, "support window length bound");
    add_out(cmd_check);

    CLI::App* cmd_iso = app.add_subcommand("isometry", "isometry report across one reflection");
    add_quiver(cmd_iso);
    add_family(cmd_iso);
    cmd_iso->add_option("--vertex", vertex)->required();
    cmd_iso->add_option("--kind", kind, "plus (sink) | minus (source)");
    cmd_iso->add_option("--p", p_str, "1, 2, ... or inf");
    cmd_iso->add_option("--objects", object_paths, "complex JSON files to compare");
    cmd_iso->add_flag("--intervals", use_intervals, "use all interval stalks as objects");
    cmd_iso->add_flag("--negative-control", negative_control,
                      "deliberately skip the simple's degree shift");
    add_out(cmd_iso);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints the message or help text
        return code == 0 ? 0 : 1;
    }

    try {
        const std::uint32_t mod = field_prime_from_env();

        if (cmd_decompose->parsed()) {
            QuiverPtr q = quiver_from_json(load_json(quiver_path));
            Rep m = rep_from_json(load_json(rep_path), q, mod);
            DerivedBarcode bc;
            for (const auto& [I, mult] : decompose(m)) dbar_add(bc, 0, I, mult);
            emit(barcode_to_json(bc), out_path);
        } else if (cmd_cohomology->parsed()) {
            QuiverPtr q = quiver_from_json(load_json(quiver_path));
            RepComplex c = complex_from_json(load_json(complex_path), q, mod);
            emit(rep_to_json(cohomology(c, degree)), out_path);
        } else if (cmd_cone->parsed()) {
            QuiverPtr q = quiver_from_json(load_json(quiver_path));
            RepComplex x = complex_from_json(load_json(source_path), q, mod);
            RepComplex y = complex_from_json(load_json(target_complex_path), q, mod);
            ChainMorphism f = chain_morphism_from_json(load_json(morphism_path), x, y, mod);
            emit(complex_to_json(cone(f)), out_path);
        } else if (cmd_weight->parsed()) {
            QuiverPtr q = quiver_from_json(load_json(quiver_path));
            RepComplex c = complex_from_json(load_json(complex_path), q, mod);
            WeightFamily family = fam.build(q, mod);
            WeightVector v = weight_vector(c, family);
            emit(weight_vector_to_json(v, integrate(v, *q)), out_path);
        } else if (cmd_bounds->parsed()) {
            QuiverPtr q = quiver_from_json(load_json(quiver_path));
            RepComplex a = complex_from_json(load_json(a_path), q, mod);
            RepComplex b = complex_from_json(load_json(b_path), q, mod);
            emit(bounds_to_json(bounds(a, b, fam.build(q, mod))), out_path);
        } else if (cmd_path->parsed()) {
            QuiverPtr q = quiver_from_json(load_json(quiver_path));
            RepComplex a = complex_from_json(load_json(a_path), q, mod);
            RepComplex b = complex_from_json(load_json(b_path), q, mod);
            std::vector<RepComplex> pool;
            for (const auto& path : pool_paths)
                pool.push_back(complex_from_json(load_json(path), q, mod));
            WeightFamily family = fam.build(q, mod);
            ExtRational d = restricted_path_metric(a, b, family, pool, max_len);
            Bounds bd = bounds(a, b, family);
            Json j;
            j["value"] = d.str();
            j["lower"] = rat_to_string(bd.lower);
            j["upper"] = rat_to_string(bd.upper);
            j["exact"] = !d.is_infinite() && d.finite() == bd.lower;
            emit(j, out_path);
        } else if (cmd_wass->parsed()) {
            DerivedBarcode a = barcode_from_json(load_json(a_path));
            DerivedBarcode b = barcode_from_json(load_json(b_path));
            PExp p = parse_p(p_str);
            PairCost dist;
            if (!costs_path.empty()) {
                dist = cost_table_from_json(load_json(costs_path), a, b);
            } else if (!quiver_path.empty()) {
                QuiverPtr q = quiver_from_json(load_json(quiver_path));
                dist = default_pair_distance(fam.build(q, mod), q, mod);
            } else {
                throw input_error("wasserstein needs --costs or --quiver/--family");
            }
            emit(matching_to_json(wasserstein(a, b, p, dist)), out_path);
        } else if (cmd_reflect->parsed()) {
            QuiverPtr q = quiver_from_json(load_json(quiver_path));
            Reflection r = reflection_from(kind, vertex);
            Json j;
            j["quiver"] = quiver_to_json(*reflect_quiver(q, r));
            if (!rep_path.empty()) {
                Rep m = rep_from_json(load_json(rep_path), q, mod);
                j["rep"] = rep_to_json(reflect_rep(m, r));
            }
            if (!b_path.empty()) {
                DerivedBarcode bc = barcode_from_json(load_json(b_path));
                j["barcode"] = barcode_to_json(reflect_derived(bc, q, r, mod))["bars"];
            }
            emit(j, out_path);
        } else if (cmd_check->parsed()) {
            QuiverPtr q = quiver_from_json(load_json(quiver_path));
            RandomComplexParams params;
            params.max_dim = max_dim;
            params.max_terms = max_terms;
            ExactnessReport r = check_exactness(q, fam.build(q, mod), trials, seed, mod, params);
            emit(exactness_to_json(r), out_path);
            return r.ok() ? 0 : 3;
        } else if (cmd_iso->parsed()) {
            QuiverPtr q = quiver_from_json(load_json(quiver_path));
            Reflection r = reflection_from(kind, vertex);
            std::vector<RepComplex> objects;
            if (use_intervals) {
                for (int a = 1; a <= q->n; ++a)
                    for (int b = a; b <= q->n; ++b)
                        objects.push_back(stalk(interval_rep(q, Interval(a, b), mod), 0));
            }
            for (const auto& path : object_paths)
                objects.push_back(complex_from_json(load_json(path), q, mod));
            if (objects.empty()) throw input_error("isometry needs --objects or --intervals");
            IsometryReport rep = isometry_report(objects, fam.build(q, mod), r, parse_p(p_str),
                                                 mod, negative_control);
            emit(isometry_to_json(rep), out_path);
            return rep.ok() ? 0 : 3;
        }
        return 0;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
