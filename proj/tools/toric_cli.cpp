// Command-line workbench for simple polytopes and their dicharacteristics.
//
// Every subcommand reads and writes self-describing JSON documents
// ({"type": "polytope"} / {"type": "pair"}), so invocations compose in shell
// pipelines; "-" names standard input. Domain errors exit 1 with a
// machine-readable {code, message, detail} object; usage errors exit 2.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "toric/equiv.hpp"
#include "toric/face_ring.hpp"
#include "toric/families.hpp"
#include "toric/io.hpp"
#include "toric/surgery.hpp"

namespace {

using toric::CharacteristicPair;
using toric::Error;
using toric::Json;
using toric::SimplePolytope;
using toric::SumSide;

Json read_document(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
    } else {
        std::ifstream in(path);
        if (!in) throw Error("io", "cannot open '" + path + "'");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    }
    try {
        return Json::parse(text);
    } catch (const std::exception& e) {
        throw Error("bad-document", "input is not valid JSON", e.what());
    }
}

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

SimplePolytope read_polytope(const std::string& path) {
    Json doc = read_document(path);
    if (toric::is_pair_document(doc)) return toric::pair_from_json(doc).base();
    return toric::polytope_from_json(doc);
}

CharacteristicPair read_pair(const std::string& path) {
    Json doc = read_document(path);
    if (!toric::is_pair_document(doc))
        throw Error("bad-document", "'" + path + "' is not a pair document");
    return toric::pair_from_json(doc);
}

SumSide side_from_json(const Json& doc) {
    SumSide side;
    if (doc.contains("vertex")) side.vertex = doc["vertex"].get<std::vector<std::string>>();
    if (doc.contains("order")) side.order = doc["order"].get<std::vector<std::string>>();
    return side;
}

SumSide parse_side(const std::string& text) {
    if (text.empty()) return {};
    try {
        return side_from_json(Json::parse(text));
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw Error("bad-spec", "side spec must be JSON like {\"vertex\": [...], \"order\": [...]}",
                    e.what());
    }
}

std::vector<std::string> split_names(const std::string& text) {
    std::vector<std::string> names;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            if (!cur.empty()) names.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) names.push_back(cur);
    return names;
}

void ensure_valid(const CharacteristicPair& pair) {
    auto rep = validate(pair);
    if (!rep.ok) throw Error("invalid-pair", "input pair fails validation", rep.problems.front());
}

struct MakeArgs {
    std::string family;
    std::vector<std::string> params;
    std::string variant;
};

void run_make(const MakeArgs& args) {
    auto need = [&](size_t count) {
        if (args.params.size() != count)
            throw Error("bad-spec", "make " + args.family + " expects " + std::to_string(count) +
                                        " parameter(s)");
    };
    if (args.family == "cpn") {
        need(1);
        if (args.variant != "l" && args.variant != "lprime")
            throw Error("bad-spec", "cpn needs --variant l|lprime");
        emit(toric::to_json(
            toric::build(toric::parse_family_spec("cpn(" + args.params[0] + "," + args.variant + ")"))));
    } else if (args.family == "bn") {
        need(1);
        emit(toric::to_json(toric::build(toric::parse_family_spec("bn(" + args.params[0] + ")"))));
    } else if (args.family == "bij") {
        need(2);
        emit(toric::to_json(toric::build(
            toric::parse_family_spec("bij(" + args.params[0] + "," + args.params[1] + ")"))));
    } else if (args.family == "product") {
        if (args.params.empty()) throw Error("bad-spec", "make product needs factor specs");
        std::string spec = "product(";
        for (size_t i = 0; i < args.params.size(); ++i) spec += (i ? "," : "") + args.params[i];
        spec += ")";
        emit(toric::to_json(toric::build(toric::parse_family_spec(spec))));
    } else if (args.family == "representative") {
        need(1);
        Json doc = read_document(args.params[0]);
        if (!doc.contains("summands") || !doc["summands"].is_array())
            throw Error("bad-document", "representative spec needs a 'summands' array");
        std::vector<toric::ConnSummand> summands;
        for (const auto& s : doc["summands"]) {
            toric::ConnSummand summand;
            if (s.is_string()) {
                summand.spec = toric::parse_family_spec(s.get<std::string>());
            } else if (s.is_object() && s.contains("factors")) {
                std::string spec = "product(";
                const auto& factors = s["factors"];
                for (size_t i = 0; i < factors.size(); ++i)
                    spec += (i ? "," : "") + factors[i].get<std::string>();
                spec += ")";
                summand.spec = toric::parse_family_spec(spec);
                summand.side = side_from_json(s);
            } else {
                throw Error("bad-document",
                            "each summand is a family spec string or {factors, vertex?, order?}");
            }
            summands.push_back(std::move(summand));
        }
        emit(toric::to_json(toric::representative(summands)));
    } else {
        throw Error("bad-spec", "unknown family '" + args.family +
                                    "'; expected cpn, bn, bij, product or representative");
    }
}

int dispatch(CLI::App& app) {
    // ---- make ----------------------------------------------------------
    auto make_args = std::make_shared<MakeArgs>();
    CLI::App* make = app.add_subcommand("make", "construct a family pair");
    make->add_option("family", make_args->family, "cpn | bn | bij | product | representative")
        ->required();
    make->add_option("params", make_args->params, "family parameters");
    make->add_option("--variant", make_args->variant, "cpn variant: l | lprime");
    make->callback([make_args] { run_make(*make_args); });

    // ---- product -------------------------------------------------------
    auto prod_paths = std::make_shared<std::vector<std::string>>();
    CLI::App* prod = app.add_subcommand("product", "product of two documents");
    prod->add_option("inputs", *prod_paths, "two polytope or pair documents")->expected(2);
    prod->callback([prod_paths] {
        Json a = read_document((*prod_paths)[0]);
        Json b = read_document((*prod_paths)[1]);
        if (toric::is_pair_document(a) && toric::is_pair_document(b)) {
            emit(toric::to_json(
                toric::pair_product(toric::pair_from_json(a), toric::pair_from_json(b))));
        } else if (!toric::is_pair_document(a) && !toric::is_pair_document(b)) {
            emit(toric::to_json(
                toric::product(toric::polytope_from_json(a), toric::polytope_from_json(b))));
        } else {
            throw Error("bad-spec", "product needs two documents of the same kind");
        }
    });

    // ---- connsum -------------------------------------------------------
    auto cs_paths = std::make_shared<std::vector<std::string>>();
    auto cs_left = std::make_shared<std::string>();
    auto cs_right = std::make_shared<std::string>();
    CLI::App* connsum = app.add_subcommand("connsum", "connected sum of two documents");
    connsum->add_option("inputs", *cs_paths, "left and right documents ('self' repeats the left)")
        ->expected(2);
    connsum->add_option("--left-at", *cs_left, "JSON {\"vertex\": [...], \"order\": [...]}");
    connsum->add_option("--right-at", *cs_right, "JSON {\"vertex\": [...], \"order\": [...]}");
    connsum->callback([cs_paths, cs_left, cs_right] {
        Json a = read_document((*cs_paths)[0]);
        Json b = (*cs_paths)[1] == "self" ? a : read_document((*cs_paths)[1]);
        SumSide left = parse_side(*cs_left), right = parse_side(*cs_right);
        if (toric::is_pair_document(a) && toric::is_pair_document(b)) {
            CharacteristicPair pa = toric::pair_from_json(a), pb = toric::pair_from_json(b);
            ensure_valid(pa);
            ensure_valid(pb);
            emit(toric::to_json(toric::dichar_connected_sum(pa, left, pb, right)));
        } else if (!toric::is_pair_document(a) && !toric::is_pair_document(b)) {
            emit(toric::to_json(toric::connected_sum(toric::ConnSumSpec{
                toric::polytope_from_json(a), left, toric::polytope_from_json(b), right})));
        } else {
            throw Error("bad-spec", "connsum needs two documents of the same kind");
        }
    });

    // ---- prune ---------------------------------------------------------
    auto prune_path = std::make_shared<std::string>();
    auto prune_face = std::make_shared<std::string>();
    CLI::App* prune_cmd = app.add_subcommand("prune", "truncate a face of a polytope");
    prune_cmd->add_option("input", *prune_path, "polytope document")->required();
    prune_cmd->add_option("--face", *prune_face, "comma-separated facet names of the face")
        ->required();
    prune_cmd->callback([prune_path, prune_face] {
        emit(toric::to_json(
            toric::prune(toric::PruneSpec{read_polytope(*prune_path), split_names(*prune_face)})));
    });

    // ---- validate ------------------------------------------------------
    auto val_path = std::make_shared<std::string>();
    CLI::App* val = app.add_subcommand("validate", "validate a polytope or pair");
    val->add_option("input", *val_path, "document")->required();
    val->callback([val_path] {
        Json doc = read_document(*val_path);
        toric::ValidationReport rep = toric::is_pair_document(doc)
                                          ? validate(toric::pair_from_json(doc))
                                          : validate(toric::polytope_from_json(doc));
        emit(toric::to_json(rep));
    });

    // ---- kernel --------------------------------------------------------
    auto ker_path = std::make_shared<std::string>();
    CLI::App* ker = app.add_subcommand("kernel", "kernel lattice of a pair's matrix");
    ker->add_option("input", *ker_path, "pair document")->required();
    ker->callback([ker_path] {
        CharacteristicPair pair = read_pair(*ker_path);
        ensure_valid(pair);
        emit(toric::to_json(toric::kernel_basis(pair.dichar)));
    });

    // ---- restrict ------------------------------------------------------
    auto res_path = std::make_shared<std::string>();
    auto res_face = std::make_shared<std::string>();
    CLI::App* res = app.add_subcommand("restrict", "restrict a pair to a face");
    res->add_option("input", *res_path, "pair document")->required();
    res->add_option("--face", *res_face, "comma-separated facet names")->required();
    res->callback([res_path, res_face] {
        CharacteristicPair pair = read_pair(*res_path);
        ensure_valid(pair);
        emit(toric::to_json(toric::restrict_to_face(pair, split_names(*res_face))));
    });

    // ---- equiv ---------------------------------------------------------
    auto eq_paths = std::make_shared<std::vector<std::string>>();
    auto eq_directed = std::make_shared<bool>(false);
    CLI::App* eq = app.add_subcommand("equiv", "combinatorial or pair equivalence");
    eq->add_option("inputs", *eq_paths, "two documents of the same kind")->expected(2);
    eq->add_flag("--directed", *eq_directed, "require matching orientations (pairs only)");
    eq->callback([eq_paths, eq_directed] {
        Json a = read_document((*eq_paths)[0]);
        Json b = read_document((*eq_paths)[1]);
        Json out;
        if (toric::is_pair_document(a) && toric::is_pair_document(b)) {
            CharacteristicPair pa = toric::pair_from_json(a), pb = toric::pair_from_json(b);
            auto witness = toric::pairs_equivalent(pa, pb, *eq_directed);
            out["equivalent"] = witness.has_value();
            if (witness) {
                Json bij = Json::object();
                for (int f = 0; f < pa.base().facet_count(); ++f)
                    bij[pa.base().facets[static_cast<size_t>(f)]] =
                        pb.base().facets[static_cast<size_t>(witness->phi.to_q[static_cast<size_t>(f)])];
                out["bijection"] = bij;
                Json theta = Json::array();
                for (int r = 0; r < witness->theta.m.rows(); ++r) theta.push_back(witness->theta.m.row(r));
                out["theta"] = theta;
                Json signs = Json::object();
                for (int f = 0; f < pa.base().facet_count(); ++f)
                    signs[pa.base().facets[static_cast<size_t>(f)]] = witness->signs[static_cast<size_t>(f)];
                out["signs"] = signs;
            }
        } else if (!toric::is_pair_document(a) && !toric::is_pair_document(b)) {
            SimplePolytope pa = toric::polytope_from_json(a), pb = toric::polytope_from_json(b);
            auto phi = toric::is_equivalent(pa, pb);
            out["equivalent"] = phi.has_value();
            if (phi) {
                Json bij = Json::object();
                for (int f = 0; f < pa.facet_count(); ++f)
                    bij[pa.facets[static_cast<size_t>(f)]] =
                        pb.facets[static_cast<size_t>(phi->to_q[static_cast<size_t>(f)])];
                out["bijection"] = bij;
            }
        } else {
            throw Error("bad-spec", "equiv needs two documents of the same kind");
        }
        emit(out);
    });

    // ---- hvector -------------------------------------------------------
    auto hv_path = std::make_shared<std::string>();
    CLI::App* hv = app.add_subcommand("hvector", "face counts and h-vector");
    hv->add_option("input", *hv_path, "polytope or pair document")->required();
    hv->callback([hv_path] {
        SimplePolytope p = read_polytope(*hv_path);
        toric::CountVectors cv = toric::count_vectors(p);
        Json out;
        out["f"] = cv.f;
        out["h"] = cv.h;
        emit(out);
    });

    // ---- facering ------------------------------------------------------
    auto fr_path = std::make_shared<std::string>();
    auto fr_maxdeg = std::make_shared<int>(-1);
    auto fr_chern = std::make_shared<bool>(false);
    CLI::App* fr = app.add_subcommand("facering", "graded presentation and ranks");
    fr->add_option("input", *fr_path, "pair document")->required();
    fr->add_option("--max-degree", *fr_maxdeg, "highest degree to report (default: dim)");
    fr->add_flag("--chern", *fr_chern, "include reduced Chern expansions per degree");
    fr->callback([fr_path, fr_maxdeg, fr_chern] {
        CharacteristicPair pair = read_pair(*fr_path);
        ensure_valid(pair);
        toric::GradedPresentation pres = toric::presentation(pair);
        int top = *fr_maxdeg >= 0 ? *fr_maxdeg : pair.base().dim;
        Json out;
        out["variables"] = pair.base().facets;
        Json ideal = Json::array();
        for (const auto& gen : pres.nonface_generators)
            ideal.push_back(toric::facet_names(pres.base, gen));
        out["monomial_ideal"] = ideal;
        Json linear = Json::array();
        for (int i = 0; i < pres.linear_forms.rows(); ++i) {
            Json form = Json::object();
            for (int f = 0; f < pres.linear_forms.cols(); ++f)
                if (pres.linear_forms.at(i, f) != 0)
                    form[pres.base.facets[static_cast<size_t>(f)]] = pres.linear_forms.at(i, f);
            linear.push_back(form);
        }
        out["linear_forms"] = linear;
        Json ranks = Json::array(), codegrees = Json::array();
        for (int d = 0; d <= top; ++d) {
            ranks.push_back(toric::graded_rank(pres, d));
            codegrees.push_back(2 * d);
        }
        out["ranks"] = ranks;
        out["cohomological_degrees"] = codegrees;
        if (*fr_chern) {
            Json chern = Json::array();
            for (int d = 0; d <= top; ++d)
                chern.push_back(toric::to_json(toric::total_chern(pair, d), pair.base()));
            out["chern"] = chern;
        }
        emit(out);
    });

    // ---- chern ---------------------------------------------------------
    auto ch_path = std::make_shared<std::string>();
    auto ch_deg = std::make_shared<int>(1);
    CLI::App* ch = app.add_subcommand("chern", "one degree of the reduced Chern expansion");
    ch->add_option("input", *ch_path, "pair document")->required();
    ch->add_option("--degree", *ch_deg, "internal degree (cohomological degree / 2)");
    ch->callback([ch_path, ch_deg] {
        CharacteristicPair pair = read_pair(*ch_path);
        ensure_valid(pair);
        emit(toric::to_json(toric::total_chern(pair, *ch_deg), pair.base()));
    });

    // ---- lattice -------------------------------------------------------
    auto lat_path = std::make_shared<std::string>();
    auto lat_dot = std::make_shared<bool>(false);
    CLI::App* lat = app.add_subcommand("lattice", "face lattice of a polytope");
    lat->add_option("input", *lat_path, "polytope or pair document")->required();
    lat->add_flag("--dot", *lat_dot, "emit DOT instead of JSON");
    lat->callback([lat_path, lat_dot] {
        SimplePolytope p = read_polytope(*lat_path);
        if (*lat_dot) {
            std::cout << toric::face_lattice_dot(p);
            return;
        }
        toric::FaceLattice lattice = toric::face_lattice(p);
        Json faces = Json::array();
        for (const auto& face : lattice.faces) {
            Json f;
            f["facets"] = toric::facet_names(p, face.facet_set);
            f["dim"] = face.dim;
            faces.push_back(f);
        }
        Json out;
        out["count"] = lattice.size();
        out["faces"] = faces;
        out["f"] = lattice.f_vector();
        emit(out);
    });

    app.require_subcommand(1);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for simple polytopes, dicharacteristics and their invariants"};
    dispatch(app);
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        std::cerr << "run with --help for usage\n";
        return 2;
    } catch (const Error& e) {
        Json err;
        err["code"] = e.code();
        err["message"] = e.what();
        err["detail"] = e.detail();
        std::cout << err.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        Json err;
        err["code"] = "internal";
        err["message"] = e.what();
        err["detail"] = "";
        std::cout << err.dump(2) << "\n";
        return 1;
    }
    return 0;
}
