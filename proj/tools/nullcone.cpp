// Command-line surface for the nilpotent 3x3 classification library:
// classify tuples, decide degeneration and hom order, verify the embedded
// tables and diagrams, export the Hasse diagrams.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nullcone/json_io.hpp"
#include "nullcone/verify.hpp"

using namespace nullcone;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitDomainError = 2;
constexpr int kExitParseError = 3;

std::uint64_t env_seed() {
    if (const char* s = std::getenv("NULLCONE_SEED")) return std::strtoull(s, nullptr, 10);
    return kDefaultSeed;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path, 0);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct TupleArgs {
    std::string file;
    std::vector<std::string> inline_mats;
    std::string field_name = "rational";
    std::uint64_t prime = 101;

    void attach(CLI::App* cmd, const std::string& label) {
        const std::string suffix = label.empty() ? "" : "-" + label;
        cmd->add_option("input" + (label.empty() ? "" : "_" + label), file,
                        "tuple document (JSON file, or - for stdin)");
        // one token per occurrence, so bracketed literals survive verbatim
        cmd->add_option("--inline" + suffix, inline_mats,
                        "component matrices as inline literals [[..],[..],..]")
            ->allow_extra_args(false);
        cmd->add_option("--field" + suffix, field_name,
                        "field for inline input: rational or gfp");
        cmd->add_option(label.empty() ? "-p,--prime" : "--prime" + suffix, prime,
                        "prime for gfp inline input");
    }

    MatrixTuple load() const {
        if (!inline_mats.empty()) {
            if (field_name != "rational" && field_name != "gfp")
                throw parse_error("field must be rational or gfp, got " + field_name, 0);
            Field f = field_name == "gfp" ? Field::gfp(prime) : Field::rationals();
            std::vector<Mat> comps;
            for (const std::string& text : inline_mats)
                comps.push_back(parse_inline_matrix(text, f));
            if (comps.empty()) throw parse_error("no components given", 0);
            std::size_t n = comps[0].rows();
            return MatrixTuple(n, std::move(comps));
        }
        if (file.empty()) throw parse_error("no input tuple given", 0);
        return parse_tuple_document(read_input(file));
    }
};

json label_info(const OrbitLabel& label, const MatrixTuple& tuple) {
    json out;
    out["label"] = label.str();
    out["orbit_dimension"] = orbit_dim(tuple);
    StratumLabel s = hesselink_stratum(label);
    out["hesselink_stratum"] = stratum_name(s);
    json triple = json::array();
    for (const Scalar& v : stratum_triple(s)) triple.push_back(v.str());
    out["stratum_triple"] = triple;
    out["mixed_action_orbit"] = glabel_name(classify_G(label));
    out["gl3xgl2_orbit"] = gl32_name(classify_GL32(label));
    return out;
}

int cmd_classify(const TupleArgs& args, bool want_witness, bool as_json, std::uint64_t seed) {
    MatrixTuple tuple = args.load();
    if (tuple.n() != 3 || tuple.m() != 2) {
        std::cerr << "classify expects a pair of 3x3 matrices\n";
        return kExitDomainError;
    }
    if (!is_nilpotent(tuple)) {
        std::cerr << "not in the nullcone: a length-3 product of components is nonzero\n";
        return kExitDomainError;
    }
    OrbitLabel label = classify_pair(tuple);
    json out = label_info(label, tuple);
    out["document"] = json::parse(emit_tuple_document(tuple));
    std::string witness_text;
    if (want_witness) {
        auto [l2, g] = conjugation_witness(tuple, seed);
        (void)l2;
        witness_text = g.str();
        out["witness"] = witness_text;
    }
    if (as_json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "label: " << label.str() << "\n";
        std::cout << "orbit dimension: " << out["orbit_dimension"] << "\n";
        std::cout << "hesselink stratum: " << out["hesselink_stratum"].get<std::string>() << " ("
                  << out["stratum_triple"][0].get<std::string>() << ", "
                  << out["stratum_triple"][1].get<std::string>() << ", "
                  << out["stratum_triple"][2].get<std::string>() << ")\n";
        std::cout << "mixed-action orbit: " << out["mixed_action_orbit"].get<std::string>()
                  << "\n";
        std::cout << "gl3xgl2 orbit: " << out["gl3xgl2_orbit"].get<std::string>() << "\n";
        if (want_witness) std::cout << "witness g: " << witness_text << "\n";
    }
    return kExitOk;
}

int cmd_compare(const TupleArgs& a_args, const TupleArgs& b_args, const std::string& order,
                const std::string& group, bool as_json) {
    MatrixTuple a = a_args.load(), b = b_args.load();
    if (a.n() != 3 || b.n() != 3) {
        std::cerr << "compare expects 3x3 tuples\n";
        return kExitDomainError;
    }
    if (!is_nilpotent(a) || !is_nilpotent(b)) {
        std::cerr << "not in the nullcone\n";
        return kExitDomainError;
    }
    if (order == "hom" && group != "gl3") {
        std::cerr << "the hom order applies to the conjugation action only\n";
        return kExitDomainError;
    }

    json out;
    bool result;
    if (a.m() != b.m()) {
        std::cerr << "tuples have different arity\n";
        return kExitDomainError;
    }
    if (a.m() != 2) {
        if (group != "gl3") {
            std::cerr << "coarse groups are defined for pairs only\n";
            return kExitDomainError;
        }
        result = deg_compare_m(a, b);
        out["relation"] = order + " (by reduction to a generating pair)";
    } else {
        OrbitLabel la = classify_pair(a), lb = classify_pair(b);
        out["label_a"] = la.str();
        out["label_b"] = lb.str();
        if (group == "gl3h") {
            result = deg_le_G(classify_G(la), classify_G(lb));
        } else if (group == "gl32") {
            result = deg_le_GL32(classify_GL32(la), classify_GL32(lb));
        } else {
            result = deg_le_labels(la, lb);
            if (!result && la != lb) {
                auto obs = hom_obstruction(la, lb);
                if (obs) {
                    out["obstruction"] = obs->str();
                    out["rank_a"] = eval_ncmatrix_rank(*obs, representative(la, a.field()));
                    out["rank_b"] = eval_ncmatrix_rank(*obs, representative(lb, b.field()));
                }
            }
        }
    }
    out["order"] = order;
    out["group"] = group;
    out["result"] = result;
    if (as_json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << (result ? "true" : "false") << "\n";
        if (out.contains("obstruction"))
            std::cout << "witness: " << out["obstruction"].get<std::string>() << " with ranks "
                      << out["rank_a"] << " < " << out["rank_b"] << "\n";
    }
    return kExitOk;
}

json curve_report_json(const CurveReport& r) {
    return {{"row", r.row_id},        {"params", r.binding},
            {"pass", r.pass},         {"limit", r.limit_label},
            {"target", r.target_label}, {"detail", r.detail}};
}

int cmd_verify(bool as_json, bool per_row, const VerifyOptions& opt) {
    std::vector<CheckResult> results = verify_paper(opt);
    bool all = true;
    json out;
    json checks = json::array();
    for (const CheckResult& r : results) {
        all = all && r.pass;
        if (as_json) {
            checks.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        } else {
            std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
            if (!r.detail.empty()) std::cout << " — " << r.detail;
            std::cout << "\n";
        }
    }
    if (as_json || per_row) {
        Field f = Field::rationals();
        std::vector<CurveReport> rows;
        for (const auto& table : {degeneration_curves(), mixing_curves()}) {
            std::vector<CurveReport> part = verify_all_curves(table, opt.grid, f);
            rows.insert(rows.end(), part.begin(), part.end());
        }
        if (as_json) {
            json jrows = json::array();
            for (const CurveReport& r : rows) jrows.push_back(curve_report_json(r));
            out["curves"] = jrows;
        } else {
            for (const CurveReport& r : rows)
                std::cout << (r.pass ? "pass" : "FAIL") << "  " << r.row_id
                          << (r.binding.empty() ? "" : " [" + r.binding + "]") << "  limit "
                          << r.limit_label << " / target " << r.target_label << "\n";
        }
    }
    if (as_json) {
        out["checks"] = checks;
        out["pass"] = all;
        std::cout << out.dump(2) << "\n";
    }
    return all ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classification of nilpotent 3x3 matrix pairs and their orbit orders"};
    app.require_subcommand(1);

    std::uint64_t seed = env_seed();
    app.add_option("--seed", seed, "seed for the randomized (but exact) search steps");

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "orbit label of a nilpotent pair");
    TupleArgs classify_args;
    classify_args.attach(classify_cmd, "");
    bool want_witness = false, classify_json = false;
    classify_cmd->add_flag("--witness", want_witness, "also compute a conjugating witness");
    classify_cmd->add_flag("--json", classify_json, "machine-readable output");

    // compare
    auto* compare_cmd = app.add_subcommand("compare", "order between two tuples");
    TupleArgs cmp_a, cmp_b;
    cmp_a.attach(compare_cmd, "a");
    cmp_b.attach(compare_cmd, "b");
    std::string order = "deg", group = "gl3";
    bool compare_json = false;
    compare_cmd->add_option("--order", order, "deg or hom")
        ->check(CLI::IsMember({"deg", "hom"}));
    compare_cmd->add_option("--group", group, "gl3, gl3h, or gl32")
        ->check(CLI::IsMember({"gl3", "gl3h", "gl32"}));
    compare_cmd->add_flag("--json", compare_json, "machine-readable output");

    // homdim
    auto* homdim_cmd = app.add_subcommand("homdim", "dimension of the intertwiner space");
    TupleArgs hd_a, hd_b;
    hd_a.attach(homdim_cmd, "a");
    hd_b.attach(homdim_cmd, "b");

    // rank
    auto* rank_cmd = app.add_subcommand("rank", "rank of phi(A) for a polynomial witness");
    TupleArgs rank_args;
    rank_args.attach(rank_cmd, "");
    std::string phi_text;
    std::vector<std::string> param_defs;
    rank_cmd->add_option("--phi", phi_text, "polynomial, e.g. \"x2 - l*x1 - m*x1^2\"")
        ->required();
    rank_cmd->add_option("--param", param_defs, "parameter bindings name=value");

    // kronrank
    auto* kron_cmd = app.add_subcommand("kronrank",
                                        "rank of I(x)T0 + A1(x)T1 + ... + Am(x)Tm");
    std::string kron_file;
    kron_cmd->add_option("input", kron_file, "JSON with {tuple: ..., t: [matrix,...]}")
        ->required();

    // deg2
    auto* deg2_cmd = app.add_subcommand("deg2", "degeneration oracle for 2x2 tuples");
    TupleArgs d2_a, d2_b;
    d2_a.attach(deg2_cmd, "a");
    d2_b.attach(deg2_cmd, "b");

    // verify-paper
    auto* verify_cmd = app.add_subcommand("verify-paper",
                                          "re-verify every embedded table and diagram");
    bool verify_json = false, verify_rows = false;
    VerifyOptions opt;
    verify_cmd->add_flag("--json", verify_json, "machine-readable output");
    verify_cmd->add_flag("--rows", verify_rows, "also print one line per curve row");
    verify_cmd->add_option("--conjugations", opt.random_conjugations,
                           "random conjugations per label");
    verify_cmd->add_option("--lifts", opt.lift_samples, "random lifted tuples per arity");

    // export-hasse
    auto* export_cmd = app.add_subcommand("export-hasse", "DOT export of a Hasse diagram");
    std::string figure = "gl3";
    std::string format = "dot";
    export_cmd->add_option("--figure", figure, "gl3, strata, gl3h, or gl32")
        ->check(CLI::IsMember({"gl3", "strata", "gl3h", "gl32"}));
    export_cmd->add_option("--format", format, "output format (dot)")
        ->check(CLI::IsMember({"dot"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*classify_cmd) return cmd_classify(classify_args, want_witness, classify_json, seed);
        if (*compare_cmd) return cmd_compare(cmp_a, cmp_b, order, group, compare_json);
        if (*homdim_cmd) {
            MatrixTuple a = hd_a.load(), b = hd_b.load();
            std::cout << hom_dim(a, b) << "\n";
            return kExitOk;
        }
        if (*rank_cmd) {
            MatrixTuple a = rank_args.load();
            std::map<std::string, Scalar> params;
            for (const std::string& def : param_defs) {
                auto eq = def.find('=');
                if (eq == std::string::npos)
                    throw parse_error("--param expects name=value", 0);
                params.emplace(def.substr(0, eq), a.field().parse(def.substr(eq + 1)));
            }
            NCPoly phi = parse_ncpoly(phi_text, a.field(), params);
            std::cout << eval_ncmatrix_rank(NCMatrix::single(phi), a) << "\n";
            return kExitOk;
        }
        if (*kron_cmd) {
            json doc = json::parse(read_input(kron_file));
            MatrixTuple tuple = parse_tuple_document(doc.at("tuple").dump());
            std::vector<Mat> ts;
            for (const json& jm : doc.at("t"))
                ts.push_back(parse_inline_matrix(jm.dump(), tuple.field()));
            std::cout << kron_rank(tuple, ts) << "\n";
            return kExitOk;
        }
        if (*deg2_cmd) {
            MatrixTuple a = d2_a.load(), b = d2_b.load();
            std::cout << (deg2_compare(a, b, seed) ? "true" : "false") << "\n";
            return kExitOk;
        }
        if (*verify_cmd) {
            opt.seed = seed;
            return cmd_verify(verify_json, verify_rows, opt);
        }
        if (*export_cmd) {
            if (figure == "gl3") std::cout << gl3_hasse_dot();
            if (figure == "strata") std::cout << strata_hasse_dot();
            if (figure == "gl3h") std::cout << g_hasse_dot();
            if (figure == "gl32") std::cout << gl32_hasse_dot();
            return kExitOk;
        }
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitDomainError;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomainError;
    }
    return kExitOk;
}
