// command-line front end: every library operation behind one subcommand,
// JSON in, canonical JSON (or --format table) out.
//
// exit codes: 0 success / all Consistent
//             1 usage, file, or parse error
//             2 Infeasible, HypothesisNotMet, rejected profile, or Exhausted
//             3 hypothesis Unverifiable (and nothing worse)

#include "reebop/abelian_group.hpp"
#include "reebop/bubbling.hpp"
#include "reebop/chain_complex.hpp"
#include "reebop/integer_matrix.hpp"
#include "reebop/json_io.hpp"
#include "reebop/manifold_profile.hpp"
#include "reebop/planner.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace {

using namespace reebop;
using io::json;

void emit(const json& doc) { std::cout << io::dump_canonical(doc); }

std::string group_list(const std::vector<FGAbelianGroup>& gs) {
    std::string s = "(";
    for (std::size_t i = 0; i < gs.size(); ++i) {
        if (i) s += ", ";
        s += gs[i].to_string();
    }
    return s + ")";
}

std::vector<ManifoldProfile> load_catalog(const std::string& path) {
    if (path.empty()) return default_catalog();
    return io::catalog_from_json(io::load_json_file(path), path + "#");
}

const ManifoldProfile& named(const std::vector<ManifoldProfile>& catalog,
                             const std::string& name,
                             std::optional<ManifoldProfile>& slot) {
    slot = find_profile(catalog, name);
    if (!slot) throw std::invalid_argument("unknown profile name '" + name + "'");
    return *slot;
}

// "sphere:4", "lens:25", "barden5:2,4", "crowley7:9"
ManifoldProfile builtin_profile(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    auto want_int = [&]() {
        if (arg.empty()) throw std::invalid_argument("builtin '" + kind + "' needs an argument");
        return Int(arg);
    };
    if (kind == "sphere") return sphere_profile(static_cast<int>(want_int()));
    if (kind == "lens") return lens_profile(want_int());
    if (kind == "barden5" || kind == "crowley7") {
        if (arg.empty()) throw std::invalid_argument("builtin '" + kind + "' needs an argument");
        FGAbelianGroup t;
        std::istringstream in(arg);
        std::string piece;
        while (std::getline(in, piece, ','))
            t = direct_sum(t, FGAbelianGroup::cyclic(Int(piece)));
        return kind == "barden5" ? barden5_profile(t) : crowley7_profile(t);
    }
    throw std::invalid_argument("unknown builtin '" + spec +
                                "' (want sphere:D, lens:P, barden5:Q[,Q...], crowley7:Q[,Q...])");
}

ChainComplex builtin_complex(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (kind == "point") return point_complex();
    if (arg.empty()) throw std::invalid_argument("builtin '" + kind + "' needs an argument");
    if (kind == "sphere") return sphere_complex(static_cast<int>(Int(arg)));
    if (kind == "lens") return lens_complex(Int(arg));
    throw std::invalid_argument("unknown builtin '" + spec +
                                "' (want point, sphere:D, or lens:P)");
}

int verdict_exit(const std::vector<Verdict>& vs) {
    bool unverifiable = false;
    for (const Verdict& v : vs) {
        if (v.status == VerdictStatus::Infeasible ||
            v.status == VerdictStatus::HypothesisNotMet)
            return 2;
        if (v.status == VerdictStatus::Unverifiable) unverifiable = true;
    }
    return unverifiable ? 3 : 0;
}

int run_canon(const std::string& group_path, const std::string& relations_path,
              const std::string& format) {
    FGAbelianGroup g;
    if (!group_path.empty())
        g = io::group_from_json(io::load_json_file(group_path), group_path + "#");
    else
        g = canonicalize({io::matrix_from_json(io::load_json_file(relations_path),
                                               relations_path + "#")});
    if (format == "table")
        std::cout << g.to_string() << "\n";
    else
        emit(io::to_json(g));
    return 0;
}

int run_snf_random(int count, int rows, int cols, int max_entry, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dim_r(1, rows), dim_c(1, cols);
    std::uniform_int_distribution<int> entry(-max_entry, max_entry);
    for (int t = 0; t < count; ++t) {
        IntMatrix m(dim_r(rng), dim_c(rng));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
        const SmithDecomposition s = smith_normal_form(m);
        bool ok = s.left * m * s.right == s.diagonal;
        ok = ok && abs(determinant(s.left)) == 1 && abs(determinant(s.right)) == 1;
        const auto d = s.divisors();
        for (std::size_t k = 0; ok && k + 1 < d.size(); ++k)
            ok = d[k + 1] % d[k] == 0 || (d[k] == 0 && d[k + 1] == 0);
        if (!ok) {
            json doc = {{"checked", t}, {"ok", false}, {"matrix", io::to_json(m)}};
            emit(doc);
            return 1;
        }
    }
    emit(json{{"checked", count}, {"ok", true}});
    return 0;
}

int run_snf(const std::string& matrix_path, int random_count, int rows, int cols,
            int max_entry, unsigned long long seed, const std::string& format) {
    if (random_count > 0) return run_snf_random(random_count, rows, cols, max_entry, seed);
    const IntMatrix m =
        io::matrix_from_json(io::load_json_file(matrix_path), matrix_path + "#");
    const SmithDecomposition s = smith_normal_form(m);
    if (format == "table") {
        std::cout << "divisors:";
        for (const Int& d : s.divisors()) std::cout << " " << d.str();
        std::cout << "\n";
        return 0;
    }
    json doc;
    doc["diagonal"] = io::to_json(s.diagonal);
    doc["left"] = io::to_json(s.left);
    doc["right"] = io::to_json(s.right);
    json divs = json::array();
    for (const Int& d : s.divisors()) divs.push_back(io::to_json(d));
    doc["divisors"] = divs;
    emit(doc);
    return 0;
}

int run_check(const std::string& target_path, const std::string& thm5_path,
              const std::string& thm6_path, unsigned long long order_bound,
              const std::string& format) {
    const TargetFamily t =
        io::target_from_json(io::load_json_file(target_path), target_path + "#");
    std::vector<Verdict> verdicts = necessary_conditions(t);
    if (!thm5_path.empty()) {
        const PrimePowerPartition p =
            io::partition_from_json(io::load_json_file(thm5_path), thm5_path + "#");
        verdicts.push_back(check_thm5(t, p));
    }
    if (!thm6_path.empty()) {
        const SubgroupFamily f =
            io::family_from_json(io::load_json_file(thm6_path), thm6_path + "#");
        verdicts.push_back(check_thm6(t, f, order_bound));
    }
    if (format == "table") {
        if (verdicts.empty())
            std::cout << "Consistent: no rule rejects the target\n";
        for (const Verdict& v : verdicts)
            std::cout << to_string(v.status) << " [" << v.rule << "] " << v.witness << "\n";
    } else {
        json doc;
        json vs = json::array();
        for (const Verdict& v : verdicts) vs.push_back(io::to_json(v));
        doc["verdicts"] = vs;
        emit(doc);
    }
    return verdict_exit(verdicts);
}

int emit_plan(const Plan& plan, const std::string& format) {
    if (format == "table") {
        std::cout << "n=" << plan.n << ", " << plan.ops.size() << " ops\n";
        for (std::size_t i = 0; i < plan.ops.size(); ++i) {
            const BubblingOp& op = plan.ops[i];
            std::cout << "op " << i << " [" << to_string(op.kind) << "]: ";
            if (op.polyhedron.is_point()) {
                std::cout << "point";
            } else {
                for (std::size_t k = 0; k < op.polyhedron.parts.size(); ++k)
                    std::cout << (k ? " + " : "") << op.polyhedron.parts[k].name;
            }
            std::cout << "\n";
        }
        return 0;
    }
    emit(io::to_json(plan));
    return 0;
}

int emit_verdict(const Verdict& v, const std::string& format) {
    if (format == "table")
        std::cout << to_string(v.status) << " [" << v.rule << "] " << v.witness << "\n";
    else
        emit(io::to_json(v));
    return verdict_exit({v});
}

int run_plan(const std::string& target_path, const std::string& strategy,
             const std::string& catalog_path, const std::vector<std::string>& carriers,
             const std::string& case_name, int max_carriers, const std::string& format) {
    const TargetFamily t =
        io::target_from_json(io::load_json_file(target_path), target_path + "#");
    const std::vector<ManifoldProfile> catalog = load_catalog(catalog_path);

    auto settle = [&](const PlanOrVerdict& r) {
        if (std::holds_alternative<Plan>(r)) return emit_plan(std::get<Plan>(r), format);
        return emit_verdict(std::get<Verdict>(r), format);
    };

    if (strategy == "prop3") return settle(plan_prop3(t));
    if (strategy == "prop4") return settle(plan_prop4(t));

    if (strategy == "thm2") {
        if (carriers.size() != 1)
            throw std::invalid_argument("strategy thm2 needs exactly one --carrier");
        std::optional<ManifoldProfile> slot;
        return settle(plan_thm2(t, named(catalog, carriers[0], slot)));
    }

    if (strategy == "thm4") {
        if (carriers.size() != 2)
            throw std::invalid_argument("strategy thm4 needs exactly two --carrier");
        std::optional<ManifoldProfile> s1, s2;
        const ManifoldProfile& a = named(catalog, carriers[0], s1);
        const ManifoldProfile& b = named(catalog, carriers[1], s2);
        const std::pair<std::string, Thm4Case> cases[] = {{"1a", Thm4Case::Case1a},
                                                          {"1b", Thm4Case::Case1b},
                                                          {"2", Thm4Case::Case2},
                                                          {"3", Thm4Case::Case3}};
        if (!case_name.empty()) {
            for (const auto& [label, c] : cases)
                if (label == case_name) return settle(plan_thm4(t, a, b, c));
            throw std::invalid_argument("unknown case '" + case_name +
                                        "' (want 1a, 1b, 2 or 3)");
        }
        // no case requested: try them all, report every guard failure
        std::string combined;
        for (const auto& [label, c] : cases) {
            PlanOrVerdict r = plan_thm4(t, a, b, c);
            if (std::holds_alternative<Plan>(r)) return emit_plan(std::get<Plan>(r), format);
            if (!combined.empty()) combined += "; ";
            combined += "case " + label + ": " + std::get<Verdict>(r).witness;
        }
        return emit_verdict({VerdictStatus::HypothesisNotMet, "thm4", combined}, format);
    }

    if (strategy == "search") {
        std::optional<Plan> plan = plan_search(t, catalog, max_carriers);
        if (plan) return emit_plan(*plan, format);
        if (format == "table") {
            std::cout << "Exhausted [search] no multiset of at most " << max_carriers
                      << " catalog carriers realizes the torsion\n";
        } else {
            emit(json{{"status", "Exhausted"},
                      {"rule", "search"},
                      {"witness", "no multiset of at most " + std::to_string(max_carriers) +
                                      " catalog carriers realizes the torsion"}});
        }
        return 2;
    }

    throw std::invalid_argument("unknown strategy '" + strategy +
                                "' (want prop3, prop4, thm2, thm4 or search)");
}

int run_bubble(const std::string& plan_path, const std::string& catalog_path,
               const std::string& format) {
    const std::vector<ManifoldProfile> catalog = load_catalog(catalog_path);
    const Plan plan =
        io::plan_from_json(io::load_json_file(plan_path), catalog, plan_path + "#");
    const PlanReplay replay = apply_plan(plan);
    const std::optional<TargetFamily> delta = delta_family(plan.initial, replay.final_state);
    if (format == "table") {
        std::cout << "final: " << group_list(replay.final_state.homology) << "\n";
        if (delta)
            std::cout << "delta: " << group_list(delta->groups) << "\n";
        for (const OpLedgerEntry& e : replay.ledger)
            std::cout << "op " << e.op_index << ": +" << group_list(e.delta) << "\n";
        return 0;
    }
    json doc;
    doc["final"] = io::to_json(replay.final_state);
    doc["delta"] = delta ? io::to_json(*delta) : json(nullptr);
    json ledger = json::array();
    for (const OpLedgerEntry& e : replay.ledger) ledger.push_back(io::to_json(e));
    doc["ledger"] = ledger;
    emit(doc);
    return 0;
}

int run_oracle(const std::string& complex_path, const std::string& builtin, int degree,
               bool degree_set, const std::string& format) {
    const ChainComplex c =
        complex_path.empty()
            ? builtin_complex(builtin)
            : io::complex_from_json(io::load_json_file(complex_path), complex_path + "#");
    if (degree_set) {
        const FGAbelianGroup g = c.homology(degree);
        if (format == "table")
            std::cout << "H_" << degree << " = " << g.to_string() << "\n";
        else
            emit(io::to_json(g));
        return 0;
    }
    std::vector<FGAbelianGroup> hs;
    for (int k = 0; k <= c.top_degree(); ++k) hs.push_back(c.homology(k));
    if (format == "table") {
        for (int k = 0; k <= c.top_degree(); ++k)
            std::cout << "H_" << k << " = " << hs[k].to_string() << "\n";
        std::cout << "euler = " << c.euler_characteristic() << "\n";
        return 0;
    }
    json doc;
    json arr = json::array();
    for (const FGAbelianGroup& g : hs) arr.push_back(io::to_json(g));
    doc["homology"] = arr;
    doc["euler"] = c.euler_characteristic();
    emit(doc);
    return 0;
}

json catalog_json(const std::vector<ManifoldProfile>& catalog) {
    json arr = json::array();
    for (const ManifoldProfile& p : catalog) arr.push_back(io::to_json(p));
    return arr;
}

void print_catalog_table(const std::vector<ManifoldProfile>& catalog) {
    for (const ManifoldProfile& p : catalog) {
        std::cout << p.name << "  dim=" << p.dim << "  H=" << group_list(p.homology);
        if (p.embeds_in) std::cout << "  embeds_in=" << *p.embeds_in;
        std::cout << "\n";
    }
}

int run_catalog_list(const std::string& catalog_path, const std::string& format) {
    const std::vector<ManifoldProfile> catalog = load_catalog(catalog_path);
    if (format == "table")
        print_catalog_table(catalog);
    else
        emit(catalog_json(catalog));
    return 0;
}

// lenient re-validation of a raw catalog or profile document: parse failures
// per entry become verdict rows instead of aborting the run
int run_catalog_validate(const std::string& catalog_path, const std::string& profile_path,
                         const std::string& format) {
    std::vector<json> raw;
    std::string prefix;
    if (!profile_path.empty()) {
        raw.push_back(io::load_json_file(profile_path));
        prefix = profile_path + "#";
    } else if (!catalog_path.empty()) {
        const json doc = io::load_json_file(catalog_path);
        if (!doc.is_array())
            throw io::ParseError(catalog_path + "#", "expected an array of profiles");
        raw.assign(doc.begin(), doc.end());
        prefix = catalog_path + "#";
    } else {
        for (const ManifoldProfile& p : default_catalog()) raw.push_back(io::to_json(p));
        prefix = "builtin#";
    }
    json rows = json::array();
    bool all_ok = true;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        std::string name = "entry " + std::to_string(i);
        if (raw[i].is_object() && raw[i].contains("name") && raw[i]["name"].is_string())
            name = raw[i]["name"].get<std::string>();
        try {
            io::profile_from_json(raw[i], prefix + "/" + std::to_string(i));
            rows.push_back(json{{"name", name}, {"valid", true}});
        } catch (const io::ParseError& e) {
            all_ok = false;
            rows.push_back(json{{"name", name}, {"valid", false}, {"detail", e.what()}});
        }
    }
    if (format == "table") {
        for (const json& r : rows) {
            std::cout << (r["valid"].get<bool>() ? "valid   " : "invalid ")
                      << r["name"].get<std::string>();
            if (!r["valid"].get<bool>()) std::cout << "  " << r["detail"].get<std::string>();
            std::cout << "\n";
        }
    } else {
        emit(json{{"profiles", rows}});
    }
    return all_ok ? 0 : 2;
}

int run_catalog_add(const std::string& catalog_path, const std::string& builtin,
                    const std::string& profile_path, const std::string& lemma1_spec,
                    const std::string& out_path, const std::string& format) {
    std::vector<ManifoldProfile> catalog = load_catalog(catalog_path);
    if (!builtin.empty()) catalog.push_back(builtin_profile(builtin));
    if (!profile_path.empty())
        catalog.push_back(
            io::profile_from_json(io::load_json_file(profile_path), profile_path + "#"));
    if (!lemma1_spec.empty()) {
        const auto colon = lemma1_spec.rfind(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("--lemma1 wants NAME:K2");
        std::optional<ManifoldProfile> slot;
        const ManifoldProfile& base = named(catalog, lemma1_spec.substr(0, colon), slot);
        catalog.push_back(
            lemma1_transform(base, static_cast<int>(Int(lemma1_spec.substr(colon + 1)))));
    }
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
        out << io::dump_canonical(catalog_json(catalog));
        return 0;
    }
    if (format == "table")
        print_catalog_table(catalog);
    else
        emit(catalog_json(catalog));
    return 0;
}

int run_infer(const std::string& state_path, int source_dim, bool special,
              const std::string& format) {
    const ReebState w =
        io::state_from_json(io::load_json_file(state_path), state_path + "#");
    const SourceHomologyReport r = infer_source_homology(w, source_dim, special);
    if (format == "table") {
        for (const std::string& h : r.hypotheses) std::cout << "assuming: " << h << "\n";
        std::cout << "degrees 0.." << r.max_degree << (r.inclusive ? "" : " (exclusive top)")
                  << " of the source " << r.source_dim << "-manifold:\n";
        for (std::size_t k = 0; k < r.homology.size(); ++k)
            std::cout << "H_" << k << " = " << r.homology[k].to_string() << "\n";
        return 0;
    }
    emit(io::to_json(r));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact homology engine for normal bubbling operations on Reeb spaces"};
    app.require_subcommand(1);

    std::string format = "json";
    const auto format_check = CLI::IsMember({"json", "table"});

    auto* canon = app.add_subcommand("canon", "canonical form of a group or presentation");
    std::string canon_group, canon_relations;
    canon->add_option("--group", canon_group, "group JSON file to re-canonicalize");
    canon->add_option("--relations", canon_relations,
                      "relations matrix JSON file (rows = generators)");
    canon->add_option("--format", format)->check(format_check);

    auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
    std::string snf_matrix;
    int snf_random = 0, snf_rows = 6, snf_cols = 6, snf_max_entry = 100;
    unsigned long long snf_seed = 0;
    snf->add_option("--matrix", snf_matrix, "matrix JSON file");
    snf->add_option("--random", snf_random, "instead check N random matrices");
    snf->add_option("--rows", snf_rows, "max rows for --random")->check(CLI::PositiveNumber);
    snf->add_option("--cols", snf_cols, "max cols for --random")->check(CLI::PositiveNumber);
    snf->add_option("--max-entry", snf_max_entry, "entry bound for --random")
        ->check(CLI::PositiveNumber);
    snf->add_option("--seed", snf_seed, "seed for --random");
    snf->add_option("--format", format)->check(format_check);

    auto* check = app.add_subcommand("check", "feasibility certificate for a target family");
    std::string check_target, check_thm5, check_thm6;
    unsigned long long order_bound = default_subgroup_order_bound;
    check->add_option("--target", check_target, "target family JSON file")->required();
    check->add_option("--thm5", check_thm5, "prime-power partition JSON file");
    check->add_option("--thm6", check_thm6, "subgroup family JSON file");
    check->add_option("--order-bound", order_bound,
                      "largest torsion order enumerated for subgroup counting");
    check->add_option("--format", format)->check(format_check);

    auto* plan = app.add_subcommand("plan", "construct an op sequence realizing a target");
    std::string plan_target, plan_strategy, plan_catalog, plan_case;
    std::vector<std::string> plan_carriers;
    int max_carriers = 3;
    plan->add_option("--target", plan_target, "target family JSON file")->required();
    plan->add_option("--strategy", plan_strategy, "prop3|prop4|thm2|thm4|search")->required();
    plan->add_option("--catalog", plan_catalog, "catalog JSON file (default: builtin)");
    plan->add_option("--carrier", plan_carriers, "carrier profile name (thm2: one, thm4: two)");
    plan->add_option("--case", plan_case, "thm4 case: 1a|1b|2|3 (default: try all)");
    plan->add_option("--max-carriers", max_carriers, "search: largest carrier multiset");
    plan->add_option("--format", format)->check(format_check);

    auto* bubble = app.add_subcommand("bubble", "replay a plan and report growth");
    std::string bubble_plan, bubble_catalog;
    bubble->add_option("--plan", bubble_plan, "plan JSON file")->required();
    bubble->add_option("--catalog", bubble_catalog, "catalog JSON file for named parts");
    bubble->add_option("--format", format)->check(format_check);

    auto* oracle = app.add_subcommand("oracle", "brute-force homology of a chain complex");
    std::string oracle_complex, oracle_builtin;
    int oracle_degree = 0;
    oracle->add_option("--complex", oracle_complex, "complex JSON file");
    oracle->add_option("--builtin", oracle_builtin, "point | sphere:D | lens:P");
    auto* degree_opt = oracle->add_option("--degree", oracle_degree, "single degree to report");
    oracle->add_option("--format", format)->check(format_check);

    auto* catalog = app.add_subcommand("catalog", "inspect or extend a manifold catalog");
    catalog->require_subcommand(1);
    std::string cat_file, cat_profile, cat_builtin, cat_lemma1, cat_out;
    auto* cat_list = catalog->add_subcommand("list", "print the catalog");
    cat_list->add_option("--catalog", cat_file, "catalog JSON file (default: builtin)");
    cat_list->add_option("--format", format)->check(format_check);
    auto* cat_validate = catalog->add_subcommand("validate", "re-check every profile");
    cat_validate->add_option("--catalog", cat_file, "catalog JSON file (default: builtin)");
    cat_validate->add_option("--profile", cat_profile, "single profile JSON file");
    cat_validate->add_option("--format", format)->check(format_check);
    auto* cat_add = catalog->add_subcommand("add", "append entries and emit the catalog");
    cat_add->add_option("--catalog", cat_file, "catalog JSON file (default: builtin)");
    cat_add->add_option("--builtin", cat_builtin, "sphere:D | lens:P | barden5:Q[,Q] | ...");
    cat_add->add_option("--profile", cat_profile, "profile JSON file to append");
    cat_add->add_option("--lemma1", cat_lemma1, "NAME:K2 — splice an existing entry");
    cat_add->add_option("--out", cat_out, "write the catalog here instead of stdout");
    cat_add->add_option("--format", format)->check(format_check);

    auto* infer = app.add_subcommand("infer", "source homology readable off a state");
    std::string infer_state;
    int source_dim = 0;
    bool special = false;
    infer->add_option("--state", infer_state, "state JSON file")->required();
    infer->add_option("--source-dim", source_dim, "source manifold dimension")->required();
    infer->add_flag("--special-generic", special, "assume all folds are definite");
    infer->add_option("--format", format)->check(format_check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (canon->parsed()) {
            if (canon_group.empty() == canon_relations.empty())
                throw std::invalid_argument("canon wants exactly one of --group, --relations");
            return run_canon(canon_group, canon_relations, format);
        }
        if (snf->parsed()) {
            if (snf_matrix.empty() && snf_random <= 0)
                throw std::invalid_argument("snf wants --matrix or --random");
            return run_snf(snf_matrix, snf_random, snf_rows, snf_cols, snf_max_entry,
                           snf_seed, format);
        }
        if (check->parsed())
            return run_check(check_target, check_thm5, check_thm6, order_bound, format);
        if (plan->parsed())
            return run_plan(plan_target, plan_strategy, plan_catalog, plan_carriers,
                            plan_case, max_carriers, format);
        if (bubble->parsed()) return run_bubble(bubble_plan, bubble_catalog, format);
        if (oracle->parsed()) {
            if (oracle_complex.empty() == oracle_builtin.empty())
                throw std::invalid_argument("oracle wants exactly one of --complex, --builtin");
            return run_oracle(oracle_complex, oracle_builtin, oracle_degree,
                              degree_opt->count() > 0, format);
        }
        if (catalog->parsed()) {
            if (cat_list->parsed()) return run_catalog_list(cat_file, format);
            if (cat_validate->parsed())
                return run_catalog_validate(cat_file, cat_profile, format);
            if (cat_add->parsed())
                return run_catalog_add(cat_file, cat_builtin, cat_profile, cat_lemma1,
                                       cat_out, format);
        }
        if (infer->parsed()) return run_infer(infer_state, source_dim, special, format);
    } catch (const io::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
