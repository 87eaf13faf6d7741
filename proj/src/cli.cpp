#include "actsets/cli.hpp"

#include <array>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "actsets/comparison.hpp"
#include "actsets/oracle.hpp"
#include "actsets/value_function.hpp"

namespace actsets::cli {

namespace {

using nlohmann::ordered_json;

std::string format_double(double v) {
    std::ostringstream os;
    os << std::setprecision(12) << v;
    return os.str();
}

const ActSet& need_dm(const Scenario& s, const std::string& name) {
    const ActSet* dm = s.find_decision_maker(name);
    if (!dm) throw ValidationError("unknown decision maker '" + name + "'");
    return *dm;
}

const InfoStructure& need_info(const Scenario& s, const std::string& name) {
    const InfoStructure* q = s.find_info_structure(name);
    if (!q) throw ValidationError("unknown info structure '" + name + "'");
    return *q;
}

UtilityAct need_act(const Scenario& s, const std::string& name) {
    if (const ActSet* dm = s.find_decision_maker(name)) {
        if (dm->generators().size() != 1)
            throw ValidationError("'" + name + "' has several generators; an act argument needs one");
        return dm->generators().front();
    }
    std::vector<Rational> coords;
    std::istringstream is(name);
    std::string part;
    while (std::getline(is, part, ',')) coords.push_back(parse_rational(part));
    if (static_cast<int>(coords.size()) != s.states.dimension())
        throw ValidationError("act literal '" + name + "' needs " +
                              std::to_string(s.states.dimension()) + " coordinates");
    return UtilityAct(s.states, std::move(coords));
}

ordered_json act_set_json(const ActSet& set) {
    ordered_json gens = ordered_json::array();
    for (const auto& g : set.generators()) {
        ordered_json coords = ordered_json::array();
        for (const auto& c : g.coords()) coords.push_back(format_rational(c));
        gens.push_back(coords);
    }
    return gens;
}

std::string yesno(bool v) { return v ? "yes" : "no"; }

}  // namespace

int execute_query(const Scenario& scenario, const std::vector<std::string>& args,
                  const RunOptions& options, std::ostream& out) {
    if (args.empty()) throw ValidationError("empty query");
    const std::string& cmd = args[0];
    ordered_json report;
    report["command"] = cmd;
    int exit_code = 0;
    std::ostringstream text;

    auto value_of = [&](const ActSet& dm, const InfoStructure& q) -> std::string {
        if (options.numeric_mode) {
            ValueFunction f = sigma(dm);
            ValueFunction numeric = ValueFunction::numeric(
                dm.space(), [f](const std::vector<double>& p) { return f.eval(p); },
                options.tolerance);
            return format_double(voi(numeric, q));
        }
        return format_rational(voi(dm, q));
    };

    if (cmd == "voi") {
        std::string v = value_of(need_dm(scenario, args.at(1)), need_info(scenario, args.at(2)));
        text << v << "\n";
        report["result"] = v;
    } else if (cmd == "relvoi") {
        const ActSet& dm = need_dm(scenario, args.at(1));
        const InfoStructure& fine = need_info(scenario, args.at(2));
        const InfoStructure& coarse = need_info(scenario, args.at(3));
        Rational r = relative_voi(dm, fine, coarse);
        std::string v = options.numeric_mode ? format_double(to_double(r)) : format_rational(r);
        text << v << "\n";
        report["result"] = v;
    } else if (cmd == "fuse" || cmd == "union") {
        const ActSet& a = need_dm(scenario, args.at(1));
        const ActSet& b = need_dm(scenario, args.at(2));
        ActSet r = (cmd == "fuse") ? otimes(a, b) : oplus(a, b);
        text << format_act_set(r) << "\n";
        report["result"] = act_set_json(r);
    } else if (cmd == "stardiff") {
        DioidElement r = star_difference(need_dm(scenario, args.at(1)), need_dm(scenario, args.at(2)));
        if (r.is_empty()) {
            text << "empty\n";
            report["result"] = nullptr;
        } else {
            text << format_act_set(r.set()) << "\n";
            report["result"] = act_set_json(r.set());
        }
    } else if (cmd == "compare") {
        const std::string& mname = args.at(1);
        const std::string& lname = args.at(2);
        ComparisonVerdict v = values_more(need_dm(scenario, mname), need_dm(scenario, lname));
        if (v.holds) {
            text << "verdict: " << mname << " values information more than " << lname << "\n";
            text << "witness: " << format_act_set(*v.witness) << "\n";
        } else {
            text << "verdict: " << mname << " does not value information more than " << lname << "\n";
            if (!v.erosion.is_empty())
                text << "erosion: " << format_act_set(v.erosion.set()) << "\n";
            exit_code = 1;
        }
        text << "certified-by: " << v.evidence << "\n";
        report["holds"] = v.holds;
        report["witness"] = v.holds ? act_set_json(*v.witness) : ordered_json(nullptr);
        report["evidence"] = v.evidence;
    } else if (cmd == "normalfan") {
        const ActSet& dm = need_dm(scenario, args.at(1));
        auto cells = normal_cells(dm);
        ordered_json jcells = ordered_json::array();
        for (const auto& cell : cells) {
            ordered_json jc;
            jc["owner"] = format_act(cell.owner);
            if (dm.space().dimension() == 2) {
                Rational lo = cell.vertices.front()[0], hi = lo;
                for (const auto& v : cell.vertices) {
                    lo = std::min(lo, v[0]);
                    hi = std::max(hi, v[0]);
                }
                text << "cell " << format_act(cell.owner) << ": t in ["
                     << format_rational(lo) << "," << format_rational(hi) << "]\n";
                jc["interval"] = {format_rational(lo), format_rational(hi)};
            } else {
                text << "cell " << format_act(cell.owner) << ": vertices";
                ordered_json verts = ordered_json::array();
                for (const auto& v : cell.vertices) {
                    text << " " << format_belief(v);
                    verts.push_back(format_belief(v));
                }
                text << "\n";
                jc["vertices"] = verts;
            }
            jcells.push_back(jc);
        }
        report["cells"] = jcells;
    } else if (cmd == "check-dioid") {
        oracle::InstanceParams params;
        params.dimension = scenario.states.dimension();
        params.max_generators = 5;
        std::vector<std::array<DioidElement, 3>> triples;
        for (int t = 0; t < options.trials; ++t) {
            const auto base = options.seed + 3 * static_cast<std::uint64_t>(t);
            triples.push_back(
                {DioidElement::of(oracle::random_act_set(scenario.states, base, params)),
                 DioidElement::of(oracle::random_act_set(scenario.states, base + 1, params)),
                 DioidElement::of(oracle::random_act_set(scenario.states, base + 2, params))});
        }
        auto r = check_dioid_laws(triples);
        if (r.ok()) {
            text << "checked " << r.triples_checked << " triples: all dioid laws hold\n";
        } else {
            text << "checked " << r.triples_checked << " triples: " << r.failures.size()
                 << " failures\n";
            for (const auto& f : r.failures) text << "  " << f << "\n";
        }
        report["triples"] = r.triples_checked;
        report["failures"] = r.failures;
    } else if (cmd == "flex-union") {
        auto r = union_flexibility_check(need_dm(scenario, args.at(1)), need_dm(scenario, args.at(2)),
                                         options.trials, options.seed);
        text << "union-values-more: " << yesno(r.more_valuable) << "\n";
        text << "region-convexity-probe: " << (r.region_convex_probe ? "pass" : "violation") << "\n";
        text << "generator-inclusions: " << (r.generator_inclusions ? "pass" : "fail") << "\n";
        text << "fusion-factor: " << (r.fusion_factor_found ? "found" : "none") << "\n";
        text << "sufficient-generator: ";
        if (r.sufficient_generator)
            text << format_act(need_dm(scenario, args.at(1))
                                   .generators()[static_cast<size_t>(*r.sufficient_generator)]);
        else
            text << "none";
        text << "\n";
        report["more_valuable"] = r.more_valuable;
        report["region_convex_probe"] = r.region_convex_probe;
        report["generator_inclusions"] = r.generator_inclusions;
        report["fusion_factor_found"] = r.fusion_factor_found;
        report["sufficient_generator"] =
            r.sufficient_generator ? ordered_json(*r.sufficient_generator) : ordered_json(nullptr);
    } else if (cmd == "flex-little") {
        const ActSet& l = need_dm(scenario, args.at(1));
        UtilityAct a = need_act(scenario, args.at(2));
        auto r = little_flexibility_check(l, a);
        text << "already-contained: " << yesno(r.already_contained) << "\n";
        text << "qualifying-generators:";
        for (int i : r.qualifying) text << " " << format_act(l.generators()[static_cast<size_t>(i)]);
        if (r.qualifying.empty()) text << " none";
        text << "\n";
        text << "holds: " << yesno(r.holds) << "\n";
        report["already_contained"] = r.already_contained;
        report["holds"] = r.holds;
        ordered_json q = ordered_json::array();
        for (int i : r.qualifying) q.push_back(format_act(l.generators()[static_cast<size_t>(i)]));
        report["qualifying"] = q;
        if (r.holds) {
            DioidElement w = r.already_contained
                                 ? DioidElement::of(ActSet::lower_orthant(l.space()))
                                 : little_flexibility_witness(
                                       l, a, l.generators()[static_cast<size_t>(r.qualifying.front())]);
            text << "witness: " << format_act_set(w.set()) << "\n";
            report["witness"] = act_set_json(w.set());
        }
    } else {
        throw ValidationError("unknown command '" + cmd + "'");
    }

    if (options.json)
        out << report.dump() << "\n";
    else
        out << text.str();
    return exit_code;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact calculus for expected-utility decision makers as comprehensive act sets"};
    app.require_subcommand(0, 1);

    std::string scenario_path;
    RunOptions options;
    std::string mode = "exact";
    app.add_option("--scenario", scenario_path, "scenario JSON file")->required();
    app.add_option("--seed", options.seed, "seed for randomized commands");
    app.add_option("--trials", options.trials, "trial count for randomized commands");
    app.add_option("--mode", mode, "exact | numeric (value-function queries only)")
        ->check(CLI::IsMember({"exact", "numeric"}));
    app.add_option("--tol", options.tolerance, "numeric-mode comparison tolerance");
    app.add_flag("--json", options.json, "machine-readable output");

    struct Sub {
        const char* name;
        const char* help;
        int positionals;
    };
    static constexpr std::array<Sub, 10> subs{{
        {"voi", "value of information of a decision maker under a structure", 2},
        {"relvoi", "relative value of information between comparable structures", 3},
        {"fuse", "Minkowski fusion of two decision makers", 2},
        {"union", "hull union of two decision makers", 2},
        {"stardiff", "largest T with L + T inside M", 2},
        {"compare", "does M value information more than L", 2},
        {"normalfan", "cell decomposition of the simplex by attaining generator", 1},
        {"check-dioid", "dioid laws on random triples", 0},
        {"flex-union", "union-flexibility report for L and G", 2},
        {"flex-little", "little-flexibility report for L and one act", 2},
    }};
    std::vector<std::vector<std::string>> positional_store(subs.size());
    for (size_t i = 0; i < subs.size(); ++i) {
        CLI::App* sub = app.add_subcommand(subs[i].name, subs[i].help);
        if (subs[i].positionals > 0)
            sub->add_option("args", positional_store[i], "named arguments")
                ->expected(subs[i].positionals);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        options.numeric_mode = (mode == "numeric");
        Scenario scenario = load_scenario(scenario_path);

        std::vector<std::vector<std::string>> to_run;
        for (size_t i = 0; i < subs.size(); ++i) {
            if (app.got_subcommand(subs[i].name)) {
                std::vector<std::string> args{subs[i].name};
                for (const auto& a : positional_store[i]) args.push_back(a);
                to_run.push_back(std::move(args));
            }
        }
        if (to_run.empty()) to_run = scenario.queries;  // run the embedded query list

        int exit_code = 0;
        for (const auto& args : to_run)
            exit_code = std::max(exit_code, execute_query(scenario, args, options, out));
        return exit_code;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace actsets::cli
