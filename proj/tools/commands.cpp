#include "commands.hpp"

#include "projsys/audit.hpp"
#include "projsys/bounds.hpp"
#include "projsys/constructions.hpp"
#include "projsys/error.hpp"
#include "projsys/integrality.hpp"
#include "projsys/kappa.hpp"
#include "projsys/search.hpp"
#include "verify/acceptance.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace projsys::cli {

using nlohmann::json;

namespace {

std::string str(long long v) { return std::to_string(v); }
std::string str(int v) { return std::to_string(v); }
std::string str(bool v) { return v ? "true" : "false"; }

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
    return out;
}

// TSV cells may not hold tabs or newlines.
std::string cell(std::string s) {
    std::replace(s.begin(), s.end(), '\t', ' ');
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
}

json params_json(const CodeParams& p) {
    return {{"n", p.n},           {"k", p.k},
            {"d", p.d},           {"d_perp", p.d_perp},
            {"s", p.s},           {"t", p.t},
            {"k_perp", p.k_perp}, {"projective", p.projective},
            {"degenerate", p.degenerate}, {"griesmer_met", p.griesmer_met}};
}

const std::vector<std::string> kParamsColumns{"n", "k", "d", "d_perp", "s", "t", "k_perp", "projective", "degenerate",
                                              "griesmer_met"};

std::vector<std::string> params_row(const CodeParams& p) {
    return {str(p.n), str(p.k), str(p.d), str(p.d_perp), str(p.s), str(p.t), str(p.k_perp),
            str(p.projective), str(p.degenerate), str(p.griesmer_met)};
}

json bound_json(const BoundResult& b) {
    json j{{"rule_id", b.rule_id},       {"direction", direction_name(b.direction)},
           {"target", target_name(b.target)}, {"value", b.value},
           {"binding", b.binding},       {"conditions_used", b.conditions_used},
           {"citation", b.citation}};
    if (!b.witness.empty()) j["witness"] = b.witness;
    return j;
}

json query_json(const BoundQuery& q) {
    json j{{"k", q.k}, {"q", q.q}, {"s", q.s}};
    j["t"] = q.t ? json(*q.t) : json(nullptr);
    j["d"] = q.d ? json(*q.d) : json(nullptr);
    return j;
}

std::string value_str(long long v) { return v >= kUnbounded ? "inf" : str(v); }

json kappa_json(const KappaEntry& e) {
    json steps = json::array();
    for (const auto& st : e.steps)
        steps.push_back({{"k", st.k},
                         {"full_length", st.full_length},
                         {"lower", st.lower},
                         {"upper", st.upper >= kUnbounded ? json(nullptr) : json(st.upper)},
                         {"lower_rule", st.lower_rule},
                         {"exclusion", st.exclusion}});
    return {{"s", e.s},
            {"q", e.q},
            {"lower", e.lower},
            {"upper", e.upper ? json(*e.upper) : json(nullptr)},
            {"status", e.status()},
            {"lower_rule", e.lower_rule},
            {"lower_witness", e.lower_witness},
            {"upper_rule", e.upper_rule},
            {"searched", e.searched},
            {"steps", steps},
            {"notes", e.notes}};
}

// "3..6", "2,3,4" or "5".
std::vector<int> parse_values(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        const auto dots = part.find("..");
        try {
            if (dots == std::string::npos) {
                out.push_back(std::stoi(part));
            } else {
                const int lo = std::stoi(part.substr(0, dots));
                const int hi = std::stoi(part.substr(dots + 2));
                if (hi < lo || hi - lo > 10000) throw Error(ErrorCode::Parse, "bad range " + part);
                for (int v = lo; v <= hi; ++v) out.push_back(v);
            }
        } catch (const std::logic_error&) {
            throw Error(ErrorCode::Parse, "bad value list '" + text + "'");
        }
    }
    if (out.empty()) throw Error(ErrorCode::Parse, "empty value list");
    return out;
}

// --range k=3..6 q=2,3,4 s=0..2 [t=1]
std::map<char, std::vector<int>> parse_range(const std::vector<std::string>& items) {
    std::map<char, std::vector<int>> out{{'k', {3, 4, 5, 6}}, {'q', {2, 3, 4, 5, 7, 8, 9}}, {'s', {0, 1, 2}}};
    for (const auto& it : items) {
        if (it.size() < 3 || it[1] != '=' || std::string("kqst").find(it[0]) == std::string::npos)
            throw Error(ErrorCode::Parse, "range item must look like k=3..6, got '" + it + "'");
        out[it[0]] = parse_values(it.substr(2));
    }
    return out;
}

void add_citation(Output& o, const std::string& c) {
    if (!c.empty() && std::find(o.citations.begin(), o.citations.end(), c) == o.citations.end())
        o.citations.push_back(c);
}

// ---- subcommands ----

Output cmd_params(const std::string& in) {
    Output o;
    const ProjectiveSystem ps = read_gm_file(in);
    const CodeParams p = params(ps);
    o.result = params_json(p);
    o.result["q"] = ps.q();
    json wd = json::object();
    for (const auto& [w, c] : weight_distribution(ps)) wd[std::to_string(w)] = c;
    o.result["weight_distribution"] = wd;
    o.table.columns = kParamsColumns;
    o.table.columns.insert(o.table.columns.begin(), "q");
    auto row = params_row(p);
    row.insert(row.begin(), str(ps.q()));
    o.table.rows.push_back(row);
    return o;
}

Output cmd_construct(const std::string& name, const ConstructionArgs& args, const std::string& out_path) {
    Output o;
    const auto id = parse_construction(name);
    if (!id) throw Error(ErrorCode::Parse, "unknown construction '" + name + "'");
    const ProjectiveSystem ps = construct(*id, args);
    const CodeParams p = params(ps);
    o.result = {{"construction", construction_name(*id)}, {"q", ps.q()}, {"params", params_json(p)}};
    if (out_path.empty()) {
        std::ostringstream gm;
        write_gm(gm, ps);
        o.result["gm"] = gm.str();
        o.result["file"] = nullptr;
    } else {
        write_gm_file(out_path, ps);
        o.result["file"] = out_path;
    }
    o.table.columns = {"construction", "q"};
    o.table.columns.insert(o.table.columns.end(), kParamsColumns.begin(), kParamsColumns.end());
    o.table.columns.push_back("file");
    auto row = params_row(p);
    row.insert(row.begin(), {construction_name(*id), str(ps.q())});
    row.push_back(out_path);
    o.table.rows.push_back(row);
    return o;
}

Output cmd_bounds(const BoundQuery& q) {
    Output o;
    validate(q);
    json up = json::array(), low = json::array(), skipped = json::array();
    o.table.columns = {"direction", "target", "rule_id", "value", "binding", "witness", "conditions", "citation"};
    auto emit = [&](const BoundResult& b, json& arr) {
        arr.push_back(bound_json(b));
        o.table.rows.push_back({direction_name(b.direction), target_name(b.target), b.rule_id, value_str(b.value),
                                str(b.binding), b.witness, cell(join(b.conditions_used, "; ")), cell(b.citation)});
        add_citation(o, b.citation);
    };
    for (const auto& b : upper_bounds(q)) emit(b, up);
    for (const auto& b : lower_bounds(q)) emit(b, low);
    for (const auto& s : skipped_upper_bounds(q))
        skipped.push_back({{"rule_id", s.rule_id}, {"failed_condition", s.failed_condition}});
    const long long u = upper_value(q);
    const long long l = lower_value(q);
    o.result = {{"query", query_json(q)},
                {"upper_value", u >= kUnbounded ? json(nullptr) : json(u)},
                {"lower_value", l >= kUnbounded ? json(nullptr) : json(l)},
                {"upper", up},
                {"lower", low},
                {"skipped", skipped}};
    if (u < l) throw Error(ErrorCode::RuleViolation, "lower bound " + str(l) + " exceeds upper bound " + str(u));
    return o;
}

Output cmd_bounds_table(int table, const std::vector<std::string>& range) {
    if (table != 3 && table != 4) throw Error(ErrorCode::Parse, "--table must be 3 or 4");
    auto r = parse_range(range);
    if (table == 4 && !r.count('t')) r['t'] = {1};
    Output o;
    json rules = json::array();
    for (const auto& info : rule_catalog()) {
        if (info.table != table) continue;
        rules.push_back({{"rule_id", info.id},
                         {"direction", direction_name(info.direction)},
                         {"target", target_name(info.target)},
                         {"condition", info.condition},
                         {"formula", info.formula},
                         {"citation", info.citation}});
        add_citation(o, info.citation);
    }
    o.table.columns = {"k", "q", "s", "t", "lower", "lower_rule", "upper", "upper_rule"};
    json rows = json::array();
    const std::vector<int> ts = r.count('t') ? r['t'] : std::vector<int>{-1};
    for (int k : r['k'])
        for (int q : r['q'])
            for (int s : r['s'])
                for (int t : ts) {
                    BoundQuery bq{k, q, s, t >= 0 ? std::optional<int>(t) : std::nullopt, std::nullopt};
                    try {
                        validate(bq);
                    } catch (const Error&) {
                        continue;  // e.g. q not a prime power
                    }
                    const auto ub = binding_upper(bq);
                    const auto lb = binding_lower(bq);
                    const long long u = ub ? ub->value : kUnbounded;
                    const long long l = lower_value(bq);
                    json row{{"k", k},
                             {"q", q},
                             {"s", s},
                             {"t", t >= 0 ? json(t) : json(nullptr)},
                             {"lower", l >= kUnbounded ? json(nullptr) : json(l)},
                             {"lower_rule", lb ? lb->rule_id : ""},
                             {"upper", u >= kUnbounded ? json(nullptr) : json(u)},
                             {"upper_rule", ub ? ub->rule_id : ""}};
                    rows.push_back(row);
                    o.table.rows.push_back({str(k), str(q), str(s), t >= 0 ? str(t) : "", value_str(l),
                                            lb ? lb->rule_id : "", value_str(u), ub ? ub->rule_id : ""});
                }
    o.result = {{"table", table}, {"rules", rules}, {"rows", rows}};
    return o;
}

Output cmd_integrality(long long n, int k, int q, int s, const std::string& mode_text) {
    Output o;
    IntegralityMode mode;
    if (mode_text == "full_length") {
        mode = IntegralityMode::full_length;
    } else if (mode_text == "near_full_length") {
        mode = IntegralityMode::near_full_length;
    } else if (mode_text.empty()) {
        mode = n == integrality_length(IntegralityMode::near_full_length, k, q, s) ? IntegralityMode::near_full_length
                                                                                   : IntegralityMode::full_length;
    } else {
        throw Error(ErrorCode::Parse, "--mode must be full_length or near_full_length");
    }
    const auto reports = integrality(n, k, q, s, mode);
    json qs = json::array();
    o.table.columns = {"j", "name", "raw", "reduced", "integer"};
    for (const auto& rep : reports)
        for (const auto& x : rep.quantities) {
            qs.push_back({{"j", rep.j},
                          {"name", x.name},
                          {"raw", x.raw_string()},
                          {"reduced", x.reduced_string()},
                          {"integer", x.integer}});
            o.table.rows.push_back({str(rep.j), x.name, x.raw_string(), x.reduced_string(), str(x.integer)});
        }
    const auto fail = first_failure(reports, mode);
    o.result = {{"n", n},
                {"k", k},
                {"q", q},
                {"s", s},
                {"mode", mode_name(mode)},
                {"quantities", qs},
                {"all_integer", !fail.has_value()},
                {"first_failure", fail ? json(*fail) : json(nullptr)}};
    add_citation(o, mode == IntegralityMode::full_length ? "Lemma 'full length comb'" : "Lemma 'alpha beta'");
    return o;
}

Output cmd_kappa(int s, int q, bool search, long long budget, int k_limit) {
    Output o;
    KappaEntry e = kappa(s, q);
    if (search) e = refine_kappa(std::move(e), budget, k_limit);
    o.result = kappa_json(e);
    o.table.columns = {"k", "full_length", "lower", "upper", "lower_rule", "exclusion"};
    for (const auto& st : e.steps)
        o.table.rows.push_back({str(st.k), str(st.full_length), value_str(st.lower), value_str(st.upper),
                                st.lower_rule, st.exclusion});
    for (const auto& info : rule_catalog())
        if (info.id == e.lower_rule || info.id == e.upper_rule) add_citation(o, info.citation);
    return o;
}

Output cmd_search(const SearchConfig& cfg, const std::string& out_path) {
    Output o;
    const SearchCertificate cert = max_length(cfg);
    if (cert.witness && !out_path.empty()) write_gm_file(out_path, *cert.witness);
    o.result = {{"k", cert.k},
                {"q", cert.q},
                {"s", cert.s},
                {"n_max", cert.n_max},
                {"exhaustive", cert.exhaustive},
                {"nodes", cert.nodes},
                {"witness_file", cert.witness && !out_path.empty() ? json(out_path) : json(nullptr)},
                {"rules_used", cert.rules_used},
                {"symmetry", cert.symmetry}};
    if (cert.witness) {
        o.result["witness_params"] = params_json(params(*cert.witness));
        const int t = dual_defect_scan(cert);
        o.result["witness_params"]["t"] = t;
    }
    o.table.columns = {"k", "q", "s", "n_max", "exhaustive", "nodes", "witness_file", "rules_used"};
    o.table.rows.push_back({str(cert.k), str(cert.q), str(cert.s), str(cert.n_max), str(cert.exhaustive),
                            str(cert.nodes), cert.witness ? out_path : "", join(cert.rules_used, ",")});
    if (cfg.use_engine_bound)
        if (const auto b = binding_upper(BoundQuery{cfg.k, cfg.q, cfg.s, std::nullopt, std::nullopt}))
            add_citation(o, b->citation);
    return o;
}

Output cmd_verify_tables(std::uint64_t seed, int only, std::ostream& err) {
    Output o;
    const auto results = verify::run_acceptance(seed, &err, only);
    json arr = json::array();
    bool ok = true;
    o.table.columns = {"criterion", "name", "passed", "seconds", "limit_seconds", "detail"};
    for (const auto& r : results) {
        ok = ok && r.passed;
        arr.push_back({{"criterion", r.id},
                       {"name", r.name},
                       {"passed", r.passed},
                       {"seconds", r.seconds},
                       {"limit_seconds", r.limit_seconds},
                       {"detail", r.detail}});
        std::ostringstream secs;
        secs << r.seconds;
        o.table.rows.push_back({str(r.id), r.name, str(r.passed), secs.str(), str(static_cast<long long>(r.limit_seconds)),
                                cell(r.detail)});
    }
    o.result = {{"suite", "paper-tables"}, {"passed", ok}, {"criteria", arr}};
    o.exit_code = ok ? 0 : 1;
    return o;
}

Output cmd_verify_audit(const std::string& in) {
    Output o;
    const ProjectiveSystem ps = read_gm_file(in);
    const AuditReport rep = audit(ps);
    json checks = json::array();
    o.table.columns = {"rule_id", "claim", "passed", "detail"};
    for (const auto& c : rep.checks) {
        checks.push_back({{"rule_id", c.rule_id}, {"claim", c.claim}, {"passed", c.passed}, {"detail", c.detail}});
        o.table.rows.push_back({c.rule_id, cell(c.claim), str(c.passed), cell(c.detail)});
    }
    o.result = {{"suite", "audit"}, {"params", params_json(rep.params)}, {"passed", rep.passed()}, {"checks", checks}};
    o.exit_code = rep.passed() ? 0 : 1;
    return o;
}

void emit(std::ostream& out, const std::string& command, const Output& o, const std::string& format,
          std::uint64_t seed) {
    if (format == "tsv") {
        out << join(o.table.columns, "\t") << "\n";
        for (const auto& row : o.table.rows) out << join(row, "\t") << "\n";
        return;
    }
    json env{{"schema_version", kSchemaVersion},
             {"command", command},
             {"seed", seed},
             {"result", o.result},
             {"citations", o.citations}};
    out << env.dump(2) << "\n";
}

int exit_code_for(ErrorCode c) {
    // Bound or forcing contradictions are verification failures; everything else is bad input.
    return c == ErrorCode::RuleViolation || c == ErrorCode::ForcingViolated ? 1 : 2;
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Projective systems, A^sMDS code bounds and exhaustive search"};
    app.require_subcommand(1);
    std::string format = "json";
    std::uint64_t seed = 0;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
    app.add_option("--seed", seed, "Seed for randomized checks");

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
        sub->add_option("--seed", seed, "Seed for randomized checks");
    };

    std::string in_path, out_path;
    auto* params_cmd = app.add_subcommand("params", "Code parameters of a generator-matrix file");
    params_cmd->add_option("--in", in_path, "Generator-matrix file")->required();
    common(params_cmd);

    std::string name;
    ConstructionArgs cargs;
    auto* construct_cmd = app.add_subcommand("construct", "Build a catalog construction");
    construct_cmd->add_option("name", name, "Construction name")->required();
    construct_cmd->add_option("--q", cargs.q, "Field order")->required();
    construct_cmd->add_option("--k", cargs.k, "Dimension");
    construct_cmd->add_option("--s", cargs.s, "Singleton defect");
    construct_cmd->add_option("--degree", cargs.degree, "Arc degree (denniston)");
    construct_cmd->add_option("--out", out_path, "Output generator-matrix file");
    common(construct_cmd);

    int k = 0, q = 0, s = 0;
    std::optional<int> t, d;
    int table = 0;
    std::vector<std::string> range;
    auto* bounds_cmd = app.add_subcommand("bounds", "Fired bound rules, or a generated bound table");
    bounds_cmd->add_option("--k", k, "Dimension");
    bounds_cmd->add_option("--q", q, "Field order");
    bounds_cmd->add_option("--s", s, "Singleton defect");
    bounds_cmd->add_option("--t", t, "Dual defect");
    bounds_cmd->add_option("--d", d, "Minimum distance");
    bounds_cmd->add_option("--table", table, "Generate table 3 (m^s(k,q)) or 4 (with t)");
    bounds_cmd->add_option("--range", range, "Grid for --table, e.g. k=3..6 q=2,3,4 s=0..2 t=1");
    common(bounds_cmd);

    long long n = 0;
    std::string mode;
    auto* integ_cmd = app.add_subcommand("integrality", "Integrality test at full or near-full length");
    integ_cmd->add_option("--n", n, "Length")->required();
    integ_cmd->add_option("--k", k, "Dimension")->required();
    integ_cmd->add_option("--q", q, "Field order")->required();
    integ_cmd->add_option("--s", s, "Singleton defect")->required();
    integ_cmd->add_option("--mode", mode, "full_length or near_full_length (default: from n)");
    common(integ_cmd);

    bool do_search = false;
    long long budget = kDefaultSearchBudget;
    int k_limit = 8;
    auto* kappa_cmd = app.add_subcommand("kappa", "kappa(s,q), the largest dimension of a length-maximal code");
    kappa_cmd->add_option("--q", q, "Field order")->required();
    kappa_cmd->add_option("--s", s, "Singleton defect")->required();
    kappa_cmd->add_flag("--search", do_search, "Refine the entry by search");
    kappa_cmd->add_option("--budget", budget, "Search node budget per dimension");
    kappa_cmd->add_option("--k-limit", k_limit, "Largest k searched when no exclusion is known");
    common(kappa_cmd);

    SearchConfig cfg;
    bool no_fix = false, no_bound = false;
    std::optional<long long> target;
    auto* search_cmd = app.add_subcommand("search", "Exhaustive search for the longest code");
    search_cmd->add_option("--k", cfg.k, "Dimension")->required();
    search_cmd->add_option("--q", cfg.q, "Field order")->required();
    search_cmd->add_option("--s", cfg.s, "Singleton defect")->required();
    search_cmd->add_option("--budget", cfg.budget, "Node budget");
    search_cmd->add_option("--threads", cfg.threads, "Worker threads (default: PROJSYS_THREADS or all cores)");
    search_cmd->add_option("--max-mult", cfg.max_mult, "Largest point multiplicity (default s+1)");
    search_cmd->add_option("--target", target, "Stop at the first system of this length");
    search_cmd->add_flag("--no-fix-points", no_fix, "Pure lexicographic extension");
    search_cmd->add_flag("--no-engine-bound", no_bound, "Do not stop at the bound-engine maximum");
    search_cmd->add_option("--out", out_path, "Witness generator-matrix file");
    common(search_cmd);

    std::string suite;
    int only = 0;
    auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance battery or audit a file");
    verify_cmd->add_option("--suite", suite, "paper-tables or audit")->required()->check(
        CLI::IsMember({"paper-tables", "audit"}));
    verify_cmd->add_option("--only", only, "Run a single criterion (1-8)");
    verify_cmd->add_option("--in", in_path, "Generator-matrix file for --suite audit");
    common(verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        Output o;
        if (command == "params") {
            o = cmd_params(in_path);
        } else if (command == "construct") {
            o = cmd_construct(name, cargs, out_path);
        } else if (command == "bounds") {
            if (table != 0) {
                o = cmd_bounds_table(table, range);
            } else {
                if (k == 0 || q == 0) throw Error(ErrorCode::Parse, "bounds needs --k and --q (or --table)");
                o = cmd_bounds(BoundQuery{k, q, s, t, d});
            }
        } else if (command == "integrality") {
            o = cmd_integrality(n, k, q, s, mode);
        } else if (command == "kappa") {
            o = cmd_kappa(s, q, do_search, budget, k_limit);
        } else if (command == "search") {
            cfg.fix_points = !no_fix;
            cfg.use_engine_bound = !no_bound;
            cfg.target = target;
            o = cmd_search(cfg, out_path);
        } else if (command == "verify") {
            if (suite == "audit") {
                if (in_path.empty()) throw Error(ErrorCode::Parse, "--suite audit needs --in");
                o = cmd_verify_audit(in_path);
            } else {
                o = cmd_verify_tables(seed, only, err);
            }
        }
        emit(out, command, o, format, seed);
        return o.exit_code;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    }
}

}  // namespace projsys::cli
