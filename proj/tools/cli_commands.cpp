#include "cli_commands.hpp"

#include "sphvar/counterexamples.hpp"
#include "sphvar/error.hpp"
#include "sphvar/geometry.hpp"
#include "sphvar/norms.hpp"
#include "sphvar/operators.hpp"
#include "sphvar/parallel.hpp"
#include "sphvar/probe.hpp"
#include "sphvar/sparse.hpp"
#include "sphvar/variation.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

namespace sphvar::cli {

using nlohmann::ordered_json;

namespace {

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) fail(ErrorCode::Io, "cannot open " + path + " for writing");
    f << text;
    if (!f) fail(ErrorCode::Io, "write to " + path + " failed");
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) fail(ErrorCode::Io, "cannot open " + path);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

ordered_json number_or_null(double v) {
    if (std::isfinite(v)) return v;
    if (std::isinf(v) && v > 0) return "inf";
    return nullptr;
}

void emit(std::ostream& out, const ordered_json& j) { out << j.dump(2) << "\n"; }

// ---- config helpers ----

void reject_unknown(const ordered_json& j, const std::set<std::string>& allowed, const std::string& where) {
    if (!j.is_object()) fail(ErrorCode::InvalidInput, where + " must be a JSON object");
    for (const auto& [key, value] : j.items())
        if (!allowed.count(key)) fail(ErrorCode::InvalidInput, "unknown key '" + key + "' in " + where);
}

double get_exponent(const ordered_json& j, const char* key, double fallback) {
    if (!j.contains(key)) return fallback;
    const auto& v = j.at(key);
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) return parse_exponent(v.get<std::string>());
    fail(ErrorCode::InvalidInput, std::string("key '") + key + "' must be a number or \"inf\"");
}

template <class T> T get_or(const ordered_json& j, const char* key, T fallback) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        fail(ErrorCode::InvalidInput, std::string("key '") + key + "' has the wrong type");
    }
}

GridSpec grid_from(const ordered_json& j) {
    reject_unknown(j, {"d", "n", "L"}, "grid");
    GridSpec s;
    s.d = get_or<int>(j, "d", 2);
    s.n = get_or<int>(j, "n", s.d == 2 ? 256 : (s.d == 3 ? 64 : 32));
    s.L = get_or<double>(j, "L", 8.0);
    s.validate();
    return s;
}

std::vector<Bump> bumps_from(const ordered_json& cfg, int d) {
    std::vector<Bump> out;
    if (cfg.contains("bumps")) {
        for (const auto& b : cfg.at("bumps")) {
            reject_unknown(b, {"center", "radius", "amplitude"}, "bump");
            Bump bump;
            auto c = get_or<std::vector<double>>(b, "center", {});
            if (c.size() != static_cast<std::size_t>(d)) fail(ErrorCode::InvalidInput, "bump center needs d coordinates");
            for (int a = 0; a < d; ++a) bump.center[static_cast<std::size_t>(a)] = c[static_cast<std::size_t>(a)];
            bump.radius = get_or<double>(b, "radius", 1.0);
            bump.amplitude = get_or<double>(b, "amplitude", 1.0);
            if (!(bump.radius > 0.0)) fail(ErrorCode::InvalidInput, "bump radius must be positive");
            out.push_back(bump);
        }
    }
    if (cfg.contains("random_bumps")) {
        const auto& rb = cfg.at("random_bumps");
        reject_unknown(rb, {"count", "seed"}, "random_bumps");
        std::mt19937_64 rng(get_or<std::uint64_t>(rb, "seed", 1));
        auto more = random_bumps(d, get_or<int>(rb, "count", 3), rng);
        out.insert(out.end(), more.begin(), more.end());
    }
    if (out.empty()) fail(ErrorCode::InvalidInput, "input needs 'bumps' or 'random_bumps'");
    return out;
}

ordered_json field_summary(const GridFunction& f) {
    ordered_json j;
    j["max"] = lp_norm(f, kInf);
    j["l1"] = lp_norm(f, 1.0);
    j["l2"] = lp_norm(f, 2.0);
    return j;
}

void maybe_write_binary(const ordered_json& cfg, const GridFunction& f) {
    if (!cfg.contains("output_binary")) return;
    std::string path = cfg.at("output_binary").get<std::string>();
    std::ofstream o(path, std::ios::binary);
    if (!o) fail(ErrorCode::Io, "cannot open " + path + " for writing");
    write_binary(o, f);
}

// ---- subcommands ----

int cmd_region(int d, const std::string& r_text, const std::string& svg, const std::string& json_path,
               std::ostream& out, std::ostream& err) {
    RegionSpec spec = RegionSpec::parse(d, r_text);
    RegionPolygon poly = region(spec);
    if (poly.regime == Regime::Empty) {
        err << "no bounded region for d=" << d << " r=" << spec.r_str() << ": " << poly.interior.source << "\n";
        return kUsage;
    }
    if (!svg.empty()) write_file(svg, region_to_svg(poly));
    std::string text = region_to_json(poly);
    if (json_path.empty()) out << text << "\n";
    else write_file(json_path, text + "\n");
    return kPass;
}

int cmd_classify(int d, const std::string& r_text, const std::string& p_text, const std::string& q_text,
                 std::ostream& out) {
    RegionSpec spec = RegionSpec::parse(d, r_text);
    double p = parse_exponent(p_text), q = parse_exponent(q_text);
    ExponentPoint pt{std::isinf(p) ? 0.0 : 1.0 / p, std::isinf(q) ? 0.0 : 1.0 / q};
    RegionPolygon poly = region(spec);
    MappingStatus st = classify(poly, pt);
    ordered_json j;
    j["d"] = d;
    j["r"] = spec.r_str();
    j["inv_p"] = pt.inv_p;
    j["inv_q"] = pt.inv_q;
    j["regime"] = regime_name(poly.regime);
    j["status"] = status_name(st.kind);
    j["source"] = st.source;
    emit(out, j);
    return kPass;
}

bool parse_double(const std::string& s, double& v) {
    std::string t = s;
    t.erase(0, t.find_first_not_of(" \t\r"));
    t.erase(t.find_last_not_of(" \t\r") + 1);
    if (t.empty()) return false;
    std::size_t used = 0;
    try {
        v = std::stod(t, &used);
    } catch (const std::exception&) {
        return false;
    }
    return used == t.size();
}

SampledPath read_path_csv(const std::string& path) {
    std::istringstream in(read_file(path));
    SampledPath p;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<std::string> cols;
        std::stringstream ls(line);
        std::string c;
        while (std::getline(ls, c, ',')) cols.push_back(c);
        if (cols.size() < 2 || cols.size() > 3)
            fail(ErrorCode::InvalidInput, "line " + std::to_string(lineno) + ": expected t,re[,im]");
        double t, re, im = 0.0;
        bool ok = parse_double(cols[0], t) && parse_double(cols[1], re) && (cols.size() < 3 || parse_double(cols[2], im));
        if (!ok) {
            if (p.size() == 0 && lineno == 1) continue; // header
            fail(ErrorCode::InvalidInput, "line " + std::to_string(lineno) + ": not numeric");
        }
        p.times.push_back(t);
        p.values.emplace_back(re, im);
    }
    p.validate();
    return p;
}

int cmd_variation(const std::string& csv, const std::string& r_text, bool brute, bool norm, const std::string& format,
                  std::ostream& out) {
    double r = parse_exponent(r_text);
    SampledPath path = read_path_csv(csv);
    double v = brute ? variation_bruteforce(path, r) : variation_exact(path, r);
    if (norm) {
        double sup = 0.0;
        for (const auto& a : path.values) sup = std::max(sup, std::abs(a));
        v += sup;
    }
    if (format == "plain") {
        out << std::fixed << std::setprecision(7) << v << "\n";
        return kPass;
    }
    ordered_json j;
    j["r"] = number_or_null(r);
    j["samples"] = path.size();
    j["method"] = brute ? "bruteforce" : "exact";
    j["quantity"] = norm ? "norm" : "seminorm";
    j["value"] = v;
    emit(out, j);
    return kPass;
}

TimeOperator parse_op(const std::string& s) {
    if (s == "average") return TimeOperator::Average;
    if (s == "time_derivative") return TimeOperator::TimeDerivative;
    fail(ErrorCode::InvalidInput, "op must be 'average' or 'time_derivative'");
}

int run_probe(const ordered_json& cfg, std::ostream& out) {
    reject_unknown(cfg,
                   {"task", "d", "p", "q", "r", "jmin", "jmax", "trials", "op", "seed", "L", "grid_factor",
                    "time_factor", "assert_slope_at_most", "output_csv"},
                   "probe config");
    ProbeConfig c;
    c.d = get_or<int>(cfg, "d", c.d);
    c.p = get_exponent(cfg, "p", c.p);
    c.q = get_exponent(cfg, "q", c.q);
    c.r = get_exponent(cfg, "r", c.r);
    c.jmin = get_or<int>(cfg, "jmin", c.jmin);
    c.jmax = get_or<int>(cfg, "jmax", c.jmax);
    c.trials = get_or<int>(cfg, "trials", c.trials);
    c.op = parse_op(get_or<std::string>(cfg, "op", "average"));
    c.seed = get_or<std::uint64_t>(cfg, "seed", c.seed);
    c.L = get_or<double>(cfg, "L", c.L);
    c.grid_factor = get_or<int>(cfg, "grid_factor", c.grid_factor);
    c.time_factor = get_or<int>(cfg, "time_factor", c.time_factor);
    ProbeReport rep = operator_norm_probe(c);

    ordered_json j;
    j["task"] = "probe";
    j["d"] = c.d;
    j["p"] = number_or_null(c.p);
    j["q"] = number_or_null(c.q);
    j["r"] = number_or_null(c.r);
    j["op"] = c.op == TimeOperator::Average ? "average" : "time_derivative";
    j["seed"] = c.seed;
    ordered_json levels = ordered_json::array();
    std::ostringstream csv;
    csv << "j,ratio\n" << std::setprecision(17);
    for (const auto& l : rep.levels) {
        ordered_json e;
        e["j"] = l.j;
        e["n"] = l.spec.n;
        e["time_samples"] = l.time_samples;
        e["ratio"] = l.ratio;
        e["best_trial"] = l.best_trial;
        levels.push_back(e);
        csv << l.j << "," << l.ratio << "\n";
    }
    j["levels"] = levels;
    j["slope"] = rep.fit.slope;
    j["intercept"] = rep.fit.intercept;
    j["rms_residual"] = rep.fit.rms_residual;
    int code = kPass;
    if (cfg.contains("assert_slope_at_most")) {
        double bound = cfg.at("assert_slope_at_most").get<double>();
        bool ok = rep.fit.slope <= bound;
        j["assert_slope_at_most"] = bound;
        j["pass"] = ok;
        if (!ok) code = kFail;
    }
    if (cfg.contains("output_csv")) write_file(cfg.at("output_csv").get<std::string>(), csv.str());
    emit(out, j);
    return code;
}

int run_local(const ordered_json& cfg, std::ostream& out) {
    reject_unknown(cfg, {"task", "grid", "bumps", "random_bumps", "r", "M", "a", "b", "output_binary"},
                   "local_variation config");
    GridSpec spec = grid_from(cfg.value("grid", ordered_json::object()));
    GridFunction f = sample_bumps(spec, bumps_from(cfg, spec.d));
    double r = get_exponent(cfg, "r", 2.0);
    int M = get_or<int>(cfg, "M", kDefaultTimeSamples);
    double a = get_or<double>(cfg, "a", 1.0), b = get_or<double>(cfg, "b", 2.0);
    GridFunction v = local_variation_operator(f, r, M, a, b);
    maybe_write_binary(cfg, v);
    ordered_json j;
    j["task"] = "local_variation";
    j["r"] = number_or_null(r);
    j["M"] = M;
    j["input"] = field_summary(f);
    j["variation"] = field_summary(v);
    emit(out, j);
    return kPass;
}

int run_global(const ordered_json& cfg, std::ostream& out) {
    reject_unknown(cfg, {"task", "grid", "bumps", "random_bumps", "r", "kmin", "kmax", "M", "output_binary"},
                   "global_variation config");
    GridSpec spec = grid_from(cfg.value("grid", ordered_json::object()));
    GridFunction f = sample_bumps(spec, bumps_from(cfg, spec.d));
    double r = get_exponent(cfg, "r", 2.0);
    int kmin = get_or<int>(cfg, "kmin", -3), kmax = get_or<int>(cfg, "kmax", 1);
    int M = get_or<int>(cfg, "M", kDefaultTimeSamples);
    GlobalVariation g = global_variation_operator(f, r, kmin, kmax, M);
    maybe_write_binary(cfg, g.pooled);
    bool holds = true;
    for (std::size_t i = 0; i < g.pooled.size(); ++i)
        if (g.pooled[i].real() > g.bound[i].real() * (1.0 + 1e-12) + 1e-300) holds = false;
    ordered_json j;
    j["task"] = "global_variation";
    j["r"] = number_or_null(r);
    j["kmin"] = kmin;
    j["kmax"] = kmax;
    j["M"] = M;
    j["input"] = field_summary(f);
    j["pooled"] = field_summary(g.pooled);
    j["long"] = field_summary(g.long_part);
    j["short"] = field_summary(g.short_part);
    j["bound"] = field_summary(g.bound);
    j["bound_holds"] = holds;
    emit(out, j);
    return holds ? kPass : kFail;
}

int cmd_operator(const std::string& config_path, std::ostream& out) {
    ordered_json cfg;
    try {
        cfg = ordered_json::parse(read_file(config_path));
    } catch (const nlohmann::json::parse_error& e) {
        fail(ErrorCode::InvalidInput, std::string("config is not valid JSON: ") + e.what());
    }
    if (!cfg.is_object() || !cfg.contains("task")) fail(ErrorCode::InvalidInput, "config needs a 'task'");
    std::string task = cfg.at("task").get<std::string>();
    if (task == "probe") return run_probe(cfg, out);
    if (task == "local_variation") return run_local(cfg, out);
    if (task == "global_variation") return run_global(cfg, out);
    fail(ErrorCode::InvalidInput, "unknown task '" + task + "'");
}

struct CounterexampleArgs {
    std::string kind = "AlternatingShells";
    int d = 2;
    std::string p = "2", q = "2", r = "2";
    int jmin = 3, jmax = 6, M = 0, region_samples = 12;
    std::string csv, json;
};

int cmd_counterexample(const CounterexampleArgs& a, std::ostream& out) {
    ScalingOptions o;
    o.jmin = a.jmin;
    o.jmax = a.jmax;
    o.p = parse_exponent(a.p);
    o.q = parse_exponent(a.q);
    o.r = parse_exponent(a.r);
    o.M = a.M;
    o.region_samples = a.region_samples;
    ScalingReport rep = run_scaling(parse_example_kind(a.kind), a.d, o);

    ordered_json j;
    j["kind"] = example_name(rep.kind);
    j["d"] = rep.d;
    j["p"] = number_or_null(rep.p);
    j["q"] = number_or_null(rep.q);
    j["r"] = number_or_null(rep.r);
    ordered_json levels = ordered_json::array();
    std::ostringstream csv;
    csv << "j,ratio\n" << std::setprecision(17);
    for (std::size_t i = 0; i < rep.j.size(); ++i) {
        ordered_json e;
        e["j"] = rep.j[i];
        e["time_samples"] = rep.time_samples[i];
        e["numerator"] = rep.numerator[i];
        e["f_norm"] = rep.f_norm[i];
        e["ratio"] = rep.ratio[i];
        levels.push_back(e);
        csv << rep.j[i] << "," << rep.ratio[i] << "\n";
    }
    j["levels"] = levels;
    j["slope"] = rep.fit.slope;
    j["intercept"] = rep.fit.intercept;
    j["rms_residual"] = rep.fit.rms_residual;
    j["predicted"] = number_or_null(rep.predicted);
    j["tolerance"] = rep.tolerance;
    j["pass"] = rep.pass;
    if (!a.csv.empty()) write_file(a.csv, csv.str());
    if (!a.json.empty()) write_file(a.json, j.dump(2) + "\n");
    emit(out, j);
    return rep.pass ? kPass : kFail;
}

struct SparseArgs {
    int d = 2;
    int n = 128;
    std::string r = "3";
    std::string p, q;
    int pairs = 100;
    std::uint64_t seed = 1;
    int kmin = -3, kmax = 1, M = 17;
    double threshold = 4.0;
    std::string family_json;
};

// Centroid of the polygon vertices: interior because the region is convex.
ExponentPoint default_point(const RegionPolygon& poly) {
    ExponentPoint c{0.0, 0.0};
    if (poly.vertices.empty()) fail(ErrorCode::UnsupportedRegime, "no bounded region to pick (p, q) from");
    for (const auto& v : poly.vertices) {
        auto pt = v.point.to_double();
        c.inv_p += pt.inv_p;
        c.inv_q += pt.inv_q;
    }
    c.inv_p /= static_cast<double>(poly.vertices.size());
    c.inv_q /= static_cast<double>(poly.vertices.size());
    return c;
}

int cmd_sparse(const SparseArgs& a, std::ostream& out) {
    RegionSpec rs = RegionSpec::parse(a.d, a.r);
    RegionPolygon poly = region(rs);
    double p, q;
    if (a.p.empty() != a.q.empty()) fail(ErrorCode::InvalidInput, "give both --p and --q or neither");
    if (a.p.empty()) {
        ExponentPoint c = default_point(poly);
        p = 1.0 / c.inv_p;
        q = 1.0 / c.inv_q;
    } else {
        p = parse_exponent(a.p);
        q = parse_exponent(a.q);
    }
    GridSpec spec{a.d, a.n, 8.0};
    spec.validate();
    DominationOptions opt;
    opt.kmin = a.kmin;
    opt.kmax = a.kmax;
    opt.M = a.M;
    opt.sparse.threshold = a.threshold;

    ordered_json ratios = ordered_json::array();
    bool all_sparse = true;
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    std::string first_violation;
    for (int i = 0; i < a.pairs; ++i) {
        std::seed_seq seq{static_cast<std::uint32_t>(a.seed), static_cast<std::uint32_t>(a.seed >> 32),
                          static_cast<std::uint32_t>(i)};
        std::mt19937_64 rng(seq);
        int c1 = 1 + static_cast<int>(rng() % 3), c2 = 1 + static_cast<int>(rng() % 3);
        auto b1 = random_bumps(a.d, c1, rng);
        auto b2 = random_bumps(a.d, c2, rng);
        GridFunction f1 = sample_bumps(spec, b1), f2 = sample_bumps(spec, b2);
        SparseFamily fam = build_sparse_family(f1, f2, p, q, opt.sparse);
        SparsityCheck chk = verify_sparsity(fam);
        if (!chk.ok && all_sparse) first_violation = "pair " + std::to_string(i) + ": " + chk.violation;
        all_sparse = all_sparse && chk.ok;
        if (i == 0 && !a.family_json.empty()) write_file(a.family_json, family_to_json(fam) + "\n");
        DominationResult dom = domination_check(f1, f2, p, q, rs, opt);
        lo = std::min(lo, dom.ratio);
        hi = std::max(hi, dom.ratio);
        ordered_json e;
        e["pair"] = i;
        e["cubes"] = fam.cubes.size();
        e["sparse"] = chk.ok;
        e["ratio"] = dom.ratio;
        ratios.push_back(e);
    }
    ordered_json j;
    j["d"] = a.d;
    j["n"] = a.n;
    j["r"] = rs.r_str();
    j["p"] = p;
    j["q"] = q;
    j["pairs"] = a.pairs;
    j["seed"] = a.seed;
    j["all_sparse"] = all_sparse;
    if (!all_sparse) j["violation"] = first_violation;
    j["min_ratio"] = a.pairs > 0 ? number_or_null(lo) : ordered_json(nullptr);
    j["max_ratio"] = hi;
    j["results"] = ratios;
    emit(out, j);
    return all_sparse ? kPass : kFail;
}

} // namespace

double parse_exponent(const std::string& text) {
    if (text == "inf" || text == "infinity" || text == "Inf") return std::numeric_limits<double>::infinity();
    double v;
    if (!parse_double(text, v) || !(v > 0.0) || !std::isfinite(v))
        fail(ErrorCode::InvalidExponent, "exponent must be a positive number or 'inf', got '" + text + "'");
    return v;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spherical means variation laboratory"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "Worker threads (overrides SPHVAR_THREADS)")->check(CLI::PositiveNumber);

    int region_d = 3;
    std::string region_r, region_svg, region_json;
    auto* reg = app.add_subcommand("region", "Exponent region for V_r A as JSON, optionally SVG");
    reg->add_option("--d", region_d, "Dimension")->required();
    reg->add_option("--r", region_r, "Variation exponent (number, fraction or inf)")->required();
    reg->add_option("--svg", region_svg, "Write the SVG figure here");
    reg->add_option("--json", region_json, "Write JSON here instead of stdout");

    int cls_d = 3;
    std::string cls_r, cls_p, cls_q;
    auto* cls = app.add_subcommand("classify", "Mapping status of L^p -> L^q for V_r A");
    cls->add_option("--d", cls_d, "Dimension")->required();
    cls->add_option("--r", cls_r, "Variation exponent")->required();
    cls->add_option("--p", cls_p, "Source exponent")->required();
    cls->add_option("--q", cls_q, "Target exponent")->required();

    std::string var_csv, var_r, var_format = "json";
    bool var_brute = false, var_norm = false;
    auto* var = app.add_subcommand("variation", "r-variation of a sampled path read from CSV (t,re[,im])");
    var->add_option("--csv", var_csv, "Input CSV")->required();
    var->add_option("--r", var_r, "Variation exponent")->required();
    var->add_flag("--bruteforce", var_brute, "Enumerate all subsequences (N <= 16)");
    var->add_flag("--norm", var_norm, "Add sup |a| (full V_r norm)");
    var->add_option("--format", var_format, "json or plain")->check(CLI::IsMember({"json", "plain"}));

    std::string op_config;
    auto* op = app.add_subcommand("operator", "Run an operator experiment from a JSON config");
    op->add_option("--config", op_config, "Experiment config (see tools/experiment.schema.json)")->required();

    CounterexampleArgs ce;
    auto* cex = app.add_subcommand("counterexample", "Scaling harness for one counterexample family");
    cex->add_option("--kind", ce.kind, "Stein, Shell0, Knapp, Disks, KnappPlates or AlternatingShells");
    cex->add_option("--d", ce.d, "Dimension (2 or 3)");
    cex->add_option("--p", ce.p, "Source exponent");
    cex->add_option("--q", ce.q, "Target exponent");
    cex->add_option("--r", ce.r, "Variation exponent");
    cex->add_option("--jmin", ce.jmin, "Smallest level");
    cex->add_option("--jmax", ce.jmax, "Largest level");
    cex->add_option("--M", ce.M, "Time samples on [1,2]; 0 picks 2^(j+5)+1");
    cex->add_option("--region-samples", ce.region_samples, "Midpoint cells per axis of the evaluation region");
    cex->add_option("--csv", ce.csv, "Write j,ratio CSV here");
    cex->add_option("--json", ce.json, "Also write the JSON report here");

    SparseArgs sp;
    auto* spc = app.add_subcommand("sparse-check", "Sparse families and domination ratios on random bump pairs");
    spc->add_option("--d", sp.d, "Dimension");
    spc->add_option("--n", sp.n, "Grid points per axis");
    spc->add_option("--r", sp.r, "Variation exponent");
    spc->add_option("--p", sp.p, "Source exponent (default: region centroid)");
    spc->add_option("--q", sp.q, "Target exponent (default: region centroid)");
    spc->add_option("--pairs", sp.pairs, "Number of random pairs");
    spc->add_option("--seed", sp.seed, "Seed");
    spc->add_option("--kmin", sp.kmin, "Smallest dyadic scale 2^k");
    spc->add_option("--kmax", sp.kmax, "Largest dyadic scale 2^k");
    spc->add_option("--M", sp.M, "Time samples per dyadic interval");
    spc->add_option("--threshold", sp.threshold, "Stopping threshold");
    spc->add_option("--family-json", sp.family_json, "Write the family of pair 0 here");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kPass : kUsage;
    }
    if (threads > 0) set_thread_count(threads);

    try {
        if (*reg) return cmd_region(region_d, region_r, region_svg, region_json, out, err);
        if (*cls) return cmd_classify(cls_d, cls_r, cls_p, cls_q, out);
        if (*var) return cmd_variation(var_csv, var_r, var_brute, var_norm, var_format, out);
        if (*op) return cmd_operator(op_config, out);
        if (*cex) return cmd_counterexample(ce, out);
        if (*spc) return cmd_sparse(sp, out);
    } catch (const Error& e) {
        err << "error [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
        return kUsage;
    } catch (const nlohmann::json::exception& e) {
        err << "error [InvalidInput]: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

} // namespace sphvar::cli
