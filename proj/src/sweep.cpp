#include "orisfso/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "orisfso/mc.hpp"
#include "orisfso/specfun.hpp"

namespace orisfso::sweep {

using nlohmann::json;

const char* variable_name(Variable v) {
    switch (v) {
        case Variable::SnrDb: return "snr_db";
        case Variable::A1: return "a1";
        case Variable::B1: return "B1";
        case Variable::Dz2: return "d_z2";
        case Variable::SwaySigma: return "sway_sigma";
    }
    return "?";
}

const char* method_name(RunMethod m) {
    switch (m) {
        case RunMethod::Analytic: return "analytic";
        case RunMethod::Asymptotic: return "asymptotic";
        case RunMethod::Mc: return "mc";
        case RunMethod::Oma: return "oma";
    }
    return "?";
}

static const char* receiver_name(outage::Receiver r) {
    switch (r) {
        case outage::Receiver::Rx1: return "rx1";
        case outage::Receiver::Rx2: return "rx2";
        case outage::Receiver::Single: return "single";
    }
    return "?";
}

Scenario default_scenario() {
    Scenario sc;
    auto& g1 = sc.rx1;
    g1.d_to = 500.0;
    g1.d_or = 500.0;
    g1.phi_p = M_PI / 3.0;
    g1.phi_r = M_PI / 6.0;
    g1.l_d = 0.05;
    g1.w_dz = 0.45;
    g1.sigma_s = g1.sigma_r = g1.sigma_p = 0.375 * g1.l_d;
    g1.wavelength = 1550e-9;
    g1.Cn2 = 5e-14;
    g1.sigma_atm = 4.3e-4;
    g1.rho = 0.8;

    sc.rx2 = g1;
    sc.rx2.d_to = 400.0;
    sc.rx2.d_or = 400.0;
    sc.rx2.phi_r = M_PI / 4.0;
    sc.rx2.w_dz = 0.35;
    return sc;
}

// ---------------------------------------------------------------------------
// JSON

static void reject_unknown(const json& obj, std::initializer_list<const char*> known,
                           const std::string& where) {
    for (const auto& item : obj.items()) {
        bool ok = false;
        for (const char* k : known)
            if (item.key() == k) {
                ok = true;
                break;
            }
        if (!ok)
            throw std::invalid_argument(where + "." + item.key() + ": unknown key");
    }
}

static void get_num(const json& obj, const char* key, double& out, const std::string& where) {
    if (!obj.contains(key)) return;
    const auto& v = obj.at(key);
    if (!v.is_number())
        throw std::invalid_argument(where + "." + key + ": expected a number");
    out = v.get<double>();
}

static void get_opt(const json& obj, const char* key, std::optional<double>& out,
                    const std::string& where) {
    if (!obj.contains(key)) return;
    const auto& v = obj.at(key);
    if (v.is_null()) {
        out.reset();  // explicit null clears a default
        return;
    }
    if (!v.is_number())
        throw std::invalid_argument(where + "." + key + ": expected a number or null");
    out = v.get<double>();
}

static void parse_geometry(const json& obj, channel::GeometryConfig& g,
                           const std::string& where) {
    reject_unknown(obj,
                   {"d_to", "d_or", "phi_p", "phi_r", "l_d", "w_dz", "w0", "sigma_s",
                    "sigma_r", "sigma_p", "wavelength", "Cn2", "sigma_atm", "rho",
                    "A0_override", "rytov_sq_override"},
                   where);
    get_num(obj, "d_to", g.d_to, where);
    get_num(obj, "d_or", g.d_or, where);
    get_num(obj, "phi_p", g.phi_p, where);
    get_num(obj, "phi_r", g.phi_r, where);
    get_num(obj, "l_d", g.l_d, where);
    get_opt(obj, "w_dz", g.w_dz, where);
    get_opt(obj, "w0", g.w0, where);
    get_num(obj, "sigma_s", g.sigma_s, where);
    get_num(obj, "sigma_r", g.sigma_r, where);
    get_num(obj, "sigma_p", g.sigma_p, where);
    get_num(obj, "wavelength", g.wavelength, where);
    get_num(obj, "Cn2", g.Cn2, where);
    get_num(obj, "sigma_atm", g.sigma_atm, where);
    get_num(obj, "rho", g.rho, where);
    get_opt(obj, "A0_override", g.A0_override, where);
    get_opt(obj, "rytov_sq_override", g.rytov_sq_override, where);
}

static Variable parse_variable(const std::string& s) {
    for (Variable v : {Variable::SnrDb, Variable::A1, Variable::B1, Variable::Dz2,
                       Variable::SwaySigma})
        if (s == variable_name(v)) return v;
    throw std::invalid_argument("sweep.variable: unknown variable '" + s + "'");
}

static RunMethod parse_method(const std::string& s) {
    for (RunMethod m :
         {RunMethod::Analytic, RunMethod::Asymptotic, RunMethod::Mc, RunMethod::Oma})
        if (s == method_name(m)) return m;
    throw std::invalid_argument("methods: unknown method '" + s + "'");
}

static Scenario parse_checked(const json& root);

Scenario parse_scenario(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("scenario JSON: ") + e.what());
    }
    try {
        return parse_checked(root);
    } catch (const json::exception& e) {
        // wrong value type somewhere nlohmann checks before we do
        throw std::invalid_argument(std::string("scenario JSON: ") + e.what());
    }
}

static const json& want_obj(const json& root, const char* key) {
    const auto& v = root.at(key);
    if (!v.is_object())
        throw std::invalid_argument(std::string(key) + ": expected an object");
    return v;
}

static Scenario parse_checked(const json& root) {
    if (!root.is_object()) throw std::invalid_argument("scenario JSON: expected an object");
    reject_unknown(root,
                   {"rx1", "rx2", "noma", "sweep", "methods", "receivers",
                    "single_receiver", "mc_trials", "seed", "series_terms"},
                   "scenario");

    Scenario sc = default_scenario();
    if (root.contains("rx1")) parse_geometry(want_obj(root, "rx1"), sc.rx1, "rx1");
    if (root.contains("rx2")) parse_geometry(want_obj(root, "rx2"), sc.rx2, "rx2");

    if (root.contains("noma")) {
        const auto& n = want_obj(root, "noma");
        reject_unknown(n, {"a1", "a2", "B1", "B2", "R1", "R2", "snr_db"}, "noma");
        get_num(n, "a1", sc.noma.a1, "noma");
        get_num(n, "a2", sc.noma.a2, "noma");
        get_num(n, "B1", sc.noma.B1, "noma");
        get_num(n, "B2", sc.noma.B2, "noma");
        get_num(n, "R1", sc.noma.R1, "noma");
        get_num(n, "R2", sc.noma.R2, "noma");
        get_num(n, "snr_db", sc.noma.snr_db, "noma");
    }
    if (root.contains("sweep")) {
        const auto& s = want_obj(root, "sweep");
        reject_unknown(s, {"variable", "from", "to", "steps"}, "sweep");
        if (s.contains("variable"))
            sc.sweep.variable = parse_variable(s.at("variable").get<std::string>());
        get_num(s, "from", sc.sweep.from, "sweep");
        get_num(s, "to", sc.sweep.to, "sweep");
        if (s.contains("steps")) {
            if (!s.at("steps").is_number_integer())
                throw std::invalid_argument("sweep.steps: expected an integer");
            sc.sweep.steps = s.at("steps").get<int>();
        }
    }
    if (root.contains("methods")) {
        sc.methods.clear();
        for (const auto& m : root.at("methods"))
            sc.methods.push_back(parse_method(m.get<std::string>()));
    }
    if (root.contains("receivers")) {
        sc.receivers.clear();
        for (const auto& r : root.at("receivers")) {
            const std::string s = r.get<std::string>();
            if (s == "rx1")
                sc.receivers.push_back(outage::Receiver::Rx1);
            else if (s == "rx2")
                sc.receivers.push_back(outage::Receiver::Rx2);
            else
                throw std::invalid_argument("receivers: unknown receiver '" + s + "'");
        }
    }
    if (root.contains("single_receiver"))
        sc.single_receiver = root.at("single_receiver").get<bool>();
    if (root.contains("mc_trials")) sc.mc_trials = root.at("mc_trials").get<std::uint64_t>();
    if (root.contains("seed")) sc.seed = root.at("seed").get<std::uint64_t>();
    if (root.contains("series_terms")) sc.series_terms = root.at("series_terms").get<int>();
    return sc;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

static json geometry_to_json(const channel::GeometryConfig& g) {
    // optionals are written as null when unset: an absent key would fall back
    // to the baseline default on re-parse, losing a deliberately cleared field
    auto opt = [](const std::optional<double>& v) {
        return v ? json(*v) : json(nullptr);
    };
    json o;
    o["d_to"] = g.d_to;
    o["d_or"] = g.d_or;
    o["phi_p"] = g.phi_p;
    o["phi_r"] = g.phi_r;
    o["l_d"] = g.l_d;
    o["w_dz"] = opt(g.w_dz);
    o["w0"] = opt(g.w0);
    o["sigma_s"] = g.sigma_s;
    o["sigma_r"] = g.sigma_r;
    o["sigma_p"] = g.sigma_p;
    o["wavelength"] = g.wavelength;
    o["Cn2"] = g.Cn2;
    o["sigma_atm"] = g.sigma_atm;
    o["rho"] = g.rho;
    o["A0_override"] = opt(g.A0_override);
    o["rytov_sq_override"] = opt(g.rytov_sq_override);
    return o;
}

std::string scenario_to_json(const Scenario& sc) {
    json root;
    root["rx1"] = geometry_to_json(sc.rx1);
    root["rx2"] = geometry_to_json(sc.rx2);
    root["noma"] = {{"a1", sc.noma.a1},  {"a2", sc.noma.a2}, {"B1", sc.noma.B1},
                    {"B2", sc.noma.B2},  {"R1", sc.noma.R1}, {"R2", sc.noma.R2},
                    {"snr_db", sc.noma.snr_db}};
    root["sweep"] = {{"variable", variable_name(sc.sweep.variable)},
                     {"from", sc.sweep.from},
                     {"to", sc.sweep.to},
                     {"steps", sc.sweep.steps}};
    auto ms = json::array();
    for (RunMethod m : sc.methods) ms.push_back(method_name(m));
    root["methods"] = ms;
    auto rs = json::array();
    for (outage::Receiver r : sc.receivers) rs.push_back(receiver_name(r));
    root["receivers"] = rs;
    root["single_receiver"] = sc.single_receiver;
    root["mc_trials"] = sc.mc_trials;
    root["seed"] = sc.seed;
    root["series_terms"] = sc.series_terms;
    return root.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Validation

static void check_geometry(const channel::GeometryConfig& g, const char* name,
                           ValidationReport& rep) {
    try {
        channel::validate(g);
    } catch (const std::invalid_argument& e) {
        rep.issues.push_back({name, e.what()});
        return;
    }
    ReceiverReport rr;
    rr.name = name;
    rr.params = channel::derive(g);
    const auto sp = mc::SamplerParams::from_channel(rr.params);
    rr.lambda1 = sp.lambda1;
    rr.lambda2 = sp.lambda2;
    rep.receivers.push_back(std::move(rr));
}

ValidationReport validate_scenario(const Scenario& sc) {
    ValidationReport rep;
    auto issue = [&](const char* field, const std::string& msg) {
        rep.issues.push_back({field, msg});
    };

    check_geometry(sc.rx1, sc.single_receiver ? "single" : "rx1", rep);
    if (!sc.single_receiver) check_geometry(sc.rx2, "rx2", rep);

    try {
        outage::validate(sc.noma);
    } catch (const std::invalid_argument& e) {
        issue("noma", e.what());
    }
    rep.gamma_th1 = outage::threshold(sc.noma.R1);
    rep.gamma_th2 = outage::threshold(sc.noma.R2);

    const auto& sw = sc.sweep;
    if (!std::isfinite(sw.from) || !std::isfinite(sw.to))
        issue("sweep", "bounds must be finite");
    else if (sw.from == sw.to)
        issue("sweep", "empty range (from == to)");
    if (sw.steps < 2) issue("sweep.steps", "need at least 2 points");

    const double lo = std::min(sw.from, sw.to), hi = std::max(sw.from, sw.to);
    switch (sw.variable) {
        case Variable::SnrDb:
            break;
        case Variable::A1:
            if (lo <= 0.5 || hi >= 1.0)
                issue("sweep", "a1 values must stay inside (0.5, 1)");
            break;
        case Variable::B1:
            if (lo <= 0.0 || hi >= 1.0)
                issue("sweep", "B1 values must stay inside (0, 1)");
            break;
        case Variable::Dz2:
            if (sc.single_receiver)
                issue("sweep.variable", "d_z2 varies rx2 but single_receiver is set");
            else if (lo <= sc.rx2.d_to)
                issue("sweep", "d_z2 values must exceed rx2.d_to");
            break;
        case Variable::SwaySigma:
            if (lo <= 0.0) issue("sweep", "sway values must be positive");
            break;
    }

    if (sc.methods.empty()) issue("methods", "need at least one method");
    if (sc.single_receiver) {
        for (RunMethod m : sc.methods)
            if (m == RunMethod::Oma)
                issue("methods", "oma needs the two-receiver layout");
    } else if (sc.receivers.empty()) {
        issue("receivers", "need at least one receiver");
    }
    bool wants_mc = false;
    for (RunMethod m : sc.methods) wants_mc |= m == RunMethod::Mc;
    if (wants_mc && sc.mc_trials < 1) issue("mc_trials", "need at least one trial");
    if (sc.series_terms < 1) issue("series_terms", "need at least one term");
    return rep;
}

std::string format_report(const ValidationReport& rep) {
    std::ostringstream os;
    char buf[64];
    auto num = [&](double x) {
        std::snprintf(buf, sizeof buf, "%.10g", x);
        return std::string(buf);
    };
    if (rep.ok())
        os << "all checks passed\n";
    else
        for (const auto& is : rep.issues) os << "violation  " << is.field << ": " << is.message << "\n";
    for (const auto& rr : rep.receivers) {
        const auto& p = rr.params;
        os << rr.name << ":\n"
           << "  alpha=" << num(p.alpha) << "  beta=" << num(p.beta)
           << "  rytov_sq=" << num(p.rytov_sq) << "\n"
           << "  omega=" << num(p.omega) << "  q=" << num(p.q) << "  c=" << num(p.c)
           << "  v=" << num(p.v) << "\n"
           << "  A0=" << num(p.A0) << "  h_l=" << num(p.h_l) << "  w=" << num(p.w)
           << "\n"
           << "  lambda1=" << num(rr.lambda1) << "  lambda2=" << num(rr.lambda2)
           << "\n";
    }
    os << "gamma_th1=" << num(rep.gamma_th1) << "  gamma_th2=" << num(rep.gamma_th2)
       << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Execution

std::vector<double> grid(const SweepSpec& spec) {
    std::vector<double> xs(spec.steps);
    for (int i = 0; i < spec.steps; ++i)
        xs[i] = spec.from + (spec.to - spec.from) * double(i) / double(spec.steps - 1);
    return xs;
}

static Scenario at_point(Scenario sc, double x) {
    switch (sc.sweep.variable) {
        case Variable::SnrDb:
            sc.noma.snr_db = x;
            break;
        case Variable::A1:
            sc.noma.a1 = x;
            sc.noma.a2 = 1.0 - x;
            break;
        case Variable::B1:
            sc.noma.B1 = x;
            sc.noma.B2 = 1.0 - x;
            break;
        case Variable::Dz2:
            sc.rx2.d_or = x - sc.rx2.d_to;
            break;
        case Variable::SwaySigma:
            sc.rx1.sigma_s = sc.rx1.sigma_r = sc.rx1.sigma_p = x;
            sc.rx2.sigma_s = sc.rx2.sigma_r = sc.rx2.sigma_p = x;
            break;
    }
    return sc;
}

static std::size_t pool_size(std::size_t n_jobs) {
    if (const char* env = std::getenv("ORISFSO_THREADS")) {
        const long k = std::strtol(env, nullptr, 10);
        if (k >= 1) return std::min<std::size_t>(k, n_jobs);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return std::min<std::size_t>(hw ? hw : 1, n_jobs);
}

static bool guard_violated(const outage::NomaConfig& cfg) {
    return !(cfg.a1 / cfg.a2 > outage::threshold(cfg.R1));
}

// every row of one sweep point, in deterministic (receiver, method) order
static void eval_point(const Scenario& base, double x, std::uint64_t point_seed,
                       std::vector<Row>& out, int& failures) {
    const Scenario pt = at_point(base, x);
    std::vector<outage::Receiver> recvs;
    if (pt.single_receiver)
        recvs = {outage::Receiver::Single};
    else
        recvs = pt.receivers;

    for (outage::Receiver which : recvs) {
        const auto& geom = which == outage::Receiver::Rx2 ? pt.rx2 : pt.rx1;
        const auto params = channel::derive(geom);
        const stats::E2EChannelDist dist{params, pt.series_terms};

        for (RunMethod m :
             {RunMethod::Analytic, RunMethod::Asymptotic, RunMethod::Mc, RunMethod::Oma}) {
            if (std::find(pt.methods.begin(), pt.methods.end(), m) == pt.methods.end())
                continue;
            Row row;
            row.sweep_var = variable_name(pt.sweep.variable);
            row.value = x;
            row.receiver = receiver_name(which);
            row.method = method_name(m);
            try {
                switch (m) {
                    case RunMethod::Analytic: {
                        const auto r = which == outage::Receiver::Single
                                           ? outage::op_single(dist, pt.noma.snr_db, pt.noma.R1)
                                       : which == outage::Receiver::Rx1
                                           ? outage::op_rx1(dist, pt.noma)
                                           : outage::op_rx2(dist, pt.noma);
                        row.p_out = r.p_out;
                        row.condition_violated = r.condition_violated;
                        break;
                    }
                    case RunMethod::Asymptotic: {
                        const auto r = outage::op_asymptotic(dist, pt.noma, which);
                        row.p_out = r.p_out;
                        row.condition_violated = r.condition_violated;
                        row.diversity_order = r.diversity_order;
                        break;
                    }
                    case RunMethod::Mc: {
                        mc::McScenario msc{params, pt.noma, which, false};
                        const auto est = mc::estimate_op(point_seed, msc, pt.mc_trials);
                        row.p_out = est.p_hat;
                        row.std_err = est.std_err;
                        row.condition_violated =
                            which != outage::Receiver::Single && guard_violated(pt.noma);
                        break;
                    }
                    case RunMethod::Oma: {
                        const auto r = outage::op_oma(dist, pt.noma, which);
                        row.p_out = r.p_out;
                        break;
                    }
                }
            } catch (const specfun::ToleranceError&) {
                row.p_out = std::numeric_limits<double>::quiet_NaN();
                row.std_err = std::numeric_limits<double>::quiet_NaN();
                ++failures;
            } catch (const std::domain_error&) {
                // non-convergent / degenerate asymptote, contour failure, ...
                row.p_out = std::numeric_limits<double>::quiet_NaN();
                row.std_err = std::numeric_limits<double>::quiet_NaN();
                ++failures;
            }
            out.push_back(std::move(row));
        }
    }
}

RunResult run_sweep(const Scenario& sc) {
    const auto rep = validate_scenario(sc);
    if (!rep.ok()) {
        std::string msg = "invalid scenario:\n";
        for (const auto& is : rep.issues) msg += "  " + is.field + ": " + is.message + "\n";
        throw std::invalid_argument(msg);
    }

    const auto xs = grid(sc.sweep);
    std::vector<std::vector<Row>> buckets(xs.size());
    std::vector<int> fails(xs.size(), 0);
    std::atomic<std::size_t> next{0};

    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= xs.size()) return;
            const std::uint64_t point_seed =
                mc::splitmix64(sc.seed + 0x9E3779B97F4A7C15ull * (i + 1));
            eval_point(sc, xs[i], point_seed, buckets[i], fails[i]);
        }
    };

    const std::size_t k = pool_size(xs.size());
    if (k <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(k);
        for (std::size_t i = 0; i < k; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    RunResult out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out.failures += fails[i];
        for (auto& r : buckets[i]) out.rows.push_back(std::move(r));
    }
    return out;
}

// ---------------------------------------------------------------------------
// CSV

static const char kHeader[] =
    "sweep_var,value,receiver,method,p_out,std_err,condition_violated,diversity_order";

static std::string num_str(double x) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

void write_csv(std::ostream& os, const std::vector<Row>& rows) {
    os << kHeader << "\n";
    for (const auto& r : rows) {
        os << r.sweep_var << ',' << num_str(r.value) << ',' << r.receiver << ','
           << r.method << ',' << num_str(r.p_out) << ',' << num_str(r.std_err) << ','
           << (r.condition_violated ? '1' : '0') << ','
           << (r.diversity_order ? num_str(*r.diversity_order) : std::string()) << "\n";
    }
}

static double num_parse(const std::string& s, const char* field) {
    double x = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), x);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw std::invalid_argument(std::string("CSV: bad number in column ") + field +
                                    ": '" + s + "'");
    return x;
}

std::vector<Row> read_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != kHeader)
        throw std::invalid_argument("CSV: missing or unexpected header");
    std::vector<Row> rows;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cols;
        std::size_t start = 0;
        for (;;) {
            const auto pos = line.find(',', start);
            cols.push_back(line.substr(start, pos - start));
            if (pos == std::string::npos) break;
            start = pos + 1;
        }
        if (cols.size() != 8) throw std::invalid_argument("CSV: expected 8 columns");
        Row r;
        r.sweep_var = cols[0];
        r.value = num_parse(cols[1], "value");
        r.receiver = cols[2];
        r.method = cols[3];
        r.p_out = num_parse(cols[4], "p_out");
        r.std_err = num_parse(cols[5], "std_err");
        r.condition_violated = cols[6] == "1";
        if (!cols[7].empty()) r.diversity_order = num_parse(cols[7], "diversity_order");
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace orisfso::sweep
