// clab: command-line front end over the clab headers.
//
// Commands: transform, classify, lame, eval-basis, expand, verify.
// Output: aligned text by default, --json for machine output, --csv for
// error sweeps.  Floating-point values are printed with 17 significant
// digits so JSON round-trips losslessly.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/domain error.
//
// An optional key=value config file (path in $CONTRACTION_LAB_CONFIG or
// --config) provides defaults for samples / R-list / seed; explicit CLI
// flags override the config.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <clab/bases.hpp>
#include <clab/contraction.hpp>
#include <clab/geometry.hpp>
#include <clab/lame.hpp>
#include <clab/liealg.hpp>
#include <clab/specfun.hpp>
#include <clab/wigner.hpp>

using nlohmann::json;
using namespace clab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt(double x)
{
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

json jnum(double x) { return json(x); }

Space make_space(const std::string& name, double R)
{
    if (name == "s2") return Space::s2(R);
    if (name == "h2") return Space::h2(R);
    if (name == "e2") return Space::e2();
    if (name == "e11") return Space::e11();
    throw usage_error("unknown space: " + name + " (expected s2, h2, e2, e11)");
}

ChartId chart_id_of(const Space& s, const std::string& name)
{
    static const std::vector<ChartId> all = {
        ChartId::e2_cartesian, ChartId::e2_polar, ChartId::e2_parabolic,
        ChartId::e2_elliptic, ChartId::e11_cartesian, ChartId::e11_pseudo_polar,
        ChartId::e11_parabolic_1, ChartId::e11_parabolic_2, ChartId::e11_parabolic_3,
        ChartId::e11_hyperbolic_1, ChartId::e11_hyperbolic_2, ChartId::e11_hyperbolic_3,
        ChartId::e11_elliptic_1, ChartId::e11_elliptic_2, ChartId::s2_spherical,
        ChartId::s2_spherical_prime, ChartId::s2_spherical_dprime,
        ChartId::s2_elliptic_algebraic, ChartId::s2_elliptic_jacobi,
        ChartId::h2_pseudo_spherical, ChartId::h2_equidistant, ChartId::h2_horocyclic,
        ChartId::h2_elliptic, ChartId::h2_hyperbolic, ChartId::h2_semi_hyperbolic,
        ChartId::h2_elliptic_parabolic, ChartId::h2_hyperbolic_parabolic,
        ChartId::h2_semicircular_parabolic};
    auto space_of = [](ChartId id) {
        int v = int(id);
        if (v <= int(ChartId::e2_elliptic)) return SpaceKind::E2;
        if (v <= int(ChartId::e11_elliptic_2)) return SpaceKind::E11;
        if (v <= int(ChartId::s2_elliptic_jacobi)) return SpaceKind::S2;
        return SpaceKind::H2;
    };
    for (ChartId id : all)
        if (space_of(id) == s.kind && chart_name(id) == name)
            return id;
    throw usage_error("unknown chart '" + name + "' for the given space");
}

// ---- config handling: simple key=value file, CLI flags override ----

struct Config {
    int samples = 25;
    unsigned seed = 0x5EED;
    std::vector<double> r_list;     // empty = per-case default
    double roundtrip_tol = 1e-12;
};

std::vector<double> parse_r_list(const std::string& s)
{
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty())
            out.push_back(std::stod(tok));
    return out;
}

Config load_config(const std::string& explicit_path)
{
    Config cfg;
    std::string path = explicit_path;
    if (path.empty())
        if (const char* env = std::getenv("CONTRACTION_LAB_CONFIG"))
            path = env;
    if (path.empty())
        return cfg;
    std::ifstream in(path);
    if (!in)
        throw usage_error("cannot open config file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        auto eq = line.find('=');
        if (eq == std::string::npos)
            continue;
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t");
            auto e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        if (key == "samples") cfg.samples = std::stoi(val);
        else if (key == "seed") cfg.seed = unsigned(std::stoul(val, nullptr, 0));
        else if (key == "r_list") cfg.r_list = parse_r_list(val);
        else if (key == "roundtrip_tol") cfg.roundtrip_tol = std::stod(val);
        else throw usage_error("unknown config key: " + key);
    }
    return cfg;
}

// ---- output record ----

void emit(const json& record, bool as_json, const std::string& json_path)
{
    if (as_json || !json_path.empty()) {
        std::string text = record.dump(2);
        if (!json_path.empty()) {
            std::ofstream out(json_path);
            if (!out)
                throw usage_error("cannot write " + json_path);
            out << text << "\n";
        } else {
            std::cout << text << "\n";
        }
        return;
    }
    // human-readable text: flat key: value dump
    std::function<void(const json&, const std::string&)> walk =
        [&](const json& j, const std::string& prefix) {
            if (j.is_object()) {
                for (auto it = j.begin(); it != j.end(); ++it)
                    walk(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
            } else if (j.is_array()) {
                std::ostringstream os;
                os.precision(17);
                os << "[";
                for (std::size_t i = 0; i < j.size(); i++) {
                    if (i) os << ", ";
                    if (j[i].is_number_float()) os << j[i].get<double>();
                    else os << j[i].dump();
                }
                os << "]";
                std::cout << "  " << prefix << " = " << os.str() << "\n";
            } else if (j.is_number_float()) {
                std::cout << "  " << prefix << " = " << fmt(j.get<double>()) << "\n";
            } else {
                std::cout << "  " << prefix << " = " << j.dump() << "\n";
            }
        };
    walk(record, "");
}

json record_header(const std::string& command, const json& inputs)
{
    return json{{"schema", "output_record.v1"}, {"command", command}, {"inputs", inputs}};
}

// ---- transform ----

int cmd_transform(const std::string& space_name, const std::string& chart_str,
                  double R, const std::vector<double>& to_amb,
                  const std::vector<double>& from_amb, bool roundtrip,
                  double D, double dpar, double len, double modulus,
                  std::vector<double> avec, const Config& cfg,
                  bool as_json, const std::string& json_path)
{
    Space s = make_space(space_name, R);
    Chart chart = Chart::make(chart_id_of(s, chart_str));
    chart.D = D;
    chart.d = dpar;
    chart.len = len;
    chart.k = modulus;
    if (!avec.empty()) {
        if (avec.size() != 3)
            throw usage_error("--a needs exactly 3 values");
        chart.a = {avec[0], avec[1], avec[2]};
    }

    json inputs{{"space", space_name}, {"chart", chart_str}, {"radius", R}};
    json rec = record_header("transform", inputs);
    json out;

    if (!to_amb.empty() && !from_amb.empty())
        throw usage_error("give exactly one of --to-ambient / --from-ambient");
    if (to_amb.empty() && from_amb.empty())
        throw usage_error("give one of --to-ambient / --from-ambient");

    if (!to_amb.empty()) {
        if (to_amb.size() != 2)
            throw usage_error("--to-ambient needs 2 chart coordinates");
        ChartPoint p{to_amb[0], to_amb[1]};
        AmbientPoint a = to_ambient(s, chart, p);
        out["ambient"] = json::array();
        for (int i = 0; i < a.dim; i++)
            out["ambient"].push_back(a.u[i]);
        out["constraint_residual"] = constraint_residual(s, a);
        if (roundtrip) {
            ChartPoint back = from_ambient(s, chart, a);
            AmbientPoint a2 = to_ambient(s, chart, back);
            double err = 0;
            for (int i = 0; i < a.dim; i++)
                err = std::max(err, std::abs(a.u[i] - a2.u[i]));
            out["roundtrip_residual"] = err;
            rec["tolerances"] = {{"roundtrip", cfg.roundtrip_tol}};
            rec["pass"] = err < cfg.roundtrip_tol;
        }
    } else {
        AmbientPoint a;
        if (from_amb.size() == 2)
            a = AmbientPoint::make2(from_amb[0], from_amb[1]);
        else if (from_amb.size() == 3)
            a = AmbientPoint::make3(from_amb[0], from_amb[1], from_amb[2]);
        else
            throw usage_error("--from-ambient needs 2 or 3 coordinates");
        ChartPoint p = from_ambient(s, chart, a);
        out["chart_point"] = {p.q1, p.q2};
        out["signs"] = {p.signs[0], p.signs[1], p.signs[2]};
        AmbientPoint a2 = to_ambient(s, chart, p);
        double err = 0;
        for (int i = 0; i < a.dim; i++)
            err = std::max(err, std::abs(a.u[i] - a2.u[i]));
        out["roundtrip_residual"] = err;
        if (roundtrip) {
            rec["tolerances"] = {{"roundtrip", cfg.roundtrip_tol}};
            rec["pass"] = err < cfg.roundtrip_tol;
        }
    }
    rec["outputs"] = out;
    emit(rec, as_json, json_path);
    if (rec.contains("pass") && !rec["pass"].get<bool>())
        return kExitVerify;
    return kExitOk;
}

// ---- classify ----

int cmd_classify(const std::string& space_name, const std::vector<double>& m6,
                 bool as_json, const std::string& json_path)
{
    if (space_name != "e2" && space_name != "e11")
        throw usage_error("classify: space must be e2 or e11");
    if (m6.size() != 6)
        throw usage_error("classify: --matrix needs 6 reals (upper triangle "
                          "a00 a01 a02 a11 a12 a22)");
    QuadraticOperator Q;
    Q(0, 0) = m6[0];
    Q(0, 1) = Q(1, 0) = m6[1];
    Q(0, 2) = Q(2, 0) = m6[2];
    Q(1, 1) = m6[3];
    Q(1, 2) = Q(2, 1) = m6[4];
    Q(2, 2) = m6[5];

    json rec = record_header("classify", {{"space", space_name}, {"matrix", m6}});
    CanonicalClass cls = (space_name == "e2") ? classify_e2(Q) : classify_e11(Q);
    json out{{"label", cls.label},
             {"param", cls.param},
             {"margin", cls.margin},
             {"trivial", cls.trivial},
             {"non_separating", cls.non_separating}};
    if (space_name == "e2") {
        auto inv = e2_invariants(Q);
        out["I1"] = inv[0];
        out["I2"] = inv[1];
    }
    rec["outputs"] = out;
    emit(rec, as_json, json_path);
    return kExitOk;
}

// ---- lame ----

int cmd_lame(int l, const std::vector<double>& avec, bool oracle,
             bool as_json, const std::string& json_path)
{
    if (avec.size() != 3)
        throw usage_error("lame: --a needs 3 values");
    std::array<double, 3> a{avec[0], avec[1], avec[2]};
    if (a[0] == a[1] || a[1] == a[2] || a[0] == a[2])
        throw usage_error("lame: a values must be distinct");
    if (l > 30)
        throw usage_error("lame: l must be <= 30");

    json rec = record_header("lame", {{"l", l}, {"a", avec}, {"oracle", oracle}});
    json classes = json::array();
    int count = 0;
    for (const auto& alpha : lame_parity_classes(l)) {
        LameSystem sys = lame_system(l, alpha, a);
        json cls{{"alpha", {alpha[0], alpha[1], alpha[2]}},
                 {"eigenvalues", sys.eigenvalues}};
        count += int(sys.eigenvalues.size());
        classes.push_back(cls);
    }
    json out{{"classes", classes}, {"eigenvalue_count", count}};
    if (oracle) {
        std::vector<double> qs = oracle_q_spectrum(l, a);
        auto [slope, icept] = lame_affine_map(a);
        std::vector<double> lam = lame_full_spectrum(l, a);
        double dev = 0;
        for (std::size_t i = 0; i < lam.size(); i++)
            dev = std::max(dev,
                           std::abs(slope * lam[i] + icept - qs[qs.size() - 1 - i]));
        out["oracle_spectrum"] = qs;
        out["affine_map"] = {{"slope", slope}, {"intercept", icept}};
        out["max_oracle_deviation"] = dev;
        rec["tolerances"] = {{"oracle", 1e-9}};
        rec["pass"] = dev < 1e-9;
    }
    rec["outputs"] = out;
    emit(rec, as_json, json_path);
    if (rec.contains("pass") && !rec["pass"].get<bool>())
        return kExitVerify;
    return kExitOk;
}

// ---- eval-basis ----

int cmd_eval_basis(const std::string& space_name, const std::string& chart_str,
                   double R, int l, int m, double rho, double lambda,
                   double k, double k1, double k2, double k0,
                   const std::vector<double>& at, bool residual,
                   bool as_json, const std::string& json_path)
{
    if (at.size() != 2)
        throw usage_error("eval-basis: --at needs 2 chart coordinates");
    Space s = make_space(space_name, R);
    ChartId cid = chart_id_of(s, chart_str);

    BasisFunction f;
    if (cid == ChartId::s2_spherical)
        f = basis_s2_spherical(l, m, R);
    else if (cid == ChartId::h2_pseudo_spherical)
        f = basis_h2_pseudospherical(rho, m, R);
    else if (cid == ChartId::h2_equidistant)
        f = basis_h2_equidistant(rho, lambda, R);
    else if (cid == ChartId::e2_cartesian || cid == ChartId::e2_polar ||
             cid == ChartId::e11_cartesian || cid == ChartId::e11_pseudo_polar) {
        QuantumNumbers qn;
        qn.l = l; qn.m = m; qn.rho = rho; qn.lambda = lambda;
        qn.k = k; qn.k1 = k1; qn.k2 = k2; qn.k0 = k0;
        f = basis_flat(s, cid, qn);
    } else {
        throw usage_error("eval-basis: no basis family on chart '" + chart_str + "'");
    }

    cplx v = f.eval(at[0], at[1]);
    json rec = record_header(
        "eval-basis", {{"space", space_name}, {"chart", chart_str}, {"radius", R},
                       {"at", at}, {"l", l}, {"m", m}, {"rho", rho},
                       {"lambda", lambda}, {"k", k}, {"k1", k1}, {"k2", k2},
                       {"k0", k0}});
    json out{{"value_re", v.real()}, {"value_im", v.imag()},
             {"eigenvalue", f.eigenvalue}};
    if (residual) {
        double res = helmholtz_residual(s, f, f.eigenvalue, ChartPoint{at[0], at[1]}, 1e-3);
        out["helmholtz_residual"] = res;
        rec["tolerances"] = {{"helmholtz", 1e-5}};
        rec["pass"] = res < 1e-5;
    }
    rec["outputs"] = out;
    emit(rec, as_json, json_path);
    if (rec.contains("pass") && !rec["pass"].get<bool>())
        return kExitVerify;
    return kExitOk;
}

// ---- expand ----

int cmd_expand(const std::string& which, double k, double r, double delta, int M,
               int m, bool as_json, const std::string& json_path)
{
    json rec = record_header("expand", {{"kind", which}, {"k", k}, {"r", r},
                                        {"delta", delta}, {"M", M}, {"m", m}});
    json out;
    bool pass = true;
    if (which == "plane-wave") {
        cplx sum = plane_wave_partial(k, r, delta, M);
        cplx exact = std::exp(cplx(0, k * r * std::cos(delta)));
        out["partial_re"] = sum.real();
        out["partial_im"] = sum.imag();
        out["exact_re"] = exact.real();
        out["exact_im"] = exact.imag();
        out["error"] = std::abs(sum - exact);
        rec["tolerances"] = {{"partial_sum", 1e-9}};
        pass = std::abs(sum - exact) < 1e-9;
    } else if (which == "bessel-quadrature") {
        cplx q = bessel_via_quadrature(m, k, r, 0.0);
        cplx jb = bessel_j(std::abs(m), k * r);
        out["quadrature_re"] = q.real();
        out["quadrature_im"] = q.imag();
        out["bessel_re"] = jb.real();
        out["bessel_im"] = jb.imag();
        out["error"] = std::abs(q - jb);
        rec["tolerances"] = {{"quadrature", 1e-10}};
        pass = std::abs(q - jb) < 1e-10;
    } else {
        throw usage_error("expand: kind must be plane-wave or bessel-quadrature");
    }
    rec["pass"] = pass;
    rec["outputs"] = out;
    emit(rec, as_json, json_path);
    return pass ? kExitOk : kExitVerify;
}

// ---- verify ----

json report_to_json(const ConvergenceReport& rep)
{
    json j{{"id", rep.id},
           {"R", rep.R},
           {"max_err", rep.max_err},
           {"slope", rep.slope},
           {"fit_residual", rep.fit_residual},
           {"pass", rep.pass},
           {"resampled", rep.resampled}};
    if (!rep.note.empty())
        j["note"] = rep.note;
    if (std::isinf(rep.slope))
        j["slope"] = "exact";
    return j;
}

int cmd_verify(const std::string& id, bool all, const Config& cfg,
               bool as_json, const std::string& json_path,
               const std::string& csv_path)
{
    std::vector<const ContractionCase*> cases;
    if (all) {
        for (const auto& cid : registry_ids())
            cases.push_back(&find_case(cid));
    } else {
        if (id.empty())
            throw usage_error("verify: give a case id or --all");
        try {
            cases.push_back(&find_case(id));
        } catch (const std::invalid_argument&) {
            std::ostringstream os;
            os << "unknown contraction case '" << id << "'. Valid ids:\n";
            for (const auto& cid : registry_ids())
                os << "  " << cid << "\n";
            throw usage_error(os.str());
        }
    }

    json rec = record_header("verify", {{"case", all ? "--all" : id},
                                        {"samples", cfg.samples},
                                        {"seed", cfg.seed}});
    rec["tolerances"] = {{"final_err", 1e-2}, {"max_slope", -0.8}};
    json reports = json::array();
    bool all_pass = true;
    std::ostringstream csv;
    csv.precision(17);
    csv << "id,R,max_err\n";
    for (const ContractionCase* c : cases) {
        ConvergenceReport rep = run_case(*c, cfg.r_list, cfg.samples, cfg.seed);
        reports.push_back(report_to_json(rep));
        all_pass = all_pass && rep.pass;
        for (std::size_t i = 0; i < rep.R.size(); i++)
            csv << rep.id << "," << rep.R[i] << "," << rep.max_err[i] << "\n";
        if (!as_json && json_path.empty())
            std::cout << (rep.pass ? "PASS " : "FAIL ") << rep.id
                      << "  final_err=" << fmt(rep.max_err.back())
                      << "  slope=" << fmt(rep.slope) << "\n";
    }
    rec["outputs"] = {{"reports", reports}};
    rec["pass"] = all_pass;
    if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        if (!out)
            throw usage_error("cannot write " + csv_path);
        out << csv.str();
    }
    if (as_json || !json_path.empty())
        emit(rec, as_json, json_path);
    else
        std::cout << (all_pass ? "all cases pass" : "some cases FAILED") << "\n";
    return all_pass ? kExitOk : kExitVerify;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"clab: separable coordinates, commuting operators and basis "
                 "functions on the four 2D constant-curvature spaces, with a "
                 "numerical R->infinity contraction verifier"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "key=value config file");
    bool as_json = false;
    std::string json_path, csv_path;

    // transform
    auto* t = app.add_subcommand("transform", "chart <-> ambient maps");
    std::string t_space, t_chart;
    double t_R = 1.0;
    std::vector<double> t_to, t_from, t_a;
    bool t_round = false;
    double t_D = 1.0, t_d = 1.0, t_len = 1.0, t_k = 1.0 / std::sqrt(2.0);
    t->add_option("--space", t_space)->required();
    t->add_option("--chart", t_chart)->required();
    t->add_option("--radius", t_R);
    t->add_option("--to-ambient", t_to)->expected(2);
    t->add_option("--from-ambient", t_from)->expected(2, 3);
    t->add_flag("--check-roundtrip", t_round);
    t->add_option("--D", t_D);
    t->add_option("--d2", t_d);
    t->add_option("--len", t_len);
    t->add_option("--modulus", t_k);
    t->add_option("--a", t_a)->expected(3);

    // classify
    auto* c = app.add_subcommand("classify", "canonical form of a quadratic operator");
    std::string c_space;
    std::vector<double> c_m;
    c->add_option("--space", c_space)->required();
    c->add_option("--matrix", c_m)->expected(6)->required();

    // lame
    auto* lm = app.add_subcommand("lame", "Lame secular eigenvalues per parity class");
    int lm_l = 1;
    std::vector<double> lm_a;
    bool lm_oracle = false;
    lm->add_option("--l", lm_l)->required();
    lm->add_option("--a", lm_a)->expected(3)->required();
    lm->add_flag("--oracle", lm_oracle);

    // eval-basis
    auto* eb = app.add_subcommand("eval-basis", "evaluate a separable basis function");
    std::string eb_space, eb_chart;
    double eb_R = 1.0, eb_rho = 1.0, eb_lambda = 0.0;
    double eb_k = 1.0, eb_k1 = 0.0, eb_k2 = 0.0, eb_k0 = 0.0;
    int eb_l = 0, eb_m = 0;
    std::vector<double> eb_at;
    bool eb_res = false;
    eb->add_option("--space", eb_space)->required();
    eb->add_option("--chart", eb_chart)->required();
    eb->add_option("--radius", eb_R);
    eb->add_option("--l", eb_l);
    eb->add_option("--m", eb_m);
    eb->add_option("--rho", eb_rho);
    eb->add_option("--lambda", eb_lambda);
    eb->add_option("--k", eb_k);
    eb->add_option("--k1", eb_k1);
    eb->add_option("--k2", eb_k2);
    eb->add_option("--k0", eb_k0);
    eb->add_option("--at", eb_at)->expected(2)->required();
    eb->add_flag("--residual", eb_res);

    // expand
    auto* ex = app.add_subcommand("expand", "plane-wave / interbasis expansion checks");
    std::string ex_kind = "plane-wave";
    double ex_k = 1.0, ex_r = 1.0, ex_delta = 0.0;
    int ex_M = 40, ex_m = 0;
    ex->add_option("--kind", ex_kind);
    ex->add_option("--k", ex_k);
    ex->add_option("--r", ex_r);
    ex->add_option("--delta", ex_delta);
    ex->add_option("--M", ex_M);
    ex->add_option("--m", ex_m);

    // verify
    auto* vf = app.add_subcommand("verify", "run contraction cases");
    std::string vf_id;
    bool vf_all = false;
    std::string vf_rlist;
    int vf_samples = -1;
    long long vf_seed = -1;
    vf->add_option("case", vf_id, "contraction case id");
    vf->add_flag("--all", vf_all);
    vf->add_option("--R-list", vf_rlist, "comma-separated radii");
    vf->add_option("--samples", vf_samples);
    vf->add_option("--seed", vf_seed);

    for (auto* sub : {t, c, lm, eb, ex, vf}) {
        sub->add_flag("--json", as_json, "JSON to stdout");
        sub->add_option("--json-file", json_path, "write JSON to a file");
        sub->add_option("--csv", csv_path, "write CSV error sweep to a file");
    }

    try {
        app.parse(argc, argv);
        Config cfg = load_config(config_path);
        if (vf_samples > 0)
            cfg.samples = vf_samples;
        if (vf_seed >= 0)
            cfg.seed = unsigned(vf_seed);
        if (!vf_rlist.empty())
            cfg.r_list = parse_r_list(vf_rlist);

        if (*t)
            return cmd_transform(t_space, t_chart, t_R, t_to, t_from, t_round,
                                 t_D, t_d, t_len, t_k, t_a, cfg, as_json, json_path);
        if (*c)
            return cmd_classify(c_space, c_m, as_json, json_path);
        if (*lm)
            return cmd_lame(lm_l, lm_a, lm_oracle, as_json, json_path);
        if (*eb)
            return cmd_eval_basis(eb_space, eb_chart, eb_R, eb_l, eb_m, eb_rho,
                                  eb_lambda, eb_k, eb_k1, eb_k2, eb_k0, eb_at,
                                  eb_res, as_json, json_path);
        if (*ex)
            return cmd_expand(ex_kind, ex_k, ex_r, ex_delta, ex_M, ex_m,
                              as_json, json_path);
        if (*vf)
            return cmd_verify(vf_id, vf_all, cfg, as_json, json_path, csv_path);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const coverage_error& e) {
        std::cerr << "coverage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
