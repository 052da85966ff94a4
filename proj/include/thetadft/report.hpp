#ifndef THETADFT_REPORT_HPP
#define THETADFT_REPORT_HPP

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "thetadft/dft.hpp"
#include "thetadft/identities.hpp"
#include "thetadft/qidentities.hpp"

namespace thetadft {

using json = nlohmann::json;

// One verification campaign. Defaults give a full PASS/FAIL report in well
// under a minute. Reports carry no timestamps, so a fixed config yields
// byte-identical output.
struct RunConfig {
    std::string command = "all";  // verify | qcheck | spectral | all
    std::vector<std::string> identity_filter;
    int samples = 50;
    double tol = 1e-9;
    std::uint64_t seed = 42;
    int nu = 1;
    long long q_order = 100;
    long z_halfwidth = 10;
    SampleRegion region{};  // seed is overwritten from `seed`
    std::optional<int> spectral_n;
    std::string format = "text";  // text | json
    std::string output_path;      // empty = stdout
};

struct RunResult {
    int exit_code = 0;  // 0 all pass; 2 at least one FAIL/DEGENERATE
    json report;
    std::string text;
};

namespace detail {

inline json cplx(complex_t v) { return json::array({v.real(), v.imag()}); }

inline json identity_row(const IdentityReport& rep, int nu) {
    json metrics{{"samples", rep.sample_count},
                 {"max_abs_residual", rep.max_abs_residual},
                 {"max_rel_residual", rep.max_rel_residual},
                 {"nu", nu}};
    json witnesses = json::array();
    for (const auto& s : rep.per_sample) {
        json w{{"x", cplx(s.x)},   {"tau", cplx(s.tau)},       {"lhs", cplx(s.lhs)},
               {"rhs", cplx(s.rhs)}, {"residual", s.residual}};
        if (s.eval_error) w["eval_error"] = true;
        witnesses.push_back(std::move(w));
    }
    return json{{"name", rep.name},
                {"verdict", to_string(rep.verdict)},
                {"metrics", std::move(metrics)},
                {"witnesses", std::move(witnesses)}};
}

inline json qcheck_row(const QIdentityResult& r) {
    json witnesses = json::array();
    if (r.first_mismatch) {
        const auto& m = *r.first_mismatch;
        witnesses.push_back(json{{"e_q_t", m.eq_t},
                                 {"e_z", m.ez},
                                 {"lhs_coeff", m.lhs.str()},
                                 {"rhs_coeff", m.rhs.str()}});
    }
    return json{{"name", "qcheck:" + r.name},
                {"verdict", r.pass ? "PASS" : "FAIL"},
                {"metrics", json{{"q_order", r.q_order}, {"z_halfwidth", r.z_halfwidth}}},
                {"witnesses", std::move(witnesses)}};
}

}  // namespace detail

inline std::vector<json> run_verify(const RunConfig& cfg) {
    SampleRegion region = cfg.region;
    region.seed = cfg.seed;
    std::vector<json> rows;
    if (cfg.identity_filter.empty()) {
        for (const auto& rep : verify_all(region, cfg.samples, cfg.tol, cfg.nu))
            rows.push_back(detail::identity_row(rep, cfg.nu));
        return rows;
    }
    for (const auto& name : cfg.identity_filter) {
        const IdentityDef& def = lookup(name);  // throws on unknown name
        if (cfg.nu > 1 && !def.nu_applicable) {
            IdentityReport rep;
            rep.name = def.name;
            rep.verdict = Verdict::Skipped;
            rows.push_back(detail::identity_row(rep, cfg.nu));
            continue;
        }
        rows.push_back(detail::identity_row(verify(def, region, cfg.samples, cfg.tol, cfg.nu),
                                            cfg.nu));
    }
    return rows;
}

inline std::vector<json> run_qcheck(const RunConfig& cfg) {
    std::vector<json> rows;
    const long zh_rr = std::max(cfg.z_halfwidth, rr_required_halfwidth(cfg.q_order));
    rows.push_back(detail::qcheck_row(check_rogers_ramanujan(cfg.q_order, zh_rr)));
    rows.push_back(detail::qcheck_row(check_square_identity(std::max<long long>(8, cfg.q_order))));
    rows.push_back(
        detail::qcheck_row(check_odd_square_identity(std::max<long long>(32, cfg.q_order))));
    rows.push_back(detail::qcheck_row(check_triangular_identity(cfg.q_order)));

    const long zh_tp = std::max(cfg.z_halfwidth, isqrt_floor(cfg.q_order));
    const TripleProductResult tp =
        triple_product_check(ExponentLattice{1, cfg.q_order, -zh_tp, zh_tp});
    QIdentityResult tpr;
    tpr.name = "TRIPLE_PRODUCT";
    tpr.q_order = cfg.q_order;
    tpr.z_halfwidth = zh_tp;
    tpr.pass = tp.ok;
    tpr.first_mismatch = tp.witness;
    rows.push_back(detail::qcheck_row(tpr));
    return rows;
}

inline std::vector<json> run_spectral(const RunConfig& cfg) {
    SampleRegion region = cfg.region;
    region.seed = cfg.seed;
    std::vector<json> rows;
    std::vector<int> ns;
    if (cfg.spectral_n)
        ns.push_back(*cfg.spectral_n);
    else
        for (int n = 2; n <= 8; ++n) ns.push_back(n);

    const auto points = sample_points(region, 25);
    const double eps = cfg.tol / 100.0;
    for (int n : ns) {
        const DftMatrix a = dft_matrix(n);
        const Multiplicities analytic = multiplicities(n);
        const Multiplicities counted = counted_multiplicities(a);
        rows.push_back(json{
            {"name", "spectral:multiplicity:n=" + std::to_string(n)},
            {"verdict", analytic == counted ? "PASS" : "FAIL"},
            {"metrics",
             json{{"analytic", {analytic.m_plus1, analytic.m_minus1, analytic.m_plus_i,
                                analytic.m_minus_i}},
                  {"counted", {counted.m_plus1, counted.m_minus1, counted.m_plus_i,
                               counted.m_minus_i}}}},
            {"witnesses", json::array()}});

        for (int k = 0; k < 4; ++k) {
            if (analytic.for_k(k) < 1) continue;
            double max_res = 0.0;
            json witnesses = json::array();
            bool zero_vector_seen = false;
            for (const auto& [x, tau] : points) {
                const EigenvectorG g = matveev_vector(n, k, x, tau, cfg.nu, eps);
                const double res = eigen_residual(a, g);
                max_res = std::max(max_res, res);
                if (g.max_norm() < 100.0 * eps) zero_vector_seen = true;
                witnesses.push_back(
                    json{{"x", detail::cplx(x)}, {"tau", detail::cplx(tau.value())},
                         {"residual", res}});
            }
            json metrics{{"max_residual", max_res}, {"nu", cfg.nu}, {"samples", 25}};
            if (zero_vector_seen) metrics["zero_vector"] = true;
            rows.push_back(json{{"name", "spectral:eigen:n=" + std::to_string(n) +
                                             ",k=" + std::to_string(k)},
                                {"verdict", max_res <= cfg.tol ? "PASS" : "FAIL"},
                                {"metrics", std::move(metrics)},
                                {"witnesses", std::move(witnesses)}});
        }
    }
    return rows;
}

inline std::string render_text(const json& report) {
    std::ostringstream os;
    for (const auto& row : report.at("results")) {
        os << row.at("name").get<std::string>() << " " << row.at("verdict").get<std::string>();
        const json& m = row.at("metrics");
        if (m.contains("max_rel_residual"))
            os << " max_rel_residual=" << m["max_rel_residual"].dump();
        else if (m.contains("max_residual"))
            os << " max_residual=" << m["max_residual"].dump();
        else if (m.contains("counted"))
            os << " counted=" << m["counted"].dump() << " analytic=" << m["analytic"].dump();
        else if (m.contains("q_order"))
            os << " q_order=" << m["q_order"].dump();
        const json& w = row.at("witnesses");
        if (row.at("verdict") == "FAIL" && !w.empty() && w[0].contains("e_q_t"))
            os << " first_mismatch=(e_q_t=" << w[0]["e_q_t"].dump()
               << ",e_z=" << w[0]["e_z"].dump() << ")";
        os << "\n";
    }
    return os.str();
}

inline RunResult run(const RunConfig& cfg) {
    json results = json::array();
    auto append = [&](std::vector<json> rows) {
        for (auto& r : rows) results.push_back(std::move(r));
    };
    if (cfg.command == "verify" || cfg.command == "all") append(run_verify(cfg));
    if (cfg.command == "qcheck" || cfg.command == "all") append(run_qcheck(cfg));
    if (cfg.command == "spectral" || cfg.command == "all") append(run_spectral(cfg));
    if (results.empty() && cfg.command != "verify" && cfg.command != "qcheck" &&
        cfg.command != "spectral" && cfg.command != "all")
        throw std::invalid_argument("unknown command: " + cfg.command);

    json config{{"command", cfg.command},
                {"samples", cfg.samples},
                {"tol", cfg.tol},
                {"seed", cfg.seed},
                {"nu", cfg.nu},
                {"q_order", cfg.q_order},
                {"z_halfwidth", cfg.z_halfwidth},
                {"identity_filter", cfg.identity_filter},
                {"region", json{{"im_tau_min", cfg.region.im_tau_min},
                                {"im_tau_max", cfg.region.im_tau_max},
                                {"re_tau_halfwidth", cfg.region.re_tau_halfwidth},
                                {"x_box_halfwidth", cfg.region.x_box_halfwidth}}}};
    if (cfg.spectral_n) config["spectral_n"] = *cfg.spectral_n;

    RunResult out;
    out.report = json{{"version", 1}, {"config", std::move(config)}, {"results", results}};
    bool any_fail = false;
    for (const auto& row : results) {
        const std::string v = row.at("verdict").get<std::string>();
        if (v == "FAIL" || v == "DEGENERATE") any_fail = true;
    }
    out.exit_code = any_fail ? 2 : 0;
    out.text = render_text(out.report);
    return out;
}

}  // namespace thetadft

#endif
