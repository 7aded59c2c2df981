#include <complex>
#include <numeric>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qdilog/errors.hpp"
#include "qdilog/evaluator.hpp"
#include "qdilog/faddeev.hpp"
#include "qdilog/quadrature.hpp"
#include "qdilog/report.hpp"
#include "qdilog/verification.hpp"

namespace {

using qdilog::cplx;

// complex literals on the command line: "a+bi" / "a-bi" / "a" / "bi"
cplx parse_complex(const std::string& s) {
    if (s.empty()) throw CLI::ValidationError("empty complex literal");
    std::string body = s;
    bool has_i = false;
    if (body.back() == 'i') {
        has_i = true;
        body.pop_back();
    }
    // split at the last +/- that is not a leading sign or exponent sign
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        const char ch = body[k];
        if ((ch == '+' || ch == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    try {
        if (!has_i) return {std::stod(body), 0.0};
        if (split == std::string::npos) {
            if (body.empty() || body == "+") return {0.0, 1.0};
            if (body == "-") return {0.0, -1.0};
            return {0.0, std::stod(body)};
        }
        const double re = std::stod(body.substr(0, split));
        std::string im_part = body.substr(split);
        if (im_part == "+") im_part = "1";
        if (im_part == "-") im_part = "-1";
        return {re, std::stod(im_part)};
    } catch (const std::exception&) {
        throw CLI::ValidationError("bad complex literal: " + s);
    }
}

std::string error_kind(const qdilog::Error& e) {
    using namespace qdilog;
    if (dynamic_cast<const CutProximity*>(&e)) return "CutProximity";
    if (dynamic_cast<const DivisionByZero*>(&e)) return "DivisionByZero";
    if (dynamic_cast<const NotCoprime*>(&e)) return "NotCoprime";
    if (dynamic_cast<const OutOfStrip*>(&e)) return "OutOfStrip";
    if (dynamic_cast<const PoleProximity*>(&e)) return "PoleProximity";
    if (dynamic_cast<const BandViolation*>(&e)) return "BandViolation";
    if (dynamic_cast<const NoConvergence*>(&e)) return "NoConvergence";
    if (dynamic_cast<const NonFinite*>(&e)) return "NonFinite";
    if (dynamic_cast<const DegenerateRoot*>(&e)) return "DegenerateRoot";
    if (dynamic_cast<const NonGenericLambda*>(&e)) return "NonGenericLambda";
    if (dynamic_cast<const qdilog::DomainError*>(&e)) return "DomainError";
    return "Error";
}

int fail_json(const qdilog::Error& e) {
    std::cout << "{\"error\":\"" << error_kind(e) << "\",\"message\":\"" << e.what()
              << "\"}\n";
    return 1;
}

std::string fmt_complex_text(cplx v) {
    char buf[80];
    std::snprintf(buf, sizeof(buf), "%.15g %c %.15gi", v.real(),
                  v.imag() < 0 ? '-' : '+', std::abs(v.imag()));
    return buf;
}

void print_report_text(const qdilog::EvaluationReport& rep) {
    std::cout << "method  " << qdilog::method_name(rep.method) << "\n";
    std::cout << "value   " << fmt_complex_text(rep.value) << "\n";
    if (rep.method != qdilog::Method::quadrature) {
        std::cout << "lambda  " << qdilog::fmt17(rep.lambda) << "\n";
        for (const auto& p : rep.strip_points)
            std::cout << "  w = " << fmt_complex_text(p.w)
                      << "   z = " << fmt_complex_text(p.z)
                      << "   Im(log z)/pi = " << qdilog::fmt17(p.log_z.value.imag() / qdilog::kPi)
                      << "\n";
    } else {
        std::cout << "est_error  " << qdilog::fmt17(rep.diagnostics.est_error) << "\n"
                  << "height     " << qdilog::fmt17(rep.diagnostics.contour_height) << "\n"
                  << "truncation " << qdilog::fmt17(rep.diagnostics.truncation) << "\n"
                  << "panels     " << rep.diagnostics.panels << "\n";
    }
}

struct ContourFlags {
    double height = 0.0;  // 0: use the spec default
    double half_width = 8.0;
    int panels = 32;
    double tol = 1e-9;
    int max_refinements = 8;

    void attach(CLI::App* cmd) {
        cmd->add_option("--height", height, "contour height Im x (0 = default)");
        cmd->add_option("--half-width", half_width, "initial truncation T");
        cmd->add_option("--panels", panels, "initial panel count");
        cmd->add_option("--quad-tol", tol, "quadrature target absolute error");
        cmd->add_option("--max-refinements", max_refinements, "panel-doubling limit");
    }
    qdilog::ContourConfig config(const qdilog::IntegrandSpec& spec,
                                 const qdilog::AdmissiblePair& pair) const {
        qdilog::ContourConfig cfg;
        cfg.height = height != 0.0 ? height : qdilog::default_height(spec, pair);
        cfg.half_width = half_width;
        cfg.panels = panels;
        cfg.tol = tol;
        cfg.max_refinements = max_refinements;
        return cfg;
    }
};

using Params = std::vector<std::pair<std::string, std::string>>;

int run_methods(const qdilog::IntegrandSpec& spec, const qdilog::AdmissiblePair& pair,
                double lambda, const std::string& method, double tol,
                const ContourFlags& contour, bool json, Params params,
                bool with_closed) {
    std::vector<qdilog::EvaluationReport> reports;
    if (method == "closed" || method == "all") {
        if (with_closed)
            reports.push_back(qdilog::evaluate_thm1(spec, pair, lambda));
        else
            reports.push_back(qdilog::evaluate_residue_sum(spec, pair, lambda));
    }
    if (method == "residue" || (method == "all" && with_closed))
        reports.push_back(qdilog::evaluate_residue_sum(spec, pair, lambda));
    if (method == "quadrature" || method == "all")
        reports.push_back(
            qdilog::state_integral_numeric(spec, pair, contour.config(spec, pair)));

    params.emplace_back("lambda", qdilog::fmt17(lambda));
    std::vector<std::string> jsons;
    for (auto& rep : reports) {
        auto p = params;
        p.emplace_back("requested_method", "\"" + method + "\"");
        jsons.push_back(qdilog::report_to_json(rep, p));
    }

    double worst = 0.0;
    std::vector<std::string> diff_lines;
    for (std::size_t i = 0; i < reports.size(); ++i)
        for (std::size_t j = i + 1; j < reports.size(); ++j) {
            const double d = std::abs(reports[i].value - reports[j].value);
            worst = std::max(worst, d);
            diff_lines.push_back("\"" + qdilog::method_name(reports[i].method) + "-" +
                                 qdilog::method_name(reports[j].method) +
                                 "\":" + qdilog::fmt17(d));
        }

    if (json) {
        if (reports.size() == 1) {
            std::cout << jsons[0] << "\n";
        } else {
            std::cout << "{\"reports\":[";
            for (std::size_t i = 0; i < jsons.size(); ++i)
                std::cout << (i ? "," : "") << jsons[i];
            std::cout << "],\"differences\":{";
            for (std::size_t i = 0; i < diff_lines.size(); ++i)
                std::cout << (i ? "," : "") << diff_lines[i];
            std::cout << "}}\n";
        }
    } else {
        for (const auto& rep : reports) {
            print_report_text(rep);
            std::cout << "\n";
        }
        if (reports.size() > 1)
            std::cout << "max pairwise |difference| = " << qdilog::fmt17(worst) << "\n";
    }
    return reports.size() > 1 && worst >= tol ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"state-integral evaluator: quadrature and closed forms at rational b^2"};
    app.require_subcommand(1);
    std::string output_mode = "text";
    app.add_option("--output", output_mode, "output mode: json or text")
        ->check(CLI::IsMember({"json", "text"}));

    // ---- eval ----
    auto* eval = app.add_subcommand("eval", "evaluate the AB state-integral");
    std::int64_t A = 1, B = 2, M = 1, N = 1;
    double lambda_in = 0.0;
    bool lambda_set = false;
    std::string method = "closed";
    double tol = 1e-6;
    ContourFlags contour;
    eval->add_option("--A", A, "Gaussian power A")->required();
    eval->add_option("--B", B, "Phi power B")->required();
    eval->add_option("--M", M, "numerator of b^2")->required();
    eval->add_option("--N", N, "denominator of b^2")->required();
    eval->add_option("--lambda", lambda_in, "contour offset (default -0.05|range|)")
        ->each([&lambda_set](const std::string&) { lambda_set = true; });
    eval->add_option("--method", method, "closed|residue|quadrature|all")
        ->check(CLI::IsMember({"closed", "residue", "quadrature", "all"}));
    eval->add_option("--tol", tol, "method-agreement tolerance (exit status)");
    contour.attach(eval);

    // ---- pretzel ----
    auto* pretzel = app.add_subcommand("pretzel", "evaluate the (-2,3,7) pretzel integral");
    std::int64_t pM = 1, pN = 1;
    std::string pmethod = "residue";
    double ptol = 1e-6;
    double plambda = 0.0;
    bool plambda_set = false;
    ContourFlags pcontour;
    pretzel->add_option("--M", pM, "numerator of b^2")->required();
    pretzel->add_option("--N", pN, "denominator of b^2")->required();
    pretzel->add_option("--lambda", plambda, "contour offset")
        ->each([&plambda_set](const std::string&) { plambda_set = true; });
    pretzel->add_option("--method", pmethod, "residue|quadrature|all")
        ->check(CLI::IsMember({"residue", "quadrature", "all"}));
    pretzel->add_option("--tol", ptol, "method-agreement tolerance");
    pcontour.attach(pretzel);

    // ---- phi ----
    auto* phi_cmd = app.add_subcommand("phi", "Faddeev quantum dilogarithm at b^2 = M/N");
    std::int64_t fM = 1, fN = 1;
    std::string xs = "0";
    std::string fmethod = "both";
    phi_cmd->add_option("--M", fM)->required();
    phi_cmd->add_option("--N", fN)->required();
    phi_cmd->add_option("--x", xs, "argument, complex literal a+bi")->required();
    phi_cmd->add_option("--method", fmethod, "integral|closed|both")
        ->check(CLI::IsMember({"integral", "closed", "both"}));

    // ---- roots ----
    auto* roots_cmd = app.add_subcommand("roots", "gluing roots lifted to the strip");
    std::int64_t rA = 0, rB = 0, rM = 1, rN = 1;
    bool rpretzel = false;
    double rlambda = 0.0;
    bool rlambda_set = false;
    roots_cmd->add_option("--A", rA);
    roots_cmd->add_option("--B", rB);
    roots_cmd->add_flag("--pretzel", rpretzel, "use the pretzel gluing equation");
    roots_cmd->add_option("--M", rM)->required();
    roots_cmd->add_option("--N", rN)->required();
    roots_cmd->add_option("--lambda", rlambda)
        ->each([&rlambda_set](const std::string&) { rlambda_set = true; });

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run the verification suites");
    std::string suite = "all";
    std::uint64_t seed = 0;
    verify->add_option("--suite", suite, "all|props|phi|sums|thm1|thm2|pretzel")
        ->check(CLI::IsMember({"all", "props", "phi", "sums", "thm1", "thm2", "pretzel"}));
    verify->add_option("--seed", seed, "seed for random test points");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    const bool json = output_mode == "json";
    try {
        if (*eval) {
            if (!(B > A && A > 0)) {
                std::cerr << "eval: requires B > A > 0\n";
                return 2;
            }
            if (M < 1 || N < 1 || std::gcd(M, N) != 1) {
                std::cerr << "eval: requires coprime positive M, N\n";
                return 2;
            }
            const auto spec = qdilog::IntegrandSpec::ab(A, B);
            const qdilog::AdmissiblePair pair(M, N);
            const double lambda =
                lambda_set ? lambda_in : qdilog::default_lambda(spec, pair);
            Params params{{"A", std::to_string(A)},
                          {"B", std::to_string(B)},
                          {"M", std::to_string(M)},
                          {"N", std::to_string(N)}};
            return run_methods(spec, pair, lambda, method, tol, contour, json,
                               std::move(params), /*with_closed=*/true);
        }
        if (*pretzel) {
            if (pM < 1 || pN < 1 || std::gcd(pM, pN) != 1) {
                std::cerr << "pretzel: requires coprime positive M, N\n";
                return 2;
            }
            const auto spec = qdilog::IntegrandSpec::pretzel();
            const qdilog::AdmissiblePair pair(pM, pN);
            const double lambda =
                plambda_set ? plambda : qdilog::default_lambda(spec, pair);
            Params params{{"M", std::to_string(pM)},
                          {"N", std::to_string(pN)},
                          {"family", "\"pretzel\""}};
            // "residue" is the closed-form route for the pretzel
            const std::string m = pmethod == "residue" ? "closed" : pmethod;
            return run_methods(spec, pair, lambda, m, ptol, pcontour, json,
                               std::move(params), /*with_closed=*/false);
        }
        if (*phi_cmd) {
            if (fM < 1 || fN < 1 || std::gcd(fM, fN) != 1) {
                std::cerr << "phi: requires coprime positive M, N\n";
                return 2;
            }
            const qdilog::AdmissiblePair pair(fM, fN);
            const cplx x = parse_complex(xs);
            cplx vi{0, 0}, vc{0, 0};
            if (fmethod != "closed") vi = qdilog::phi(pair, x);
            if (fmethod != "integral")
                vc = qdilog::phi_rational(pair, 2.0 * qdilog::kPi * pair.s * (x + pair.c_b));
            if (json) {
                std::cout << "{";
                if (fmethod != "closed")
                    std::cout << "\"integral\":{\"re\":" << qdilog::fmt17(vi.real())
                              << ",\"im\":" << qdilog::fmt17(vi.imag()) << "}";
                if (fmethod == "both") std::cout << ",";
                if (fmethod != "integral")
                    std::cout << "\"closed\":{\"re\":" << qdilog::fmt17(vc.real())
                              << ",\"im\":" << qdilog::fmt17(vc.imag()) << "}";
                if (fmethod == "both")
                    std::cout << ",\"abs_difference\":" << qdilog::fmt17(std::abs(vi - vc));
                std::cout << "}\n";
            } else {
                if (fmethod != "closed")
                    std::cout << "integral  " << fmt_complex_text(vi) << "\n";
                if (fmethod != "integral")
                    std::cout << "closed    " << fmt_complex_text(vc) << "\n";
                if (fmethod == "both")
                    std::cout << "abs diff  " << qdilog::fmt17(std::abs(vi - vc)) << "\n";
            }
            return 0;
        }
        if (*roots_cmd) {
            if (rM < 1 || rN < 1 || std::gcd(rM, rN) != 1) {
                std::cerr << "roots: requires coprime positive M, N\n";
                return 2;
            }
            qdilog::IntegrandSpec spec = qdilog::IntegrandSpec::pretzel();
            if (!rpretzel) {
                if (!(rB > rA && rA > 0)) {
                    std::cerr << "roots: requires --pretzel or B > A > 0\n";
                    return 2;
                }
                spec = qdilog::IntegrandSpec::ab(rA, rB);
            }
            const qdilog::AdmissiblePair pair(rM, rN);
            const double lambda =
                rlambda_set ? rlambda : qdilog::default_lambda(spec, pair);
            const auto pts = qdilog::strip_set(spec, pair, lambda);
            if (json) {
                qdilog::EvaluationReport rep;
                rep.method = qdilog::Method::closed_form;
                rep.strip_points = pts;
                rep.lambda = lambda;
                rep.diagnostics.lambda = lambda;
                Params params{{"M", std::to_string(rM)}, {"N", std::to_string(rN)}};
                if (!rpretzel) {
                    params.emplace_back("A", std::to_string(rA));
                    params.emplace_back("B", std::to_string(rB));
                } else {
                    params.emplace_back("family", "\"pretzel\"");
                }
                std::cout << qdilog::report_to_json(rep, params) << "\n";
            } else {
                std::cout << pts.size() << " strip points, lambda = "
                          << qdilog::fmt17(lambda) << "\n";
                for (const auto& p : pts)
                    std::cout << "  w = " << fmt_complex_text(p.w)
                              << "   z = " << fmt_complex_text(p.z)
                              << "   Im(log z)/pi = "
                              << qdilog::fmt17(p.log_z.value.imag() / qdilog::kPi) << "\n";
            }
            return 0;
        }
        if (*verify) {
            const auto results = qdilog::run_verification(suite, seed);
            std::cout << qdilog::render_verification(results);
            return qdilog::verification_passed(results) ? 0 : 1;
        }
    } catch (const qdilog::Error& e) {
        return fail_json(e);
    }
    return 2;
}
