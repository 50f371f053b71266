// Command-line lab for Jacobi-Angelesco, Jacobi-Laguerre and
// Laguerre-Hermite multiple orthogonal polynomial zeros: direct zero
// computation, parameter sweeps, verification suites and limit checks.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "angelesco/cascade.hpp"
#include "angelesco/gram.hpp"
#include "angelesco/limits.hpp"
#include "angelesco/params.hpp"
#include "angelesco/verify.hpp"

using nlohmann::json;
using namespace angelesco;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSolver = 3;

std::string num17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct CommonOpts {
    std::string family = "ja";
    double a = -1.0, alpha = 0.0, beta = 0.0, gamma = 0.0;
    int n = 1;
    std::string method = "cascade";
    double tol = kCascadeDefaultTol;
};

ZeroSet compute_zeros(const CommonOpts& o, double* residual) {
    if (o.family == "ja") {
        const AngelescoParams p = validate_params({o.a, o.alpha, o.beta, o.gamma});
        if (o.method == "gram") {
            const MonicPolynomial poly = build_type2_polynomial(p, o.n, o.n);
            if (residual) *residual = orthogonality_residual(poly, p, o.n, o.n);
            return localize_roots(poly, p, o.n, o.n);
        }
        const auto ladder = diagonal_ladder(p, o.n, o.tol);
        const ZeroSet& prev = (o.n >= 2) ? ladder[o.n - 2] : ZeroSet{};
        if (residual) {
            double worst = 0.0;
            for (double z : ladder.back().all())
                worst = std::max(worst, std::fabs(f_eval(z, prev, p)));
            *residual = worst;
        }
        return ladder.back();
    }
    if (o.family == "jl") {
        const auto [poly, z] = jl_build({o.a, o.alpha, o.beta}, o.n, o.n);
        if (residual) {
            double worst = 0.0;
            for (double x : z.all()) worst = std::max(worst, std::fabs(poly(x)));
            *residual = worst;
        }
        return z;
    }
    if (o.family == "lh") {
        const auto [poly, z] = lh_build({o.beta}, o.n, o.n);
        if (residual) {
            double worst = 0.0;
            for (double x : z.all()) worst = std::max(worst, std::fabs(poly(x)));
            *residual = worst;
        }
        return z;
    }
    throw std::invalid_argument("unknown family: " + o.family);
}

void add_common_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--family", o.family)
        ->check(CLI::IsMember({"ja", "jl", "lh"}));
    cmd->add_option("--a", o.a);
    cmd->add_option("--alpha", o.alpha);
    cmd->add_option("--beta", o.beta);
    cmd->add_option("--gamma", o.gamma);
    cmd->add_option("--n", o.n)->check(CLI::PositiveNumber);
    cmd->add_option("--method", o.method)->check(CLI::IsMember({"cascade", "gram"}));
    cmd->add_option("--tol", o.tol)->check(CLI::PositiveNumber);
}

int cmd_zeros(const CommonOpts& o) {
    double residual = 0.0;
    const ZeroSet z = compute_zeros(o, &residual);
    std::cout << "family " << o.family << " method " << o.method << " n " << o.n
              << " a " << num17(o.a) << " alpha " << num17(o.alpha) << " beta "
              << num17(o.beta) << " gamma " << num17(o.gamma) << "\n";
    for (double x : z.all()) std::cout << num17(x) << "\n";
    std::cout << "residual " << num17(residual) << "\n";
    return kExitPass;
}

struct SweepOpts {
    CommonOpts common;
    std::string param = "alpha";
    double from = 0.0, to = 1.0;
    int steps = 11;
    std::string format = "csv";
    std::string out;
    std::string svg;
};

std::string monotone_verdict(const std::vector<std::vector<double>>& rows, int col) {
    bool inc = true, dec = true;
    int first_violation = -1;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double d = rows[i][col + 1] - rows[i - 1][col + 1];
        if (d <= 0.0) inc = false;
        if (d >= 0.0) dec = false;
        if (!inc && !dec && first_violation < 0)
            first_violation = static_cast<int>(i);
    }
    if (inc) return "strictly-increasing";
    if (dec) return "strictly-decreasing";
    return "non-monotone (first violation at index " +
           std::to_string(first_violation) + ")";
}

void write_svg(const std::string& path, const SweepOpts& o,
               const std::vector<std::vector<double>>& rows, int ncols) {
    const int W = 720, H = 480, ml = 60, mr = 20, mt = 20, mb = 50;
    double ymin = 0.0, ymax = 1.0;
    for (const auto& row : rows)
        for (int c = 1; c <= ncols; ++c) {
            ymin = std::min(ymin, row[c]);
            ymax = std::max(ymax, row[c]);
        }
    ymin = std::min(ymin, o.common.a);
    const double xmin = o.from, xmax = o.to;
    auto X = [&](double v) { return ml + (v - xmin) / (xmax - xmin) * (W - ml - mr); };
    auto Y = [&](double v) { return H - mb - (v - ymin) / (ymax - ymin) * (H - mt - mb); };
    std::ofstream f(path);
    f << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W
      << "\" height=\"" << H << "\">\n";
    // axes
    f << "<line x1=\"" << ml << "\" y1=\"" << H - mb << "\" x2=\"" << W - mr
      << "\" y2=\"" << H - mb << "\" stroke=\"black\"/>\n";
    f << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
      << H - mb << "\" stroke=\"black\"/>\n";
    f << "<text x=\"" << (W / 2) << "\" y=\"" << H - 12
      << "\" text-anchor=\"middle\">" << o.param << "</text>\n";
    f << "<text x=\"16\" y=\"" << (H / 2)
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " << H / 2
      << ")\">zero</text>\n";
    // pole reference lines a, 0, 1
    for (double ref : {o.common.a, 0.0, 1.0}) {
        if (ref < ymin || ref > ymax) continue;
        f << "<line x1=\"" << ml << "\" y1=\"" << Y(ref) << "\" x2=\"" << W - mr
          << "\" y2=\"" << Y(ref)
          << "\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";
    }
    for (int c = 1; c <= ncols; ++c) {
        f << "<polyline fill=\"none\" stroke=\"hsl(" << (c * 70) % 360
          << ",60%,40%)\" points=\"";
        for (const auto& row : rows) f << X(row[0]) << "," << Y(row[c]) << " ";
        f << "\"/>\n";
    }
    f << "</svg>\n";
}

int cmd_sweep(const SweepOpts& o) {
    if (o.steps < 2 || !(o.from < o.to))
        throw std::invalid_argument("sweep needs from < to and steps >= 2");
    std::vector<std::vector<double>> rows;
    for (int i = 0; i < o.steps; ++i) {
        const double v = o.from + (o.to - o.from) * i / (o.steps - 1);
        CommonOpts c = o.common;
        if (o.param == "alpha")
            c.alpha = v;
        else if (o.param == "beta")
            c.beta = v;
        else if (o.param == "gamma")
            c.gamma = v;
        else
            throw std::invalid_argument("unknown sweep parameter: " + o.param);
        std::vector<double> row{v};
        for (double z : compute_zeros(c, nullptr).all()) row.push_back(z);
        rows.push_back(std::move(row));
    }
    const int ncols = static_cast<int>(rows.front().size()) - 1;

    std::ostringstream body;
    if (o.format == "csv") {
        body << "param";
        for (int c = 1; c <= ncols; ++c) body << ",z" << c;
        body << "\n";
        for (const auto& row : rows) {
            for (std::size_t c = 0; c < row.size(); ++c)
                body << (c ? "," : "") << num17(row[c]);
            body << "\n";
        }
    } else {
        json j;
        j["param"] = o.param;
        j["rows"] = json::array();
        for (const auto& row : rows) {
            json r;
            r["param"] = row[0];
            r["zeros"] = std::vector<double>(row.begin() + 1, row.end());
            j["rows"].push_back(std::move(r));
        }
        body << j.dump(2) << "\n";
    }
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!o.out.empty()) {
        file.open(o.out, std::ios::binary);
        out = &file;
    }
    *out << body.str();

    std::ostream& summary = o.out.empty() ? std::cerr : std::cout;
    for (int c = 1; c <= ncols; ++c)
        summary << "z" << c << ": " << monotone_verdict(rows, c - 1) << "\n";
    if (!o.svg.empty()) write_svg(o.svg, o, rows, ncols);
    return kExitPass;
}

struct VerifyOpts {
    std::string suite;
    int n_max = 4;
    std::optional<double> a, alpha, beta, gamma;
    std::string out;
};

int cmd_verify(const VerifyOpts& o) {
    SuiteOverrides ov{o.a, o.alpha, o.beta, o.gamma};
    const VerificationReport r = run_suite(o.suite, o.n_max, ov);
    json j;
    j["suite"] = r.suite;
    j["grid"] = r.grid;
    j["cases"] = json::array();
    for (const auto& c : r.cases)
        j["cases"].push_back({{"inputs", c.inputs},
                              {"verdict", c.pass ? "pass" : "fail"},
                              {"margin", c.margin},
                              {"detail", c.detail}});
    j["pass"] = r.pass;
    j["elapsed_seconds"] = r.elapsed_seconds;
    if (!o.out.empty()) {
        std::ofstream f(o.out, std::ios::binary);
        f << j.dump(2) << "\n";
    }
    std::cout << j.dump(2) << "\n";
    if (o.suite == "expansion-diagnostic") return kExitPass;
    return r.pass ? kExitPass : kExitVerifyFail;
}

struct LimitsOpts {
    std::string family = "lh";
    int n = 1;
    double a = -1.0, alpha = 0.0, beta = 0.0;
    std::string format = "csv";
    std::string out;
};

int cmd_limits(const LimitsOpts& o) {
    LimitCheckResult r;
    if (o.family == "lh")
        r = limit_check_lh(o.beta, o.n, {50, 100, 200, 400, 800});
    else if (o.family == "jl")
        r = limit_check_jl(o.alpha, o.beta, o.a, o.n, {50, 100, 200, 400});
    else
        throw std::invalid_argument("limits supports --family jl or lh");
    std::ostringstream body;
    if (o.format == "csv") {
        body << "scale,error,ratio\n";
        for (std::size_t i = 0; i < r.scale_values.size(); ++i)
            body << num17(r.scale_values[i]) << "," << num17(r.errors[i]) << ","
                 << (i ? num17(r.ratios[i - 1]) : "") << "\n";
    } else {
        json j{{"family", o.family},
               {"scale_values", r.scale_values},
               {"errors", r.errors},
               {"ratios", r.ratios}};
        body << j.dump(2) << "\n";
    }
    if (!o.out.empty())
        std::ofstream(o.out, std::ios::binary) << body.str();
    else
        std::cout << body.str();
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jacobi-Angelesco multiple orthogonal polynomial zero lab"};
    app.require_subcommand(1);

    CommonOpts zo;
    auto* zeros = app.add_subcommand("zeros", "compute the zeros of one polynomial");
    add_common_flags(zeros, zo);

    SweepOpts so;
    auto* sweep = app.add_subcommand("sweep", "zero trajectories over a parameter");
    add_common_flags(sweep, so.common);
    sweep->add_option("--param", so.param)
        ->check(CLI::IsMember({"alpha", "beta", "gamma"}));
    sweep->add_option("--from", so.from);
    sweep->add_option("--to", so.to);
    sweep->add_option("--steps", so.steps);
    sweep->add_option("--format", so.format)->check(CLI::IsMember({"csv", "json"}));
    sweep->add_option("--out", so.out);
    sweep->add_option("--svg", so.svg);

    VerifyOpts vo;
    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("--suite", vo.suite)->required();
    verify->add_option("--n-max", vo.n_max)->check(CLI::PositiveNumber);
    double va, val, vbe, vga;
    verify->add_option("--a", va)->each([&](const std::string&) { vo.a = va; });
    verify->add_option("--alpha", val)->each([&](const std::string&) { vo.alpha = val; });
    verify->add_option("--beta", vbe)->each([&](const std::string&) { vo.beta = vbe; });
    verify->add_option("--gamma", vga)->each([&](const std::string&) { vo.gamma = vga; });
    verify->add_option("--out", vo.out);

    LimitsOpts lo;
    auto* limits = app.add_subcommand("limits", "asymptotic-relation convergence check");
    limits->add_option("--family", lo.family)->check(CLI::IsMember({"jl", "lh"}));
    limits->add_option("--n", lo.n)->check(CLI::PositiveNumber);
    limits->add_option("--a", lo.a);
    limits->add_option("--alpha", lo.alpha);
    limits->add_option("--beta", lo.beta);
    limits->add_option("--format", lo.format)->check(CLI::IsMember({"csv", "json"}));
    limits->add_option("--out", lo.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*zeros) return cmd_zeros(zo);
        if (*sweep) return cmd_sweep(so);
        if (*verify) return cmd_verify(vo);
        if (*limits) return cmd_limits(lo);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "solver failure: " << e.what() << "\n";
        return kExitSolver;
    }
    return kExitUsage;
}
