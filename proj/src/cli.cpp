#include "alphabwm/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "alphabwm/errors.hpp"
#include "alphabwm/report.hpp"
#include "alphabwm/service.hpp"

namespace alphabwm {

namespace {

nlohmann::json read_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("", "cannot read '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str());
}

std::vector<double> parse_numbers(std::string text, const std::string& what) {
    for (char& c : text) {
        if (c == '(' || c == ')' || c == '[' || c == ']') c = ' ';
    }
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ValidationError(what, "cannot read '" + item + "' as a number");
        }
    }
    return out;
}

Tfn parse_tfn(const std::string& text, const std::string& what) {
    const auto v = parse_numbers(text, what);
    if (v.size() != 3) throw ValidationError(what, "expected three comma-separated numbers a,b,c");
    try {
        return Tfn(v[0], v[1], v[2]);
    } catch (const DomainError& e) {
        throw ValidationError(what, e.what());
    }
}

void emit(std::ostream& out, const Rendered& r, const std::string& format) {
    if (format == "json") {
        out << r.json.dump(2) << "\n";
    } else {
        out << r.table;
    }
}

std::string csv_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void divide(std::ostream& out, const Tfn& num, const Tfn& den, int samples) {
    const Tfn approx = approximate_quotient(num, den);
    const Interval support = quotient_cut(num, den, 0.0);
    const double lo = std::min(support.lo, approx.lower());
    const double hi = std::max(support.hi, approx.upper());
    out << "x,exact,approx\n";
    for (int k = 0; k < samples; ++k) {
        const double x = k + 1 == samples ? hi : lo + (hi - lo) * k / (samples - 1);
        out << csv_number(x) << "," << csv_number(exact_quotient_membership(num, den, x)) << ","
            << csv_number(approx.membership(x)) << "\n";
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fuzzy best-worst weights with alpha-cut intervals", "alphabwm"};
    app.require_subcommand(1);
    const std::vector<std::string> formats{"table", "json"};

    auto* solve_cmd = app.add_subcommand("solve", "Solve a system or hierarchy for interval weights");
    std::string solve_input;
    std::optional<int> solve_m;
    std::string solve_grid;
    std::uint64_t solve_seed = SolverOptions{}.seed;
    double solve_tol = SolverOptions{}.optimality_tol;
    std::string solve_format = "table";
    solve_cmd->add_option("input", solve_input, "FPCS or hierarchy JSON file")->required();
    auto* m_opt = solve_cmd->add_option("--m", solve_m, "Uniform grid size (default 17)");
    solve_cmd->add_option("--grid", solve_grid, "Explicit alpha levels, comma separated")->excludes(m_opt);
    solve_cmd->add_option("--seed", solve_seed, "Seed recorded with the result");
    solve_cmd->add_option("--tol", solve_tol, "Optimality tolerance")->check(CLI::PositiveNumber);
    solve_cmd->add_option("--format", solve_format, "table or json")->check(CLI::IsMember(formats));

    auto* cons_cmd = app.add_subcommand("consistency", "Check the necessary consistency conditions and CR bound");
    std::string cons_input;
    int cons_points = kDefaultGridPoints;
    double cons_threshold = kDefaultThreshold;
    std::string cons_format = "table";
    cons_cmd->add_option("input", cons_input, "FPCS JSON file")->required();
    cons_cmd->add_option("--grid-points", cons_points, "Uniform grid size")->check(CLI::Range(2, 100000));
    cons_cmd->add_option("--threshold", cons_threshold, "CR acceptability threshold (a convention)")
        ->check(CLI::NonNegativeNumber);
    cons_cmd->add_option("--format", cons_format, "table or json")->check(CLI::IsMember(formats));

    auto* ci_cmd = app.add_subcommand("ci-table", "Lower bounds of the consistency index per best-to-worst term");
    std::string ci_format = "table";
    ci_cmd->add_option("--format", ci_format, "table or json")->check(CLI::IsMember(formats));

    auto* div_cmd = app.add_subcommand("divide", "Exact vs approximate fuzzy quotient membership as CSV");
    std::string div_num;
    std::string div_den;
    int div_samples = 1001;
    div_cmd->add_option("numerator", div_num, "TFN a,b,c")->required();
    div_cmd->add_option("denominator", div_den, "TFN a,b,c")->required();
    div_cmd->add_option("--samples", div_samples, "Number of sample points")->check(CLI::Range(2, 10000000));

    auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP JSON API");
    int serve_port = 8080;
    double serve_threshold = kDefaultThreshold;
    std::string serve_host = "0.0.0.0";
    std::string serve_static;
    serve_cmd->add_option("--port", serve_port, "Port (the PORT variable takes precedence)")->check(CLI::Range(0, 65535));
    serve_cmd->add_option("--threshold", serve_threshold, "Default CR threshold")->check(CLI::NonNegativeNumber);
    serve_cmd->add_option("--host", serve_host, "Bind address");
    serve_cmd->add_option("--static-dir", serve_static, "Directory of UI assets served at /");

    std::vector<std::string> rev(args.rbegin(), args.rend() - 1);
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*solve_cmd) {
            GridSpec grid;
            grid.m = solve_m;
            if (!solve_grid.empty()) grid.levels = parse_numbers(solve_grid, "grid");
            grid.build();
            SolverOptions opts;
            opts.seed = solve_seed;
            opts.optimality_tol = solve_tol;
            emit(out, run_solve({parse_document(read_document(solve_input)), grid, opts}), solve_format);
        } else if (*cons_cmd) {
            emit(out, run_consistency({parse_fpcs(read_document(cons_input)), cons_points, cons_threshold, {}}),
                 cons_format);
        } else if (*ci_cmd) {
            emit(out, render_ci_table(), ci_format);
        } else if (*div_cmd) {
            divide(out, parse_tfn(div_num, "numerator"), parse_tfn(div_den, "denominator"), div_samples);
        } else if (*serve_cmd) {
            if (const char* env = std::getenv("PORT"); env && *env) {
                try {
                    serve_port = std::stoi(env);
                } catch (const std::exception&) {
                    throw ValidationError("PORT", "PORT must be an integer");
                }
            }
            ServiceConfig config;
            config.threshold = serve_threshold;
            config.static_dir = serve_static;
            err << "listening on " << serve_host << ":" << serve_port << "\n";
            if (serve(serve_host, serve_port, config) != 0) {
                err << "error: cannot bind " << serve_host << ":" << serve_port << "\n";
                return kExitInput;
            }
        }
    } catch (const ValidationError& e) {
        err << "error";
        if (!e.field_path().empty()) err << " at " << e.field_path();
        err << ": " << e.what() << "\n";
        return kExitInput;
    } catch (const UndefinedIndexError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const SolverError& e) {
        err << "solver error: " << e.what() << "\n";
        return kExitSolver;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitSolver;
    }
    return kExitOk;
}

}  // namespace alphabwm
