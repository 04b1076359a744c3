// Command-line front end: point evaluation through the independent pipelines,
// identity suites, comparison tables and quadrature convergence studies.

#include <CLI11.hpp>
#include <json.hpp>

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gnfam/closed_forms.hpp"
#include "gnfam/contour.hpp"
#include "gnfam/series.hpp"
#include "gnfam/suites.hpp"
#include "gnfam/symmetry.hpp"

using gnfam::Complex;
using gnfam::CPoint;
using json = nlohmann::ordered_json;

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Complex parse_complex(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw CLI::ValidationError("empty coordinate");
    bool imag_unit = s.back() == 'i' || s.back() == 'I';
    if (!imag_unit) return Complex(std::stod(s), 0.0);
    s.pop_back();
    // split at the last +/- that is not an exponent sign
    size_t split = std::string::npos;
    for (size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) {
        if (s.empty() || s == "+" || s == "-") s += "1";
        return Complex(0.0, std::stod(s));
    }
    std::string im = s.substr(split);
    if (im == "+" || im == "-") im += "1";
    return Complex(std::stod(s.substr(0, split)), std::stod(im));
}

CPoint parse_point(const std::string& spec, int n) {
    std::vector<Complex> coords;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) coords.push_back(parse_complex(item));
    if (n > 0 && static_cast<int>(coords.size()) != n)
        throw CLI::ValidationError("--point has " + std::to_string(coords.size()) +
                                   " coordinates, expected " + std::to_string(n));
    return CPoint(coords);
}

struct MethodRow {
    std::string method;
    Complex value;
    double err_est = 0.0;
    std::int64_t work = 0;
};

gnfam::Evaluation eval_with(const std::string& method, const CPoint& x,
                            const gnfam::TruncationSpec& trunc,
                            const gnfam::ContourSpec& contour, double tol) {
    const int n = x.dim();
    if (method == "series") return gnfam::eval_gn_series(x, trunc);
    if (method == "closed") {
        if (n > 3)
            throw gnfam::UnsupportedDimensionError("method=closed requires n <= 3");
        Complex v = n == 1   ? gnfam::g1(x.x(1))
                    : n == 2 ? gnfam::g2(x.x(1), x.x(2))
                             : gnfam::g3(x);
        return gnfam::Evaluation{v, 0.0, 0, 0};
    }
    if (method == "recursion") {
        if (n > 4)
            throw gnfam::UnsupportedDimensionError(
                "method=recursion evaluates on a closed-form base, so n <= 4");
        gnfam::BaseEvaluator base;
        if (n >= 2)
            base = n == 2 ? gnfam::base_g1() : n == 3 ? gnfam::base_g2() : gnfam::base_g3();
        return gnfam::gn_via_recursion(x, base, contour, tol);
    }
    if (method == "multicontour") {
        if (n > 3)
            throw gnfam::UnsupportedDimensionError("method=multicontour requires n <= 3");
        return gnfam::gn_via_multicontour(x, contour, tol);
    }
    throw CLI::ValidationError("unknown method: " + method);
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot open --out file " + out_path);
        f << text;
    }
}

bool color_enabled() {
    return std::getenv("NO_COLOR") == nullptr && isatty(fileno(stdout));
}

std::string pass_word(bool ok) {
    if (!color_enabled()) return ok ? "PASS" : "FAIL";
    return ok ? "\x1b[32mPASS\x1b[0m" : "\x1b[31mFAIL\x1b[0m";
}

std::string csv_point_header(int n) {
    std::string h;
    for (int j = 1; j <= n; ++j)
        h += ",x" + std::to_string(j) + "_re,x" + std::to_string(j) + "_im";
    return h;
}

std::string csv_point_fields(const CPoint& x) {
    std::string s;
    for (const Complex& c : x.coords()) s += "," + fmt(c.real()) + "," + fmt(c.imag());
    return s;
}

int run_eval(const CPoint& x, const std::vector<std::string>& methods,
             const gnfam::TruncationSpec& trunc, const gnfam::ContourSpec& contour,
             double tol, const std::string& format, const std::string& out_path) {
    std::vector<MethodRow> rows;
    for (const std::string& m : methods) {
        gnfam::Evaluation e = eval_with(m, x, trunc, contour, tol);
        rows.push_back({m, e.value, e.error_estimate, e.terms_used});
    }

    std::ostringstream os;
    if (format == "csv") {
        os << "n" << csv_point_header(x.dim())
           << ",method,value_re,value_im,err_est,nodes_or_terms\n";
        for (const auto& r : rows)
            os << x.dim() << csv_point_fields(x) << "," << r.method << ","
               << fmt(r.value.real()) << "," << fmt(r.value.imag()) << ","
               << fmt(r.err_est) << "," << r.work << "\n";
    } else if (format == "json") {
        json doc;
        doc["n"] = x.dim();
        json pt = json::array();
        for (const Complex& c : x.coords()) pt.push_back({{"re", c.real()}, {"im", c.imag()}});
        doc["point"] = pt;
        json jr = json::array();
        for (const auto& r : rows)
            jr.push_back({{"method", r.method},
                          {"value_re", r.value.real()},
                          {"value_im", r.value.imag()},
                          {"err_est", r.err_est},
                          {"nodes_or_terms", r.work}});
        doc["results"] = jr;
        if (rows.size() >= 2) {
            json deltas = json::array();
            for (size_t i = 0; i < rows.size(); ++i)
                for (size_t j = i + 1; j < rows.size(); ++j)
                    deltas.push_back({{"pair", rows[i].method + "/" + rows[j].method},
                                      {"abs_delta", std::abs(rows[i].value - rows[j].value)}});
            doc["deltas"] = deltas;
        }
        os << doc.dump(2) << "\n";
    } else {
        for (const auto& r : rows) {
            os << r.method << ": value = " << fmt(r.value.real());
            if (r.value.imag() != 0.0) os << " + " << fmt(r.value.imag()) << "i";
            os << "  (err est " << fmt(r.err_est) << ", work " << r.work << ")\n";
        }
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = i + 1; j < rows.size(); ++j)
                os << "delta " << rows[i].method << "/" << rows[j].method << " = "
                   << fmt(std::abs(rows[i].value - rows[j].value)) << "\n";
    }
    write_output(os.str(), out_path);
    return 0;
}

int run_verify(const std::string& suite, const gnfam::suites::SuiteConfig& cfg,
               const std::string& format, const std::string& out_path) {
    std::vector<gnfam::suites::SuiteResult> results = gnfam::suites::run_by_name(suite, cfg);
    bool all_pass = true;
    std::ostringstream os;
    if (format == "json") {
        json doc = json::array();
        for (const auto& r : results) {
            all_pass = all_pass && r.pass;
            doc.push_back({{"suite", r.name},
                           {"pass", r.pass},
                           {"cases", r.cases},
                           {"worst_residual", r.worst_residual},
                           {"first_failure", r.first_failure}});
        }
        os << doc.dump(2) << "\n";
    } else if (format == "csv") {
        os << "suite,pass,cases,worst_residual\n";
        for (const auto& r : results) {
            all_pass = all_pass && r.pass;
            os << r.name << "," << (r.pass ? 1 : 0) << "," << r.cases << ","
               << fmt(r.worst_residual) << "\n";
        }
    } else {
        for (const auto& r : results) {
            all_pass = all_pass && r.pass;
            os << r.name << ": " << pass_word(r.pass) << "  (" << r.cases
               << " cases, worst residual " << fmt(r.worst_residual) << ")\n";
            if (!r.pass)
                os << "  first counterexample: " << r.first_failure << "\n"
                   << "  reproduce: gn verify --suite " << r.name << " --seed "
                   << cfg.seed << "\n";
        }
    }
    write_output(os.str(), out_path);
    return all_pass ? 0 : 1;
}

int run_table(int n, const std::string& grid_spec,
              const std::vector<std::string>& methods,
              const gnfam::TruncationSpec& trunc, const gnfam::ContourSpec& contour,
              double tol, const std::string& format, const std::string& out_path) {
    double lo = 0.0, hi = 0.1;
    int count = 5;
    {
        std::stringstream ss(grid_spec);
        std::string a, b, c;
        if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, c, ':'))
            throw CLI::ValidationError("--grid must be lo:hi:count");
        lo = std::stod(a);
        hi = std::stod(b);
        count = std::stoi(c);
        if (count < 1) throw CLI::ValidationError("--grid count must be >= 1");
    }

    std::vector<double> axis(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i)
        axis[static_cast<size_t>(i)] =
            count == 1 ? lo : lo + (hi - lo) * i / (count - 1);

    std::vector<CPoint> points;
    std::vector<int> ix(static_cast<size_t>(n), 0);
    for (;;) {
        std::vector<Complex> c(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j)
            c[static_cast<size_t>(j)] = axis[static_cast<size_t>(ix[static_cast<size_t>(j)])];
        points.emplace_back(c);
        int j = n - 1;
        while (j >= 0 && ++ix[static_cast<size_t>(j)] == count) ix[static_cast<size_t>(j--)] = 0;
        if (j < 0) break;
    }

    std::ostringstream os;
    json jrows = json::array();
    if (format != "json")
        os << "n" << csv_point_header(n) << ",method,value_re,value_im,err_est,nodes_or_terms\n";
    for (const CPoint& x : points) {
        for (const std::string& m : methods) {
            double vr, vi, err;
            std::int64_t work = 0;
            try {
                gnfam::Evaluation e = eval_with(m, x, trunc, contour, tol);
                vr = e.value.real();
                vi = e.value.imag();
                err = e.error_estimate;
                work = e.terms_used;
            } catch (const gnfam::Error&) {
                vr = vi = std::nan("");
                err = std::numeric_limits<double>::infinity();
            }
            if (format == "json") {
                json pt = json::array();
                for (const Complex& c : x.coords()) pt.push_back(c.real());
                jrows.push_back({{"n", n}, {"point", pt}, {"method", m},
                                 {"value_re", vr}, {"value_im", vi},
                                 {"err_est", err}, {"nodes_or_terms", work}});
            } else {
                os << n << csv_point_fields(x) << "," << m << "," << fmt(vr) << ","
                   << fmt(vi) << "," << fmt(err) << "," << work << "\n";
            }
        }
    }
    if (format == "json") os << jrows.dump(2) << "\n";
    write_output(os.str(), out_path);
    return 0;
}

int run_quadstudy(const std::string& method, const CPoint* x, Complex u, Complex z,
                  const gnfam::ContourSpec& contour, int max_nodes,
                  const std::string& format, const std::string& out_path) {
    struct Row {
        int nodes;
        Complex value;
        double diff;
    };
    std::vector<Row> rows;
    Complex prev = 0.0;
    for (int N = 16; N <= max_nodes; N *= 2) {
        Complex v;
        if (method == "recursion") {
            if (!x) throw CLI::ValidationError("--point required for recursion study");
            const int n = x->dim();
            gnfam::BaseEvaluator base;
            if (n >= 2)
                base = n == 2 ? gnfam::base_g1() : n == 3 ? gnfam::base_g2() : gnfam::base_g3();
            v = gnfam::gn_recursion_pass(*x, base, contour, N);
        } else if (method == "multicontour") {
            if (!x) throw CLI::ValidationError("--point required for multicontour study");
            if (x->dim() == 3 && N > 256) break;
            v = gnfam::gn_multicontour_pass(*x, contour, N);
        } else if (method == "kernel") {
            if (N < 64) continue;
            v = gnfam::kernel_loop_pass(u, z, contour, N, 12.8 / N);
        } else {
            throw CLI::ValidationError("unknown quadstudy method: " + method);
        }
        rows.push_back({N, v, rows.empty() ? std::nan("") : std::abs(v - prev)});
        prev = v;
    }

    std::ostringstream os;
    if (format == "json") {
        json doc = json::array();
        for (const auto& r : rows)
            doc.push_back({{"nodes", r.nodes},
                           {"value_re", r.value.real()},
                           {"value_im", r.value.imag()},
                           {"successive_diff", r.diff}});
        os << doc.dump(2) << "\n";
    } else {
        os << "nodes,value_re,value_im,successive_diff\n";
        for (const auto& r : rows)
            os << r.nodes << "," << fmt(r.value.real()) << "," << fmt(r.value.imag())
               << "," << fmt(r.diff) << "\n";
    }
    write_output(os.str(), out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Evaluators and identity suites for the squared-multinomial series family"};
    app.require_subcommand(1);

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate G_n at a point by one or more methods");
    int n = 0;
    std::string point_spec, method_spec = "series", format = "text", out_path, grid_spec;
    double tol = 1e-10;
    int max_degree = 120, nodes = 256, max_nodes = 4096;
    double radius = 0.5;
    std::uint64_t seed = 7;
    eval->add_option("--n", n, "dimension")->required();
    eval->add_option("--point", point_spec, "comma-separated coordinates, a+bi allowed")->required();
    eval->add_option("--method", method_spec, "series,closed,recursion,multicontour");
    eval->add_option("--tol", tol, "target tolerance");
    eval->add_option("--max-degree", max_degree, "series degree cap");
    eval->add_option("--nodes", nodes, "starting contour nodes");
    eval->add_option("--radius", radius, "contour radius");
    eval->add_option("--output", format, "text|csv|json");
    eval->add_option("--out", out_path, "write to file instead of stdout");

    // verify
    auto* verify = app.add_subcommand("verify", "run an identity suite");
    std::string suite = "all";
    int vmax_degree = 12, vn = 0;
    verify->add_option("--suite", suite, "pde|qcov|uinv|quasi|elliptic|riccati|appell|legendre|all");
    verify->add_option("--n", vn, "restrict to one dimension where applicable");
    verify->add_option("--max-degree", vmax_degree, "degree bound for the exact pde suite");
    verify->add_option("--seed", seed, "seed for random rational/real test points");
    verify->add_option("--output", format, "text|csv|json");
    verify->add_option("--out", out_path, "write to file instead of stdout");

    // table
    auto* table = app.add_subcommand("table", "tabulate methods over a grid");
    table->add_option("--n", n, "dimension")->required();
    table->add_option("--grid", grid_spec, "lo:hi:count, applied per axis")->required();
    table->add_option("--method", method_spec, "comma-separated method list");
    table->add_option("--tol", tol, "target tolerance");
    table->add_option("--max-degree", max_degree, "series degree cap");
    table->add_option("--output", format, "text|csv|json");
    table->add_option("--out", out_path, "write to file instead of stdout");

    // quadstudy
    auto* quad = app.add_subcommand("quadstudy", "node-doubling convergence study");
    std::string qmethod = "recursion", u_spec = "0.2", z_spec = "0";
    quad->add_option("--method", qmethod, "recursion|multicontour|kernel");
    quad->add_option("--n", n, "dimension (recursion/multicontour)");
    quad->add_option("--point", point_spec, "evaluation point (recursion/multicontour)");
    quad->add_option("--u", u_spec, "kernel argument u");
    quad->add_option("--z", z_spec, "kernel argument z");
    quad->add_option("--max-nodes", max_nodes, "node cap");
    quad->add_option("--radius", radius, "contour radius");
    quad->add_option("--output", format, "text|csv|json");
    quad->add_option("--out", out_path, "write to file instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        gnfam::TruncationSpec trunc{max_degree, tol, 100'000'000};
        gnfam::ContourSpec contour{Complex(1.0), radius, nodes};
        std::vector<std::string> methods;
        {
            std::stringstream ss(method_spec);
            std::string item;
            while (std::getline(ss, item, ',')) methods.push_back(item);
        }

        if (eval->parsed()) {
            CPoint x = parse_point(point_spec, n);
            return run_eval(x, methods, trunc, contour, tol, format, out_path);
        }
        if (verify->parsed()) {
            gnfam::suites::SuiteConfig cfg{seed, vn, vmax_degree};
            return run_verify(suite, cfg, format, out_path);
        }
        if (table->parsed())
            return run_table(n, grid_spec, methods, trunc, contour, tol, format, out_path);
        if (quad->parsed()) {
            CPoint x;
            bool have_point = !point_spec.empty();
            if (have_point) x = parse_point(point_spec, n);
            return run_quadstudy(qmethod, have_point ? &x : nullptr,
                                 parse_complex(u_spec), parse_complex(z_spec), contour,
                                 max_nodes, format, out_path);
        }
    } catch (const gnfam::ConvergenceError& e) {
        std::cerr << "error (non-convergence): " << e.what() << "\n";
        return 3;
    } catch (const gnfam::NonConvergenceError& e) {
        std::cerr << "error (non-convergence): " << e.what() << "\n";
        return 3;
    } catch (const gnfam::Error& e) {
        std::cerr << "error (domain): " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
