#include "veronese/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

#include "veronese/compositions.hpp"
#include "veronese/eulerian.hpp"
#include "veronese/io.hpp"
#include "veronese/root_analysis.hpp"
#include "veronese/simplicial.hpp"
#include "veronese/veronese.hpp"

namespace veronese::cli {

namespace {

using io::json;

struct Common {
    std::string out_path;
    std::string format = "text";
};

void add_common(CLI::App* sub, Common& c, const char* default_format = "text") {
    c.format = default_format;
    sub->add_option("--out", c.out_path, "Write output to this file instead of stdout");
    sub->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
}

void emit(const std::string& text, const Common& c, std::ostream& out) {
    std::string payload = text;
    if (payload.empty() || payload.back() != '\n') payload += '\n';
    if (c.out_path.empty())
        out << payload;
    else
        io::write_file(c.out_path, payload);
}

json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

std::string matrix_to_text(const IntMatrix& m) {
    std::ostringstream os;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) os << (j ? " " : "") << to_string(m.at(i, j));
        os << '\n';
    }
    return os.str();
}

std::string integers_to_text(const std::vector<Integer>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << to_string(v[i]);
    return os.str();
}

json integers_to_json(const std::vector<Integer>& v) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back(to_string(x));
    return arr;
}

/// expand / subsample / fit route of the transform, for --oracle-check.
bool oracle_matches(const RationalSeries& f, int order, int terms) {
    const auto coeffs = f.expand(order * terms);
    std::vector<Rational> sub;
    sub.reserve(static_cast<size_t>(terms));
    for (int k = 0; k < terms; ++k) sub.push_back(coeffs[static_cast<size_t>(k) * order]);
    const Polynomial fitted = fit_numerator(sub, f.denom_power());
    return fitted == veronese_numerator(f.numerator(), f.denom_power(), order);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Veronese transforms of rational series, spectral checks, root sweeps, "
                 "and edgewise subdivision of simplicial complexes"};
    app.require_subcommand(1);

    // veronese
    std::string v_series;
    int v_order = 1;
    bool v_matrix = false;
    int v_oracle = 0;
    Common v_common;
    auto* veronese_cmd = app.add_subcommand("veronese", "Transform a series h(t)/(1-t)^d to order r");
    veronese_cmd->add_option("--series", v_series, "Series: inline JSON, 'h = [...]; d = k', or file")
        ->required();
    veronese_cmd->add_option("--order", v_order, "Veronese order r >= 1")->required();
    veronese_cmd->add_flag("--matrix", v_matrix, "Include the (d+1)x(d+1) transform matrix");
    veronese_cmd->add_option("--oracle-check", v_oracle,
                             "Verify against expand/subsample/fit with this many terms");
    add_common(veronese_cmd, v_common, "json");

    // compositions
    long c_bound = 0, c_parts = 0, c_total = 0;
    bool c_enum = false;
    Common c_common;
    auto* comp_cmd = app.add_subcommand("compositions", "Count or list bounded compositions");
    comp_cmd->add_option("--bound", c_bound, "Per-part bound r")->required();
    comp_cmd->add_option("--parts", c_parts, "Number of parts d")->required();
    comp_cmd->add_option("--total", c_total, "Composition total i")->required();
    comp_cmd->add_flag("--enumerate", c_enum, "List the tuples instead of counting");
    add_common(comp_cmd, c_common);

    // eulerian
    int e_degree = 0;
    Common e_common;
    auto* euler_cmd = app.add_subcommand("eulerian", "Coefficients of the Eulerian polynomial A_d(t)");
    euler_cmd->add_option("--degree", e_degree, "Index d >= -1")->required();
    add_common(euler_cmd, e_common);

    // lmatrix
    int l_dim = 1;
    Common l_common;
    auto* lmatrix_cmd = app.add_subcommand("lmatrix", "Rows of the base-change matrix L_d");
    lmatrix_cmd->add_option("--dim", l_dim, "Dimension d >= 1")->required();
    add_common(lmatrix_cmd, l_common);

    // verify
    int verify_dim = 5, verify_order = 6;
    Common verify_common;
    auto* verify_cmd = app.add_subcommand(
        "verify", "Exact factorization and Eulerian-identity checks over a (d, r) grid");
    verify_cmd->add_option("--max-dim", verify_dim, "Largest d (default 5)");
    verify_cmd->add_option("--max-order", verify_order, "Largest r (default 6)");
    add_common(verify_cmd, verify_common);

    // sweep
    std::string s_series, s_orders;
    int s_target = 0;
    double s_tol = 1e-12;
    Common s_common;
    auto* sweep_cmd = app.add_subcommand("sweep", "Root profiles of h^<r> over a range of orders");
    sweep_cmd->add_option("--series", s_series, "Series: inline JSON, text literal, or file")
        ->required();
    sweep_cmd->add_option("--orders", s_orders, "Orders, e.g. 1..200, 10..200:10, or 2,4,8")
        ->required();
    sweep_cmd->add_option("--target-limit", s_target, "0: profile h^<r>; -1: profile its f-polynomial")
        ->check(CLI::IsMember({0, -1}));
    sweep_cmd->add_option("--tol", s_tol, "Root-finder residual tolerance (default 1e-12)");
    add_common(sweep_cmd, s_common, "json");

    // subdivide
    std::string sub_complex;
    int sub_order = 1;
    Common sub_common;
    auto* subdivide_cmd = app.add_subcommand("subdivide", "r-th edgewise subdivision of a complex");
    subdivide_cmd->add_option("--complex", sub_complex, "Complex: inline JSON or file")->required();
    subdivide_cmd->add_option("--order", sub_order, "Subdivision order r >= 1")->required();
    add_common(subdivide_cmd, sub_common, "json");

    // fvector
    std::string fv_complex;
    Common fv_common;
    auto* fvector_cmd = app.add_subcommand("fvector", "f-vector (f_{-1}, ..., f_{d-1}) of a complex");
    fvector_cmd->add_option("--complex", fv_complex, "Complex: inline JSON or file")->required();
    add_common(fvector_cmd, fv_common);

    // consistency
    std::string cons_complex;
    int cons_order = 1;
    Common cons_common;
    auto* cons_cmd = app.add_subcommand(
        "consistency", "Compare h(edgewise subdivision) with the series transform of h");
    cons_cmd->add_option("--complex", cons_complex, "Complex: inline JSON or file")->required();
    cons_cmd->add_option("--order", cons_order, "Order r >= 1")->required();
    add_common(cons_cmd, cons_common);

    // expand
    std::string x_series;
    int x_count = 1;
    Common x_common;
    auto* expand_cmd = app.add_subcommand("expand", "Taylor coefficients a_0 .. a_{count-1}");
    expand_cmd->add_option("--series", x_series, "Series: inline JSON, text literal, or file")
        ->required();
    expand_cmd->add_option("--count", x_count, "Number of coefficients")->required();
    add_common(expand_cmd, x_common);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (veronese_cmd->parsed()) {
            const RationalSeries f = io::load_series(v_series);
            const RationalSeries image = veronese_series(f, v_order);
            bool oracle_ok = true;
            if (v_common.format == "json") {
                json j = io::series_to_json(image);
                if (v_matrix) j["matrix"] = matrix_to_json(transform_matrix(f.denom_power(), v_order));
                if (v_oracle > 0) {
                    oracle_ok = oracle_matches(f, v_order, v_oracle);
                    j["oracle_check"] = json{{"terms", v_oracle}, {"match", oracle_ok}};
                }
                emit(j.dump(2), v_common, out);
            } else {
                std::ostringstream os;
                os << io::series_to_text(image) << '\n';
                if (v_matrix) os << matrix_to_text(transform_matrix(f.denom_power(), v_order));
                if (v_oracle > 0) {
                    oracle_ok = oracle_matches(f, v_order, v_oracle);
                    os << "oracle check (" << v_oracle << " terms): "
                       << (oracle_ok ? "match" : "MISMATCH") << '\n';
                }
                emit(os.str(), v_common, out);
            }
            if (!oracle_ok) {
                err << "error: transform disagrees with the expand/subsample/fit oracle\n";
                return 1;
            }
        } else if (comp_cmd->parsed()) {
            if (c_enum) {
                const auto tuples =
                    enumerate_bounded(static_cast<int>(c_bound), static_cast<int>(c_parts), c_total);
                if (c_common.format == "json") {
                    json arr = json::array();
                    for (const auto& t : tuples) arr.push_back(t);
                    emit(arr.dump(2), c_common, out);
                } else {
                    std::ostringstream os;
                    for (const auto& t : tuples) {
                        for (size_t i = 0; i < t.size(); ++i) os << (i ? " " : "") << t[i];
                        os << '\n';
                    }
                    emit(os.str(), c_common, out);
                }
            } else {
                const Integer n = count_bounded(c_bound, c_parts, c_total);
                emit(c_common.format == "json" ? json(to_string(n)).dump() : to_string(n), c_common,
                     out);
            }
        } else if (euler_cmd->parsed()) {
            const Polynomial a = eulerian_polynomial(e_degree);
            std::vector<Integer> coeffs;
            for (const auto& c : a.coeffs()) coeffs.push_back(c.get_num());
            emit(e_common.format == "json" ? integers_to_json(coeffs).dump()
                                           : integers_to_text(coeffs),
                 e_common, out);
        } else if (lmatrix_cmd->parsed()) {
            const IntMatrix l = l_matrix(l_dim);
            emit(l_common.format == "json" ? matrix_to_json(l).dump(2) : matrix_to_text(l),
                 l_common, out);
        } else if (verify_cmd->parsed()) {
            long triples = 0;
            std::vector<std::pair<int, int>> failures;
            for (int d = 1; d <= verify_dim; ++d)
                for (int r = 1; r <= verify_order; ++r) {
                    const bool fact = verify_factorization(d, r);
                    const bool euler = check_euler_identity(d, r);
                    if (fact && euler)
                        triples += 2L * (d + 1);
                    else
                        failures.emplace_back(d, r);
                }
            if (verify_common.format == "json") {
                json jf = json::array();
                for (auto [d, r] : failures) jf.push_back(json{{"d", d}, {"r", r}});
                emit(json{{"ok", failures.empty()}, {"triples", triples}, {"failures", jf}}.dump(2),
                     verify_common, out);
            } else if (failures.empty()) {
                emit("all checks passed: " + std::to_string(triples) + " (d,r,i) triples verified",
                     verify_common, out);
            } else {
                std::ostringstream os;
                for (auto [d, r] : failures) os << "FAILED at d=" << d << " r=" << r << '\n';
                emit(os.str(), verify_common, out);
            }
            if (!failures.empty()) return 1;
        } else if (sweep_cmd->parsed()) {
            const RationalSeries f = io::load_series(s_series);
            const auto orders = io::parse_orders(s_orders);
            const SweepTarget target =
                s_target == -1 ? SweepTarget::FPolynomial : SweepTarget::HNumerator;
            const SweepReport report = sweep(f, orders, target, s_tol);
            if (s_common.format == "json") {
                emit(io::sweep_report_to_json(report).dump(2), s_common, out);
            } else {
                std::ostringstream os;
                os << "order real_count negative_count all_real beta_min beta_max target_gap\n";
                for (size_t k = 0; k < report.profiles.size(); ++k) {
                    const auto& p = report.profiles[k];
                    os << p.order << ' ' << p.real_count << ' ' << p.negative_count << ' '
                       << (p.all_real ? "yes" : "no") << ' ';
                    if (p.converged && !p.betas.empty())
                        os << io::format_double(p.betas.front().real()) << ' '
                           << io::format_double(p.betas.back().real());
                    else
                        os << "- -";
                    os << ' '
                       << (report.target_gap[k] ? io::format_double(*report.target_gap[k]) : "-")
                       << '\n';
                }
                if (report.threshold) os << "threshold " << *report.threshold << '\n';
                emit(os.str(), s_common, out);
            }
        } else if (subdivide_cmd->parsed()) {
            const SimplicialComplex c = io::load_complex(sub_complex);
            const Subdivision s = edgewise_subdivision_detailed(c, sub_order);
            emit(io::subdivision_to_json(s).dump(2), sub_common, out);
        } else if (fvector_cmd->parsed()) {
            const FVector f = f_vector(io::load_complex(fv_complex));
            emit(fv_common.format == "json" ? integers_to_json(f).dump() : integers_to_text(f),
                 fv_common, out);
        } else if (cons_cmd->parsed()) {
            const SimplicialComplex c = io::load_complex(cons_complex);
            const int d = c.dimension() + 1;
            const Polynomial sub_h = h_from_f(f_vector(edgewise_subdivision(c, cons_order)));
            const Polynomial trans_h = veronese_numerator(h_from_f(f_vector(c)), d, cons_order);
            const bool ok = sub_h == trans_h;
            if (cons_common.format == "json") {
                json j{{"consistent", ok},
                       {"order", cons_order},
                       {"subdivision_h", io::series_to_json(RationalSeries(sub_h, d))["numerator"]},
                       {"transform_h", io::series_to_json(RationalSeries(trans_h, d))["numerator"]}};
                emit(j.dump(2), cons_common, out);
            } else {
                std::ostringstream os;
                os << (ok ? "true" : "false") << '\n'
                   << "subdivision h: " << io::series_to_text(RationalSeries(sub_h, d)) << '\n'
                   << "transform h:   " << io::series_to_text(RationalSeries(trans_h, d)) << '\n';
                emit(os.str(), cons_common, out);
            }
        } else if (expand_cmd->parsed()) {
            const RationalSeries f = io::load_series(x_series);
            const auto coeffs = f.expand(x_count);
            if (x_common.format == "json") {
                json arr = json::array();
                for (const auto& c : coeffs) arr.push_back(to_string(c));
                emit(arr.dump(2), x_common, out);
            } else {
                std::ostringstream os;
                for (const auto& c : coeffs) os << to_string(c) << '\n';
                emit(os.str(), x_common, out);
            }
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace veronese::cli
