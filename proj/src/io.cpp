#include "veronese/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace veronese::io {

namespace {

std::string trimmed(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

Rational rational_from_json(const json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
    throw std::invalid_argument("rational entries must be strings like \"p/q\" or integers");
}

json coeffs_to_json(const Polynomial& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
    return arr;
}

}  // namespace

json series_to_json(const RationalSeries& f) {
    return json{{"numerator", coeffs_to_json(f.numerator())}, {"denom_power", f.denom_power()}};
}

RationalSeries series_from_json(const json& j) {
    if (!j.is_object() || !j.contains("numerator") || !j.contains("denom_power"))
        throw std::invalid_argument("series JSON needs \"numerator\" and \"denom_power\"");
    std::vector<Rational> coeffs;
    for (const auto& v : j.at("numerator")) coeffs.push_back(rational_from_json(v));
    return RationalSeries(Polynomial(std::move(coeffs)), j.at("denom_power").get<int>());
}

std::string series_to_text(const RationalSeries& f) {
    std::ostringstream os;
    os << "h = [";
    const auto& c = f.numerator().coeffs();
    for (size_t i = 0; i < c.size(); ++i) os << (i ? ", " : "") << to_string(c[i]);
    if (c.empty()) os << "0";
    os << "]; d = " << f.denom_power();
    return os.str();
}

RationalSeries series_from_text(const std::string& text) {
    const auto open = text.find('[');
    const auto close = text.find(']', open == std::string::npos ? 0 : open);
    const auto head = text.find('=');
    if (open == std::string::npos || close == std::string::npos || head == std::string::npos ||
        head > open)
        throw std::invalid_argument("series literal must look like: h = [c0, c1, ...]; d = <int>");
    std::vector<Rational> coeffs;
    std::string body = text.substr(open + 1, close - open - 1);
    if (!trimmed(body).empty()) {
        std::istringstream is(body);
        std::string item;
        while (std::getline(is, item, ',')) coeffs.push_back(parse_rational(item));
    }
    const auto dpos = text.find('d', close);
    const auto eq = dpos == std::string::npos ? std::string::npos : text.find('=', dpos);
    if (eq == std::string::npos)
        throw std::invalid_argument("series literal is missing the \"; d = <int>\" part");
    const int d = std::stoi(trimmed(text.substr(eq + 1)));
    return RationalSeries(Polynomial(std::move(coeffs)), d);
}

RationalSeries load_series(const std::string& source) {
    const std::string s = trimmed(source);
    if (!s.empty() && s.front() == '{') return series_from_json(json::parse(s));
    if (s.find('[') != std::string::npos && s.find('=') != std::string::npos)
        return series_from_text(s);
    return load_series(read_file(s));
}

json complex_to_json(const SimplicialComplex& c) {
    json facets = json::array();
    for (const auto& f : c.facets()) facets.push_back(f);
    return json{{"n", c.ground_size()}, {"facets", facets}};
}

json subdivision_to_json(const Subdivision& s) {
    json j = complex_to_json(s.complex);
    json verts = json::array();
    for (const auto& pt : s.coordinates) verts.push_back(pt);
    j["vertices"] = verts;
    return j;
}

SimplicialComplex complex_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("facets"))
        throw std::invalid_argument("complex JSON needs \"n\" and \"facets\"");
    std::vector<std::vector<int>> facets;
    for (const auto& f : j.at("facets")) facets.push_back(f.get<std::vector<int>>());
    return SimplicialComplex(j.at("n").get<int>(), std::move(facets));
}

SimplicialComplex load_complex(const std::string& source) {
    const std::string s = trimmed(source);
    if (!s.empty() && s.front() == '{') return complex_from_json(json::parse(s));
    return complex_from_json(json::parse(read_file(s)));
}

namespace {

const char* class_name(BetaClass c) {
    switch (c) {
        case BetaClass::RealNegative: return "real-negative";
        case BetaClass::RealNonnegative: return "real-nonnegative";
        case BetaClass::Complex: return "complex";
    }
    return "?";
}

}  // namespace

json profile_to_json(const RootProfile& p) {
    json betas = json::array();
    json classes = json::array();
    for (size_t i = 0; i < p.betas.size(); ++i) {
        betas.push_back(json{{"re", format_double(p.betas[i].real())},
                             {"im", format_double(p.betas[i].imag())}});
        classes.push_back(class_name(p.classes[i]));
    }
    return json{{"order", p.order},
                {"numerator", coeffs_to_json(p.numerator)},
                {"converged", p.converged},
                {"all_real", p.all_real},
                {"real_count", p.real_count},
                {"negative_count", p.negative_count},
                {"betas", betas},
                {"classes", classes}};
}

namespace {

json optional_array(const std::vector<std::optional<double>>& v) {
    json arr = json::array();
    for (const auto& x : v) {
        if (x)
            arr.push_back(format_double(*x));
        else
            arr.push_back(nullptr);
    }
    return arr;
}

}  // namespace

json sweep_report_to_json(const SweepReport& report) {
    json profiles = json::array();
    for (const auto& p : report.profiles) profiles.push_back(profile_to_json(p));
    json j{{"series", series_to_json(report.input)},
           {"orders", report.orders},
           {"target_limit", report.target_limit()},
           {"tolerance", report.tolerance},
           {"precision", 15},
           {"nonnegative_tail", report.nonnegative_tail},
           {"profiles", profiles},
           {"diagnostics",
            json{{"middle_cauchy", optional_array(report.middle_cauchy)},
                 {"min_beta_delta", optional_array(report.min_beta_delta)},
                 {"target_gap", optional_array(report.target_gap)}}}};
    if (report.threshold)
        j["threshold"] = *report.threshold;
    else
        j["threshold"] = nullptr;
    return j;
}

std::vector<int> parse_orders(const std::string& text) {
    std::vector<int> orders;
    std::istringstream is(text);
    std::string token;
    while (std::getline(is, token, ',')) {
        token = trimmed(token);
        if (token.empty()) continue;
        const auto dots = token.find("..");
        if (dots == std::string::npos) {
            orders.push_back(std::stoi(token));
            continue;
        }
        const int lo = std::stoi(token.substr(0, dots));
        std::string rest = token.substr(dots + 2);
        int step = 1;
        const auto colon = rest.find(':');
        if (colon != std::string::npos) {
            step = std::stoi(rest.substr(colon + 1));
            rest = rest.substr(0, colon);
        }
        const int hi = std::stoi(rest);
        if (step < 1) throw std::invalid_argument("order range step must be >= 1");
        for (int r = lo; r <= hi; r += step) orders.push_back(r);
    }
    if (orders.empty()) throw std::invalid_argument("empty order list: '" + text + "'");
    return orders;
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

}  // namespace veronese::io
