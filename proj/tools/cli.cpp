#include "cli.hpp"

#include "io.hpp"

#include "fpsl/binomial.hpp"
#include "fpsl/eigen.hpp"
#include "fpsl/opcalc.hpp"
#include "fpsl/suites.hpp"
#include "fpsl/transforms.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

namespace fpsl::cli {

namespace {

enum class Format { Json, Text };

struct CliConfig {
    std::string command;
    std::string name; // target or suite
    std::optional<int> order;
    std::map<std::string, Rat> params;
    std::string input;
    Format format = Format::Text;
    bool parallel = false;
};

struct Target {
    std::string name;
    std::vector<std::string> required;
    std::vector<std::string> optional;
    bool needs_input;
    std::string summary;
    std::function<io::Json(const CliConfig&, int, const RSeries&)> compute;
};

Rat param(const CliConfig& c, const std::string& key, const Rat& fallback)
{
    auto it = c.params.find(key);
    return it == c.params.end() ? fallback : it->second;
}

int int_param(const CliConfig& c, const std::string& key, int fallback)
{
    Rat v = param(c, key, Rat(fallback));
    if (v.get_den() != 1 || !v.get_num().fits_sint_p())
        throw Error(ErrorKind::Config, "parameter " + key + " must be an integer");
    return static_cast<int>(v.get_num().get_si());
}

io::Json poly_list(const std::vector<AlphaPoly>& ps)
{
    io::Json a = io::Json::array();
    for (const auto& p : ps)
        a.push_back(io::to_json(p));
    return a;
}

const std::vector<Target>& targets()
{
    static const std::vector<Target> table{
        {"tf", {}, {}, true, "f/f'", [](const CliConfig&, int, const RSeries& f) { return io::to_json(transform_T(f)); }},
        {"tinv", {}, {}, true, "x exp(int (1/f - 1/x))",
            [](const CliConfig&, int, const RSeries& f) { return io::to_json(transform_T_inv(f)); }},
        {"qinv", {}, {}, true, "compositional inverse",
            [](const CliConfig&, int, const RSeries& f) { return io::to_json(invert(f)); }},
        {"qtq", {}, {}, true, "inverse of T applied to the inverse",
            [](const CliConfig&, int, const RSeries& f) { return io::to_json(transform_QTQ(f)); }},
        {"fn", {"n"}, {"A"}, false, "eigenseries with T f = f(px)/p, p^n = -n, f = x + A x^{n+1} + ...",
            [](const CliConfig& c, int N, const RSeries&) {
                return io::to_json(solve_fn(int_param(c, "n", 1), param(c, "A", 1), N).f);
            }},
        {"fn-recip", {"n"}, {"A"}, false, "x/f_n",
            [](const CliConfig& c, int N, const RSeries&) {
                return io::to_json(fn_reciprocal(solve_fn(int_param(c, "n", 1), param(c, "A", 1), N)));
            }},
        {"phi", {"p"}, {}, false, "phi_p from its coefficient recurrence",
            [](const CliConfig& c, int N, const RSeries&) { return io::to_json(solve_phi(param(c, "p", 0), N)); }},
        {"phi0", {}, {}, false, "phi_0 = -log(psi/x)",
            [](const CliConfig&, int N, const RSeries&) { return io::to_json(phi0_from_psi(N)); }},
        {"psi", {}, {}, false, "psi = Q T^-1 (x e^-x)",
            [](const CliConfig&, int N, const RSeries&) { return io::to_json(psi_series(N)); }},
        {"lambertw", {}, {}, false, "W = Q(x e^x)",
            [](const CliConfig&, int N, const RSeries&) { return io::to_json(lambert_w(N)); }},
        {"theta", {"m"}, {}, false, "Theta_m from its ODE",
            [](const CliConfig& c, int N, const RSeries&) { return io::to_json(theta_series(param(c, "m", 0), N)); }},
        {"nu", {}, {}, false, "nu_1..nu_order from the composition sums",
            [](const CliConfig&, int N, const RSeries&) {
                std::vector<AlphaPoly> v;
                for (int n = 1; n <= N; ++n)
                    v.push_back(nu_by_composition_sum(n, NuVariant::MultinomialSum));
                return poly_list(v);
            }},
        {"an", {}, {}, false, "a_1..a_order, the coefficients of psi",
            [](const CliConfig&, int N, const RSeries&) {
                io::Json a = io::Json::array();
                for (int n = 1; n <= N; ++n)
                    a.push_back(io::to_json(psi_coeff_by_composition_sum(n, AnVariant::MultinomialSum)));
                return a;
            }},
        {"pn", {}, {}, true, "binomial-type family p_0..p_order of f",
            [](const CliConfig&, int N, const RSeries& f) { return poly_list(family_from_f(f, N).p); }},
        {"ps", {}, {}, true, "canonical continuation p_s to depth order",
            [](const CliConfig&, int N, const RSeries& f) {
                auto c = continuation_from_f(f, N);
                io::Json q = io::Json::array();
                for (const auto& e : c.q)
                    q.push_back(io::to_json(e));
                return io::Json{{"f", io::to_json(c.f)}, {"q", q}, {"ps", io::to_json(c.ps)}};
            }},
        {"lng", {}, {}, true, "ln g(alpha) for g = f, to depth order",
            [](const CliConfig&, int N, const RSeries& f) { return io::to_json(ln_g(f, N)); }},
        {"stirling", {}, {"n"}, false, "signed Stirling numbers s(n, 0..n); n defaults to order",
            [](const CliConfig& c, int N, const RSeries&) {
                int n = int_param(c, "n", N);
                io::Json a = io::Json::array();
                for (int k = 0; k <= n; ++k)
                    a.push_back(io::to_json(stirling_first(n, k)));
                return a;
            }},
    };
    return table;
}

std::string joined(const std::vector<std::string>& names)
{
    std::string s;
    for (const auto& n : names)
        s += (s.empty() ? "" : ", ") + n;
    return s;
}

const Target& find_target(const std::string& name)
{
    for (const auto& t : targets())
        if (t.name == name)
            return t;
    std::vector<std::string> names;
    for (const auto& t : targets())
        names.push_back(t.name);
    throw Error(ErrorKind::Config, "unknown target '" + name + "'; valid: " + joined(names));
}

std::map<std::string, Rat> parse_params(const std::vector<std::string>& raw)
{
    std::map<std::string, Rat> out;
    for (const auto& p : raw) {
        auto eq = p.find('=');
        if (eq == std::string::npos || eq == 0)
            throw Error(ErrorKind::Config, "--param expects name=num/den, got '" + p + "'");
        std::string key = p.substr(0, eq);
        try {
            out[key] = parse_rat(p.substr(eq + 1));
        } catch (const Error&) {
            throw Error(ErrorKind::Config, "parameter " + key + ": '" + p.substr(eq + 1) + "' is not a rational");
        }
    }
    return out;
}

RSeries read_input(const std::string& input)
{
    std::string text = input;
    if (input.empty() || input.front() != '{') {
        std::ifstream in(input);
        if (!in)
            throw Error(ErrorKind::Config, "cannot read input '" + input + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return io::series_from_json(io::Json::parse(text));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Config, std::string("input: ") + e.what());
    }
}

bool color_enabled()
{
    const char* v = std::getenv("FPSL_COLOR");
    return v && std::string(v) == "1";
}

std::string painted(const std::string& s, bool ok)
{
    if (!color_enabled())
        return s;
    return (ok ? "\033[32m" : "\033[31m") + s + "\033[0m";
}

std::string poly_text(const io::Json& e)
{
    bool is_s = e.contains("s_poly");
    const auto& c = is_s ? e["s_poly"] : e["alpha_poly"];
    std::string var = is_s ? "s" : "a";
    std::string s;
    for (size_t k = 0; k < c.size(); ++k) {
        std::string v = c[k];
        if (v == "0")
            continue;
        bool neg = v[0] == '-';
        std::string mag = neg ? v.substr(1) : v;
        std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
        std::string term = mono.empty() ? mag : (mag == "1" ? mono : mag + " " + mono);
        if (s.empty())
            s = (neg ? "-" : "") + term;
        else
            s += (neg ? " - " : " + ") + term;
    }
    return s.empty() ? "0" : s;
}

void render_text(const io::Json& j, std::ostream& out, int first_index = 0)
{
    auto rat_str = [](const io::Json& e) {
        if (e.is_string())
            return e.get<std::string>();
        if (e.contains("s_poly") || e.contains("alpha_poly"))
            return poly_text(e);
        return e.dump();
    };
    if (j.is_object() && j.contains("coefficients")) {
        int v = j["valuation"];
        out << "order " << j["order"].get<int>() << "\n";
        const auto& c = j["coefficients"];
        for (size_t i = 0; i < c.size(); ++i)
            out << std::setw(6) << ("x^" + std::to_string(v + static_cast<int>(i))) << "  " << rat_str(c[i]) << "\n";
    } else if (j.is_object() && j.contains("alpha_expr")) {
        const auto& a = j["alpha_expr"];
        int top = a["top"], b = a["b"];
        std::string exponent = (top ? std::to_string(top) + " - n" : "-n");
        if (b)
            exponent += " + " + (b == 1 ? std::string("s") : std::to_string(b) + " s");
        out << "terms n of alpha^(" << exponent << "), depth " << a["depth"].get<int>() << "\n";
        for (const char* part : {"plain", "log"}) {
            if (!a.contains(part))
                continue;
            for (size_t n = 0; n < a[part].size(); ++n)
                out << std::setw(4) << n << (std::string(part) == "log" ? " ln" : "   ") << "  " << rat_str(a[part][n])
                    << "\n";
        }
    } else if (j.is_object() && j.contains("ps")) {
        render_text(j["ps"], out);
    } else if (j.is_array()) {
        for (size_t i = 0; i < j.size(); ++i)
            out << std::setw(4) << i + first_index << "  " << rat_str(j[i]) << "\n";
    } else {
        out << j.dump() << "\n";
    }
}

int do_coeffs(const CliConfig& c, std::ostream& out)
{
    const Target& t = find_target(c.name);
    for (const auto& [key, value] : c.params) {
        bool known = std::count(t.required.begin(), t.required.end(), key)
            || std::count(t.optional.begin(), t.optional.end(), key);
        if (!known) {
            auto all = t.required;
            all.insert(all.end(), t.optional.begin(), t.optional.end());
            throw Error(ErrorKind::Config,
                "target " + t.name + " takes no parameter '" + key + "'" + (all.empty() ? "" : "; valid: " + joined(all)));
        }
    }
    for (const auto& key : t.required)
        if (!c.params.count(key))
            throw Error(ErrorKind::Config, "target " + t.name + " needs --param " + key + "=num/den");
    int N = c.order.value_or(16);
    if (N < 1)
        throw Error(ErrorKind::Config, "--order must be positive");
    RSeries f;
    if (t.needs_input) {
        if (c.input.empty())
            throw Error(ErrorKind::Config, "target " + t.name + " needs --input (series JSON or a file holding it)");
        f = truncate(read_input(c.input), N);
    } else if (!c.input.empty()) {
        throw Error(ErrorKind::Config, "target " + t.name + " takes no --input");
    }
    io::Json result = t.compute(c, N, f);
    if (c.format == Format::Json)
        out << io::dump(result) << "\n";
    else
        render_text(result, out, t.name == "nu" || t.name == "an" ? 1 : 0);
    return 0;
}

int do_verify(const CliConfig& c, std::ostream& out)
{
    SuiteOptions options;
    options.order = c.order.value_or(12);
    options.parallel = c.parallel;
    auto reports = run_suites(c.name.empty() ? "all" : c.name, options);
    bool ok = true;
    for (const auto& r : reports)
        ok = ok && r.passed();
    if (c.format == Format::Json) {
        io::Json suites = io::Json::array();
        for (const auto& r : reports)
            suites.push_back(io::to_json(r));
        out << io::dump(io::Json{{"order", options.order}, {"passed", ok}, {"suites", suites}}) << "\n";
        return ok ? 0 : 1;
    }
    size_t width = 0;
    for (const auto& r : reports)
        for (const auto& ch : r.checks)
            width = std::max(width, ch.id.size());
    for (const auto& r : reports) {
        out << "== " << r.suite << "\n";
        for (const auto& ch : r.checks) {
            out << std::left << std::setw(static_cast<int>(width) + 2) << ch.id << painted(ch.pass ? "PASS" : "FAIL", ch.pass);
            if (!ch.pass)
                out << "  " << ch.location << (ch.detail.empty() ? "" : "  " + ch.detail);
            out << "\n";
        }
        out << std::right << "-- " << r.suite << ": " << r.checks.size() - r.failures() << "/" << r.checks.size()
            << " passed\n";
    }
    out << (ok ? "all checks passed" : "verification FAILED") << "\n";
    return ok ? 0 : 1;
}

int do_list(const CliConfig& c, std::ostream& out)
{
    if (c.format == Format::Json) {
        io::Json ts = io::Json::array();
        for (const auto& t : targets())
            ts.push_back(io::Json{{"name", t.name}, {"required", t.required}, {"optional", t.optional},
                {"input", t.needs_input}, {"summary", t.summary}});
        out << io::dump(io::Json{{"targets", ts}, {"suites", suite_names()}}) << "\n";
        return 0;
    }
    out << "targets:\n";
    for (const auto& t : targets()) {
        std::string args;
        for (const auto& r : t.required)
            args += " " + r + "=";
        for (const auto& o : t.optional)
            args += " [" + o + "=]";
        if (t.needs_input)
            args += " --input";
        out << "  " << std::left << std::setw(10) << t.name << std::setw(22) << args << t.summary << "\n";
    }
    out << std::right << "suites:\n";
    for (const auto& s : suite_names())
        out << "  " << s << "\n";
    out << "  all\n";
    return 0;
}

bool wants_json(int argc, const char* const* argv)
{
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--format=json" || (a == "--format" && i + 1 < argc && std::string(argv[i + 1]) == "json"))
            return true;
    }
    return false;
}

int report_error(ErrorKind kind, const std::string& message, bool json, std::ostream& err)
{
    if (json)
        err << io::dump(io::Json{{"error", {{"kind", to_string(kind)}, {"message", message}}}}) << "\n";
    else
        err << "error: " << message << "\n";
    return 2;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact formal power series transforms and identity verification", "fpsl"};
    app.require_subcommand(1);
    CliConfig config;
    std::vector<std::string> raw_params;
    std::map<std::string, Format> formats{{"json", Format::Json}, {"text", Format::Text}};

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", config.format, "json or text")->transform(CLI::CheckedTransformer(formats));
    };
    auto* coeffs = app.add_subcommand("coeffs", "compute a named series or family");
    coeffs->add_option("--target", config.name, "target name (see list)")->required();
    coeffs->add_option("--order", config.order, "truncation order or depth (default 16)");
    coeffs->add_option("--param", raw_params, "name=num/den, repeatable");
    coeffs->add_option("--input", config.input, "series JSON, inline or a file path");
    add_common(coeffs);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", config.name, "suite name or all (default all)");
    verify->add_option("--order", config.order, "verification order (default 12)");
    verify->add_flag("--parallel", config.parallel, "evaluate independent cases concurrently");
    add_common(verify);

    auto* list = app.add_subcommand("list", "list targets and suites");
    add_common(list);

    bool json = wants_json(argc, argv);
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        if (!json) {
            // CLI11 prints its own help hint for text mode.
            app.exit(e, out, err);
            return 2;
        }
        return report_error(ErrorKind::Config, e.what(), json, err);
    }
    try {
        config.params = parse_params(raw_params);
        if (coeffs->parsed()) {
            config.command = "coeffs";
            return do_coeffs(config, out);
        }
        if (verify->parsed()) {
            config.command = "verify";
            return do_verify(config, out);
        }
        config.command = "list";
        return do_list(config, out);
    } catch (const Error& e) {
        return report_error(e.kind(), e.what(), json, err);
    }
}

} // namespace fpsl::cli
