#include "io.hpp"

namespace fpsl::io {

namespace {

[[noreturn]] void bad(const std::string& what)
{
    throw Error(ErrorKind::Config, "malformed JSON: " + what);
}

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        bad(std::string("missing \"") + key + "\"");
    return j.at(key);
}

int int_field(const Json& j, const char* key)
{
    const Json& v = field(j, key);
    if (!v.is_number_integer())
        bad(std::string("\"") + key + "\" must be an integer");
    return v.get<int>();
}

std::vector<Rat> rat_list(const Json& j)
{
    if (!j.is_array())
        bad("expected an array of rational strings");
    std::vector<Rat> out;
    for (const auto& e : j)
        out.push_back(rat_from_json(e));
    return out;
}

Json rat_list_json(const std::vector<Rat>& c)
{
    Json a = Json::array();
    for (const auto& r : c)
        a.push_back(to_json(r));
    return a;
}

template <class R>
Json series_json(const Series<R>& f)
{
    Json coeffs = Json::array();
    for (const auto& c : f.coeffs())
        coeffs.push_back(to_json(c));
    return Json{{"variable", "x"}, {"valuation", f.valuation()}, {"order", f.order()}, {"coefficients", coeffs}};
}

template <class R, class Parse>
Series<R> series_parse(const Json& j, Parse parse)
{
    if (field(j, "variable") != "x")
        bad("series variable must be \"x\"");
    int val = int_field(j, "valuation");
    int ord = int_field(j, "order");
    const Json& c = field(j, "coefficients");
    if (!c.is_array())
        bad("\"coefficients\" must be an array");
    if (static_cast<int>(c.size()) > std::max(0, ord - val + 1))
        bad("more coefficients than the order allows");
    std::vector<R> v;
    for (const auto& e : c)
        v.push_back(parse(e));
    return Series<R>(val, ord, std::move(v));
}

Json spoly_list(const std::vector<SPoly>& ps)
{
    Json a = Json::array();
    for (const auto& p : ps)
        a.push_back(to_json(p));
    return a;
}

std::vector<SPoly> spoly_list(const Json& j)
{
    if (!j.is_array())
        bad("expected an array of s_poly objects");
    std::vector<SPoly> out;
    for (const auto& e : j)
        out.push_back(spoly_from_json(e));
    return out;
}

} // namespace

Json to_json(const Rat& r) { return to_string(r); }
Json to_json(const SPoly& p) { return Json{{"s_poly", rat_list_json(p.coeffs())}}; }
Json to_json(const AlphaPoly& p) { return Json{{"alpha_poly", rat_list_json(p.coeffs())}}; }
Json to_json(const RSeries& f) { return series_json(f); }
Json to_json(const SSeries& f) { return series_json(f); }

Json to_json(const AlphaExpr& a)
{
    Json body{{"top", a.top()}, {"b", a.b()}, {"depth", a.depth()}, {"plain", spoly_list(a.plain())}};
    if (a.has_log())
        body["log"] = spoly_list(a.log());
    return Json{{"alpha_expr", body}};
}

Json to_json(const Report& r)
{
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json e{{"id", c.id}, {"pass", c.pass}};
        if (!c.pass) {
            e["location"] = c.location;
            e["detail"] = c.detail;
        }
        checks.push_back(e);
    }
    return Json{{"suite", r.suite}, {"passed", r.passed()}, {"failures", r.failures()},
        {"total", r.checks.size()}, {"checks", checks}};
}

Rat rat_from_json(const Json& j)
{
    if (!j.is_string())
        bad("rationals are encoded as strings");
    return parse_rat(j.get<std::string>());
}

SPoly spoly_from_json(const Json& j) { return SPoly(rat_list(field(j, "s_poly"))); }
AlphaPoly alpha_poly_from_json(const Json& j) { return AlphaPoly(rat_list(field(j, "alpha_poly"))); }

RSeries series_from_json(const Json& j) { return series_parse<Rat>(j, rat_from_json); }
SSeries sseries_from_json(const Json& j) { return series_parse<SPoly>(j, spoly_from_json); }

AlphaExpr alpha_expr_from_json(const Json& j)
{
    const Json& body = field(j, "alpha_expr");
    std::vector<SPoly> log;
    if (body.contains("log"))
        log = spoly_list(body.at("log"));
    int depth = int_field(body, "depth");
    if (depth < 0)
        bad("negative depth");
    return AlphaExpr(int_field(body, "top"), int_field(body, "b"), depth, spoly_list(field(body, "plain")), std::move(log));
}

std::string dump(const Json& j) { return j.dump(); }

std::string canonical(const std::string& text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        bad(e.what());
    }
    if (j.is_string())
        return dump(to_json(rat_from_json(j)));
    if (j.is_array()) {
        Json out = Json::array();
        for (const auto& e : j)
            out.push_back(Json::parse(canonical(e.dump())));
        return dump(out);
    }
    if (j.contains("s_poly"))
        return dump(to_json(spoly_from_json(j)));
    if (j.contains("alpha_poly"))
        return dump(to_json(alpha_poly_from_json(j)));
    if (j.contains("alpha_expr"))
        return dump(to_json(alpha_expr_from_json(j)));
    if (j.contains("coefficients")) {
        const Json& c = j.at("coefficients");
        if (!c.empty() && c.front().is_object())
            return dump(to_json(sseries_from_json(j)));
        return dump(to_json(series_from_json(j)));
    }
    if (j.is_object()) {
        Json out = Json::object();
        for (const auto& [k, v] : j.items())
            out[k] = Json::parse(canonical(v.dump()));
        return dump(out);
    }
    bad("unrecognized document");
}

} // namespace fpsl::io
