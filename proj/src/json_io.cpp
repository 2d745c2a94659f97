#include "wd/json_io.hpp"

#include <algorithm>
#include <initializer_list>
#include <map>

#include "wd/errors.hpp"

namespace wd {

namespace {

std::string child(const std::string& pointer, const std::string& key) { return pointer + "/" + key; }
std::string child(const std::string& pointer, std::size_t i) { return pointer + "/" + std::to_string(i); }

void require_object(const Json& j, const std::string& pointer, std::initializer_list<const char*> allowed)
{
    if (!j.is_object())
        throw SchemaError(pointer, "expected an object");
    for (const auto& [key, value] : j.items()) {
        if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
            throw SchemaError(child(pointer, key), "unknown field");
    }
}

const Json& field(const Json& j, const std::string& pointer, const char* key)
{
    const auto it = j.find(key);
    if (it == j.end())
        throw SchemaError(child(pointer, key), "missing field");
    return *it;
}

std::string string_field(const Json& j, const std::string& pointer, const char* key)
{
    const Json& v = field(j, pointer, key);
    if (!v.is_string())
        throw SchemaError(child(pointer, key), "expected a string");
    return v.get<std::string>();
}

Rational rational_field(const Json& j, const std::string& pointer, const char* key)
{
    return json_rational(field(j, pointer, key), child(pointer, key));
}

Rational nonzero_field(const Json& j, const std::string& pointer, const char* key)
{
    Rational q = rational_field(j, pointer, key);
    if (q == 0)
        throw SchemaError(child(pointer, key), "must be nonzero");
    return q;
}

std::vector<Rational> rational_pair(const Json& j, const std::string& pointer, bool nonzero)
{
    if (!j.is_array() || j.size() != 2)
        throw SchemaError(pointer, "expected an array of two rationals");
    std::vector<Rational> out;
    for (std::size_t i = 0; i < 2; ++i) {
        out.push_back(json_rational(j[i], child(pointer, i)));
        if (nonzero && out.back() == 0)
            throw SchemaError(child(pointer, i), "must be nonzero");
    }
    return out;
}

SparsePoly poly_field(const Json& j, const std::string& pointer, const char* key, const std::vector<Variable>& vars)
{
    const std::string text = string_field(j, pointer, key);
    try {
        return parse_poly(vars, text);
    } catch (const Error& e) {
        throw SchemaError(child(pointer, key), e.what());
    }
}

PFactor parse_p0(const Json& j, const std::string& pointer)
{
    const std::string kind = string_field(j, pointer, "kind");
    if (kind == "M") {
        require_object(j, pointer, {"kind", "w"});
        return PFactor::laurent(rational_field(j, pointer, "w"));
    }
    if (kind == "Omega") {
        require_object(j, pointer, {"kind", "lambda"});
        return PFactor::shift(nonzero_field(j, pointer, "lambda"));
    }
    throw SchemaError(child(pointer, "kind"), "expected \"M\" or \"Omega\"");
}

VSpec parse_v(const Json& j, const std::string& pointer)
{
    const std::string kind = string_field(j, pointer, "kind");
    if (kind == "C_eps") {
        require_object(j, pointer, {"kind", "eps"});
        return VSpec::one_dim(rational_field(j, pointer, "eps"));
    }
    if (kind == "Whittaker") {
        require_object(j, pointer, {"kind"});
        return VSpec::whittaker();
    }
    throw SchemaError(child(pointer, "kind"), "expected \"C_eps\" or \"Whittaker\"");
}

std::shared_ptr<const FModule> parse_f(const Json& j, const std::string& pointer)
{
    require_object(j, pointer, {"family", "alpha", "beta", "P", "V", "phi_form"});
    const Rational alpha = rational_field(j, pointer, "alpha");
    const Rational beta = nonzero_field(j, pointer, "beta");
    const std::string pp = child(pointer, "P");
    const Json& p = field(j, pointer, "P");
    if (!p.is_object())
        throw SchemaError(pp, "expected an object");
    const std::string kind = string_field(p, pp, "kind");
    PFactor p0, p1;
    if (kind == "M") {
        require_object(p, pp, {"kind", "w"});
        const auto w = rational_pair(field(p, pp, "w"), child(pp, "w"), false);
        p0 = PFactor::laurent(w[0]);
        p1 = PFactor::laurent(w[1]);
    } else if (kind == "Omega") {
        require_object(p, pp, {"kind", "lambda"});
        const auto l = rational_pair(field(p, pp, "lambda"), child(pp, "lambda"), true);
        p0 = PFactor::shift(l[0]);
        p1 = PFactor::shift(l[1]);
    } else if (kind == "P0xM") {
        require_object(p, pp, {"kind", "P0", "w"});
        p0 = parse_p0(field(p, pp, "P0"), child(pp, "P0"));
        p1 = PFactor::laurent(rational_field(p, pp, "w"));
    } else {
        throw SchemaError(child(pp, "kind"), "expected \"M\", \"Omega\" or \"P0xM\"");
    }
    const VSpec v = parse_v(field(j, pointer, "V"), child(pointer, "V"));
    auto m = std::make_shared<FModule>(alpha, beta, p0, p1, v);
    if (j.contains("phi_form")) {
        const std::string form = string_field(j, pointer, "phi_form");
        if (form == "corrected")
            return std::make_shared<FModule>(m->with_phi_form(PhiAB::Form::Corrected));
        if (form != "printed")
            throw SchemaError(child(pointer, "phi_form"), "expected \"printed\" or \"corrected\"");
    }
    return m;
}

} // namespace

Json rational_json(const Rational& q) { return to_string(q); }

Rational json_rational(const Json& j, const std::string& pointer)
{
    if (j.is_number_integer())
        return Rational(j.get<long>());
    if (!j.is_string())
        throw SchemaError(pointer, "expected a rational string \"p/q\"");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
        throw SchemaError(pointer, e.what());
    }
}

const LieModule& ModuleSpec::module() const
{
    if (f)
        return *f;
    if (omega)
        return *omega;
    return *tensor;
}

OmegaParams parse_omega_params(const Json& j, const std::string& pointer)
{
    require_object(j, pointer, {"family", "alpha", "beta", "gamma", "lambda", "g"});
    if (j.contains("family") && j["family"] != "Omega")
        throw SchemaError(child(pointer, "family"), "expected \"Omega\"");
    OmegaParams p;
    p.alpha = rational_field(j, pointer, "alpha");
    p.beta = nonzero_field(j, pointer, "beta");
    p.gamma = rational_field(j, pointer, "gamma");
    p.lambda = nonzero_field(j, pointer, "lambda");
    const std::string gp = child(pointer, "g");
    const Json& g = field(j, pointer, "g");
    if (!g.is_array())
        throw SchemaError(gp, "expected an array of [k, coef] pairs");
    std::map<std::int64_t, Rational> coeffs;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const std::string ep = child(gp, i);
        const Json& e = g[i];
        if (!e.is_array() || e.size() != 2)
            throw SchemaError(ep, "expected [k, coef]");
        if (!e[0].is_number_integer() || e[0].get<std::int64_t>() < 0)
            throw SchemaError(child(ep, 0), "expected a nonnegative integer");
        const auto k = e[0].get<std::int64_t>();
        if (coeffs.count(k))
            throw SchemaError(child(ep, 0), "repeated power");
        coeffs[k] = json_rational(e[1], child(ep, 1));
    }
    if (!coeffs.empty()) {
        p.g.assign(static_cast<std::size_t>(coeffs.rbegin()->first + 1), Rational(0));
        for (const auto& [k, c] : coeffs)
            p.g[static_cast<std::size_t>(k)] = c;
    }
    p.g = trim_poly(p.g);
    return p;
}

Json omega_params_json(const OmegaParams& p)
{
    Json g = Json::array();
    for (std::size_t k = 0; k < p.g.size(); ++k)
        if (p.g[k] != 0)
            g.push_back(Json::array({k, rational_json(p.g[k])}));
    return {{"family", "Omega"},
            {"alpha", rational_json(p.alpha)},
            {"beta", rational_json(p.beta)},
            {"gamma", rational_json(p.gamma)},
            {"lambda", rational_json(p.lambda)},
            {"g", g}};
}

ModuleSpec parse_module_spec(const Json& j, const std::string& pointer)
{
    if (!j.is_object())
        throw SchemaError(pointer, "expected an object");
    ModuleSpec spec;
    spec.family = string_field(j, pointer, "family");
    if (spec.family == "F") {
        spec.f = parse_f(j, pointer);
    } else if (spec.family == "Omega") {
        spec.omega = std::make_shared<OmegaModule>(parse_omega_params(j, pointer));
    } else if (spec.family == "T") {
        require_object(j, pointer, {"family", "factors"});
        const std::string fp = child(pointer, "factors");
        const Json& fs = field(j, pointer, "factors");
        if (!fs.is_array() || fs.empty())
            throw SchemaError(fp, "expected a nonempty array of Omega specs");
        std::vector<OmegaParams> factors;
        for (std::size_t i = 0; i < fs.size(); ++i)
            factors.push_back(parse_omega_params(fs[i], child(fp, i)));
        spec.tensor = std::make_shared<TensorModule>(std::move(factors));
    } else {
        throw SchemaError(child(pointer, "family"), "expected \"F\", \"Omega\" or \"T\"");
    }
    return spec;
}

Rank1ActionData parse_rank1_data(const Json& j, const std::string& pointer)
{
    require_object(j, pointer, {"lambda", "p", "B0", "C0", "D0"});
    const auto vars = rank1_variables();
    return {nonzero_field(j, pointer, "lambda"), poly_field(j, pointer, "p", vars), poly_field(j, pointer, "B0", vars),
            poly_field(j, pointer, "C0", vars), poly_field(j, pointer, "D0", vars)};
}

Json rank1_data_json(const Rank1ActionData& d)
{
    return {{"lambda", rational_json(d.lambda)},
            {"p", d.p.to_string()},
            {"B0", d.B0.to_string()},
            {"C0", d.C0.to_string()},
            {"D0", d.D0.to_string()}};
}

Json certificate_json(const Certificate& c)
{
    Json steps = Json::array();
    for (const auto& s : c.steps)
        steps.push_back({{"label", s.label}, {"op", s.op.to_string()}, {"result", s.result.to_string()}});
    return {{"start", c.start.to_string()}, {"steps", steps}};
}

Certificate parse_certificate(const Json& j, const LieModule& module, const std::string& pointer)
{
    require_object(j, pointer, {"start", "steps"});
    auto vec = [&](const Json& obj, const std::string& p, const char* key) {
        const std::string text = string_field(obj, p, key);
        try {
            return module.parse_vector(text);
        } catch (const Error& e) {
            throw SchemaError(child(p, key), e.what());
        }
    };
    Certificate c;
    c.start = vec(j, pointer, "start");
    const std::string sp = child(pointer, "steps");
    const Json& steps = field(j, pointer, "steps");
    if (!steps.is_array())
        throw SchemaError(sp, "expected an array");
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const std::string p = child(sp, i);
        require_object(steps[i], p, {"label", "op", "result"});
        CertificateStep step;
        step.label = steps[i].contains("label") ? string_field(steps[i], p, "label") : "";
        const std::string op = string_field(steps[i], p, "op");
        try {
            step.op = parse_uenv(op);
        } catch (const Error& e) {
            throw SchemaError(child(p, "op"), e.what());
        }
        step.result = vec(steps[i], p, "result");
        c.steps.push_back(std::move(step));
    }
    return c;
}

Json report_json(std::vector<CheckResult> checks)
{
    std::sort(checks.begin(), checks.end(), [](const auto& a, const auto& b) { return a.check < b.check; });
    Json out = Json::array();
    for (const auto& c : checks)
        out.push_back({{"check", c.check},
                       {"status", c.pass ? "pass" : "fail"},
                       {"detail", c.detail},
                       {"certificate", c.certificate}});
    return {{"checks", out}};
}

} // namespace wd
