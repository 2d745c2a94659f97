// wdcert: verification front end for the Witt-Diamond engine.
//
// Every subcommand writes a JSON report {"checks": [...]} to --out (or
// stdout) and a one-line summary per check to stderr.
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "wd/errors.hpp"
#include "wd/fock_module.hpp"
#include "wd/homomorphism.hpp"
#include "wd/json_io.hpp"
#include "wd/oracle.hpp"
#include "wd/omega_module.hpp"
#include "wd/tensor_module.hpp"
#include "wd/vandermonde.hpp"

using namespace wd;

namespace {

struct Common {
    std::string out;
    std::uint64_t seed = 1;
    TruncationPolicy policy;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw UsageError(path + ": " + e.what());
    }
}

std::vector<Rational> poly_coeffs(const std::string& text)
{
    const std::vector<Variable> tv{{"t", false}};
    const SparsePoly p = parse_poly(tv, text);
    std::vector<Rational> out;
    for (const auto& [e, c] : p.terms()) {
        const auto k = static_cast<std::size_t>(e[0]);
        if (out.size() <= k)
            out.resize(k + 1, Rational(0));
        out[k] = c;
    }
    return trim_poly(out);
}

Json vectors_json(const std::vector<SparsePoly>& vs)
{
    Json out = Json::array();
    for (const auto& v : vs)
        out.push_back(v.to_string());
    return out;
}

Json closure_json(const ClosureReport& r)
{
    return {{"start", r.start.to_string()},
            {"verdict", to_string(r.verdict)},
            {"reached", r.reached},
            {"ambient", r.ambient},
            {"overflow", r.overflow},
            {"rounds", r.rounds},
            {"fixpoint", r.fixpoint},
            {"projected_invariant", r.projected_invariant}};
}

Json certificates_json(const std::vector<Certificate>& cs)
{
    Json out = Json::array();
    for (const auto& c : cs)
        out.push_back(certificate_json(c));
    return out;
}

// --- verify-brackets -------------------------------------------------------

std::vector<CheckResult> cmd_verify_brackets(std::int64_t window)
{
    const auto gens = generator_window(window);
    std::size_t antisym = 0, jacobi = 0, triples = 0;
    Json examples = Json::array();
    for (const auto& x : gens)
        for (const auto& y : gens) {
            if (!(bracket(x, y) == Rational(-1) * bracket(y, x))) {
                ++antisym;
                if (examples.size() < 10)
                    examples.push_back({to_string(x), to_string(y)});
            }
            for (const auto& z : gens) {
                ++triples;
                if (!jacobi_residual(x, y, z).is_zero()) {
                    ++jacobi;
                    if (examples.size() < 10)
                        examples.push_back({to_string(x), to_string(y), to_string(z)});
                }
            }
        }
    return {{"brackets", antisym == 0 && jacobi == 0,
             {{"window", window},
              {"triples", triples},
              {"antisymmetry_violations", antisym},
              {"jacobi_violations", jacobi},
              {"counterexamples", examples}}}};
}

// --- verify-hom ------------------------------------------------------------

template <class T>
CheckResult hom_check(const std::string& name, const GeneratorMap<T>& map, std::int64_t window, Json params)
{
    const HomReport r = verify_hom(map, window);
    Json viol = Json::array();
    for (std::size_t i = 0; i < r.violations.size() && i < 10; ++i) {
        const auto& v = r.violations[i];
        viol.push_back({{"x", to_string(v.x)}, {"y", to_string(v.y)}, {"difference", v.difference}});
    }
    params["window"] = window;
    params["pairs_checked"] = r.pairs_checked;
    params["violations"] = r.violations.size();
    params["counterexamples"] = viol;
    return {name, r.ok(), params};
}

template <class T>
CheckResult witness_check(const std::string& name, const std::vector<Witness<T>>& ws, const GeneratorMap<T>& map)
{
    Json cert = Json::array();
    bool ok = true;
    for (const auto& w : ws) {
        const bool holds = w.holds(map);
        ok = ok && holds;
        cert.push_back({{"target", w.label}, {"preimage", w.preimage.to_string()}, {"holds", holds}});
    }
    return {name, ok, {{"pairs", ws.size()}}, cert};
}

std::vector<CheckResult> cmd_verify_hom(const std::string& which, const std::string& alpha, const std::string& beta,
                                        const std::string& gamma, const std::string& g, const std::string& form,
                                        std::int64_t window)
{
    const Rational a = parse_rational(alpha), b = parse_rational(beta);
    if (which == "ab") {
        if (form != "printed" && form != "corrected")
            throw UsageError("--form must be printed or corrected");
        const PhiAB phi(a, b, form == "corrected" ? PhiAB::Form::Corrected : PhiAB::Form::Printed);
        const Json params{{"map", "ab"}, {"form", form}, {"alpha", to_string(a)}, {"beta", to_string(b)}};
        return {hom_check("verify-hom/ab", phi.generator_map(), window, params),
                witness_check("image-witnesses/ab", image_witnesses(phi), phi.generator_map())};
    }
    if (which == "abgg") {
        const PhiABGG phi(a, b, parse_rational(gamma), poly_coeffs(g));
        const Json params{
            {"map", "abgg"}, {"alpha", to_string(a)}, {"beta", to_string(b)}, {"gamma", gamma}, {"g", g}};
        return {hom_check("verify-hom/abgg", phi.generator_map(), window, params),
                witness_check("surjectivity-witnesses/abgg", surjectivity_witnesses(phi), phi.generator_map())};
    }
    throw UsageError("--map must be ab or abgg");
}

// --- act -------------------------------------------------------------------

std::vector<CheckResult> cmd_act(const ModuleSpec& spec, const std::string& expr, const std::string& vector)
{
    const LieModule& m = spec.module();
    const UEnvElement u = parse_uenv(expr);
    const SparsePoly v = m.parse_vector(vector);
    const SparsePoly r = act(m, u, v);
    Json detail{{"module", m.name()}, {"expression", u.to_string()}, {"vector", v.to_string()},
                {"result", r.to_string()}};
    // Report the scalar when the result is proportional to the input.
    if (!v.is_zero()) {
        const auto& [e, c] = *v.terms().begin();
        const Rational k = r.coefficient(e) / c;
        if (r == v * k)
            detail["scalar"] = to_string(k);
    }
    return {{"act", true, detail}};
}

// --- simplicity ------------------------------------------------------------

std::vector<CheckResult> simplicity_f(const FModule& m, const Common& c)
{
    std::vector<CheckResult> out;
    std::optional<EpsilonVerdict> verdict;
    try {
        verdict = epsilon_simplicity(m);
    } catch (const NotApplicable&) {
    }
    SparsePoly start = m.one();
    if (verdict && verdict->witness)
        start = epsilon_submodule_generator(m, *verdict->witness);
    const ClosureReport cl = truncated_closure(m, start, c.policy);
    Json detail{{"module", m.name()}, {"closure", closure_json(cl)}};
    bool ok = cl.verdict != ClosureVerdict::Inconclusive;
    if (verdict) {
        detail["simple"] = verdict->simple;
        if (verdict->witness)
            detail["witness"] = *verdict->witness;
        const auto expect = verdict->simple ? ClosureVerdict::FillsTruncation : ClosureVerdict::ProperAtTruncation;
        ok = cl.verdict == expect;
    }
    out.push_back({"simplicity/F", ok, detail});
    return out;
}

std::vector<CheckResult> simplicity_omega(const OmegaModule& m, const Common& c)
{
    std::mt19937_64 rng(c.seed);
    std::vector<Certificate> certs;
    std::vector<SparsePoly> samples;
    bool ok = true;
    for (int i = 0; i < 5; ++i) {
        samples.push_back(random_vector(m, 3, rng));
        certs.push_back(omega_reduce_to_one(m, samples.back()));
        ok = ok && replay(m, certs.back()).ok && certs.back().final_vector() == m.one();
    }
    const ClosureReport cl = truncated_closure(m, m.one(), c.policy);
    ok = ok && cl.verdict == ClosureVerdict::FillsTruncation;
    return {{"simplicity/Omega", ok,
             {{"module", m.name()}, {"simple", true}, {"seed", c.seed}, {"samples", vectors_json(samples)},
              {"closure", closure_json(cl)}},
             certificates_json(certs)}};
}

std::vector<CheckResult> simplicity_t(const TensorModule& t, const Common& c)
{
    const SimplicityReport r = simplicity_decision(t, c.seed);
    Json detail{{"module", t.name()}, {"simple", r.simple}, {"seed", c.seed}};
    bool ok = true;
    Json cert = Json::array();
    if (r.simple) {
        detail["samples"] = vectors_json(r.samples);
        for (std::size_t i = 0; i < r.reductions.size(); ++i) {
            ok = ok && replay(t, r.reductions[i]).ok;
            for (const auto& g : r.generations[i])
                ok = ok && replay(t, g).ok;
            cert.push_back({{"reduction", certificate_json(r.reductions[i])},
                            {"generation", certificates_json(r.generations[i])}});
        }
    } else {
        detail["witness"] = r.witness_text;
        if (r.witness) {
            detail["witness_check"] = {{"i", r.witness->i + 1},
                                       {"j", r.witness->j + 1},
                                       {"basis_size", r.witness->basis_size},
                                       {"actions", r.witness->actions},
                                       {"escapes", r.witness->escapes}};
            ok = r.witness->escapes == 0;
        }
    }
    return {{"simplicity/T", ok, detail, cert}};
}

std::vector<CheckResult> cmd_simplicity(const ModuleSpec& spec, const Common& c)
{
    if (spec.f)
        return simplicity_f(*spec.f, c);
    if (spec.omega)
        return simplicity_omega(*spec.omega, c);
    return simplicity_t(*spec.tensor, c);
}

// --- det-lemma -------------------------------------------------------------

std::vector<CheckResult> cmd_det_lemma(std::size_t max_m, std::int64_t max_s, std::int64_t max_r,
                                       std::int64_t naive_size)
{
    const auto pool = default_sweep_alphas();
    const DetSweepReport r = det_sweep(pool, max_m, max_s, max_r, naive_size);
    Json alphas = Json::array();
    for (const auto& a : pool)
        alphas.push_back(to_string(a));
    Json failures = Json::array();
    for (const auto& s : r.failures) {
        Json a = Json::array(), sz = Json::array();
        for (std::size_t i = 0; i < s.alphas.size(); ++i) {
            a.push_back(to_string(s.alphas[i]));
            sz.push_back(s.sizes[i]);
        }
        failures.push_back({{"alphas", a}, {"sizes", sz}, {"r", s.r}});
    }
    std::ostringstream summary;
    summary << "all " << r.specs << " specs: determinant = closed form";
    return {{"det-lemma", r.ok(),
             {{"summary", r.ok() ? summary.str() : "mismatch"},
              {"alphas", alphas},
              {"specs", r.specs},
              {"closed_form_mismatches", r.closed_form_mismatches},
              {"naive_checked", r.naive_checked},
              {"naive_mismatches", r.naive_mismatches},
              {"failures", failures}}}};
}

// --- rank ------------------------------------------------------------------

std::vector<CheckResult> cmd_rank(const ModuleSpec& spec, const std::string& vector)
{
    if (spec.omega) {
        const OmegaModule& m = *spec.omega;
        const UhRankReport r = uh_rank(m);
        bool ok = r.rank == m.params().g_degree() + 1 && r.independence_nullity == 0;
        Json cert = Json::array();
        for (const auto& g : r.generation) {
            ok = ok && g.holds(m);
            Json terms = Json::array();
            for (const auto& [op, base] : g.terms)
                terms.push_back({{"op", op.to_string()}, {"base", base.to_string()}});
            cert.push_back({{"target", g.target.to_string()}, {"terms", terms}});
        }
        return {{"rank/uh", ok,
                 {{"module", m.name()},
                  {"rank", r.rank},
                  {"basis", vectors_json(r.basis)},
                  {"independence_vectors", r.independence_vectors},
                  {"independence_nullity", r.independence_nullity}},
                 cert}};
    }
    if (spec.tensor) {
        const TensorModule& t = *spec.tensor;
        const SparsePoly g = t.parse_vector(vector);
        const std::size_t rg = r_g(t, g);
        const std::size_t m = t.size();
        const bool t_only = in_t_polynomials(t, g);
        const bool ok = rg >= m + 1 && (!t_only || rg == m + 1);
        return {{"rank/R_g", ok,
                 {{"module", t.name()}, {"g", g.to_string()}, {"R_g", rg}, {"lower_bound", m + 1},
                  {"g_in_t_polynomials", t_only}}}};
    }
    throw UsageError("rank needs an Omega or T spec");
}

// --- classify --------------------------------------------------------------

std::vector<CheckResult> cmd_classify(const Rank1ActionData& data)
{
    Json detail{{"data", rank1_data_json(data)}};
    try {
        const Rank1Classification c = classify_rank1(data);
        if (const auto* p = std::get_if<OmegaParams>(&c)) {
            detail["result"] = "Omega";
            detail["params"] = omega_params_json(*p);
        } else {
            detail["result"] = "Degenerate";
            detail["submodule"] = std::get<Degenerate>(c).submodule;
        }
        return {{"classify", true, detail}};
    } catch (const NotAModule& e) {
        detail["result"] = "NotAModule";
        detail["relation"] = e.relation();
        detail["message"] = e.what();
        return {{"classify", false, detail}};
    }
}

// --- iso -------------------------------------------------------------------

std::vector<CheckResult> cmd_iso(const ModuleSpec& a, const ModuleSpec& b)
{
    if (!a.tensor || !b.tensor)
        throw UsageError("iso needs two T specs");
    const IsoResult r = iso_check(*a.tensor, *b.tensor);
    auto canon = [](const TensorModule& t) {
        Json out = Json::array();
        for (const auto& p : canonical_form(t))
            out.push_back(omega_params_json(p));
        return out;
    };
    Json detail{{"verdict", r.isomorphic ? "Isomorphic" : "NotIsomorphic"},
                {"canonical_first", canon(*a.tensor)},
                {"canonical_second", canon(*b.tensor)}};
    if (r.isomorphic)
        detail["permutation"] = r.permutation;
    else
        detail["invariant"] = r.invariant;
    return {{"iso", true, detail}};
}

// --- replay ----------------------------------------------------------------

// Accepts a certificate, an array of them, or a report whose checks carry
// certificates (nested "reduction"/"generation" entries included).
void collect_certificates(const Json& j, const std::string& pointer, std::vector<std::pair<std::string, Json>>& out)
{
    if (j.is_object() && j.contains("start") && j.contains("steps")) {
        out.emplace_back(pointer, j);
        return;
    }
    if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i)
            collect_certificates(j[i], pointer + "/" + std::to_string(i), out);
        return;
    }
    if (j.is_object())
        for (const auto& [k, v] : j.items())
            if (k == "checks" || k == "certificate" || k == "reduction" || k == "generation")
                collect_certificates(v, pointer + "/" + k, out);
}

std::vector<CheckResult> cmd_replay(const ModuleSpec& spec, const Json& doc)
{
    std::vector<std::pair<std::string, Json>> found;
    collect_certificates(doc, "", found);
    if (found.empty())
        throw SchemaError("", "no certificates found");
    std::vector<CheckResult> out;
    for (const auto& [ptr, j] : found) {
        const Certificate c = parse_certificate(j, spec.module(), ptr);
        const ReplayResult r = replay(spec.module(), c);
        Json detail{{"steps", c.steps.size()}, {"final", c.final_vector().to_string()}};
        if (!r.ok) {
            detail["failed_step"] = r.failed_step;
            detail["message"] = r.detail;
        }
        out.push_back({"replay" + (ptr.empty() ? std::string("/") : ptr), r.ok, detail});
    }
    return out;
}

void add_policy_flags(CLI::App* sub, Common& c)
{
    sub->add_option("--max-degree", c.policy.max_total_degree, "truncation degree for closure checks");
    sub->add_option("--window", c.policy.generator_window, "generator index window for closure checks");
    sub->add_option("--max-steps", c.policy.max_steps, "closure rounds");
    sub->add_option("--seed", c.seed, "random seed");
}

int emit(const std::vector<CheckResult>& checks, const Common& c)
{
    bool ok = true;
    for (const auto& r : checks) {
        ok = ok && r.pass;
        std::cerr << (r.pass ? "PASS " : "FAIL ") << r.check << "\n";
    }
    const std::string text = report_json(checks).dump(2);
    if (c.out.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream f(c.out);
        if (!f)
            throw UsageError("cannot write " + c.out);
        f << text << "\n";
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"wdcert: exact checks and certificates for the Witt-Diamond algebra and its modules"};
    app.require_subcommand(1);
    Common common;
    app.add_option("--out", common.out, "write the JSON report here instead of stdout");

    std::int64_t window = 3;
    auto* brackets = app.add_subcommand("verify-brackets", "antisymmetry and Jacobi sweep");
    brackets->add_option("--window,-W", window, "index window");

    std::string map = "ab", alpha, beta, gamma = "0", gpoly = "0", form = "printed";
    std::int64_t hom_window = 3;
    auto* hom = app.add_subcommand("verify-hom", "bracket preservation of phi_ab or phi_abgg");
    hom->add_option("--map", map, "ab or abgg");
    hom->add_option("--alpha", alpha)->required();
    hom->add_option("--beta", beta)->required();
    hom->add_option("--gamma", gamma);
    hom->add_option("--g", gpoly, "polynomial in t");
    hom->add_option("--form", form, "printed or corrected (ab only)");
    hom->add_option("--window,-W", hom_window, "index window");

    std::string spec_path, spec2_path, expr, vector = "1", data_path, cert_path;
    auto* actc = app.add_subcommand("act", "apply a U(L) expression to a vector");
    actc->add_option("--spec", spec_path)->required();
    actc->add_option("--expr", expr)->required();
    actc->add_option("--vector", vector);

    auto* simp = app.add_subcommand("simplicity", "simplicity certificates and closure oracle");
    simp->add_option("--spec", spec_path)->required();
    add_policy_flags(simp, common);

    std::size_t max_m = 3;
    std::int64_t max_s = 3, max_r = 2, naive_size = 6;
    auto* det = app.add_subcommand("det-lemma", "generalized Vandermonde determinant sweep");
    det->add_option("--max-m", max_m);
    det->add_option("--max-s", max_s);
    det->add_option("--max-r", max_r);
    det->add_option("--naive-size", naive_size, "largest size also checked by cofactor expansion");

    auto* rank = app.add_subcommand("rank", "U(H)-rank of Omega or R_g of a tensor vector");
    rank->add_option("--spec", spec_path)->required();
    rank->add_option("--vector", vector);

    auto* cls = app.add_subcommand("classify", "classify rank-one action data");
    cls->add_option("--data", data_path)->required();

    auto* iso = app.add_subcommand("iso", "isomorphism of two tensor specs");
    iso->add_option("--spec", spec_path)->required();
    iso->add_option("--other", spec2_path)->required();

    auto* rep = app.add_subcommand("replay", "replay saved certificates");
    rep->add_option("--spec", spec_path)->required();
    rep->add_option("--certificate", cert_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        common.policy.validate();
        auto load = [](const std::string& path) { return parse_module_spec(read_json_file(path)); };
        std::vector<CheckResult> checks;
        if (*brackets)
            checks = cmd_verify_brackets(window);
        else if (*hom)
            checks = cmd_verify_hom(map, alpha, beta, gamma, gpoly, form, hom_window);
        else if (*actc)
            checks = cmd_act(load(spec_path), expr, vector);
        else if (*simp)
            checks = cmd_simplicity(load(spec_path), common);
        else if (*det)
            checks = cmd_det_lemma(max_m, max_s, max_r, naive_size);
        else if (*rank)
            checks = cmd_rank(load(spec_path), vector);
        else if (*cls)
            checks = cmd_classify(parse_rank1_data(read_json_file(data_path)));
        else if (*iso)
            checks = cmd_iso(load(spec_path), load(spec2_path));
        else if (*rep)
            checks = cmd_replay(load(spec_path), read_json_file(cert_path));
        return emit(checks, common);
    } catch (const SchemaError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
}
