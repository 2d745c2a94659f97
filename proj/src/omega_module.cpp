#include "wd/omega_module.hpp"

#include <map>

#include "wd/errors.hpp"
#include "wd/linear_algebra.hpp"

namespace wd {

std::vector<Rational> trim_poly(std::vector<Rational> c)
{
    while (!c.empty() && c.back() == 0)
        c.pop_back();
    return c;
}

void OmegaParams::validate() const
{
    if (beta == 0)
        throw InvalidSpec("beta must be nonzero");
    if (lambda == 0)
        throw InvalidSpec("lambda must be nonzero");
}

std::int64_t OmegaParams::g_degree() const { return static_cast<std::int64_t>(trim_poly(g).size()) - 1; }

std::string to_string(const OmegaParams& p)
{
    const std::vector<Variable> tv{{"t", false}};
    return "(" + to_string(p.alpha) + ", " + to_string(p.beta) + ", " + to_string(p.gamma) + ", "
        + to_string(p.lambda) + ", " + SparsePoly::univariate(tv, 0, p.g).to_string() + ")";
}

SparsePoly omega_factor_act(const OmegaParams& p, const Generator& x, const SparsePoly& f, std::size_t s_idx,
                            std::size_t t_idx)
{
    const auto& vars = f.variables();
    const std::int64_t n = x.index;
    const Rational ln = pow(p.lambda, n);
    const SparsePoly base = f.shift(s_idx, Rational(n));
    switch (x.family) {
    case Family::L: {
        SparsePoly s = SparsePoly::variable(vars, vars[s_idx].name);
        return (s + SparsePoly::constant(vars, p.alpha * n)) * base * ln;
    }
    case Family::a:
        return base.multiply_by_power(t_idx, 1) * ln;
    case Family::b: {
        const SparsePoly g = SparsePoly::univariate(vars, t_idx, p.g);
        return (g * base + base.derive(t_idx) * p.beta) * ln;
    }
    case Family::c:
        return base * Rational(-p.beta * ln);
    case Family::d: {
        const SparsePoly g = SparsePoly::univariate(vars, t_idx, p.g);
        const SparsePoly tg_gamma = g.multiply_by_power(t_idx, 1) + SparsePoly::constant(vars, p.gamma);
        return (tg_gamma * base * (1 / p.beta) + base.derive(t_idx).multiply_by_power(t_idx, 1)) * ln;
    }
    }
    throw InvalidGenerator("unknown family");
}

OmegaModule::OmegaModule(OmegaParams params) : params_(std::move(params)), vars_{{"s", false}, {"t", false}}
{
    params_.validate();
    params_.g = trim_poly(params_.g);
}

SparsePoly OmegaModule::act(const Generator& x, const SparsePoly& v) const
{
    return omega_factor_act(params_, x, v, 0, 1);
}

SparsePoly omega_act(const OmegaModule& m, const Generator& x, const SparsePoly& f) { return m.act(x, f); }

std::vector<Rational> extraction_weights(const std::vector<Rational>& lambdas, const std::vector<std::int64_t>& degs,
                                         std::size_t target_factor, std::int64_t target_power)
{
    std::size_t size = 0;
    for (auto d : degs)
        size += static_cast<std::size_t>(d + 1);
    // Transposed generalized Vandermonde: rows are coefficient functions
    // lambda_k^n n^j, columns are n = 0..size-1.
    Matrix vt;
    Vector rhs;
    for (std::size_t k = 0; k < lambdas.size(); ++k) {
        if (lambdas[k] == 0)
            throw NotApplicable("lambda must be nonzero");
        for (std::int64_t j = 0; j <= degs[k]; ++j) {
            Vector row;
            for (std::size_t n = 0; n < size; ++n) {
                const auto ni = static_cast<std::int64_t>(n);
                row.push_back(pow(lambdas[k], ni) * pow(Rational(ni), j));
            }
            vt.push_back(std::move(row));
            rhs.push_back(k == target_factor && j == target_power ? 1 : 0);
        }
    }
    auto kappa = solve(vt, rhs);
    if (!kappa)
        throw NotApplicable("coefficient functions are dependent (repeated lambda)");
    return *kappa;
}

UEnvElement window_combination(Family f, const std::vector<Rational>& kappa)
{
    UEnvElement u;
    for (std::size_t n = 0; n < kappa.size(); ++n)
        u += UEnvElement::from(Generator{f, static_cast<std::int64_t>(n)}, kappa[n]);
    return u;
}

namespace {

UEnvElement dt_operator(const OmegaParams& p)
{
    // beta^{-1}(b0 - g(a0)) acts as d/dt.
    return (UEnvElement::from(Generator{Family::b, 0}) - evaluate_at(p.g, Generator{Family::a, 0})) * (1 / p.beta);
}

} // namespace

Certificate omega_reduce_to_one(const OmegaModule& m, const SparsePoly& f)
{
    if (f.is_zero())
        throw ZeroVector("cannot reduce the zero vector");
    Certificate cert{f, {}};
    SparsePoly cur = f;
    auto push = [&](std::string label, UEnvElement op) {
        cur = act(m, op, cur);
        cert.steps.push_back({std::move(label), std::move(op), cur});
    };
    const std::int64_t ps = cur.degree_in(0);
    if (ps > 0)
        push("c-window", window_combination(Family::c, extraction_weights({m.params().lambda}, {ps}, 0, ps)));
    const std::int64_t qt = cur.degree_in(1);
    for (std::int64_t i = 0; i < qt; ++i)
        push("dt", dt_operator(m.params()));
    const Rational c = cur.constant_term();
    if (c != 1)
        push("rescale", UEnvElement::scalar(1 / c));
    return cert;
}

Certificate omega_generate(const OmegaModule& m, std::int64_t p, std::int64_t q)
{
    Certificate cert{m.one(), {}};
    if (p + q == 0)
        return cert;
    Word w(static_cast<std::size_t>(p), Generator{Family::L, 0});
    w.insert(w.end(), static_cast<std::size_t>(q), Generator{Family::a, 0});
    const UEnvElement op = UEnvElement::from_word(w);
    cert.steps.push_back({"L0^p a0^q", op, act(m, op, cert.start)});
    return cert;
}

namespace {

using HExpr = std::map<std::int64_t, UEnvElement>; // basis index j -> U(H) coefficient

HExpr& generation_expr(const OmegaParams& p, std::int64_t k, std::map<std::int64_t, HExpr>& memo)
{
    if (auto it = memo.find(k); it != memo.end())
        return it->second;
    const std::int64_t n = p.g_degree();
    HExpr e;
    if (k <= n) {
        e[k] = UEnvElement::one();
    } else {
        const std::int64_t s = k - n - 1;
        const UEnvElement op = UEnvElement::from(Generator{Family::d, 0}, p.beta)
            - UEnvElement::scalar(p.beta * s + p.gamma);
        for (const auto& [j, h] : generation_expr(p, s, memo))
            e[j] += op * h;
        for (std::int64_t kk = 0; kk < n; ++kk) {
            if (p.g[static_cast<std::size_t>(kk)] == 0)
                continue;
            for (const auto& [j, h] : generation_expr(p, kk + 1 + s, memo))
                e[j] -= h * p.g[static_cast<std::size_t>(kk)];
        }
        const Rational inv = 1 / p.g[static_cast<std::size_t>(n)];
        for (auto& [j, h] : e)
            h *= inv;
    }
    return memo[k] = std::move(e);
}

} // namespace

CombinationCertificate generation_certificate(const OmegaModule& m, std::int64_t k)
{
    if (m.params().g_degree() < 0)
        throw Unsupported("U(H)-structure for g = 0");
    std::map<std::int64_t, HExpr> memo;
    CombinationCertificate cert;
    cert.target = SparsePoly::monomial(m.variables(), {0, k});
    for (const auto& [j, h] : generation_expr(m.params(), k, memo))
        if (!h.is_zero())
            cert.terms.emplace_back(h, SparsePoly::monomial(m.variables(), {0, j}));
    return cert;
}

UhRankReport uh_rank(const OmegaModule& m, std::int64_t max_power)
{
    const std::int64_t n = m.params().g_degree();
    if (n < 0)
        throw Unsupported("U(H)-structure for g = 0");
    if (max_power < 0)
        max_power = 3 * (n + 1);
    UhRankReport r;
    r.rank = n + 1;
    for (std::int64_t k = 0; k <= n; ++k)
        r.basis.push_back(SparsePoly::monomial(m.variables(), {0, k}));
    for (std::int64_t k = 0; k <= max_power; ++k)
        r.generation.push_back(generation_certificate(m, k));

    // L0^i d0^j t^k, i, j <= 3: the only vanishing combination is trivial.
    std::vector<SparsePoly> vecs;
    for (const auto& b : r.basis)
        for (int i = 0; i <= 3; ++i)
            for (int j = 0; j <= 3; ++j) {
                Word w(static_cast<std::size_t>(i), Generator{Family::L, 0});
                w.insert(w.end(), static_cast<std::size_t>(j), Generator{Family::d, 0});
                vecs.push_back(act(m, UEnvElement::from_word(w), b));
            }
    std::map<Exponents, std::size_t> cols;
    for (const auto& v : vecs)
        for (const auto& [e, c] : v.terms())
            cols.emplace(e, cols.size());
    // Columns of the evaluation matrix are the vectors; its kernel is the
    // space of vanishing combinations.
    Matrix mat(cols.size(), Vector(vecs.size(), 0));
    for (std::size_t i = 0; i < vecs.size(); ++i)
        for (const auto& [e, c] : vecs[i].terms())
            mat[cols[e]][i] = c;
    r.independence_vectors = vecs.size();
    r.independence_nullity = exact_nullspace(mat).size();
    return r;
}

std::vector<Variable> rank1_variables() { return {{"L0", false}, {"a0", false}}; }

Rank1Module::Rank1Module(Rank1ActionData data) : data_(std::move(data)), vars_(rank1_variables())
{
    if (data_.lambda == 0)
        throw InvalidSpec("lambda must be nonzero");
    for (SparsePoly* q : {&data_.p, &data_.B0, &data_.C0, &data_.D0})
        *q = q->embed_by_name(vars_);
}

SparsePoly Rank1Module::act(const Generator& x, const SparsePoly& f) const
{
    const std::int64_t n = x.index;
    const Rational ln = pow(data_.lambda, n);
    const SparsePoly base = f.shift(0, Rational(n));
    const SparsePoly a0 = SparsePoly::variable(vars_, "a0");
    switch (x.family) {
    case Family::L:
        return (SparsePoly::variable(vars_, "L0") + data_.p * Rational(n)) * base * ln;
    case Family::a:
        return a0 * base * ln;
    case Family::b:
        return (data_.B0 * base - data_.C0 * base.derive(1)) * ln;
    case Family::c:
        return data_.C0 * base * ln;
    case Family::d:
        return (data_.D0 * base + a0 * base.derive(1)) * ln;
    }
    throw InvalidGenerator("unknown family");
}

Rank1ActionData read_off(const OmegaModule& m)
{
    const auto vars = rank1_variables();
    const SparsePoly one = m.one();
    auto image = [&](Family f, std::int64_t n) { return m.act({f, n}, one).embed(vars, {0, 1}); };
    Rank1ActionData d;
    d.lambda = image(Family::a, 1).coefficient({0, 1});
    d.p = (image(Family::L, 1) * (1 / d.lambda) - SparsePoly::variable(vars, "L0"));
    d.B0 = image(Family::b, 0);
    d.C0 = image(Family::c, 0);
    d.D0 = image(Family::d, 0);
    return d;
}

Rank1Classification classify_rank1(const Rank1ActionData& data)
{
    const Rank1Module mod(data);
    const auto vars = rank1_variables();
    std::vector<SparsePoly> samples;
    for (Exponents e : {Exponents{0, 0}, Exponents{1, 0}, Exponents{0, 1}, Exponents{1, 1}, Exponents{0, 2}})
        samples.push_back(SparsePoly::monomial(vars, e));

    using F = Family;
    struct Group {
        const char* name;
        std::vector<std::pair<F, F>> pairs;
    };
    const std::vector<Group> groups{
        {"[a,c] [L,c]", {{F::a, F::c}, {F::L, F::c}}},
        {"[b,c] [c,d]", {{F::b, F::c}, {F::c, F::d}}},
        {"[L,b] [L,d]", {{F::L, F::b}, {F::L, F::d}}},
        {"[b,d]", {{F::b, F::d}}},
        {"rest",
         {{F::L, F::L}, {F::L, F::a}, {F::a, F::a}, {F::a, F::b}, {F::a, F::d}, {F::b, F::b}, {F::c, F::c},
          {F::d, F::d}}},
    };
    for (const auto& grp : groups) {
        for (const auto& [fx, fy] : grp.pairs) {
            for (std::int64_t m = -2; m <= 2; ++m) {
                for (std::int64_t n = -2; n <= 2; ++n) {
                    const Generator x{fx, m}, y{fy, n};
                    for (const auto& v : samples) {
                        SparsePoly diff = mod.act(x, mod.act(y, v)) - mod.act(y, mod.act(x, v));
                        for (const auto tmp = bracket(x, y); const auto& [g, c] : tmp.terms())
                            diff -= mod.act(g, v) * c;
                        if (!diff.is_zero())
                            throw NotAModule(grp.name, "[" + to_string(x) + ", " + to_string(y) + "] on "
                                                           + v.to_string() + " leaves " + diff.to_string());
                    }
                }
            }
        }
    }

    const SparsePoly C0 = data.C0.embed_by_name(vars);
    if (C0.is_zero()) {
        // span{L0^i a0^n v : n >= 1} is invariant: every image keeps a factor a0.
        for (std::int64_t i = 0; i <= 2; ++i)
            for (std::int64_t k = 1; k <= 3; ++k)
                for (const auto& g : generator_window(2))
                    for (const auto tmp = mod.act(g, SparsePoly::monomial(vars, {i, k})); const auto& [e, c] : tmp.terms())
                        if (e[1] < 1)
                            throw NotAModule("degenerate", to_string(g) + " leaves a0 * C[L0, a0]");
        return Degenerate{"span{L0^i a0^n v : i >= 0, n >= 1}"};
    }
    if (!C0.is_constant())
        throw NotAModule("[a,c] [L,c]", "C0 = " + C0.to_string() + " is not a scalar");
    const SparsePoly p = data.p.embed_by_name(vars);
    if (!p.is_constant())
        throw NotAModule("[L,b] [L,d]", "p = " + p.to_string() + " is not a scalar");
    const SparsePoly B0 = data.B0.embed_by_name(vars);
    if (!B0.independent_of(0))
        throw NotAModule("[L,b] [L,d]", "B0 = " + B0.to_string() + " depends on L0");

    OmegaParams params;
    params.lambda = data.lambda;
    params.beta = -C0.constant_term();
    params.alpha = p.constant_term();
    params.g = trim_poly(B0.univariate_coefficients(1));
    const SparsePoly a0 = SparsePoly::variable(vars, "a0");
    const SparsePoly gamma_poly = (a0 * B0 - data.D0.embed_by_name(vars) * params.beta) * Rational(-1);
    if (!gamma_poly.is_constant())
        throw NotAModule("[b,d]", "a0 B0 - beta D0 = " + (gamma_poly * Rational(-1)).to_string() + " is not a scalar");
    params.gamma = gamma_poly.constant_term();

    const Rank1ActionData back = read_off(OmegaModule(params));
    if (!(back.lambda == data.lambda && back.p == p && back.B0 == B0 && back.C0 == C0
          && back.D0 == data.D0.embed_by_name(vars)))
        throw NotAModule("readback", "extracted parameters " + to_string(params) + " do not reproduce the data");
    return params;
}

} // namespace wd
