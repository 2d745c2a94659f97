#include "wd/tensor_module.hpp"

#include <algorithm>

#include "wd/errors.hpp"
#include "wd/linear_algebra.hpp"

namespace wd {

TensorModule::TensorModule(std::vector<OmegaParams> factors) : factors_(std::move(factors))
{
    if (factors_.empty())
        throw InvalidSpec("a tensor module needs at least one factor");
    for (auto& f : factors_) {
        f.validate();
        f.g = trim_poly(f.g);
    }
    for (std::size_t k = 0; k < factors_.size(); ++k)
        vars_.push_back({"s" + std::to_string(k + 1), false});
    for (std::size_t k = 0; k < factors_.size(); ++k)
        vars_.push_back({"t" + std::to_string(k + 1), false});
}

SparsePoly TensorModule::act(const Generator& x, const SparsePoly& v) const
{
    SparsePoly out(vars_);
    for (std::size_t k = 0; k < factors_.size(); ++k)
        out += omega_factor_act(factors_[k], x, v, s_index(k), t_index(k));
    return out;
}

std::string TensorModule::name() const
{
    std::string out = "T[";
    for (std::size_t k = 0; k < factors_.size(); ++k)
        out += (k ? " x " : "") + to_string(factors_[k]);
    return out + "]";
}

std::vector<Rational> TensorModule::lambdas() const
{
    std::vector<Rational> out;
    for (const auto& f : factors_)
        out.push_back(f.lambda);
    return out;
}

std::optional<std::pair<std::size_t, std::size_t>> TensorModule::equal_lambda_pair() const
{
    for (std::size_t j = 0; j < factors_.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (factors_[i].lambda == factors_[j].lambda)
                return std::make_pair(i, j);
    return std::nullopt;
}

bool TensorModule::lambdas_distinct() const { return !equal_lambda_pair(); }

std::vector<std::int64_t> TensorModule::s_degrees(const SparsePoly& g) const
{
    std::vector<std::int64_t> out;
    for (std::size_t k = 0; k < factors_.size(); ++k)
        out.push_back(g.degree_in(s_index(k)));
    return out;
}

std::optional<Exponents> TensorModule::degree(const SparsePoly& g) const
{
    if (g.is_zero())
        return std::nullopt;
    return g.leading_exponents();
}

SparsePoly tensor_act(const TensorModule& t, const Generator& x, const SparsePoly& v) { return t.act(x, v); }

SpanResult span_NXg(const TensorModule& t, Family x, const SparsePoly& g)
{
    if (g.is_zero())
        throw ZeroVector("N(X, 0)");
    const std::int64_t extra = x == Family::L ? 2 : 1;
    std::int64_t n0 = 0;
    for (auto p : t.s_degrees(g))
        n0 += p + extra;
    PolySpan span(t.variables());
    span.insert(g);
    std::int64_t n = 0;
    auto grow_to = [&](std::int64_t window) {
        for (; n < window; ++n)
            span.insert(t.act({x, n}, g));
    };
    grow_to(n0);
    const std::size_t needed = std::max<std::size_t>(t.size(), 2);
    std::size_t stable = 0;
    while (stable < needed) {
        const std::size_t before = span.dimension();
        grow_to(n + 1);
        stable = span.dimension() == before ? stable + 1 : 0;
    }
    return {span.echelon_basis(), span.dimension(), n};
}

std::string to_string(Extraction d)
{
    switch (d) {
    case Extraction::LShift:
        return "L-shift";
    case Extraction::AShift:
        return "a-shift";
    case Extraction::ATop:
        return "a-top";
    }
    return "?";
}

CertificateStep extraction_step(const TensorModule& t, const SparsePoly& g, std::size_t k, Extraction which)
{
    if (g.is_zero())
        throw ZeroVector("extraction from the zero vector");
    if (!t.lambdas_distinct())
        throw NotApplicable("lambdas must be pairwise distinct");
    std::vector<std::int64_t> degs = t.s_degrees(g);
    Family fam = Family::a;
    std::int64_t power = 0;
    Rational scale = 1;
    switch (which) {
    case Extraction::LShift:
        fam = Family::L;
        for (auto& d : degs)
            d += 1;
        break;
    case Extraction::AShift:
        break;
    case Extraction::ATop:
        power = degs[k];
        scale = power % 2 == 0 ? 1 : -1;
        break;
    }
    std::vector<Rational> kappa = extraction_weights(t.lambdas(), degs, k, power);
    for (auto& c : kappa)
        c *= scale;
    UEnvElement op = window_combination(fam, kappa);
    SparsePoly result = act(t, op, g);
    return {to_string(which) + " k=" + std::to_string(k + 1), std::move(op), std::move(result)};
}

SparsePoly extraction_expected(const TensorModule& t, const SparsePoly& g, std::size_t k, Extraction which)
{
    switch (which) {
    case Extraction::LShift:
        return g * SparsePoly::variable(t.variables(), t.variables()[t.s_index(k)].name);
    case Extraction::AShift:
        return g.multiply_by_power(t.t_index(k), 1);
    case Extraction::ATop: {
        const std::int64_t pk = g.degree_in(t.s_index(k));
        SparsePoly out(t.variables());
        for (const auto& [e, c] : g.terms()) {
            if (e[t.s_index(k)] != pk)
                continue;
            Exponents f = e;
            f[t.s_index(k)] = 0;
            f[t.t_index(k)] += 1;
            out.add_term(f, c);
        }
        return out;
    }
    }
    return SparsePoly(t.variables());
}

namespace {

// beta_k^{-1}(B_k - g_k(A_k)) with B_k, A_k the lambda_k^n-extractions of
// b_n, a_n; acts as d/dt_k on s-free vectors.
UEnvElement dt_operator(const TensorModule& t, std::size_t k)
{
    const std::vector<std::int64_t> zeros(t.size(), 0);
    const auto kappa = extraction_weights(t.lambdas(), zeros, k, 0);
    const UEnvElement b = window_combination(Family::b, kappa);
    const UEnvElement a = window_combination(Family::a, kappa);
    UEnvElement ga;
    UEnvElement apow = UEnvElement::one();
    for (const auto& c : t.factors()[k].g) {
        ga += apow * c;
        apow = apow * a;
    }
    return (b - ga) * (1 / t.factors()[k].beta);
}

} // namespace

Certificate tensor_reduce_to_bottom(const TensorModule& t, const SparsePoly& g)
{
    if (g.is_zero())
        throw ZeroVector("cannot reduce the zero vector");
    if (!t.lambdas_distinct())
        throw NotApplicable("lambdas must be pairwise distinct");
    Certificate cert{g, {}};
    SparsePoly cur = g;
    for (;;) {
        const auto degs = t.s_degrees(cur);
        auto it = std::find_if(degs.begin(), degs.end(), [](std::int64_t d) { return d > 0; });
        if (it == degs.end())
            break;
        cert.steps.push_back(extraction_step(t, cur, static_cast<std::size_t>(it - degs.begin()), Extraction::ATop));
        cur = cert.steps.back().result;
    }
    for (;;) {
        std::size_t k = 0;
        while (k < t.size() && cur.degree_in(t.t_index(k)) == 0)
            ++k;
        if (k == t.size())
            break;
        UEnvElement op = dt_operator(t, k);
        cur = act(t, op, cur);
        cert.steps.push_back({"dt k=" + std::to_string(k + 1), std::move(op), cur});
    }
    const Rational c = cur.constant_term();
    if (c != 1) {
        UEnvElement op = UEnvElement::scalar(1 / c);
        cur = act(t, op, cur);
        cert.steps.push_back({"rescale", std::move(op), cur});
    }
    return cert;
}

Certificate tensor_generate(const TensorModule& t, const Exponents& target)
{
    if (!t.lambdas_distinct())
        throw NotApplicable("lambdas must be pairwise distinct");
    Certificate cert{t.one(), {}};
    SparsePoly cur = cert.start;
    auto push = [&](std::size_t k, Extraction d) {
        cert.steps.push_back(extraction_step(t, cur, k, d));
        cur = cert.steps.back().result;
    };
    for (std::size_t k = 0; k < t.size(); ++k)
        for (std::int64_t i = 0; i < target[t.t_index(k)]; ++i)
            push(k, Extraction::AShift);
    for (std::size_t k = 0; k < t.size(); ++k)
        for (std::int64_t i = 0; i < target[t.s_index(k)]; ++i)
            push(k, Extraction::LShift);
    return cert;
}

std::size_t r_g_window(const TensorModule& t, const SparsePoly& g, std::int64_t lo, std::int64_t hi)
{
    PolySpan span(t.variables());
    span.insert(g);
    for (std::int64_t n = lo; n <= hi; ++n) {
        span.insert(t.act({Family::a, n}, g));
        span.insert(t.act({Family::c, n}, g));
    }
    return span.dimension();
}

std::size_t r_g(const TensorModule& t, const SparsePoly& g)
{
    if (g.is_zero())
        throw ZeroVector("R_g of 0");
    if (!t.lambdas_distinct())
        throw NotApplicable("lambdas must be pairwise distinct");
    std::int64_t n = 0;
    for (auto p : t.s_degrees(g))
        n += p + 1;
    return r_g_window(t, g, 0, n - 1);
}

bool in_t_polynomials(const TensorModule& t, const SparsePoly& g)
{
    for (std::size_t k = 0; k < t.size(); ++k)
        if (!g.independent_of(t.s_index(k)))
            return false;
    return true;
}

WitnessCheck w_witness_check(const TensorModule& t, std::size_t i, std::size_t j, std::int64_t max_degree,
                             std::int64_t window)
{
    WitnessCheck out;
    out.i = i;
    out.j = j;
    const auto& vars = t.variables();
    const std::size_t si = t.s_index(i), sj = t.s_index(j);
    // Reduced coordinates: u = s_i + s_j stands in slot si, slot sj is unused.
    std::vector<Variable> reduced;
    std::vector<std::size_t> slot;
    for (std::size_t v = 0; v < vars.size(); ++v) {
        if (v == sj)
            continue;
        reduced.push_back(vars[v]);
        slot.push_back(v);
    }
    const SparsePoly u = SparsePoly::variable(vars, vars[si].name) + SparsePoly::variable(vars, vars[sj].name);
    std::vector<SparsePoly> basis;
    for (const auto& e : box_monomials(reduced, max_degree)) {
        SparsePoly b = SparsePoly::constant(vars, 1);
        Exponents rest(vars.size(), 0);
        for (std::size_t r = 0; r < e.size(); ++r)
            if (slot[r] != si)
                rest[slot[r]] = e[r];
            else
                b = u.pow(e[r]);
        basis.push_back(b * SparsePoly::monomial(vars, rest));
    }
    out.basis_size = basis.size();
    const auto gens = generator_window(window);
    for (const auto& b : basis) {
        for (const auto& g : gens) {
            const SparsePoly img = t.act(g, b);
            ++out.actions;
            if (!(img.derive(si) == img.derive(sj)))
                ++out.escapes;
        }
    }
    return out;
}

SimplicityReport simplicity_decision(const TensorModule& t, std::uint64_t seed, std::size_t samples,
                                     std::int64_t sample_degree, std::int64_t witness_degree,
                                     std::int64_t witness_window)
{
    SimplicityReport r;
    if (auto pair = t.equal_lambda_pair()) {
        r.simple = false;
        r.witness = w_witness_check(t, pair->first, pair->second, witness_degree, witness_window);
        const std::string i = std::to_string(pair->first + 1), j = std::to_string(pair->second + 1);
        r.witness_text = "W = C[t" + i + ",t" + j + "](s" + i + "+s" + j + ")^p";
        if (t.size() > 2)
            r.witness_text += " (x) other factors";
        return r;
    }
    r.simple = true;
    std::mt19937_64 rng(seed);
    for (std::size_t n = 0; n < samples; ++n) {
        SparsePoly v = random_vector(t, sample_degree, rng);
        r.reductions.push_back(tensor_reduce_to_bottom(t, v));
        std::vector<Certificate> gens;
        for (const auto& [e, c] : v.terms())
            gens.push_back(tensor_generate(t, e));
        r.generations.push_back(std::move(gens));
        r.samples.push_back(std::move(v));
    }
    return r;
}

bool canonical_less(const OmegaParams& a, const OmegaParams& b)
{
    if (a.lambda != b.lambda)
        return a.lambda < b.lambda;
    if (a.alpha != b.alpha)
        return a.alpha < b.alpha;
    if (a.beta != b.beta)
        return a.beta < b.beta;
    if (a.gamma != b.gamma)
        return a.gamma < b.gamma;
    if (a.g.size() != b.g.size())
        return a.g.size() < b.g.size();
    return std::lexicographical_compare(a.g.begin(), a.g.end(), b.g.begin(), b.g.end());
}

std::vector<OmegaParams> canonical_form(const TensorModule& t)
{
    std::vector<OmegaParams> out = t.factors();
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

IsoResult iso_check(const TensorModule& a, const TensorModule& b)
{
    if (!a.lambdas_distinct() || !b.lambdas_distinct())
        throw RequiresSimple("iso_check needs pairwise distinct lambdas in both modules");
    IsoResult r;
    if (a.size() != b.size()) {
        r.invariant = "factor count";
        return r;
    }
    // Distinct lambdas pair the factors uniquely.
    std::vector<std::size_t> match(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::size_t j = 0;
        while (j < b.size() && b.factors()[j].lambda != a.factors()[i].lambda)
            ++j;
        if (j == b.size()) {
            r.invariant = "lambda";
            return r;
        }
        match[i] = j;
    }
    using Field = bool (*)(const OmegaParams&, const OmegaParams&);
    const std::pair<const char*, Field> fields[] = {
        {"alpha", [](const OmegaParams& x, const OmegaParams& y) { return x.alpha == y.alpha; }},
        {"beta", [](const OmegaParams& x, const OmegaParams& y) { return x.beta == y.beta; }},
        {"gamma", [](const OmegaParams& x, const OmegaParams& y) { return x.gamma == y.gamma; }},
        {"g", [](const OmegaParams& x, const OmegaParams& y) { return x.g == y.g; }},
    };
    for (const auto& [label, same] : fields)
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!same(a.factors()[i], b.factors()[match[i]])) {
                r.invariant = label;
                return r;
            }
    r.isomorphic = true;
    for (auto j : match)
        r.permutation.push_back(j + 1);
    return r;
}

} // namespace wd
