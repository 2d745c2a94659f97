#include "wd/fock_module.hpp"

#include "wd/errors.hpp"

namespace wd {

FModule::FModule(Rational alpha, Rational beta, PFactor p0, PFactor p1, VSpec v)
    : phi_(std::move(alpha), std::move(beta)), p_{std::move(p0), std::move(p1)}, v_(std::move(v))
{
    for (std::size_t i = 0; i < 2; ++i) {
        if (p_[i].kind == PFactor::Kind::Laurent)
            vars_.push_back({"x" + std::to_string(i), true});
        else {
            if (p_[i].param == 0)
                throw InvalidSpec("lambda must be nonzero");
            vars_.push_back({"D" + std::to_string(i), false});
        }
    }
    if (v_.kind == VSpec::Kind::Whittaker)
        vars_.push_back({"h", false});
}

FModule FModule::m_module(Rational alpha, Rational beta, Rational w0, Rational w1, VSpec v)
{
    return FModule(std::move(alpha), std::move(beta), PFactor::laurent(std::move(w0)), PFactor::laurent(std::move(w1)),
                   std::move(v));
}

FModule FModule::omega_module(Rational alpha, Rational beta, Rational l0, Rational l1, VSpec v)
{
    return FModule(std::move(alpha), std::move(beta), PFactor::shift(std::move(l0)), PFactor::shift(std::move(l1)),
                   std::move(v));
}

std::string FModule::name() const
{
    auto factor_name = [](const PFactor& f) {
        return (f.kind == PFactor::Kind::Laurent ? "M(" : "Omega(") + to_string(f.param) + ")";
    };
    std::string v = v_.kind == VSpec::Kind::OneDim ? "C_" + to_string(v_.eps) : "Whittaker";
    const std::string form = phi_.form == PhiAB::Form::Corrected ? ";corrected" : "";
    return "F[" + to_string(phi_.alpha) + "," + to_string(phi_.beta) + form + "](" + factor_name(p_[0]) + "x"
        + factor_name(p_[1]) + ", " + v + ")";
}

FModule FModule::with_corrupted_a() const
{
    FModule m = *this;
    m.corrupt_ = true;
    return m;
}

FModule FModule::with_phi_form(PhiAB::Form form) const
{
    FModule m = *this;
    m.phi_.form = form;
    return m;
}

namespace {

// x^a dx^b applied to x^e in a Laurent(w) factor.
std::pair<std::int64_t, Rational> laurent_apply(const Rational& w, std::int64_t a, std::int64_t b, std::int64_t e)
{
    Rational c = 1;
    for (std::int64_t k = 0; k < b; ++k) {
        c *= w + (e - k);
        if (c == 0)
            return {0, Rational(0)};
    }
    return {e - b + a, c};
}

// x^a dx^b applied to D^e in a Shift(lambda) factor; f is univariate in var.
SparsePoly shift_apply(const Rational& lambda, std::int64_t a, std::int64_t b, SparsePoly f, std::size_t var)
{
    const auto& vars = f.variables();
    const SparsePoly d_plus_1 = SparsePoly::variable(vars, vars[var].name) + SparsePoly::constant(vars, 1);
    for (std::int64_t k = 0; k < b; ++k)
        f = d_plus_1 * f.shift(var, -1) * (1 / lambda);
    return f.shift(var, a) * pow(lambda, a);
}

} // namespace

SparsePoly FModule::apply_weyl_term(const WeylMonomial& m, const UbMonomial& u, const Exponents& e) const
{
    SparsePoly result = SparsePoly::constant(vars_, 1);
    for (std::size_t i = 0; i < 2; ++i) {
        if (p_[i].kind == PFactor::Kind::Laurent) {
            auto [exp, c] = laurent_apply(p_[i].param, m.x[i], m.d[i], e[i]);
            if (c == 0)
                return SparsePoly(vars_);
            Exponents ex(vars_.size(), 0);
            ex[i] = exp;
            result = result * SparsePoly::monomial(vars_, ex, c);
        } else {
            Exponents ex(vars_.size(), 0);
            ex[i] = e[i];
            result = result * shift_apply(p_[i].param, m.x[i], m.d[i], SparsePoly::monomial(vars_, ex), i);
        }
    }
    if (v_.kind == VSpec::Kind::OneDim) {
        if (u.e > 0)
            return SparsePoly(vars_);
        return result * pow(v_.eps, u.h);
    }
    const std::size_t hv = 2;
    Exponents ex(vars_.size(), 0);
    ex[hv] = e[hv];
    SparsePoly vpart = SparsePoly::monomial(vars_, ex).shift(hv, Rational(u.e));
    return result * vpart.multiply_by_power(hv, u.h);
}

SparsePoly FModule::act(const Generator& x, const SparsePoly& v) const
{
    R2UbElement image = phi_.image(x);
    if (corrupt_ && x.family == Family::a) {
        const auto sig = r2_signature();
        const WeylElement x0n = WeylElement::x(sig, 0, x.index);
        const WeylElement x1 = WeylElement::x(sig, 1, 1);
        const UbElement h = phi_.form == PhiAB::Form::Printed ? UbElement::h() : UbElement::h() * Rational(-phi_.beta);
        image = R2UbElement::pure(x0n * x1 * WeylElement::theta(sig, 1) * phi_.beta, UbElement::one())
            + R2UbElement::pure(x0n * x1, h);
    }
    SparsePoly out(vars_);
    for (const auto& [key, c] : image.terms())
        for (const auto& [e, cv] : v.terms())
            out += apply_weyl_term(key.first, key.second, e) * (c * cv);
    return out;
}

SparsePoly f_act(const FModule& m, const Generator& x, const SparsePoly& v) { return m.act(x, v); }

SparsePoly q_action(const FModule& m, const SparsePoly& v) { return act(m, casimir_like_q(), v); }

EpsilonVerdict epsilon_simplicity(const Rational& beta, const Rational& w, const Rational& eps)
{
    if (beta == 0)
        throw InvalidSpec("beta must be nonzero");
    const Rational n = -eps / beta - w;
    if (!is_integer(n))
        return {true, std::nullopt};
    return {false, to_int64(n)};
}

EpsilonVerdict epsilon_simplicity(const FModule& m)
{
    if (m.factor(1).kind != PFactor::Kind::Laurent || m.v_spec().kind != VSpec::Kind::OneDim)
        throw NotApplicable("epsilon_simplicity needs P = P0 (x) M_w and V = C_eps");
    return epsilon_simplicity(m.beta(), m.factor(1).param, m.v_spec().eps);
}

SparsePoly epsilon_submodule_generator(const FModule& m, std::int64_t witness)
{
    Exponents e(m.variables().size(), 0);
    e[1] = witness;
    return SparsePoly::monomial(m.variables(), e);
}

std::map<WeightKey, std::vector<SparsePoly>> weight_decomposition(const FModule& m, std::int64_t max_degree)
{
    std::map<WeightKey, std::vector<SparsePoly>> out;
    const Generator l0{Family::L, 0};
    const Generator d0{Family::d, 0};
    for (const auto& b : sample_monomials(m, max_degree)) {
        const auto& e = b.leading_exponents();
        Rational ev[2];
        const Generator gens[2] = {l0, d0};
        for (int i = 0; i < 2; ++i) {
            const SparsePoly img = m.act(gens[i], b);
            ev[i] = img.coefficient(e);
            if (!(img == b * ev[i]))
                throw NotWeight(to_string(gens[i]) + " does not act diagonally on " + b.to_string() + " (image "
                                + img.to_string() + ")");
        }
        out[{ev[0], ev[1]}].push_back(b);
    }
    return out;
}

} // namespace wd
