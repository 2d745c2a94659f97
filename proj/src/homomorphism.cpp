#include "wd/homomorphism.hpp"

#include "wd/errors.hpp"

namespace wd {

namespace {

UEnvElement gen(Family f, std::int64_t n) { return UEnvElement::from(Generator{f, n}); }

} // namespace

PhiAB::PhiAB(Rational a, Rational b, Form f) : alpha(std::move(a)), beta(std::move(b)), form(f)
{
    if (beta == 0)
        throw InvalidSpec("beta must be nonzero");
}

R2UbElement PhiAB::image(const Generator& g) const
{
    const auto sig = r2_signature();
    const auto n = g.index;
    const WeylElement x0n = WeylElement::x(sig, 0, n);
    const WeylElement one = WeylElement::one(sig);
    const WeylElement theta0 = WeylElement::theta(sig, 0);
    const WeylElement theta1 = WeylElement::theta(sig, 1);
    const WeylElement x1 = WeylElement::x(sig, 1, 1);
    const WeylElement x1inv = WeylElement::x(sig, 1, -1);
    const UbElement ub1 = UbElement::one();
    switch (g.family) {
    case Family::L: // x0^n (D0 + n alpha) (x) 1 [+ n x0^n (x) h]
        if (form == Form::Printed)
            return R2UbElement::pure(x0n * (theta0 + one * (alpha * n)), ub1);
        return R2UbElement::pure(x0n * (theta0 + one * (alpha * n)), ub1)
            + R2UbElement::pure(x0n, UbElement::h()) * Rational(n);
    case Family::d: // x0^n D1 (x) 1 + n x0^n (x) e, or -beta^{-1} n x0^n (x) e
        return R2UbElement::pure(x0n * theta1, ub1)
            + R2UbElement::pure(x0n, UbElement::e()) * (form == Form::Printed ? Rational(n) : Rational(-n / beta));
    case Family::a: // beta x0^n x1 D1 (x) 1 + x0^n x1 (x) (h - n e), or - x0^n x1 (x) (beta h + n e)
        if (form == Form::Printed)
            return R2UbElement::pure(x0n * x1 * theta1 * beta, ub1)
                + R2UbElement::pure(x0n * x1, UbElement::h() - UbElement::e() * Rational(n));
        return R2UbElement::pure(x0n * x1 * theta1 * beta, ub1)
            - R2UbElement::pure(x0n * x1, UbElement::h() * beta + UbElement::e() * Rational(n));
    case Family::b: // x0^n x1^{-1} (x) 1
        return R2UbElement::pure(x0n * x1inv, ub1);
    case Family::c: // -beta x0^n (x) 1
        return R2UbElement::pure(x0n * Rational(-beta), ub1);
    }
    throw InvalidGenerator("unknown family");
}

GeneratorMap<R2UbElement> PhiAB::generator_map() const
{
    PhiAB self = *this;
    return {{r2_signature(), {}}, [self](const Generator& g) { return self.image(g); }};
}

PhiABGG::PhiABGG(Rational a, Rational b, Rational c, std::vector<Rational> poly)
    : alpha(std::move(a)), beta(std::move(b)), gamma(std::move(c)), g(std::move(poly))
{
    if (beta == 0)
        throw InvalidSpec("beta must be nonzero");
}

R0DElement PhiABGG::image(const Generator& gen_) const
{
    const auto left = r0_signature();
    const auto right = d_signature();
    const auto n = gen_.index;
    const WeylElement x0n = WeylElement::x(left, 0, n);
    const WeylElement theta0 = WeylElement::theta(left, 0);
    const WeylElement one_l = WeylElement::one(left);
    const WeylElement one_r = WeylElement::one(right);
    const WeylElement t = WeylElement::x(right, 0, 1);
    const WeylElement dt = WeylElement::dx(right, 0);
    const WeylElement gt = WeylElement::coordinate_poly(right, 0, g);
    const Rational beta_inv = 1 / beta;
    switch (gen_.family) {
    case Family::L:
        return R0DElement::pure(x0n * (theta0 + one_l * (alpha * n)), one_r);
    case Family::d: // x0^n (x) (beta^{-1} t g(t) + beta^{-1} gamma + t dt)
        return R0DElement::pure(x0n, (t * gt) * beta_inv + one_r * (beta_inv * gamma) + t * dt);
    case Family::a:
        return R0DElement::pure(x0n, t);
    case Family::b: // x0^n (x) (g(t) + beta dt)
        return R0DElement::pure(x0n, gt + dt * beta);
    case Family::c:
        return R0DElement::pure(x0n * Rational(-beta), one_r);
    }
    throw InvalidGenerator("unknown family");
}

GeneratorMap<R0DElement> PhiABGG::generator_map() const
{
    PhiABGG self = *this;
    return {{r0_signature(), d_signature()}, [self](const Generator& g) { return self.image(g); }};
}

R2UbElement apply_phi_ab(const PhiAB& map, const UEnvElement& u) { return map.generator_map().apply(u); }

R0DElement apply_phi_abgg(const PhiABGG& map, const UEnvElement& u) { return map.generator_map().apply(u); }

std::vector<Witness<R2UbElement>> image_witnesses(const PhiAB& map)
{
    const auto sig = r2_signature();
    const Rational binv = 1 / map.beta;
    const UbElement ub1 = UbElement::one();
    const WeylElement w1 = WeylElement::one(sig);
    using F = Family;

    // x1 (x) e = beta^{-1} phi(c_{-1} a_1 - c_0 a_0)
    const UEnvElement x1e = (gen(F::c, -1) * gen(F::a, 1) - gen(F::c, 0) * gen(F::a, 0)) * binv;

    std::vector<Witness<R2UbElement>> out;
    out.push_back({"x0(x)1", R2UbElement::pure(WeylElement::x(sig, 0, 1), ub1), gen(F::c, 1) * Rational(-binv)});
    out.push_back({"x0^-1(x)1", R2UbElement::pure(WeylElement::x(sig, 0, -1), ub1), gen(F::c, -1) * Rational(-binv)});
    out.push_back({"dx0(x)1", R2UbElement::pure(WeylElement::dx(sig, 0), ub1),
                   (gen(F::c, -1) * gen(F::L, 0)) * Rational(-binv)});
    out.push_back({"x1(x)e", R2UbElement::pure(WeylElement::x(sig, 1, 1), UbElement::e()), x1e});
    out.push_back({"x1^-1(x)1", R2UbElement::pure(WeylElement::x(sig, 1, -1), ub1), gen(F::b, 0)});
    out.push_back({"1(x)e", R2UbElement::pure(w1, UbElement::e()), x1e * gen(F::b, 0)});
    const UEnvElement h = gen(F::b, 0) * gen(F::a, 0) - gen(F::d, 0) * map.beta;
    out.push_back({"1(x)h", R2UbElement::pure(w1, UbElement::h()),
                   map.form == PhiAB::Form::Printed ? h : h * Rational(-binv)});
    out.push_back({"dx1(x)1", R2UbElement::pure(WeylElement::dx(sig, 1), ub1), gen(F::b, 0) * gen(F::d, 0)});
    return out;
}

std::vector<Witness<R0DElement>> surjectivity_witnesses(const PhiABGG& map)
{
    const auto left = r0_signature();
    const auto right = d_signature();
    const Rational binv = 1 / map.beta;
    const WeylElement l1 = WeylElement::one(left);
    const WeylElement r1 = WeylElement::one(right);
    using F = Family;

    std::vector<Witness<R0DElement>> out;
    out.push_back({"x0(x)1", R0DElement::pure(WeylElement::x(left, 0, 1), r1), gen(F::c, 1) * Rational(-binv)});
    out.push_back({"x0^-1(x)1", R0DElement::pure(WeylElement::x(left, 0, -1), r1), gen(F::c, -1) * Rational(-binv)});
    out.push_back({"D0(x)1", R0DElement::pure(WeylElement::theta(left, 0), r1), gen(F::L, 0)});
    out.push_back({"1(x)t", R0DElement::pure(l1, WeylElement::x(right, 0, 1)), gen(F::a, 0)});
    out.push_back({"1(x)dt", R0DElement::pure(l1, WeylElement::dx(right, 0)),
                   (gen(F::b, 0) - evaluate_at(map.g, Generator{F::a, 0})) * binv});
    return out;
}

} // namespace wd
