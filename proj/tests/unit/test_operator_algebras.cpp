#include "doctest.h"
#include "printers.hpp"

#include <random>

#include "wd/errors.hpp"
#include "wd/operator_algebra.hpp"

using namespace wd;

namespace {

const WeylSignature r2 = r2_signature();
const WeylSignature dsig = d_signature();

WeylElement W(const char* s) { return parse_weyl(r2, s); }
WeylElement Dt(const char* s) { return parse_weyl(dsig, s); }
UbElement B(const char* s) { return parse_ub(s); }

// Weyl element acting on Laurent polynomials in x0, x1 by differentiation.
SparsePoly weyl_apply(const WeylElement& u, const SparsePoly& p)
{
    SparsePoly out(p.variables());
    for (const auto& [m, c] : u.terms()) {
        for (const auto& [e, k] : p.terms()) {
            Exponents f = e;
            Rational coeff = c * k;
            for (std::size_t i = 0; i < f.size(); ++i) {
                for (std::int64_t j = 0; j < m.d[i]; ++j) {
                    coeff *= f[i];
                    f[i] -= 1;
                }
                f[i] += m.x[i];
            }
            out.add_term(f, coeff);
        }
    }
    return out;
}

// h multiplies, e f(h) = f(h - 1) on C[h].
SparsePoly ub_apply(const UbElement& u, const SparsePoly& f)
{
    SparsePoly out(f.variables());
    for (const auto& [m, c] : u.terms())
        out += f.shift(0, Rational(m.e)).multiply_by_power(0, m.h) * c;
    return out;
}

WeylElement random_weyl_monomial(const WeylSignature& sig, std::mt19937_64& rng)
{
    WeylMonomial m;
    for (std::size_t i = 0; i < sig.vars.size(); ++i) {
        const auto lo = sig.vars[i].laurent ? -3 : 0;
        m.x.push_back(lo + static_cast<std::int64_t>(rng() % static_cast<unsigned>(4 - lo)));
        m.d.push_back(static_cast<std::int64_t>(rng() % 4));
    }
    WeylElement w(sig);
    w.add_term(m, Rational(1 + static_cast<long>(rng() % 3)));
    return w;
}

} // namespace

TEST_CASE("weyl_mul examples")
{
    for (std::int64_t n = -3; n <= 3; ++n) {
        const WeylElement xn = WeylElement::x(r2, 0, n);
        CHECK(WeylElement::theta(r2, 0) * xn == xn * WeylElement::theta(r2, 0) + xn * Rational(n));
    }
    CHECK(W("dx0") * W("x0") == W("x0*dx0 + 1"));
    CHECK(W("x1^-1") * W("D1") == W("dx1"));
    CHECK(W("D1") == W("x1*dx1"));
}

TEST_CASE("diffop_mul examples")
{
    CHECK(commutator(Dt("t*dt"), Dt("t^2")) == Dt("2*t^2"));
    CHECK(commutator(Dt("t*dt"), Dt("dt")) == Dt("-dt"));
    CHECK(commutator(Dt("dt"), Dt("t")) == Dt("1"));
}

TEST_CASE("ub_mul examples")
{
    CHECK(B("e") * B("h") == B("h*e - e"));
    CHECK(B("h") * B("e") == UbElement::monomial(1, 1));
    CHECK(B("e") * B("h^2") == UbElement::monomial(2, 1) - UbElement::monomial(1, 1, 2) + B("e"));
}

TEST_CASE("tensor products")
{
    const R2UbElement x0 = R2UbElement::pure(W("x0"), UbElement::one());
    const R2UbElement e = R2UbElement::pure(WeylElement::one(r2), B("e"));
    CHECK(x0 * e == R2UbElement::pure(W("x0"), B("e")));
    for (std::int64_t n = -2; n <= 2; ++n)
        for (std::int64_t m = -2; m <= 2; ++m) {
            const R2UbElement u = R2UbElement::pure(WeylElement::x(r2, 0, n) * W("D1"), UbElement::one());
            const R2UbElement v = R2UbElement::pure(WeylElement::x(r2, 0, m) * W("x1"), B("h"));
            CHECK(commutator(u, v) == R2UbElement::pure(WeylElement::x(r2, 0, n + m) * W("x1"), B("h")));
            CHECK(commutator(u, u).is_zero());
        }
    CHECK(parse_r2ub("(x0)⊗(e)") == x0 * e);
    CHECK(parse_r2ub("(x0)(x)(e) + (1)(x)(h)") == x0 * e + R2UbElement::pure(WeylElement::one(r2), B("h")));
}

TEST_CASE("signature mismatch")
{
    CHECK_THROWS_AS(W("x0") + Dt("t"), AlgebraMismatch);
    CHECK_THROWS_AS(W("x0") * Dt("t"), AlgebraMismatch);
    const R2UbElement a = R2UbElement::pure(W("x0"), UbElement::one());
    const R2UbElement b(std::make_pair(r0_signature(), UbSignature{}));
    CHECK_THROWS_AS(a * b, AlgebraMismatch);
}

TEST_CASE("associativity on random monomials")
{
    std::mt19937_64 rng(31);
    for (int i = 0; i < 100; ++i) {
        for (const auto* sig : {&r2, &dsig}) {
            const auto a = random_weyl_monomial(*sig, rng), b = random_weyl_monomial(*sig, rng),
                       c = random_weyl_monomial(*sig, rng);
            CHECK((a * b) * c == a * (b * c));
        }
        const auto ua = UbElement::monomial(rng() % 4, rng() % 4), ub = UbElement::monomial(rng() % 4, rng() % 4),
                   uc = UbElement::monomial(rng() % 4, rng() % 4);
        CHECK((ua * ub) * uc == ua * (ub * uc));
    }
}

TEST_CASE("weyl_mul agrees with the action on Laurent polynomials")
{
    std::mt19937_64 rng(32);
    const std::vector<Variable> vars = r2.vars;
    for (int i = 0; i < 20; ++i) {
        const auto u = random_weyl_monomial(r2, rng) + random_weyl_monomial(r2, rng);
        const auto v = random_weyl_monomial(r2, rng);
        SparsePoly p(vars);
        for (int k = 0; k < 4; ++k)
            p.add_term({static_cast<std::int64_t>(rng() % 7) - 3, static_cast<std::int64_t>(rng() % 7) - 3},
                       Rational(1 + static_cast<long>(rng() % 5)));
        CHECK(weyl_apply(u * v, p) == weyl_apply(u, weyl_apply(v, p)));
    }
}

TEST_CASE("ub_mul agrees with the Whittaker-type action on C[h]")
{
    std::mt19937_64 rng(33);
    const std::vector<Variable> hv{{"h", false}};
    for (int i = 0; i < 40; ++i) {
        const auto u = UbElement::monomial(rng() % 4, rng() % 4) + UbElement::monomial(rng() % 3, rng() % 3, 2);
        const auto v = UbElement::monomial(rng() % 4, rng() % 4);
        SparsePoly f(hv);
        for (int k = 0; k < 3; ++k)
            f.add_term({static_cast<std::int64_t>(rng() % 4)}, Rational(1 + static_cast<long>(rng() % 5)));
        CHECK(ub_apply(u * v, f) == ub_apply(u, ub_apply(v, f)));
    }
}
