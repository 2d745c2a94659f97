#include "doctest.h"
#include "printers.hpp"

#include <algorithm>
#include <random>

#include "wd/errors.hpp"
#include "wd/homomorphism.hpp"

using namespace wd;

namespace {

const WeylSignature r2 = r2_signature();
const WeylSignature r0 = r0_signature();
const WeylSignature dsig = d_signature();

UEnvElement U(const char* s) { return parse_uenv(s); }

GeneratorMap<R2UbElement> corrupted(const PhiAB& phi)
{
    auto map = phi.generator_map();
    map.image = [phi](const Generator& g) {
        if (g.family != Family::d)
            return phi.image(g);
        return R2UbElement::pure(WeylElement::x(r2_signature(), 0, g.index) * WeylElement::theta(r2_signature(), 1),
                                 UbElement::one());
    };
    return map;
}

bool has_pair(const HomReport& r, const char* x, const char* y)
{
    return std::any_of(r.violations.begin(), r.violations.end(), [&](const HomViolation& v) {
        return v.x == parse_generator(x) && v.y == parse_generator(y);
    });
}

// Every term of x lies in R2 (x) U(b)e.
bool in_e_ideal(const R2UbElement& x)
{
    return std::all_of(x.terms().begin(), x.terms().end(), [](const auto& t) { return t.first.second.e > 0; });
}

} // namespace

TEST_CASE("apply_phi_ab examples")
{
    const PhiAB phi(make_rational(1, 2), 3);
    for (std::int64_t n = -2; n <= 2; ++n)
        CHECK(apply_phi_ab(phi, UEnvElement::from(Generator{Family::c, n}))
              == R2UbElement::pure(WeylElement::x(r2, 0, n) * Rational(-3), UbElement::one()));
    CHECK(apply_phi_ab(phi, U("b[0]*a[0] - 3*d[0]")) == R2UbElement::pure(WeylElement::one(r2), UbElement::h()));
    for (const char* alpha : {"0", "7/3", "-1"}) {
        const PhiAB p(parse_rational(alpha), 2);
        CHECK(apply_phi_ab(p, U("L[0]")) == R2UbElement::pure(WeylElement::theta(r2, 0), UbElement::one()));
    }
    CHECK_THROWS_AS(PhiAB(1, 0), InvalidSpec);
}

TEST_CASE("apply_phi_abgg examples")
{
    const PhiABGG phi(make_rational(1, 2), 3, make_rational(-1, 4), {1, 0, 1});
    CHECK(apply_phi_abgg(phi, U("a[0]")) == R0DElement::pure(WeylElement::one(r0), WeylElement::x(dsig, 0, 1)));
    CHECK(apply_phi_abgg(phi, U("b[0] - 1 - a[0]^2"))
          == R0DElement::pure(WeylElement::one(r0), WeylElement::dx(dsig, 0) * Rational(3)));
    CHECK(apply_phi_abgg(phi, U("c[1]")) == R0DElement::pure(WeylElement::x(r0, 0, 1) * Rational(-3),
                                                              WeylElement::one(dsig)));
}

TEST_CASE("printed phi_ab fails only modulo e")
{
    const PhiAB ab(make_rational(1, 2), 3);
    const auto r = verify_hom(ab.generator_map(), 2);
    CHECK(r.pairs_checked == 25 * 24 / 2);
    CHECK_FALSE(r.ok());
    CHECK(has_pair(r, "L[1]", "d[1]"));
    CHECK(has_pair(r, "a[-1]", "a[0]"));
    CHECK_FALSE(has_pair(r, "a[0]", "d[1]"));
    const auto map = ab.generator_map();
    for (const auto& v : r.violations) {
        const R2UbElement diff = commutator(map.image(v.x), map.image(v.y))
            - map.apply(UEnvElement::from(bracket(v.x, v.y)));
        CHECK(in_e_ideal(diff));
    }
    // [phi(a_n), phi(a_m)] = (beta + 1)(n - m) x0^{n+m} x1^2 (x) e
    const R2UbElement aa = commutator(ab.image(parse_generator("a[2]")), ab.image(parse_generator("a[-1]")));
    CHECK(aa == R2UbElement::pure(WeylElement::x(r2, 0, 1) * WeylElement::x(r2, 1, 2) * Rational(12), UbElement::e()));
    // beta = -1 removes the a-a defect but not the L defect.
    const auto m1 = verify_hom(PhiAB(0, -1).generator_map(), 2);
    CHECK_FALSE(has_pair(m1, "a[-1]", "a[0]"));
    CHECK(has_pair(m1, "L[1]", "d[1]"));
}

TEST_CASE("verify_hom for the corrected phi_ab and for phi_abgg")
{
    std::mt19937_64 rng(42);
    for (int i = 0; i < 3; ++i) {
        const Rational alpha = make_rational(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
        const Rational beta = make_rational(1 + static_cast<long>(rng() % 5), 1 + static_cast<long>(rng() % 4))
            * (rng() % 2 ? 1 : -1);
        const PhiAB ab(alpha, beta, PhiAB::Form::Corrected);
        const auto r = verify_hom(ab.generator_map(), 2);
        CHECK(r.ok());
        CHECK(r.pairs_checked == 25 * 24 / 2);
    }
    const PhiABGG abgg(make_rational(1, 2), 3, 2, {1, 0, 1});
    CHECK(verify_hom(abgg.generator_map(), 2).ok());
}

TEST_CASE("Q under both forms of phi_ab")
{
    const PhiAB printed(1, 3);
    const PhiAB corrected(1, 3, PhiAB::Form::Corrected);
    CHECK(apply_phi_ab(printed, casimir_like_q()) == R2UbElement::pure(WeylElement::one(r2), UbElement::h()));
    CHECK(apply_phi_ab(corrected, casimir_like_q())
          == R2UbElement::pure(WeylElement::one(r2), UbElement::h()) * Rational(-3));
}

TEST_CASE("corrupted map is caught at [d1, a0]")
{
    for (const auto form : {PhiAB::Form::Printed, PhiAB::Form::Corrected}) {
        const PhiAB ab(make_rational(1, 2), 3, form);
        const auto r = verify_hom(corrupted(ab), 2);
        CHECK_FALSE(r.ok());
        CHECK(has_pair(r, "a[0]", "d[1]"));
    }
}

TEST_CASE("image witnesses round-trip")
{
    for (const auto& [a, b] : {std::pair{make_rational(1, 2), Rational(3)}, std::pair{Rational(-2), make_rational(5, 7)}})
        for (const auto form : {PhiAB::Form::Printed, PhiAB::Form::Corrected}) {
            const PhiAB phi(a, b, form);
            const auto ws = image_witnesses(phi);
            CHECK(ws.size() == 8);
            for (const auto& w : ws) {
                INFO(w.label);
                CHECK(w.holds(phi.generator_map()));
            }
        }
    const PhiAB phi(1, 2);
    const auto ws = image_witnesses(phi);
    auto find = [&](const char* label) {
        return *std::find_if(ws.begin(), ws.end(), [&](const auto& w) { return w.label == label; });
    };
    CHECK(find("x1(x)e").preimage == (U("c[-1]*a[1]") - U("c[0]*a[0]")) * make_rational(1, 2));
    CHECK(find("dx1(x)1").preimage == U("b[0]*d[0]"));
    CHECK(find("x1^-1(x)1").preimage == U("b[0]"));
}

TEST_CASE("surjectivity witnesses round-trip")
{
    const PhiABGG phi(make_rational(1, 3), -2, 5, {0, 2, 0, 1});
    const auto ws = surjectivity_witnesses(phi);
    CHECK(ws.size() == 5);
    for (const auto& w : ws) {
        INFO(w.label);
        CHECK(w.holds(phi.generator_map()));
    }
    CHECK(ws[2].preimage == U("L[0]"));
}

TEST_CASE("apply is multiplicative on random words")
{
    std::mt19937_64 rng(41);
    const auto gens = generator_window(2);
    const PhiAB ab(make_rational(2, 3), make_rational(-1, 2), PhiAB::Form::Corrected);
    const PhiABGG abgg(1, 2, 3, {1, 1});
    for (int i = 0; i < 50; ++i) {
        Word wu, wv;
        for (std::size_t k = 0, n = 1 + rng() % 3; k < n; ++k)
            wu.push_back(gens[rng() % gens.size()]);
        for (std::size_t k = 0, n = 1 + rng() % 3; k < n; ++k)
            wv.push_back(gens[rng() % gens.size()]);
        const UEnvElement u = pbw_normalize(wu), v = pbw_normalize(wv);
        CHECK(apply_phi_ab(ab, u * v) == apply_phi_ab(ab, u) * apply_phi_ab(ab, v));
        CHECK(apply_phi_abgg(abgg, u * v) == apply_phi_abgg(abgg, u) * apply_phi_abgg(abgg, v));
    }
}
