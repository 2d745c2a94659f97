#include "doctest.h"
#include "printers.hpp"

#include <random>

#include "wd/errors.hpp"
#include "wd/lie_algebra.hpp"
#include "wd/oracle.hpp"

using namespace wd;

namespace {

Generator G(const char* s) { return parse_generator(s); }
UEnvElement U(const char* s) { return parse_uenv(s); }

} // namespace

TEST_CASE("bracket table")
{
    CHECK(bracket(G("L[1]"), G("L[2]")) == LElement(G("L[3]")));
    CHECK(bracket(G("d[2]"), G("b[3]")) == LElement(G("b[5]"), -1));
    CHECK(bracket(G("c[0]"), G("d[5]")).is_zero());
    CHECK(bracket(G("L[0]"), G("L[0]")).is_zero());
    CHECK(bracket(G("L[2]"), G("a[-3]")) == LElement(G("a[-1]"), -3));
    CHECK(bracket(G("a[1]"), G("b[-1]")) == LElement(G("c[0]")));
    CHECK(bracket(G("d[1]"), G("a[0]")) == LElement(G("a[1]")));
}

TEST_CASE("generator text form")
{
    CHECK(to_string(G("L[-2]")) == "L[-2]");
    CHECK(G(" b[ 4 ]") == Generator{Family::b, 4});
    CHECK_THROWS_AS(G("x[1]"), InvalidGenerator);
    CHECK_THROWS_AS(G("a[1.5]"), InvalidGenerator);
    CHECK_THROWS_AS(G("a1"), InvalidGenerator);
}

TEST_CASE("antisymmetry and Jacobi on indices [-3,3]")
{
    const auto gens = generator_window(3);
    std::size_t violations = 0;
    for (const auto& x : gens)
        for (const auto& y : gens) {
            if (!(bracket(x, y) == Rational(-1) * bracket(y, x)))
                ++violations;
            for (const auto& z : gens)
                if (!jacobi_residual(x, y, z).is_zero())
                    ++violations;
        }
    CHECK(violations == 0);
    CHECK(jacobi_residual(G("d[0]"), G("a[1]"), G("b[2]")).is_zero());
    CHECK(jacobi_residual(G("L[1]"), G("d[0]"), G("a[2]")).is_zero());
}

TEST_CASE("pbw_normalize examples")
{
    CHECK(pbw_normalize({G("b[0]"), G("a[0]")}) == U("a[0]*b[0]") - U("c[0]"));
    // parse_uenv multiplies, so write the normal form by hand.
    UEnvElement expect;
    expect.add_raw({G("L[0]"), G("a[0]")}, 1);
    CHECK(pbw_normalize({G("a[0]"), G("L[0]")}) == expect);
    UEnvElement ll;
    ll.add_raw({G("L[0]"), G("L[0]")}, 1);
    CHECK(pbw_normalize({G("L[0]"), G("L[0]")}) == ll);
    CHECK(pbw_normalize({G("a[0]"), G("L[0]")}).to_string() == "L[0]*a[0]");
    CHECK(pbw_normalize({G("L[0]"), G("L[0]")}).to_string() == "L[0]^2");
}

TEST_CASE("uenv_mul examples")
{
    CHECK(U("a[0]") * U("b[0]") == pbw_normalize({G("a[0]"), G("b[0]")}));
    CHECK(U("b[0]") * U("a[0]") == U("a[0]*b[0]") - U("c[0]"));
    const UEnvElement u = U("L[1]*d[-1] - 2*a[3]");
    CHECK(UEnvElement::one() * u == u);
    CHECK(u * UEnvElement::one() == u);
}

TEST_CASE("stored words are PBW-normal")
{
    const UEnvElement u = U("d[2]*c[1]*b[0]*a[-1]*L[-2]");
    for (const auto& [w, c] : u.terms())
        CHECK(is_pbw_normal(w));
}

TEST_CASE("free-word oracle agrees with pbw_normalize on words of length <= 3")
{
    const auto gens = generator_window(2);
    std::size_t checked = 0;
    for (const auto& x : gens) {
        REQUIRE(free_word_oracle({x}) == pbw_normalize({x}));
        for (const auto& y : gens) {
            REQUIRE(free_word_oracle({x, y}) == pbw_normalize({x, y}));
            for (const auto& z : gens) {
                REQUIRE(free_word_oracle({x, y, z}) == pbw_normalize({x, y, z}));
                ++checked;
            }
        }
    }
    CHECK(checked == 25 * 25 * 25);
}

TEST_CASE("idempotence and associativity on random words")
{
    std::mt19937_64 rng(21);
    const auto gens = generator_window(2);
    auto word = [&](std::size_t len) {
        Word w;
        for (std::size_t i = 0; i < len; ++i)
            w.push_back(gens[rng() % gens.size()]);
        return w;
    };
    for (int i = 0; i < 200; ++i) {
        const UEnvElement a = pbw_normalize(word(1 + rng() % 4));
        const UEnvElement b = pbw_normalize(word(1 + rng() % 4));
        const UEnvElement c = pbw_normalize(word(1 + rng() % 3));
        CHECK(a.normalized() == a);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("Q and polynomial evaluation")
{
    CHECK(casimir_like_q() == U("a[0]*b[0]") - U("c[0]") + U("c[0]*d[0]"));
    CHECK(parse_uenv("Q") == casimir_like_q());
    CHECK(evaluate_at({1, 0, 1}, G("a[0]")) == U("1 + a[0]^2"));
    CHECK_THROWS_AS(parse_uenv("a[0]^-1"), ParseError);
}
