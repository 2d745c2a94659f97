#include "doctest.h"
#include "printers.hpp"

#include <random>

#include "wd/errors.hpp"
#include "wd/linear_algebra.hpp"
#include "wd/oracle.hpp"
#include "wd/sparse_poly.hpp"

using namespace wd;

namespace {

const std::vector<Variable> st{{"s", false}, {"t", false}};
const std::vector<Variable> lx{{"x0", true}, {"x1", true}};

SparsePoly P(const std::vector<Variable>& v, const char* text) { return parse_poly(v, text); }

SparsePoly random_poly(const std::vector<Variable>& vars, std::mt19937_64& rng, int degree = 3)
{
    std::uniform_int_distribution<int> c(-4, 4);
    std::bernoulli_distribution keep(0.4);
    SparsePoly p(vars);
    for (const auto& e : box_monomials(vars, degree))
        if (keep(rng))
            p.add_term(e, make_rational(c(rng), 1 + (c(rng) + 4) % 3));
    return p;
}

} // namespace

TEST_CASE("rational parsing and printing")
{
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-3")) == "-3");
    CHECK(to_string(parse_rational("0/5")) == "0");
    CHECK(parse_rational(" -2/4 ") == make_rational(-1, 2));
    CHECK_THROWS_AS(parse_rational("2/-4"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK(pow(make_rational(2, 3), -2) == make_rational(9, 4));
    CHECK(falling_factorial(-2, 3) == -24);
    CHECK(binomial(5, 7) == 0);
}

TEST_CASE("poly_add")
{
    CHECK(P(st, "s + t") + P(st, "-s") == P(st, "t"));
    CHECK(P(st, "2*s^2") + P(st, "3*s^2") == P(st, "5*s^2"));
    const SparsePoly two = P(lx, "x0^-1") + P(lx, "x0^-1");
    CHECK(two == P(lx, "2*x0^-1"));
    CHECK(two.coefficient({-1, 0}) == 2);
    CHECK_THROWS_AS(P(st, "s") + P(lx, "x0"), VariableMismatch);
}

TEST_CASE("poly_mul, shift, derive")
{
    CHECK(P(st, "s^2").shift(0, 1) == P(st, "s^2 - 2*s + 1"));
    CHECK(P(st, "t^3").derive(1) == P(st, "3*t^2"));
    CHECK(P(st, "s*t").shift(0, 2) == P(st, "s*t - 2*t"));
    CHECK(P(lx, "x0 + x0^-1") * P(lx, "x0") == P(lx, "x0^2 + 1"));
    CHECK_THROWS_AS(P(lx, "x0").shift(0, 1), UnsupportedVariable);
    CHECK_THROWS_AS(P(lx, "x0").derive(0), UnsupportedVariable);
}

TEST_CASE("printing orders terms from the top")
{
    CHECK(P(st, "1 - t + 2/3*s^2*t").to_string() == "2/3*s^2*t - t + 1");
    CHECK(SparsePoly(st).to_string() == "0");
    CHECK(P(lx, "x0^-1*x1^2").to_string() == "x0^-1*x1^2");
}

TEST_CASE("ring axioms on random triples")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 30; ++i) {
        for (const auto* vars : {&st, &lx}) {
            const SparsePoly a = random_poly(*vars, rng), b = random_poly(*vars, rng), c = random_poly(*vars, rng);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            CHECK(a - a == SparsePoly(*vars));
        }
    }
}

TEST_CASE("shift round trip")
{
    std::mt19937_64 rng(12);
    for (int i = 0; i < 30; ++i) {
        const SparsePoly p = random_poly(st, rng, 4);
        const Rational a = make_rational(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3));
        CHECK(p.shift(0, a).shift(0, -a) == p);
        CHECK(p.shift(1, a).shift(1, -a) == p);
    }
}

TEST_CASE("exact_rank and exact_nullspace")
{
    CHECK(exact_rank({{1, 1}, {2, 3}}) == 2);
    CHECK(exact_rank({{1, 2}, {2, 4}}) == 1);
    const auto ker = exact_nullspace({{1, 2}, {2, 4}});
    REQUIRE(ker.size() == 1);
    CHECK(ker[0] == Vector{-2, 1});
    CHECK(exact_rank({}) == 0);
    CHECK(determinant({{1, 1}, {2, 3}}) == 1);
}

TEST_CASE("exact_rank agrees with the minor-based oracle")
{
    // Every 2x2 matrix over {-3..3}, then random 3x3 and 4x4 samples.
    for (int code = 0; code < 7 * 7 * 7 * 7; ++code) {
        Matrix m(2, Vector(2));
        int c = code;
        for (auto& row : m)
            for (auto& x : row) {
                x = c % 7 - 3;
                c /= 7;
            }
        REQUIRE(exact_rank(m) == naive_rank(m));
    }
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> e(-3, 3);
    for (std::size_t n : {3u, 4u}) {
        for (int i = 0; i < 400; ++i) {
            Matrix m(n, Vector(n));
            const int zero_bias = i % 4; // push some samples towards low rank
            for (auto& row : m)
                for (auto& x : row)
                    x = static_cast<int>(rng() % 4) < zero_bias ? 0 : e(rng);
            REQUIRE(exact_rank(m) == naive_rank(m));
            REQUIRE(determinant(m) == naive_det(m));
        }
    }
}

TEST_CASE("nullspace vectors are annihilated")
{
    std::mt19937_64 rng(14);
    std::uniform_int_distribution<int> e(-2, 2);
    for (int i = 0; i < 100; ++i) {
        Matrix m(3, Vector(5));
        for (auto& row : m)
            for (auto& x : row)
                x = e(rng);
        const auto ker = exact_nullspace(m);
        CHECK(ker.size() + exact_rank(m) == 5);
        for (const auto& v : ker)
            for (const auto& row : m) {
                Rational dot = 0;
                for (std::size_t j = 0; j < 5; ++j)
                    dot += row[j] * v[j];
                CHECK(dot == 0);
            }
    }
}

TEST_CASE("PolySpan membership and expression")
{
    PolySpan span(st);
    CHECK(span.insert(P(st, "s + t")));
    CHECK(span.insert(P(st, "s - t")));
    CHECK_FALSE(span.insert(P(st, "3*s")));
    auto combo = span.express(P(st, "t"));
    REQUIRE(combo);
    SparsePoly back(st);
    for (const auto& [i, c] : *combo)
        back += span.inserted()[i] * c;
    CHECK(back == P(st, "t"));
    CHECK_FALSE(span.contains(P(st, "s*t")));
}

TEST_CASE("box monomials")
{
    CHECK(box_monomials(st, 2).size() == 6);
    CHECK(box_monomials(lx, 1).size() == 5);
}
