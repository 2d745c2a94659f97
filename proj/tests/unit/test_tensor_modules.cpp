#include "doctest.h"
#include "printers.hpp"

#include <random>

#include "wd/errors.hpp"
#include "wd/oracle.hpp"
#include "wd/tensor_module.hpp"
#include "wd/vandermonde.hpp"

using namespace wd;

namespace {

Rational Q(long n, long d = 1) { return make_rational(n, d); }

const OmegaParams om1{Q(1, 2), 3, Q(1, 4), 2, {1, 1}};
const OmegaParams om2{Q(1, 3), -2, 1, 3, {0, 0, 1}};
const OmegaParams om2_eq{Q(1, 3), -2, 1, 2, {0, 0, 1}};

// f over (s, t) placed in factor k of an m-fold tensor.
SparsePoly embed(const SparsePoly& f, const TensorModule& t, std::size_t k)
{
    SparsePoly out(t.variables());
    for (const auto& [e, c] : f.terms()) {
        Exponents x(t.variables().size(), 0);
        x[t.s_index(k)] = e[0];
        x[t.t_index(k)] = e[1];
        out.add_term(x, c);
    }
    return out;
}

} // namespace

TEST_CASE("tensor action is the coproduct of the factor actions")
{
    std::mt19937_64 rng(71);
    const TensorModule t({om1, om2});
    const OmegaModule m1(om1), m2(om2);
    for (int i = 0; i < 5; ++i) {
        const SparsePoly f1 = random_vector(m1, 2, rng), f2 = random_vector(m2, 2, rng);
        const SparsePoly v = embed(f1, t, 0) * embed(f2, t, 1);
        for (const auto& x : generator_window(2)) {
            const SparsePoly expect = embed(m1.act(x, f1), t, 0) * embed(f2, t, 1)
                + embed(f1, t, 0) * embed(m2.act(x, f2), t, 1);
            CHECK(tensor_act(t, x, v) == expect);
        }
    }
    CHECK(module_axiom_check(t, 2, sample_monomials(t, 2)).empty());
}

TEST_CASE("det_r small cases by hand")
{
    const Rational a = Q(1, 2), b = 3;
    CHECK(det_r({{a, b}, {1, 1}, 0}).computed == b - a);
    CHECK(det_r({{a}, {2}, 0}).computed == a);
    CHECK(superfactorial(0) == 1);
    CHECK(superfactorial(3) == 12);
    CHECK_THROWS_AS(det_r({{a, a}, {1, 1}, 0}), InvalidSpec);
    CHECK_THROWS_AS(det_r({{0}, {1}, 0}), InvalidSpec);
}

TEST_CASE("det_r agrees with the closed form and a cofactor oracle")
{
    const std::vector<DetSpec> specs{{{Q(1, 2), 2, Q(-1, 3)}, {2, 3, 1}, 1},
                                     {{-2, 5}, {1, 3}, 0},
                                     {{Q(2, 3)}, {4}, 2},
                                     {{1, -1, 2}, {1, 1, 2}, 3}};
    for (const auto& s : specs) {
        const DetResult r = det_r(s);
        CHECK(r.agrees());
        CHECK(naive_det(generalized_vandermonde(s)) == r.computed);
    }
    CHECK(det_r(specs[0]).computed == Q(8575, 16));
}

TEST_CASE("extraction steps match the direct computation")
{
    std::mt19937_64 rng(72);
    const TensorModule t({om1, om2});
    for (int i = 0; i < 4; ++i) {
        const SparsePoly g = random_vector(t, 2, rng);
        for (std::size_t k = 0; k < 2; ++k)
            for (const Extraction d : {Extraction::LShift, Extraction::AShift, Extraction::ATop}) {
                INFO(to_string(d), " k=", k, " g=", g.to_string());
                const CertificateStep step = extraction_step(t, g, k, d);
                CHECK(step.result == extraction_expected(t, g, k, d));
                CHECK(act(t, step.op, g) == step.result);
            }
    }
}

TEST_CASE("tensor reduction and generation replay")
{
    std::mt19937_64 rng(73);
    const TensorModule t({om1, om2});
    for (int i = 0; i < 5; ++i) {
        const SparsePoly g = random_vector(t, 2, rng);
        const Certificate c = tensor_reduce_to_bottom(t, g);
        CHECK(replay(t, c).ok);
        CHECK(c.final_vector() == t.one());
    }
    for (const Exponents& e : std::vector<Exponents>{{1, 2, 0, 1}, {0, 0, 2, 0}, {2, 0, 1, 1}}) {
        const Certificate c = tensor_generate(t, e);
        CHECK(replay(t, c).ok);
        CHECK(c.final_vector() == SparsePoly::monomial(t.variables(), e));
    }
}

TEST_CASE("r_g equals the wide-window oracle")
{
    std::mt19937_64 rng(74);
    const TensorModule t({om1, om2});
    for (int i = 0; i < 6; ++i) {
        const SparsePoly g = random_vector(t, 2, rng);
        CHECK(r_g(t, g) == r_g_window(t, g, -4, 8));
    }
    const SparsePoly tt = t.parse_vector("t1*t2 + 1");
    CHECK(in_t_polynomials(t, tt));
    CHECK_FALSE(in_t_polynomials(t, t.parse_vector("s1*t2")));
}

TEST_CASE("equal lambda: W is a proper submodule")
{
    const TensorModule eq({om1, om2_eq});
    REQUIRE(eq.equal_lambda_pair().has_value());
    const WitnessCheck w = w_witness_check(eq, 0, 1, 6, 3);
    CHECK(w.basis_size == 84);
    CHECK(w.actions > 0);
    CHECK(w.escapes == 0);
    // Control: with distinct lambdas the same subspace is not invariant.
    const TensorModule dist({om1, om2});
    CHECK(w_witness_check(dist, 0, 1, 4, 1).escapes > 0);
}

TEST_CASE("simplicity decision")
{
    const TensorModule dist({om1, om2});
    const SimplicityReport s = simplicity_decision(dist, 1);
    CHECK(s.simple);
    REQUIRE(s.reductions.size() == s.samples.size());
    for (std::size_t i = 0; i < s.samples.size(); ++i) {
        CHECK(replay(dist, s.reductions[i]).ok);
        for (const auto& c : s.generations[i])
            CHECK(replay(dist, c).ok);
    }
    const SimplicityReport e = simplicity_decision(TensorModule({om1, om2_eq}), 1);
    CHECK_FALSE(e.simple);
    REQUIRE(e.witness.has_value());
    CHECK(e.witness->escapes == 0);
}

TEST_CASE("iso_check")
{
    const TensorModule a({om1, om2}), b({om2, om1});
    const IsoResult r = iso_check(a, b);
    CHECK(r.isomorphic);
    CHECK(r.permutation == std::vector<std::size_t>{2, 1});
    CHECK(canonical_form(a) == canonical_form(b));
    OmegaParams other = om2;
    other.gamma = 2;
    const IsoResult n = iso_check(a, TensorModule({om1, other}));
    CHECK_FALSE(n.isomorphic);
    CHECK_FALSE(n.invariant.empty());
    CHECK_FALSE(iso_check(a, TensorModule({om1})).isomorphic);
}

TEST_CASE("det_sweep counts")
{
    const auto pool = default_sweep_alphas();
    const DetSweepReport small = det_sweep(pool, 2, 2, 1);
    // (6 + 30 * 4) alpha/size choices, two values of r.
    CHECK(small.specs == (6 * 2 + 30 * 4) * 2);
    CHECK(small.ok());
    CHECK(small.naive_checked == small.specs);
}
