#include "doctest.h"
#include "printers.hpp"

#include <algorithm>
#include <random>

#include "wd/errors.hpp"
#include "wd/fock_module.hpp"
#include "wd/oracle.hpp"

using namespace wd;

namespace {

Rational Q(long n, long d = 1) { return make_rational(n, d); }

const VSpec eps23 = VSpec::one_dim(Q(2, 3));

std::vector<FModule> c_eps_instances()
{
    return {FModule::m_module(Q(1, 2), 3, Q(1, 3), Q(1, 5), eps23),
            FModule::omega_module(Q(-1, 3), Q(1, 2), 2, Q(-1, 2), VSpec::one_dim(1)),
            FModule(2, -1, PFactor::shift(3), PFactor::laurent(Q(1, 4)), VSpec::one_dim(Q(-5, 2)))};
}

bool has_family_pair(const std::vector<AxiomViolation>& v, Family a, Family b)
{
    return std::any_of(v.begin(), v.end(), [&](const AxiomViolation& x) {
        return (x.x.family == a && x.y.family == b) || (x.x.family == b && x.y.family == a);
    });
}

} // namespace

TEST_CASE("Laurent factor action examples")
{
    const FModule m = FModule::m_module(Q(1, 2), 3, Q(1, 3), Q(1, 5), eps23);
    const SparsePoly v = m.parse_vector("x0^2*x1^-1");
    CHECK(m.act({Family::L, 0}, v) == v * Q(7, 3));
    CHECK(m.act({Family::d, 0}, v) == v * Q(-4, 5));
    CHECK(m.act({Family::b, 2}, v) == m.parse_vector("x0^4*x1^-2"));
    CHECK(m.act({Family::c, -1}, v) == m.parse_vector("-3*x0*x1^-1"));
    // L_1 x0^i = (w0 + i + alpha) x0^{i+1}
    CHECK(m.act({Family::L, 1}, v) == m.parse_vector("17/6*x0^3*x1^-1"));
    // a_0 x1^k = (beta (w1 + k) + eps) x1^{k+1}
    CHECK(m.act({Family::a, 0}, v) == m.parse_vector("-26/15*x0^2"));
}

TEST_CASE("shift factor action examples")
{
    const FModule m = FModule::omega_module(0, 1, 2, 3, VSpec::one_dim(0));
    const SparsePoly one = m.one();
    // x0^n x1^{-1} f(D0, D1) = 2^n 3^{-1} f(D0 - n, D1 + 1)
    CHECK(m.act({Family::b, 1}, m.parse_vector("D0*D1")) == m.parse_vector("2/3*(D0 - 1)*(D1 + 1)"));
    CHECK(m.act({Family::L, 0}, one) == m.parse_vector("D0"));
    CHECK(m.act({Family::d, 0}, m.parse_vector("D1")) == m.parse_vector("D1^2"));
    CHECK(m.act({Family::c, -2}, one) == one * Q(-1, 4));
}

TEST_CASE("F(P, C_eps) satisfies the module axioms")
{
    for (const auto& m : c_eps_instances()) {
        INFO(m.name());
        CHECK(module_axiom_check(m, 2, sample_monomials(m, 3)).empty());
    }
}

TEST_CASE("Whittaker V: printed lift fails, corrected lift is a module")
{
    const FModule printed = FModule::m_module(Q(1, 2), 3, Q(1, 3), Q(1, 5), VSpec::whittaker());
    const auto bad = module_axiom_check(printed, 1, sample_monomials(printed, 2));
    CHECK_FALSE(bad.empty());
    CHECK(has_family_pair(bad, Family::a, Family::a));
    const FModule corrected = printed.with_phi_form(PhiAB::Form::Corrected);
    CHECK(module_axiom_check(corrected, 2, sample_monomials(corrected, 3)).empty());
    const auto ctrl = module_axiom_check(corrected.with_corrupted_a(), 1, sample_monomials(corrected, 2));
    CHECK(has_family_pair(ctrl, Family::a, Family::d));
    // On C_eps the dropped term is multiplied by e = 0.
    const FModule ce = FModule::m_module(Q(1, 2), 3, Q(1, 3), Q(1, 5), eps23).with_corrupted_a();
    CHECK(module_axiom_check(ce, 1, sample_monomials(ce, 2)).empty());
}

TEST_CASE("Q acts as eps on F(P, C_eps)")
{
    std::mt19937_64 rng(51);
    for (const auto& m : c_eps_instances()) {
        for (int i = 0; i < 5; ++i) {
            const SparsePoly v = random_vector(m, 3, rng);
            CHECK(q_action(m, v) == v * m.v_spec().eps);
        }
    }
}

TEST_CASE("Q is not scalar on the Whittaker lift")
{
    const FModule m = FModule::m_module(Q(1, 2), 3, Q(1, 3), Q(1, 5), VSpec::whittaker());
    const SparsePoly one = m.one();
    const SparsePoly q1 = q_action(m, one);
    CHECK(q1 == m.parse_vector("h"));
    // Q.1 = h and Q.h = h^2 are not proportional to their arguments.
    CHECK(q_action(m, m.parse_vector("h")) == m.parse_vector("h^2"));
    const FModule c = m.with_phi_form(PhiAB::Form::Corrected);
    CHECK(q_action(c, one) == m.parse_vector("-3*h"));
}

TEST_CASE("epsilon_simplicity examples")
{
    CHECK(epsilon_simplicity(2, Q(1, 2), 2).simple == true);
    const auto v = epsilon_simplicity(2, Q(1, 2), -3);
    CHECK_FALSE(v.simple);
    CHECK(v.witness == 1);
    CHECK(epsilon_simplicity(Q(1, 3), 1, 1).witness == -4);
    CHECK_THROWS_AS(epsilon_simplicity(0, 1, 1), InvalidSpec);
    const FModule om = FModule::omega_module(1, 1, 2, 3, eps23);
    CHECK_THROWS_AS(epsilon_simplicity(om), NotApplicable);
}

TEST_CASE("epsilon_simplicity agrees with truncated closure")
{
    const TruncationPolicy policy{4, 2, 20};
    // (beta, w, eps) designed simple / non-simple with witness n.
    struct Case {
        Rational beta, w, eps;
        bool simple;
    };
    const std::vector<Case> cases{{2, Q(1, 2), 2, true}, {3, Q(1, 3), Q(1, 2), true}, {2, Q(1, 2), -3, false},
                                  {1, 0, 2, false},     {Q(1, 2), Q(1, 4), Q(-5, 8), false}};
    for (const auto& c : cases) {
        const FModule m(1, c.beta, PFactor::laurent(Q(1, 3)), PFactor::laurent(c.w), VSpec::one_dim(c.eps));
        const auto verdict = epsilon_simplicity(m);
        INFO(m.name());
        CHECK(verdict.simple == c.simple);
        const SparsePoly start = verdict.witness ? epsilon_submodule_generator(m, *verdict.witness) : m.one();
        const auto report = truncated_closure(m, start, policy);
        CHECK(report.verdict
              == (c.simple ? ClosureVerdict::FillsTruncation : ClosureVerdict::ProperAtTruncation));
    }
}

TEST_CASE("weight decomposition")
{
    const FModule m = FModule::m_module(0, 1, Q(1, 2), Q(1, 3), eps23);
    const auto w = weight_decomposition(m, 2);
    std::size_t total = 0;
    for (const auto& [key, vs] : w) {
        CHECK(vs.size() == 1);
        total += vs.size();
    }
    CHECK(total == box_monomials(m.variables(), 2).size());
    CHECK(w.count({Q(3, 2), Q(-2, 3)}) == 1); // x0 x1^-1
    const FModule om = FModule::omega_module(0, 1, 2, 3, eps23);
    CHECK_THROWS_AS(weight_decomposition(om, 2), NotWeight);
}

TEST_CASE("Whittaker V: (1 - e) lowers degree until a nonzero constant")
{
    std::mt19937_64 rng(52);
    const std::vector<Variable> hv{{"h", false}};
    std::uniform_int_distribution<int> c(-3, 3);
    for (int i = 0; i < 20; ++i) {
        SparsePoly f(hv);
        for (std::int64_t k = 0; k <= 3; ++k)
            f.add_term({k}, Rational(c(rng)));
        if (f.is_zero())
            continue;
        const std::int64_t deg = f.total_degree();
        std::int64_t steps = 0;
        while (f.total_degree() > 0) {
            // e f(h) = f(h - 1)
            f = f - f.shift(0, Rational(1));
            ++steps;
        }
        CHECK(steps == deg);
        CHECK_FALSE(f.is_zero());
    }
}
