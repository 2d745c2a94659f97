#include "doctest.h"
#include "printers.hpp"

#include <functional>

#include "wd/errors.hpp"
#include "wd/oracle.hpp"

using namespace wd;

namespace {

// Every generator acts by the same map on C[x]; not an L-module, which the
// closure does not need.
class ToyModule : public LieModule {
public:
    explicit ToyModule(std::function<SparsePoly(const SparsePoly&)> f) : f_(std::move(f)) {}
    const std::vector<Variable>& variables() const override { return vars_; }
    SparsePoly act(const Generator&, const SparsePoly& v) const override { return f_(v); }
    std::string name() const override { return "toy"; }

private:
    std::function<SparsePoly(const SparsePoly&)> f_;
    std::vector<Variable> vars_{{"x", false}};
};

} // namespace

TEST_CASE("truncated_closure verdicts")
{
    const TruncationPolicy policy{3, 1, 20};

    const ToyModule zero([](const SparsePoly& v) { return SparsePoly(v.variables()); });
    const auto z = truncated_closure(zero, zero.one(), policy);
    CHECK(z.verdict == ClosureVerdict::ProperAtTruncation);
    CHECK(z.reached == 1);
    CHECK(z.ambient == 4);
    CHECK(z.fixpoint);
    CHECK(z.projected_invariant);

    const ToyModule up([](const SparsePoly& v) { return v.multiply_by_power(0, 1); });
    const auto u = truncated_closure(up, up.one(), policy);
    CHECK(u.verdict == ClosureVerdict::FillsTruncation);
    CHECK(u.reached == 4);
    CHECK(u.overflow > 0);

    const auto short_run = truncated_closure(up, up.one(), {3, 1, 1});
    CHECK(short_run.verdict == ClosureVerdict::Inconclusive);
    CHECK_FALSE(short_run.fixpoint);

    // x^4 + x is dropped whole, but its projection x leaves span{1}.
    const ToyModule leak([](const SparsePoly& v) { return v * parse_poly(v.variables(), "x^4 + x"); });
    const auto l = truncated_closure(leak, leak.one(), policy);
    CHECK(l.fixpoint);
    CHECK(l.reached == 1);
    CHECK_FALSE(l.projected_invariant);
    CHECK(l.verdict == ClosureVerdict::Inconclusive);
}

TEST_CASE("truncated_closure input validation")
{
    const ToyModule id([](const SparsePoly& v) { return v; });
    CHECK_THROWS_AS(truncated_closure(id, id.zero(), {3, 1, 5}), ZeroVector);
    CHECK_THROWS_AS(truncated_closure(id, id.parse_vector("x^4"), {3, 1, 5}), InvalidSpec);
    CHECK_THROWS_AS(truncated_closure(id, id.one(), {0, 1, 5}), InvalidSpec);
    CHECK(to_string(ClosureVerdict::FillsTruncation) != to_string(ClosureVerdict::Inconclusive));
}

TEST_CASE("naive_det and naive_rank")
{
    CHECK(naive_det({{2}}) == 2);
    CHECK(naive_det({{1, 2}, {3, 4}}) == -2);
    CHECK(naive_det({{2, 0, 1}, {1, 3, 2}, {1, 1, 2}}) == 6);
    CHECK(naive_rank({{1, 2, 3}, {2, 4, 6}}) == 1);
    CHECK(naive_rank({{0, 0}, {0, 0}}) == 0);
    CHECK(naive_rank({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}) == 2);
}

TEST_CASE("free_word_oracle small words")
{
    const Generator a0{Family::a, 0}, b0{Family::b, 0}, l1{Family::L, 1}, a2{Family::a, 2};
    CHECK(free_word_oracle({b0, a0}) == parse_uenv("a[0]*b[0]") - parse_uenv("c[0]"));
    // a_2 L_1 = L_1 a_2 - 2 a_3
    UEnvElement expect;
    expect.add_raw({l1, a2}, 1);
    expect.add_raw({Generator{Family::a, 3}}, -2);
    CHECK(free_word_oracle({a2, l1}) == expect);
}
