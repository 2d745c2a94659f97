#ifndef WD_ORACLE_HPP
#define WD_ORACLE_HPP

#include <cstdint>
#include <string>

#include "wd/linear_algebra.hpp"
#include "wd/module.hpp"

namespace wd {

struct TruncationPolicy {
    std::int64_t max_total_degree = 4;
    std::int64_t generator_window = 2;
    std::int64_t max_steps = 20;

    void validate() const;
};

enum class ClosureVerdict { FillsTruncation, ProperAtTruncation, Inconclusive };
std::string to_string(ClosureVerdict v);

struct ClosureReport {
    SparsePoly start;
    std::size_t reached = 0;  // dimension of the span
    std::size_t ambient = 0;  // number of box monomials
    std::size_t overflow = 0; // images dropped for exceeding the degree bound
    std::int64_t rounds = 0;
    bool fixpoint = false;
    // For ProperAtTruncation: the span is invariant under the projected
    // action (generator followed by dropping terms outside the box).
    bool projected_invariant = false;
    ClosureVerdict verdict = ClosureVerdict::Inconclusive;
};

// Breadth-first closure of span{v} under all generators in the window.
// Images of total degree above the bound are discarded whole and counted
// as overflow. Verdict: FillsTruncation when the span is the whole box;
// ProperAtTruncation when the closure reached a fixpoint, is proper, and is
// invariant under the projected action; Inconclusive otherwise.
ClosureReport truncated_closure(const LieModule& module, const SparsePoly& v, const TruncationPolicy& policy);

// Straightening by repeated adjacent transpositions at the last descent,
// with no memoisation; independent of pbw_normalize.
UEnvElement free_word_oracle(const Word& word);

// Cofactor expansion along the first row.
Rational naive_det(const Matrix& m);

// Rank as the size of the largest nonvanishing minor (naive_det based).
std::size_t naive_rank(const Matrix& m);

} // namespace wd

#endif
