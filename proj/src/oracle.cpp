#include "wd/oracle.hpp"

#include <deque>

#include "wd/errors.hpp"

namespace wd {

void TruncationPolicy::validate() const
{
    if (max_total_degree < 1 || generator_window < 1 || max_steps < 1)
        throw InvalidSpec("truncation policy fields must be positive");
}

std::string to_string(ClosureVerdict v)
{
    switch (v) {
    case ClosureVerdict::FillsTruncation:
        return "FillsTruncation";
    case ClosureVerdict::ProperAtTruncation:
        return "ProperAtTruncation";
    case ClosureVerdict::Inconclusive:
        return "Inconclusive";
    }
    return "?";
}

namespace {

SparsePoly project(const SparsePoly& v, std::int64_t max_degree)
{
    SparsePoly out(v.variables());
    for (const auto& [e, c] : v.terms()) {
        std::int64_t d = 0;
        for (auto x : e)
            d += x < 0 ? -x : x;
        if (d <= max_degree)
            out.add_term(e, c);
    }
    return out;
}

} // namespace

ClosureReport truncated_closure(const LieModule& module, const SparsePoly& v, const TruncationPolicy& policy)
{
    policy.validate();
    if (v.is_zero())
        throw ZeroVector("closure of the zero vector");
    if (v.total_degree() > policy.max_total_degree)
        throw InvalidSpec("start vector exceeds the truncation degree");
    ClosureReport r;
    r.start = v;
    r.ambient = box_monomials(module.variables(), policy.max_total_degree).size();
    const auto gens = generator_window(policy.generator_window);

    PolySpan span(module.variables());
    span.insert(v);
    std::vector<SparsePoly> frontier{v};
    while (!frontier.empty() && r.rounds < policy.max_steps) {
        ++r.rounds;
        std::vector<SparsePoly> next;
        for (const auto& w : frontier) {
            for (const auto& g : gens) {
                SparsePoly img = module.act(g, w);
                if (img.is_zero())
                    continue;
                if (img.total_degree() > policy.max_total_degree) {
                    ++r.overflow;
                    continue;
                }
                if (span.insert(img))
                    next.push_back(std::move(img));
            }
        }
        frontier = std::move(next);
    }
    r.fixpoint = frontier.empty();
    r.reached = span.dimension();
    if (r.reached == r.ambient) {
        r.verdict = ClosureVerdict::FillsTruncation;
        return r;
    }
    if (!r.fixpoint)
        return r;
    r.projected_invariant = true;
    for (const auto& b : span.echelon_basis()) {
        for (const auto& g : gens) {
            if (!span.contains(project(module.act(g, b), policy.max_total_degree))) {
                r.projected_invariant = false;
                break;
            }
        }
        if (!r.projected_invariant)
            break;
    }
    if (r.projected_invariant)
        r.verdict = ClosureVerdict::ProperAtTruncation;
    return r;
}

UEnvElement free_word_oracle(const Word& word)
{
    UEnvElement out;
    std::deque<std::pair<Word, Rational>> pending{{word, Rational(1)}};
    while (!pending.empty()) {
        auto [w, c] = pending.front();
        pending.pop_front();
        std::size_t i = w.size();
        for (std::size_t k = w.size(); k-- > 1;) {
            if (w[k] < w[k - 1]) {
                i = k - 1;
                break;
            }
        }
        if (i == w.size()) {
            out.add_raw(w, c);
            continue;
        }
        // w = u x y v with x > y: x y = y x + [x, y].
        for (const auto tmp = bracket(w[i], w[i + 1]); const auto& [g, k] : tmp.terms()) {
            Word shorter(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
            shorter.push_back(g);
            shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(i + 2), w.end());
            pending.emplace_back(std::move(shorter), c * k);
        }
        std::swap(w[i], w[i + 1]);
        pending.emplace_back(std::move(w), c);
    }
    return out;
}

Rational naive_det(const Matrix& m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    if (n == 1)
        return m[0][0];
    Rational out = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0)
            continue;
        Matrix minor;
        for (std::size_t i = 1; i < n; ++i) {
            Vector row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j)
                    row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        const Rational term = m[0][j] * naive_det(minor);
        out += j % 2 == 0 ? term : Rational(-term);
    }
    return out;
}

std::size_t naive_rank(const Matrix& m)
{
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    // Largest k with a nonzero k x k minor; subsets enumerated by bitmask.
    for (std::size_t k = std::min(rows, cols); k > 0; --k) {
        for (unsigned rmask = 0; rmask < (1u << rows); ++rmask) {
            if (static_cast<std::size_t>(__builtin_popcount(rmask)) != k)
                continue;
            for (unsigned cmask = 0; cmask < (1u << cols); ++cmask) {
                if (static_cast<std::size_t>(__builtin_popcount(cmask)) != k)
                    continue;
                Matrix sub;
                for (std::size_t i = 0; i < rows; ++i) {
                    if (!(rmask >> i & 1u))
                        continue;
                    Vector row;
                    for (std::size_t j = 0; j < cols; ++j)
                        if (cmask >> j & 1u)
                            row.push_back(m[i][j]);
                    sub.push_back(std::move(row));
                }
                if (naive_det(sub) != 0)
                    return k;
            }
        }
    }
    return 0;
}

} // namespace wd
