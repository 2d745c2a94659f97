#include "wd/vandermonde.hpp"

#include "wd/errors.hpp"
#include "wd/oracle.hpp"

namespace wd {

void DetSpec::validate() const
{
    if (alphas.empty() || alphas.size() != sizes.size())
        throw InvalidSpec("need one size per alpha");
    if (r < 0)
        throw InvalidSpec("r must be >= 0");
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (alphas[i] == 0)
            throw InvalidSpec("alphas must be nonzero");
        if (sizes[i] < 1)
            throw InvalidSpec("sizes must be >= 1");
        for (std::size_t j = 0; j < i; ++j)
            if (alphas[i] == alphas[j])
                throw InvalidSpec("repeated alpha " + to_string(alphas[i]));
    }
}

Matrix generalized_vandermonde(const DetSpec& spec)
{
    spec.validate();
    std::int64_t s = 0;
    for (auto k : spec.sizes)
        s += k;
    Matrix m;
    for (std::int64_t n = spec.r; n < spec.r + s; ++n) {
        Vector row;
        for (std::size_t t = 0; t < spec.alphas.size(); ++t) {
            const Rational an = pow(spec.alphas[t], n);
            for (std::int64_t j = 0; j < spec.sizes[t]; ++j)
                row.push_back(pow(Rational(n), j) * an);
        }
        m.push_back(std::move(row));
    }
    return m;
}

Rational superfactorial(std::int64_t m)
{
    Rational out = 1;
    for (std::int64_t k = 1; k <= m; ++k)
        out *= factorial(k);
    return out;
}

Rational det_closed_form(const DetSpec& spec)
{
    spec.validate();
    Rational out = 1;
    const auto m = spec.alphas.size();
    for (std::size_t j = 0; j < m; ++j) {
        const std::int64_t sj = spec.sizes[j];
        out *= superfactorial(sj - 1);
        out *= pow(spec.alphas[j], sj * (sj + 2 * spec.r - 1) / 2);
        for (std::size_t i = 0; i < j; ++i)
            out *= pow(spec.alphas[j] - spec.alphas[i], spec.sizes[i] * sj);
    }
    return out;
}

DetResult det_r(const DetSpec& spec) { return {determinant(generalized_vandermonde(spec)), det_closed_form(spec)}; }

std::vector<Rational> default_sweep_alphas()
{
    return {1, -1, 2, make_rational(1, 2), -3, make_rational(2, 3)};
}

DetSweepReport det_sweep(const std::vector<Rational>& pool, std::size_t max_m, std::int64_t max_s,
                               std::int64_t max_r, std::int64_t naive_max_size)
{
    DetSweepReport report;
    auto check = [&](const DetSpec& spec) {
        ++report.specs;
        const DetResult d = det_r(spec);
        bool bad = !d.agrees();
        report.closed_form_mismatches += bad;
        std::int64_t size = 0;
        for (auto k : spec.sizes)
            size += k;
        if (size <= naive_max_size) {
            ++report.naive_checked;
            const bool naive_bad = naive_det(generalized_vandermonde(spec)) != d.computed;
            report.naive_mismatches += naive_bad;
            bad = bad || naive_bad;
        }
        if (bad && report.failures.size() < 5)
            report.failures.push_back(spec);
    };
    // Ordered choices of distinct alphas, then all size tuples and r.
    std::vector<std::size_t> idx;
    std::vector<bool> used(pool.size(), false);
    auto choose = [&](auto&& self, std::size_t m) -> void {
        if (idx.size() == m) {
            DetSpec spec;
            for (auto i : idx)
                spec.alphas.push_back(pool[i]);
            spec.sizes.assign(m, 1);
            while (true) {
                for (std::int64_t r = 0; r <= max_r; ++r) {
                    spec.r = r;
                    check(spec);
                }
                std::size_t k = 0;
                while (k < m && spec.sizes[k] == max_s)
                    spec.sizes[k++] = 1;
                if (k == m)
                    break;
                ++spec.sizes[k];
            }
            return;
        }
        for (std::size_t i = 0; i < pool.size(); ++i) {
            if (used[i])
                continue;
            used[i] = true;
            idx.push_back(i);
            self(self, m);
            idx.pop_back();
            used[i] = false;
        }
    };
    for (std::size_t m = 1; m <= max_m; ++m)
        choose(choose, m);
    return report;
}

} // namespace wd
