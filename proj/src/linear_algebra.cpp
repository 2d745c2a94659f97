#include "wd/linear_algebra.hpp"

#include <algorithm>
#include <stdexcept>

#include "wd/errors.hpp"

namespace wd {

namespace {

std::size_t column_count(const Matrix& rows)
{
    std::size_t n = 0;
    for (const auto& r : rows)
        n = std::max(n, r.size());
    return n;
}

} // namespace

std::vector<std::size_t> row_reduce(Matrix& rows)
{
    const std::size_t cols = column_count(rows);
    for (auto& r : rows)
        r.resize(cols);
    std::vector<std::size_t> pivots;
    std::size_t lead_row = 0;
    for (std::size_t col = 0; col < cols && lead_row < rows.size(); ++col) {
        std::size_t pivot = lead_row;
        while (pivot < rows.size() && rows[pivot][col] == 0)
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[pivot], rows[lead_row]);
        const Rational inv = 1 / rows[lead_row][col];
        for (auto& x : rows[lead_row])
            x *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == lead_row || rows[r][col] == 0)
                continue;
            const Rational f = rows[r][col];
            for (std::size_t c = col; c < cols; ++c)
                rows[r][c] -= f * rows[lead_row][c];
        }
        pivots.push_back(col);
        ++lead_row;
    }
    return pivots;
}

std::size_t exact_rank(const Matrix& rows)
{
    Matrix copy = rows;
    return row_reduce(copy).size();
}

std::vector<Vector> exact_nullspace(const Matrix& rows)
{
    Matrix m = rows;
    const std::size_t cols = column_count(m);
    const auto pivots = row_reduce(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        Vector x(cols, Rational(0));
        x[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            x[pivots[i]] = -m[i][free];
        basis.push_back(std::move(x));
    }
    return basis;
}

Rational determinant(Matrix m)
{
    const std::size_t n = m.size();
    for (const auto& r : m)
        if (r.size() != n)
            throw std::invalid_argument("determinant of a non-square matrix");
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0)
            ++pivot;
        if (pivot == n)
            return Rational(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        const Rational inv = 1 / m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0)
                continue;
            const Rational f = m[r][col] * inv;
            for (std::size_t c = col; c < n; ++c)
                m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

std::optional<Vector> solve(Matrix a, Vector b)
{
    const std::size_t n = a.size();
    if (b.size() != n)
        throw std::invalid_argument("solve: dimension mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n)
            throw std::invalid_argument("solve: non-square matrix");
        a[i].push_back(b[i]);
    }
    const auto pivots = row_reduce(a);
    if (pivots.size() != n || pivots.back() != n - 1)
        return std::nullopt;
    Vector x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = a[i][n];
    return x;
}

void PolySpan::reduce(SparsePoly& v, std::map<std::size_t, Rational>* combo) const
{
    // Eliminate the largest pivot exponent still present; subtracting a row
    // only introduces smaller exponents, so this terminates.
    while (!v.is_zero()) {
        const Row* row = nullptr;
        Rational coeff;
        for (auto it = v.terms().rbegin(); it != v.terms().rend(); ++it) {
            auto found = basis_.find(it->first);
            if (found != basis_.end()) {
                row = &found->second;
                coeff = it->second;
                break;
            }
        }
        if (row == nullptr)
            return;
        v -= row->vec * coeff;
        if (combo != nullptr) {
            for (const auto& [idx, c] : row->combo) {
                Rational& slot = (*combo)[idx];
                slot -= coeff * c;
                if (slot == 0)
                    combo->erase(idx);
            }
        }
    }
}

bool PolySpan::insert(const SparsePoly& v)
{
    if (v.variables() != vars_)
        throw VariableMismatch("PolySpan::insert: vector over different variables");
    const std::size_t idx = inserted_.size();
    inserted_.push_back(v);
    SparsePoly r = v;
    std::map<std::size_t, Rational> combo{{idx, Rational(1)}};
    reduce(r, &combo);
    if (r.is_zero())
        return false;
    const Rational inv = 1 / r.leading_coefficient();
    r *= inv;
    for (auto& [i, c] : combo)
        c *= inv;
    const Exponents pivot = r.leading_exponents();
    basis_.emplace(pivot, Row{std::move(r), std::move(combo)});
    independent_.push_back(idx);
    return true;
}

bool PolySpan::contains(const SparsePoly& v) const
{
    SparsePoly r = v;
    reduce(r, nullptr);
    return r.is_zero();
}

std::optional<std::map<std::size_t, Rational>> PolySpan::express(const SparsePoly& v) const
{
    SparsePoly r = v;
    std::map<std::size_t, Rational> neg;
    reduce(r, &neg);
    if (!r.is_zero())
        return std::nullopt;
    // reduce() accumulated -(combination); flip the sign.
    for (auto& [i, c] : neg)
        c = -c;
    return neg;
}

std::vector<SparsePoly> PolySpan::independent_generators() const
{
    std::vector<SparsePoly> out;
    for (auto i : independent_)
        out.push_back(inserted_[i]);
    return out;
}

std::vector<SparsePoly> PolySpan::echelon_basis() const
{
    std::vector<SparsePoly> out;
    for (const auto& [pivot, row] : basis_)
        out.push_back(row.vec);
    return out;
}

} // namespace wd
