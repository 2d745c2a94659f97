#ifndef WD_LINEAR_ALGEBRA_HPP
#define WD_LINEAR_ALGEBRA_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "wd/rational.hpp"
#include "wd/sparse_poly.hpp"

namespace wd {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>; // row-major; rows may be empty

// Reduced row echelon form by exact elimination. Returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix& rows);

std::size_t exact_rank(const Matrix& rows);

// Basis of {x : rows * x = 0}. Each basis vector has a 1 in one free column.
std::vector<Vector> exact_nullspace(const Matrix& rows);

// Determinant by elimination with row swaps. Requires a square matrix.
Rational determinant(Matrix m);

// Unique solution of a * x = b for square invertible a; nullopt if singular.
std::optional<Vector> solve(Matrix a, Vector b);

// Incremental echelon basis of a span of polynomials (all over the same
// variables). Each basis element has a distinct leading exponent with unit
// coefficient. The basis also records, for every stored element, its
// expression as a combination of the vectors handed to insert(), so span
// membership can be turned into explicit coefficients.
class PolySpan {
public:
    explicit PolySpan(std::vector<Variable> vars) : vars_(std::move(vars)) {}

    // Returns true when v was independent of the current span.
    bool insert(const SparsePoly& v);
    bool contains(const SparsePoly& v) const;
    // Coefficients c_i with sum c_i * inserted(i) == v, if v is in the span.
    std::optional<std::map<std::size_t, Rational>> express(const SparsePoly& v) const;

    std::size_t dimension() const { return basis_.size(); }
    const std::vector<SparsePoly>& inserted() const { return inserted_; }
    // Inserted vectors that enlarged the span, in insertion order.
    std::vector<SparsePoly> independent_generators() const;
    std::vector<SparsePoly> echelon_basis() const;

private:
    struct Row {
        SparsePoly vec;
        std::map<std::size_t, Rational> combo;
    };
    // Reduces v (and its combination) against the basis.
    void reduce(SparsePoly& v, std::map<std::size_t, Rational>* combo) const;

    std::vector<Variable> vars_;
    std::map<Exponents, Row> basis_; // keyed by pivot (leading exponent)
    std::vector<SparsePoly> inserted_;
    std::vector<std::size_t> independent_;
};

} // namespace wd

#endif
