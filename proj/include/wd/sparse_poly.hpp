#ifndef WD_SPARSE_POLY_HPP
#define WD_SPARSE_POLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "wd/rational.hpp"

namespace wd {

struct Variable {
    std::string name;
    bool laurent = false; // exponents range over Z instead of N

    friend bool operator==(const Variable&, const Variable&) = default;
};

using Exponents = std::vector<std::int64_t>;

// Sparse multivariate (Laurent-)polynomial with exact coefficients.
//
// Terms live in a std::map keyed by exponent vectors, so iteration runs in
// increasing lexicographic order and the lexicographic leading term is the
// last entry. The tensor-module degree order relies on this.
class SparsePoly {
public:
    using TermMap = std::map<Exponents, Rational>;

    SparsePoly() = default;
    explicit SparsePoly(std::vector<Variable> vars);

    static SparsePoly constant(std::vector<Variable> vars, const Rational& c);
    static SparsePoly monomial(std::vector<Variable> vars, Exponents e, const Rational& c = 1);
    // var^power as an element of the ring over vars.
    static SparsePoly variable(std::vector<Variable> vars, std::string_view name, std::int64_t power = 1);
    // sum_k coeffs[k] var^k.
    static SparsePoly univariate(std::vector<Variable> vars, std::size_t var, const std::vector<Rational>& coeffs);

    const std::vector<Variable>& variables() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t index_of(std::string_view name) const;
    bool has_variable(std::string_view name) const;

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coefficient(const Exponents& e) const;
    // Adds c x^e, pruning the entry if it cancels.
    void add_term(const Exponents& e, const Rational& c);

    // Lexicographically largest exponent vector. Requires a nonzero poly.
    const Exponents& leading_exponents() const;
    const Rational& leading_coefficient() const;
    // Maximum exponent of var over the support (0 for the zero polynomial).
    std::int64_t degree_in(std::size_t var) const;
    // Maximum of sum |e_i| over the support; -1 for the zero polynomial.
    std::int64_t total_degree() const;
    bool is_constant() const;
    // Value of the constant term.
    Rational constant_term() const;
    // True when no exponent on var is nonzero.
    bool independent_of(std::size_t var) const;

    SparsePoly& operator+=(const SparsePoly& other);
    SparsePoly& operator-=(const SparsePoly& other);
    SparsePoly& operator*=(const Rational& c);
    SparsePoly operator-() const;

    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
    friend SparsePoly operator*(SparsePoly a, const Rational& c) { return a *= c; }
    friend SparsePoly operator*(const Rational& c, SparsePoly a) { return a *= c; }
    friend bool operator==(const SparsePoly& a, const SparsePoly& b);

    SparsePoly pow(std::int64_t k) const;

    // Substitutes var -> var - offset. Polynomial variables only.
    SparsePoly shift(std::size_t var, const Rational& offset) const;
    // d/dvar. Polynomial variables only.
    SparsePoly derive(std::size_t var) const;
    // Multiplies every term by x_var^k (Laurent variables, or k >= 0).
    SparsePoly multiply_by_power(std::size_t var, std::int64_t k) const;
    // Re-expresses this polynomial over target_vars; variable i maps to
    // target index mapping[i].
    SparsePoly embed(const std::vector<Variable>& target_vars, const std::vector<std::size_t>& mapping) const;
    // Embeds by matching variable names.
    SparsePoly embed_by_name(const std::vector<Variable>& target_vars) const;
    // Dense coefficients of a polynomial in the single variable var; all other
    // exponents must be zero.
    std::vector<Rational> univariate_coefficients(std::size_t var) const;

    std::string to_string() const;

private:
    void require_same_signature(const SparsePoly& other, const char* op) const;
    void require_polynomial_variable(std::size_t var, const char* op) const;

    std::vector<Variable> vars_;
    TermMap terms_;
};

std::string monomial_to_string(const std::vector<Variable>& vars, const Exponents& e);

// Parses expressions such as "2/3*s^2*t - x0^-1 + 1" over the given variables.
SparsePoly parse_poly(const std::vector<Variable>& vars, std::string_view text);

// All exponent vectors with sum |e_i| <= max_degree; Laurent variables take
// negative exponents as well.
std::vector<Exponents> box_monomials(const std::vector<Variable>& vars, std::int64_t max_degree);

} // namespace wd

#endif
