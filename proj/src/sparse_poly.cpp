#include "wd/sparse_poly.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "wd/errors.hpp"
#include "wd/expression.hpp"

namespace wd {

SparsePoly::SparsePoly(std::vector<Variable> vars) : vars_(std::move(vars)) {}

SparsePoly SparsePoly::constant(std::vector<Variable> vars, const Rational& c)
{
    SparsePoly p(std::move(vars));
    p.add_term(Exponents(p.vars_.size(), 0), c);
    return p;
}

SparsePoly SparsePoly::monomial(std::vector<Variable> vars, Exponents e, const Rational& c)
{
    SparsePoly p(std::move(vars));
    if (e.size() != p.vars_.size())
        throw VariableMismatch("exponent vector length does not match variable count");
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] < 0 && !p.vars_[i].laurent)
            throw UnsupportedVariable("negative exponent on polynomial variable " + p.vars_[i].name);
    p.add_term(e, c);
    return p;
}

SparsePoly SparsePoly::variable(std::vector<Variable> vars, std::string_view name, std::int64_t power)
{
    SparsePoly p(std::move(vars));
    Exponents e(p.vars_.size(), 0);
    e[p.index_of(name)] = power;
    return monomial(p.vars_, std::move(e));
}

SparsePoly SparsePoly::univariate(std::vector<Variable> vars, std::size_t var, const std::vector<Rational>& coeffs)
{
    SparsePoly p(std::move(vars));
    Exponents e(p.vars_.size(), 0);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        e[var] = static_cast<std::int64_t>(k);
        p.add_term(e, coeffs[k]);
    }
    return p;
}

std::size_t SparsePoly::index_of(std::string_view name) const
{
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name == name)
            return i;
    throw VariableMismatch("no variable named '" + std::string(name) + "'");
}

bool SparsePoly::has_variable(std::string_view name) const
{
    return std::any_of(vars_.begin(), vars_.end(), [&](const Variable& v) { return v.name == name; });
}

Rational SparsePoly::coefficient(const Exponents& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SparsePoly::add_term(const Exponents& e, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

const Exponents& SparsePoly::leading_exponents() const
{
    if (terms_.empty())
        throw ZeroVector("leading term of the zero polynomial");
    return terms_.rbegin()->first;
}

const Rational& SparsePoly::leading_coefficient() const
{
    if (terms_.empty())
        throw ZeroVector("leading term of the zero polynomial");
    return terms_.rbegin()->second;
}

std::int64_t SparsePoly::degree_in(std::size_t var) const
{
    std::int64_t d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first || e[var] > d)
            d = e[var];
        first = false;
    }
    return d;
}

std::int64_t SparsePoly::total_degree() const
{
    std::int64_t best = -1;
    for (const auto& [e, c] : terms_) {
        std::int64_t d = 0;
        for (auto x : e)
            d += std::llabs(x);
        best = std::max(best, d);
    }
    return best;
}

bool SparsePoly::is_constant() const
{
    return terms_.empty()
        || (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                                              [](std::int64_t x) { return x == 0; }));
}

Rational SparsePoly::constant_term() const { return coefficient(Exponents(vars_.size(), 0)); }

bool SparsePoly::independent_of(std::size_t var) const
{
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first[var] == 0; });
}

void SparsePoly::require_same_signature(const SparsePoly& other, const char* op) const
{
    if (vars_ != other.vars_)
        throw VariableMismatch(std::string(op) + ": operands use different variable lists");
}

void SparsePoly::require_polynomial_variable(std::size_t var, const char* op) const
{
    if (var >= vars_.size())
        throw VariableMismatch(std::string(op) + ": variable index out of range");
    if (vars_[var].laurent)
        throw UnsupportedVariable(std::string(op) + " on Laurent variable " + vars_[var].name);
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& other)
{
    require_same_signature(other, "add");
    for (const auto& [e, c] : other.terms_)
        add_term(e, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& other)
{
    require_same_signature(other, "subtract");
    for (const auto& [e, c] : other.terms_)
        add_term(e, -c);
    return *this;
}

SparsePoly& SparsePoly::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_)
        coeff *= c;
    return *this;
}

SparsePoly SparsePoly::operator-() const
{
    SparsePoly r = *this;
    r *= Rational(-1);
    return r;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b)
{
    a.require_same_signature(b, "multiply");
    SparsePoly r(a.vars_);
    Exponents e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

bool operator==(const SparsePoly& a, const SparsePoly& b)
{
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

SparsePoly SparsePoly::pow(std::int64_t k) const
{
    if (k < 0)
        throw std::domain_error("negative power of a polynomial");
    SparsePoly acc = constant(vars_, 1);
    for (std::int64_t i = 0; i < k; ++i)
        acc = acc * *this;
    return acc;
}

SparsePoly SparsePoly::shift(std::size_t var, const Rational& offset) const
{
    require_polynomial_variable(var, "shift");
    if (offset == 0)
        return *this;
    SparsePoly r(vars_);
    // (x - c)^k = sum_j C(k, j) x^j (-c)^(k-j)
    const Rational neg = -offset;
    for (const auto& [e, c] : terms_) {
        const std::int64_t k = e[var];
        Exponents f = e;
        Rational negpow(1);
        for (std::int64_t j = k; j >= 0; --j) {
            f[var] = j;
            r.add_term(f, c * binomial(k, j) * negpow);
            negpow *= neg;
        }
    }
    return r;
}

SparsePoly SparsePoly::derive(std::size_t var) const
{
    require_polynomial_variable(var, "derive");
    SparsePoly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0)
            continue;
        Exponents f = e;
        f[var] -= 1;
        r.add_term(f, c * e[var]);
    }
    return r;
}

SparsePoly SparsePoly::multiply_by_power(std::size_t var, std::int64_t k) const
{
    if (var >= vars_.size())
        throw VariableMismatch("multiply_by_power: variable index out of range");
    SparsePoly r(vars_);
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        f[var] += k;
        if (f[var] < 0 && !vars_[var].laurent)
            throw UnsupportedVariable("negative power of polynomial variable " + vars_[var].name);
        r.terms_.emplace(std::move(f), c);
    }
    return r;
}

SparsePoly SparsePoly::embed(const std::vector<Variable>& target_vars, const std::vector<std::size_t>& mapping) const
{
    if (mapping.size() != vars_.size())
        throw VariableMismatch("embed: mapping size does not match variable count");
    SparsePoly r(target_vars);
    Exponents f(target_vars.size());
    for (const auto& [e, c] : terms_) {
        std::fill(f.begin(), f.end(), 0);
        for (std::size_t i = 0; i < e.size(); ++i)
            f[mapping[i]] += e[i];
        r.add_term(f, c);
    }
    return r;
}

SparsePoly SparsePoly::embed_by_name(const std::vector<Variable>& target_vars) const
{
    SparsePoly probe(target_vars);
    std::vector<std::size_t> mapping;
    for (const auto& v : vars_)
        mapping.push_back(probe.index_of(v.name));
    return embed(target_vars, mapping);
}

std::vector<Rational> SparsePoly::univariate_coefficients(std::size_t var) const
{
    std::vector<Rational> coeffs;
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != var && e[i] != 0)
                throw VariableMismatch("polynomial is not univariate in " + vars_[var].name);
        if (e[var] < 0)
            throw UnsupportedVariable("negative exponent in univariate coefficient extraction");
        const auto k = static_cast<std::size_t>(e[var]);
        if (coeffs.size() <= k)
            coeffs.resize(k + 1);
        coeffs[k] = c;
    }
    return coeffs;
}

std::string monomial_to_string(const std::vector<Variable>& vars, const Exponents& e)
{
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += vars[i].name;
        if (e[i] != 1)
            out += "^" + std::to_string(e[i]);
    }
    return out.empty() ? "1" : out;
}

std::string SparsePoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    // Highest terms first reads more naturally.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const std::string mono = monomial_to_string(vars_, e);
        Rational mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (mono == "1")
            os << wd::to_string(mag);
        else if (mag == 1)
            os << mono;
        else
            os << wd::to_string(mag) << "*" << mono;
    }
    return os.str();
}

SparsePoly parse_poly(const std::vector<Variable>& vars, std::string_view text)
{
    SparsePoly probe(vars);
    ExpressionParser<SparsePoly> parser(
        SparsePoly::constant(vars, 1),
        [&](std::string_view name, std::int64_t power) -> std::optional<SparsePoly> {
            if (!probe.has_variable(name))
                return std::nullopt;
            return SparsePoly::variable(vars, name, power);
        });
    return parser.parse(text);
}

namespace {

void enumerate_box(const std::vector<Variable>& vars, std::size_t i, std::int64_t budget, Exponents& cur,
                   std::vector<Exponents>& out)
{
    if (i == vars.size()) {
        out.push_back(cur);
        return;
    }
    const std::int64_t lo = vars[i].laurent ? -budget : 0;
    for (std::int64_t k = lo; k <= budget; ++k) {
        cur[i] = k;
        enumerate_box(vars, i + 1, budget - std::llabs(k), cur, out);
    }
    cur[i] = 0;
}

} // namespace

std::vector<Exponents> box_monomials(const std::vector<Variable>& vars, std::int64_t max_degree)
{
    std::vector<Exponents> out;
    Exponents cur(vars.size(), 0);
    enumerate_box(vars, 0, max_degree, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace wd
