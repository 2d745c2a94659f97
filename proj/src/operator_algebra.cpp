#include "wd/operator_algebra.hpp"

#include <sstream>

#include "wd/expression.hpp"

namespace wd {

WeylSignature r2_signature() { return {{{"x0", true}, {"x1", true}}}; }
WeylSignature r0_signature() { return {{{"x0", true}}}; }
WeylSignature d_signature() { return {{{"t", false}}}; }

WeylElement WeylElement::scalar(const Signature& sig, const Rational& c)
{
    WeylElement w(sig);
    const std::size_t n = sig.vars.size();
    w.add_term({Exponents(n, 0), Exponents(n, 0)}, c);
    return w;
}

WeylElement WeylElement::x(const Signature& sig, std::size_t i, std::int64_t power)
{
    if (i >= sig.vars.size())
        throw AlgebraMismatch("coordinate index out of range");
    if (power < 0 && !sig.vars[i].laurent)
        throw UnsupportedVariable("negative power of polynomial coordinate " + sig.vars[i].name);
    WeylElement w(sig);
    const std::size_t n = sig.vars.size();
    Monomial m{Exponents(n, 0), Exponents(n, 0)};
    m.x[i] = power;
    w.add_term(m, 1);
    return w;
}

WeylElement WeylElement::dx(const Signature& sig, std::size_t i)
{
    if (i >= sig.vars.size())
        throw AlgebraMismatch("coordinate index out of range");
    WeylElement w(sig);
    const std::size_t n = sig.vars.size();
    Monomial m{Exponents(n, 0), Exponents(n, 0)};
    m.d[i] = 1;
    w.add_term(m, 1);
    return w;
}

WeylElement WeylElement::theta(const Signature& sig, std::size_t i)
{
    WeylElement w(sig);
    const std::size_t n = sig.vars.size();
    Monomial m{Exponents(n, 0), Exponents(n, 0)};
    m.x[i] = 1;
    m.d[i] = 1;
    w.add_term(m, 1);
    return w;
}

WeylElement WeylElement::coordinate_poly(const Signature& sig, std::size_t i, const std::vector<Rational>& coeffs)
{
    WeylElement w(sig);
    const std::size_t n = sig.vars.size();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        Monomial m{Exponents(n, 0), Exponents(n, 0)};
        m.x[i] = static_cast<std::int64_t>(k);
        w.add_term(m, coeffs[k]);
    }
    return w;
}

void WeylElement::add_term(const Monomial& m, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void WeylElement::require_same(const WeylElement& o, const char* op) const
{
    if (!(sig_ == o.sig_))
        throw AlgebraMismatch(std::string(op) + ": Weyl elements over different algebras");
}

WeylElement& WeylElement::operator+=(const WeylElement& o)
{
    require_same(o, "add");
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o)
{
    require_same(o, "subtract");
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

WeylElement& WeylElement::operator*=(const Rational& c)
{
    if (c == 0)
        terms_.clear();
    for (auto& [m, k] : terms_)
        k *= c;
    return *this;
}

WeylElement WeylElement::multiply_monomials(const Signature& sig, const Monomial& u, const Monomial& v)
{
    // x^a dx^b * x^c dx^e = x^a (prod_i dx_i^{b_i} x_i^{c_i}) dx^e, and per
    // variable dx^b x^c = sum_k C(b,k) c(c-1)...(c-k+1) x^{c-k} dx^{b-k},
    // valid for every integer c.
    const std::size_t n = sig.vars.size();
    std::map<Monomial, Rational> acc;
    acc.emplace(Monomial{u.x, v.d}, Rational(1));
    for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t b = u.d[i];
        const std::int64_t c = v.x[i];
        std::map<Monomial, Rational> next;
        for (const auto& [m, coeff] : acc) {
            for (std::int64_t k = 0; k <= b; ++k) {
                const Rational f = binomial(b, k) * falling_factorial(c, k);
                if (f == 0)
                    continue;
                Monomial r = m;
                r.x[i] += c - k;
                r.d[i] += b - k;
                Rational& slot = next[r];
                slot += coeff * f;
            }
        }
        acc.clear();
        for (auto& [m, coeff] : next)
            if (coeff != 0)
                acc.emplace(m, std::move(coeff));
    }
    WeylElement w(sig);
    for (const auto& [m, c] : acc)
        w.add_term(m, c);
    return w;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b)
{
    a.require_same(b, "multiply");
    WeylElement r(a.sig_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            for (const auto& [m, c] : WeylElement::multiply_monomials(a.sig_, ma, mb).terms_)
                r.add_term(m, ca * cb * c);
    return r;
}

WeylElement weyl_mul(const WeylElement& u, const WeylElement& v) { return u * v; }
DiffOpElement diffop_mul(const DiffOpElement& u, const DiffOpElement& v) { return u * v; }

std::string WeylElement::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string mono;
        for (std::size_t i = 0; i < m.x.size(); ++i) {
            if (m.x[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += sig_.vars[i].name;
            if (m.x[i] != 1)
                mono += "^" + std::to_string(m.x[i]);
        }
        for (std::size_t i = 0; i < m.d.size(); ++i) {
            if (m.d[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += "d" + sig_.vars[i].name;
            if (m.d[i] != 1)
                mono += "^" + std::to_string(m.d[i]);
        }
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        first = false;
        const Rational mag = abs(c);
        if (mono.empty())
            os << wd::to_string(mag);
        else if (mag == 1)
            os << mono;
        else
            os << wd::to_string(mag) << "*" << mono;
    }
    return os.str();
}

UbElement UbElement::scalar(const Signature&, const Rational& c)
{
    UbElement u;
    u.add_term({0, 0}, c);
    return u;
}

UbElement UbElement::h() { return monomial(1, 0); }
UbElement UbElement::e() { return monomial(0, 1); }

UbElement UbElement::monomial(std::int64_t i, std::int64_t j, const Rational& c)
{
    UbElement u;
    u.add_term({i, j}, c);
    return u;
}

UbElement UbElement::multiply_monomials(const Signature&, const Monomial& u, const Monomial& v)
{
    // e^b h^c = (h - b)^c e^b
    UbElement r;
    const std::int64_t b = u.e;
    const std::int64_t c = v.h;
    Rational negpow(1);
    for (std::int64_t k = c; k >= 0; --k) {
        // C(c, k) h^k (-b)^(c-k)
        r.add_term({u.h + k, u.e + v.e}, binomial(c, k) * negpow);
        negpow *= Rational(-b);
    }
    return r;
}

void UbElement::add_term(const Monomial& m, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

UbElement& UbElement::operator+=(const UbElement& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

UbElement& UbElement::operator-=(const UbElement& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

UbElement& UbElement::operator*=(const Rational& c)
{
    if (c == 0)
        terms_.clear();
    for (auto& [m, k] : terms_)
        k *= c;
    return *this;
}

UbElement operator*(const UbElement& a, const UbElement& b)
{
    UbElement r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            for (const auto& [m, c] : UbElement::multiply_monomials({}, ma, mb).terms_)
                r.add_term(m, ca * cb * c);
    return r;
}

UbElement ub_mul(const UbElement& u, const UbElement& v) { return u * v; }

std::string UbElement::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string mono;
        if (m.h != 0)
            mono += m.h == 1 ? "h" : "h^" + std::to_string(m.h);
        if (m.e != 0) {
            if (!mono.empty())
                mono += "*";
            mono += m.e == 1 ? "e" : "e^" + std::to_string(m.e);
        }
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        first = false;
        const Rational mag = abs(c);
        if (mono.empty())
            os << wd::to_string(mag);
        else if (mag == 1)
            os << mono;
        else
            os << wd::to_string(mag) << "*" << mono;
    }
    return os.str();
}

namespace {

std::optional<WeylElement> weyl_atom(const WeylSignature& sig, std::string_view name, std::int64_t power)
{
    WeylElement base;
    bool found = false;
    for (std::size_t i = 0; i < sig.vars.size() && !found; ++i) {
        const std::string& v = sig.vars[i].name;
        if (name == v) {
            if (power < 0 && !sig.vars[i].laurent)
                throw ParseError("negative power of polynomial coordinate " + v);
            return WeylElement::x(sig, i, power);
        }
        if (name == "d" + v) {
            base = WeylElement::dx(sig, i);
            found = true;
        } else if (v.size() == 2 && v[0] == 'x' && name == std::string("D") + v[1]) {
            base = WeylElement::theta(sig, i);
            found = true;
        }
    }
    if (!found)
        return std::nullopt;
    if (power < 0)
        throw ParseError("negative power of a derivation");
    WeylElement acc = WeylElement::one(sig);
    for (std::int64_t k = 0; k < power; ++k)
        acc = acc * base;
    return acc;
}

std::optional<UbElement> ub_atom(std::string_view name, std::int64_t power)
{
    if (name != "h" && name != "e")
        return std::nullopt;
    if (power < 0)
        throw ParseError("negative power in U(b)");
    return name == "h" ? UbElement::monomial(power, 0) : UbElement::monomial(0, power);
}

std::string tensor_to_product(std::string_view text)
{
    std::string s(text);
    for (const std::string_view marker : {std::string_view("⊗"), std::string_view("(x)")}) {
        std::size_t pos = 0;
        while ((pos = s.find(marker, pos)) != std::string::npos) {
            s.replace(pos, marker.size(), "*");
            pos += 1;
        }
    }
    return s;
}

} // namespace

WeylElement parse_weyl(const WeylSignature& sig, std::string_view text)
{
    ExpressionParser<WeylElement> parser(WeylElement::one(sig), [&](std::string_view name, std::int64_t power) {
        return weyl_atom(sig, name, power);
    });
    return parser.parse(text);
}

UbElement parse_ub(std::string_view text)
{
    ExpressionParser<UbElement> parser(UbElement::one(), ub_atom);
    return parser.parse(text);
}

// Left and right factors commute inside the tensor algebra, so "A⊗B" can be
// read as the product (A⊗1)(1⊗B) provided the atom names are disjoint.
R2UbElement parse_r2ub(std::string_view text)
{
    const WeylSignature sig = r2_signature();
    const R2UbElement::Signature tsig{sig, {}};
    ExpressionParser<R2UbElement> parser(
        R2UbElement::one(tsig), [&](std::string_view name, std::int64_t power) -> std::optional<R2UbElement> {
            if (auto w = weyl_atom(sig, name, power))
                return R2UbElement::pure(*w, UbElement::one());
            if (auto u = ub_atom(name, power))
                return R2UbElement::pure(WeylElement::one(sig), *u);
            return std::nullopt;
        });
    return parser.parse(tensor_to_product(text));
}

R0DElement parse_r0d(std::string_view text)
{
    const WeylSignature left = r0_signature();
    const WeylSignature right = d_signature();
    const R0DElement::Signature tsig{left, right};
    ExpressionParser<R0DElement> parser(
        R0DElement::one(tsig), [&](std::string_view name, std::int64_t power) -> std::optional<R0DElement> {
            if (auto w = weyl_atom(left, name, power))
                return R0DElement::pure(*w, WeylElement::one(right));
            if (auto w = weyl_atom(right, name, power))
                return R0DElement::pure(WeylElement::one(left), *w);
            return std::nullopt;
        });
    return parser.parse(tensor_to_product(text));
}

} // namespace wd
