#ifndef WD_OPERATOR_ALGEBRA_HPP
#define WD_OPERATOR_ALGEBRA_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wd/errors.hpp"
#include "wd/rational.hpp"
#include "wd/sparse_poly.hpp"

namespace wd {

// ---------------------------------------------------------------------------
// Weyl-type algebras: generated by coordinates x_i (Laurent or polynomial)
// and derivations dx_i with [dx_i, x_i] = 1. Elements are kept in normal
// order x^a dx^b. R2 = C[x0^{+-1}, x1^{+-1}, dx0, dx1], R0 = C[x0^{+-1}, dx0],
// D = C[t, dt] are all instances.
// ---------------------------------------------------------------------------

struct WeylSignature {
    std::vector<Variable> vars;
    friend bool operator==(const WeylSignature&, const WeylSignature&) = default;
};

WeylSignature r2_signature();
WeylSignature r0_signature();
WeylSignature d_signature();

struct WeylMonomial {
    Exponents x; // coordinate exponents
    Exponents d; // derivation exponents (>= 0)
    friend auto operator<=>(const WeylMonomial&, const WeylMonomial&) = default;
};

class WeylElement {
public:
    using Monomial = WeylMonomial;
    using Signature = WeylSignature;

    WeylElement() = default;
    explicit WeylElement(Signature sig) : sig_(std::move(sig)) {}

    static WeylElement one(const Signature& sig) { return scalar(sig, 1); }
    static WeylElement scalar(const Signature& sig, const Rational& c);
    static WeylElement x(const Signature& sig, std::size_t i, std::int64_t power = 1);
    static WeylElement dx(const Signature& sig, std::size_t i);
    // x_i dx_i, the Euler operator on coordinate i.
    static WeylElement theta(const Signature& sig, std::size_t i);
    // Polynomial in the single coordinate x_i.
    static WeylElement coordinate_poly(const Signature& sig, std::size_t i, const std::vector<Rational>& coeffs);

    // Product of two normal-ordered monomials.
    static WeylElement multiply_monomials(const Signature& sig, const Monomial& u, const Monomial& v);

    const Signature& signature() const { return sig_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Monomial& m, const Rational& c);

    WeylElement& operator+=(const WeylElement& o);
    WeylElement& operator-=(const WeylElement& o);
    WeylElement& operator*=(const Rational& c);
    friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
    friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
    friend WeylElement operator*(WeylElement a, const Rational& c) { return a *= c; }
    friend WeylElement operator*(const Rational& c, WeylElement a) { return a *= c; }
    friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
    friend bool operator==(const WeylElement&, const WeylElement&) = default;

    std::string to_string() const;

private:
    void require_same(const WeylElement& o, const char* op) const;

    Signature sig_;
    std::map<Monomial, Rational> terms_;
};

// Normal-ordered product; aliases matching the algebra roles.
WeylElement weyl_mul(const WeylElement& u, const WeylElement& v);
using DiffOpElement = WeylElement;
DiffOpElement diffop_mul(const DiffOpElement& u, const DiffOpElement& v);

// ---------------------------------------------------------------------------
// U(b) for b = Ch + Ce with [h,e] = e; normal form h^i e^j.
// ---------------------------------------------------------------------------

struct UbSignature {
    friend bool operator==(const UbSignature&, const UbSignature&) = default;
};

struct UbMonomial {
    std::int64_t h = 0;
    std::int64_t e = 0;
    friend auto operator<=>(const UbMonomial&, const UbMonomial&) = default;
};

class UbElement {
public:
    using Monomial = UbMonomial;
    using Signature = UbSignature;

    UbElement() = default;
    explicit UbElement(Signature) {}

    static UbElement one(const Signature& = {}) { return scalar({}, 1); }
    static UbElement scalar(const Signature&, const Rational& c);
    static UbElement h();
    static UbElement e();
    static UbElement monomial(std::int64_t i, std::int64_t j, const Rational& c = 1);
    // (h^a e^b)(h^c e^d) = h^a (h-b)^c e^(b+d)
    static UbElement multiply_monomials(const Signature&, const Monomial& u, const Monomial& v);

    Signature signature() const { return {}; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Monomial& m, const Rational& c);

    UbElement& operator+=(const UbElement& o);
    UbElement& operator-=(const UbElement& o);
    UbElement& operator*=(const Rational& c);
    friend UbElement operator+(UbElement a, const UbElement& b) { return a += b; }
    friend UbElement operator-(UbElement a, const UbElement& b) { return a -= b; }
    friend UbElement operator*(UbElement a, const Rational& c) { return a *= c; }
    friend UbElement operator*(const Rational& c, UbElement a) { return a *= c; }
    friend UbElement operator*(const UbElement& a, const UbElement& b);
    friend bool operator==(const UbElement&, const UbElement&) = default;

    std::string to_string() const;

private:
    std::map<Monomial, Rational> terms_;
};

UbElement ub_mul(const UbElement& u, const UbElement& v);

// ---------------------------------------------------------------------------
// Tensor product A (x) B of two such algebras, stored as a combination of
// pure tensors of normal-ordered monomials; (a (x) b)(c (x) d) = ac (x) bd.
// ---------------------------------------------------------------------------

template <class Left, class Right>
class TensorElement {
public:
    using LeftMonomial = typename Left::Monomial;
    using RightMonomial = typename Right::Monomial;
    using Key = std::pair<LeftMonomial, RightMonomial>;
    using Signature = std::pair<typename Left::Signature, typename Right::Signature>;

    TensorElement() = default;
    explicit TensorElement(Signature sig) : sig_(std::move(sig)) {}

    static TensorElement pure(const Left& a, const Right& b)
    {
        TensorElement t({a.signature(), b.signature()});
        for (const auto& [ma, ca] : a.terms())
            for (const auto& [mb, cb] : b.terms())
                t.add_term({ma, mb}, ca * cb);
        return t;
    }

    static TensorElement one(const Signature& sig)
    {
        return pure(Left::one(sig.first), Right::one(sig.second));
    }

    const Signature& signature() const { return sig_; }
    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Key& k, const Rational& c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    TensorElement& operator+=(const TensorElement& o)
    {
        require_same(o, "add");
        for (const auto& [k, c] : o.terms_)
            add_term(k, c);
        return *this;
    }
    TensorElement& operator-=(const TensorElement& o)
    {
        require_same(o, "subtract");
        for (const auto& [k, c] : o.terms_)
            add_term(k, -c);
        return *this;
    }
    TensorElement& operator*=(const Rational& c)
    {
        if (c == 0)
            terms_.clear();
        for (auto& [k, v] : terms_)
            v *= c;
        return *this;
    }
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend TensorElement operator*(TensorElement a, const Rational& c) { return a *= c; }
    friend TensorElement operator*(const Rational& c, TensorElement a) { return a *= c; }
    friend TensorElement operator*(const TensorElement& a, const TensorElement& b) { return tensor_mul(a, b); }
    friend bool operator==(const TensorElement&, const TensorElement&) = default;

    friend TensorElement tensor_mul(const TensorElement& a, const TensorElement& b)
    {
        a.require_same(b, "multiply");
        TensorElement r(a.sig_);
        for (const auto& [ka, ca] : a.terms_) {
            for (const auto& [kb, cb] : b.terms_) {
                const Left l = Left::multiply_monomials(a.sig_.first, ka.first, kb.first);
                const Right rr = Right::multiply_monomials(a.sig_.second, ka.second, kb.second);
                for (const auto& [ml, cl] : l.terms())
                    for (const auto& [mr, cr] : rr.terms())
                        r.add_term({ml, mr}, ca * cb * cl * cr);
            }
        }
        return r;
    }

    std::string to_string() const
    {
        if (terms_.empty())
            return "0";
        std::string out;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            Left l(sig_.first);
            l.add_term(k.first, 1);
            Right r(sig_.second);
            r.add_term(k.second, 1);
            if (!first)
                out += c < 0 ? " - " : " + ";
            else if (c < 0)
                out += "-";
            first = false;
            const Rational mag = abs(c);
            if (mag != 1)
                out += wd::to_string(mag) + "*";
            out += "(" + l.to_string() + ")⊗(" + r.to_string() + ")";
        }
        return out;
    }

private:
    void require_same(const TensorElement& o, const char* op) const
    {
        if (!(sig_ == o.sig_))
            throw AlgebraMismatch(std::string(op) + ": tensor factors over different algebras");
    }

    Signature sig_;
    std::map<Key, Rational> terms_;
};

using R2UbElement = TensorElement<WeylElement, UbElement>;
using R0DElement = TensorElement<WeylElement, WeylElement>;

template <class T>
T commutator(const T& u, const T& v)
{
    return u * v - v * u;
}

// Text syntax: "x0^-1*dx1 + 2*t*dt"; D0/D1 abbreviate x0*dx0 and x1*dx1.
WeylElement parse_weyl(const WeylSignature& sig, std::string_view text);
UbElement parse_ub(std::string_view text);
// "(A)⊗(B)" or the ASCII alias "(A)(x)(B)"; sums of such pure tensors with
// "+" / "-" between them.
R2UbElement parse_r2ub(std::string_view text);
R0DElement parse_r0d(std::string_view text);

} // namespace wd

#endif
