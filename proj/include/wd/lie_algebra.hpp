#ifndef WD_LIE_ALGEBRA_HPP
#define WD_LIE_ALGEBRA_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "wd/rational.hpp"

namespace wd {

// Basis of W x| loop(H4): L_n (Witt) and a_n, b_n, c_n, d_n (loop Diamond).
// The enumerator order is the PBW letter order.
enum class Family : std::uint8_t { L = 0, a = 1, b = 2, c = 3, d = 4 };

inline constexpr Family all_families[] = {Family::L, Family::a, Family::b, Family::c, Family::d};

char family_letter(Family f);

struct Generator {
    Family family = Family::L;
    std::int64_t index = 0;

    friend auto operator<=>(const Generator&, const Generator&) = default;
};

// "L[n]", "a[n]", ...
std::string to_string(const Generator& g);
Generator parse_generator(std::string_view text);

// Every generator with index in [-window, window], in PBW order.
std::vector<Generator> generator_window(std::int64_t window);

// Finite linear combination of basis elements.
class LElement {
public:
    LElement() = default;
    explicit LElement(const Generator& g, const Rational& c = 1);

    const std::map<Generator, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Generator& g, const Rational& c);

    LElement& operator+=(const LElement& o);
    LElement& operator-=(const LElement& o);
    friend LElement operator+(LElement x, const LElement& y) { return x += y; }
    friend LElement operator-(LElement x, const LElement& y) { return x -= y; }
    friend LElement operator*(const Rational& c, const LElement& x);
    friend bool operator==(const LElement&, const LElement&) = default;

    std::string to_string() const;

private:
    std::map<Generator, Rational> terms_;
};

// Structure constants of L on basis elements. All nonzero brackets are
// single basis elements up to scale.
LElement bracket(const Generator& x, const Generator& y);
LElement bracket(const LElement& x, const LElement& y);

// [x,[y,z]] + [y,[z,x]] + [z,[x,y]].
LElement jacobi_residual(const Generator& x, const Generator& y, const Generator& z);

using Word = std::vector<Generator>;

bool is_pbw_normal(const Word& w);

// Element of U(L) as a combination of words. Elements built through the
// public operations keep every stored word in PBW-normal form.
class UEnvElement {
public:
    UEnvElement() = default;

    static UEnvElement one();
    static UEnvElement scalar(const Rational& c);
    static UEnvElement from(const Generator& g, const Rational& c = 1);
    static UEnvElement from(const LElement& x);
    // Normal form of the product of the letters of w.
    static UEnvElement from_word(const Word& w);

    const std::map<Word, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    UEnvElement& operator+=(const UEnvElement& o);
    UEnvElement& operator-=(const UEnvElement& o);
    UEnvElement& operator*=(const Rational& c);
    friend UEnvElement operator+(UEnvElement x, const UEnvElement& y) { return x += y; }
    friend UEnvElement operator-(UEnvElement x, const UEnvElement& y) { return x -= y; }
    friend UEnvElement operator*(UEnvElement x, const Rational& c) { return x *= c; }
    friend UEnvElement operator*(const Rational& c, UEnvElement x) { return x *= c; }
    friend UEnvElement operator*(const UEnvElement& x, const UEnvElement& y) { return uenv_mul(x, y); }
    friend bool operator==(const UEnvElement&, const UEnvElement&) = default;

    friend UEnvElement uenv_mul(const UEnvElement& x, const UEnvElement& y);

    // Rewrites an arbitrary combination of words into PBW-normal form.
    UEnvElement normalized() const;

    std::string to_string() const;

    // Raw insertion without normalization; used by the brute-force oracle.
    void add_raw(const Word& w, const Rational& c);

private:
    std::map<Word, Rational> terms_;
};

// Straightening of a word into PBW-normal words (letter order L<a<b<c<d,
// then index ascending).
UEnvElement pbw_normalize(const Word& w);

// Polynomial p(x) = sum coeffs[k] x^k evaluated at the generator x in U(L).
UEnvElement evaluate_at(const std::vector<Rational>& coeffs, const Generator& x);

// Accepts sums of products of generators and rationals, e.g.
// "b[0]*a[0] - 3*d[0]", "L[0]^2*a[0]"; the symbol Q stands for b0 a0 + c0 d0.
UEnvElement parse_uenv(std::string_view text);

// The element Q = b_0 a_0 + c_0 d_0.
UEnvElement casimir_like_q();

std::string word_to_string(const Word& w);

} // namespace wd

#endif
