#include "wd/rational.hpp"

#include <cctype>

#include "wd/errors.hpp"

namespace wd {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

bool is_signed_digits(std::string_view s, bool allow_sign)
{
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rational make_rational(std::int64_t num, std::int64_t den)
{
    if (den == 0)
        throw std::domain_error("zero denominator");
    Rational q(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view text)
{
    const std::string_view t = trim(text);
    const auto slash = t.find('/');
    std::string_view num = trim(t.substr(0, slash));
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(t.substr(slash + 1));
    if (!is_signed_digits(num, true) || !is_signed_digits(den, false))
        throw ParseError("not a rational literal: '" + std::string(text) + "'");
    if (num.front() == '+')
        num.remove_prefix(1);
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational pow(const Rational& q, std::int64_t k)
{
    if (k < 0) {
        if (q == 0)
            throw std::domain_error("negative power of zero");
        Rational inv = 1 / q;
        return pow(inv, -k);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(k));
    mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(k));
    Rational r(num, den);
    r.canonicalize();
    return r;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::int64_t to_int64(const Rational& q)
{
    if (!is_integer(q) || !q.get_num().fits_slong_p())
        throw std::domain_error("rational " + to_string(q) + " is not a machine integer");
    return q.get_num().get_si();
}

Rational factorial(std::int64_t n)
{
    if (n < 0)
        throw std::domain_error("factorial of negative integer");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

Rational binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n)
        return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

Rational falling_factorial(std::int64_t n, std::int64_t k)
{
    Rational r(1);
    for (std::int64_t i = 0; i < k; ++i)
        r *= Rational(mpz_class(std::to_string(n - i)));
    return r;
}

} // namespace wd
