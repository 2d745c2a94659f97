#include "wd/lie_algebra.hpp"

#include <sstream>

#include "wd/errors.hpp"
#include "wd/expression.hpp"

namespace wd {

char family_letter(Family f)
{
    switch (f) {
    case Family::L:
        return 'L';
    case Family::a:
        return 'a';
    case Family::b:
        return 'b';
    case Family::c:
        return 'c';
    case Family::d:
        return 'd';
    }
    return '?';
}

std::string to_string(const Generator& g)
{
    return std::string(1, family_letter(g.family)) + "[" + std::to_string(g.index) + "]";
}

Generator parse_generator(std::string_view text)
{
    std::string s;
    for (char c : text)
        if (c != ' ')
            s += c;
    if (s.size() < 4 || s[1] != '[' || s.back() != ']')
        throw InvalidGenerator("expected L[n], a[n], b[n], c[n] or d[n], got '" + std::string(text) + "'");
    Generator g;
    switch (s[0]) {
    case 'L':
        g.family = Family::L;
        break;
    case 'a':
        g.family = Family::a;
        break;
    case 'b':
        g.family = Family::b;
        break;
    case 'c':
        g.family = Family::c;
        break;
    case 'd':
        g.family = Family::d;
        break;
    default:
        throw InvalidGenerator("unknown generator family '" + std::string(1, s[0]) + "'");
    }
    const std::string idx = s.substr(2, s.size() - 3);
    std::size_t used = 0;
    try {
        g.index = std::stoll(idx, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != idx.size() || idx.empty())
        throw InvalidGenerator("bad index in '" + std::string(text) + "'");
    return g;
}

std::vector<Generator> generator_window(std::int64_t window)
{
    std::vector<Generator> out;
    for (Family f : all_families)
        for (std::int64_t n = -window; n <= window; ++n)
            out.push_back({f, n});
    return out;
}

LElement::LElement(const Generator& g, const Rational& c) { add_term(g, c); }

void LElement::add_term(const Generator& g, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(g, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

LElement& LElement::operator+=(const LElement& o)
{
    for (const auto& [g, c] : o.terms_)
        add_term(g, c);
    return *this;
}

LElement& LElement::operator-=(const LElement& o)
{
    for (const auto& [g, c] : o.terms_)
        add_term(g, -c);
    return *this;
}

LElement operator*(const Rational& c, const LElement& x)
{
    LElement r;
    for (const auto& [g, k] : x.terms_)
        r.add_term(g, c * k);
    return r;
}

std::string LElement::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, c] : terms_) {
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        first = false;
        const Rational mag = abs(c);
        if (mag != 1)
            os << wd::to_string(mag) << "*";
        os << wd::to_string(g);
    }
    return os.str();
}

LElement bracket(const Generator& x, const Generator& y)
{
    const auto m = x.index;
    const auto n = y.index;
    using F = Family;
    if (x.family == F::L && y.family == F::L)
        return LElement({F::L, m + n}, Rational(n - m));
    if (x.family == F::L)
        return LElement({y.family, m + n}, Rational(n));
    if (y.family == F::L)
        return LElement({x.family, m + n}, Rational(-m));
    if (x.family == F::a && y.family == F::b)
        return LElement({F::c, m + n}, 1);
    if (x.family == F::b && y.family == F::a)
        return LElement({F::c, m + n}, -1);
    if (x.family == F::d && y.family == F::a)
        return LElement({F::a, m + n}, 1);
    if (x.family == F::a && y.family == F::d)
        return LElement({F::a, m + n}, -1);
    if (x.family == F::d && y.family == F::b)
        return LElement({F::b, m + n}, -1);
    if (x.family == F::b && y.family == F::d)
        return LElement({F::b, m + n}, 1);
    return {};
}

LElement bracket(const LElement& x, const LElement& y)
{
    LElement r;
    for (const auto& [gx, cx] : x.terms())
        for (const auto& [gy, cy] : y.terms())
            r += (cx * cy) * bracket(gx, gy);
    return r;
}

LElement jacobi_residual(const Generator& x, const Generator& y, const Generator& z)
{
    const LElement X(x), Y(y), Z(z);
    return bracket(X, bracket(Y, Z)) + bracket(Y, bracket(Z, X)) + bracket(Z, bracket(X, Y));
}

bool is_pbw_normal(const Word& w)
{
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i + 1] < w[i])
            return false;
    return true;
}

UEnvElement UEnvElement::one()
{
    UEnvElement u;
    u.terms_.emplace(Word{}, Rational(1));
    return u;
}

UEnvElement UEnvElement::scalar(const Rational& c)
{
    UEnvElement u;
    u.add_raw({}, c);
    return u;
}

UEnvElement UEnvElement::from(const Generator& g, const Rational& c)
{
    UEnvElement u;
    u.add_raw({g}, c);
    return u;
}

UEnvElement UEnvElement::from(const LElement& x)
{
    UEnvElement u;
    for (const auto& [g, c] : x.terms())
        u.add_raw({g}, c);
    return u;
}

UEnvElement UEnvElement::from_word(const Word& w) { return pbw_normalize(w); }

void UEnvElement::add_raw(const Word& w, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

UEnvElement& UEnvElement::operator+=(const UEnvElement& o)
{
    for (const auto& [w, c] : o.terms_)
        add_raw(w, c);
    return *this;
}

UEnvElement& UEnvElement::operator-=(const UEnvElement& o)
{
    for (const auto& [w, c] : o.terms_)
        add_raw(w, -c);
    return *this;
}

UEnvElement& UEnvElement::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, k] : terms_)
        k *= c;
    return *this;
}

namespace {

// Straightens w into acc with multiplier coeff. Swapping the first descent
// w_i > w_{i+1} yields w_{i+1} w_i plus the bracket term, each of which is
// strictly closer to normal form (fewer inversions, or a shorter word).
void straighten(const Word& w, const Rational& coeff, UEnvElement& acc)
{
    std::size_t i = 0;
    while (i + 1 < w.size() && !(w[i + 1] < w[i]))
        ++i;
    if (i + 1 >= w.size()) {
        acc.add_raw(w, coeff);
        return;
    }
    Word swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    straighten(swapped, coeff, acc);
    for (const auto tmp = bracket(w[i], w[i + 1]); const auto& [g, c] : tmp.terms()) {
        Word shorter;
        shorter.reserve(w.size() - 1);
        shorter.insert(shorter.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        shorter.push_back(g);
        shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(i + 2), w.end());
        straighten(shorter, coeff * c, acc);
    }
}

} // namespace

UEnvElement pbw_normalize(const Word& w)
{
    UEnvElement acc;
    straighten(w, Rational(1), acc);
    return acc;
}

UEnvElement UEnvElement::normalized() const
{
    UEnvElement acc;
    for (const auto& [w, c] : terms_)
        straighten(w, c, acc);
    return acc;
}

UEnvElement uenv_mul(const UEnvElement& x, const UEnvElement& y)
{
    UEnvElement acc;
    for (const auto& [wx, cx] : x.terms_) {
        for (const auto& [wy, cy] : y.terms_) {
            Word w = wx;
            w.insert(w.end(), wy.begin(), wy.end());
            straighten(w, cx * cy, acc);
        }
    }
    return acc;
}

std::string word_to_string(const Word& w)
{
    if (w.empty())
        return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i])
            ++j;
        if (!out.empty())
            out += "*";
        out += wd::to_string(w[i]);
        if (j - i > 1)
            out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

std::string UEnvElement::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        first = false;
        const Rational mag = abs(c);
        if (w.empty()) {
            os << wd::to_string(mag);
            continue;
        }
        if (mag != 1)
            os << wd::to_string(mag) << "*";
        os << word_to_string(w);
    }
    return os.str();
}

UEnvElement evaluate_at(const std::vector<Rational>& coeffs, const Generator& x)
{
    UEnvElement acc;
    Word w;
    for (const auto& c : coeffs) {
        acc.add_raw(w, c);
        w.push_back(x);
    }
    return acc;
}

UEnvElement casimir_like_q()
{
    return uenv_mul(UEnvElement::from(Generator{Family::b, 0}), UEnvElement::from(Generator{Family::a, 0}))
        + uenv_mul(UEnvElement::from(Generator{Family::c, 0}), UEnvElement::from(Generator{Family::d, 0}));
}

UEnvElement parse_uenv(std::string_view text)
{
    ExpressionParser<UEnvElement> parser(UEnvElement::one(),
                                         [](std::string_view name, std::int64_t power) -> std::optional<UEnvElement> {
                                             UEnvElement base;
                                             if (name == "Q")
                                                 base = casimir_like_q();
                                             else if (name.find('[') != std::string_view::npos)
                                                 base = UEnvElement::from(parse_generator(name));
                                             else
                                                 return std::nullopt;
                                             if (power < 0)
                                                 throw ParseError("negative power of a U(L) element");
                                             UEnvElement acc = UEnvElement::one();
                                             for (std::int64_t i = 0; i < power; ++i)
                                                 acc = acc * base;
                                             return acc;
                                         });
    return parser.parse(text);
}

} // namespace wd
