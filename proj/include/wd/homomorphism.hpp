#ifndef WD_HOMOMORPHISM_HPP
#define WD_HOMOMORPHISM_HPP

#include <functional>
#include <string>
#include <vector>

#include "wd/lie_algebra.hpp"
#include "wd/operator_algebra.hpp"
#include "wd/sparse_poly.hpp"

namespace wd {

// A linear map U(L) -> T determined by images of generators: words are sent
// to products of letter images. Whether that is well defined (a
// homomorphism) is exactly what verify_hom checks.
template <class T>
struct GeneratorMap {
    typename T::Signature target;
    std::function<T(const Generator&)> image;

    T apply(const UEnvElement& u) const
    {
        T acc(target);
        for (const auto& [word, coeff] : u.terms()) {
            T prod = T::one(target);
            for (const auto& g : word)
                prod = prod * image(g);
            acc += prod * coeff;
        }
        return acc;
    }
};

// phi_{alpha beta}: U(L) -> R2 (x) U(b).
//  Printed:   the generator table as published. Its bracket defects all lie
//             in R2 (x) U(b)e, so it is a homomorphism only modulo e.
//  Corrected: L_n -> x0^n (D0 + n alpha) (x) 1 + n x0^n (x) h,
//             d_n -> x0^n D1 (x) 1 - beta^{-1} n x0^n (x) e,
//             a_n -> beta x0^n x1 D1 (x) 1 - x0^n x1 (x) (beta h + n e),
//             b_n, c_n unchanged. A homomorphism for every beta.
struct PhiAB {
    enum class Form { Printed, Corrected };

    Rational alpha;
    Rational beta; // nonzero
    Form form = Form::Printed;

    PhiAB(Rational alpha, Rational beta, Form form = Form::Printed);
    R2UbElement image(const Generator& g) const;
    GeneratorMap<R2UbElement> generator_map() const;
};

// phi_{alpha beta gamma g}: U(L) -> R0 (x) D.
struct PhiABGG {
    Rational alpha;
    Rational beta; // nonzero
    Rational gamma;
    std::vector<Rational> g; // coefficients of g(t), low degree first

    PhiABGG(Rational alpha, Rational beta, Rational gamma, std::vector<Rational> g);
    R0DElement image(const Generator& g) const;
    GeneratorMap<R0DElement> generator_map() const;
};

R2UbElement apply_phi_ab(const PhiAB& map, const UEnvElement& u);
R0DElement apply_phi_abgg(const PhiABGG& map, const UEnvElement& u);

struct HomViolation {
    Generator x;
    Generator y;
    std::string difference; // phi(x)phi(y) - phi(y)phi(x) - phi([x,y])
};

struct HomReport {
    std::size_t pairs_checked = 0;
    std::vector<HomViolation> violations;
    bool ok() const { return violations.empty(); }
};

// Checks [phi(x_m), phi(y_n)] = phi([x_m, y_n]) for all generator pairs with
// indices in [-window, window].
template <class T>
HomReport verify_hom(const GeneratorMap<T>& map, std::int64_t window)
{
    HomReport report;
    const auto gens = generator_window(window);
    std::vector<T> images;
    images.reserve(gens.size());
    for (const auto& g : gens)
        images.push_back(map.image(g));
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            ++report.pairs_checked;
            T lhs = commutator(images[i], images[j]);
            T rhs = map.apply(UEnvElement::from(bracket(gens[i], gens[j])));
            if (!(lhs == rhs))
                report.violations.push_back({gens[i], gens[j], (lhs - rhs).to_string()});
        }
    }
    return report;
}

template <class T>
struct Witness {
    std::string label;
    T target;
    UEnvElement preimage;
    bool holds(const GeneratorMap<T>& map) const { return map.apply(preimage) == target; }
};

// Preimages showing x0^{+-1}(x)1, dx0(x)1, x1(x)e,
// x1^{-1}(x)1, dx1(x)1, 1(x)e, 1(x)h lie in the image of phi_{alpha beta}.
// x0 and x0^{-1} are listed separately (8 pairs for 7 identities).
// For the corrected form 1(x)h = -beta^{-1} phi(b_0 a_0 - beta d_0).
std::vector<Witness<R2UbElement>> image_witnesses(const PhiAB& map);

// Preimages of the generators x0^{+-1}(x)1, D0(x)1, 1(x)t, 1(x)dt of R0 (x) D
// (5 pairs for 4 identities).
std::vector<Witness<R0DElement>> surjectivity_witnesses(const PhiABGG& map);

} // namespace wd

#endif
