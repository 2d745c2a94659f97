#include "wd/module.hpp"

namespace wd {

SparsePoly act(const LieModule& module, const UEnvElement& u, const SparsePoly& v)
{
    SparsePoly acc = module.zero();
    for (const auto& [word, coeff] : u.terms()) {
        SparsePoly w = v;
        for (auto it = word.rbegin(); it != word.rend() && !w.is_zero(); ++it)
            w = module.act(*it, w);
        acc += w * coeff;
    }
    return acc;
}

std::vector<AxiomViolation> module_axiom_check(const LieModule& module, std::int64_t window,
                                               const std::vector<SparsePoly>& samples)
{
    std::vector<AxiomViolation> out;
    const auto gens = generator_window(window);
    for (const auto& v : samples) {
        std::vector<SparsePoly> images;
        images.reserve(gens.size());
        for (const auto& g : gens)
            images.push_back(module.act(g, v));
        for (std::size_t i = 0; i < gens.size(); ++i) {
            for (std::size_t j = i + 1; j < gens.size(); ++j) {
                SparsePoly diff = module.act(gens[i], images[j]) - module.act(gens[j], images[i]);
                for (const auto tmp = bracket(gens[i], gens[j]); const auto& [g, c] : tmp.terms())
                    diff -= module.act(g, v) * c;
                if (!diff.is_zero())
                    out.push_back({gens[i], gens[j], v.to_string(), diff.to_string()});
            }
        }
    }
    return out;
}

ReplayResult replay(const LieModule& module, const Certificate& cert)
{
    SparsePoly cur = cert.start;
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        SparsePoly next = act(module, cert.steps[i].op, cur);
        if (!(next == cert.steps[i].result))
            return {false, i, "step " + std::to_string(i) + " (" + cert.steps[i].label + "): got " + next.to_string()
                                  + ", claimed " + cert.steps[i].result.to_string()};
        cur = std::move(next);
    }
    return {};
}

SparsePoly CombinationCertificate::evaluate(const LieModule& module) const
{
    SparsePoly acc = module.zero();
    for (const auto& [op, base] : terms)
        acc += act(module, op, base);
    return acc;
}

std::vector<SparsePoly> sample_monomials(const LieModule& module, std::int64_t max_degree)
{
    std::vector<SparsePoly> out;
    for (const auto& e : box_monomials(module.variables(), max_degree))
        out.push_back(SparsePoly::monomial(module.variables(), e));
    return out;
}

SparsePoly random_vector(const LieModule& m, std::int64_t degree, std::mt19937_64& rng)
{
    const auto monos = box_monomials(m.variables(), degree);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::bernoulli_distribution keep(0.5);
    for (;;) {
        SparsePoly v = m.zero();
        for (const auto& e : monos)
            if (keep(rng))
                v.add_term(e, Rational(coeff(rng)));
        if (!v.is_zero())
            return v;
    }
}

} // namespace wd
