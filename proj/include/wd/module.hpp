#ifndef WD_MODULE_HPP
#define WD_MODULE_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wd/lie_algebra.hpp"
#include "wd/sparse_poly.hpp"

namespace wd {

// A concrete U(L)-module whose vectors are sparse polynomials over a fixed
// list of variables.
class LieModule {
public:
    virtual ~LieModule() = default;

    virtual const std::vector<Variable>& variables() const = 0;
    virtual SparsePoly act(const Generator& x, const SparsePoly& v) const = 0;
    virtual std::string name() const = 0;

    SparsePoly zero() const { return SparsePoly(variables()); }
    SparsePoly one() const { return SparsePoly::constant(variables(), 1); }
    SparsePoly parse_vector(std::string_view text) const { return parse_poly(variables(), text); }
};

// u . v for u in U(L); letters of each word act right to left.
SparsePoly act(const LieModule& module, const UEnvElement& u, const SparsePoly& v);

struct AxiomViolation {
    Generator x;
    Generator y;
    std::string vector;
    std::string difference; // x(yv) - y(xv) - [x,y]v
};

// Checks x(yv) - y(xv) = [x,y]v for unordered generator pairs with indices
// in [-window, window] and every sample vector.
std::vector<AxiomViolation> module_axiom_check(const LieModule& module, std::int64_t window,
                                               const std::vector<SparsePoly>& samples);

// A chain v_0 = start, v_{i+1} = op_i . v_i, with each v_{i+1} recorded.
struct CertificateStep {
    std::string label;
    UEnvElement op;
    SparsePoly result;
};

struct Certificate {
    SparsePoly start;
    std::vector<CertificateStep> steps;

    const SparsePoly& final_vector() const { return steps.empty() ? start : steps.back().result; }
};

struct ReplayResult {
    bool ok = true;
    std::size_t failed_step = 0; // valid when !ok
    std::string detail;
};

ReplayResult replay(const LieModule& module, const Certificate& cert);

// target = sum_j op_j . base_j; used for U(H)-combination certificates.
struct CombinationCertificate {
    SparsePoly target;
    std::vector<std::pair<UEnvElement, SparsePoly>> terms;

    SparsePoly evaluate(const LieModule& module) const;
    bool holds(const LieModule& module) const { return evaluate(module) == target; }
};

// Monomials with total degree <= max_degree, as vectors of the module.
std::vector<SparsePoly> sample_monomials(const LieModule& module, std::int64_t max_degree);

// Random nonzero vector with total degree <= degree and small integer
// coefficients.
SparsePoly random_vector(const LieModule& m, std::int64_t degree, std::mt19937_64& rng);

} // namespace wd

#endif
