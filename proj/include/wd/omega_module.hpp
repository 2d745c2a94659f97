#ifndef WD_OMEGA_MODULE_HPP
#define WD_OMEGA_MODULE_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "wd/module.hpp"

namespace wd {

struct OmegaParams {
    Rational alpha;
    Rational beta;   // nonzero
    Rational gamma;
    Rational lambda; // nonzero
    std::vector<Rational> g; // g(t), low degree first, no trailing zeros

    void validate() const;
    // Degree of g; -1 for g = 0.
    std::int64_t g_degree() const;
    friend bool operator==(const OmegaParams&, const OmegaParams&) = default;
};

std::string to_string(const OmegaParams& p);
std::vector<Rational> trim_poly(std::vector<Rational> c);

// Action of x on f through the Omega factor living on variables s_idx, t_idx
// of f's ring; the other variables are untouched.
SparsePoly omega_factor_act(const OmegaParams& p, const Generator& x, const SparsePoly& f, std::size_t s_idx,
                            std::size_t t_idx);

// Omega(alpha, beta, gamma, lambda, g) on C[s, t].
class OmegaModule : public LieModule {
public:
    explicit OmegaModule(OmegaParams params);

    const std::vector<Variable>& variables() const override { return vars_; }
    SparsePoly act(const Generator& x, const SparsePoly& v) const override;
    std::string name() const override { return "Omega" + to_string(params_); }

    const OmegaParams& params() const { return params_; }

private:
    OmegaParams params_;
    std::vector<Variable> vars_;
};

SparsePoly omega_act(const OmegaModule& m, const Generator& x, const SparsePoly& f);

// Coefficients kappa_0..kappa_{N-1} with sum_n kappa_n lambda_k^n n^j = 1
// for (k, j) = (target_factor, target_power) and 0 for every other k and
// j <= degs[k]. N = sum (degs[k] + 1). Lambdas must be distinct and nonzero.
std::vector<Rational> extraction_weights(const std::vector<Rational>& lambdas, const std::vector<std::int64_t>& degs,
                                         std::size_t target_factor, std::int64_t target_power);

// sum_n kappa_n x_n for the given family.
UEnvElement window_combination(Family f, const std::vector<Rational>& kappa);

// c-window extraction, then deg_t steps of beta^{-1}(b0 - g(a0)), then a
// rescale, ending at exactly 1.
Certificate omega_reduce_to_one(const OmegaModule& m, const SparsePoly& f);

// s^p t^q = L0^p a0^q . 1.
Certificate omega_generate(const OmegaModule& m, std::int64_t p, std::int64_t q);

struct UhRankReport {
    std::int64_t rank = 0;
    std::vector<SparsePoly> basis;                      // 1, t, ..., t^{deg g}
    std::vector<CombinationCertificate> generation;     // t^k over U(H) . basis
    std::size_t independence_vectors = 0;               // L0^i d0^j t^k count
    std::size_t independence_nullity = 0;               // must be 0
};

// Free U(H)-rank of Omega, H = C L0 + C d0. Requires g != 0.
UhRankReport uh_rank(const OmegaModule& m, std::int64_t max_power = -1);

// g_n t^{n+1+s} = (beta d0 - beta s - gamma) t^s - sum_{k<n} g_k t^{k+1+s},
// as a U(H)-combination of basis vectors t^0..t^n.
CombinationCertificate generation_certificate(const OmegaModule& m, std::int64_t k);

// Structure functions of a candidate rank-one U(B)-free module with basis v:
// L_n v = lambda^n (L0 + n p(a0)) v, a_n v = lambda^n a0 v,
// x_n v = lambda^n X0(L0, a0) v for x = b, c, d.
struct Rank1ActionData {
    Rational lambda;
    SparsePoly p;  // over (L0, a0); expected to involve a0 only
    SparsePoly B0; // over (L0, a0)
    SparsePoly C0;
    SparsePoly D0;
};

std::vector<Variable> rank1_variables(); // L0, a0

// The candidate module on C[L0, a0] defined by the data.
class Rank1Module : public LieModule {
public:
    explicit Rank1Module(Rank1ActionData data);
    const std::vector<Variable>& variables() const override { return vars_; }
    SparsePoly act(const Generator& x, const SparsePoly& v) const override;
    std::string name() const override { return "rank-one candidate"; }

private:
    Rank1ActionData data_;
    std::vector<Variable> vars_;
};

// Data of Omega read off from its action on 1 (s -> L0, t -> a0).
Rank1ActionData read_off(const OmegaModule& m);

struct Degenerate {
    std::string submodule; // description of the proper submodule
};

using Rank1Classification = std::variant<OmegaParams, Degenerate>;

// Checks the bracket relations on a finite window and either identifies the
// Omega parameters or reports the C0 = 0 case. Throws NotAModule naming the
// first violated relation group ("[a,c] [L,c]", "[b,c] [c,d]", "[L,b] [L,d]",
// "[b,d]", "rest", "readback", "degenerate").
Rank1Classification classify_rank1(const Rank1ActionData& data);

} // namespace wd

#endif
