#ifndef WD_FOCK_MODULE_HPP
#define WD_FOCK_MODULE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wd/homomorphism.hpp"
#include "wd/module.hpp"

namespace wd {

// Rank-one factor of the R2-module P, living on coordinate i.
//  Laurent(w): basis x_i^n, x_i multiplies, dx_i x_i^n = (w + n) x_i^{n-1}.
//  Shift(l):   vectors f(D_i), x_i^k f = l^k f(D_i - k), x_i dx_i multiplies by D_i.
struct PFactor {
    enum class Kind { Laurent, Shift };
    Kind kind = Kind::Laurent;
    Rational param; // w for Laurent, lambda (nonzero) for Shift

    static PFactor laurent(Rational w) { return {Kind::Laurent, std::move(w)}; }
    static PFactor shift(Rational lambda) { return {Kind::Shift, std::move(lambda)}; }
};

// Simple U(b)-module: C_eps (h = eps, e = 0) or the Whittaker-type module
// C[h] with e f(h) = f(h - 1).
struct VSpec {
    enum class Kind { OneDim, Whittaker };
    Kind kind = Kind::OneDim;
    Rational eps;

    static VSpec one_dim(Rational eps) { return {Kind::OneDim, std::move(eps)}; }
    static VSpec whittaker() { return {Kind::Whittaker, 0}; }
};

// F_{alpha beta}(P, V): P (x) V with L acting through phi_{alpha beta}
// (printed form by default; a module for V = C_eps, where e acts by 0).
// Vector variables: the two P coordinates (x0/x1 or D0/D1), then h when V
// is Whittaker.
class FModule : public LieModule {
public:
    FModule(Rational alpha, Rational beta, PFactor p0, PFactor p1, VSpec v);

    // M_w = (Laurent w0, Laurent w1); Omega(l) = (Shift l0, Shift l1);
    // P0 (x) M_w = (anything, Laurent w).
    static FModule m_module(Rational alpha, Rational beta, Rational w0, Rational w1, VSpec v);
    static FModule omega_module(Rational alpha, Rational beta, Rational l0, Rational l1, VSpec v);

    const std::vector<Variable>& variables() const override { return vars_; }
    SparsePoly act(const Generator& x, const SparsePoly& v) const override;
    std::string name() const override;

    const Rational& alpha() const { return phi_.alpha; }
    const Rational& beta() const { return phi_.beta; }
    const PFactor& factor(std::size_t i) const { return p_[i]; }
    const VSpec& v_spec() const { return v_; }

    // Negative control: a_n acts with its n e term dropped. Invisible on
    // C_eps, where e acts by 0.
    FModule with_corrupted_a() const;

    // Same P and V lifted through the other form of phi_{alpha beta}.
    FModule with_phi_form(PhiAB::Form form) const;
    PhiAB::Form phi_form() const { return phi_.form; }

private:
    SparsePoly apply_weyl_term(const WeylMonomial& m, const UbMonomial& u, const Exponents& e) const;

    PhiAB phi_;
    PFactor p_[2];
    VSpec v_;
    std::vector<Variable> vars_;
    bool corrupt_ = false;
};

SparsePoly f_act(const FModule& m, const Generator& x, const SparsePoly& v);

SparsePoly q_action(const FModule& m, const SparsePoly& v);

struct EpsilonVerdict {
    bool simple = true;
    std::optional<std::int64_t> witness; // n with beta w + beta n + eps = 0
};

// Simplicity of F(P0 (x) M_w, C_eps): simple iff beta w + beta n + eps != 0
// for all integers n.
EpsilonVerdict epsilon_simplicity(const Rational& beta, const Rational& w, const Rational& eps);
EpsilonVerdict epsilon_simplicity(const FModule& m);

// 1 (x) x1^n for the witness n: generates the proper submodule spanned by
// the x1-levels <= n.
SparsePoly epsilon_submodule_generator(const FModule& m, std::int64_t witness);

using WeightKey = std::pair<Rational, Rational>; // (L0, d0) eigenvalues
// Groups box monomials of total degree <= max_degree by joint eigenvalue.
// Throws NotWeight when L0 or d0 fails to act diagonally on them.
std::map<WeightKey, std::vector<SparsePoly>> weight_decomposition(const FModule& m, std::int64_t max_degree);

} // namespace wd

#endif
