#ifndef WD_TENSOR_MODULE_HPP
#define WD_TENSOR_MODULE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wd/omega_module.hpp"

namespace wd {

// T = Omega_1 (x) ... (x) Omega_m on C[s1..sm, t1..tm]. Variable order is
// s1..sm, t1..tm, so SparsePoly's lexicographic leading term is the degree
// of a vector in the (p, q) order.
class TensorModule : public LieModule {
public:
    explicit TensorModule(std::vector<OmegaParams> factors);

    const std::vector<Variable>& variables() const override { return vars_; }
    SparsePoly act(const Generator& x, const SparsePoly& v) const override;
    std::string name() const override;

    std::size_t size() const { return factors_.size(); }
    const std::vector<OmegaParams>& factors() const { return factors_; }
    std::size_t s_index(std::size_t k) const { return k; }
    std::size_t t_index(std::size_t k) const { return factors_.size() + k; }

    std::vector<Rational> lambdas() const;
    bool lambdas_distinct() const;
    // First pair i < j with lambda_i = lambda_j.
    std::optional<std::pair<std::size_t, std::size_t>> equal_lambda_pair() const;
    // P_k = deg_{s_k} g.
    std::vector<std::int64_t> s_degrees(const SparsePoly& g) const;
    // (P_1, ..., P_m, Q_1, ..., Q_m) of the leading term; nullopt for 0.
    std::optional<Exponents> degree(const SparsePoly& g) const;

private:
    std::vector<OmegaParams> factors_;
    std::vector<Variable> vars_;
};

SparsePoly tensor_act(const TensorModule& t, const Generator& x, const SparsePoly& v);

// N(X, g) = span{g, X_n g}. The window n = 0..N-1 starts at the number of
// coefficient functions n^j lambda_k^n and grows until the dimension is
// unchanged for max(m, 2) consecutive growths.
struct SpanResult {
    std::vector<SparsePoly> basis;
    std::size_t dimension = 0;
    std::int64_t window = 0;
};
SpanResult span_NXg(const TensorModule& t, Family x, const SparsePoly& g);

enum class Extraction { LShift, AShift, ATop };
std::string to_string(Extraction d);

// One certificate step: op = sum_n kappa_n X_n isolating factor k (0-based).
// LShift multiplies by s_k, AShift by t_k, ATop replaces the top s_k power by t_k.
CertificateStep extraction_step(const TensorModule& t, const SparsePoly& g, std::size_t k, Extraction which);

// The same element computed directly from g.
SparsePoly extraction_expected(const TensorModule& t, const SparsePoly& g, std::size_t k, Extraction which);

// ATop steps until g is free of s, then d/dt_k = beta_k^{-1}(B_k - g_k(A_k))
// steps down to a constant, then a rescale to 1.
Certificate tensor_reduce_to_bottom(const TensorModule& t, const SparsePoly& g);

// AShift then LShift chains from 1 to s^p t^q (exponents in variable order).
Certificate tensor_generate(const TensorModule& t, const Exponents& target);

// R_g = dim span{g, a_n g, c_n g}, from the window n = 0..sum(P_k+1)-1.
std::size_t r_g(const TensorModule& t, const SparsePoly& g);
// Same span over an explicit index range [lo, hi]; used as an oracle.
std::size_t r_g_window(const TensorModule& t, const SparsePoly& g, std::int64_t lo, std::int64_t hi);

// True when g lies in C[t1, ..., tm].
bool in_t_polynomials(const TensorModule& t, const SparsePoly& g);

struct WitnessCheck {
    std::size_t i = 0, j = 0;     // factors with lambda_i = lambda_j (0-based)
    std::size_t basis_size = 0;   // truncated basis of W
    std::size_t actions = 0;
    std::size_t escapes = 0;      // images outside W
};

// W = C[t_i, t_j, s_i + s_j] (x) (other factors); membership is
// d f/d s_i = d f/d s_j. Checks invariance on W's monomial basis of total
// degree <= max_degree under generators with indices in [-window, window].
WitnessCheck w_witness_check(const TensorModule& t, std::size_t i, std::size_t j, std::int64_t max_degree,
                             std::int64_t window);

struct SimplicityReport {
    bool simple = false;
    // Distinct lambda: for each sampled vector, its reduction followed by
    // the generation certificates of its monomials.
    std::vector<SparsePoly> samples;
    std::vector<Certificate> reductions;
    std::vector<std::vector<Certificate>> generations;
    // Repeated lambda.
    std::optional<WitnessCheck> witness;
    std::string witness_text;
};

SimplicityReport simplicity_decision(const TensorModule& t, std::uint64_t seed, std::size_t samples = 5,
                                     std::int64_t sample_degree = 2, std::int64_t witness_degree = 6,
                                     std::int64_t witness_window = 3);

std::vector<OmegaParams> canonical_form(const TensorModule& t);
bool canonical_less(const OmegaParams& a, const OmegaParams& b);

struct IsoResult {
    bool isomorphic = false;
    std::vector<std::size_t> permutation; // factor i of the first is factor permutation[i] of the second (1-based)
    std::string invariant;                // distinguishing invariant when not isomorphic
};

IsoResult iso_check(const TensorModule& a, const TensorModule& b);

} // namespace wd

#endif
