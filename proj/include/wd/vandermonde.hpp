#ifndef WD_VANDERMONDE_HPP
#define WD_VANDERMONDE_HPP

#include <cstdint>
#include <vector>

#include "wd/linear_algebra.hpp"

namespace wd {

struct DetSpec {
    std::vector<Rational> alphas;     // distinct, nonzero
    std::vector<std::int64_t> sizes;  // s_j >= 1
    std::int64_t r = 0;

    void validate() const;
};

// Rows n = r .. r+s-1 (s = sum s_j); block t contributes columns
// n^j alpha_t^n, j = 0 .. s_t - 1.
Matrix generalized_vandermonde(const DetSpec& spec);

// prod_j (s_j - 1)!! alpha_j^{s_j (s_j + 2r - 1)/2} prod_{i<j} (alpha_j - alpha_i)^{s_i s_j},
// where m!! = m! (m-1)! ... 1!.
Rational det_closed_form(const DetSpec& spec);

// 0!! = 1, m!! = m! (m-1)! ... 1!.
Rational superfactorial(std::int64_t m);

struct DetResult {
    Rational computed;
    Rational closed_form;
    bool agrees() const { return computed == closed_form; }
};

DetResult det_r(const DetSpec& spec);

// Distinct nonzero alphas used by the default sweep.
std::vector<Rational> default_sweep_alphas();

struct DetSweepReport {
    std::size_t specs = 0;
    std::size_t closed_form_mismatches = 0;
    std::size_t naive_checked = 0;    // specs of size <= naive_max_size
    std::size_t naive_mismatches = 0;
    std::vector<DetSpec> failures;    // first few failing specs
    bool ok() const { return closed_form_mismatches == 0 && naive_mismatches == 0; }
};

// Every spec with 1 <= m <= max_m ordered distinct alphas from the pool,
// 1 <= s_j <= max_s and 0 <= r <= max_r. Specs of total size up to
// naive_max_size are also compared against cofactor expansion.
DetSweepReport det_sweep(const std::vector<Rational>& pool, std::size_t max_m, std::int64_t max_s,
                               std::int64_t max_r, std::int64_t naive_max_size = 6);

} // namespace wd

#endif
