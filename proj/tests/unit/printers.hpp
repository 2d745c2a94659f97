#ifndef WD_TEST_PRINTERS_HPP
#define WD_TEST_PRINTERS_HPP

#include <ostream>

#include "wd/lie_algebra.hpp"
#include "wd/operator_algebra.hpp"
#include "wd/sparse_poly.hpp"

// Lets doctest print values in failed assertions.
namespace wd {
inline std::ostream& operator<<(std::ostream& os, const SparsePoly& p) { return os << p.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const UEnvElement& u) { return os << u.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const LElement& x) { return os << x.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const WeylElement& w) { return os << w.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const UbElement& u) { return os << u.to_string(); }
template <class L, class R>
std::ostream& operator<<(std::ostream& os, const TensorElement<L, R>& t)
{
    return os << t.to_string();
}
} // namespace wd

#endif
