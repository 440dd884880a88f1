#ifndef GB_SYSTEMS_HPP
#define GB_SYSTEMS_HPP

#include "gb/polynomial.hpp"

#include <vector>

namespace gb {

/// Cyclic_n: in x0..x_{n-1}, the n-1 cyclic symmetric sums of consecutive
/// products of length 1..n-1, plus x0*...*x_{n-1} - 1.
std::vector<VecPoly> cyclic_system(unsigned n, TermOrder ord);

/// Katsura_n: in x0..xn, the linear equation x0 + 2*(x1+..+xn) - 1 and, for
/// m = 0..n-1, sum over l of x_|l| * x_|m-l| - x_m (indices clipped to [-n, n]).
std::vector<VecPoly> katsura_system(unsigned n, TermOrder ord);

}  // namespace gb

#endif
