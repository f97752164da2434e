#pragma once

#include "spncov/rational.hpp"

namespace spncov {

// B_m under the convention B_1 = -1/2, i.e. the one for which
// zeta(-m) = (-1)^m B_{m+1} / (m+1) holds verbatim.
// Memoized; the shared cache only grows and is mutex-guarded.
ExactRational bernoulli(unsigned long m);

// Bernoulli polynomial B_n(x) = sum_k C(n,k) B_k x^(n-k).
ExactRational bernoulli_poly(unsigned long n, const ExactRational& x);

}  // namespace spncov
