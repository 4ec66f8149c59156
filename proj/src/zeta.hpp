#pragma once

#include "precision.hpp"

namespace zetalab {

struct ZetaPair {
    Complex value;
    Complex deriv;
};

// Riemann zeta by Euler-Maclaurin summation (main sum, integral term, half
// term, Bernoulli corrections through B_{2M}).  For Re s < -0.5 the value is
// carried over by the functional equation; see zeta.cpp.  Conjugate symmetry
// zeta(conj s) == conj(zeta(s)) holds bit-exactly by construction.
Complex zeta(Complex s, const Precision& cfg = {});

// d/ds zeta(s) by term-by-term differentiation of the same expansion.
Complex zeta_prime(Complex s, const Precision& cfg = {});

// Both in one pass (the main sums share the n^{-s} factors).
ZetaPair zeta_with_prime(Complex s, const Precision& cfg = {});

// Independent cross-oracle: accelerated alternating eta series,
// zeta(s) = eta(s) / (1 - 2^{1-s}).  Deliberately a separate code path.
Complex zeta_alt_oracle(Complex s);

// zeta'(-2n) from the closed form (-1)^n zeta(2n+1) (2n)! / (pi^{2n} 2^{2n+1});
// zeta(2n+1) comes from the regular zeta path, not a constant table.
double zeta_prime_trivial_closed(int n, const Precision& cfg = {});

} // namespace zetalab
