#pragma once

#include "dioph/ball.hpp"
#include "dioph/rational.hpp"

namespace dioph {

enum class RootEquation { G, H, Hds };

/// Certified enclosure of the unique positive root of one of the three
/// defining equations. The cleared integer-coefficient polynomial changes
/// sign across [lo, hi] (exact bracketing), or radius is 0 when the root is
/// hit exactly.
struct RootResult {
    Ball value;
    Rational residual_bound; // |P(center)| of the cleared polynomial
    RootEquation equation;
    int d = 0;
    int s = 0;
    int m = 0;
    Rational omega_hat; // G only
};

/// Unique positive root of x^(d+1) + x^d + ... + x = 1; lies in (1/2, 1).
RootResult solve_H(int d, unsigned long p);

/// Unique positive root of (1-x) = x * sum_{k=1..d} (x/(s-1))^k, cleared of
/// denominators; lies in ((s-1)/s, 1). s >= 2.
RootResult solve_Hds(int d, int s, unsigned long p);

/// Unique positive root of x^(m-1) = w/(1-w) * (x^(m-2) + ... + x + 1) for
/// w = omega_hat in (0,1), m >= 2.
RootResult solve_G(int m, const Rational& omega_hat, unsigned long p);

} // namespace dioph
