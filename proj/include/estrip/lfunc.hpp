#pragma once

#include <complex>

#include "estrip/characters.hpp"
#include "estrip/specfun.hpp"

namespace estrip {

struct EvalResult {
  std::complex<double> value;
  double est_error = 0.0;  // absolute bound: series truncation plus a rounding estimate
};

// zeta(s) for sigma > 0 via eta(s) / (1 - 2^{1-s}) with the Borwein accelerated alternating
// series; near the spurious zeros of 1 - 2^{1-s} the Hurwitz route is used instead.
// PoleError at s = 1, CapabilityError for sigma <= 0.
EvalResult zeta(ComplexPoint s);

// The eta route alone (no automatic fallback), for cross-checks.
EvalResult zeta_eta(ComplexPoint s);

// Hurwitz zeta(s, a), 0 < a <= 1, by Euler-Maclaurin with 12 Bernoulli corrections.
EvalResult hurwitz_zeta(ComplexPoint s, double a);

// L(s, chi) = k^{-s} sum_m chi(m) zeta(s, m/k); the trivial character delegates to zeta().
EvalResult l_function(ComplexPoint s, const DirichletCharacter& chi);

// log L(s, chi) on the branch continued horizontally from sigma = 2, where
// |log L| <= log zeta(2) < pi fixes the principal branch. The phase is tracked in
// steps of at most `step`, halving whenever consecutive phases differ by more than pi/2.
// AmbiguityError if the jump persists below the minimum step (a zero on the path).
std::complex<double> log_l_continuous(ComplexPoint s, const DirichletCharacter& chi,
                                      double step = 0.05);

// Unwrapped arg L(1/2 + delta + i t, chi). For a principal character at t = 0 the path runs
// through the pole; the staircase convention S(0) = 0 is returned.
double arg_continuous(const DirichletCharacter& chi, double t, double delta, double step = 0.05);

}  // namespace estrip
