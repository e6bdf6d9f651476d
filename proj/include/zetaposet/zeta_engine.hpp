#pragma once

// Numerical engine for the Riemann zeta function at desk scale.
//
// Provides the Riemann-Siegel theta function and Hardy Z function on the
// critical line, an independent Euler-Maclaurin evaluator for zeta(s) in the
// right half plane, Gram points, and a scan-and-bisect search for critical-line
// zero ordinates.  Everything is plain double precision and is intended for
// ordinates t <= 1e4 or so; accuracy claims are covered by the test suite.

#include <complex>
#include <cstddef>
#include <vector>

namespace zetaposet {

// A validated critical-line height: finite and strictly positive.
struct Ordinate {
    double t;
    explicit Ordinate(double t_value);  // throws std::domain_error if invalid
};

// A sign change of Z bracketed by a scan and refined by bisection.
// Invariants: lo < refined < hi, and Z changes sign across [lo, hi].
struct BracketedZero {
    double lo = 0.0;
    double hi = 0.0;
    double refined = 0.0;   // bisection midpoint estimate of the ordinate
    double residual = 0.0;  // |Z(refined)|
};

// Consistency check of a found-zero count against the smooth counting term
// theta(t_max)/pi + 1.  A discrepancy of one or more flags a likely missed
// sign change (or a zero off the critical line).
struct CountCheck {
    double t_max = 0.0;
    long found = 0;
    double expected = 0.0;
    double discrepancy = 0.0;  // |found - expected|
    bool warn = false;         // discrepancy >= 1
};

// Knobs for find_zero_ordinates.  Defaults are chosen so that no zero below
// t = 1e4 slips between consecutive scan nodes.
struct ZeroSearchConfig {
    // Scan grid spacing; 0 means automatic: a quarter of the local mean zero
    // gap 2*pi/log(t_hi/(2*pi)) at the top of the window.
    double scan_step = 0.0;
    // Bisection stops once the bracket is narrower than this.
    double bisect_width = 1e-9;
    // Refined zeros with |Z| above this are still reported; the value is
    // recorded per zero so callers can filter.
    double residual_tol = 1e-6;
    // Scan between consecutive Gram points instead of a fixed grid.  Cheaper
    // per zero but inherits the occasional failures of Gram's law, so it is
    // not the default.
    bool gram_anchors = false;
};

// Riemann-Siegel theta function via its asymptotic expansion.
// Requires t >= 10; absolute error is below 1.1e-8 at t = 10 and falls off
// rapidly (below 1e-12 for t >= 100).
double riemann_siegel_theta(double t);

// d/dt of riemann_siegel_theta; same domain.
double riemann_siegel_theta_derivative(double t);

// Hardy's Z function via the Riemann-Siegel formula with eight correction
// terms.  Requires t >= 10.  Z(t) is real, Z(t) = 0 exactly at critical-line
// zeros, and |Z(t)| = |zeta(1/2 + it)|.
double hardy_z(double t);

// zeta(s) for Re(s) > 0, s != 1, by Euler-Maclaurin summation with n_terms
// partial-sum terms (>= 10) and tail_order Bernoulli correction terms
// (1..6).  Throws std::domain_error outside the half plane or at the pole,
// std::invalid_argument for out-of-range knobs.
std::complex<double> zeta_euler_maclaurin(std::complex<double> s, int n_terms,
                                          int tail_order);

// Convenience overload with automatic knobs: n_terms grows with |Im(s)| so
// the result stays near machine accuracy over the supported range.
std::complex<double> zeta_euler_maclaurin(std::complex<double> s);

// The n-th Gram point: the unique t >= 10 with theta(t) = n * pi, found by
// Newton iteration.  Requires n >= 0.  Satisfies
// |theta(gram_point(n)) - n*pi| < 1e-10.
double gram_point(long n);

// The scan spacing used when ZeroSearchConfig::scan_step is zero: a quarter
// of the local mean zero gap 2*pi/log(t_hi/(2*pi)) at the top of the window.
double default_scan_step(double t_hi);

// All sign changes of Z in (t_lo, t_hi), in increasing order.  Requires
// 10 <= t_lo < t_hi.  Only odd-order zeros produce sign changes; on current
// knowledge that is every zero in the supported range.
std::vector<BracketedZero> find_zero_ordinates(double t_lo, double t_hi,
                                               const ZeroSearchConfig& config = {});

// Low-level scan over the global grid t_k = grid_origin + k * step for
// k in [k_begin, k_end], clamped to t_clamp.  find_zero_ordinates is a single
// full-range call of this; parallel callers may split the index range across
// workers and concatenate, which reproduces the serial result bit for bit.
std::vector<BracketedZero> scan_grid_for_zeros(double grid_origin, double step,
                                               long k_begin, long k_end,
                                               double t_clamp,
                                               const ZeroSearchConfig& config);

// Compare a found count over (10, t_max) against the smooth estimate.
// Requires t_max >= 10 and found >= 0.
CountCheck count_check(double t_max, long found);

}  // namespace zetaposet
