#pragma once

namespace nse::numerics {

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// Riemann zeta for real s > 1 (direct sum with Euler-Maclaurin tail).
double zeta(double s);

/// The exponential integral in the sign-positive form
///   ei_paper(y) = \int_y^\infty e^{-u}/u du   (= E1(y) = -Ei(-y) in the usual convention),
/// defined for y > 0.
double ei_paper(double y);

/// Surface area of the unit sphere in N dimensions, 2 pi^{N/2} / Gamma(N/2).
/// S_1 = 2 counts the two half-lines of the real axis.
double unit_sphere_area(int dimension);

}  // namespace nse::numerics
