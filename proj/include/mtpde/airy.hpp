#ifndef MTPDE_AIRY_HPP
#define MTPDE_AIRY_HPP

namespace mtpde {

/// Airy function Ai(z) for z in [-20, 20].
///
/// |z| <= 6 uses the Maclaurin series w = Ai(0) f(z) + Ai'(0) g(z) summed in
/// compensated double-double arithmetic (the series suffers ~1e9 cancellation
/// at z = +6, which plain doubles cannot absorb).  6 < |z| <= 20 uses the
/// standard asymptotic expansions, oscillatory form on the negative axis.
/// Accuracy: <= 1e-9 relative for |z| <= 6, <= 1e-7 (relative to the
/// envelope near zeros) for 6 < |z| <= 20.
///
/// Throws OutOfRange for |z| > 20.
double airy_ai(double z);

/// d/dz Ai(z), same domain and method split as airy_ai.
double airy_ai_prime(double z);

}  // namespace mtpde

#endif
