// symmetry.hpp — U(1) phase group action, twirls, asymmetry and
// invariance checking for unitaries.

#pragma once

#include "refcons/states.hpp"

namespace refcons {

inline constexpr double kInvarianceTol = 1e-10;

/// T(theta) = diag(exp(i theta n(j))). On a composite space this is the
/// tensor product of the per-factor phase shifts.
UnitaryOperator phase_shift_unitary(const FockSpace& space, double theta);

/// Average of T(2 pi k / d) rho T^dagger over the cyclic group of order d.
/// Entry (i, j) survives iff n(i) = n(j) mod d, so the result is exact.
/// Throws std::invalid_argument for d < 1.
DensityOperator twirl_cyclic(const DensityOperator& rho, int d);

/// Continuous U(1) twirl: deletes every coherence between distinct total
/// number sectors.
DensityOperator twirl_u1(const DensityOperator& rho);

struct AsymmetryReport {
    double asymmetry_bits = 0.0;
    double twirled_entropy_bits = 0.0;
    double state_entropy_bits = 0.0;
};

/// S(twirl_u1(rho)) - S(rho) in bits. Round-off in [-1e-9, 0) is clamped to 0;
/// a more negative difference throws ValidationError.
AsymmetryReport asymmetry(const DensityOperator& rho);

struct InvarianceReport {
    bool invariant = false;
    double max_violation = 0.0;  // largest |u(i,j)| with n(i) != n(j)
};

/// A unitary commutes with every phase shift iff it is block diagonal in
/// total number.
InvarianceReport is_g_invariant_unitary(const UnitaryOperator& u, double tol = kInvarianceTol);

} // namespace refcons
