// states.hpp — kets, density operators and unitaries bound to a FockSpace,
// plus the information-theoretic quantities computed from them.

#pragma once

#include "refcons/fock_space.hpp"
#include "refcons/linalg.hpp"

#include <string>
#include <vector>

namespace refcons {

/// Unit vector on a FockSpace. Construction fails if the norm is off by more
/// than kNormTol.
class Ket {
public:
    Ket(FockSpace space, Vector amplitudes);

    /// Basis vector |index>.
    static Ket basis(FockSpace space, std::size_t index);

    const FockSpace& space() const noexcept { return space_; }
    const Vector& amplitudes() const noexcept { return amplitudes_; }

private:
    FockSpace space_;
    Vector amplitudes_;
};

struct ValidationReport {
    double hermitian_deviation = 0.0;
    double trace_deviation = 0.0;
    double min_eigenvalue = 0.0;
    bool hermitian = false;
    bool unit_trace = false;
    bool positive = false;

    bool passed() const noexcept { return hermitian && unit_trace && positive; }
    std::string describe() const;
};

/// Checks a raw matrix against the density-operator contract: Hermitian within
/// kHermitianTol, unit trace within kTraceTol, eigenvalues >= -kPsdTol. Never
/// throws on bad data; it reports.
ValidationReport validate_density(const FockSpace& space, const Matrix& m);

/// Hermitian, unit-trace, positive semidefinite matrix on a FockSpace.
class DensityOperator {
public:
    /// Throws ValidationError when validate_density fails.
    DensityOperator(FockSpace space, Matrix matrix);

    const FockSpace& space() const noexcept { return space_; }
    const Matrix& matrix() const noexcept { return matrix_; }
    std::size_t dimension() const noexcept { return space_.dimension(); }

    /// identity / dimension
    static DensityOperator maximally_mixed(FockSpace space);

private:
    FockSpace space_;
    Matrix matrix_;
};

ValidationReport validate_density(const DensityOperator& rho);

/// Unitary matrix on a FockSpace (U U^dagger = 1 within kUnitaryTol).
class UnitaryOperator {
public:
    UnitaryOperator(FockSpace space, Matrix matrix);

    static UnitaryOperator identity(FockSpace space);

    const FockSpace& space() const noexcept { return space_; }
    const Matrix& matrix() const noexcept { return matrix_; }

    /// U rho U^dagger, re-validated.
    DensityOperator conjugate(const DensityOperator& rho) const;

    friend UnitaryOperator kron(const UnitaryOperator& a, const UnitaryOperator& b);

private:
    FockSpace space_;
    Matrix matrix_;
};

/// Kronecker product of raw matrices, first operand most significant.
Matrix kron(const Matrix& a, const Matrix& b);

DensityOperator pure_density(const Ket& psi);

DensityOperator tensor_product(const DensityOperator& a, const DensityOperator& b);

/// Reduces rho onto the listed factors (indices into rho.space().factors(),
/// any order, no duplicates). The kept factors appear in their original order.
/// Keeping none or all factors is a contract violation (std::invalid_argument).
DensityOperator partial_trace(const DensityOperator& rho, const std::vector<std::size_t>& keep);

/// Entropy in bits. Eigenvalues in [-kPsdTol, 0) count as zero; anything more
/// negative throws ValidationError.
double von_neumann_entropy(const DensityOperator& rho);

/// Entropy of an explicit spectrum, same clipping rules.
double entropy_bits(const RealVector& eigenvalues);

/// <target| rho |target>
double fidelity_with_pure(const DensityOperator& rho, const Ket& target);

} // namespace refcons
