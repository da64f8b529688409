#include "refcons/states.hpp"

#include "refcons/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace refcons {

namespace {

void require_size(const FockSpace& space, Eigen::Index rows, Eigen::Index cols, const char* who) {
    const auto d = static_cast<Eigen::Index>(space.dimension());
    if (rows != d || cols != d) {
        std::ostringstream os;
        os << who << ": matrix is " << rows << "x" << cols << " but the space has dimension " << d;
        throw std::invalid_argument(os.str());
    }
}

} // namespace

// ---------------------------------------------------------------- Ket

Ket::Ket(FockSpace space, Vector amplitudes)
    : space_(std::move(space)), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != static_cast<Eigen::Index>(space_.dimension())) {
        throw std::invalid_argument("Ket: amplitude count does not match the space dimension");
    }
    const double norm = amplitudes_.norm();
    if (!(std::abs(norm - 1.0) <= kNormTol)) {
        std::ostringstream os;
        os.precision(17);
        os << "Ket: state is not normalized (norm " << norm << ")";
        throw ValidationError(os.str());
    }
}

Ket Ket::basis(FockSpace space, std::size_t index) {
    Vector v = Vector::Zero(static_cast<Eigen::Index>(space.dimension()));
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return Ket(std::move(space), std::move(v));
}

// ---------------------------------------------------------------- validation

std::string ValidationReport::describe() const {
    std::ostringstream os;
    os << "hermitian deviation " << hermitian_deviation << (hermitian ? " (ok)" : " (FAIL)")
       << ", trace deviation " << trace_deviation << (unit_trace ? " (ok)" : " (FAIL)")
       << ", min eigenvalue " << min_eigenvalue << (positive ? " (ok)" : " (FAIL: not PSD)");
    return os.str();
}

ValidationReport validate_density(const FockSpace& space, const Matrix& m) {
    ValidationReport r;
    const auto d = static_cast<Eigen::Index>(space.dimension());
    if (m.rows() != d || m.cols() != d) {
        r.hermitian_deviation = std::numeric_limits<double>::infinity();
        r.trace_deviation = std::numeric_limits<double>::infinity();
        r.min_eigenvalue = -std::numeric_limits<double>::infinity();
        return r;
    }
    r.hermitian_deviation = hermitian_deviation(m);
    r.trace_deviation = std::abs(m.trace() - Complex(1.0, 0.0));
    const Matrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
    r.min_eigenvalue = solver.eigenvalues().minCoeff();

    r.hermitian = r.hermitian_deviation <= kHermitianTol;
    r.unit_trace = r.trace_deviation <= kTraceTol;
    r.positive = r.min_eigenvalue >= -kPsdTol;
    return r;
}

// ---------------------------------------------------------------- DensityOperator

DensityOperator::DensityOperator(FockSpace space, Matrix matrix)
    : space_(std::move(space)), matrix_(std::move(matrix)) {
    require_size(space_, matrix_.rows(), matrix_.cols(), "DensityOperator");
    const ValidationReport r = validate_density(space_, matrix_);
    if (!r.passed()) {
        throw ValidationError("DensityOperator: " + r.describe());
    }
}

DensityOperator DensityOperator::maximally_mixed(FockSpace space) {
    const auto d = static_cast<Eigen::Index>(space.dimension());
    Matrix m = Matrix::Identity(d, d) / static_cast<double>(d);
    return DensityOperator(std::move(space), std::move(m));
}

ValidationReport validate_density(const DensityOperator& rho) {
    return validate_density(rho.space(), rho.matrix());
}

// ---------------------------------------------------------------- UnitaryOperator

UnitaryOperator::UnitaryOperator(FockSpace space, Matrix matrix)
    : space_(std::move(space)), matrix_(std::move(matrix)) {
    require_size(space_, matrix_.rows(), matrix_.cols(), "UnitaryOperator");
    const double dev = unitarity_deviation(matrix_);
    if (!(dev <= kUnitaryTol)) {
        std::ostringstream os;
        os << "UnitaryOperator: matrix is not unitary (deviation " << dev << ")";
        throw ValidationError(os.str());
    }
}

UnitaryOperator UnitaryOperator::identity(FockSpace space) {
    const auto d = static_cast<Eigen::Index>(space.dimension());
    return UnitaryOperator(std::move(space), Matrix::Identity(d, d));
}

DensityOperator UnitaryOperator::conjugate(const DensityOperator& rho) const {
    if (!(rho.space() == space_)) {
        throw std::invalid_argument("UnitaryOperator::conjugate: space mismatch");
    }
    return DensityOperator(space_, matrix_ * rho.matrix() * matrix_.adjoint());
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

UnitaryOperator kron(const UnitaryOperator& a, const UnitaryOperator& b) {
    return UnitaryOperator(a.space_ * b.space_, kron(a.matrix_, b.matrix_));
}

// ---------------------------------------------------------------- state algebra

DensityOperator pure_density(const Ket& psi) {
    const Vector& v = psi.amplitudes();
    return DensityOperator(psi.space(), v * v.adjoint());
}

DensityOperator tensor_product(const DensityOperator& a, const DensityOperator& b) {
    return DensityOperator(a.space() * b.space(), kron(a.matrix(), b.matrix()));
}

DensityOperator partial_trace(const DensityOperator& rho, const std::vector<std::size_t>& keep) {
    const FockSpace& space = rho.space();
    const std::size_t nf = space.factor_count();

    std::vector<bool> kept(nf, false);
    for (std::size_t k : keep) {
        if (k >= nf) {
            throw std::invalid_argument("partial_trace: factor index " + std::to_string(k) +
                                        " out of range");
        }
        if (kept[k]) {
            throw std::invalid_argument("partial_trace: factor " + std::to_string(k) +
                                        " selected twice");
        }
        kept[k] = true;
    }
    if (keep.empty() || keep.size() == nf) {
        throw std::invalid_argument(
            "partial_trace: selector must keep a proper, non-empty subset of factors");
    }

    std::vector<std::size_t> kept_sorted;
    std::vector<std::size_t> traced;
    for (std::size_t k = 0; k < nf; ++k) {
        (kept[k] ? kept_sorted : traced).push_back(k);
    }
    const FockSpace reduced = space.subspace(kept_sorted);
    const FockSpace environment = space.subspace(traced);

    // Split every composite index into (kept index, traced index).
    const std::size_t d = space.dimension();
    std::vector<std::size_t> kept_index(d);
    std::vector<std::size_t> env_index(d);
    for (std::size_t i = 0; i < d; ++i) {
        const auto digits = space.decompose(i);
        std::size_t a = 0;
        std::size_t b = 0;
        for (std::size_t k = 0; k < nf; ++k) {
            const std::size_t dim = space.factors()[k].dim();
            if (kept[k]) {
                a = a * dim + digits[k];
            } else {
                b = b * dim + digits[k];
            }
        }
        kept_index[i] = a;
        env_index[i] = b;
    }

    const auto rd = static_cast<Eigen::Index>(reduced.dimension());
    Matrix out = Matrix::Zero(rd, rd);
    const Matrix& m = rho.matrix();
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            if (env_index[i] == env_index[j]) {
                out(static_cast<Eigen::Index>(kept_index[i]), static_cast<Eigen::Index>(kept_index[j])) +=
                    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            }
        }
    }
    return DensityOperator(reduced, std::move(out));
}

double entropy_bits(const RealVector& eigenvalues) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
        const double lambda = eigenvalues(i);
        if (lambda < -kPsdTol) {
            std::ostringstream os;
            os << "von_neumann_entropy: eigenvalue " << lambda << " violates positivity";
            throw ValidationError(os.str());
        }
        if (lambda > 0.0) {
            s -= lambda * std::log2(lambda);
        }
    }
    return std::max(s, 0.0);
}

double von_neumann_entropy(const DensityOperator& rho) {
    return entropy_bits(hermitian_eigendecomposition(rho.matrix()).values);
}

double fidelity_with_pure(const DensityOperator& rho, const Ket& target) {
    if (!(rho.space() == target.space())) {
        throw std::invalid_argument("fidelity_with_pure: state and target live on different spaces");
    }
    const Vector& v = target.amplitudes();
    return (v.adjoint() * rho.matrix() * v)(0, 0).real();
}

} // namespace refcons
