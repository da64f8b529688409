#include "refcons/symmetry.hpp"

#include "refcons/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace refcons {

namespace {

template <class Keep>
DensityOperator mask_coherences(const DensityOperator& rho, Keep keep) {
    const auto& labels = rho.space().labels();
    Matrix m = rho.matrix();
    const auto d = m.rows();
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            if (!keep(labels[static_cast<std::size_t>(i)], labels[static_cast<std::size_t>(j)])) {
                m(i, j) = 0.0;
            }
        }
    }
    return DensityOperator(rho.space(), std::move(m));
}

} // namespace

UnitaryOperator phase_shift_unitary(const FockSpace& space, double theta) {
    const auto d = static_cast<Eigen::Index>(space.dimension());
    Matrix m = Matrix::Zero(d, d);
    for (Eigen::Index j = 0; j < d; ++j) {
        m(j, j) = std::polar(1.0, theta * space.label(static_cast<std::size_t>(j)));
    }
    return UnitaryOperator(space, std::move(m));
}

DensityOperator twirl_cyclic(const DensityOperator& rho, int d) {
    if (d < 1) {
        throw std::invalid_argument("twirl_cyclic: group order must be >= 1, got " + std::to_string(d));
    }
    return mask_coherences(rho, [d](int a, int b) { return (a - b) % d == 0; });
}

DensityOperator twirl_u1(const DensityOperator& rho) {
    return mask_coherences(rho, [](int a, int b) { return a == b; });
}

AsymmetryReport asymmetry(const DensityOperator& rho) {
    AsymmetryReport r;
    r.state_entropy_bits = von_neumann_entropy(rho);
    r.twirled_entropy_bits = von_neumann_entropy(twirl_u1(rho));
    const double diff = r.twirled_entropy_bits - r.state_entropy_bits;
    if (diff < -kPsdTol) {
        std::ostringstream os;
        os << "asymmetry: negative entropy difference " << diff;
        throw ValidationError(os.str());
    }
    r.asymmetry_bits = std::max(diff, 0.0);
    return r;
}

InvarianceReport is_g_invariant_unitary(const UnitaryOperator& u, double tol) {
    const auto& labels = u.space().labels();
    const Matrix& m = u.matrix();
    InvarianceReport r;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (labels[static_cast<std::size_t>(i)] != labels[static_cast<std::size_t>(j)]) {
                r.max_violation = std::max(r.max_violation, std::abs(m(i, j)));
            }
        }
    }
    r.invariant = r.max_violation < tol;
    return r;
}

} // namespace refcons
