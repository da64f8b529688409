#include "refcons/linalg.hpp"

#include "refcons/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <vector>

namespace refcons {

double hermitian_deviation(const Matrix& m) {
    if (m.rows() != m.cols()) {
        return std::numeric_limits<double>::infinity();
    }
    if (m.size() == 0) {
        return 0.0;
    }
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double unitarity_deviation(const Matrix& m) {
    if (m.rows() != m.cols()) {
        return std::numeric_limits<double>::infinity();
    }
    if (m.size() == 0) {
        return 0.0;
    }
    return (m * m.adjoint() - Matrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return std::numeric_limits<double>::infinity();
    }
    if (a.size() == 0) {
        return 0.0;
    }
    return (a - b).cwiseAbs().maxCoeff();
}

Matrix EigenDecomposition::reconstruct() const {
    return vectors * values.cast<Complex>().asDiagonal() * vectors.adjoint();
}

namespace {

constexpr double kSignificant = 1e-12;
constexpr double kDegenerateGap = 1e-12;

Eigen::Index first_significant(const Vector& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v(i)) > kSignificant) {
            return i;
        }
    }
    return v.size();
}

} // namespace

EigenDecomposition hermitian_eigendecomposition(const Matrix& m) {
    const double dev = hermitian_deviation(m);
    if (!(dev <= kHermitianTol)) {
        std::ostringstream os;
        os << "hermitian_eigendecomposition: input is not Hermitian (deviation " << dev << ")";
        throw ValidationError(os.str());
    }
    const Eigen::Index n = m.rows();
    if (n == 0) {
        return {};
    }

    // Solve on the exactly Hermitian part so the solver only sees the lower triangle it reads.
    const Matrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("hermitian_eigendecomposition: eigensolver did not converge");
    }

    Matrix vecs = solver.eigenvectors();
    for (Eigen::Index c = 0; c < n; ++c) {
        const Eigen::Index k = first_significant(vecs.col(c));
        if (k < n) {
            vecs.col(c) *= std::conj(vecs(k, c)) / std::abs(vecs(k, c));
        }
    }

    const RealVector& vals = solver.eigenvalues();
    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index a, Eigen::Index b) { return vals(a) > vals(b); });

    // Degenerate clusters: order by leading-component position.
    for (std::size_t lo = 0; lo < order.size();) {
        std::size_t hi = lo + 1;
        while (hi < order.size() && vals(order[hi - 1]) - vals(order[hi]) < kDegenerateGap) {
            ++hi;
        }
        std::stable_sort(order.begin() + static_cast<std::ptrdiff_t>(lo),
                         order.begin() + static_cast<std::ptrdiff_t>(hi),
                         [&](Eigen::Index a, Eigen::Index b) {
                             return first_significant(vecs.col(a)) < first_significant(vecs.col(b));
                         });
        lo = hi;
    }

    EigenDecomposition out;
    out.values.resize(n);
    out.vectors.resize(n, n);
    for (Eigen::Index c = 0; c < n; ++c) {
        out.values(c) = vals(order[static_cast<std::size_t>(c)]);
        out.vectors.col(c) = vecs.col(order[static_cast<std::size_t>(c)]);
    }
    return out;
}

} // namespace refcons
