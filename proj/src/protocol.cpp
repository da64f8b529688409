#include "refcons/protocol.hpp"

#include "refcons/errors.hpp"
#include "refcons/symmetry.hpp"

#include <cmath>
#include <sstream>

namespace refcons {

namespace {

constexpr double kDriftTol = 1e-9;

} // namespace

void ProtocolConfig::validate() const {
    if (cutoff_n < 1) {
        throw std::invalid_argument("cutoff_n must be >= 1, got " + std::to_string(cutoff_n));
    }
    if (uses < 1) {
        throw std::invalid_argument("uses must be >= 1, got " + std::to_string(uses));
    }
    if (!std::isfinite(theta)) {
        throw std::invalid_argument("theta must be finite");
    }
}

Ket phase_state(int cutoff_n, double theta) {
    if (cutoff_n < 0) {
        throw std::invalid_argument("phase_state: negative cutoff " + std::to_string(cutoff_n));
    }
    const Eigen::Index d = cutoff_n + 1;
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    Vector v(d);
    for (Eigen::Index n = 0; n < d; ++n) {
        v(n) = std::polar(amp, theta * static_cast<double>(n));
    }
    return Ket(FockSpace::reference(cutoff_n), std::move(v));
}

Ket target_state(double theta) {
    Vector v(2);
    v(0) = 1.0 / std::sqrt(2.0);
    v(1) = std::polar(1.0 / std::sqrt(2.0), theta);
    return Ket(FockSpace::qubit(), std::move(v));
}

FockSpace joint_space(int cutoff_n) { return FockSpace::reference(cutoff_n) * FockSpace::qubit(); }

UnitaryOperator build_frs(int cutoff_n) {
    if (cutoff_n < 1) {
        throw std::invalid_argument("build_frs: cutoff must be >= 1 (no coherent pair at cutoff " +
                                    std::to_string(cutoff_n) + ")");
    }
    const FockSpace space = joint_space(cutoff_n);
    const auto d = static_cast<Eigen::Index>(space.dimension());
    const auto idx = [](int n, int s) { return static_cast<Eigen::Index>(2 * n + s); };
    const double h = 1.0 / std::sqrt(2.0);

    Matrix f = Matrix::Zero(d, d);
    f(idx(0, 0), idx(0, 0)) = 1.0;
    f(idx(cutoff_n, 1), idx(cutoff_n, 1)) = 1.0;
    for (int n = 1; n <= cutoff_n; ++n) {
        const Eigen::Index a = idx(n, 0);
        const Eigen::Index b = idx(n - 1, 1);
        f(a, a) = h;
        f(b, a) = h;
        f(a, b) = -h;
        f(b, b) = h;
    }
    return UnitaryOperator(space, std::move(f));
}

UseOutcome single_use(const DensityOperator& reference, const UnitaryOperator& frs) {
    const FockSpace joint = reference.space() * FockSpace::qubit();
    if (!(frs.space() == joint)) {
        throw std::invalid_argument("single_use: unitary does not act on reference (x) qubit");
    }

    Matrix vacuum = Matrix::Zero(2, 2);
    vacuum(0, 0) = 1.0;
    const Matrix& u = frs.matrix();
    Matrix out = u * kron(reference.matrix(), vacuum) * u.adjoint();

    const double herm = hermitian_deviation(out);
    const Complex trace = out.trace();
    const double trace_dev = std::abs(trace - Complex(1.0, 0.0));
    if (herm > kDriftTol || trace_dev > kDriftTol) {
        std::ostringstream os;
        os << "single_use: joint state drifted (hermitian deviation " << herm
           << ", trace deviation " << trace_dev << ")";
        throw ValidationError(os.str());
    }
    out = 0.5 * (out + out.adjoint()).eval();
    out /= trace.real();

    const DensityOperator joint_state(joint, std::move(out));
    return UseOutcome{partial_trace(joint_state, {0}), partial_trace(joint_state, {1})};
}

double first_use_fidelity_closed_form(int cutoff_n) {
    const double n = cutoff_n;
    return 0.5 + (n - 1.0) / (2.0 * (n + 1.0)) + 1.0 / (std::sqrt(2.0) * (n + 1.0));
}

DegradationSeries run_degradation(const ProtocolConfig& config) {
    config.validate();
    return run_degradation(config, build_frs(config.cutoff_n), nullptr);
}

DegradationSeries run_degradation(const ProtocolConfig& config, const UnitaryOperator& frs) {
    return run_degradation(config, frs, nullptr);
}

DegradationSeries run_degradation(const ProtocolConfig& config, const UnitaryOperator& frs,
                                  const UseObserver& observer) {
    config.validate();
    const double eta = std::log2(static_cast<double>(config.cutoff_n) + 1.0);
    const Ket target = target_state(config.theta);

    const auto record_for = [&](int mu, const DensityOperator& reference) {
        const AsymmetryReport a = asymmetry(reference);
        UseRecord rec;
        rec.mu = mu;
        rec.asymmetry_bits = a.asymmetry_bits;
        rec.normalized_asymmetry = a.asymmetry_bits / eta;
        rec.reference_entropy_bits = a.state_entropy_bits;
        return rec;
    };

    DegradationSeries series;
    series.config = config;
    series.records.reserve(static_cast<std::size_t>(config.uses) + 1);

    DensityOperator reference = pure_density(phase_state(config.cutoff_n, config.theta));
    series.records.push_back(record_for(0, reference));
    if (observer) {
        observer(0, reference, nullptr);
    }

    for (int mu = 1; mu <= config.uses; ++mu) {
        UseOutcome outcome = single_use(reference, frs);
        reference = std::move(outcome.new_reference);
        UseRecord rec = record_for(mu, reference);
        rec.fidelity = fidelity_with_pure(outcome.system_out, target);
        series.records.push_back(rec);
        if (observer) {
            observer(mu, reference, &outcome.system_out);
        }
    }
    return series;
}

} // namespace refcons
