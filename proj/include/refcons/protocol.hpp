// protocol.hpp — a bounded phase reference repeatedly lending its coherence to
// a number-changing operation on fresh vacuum systems.
//
// Each use prepares a system in |0>, applies the number-conserving unitary F
// on reference (x) system, keeps the reduced reference for the next use and
// scores the reduced system against (|0> + e^{i theta}|1>)/sqrt(2).

#pragma once

#include "refcons/states.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace refcons {

struct ProtocolConfig {
    int cutoff_n = 1;     // reference holds at most this many particles
    double theta = 0.0;
    int uses = 1;

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;
};

struct UseRecord {
    int mu = 0;
    std::optional<double> fidelity;  // absent before the first use
    double asymmetry_bits = 0.0;
    double normalized_asymmetry = 0.0;
    double reference_entropy_bits = 0.0;
};

struct DegradationSeries {
    ProtocolConfig config;
    std::vector<UseRecord> records;  // mu = 0 .. config.uses
};

/// (1/sqrt(N+1)) sum_n e^{i theta n} |n> on FockSpace::reference(N).
Ket phase_state(int cutoff_n, double theta = 0.0);

/// (|0> + e^{i theta}|1>)/sqrt(2) on the system qubit.
Ket target_state(double theta = 0.0);

/// Reference (x) qubit space used by the protocol.
FockSpace joint_space(int cutoff_n);

/// The sector-preserving unitary on reference (x) qubit:
///   |n,0>   -> (|n,0> + |n-1,1>)/sqrt(2)     n = 1..N
///   |n-1,1> -> (-|n,0> + |n-1,1>)/sqrt(2)    n = 1..N
///   |0,0> and |N,1> fixed.
UnitaryOperator build_frs(int cutoff_n);

struct UseOutcome {
    DensityOperator new_reference;
    DensityOperator system_out;
};

/// One use: rho_R (x) |0><0| conjugated by frs, re-Hermitized and
/// renormalized, then reduced onto each factor. Drift above 1e-9 in trace or
/// Hermiticity throws ValidationError.
UseOutcome single_use(const DensityOperator& reference, const UnitaryOperator& frs);

/// Hand-derived first-use fidelity for a phase-state reference at theta = 0:
/// 1/2 + (N-1)/(2(N+1)) + 1/(sqrt(2)(N+1)). Test oracle only.
double first_use_fidelity_closed_form(int cutoff_n);

DegradationSeries run_degradation(const ProtocolConfig& config);

/// Same protocol with a caller-supplied joint unitary (e.g. another completion).
DegradationSeries run_degradation(const ProtocolConfig& config, const UnitaryOperator& frs);

/// Sees the reference after every use (mu = 0 is the initial phase state) and
/// the system output of that use (absent at mu = 0).
using UseObserver =
    std::function<void(int mu, const DensityOperator& reference, const DensityOperator* system_out)>;

DegradationSeries run_degradation(const ProtocolConfig& config, const UnitaryOperator& frs,
                                  const UseObserver& observer);

} // namespace refcons
