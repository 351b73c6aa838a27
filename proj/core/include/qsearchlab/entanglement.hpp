// Copyright 2026 The qsearchlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QSEARCHLAB_ENTANGLEMENT_HPP
#define QSEARCHLAB_ENTANGLEMENT_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qsearchlab/algorithms.hpp"
#include "qsearchlab/gates.hpp"
#include "qsearchlab/state.hpp"

namespace qsl {

/// Tolerance set tying every verdict to an explicit threshold.
struct Tolerances {
    double norm = kNormTol;           // algebraic identities
    double purity = kEigenTol;        // is_product iff purity >= 1 - purity
    double entropy_bits = 1e-8;       // product iff entropy <= this
    bool operator==(const Tolerances&) const = default;
};

/// Raised when the purity, Schmidt-rank, and entropy witnesses disagree on a
/// cut. This is an internal consistency failure, not a user error; runners
/// map it to a dedicated exit code.
class WitnessDisagreement : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Product-state evidence for one bipartition.
struct CutVerdict {
    std::vector<int> cut;   // qubits on side A
    double purity = 0.0;    // Tr(rho_A^2)
    int schmidt_rank = 0;
    double entropy_bits = 0.0;
    bool is_product = false;
};

/// One verdict per single-qubit-vs-rest cut. For a pure state, all such cuts
/// being pure is equivalent to the state being a full tensor product, so no
/// larger bipartitions are needed. The three witnesses must agree within the
/// tolerances or WitnessDisagreement is thrown.
std::vector<CutVerdict> analyze_state(const PureState& state, const Tolerances& tol = {});

struct SnapshotVerdicts {
    std::string label;
    std::vector<CutVerdict> cuts;
    bool fully_product = false;
};

/// Per-snapshot verdict table plus the response-qubit cut series, which the
/// circuits here keep in a pure product factor from "psi1" on.
struct EntanglementReport {
    std::vector<SnapshotVerdicts> snapshots;
    /// (label, verdict of the last-qubit cut), one entry per snapshot.
    std::vector<std::pair<std::string, CutVerdict>> ancilla_series;

    const SnapshotVerdicts& at(const std::string& label) const;
};

EntanglementReport analyze_trajectory(const Trajectory& trajectory,
                                      const Tolerances& tol = {});

/// Applies one gate per qubit and reports whether every single-qubit-cut
/// purity is preserved within `tol`. Local unitaries cannot change the
/// Schmidt spectrum, so a true result is expected for any state; this makes
/// that inference executable.
bool local_unitary_invariance_check(const PureState& state,
                                    const std::vector<Gate2>& local_gates,
                                    double tol = kEigenTol);

} // namespace qsl

#endif // QSEARCHLAB_ENTANGLEMENT_HPP
