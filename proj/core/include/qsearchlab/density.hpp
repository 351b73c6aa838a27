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

#ifndef QSEARCHLAB_DENSITY_HPP
#define QSEARCHLAB_DENSITY_HPP

#include <cstddef>
#include <vector>

#include "qsearchlab/state.hpp"

namespace qsl {

/// Hermitian, trace-one, positive-semidefinite matrix; here always a reduced
/// density matrix of some pure state.
class DensityMatrix {
  public:
    DensityMatrix(std::size_t dim, std::vector<Amplitude> entries);

    std::size_t dim() const { return dim_; }
    Amplitude entry(std::size_t row, std::size_t col) const;
    const std::vector<Amplitude>& entries() const { return entries_; }

    double trace_error() const;       // |Tr(rho) - 1|
    double hermiticity_error() const; // max |rho_ij - conj(rho_ji)|

    /// Eigenvalues in descending order, via cyclic Jacobi on the real
    /// symmetric embedding [[X, -Y], [Y, X]] of rho = X + iY (each eigenvalue
    /// of rho appears twice in the embedding; every second one is returned).
    std::vector<double> eigenvalues() const;

    /// Throws std::invalid_argument if Hermiticity/trace/positivity are
    /// violated beyond the stated tolerances.
    void validate(double tol = kNormTol, double psd_tol = kEigenTol) const;

  private:
    std::size_t dim_;
    std::vector<Amplitude> entries_; // row-major
};

/// Reduced density matrix on the kept qubits (ascending qubit order; the
/// smallest kept index becomes the most significant row bit). `keep` must be
/// a nonempty proper subset of the register.
DensityMatrix partial_trace(const PureState& state, const std::vector<int>& keep);

/// Tr(rho^2) = sum |rho_ij|^2; equals 1 for pure reductions.
double purity(const DensityMatrix& rho);

/// Descending Schmidt coefficients across the cut (side_a | complement),
/// computed from the eigenvalues of the smaller side's reduced density
/// matrix. Squared coefficients sum to 1. Both sides must be nonempty.
std::vector<double> schmidt_coefficients(const PureState& state,
                                         const std::vector<int>& side_a);

} // namespace qsl

#endif // QSEARCHLAB_DENSITY_HPP
