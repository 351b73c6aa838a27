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

#include "qsearchlab/density.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qsl {

namespace {

// Cyclic Jacobi, eigenvalues only. Row-major dense symmetric input.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t d) {
    auto at = [&](std::size_t r, std::size_t c) -> double& { return a[r * d + c]; };

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off2 = 0.0;
        for (std::size_t p = 0; p < d; ++p) {
            for (std::size_t q = p + 1; q < d; ++q) {
                off2 += at(p, q) * at(p, q);
            }
        }
        if (off2 <= 1e-28) {
            break;
        }
        for (std::size_t p = 0; p < d; ++p) {
            for (std::size_t q = p + 1; q < d; ++q) {
                const double apq = at(p, q);
                if (std::abs(apq) < 1e-300) {
                    continue;
                }
                const double tau = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (tau >= 0.0)
                                     ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                     : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                at(p, p) -= t * apq;
                at(q, q) += t * apq;
                at(p, q) = 0.0;
                at(q, p) = 0.0;
                for (std::size_t k = 0; k < d; ++k) {
                    if (k == p || k == q) {
                        continue;
                    }
                    const double akp = at(k, p);
                    const double akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(p, k) = at(k, p);
                    at(k, q) = s * akp + c * akq;
                    at(q, k) = at(k, q);
                }
            }
        }
    }

    std::vector<double> eigs(d);
    for (std::size_t i = 0; i < d; ++i) {
        eigs[i] = at(i, i);
    }
    std::sort(eigs.begin(), eigs.end(), std::greater<double>());
    return eigs;
}

} // namespace

DensityMatrix::DensityMatrix(std::size_t dim, std::vector<Amplitude> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (dim_ == 0 || entries_.size() != dim_ * dim_) {
        throw std::domain_error("density matrix entries do not match dimension");
    }
}

Amplitude DensityMatrix::entry(std::size_t row, std::size_t col) const {
    if (row >= dim_ || col >= dim_) {
        throw std::domain_error("density matrix index out of range");
    }
    return entries_[row * dim_ + col];
}

double DensityMatrix::trace_error() const {
    Amplitude trace{0.0, 0.0};
    for (std::size_t i = 0; i < dim_; ++i) {
        trace += entries_[i * dim_ + i];
    }
    return std::abs(trace - Amplitude{1.0, 0.0});
}

double DensityMatrix::hermiticity_error() const {
    double err = 0.0;
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = r; c < dim_; ++c) {
            err = std::max(err, std::abs(entries_[r * dim_ + c] -
                                         std::conj(entries_[c * dim_ + r])));
        }
    }
    return err;
}

std::vector<double> DensityMatrix::eigenvalues() const {
    // Real symmetric embedding [[X, -Y], [Y, X]] of X + iY; spectra double up.
    const std::size_t d2 = 2 * dim_;
    std::vector<double> b(d2 * d2, 0.0);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            const Amplitude e = entries_[r * dim_ + c];
            b[r * d2 + c] = e.real();
            b[r * d2 + (c + dim_)] = -e.imag();
            b[(r + dim_) * d2 + c] = e.imag();
            b[(r + dim_) * d2 + (c + dim_)] = e.real();
        }
    }
    const std::vector<double> doubled = symmetric_eigenvalues(std::move(b), d2);
    std::vector<double> eigs(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        eigs[i] = doubled[2 * i];
    }
    return eigs;
}

void DensityMatrix::validate(double tol, double psd_tol) const {
    if (hermiticity_error() > tol) {
        throw std::invalid_argument("density matrix is not Hermitian within tolerance");
    }
    if (trace_error() > tol) {
        throw std::invalid_argument("density matrix trace deviates from 1");
    }
    const std::vector<double> eigs = eigenvalues();
    if (!eigs.empty() && eigs.back() < -psd_tol) {
        throw std::invalid_argument("density matrix has eigenvalue " +
                                    std::to_string(eigs.back()) + " below -tolerance");
    }
}

DensityMatrix partial_trace(const PureState& state, const std::vector<int>& keep) {
    const int m = state.num_qubits();
    if (keep.empty()) {
        throw std::domain_error("partial trace must keep at least one qubit");
    }

    std::vector<int> kept = keep;
    std::sort(kept.begin(), kept.end());
    for (std::size_t i = 0; i < kept.size(); ++i) {
        if (kept[i] < 0 || kept[i] >= m) {
            throw std::domain_error("kept qubit index out of range");
        }
        if (i > 0 && kept[i] == kept[i - 1]) {
            throw std::domain_error("duplicate kept qubit index");
        }
    }
    if (kept.size() == static_cast<std::size_t>(m)) {
        throw std::domain_error("partial trace must trace out at least one qubit");
    }

    std::vector<int> traced;
    traced.reserve(m - kept.size());
    for (int q = 0; q < m; ++q) {
        if (!std::binary_search(kept.begin(), kept.end(), q)) {
            traced.push_back(q);
        }
    }

    const int nk = static_cast<int>(kept.size());
    const int nt = static_cast<int>(traced.size());
    const std::uint64_t dk = std::uint64_t{1} << nk;
    const std::uint64_t dt = std::uint64_t{1} << nt;

    // Composite-index offsets for every kept / traced bit pattern.
    auto offsets = [m](const std::vector<int>& qubits, std::uint64_t patterns) {
        const int w = static_cast<int>(qubits.size());
        std::vector<std::uint64_t> out(patterns, 0);
        for (std::uint64_t pat = 0; pat < patterns; ++pat) {
            std::uint64_t idx = 0;
            for (int j = 0; j < w; ++j) {
                if (pat & (std::uint64_t{1} << (w - 1 - j))) {
                    idx |= qubit_mask(m, qubits[j]);
                }
            }
            out[pat] = idx;
        }
        return out;
    };
    const std::vector<std::uint64_t> keep_offset = offsets(kept, dk);
    const std::vector<std::uint64_t> trace_offset = offsets(traced, dt);

    const auto& amps = state.amplitudes();
    std::vector<Amplitude> rho(dk * dk, Amplitude{0.0, 0.0});
    for (std::uint64_t e = 0; e < dt; ++e) {
        const std::uint64_t base = trace_offset[e];
        for (std::uint64_t r = 0; r < dk; ++r) {
            const Amplitude ar = amps[keep_offset[r] | base];
            if (ar == Amplitude{0.0, 0.0}) {
                continue;
            }
            for (std::uint64_t c = 0; c < dk; ++c) {
                rho[r * dk + c] += ar * std::conj(amps[keep_offset[c] | base]);
            }
        }
    }
    return DensityMatrix(dk, std::move(rho));
}

double purity(const DensityMatrix& rho) {
    double acc = 0.0;
    for (const Amplitude& e : rho.entries()) {
        acc += std::norm(e);
    }
    return acc;
}

std::vector<double> schmidt_coefficients(const PureState& state,
                                         const std::vector<int>& side_a) {
    const int m = state.num_qubits();
    if (side_a.empty() || side_a.size() >= static_cast<std::size_t>(m)) {
        throw std::domain_error("degenerate cut: both sides must be nonempty");
    }

    // Eigenvalues of the smaller side's reduction; same nonzero spectrum on
    // either side of a pure-state cut.
    std::vector<int> smaller = side_a;
    if (2 * side_a.size() > static_cast<std::size_t>(m)) {
        smaller.clear();
        std::vector<int> sorted_a = side_a;
        std::sort(sorted_a.begin(), sorted_a.end());
        for (int q = 0; q < m; ++q) {
            if (!std::binary_search(sorted_a.begin(), sorted_a.end(), q)) {
                smaller.push_back(q);
            }
        }
    }

    std::vector<double> eigs = partial_trace(state, smaller).eigenvalues();
    std::vector<double> coeffs;
    coeffs.reserve(eigs.size());
    for (double lambda : eigs) {
        coeffs.push_back(std::sqrt(std::max(lambda, 0.0)));
    }
    return coeffs;
}

} // namespace qsl
