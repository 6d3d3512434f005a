// Copyright 2026 The vqesim Authors
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

#include "vqesim/density_matrix.hpp"

#include <Eigen/Eigenvalues>
#include <fmt/format.h>

#include <cmath>

#include "kernels.hpp"
#include "vqesim/error.hpp"

namespace vqesim {

namespace {

void check_cap(std::size_t n_qubits, std::size_t cap) {
  if (n_qubits == 0) throw ValidationError("density matrix needs at least one qubit");
  if (n_qubits > cap) {
    throw CapacityError(fmt::format(
        "density matrix of {} qubits exceeds the cap of {}", n_qubits, cap));
  }
}

}  // namespace

DensityMatrix DensityMatrix::zero(std::size_t n_qubits, std::size_t qubit_cap) {
  check_cap(n_qubits, qubit_cap);
  DensityMatrix rho;
  rho.n_qubits_ = n_qubits;
  rho.dim_ = std::size_t{1} << n_qubits;
  rho.data_.assign(rho.dim_ * rho.dim_, cplx{});
  rho.data_[0] = 1.0;
  return rho;
}

DensityMatrix DensityMatrix::from_statevector(const Statevector& psi,
                                              std::size_t qubit_cap) {
  check_cap(psi.n_qubits(), qubit_cap);
  DensityMatrix rho;
  rho.n_qubits_ = psi.n_qubits();
  rho.dim_ = psi.dim();
  rho.data_.resize(rho.dim_ * rho.dim_);
  const auto& a = psi.amplitudes();
  for (std::size_t r = 0; r < rho.dim_; ++r)
    for (std::size_t c = 0; c < rho.dim_; ++c)
      rho.data_[r * rho.dim_ + c] = a[r] * std::conj(a[c]);
  return rho;
}

void DensityMatrix::apply(const Gate& g) {
  for (std::size_t i = 0; i < g.arity(); ++i) {
    if (g.qubits[i] >= n_qubits_) throw ValidationError("gate qubit out of range");
  }
  if (!g.is_bound()) throw ValidationError("cannot simulate an unbound gate");
  detail::apply_gate(data_.data(), data_.size(), g, n_qubits_, false);
  detail::apply_gate(data_.data(), data_.size(), g, 0, true);
}

void DensityMatrix::apply(const ParameterizedCircuit& c) {
  if (c.n_qubits() != n_qubits_) {
    throw ValidationError("circuit and density matrix qubit counts differ");
  }
  for (const auto& g : c.gates()) apply(g);
}

void DensityMatrix::apply_kraus(std::size_t q, std::span<const Mat2> kraus) {
  if (q >= n_qubits_) throw ValidationError("Kraus qubit out of range");
  std::vector<cplx> acc(data_.size(), cplx{});
  for (const auto& e : kraus) {
    std::vector<cplx> term = data_;
    Mat2 ce;
    for (std::size_t i = 0; i < 4; ++i) ce[i] = std::conj(e[i]);
    detail::apply_1q(term.data(), term.size(), q + n_qubits_, e);
    detail::apply_1q(term.data(), term.size(), q, ce);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += term[i];
  }
  data_ = std::move(acc);
}

void DensityMatrix::apply_idle(std::size_t q, double p_amp, double p_phase) {
  if (q >= n_qubits_) throw ValidationError("idle qubit out of range");
  const std::size_t bit = std::size_t{1} << q;
  const double keep = 1.0 - p_amp;
  const double off = std::sqrt(keep) * std::sqrt(1.0 - p_phase);
  for (std::size_t r = 0; r < dim_; ++r) {
    if (r & bit) continue;
    const std::size_t r1 = r | bit;
    for (std::size_t c = 0; c < dim_; ++c) {
      if (c & bit) continue;
      const std::size_t c1 = c | bit;
      cplx& m00 = data_[r * dim_ + c];
      cplx& m01 = data_[r * dim_ + c1];
      cplx& m10 = data_[r1 * dim_ + c];
      cplx& m11 = data_[r1 * dim_ + c1];
      m00 += p_amp * m11;
      m11 *= keep;
      m01 *= off;
      m10 *= off;
    }
  }
}

cplx DensityMatrix::trace() const {
  cplx t{};
  for (std::size_t i = 0; i < dim_; ++i) t += data_[i * dim_ + i];
  return t;
}

bool DensityMatrix::is_hermitian(double tol) const {
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = r; c < dim_; ++c)
      if (std::abs(data_[r * dim_ + c] - std::conj(data_[c * dim_ + r])) > tol)
        return false;
  return true;
}

double DensityMatrix::min_eigenvalue() const {
  const auto n = static_cast<Eigen::Index>(dim_);
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c)
      m(r, c) = 0.5 * (data_[r * dim_ + c] + std::conj(data_[c * dim_ + r]));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

std::vector<double> DensityMatrix::probabilities() const {
  std::vector<double> p(dim_);
  for (std::size_t i = 0; i < dim_; ++i) p[i] = data_[i * dim_ + i].real();
  return p;
}

}  // namespace vqesim
