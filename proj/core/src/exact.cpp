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

#include "vqesim/exact.hpp"

#include <Eigen/Dense>
#include <fmt/format.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <tuple>

#include "vqesim/error.hpp"
#include "vqesim/fermion.hpp"
#include "vqesim/measurement.hpp"
#include "vqesim/rng.hpp"

namespace vqesim {

namespace {

// Matrix-free action of h on the sector, with terms grouped by flip mask.
class SectorOperator {
 public:
  SectorOperator(const PauliSum& h, std::size_t n_electrons) {
    const std::size_t dim = std::size_t{1} << h.n_qubits();
    position_.assign(dim, kAbsent);
    for (std::uint64_t b = 0; b < dim; ++b) {
      if (static_cast<std::size_t>(std::popcount(b)) == n_electrons) {
        position_[b] = basis_.size();
        basis_.push_back(b);
      }
    }
    for (const auto& [key, c] : h.terms()) {
      auto it = std::find_if(groups_.begin(), groups_.end(),
                             [&](const Group& g) { return g.x == key.x; });
      if (it == groups_.end()) {
        groups_.push_back({key.x, {}});
        it = groups_.end() - 1;
      }
      it->terms.emplace_back(key, c);
    }
  }

  std::size_t dim() const { return basis_.size(); }
  const std::vector<std::uint64_t>& basis() const { return basis_; }

  // y = H x on the sector.
  void apply(const Eigen::VectorXcd& x, Eigen::VectorXcd& y) const {
    y.setZero(x.size());
    for (const auto& g : groups_) {
      for (std::size_t i = 0; i < basis_.size(); ++i) {
        const std::uint64_t b = basis_[i];
        const std::size_t j = position_[b ^ g.x];
        if (j == kAbsent) continue;
        cplx amp{};
        for (const auto& [key, c] : g.terms) amp += c * pauli_basis_action(key, b);
        y(static_cast<Eigen::Index>(j)) += amp * x(static_cast<Eigen::Index>(i));
      }
    }
  }

  Eigen::MatrixXcd dense() const {
    const auto n = static_cast<Eigen::Index>(dim());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    Eigen::VectorXcd e(n), col(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      e.setZero();
      e(i) = 1.0;
      apply(e, col);
      m.col(i) = col;
    }
    return m;
  }

 private:
  static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);
  struct Group {
    std::uint64_t x;
    std::vector<std::pair<PauliKey, cplx>> terms;
  };
  std::vector<std::size_t> position_;
  std::vector<std::uint64_t> basis_;
  std::vector<Group> groups_;
};

// Restarted Lanczos with full reorthogonalization for the lowest eigenpair.
std::pair<double, Eigen::VectorXcd> lanczos_lowest(const SectorOperator& op,
                                                   const ExactOptions& opt,
                                                   double& residual) {
  const auto n = static_cast<Eigen::Index>(op.dim());
  Eigen::VectorXcd v(n);
  Rng rng(0x5EC7042ULL);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = rng.uniform() - 0.5;
  v.normalize();
  const auto m = static_cast<Eigen::Index>(std::min<std::size_t>(opt.lanczos_subspace, op.dim()));
  Eigen::VectorXcd w(n), hx(n);
  double lambda = 0;
  for (std::size_t restart = 0; restart <= opt.lanczos_max_restarts; ++restart) {
    Eigen::MatrixXcd V(n, m);
    std::vector<double> alpha, beta;
    V.col(0) = v;
    Eigen::Index k = 0;
    for (; k < m; ++k) {
      op.apply(V.col(k), w);
      const double a = V.col(k).dot(w).real();
      alpha.push_back(a);
      for (int pass = 0; pass < 2; ++pass) {
        w -= V.leftCols(k + 1) * (V.leftCols(k + 1).adjoint() * w);
      }
      const double b = w.norm();
      if (k + 1 == m || b < 1e-13) {
        ++k;
        break;
      }
      beta.push_back(b);
      V.col(k + 1) = w / b;
    }
    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
      T(i, i) = alpha[static_cast<std::size_t>(i)];
      if (i + 1 < k) {
        T(i, i + 1) = T(i + 1, i) = beta[static_cast<std::size_t>(i)];
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
    lambda = es.eigenvalues()(0);
    v = V.leftCols(k) * es.eigenvectors().col(0).cast<cplx>();
    v.normalize();
    op.apply(v, hx);
    residual = (hx - lambda * v).norm();
    if (residual <= opt.lanczos_tolerance) return {lambda, v};
  }
  throw RuntimeError(fmt::format(
      "Lanczos did not reach residual {} (last {})", opt.lanczos_tolerance, residual));
}

}  // namespace

SpectrumResult ground_state(const PauliSum& h, std::size_t n_electrons,
                            double e_core, const ExactOptions& options) {
  const std::size_t nq = h.n_qubits();
  if (nq > options.qubit_cap) {
    throw CapacityError(fmt::format(
        "exact diagonalization of {} qubits exceeds the cap of {}", nq, options.qubit_cap));
  }
  if (nq == 0) throw ValidationError("Hamiltonian has no qubits");
  if (!h.is_hermitian()) throw ValidationError("Hamiltonian is not Hermitian");
  const SectorOperator op(h, n_electrons);
  if (op.dim() == 0) {
    throw ValidationError(fmt::format(
        "no basis states with {} electrons on {} qubits", n_electrons, nq));
  }
  SpectrumResult out;
  out.sector = n_electrons;
  Eigen::VectorXcd vec;
  double lambda = 0;
  if (nq <= options.dense_qubit_cap) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(op.dense());
    lambda = es.eigenvalues()(0);
    vec = es.eigenvectors().col(0);
  } else {
    out.iterative = true;
    std::tie(lambda, vec) = lanczos_lowest(op, options, out.residual);
  }
  // Fix the global phase: largest-magnitude component real and positive.
  Eigen::Index imax = 0;
  vec.cwiseAbs().maxCoeff(&imax);
  vec *= std::polar(1.0, -std::arg(vec(imax)));
  Eigen::VectorXcd hv(vec.size());
  op.apply(vec, hv);
  out.residual = (hv - lambda * vec).norm();

  std::vector<cplx> full(std::size_t{1} << nq, cplx{});
  for (std::size_t i = 0; i < op.dim(); ++i) {
    full[op.basis()[i]] = vec(static_cast<Eigen::Index>(i));
  }
  double norm = 0;
  for (const auto& a : full) norm += std::norm(a);
  for (auto& a : full) a /= std::sqrt(norm);
  out.ground_state = Statevector::from_amplitudes(std::move(full));
  out.ground_energy = lambda + e_core;
  return out;
}

double OneRdm::trace() const {
  double t = 0;
  for (std::size_t p = 0; p < n_spatial; ++p) t += (*this)(p, p);
  return t;
}

OneRdm one_rdm(const Statevector& psi, std::size_t n_spatial) {
  if (psi.n_qubits() != 2 * n_spatial) {
    throw ValidationError(fmt::format(
        "1-RDM of {} spatial orbitals needs {} qubits, state has {}", n_spatial,
        2 * n_spatial, psi.n_qubits()));
  }
  const std::size_t nq = psi.n_qubits();
  const auto n = static_cast<Eigen::Index>(n_spatial);
  Eigen::MatrixXcd d(n, n);
  for (std::size_t p = 0; p < n_spatial; ++p)
    for (std::size_t q = 0; q < n_spatial; ++q) {
      FermionOperator op(nq);
      for (int s = 0; s < 2; ++s) {
        op.add_term(1.0, {cre(spin_orbital(p, s)), ann(spin_orbital(q, s))});
      }
      d(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(q)) =
          expectation_complex(psi, jordan_wigner(op));
    }
  OneRdm rdm;
  rdm.n_spatial = n_spatial;
  rdm.matrix.resize(n_spatial * n_spatial);
  for (Eigen::Index p = 0; p < n; ++p)
    for (Eigen::Index q = 0; q < n; ++q)
      rdm.matrix[static_cast<std::size_t>(p * n + q)] = d(p, q).real();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(d, Eigen::EigenvaluesOnly);
  for (Eigen::Index i = n - 1; i >= 0; --i) rdm.noons.push_back(es.eigenvalues()(i));
  return rdm;
}

std::string noon_csv_header(std::size_t n_noons) {
  std::string s = "distortion_parameter";
  for (std::size_t i = 1; i <= n_noons; ++i) s += fmt::format(",noon_{}", i);
  return s + "\n";
}

std::string noon_csv_row(double parameter, std::span<const double> noons) {
  std::string s = fmt::format("{}", parameter);
  for (double v : noons) s += fmt::format(",{}", v);
  return s + "\n";
}

}  // namespace vqesim
