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

#include "vqesim/optimizer.hpp"

#include <Eigen/Dense>
#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "vqesim/error.hpp"

namespace vqesim {

namespace {

// Counts evaluations against the budget and tracks the best point.
class Evaluator {
 public:
  Evaluator(const Objective& f, std::size_t budget, OptimizeResult& out)
      : f_(f), budget_(budget), out_(out) {}

  bool can_evaluate() const { return out_.n_evaluations < budget_; }

  double operator()(const Eigen::VectorXd& x) {
    const double v = f_(std::span<const double>(x.data(), static_cast<std::size_t>(x.size())));
    if (!std::isfinite(v)) {
      throw RuntimeError(fmt::format(
          "objective returned a non-finite value at evaluation {}",
          out_.n_evaluations + 1));
    }
    out_.trace.push_back(v);
    if (out_.n_evaluations == 0 || v < out_.f) {
      out_.f = v;
      out_.x.assign(x.data(), x.data() + x.size());
    }
    ++out_.n_evaluations;
    return v;
  }

 private:
  const Objective& f_;
  std::size_t budget_;
  OptimizeResult& out_;
};

void check_settings(const OptimizerSettings& s) {
  if (s.max_evaluations < 1) throw ValidationError("max_evaluations must be >= 1");
  if (!(s.rho_begin > 0) || !(s.rho_end > 0) || s.rho_end > s.rho_begin) {
    throw ValidationError("need 0 < rho_end <= rho_begin");
  }
}

Eigen::VectorXd to_eigen(const std::vector<double>& x) {
  return Eigen::Map<const Eigen::VectorXd>(x.data(), static_cast<Eigen::Index>(x.size()));
}

// Powell's simplex-acceptability constants.
constexpr double kAlpha = 0.25;  // minimum vertex-to-face distance / rho
constexpr double kBeta = 2.1;    // maximum vertex-to-pivot distance / rho
constexpr double kGamma = 0.5;   // geometry step length / rho
constexpr double kGoodRatio = 0.1;
constexpr double kVeryGoodRatio = 0.7;

}  // namespace

std::vector<double> OptimizeResult::best_so_far() const {
  std::vector<double> b(trace.size());
  double m = 0;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    m = i == 0 ? trace[i] : std::min(m, trace[i]);
    b[i] = m;
  }
  return b;
}

OptimizerKind optimizer_from_name(std::string_view name) {
  if (name == "cobyla") return OptimizerKind::cobyla;
  if (name == "nelder_mead" || name == "nelder-mead") return OptimizerKind::nelder_mead;
  throw ValidationError(fmt::format("unknown optimizer '{}'", name));
}

std::string_view optimizer_name(OptimizerKind kind) {
  return kind == OptimizerKind::cobyla ? "cobyla" : "nelder_mead";
}

OptimizeResult cobyla_minimize(const Objective& f, std::vector<double> x0,
                               const OptimizerSettings& settings) {
  check_settings(settings);
  OptimizeResult out;
  Evaluator ev(f, settings.max_evaluations, out);
  const auto n = static_cast<Eigen::Index>(x0.size());
  const double rho_end = settings.rho_end;
  double rho = settings.rho_begin;

  std::vector<Eigen::VectorXd> sim(static_cast<std::size_t>(n) + 1);
  std::vector<double> fv(sim.size());
  sim[0] = to_eigen(x0);
  fv[0] = ev(sim[0]);
  if (n == 0) {
    out.converged = true;
    return out;
  }

  // (Re)builds the axis-aligned simplex around the pivot.
  auto build_simplex = [&]() -> bool {
    for (Eigen::Index i = 0; i < n; ++i) {
      if (!ev.can_evaluate()) return false;
      auto& v = sim[static_cast<std::size_t>(i) + 1];
      v = sim[0];
      v(i) += rho;
      fv[static_cast<std::size_t>(i) + 1] = ev(v);
    }
    return true;
  };
  if (!build_simplex()) return out;

  // rho is the resolution (only ever decreases); delta is the trust-region
  // radius, which may grow after very successful steps but never drops
  // below rho.
  double delta = rho;
  bool reduce_rho = false;
  Eigen::MatrixXd D(n, n);
  Eigen::VectorXd df(n);
  while (ev.can_evaluate()) {
    const auto best = static_cast<std::size_t>(
        std::min_element(fv.begin(), fv.end()) - fv.begin());
    std::swap(sim[0], sim[best]);
    std::swap(fv[0], fv[best]);
    for (Eigen::Index i = 0; i < n; ++i) {
      D.row(i) = (sim[static_cast<std::size_t>(i) + 1] - sim[0]).transpose();
      df(i) = fv[static_cast<std::size_t>(i) + 1] - fv[0];
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(D);
    if (!lu.isInvertible()) {
      if (!build_simplex()) break;
      continue;
    }
    const Eigen::MatrixXd Dinv = lu.inverse();
    const Eigen::VectorXd g = Dinv * df;

    // Geometry: vertex distances and vertex-to-opposite-face distances.
    Eigen::Index worst = -1;
    double worst_eta = kBeta * delta;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double eta = D.row(i).norm();
      if (eta > worst_eta) {
        worst_eta = eta;
        worst = i;
      }
    }
    if (worst < 0) {
      double worst_sig = kAlpha * delta;
      for (Eigen::Index i = 0; i < n; ++i) {
        const double sig = 1.0 / Dinv.col(i).norm();
        if (sig < worst_sig) {
          worst_sig = sig;
          worst = i;
        }
      }
    }
    if (worst >= 0) {
      Eigen::VectorXd dir = Dinv.col(worst).normalized() * (kGamma * delta);
      if (g.dot(dir) > 0) dir = -dir;
      const auto j = static_cast<std::size_t>(worst) + 1;
      sim[j] = sim[0] + dir;
      fv[j] = ev(sim[j]);
      continue;
    }

    if (reduce_rho) {
      reduce_rho = false;
      if (rho <= rho_end) {
        out.converged = true;
        break;
      }
      const double old_rho = rho;
      rho *= 0.5;
      if (rho <= 1.5 * rho_end) rho = rho_end;
      delta = std::max(0.5 * old_rho, rho);
      continue;
    }

    const double gnorm = g.norm();
    if (!(gnorm > 0)) {
      reduce_rho = true;
      continue;
    }
    const Eigen::VectorXd d = -delta / gnorm * g;
    const Eigen::VectorXd xt = sim[0] + d;
    const double ft = ev(xt);
    const double predicted = delta * gnorm;
    const double ratio = (fv[0] - ft) / predicted;
    const bool at_resolution = delta <= rho;
    if (ratio <= kGoodRatio) {
      delta *= 0.5;
    } else if (ratio > kVeryGoodRatio) {
      delta *= 2.0;
    }
    if (delta <= 1.5 * rho) delta = rho;
    reduce_rho = ratio <= kGoodRatio && at_resolution;

    // Replace the vertex whose removal keeps the simplex best conditioned,
    // favouring vertices far from the new point.
    const Eigen::VectorXd lambda = Dinv.transpose() * d;
    Eigen::Index drop = 0;
    double drop_score = -1;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double dist = (sim[static_cast<std::size_t>(i) + 1] - xt).norm() / delta;
      const double score = std::abs(lambda(i)) * std::max(1.0, dist * dist);
      if (score > drop_score) {
        drop_score = score;
        drop = i;
      }
    }
    sim[static_cast<std::size_t>(drop) + 1] = xt;
    fv[static_cast<std::size_t>(drop) + 1] = ft;
  }
  return out;
}

OptimizeResult nelder_mead_minimize(const Objective& f, std::vector<double> x0,
                                    const OptimizerSettings& settings) {
  check_settings(settings);
  OptimizeResult out;
  Evaluator ev(f, settings.max_evaluations, out);
  const auto n = static_cast<Eigen::Index>(x0.size());
  std::vector<Eigen::VectorXd> sim(static_cast<std::size_t>(n) + 1);
  std::vector<double> fv(sim.size());
  sim[0] = to_eigen(x0);
  fv[0] = ev(sim[0]);
  if (n == 0) {
    out.converged = true;
    return out;
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!ev.can_evaluate()) return out;
    auto& v = sim[static_cast<std::size_t>(i) + 1];
    v = sim[0];
    v(i) += settings.rho_begin;
    fv[static_cast<std::size_t>(i) + 1] = ev(v);
  }
  std::vector<std::size_t> order(sim.size());
  while (ev.can_evaluate()) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    const std::size_t lo = order.front();
    const std::size_t hi = order.back();
    const std::size_t second = order[order.size() - 2];
    double diameter = 0;
    for (const auto& v : sim) diameter = std::max(diameter, (v - sim[lo]).lpNorm<Eigen::Infinity>());
    if (diameter <= settings.rho_end) {
      out.converged = true;
      break;
    }
    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (std::size_t i = 0; i < sim.size(); ++i) {
      if (i != hi) centroid += sim[i];
    }
    centroid /= static_cast<double>(n);

    const Eigen::VectorXd xr = centroid + (centroid - sim[hi]);
    const double fr = ev(xr);
    if (fr < fv[lo]) {
      if (!ev.can_evaluate()) {
        sim[hi] = xr;
        fv[hi] = fr;
        break;
      }
      const Eigen::VectorXd xe = centroid + 2.0 * (centroid - sim[hi]);
      const double fe = ev(xe);
      if (fe < fr) {
        sim[hi] = xe;
        fv[hi] = fe;
      } else {
        sim[hi] = xr;
        fv[hi] = fr;
      }
      continue;
    }
    if (fr < fv[second]) {
      sim[hi] = xr;
      fv[hi] = fr;
      continue;
    }
    if (!ev.can_evaluate()) break;
    const bool outside = fr < fv[hi];
    const Eigen::VectorXd xc = outside ? Eigen::VectorXd(centroid + 0.5 * (xr - centroid))
                                       : Eigen::VectorXd(centroid + 0.5 * (sim[hi] - centroid));
    const double fc = ev(xc);
    if (fc < (outside ? fr : fv[hi])) {
      sim[hi] = xc;
      fv[hi] = fc;
      continue;
    }
    for (std::size_t i = 0; i < sim.size(); ++i) {
      if (i == lo) continue;
      if (!ev.can_evaluate()) break;
      sim[i] = sim[lo] + 0.5 * (sim[i] - sim[lo]);
      fv[i] = ev(sim[i]);
    }
  }
  return out;
}

OptimizeResult minimize_with(OptimizerKind kind, const Objective& f,
                             std::vector<double> x0,
                             const OptimizerSettings& settings) {
  return kind == OptimizerKind::cobyla
             ? cobyla_minimize(f, std::move(x0), settings)
             : nelder_mead_minimize(f, std::move(x0), settings);
}

}  // namespace vqesim
