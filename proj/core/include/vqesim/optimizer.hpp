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

/**
 * @file
 * Derivative-free minimizers with an exact evaluation budget.
 */
#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace vqesim {

using Objective = std::function<double(std::span<const double>)>;

struct OptimizerSettings {
  /// Hard cap on objective evaluations (>= 1).
  std::size_t max_evaluations = 1000;
  /// Initial and final trust-region radius (COBYLA) or simplex scale
  /// (Nelder-Mead).
  double rho_begin = 0.5;
  double rho_end = 1e-6;
};

struct OptimizeResult {
  std::vector<double> x;      ///< best point seen
  double f = 0.0;             ///< objective at x
  std::vector<double> trace;  ///< objective value of every evaluation
  std::size_t n_evaluations = 0;
  /// Terminated by the radius/size criterion rather than the budget.
  bool converged = false;

  /// Running minimum of the trace.
  std::vector<double> best_so_far() const;
};

enum class OptimizerKind { cobyla, nelder_mead };

OptimizerKind optimizer_from_name(std::string_view name);
std::string_view optimizer_name(OptimizerKind kind);

/// Unconstrained COBYLA: linear interpolation on a simplex of n+1 points,
/// trust-region steps of radius rho along the negative model gradient,
/// Powell's geometry-improvement steps, and rho halving down to rho_end.
/// A non-finite objective value throws RuntimeError.
OptimizeResult cobyla_minimize(const Objective& f, std::vector<double> x0,
                               const OptimizerSettings& settings = {});

/// Nelder-Mead simplex (reflection 1, expansion 2, contraction 1/2,
/// shrink 1/2) with an axis-aligned initial simplex of edge rho_begin.
OptimizeResult nelder_mead_minimize(const Objective& f, std::vector<double> x0,
                                    const OptimizerSettings& settings = {});

OptimizeResult minimize_with(OptimizerKind kind, const Objective& f,
                             std::vector<double> x0,
                             const OptimizerSettings& settings = {});

}  // namespace vqesim
