// Copyright 2026 The gsrdist Project Developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gsr/errors.hpp"

namespace gsr {

/// Model triple (mu, A, theta) of the drift-change detection problem.
/// theta = 0 is the pre-change regime (drift never sets in), theta = 1 the
/// post-change regime (drift from the start).  Every downstream quantity
/// depends on mu only through mu^2.
struct ModelParams {
  double mu = 0.0;
  double a_threshold = 0.0;
  int theta = 0;

  void validate() const {
    if (mu == 0.0 || !std::isfinite(mu)) {
      throw DomainError("ModelParams: mu must be nonzero and finite");
    }
    if (!(a_threshold > 0.0)) {
      throw DomainError("ModelParams: threshold A must be positive");
    }
    if (theta != 0 && theta != 1) {
      throw DomainError("ModelParams: theta must be 0 or 1");
    }
  }

  double mu_sq() const { return mu * mu; }
  /// Whittaker argument u(x) = 2/(mu^2 x).
  double u_at(double x) const { return 2.0 / (mu_sq() * x); }
  double u_threshold() const { return u_at(a_threshold); }
};

/// Both coefficient forms attached to one eigenvalue root.
struct ModeWeight {
  /// Survival-series coefficient 4 xi / ((1 -/+ xi^2) dW/db), certified real.
  double survival_coeff = 0.0;
  /// Transition-density normalization constant (C-tilde squared).
  double c_tilde_sq = 0.0;
  /// Relative imaginary residue left over when certifying (i) real.
  double imag_residual = 0.0;
};

/// Cached eigen-decomposition for one (mu, A, theta): the optional real
/// root alpha0, the sorted imaginary-axis roots beta_n, and the per-mode
/// weights.  Immutable once built; safe to share across threads.
struct Spectrum {
  ModelParams params;
  std::optional<double> alpha0;     // only possibly present when theta = 0
  std::vector<double> betas;        // strictly increasing, length n_modes
  std::vector<double> weights_survival;      // [alpha0 mode] + beta modes
  std::vector<double> weights_density_norm;  // same layout
  int n_modes = 0;
  double residual_max = 0.0;
  std::vector<std::string> warnings;

  int total_modes() const { return n_modes + (alpha0 ? 1 : 0); }

  /// Temporal decay rate of mode i (layout order): mu^2 (1 + beta^2)/8 for
  /// beta modes, mu^2 (1 - alpha0^2)/8 for the alpha0 mode.
  double rate(int i) const {
    const double m8 = params.mu_sq() / 8.0;
    if (alpha0) {
      if (i == 0) return m8 * (1.0 - *alpha0 * *alpha0);
      return m8 * (1.0 + betas[i - 1] * betas[i - 1]);
    }
    return m8 * (1.0 + betas[i] * betas[i]);
  }

  /// Eigenvalue of mode i, lambda_i = -rate(i).
  double eigenvalue(int i) const { return -rate(i); }

  /// Whittaker second index of mode i as (is_alpha, value).
  bool mode_is_alpha(int i) const { return alpha0 && i == 0; }
  double mode_root(int i) const {
    if (mode_is_alpha(i)) return *alpha0;
    return betas[alpha0 ? i - 1 : i];
  }
};

/// W_{1-theta, i beta/2}(2/(mu^2 A)); real-valued and continuous in beta.
double characteristic_fn(const ModelParams& params, double beta);

/// W_{1, alpha/2}(2/(mu^2 A)) for the pre-change real root; throws
/// RegimeError when theta = 1 (the equation is inconsistent there).
double characteristic_fn_real(const ModelParams& params, double alpha);

/// The at-most-one root of characteristic_fn_real in [0, 1], if a sign
/// change exists on a 10^4-point scan; polished to |dalpha| <= 1e-12.
std::optional<double> find_alpha0(const ModelParams& params);

/// First n_modes roots of characteristic_fn, strictly increasing, each
/// polished to |dbeta| <= 1e-12.  Brackets are seeded by sign changes of
/// the amplitude-free cosine of the Whittaker phase.  Throws
/// BracketExhaustionError if the scan ceiling is reached first.
std::vector<double> find_betas(const ModelParams& params, int n_modes);

/// Both coefficient forms for one root (alpha or beta, selected by
/// is_alpha).  The root must satisfy its characteristic equation.
ModeWeight mode_weight(const ModelParams& params, double root, bool is_alpha);

/// Assembles the full spectrum; deterministic for fixed inputs.
Spectrum build_spectrum(const ModelParams& params, int n_modes = 500);

/// Fixed-field-order JSON (numbers as shortest round-trip decimals).
std::string spectrum_to_json(const Spectrum& s);
Spectrum spectrum_from_json(const std::string& text);

}  // namespace gsr
