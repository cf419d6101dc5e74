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

#include <complex>

#include "gsr/errors.hpp"

namespace gsr::sf {

using Cplx = std::complex<double>;

/// Index pair (a, b) of the Whittaker functions M_{a,b} and W_{a,b}.
/// In this project b is always purely real (in [0, 1/2]) or purely
/// imaginary (i*beta/2); mixed indices are rejected.
struct WhittakerIndices {
  double a;
  Cplx b;

  bool valid() const {
    return b.real() * b.imag() == 0.0;
  }
};

/// Complex Gamma function.  Lanczos (g = 7, 9 coefficients) with reflection
/// for re(z) < 1/2; >= 12 significant digits for |z| <= 50, |im z| <= 50.
/// Throws PoleError within 1e-12 of a nonpositive integer.
Cplx gamma_complex(Cplx z);

/// log Gamma; exp(log_gamma_complex(z)) == gamma_complex(z).  Real and
/// correctly branched on the positive real axis; off-axis the imaginary
/// part may differ from the principal branch by a multiple of 2*pi (the
/// consumers here use it through exp() and cos() only).
Cplx log_gamma_complex(Cplx z);

/// Kummer confluent function M(a, b, z) for real z > 0.  Ascending series
/// with compensated summation below the crossover, large-z asymptotic form
/// above it (with a fallback to the convergent series when the asymptotic
/// tail cannot reach tolerance).
Cplx kummer_m(Cplx a, Cplx b, double z);

/// Tricomi function U(a, b, z) for real z > 0.
/// The elementary case b = a + 1 (U = z^-a) is evaluated in closed form.
/// Otherwise throws DegenerateIndexError when b is within 1e-9 of an
/// integer; callers resolve that by the perturb-and-average policy.
Cplx tricomi_u(Cplx a, Cplx b, double z);

/// Whittaker M_{a,b}(z) = e^{-z/2} z^{b+1/2} M(1/2+b-a, 1+2b, z), z > 0.
Cplx whittaker_m(const WhittakerIndices& idx, double z);

/// d/dz of Whittaker M via the Kummer contiguous relation
/// a M(a+1,b,z) = a M(a,b,z) + z M'(a,b,z).
Cplx whittaker_m_dz(const WhittakerIndices& idx, double z);

/// Whittaker W_{a,b}(z), z > 0.  Real-valued output for b purely real or
/// purely imaginary; symmetric in b.  Degenerate (integer 1+2b) indices
/// are resolved internally by averaging two perturbed evaluations.
Cplx whittaker_w(const WhittakerIndices& idx, double z);

/// e^{z/2} W_{a,b}(z).  Stable for arbitrarily large z (the exponential
/// prefactor never materializes); this is the form every survival-series
/// evaluation goes through.
Cplx whittaker_w_scaled(const WhittakerIndices& idx, double z);

/// Log-magnitude / phase decomposition of W_{a, i*beta/2}(z) for beta > 0:
///   W = 2 * exp(log_mag) * cos(phase).
/// cos(phase) is the amplitude-free characteristic function used for
/// eigenvalue bracketing; phase is continuous in beta only modulo 2*pi.
struct WPhase {
  double log_mag;
  double phase;
};
WPhase whittaker_w_phase(double a, double beta, double z);

/// dW_{a,b}(z)/db, central difference with step 1e-5*max(1,|b|) along the
/// axis of b plus one Richardson extrapolation level.  Returns 0 at b = 0
/// (W is even in b).
Cplx whittaker_w_db(const WhittakerIndices& idx, double z);

/// dW_{a,b}(z)/dz from two W evaluations via the index-lowering identity
/// (1/2-a-b)(1/2-a+b) W_{a-1,b}(z) = (z/2-a) W_{a,b}(z) + z dW/dz.
Cplx whittaker_w_dz(const WhittakerIndices& idx, double z);

/// Exponential integral Ei(x), principal value for x > 0.  >= 12
/// significant digits for |x| in [1e-8, 700].  Throws DomainError at 0.
double exp_integral_ei(double x);

}  // namespace gsr::sf
