#pragma once

#include <cstdint>

#include "shadow/core.hpp"
#include "shadow/exposure.hpp"

namespace shadow {

// State advanced by the explicit steppers. The exposure profile is recomputed
// from the pre-step field at the start of every step; the cache holds the
// profile used by the most recent update.
struct SchemeState {
  HeightField field;
  double t = 0.0;
  std::uint64_t step_index = 0;
  ExposureProfile profile_cache;
};

// Inputs of the linear-stability formulas.
struct DispersionParams {
  double R = 1.0;
  double nu = 1.0;
  double omega_bar = kPi;  // mean exposure angle of the flat interface
  double alpha = 0.7;      // linearization constant of the exposure response
};

// One explicit step of h_i += dt*R*norm_i + sqrt(2*D*dt/dx)*eps_i with
// norm the mean-normalized exposure profile and eps uniform on [-1,1).
// The spatial mean of the deterministic increment is exactly dt*R.
void step_pure_shadow(SchemeState& state, const ContinuumParams& params, RandomSource& rng);

// One explicit step of the anisotropic scheme: the bracket of surface-normal
// growth, discrete Laplacian diffusion, and noise, weighted by norm_i^g.
// Throws NumericsError naming the step if any height leaves [-1e12, 1e12]
// or turns non-finite.
void step_nonlinear(SchemeState& state, const ContinuumParams& params, RandomSource& rng);

// sigma(k) = 2*alpha*R*k/omega_bar - nu*k^2; perturbations at wavenumber k
// grow as exp(sigma*t) in the linearized dynamics.
double linear_growth_rate(double k, const DispersionParams& p);

// Marginal wavenumber k* = 2*alpha*R/(omega_bar*nu); modes below it grow.
double critical_wavenumber(const DispersionParams& p);

// Iterate the stepper selected by params.model from the initial field to
// t_end, sampling (t, W, mean h) at log-spaced steps and storing snapshots
// at the requested times.
RunRecord run_continuum(const ContinuumParams& params, const HeightField& initial);

}  // namespace shadow
