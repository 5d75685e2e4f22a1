#pragma once

#include <vector>

#include "calderon/symbol/operator_spec.hpp"

namespace calderon::symbol {

struct EllipticityReport {
  int samples = 0;
  double min_abs_det = 0.0;
  bool pass = false;
  int defect_cutoff = 0;
  // Retained modes whose full mode symbol has a real characteristic root.
  std::vector<Mode> defect_modes;
};

// Samples det a_k(xi) on the unit cosphere and scans modes |m|_inf <=
// defect_cutoff for real characteristic roots. Failure is reported, not
// thrown.
EllipticityReport check_ellipticity(const OperatorSpec& spec, int samples,
                                    int defect_cutoff = 16);

struct AgmonRay {
  double theta = 0.0;    // ray angle in [0, 2 pi)
  double epsilon = 0.0;  // half-width of the eigenvalue-free sector
  int eigenvalue_count = 0;
  double min_abs_eigenvalue = 0.0;
  double max_abs_eigenvalue = 0.0;
};

// Largest eigenvalue-free sector for the principal symbol on the cosphere.
// The sector found on `grid` is re-checked on a 4x finer grid and narrowed
// if needed. Throws Error(kNoFreeRay) when no sector of width >= 2 degrees
// remains.
AgmonRay find_agmon_ray(const OperatorSpec& spec, int grid);

// Deterministic, roughly uniform samples of the unit sphere in R^n
// (circle for n = 2, Fibonacci lattice for n = 3), given as (xi_n, xi').
std::vector<std::vector<double>> cosphere_samples(int n, int count);

}  // namespace calderon::symbol
