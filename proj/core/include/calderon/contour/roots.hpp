#pragma once

#include <string_view>
#include <vector>

#include "calderon/symbol/operator_spec.hpp"

namespace calderon::contour {

enum class HalfPlane { kUpper, kLower, kReal };

std::string_view to_string(HalfPlane h);

struct CharacteristicRoot {
  cdouble xi;  // root of det a(m, xi) in the normal covariable
  int multiplicity = 1;
  HalfPlane half_plane = HalfPlane::kUpper;
};

struct RootOptions {
  bool throw_on_real = true;
  // A root is real when |Im xi| < real_tol * (1 + |m|).
  double real_tol = 1e-10;
  // Roots closer than group_tol * max(1, |xi|) are merged.
  double group_tol = 1e-7;
};

// All r*k roots (with multiplicity) of det sum_q A_q(m) (i xi)^q, from the
// eigenvalues lambda = i xi of the companion matrix. Upper half-plane roots
// are the decaying solutions e^{i xi x_n} at x_n -> +inf.
std::vector<CharacteristicRoot> characteristic_roots(
    const symbol::ModeSymbol& sym, const RootOptions& options = {});

// Eigenvalues of the companion matrix (lambda = i xi), unsorted.
std::vector<cdouble> companion_eigenvalues(const symbol::ModeSymbol& sym);

}  // namespace calderon::contour
