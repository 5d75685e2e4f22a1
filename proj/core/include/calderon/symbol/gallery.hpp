#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "calderon/symbol/operator_spec.hpp"

namespace calderon::symbol {

using GalleryParams = std::map<std::string, double>;

// Named model operators on the flat half-cylinder (tau: tangential
// coordinate(s), sigma_i: Pauli matrices):
//
//   dbar(mu)            n=2 r=1 k=1   d_n + i d_tau + mu
//   twisted_dbar(mu,d)  n=2 r=1 k=1   d_n + i d_tau + (mu + d)
//   laplace_mass(mu)    n=2 r=1 k=2   -d_n^2 - d_tau^2 + mu
//   dirac2(mu,v)        n=2 r=2 k=1   s1 d_n + s2 d_tau + i (mu s3 + v)
//   dirac3(mu,v)        n=3 r=2 k=1   s1 d_n + s2 d_1 + s3 d_2 + (mu + i v)
//
// Missing parameters take the defaults listed by gallery_entries().
// "custom" operators come from a coefficient table (spec file).
OperatorSpec build_gallery(std::string_view name, const GalleryParams& params = {});

struct GalleryEntry {
  std::string name;
  GalleryParams defaults;
  std::string formula;
  std::string exercises;
};

const std::vector<GalleryEntry>& gallery_entries();

// Deterministic human-readable listing of gallery_entries().
std::string list_gallery();

}  // namespace calderon::symbol
