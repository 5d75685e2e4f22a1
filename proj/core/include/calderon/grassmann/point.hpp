#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "calderon/symbol/operator_spec.hpp"

namespace calderon::grassmann {

enum class ChiralSide { kLeft, kRight };

// Truncated point H_+^A: the Cauchy-data spaces L_+(m) for |m|_inf <= cutoff.
// Frames are stored in weighted coordinates (multiplied by W^{1/2}) with
// orthonormal columns, so W-inner products become Euclidean ones.
struct GrassmannPoint {
  std::shared_ptr<const symbol::OperatorSpec> spec;
  std::string label;
  int n = 2;
  int r = 1;  // fibre rank of the frames (|L| or |R| for chiral points)
  int k = 1;
  int cutoff = 0;
  double alpha = 0.5;
  std::optional<ChiralSide> chiral;

  std::vector<Mode> modes;     // retained modes, lexicographic
  std::vector<CMatrix> frames;  // one per retained mode, rk x d
  std::vector<Mode> defects;   // excluded modes

  int ambient_dim() const { return r * k; }
  // Index into `modes`, or -1 when the mode is not retained.
  std::ptrdiff_t find(const Mode& m) const;
  // Frame in raw Cauchy-data coordinates (W^{-1/2} Q).
  CMatrix raw_frame(std::size_t i) const;
  // Number of retained modes with a nonzero frame.
  std::size_t nontrivial_count() const;
};

struct AssembleOptions {
  bool strict = false;  // rethrow DefectMode instead of excluding the mode
};

GrassmannPoint assemble_point(const symbol::OperatorSpec& spec, int cutoff,
                              double alpha = 0.5,
                              const AssembleOptions& options = {});

// Hardy-space model: the dbar(0.5) point, nontrivial exactly at m <= 0.
GrassmannPoint krichever_reference(int cutoff, double alpha = 0.5);

// Projection of every frame onto the declared left or right component block,
// re-orthonormalized. Throws Error(kNoChiralStructure) when the spec carries
// no chiral blocks.
GrassmannPoint chiral_point(const symbol::OperatorSpec& spec, ChiralSide side,
                            int cutoff, double alpha = 0.5,
                            const AssembleOptions& options = {});
GrassmannPoint chiral_point(const GrassmannPoint& full, ChiralSide side);

}  // namespace calderon::grassmann
