#include "calderon/cauchy/companion.hpp"

#include <string>

#include "calderon/contour/spectral_split.hpp"
#include "calderon/error.hpp"

namespace calderon::cauchy {

std::string_view to_string(Side side) {
  return side == Side::kPlus ? "plus" : "minus";
}

Side side_from_string(std::string_view s) {
  if (s == "plus" || s == "+") return Side::kPlus;
  if (s == "minus" || s == "-") return Side::kMinus;
  throw Error(ErrorCode::kParseError, "side must be plus or minus, got '" +
                                          std::string(s) + "'");
}

CMatrix companion_matrix(const symbol::ModeSymbol& sym) {
  const int r = sym.r;
  const int k = sym.k;
  Eigen::PartialPivLU<CMatrix> lead(sym.A(k));
  CMatrix c = CMatrix::Zero(r * k, r * k);
  for (int j = 0; j + 1 < k; ++j) {
    c.block(j * r, (j + 1) * r, r, r).setIdentity();
  }
  for (int j = 0; j < k; ++j) {
    c.block((k - 1) * r, j * r, r, r) = -lead.solve(sym.A(j));
  }
  return c;
}

CauchyFrame cauchy_frame_oracle(const symbol::ModeSymbol& sym, Side side) {
  contour::SpectralSplit split;
  try {
    split = contour::spectral_split(companion_matrix(sym));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kDefectMode) throw;
    throw Error(ErrorCode::kDefectMode,
                "mode " + sym.m.to_string() + " is a defect mode: " + e.what());
  }
  CauchyFrame out;
  out.m = sym.m;
  out.side = side;
  out.frame = side == Side::kPlus ? split.stable_frame : split.unstable_frame;
  return out;
}

}  // namespace calderon::cauchy
