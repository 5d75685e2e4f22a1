#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace calderon {

using cdouble = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr cdouble kI{0.0, 1.0};

// Tangential Fourier frequency on the flat torus: one integer per boundary
// coordinate.
class Mode {
 public:
  Mode() = default;
  explicit Mode(std::vector<int> components) : m_(std::move(components)) {}
  Mode(std::initializer_list<int> components) : m_(components) {}

  // Frequency m along the first tangential axis, zero elsewhere.
  static Mode along_axis(std::size_t dims, int m) {
    std::vector<int> c(dims, 0);
    if (dims > 0) c[0] = m;
    return Mode(std::move(c));
  }

  std::size_t dims() const { return m_.size(); }
  int operator[](std::size_t i) const { return m_[i]; }
  const std::vector<int>& components() const { return m_; }

  double norm_squared() const {
    double s = 0.0;
    for (int v : m_) s += static_cast<double>(v) * v;
    return s;
  }
  double norm() const;
  int norm_inf() const {
    int s = 0;
    for (int v : m_) s = std::max(s, v < 0 ? -v : v);
    return s;
  }

  std::string to_string() const;

  friend bool operator==(const Mode&, const Mode&) = default;
  friend auto operator<=>(const Mode&, const Mode&) = default;

 private:
  std::vector<int> m_;
};

}  // namespace calderon
