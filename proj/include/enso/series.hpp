#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace enso {

/// Dense truncated power series about an expansion point t0.
///
/// Coefficient k multiplies (t - t0)^k. The series always holds exactly
/// cap()+1 coefficients; every operation discards degrees above cap().
/// Values are immutable after construction.
class SeriesPoly {
 public:
  /// Throws UsageError on an empty coefficient list or a non-finite value.
  explicit SeriesPoly(std::vector<double> coeffs, double t0 = 0.0);

  static SeriesPoly zero(int cap, double t0 = 0.0);
  static SeriesPoly constant(double value, int cap, double t0 = 0.0);

  [[nodiscard]] int cap() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] double t0() const noexcept { return t0_; }
  [[nodiscard]] std::span<const double> coeffs() const noexcept { return coeffs_; }
  [[nodiscard]] double operator[](std::size_t k) const { return coeffs_.at(k); }

  /// Highest index holding a nonzero coefficient, or -1 for the zero series.
  [[nodiscard]] int degree() const noexcept;
  /// Lowest index holding a nonzero coefficient, or -1 for the zero series.
  [[nodiscard]] int valuation() const noexcept;

  friend bool operator==(const SeriesPoly&, const SeriesPoly&) = default;

 private:
  std::vector<double> coeffs_;
  double t0_;
};

/// Coefficient a at degree m, zeros elsewhere. Throws UsageError unless 0 <= m <= cap.
[[nodiscard]] SeriesPoly monomial(double a, int m, int cap, double t0 = 0.0);

[[nodiscard]] SeriesPoly add(const SeriesPoly& a, const SeriesPoly& b);
[[nodiscard]] SeriesPoly subtract(const SeriesPoly& a, const SeriesPoly& b);
[[nodiscard]] SeriesPoly scale(const SeriesPoly& a, double c);

/// Cauchy product truncated at cap.
[[nodiscard]] SeriesPoly cauchy_mul(const SeriesPoly& a, const SeriesPoly& b);
[[nodiscard]] SeriesPoly cube(const SeriesPoly& a);

/// Term-wise integral from t0 with zero constant; the top coefficient of `a`
/// has nowhere to go and is dropped.
[[nodiscard]] SeriesPoly antiderivative(const SeriesPoly& a);
[[nodiscard]] SeriesPoly derivative(const SeriesPoly& a);

/// Horner evaluation at t.
[[nodiscard]] double eval(const SeriesPoly& a, double t);

/// Copy of `a` with every coefficient above `degree` set to zero.
[[nodiscard]] SeriesPoly truncate(const SeriesPoly& a, int degree);

/// Degree-k coefficient of the cube of the series whose leading coefficients
/// are `w` (only w[0..k] are read). Two nested Cauchy sums, O(k^2).
[[nodiscard]] double cube_coefficient(std::span<const double> w, std::size_t k);

inline SeriesPoly operator+(const SeriesPoly& a, const SeriesPoly& b) { return add(a, b); }
inline SeriesPoly operator-(const SeriesPoly& a, const SeriesPoly& b) { return subtract(a, b); }
inline SeriesPoly operator*(double c, const SeriesPoly& a) { return scale(a, c); }
inline SeriesPoly operator*(const SeriesPoly& a, const SeriesPoly& b) { return cauchy_mul(a, b); }

}  // namespace enso
