#pragma once

#include <complex>
#include <vector>

namespace humbert {

/// Coefficients of the m-th cyclotomic polynomial, ascending degree,
/// computed by exact division of x^m - 1 by the proper-divisor factors.
std::vector<long long> cyclotomic_polynomial(int m);

/// Integer combination of powers of the m-th root of unity, stored mod
/// x^m - 1. Zero and equality tests reduce mod the m-th cyclotomic
/// polynomial, so distinct roots of unity never collide.
class CycInt {
 public:
  explicit CycInt(int m);

  static CycInt root_power(int m, long long k);

  int order() const { return m_; }
  const std::vector<long long>& coeffs() const { return c_; }

  CycInt operator+(const CycInt& o) const;
  CycInt operator-(const CycInt& o) const;
  CycInt operator-() const;

  bool is_zero() const;
  bool operator==(const CycInt& o) const;

  /// Canonical remainder mod Phi_m, length phi(m).
  std::vector<long long> canonical() const;

  std::complex<double> to_complex() const;

 private:
  int m_;
  std::vector<long long> c_;
};

}  // namespace humbert
