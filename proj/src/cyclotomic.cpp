#include "humbert/cyclotomic.hpp"

#include <cassert>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "humbert/numtheory.hpp"

namespace humbert {

namespace {

// Exact division of integer polynomials; divisor must be monic and divide
// evenly. Coefficients ascending.
std::vector<long long> poly_div_exact(std::vector<long long> num,
                                      const std::vector<long long>& den) {
  const int dn = static_cast<int>(num.size()) - 1;
  const int dd = static_cast<int>(den.size()) - 1;
  assert(den[dd] == 1);
  std::vector<long long> quot(dn - dd + 1, 0);
  for (int i = dn; i >= dd; --i) {
    const long long q = num[i];
    if (q == 0) continue;
    quot[i - dd] = q;
    for (int j = 0; j <= dd; ++j) num[i - dd + j] -= q * den[j];
  }
  for (long long r : num) {
    (void)r;
    assert(r == 0);
  }
  return quot;
}

}  // namespace

std::vector<long long> cyclotomic_polynomial(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: m >= 1");
  static std::map<int, std::vector<long long>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);

  auto compute = [](auto&& self, int n) -> const std::vector<long long>& {
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<long long> poly(n + 1, 0);  // x^n - 1
    poly[0] = -1;
    poly[n] = 1;
    for (long long d : divisors(n))
      if (d < n) poly = poly_div_exact(std::move(poly), self(self, static_cast<int>(d)));
    return cache.emplace(n, std::move(poly)).first->second;
  };
  return compute(compute, m);
}

CycInt::CycInt(int m) : m_(m), c_(m, 0) {
  if (m < 1) throw std::invalid_argument("CycInt: order must be >= 1");
}

CycInt CycInt::root_power(int m, long long k) {
  CycInt z(m);
  z.c_[mod_norm(k, m)] = 1;
  return z;
}

CycInt CycInt::operator+(const CycInt& o) const {
  if (m_ != o.m_) throw std::invalid_argument("CycInt: order mismatch");
  CycInt z(m_);
  for (int i = 0; i < m_; ++i) z.c_[i] = c_[i] + o.c_[i];
  return z;
}

CycInt CycInt::operator-(const CycInt& o) const { return *this + (-o); }

CycInt CycInt::operator-() const {
  CycInt z(m_);
  for (int i = 0; i < m_; ++i) z.c_[i] = -c_[i];
  return z;
}

std::vector<long long> CycInt::canonical() const {
  const std::vector<long long> phi = cyclotomic_polynomial(m_);
  const int k = static_cast<int>(phi.size()) - 1;  // phi(m), the degree
  std::vector<long long> rem = c_;
  for (int i = m_ - 1; i >= k; --i) {
    const long long q = rem[i];
    if (q == 0) continue;
    for (int j = 0; j <= k; ++j) rem[i - k + j] -= q * phi[j];
  }
  rem.resize(k);
  return rem;
}

bool CycInt::is_zero() const {
  for (long long x : canonical())
    if (x != 0) return false;
  return true;
}

bool CycInt::operator==(const CycInt& o) const { return (*this - o).is_zero(); }

std::complex<double> CycInt::to_complex() const {
  std::complex<double> z(0.0, 0.0);
  for (int j = 0; j < m_; ++j) {
    if (c_[j] == 0) continue;
    const double arg = 2.0 * std::numbers::pi * j / m_;
    z += static_cast<double>(c_[j]) *
         std::complex<double>(std::cos(arg), std::sin(arg));
  }
  return z;
}

}  // namespace humbert
