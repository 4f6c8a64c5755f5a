#pragma once

/**
 * @file cyclotomic.hpp
 * @brief Exact arithmetic in Z[x]/(x^r - 1), the ring generated by an
 *        abstract r-th root of unity.
 *
 * Values are held as raw integer coefficient vectors of length r and are
 * only reduced modulo the r-th cyclotomic polynomial when a canonical form
 * is needed (equality, integer extraction, printing).  Since the power
 * basis 1, w, ..., w^{phi(r)-1} is a Z-basis of Z[w], the reduced form is
 * a faithful canonical representative.  No floating point anywhere.
 */

#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace wreath {

namespace checked {

// Overflow-checked 64-bit arithmetic.  All counting and coefficient math in
// the library funnels through these; silent wraparound is never acceptable.
inline long long add(long long a, long long b) {
  long long out;
  if (__builtin_add_overflow(a, b, &out))
    throw std::overflow_error("integer overflow in addition");
  return out;
}

inline long long sub(long long a, long long b) {
  long long out;
  if (__builtin_sub_overflow(a, b, &out))
    throw std::overflow_error("integer overflow in subtraction");
  return out;
}

inline long long mul(long long a, long long b) {
  long long out;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error("integer overflow in multiplication");
  return out;
}

inline long long pow(long long base, int exp) {
  if (exp < 0) throw std::invalid_argument("checked::pow: negative exponent");
  long long out = 1;
  for (int i = 0; i < exp; ++i) out = mul(out, base);
  return out;
}

inline long long factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative number");
  long long out = 1;
  for (int i = 2; i <= n; ++i) out = mul(out, i);
  return out;
}

}  // namespace checked

// Integer polynomials as ascending coefficient vectors.
using IntPoly = std::vector<long long>;

inline IntPoly poly_trim(IntPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      out[i + j] = checked::add(out[i + j], checked::mul(a[i], b[j]));
  return poly_trim(std::move(out));
}

// Division by a monic divisor; the remainder has degree < deg(div).
inline std::pair<IntPoly, IntPoly> poly_divmod_monic(IntPoly num,
                                                     const IntPoly& div) {
  if (div.empty() || div.back() != 1)
    throw std::invalid_argument("poly_divmod_monic: divisor must be monic");
  num = poly_trim(std::move(num));
  const size_t dd = div.size() - 1;
  if (num.size() <= dd) return {IntPoly{}, std::move(num)};
  IntPoly quot(num.size() - dd, 0);
  for (size_t i = num.size(); i-- > dd;) {
    const long long c = num[i];
    if (c == 0) continue;
    quot[i - dd] = c;
    for (size_t j = 0; j <= dd; ++j)
      num[i - dd + j] = checked::sub(num[i - dd + j], checked::mul(c, div[j]));
  }
  return {poly_trim(std::move(quot)), poly_trim(std::move(num))};
}

/// r-th cyclotomic polynomial, by exact division of x^r - 1 by all proper
/// divisors' cyclotomic polynomials.  Cached; safe for concurrent callers.
inline const IntPoly& cyclotomic_polynomial(int r) {
  if (r < 1) throw std::invalid_argument("cyclotomic_polynomial: r must be >= 1");
  static std::map<int, IntPoly> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(r);
  if (it != cache.end()) return it->second;
  for (int m = 1; m <= r; ++m) {
    if (cache.count(m)) continue;
    IntPoly num(m + 1, 0);
    num[0] = -1;
    num[m] = 1;  // x^m - 1
    IntPoly acc{1};
    for (int d = 1; d < m; ++d)
      if (m % d == 0) acc = poly_mul(acc, cache.at(d));
    auto [quot, rem] = poly_divmod_monic(std::move(num), acc);
    if (!rem.empty())
      throw std::logic_error("cyclotomic recursion: division not exact");
    cache.emplace(m, std::move(quot));
  }
  return cache.at(r);
}

/**
 * An element of Z[x]/(x^r - 1).  The stored coefficient vector always has
 * length exactly r and is not reduced; canonical() performs the reduction
 * modulo the r-th cyclotomic polynomial on demand.
 */
class CycEl {
 public:
  CycEl() : r_(1), coeffs_(1, 0) {}

  explicit CycEl(int r) : r_(check_r(r)), coeffs_(r, 0) {}

  CycEl(int r, std::vector<long long> coeffs)
      : r_(check_r(r)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != static_cast<size_t>(r_))
      throw std::invalid_argument("CycEl: coefficient vector must have length r");
  }

  static CycEl integer(int r, long long v) {
    CycEl out(r);
    out.coeffs_[0] = v;
    return out;
  }

  /// w^k, exponent taken mod r (negative exponents allowed).
  static CycEl omega_pow(int r, long long k) {
    CycEl out(r);
    long long e = ((k % r) + r) % r;
    out.coeffs_[static_cast<size_t>(e)] = 1;
    return out;
  }

  int modulus() const { return r_; }
  const std::vector<long long>& raw() const { return coeffs_; }

  /// Reduced representative mod Phi_r: ascending coefficients, degree
  /// < phi(r), trailing zeros stripped.  The zero element reduces to {}.
  IntPoly canonical() const {
    return poly_divmod_monic(coeffs_, cyclotomic_polynomial(r_)).second;
  }

  bool is_zero() const { return canonical().empty(); }

  bool is_integer() const { return canonical().size() <= 1; }

  /// Extracts the value when it lies in Z, else throws std::domain_error.
  long long as_integer() const {
    IntPoly c = canonical();
    if (c.size() > 1)
      throw std::domain_error("CycEl::as_integer: value is not a rational integer");
    return c.empty() ? 0 : c[0];
  }

  /// Galois conjugate w -> w^{-1}: reverses the coefficient indices.
  CycEl conj() const {
    CycEl out(r_);
    for (int j = 0; j < r_; ++j)
      out.coeffs_[static_cast<size_t>((r_ - j) % r_)] = coeffs_[j];
    return out;
  }

  CycEl& operator+=(const CycEl& o) {
    check_same(o);
    for (int j = 0; j < r_; ++j)
      coeffs_[j] = checked::add(coeffs_[j], o.coeffs_[j]);
    return *this;
  }

  CycEl& operator-=(const CycEl& o) {
    check_same(o);
    for (int j = 0; j < r_; ++j)
      coeffs_[j] = checked::sub(coeffs_[j], o.coeffs_[j]);
    return *this;
  }

  /// Product in Z[x]/(x^r - 1): cyclic convolution of coefficients.
  CycEl& operator*=(const CycEl& o) {
    check_same(o);
    std::vector<long long> out(r_, 0);
    for (int i = 0; i < r_; ++i) {
      if (coeffs_[i] == 0) continue;
      for (int j = 0; j < r_; ++j) {
        if (o.coeffs_[j] == 0) continue;
        const int k = (i + j) % r_;
        out[k] = checked::add(out[k], checked::mul(coeffs_[i], o.coeffs_[j]));
      }
    }
    coeffs_ = std::move(out);
    return *this;
  }

  CycEl& operator*=(long long s) {
    for (auto& c : coeffs_) c = checked::mul(c, s);
    return *this;
  }

  friend CycEl operator+(CycEl a, const CycEl& b) { return a += b; }
  friend CycEl operator-(CycEl a, const CycEl& b) { return a -= b; }
  friend CycEl operator*(CycEl a, const CycEl& b) { return a *= b; }
  friend CycEl operator*(CycEl a, long long s) { return a *= s; }
  friend CycEl operator*(long long s, CycEl a) { return a *= s; }
  friend CycEl operator-(const CycEl& a) { return a * -1ll; }

  /// Exact division of every canonical coefficient; throws if not exact.
  CycEl divide_exact(long long k) const {
    if (k == 0) throw std::invalid_argument("CycEl::divide_exact: division by zero");
    IntPoly c = canonical();
    CycEl out(r_);
    for (size_t j = 0; j < c.size(); ++j) {
      if (c[j] % k != 0)
        throw std::domain_error("CycEl::divide_exact: division is not exact");
      out.coeffs_[j] = c[j] / k;
    }
    return out;
  }

  // Equality is mathematical: raw vectors may differ by a multiple of Phi_r.
  friend bool operator==(const CycEl& a, const CycEl& b) {
    if (a.r_ != b.r_) return false;
    return a.canonical() == b.canonical();
  }
  friend bool operator!=(const CycEl& a, const CycEl& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const CycEl& x) {
    return os << x.str();
  }

  /// Canonical-form pretty printer, e.g. "0", "2", "-1+w", "w^2".
  std::string str() const {
    IntPoly c = canonical();
    if (c.empty()) return "0";
    std::string out;
    for (size_t j = 0; j < c.size(); ++j) {
      if (c[j] == 0) continue;
      long long v = c[j];
      if (out.empty()) {
        if (v < 0) out += "-";
      } else {
        out += (v < 0) ? "-" : "+";
      }
      long long av = v < 0 ? -v : v;
      const bool unit = (av == 1) && j > 0;
      if (!unit) out += std::to_string(av);
      if (j >= 1) out += "w";
      if (j >= 2) out += "^" + std::to_string(j);
    }
    return out.empty() ? "0" : out;
  }

 private:
  static int check_r(int r) {
    if (r < 1) throw std::invalid_argument("CycEl: modulus r must be >= 1");
    return r;
  }
  void check_same(const CycEl& o) const {
    if (r_ != o.r_)
      throw std::invalid_argument("CycEl: modulus mismatch between operands");
  }

  int r_;
  std::vector<long long> coeffs_;
};

/// sum_{j=0}^{r-1} w^{j a} as an exact element; reduces to r when r | a
/// and to 0 otherwise.
inline CycEl root_of_unity_sum(int r, long long a) {
  CycEl out(r);
  for (long long j = 0; j < r; ++j) out += CycEl::omega_pow(r, j * a);
  return out;
}

}  // namespace wreath
