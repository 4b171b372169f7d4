#pragma once

// Element arithmetic for the two field families and the dense working
// matrices the elimination routines run on.

#include <cstdint>
#include <utility>
#include <vector>

#include "zzc/error.hpp"
#include "zzc/exactlin.hpp"

namespace zzc::detail {

struct PrimeOps {
  using value = std::int64_t;
  static constexpr std::int64_t kSmall = std::int64_t{1} << 62;
  std::int64_t p;

  value zero() const { return 0; }
  value one() const { return 1 % p; }
  bool is_zero(value a) const { return a == 0; }
  value add(value a, value b) const {
    const value s = a + b;
    return s >= p ? s - p : s;
  }
  value sub(value a, value b) const {
    const value s = a - b;
    return s < 0 ? s + p : s;
  }
  value neg(value a) const { return a == 0 ? 0 : p - a; }
  value mul(value a, value b) const {
    return static_cast<value>((static_cast<__int128>(a) * b) % p);
  }
  value pow(value base, std::uint64_t e) const {
    value result = one();
    while (e > 0) {
      if (e & 1U) result = mul(result, base);
      base = mul(base, base);
      e >>= 1U;
    }
    return result;
  }
  value inv(value a) const { return pow(a, static_cast<std::uint64_t>(p - 2)); }

  value reduce(const BigInt& n) const {
    BigInt r = n % p;
    if (r < 0) r += p;
    return static_cast<value>(r);
  }
  value from(const Rational& q) const {
    const auto& num = boost::multiprecision::numerator(q);
    if (boost::multiprecision::denominator(q) == 1 && num > -kSmall && num < kSmall) {
      const value r = static_cast<value>(num) % p;
      return r < 0 ? r + p : r;
    }
    const value den = reduce(boost::multiprecision::denominator(q));
    if (den == 0) {
      throw Error(ErrorCode::InvalidInput,
                  "denominator of " + to_string(q) + " vanishes in F_" + std::to_string(p));
    }
    return mul(reduce(boost::multiprecision::numerator(q)), inv(den));
  }
  Rational to_rational(value a) const { return Rational(a); }
};

struct RationalOps {
  using value = Rational;

  value zero() const { return Rational(0); }
  value one() const { return Rational(1); }
  bool is_zero(const value& a) const { return a == 0; }
  value add(const value& a, const value& b) const { return a + b; }
  value sub(const value& a, const value& b) const { return a - b; }
  value neg(const value& a) const { return -a; }
  value mul(const value& a, const value& b) const { return a * b; }
  value inv(const value& a) const { return 1 / a; }
  value from(const Rational& q) const { return q; }
  Rational to_rational(const value& a) const { return a; }
};

template <class F>
struct Dense {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<typename F::value> a;

  typename F::value& operator()(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const typename F::value& operator()(std::size_t r, std::size_t c) const {
    return a[r * cols + c];
  }
};

inline Dense<PrimeOps> load(const PrimeOps&, const Mat& m) {
  return {m.rows(), m.cols(), m.residues()};
}
inline Dense<RationalOps> load(const RationalOps&, const Mat& m) {
  return {m.rows(), m.cols(), m.rationals()};
}
inline Mat store(const PrimeOps& f, Dense<PrimeOps> d) {
  return Mat::from_residues(d.rows, d.cols, std::move(d.a),
                            FieldSpec{static_cast<std::uint64_t>(f.p)});
}
inline Mat store(const RationalOps&, Dense<RationalOps> d) {
  return Mat::from_rationals(d.rows, d.cols, std::move(d.a));
}

template <class Fn>
decltype(auto) dispatch(FieldSpec field, Fn&& fn) {
  if (field.is_rational()) return fn(RationalOps{});
  return fn(PrimeOps{static_cast<std::int64_t>(field.characteristic)});
}

/// In-place reduced row echelon form with first-nonzero pivoting.
/// Returns the pivot column of each nonzero row, in order.
template <class F>
std::vector<std::size_t> rref(const F& f, Dense<F>& m, std::size_t col_limit) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < col_limit && row < m.rows; ++col) {
    std::size_t sel = row;
    while (sel < m.rows && f.is_zero(m(sel, col))) ++sel;
    if (sel == m.rows) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < m.cols; ++c) std::swap(m(sel, c), m(row, c));
    }
    const auto inv = f.inv(m(row, col));
    for (std::size_t c = col; c < m.cols; ++c) m(row, c) = f.mul(m(row, c), inv);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == row || f.is_zero(m(r, col))) continue;
      const auto factor = m(r, col);
      for (std::size_t c = col; c < m.cols; ++c) {
        m(r, c) = f.sub(m(r, c), f.mul(factor, m(row, c)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class F>
std::vector<std::size_t> rref(const F& f, Dense<F>& m) {
  return rref(f, m, m.cols);
}

}  // namespace zzc::detail
