#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace green {

using Rat = mpq_class;
using Int = mpz_class;

struct DivisionByZero : std::runtime_error {
  DivisionByZero() : std::runtime_error("division by zero in Q(q)") {}
};

class CycField;

/// An element of Q(q) = Q[T]/(Phi_n), stored as a residue of degree < phi(n).
/// Equality is coefficient-wise; there is no floating point anywhere.
class CycNum {
public:
  CycNum() : F_(nullptr) {}

  const CycField* field() const { return F_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator/=(const CycNum& o);  // throws DivisionByZero

  CycNum inverse() const;
  CycNum pow(long e) const;

  bool operator==(const CycNum& o) const { return c_ == o.c_; }
  bool operator!=(const CycNum& o) const { return c_ != o.c_; }
  // Arbitrary total order, used only for canonical container keys.
  bool operator<(const CycNum& o) const;

  std::string str() const;  // human-readable polynomial in q

private:
  friend class CycField;
  CycNum(const CycField* F, std::vector<Rat> c) : F_(F), c_(std::move(c)) {}

  const CycField* F_;
  std::vector<Rat> c_;
};

CycNum operator+(CycNum a, const CycNum& b);
CycNum operator-(CycNum a, const CycNum& b);
CycNum operator*(CycNum a, const CycNum& b);
CycNum operator/(CycNum a, const CycNum& b);

/// The cyclotomic field Q(q) with q of exact order n. Phi_n is obtained by
/// iterated exact division of T^n - 1 by the Phi_d for proper divisors d.
class CycField {
public:
  explicit CycField(int n);

  int order() const { return n_; }
  int degree() const { return deg_; }
  const std::vector<Int>& modulus() const { return phi_; }

  CycNum zero() const;
  CycNum one() const;
  CycNum from_rat(const Rat& r) const;
  CycNum from_long(long v) const { return from_rat(Rat(v)); }
  CycNum from_coeffs(std::vector<Rat> c) const;  // must have size degree()

  /// q^e for any integer e (reduced mod n).
  CycNum q_power(long e) const;
  CycNum q() const { return q_power(1); }

  /// (i)_q = 1 + q + ... + q^{i-1}, with (0)_q = 0.
  CycNum q_int(long i) const;

  /// alpha_i(l) = (i)_q (1 - q^{i-l}).
  CycNum alpha(long i, long l) const;

  /// Reduce an arbitrary-degree rational polynomial mod Phi_n.
  std::vector<Rat> reduce(std::vector<Rat> p) const;

private:
  friend class CycNum;
  int n_;
  int deg_;
  std::vector<Int> phi_;                    // monic, length deg_+1
  std::vector<std::vector<Rat>> qpow_;      // canonical forms of q^0..q^{n-1}
};

}  // namespace green
