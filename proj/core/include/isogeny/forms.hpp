#pragma once

// Binary quadratic forms a*x^2 + b*x*y + c*y^2 and their reduction.

#include "isogeny/arith.hpp"

namespace isogeny {

struct Form {
  BigInt a;
  BigInt b;
  BigInt c;

  BigInt discriminant() const { return b * b - 4 * a * c; }
  friend bool operator==(const Form& x, const Form& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c;
  }
};

/// Integer 2x2 matrix acting on variables: (f.M)(x, y) = f(M * (x, y)^T).
struct Mat2 {
  BigInt m00 = 1, m01 = 0, m10 = 0, m11 = 1;

  /// this = this * [[n00, n01], [n10, n11]]
  void right_multiply(const BigInt& n00, const BigInt& n01, const BigInt& n10, const BigInt& n11);
};

/// f(M * (x, y)^T) as a form.
Form transform(const Form& f, const Mat2& M);

BigInt evaluate(const Form& f, const BigInt& x, const BigInt& y);

/// Dirichlet composition of two primitive forms of equal discriminant with
/// a > 0, returned unreduced.
Form compose(const Form& f, const Form& g);

/// Positive definite reduction: |b| <= a <= c, with b >= 0 if |b| = a or a = c.
Form reduce_definite(Form f, Mat2* track = nullptr);
bool is_reduced_definite(const Form& f);

/// Indefinite forms; s = isqrt(discriminant), discriminant not a square.
bool is_reduced_indefinite(const Form& f, const BigInt& s);
Form rho(const Form& f, const BigInt& s, Mat2* track = nullptr);
Form reduce_indefinite(Form f, const BigInt& s, Mat2* track = nullptr);

}  // namespace isogeny
