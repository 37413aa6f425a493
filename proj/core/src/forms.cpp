#include "isogeny/forms.hpp"

#include <stdexcept>

namespace isogeny {

void Mat2::right_multiply(const BigInt& n00, const BigInt& n01, const BigInt& n10,
                          const BigInt& n11) {
  BigInt r00 = m00 * n00 + m01 * n10;
  BigInt r01 = m00 * n01 + m01 * n11;
  BigInt r10 = m10 * n00 + m11 * n10;
  BigInt r11 = m10 * n01 + m11 * n11;
  m00 = std::move(r00);
  m01 = std::move(r01);
  m10 = std::move(r10);
  m11 = std::move(r11);
}

BigInt evaluate(const Form& f, const BigInt& x, const BigInt& y) {
  return f.a * x * x + f.b * x * y + f.c * y * y;
}

Form transform(const Form& f, const Mat2& M) {
  // f(px + qy, rx + sy)
  const BigInt &p = M.m00, &q = M.m01, &r = M.m10, &s = M.m11;
  Form g;
  g.a = evaluate(f, p, r);
  g.c = evaluate(f, q, s);
  g.b = 2 * f.a * p * q + f.b * (p * s + q * r) + 2 * f.c * r * s;
  return g;
}

namespace {

// (u, v, d) with u*a + v*b = d = gcd(a, b), d >= 0.
void xgcd(const BigInt& a, const BigInt& b, BigInt& u, BigInt& v, BigInt& d) {
  mpz_gcdext(d.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

bool divides(const BigInt& d, const BigInt& n) {
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

}  // namespace

// Shanks/Dirichlet composition in the formulation of Cohen, GTM 138, Alg. 5.4.7.
Form compose(const Form& f1, const Form& f2) {
  if (f1.a <= 0 || f2.a <= 0) throw std::invalid_argument("compose: leading coefficients must be positive");
  const Form* x = &f1;
  const Form* y = &f2;
  if (x->a > y->a) std::swap(x, y);
  const BigInt &a1 = x->a, &b1 = x->b;
  const BigInt &a2 = y->a, &b2 = y->b, &c2 = y->c;

  const BigInt s = (b1 + b2) / 2;
  const BigInt n = b2 - s;

  BigInt y1, d, tmp;
  if (divides(a1, a2)) {
    y1 = 0;
    d = a1;
  } else {
    xgcd(a2, a1, y1, tmp, d);
  }

  BigInt x2, y2, d1;
  if (divides(d, s)) {
    y2 = -1;
    x2 = 0;
    d1 = d;
  } else {
    xgcd(s, d, x2, y2, d1);
    y2 = -y2;
  }

  const BigInt v1 = a1 / d1;
  const BigInt v2 = a2 / d1;
  BigInt r = y1 * y2 * n - x2 * c2;
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), v1.get_mpz_t());

  Form out;
  out.a = v1 * v2;
  out.b = b2 + 2 * v2 * r;
  out.c = (c2 * d1 + r * (b2 + v2 * r)) / v1;
  return out;
}

bool is_reduced_definite(const Form& f) {
  if (!(abs(f.b) <= f.a && f.a <= f.c)) return false;
  if ((abs(f.b) == f.a || f.a == f.c) && f.b < 0) return false;
  return true;
}

Form reduce_definite(Form f, Mat2* track) {
  if (f.a <= 0) throw std::invalid_argument("reduce_definite: form is not positive definite");
  BigInt k, two_a;
  for (;;) {
    // Bring b into (-a, a].
    two_a = 2 * f.a;
    if (f.b <= -f.a || f.b > f.a) {
      // k with b + 2ak in (-a, a]
      BigInt t = f.a - f.b;
      mpz_fdiv_q(k.get_mpz_t(), t.get_mpz_t(), two_a.get_mpz_t());
      f.c = f.a * k * k + f.b * k + f.c;
      f.b += two_a * k;
      if (track) track->right_multiply(1, k, 0, 1);
    }
    if (f.a > f.c) {
      std::swap(f.a, f.c);
      f.b = -f.b;
      if (track) track->right_multiply(0, -1, 1, 0);
      continue;
    }
    if (f.a == f.c && f.b < 0) {
      f.b = -f.b;
      if (track) track->right_multiply(0, -1, 1, 0);
    }
    return f;
  }
}

bool is_reduced_indefinite(const Form& f, const BigInt& s) {
  if (f.b <= 0 || f.b > s) return false;
  const BigInt two_a = 2 * abs(f.a);
  return two_a <= s + f.b && two_a >= s - f.b + 1;
}

Form rho(const Form& f, const BigInt& s, Mat2* track) {
  const BigInt abs_c = abs(f.c);
  const BigInt two_c = 2 * abs_c;
  BigInt r;
  if (abs_c > s) {
    r = -f.b;
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), two_c.get_mpz_t());
    if (r > abs_c) r -= two_c;
  } else {
    BigInt t = s + f.b;
    mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), two_c.get_mpz_t());
    r = s - t;
  }
  Form g;
  g.a = f.c;
  g.b = r;
  const BigInt disc = f.discriminant();
  g.c = (r * r - disc) / (4 * f.c);
  if (track) {
    const BigInt k = (r + f.b) / (2 * f.c);
    track->right_multiply(0, -1, 1, k);
  }
  return g;
}

Form reduce_indefinite(Form f, const BigInt& s, Mat2* track) {
  while (!is_reduced_indefinite(f, s)) f = rho(f, s, track);
  return f;
}

}  // namespace isogeny
