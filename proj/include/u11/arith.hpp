#pragma once

// Exact finite arithmetic underneath everything else:
//   * residue exponents modulo p^2-1 (and its divisors),
//   * the field F_{p^f} presented as F_p[x]/(g),
//   * Artinian local quotients (Z/p^m)[x]/(g) with g mod p a power of one
//     irreducible, so unit testing and Hensel inversion are exact,
//   * polynomials in the auxiliary variable v over such rings,
//   * 2x2 matrices of those polynomials (and of field scalars).
// All values are plain integer vectors; operations live on the ring/context
// objects and never mutate their arguments.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "u11/errors.hpp"

namespace u11::arith {

using i64 = std::int64_t;

// Canonical residue in [0, n).
i64 modn(i64 x, i64 n);
i64 mod_pow(i64 base, i64 exp, i64 n);
bool is_prime(i64 n);

// Residue exponent with its modulus carried along; mixing moduli is an error.
struct ExpRes {
  i64 v = 0;
  i64 modulus = 1;

  ExpRes() = default;
  ExpRes(i64 value, i64 m);
  friend bool operator==(const ExpRes&, const ExpRes&) = default;
};

ExpRes exp_add(const ExpRes& a, const ExpRes& b);
ExpRes exp_sub(const ExpRes& a, const ExpRes& b);
ExpRes exp_scale(i64 c, const ExpRes& a);

// Little-endian coefficient sequence; doubles as a ring element.
using Coeffs = std::vector<i64>;

// Artinian local ring (Z/p^m)[x]/(g), g monic with g mod p = h^e for a single
// irreducible h.  Elements are coefficient vectors of length deg(g) with
// entries canonical mod p^m.  Units are detected through the residue field
// F_p[x]/(h); inverses Hensel-lift the residue-field inverse.
class LocalRing {
 public:
  using Elem = Coeffs;

  LocalRing(i64 p, i64 m, Coeffs modulus);

  static LocalRing fp(i64 p);                       // F_p = (Z/p)[x]/(x)
  static LocalRing fq(i64 p, Coeffs modulus);       // F_{p^f}
  static LocalRing zpm(i64 p, i64 m);               // Z/p^m
  static LocalRing galois_ring(i64 p, i64 m, Coeffs modulus);
  static LocalRing ramified_quadratic(i64 p);       // (Z/p^2)[x]/(x^2 - p)

  i64 p() const { return p_; }
  i64 m() const { return m_; }
  i64 q() const { return q_; }  // p^m, the coefficient modulus
  int deg() const { return static_cast<int>(modulus_.size()) - 1; }
  const Coeffs& modulus() const { return modulus_; }
  const Coeffs& irreducible_base() const { return h_; }  // h with g = h^e mod p
  int ramification_exponent() const { return e_; }
  i64 size() const;  // q^deg
  std::string describe() const;

  bool operator==(const LocalRing& o) const {
    return p_ == p_of(o) && m_ == o.m_ && modulus_ == o.modulus_;
  }

  Elem zero() const;
  Elem one() const;
  Elem from_int(i64 c) const;
  Elem x_class() const;        // class of the indeterminate (deg >= 2)
  Elem max_ideal_gen() const;  // p if g mod p irreducible, else x

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem scale(i64 c, const Elem& a) const;
  Elem pow(const Elem& a, i64 e) const;
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  bool is_zero(const Elem& a) const;

  bool is_unit(const Elem& a) const;
  Elem inverse(const Elem& a) const;  // throws UnitError on non-units

  LocalRing residue_field() const;           // F_p[x]/(h)
  Elem residue(const Elem& a) const;         // image in residue_field()

  Elem elem_by_index(i64 idx) const;  // 0 <= idx < size(), base-q digits
  i64 index_of(const Elem& a) const;

 private:
  static i64 p_of(const LocalRing& o) { return o.p_; }
  void check_elem(const Elem& a) const;

  i64 p_ = 0, m_ = 0, q_ = 0;
  Coeffs modulus_;  // monic over Z/p^m
  Coeffs h_;        // monic irreducible over F_p with g = h^e mod p
  int e_ = 0;
};

// Polynomial in v over a LocalRing, trimmed (no trailing zero coefficients).
struct VPoly {
  std::vector<LocalRing::Elem> c;  // c[i] multiplies v^i

  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for 0
};

// LocalRing-parameterised VPoly and 2x2 matrix operations.
VPoly vp_zero();
VPoly vp_const(const LocalRing& R, LocalRing::Elem a);
VPoly vp_from(const LocalRing& R, std::vector<LocalRing::Elem> coeffs);
VPoly vp_v_plus_p(const LocalRing& R);  // v + p over R
bool vp_is_zero(const VPoly& a);
bool vp_eq(const VPoly& a, const VPoly& b);
VPoly vp_add(const LocalRing& R, const VPoly& a, const VPoly& b);
VPoly vp_sub(const LocalRing& R, const VPoly& a, const VPoly& b);
VPoly vp_neg(const LocalRing& R, const VPoly& a);
VPoly vp_mul(const LocalRing& R, const VPoly& a, const VPoly& b);
VPoly vp_scale(const LocalRing& R, const LocalRing::Elem& s, const VPoly& a);
VPoly vp_times_v(const LocalRing& R, const VPoly& a);

struct Mat2 {
  VPoly e[2][2];
};

Mat2 mat_zero();
Mat2 mat_identity(const LocalRing& R);
Mat2 mat_from(VPoly a00, VPoly a01, VPoly a10, VPoly a11);
bool mat_eq(const Mat2& a, const Mat2& b);
Mat2 mat_add(const LocalRing& R, const Mat2& a, const Mat2& b);
Mat2 mat_mul(const LocalRing& R, const Mat2& a, const Mat2& b);
Mat2 mat_scale(const LocalRing& R, const VPoly& s, const Mat2& a);
Mat2 mat_transpose(const Mat2& a);
VPoly mat_det(const LocalRing& R, const Mat2& a);
Mat2 mat_adj(const LocalRing& R, const Mat2& a);  // adj(A) * A = det(A) * I

// Session context: odd prime p (p = 2 is admitted only by the representation
// bookkeeping layer), coefficient field F_{p^f}, exponent modulus N = p^2-1.
class PrimeCtx {
 public:
  using FieldElem = LocalRing::Elem;

  PrimeCtx(i64 p, i64 f, std::optional<Coeffs> modulus = std::nullopt);

  // Lexicographically smallest monic irreducible of degree f over F_p,
  // coefficients compared low degree first.
  static Coeffs auto_modulus(i64 p, i64 f);

  i64 p() const { return p_; }
  i64 f() const { return f_; }
  i64 N() const { return N_; }  // p^2 - 1
  i64 q() const { return field_.size(); }  // p^f
  const Coeffs& modulus() const { return field_.modulus(); }
  const LocalRing& field() const { return field_; }

  ExpRes exp_mod_N(i64 v) const { return ExpRes(v, N_); }
  ExpRes exp_mod_p_plus_1(i64 v) const { return ExpRes(v, p_ + 1); }

  // Digits x = a0 + p * a1 for 0 <= x <= p^2 - 2.
  std::pair<i64, i64> p_digits(i64 x) const;

  FieldElem fq_zero() const { return field_.zero(); }
  FieldElem fq_one() const { return field_.one(); }
  FieldElem fq_from_int(i64 c) const { return field_.from_int(c); }
  FieldElem fq_add(const FieldElem& a, const FieldElem& b) const { return field_.add(a, b); }
  FieldElem fq_sub(const FieldElem& a, const FieldElem& b) const { return field_.sub(a, b); }
  FieldElem fq_neg(const FieldElem& a) const { return field_.neg(a); }
  FieldElem fq_mul(const FieldElem& a, const FieldElem& b) const { return field_.mul(a, b); }
  FieldElem fq_inv(const FieldElem& a) const;
  FieldElem fq_pow(const FieldElem& a, i64 e) const;
  FieldElem fq_frobenius(const FieldElem& a) const { return fq_pow(a, p_); }
  bool fq_eq(const FieldElem& a, const FieldElem& b) const { return a == b; }
  bool fq_is_zero(const FieldElem& a) const { return field_.is_zero(a); }
  bool fq_is_one(const FieldElem& a) const { return a == field_.one(); }

  FieldElem elem_by_index(i64 idx) const { return field_.elem_by_index(idx); }
  i64 index_of(const FieldElem& a) const { return field_.index_of(a); }

  // i-th nonzero element (1-based) in lexicographic coefficient order.
  FieldElem nonzero_by_lex_index(i64 i) const;

 private:
  i64 p_ = 0, f_ = 0, N_ = 0;
  LocalRing field_;
};

// 2x2 matrix over F_{p^f} (tame-parameter specialisation).
struct FMat2 {
  PrimeCtx::FieldElem e[2][2];
};

FMat2 fm_from(PrimeCtx::FieldElem a00, PrimeCtx::FieldElem a01,
              PrimeCtx::FieldElem a10, PrimeCtx::FieldElem a11);
FMat2 fm_identity(const PrimeCtx& C);
FMat2 fm_diag(const PrimeCtx& C, PrimeCtx::FieldElem a, PrimeCtx::FieldElem d);
bool fm_eq(const FMat2& a, const FMat2& b);
FMat2 fm_mul(const PrimeCtx& C, const FMat2& a, const FMat2& b);
FMat2 fm_scale(const PrimeCtx& C, const PrimeCtx::FieldElem& s, const FMat2& a);
FMat2 fm_transpose(const FMat2& a);
PrimeCtx::FieldElem fm_det(const PrimeCtx& C, const FMat2& a);
FMat2 fm_adj(const PrimeCtx& C, const FMat2& a);
bool fm_is_invertible(const PrimeCtx& C, const FMat2& a);
FMat2 fm_inv(const PrimeCtx& C, const FMat2& a);

}  // namespace u11::arith
