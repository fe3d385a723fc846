#include "u11/arith.hpp"

#include <algorithm>
#include <sstream>

namespace u11::arith {

i64 modn(i64 x, i64 n) {
  if (n <= 0) throw DomainError("modn: modulus must be positive");
  i64 r = x % n;
  return r < 0 ? r + n : r;
}

i64 mod_pow(i64 base, i64 exp, i64 n) {
  if (exp < 0) throw DomainError("mod_pow: negative exponent");
  i64 acc = modn(1, n), b = modn(base, n);
  while (exp > 0) {
    if (exp & 1) acc = acc * b % n;
    b = b * b % n;
    exp >>= 1;
  }
  return acc;
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

ExpRes::ExpRes(i64 value, i64 m) : v(modn(value, m)), modulus(m) {}

static void require_same_mod(const ExpRes& a, const ExpRes& b) {
  if (a.modulus != b.modulus) throw DomainError("ExpRes: mixed moduli");
}

ExpRes exp_add(const ExpRes& a, const ExpRes& b) {
  require_same_mod(a, b);
  return ExpRes(a.v + b.v, a.modulus);
}

ExpRes exp_sub(const ExpRes& a, const ExpRes& b) {
  require_same_mod(a, b);
  return ExpRes(a.v - b.v, a.modulus);
}

ExpRes exp_scale(i64 c, const ExpRes& a) {
  return ExpRes(modn(c, a.modulus) * a.v, a.modulus);
}

// ---------------------------------------------------------------------------
// Polynomials over Z/q, little-endian coefficients.

namespace {

Coeffs poly_trim(Coeffs a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Coeffs poly_reduce_coeffs(const Coeffs& a, i64 q) {
  Coeffs r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = modn(a[i], q);
  return poly_trim(r);
}

Coeffs poly_mul(const Coeffs& a, const Coeffs& b, i64 q) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % q;
  return poly_trim(r);
}

// Remainder of a by monic g.
Coeffs poly_rem_monic(Coeffs a, const Coeffs& g, i64 q) {
  a = poly_trim(std::move(a));
  const int dg = static_cast<int>(g.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= dg) {
    i64 lead = a.back();
    int shift = static_cast<int>(a.size()) - 1 - dg;
    for (int i = 0; i <= dg; ++i) a[i + shift] = modn(a[i + shift] - lead * g[i], q);
    a = poly_trim(std::move(a));
  }
  return a;
}

Coeffs poly_pow(Coeffs base, i64 e, i64 q) {
  Coeffs acc{1};
  while (e > 0) {
    if (e & 1) acc = poly_mul(acc, base, q);
    base = poly_mul(base, base, q);
    e >>= 1;
  }
  return acc;
}

// Monic polynomial of degree d over Z/q with index idx in [0, q^d):
// low coefficients are the base-q digits of idx.
Coeffs monic_by_index(i64 idx, int d, i64 q) {
  Coeffs g(d + 1, 0);
  for (int i = 0; i < d; ++i) {
    g[i] = idx % q;
    idx /= q;
  }
  g[d] = 1;
  return g;
}

bool poly_is_irreducible_fp(const Coeffs& g, i64 p) {
  const int dg = static_cast<int>(g.size()) - 1;
  if (dg < 1) return false;
  // Trial factorisation: a proper factorisation has a monic factor of
  // degree <= dg/2.
  for (int d = 1; 2 * d <= dg; ++d) {
    i64 count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (i64 idx = 0; idx < count; ++idx) {
      Coeffs h = monic_by_index(idx, d, p);
      if (poly_rem_monic(g, h, p).empty()) return false;
    }
  }
  return true;
}

// Extended Euclid over F_p[x]: returns (gcd, u) with u*a = gcd mod b.
std::pair<Coeffs, Coeffs> poly_gcd_ext_fp(Coeffs a, Coeffs b, i64 p) {
  Coeffs r0 = poly_trim(std::move(a)), r1 = poly_trim(std::move(b));
  Coeffs u0{1}, u1{};
  while (!r1.empty()) {
    // Divide r0 by r1 (not necessarily monic): scale by inverse lead.
    i64 lead_inv = mod_pow(r1.back(), p - 2, p);
    Coeffs quot(std::max<size_t>(r0.size(), 1), 0);
    Coeffs rem = r0;
    while (rem.size() >= r1.size() && !rem.empty()) {
      int shift = static_cast<int>(rem.size() - r1.size());
      i64 c = rem.back() * lead_inv % p;
      quot[shift] = modn(quot[shift] + c, p);
      for (size_t i = 0; i < r1.size(); ++i)
        rem[i + shift] = modn(rem[i + shift] - c * r1[i], p);
      rem = poly_trim(std::move(rem));
    }
    Coeffs qt = poly_trim(std::move(quot));
    Coeffs u2 = poly_trim([&] {
      Coeffs t = poly_mul(qt, u1, p);
      Coeffs res(std::max(u0.size(), t.size()), 0);
      for (size_t i = 0; i < res.size(); ++i) {
        i64 x = i < u0.size() ? u0[i] : 0;
        i64 y = i < t.size() ? t[i] : 0;
        res[i] = modn(x - y, p);
      }
      return res;
    }());
    u0 = std::move(u1);
    u1 = std::move(u2);
    r0 = std::move(r1);
    r1 = std::move(rem);
  }
  return {r0, u0};
}

}  // namespace

// ---------------------------------------------------------------------------
// LocalRing

LocalRing::LocalRing(i64 p, i64 m, Coeffs modulus) : p_(p), m_(m) {
  if (!is_prime(p)) throw DomainError("LocalRing: p must be prime");
  if (m < 1) throw DomainError("LocalRing: m must be >= 1");
  q_ = 1;
  for (i64 i = 0; i < m; ++i) q_ *= p;
  modulus_ = poly_reduce_coeffs(modulus, q_);
  if (modulus_.size() < 2 || modulus_.back() != 1)
    throw DomainError("LocalRing: modulus must be monic of degree >= 1");
  // Locality: g mod p must be a power of a single irreducible h.
  Coeffs gbar = poly_reduce_coeffs(modulus_, p);
  if (static_cast<int>(gbar.size()) != deg() + 1)
    throw DomainError("LocalRing: modulus not monic mod p");
  const int dg = deg();
  for (int d = 1; d <= dg; ++d) {
    if (dg % d != 0) continue;
    i64 count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (i64 idx = 0; idx < count; ++idx) {
      Coeffs h = monic_by_index(idx, d, p);
      if (!poly_is_irreducible_fp(h, p)) continue;
      if (poly_pow(h, dg / d, p) == gbar) {
        h_ = h;
        e_ = dg / d;
        return;
      }
    }
  }
  throw DomainError("LocalRing: modulus mod p is not a prime power, ring not local");
}

LocalRing LocalRing::fp(i64 p) { return LocalRing(p, 1, Coeffs{0, 1}); }

LocalRing LocalRing::fq(i64 p, Coeffs modulus) { return LocalRing(p, 1, std::move(modulus)); }

LocalRing LocalRing::zpm(i64 p, i64 m) { return LocalRing(p, m, Coeffs{0, 1}); }

LocalRing LocalRing::galois_ring(i64 p, i64 m, Coeffs modulus) {
  LocalRing R(p, m, std::move(modulus));
  if (R.e_ != 1) throw DomainError("galois_ring: modulus must stay irreducible mod p");
  return R;
}

LocalRing LocalRing::ramified_quadratic(i64 p) { return LocalRing(p, 2, Coeffs{-p, 0, 1}); }

i64 LocalRing::size() const {
  i64 s = 1;
  for (int i = 0; i < deg(); ++i) s *= q_;
  return s;
}

std::string LocalRing::describe() const {
  std::ostringstream os;
  os << "(Z/" << q_ << ")[x]/(";
  bool first = true;
  for (int i = deg(); i >= 0; --i) {
    if (modulus_[static_cast<size_t>(i)] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || modulus_[static_cast<size_t>(i)] != 1) os << modulus_[static_cast<size_t>(i)];
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  os << ")";
  return os.str();
}

void LocalRing::check_elem(const Elem& a) const {
  if (static_cast<int>(a.size()) != deg()) throw DomainError("LocalRing: element length mismatch");
}

LocalRing::Elem LocalRing::zero() const { return Elem(static_cast<size_t>(deg()), 0); }

LocalRing::Elem LocalRing::one() const { return from_int(1); }

LocalRing::Elem LocalRing::from_int(i64 c) const {
  Elem r = zero();
  r[0] = modn(c, q_);
  return r;
}

LocalRing::Elem LocalRing::x_class() const {
  if (deg() < 2) throw DomainError("LocalRing: x_class needs deg >= 2");
  Elem r = zero();
  r[1] = 1;
  return r;
}

LocalRing::Elem LocalRing::max_ideal_gen() const {
  return e_ == 1 ? from_int(p_) : x_class();
}

LocalRing::Elem LocalRing::add(const Elem& a, const Elem& b) const {
  check_elem(a);
  check_elem(b);
  Elem r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = modn(a[i] + b[i], q_);
  return r;
}

LocalRing::Elem LocalRing::sub(const Elem& a, const Elem& b) const {
  check_elem(a);
  check_elem(b);
  Elem r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = modn(a[i] - b[i], q_);
  return r;
}

LocalRing::Elem LocalRing::neg(const Elem& a) const {
  check_elem(a);
  Elem r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = modn(-a[i], q_);
  return r;
}

LocalRing::Elem LocalRing::mul(const Elem& a, const Elem& b) const {
  check_elem(a);
  check_elem(b);
  Coeffs prod = poly_rem_monic(poly_mul(a, b, q_), modulus_, q_);
  prod.resize(static_cast<size_t>(deg()), 0);
  return prod;
}

LocalRing::Elem LocalRing::scale(i64 c, const Elem& a) const {
  check_elem(a);
  Elem r(a.size());
  i64 cc = modn(c, q_);
  for (size_t i = 0; i < a.size(); ++i) r[i] = cc * a[i] % q_;
  return r;
}

LocalRing::Elem LocalRing::pow(const Elem& a, i64 e) const {
  if (e < 0) return pow(inverse(a), -e);
  Elem acc = one(), base = a;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

bool LocalRing::is_zero(const Elem& a) const {
  check_elem(a);
  return std::all_of(a.begin(), a.end(), [](i64 c) { return c == 0; });
}

bool LocalRing::is_unit(const Elem& a) const {
  check_elem(a);
  Coeffs im = poly_rem_monic(poly_reduce_coeffs(a, p_), h_, p_);
  return !im.empty();
}

LocalRing LocalRing::residue_field() const { return LocalRing(p_, 1, h_); }

LocalRing::Elem LocalRing::residue(const Elem& a) const {
  check_elem(a);
  Coeffs im = poly_rem_monic(poly_reduce_coeffs(a, p_), h_, p_);
  im.resize(h_.size() - 1, 0);
  return im;
}

LocalRing::Elem LocalRing::inverse(const Elem& a) const {
  if (!is_unit(a)) throw UnitError("LocalRing: inverse of non-unit");
  // Inverse in the residue field F_p[x]/(h) by extended Euclid, then Newton
  // iteration x <- x(2 - ax); convergence is (p, h)-adic and the maximal
  // ideal is nilpotent, so the loop terminates quickly.
  Coeffs abar = poly_rem_monic(poly_reduce_coeffs(a, p_), h_, p_);
  auto [g, u] = poly_gcd_ext_fp(abar, h_, p_);
  // g is a nonzero constant times gcd = constant; scale u so u*abar = 1 mod h.
  i64 c_inv = mod_pow(g[0], p_ - 2, p_);
  Coeffs x0(u.size());
  for (size_t i = 0; i < u.size(); ++i) x0[i] = u[i] * c_inv % p_;
  Elem x = zero();
  for (size_t i = 0; i < x0.size() && i < x.size(); ++i) x[i] = x0[i];

  const Elem two = from_int(2);
  for (int it = 0; it < 64; ++it) {
    Elem ax = mul(a, x);
    if (ax == one()) return x;
    x = mul(x, sub(two, ax));
  }
  throw Error("LocalRing: Hensel inversion failed to converge");
}

LocalRing::Elem LocalRing::elem_by_index(i64 idx) const {
  if (idx < 0 || idx >= size()) throw DomainError("LocalRing: element index out of range");
  Elem r = zero();
  for (int i = 0; i < deg(); ++i) {
    r[static_cast<size_t>(i)] = idx % q_;
    idx /= q_;
  }
  return r;
}

i64 LocalRing::index_of(const Elem& a) const {
  check_elem(a);
  i64 idx = 0;
  for (int i = deg() - 1; i >= 0; --i) idx = idx * q_ + a[static_cast<size_t>(i)];
  return idx;
}

// ---------------------------------------------------------------------------
// VPoly

namespace {

VPoly vp_trim(const LocalRing& R, VPoly a) {
  while (!a.c.empty() && R.is_zero(a.c.back())) a.c.pop_back();
  return a;
}

}  // namespace

VPoly vp_zero() { return VPoly{}; }

VPoly vp_const(const LocalRing& R, LocalRing::Elem a) {
  VPoly r;
  r.c.push_back(std::move(a));
  return vp_trim(R, std::move(r));
}

VPoly vp_from(const LocalRing& R, std::vector<LocalRing::Elem> coeffs) {
  VPoly r;
  r.c = std::move(coeffs);
  return vp_trim(R, std::move(r));
}

VPoly vp_v_plus_p(const LocalRing& R) {
  return vp_from(R, {R.from_int(R.p()), R.one()});
}

bool vp_is_zero(const VPoly& a) { return a.c.empty(); }

bool vp_eq(const VPoly& a, const VPoly& b) { return a.c == b.c; }

VPoly vp_add(const LocalRing& R, const VPoly& a, const VPoly& b) {
  VPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), R.zero());
  for (size_t i = 0; i < r.c.size(); ++i) {
    LocalRing::Elem x = i < a.c.size() ? a.c[i] : R.zero();
    LocalRing::Elem y = i < b.c.size() ? b.c[i] : R.zero();
    r.c[i] = R.add(x, y);
  }
  return vp_trim(R, std::move(r));
}

VPoly vp_neg(const LocalRing& R, const VPoly& a) {
  VPoly r = a;
  for (auto& ci : r.c) ci = R.neg(ci);
  return r;
}

VPoly vp_sub(const LocalRing& R, const VPoly& a, const VPoly& b) {
  return vp_add(R, a, vp_neg(R, b));
}

VPoly vp_mul(const LocalRing& R, const VPoly& a, const VPoly& b) {
  if (a.c.empty() || b.c.empty()) return vp_zero();
  VPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, R.zero());
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = R.add(r.c[i + j], R.mul(a.c[i], b.c[j]));
  return vp_trim(R, std::move(r));
}

VPoly vp_scale(const LocalRing& R, const LocalRing::Elem& s, const VPoly& a) {
  VPoly r = a;
  for (auto& ci : r.c) ci = R.mul(s, ci);
  return vp_trim(R, std::move(r));
}

VPoly vp_times_v(const LocalRing& R, const VPoly& a) {
  if (a.c.empty()) return vp_zero();
  VPoly r;
  r.c.reserve(a.c.size() + 1);
  r.c.push_back(R.zero());
  for (const auto& ci : a.c) r.c.push_back(ci);
  return r;
}

// ---------------------------------------------------------------------------
// Mat2

Mat2 mat_zero() { return Mat2{}; }

Mat2 mat_identity(const LocalRing& R) {
  Mat2 r;
  r.e[0][0] = vp_const(R, R.one());
  r.e[1][1] = vp_const(R, R.one());
  return r;
}

Mat2 mat_from(VPoly a00, VPoly a01, VPoly a10, VPoly a11) {
  Mat2 r;
  r.e[0][0] = std::move(a00);
  r.e[0][1] = std::move(a01);
  r.e[1][0] = std::move(a10);
  r.e[1][1] = std::move(a11);
  return r;
}

bool mat_eq(const Mat2& a, const Mat2& b) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (!vp_eq(a.e[i][j], b.e[i][j])) return false;
  return true;
}

Mat2 mat_add(const LocalRing& R, const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.e[i][j] = vp_add(R, a.e[i][j], b.e[i][j]);
  return r;
}

Mat2 mat_mul(const LocalRing& R, const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r.e[i][j] = vp_add(R, vp_mul(R, a.e[i][0], b.e[0][j]), vp_mul(R, a.e[i][1], b.e[1][j]));
  return r;
}

Mat2 mat_scale(const LocalRing& R, const VPoly& s, const Mat2& a) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.e[i][j] = vp_mul(R, s, a.e[i][j]);
  return r;
}

Mat2 mat_transpose(const Mat2& a) {
  return mat_from(a.e[0][0], a.e[1][0], a.e[0][1], a.e[1][1]);
}

VPoly mat_det(const LocalRing& R, const Mat2& a) {
  return vp_sub(R, vp_mul(R, a.e[0][0], a.e[1][1]), vp_mul(R, a.e[0][1], a.e[1][0]));
}

Mat2 mat_adj(const LocalRing& R, const Mat2& a) {
  return mat_from(a.e[1][1], vp_neg(R, a.e[0][1]), vp_neg(R, a.e[1][0]), a.e[0][0]);
}

// ---------------------------------------------------------------------------
// PrimeCtx

PrimeCtx::PrimeCtx(i64 p, i64 f, std::optional<Coeffs> modulus)
    : p_(p),
      f_(f),
      N_(p * p - 1),
      field_(LocalRing::fq(p, modulus ? *modulus : auto_modulus(p, f))) {
  if (!is_prime(p)) throw DomainError("PrimeCtx: p must be prime");
  if (f < 1) throw DomainError("PrimeCtx: f must be >= 1");
  if (field_.deg() != f) throw DomainError("PrimeCtx: modulus degree must equal f");
  if (!poly_is_irreducible_fp(field_.modulus(), p))
    throw DomainError("PrimeCtx: modulus must be irreducible over F_p");
}

Coeffs PrimeCtx::auto_modulus(i64 p, i64 f) {
  if (!is_prime(p)) throw DomainError("auto_modulus: p must be prime");
  if (f < 1) throw DomainError("auto_modulus: f must be >= 1");
  // Lexicographic order on (c_0, ..., c_{f-1}): c_0 is the most significant
  // key, so the index's base-p digits are taken big-endian.
  i64 count = 1;
  for (i64 i = 0; i < f; ++i) count *= p;
  for (i64 rank = 0; rank < count; ++rank) {
    Coeffs g(static_cast<size_t>(f) + 1, 0);
    i64 r = rank;
    for (i64 j = f - 1; j >= 0; --j) {
      g[static_cast<size_t>(j)] = r % p;
      r /= p;
    }
    g[static_cast<size_t>(f)] = 1;
    if (poly_is_irreducible_fp(g, p)) return g;
  }
  throw Error("auto_modulus: no irreducible polynomial found");
}

std::pair<i64, i64> PrimeCtx::p_digits(i64 x) const {
  if (x < 0 || x > N_ - 1) throw DomainError("p_digits: x out of [0, p^2-2]");
  return {x % p_, x / p_};
}

PrimeCtx::FieldElem PrimeCtx::fq_inv(const FieldElem& a) const {
  if (fq_is_zero(a)) throw UnitError("fq_inv: zero has no inverse");
  return field_.inverse(a);
}

PrimeCtx::FieldElem PrimeCtx::fq_pow(const FieldElem& a, i64 e) const {
  if (e < 0) return field_.pow(fq_inv(a), -e);
  return field_.pow(a, e);
}

PrimeCtx::FieldElem PrimeCtx::nonzero_by_lex_index(i64 i) const {
  if (i < 1 || i >= q()) throw DomainError("nonzero_by_lex_index: index out of [1, p^f-1]");
  // Rank elements by big-endian base-p digits (c_0 most significant); rank 0
  // is zero, so the i-th nonzero element has rank i.
  FieldElem r = fq_zero();
  i64 v = i;
  for (i64 j = f_ - 1; j >= 0; --j) {
    r[static_cast<size_t>(j)] = v % p_;
    v /= p_;
  }
  return r;
}

// ---------------------------------------------------------------------------
// FMat2

FMat2 fm_from(PrimeCtx::FieldElem a00, PrimeCtx::FieldElem a01,
              PrimeCtx::FieldElem a10, PrimeCtx::FieldElem a11) {
  FMat2 r;
  r.e[0][0] = std::move(a00);
  r.e[0][1] = std::move(a01);
  r.e[1][0] = std::move(a10);
  r.e[1][1] = std::move(a11);
  return r;
}

FMat2 fm_identity(const PrimeCtx& C) {
  return fm_diag(C, C.fq_one(), C.fq_one());
}

FMat2 fm_diag(const PrimeCtx& C, PrimeCtx::FieldElem a, PrimeCtx::FieldElem d) {
  return fm_from(std::move(a), C.fq_zero(), C.fq_zero(), std::move(d));
}

bool fm_eq(const FMat2& a, const FMat2& b) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (a.e[i][j] != b.e[i][j]) return false;
  return true;
}

FMat2 fm_mul(const PrimeCtx& C, const FMat2& a, const FMat2& b) {
  FMat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r.e[i][j] = C.fq_add(C.fq_mul(a.e[i][0], b.e[0][j]), C.fq_mul(a.e[i][1], b.e[1][j]));
  return r;
}

FMat2 fm_scale(const PrimeCtx& C, const PrimeCtx::FieldElem& s, const FMat2& a) {
  FMat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.e[i][j] = C.fq_mul(s, a.e[i][j]);
  return r;
}

FMat2 fm_transpose(const FMat2& a) {
  return fm_from(a.e[0][0], a.e[1][0], a.e[0][1], a.e[1][1]);
}

PrimeCtx::FieldElem fm_det(const PrimeCtx& C, const FMat2& a) {
  return C.fq_sub(C.fq_mul(a.e[0][0], a.e[1][1]), C.fq_mul(a.e[0][1], a.e[1][0]));
}

FMat2 fm_adj(const PrimeCtx& C, const FMat2& a) {
  return fm_from(a.e[1][1], C.fq_neg(a.e[0][1]), C.fq_neg(a.e[1][0]), a.e[0][0]);
}

bool fm_is_invertible(const PrimeCtx& C, const FMat2& a) {
  return !C.fq_is_zero(fm_det(C, a));
}

FMat2 fm_inv(const PrimeCtx& C, const FMat2& a) {
  PrimeCtx::FieldElem d = fm_det(C, a);
  if (C.fq_is_zero(d)) throw UnitError("fm_inv: singular matrix");
  return fm_scale(C, C.fq_inv(d), fm_adj(C, a));
}

}  // namespace u11::arith
