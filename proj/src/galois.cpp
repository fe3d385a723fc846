#include "u11/galois.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace u11::galois {

using arith::fm_adj;
using arith::fm_det;
using arith::fm_diag;
using arith::fm_eq;
using arith::fm_from;
using arith::fm_identity;
using arith::fm_inv;
using arith::fm_is_invertible;
using arith::fm_mul;
using arith::fm_scale;
using arith::fm_transpose;
using arith::modn;

namespace {

void require_odd(const PrimeCtx& C) {
  if (C.p() == 2) throw DomainError("parameter layer requires p odd");
}

void require_unit(const PrimeCtx& C, const FieldElem& lambda) {
  if (C.fq_is_zero(lambda)) throw DomainError("lambda must be nonzero");
}

std::array<i64, 2> sorted2(i64 a, i64 b) {
  if (a > b) std::swap(a, b);
  return {a, b};
}

}  // namespace

LParam make_lparam(const PrimeCtx& C, i64 r, FieldElem lambda) {
  require_odd(C);
  require_unit(C, lambda);
  return LParam{C.exp_mod_N(r), std::move(lambda)};
}

CParamNS make_cparam(const PrimeCtx& C, i64 r, FieldElem lambda) {
  require_odd(C);
  require_unit(C, lambda);
  return CParamNS{C.exp_mod_N(r), std::move(lambda)};
}

CInertialType make_c_inertial_type(const PrimeCtx& C, i64 e1, i64 e2, i64 gm) {
  const i64 N = C.N();
  return CInertialType{sorted2(modn(e1, N), modn(e2, N)), modn(gm, N)};
}

CInertialType c_inertia(const PrimeCtx& C, const CParamNS& P) {
  const i64 r = P.r.v;
  return make_c_inertial_type(C, C.p() + 1 + r, -C.p() * r, C.p() + 1);
}

FMat2 frob_gl2(const PrimeCtx& C, const CParamNS& P) {
  return fm_diag(C, C.fq_one(), P.lambda);
}

FieldElem frob_gm(const PrimeCtx& C, const CParamNS&) { return C.fq_one(); }

TameCParam make_tame_cparam(const PrimeCtx& C, FMat2 frob_gl2, FieldElem frob_gm,
                            std::array<i64, 2> inertia_exps, i64 inertia_gm_exp) {
  require_odd(C);
  const i64 N = C.N();
  const std::array<i64, 2> e{modn(inertia_exps[0], N), modn(inertia_exps[1], N)};
  const i64 em = modn(inertia_gm_exp, N);
  if (!fm_is_invertible(C, frob_gl2)) throw DomainError("Frobenius value must be invertible");
  if (C.fq_is_zero(frob_gm)) throw DomainError("Gm Frobenius value must be nonzero");
  if (modn((C.p() - 1) * em, N) != 0)
    throw DomainError("Gm inertia exponent breaks the tame relation");
  // Frobenius conjugates inertia through the nontrivial component:
  // A * (gm - det + e_j) pattern on column j must match p * e_i on row i.
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      if (C.fq_is_zero(frob_gl2.e[i][j])) continue;
      if (modn(e[j] - (C.p() * e[i] - em + e[0] + e[1]), N) != 0)
        throw DomainError("Frobenius value breaks the tame commutation relation");
    }
  return TameCParam{frob_gl2, std::move(frob_gm), e, em};
}

TameCParam lift_tame(const PrimeCtx& C, const CParamNS& P) {
  const i64 r = P.r.v;
  const i64 N = C.N();
  return make_tame_cparam(C, frob_gl2(C, P), C.fq_one(),
                          {modn(C.p() + 1 + r, N), modn(-C.p() * r, N)}, C.p() + 1);
}

bool lparam_equiv(const PrimeCtx& C, const LParam& a, const LParam& b) {
  if (a == b) return true;
  return b.r.v == modn(-C.p() * a.r.v, C.N()) && b.lambda == C.fq_inv(a.lambda);
}

bool cparam_equiv_fast(const PrimeCtx& C, const CParamNS& a, const CParamNS& b) {
  if (a == b) return true;
  return b.r.v == modn(-C.p() * a.r.v - (C.p() + 1), C.N()) && b.lambda == C.fq_inv(a.lambda);
}

bool cparam_equiv_bruteforce(const PrimeCtx& C, const TameCParam& a, const TameCParam& b) {
  require_odd(C);
  const i64 q = C.q();
  if (q > 56 || q * q * q * q > 10'000'000)
    throw CapacityError("brute-force conjugation search needs p^{4f} <= 10^7");
  // Conjugation invariants first: the inertia eigen-exponent multiset and both
  // Gm components are untouched by GL_2 conjugacy.
  if (sorted2(a.inertia_exps[0], a.inertia_exps[1]) !=
      sorted2(b.inertia_exps[0], b.inertia_exps[1]))
    return false;
  if (a.inertia_gm_exp != b.inertia_gm_exp || a.frob_gm != b.frob_gm) return false;

  // Index-table field arithmetic so the g-scan below runs on plain ints.
  const int nq = static_cast<int>(q);
  std::vector<int> mul_t(nq * nq), sub_t(nq * nq);
  {
    std::vector<FieldElem> elems(nq);
    for (int i = 0; i < nq; ++i) elems[i] = C.elem_by_index(i);
    for (int i = 0; i < nq; ++i)
      for (int j = 0; j < nq; ++j) {
        mul_t[i * nq + j] = static_cast<int>(C.index_of(C.fq_mul(elems[i], elems[j])));
        sub_t[i * nq + j] = static_cast<int>(C.index_of(C.fq_sub(elems[i], elems[j])));
      }
  }
  const auto mul = [&](int x, int y) { return mul_t[x * nq + y]; };
  const auto sub = [&](int x, int y) { return sub_t[x * nq + y]; };
  int A[2][2], B[2][2];
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      A[i][j] = static_cast<int>(C.index_of(a.frob_gl2.e[i][j]));
      B[i][j] = static_cast<int>(C.index_of(b.frob_gl2.e[i][j]));
    }
  // g * D_a = D_b * g entrywise: a nonzero (i,j) entry needs the j-th source
  // exponent to match the i-th target exponent.
  const i64 N = C.N();
  bool allowed[2][2];
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      allowed[i][j] = modn(a.inertia_exps[j] - b.inertia_exps[i], N) == 0;

  for (int g00 = 0; g00 < nq; ++g00) {
    if (g00 != 0 && !allowed[0][0]) continue;
    for (int g01 = 0; g01 < nq; ++g01) {
      if (g01 != 0 && !allowed[0][1]) continue;
      for (int g10 = 0; g10 < nq; ++g10) {
        if (g10 != 0 && !allowed[1][0]) continue;
        for (int g11 = 0; g11 < nq; ++g11) {
          if (g11 != 0 && !allowed[1][1]) continue;
          if (sub(mul(g00, g11), mul(g01, g10)) == 0) continue;
          // Frobenius lies in the nontrivial component, so conjugation by g
          // twists by det(g): need det(g)*g*A*g^{-1} = A', i.e. g*A*adj(g) = A'.
          const int t00 = sub(mul(g00, A[0][0]), sub(0, mul(g01, A[1][0])));
          const int t01 = sub(mul(g00, A[0][1]), sub(0, mul(g01, A[1][1])));
          const int t10 = sub(mul(g10, A[0][0]), sub(0, mul(g11, A[1][0])));
          const int t11 = sub(mul(g10, A[0][1]), sub(0, mul(g11, A[1][1])));
          // adj(g) = [[g11, -g01], [-g10, g00]]
          if (sub(mul(t00, g11), mul(t01, g10)) != B[0][0]) continue;
          if (sub(mul(t01, g00), mul(t00, g01)) != B[0][1]) continue;
          if (sub(mul(t10, g11), mul(t11, g10)) != B[1][0]) continue;
          if (sub(mul(t11, g00), mul(t10, g01)) != B[1][1]) continue;
          return true;
        }
      }
    }
  }
  return false;
}

CParamNS canonical_rep(const PrimeCtx& C, const CParamNS& P) {
  const i64 r2 = modn(-C.p() * P.r.v - (C.p() + 1), C.N());
  CParamNS other{C.exp_mod_N(r2), C.fq_inv(P.lambda)};
  const i64 ia = C.index_of(P.lambda), ib = C.index_of(other.lambda);
  if (other.r.v < P.r.v || (other.r.v == P.r.v && ib < ia)) return other;
  return P;
}

CInertialType tau_w(const PrimeCtx& C, WeylElt w, i64 a, i64 b) {
  require_odd(C);
  const i64 p = C.p();
  if (w == WeylElt::Id) return make_c_inertial_type(C, a + 1 + p * (1 - b), b - p * a, p + 1);
  return make_c_inertial_type(C, a * (1 - p) + 1, b * (1 - p) + p, p + 1);
}

std::optional<GenericWitness> n_generic_witness(const PrimeCtx& C, const CParamNS& P, i64 n,
                                                std::optional<WeylElt> only) {
  require_odd(C);
  if (n < 0) throw DomainError("genericity bound must be nonnegative");
  const CInertialType target = c_inertia(C, P);
  const i64 p = C.p();
  for (i64 absa = 0; absa <= C.N() - 1; ++absa) {
    for (int sign : {+1, -1}) {
      if (absa == 0 && sign < 0) continue;
      const i64 a = sign * absa;
      for (i64 c = n + 1; c <= p - n - 1; ++c) {
        const i64 b = a + 1 - c;  // c = a - b + 1 is the genericity gap
        for (WeylElt w : {WeylElt::Id, WeylElt::S}) {
          if (only && *only != w) continue;
          if (tau_w(C, w, a, b) == target) return GenericWitness{w, a, b};
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<i64> weyl_triviality_check(const PrimeCtx& C, i64 n) {
  require_odd(C);
  std::vector<i64> bad;
  for (i64 r = 0; r < C.N(); ++r) {
    const CParamNS P = make_cparam(C, r, C.fq_one());  // the type ignores lambda
    if (n_generic_witness(C, P, n).has_value() &&
        !n_generic_witness(C, P, n, WeylElt::Id).has_value())
      bad.push_back(r);
  }
  return bad;
}

PSInertialType make_ps_type(const PrimeCtx& C, i64 a, i64 b) {
  require_odd(C);
  return PSInertialType{C.exp_mod_N(a), C.exp_mod_N(b)};
}

PSInertialType ps_dual(const PrimeCtx& C, const PSInertialType& t) {
  return make_ps_type(C, -t.a.v, -t.b.v);
}

PSInertialType ps_frob_twist(const PrimeCtx& C, const PSInertialType& t) {
  return make_ps_type(C, C.p() * t.a.v, C.p() * t.b.v);
}

bool ps_is_ftsd(const PrimeCtx& C, const PSInertialType& t) {
  const i64 N = C.N();
  return sorted2(modn(C.p() * t.a.v, N), modn(C.p() * t.b.v, N)) ==
         sorted2(modn(-t.a.v, N), modn(-t.b.v, N));
}

bool ps_is_n_generic(const PrimeCtx& C, i64 a, i64 b, i64 n) {
  require_odd(C);
  if (n < 0) throw DomainError("genericity bound must be nonnegative");
  const i64 N = C.N();
  const auto [a0, a1] = C.p_digits(modn(-a, N));
  const auto [b0, b1] = C.p_digits(modn(-b, N));
  const i64 d0 = std::abs(a0 - b0), d1 = std::abs(a1 - b1);
  return n < d0 && d0 < C.p() - n && n < d1 && d1 < C.p() - n;
}

Orientation orientation(const PrimeCtx& C, i64 a, i64 b) {
  require_odd(C);
  const i64 N = C.N();
  const auto [a0, a1] = C.p_digits(modn(-a, N));
  const auto [b0, b1] = C.p_digits(modn(-b, N));
  // Reading i rotates the digit string: (0) is a0 + p*a1, (1) is a1 + p*a0.
  const i64 A0 = a0 + C.p() * a1, B0 = b0 + C.p() * b1;
  const i64 A1 = a1 + C.p() * a0, B1 = b1 + C.p() * b0;
  // Well-defined exactly when both comparisons are strict; a tie in either
  // reading forces equal digit vectors, and 2-generic pairs never tie.
  if (A0 == B0 || A1 == B1)
    throw PreconditionError("orientation needs strictly comparable digit readings");
  return Orientation{A0 > B0 ? WeylElt::Id : WeylElt::S, A1 > B1 ? WeylElt::Id : WeylElt::S};
}

CParamNS param_for_packet(const PrimeCtx& C, const reps::PacketIndex& idx) {
  require_odd(C);
  require_unit(C, idx.lambda);
  return CParamNS{C.exp_mod_N((idx.r - 1) + (1 - C.p()) * idx.k), idx.lambda};
}

std::vector<reps::PacketIndex> packets_for_param(const PrimeCtx& C, const CParamNS& P) {
  require_odd(C);
  std::vector<reps::PacketIndex> out;
  for (i64 k = 0; k <= C.p(); ++k)
    for (i64 r = 0; r <= C.p() - 1; ++r)
      if (modn((r - 1) + (1 - C.p()) * k, C.N()) == P.r.v)
        out.push_back(reps::make_packet_index(C, r, P.lambda, k));
  return out;
}

std::pair<TameRep2, Multiplier> base_change(const PrimeCtx& C, const CParamNS& P) {
  require_odd(C);
  const i64 r = P.r.v;
  const i64 N = C.N();
  TameRep2 rho2{fm_diag(C, C.fq_inv(P.lambda), P.lambda),
                {modn(C.p() + 1 + r, N), modn(-C.p() * r, N)}};
  return {rho2, theta_cyc(C)};
}

Multiplier theta_cyc(const PrimeCtx& C) {
  return Multiplier{C.fq_one(), modn(C.p() + 1, C.N())};
}

FMat2 polarisation_of(const PrimeCtx& C, const CParamNS& P) {
  return fm_from(C.fq_zero(), C.fq_neg(C.fq_inv(P.lambda)), C.fq_one(), C.fq_zero());
}

bool verify_polarisation(const PrimeCtx& C, const TameRep2& rho2, const Multiplier& theta,
                         const FMat2& alpha) {
  require_odd(C);
  if (C.fq_is_zero(theta.frob_value)) throw DomainError("multiplier Frobenius value is zero");
  if (!fm_is_invertible(C, rho2.frob2))
    throw DomainError("restricted Frobenius value must be invertible");
  if (!fm_is_invertible(C, alpha)) return false;
  const i64 N = C.N();
  // Inertia: alpha carries the Frobenius-twisted exponents onto the
  // theta-twisted dual ones, so alpha_{ij} != 0 needs p*e_j + e_i = theta_e.
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      if (C.fq_is_zero(alpha.e[i][j])) continue;
      if (modn(C.p() * rho2.inertia_exps[j] + rho2.inertia_exps[i] - theta.inertia_exp, N) != 0)
        return false;
    }
  const FMat2& F = rho2.frob2;
  const FMat2 F_invt = fm_transpose(fm_inv(C, F));
  const FieldElem tf2 = C.fq_mul(theta.frob_value, theta.frob_value);
  // Frobenius^2: the twist leaves F alone, the dual sends it to F^{-T}.
  if (!fm_eq(fm_mul(C, alpha, F), fm_scale(C, tf2, fm_mul(C, F_invt, alpha)))) return false;
  // Polarisation composite: alpha^{-T} alpha F = -theta(Frob)^{-1} id.
  const FMat2 comp = fm_mul(C, fm_mul(C, fm_inv(C, fm_transpose(alpha)), alpha), F);
  const FieldElem s = C.fq_neg(C.fq_inv(theta.frob_value));
  return fm_eq(comp, fm_diag(C, s, s));
}

}  // namespace u11::galois
