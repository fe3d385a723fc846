#pragma once

// Langlands and C-group parameters for U(1,1)(Q_{p^2}/Q_p), tame inertial
// types, genericity, and the packet correspondence.
//
// Conventions fixed here (and relied on throughout):
//   * omega_2 has exponent lattice Z/(p^2-1); Frobenius conjugation raises
//     tame inertia exponents to the p-th power, and p = p^{-1} mod p^2-1.
//   * In the coordinates identifying the dual C-group with GL_2 x Gm, the
//     nontrivial Galois action is (g, t) -> (t * det(g)^{-1} * g, t); hence
//     conjugating the Frobenius value A by gamma in GL_2 yields
//     det(gamma) * gamma * A * gamma^{-1}, with the Gm parts untouched.
//   * Inertia values are kept as exponents (they live in F_{p^2}^*, which
//     need not embed in the session field), Frobenius values as matrices.

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "u11/arith.hpp"
#include "u11/reps.hpp"

namespace u11::galois {

using arith::ExpRes;
using arith::FMat2;
using arith::i64;
using arith::PrimeCtx;
using FieldElem = PrimeCtx::FieldElem;

// L-parameter label psi_{r, lambda}.
struct LParam {
  ExpRes r;
  FieldElem lambda;

  friend bool operator==(const LParam&, const LParam&) = default;
};

// C-parameter label psi~_{r, lambda} (the base-change-theta twist of psi).
struct CParamNS {
  ExpRes r;
  FieldElem lambda;

  friend bool operator==(const CParamNS&, const CParamNS&) = default;
};

LParam make_lparam(const PrimeCtx& C, i64 r, FieldElem lambda);
CParamNS make_cparam(const PrimeCtx& C, i64 r, FieldElem lambda);

// Tame inertial type for the C-group: an unordered pair of GL_2 exponents
// plus the Gm exponent, all mod p^2-1.  Stored sorted so equality is multiset
// equality.
struct CInertialType {
  std::array<i64, 2> exponents{};  // ascending
  i64 gm_exp = 0;

  friend bool operator==(const CInertialType&, const CInertialType&) = default;
};

CInertialType make_c_inertial_type(const PrimeCtx& C, i64 e1, i64 e2, i64 gm);

// Derived data of a C-parameter.
CInertialType c_inertia(const PrimeCtx& C, const CParamNS& P);
FMat2 frob_gl2(const PrimeCtx& C, const CParamNS& P);   // diag(1, lambda)
FieldElem frob_gm(const PrimeCtx& C, const CParamNS& P);  // always 1

// Explicit tame C-parameter: values at the two tame generators.  Inertia is
// diagonal and recorded positionally as exponents; the constructor verifies
// the tame commutation relation against the Frobenius value.
struct TameCParam {
  FMat2 frob_gl2;
  FieldElem frob_gm;
  std::array<i64, 2> inertia_exps{};  // positional (diagonal), mod p^2-1
  i64 inertia_gm_exp = 0;

  friend bool operator==(const TameCParam& x, const TameCParam& y) {
    return arith::fm_eq(x.frob_gl2, y.frob_gl2) && x.frob_gm == y.frob_gm &&
           x.inertia_exps == y.inertia_exps && x.inertia_gm_exp == y.inertia_gm_exp;
  }
};

TameCParam make_tame_cparam(const PrimeCtx& C, FMat2 frob_gl2, FieldElem frob_gm,
                            std::array<i64, 2> inertia_exps, i64 inertia_gm_exp);
TameCParam lift_tame(const PrimeCtx& C, const CParamNS& P);

// Equivalence of labels.
bool lparam_equiv(const PrimeCtx& C, const LParam& a, const LParam& b);
// Fast involution derived from the conjugacy invariants:
// (r, lambda) ~ (-pr - (p+1), lambda^{-1}).
bool cparam_equiv_fast(const PrimeCtx& C, const CParamNS& a, const CParamNS& b);
// Ground truth: exhaustive conjugation over GL_2(F_{p^f}) per the action
// convention above.  Requires p^{4f} <= 10^7.
bool cparam_equiv_bruteforce(const PrimeCtx& C, const TameCParam& a, const TameCParam& b);
// Lexicographically smallest (r, lambda-coefficients) in the fast class.
CParamNS canonical_rep(const PrimeCtx& C, const CParamNS& P);

enum class WeylElt { Id, S };

// Inertial type tau_w(a, b) attached to a lowest-alcove pair and a Weyl
// element.
CInertialType tau_w(const PrimeCtx& C, WeylElt w, i64 a, i64 b);

struct GenericWitness {
  WeylElt w = WeylElt::Id;
  i64 a = 0;
  i64 b = 0;

  friend bool operator==(const GenericWitness&, const GenericWitness&) = default;
};

// Search for (w, a, b) with tau_w(a, b) equal to the inertial type of P and
// n < a - b + 1 < p - n.  Deterministic order: |a| ascending (positive before
// negative), then a - b + 1 ascending, then w = Id before S; a ranges over
// [-(p^2-2), p^2-2], which covers every residue.  `only` restricts w.
std::optional<GenericWitness> n_generic_witness(const PrimeCtx& C, const CParamNS& P, i64 n,
                                                std::optional<WeylElt> only = std::nullopt);

// Every r whose type has some n-generic witness must have one with w = Id;
// returns the violating r values (expected empty).
std::vector<i64> weyl_triviality_check(const PrimeCtx& C, i64 n);

// GL_2 tame principal-series inertial type omega~_2^a (+) omega~_2^b.
struct PSInertialType {
  ExpRes a;
  ExpRes b;

  friend bool operator==(const PSInertialType&, const PSInertialType&) = default;
};

PSInertialType make_ps_type(const PrimeCtx& C, i64 a, i64 b);
PSInertialType ps_dual(const PrimeCtx& C, const PSInertialType& t);
PSInertialType ps_frob_twist(const PrimeCtx& C, const PSInertialType& t);
// Fixed by Frobenius-twist-dual: {pa, pb} = {-a, -b} as multisets.
bool ps_is_ftsd(const PrimeCtx& C, const PSInertialType& t);

// n-genericity of the pair: with (a0,a1), (b0,b1) the p-digits of -a, -b
// normalised to [0, p^2-2], requires n < |a_i - b_i| < p - n for both i.
bool ps_is_n_generic(const PrimeCtx& C, i64 a, i64 b, i64 n);

struct Orientation {
  WeylElt w0 = WeylElt::Id;
  WeylElt w1 = WeylElt::Id;

  friend bool operator==(const Orientation&, const Orientation&) = default;
};

// Orientation of a pair: w_i = Id iff the base-p^{(i)} reading of the -a
// digits exceeds that of the -b digits.  Throws PreconditionError when either
// reading ties (equivalently a = b mod p^2-1); 2-generic pairs never tie.
Orientation orientation(const PrimeCtx& C, i64 a, i64 b);

// Packet correspondence: index (r, lambda, k) -> psi~_{(r-1)+(1-p)k, lambda}.
CParamNS param_for_packet(const PrimeCtx& C, const reps::PacketIndex& idx);
// All packet indices mapping to P, ordered by (k, r).
std::vector<reps::PacketIndex> packets_for_param(const PrimeCtx& C, const CParamNS& P);

// Restriction to the quadratic unramified extension: Frobenius^2 value and
// positional inertia exponents of the GL_2 part, plus the Gm multiplier.
struct TameRep2 {
  FMat2 frob2;
  std::array<i64, 2> inertia_exps{};  // positional (diagonal)

  friend bool operator==(const TameRep2& x, const TameRep2& y) {
    return arith::fm_eq(x.frob2, y.frob2) && x.inertia_exps == y.inertia_exps;
  }
};

struct Multiplier {
  FieldElem frob_value;
  i64 inertia_exp = 0;

  friend bool operator==(const Multiplier&, const Multiplier&) = default;
};

std::pair<TameRep2, Multiplier> base_change(const PrimeCtx& C, const CParamNS& P);
Multiplier theta_cyc(const PrimeCtx& C);  // (1, p+1)

// alpha = [[0,-1],[1,0]] * A^{-1} with A = diag(1, lambda).
FMat2 polarisation_of(const PrimeCtx& C, const CParamNS& P);

// Checks that alpha intertwines the Frobenius twist of rho2 (inertia
// exponents multiplied by p, Frobenius^2 matrix unchanged) with the
// theta-twisted dual, and that the polarisation composite
// alpha^{-T} * alpha * rho2(Frob^2) equals -theta(Frob^{-1}) * id.
bool verify_polarisation(const PrimeCtx& C, const TameRep2& rho2, const Multiplier& theta,
                         const FMat2& alpha);

}  // namespace u11::galois
