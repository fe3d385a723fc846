#pragma once

// Bookkeeping for smooth characters of the diagonal torus T and for the
// non-supercuspidal semisimple representations of G = U(1,1)(Q_{p^2}/Q_p)
// with F_{p^f} coefficients.  Characters of T are written mu_lambda * omega^r
// (lambda the Frobenius parameter, r the exponent of the Teichmueller-lift
// character on units); characters of G factor through det and are indexed
// mod p + 1.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "u11/arith.hpp"

namespace u11::reps {

using arith::ExpRes;
using arith::i64;
using arith::PrimeCtx;
using FieldElem = PrimeCtx::FieldElem;

// Smooth character of T: mu_lambda * omega^r, lambda != 0, r mod p^2-1.
struct TChar {
  ExpRes r;
  FieldElem lambda;

  friend bool operator==(const TChar&, const TChar&) = default;
};

TChar make_tchar(const PrimeCtx& C, i64 r, FieldElem lambda);

// Character of G: omega^k composed with det, k mod p + 1.
struct GChar {
  ExpRes k;

  friend bool operator==(const GChar&, const GChar&) = default;
};

GChar make_gchar(const PrimeCtx& C, i64 k);

enum class FactorKind { Character, Special, PrincipalSeries };

// One irreducible non-supercuspidal constituent.  Character and Special are
// indexed by k mod p+1; a principal-series label carries the inducing TChar,
// which is required to not extend to G.
struct NonSCFactor {
  FactorKind kind = FactorKind::Character;
  i64 k = 0;        // Character/Special only
  i64 r = 0;        // PrincipalSeries only
  FieldElem lambda; // PrincipalSeries only

  friend bool operator==(const NonSCFactor&, const NonSCFactor&) = default;
};

bool factor_less(const NonSCFactor& a, const NonSCFactor& b);

NonSCFactor character_factor(const PrimeCtx& C, i64 k);
NonSCFactor special_factor(const PrimeCtx& C, i64 k);
NonSCFactor ps_factor(const PrimeCtx& C, const TChar& chi);  // throws if chi extends

// Finite multiset of factors; the stored sequence is kept sorted so that
// multiset equality is plain equality.
struct SemisimpleNonSC {
  std::vector<NonSCFactor> factors;

  friend bool operator==(const SemisimpleNonSC&, const SemisimpleNonSC&) = default;
};

SemisimpleNonSC make_semisimple(std::vector<NonSCFactor> fs);

struct PacketIndex {
  i64 r = 0;        // 0 <= r <= p-1
  FieldElem lambda; // nonzero
  i64 k = 0;        // 0 <= k <= p

  friend bool operator==(const PacketIndex&, const PacketIndex&) = default;
};

PacketIndex make_packet_index(const PrimeCtx& C, i64 r, FieldElem lambda, i64 k);

enum class DeformStatus { Isomorphism, OutsideCriterion };

enum class GenKind { Unrestricted, Unit, MaximalIdeal };

std::string gen_kind_name(GenKind k);

// Presentation of a deformation ring: a base ring descriptor, named
// generators with their constraint kind, relation strings over the generator
// names and p, and a count of extra formal variables on each side of the
// framed comparison isomorphism.
struct RingPresentation {
  std::string base;  // "O" or "O-power-series"
  std::vector<std::pair<std::string, GenKind>> gens;
  std::vector<std::string> relations;
  std::pair<int, int> extra_formal_vars{0, 0};

  friend bool operator==(const RingPresentation&, const RingPresentation&) = default;
};

// Relation strings must be built from declared generator names, p, integers
// and + - * ( ) only.
bool relations_parse(const RingPresentation& P);

// Restriction of omega^k (composed with det) to T.
TChar restrict_det_char(const PrimeCtx& C, i64 k);

// Some(k) iff chi extends to G, i.e. lambda = 1 and r = m(p-1) with
// 0 <= m <= p; then k = -m mod p+1 and restrict_det_char(k) round-trips.
std::optional<i64> extends_to_G(const PrimeCtx& C, const TChar& chi);

struct InducedStructure {
  bool reducible = false;
  NonSCFactor sub;       // Character(k), valid when reducible
  NonSCFactor quotient;  // Special(k), valid when reducible
};

InducedStructure induced_structure(const PrimeCtx& C, const TChar& chi);

NonSCFactor twist_factor(const PrimeCtx& C, const NonSCFactor& F, i64 k);
SemisimpleNonSC twist(const PrimeCtx& C, const SemisimpleNonSC& S, i64 k);

// Semisimplification of the principal series attached to (r, lambda),
// 0 <= r <= p-1.
SemisimpleNonSC pi_ss(const PrimeCtx& C, i64 r, const FieldElem& lambda);

// The packet representation Pi(r, lambda, k).
SemisimpleNonSC packet(const PrimeCtx& C, const PacketIndex& idx);

// All irreducible non-supercuspidal labels: p+1 characters, p+1 Steinberg
// twists, and the irreducible principal series.
std::vector<NonSCFactor> classify_all(const PrimeCtx& C);

// Whether the universal deformation of the induced representation is
// isomorphic to the induction of the universal character deformation:
// holds iff lambda != +-1 or r != 1 mod p-1.
DeformStatus induction_deform_status(const PrimeCtx& C, const TChar& chi);

// Same criterion read off from first principles: the norm-one torus acts
// through omega^r, and the criterion fails only when chi agrees with omega on
// the relevant data.  Enumerates the p-1 Teichmueller units directly.
bool induction_norm_oracle(const PrimeCtx& C, const TChar& chi);

// Twist-of-Steinberg deformation statement (unconditional).
DeformStatus steinberg_status(const PrimeCtx& C, const GChar& eta);

// Universal deformation ring of a smooth T-character: the pro-p part of the
// compact torus Z_{p^2}^* is free of rank 2, so the universal ring is a
// power-series ring over O in two unrestricted variables with no relations.
RingPresentation universal_char_defring();

}  // namespace u11::reps
