#include <doctest.h>

#include <set>

#include "u11/reps.hpp"

using namespace u11;
using namespace u11::arith;
using namespace u11::reps;

namespace {

SemisimpleNonSC ps_pair(const PrimeCtx& C, i64 r1, FieldElem l1, i64 r2, FieldElem l2) {
  return make_semisimple({ps_factor(C, make_tchar(C, r1, std::move(l1))),
                          ps_factor(C, make_tchar(C, r2, std::move(l2)))});
}

}  // namespace

TEST_CASE("restriction of det characters to T") {
  PrimeCtx c3(3, 1);
  TChar chi = restrict_det_char(c3, 1);
  CHECK(chi.r.v == 6);
  CHECK(c3.fq_is_one(chi.lambda));
  PrimeCtx c5(5, 1);
  CHECK(restrict_det_char(c5, 2).r.v == 16);
  // k is read mod p+1.
  CHECK(restrict_det_char(c3, 5) == restrict_det_char(c3, 1));
}

TEST_CASE("extension criterion and round trip") {
  PrimeCtx c(3, 1);
  CHECK(extends_to_G(c, make_tchar(c, 2, c.fq_one())) == 3);
  CHECK_FALSE(extends_to_G(c, make_tchar(c, 1, c.fq_one())).has_value());
  CHECK_FALSE(extends_to_G(c, make_tchar(c, 2, c.fq_from_int(2))).has_value());

  for (i64 p : {3, 5, 7, 11}) {
    for (i64 f : {1, 2}) {
      PrimeCtx ctx(p, f);
      i64 extendable = 0;
      for (i64 r = 0; r < ctx.N(); ++r) {
        for (i64 i = 1; i < ctx.q(); ++i) {
          TChar chi = make_tchar(ctx, r, ctx.nonzero_by_lex_index(i));
          auto k = extends_to_G(ctx, chi);
          if (!k) continue;
          ++extendable;
          CHECK(restrict_det_char(ctx, *k) == chi);
        }
      }
      // Exactly one extension index k per character of G.
      CHECK(extendable == p + 1);
    }
  }
}

TEST_CASE("induced structure splits exactly the extendable characters") {
  PrimeCtx c(3, 2);
  for (i64 r = 0; r < c.N(); ++r) {
    for (i64 i = 1; i < c.q(); ++i) {
      TChar chi = make_tchar(c, r, c.nonzero_by_lex_index(i));
      InducedStructure S = induced_structure(c, chi);
      CHECK(S.reducible == extends_to_G(c, chi).has_value());
      if (S.reducible) {
        CHECK(S.sub.kind == FactorKind::Character);
        CHECK(S.quotient.kind == FactorKind::Special);
        CHECK(S.sub.k == S.quotient.k);
      }
    }
  }
}

TEST_CASE("ps_factor refuses extendable inducing characters") {
  PrimeCtx c(3, 1);
  CHECK_THROWS_AS(ps_factor(c, make_tchar(c, 2, c.fq_one())), DomainError);
  CHECK_NOTHROW(ps_factor(c, make_tchar(c, 1, c.fq_one())));
}

TEST_CASE("twisting is a Z/(p+1) action") {
  PrimeCtx c(5, 2);
  FieldElem lam = c.nonzero_by_lex_index(1);
  SemisimpleNonSC S = packet(c, make_packet_index(c, 2, lam, 1));
  for (i64 a = 0; a <= c.p(); ++a) {
    for (i64 b = 0; b <= c.p(); ++b) {
      CHECK(twist(c, twist(c, S, a), b) == twist(c, S, a + b));
    }
  }
  CHECK(twist(c, S, c.p() + 1) == S);
  // Twisting a PS label shifts r by k(1-p).
  NonSCFactor F = ps_factor(c, make_tchar(c, 3, lam));
  NonSCFactor Ft = twist_factor(c, F, 2);
  CHECK(Ft.r == modn(3 + 2 * (1 - c.p()), c.N()));
  CHECK(Ft.lambda == F.lambda);
}

TEST_CASE("pi_ss boundary and generic cases") {
  for (i64 p : {3, 5, 7}) {
    PrimeCtx c(p, 1);
    SemisimpleNonSC triv = pi_ss(c, 0, c.fq_one());
    CHECK(triv == make_semisimple({character_factor(c, 0), special_factor(c, 0)}));
    SemisimpleNonSC top = pi_ss(c, p - 1, c.fq_one());
    CHECK(top == make_semisimple({character_factor(c, p), special_factor(c, p)}));
  }
  PrimeCtx c(3, 2);
  FieldElem lam = c.field().x_class();  // lambda = x, lambda^2 = -1 != 1
  REQUIRE_FALSE(c.fq_is_one(c.fq_mul(lam, lam)));
  SemisimpleNonSC S = pi_ss(c, 1, lam);
  CHECK(S == make_semisimple({ps_factor(c, make_tchar(c, 5, c.fq_inv(lam)))}));

  // Length-2 exactly at the two boundary labels.
  for (i64 p : {3, 5}) {
    PrimeCtx ctx(p, 2);
    for (i64 r = 0; r <= p - 1; ++r) {
      for (i64 i = 1; i < ctx.q(); ++i) {
        FieldElem l = ctx.nonzero_by_lex_index(i);
        bool boundary = ctx.fq_is_one(l) && (r == 0 || r == p - 1);
        CHECK(pi_ss(ctx, r, l).factors.size() == (boundary ? 2u : 1u));
      }
    }
  }
  CHECK_THROWS_AS(pi_ss(c, 3, lam), DomainError);
  CHECK_THROWS_AS(pi_ss(c, 0, c.fq_zero()), DomainError);
}

TEST_CASE("packet worked examples at p = 3") {
  PrimeCtx c(3, 2);
  FieldElem lam = c.field().x_class();
  FieldElem lam_inv = c.fq_inv(lam);

  CHECK(packet(c, make_packet_index(c, 0, lam, 0)) == ps_pair(c, 0, lam_inv, 0, lam));
  CHECK(packet(c, make_packet_index(c, 1, lam, 1)) == ps_pair(c, 3, lam_inv, 7, lam));

  SemisimpleNonSC both = packet(c, make_packet_index(c, 0, c.fq_one(), 0));
  CHECK(both == make_semisimple({character_factor(c, 0), character_factor(c, 0),
                                 special_factor(c, 0), special_factor(c, 0)}));
}

TEST_CASE("packet multiplicities can exceed one for lambda = -1") {
  PrimeCtx c(3, 1);
  FieldElem minus1 = c.fq_from_int(-1);
  SemisimpleNonSC S = packet(c, make_packet_index(c, 0, minus1, 0));
  REQUIRE(S.factors.size() == 2);
  CHECK(S.factors[0] == S.factors[1]);
}

TEST_CASE("packet symmetry under the Weyl flip of the index") {
  for (i64 p : {3, 5}) {
    PrimeCtx c(p, 2);
    for (i64 r = 0; r <= p - 1; ++r) {
      for (i64 i = 1; i < c.q(); ++i) {
        FieldElem lam = c.nonzero_by_lex_index(i);
        for (i64 k = 0; k <= p; ++k) {
          PacketIndex a = make_packet_index(c, r, lam, k);
          PacketIndex b =
              make_packet_index(c, p - 1 - r, c.fq_inv(lam), modn(k + r + 1, p + 1));
          CHECK(packet(c, a) == packet(c, b));
        }
      }
    }
  }
}

TEST_CASE("packet index validation") {
  PrimeCtx c(3, 1);
  CHECK_THROWS_AS(make_packet_index(c, 3, c.fq_one(), 0), DomainError);
  CHECK_THROWS_AS(make_packet_index(c, -1, c.fq_one(), 0), DomainError);
  CHECK_THROWS_AS(make_packet_index(c, 0, c.fq_one(), 4), DomainError);
  CHECK_THROWS_AS(make_packet_index(c, 0, c.fq_zero(), 0), DomainError);
}

TEST_CASE("classification counts and distinctness") {
  for (i64 p : {3, 5}) {
    for (i64 f : {1, 2}) {
      PrimeCtx c(p, f);
      auto all = classify_all(c);
      i64 expected = 2 * (p + 1) + ((p * p - 1) * (c.q() - 1) - (p + 1));
      CHECK(static_cast<i64>(all.size()) == expected);
      std::set<std::vector<i64>> seen;
      for (const auto& F : all) {
        std::vector<i64> key{static_cast<i64>(F.kind), F.k, F.r};
        key.insert(key.end(), F.lambda.begin(), F.lambda.end());
        seen.insert(key);
      }
      CHECK(static_cast<i64>(seen.size()) == expected);
    }
  }
  PrimeCtx c31(3, 1);
  CHECK(classify_all(c31).size() == 20);
  PrimeCtx c51(5, 1);
  CHECK(classify_all(c51).size() == 102);
}

TEST_CASE("induction deformation status worked examples") {
  PrimeCtx c3(3, 1);
  CHECK(induction_deform_status(c3, make_tchar(c3, 2, c3.fq_from_int(-1))) ==
        DeformStatus::Isomorphism);
  CHECK(induction_deform_status(c3, make_tchar(c3, 1, c3.fq_one())) ==
        DeformStatus::OutsideCriterion);
  PrimeCtx c5(5, 1);
  CHECK_FALSE(induction_norm_oracle(c5, make_tchar(c5, 5, c5.fq_one())));
  CHECK(induction_norm_oracle(c3, make_tchar(c3, 0, c3.fq_one())));
}

TEST_CASE("induction status agrees with the unit-enumeration oracle") {
  for (i64 p : {3, 5, 7, 11}) {
    for (i64 f : {1, 2}) {
      PrimeCtx c(p, f);
      for (i64 r = 0; r < c.N(); ++r) {
        for (i64 i = 1; i < c.q(); ++i) {
          TChar chi = make_tchar(c, r, c.nonzero_by_lex_index(i));
          bool iso = induction_deform_status(c, chi) == DeformStatus::Isomorphism;
          CHECK(iso == induction_norm_oracle(c, chi));
        }
      }
    }
  }
}

TEST_CASE("Steinberg twists always deform compatibly") {
  PrimeCtx c(3, 1);
  for (i64 k = 0; k <= c.p(); ++k)
    CHECK(steinberg_status(c, make_gchar(c, k)) == DeformStatus::Isomorphism);
}

TEST_CASE("universal character deformation ring") {
  RingPresentation P = universal_char_defring();
  CHECK(P.base == "O-power-series");
  REQUIRE(P.gens.size() == 2);
  CHECK(P.gens[0] == std::pair<std::string, GenKind>{"X1", GenKind::Unrestricted});
  CHECK(P.gens[1] == std::pair<std::string, GenKind>{"X2", GenKind::Unrestricted});
  CHECK(P.relations.empty());
  CHECK(P.extra_formal_vars == std::pair<int, int>{0, 0});
  CHECK(relations_parse(P));
}

TEST_CASE("relation strings parse over generators and p only") {
  RingPresentation P;
  P.gens = {{"c11", GenKind::MaximalIdeal}, {"c22", GenKind::MaximalIdeal}};
  P.relations = {"c11*c22 + p"};
  CHECK(relations_parse(P));
  P.relations = {"c11*c33 + p"};
  CHECK_FALSE(relations_parse(P));
}
