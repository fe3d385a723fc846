#include "u11/reps.hpp"

#include <algorithm>

namespace u11::reps {

using arith::modn;

TChar make_tchar(const PrimeCtx& C, i64 r, FieldElem lambda) {
  if (C.fq_is_zero(lambda)) throw DomainError("TChar: lambda must be nonzero");
  return TChar{C.exp_mod_N(r), std::move(lambda)};
}

GChar make_gchar(const PrimeCtx& C, i64 k) { return GChar{C.exp_mod_p_plus_1(k)}; }

bool factor_less(const NonSCFactor& a, const NonSCFactor& b) {
  if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  if (a.kind != FactorKind::PrincipalSeries) return a.k < b.k;
  if (a.r != b.r) return a.r < b.r;
  return a.lambda < b.lambda;  // lexicographic on coefficients
}

NonSCFactor character_factor(const PrimeCtx& C, i64 k) {
  NonSCFactor F;
  F.kind = FactorKind::Character;
  F.k = modn(k, C.p() + 1);
  F.lambda = C.fq_zero();
  return F;
}

NonSCFactor special_factor(const PrimeCtx& C, i64 k) {
  NonSCFactor F = character_factor(C, k);
  F.kind = FactorKind::Special;
  return F;
}

NonSCFactor ps_factor(const PrimeCtx& C, const TChar& chi) {
  if (extends_to_G(C, chi))
    throw DomainError("ps_factor: inducing character extends to G, series is reducible");
  NonSCFactor F;
  F.kind = FactorKind::PrincipalSeries;
  F.k = 0;
  F.r = chi.r.v;
  F.lambda = chi.lambda;
  return F;
}

SemisimpleNonSC make_semisimple(std::vector<NonSCFactor> fs) {
  std::sort(fs.begin(), fs.end(), factor_less);
  return SemisimpleNonSC{std::move(fs)};
}

PacketIndex make_packet_index(const PrimeCtx& C, i64 r, FieldElem lambda, i64 k) {
  if (r < 0 || r > C.p() - 1) throw DomainError("PacketIndex: r out of [0, p-1]");
  if (k < 0 || k > C.p()) throw DomainError("PacketIndex: k out of [0, p]");
  if (C.fq_is_zero(lambda)) throw DomainError("PacketIndex: lambda must be nonzero");
  return PacketIndex{r, std::move(lambda), k};
}

std::string gen_kind_name(GenKind k) {
  switch (k) {
    case GenKind::Unrestricted: return "unrestricted";
    case GenKind::Unit: return "unit";
    case GenKind::MaximalIdeal: return "maximal-ideal";
  }
  return "";
}

bool relations_parse(const RingPresentation& P) {
  // Strip generator names (longest first) and the prime symbol; what is left
  // must be arithmetic glue.
  std::vector<std::string> names;
  for (const auto& [name, kind] : P.gens) names.push_back(name);
  std::sort(names.begin(), names.end(),
            [](const std::string& a, const std::string& b) { return a.size() > b.size(); });
  for (const std::string& rel : P.relations) {
    size_t i = 0;
    while (i < rel.size()) {
      bool matched = false;
      for (const std::string& n : names) {
        if (rel.compare(i, n.size(), n) == 0) {
          i += n.size();
          matched = true;
          break;
        }
      }
      if (matched) continue;
      char c = rel[i];
      if (c == 'p' || (c >= '0' && c <= '9') || c == ' ' || c == '+' || c == '-' || c == '*' ||
          c == '(' || c == ')') {
        ++i;
        continue;
      }
      return false;
    }
  }
  return true;
}

TChar restrict_det_char(const PrimeCtx& C, i64 k) {
  // (omega^k o det)(t(x)) = omega(x c(x)^{-1})^k = omega^{(1-p)k}(x) on units,
  // and det(t(p)) = 1, so the Frobenius parameter is 1.
  return make_tchar(C, (1 - C.p()) * modn(k, C.p() + 1), C.fq_one());
}

std::optional<i64> extends_to_G(const PrimeCtx& C, const TChar& chi) {
  if (!C.fq_is_one(chi.lambda)) return std::nullopt;
  if (chi.r.v % (C.p() - 1) != 0) return std::nullopt;
  i64 m = chi.r.v / (C.p() - 1);  // 0 <= m <= p since r <= p^2-2
  return modn(-m, C.p() + 1);
}

InducedStructure induced_structure(const PrimeCtx& C, const TChar& chi) {
  InducedStructure S;
  if (auto k = extends_to_G(C, chi)) {
    S.reducible = true;
    S.sub = character_factor(C, *k);
    S.quotient = special_factor(C, *k);
  }
  return S;
}

NonSCFactor twist_factor(const PrimeCtx& C, const NonSCFactor& F, i64 k) {
  NonSCFactor R = F;
  if (F.kind == FactorKind::PrincipalSeries) {
    // Twisting the inducing character by the restriction of omega^k o det.
    R.r = modn(F.r + k * (1 - C.p()), C.N());
  } else {
    R.k = modn(F.k + k, C.p() + 1);
  }
  return R;
}

SemisimpleNonSC twist(const PrimeCtx& C, const SemisimpleNonSC& S, i64 k) {
  std::vector<NonSCFactor> fs;
  fs.reserve(S.factors.size());
  for (const auto& F : S.factors) fs.push_back(twist_factor(C, F, k));
  return make_semisimple(std::move(fs));
}

SemisimpleNonSC pi_ss(const PrimeCtx& C, i64 r, const FieldElem& lambda) {
  if (r < 0 || r > C.p() - 1) throw DomainError("pi_ss: r out of [0, p-1]");
  if (C.fq_is_zero(lambda)) throw DomainError("pi_ss: lambda must be nonzero");
  TChar chi = make_tchar(C, -C.p() * r, C.fq_inv(lambda));
  InducedStructure S = induced_structure(C, chi);
  if (S.reducible) return make_semisimple({S.sub, S.quotient});
  return make_semisimple({ps_factor(C, chi)});
}

SemisimpleNonSC packet(const PrimeCtx& C, const PacketIndex& idx) {
  SemisimpleNonSC first = twist(C, pi_ss(C, idx.r, idx.lambda), idx.k);
  SemisimpleNonSC second =
      twist(C, pi_ss(C, C.p() - 1 - idx.r, C.fq_inv(idx.lambda)), idx.r + 1 + idx.k);
  std::vector<NonSCFactor> fs = first.factors;
  fs.insert(fs.end(), second.factors.begin(), second.factors.end());
  return make_semisimple(std::move(fs));
}

std::vector<NonSCFactor> classify_all(const PrimeCtx& C) {
  std::vector<NonSCFactor> out;
  for (i64 k = 0; k <= C.p(); ++k) out.push_back(character_factor(C, k));
  for (i64 k = 0; k <= C.p(); ++k) out.push_back(special_factor(C, k));
  for (i64 r = 0; r < C.N(); ++r) {
    for (i64 i = 1; i < C.q(); ++i) {
      TChar chi = make_tchar(C, r, C.nonzero_by_lex_index(i));
      if (extends_to_G(C, chi)) continue;
      out.push_back(ps_factor(C, chi));
    }
  }
  return out;
}

DeformStatus induction_deform_status(const PrimeCtx& C, const TChar& chi) {
  bool lambda_pm1 = C.fq_is_one(chi.lambda) || chi.lambda == C.fq_from_int(-1);
  if (!lambda_pm1) return DeformStatus::Isomorphism;
  if (modn(chi.r.v - 1, C.p() - 1) != 0) return DeformStatus::Isomorphism;
  return DeformStatus::OutsideCriterion;
}

bool induction_norm_oracle(const PrimeCtx& C, const TChar& chi) {
  // chi must differ from omega on p^2 (lambda^2 != 1) or on some Teichmueller
  // unit (u^r != u for some u in F_p^*); enumerate the p-1 units directly.
  if (!C.fq_is_one(C.fq_mul(chi.lambda, chi.lambda))) return true;
  for (i64 u = 1; u <= C.p() - 1; ++u) {
    if (arith::mod_pow(u, chi.r.v, C.p()) != u) return true;
  }
  return false;
}

DeformStatus steinberg_status(const PrimeCtx& C, const GChar& eta) {
  (void)C;
  (void)eta;
  return DeformStatus::Isomorphism;
}

RingPresentation universal_char_defring() {
  RingPresentation P;
  P.base = "O-power-series";
  P.gens = {{"X1", GenKind::Unrestricted}, {"X2", GenKind::Unrestricted}};
  P.relations = {};
  P.extra_formal_vars = {0, 0};
  return P;
}

}  // namespace u11::reps
