#include "u11/json_io.hpp"

namespace u11::jsonio {

namespace {

json coeffs_json(const arith::Coeffs& c) {
  json out = json::array();
  for (auto v : c) out.push_back(v);
  return out;
}

}  // namespace

json ring_json(const arith::LocalRing& R) {
  json out;
  out["p"] = R.p();
  out["m"] = R.m();
  out["modulus"] = coeffs_json(R.modulus());
  return out;
}

json elem_json(const arith::LocalRing::Elem& a) { return coeffs_json(a); }

json vpoly_json(const arith::VPoly& a) {
  json out = json::array();
  for (const auto& c : a.c) out.push_back(elem_json(c));
  return out;
}

json mat_json(const arith::Mat2& A) {
  json out = json::array();
  for (int i = 0; i < 2; ++i) {
    json row = json::array();
    for (int j = 0; j < 2; ++j) row.push_back(vpoly_json(A.e[i][j]));
    out.push_back(row);
  }
  return out;
}

json fmat_json(const arith::FMat2& A) {
  json out = json::array();
  for (int i = 0; i < 2; ++i) {
    json row = json::array();
    for (int j = 0; j < 2; ++j) row.push_back(elem_json(A.e[i][j]));
    out.push_back(row);
  }
  return out;
}

json tchar_json(const reps::TChar& chi) {
  json out;
  out["r"] = chi.r.v;
  out["lambda"] = elem_json(chi.lambda);
  return out;
}

json factor_json(const reps::NonSCFactor& F) {
  json out;
  switch (F.kind) {
    case reps::FactorKind::Character:
      out["type"] = "character";
      out["k"] = F.k;
      break;
    case reps::FactorKind::Special:
      out["type"] = "special";
      out["k"] = F.k;
      break;
    case reps::FactorKind::PrincipalSeries:
      out["type"] = "ps";
      out["r"] = F.r;
      out["lambda"] = elem_json(F.lambda);
      break;
  }
  return out;
}

json semisimple_json(const reps::SemisimpleNonSC& S) {
  json out = json::array();
  for (const auto& F : S.factors) out.push_back(factor_json(F));
  return out;
}

json packet_index_json(const reps::PacketIndex& idx) {
  json out;
  out["r"] = idx.r;
  out["lambda"] = elem_json(idx.lambda);
  out["k"] = idx.k;
  return out;
}

json presentation_json(const reps::RingPresentation& P) {
  json out;
  out["base"] = P.base;
  json gens = json::array();
  for (const auto& [name, kind] : P.gens) {
    json g;
    g["name"] = name;
    g["kind"] = reps::gen_kind_name(kind);
    gens.push_back(g);
  }
  out["gens"] = gens;
  out["relations"] = P.relations;
  out["extra"] = json::array({P.extra_formal_vars.first, P.extra_formal_vars.second});
  return out;
}

json lparam_json(const galois::LParam& P) {
  json out;
  out["r"] = P.r.v;
  out["lambda"] = elem_json(P.lambda);
  return out;
}

json cparam_json(const galois::CParamNS& P) {
  json out;
  out["r"] = P.r.v;
  out["lambda"] = elem_json(P.lambda);
  return out;
}

json ctype_json(const galois::CInertialType& t) {
  json out;
  out["exponents"] = json::array({t.exponents[0], t.exponents[1]});
  out["gm"] = t.gm_exp;
  return out;
}

json ps_type_json(const galois::PSInertialType& t) {
  json out;
  out["exponents"] = json::array({t.a.v, t.b.v});
  return out;
}

std::string weyl_name(galois::WeylElt w) {
  return w == galois::WeylElt::Id ? "id" : "s";
}

json witness_json(const galois::GenericWitness& w) {
  json out;
  out["w"] = weyl_name(w.w);
  out["a"] = w.a;
  out["b"] = w.b;
  return out;
}

json orientation_json(const galois::Orientation& o) {
  json out;
  out["w0"] = weyl_name(o.w0);
  out["w1"] = weyl_name(o.w1);
  return out;
}

json rep2_json(const galois::TameRep2& rho) {
  json out;
  out["frob2"] = fmat_json(rho.frob2);
  out["inertia_exponents"] = json::array({rho.inertia_exps[0], rho.inertia_exps[1]});
  return out;
}

json multiplier_json(const galois::Multiplier& theta) {
  json out;
  out["frob"] = elem_json(theta.frob_value);
  out["inertia"] = theta.inertia_exp;
  return out;
}

json gauge_json(const kisin::GaugeMatrix& g) {
  json out;
  out["ring"] = ring_json(g.R);
  out["shape"] = kisin::shape_name(g.shape);
  out["entries"] = mat_json(g.A);
  json coeffs;
  for (const auto& [name, value] : kisin::gauge_coeffs(g)) coeffs[name] = elem_json(value);
  out["coeffs"] = coeffs;
  return out;
}

json defring_json(const kisin::DefRingRecord& rec) {
  json out;
  out["shape"] = kisin::shape_name(rec.shape);
  out["presentation"] = presentation_json(rec.presentation);
  out["galois_iso_extra"] =
      json::array({rec.galois_iso_note.first, rec.galois_iso_note.second});
  out["hodge_type"] = rec.hodge_type;
  out["multiplier"] = rec.multiplier;
  out["potentially_crystalline"] = rec.potentially_crystalline;
  out["note"] = rec.open_problem_note;
  return out;
}

}  // namespace u11::jsonio
