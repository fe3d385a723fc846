#include "u11/kisin.hpp"

#include <random>

namespace u11::kisin {

using arith::mat_det;
using arith::mat_eq;
using arith::mat_from;
using arith::mat_mul;
using arith::vp_const;
using arith::vp_eq;
using arith::vp_is_zero;
using arith::vp_neg;
using arith::vp_scale;
using arith::vp_times_v;
using arith::vp_v_plus_p;
using arith::vp_zero;
using Elem = LocalRing::Elem;

std::string shape_name(Shape s) {
  switch (s) {
    case Shape::T: return "t";
    case Shape::Tprime: return "t'";
    case Shape::W: return "w";
  }
  return "?";
}

std::optional<Shape> shape_from_name(std::string_view name) {
  if (name == "t") return Shape::T;
  if (name == "t'" || name == "tprime" || name == "t-prime") return Shape::Tprime;
  if (name == "w") return Shape::W;
  return std::nullopt;
}

namespace {

bool is_const(const VPoly& a) { return a.degree() <= 0; }

Elem const_of(const LocalRing& R, const VPoly& a) {
  return a.c.empty() ? R.zero() : a.c[0];
}

// v * c with no constant term; c may be zero.
bool is_v_multiple(const LocalRing& R, const VPoly& a) {
  return a.degree() <= 1 && (a.c.empty() || R.is_zero(a.c[0]));
}

Elem v_coeff(const LocalRing& R, const VPoly& a) {
  return a.degree() == 1 ? a.c[1] : R.zero();
}

// (v+p) * u with u a unit: degree exactly 1, unit top, constant = p * top.
std::optional<Elem> v_plus_p_unit(const LocalRing& R, const VPoly& a) {
  if (a.degree() != 1 || !R.is_unit(a.c[1])) return std::nullopt;
  if (!R.eq(a.c[0], R.scale(R.p(), a.c[1]))) return std::nullopt;
  return a.c[1];
}

}  // namespace

bool validate_gauge(const LocalRing& R, const Mat2& A, Shape s) {
  const VPoly& a = A.e[0][0];
  const VPoly& b = A.e[0][1];
  const VPoly& c = A.e[1][0];
  const VPoly& d = A.e[1][1];
  switch (s) {
    case Shape::T:
      return v_plus_p_unit(R, a).has_value() && vp_is_zero(b) && is_v_multiple(R, c) &&
             is_const(d) && R.is_unit(const_of(R, d));
    case Shape::Tprime:
      return is_const(a) && R.is_unit(const_of(R, a)) && is_const(b) && vp_is_zero(c) &&
             v_plus_p_unit(R, d).has_value();
    case Shape::W: {
      if (!is_const(a) || R.is_unit(const_of(R, a))) return false;
      if (!is_const(b) || !R.is_unit(const_of(R, b))) return false;
      if (!is_v_multiple(R, c) || !R.is_unit(v_coeff(R, c))) return false;
      if (!is_const(d) || R.is_unit(const_of(R, d))) return false;
      // c11 c22 = -p c12* c21*
      const Elem lhs = R.mul(const_of(R, a), const_of(R, d));
      const Elem rhs = R.neg(R.scale(R.p(), R.mul(const_of(R, b), v_coeff(R, c))));
      return R.eq(lhs, rhs);
    }
  }
  return false;
}

Shape detect_shape(const LocalRing& R, const Mat2& A) {
  for (Shape s : {Shape::T, Shape::Tprime, Shape::W})
    if (validate_gauge(R, A, s)) return s;
  throw NotGaugeError("matrix matches no gauge pattern over " + R.describe());
}

GaugeMatrix make_gauge(const LocalRing& R, const Mat2& A) {
  return GaugeMatrix{R, detect_shape(R, A), A};
}

std::vector<std::pair<std::string, Elem>> gauge_coeffs(const GaugeMatrix& g) {
  const LocalRing& R = g.R;
  const Mat2& A = g.A;
  switch (g.shape) {
    case Shape::T:
      return {{"c11*", v_coeff(R, A.e[0][0])},
              {"c21", v_coeff(R, A.e[1][0])},
              {"c22*", const_of(R, A.e[1][1])}};
    case Shape::Tprime:
      return {{"c11*", const_of(R, A.e[0][0])},
              {"c12", const_of(R, A.e[0][1])},
              {"c22*", v_coeff(R, A.e[1][1])}};
    case Shape::W:
      return {{"c11", const_of(R, A.e[0][0])},
              {"c12*", const_of(R, A.e[0][1])},
              {"c21*", v_coeff(R, A.e[1][0])},
              {"c22", const_of(R, A.e[1][1])}};
  }
  return {};
}

std::optional<Elem> det_height_check(const LocalRing& R, const Mat2& A) {
  return v_plus_p_unit(R, mat_det(R, A));
}

GaugeMatrix polarisation_partner(const GaugeMatrix& g) {
  const LocalRing& R = g.R;
  auto u = det_height_check(R, g.A);
  if (!u) throw HeightError("determinant is not unit * (v+p) over " + R.describe());
  const Elem ui = R.inverse(*u);
  // s * adj(A)^T * s = [[a, -b], [-c, d]]; scale by u^{-1}.
  Mat2 out = mat_from(vp_scale(R, ui, g.A.e[0][0]), vp_neg(R, vp_scale(R, ui, g.A.e[0][1])),
                      vp_neg(R, vp_scale(R, ui, g.A.e[1][0])), vp_scale(R, ui, g.A.e[1][1]));
  return make_gauge(R, out);
}

bool check_polarisation(const LocalRing& R, const Mat2& A0, const Mat2& A1) {
  // s * A1^T * s swaps both indices.
  Mat2 swapped = mat_from(A1.e[1][1], A1.e[0][1], A1.e[1][0], A1.e[0][0]);
  const VPoly vp = vp_v_plus_p(R);
  Mat2 target = mat_from(vp, vp_zero(), vp_zero(), vp);
  return mat_eq(mat_mul(R, A0, swapped), target);
}

KisinPair polarised_pair(const GaugeMatrix& A1) { return KisinPair{polarisation_partner(A1), A1}; }

DefRingRecord explicit_defring(Shape s) {
  using reps::GenKind;
  DefRingRecord rec;
  rec.shape = s;
  rec.presentation.base = "O";
  switch (s) {
    case Shape::T:
      rec.presentation.gens = {{"c21", GenKind::Unrestricted},
                               {"c11*", GenKind::Unit},
                               {"c22*", GenKind::Unit}};
      break;
    case Shape::Tprime:
      rec.presentation.gens = {{"c12", GenKind::Unrestricted},
                               {"c11*", GenKind::Unit},
                               {"c22*", GenKind::Unit}};
      break;
    case Shape::W:
      rec.presentation.gens = {{"c11", GenKind::MaximalIdeal},
                               {"c22", GenKind::MaximalIdeal},
                               {"c12*", GenKind::Unit},
                               {"c21*", GenKind::Unit}};
      rec.presentation.relations = {"c11*c22 + p"};
      break;
  }
  rec.presentation.extra_formal_vars = {2, 4};
  rec.galois_iso_note = {2, 4};
  rec.open_problem_note =
      "identifies the framed ring only up to the formal variables S1, S2; "
      "removing them is an open problem";
  // Relation strings must parse over the generator names.
  if (!reps::relations_parse(rec.presentation))
    throw DomainError("presentation relation fails to parse");
  return rec;
}

GaugeMatrix sample_gauge(Shape s, const LocalRing& R, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  const i64 size = R.size();
  auto rand_elem = [&] { return R.elem_by_index(static_cast<i64>(gen() % static_cast<std::uint64_t>(size))); };
  auto rand_unit = [&] {
    Elem e = rand_elem();
    while (!R.is_unit(e)) e = rand_elem();
    return e;
  };

  Mat2 A;
  switch (s) {
    case Shape::T: {
      const Elem c11s = rand_unit();
      const Elem c21 = rand_elem();
      const Elem c22s = rand_unit();
      A = mat_from(vp_scale(R, c11s, vp_v_plus_p(R)), vp_zero(),
                   vp_times_v(R, vp_const(R, c21)), vp_const(R, c22s));
      break;
    }
    case Shape::Tprime: {
      const Elem c11s = rand_unit();
      const Elem c12 = rand_elem();
      const Elem c22s = rand_unit();
      A = mat_from(vp_const(R, c11s), vp_const(R, c12), vp_zero(),
                   vp_scale(R, c22s, vp_v_plus_p(R)));
      break;
    }
    case Shape::W: {
      const Elem c12s = rand_unit();
      const Elem c21s = rand_unit();
      // Base solutions of x y = -p inside the maximal ideal; scaling the
      // second member by the sampled unit c12* c21* is a bijection onto the
      // solutions of the actual gauge relation.
      std::vector<Elem> nonunits;
      for (i64 i = 0; i < size; ++i) {
        Elem e = R.elem_by_index(i);
        if (!R.is_unit(e)) nonunits.push_back(std::move(e));
      }
      const Elem minus_p = R.neg(R.from_int(R.p()));
      std::vector<std::pair<Elem, Elem>> sols;
      for (const Elem& x : nonunits)
        for (const Elem& y : nonunits)
          if (R.eq(R.mul(x, y), minus_p)) sols.emplace_back(x, y);
      if (sols.empty())
        throw SolvabilityError("no maximal-ideal pair multiplies to -p over " + R.describe() +
                               "; the shape-w gauge relation has no points here");
      const auto& [x, y] = sols[static_cast<std::size_t>(gen() % sols.size())];
      const Elem c11 = x;
      const Elem c22 = R.mul(y, R.mul(c12s, c21s));
      A = mat_from(vp_const(R, c11), vp_const(R, c12s), vp_times_v(R, vp_const(R, c21s)),
                   vp_const(R, c22));
      break;
    }
  }
  if (!validate_gauge(R, A, s)) throw NotGaugeError("sampler produced an invalid gauge matrix");
  return GaugeMatrix{R, s, A};
}

}  // namespace u11::kisin
