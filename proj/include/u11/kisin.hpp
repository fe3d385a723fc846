#pragma once

// Rank-2 Kisin modules in gauge coordinates over the Artinian local rings from
// arith.  A module is carried entirely by its partial-Frobenius matrix in a
// gauge basis; the three shape patterns, the determinant-height invariant
// det = unit * (v+p), and the polarisation pairing are all exact polynomial
// identities, checked with no approximation.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "u11/arith.hpp"
#include "u11/reps.hpp"

namespace u11::kisin {

using arith::i64;
using arith::LocalRing;
using arith::Mat2;
using arith::VPoly;

enum class Shape { T, Tprime, W };

std::string shape_name(Shape s);  // "t", "t'", "w"
std::optional<Shape> shape_from_name(std::string_view name);

// Gauge patterns (starred coefficients are units, unstarred constants for W
// lie in the maximal ideal):
//   T:  [[(v+p) c11*, 0], [v c21, c22*]]
//   T': [[c11*, c12], [0, (v+p) c22*]]
//   W:  [[c11, c12*], [v c21*, c22]]   with   c11 c22 = -p c12* c21*
bool validate_gauge(const LocalRing& R, const Mat2& A, Shape s);

// The unique shape whose pattern A matches; NotGaugeError when none does.
// The patterns are mutually exclusive.
Shape detect_shape(const LocalRing& R, const Mat2& A);

struct GaugeMatrix {
  LocalRing R;
  Shape shape;
  Mat2 A;
};

GaugeMatrix make_gauge(const LocalRing& R, const Mat2& A);

// Named coefficients in gauge-table order, e.g. {"c11*", ...} for shape T.
std::vector<std::pair<std::string, LocalRing::Elem>> gauge_coeffs(const GaugeMatrix& g);

// The height-1 determinant condition det(A) = u * (v+p); returns u when it
// holds, nullopt otherwise.
std::optional<LocalRing::Elem> det_height_check(const LocalRing& R, const Mat2& A);

// Polarisation partner A0 = u^{-1} * s * adj(A1)^T * s with u the determinant
// unit and s the antidiagonal involution; an exact involution that preserves
// the shape.  Throws HeightError when det is not unit * (v+p).
GaugeMatrix polarisation_partner(const GaugeMatrix& A1);

// The cleared pairing identity A0 * s * A1^T * s = (v+p) * I.
bool check_polarisation(const LocalRing& R, const Mat2& A0, const Mat2& A1);

struct KisinPair {
  GaugeMatrix A0;
  GaugeMatrix A1;
};

KisinPair polarised_pair(const GaugeMatrix& A1);

// Explicit deformation-ring presentation attached to a shape, together with
// the framed-comparison bookkeeping (2 formal variables on the Galois side
// against 4 on the explicit side) and fixed metadata labels.
struct DefRingRecord {
  Shape shape = Shape::T;
  reps::RingPresentation presentation;
  std::pair<int, int> galois_iso_note{2, 4};
  std::string hodge_type = "(1,0,1)";
  std::string multiplier = "cyclotomic";
  bool potentially_crystalline = true;
  std::string open_problem_note;
};

DefRingRecord explicit_defring(Shape s);

// Seeded sampler of valid gauge matrices.  For shape W the diagonal pair must
// solve c11 c22 = -p * unit inside the maximal ideal; rings where that
// equation has no solution (for instance Z/p^2, where nonunit products land
// in (p^2) = 0) get a SolvabilityError, which is the mathematically correct
// answer rather than a sampling failure.
GaugeMatrix sample_gauge(Shape s, const LocalRing& R, std::uint64_t seed);

}  // namespace u11::kisin
