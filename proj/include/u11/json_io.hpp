#pragma once

// Canonical JSON encodings of the library's value types, one function per
// type.  Every CLI payload is assembled from these, so report schemas stay
// identical across commands.  nlohmann::ordered_json preserves insertion
// order, which keeps serialized reports byte-reproducible.

#include <string>

#include <json.hpp>

#include "u11/arith.hpp"
#include "u11/galois.hpp"
#include "u11/kisin.hpp"
#include "u11/reps.hpp"

namespace u11::jsonio {

using json = nlohmann::ordered_json;

// Ring descriptor {p, m, modulus}; coefficients little-endian throughout.
json ring_json(const arith::LocalRing& R);
json elem_json(const arith::LocalRing::Elem& a);
json vpoly_json(const arith::VPoly& a);
json mat_json(const arith::Mat2& A);
json fmat_json(const arith::FMat2& A);

json tchar_json(const reps::TChar& chi);
// Tagged factor record: {"type": "character" | "special" | "ps", ...}.
json factor_json(const reps::NonSCFactor& F);
json semisimple_json(const reps::SemisimpleNonSC& S);
json packet_index_json(const reps::PacketIndex& idx);
json presentation_json(const reps::RingPresentation& P);

// Parameters as {"r", "lambda"}, inertial types as {"exponents", "gm"}.
json lparam_json(const galois::LParam& P);
json cparam_json(const galois::CParamNS& P);
json ctype_json(const galois::CInertialType& t);
json ps_type_json(const galois::PSInertialType& t);
std::string weyl_name(galois::WeylElt w);  // "id" | "s"
json witness_json(const galois::GenericWitness& w);
json orientation_json(const galois::Orientation& o);
json rep2_json(const galois::TameRep2& rho);
json multiplier_json(const galois::Multiplier& theta);

json gauge_json(const kisin::GaugeMatrix& g);
json defring_json(const kisin::DefRingRecord& rec);

}  // namespace u11::jsonio
