#include "u11/runner.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "u11/errors.hpp"

namespace u11::runner {

using arith::Coeffs;
using arith::LocalRing;
using arith::PrimeCtx;
using jsonio::json;

namespace {

PrimeCtx make_ctx(const SessionConfig& cfg) { return PrimeCtx(cfg.p, cfg.f, cfg.modulus); }

// Ring for the gauge commands: explicit modulus wins, otherwise the
// lex-smallest degree-f modulus over Z/p^m.
LocalRing make_ring(const SessionConfig& cfg) {
  if (cfg.modulus) return LocalRing(cfg.p, cfg.m, *cfg.modulus);
  if (cfg.f == 1) return cfg.m == 1 ? LocalRing::fp(cfg.p) : LocalRing::zpm(cfg.p, cfg.m);
  Coeffs g = PrimeCtx::auto_modulus(cfg.p, cfg.f);
  return cfg.m == 1 ? LocalRing::fq(cfg.p, g) : LocalRing::galois_ring(cfg.p, cfg.m, g);
}

arith::i64 require_arg(const std::optional<i64>& v, const char* flag) {
  if (!v) throw UsageError(std::string(flag) + " is required for this command");
  return *v;
}

// --lambda coefficient lists are little-endian over F_p; --lambda-index i is
// the i-th nonzero element in lexicographic order; default lambda = 1.
PrimeCtx::FieldElem resolve_lambda(const PrimeCtx& C, const SessionConfig& cfg) {
  if (cfg.lambda_coeffs && cfg.lambda_index)
    throw UsageError("--lambda and --lambda-index are mutually exclusive");
  if (cfg.lambda_coeffs) {
    const Coeffs& in = *cfg.lambda_coeffs;
    if (static_cast<i64>(in.size()) > C.f())
      throw DomainError("lambda coefficient list longer than the field degree");
    Coeffs e(static_cast<size_t>(C.f()), 0);
    for (size_t i = 0; i < in.size(); ++i) e[i] = arith::modn(in[i], C.p());
    if (C.fq_is_zero(e)) throw DomainError("lambda must be nonzero");
    return e;
  }
  if (cfg.lambda_index) return C.nonzero_by_lex_index(*cfg.lambda_index);
  return C.fq_one();
}

kisin::Shape resolve_shape(const SessionConfig& cfg) {
  if (!cfg.shape) throw UsageError("--shape is required for this command");
  auto s = kisin::shape_from_name(*cfg.shape);
  if (!s) throw UsageError("unknown shape: " + *cfg.shape);
  return *s;
}

json config_echo(const SessionConfig& cfg) {
  json c;
  c["p"] = cfg.p;
  c["f"] = cfg.f;
  c["m"] = cfg.m;
  c["modulus"] = cfg.modulus ? jsonio::elem_json(*cfg.modulus) : json("auto");
  c["seed"] = cfg.seed;
  c["samples"] = cfg.samples;
  return c;
}

// ---------------------------------------------------------------------------
// Single-shot commands.

json cmd_classify(const SessionConfig& cfg) {
  PrimeCtx C = make_ctx(cfg);
  auto labels = reps::classify_all(C);
  json out;
  out["count"] = static_cast<i64>(labels.size());
  json arr = json::array();
  for (const auto& F : labels) arr.push_back(jsonio::factor_json(F));
  out["labels"] = arr;
  return out;
}

json cmd_packet(const SessionConfig& cfg) {
  PrimeCtx C = make_ctx(cfg);
  auto idx = reps::make_packet_index(C, require_arg(cfg.r, "--r"), resolve_lambda(C, cfg),
                                     cfg.k.value_or(0));
  json out;
  out["packet"] = jsonio::packet_index_json(idx);
  out["factors"] = jsonio::semisimple_json(reps::packet(C, idx));
  return out;
}

json cmd_correspond(const SessionConfig& cfg) {
  PrimeCtx C = make_ctx(cfg);
  auto idx = reps::make_packet_index(C, require_arg(cfg.r, "--r"), resolve_lambda(C, cfg),
                                     cfg.k.value_or(0));
  auto P = galois::param_for_packet(C, idx);
  json out;
  out["packet"] = jsonio::packet_index_json(idx);
  out["param"] = jsonio::cparam_json(P);
  out["inertia"] = jsonio::ctype_json(galois::c_inertia(C, P));
  json fiber = json::array();
  for (const auto& q : galois::packets_for_param(C, P)) fiber.push_back(jsonio::packet_index_json(q));
  out["fiber"] = fiber;
  return out;
}

json cmd_param_equiv(const SessionConfig& cfg) {
  PrimeCtx C = make_ctx(cfg);
  i64 r = require_arg(cfg.r, "--r");
  auto lam = resolve_lambda(C, cfg);
  auto P = galois::make_cparam(C, r, lam);
  auto partner = galois::make_cparam(C, -C.p() * r - (C.p() + 1), C.fq_inv(lam));
  std::vector<galois::CParamNS> cls{P};
  if (!(partner == P)) cls.push_back(partner);
  std::sort(cls.begin(), cls.end(), [&](const auto& x, const auto& y) {
    return std::pair(x.r.v, C.index_of(x.lambda)) < std::pair(y.r.v, C.index_of(y.lambda));
  });
  json out;
  out["param"] = jsonio::cparam_json(P);
  out["canonical"] = jsonio::cparam_json(galois::canonical_rep(C, P));
  json arr = json::array();
  for (const auto& q : cls) arr.push_back(jsonio::cparam_json(q));
  out["equivalence_class"] = arr;
  out["class_size"] = static_cast<i64>(cls.size());
  return out;
}

json cmd_generic(const SessionConfig& cfg) {
  PrimeCtx C = make_ctx(cfg);
  auto P = galois::make_cparam(C, require_arg(cfg.r, "--r"), resolve_lambda(C, cfg));
  i64 n = cfg.n.value_or(0);
  json out;
  out["param"] = jsonio::cparam_json(P);
  out["n"] = n;
  out["inertia"] = jsonio::ctype_json(galois::c_inertia(C, P));
  auto w = galois::n_generic_witness(C, P, n);
  out["witness"] = w ? jsonio::witness_json(*w) : json(nullptr);
  return out;
}

json cmd_orientation(const SessionConfig& cfg) {
  PrimeCtx C = make_ctx(cfg);
  i64 a = require_arg(cfg.a, "--a"), b = require_arg(cfg.b, "--b");
  json out;
  out["a"] = a;
  out["b"] = b;
  out["orientation"] = jsonio::orientation_json(galois::orientation(C, a, b));
  return out;
}

json cmd_ftsd(const SessionConfig& cfg) {
  PrimeCtx C = make_ctx(cfg);
  i64 a = require_arg(cfg.a, "--a"), b = require_arg(cfg.b, "--b");
  auto t = galois::make_ps_type(C, a, b);
  json out;
  out["type"] = jsonio::ps_type_json(t);
  out["ftsd"] = galois::ps_is_ftsd(C, t);
  if (cfg.n) out["n_generic"] = galois::ps_is_n_generic(C, a, b, *cfg.n);
  return out;
}

json cmd_shape(const SessionConfig& cfg) {
  auto s = resolve_shape(cfg);
  LocalRing R = make_ring(cfg);
  auto g = kisin::sample_gauge(s, R, cfg.seed);
  json out;
  out["gauge"] = jsonio::gauge_json(g);
  out["det_unit"] = jsonio::elem_json(*kisin::det_height_check(g.R, g.A));
  auto pair = kisin::polarised_pair(g);
  out["partner"] = jsonio::gauge_json(pair.A0);
  out["pairing_ok"] = kisin::check_polarisation(R, pair.A0.A, pair.A1.A);
  return out;
}

json cmd_polarise(const SessionConfig& cfg) {
  PrimeCtx C = make_ctx(cfg);
  auto P = galois::make_cparam(C, require_arg(cfg.r, "--r"), resolve_lambda(C, cfg));
  auto [rho2, theta] = galois::base_change(C, P);
  auto alpha = galois::polarisation_of(C, P);
  json out;
  out["param"] = jsonio::cparam_json(P);
  out["rep2"] = jsonio::rep2_json(rho2);
  out["multiplier"] = jsonio::multiplier_json(theta);
  out["alpha"] = jsonio::fmat_json(alpha);
  out["verified"] = galois::verify_polarisation(C, rho2, theta, alpha);
  return out;
}

json cmd_defring(const SessionConfig& cfg) {
  return jsonio::defring_json(kisin::explicit_defring(resolve_shape(cfg)));
}

// ---------------------------------------------------------------------------
// Verification suites.

constexpr i64 kMaxCounterexamples = 25;

struct PropertyResult {
  std::string name;
  i64 checked = 0;
  i64 failures = 0;
  json counterexamples = json::array();
};

void fail(PropertyResult& prop, json cx) {
  ++prop.failures;
  if (static_cast<i64>(prop.counterexamples.size()) < kMaxCounterexamples)
    prop.counterexamples.push_back(std::move(cx));
}

struct SuiteResult {
  std::string name;
  std::vector<PropertyResult> properties;
};

std::vector<i64> plist(const SessionConfig& cfg, std::vector<i64> dflt) {
  return cfg.p_list.empty() ? dflt : cfg.p_list;
}

std::vector<i64> nlist(const SessionConfig& cfg) {
  return cfg.n_list.empty() ? std::vector<i64>{0, 1, 2} : cfg.n_list;
}

std::vector<LocalRing> ring_battery(i64 p) {
  Coeffs g2 = PrimeCtx::auto_modulus(p, 2);
  return {LocalRing::fp(p), LocalRing::fq(p, g2), LocalRing::zpm(p, 2),
          LocalRing::galois_ring(p, 2, g2), LocalRing::ramified_quadratic(p)};
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t block, std::uint64_t i) {
  return seed ^ (0x9E3779B97F4A7C15ull * (block * 1000003ull + i + 1ull));
}

SuiteResult suite_arith(const SessionConfig& cfg) {
  SuiteResult S{"arith", {}};
  auto ps = plist(cfg, {3, 5});

  PropertyResult automod{"auto-modulus-lex-smallest"};
  for (i64 p : ps) {
    for (i64 f : {i64{1}, i64{2}}) {
      Coeffs got = PrimeCtx::auto_modulus(p, f);
      Coeffs expect;
      if (f == 1) {
        expect = {0, 1};
      } else {
        // First monic irreducible in lex order, c0 most significant.
        for (i64 c0 = 0; c0 < p && expect.empty(); ++c0) {
          for (i64 c1 = 0; c1 < p && expect.empty(); ++c1) {
            bool has_root = false;
            for (i64 x = 0; x < p && !has_root; ++x)
              has_root = arith::modn(x * x + c1 * x + c0, p) == 0;
            if (!has_root) expect = {c0, c1, 1};
          }
        }
      }
      ++automod.checked;
      if (got != expect)
        fail(automod, {{"p", p}, {"f", f}, {"got", jsonio::elem_json(got)},
                       {"expected", jsonio::elem_json(expect)}});
    }
  }
  S.properties.push_back(std::move(automod));

  PropertyResult inv{"unit-inverse-and-count"};
  for (i64 p : ps) {
    for (const auto& R : ring_battery(p)) {
      i64 units = 0;
      for (i64 idx = 0; idx < R.size(); ++idx) {
        auto a = R.elem_by_index(idx);
        if (!R.is_unit(a)) continue;
        ++units;
        ++inv.checked;
        if (!R.eq(R.mul(a, R.inverse(a)), R.one()))
          fail(inv, {{"ring", R.describe()}, {"index", idx}});
      }
      ++inv.checked;
      i64 expected_units = R.size() - R.size() / R.residue_field().size();
      if (units != expected_units)
        fail(inv, {{"ring", R.describe()}, {"units", units}, {"expected", expected_units}});
    }
  }
  S.properties.push_back(std::move(inv));

  PropertyResult adj{"adjugate-identity"};
  for (i64 p : ps) {
    std::uint64_t block = 0;
    for (const auto& R : ring_battery(p)) {
      std::mt19937_64 gen(mix_seed(cfg.seed, ++block, static_cast<std::uint64_t>(p)));
      auto rand_elem = [&] {
        return R.elem_by_index(static_cast<i64>(gen() % static_cast<std::uint64_t>(R.size())));
      };
      auto rand_vp = [&] {
        std::vector<LocalRing::Elem> cs;
        auto d = gen() % 3;
        for (std::uint64_t j = 0; j <= d; ++j) cs.push_back(rand_elem());
        return arith::vp_from(R, std::move(cs));
      };
      for (int t = 0; t < 10; ++t) {
        arith::Mat2 A = arith::mat_from(rand_vp(), rand_vp(), rand_vp(), rand_vp());
        auto det = arith::mat_det(R, A);
        auto dI = arith::mat_scale(R, det, arith::mat_identity(R));
        ++adj.checked;
        if (!arith::mat_eq(arith::mat_mul(R, arith::mat_adj(R, A), A), dI) ||
            !arith::mat_eq(arith::mat_mul(R, A, arith::mat_adj(R, A)), dI))
          fail(adj, {{"ring", R.describe()}, {"trial", t}});
      }
    }
  }
  S.properties.push_back(std::move(adj));

  PropertyResult idxrt{"element-index-roundtrip"};
  for (i64 p : ps) {
    for (const auto& R : ring_battery(p)) {
      for (i64 idx = 0; idx < R.size(); ++idx) {
        ++idxrt.checked;
        if (R.index_of(R.elem_by_index(idx)) != idx)
          fail(idxrt, {{"ring", R.describe()}, {"index", idx}});
      }
    }
  }
  S.properties.push_back(std::move(idxrt));
  return S;
}

SuiteResult suite_reps(const SessionConfig& cfg) {
  SuiteResult S{"reps", {}};
  auto ps = plist(cfg, {3, 5});

  PropertyResult ext{"extension-count"};
  for (i64 p : ps) {
    for (i64 f : {i64{1}, i64{2}}) {
      PrimeCtx C(p, f);
      i64 count = 0;
      for (i64 r = 0; r < C.N(); ++r)
        for (i64 li = 1; li < C.q(); ++li)
          if (reps::extends_to_G(C, reps::make_tchar(C, r, C.nonzero_by_lex_index(li)))) ++count;
      ++ext.checked;
      if (count != p + 1) fail(ext, {{"p", p}, {"f", f}, {"count", count}});
    }
  }
  S.properties.push_back(std::move(ext));

  PropertyResult bd{"semisimplification-boundary"};
  for (i64 p : ps) {
    PrimeCtx C(p, 1);
    auto expect0 = reps::make_semisimple({reps::character_factor(C, 0), reps::special_factor(C, 0)});
    auto expectp = reps::make_semisimple({reps::character_factor(C, p), reps::special_factor(C, p)});
    ++bd.checked;
    if (!(reps::pi_ss(C, 0, C.fq_one()) == expect0)) fail(bd, {{"p", p}, {"r", 0}});
    ++bd.checked;
    if (!(reps::pi_ss(C, p - 1, C.fq_one()) == expectp)) fail(bd, {{"p", p}, {"r", p - 1}});
  }
  S.properties.push_back(std::move(bd));

  PropertyResult cls{"classification-count"};
  for (i64 p : ps) {
    for (i64 f : {i64{1}, i64{2}}) {
      PrimeCtx C(p, f);
      auto labels = reps::classify_all(C);
      i64 expect = (p + 1) + (p + 1) + ((p * p - 1) * (C.q() - 1) - (p + 1));
      ++cls.checked;
      if (static_cast<i64>(labels.size()) != expect)
        fail(cls, {{"p", p}, {"f", f}, {"count", static_cast<i64>(labels.size())},
                   {"expected", expect}});
      std::sort(labels.begin(), labels.end(), reps::factor_less);
      ++cls.checked;
      if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
        fail(cls, {{"p", p}, {"f", f}, {"duplicate", true}});
    }
  }
  S.properties.push_back(std::move(cls));

  PropertyResult ind{"induction-deformation-criterion"};
  for (i64 p : ps) {
    for (i64 f : {i64{1}, i64{2}}) {
      PrimeCtx C(p, f);
      for (i64 r = 0; r < C.N(); ++r) {
        for (i64 li = 1; li < C.q(); ++li) {
          auto chi = reps::make_tchar(C, r, C.nonzero_by_lex_index(li));
          bool status = reps::induction_deform_status(C, chi) == reps::DeformStatus::Isomorphism;
          ++ind.checked;
          if (status != reps::induction_norm_oracle(C, chi))
            fail(ind, {{"p", p}, {"f", f}, {"r", r}, {"lambda_index", li}});
        }
      }
    }
  }
  S.properties.push_back(std::move(ind));
  return S;
}

// The two-family form of the fixed-by-twist-dual condition: both exponents
// scalar on inertia, or b = -pa, or a = -pb.
bool two_family_form(i64 p, i64 N, i64 a, i64 b) {
  bool scalar = arith::modn(a, p - 1) == 0 && arith::modn(b, p - 1) == 0;
  return scalar || arith::modn(b + p * a, N) == 0 || arith::modn(a + p * b, N) == 0;
}

SuiteResult suite_galois(const SessionConfig& cfg) {
  SuiteResult S{"galois", {}};
  auto ps = plist(cfg, {3, 5});
  auto ns = nlist(cfg);

  PropertyResult weyl{"weyl-triviality"};
  for (i64 p : ps) {
    PrimeCtx C(p, 1);
    for (i64 n : ns) {
      weyl.checked += C.N();
      for (i64 r : galois::weyl_triviality_check(C, n)) fail(weyl, {{"p", p}, {"n", n}, {"r", r}});
    }
  }
  S.properties.push_back(std::move(weyl));

  PropertyResult ftsd{"ftsd-two-family"};
  for (i64 p : ps) {
    PrimeCtx C(p, 1);
    for (i64 a = 0; a < C.N(); ++a) {
      for (i64 b = 0; b < C.N(); ++b) {
        ++ftsd.checked;
        if (galois::ps_is_ftsd(C, galois::make_ps_type(C, a, b)) != two_family_form(p, C.N(), a, b))
          fail(ftsd, {{"p", p}, {"a", a}, {"b", b}});
      }
    }
  }
  S.properties.push_back(std::move(ftsd));

  // 2-generic pairs only exist for p >= 7, so the default list differs here.
  PropertyResult ori{"orientation-on-2-generic"};
  for (i64 p : plist(cfg, {5, 7})) {
    PrimeCtx C(p, 1);
    for (i64 a = 0; a < C.N(); ++a) {
      for (i64 b = 0; b < C.N(); ++b) {
        if (!galois::ps_is_n_generic(C, a, b, 2)) continue;
        ++ori.checked;
        try {
          auto o = galois::orientation(C, a, b);
          auto flipped = galois::orientation(C, b, a);
          if (o.w0 == flipped.w0 || o.w1 == flipped.w1) fail(ori, {{"p", p}, {"a", a}, {"b", b}});
        } catch (const PreconditionError&) {
          fail(ori, {{"p", p}, {"a", a}, {"b", b}, {"tied", true}});
        }
      }
    }
  }
  S.properties.push_back(std::move(ori));

  // Capacity-bounded, so the prime is pinned rather than taken from p_list.
  PropertyResult agree{"equivalence-oracle-agreement"};
  {
    PrimeCtx C(3, 1);
    std::vector<galois::CParamNS> params;
    for (i64 r = 0; r < C.N(); ++r)
      for (i64 li = 1; li < C.q(); ++li)
        params.push_back(galois::make_cparam(C, r, C.nonzero_by_lex_index(li)));
    for (const auto& A : params) {
      for (const auto& B : params) {
        ++agree.checked;
        bool fast = galois::cparam_equiv_fast(C, A, B);
        bool brute = galois::cparam_equiv_bruteforce(C, galois::lift_tame(C, A), galois::lift_tame(C, B));
        if (fast != brute)
          fail(agree, {{"ra", A.r.v}, {"la", C.index_of(A.lambda)},
                       {"rb", B.r.v}, {"lb", C.index_of(B.lambda)}, {"fast", fast}});
      }
    }
  }
  S.properties.push_back(std::move(agree));

  PropertyResult pol{"base-change-polarisation"};
  for (i64 p : ps) {
    PrimeCtx C(p, 1);
    for (i64 r = 0; r < C.N(); ++r) {
      for (i64 li = 1; li < C.q(); ++li) {
        auto P = galois::make_cparam(C, r, C.nonzero_by_lex_index(li));
        auto [rho2, theta] = galois::base_change(C, P);
        ++pol.checked;
        if (!galois::verify_polarisation(C, rho2, theta, galois::polarisation_of(C, P)))
          fail(pol, {{"p", p}, {"r", r}, {"lambda_index", li}});
      }
    }
  }
  S.properties.push_back(std::move(pol));
  return S;
}

SuiteResult suite_correspondence(const SessionConfig& cfg) {
  SuiteResult S{"correspondence", {}};
  auto ps = plist(cfg, {3});

  PropertyResult fib{"fiber-consistency"};
  PropertyResult conj{"conjugation-invariance"};
  PropertyResult rt{"packet-roundtrip"};
  for (i64 p : ps) {
    PrimeCtx C(p, cfg.f);
    for (i64 r = 0; r < C.N(); ++r) {
      for (i64 li = 1; li < C.q(); ++li) {
        auto lam = C.nonzero_by_lex_index(li);
        auto P = galois::make_cparam(C, r, lam);
        auto fiber = galois::packets_for_param(C, P);
        ++fib.checked;
        if (fiber.empty()) {
          fail(fib, {{"p", p}, {"r", r}, {"lambda_index", li}, {"empty", true}});
          continue;
        }
        auto m0 = reps::packet(C, fiber[0]);
        bool ok = true;
        for (const auto& idx : fiber)
          ok = ok && galois::param_for_packet(C, idx) == P && reps::packet(C, idx) == m0;
        if (!ok) fail(fib, {{"p", p}, {"r", r}, {"lambda_index", li}});

        auto Q = galois::make_cparam(C, -p * r - (p + 1), C.fq_inv(lam));
        auto qfiber = galois::packets_for_param(C, Q);
        ++conj.checked;
        if (!galois::cparam_equiv_fast(C, P, Q) || qfiber.empty() ||
            !(reps::packet(C, qfiber[0]) == m0))
          fail(conj, {{"p", p}, {"r", r}, {"lambda_index", li}});
      }
    }
    for (i64 r = 0; r < p; ++r) {
      for (i64 li = 1; li < C.q(); ++li) {
        for (i64 k = 0; k <= p; ++k) {
          auto idx = reps::make_packet_index(C, r, C.nonzero_by_lex_index(li), k);
          auto fiber = galois::packets_for_param(C, galois::param_for_packet(C, idx));
          ++rt.checked;
          if (std::find(fiber.begin(), fiber.end(), idx) == fiber.end())
            fail(rt, {{"p", p}, {"r", r}, {"lambda_index", li}, {"k", k}});
        }
      }
    }
  }
  S.properties.push_back(std::move(fib));
  S.properties.push_back(std::move(conj));
  S.properties.push_back(std::move(rt));
  return S;
}

// Rings where the shape-w diagonal equation c11 c22 = -p u has solutions in
// the maximal ideal: residue fields (-p = 0) and the ramified quadratic
// (vpi * -vpi). Unramified with m = 2 puts nonunit products in (p^2) = 0.
bool w_solvable(const LocalRing& R) { return R.m() == 1 || R.ramification_exponent() == 2; }

SuiteResult suite_kisin(const SessionConfig& cfg) {
  SuiteResult S{"kisin", {}};
  auto ps = plist(cfg, {3, 5});
  const kisin::Shape shapes[] = {kisin::Shape::T, kisin::Shape::Tprime, kisin::Shape::W};

  PropertyResult gauge{"sampled-gauge-invariants"};
  std::uint64_t block = 0;
  for (i64 p : ps) {
    Coeffs g2 = PrimeCtx::auto_modulus(p, 2);
    const LocalRing rings[] = {LocalRing::fp(p), LocalRing::fq(p, g2),
                               LocalRing::galois_ring(p, 2, g2), LocalRing::ramified_quadratic(p)};
    for (const auto& R : rings) {
      for (auto s : shapes) {
        ++block;
        if (s == kisin::Shape::W && !w_solvable(R)) continue;
        for (i64 i = 0; i < cfg.samples; ++i) {
          auto g = kisin::sample_gauge(s, R, mix_seed(cfg.seed, block, static_cast<std::uint64_t>(i)));
          auto u = kisin::det_height_check(R, g.A);
          auto pair = kisin::polarised_pair(g);
          auto back = kisin::polarisation_partner(pair.A0);
          ++gauge.checked;
          if (kisin::detect_shape(R, g.A) != s || !u || !R.is_unit(*u) ||
              pair.A0.shape != s || !kisin::check_polarisation(R, pair.A0.A, pair.A1.A) ||
              !arith::mat_eq(back.A, g.A))
            fail(gauge, {{"p", p}, {"ring", R.describe()}, {"shape", kisin::shape_name(s)},
                         {"sample", i}});
        }
      }
    }
  }
  S.properties.push_back(std::move(gauge));

  PropertyResult sol{"w-unsolvable-unramified"};
  for (i64 p : ps) {
    for (const auto& R : {LocalRing::zpm(p, 2),
                          LocalRing::galois_ring(p, 2, PrimeCtx::auto_modulus(p, 2))}) {
      ++sol.checked;
      try {
        kisin::sample_gauge(kisin::Shape::W, R, cfg.seed);
        fail(sol, {{"p", p}, {"ring", R.describe()}, {"sampled", true}});
      } catch (const SolvabilityError&) {
      }
    }
  }
  S.properties.push_back(std::move(sol));

  PropertyResult tab{"deformation-ring-table"};
  {
    using reps::GenKind;
    reps::RingPresentation expect_t{"O",
                                    {{"c21", GenKind::Unrestricted},
                                     {"c11*", GenKind::Unit},
                                     {"c22*", GenKind::Unit}},
                                    {},
                                    {2, 4}};
    reps::RingPresentation expect_tp{"O",
                                     {{"c12", GenKind::Unrestricted},
                                      {"c11*", GenKind::Unit},
                                      {"c22*", GenKind::Unit}},
                                     {},
                                     {2, 4}};
    reps::RingPresentation expect_w{"O",
                                    {{"c11", GenKind::MaximalIdeal},
                                     {"c22", GenKind::MaximalIdeal},
                                     {"c12*", GenKind::Unit},
                                     {"c21*", GenKind::Unit}},
                                    {"c11*c22 + p"},
                                    {2, 4}};
    const std::pair<kisin::Shape, reps::RingPresentation> table[] = {
        {kisin::Shape::T, expect_t}, {kisin::Shape::Tprime, expect_tp}, {kisin::Shape::W, expect_w}};
    for (const auto& [s, expect] : table) {
      auto rec = kisin::explicit_defring(s);
      ++tab.checked;
      if (!(rec.presentation == expect) || rec.galois_iso_note != std::pair(2, 4) ||
          rec.hodge_type != "(1,0,1)" || rec.multiplier != "cyclotomic" ||
          !rec.potentially_crystalline)
        fail(tab, {{"shape", kisin::shape_name(s)}});
    }
  }
  S.properties.push_back(std::move(tab));
  return S;
}

using SuiteFn = SuiteResult (*)(const SessionConfig&);

const std::map<std::string, SuiteFn>& suite_table() {
  static const std::map<std::string, SuiteFn> table = {
      {"arith", suite_arith},
      {"correspondence", suite_correspondence},
      {"galois", suite_galois},
      {"kisin", suite_kisin},
      {"reps", suite_reps},
  };
  return table;
}

json property_json(const PropertyResult& prop) {
  json out;
  out["property"] = prop.name;
  out["checked"] = prop.checked;
  out["status"] = prop.failures == 0 ? "pass" : "fail";
  out["failures"] = prop.failures;
  out["counterexamples"] = prop.counterexamples;
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

json report_json(const Report& rep) {
  json out;
  out["command"] = rep.command;
  out["config"] = rep.config;
  out["results"] = rep.results;
  out["violations"] = rep.violations;
  return out;
}

namespace {

void walk_text(std::ostream& os, const std::string& key, const json& v, int depth) {
  std::string pad(static_cast<size_t>(2 * depth), ' ');
  if (v.is_object()) {
    os << pad << key << ":\n";
    for (const auto& [k, val] : v.items()) walk_text(os, k, val, depth + 1);
    return;
  }
  if (v.is_array()) {
    bool scalars = std::all_of(v.begin(), v.end(), [](const json& x) { return !x.is_structured(); });
    if (scalars) {
      os << pad << key << ": " << v.dump() << "\n";
      return;
    }
    os << pad << key << ":\n";
    for (size_t i = 0; i < v.size(); ++i)
      walk_text(os, "[" + std::to_string(i) + "]", v[i], depth + 1);
    return;
  }
  os << pad << key << ": " << v.dump() << "\n";
}

}  // namespace

std::string report_text(const Report& rep) {
  std::ostringstream os;
  os << "command: " << rep.command << "\n";
  walk_text(os, "config", rep.config, 0);
  walk_text(os, "results", rep.results, 0);
  walk_text(os, "violations", rep.violations, 0);
  return os.str();
}

Report verify_suite(const std::string& name, const SessionConfig& cfg) {
  const auto& table = suite_table();
  Report rep;
  rep.command = "verify " + name;
  rep.config = config_echo(cfg);
  auto t0 = std::chrono::steady_clock::now();

  std::vector<SuiteResult> suites;
  if (name == "all") {
    // Suites are independent; std::map order keeps the merge canonical.
    std::vector<std::future<SuiteResult>> futs;
    for (const auto& [_, fn] : table)
      futs.push_back(std::async(std::launch::async, fn, cfg));
    for (auto& f : futs) suites.push_back(f.get());
  } else {
    auto it = table.find(name);
    if (it == table.end()) throw UsageError("unknown verification suite: " + name);
    suites.push_back(it->second(cfg));
  }

  json sections = json::array();
  for (const auto& S : suites) {
    json sec;
    sec["suite"] = S.name;
    json props = json::array();
    for (const auto& prop : S.properties) props.push_back(property_json(prop));
    sec["properties"] = props;
    sections.push_back(sec);
    for (const auto& prop : S.properties) {
      for (const auto& cx : prop.counterexamples) {
        json v;
        v["suite"] = S.name;
        v["property"] = prop.name;
        v["counterexample"] = cx;
        rep.violations.push_back(v);
      }
    }
  }
  rep.results["suites"] = sections;
  rep.elapsed_seconds = seconds_since(t0);
  return rep;
}

Report run(const std::string& command, const SessionConfig& cfg) {
  if (command.rfind("verify", 0) == 0) {
    std::string rest = command.size() > 6 ? command.substr(7) : "";
    if (rest.empty()) throw UsageError("verify requires a suite name");
    return verify_suite(rest, cfg);
  }

  using CmdFn = json (*)(const SessionConfig&);
  static const std::map<std::string, CmdFn> cmds = {
      {"classify", cmd_classify},   {"packet", cmd_packet},
      {"correspond", cmd_correspond}, {"param-equiv", cmd_param_equiv},
      {"generic", cmd_generic},     {"orientation", cmd_orientation},
      {"ftsd", cmd_ftsd},           {"shape", cmd_shape},
      {"polarise", cmd_polarise},   {"defring", cmd_defring},
  };
  auto it = cmds.find(command);
  if (it == cmds.end()) throw UsageError("unknown command: " + command);

  Report rep;
  rep.command = command;
  rep.config = config_echo(cfg);
  auto t0 = std::chrono::steady_clock::now();
  rep.results = it->second(cfg);
  rep.elapsed_seconds = seconds_since(t0);
  return rep;
}

namespace {

Coeffs parse_coeff_list(const std::string& text) {
  Coeffs out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    i64 v = 0;
    try {
      v = std::stoll(item, &pos);
    } catch (const std::exception&) {
      throw UsageError("bad coefficient list: " + text);
    }
    if (pos != item.size()) throw UsageError("bad coefficient list: " + text);
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty coefficient list");
  return out;
}

std::string error_type_name(const Error& e) {
  if (dynamic_cast<const UsageError*>(&e)) return "usage";
  if (dynamic_cast<const UnitError*>(&e)) return "unit";
  if (dynamic_cast<const CapacityError*>(&e)) return "capacity";
  if (dynamic_cast<const NotGaugeError*>(&e)) return "not-gauge";
  if (dynamic_cast<const SolvabilityError*>(&e)) return "solvability";
  if (dynamic_cast<const HeightError*>(&e)) return "height";
  if (dynamic_cast<const PreconditionError*>(&e)) return "precondition";
  if (dynamic_cast<const DomainError*>(&e)) return "domain";
  return "error";
}

}  // namespace

int exit_code_for(const Report& rep) { return rep.violations.empty() ? 0 : 1; }

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"non-supercuspidal mod-p local Langlands for U(1,1): packets, parameters, gauges"};
  app.require_subcommand(1);

  SessionConfig cfg;
  std::string modulus_str, lambda_str, shape_str, suite;

  app.add_option("--p", cfg.p, "odd prime (reps commands also admit 2)");
  app.add_option("--f", cfg.f, "coefficient-field degree");
  app.add_option("--m", cfg.m, "ring length for gauge commands");
  app.add_option("--modulus", modulus_str, "comma-separated little-endian modulus coefficients");
  app.add_option("--r", cfg.r, "exponent parameter");
  app.add_option("--lambda", lambda_str, "comma-separated F_p coefficients of lambda");
  app.add_option("--lambda-index", cfg.lambda_index, "1-based nonzero element index (lex order)");
  app.add_option("--k", cfg.k, "determinant-twist exponent");
  app.add_option("--n", cfg.n, "genericity bound");
  app.add_option("--a", cfg.a, "first inertial exponent");
  app.add_option("--b", cfg.b, "second inertial exponent");
  app.add_option("--shape", shape_str, "gauge shape")->check(CLI::IsMember({"t", "t'", "w"}));
  app.add_option("--samples", cfg.samples, "sampled matrices per shape/ring in verify kisin");
  app.add_option("--seed", cfg.seed, "sampler seed");
  app.add_option("--output", cfg.output, "report format")->check(CLI::IsMember({"json", "text"}));

  for (const char* name : {"classify", "packet", "correspond", "param-equiv", "generic",
                           "orientation", "ftsd", "shape", "polarise", "defring"})
    app.add_subcommand(name)->fallthrough();
  auto* ver = app.add_subcommand("verify");
  ver->fallthrough();
  ver->add_option("suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"arith", "reps", "galois", "kisin", "correspondence", "all"}));

  std::vector<const char*> argv{"u11"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  Report rep;
  try {
    if (app.count("--modulus")) cfg.modulus = parse_coeff_list(modulus_str);
    if (app.count("--lambda")) cfg.lambda_coeffs = parse_coeff_list(lambda_str);
    if (!shape_str.empty()) cfg.shape = shape_str;
    if (app.count("--p")) cfg.p_list = {cfg.p};
    if (cfg.n) cfg.n_list = {*cfg.n};

    std::string command = app.get_subcommands().front()->get_name();
    if (command == "verify") command += " " + suite;
    rep = run(command, cfg);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    json rec;
    rec["error"]["type"] = error_type_name(e);
    rec["error"]["message"] = e.what();
    if (cfg.output == "json")
      out << rec.dump(2) << "\n";
    else
      out << "error: " << rec["error"]["type"].get<std::string>() << ": " << e.what() << "\n";
    return 3;
  }

  if (cfg.output == "json")
    out << report_json(rep).dump(2) << "\n";
  else
    out << report_text(rep);
  std::ostringstream timing;
  timing << "# elapsed_seconds " << rep.elapsed_seconds << "\n";
  err << timing.str();
  return exit_code_for(rep);
}

}  // namespace u11::runner
