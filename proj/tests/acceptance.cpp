// Acceptance checks. `acceptance N` runs check N and prints one line, "PASS criterion N: ..." or
// "FAIL criterion N: ...", followed by diagnostics on failure. Every comparison is exact.

#include <omp.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "zlocal/classify.hpp"
#include "zlocal/cli.hpp"
#include "zlocal/compile.hpp"
#include "zlocal/kernels.hpp"
#include "zlocal/ringcore.hpp"
#include "zlocal/zdg.hpp"

using namespace zlocal;

namespace {

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> notes;

  void fail(const std::string& what) {
    pass = false;
    notes.push_back(what);
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
};

struct SuiteRing {
  std::string name;
  FiniteRing ring;
};

std::string name_of(const RingPresentation& p) { return p.key(); }

SuiteRing from_pres(const RingPresentation& p) { return {name_of(p), compile(p)}; }

/// The rings named by the definition suite.
std::vector<SuiteRing> definition_suite() {
  using fixture::pres;
  return {
      from_pres(pres(Family::F3, 2, "x", 0)),
      from_pres(pres(Family::F3, 3, "x", 0)),
      from_pres(pres(Family::F3, 2, "x^2+x+1", 0)),
      from_pres(pres(Family::F3, 3, "x^2+1", 0)),
      from_pres(pres(Family::F1, 2, "x", 1)),
      from_pres(pres(Family::F1, 2, "x^2+x+1", 1)),
      from_pres(pres(Family::F2, 2, "x^2+x+1", 1, {"1"})),
      from_pres(pres(Family::F4, 2, "x^2+x+1", 1, {"1"})),
  };
}

struct F0Case {
  std::uint32_t p, base;
  unsigned k;
};

const std::vector<F0Case> kF0Cases = {{2, 2, 2}, {2, 2, 3}, {2, 4, 1}, {2, 4, 2}};

std::vector<SuiteRing> f0_suite() {
  std::vector<SuiteRing> out;
  for (const auto& c : kF0Cases) {
    out.push_back({"F0(base=" + std::to_string(c.base) + ",k=" + std::to_string(c.k) + ")", fixture::f0(c.p, c.base, c.k)});
  }
  return out;
}

/// Further canonical rings up to 4096 elements, covering every family, several primes and the
/// largest orders the exhaustive checks accept.
std::vector<SuiteRing> extra_suite() {
  using fixture::pres;
  return {
      from_pres(pres(Family::F3, 2, "x", 1)),
      from_pres(pres(Family::F3, 2, "x", 2)),
      from_pres(pres(Family::F3, 2, "x", 4)),
      from_pres(pres(Family::F3, 3, "x", 1)),
      from_pres(pres(Family::F3, 3, "x", 2)),
      from_pres(pres(Family::F3, 5, "x", 1)),
      from_pres(pres(Family::F3, 2, "x^2+x+1", 1)),
      from_pres(pres(Family::F3, 2, "x^2+x+1", 2)),
      from_pres(pres(Family::F3, 2, "x^2+x+1", 4)),
      from_pres(pres(Family::F3, 2, "x^3+x+1", 0)),
      from_pres(pres(Family::F3, 2, "x^3+x+1", 1)),
      from_pres(pres(Family::F3, 3, "x^2+1", 1)),
      from_pres(pres(Family::F1, 2, "x", 3)),
      from_pres(pres(Family::F1, 2, "x", 11)),
      from_pres(pres(Family::F1, 3, "x^2+1", 1)),
      from_pres(pres(Family::F1, 2, "x^3+x+1", 2)),
      from_pres(pres(Family::F2, 2, "x^2+x+1", 2, {"1", "x"})),
      from_pres(pres(Family::F2, 3, "x^2+1", 1, {"1"})),
      from_pres(pres(Family::F4, 2, "x^2+x+1", 2, {"1", "x"})),
      from_pres(pres(Family::F4, 3, "x^2+1", 1, {"x"})),
      from_pres(pres(Family::F4, 2, "x^2+x+1", 1, {"x"})),
  };
}

std::vector<SuiteRing> full_suite() {
  auto out = definition_suite();
  for (auto& r : f0_suite()) out.push_back(std::move(r));
  for (auto& r : extra_suite()) out.push_back(std::move(r));
  return out;
}

bool contains(const ElementSet& s, ElementId e) { return std::binary_search(s.begin(), s.end(), e); }

/// Z-local by definition, from the oracle sets: one maximal ideal, J = Z, and J^2 = 0.
struct OracleZLocal {
  bool local = false, J_equals_Z = false, J_squared_zero = false;
  ElementSet J, Z;
  bool z_local() const { return local && J_equals_Z && J_squared_zero; }
};

OracleZLocal oracle_z_local(const FiniteRing& R, bool use_ideals) {
  OracleZLocal o;
  o.J = use_ideals ? oracle::radical_by_ideals(R) : oracle::radical_by_units(R);
  o.Z = oracle::zero_divisors(R);
  const auto U = oracle::units(R);
  // Local: the non-units are exactly J.
  o.local = U.size() + o.J.size() == R.order();
  if (use_ideals) o.local = o.local && oracle::maximal_ideals(R).size() == 1;
  o.J_equals_Z = o.J == o.Z;
  o.J_squared_zero = true;
  for (auto a : o.J) {
    for (auto b : o.J) {
      if (R.mul(R.element(a), R.element(b)) != R.zero()) o.J_squared_zero = false;
    }
  }
  return o;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

// 1. Definition suite.
Outcome criterion1() {
  Outcome o;
  const auto suite = definition_suite();
  for (const auto& s : suite) {
    const auto lib = is_z_local(s.ring);
    const auto orc = oracle_z_local(s.ring, s.ring.order() <= 81);
    o.expect(orc.z_local(), s.name + ": oracle says not Z-local (local " + std::to_string(orc.local) + ", J=Z " +
                                std::to_string(orc.J_equals_Z) + ", J^2=0 " + std::to_string(orc.J_squared_zero) + ")");
    o.expect(lib.is_z_local, s.name + ": is_z_local returned false");
    o.expect(lib.J == orc.J, s.name + ": J differs from the oracle");
    o.expect(lib.Z == orc.Z, s.name + ": Z differs from the oracle");
  }
  o.summary = std::to_string(suite.size()) + " rings Z-local by library and brute force";
  return o;
}

// 2. F0 counterexamples.
Outcome criterion2() {
  Outcome o;
  std::vector<std::string> status;
  for (const auto& s : f0_suite()) {
    const FiniteRing& R = s.ring;
    const auto lib = is_z_local(R);
    const auto orc = oracle_z_local(R, false);
    o.expect(!lib.is_z_local, s.name + ": is_z_local returned true");
    o.expect(!orc.z_local(), s.name + ": oracle says Z-local");
    if (!lib.witness) {
      o.fail(s.name + ": no witness");
    } else {
      const auto& w = *lib.witness;
      bool ok = false;
      if (w.kind == ZLocalWitness::Kind::radical_square_nonzero && w.elements.size() == 2) {
        ok = contains(orc.J, w.elements[0]) && contains(orc.J, w.elements[1]) &&
             R.mul_ids(w.elements[0], w.elements[1]) != 0;
      }
      o.expect(ok, s.name + ": witness " + to_string(w.kind) + " does not check out");
    }
    o.expect(orc.J_equals_Z, s.name + ": J != Z");
    std::optional<ElementId> bad;
    for (auto a : orc.Z) {
      const auto e = R.element(a);
      if (R.mul(e, e) != R.zero()) {
        bad = a;
        break;
      }
    }
    if (bad) {
      const auto e = R.element(*bad);
      o.fail(s.name + ": a^2 != 0 for a = " + R.format(e) + " in Z (a^2 = " + R.format(R.mul(e, e)) + ")");
    }
    status.push_back(s.name + (bad ? " has a^2 != 0" : " ok"));
  }
  o.summary = "F0 not Z-local, J = Z and a^2 = 0 on Z: " + join(status, ", ");
  return o;
}

oracle::Poly to_oracle(const ModPoly& f) {
  oracle::Poly out(f.degree().value_or(0) + 1, 0);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = f.coeff(k);
  return out;
}

// 3. Minimal polynomials congruent mod p.
Outcome criterion3() {
  Outcome o;
  std::size_t rings = 0, elements = 0, multi = 0;
  for (const auto& s : full_suite()) {
    const FiniteRing& R = s.ring;
    const auto q = R.characteristic();
    const auto p = prime_of_modulus(q);
    if (!p || *p == q || R.order() > 256) continue;
    ++rings;
    for (std::uint64_t id = 0; id < R.order(); ++id) {
      const auto a = R.element(static_cast<ElementId>(id));
      const auto orc = oracle::minimal_annihilators(R, a);
      ++elements;
      if (orc.size() > 1) ++multi;
      for (const auto& f : orc) {
        for (std::size_t k = 0; k < f.size(); ++k) {
          if ((f[k] - orc.front()[k]) % static_cast<std::int64_t>(*p) != 0) {
            o.fail(s.name + ": annihilators of " + R.format(a) + " differ mod p");
            break;
          }
        }
      }
      const auto lib = minimal_polynomials(R, a);
      std::vector<oracle::Poly> lib_o;
      for (const auto& f : lib) lib_o.push_back(to_oracle(f));
      std::sort(lib_o.begin(), lib_o.end());
      auto orc_sorted = orc;
      std::sort(orc_sorted.begin(), orc_sorted.end());
      o.expect(lib_o == orc_sorted, s.name + ": minimal_polynomials(" + R.format(a) + ") differs from brute force");
    }
  }
  o.summary = std::to_string(elements) + " elements in " + std::to_string(rings) + " char p^2 rings, " +
              std::to_string(multi) + " with several minimal annihilators";
  return o;
}

std::uint32_t expected_char(const RingPresentation& p) {
  switch (p.family()) {
    case Family::F1:
    case Family::F2: return p.p();
    case Family::F3:
    case Family::F4: return p.p() * p.p();
    case Family::F0: return p.base();
  }
  return 0;
}

// 4. Characteristic of Z-local rings.
Outcome criterion4() {
  Outcome o;
  std::size_t zl = 0;
  std::set<std::uint32_t> seen;
  for (const auto& s : full_suite()) {
    if (!is_z_local(s.ring).is_z_local) continue;
    ++zl;
    const auto c = characteristic(s.ring);
    const auto& meta = *s.ring.meta();
    seen.insert(c);
    o.expect(c == s.ring.characteristic(), s.name + ": additive order of 1 disagrees with characteristic()");
    o.expect(c == meta.p() || c == meta.p() * meta.p(), s.name + ": char " + std::to_string(c) + " is neither p nor p^2");
    o.expect(c == expected_char(meta), s.name + ": char " + std::to_string(c) + " does not match the family");
  }
  std::vector<std::string> chars;
  for (auto c : seen) chars.push_back(std::to_string(c));
  o.summary = std::to_string(zl) + " Z-local rings, characteristics {" + join(chars, ",") + "}";
  return o;
}

// 5. Classification round trip over the census.
Outcome criterion5() {
  Outcome o;
  std::size_t total = 0;
  for (const auto& [p, max] : std::vector<std::pair<std::uint32_t, std::uint64_t>>{{2, 256}, {3, 81}}) {
    const Census census = enumerate_presentations(p, 2, max);
    o.expect(!census.partial, "census p=" + std::to_string(p) + " is partial: " + census.partial_reason);
    for (const auto& [pres, R] : census.all) {
      ++total;
      try {
        const Classification c = classify_ring(R);
        const FiniteRing canon = compile(c.presentation);
        o.expect(canon == c.canonical, pres.key() + ": canonical ring is not compile(presentation)");
        o.expect(verify_witness(canon, R, c.witness), pres.key() + ": witness does not verify");
        o.expect(canon.order() == R.order(), pres.key() + ": order mismatch");
      } catch (const std::exception& e) {
        o.fail(pres.key() + ": " + e.what());
      }
    }
  }
  o.summary = std::to_string(total) + " census rings classified with verified witnesses";
  return o;
}

// 6. Zero-divisor graphs.
Outcome criterion6() {
  Outcome o;
  std::size_t complete = 0;
  for (const auto& s : full_suite()) {
    const auto rep = is_z_local(s.ring);
    if (!rep.is_z_local || rep.J.size() < 2 || rep.J.size() > 64) continue;
    const ZdGraph G = build_graph(s.ring);
    const std::size_t k = rep.J.size() - 1;
    bool all_zero = true;
    for (auto a : rep.J) {
      for (auto b : rep.J) all_zero = all_zero && s.ring.mul(s.ring.element(a), s.ring.element(b)) == s.ring.zero();
    }
    o.expect(all_zero, s.name + ": some product in J is nonzero");
    o.expect(G.vertices.size() == k && G.edge_count() == k * (k - 1) / 2 && is_complete(G),
             s.name + ": graph is not K_" + std::to_string(k));
    ++complete;
  }
  for (const auto& s : f0_suite()) {
    const ZdGraph G = build_graph(s.ring);
    o.expect(!is_complete(G), s.name + ": graph is complete");
  }
  o.summary = std::to_string(complete) + " Z-local graphs complete, " + std::to_string(kF0Cases.size()) +
              " F0 graphs not complete";
  return o;
}

// 7. The as_printed variant of F3(p=2, g=x^2+x+1, m=0).
Outcome criterion7() {
  Outcome o;
  const auto printed = fixture::pres(Family::F3, 2, "x^2+x+1", 0, {}, Variant::as_printed);
  const auto corrected = fixture::pres(Family::F3, 2, "x^2+x+1", 0);
  const FiniteRing A = compile(printed);
  const FiniteRing C = compile(corrected);
  const auto ra = is_z_local(A);
  const auto rc = is_z_local(C);
  const auto oa = oracle_z_local(A, true);
  const auto oc = oracle_z_local(C, true);

  o.expect(A.order() == 8, "as_printed ring has order " + std::to_string(A.order()) + ", char " +
                               std::to_string(A.characteristic()) + " (expected order 8)");
  o.expect(!ra.J_equals_Z && !oa.J_equals_Z,
           "as_printed ring has Z = J (|J| = " + std::to_string(oa.J.size()) + ", |Z| = " + std::to_string(oa.Z.size()) + ")");
  o.expect(rc.is_z_local && oc.z_local(), "corrected ring is not Z-local");
  o.expect(ra.J == oa.J && ra.Z == oa.Z, "as_printed verifier disagrees with brute force");

  const Census census = enumerate_presentations(2, 2, 16);
  bool recorded = false;
  for (const auto& note : census.as_printed) {
    if (note.corrected == corrected) {
      recorded = true;
      o.expect(note.order == A.order() && note.corrected_order == C.order() && note.J_equals_Z == ra.J_equals_Z,
               "census note disagrees with the direct computation");
      o.notes.push_back("census records as_printed order " + std::to_string(note.order) + ", char " +
                        std::to_string(note.characteristic) + ", J=Z " + std::to_string(note.J_equals_Z));
    }
  }
  o.expect(recorded, "census report has no as_printed entry for this presentation");

  // The order-8 reading {1 of additive order 4, x of additive order 2, x*x = x + 3} is not a ring:
  // 2x = 0 forces 2(x*x) = 2 + 2x = 2, which is nonzero.
  const StructureConstants naive = {{{1, 0}, {0, 1}}, {{0, 1}, {3, 1}}};
  const auto defect = FiniteRing::structure_defect({4, 2}, naive, 0);
  o.notes.push_back("order-8 table {Z4*1 + Z2*x, x^2 = x+3}: " + (defect ? "rejected, " + *defect : std::string("accepted")));

  o.summary = "as_printed F3(2, x^2+x+1, 0): order " + std::to_string(A.order()) + ", Z-local " +
              std::to_string(ra.is_z_local) + "; corrected: order " + std::to_string(C.order()) + ", Z-local " +
              std::to_string(rc.is_z_local);
  return o;
}

/// Units and zero-divisors from power sequences: a is a unit iff some a^k = 1. For a non-unit the
/// sequence is eventually periodic, a^i = a^(i+t) with i least, and b = a^(i-1) (a^t - 1) is a
/// nonzero element with a b = 0 (or b = a^(k-1) when a^k = 0). Both facts are checked directly.
bool check_partition_by_powers(const FiniteRing& R, const kernels::UnitScan& scan, std::string& why) {
  for (std::uint64_t id = 0; id < R.order(); ++id) {
    const auto a = R.element(static_cast<ElementId>(id));
    std::map<RingElement, unsigned> first;
    std::vector<RingElement> powers{R.one()};
    bool unit = false;
    RingElement witness;
    for (unsigned k = 1;; ++k) {
      RingElement next = R.mul(powers.back(), a);
      if (next == R.one()) {
        unit = true;
        break;
      }
      if (next == R.zero()) {
        witness = id == 0 ? R.one() : powers.back();
        break;
      }
      if (auto it = first.find(next); it != first.end()) {
        const unsigned i = it->second, t = k - i;
        witness = R.mul(powers[i - 1], R.sub(powers[t], R.one()));
        break;
      }
      first.emplace(next, k);
      powers.push_back(std::move(next));
    }
    if (unit != (scan.unit[id] != 0)) {
      why = "unit flag of " + R.format(a);
      return false;
    }
    if (!unit) {
      if (witness == R.zero() || R.mul(a, witness) != R.zero() || !scan.zero_divisor[id]) {
        why = "zero-divisor flag of " + R.format(a);
        return false;
      }
    } else if (scan.zero_divisor[id]) {
      why = "unit " + R.format(a) + " flagged as zero-divisor";
      return false;
    }
  }
  return true;
}

std::uint64_t expected_order(const RingPresentation& p) {
  switch (p.family()) {
    case Family::F1:
    case Family::F2: return ipow(p.p(), p.n() * (p.m() + 1));
    case Family::F3:
    case Family::F4: return ipow(p.p(), p.n() * (p.m() + 2));
    case Family::F0: return ipow(p.base(), 1u << p.n_vars());
  }
  return 0;
}

// 8. Engine self-consistency.
Outcome criterion8() {
  Outcome o;
  auto suite = full_suite();
  std::map<std::string, std::size_t> modes;
  for (const auto& s : suite) {
    const FiniteRing& R = s.ring;
    const auto scan = kernels::omp::scan_units(R);
    std::string why;
    o.expect(check_partition_by_powers(R, scan, why), s.name + ": " + why);
    if (R.order() <= 256) {
      const auto [u, z] = oracle::unit_flags_by_walk(R);
      o.expect(std::equal(u.begin(), u.end(), scan.unit.begin()) && std::equal(z.begin(), z.end(), scan.zero_divisor.begin()),
               s.name + ": unit scan differs from the walk oracle");
    }
    const auto ax = kernels::omp::check_axioms(R);
    const auto want = R.order() <= kernels::kTriplesLimit  ? kernels::AxiomReport::Mode::all_triples
                      : R.order() <= kernels::kPairsLimit ? kernels::AxiomReport::Mode::pairs_times_basis
                                                          : kernels::AxiomReport::Mode::random_triples;
    o.expect(ax.ok(), s.name + ": axioms fail: " + ax.witness);
    o.expect(ax.mode == want, s.name + ": axiom mode " + kernels::to_string(ax.mode));
    ++modes[kernels::to_string(ax.mode)];
    o.expect(R.order() == expected_order(*R.meta()), s.name + ": order " + std::to_string(R.order()) +
                                                         " != formula " + std::to_string(expected_order(*R.meta())));
  }

  // One ring beyond the exhaustive range takes the random-triples path.
  const FiniteRing big = fixture::ring(Family::F1, 2, "x", 12);
  const auto ax = kernels::omp::check_axioms(big);
  o.expect(big.order() == 8192 && big.order() == expected_order(*big.meta()), "F1(2,x,12) order formula");
  o.expect(ax.ok() && ax.mode == kernels::AxiomReport::Mode::random_triples && ax.checks >= kernels::kRandomTriples,
           "F1(2,x,12): random-triple check");
  ++modes[kernels::to_string(ax.mode)];

  std::vector<std::string> ms;
  for (const auto& [m, n] : modes) ms.push_back(m + " " + std::to_string(n));
  o.summary = std::to_string(suite.size() + 1) + " rings, axiom modes: " + join(ms, ", ");
  return o;
}

std::string run_cli(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  return out.str();
}

// 9. Determinism of enumerate and verify.
Outcome criterion9() {
  Outcome o;
  namespace fs = std::filesystem;
  const fs::path old = fs::current_path();
  const fs::path dir = fs::temp_directory_path() / ("zlocal_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  fs::current_path(dir);
  int code = 0;
  run_cli({"construct", "--family", "F4", "--p", "2", "--g", "x^2+x+1", "--m", "2", "--v", "1,x", "--out", "r.json"}, code);
  o.expect(code == 0, "construct failed");
  const std::vector<std::vector<std::string>> commands = {
      {"enumerate", "--p", "2", "--char-exp", "2", "--max-order", "256"},
      {"enumerate", "--p", "2", "--char-exp", "1", "--max-order", "64"},
      {"verify", "r.json"},
      {"--format", "text", "verify", "r.json"},
  };
  std::size_t runs = 0;
  for (const auto& cmd : commands) {
    std::string first;
    for (int threads : {1, 4, 4}) {
      omp_set_num_threads(threads);
      const std::string out = run_cli(cmd, code);
      ++runs;
      o.expect(code == 0, join(cmd, " ") + ": exit " + std::to_string(code));
      if (first.empty()) {
        first = out;
      } else {
        o.expect(out == first, join(cmd, " ") + ": output differs with " + std::to_string(threads) + " threads");
      }
    }
  }
  fs::current_path(old);
  fs::remove_all(dir);
  o.summary = std::to_string(runs) + " runs of " + std::to_string(commands.size()) + " commands byte-identical";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Outcome()>> criteria = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                                          criterion6, criterion7, criterion8, criterion9};
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) which.push_back(std::atoi(argv[i]));
  if (which.empty()) {
    for (int i = 1; i <= static_cast<int>(criteria.size()); ++i) which.push_back(i);
  }
  bool all = true;
  for (int n : which) {
    if (n < 1 || n > static_cast<int>(criteria.size())) {
      std::cerr << "unknown criterion " << n << "\n";
      return 2;
    }
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[static_cast<std::size_t>(n - 1)]();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (out.pass ? "PASS" : "FAIL") << " criterion " << n << ": " << out.summary << " (" << secs << " s)\n";
    for (const auto& note : out.notes) std::cout << "  " << note << "\n";
    all = all && out.pass;
  }
  return all ? 0 : 1;
}
