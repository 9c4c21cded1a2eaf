#include <algorithm>
#include <map>
#include <sstream>

#include "zlocal/classify.hpp"
#include "zlocal/compile.hpp"
#include "zlocal/error.hpp"

namespace zlocal {

namespace {

// True iff {1, k, ..., k^(n-1)} spans K over the prime field, i.e. k generates K.
bool generates_field(const QuotientRing& K, std::uint32_t k, std::uint32_t p, unsigned n) {
  std::vector<std::uint32_t> powers{K.one()};
  for (unsigned i = 1; i < n; ++i) powers.push_back(K.mul(powers.back(), k));
  std::vector<std::vector<std::uint32_t>> multiples(n);
  for (unsigned i = 0; i < n; ++i) {
    multiples[i].push_back(K.zero());
    for (std::uint32_t c = 1; c < p; ++c) multiples[i].push_back(K.add(multiples[i].back(), powers[i]));
  }
  std::vector<std::uint8_t> hit(K.size(), 0);
  std::vector<std::uint32_t> digits(n, 0);
  std::uint64_t distinct = 0, total = 1;
  for (unsigned i = 0; i < n; ++i) total *= p;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint32_t s = K.zero();
    for (unsigned i = 0; i < n; ++i) s = K.add(s, multiples[i][digits[i]]);
    if (!hit[s]) {
      hit[s] = 1;
      ++distinct;
    }
    for (unsigned i = 0; i < n; ++i) {
      if (++digits[i] < p) break;
      digits[i] = 0;
    }
  }
  return distinct == K.size();
}

std::uint32_t eval_in_field(const QuotientRing& K, const ModPoly& f, std::uint32_t k) {
  std::uint32_t acc = K.zero();
  for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = K.add(K.mul(acc, k), K.integer(f.coeffs()[i]));
  return acc;
}

// For every element of K, the unique polynomial of degree < n over Z_p taking that value at k.
std::vector<ModPoly> value_table(const QuotientRing& K, std::uint32_t k, std::uint32_t p, unsigned n) {
  std::vector<std::optional<ModPoly>> table(K.size());
  std::vector<std::int64_t> digits(n, 0);
  for (std::uint64_t idx = 0; idx < K.size(); ++idx) {
    ModPoly f(p, digits);
    const std::uint32_t val = eval_in_field(K, f, k);
    if (!table[val]) table[val] = std::move(f);
    for (unsigned i = 0; i < n; ++i) {
      if (++digits[i] < static_cast<std::int64_t>(p)) break;
      digits[i] = 0;
    }
  }
  std::vector<ModPoly> out;
  for (auto& t : table) {
    if (!t) throw InternalError("residue element is not a polynomial in the generator");
    out.push_back(std::move(*t));
  }
  return out;
}

ModPoly with_modulus(const ModPoly& f, std::uint32_t modulus) {
  return ModPoly(modulus, std::vector<std::int64_t>(f.coeffs().begin(), f.coeffs().end()));
}

std::uint32_t field_inverse(const QuotientRing& K, std::uint32_t c) {
  for (std::uint32_t d = 1; d < K.size(); ++d) {
    if (K.mul(c, d) == K.one()) return d;
  }
  throw InternalError("residue field element has no inverse");
}

}  // namespace

std::string to_string(CanonicalCase c) {
  switch (c) {
    case CanonicalCase::Q1: return "Q1";
    case CanonicalCase::Q2: return "Q2";
    case CanonicalCase::F1: return "F1";
    case CanonicalCase::F2: return "F2";
  }
  return "?";
}

Classification classify_ring(const FiniteRing& R, std::uint64_t node_budget) {
  require_enumerable(R);
  const ElementCensus census = element_census(R);
  const ZLocalReport rep = is_z_local(R, census);
  if (!rep.is_z_local) {
    throw ClassificationError("ring is not Z-local (" + to_string(rep.witness->kind) + ")");
  }
  const std::uint32_t ch = R.characteristic();
  const auto prime = prime_of_modulus(ch);
  if (!prime) throw ClassificationError("characteristic " + std::to_string(ch) + " is neither p nor p^2");
  const std::uint32_t p = *prime;
  const bool char_p2 = ch != p;

  // (a) residue field and its degree.
  const QuotientRing K = residue_field(R, census);
  unsigned n = 0;
  for (std::uint64_t q = 1; q < K.size(); q *= p) ++n;

  // (b) first element whose residue generates K.
  std::vector<std::int8_t> tried(K.size(), -1);
  std::optional<ElementId> alpha;
  for (std::uint64_t a = 0; a < R.order() && !alpha; ++a) {
    const std::uint32_t k = K.project(static_cast<ElementId>(a));
    if (tried[k] < 0) tried[k] = generates_field(K, k, p, n) ? 1 : 0;
    if (tried[k] == 1) alpha = static_cast<ElementId>(a);
  }
  if (!alpha) throw ClassificationError("no element generates the residue field over Z_p");
  const std::uint32_t k_alpha = K.project(*alpha);
  const RingElement a = R.element(*alpha);

  // (c) minimal polynomial of the residue, then g over the prime subring.
  std::optional<ModPoly> g_bar;
  for (const ModPoly& f : enumerate_monic(p, n)) {
    if (eval_in_field(K, f, k_alpha) == K.zero()) {
      g_bar = f;
      break;
    }
  }
  if (!g_bar) throw ClassificationError("residue of the generator has no annihilator of degree n");

  ModPoly g = *g_bar;
  bool case_one = false;
  if (char_p2) {
    const auto mins = minimal_polynomials(R, a);
    if (mins.front().degree() == n) {
      g = mins.front();
      case_one = true;
    } else {
      g = lift_to_p2(*g_bar);
    }
  } else {
    case_one = R.id(evaluate(R, g, a)) == 0;
  }

  // K-basis of J, with p*1 first in characteristic p^2.
  std::vector<ElementId> seed;
  if (char_p2) seed.push_back(R.id(R.scale(R.one(), p)));
  std::vector<ElementId> basis = extend_k_basis(R, K, rep.J, seed);
  std::vector<ElementId> S(basis.begin() + static_cast<std::ptrdiff_t>(seed.size()), basis.end());
  const auto m = static_cast<unsigned>(S.size());

  CanonicalForm form{char_p2 ? (case_one ? CanonicalCase::Q1 : CanonicalCase::Q2)
                             : (case_one ? CanonicalCase::F1 : CanonicalCase::F2),
                     p, n, m, g, {}};

  // (d) Q2/F2: coordinates of g(alpha) in the K-basis, normalised so every v_i is nonzero mod p.
  if (!case_one) {
    const std::vector<ModPoly> poly_of = value_table(K, k_alpha, p, n);
    auto coordinates = [&](const ModPoly& f, const std::vector<ElementId>& b) {
      const KSpan span = k_span(R, K, b);
      const ElementId target = R.id(evaluate(R, f, a));
      const auto it = std::lower_bound(span.members.begin(), span.members.end(), target);
      if (it == span.members.end() || *it != target) throw ClassificationError("g(alpha) lies outside J");
      return span.coords[static_cast<std::size_t>(it - span.members.begin())];
    };
    std::vector<ElementId> full = seed;
    full.insert(full.end(), S.begin(), S.end());
    std::vector<std::uint32_t> c = coordinates(form.g, full);
    if (char_p2) {
      // g <- g - p*w with w(alpha) = c_p removes the p-coordinate and keeps g a lift of g_bar.
      const ModPoly w = with_modulus(poly_of[c[0]], ch);
      form.g = form.g - w * ModPoly::constant(ch, p);
      c = coordinates(form.g, full);
      if (c[0] != K.zero()) throw InternalError("p-coordinate of g(alpha) did not vanish");
      c.erase(c.begin());
    }
    std::vector<std::size_t> zeros;
    std::optional<std::size_t> j0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] == K.zero()) zeros.push_back(i);
      else if (!j0) j0 = i;
    }
    if (!j0) throw ClassificationError("g(alpha) = 0 although the minimal polynomial has degree 2n");
    if (!zeros.empty()) {
      // s_j0 <- s_j0 - c_j0^{-1} * sum_{zeros} s_i turns every zero coordinate into 1.
      ElementId sum = 0;
      for (auto i : zeros) sum = R.add_ids(sum, S[i]);
      const ElementId scaled = R.mul_ids(K.representative(field_inverse(K, c[*j0])), sum);
      S[*j0] = R.id(R.sub(R.element(S[*j0]), R.element(scaled)));
      for (auto i : zeros) c[i] = K.one();
    }
    for (std::size_t i = 0; i < c.size(); ++i) form.v.push_back(with_modulus(poly_of[c[i]], char_p2 ? ch : p));
  }

  // (e) presentation, compiled ring and witness.
  PresentationParams params;
  params.p = p;
  params.g = form.g.to_string('x');
  params.m = m;
  for (const auto& vi : form.v) params.v.push_back(vi.to_string('x'));
  switch (form.kase) {
    case CanonicalCase::Q1: params.family = Family::F3; break;
    case CanonicalCase::Q2: params.family = Family::F4; break;
    case CanonicalCase::F1: params.family = Family::F1; break;
    case CanonicalCase::F2: params.family = Family::F2; break;
  }
  RingPresentation pres = [&] {
    try {
      return build_presentation(params);
    } catch (const ValidationError& e) {
      throw ClassificationError(std::string("recovered parameters are not a valid presentation: ") + e.what());
    }
  }();
  FiniteRing canonical = compile(pres);

  // Direct witness: x^a * y_i -> alpha^a * s_i, on the canonical basis index y*n + a.
  IsoWitness w;
  std::vector<RingElement> alpha_pow{R.one()};
  for (unsigned i = 1; i < n; ++i) alpha_pow.push_back(R.mul(alpha_pow.back(), a));
  for (std::size_t idx = 0; idx < canonical.dim(); ++idx) {
    const std::size_t y = idx / n, e = idx % n;
    w.images.push_back(y == 0 ? alpha_pow[e] : R.mul(alpha_pow[e], R.element(S[y - 1])));
  }
  if (!verify_witness(canonical, R, w)) {
    auto found = ring_isomorphic(canonical, R, node_budget);
    if (!found) throw ClassificationError("recovered presentation " + pres.key() + " is not isomorphic to the ring");
    w = std::move(*found);
  }
  return Classification{std::move(form), std::move(pres), std::move(canonical), std::move(w), *alpha};
}

nlohmann::ordered_json to_json(const FiniteRing& R, const Classification& c) {
  nlohmann::ordered_json j;
  j["case"] = to_string(c.form.kase);
  j["p"] = c.form.p;
  j["n"] = c.form.n;
  j["m"] = c.form.m;
  j["g"] = c.form.g.to_string('x');
  if (!c.form.v.empty()) {
    auto v = nlohmann::ordered_json::array();
    for (const auto& vi : c.form.v) v.push_back(vi.to_string('x'));
    j["v"] = std::move(v);
  }
  j["generator"] = element_json(R, c.generator);
  j["presentation"] = c.presentation.to_json();
  j["witness"] = to_json(c.canonical, R, c.witness);
  j["witness_verified"] = verify_witness(c.canonical, R, c.witness);
  return j;
}

namespace {

struct Candidate {
  RingPresentation pres;
  std::string key;
};

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// All v-tuples of length m, each v_i of degree < n over Z_p and nonzero, as strings.
std::vector<std::vector<std::string>> v_tuples(std::uint32_t p, unsigned n, unsigned m) {
  std::vector<std::string> choices;
  for (std::uint64_t idx = 1; idx < ipow(p, n); ++idx) {
    std::vector<std::int64_t> c(n);
    std::uint64_t t = idx;
    for (unsigned i = 0; i < n; ++i, t /= p) c[i] = static_cast<std::int64_t>(t % p);
    choices.push_back(ModPoly(p, c).to_string('x'));
  }
  std::vector<std::vector<std::string>> out{{}};
  for (unsigned i = 0; i < m; ++i) {
    std::vector<std::vector<std::string>> next;
    for (const auto& prefix : out) {
      for (const auto& c : choices) {
        auto t = prefix;
        t.push_back(c);
        next.push_back(std::move(t));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

Census enumerate_presentations(std::uint32_t p, unsigned char_exp, std::uint64_t max_order,
                               const EnumerationOptions& options) {
  if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
  if (char_exp != 1 && char_exp != 2) throw DomainError("char_exp must be 1 or 2");
  if (max_order > kEnumerationBound) throw ResourceError("max_order must be <= 65536");
  Census census;
  census.p = p;
  census.char_exp = char_exp;
  census.max_order = max_order;

  std::vector<Candidate> cands;
  auto add = [&](PresentationParams params) {
    if (cands.size() >= options.max_presentations) {
      census.partial = true;
      census.partial_reason = "presentation budget of " + std::to_string(options.max_presentations) + " reached";
      return false;
    }
    RingPresentation pres = build_presentation(params);
    std::string key = pres.key();
    cands.push_back({std::move(pres), std::move(key)});
    return true;
  };

  const unsigned floor_m = char_exp == 2 ? 2 : 1;  // |R| = p^{n(m + floor_m)}
  for (unsigned n = 1; n <= kMaxDegree && ipow(p, n * floor_m) <= max_order; ++n) {
    std::vector<ModPoly> gs;
    for (const ModPoly& gb : enumerate_monic_irreducibles(p, n)) {
      if (char_exp == 1) {
        gs.push_back(gb);
      } else {
        for (auto& lift : enumerate_lifts(gb)) gs.push_back(std::move(lift));
      }
    }
    for (const ModPoly& g : gs) {
      for (unsigned m = 0; ipow(p, n * (m + floor_m)) <= max_order; ++m) {
        PresentationParams params;
        params.p = p;
        params.g = g.to_string('x');
        params.m = m;
        params.family = char_exp == 2 ? Family::F3 : Family::F1;
        if (!add(params)) goto done;
        if (n < 2 || m < 1) continue;
        params.family = char_exp == 2 ? Family::F4 : Family::F2;
        for (auto& v : v_tuples(p, n, m)) {
          params.v = std::move(v);
          if (!add(params)) goto done;
        }
      }
    }
  }
done:
  census.presentations = cands.size();
  std::sort(cands.begin(), cands.end(), [](const Candidate& x, const Candidate& y) { return x.key < y.key; });

  // Pure workers: compile and profile every presentation independently.
  std::vector<std::optional<RingProfile>> profiles(cands.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(cands.size()); ++i) {
    profiles[static_cast<std::size_t>(i)].emplace(compile(cands[static_cast<std::size_t>(i)].pres));
  }

  // Sequential merge in key order: the first member of a class is its least key.
  std::vector<std::size_t> class_rep;  // index into cands
  std::vector<std::size_t> class_of(cands.size());
  for (std::size_t i = 0; i < cands.size(); ++i) {
    std::optional<std::size_t> found;
    for (std::size_t c = 0; c < class_rep.size() && !found; ++c) {
      const RingProfile& r = *profiles[class_rep[c]];
      if (!(r.invariants == profiles[i]->invariants)) continue;
      try {
        if (ring_isomorphic(r, *profiles[i], options.node_budget)) found = c;
      } catch (const InconclusiveError& e) {
        census.partial = true;
        census.partial_reason = std::string("inconclusive isomorphism test: ") + e.what();
      }
    }
    if (!found) {
      found = class_rep.size();
      class_rep.push_back(i);
    }
    class_of[i] = *found;
  }

  for (std::size_t c = 0; c < class_rep.size(); ++c) {
    const RingProfile& prof = *profiles[class_rep[c]];
    const RingPresentation& pres = cands[class_rep[c]].pres;
    CensusClass cls{pres, prof.ring, prof.ring.order(), prof.ring.characteristic(), prof.invariants.units,
                    prof.invariants.radical, pres.n(), pres.m(), is_z_local(prof.ring, prof.census).is_z_local, {}};
    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (class_of[i] == c) cls.members.push_back(cands[i].key);
    }
    census.classes.push_back(std::move(cls));
  }
  std::stable_sort(census.classes.begin(), census.classes.end(), [](const CensusClass& x, const CensusClass& y) {
    return x.order != y.order ? x.order < y.order : x.representative.key() < y.representative.key();
  });

  if (char_exp == 2) {
    for (std::size_t i = 0; i < cands.size(); ++i) {
      PresentationParams params = params_of(cands[i].pres);
      params.variant = Variant::as_printed;
      const FiniteRing ring = compile(build_presentation(params));
      const ZLocalReport rep = is_z_local(ring);
      census.as_printed.push_back(VariantNote{cands[i].pres, profiles[i]->ring.order(), ring.order(),
                                              ring.characteristic(), rep.is_z_local, rep.J_equals_Z});
    }
  }

  for (std::size_t i = 0; i < cands.size(); ++i) census.all.emplace_back(cands[i].pres, profiles[i]->ring);
  return census;
}

std::vector<std::pair<RingPresentation, FiniteRing>> representatives(const Census& census) {
  std::vector<std::pair<RingPresentation, FiniteRing>> out;
  for (const auto& c : census.classes) out.emplace_back(c.representative, c.ring);
  return out;
}

nlohmann::ordered_json to_json(const Census& census) {
  nlohmann::ordered_json j;
  j["p"] = census.p;
  j["char_exp"] = census.char_exp;
  j["max_order"] = census.max_order;
  j["presentations"] = census.presentations;
  j["partial"] = census.partial;
  if (census.partial) j["partial_reason"] = census.partial_reason;
  auto classes = nlohmann::ordered_json::array();
  for (const auto& c : census.classes) {
    nlohmann::ordered_json e;
    e["representative"] = c.representative.to_json();
    e["order"] = c.order;
    e["invariants"] = {{"char", c.characteristic}, {"units", c.units}, {"radical", c.radical},
                       {"n", c.n},             {"m", c.m},         {"z_local", c.z_local}};
    e["member_count"] = c.members.size();
    e["members"] = c.members;
    classes.push_back(std::move(e));
  }
  j["classes"] = std::move(classes);
  if (census.char_exp == 2) {
    auto notes = nlohmann::ordered_json::array();
    for (const auto& v : census.as_printed) {
      nlohmann::ordered_json e;
      e["corrected"] = v.corrected.to_json();
      e["corrected_order"] = v.corrected_order;
      e["as_printed_order"] = v.order;
      e["as_printed_char"] = v.characteristic;
      e["as_printed_z_local"] = v.z_local;
      e["as_printed_J_equals_Z"] = v.J_equals_Z;
      notes.push_back(std::move(e));
    }
    j["as_printed"] = std::move(notes);
  }
  return j;
}

std::string to_text(const Census& census) {
  std::ostringstream out;
  out << "census p=" << census.p << " char_exp=" << census.char_exp << " max_order=" << census.max_order
      << " presentations=" << census.presentations << " classes=" << census.classes.size();
  if (census.partial) out << " PARTIAL (" << census.partial_reason << ")";
  out << "\n";
  out << "order  char  n  m  units  |J|  z_local  members  representative\n";
  for (const auto& c : census.classes) {
    out << c.order << "  " << c.characteristic << "  " << c.n << "  " << c.m << "  " << c.units << "  " << c.radical
        << "  " << (c.z_local ? "yes" : "no") << "  " << c.members.size() << "  " << c.representative.key() << "\n";
  }
  if (census.char_exp == 2) {
    out << "as_printed variants:\n";
    for (const auto& v : census.as_printed) {
      out << v.corrected.key() << "  corrected_order=" << v.corrected_order << "  as_printed_order=" << v.order
          << "  char=" << v.characteristic << "  z_local=" << (v.z_local ? "yes" : "no")
          << "  J_equals_Z=" << (v.J_equals_Z ? "yes" : "no") << "\n";
    }
  }
  return out.str();
}

}  // namespace zlocal
