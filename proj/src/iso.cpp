#include <algorithm>

#include "zlocal/classify.hpp"
#include "zlocal/error.hpp"

namespace zlocal {

namespace {

using Coords = std::vector<std::uint32_t>;

std::uint64_t pack_signature(std::uint32_t additive_order, std::uint8_t nil, bool unit, std::uint8_t mpdeg,
                             std::uint32_t annihilator) {
  return (std::uint64_t{additive_order} << 41) | (std::uint64_t{nil} << 33) | (std::uint64_t{unit} << 32) |
         (std::uint64_t{mpdeg} << 24) | annihilator;
}

// Additive span of `gens` (all element ids), as a membership bitmap plus member list.
std::vector<ElementId> additive_span(const FiniteRing& R, const std::vector<ElementId>& gens) {
  std::vector<std::uint8_t> in(R.order(), 0);
  std::vector<ElementId> members{0};
  in[0] = 1;
  for (auto g : gens) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      const ElementId s = R.add_ids(members[i], g);
      if (!in[s]) {
        in[s] = 1;
        members.push_back(s);
      }
    }
  }
  return members;
}

RingInvariants compute_invariants(const FiniteRing& R, const ElementCensus& c) {
  RingInvariants inv;
  inv.order = R.order();
  inv.characteristic = R.characteristic();
  for (std::uint64_t a = 0; a < R.order(); ++a) ++inv.additive_orders[R.additive_order(R.element(static_cast<ElementId>(a)))];
  inv.units = c.units.size();
  inv.zero_divisors = c.zero_divisors.size();
  inv.radical = c.radical.size();
  for (auto j : c.radical) ++inv.nilpotency[c.nilpotency[j]];

  // Additive generators of J, then J^2 = additive span of their pairwise products.
  std::vector<std::uint8_t> in(R.order(), 0);
  std::vector<ElementId> span{0}, gens;
  in[0] = 1;
  for (auto j : c.radical) {
    if (in[j]) continue;
    gens.push_back(j);
    for (std::size_t i = 0; i < span.size(); ++i) {
      const ElementId s = R.add_ids(span[i], j);
      if (!in[s]) {
        in[s] = 1;
        span.push_back(s);
      }
    }
  }
  std::vector<ElementId> products;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t k = i; k < gens.size(); ++k) products.push_back(R.mul_ids(gens[i], gens[k]));
  }
  inv.radical_square = additive_span(R, products).size();
  return inv;
}

// Subring generated by a list of elements: monomials in the generators and a spanning tree of
// the additive closure (every element = parent element + one monomial).
struct Closure {
  std::vector<ElementId> mono;                           // element id of each monomial; mono[0] = 1
  std::vector<std::pair<std::uint32_t, std::uint32_t>> mono_parent;  // (monomial, generator)
  std::vector<ElementId> elems;                          // elems[0] = 0
  std::vector<std::pair<std::uint32_t, std::uint32_t>> elem_parent;  // (element index, monomial)
  std::vector<std::uint32_t> position;                   // ring id -> index into elems, or ~0
  // Precomputed sums elems[x] + mono[w] and products elems[x] * gens[j], as indices into elems.
  std::vector<std::uint32_t> sum_with_mono;   // |elems| x |mono|
  std::vector<std::uint32_t> prod_with_gen;   // |elems| x |gens|
};

Closure closure(const FiniteRing& R, const std::vector<ElementId>& gens) {
  constexpr std::uint32_t kNone = ~std::uint32_t{0};
  Closure c;
  c.position.assign(R.order(), kNone);
  c.elems.push_back(0);
  c.elem_parent.emplace_back(0, 0);
  c.position[0] = 0;
  auto add_mono = [&](ElementId w, std::uint32_t parent, std::uint32_t gen) {
    const auto wi = static_cast<std::uint32_t>(c.mono.size());
    c.mono.push_back(w);
    c.mono_parent.emplace_back(parent, gen);
    for (std::size_t i = 0; i < c.elems.size(); ++i) {
      const ElementId s = R.add_ids(c.elems[i], w);
      if (c.position[s] == kNone) {
        c.position[s] = static_cast<std::uint32_t>(c.elems.size());
        c.elems.push_back(s);
        c.elem_parent.emplace_back(static_cast<std::uint32_t>(i), wi);
      }
    }
  };
  add_mono(R.one_id(), 0, 0);
  for (std::size_t wi = 0; wi < c.mono.size(); ++wi) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const ElementId prod = R.mul_ids(c.mono[wi], gens[g]);
      if (c.position[prod] == kNone) add_mono(prod, static_cast<std::uint32_t>(wi), static_cast<std::uint32_t>(g));
    }
  }
  const std::size_t ne = c.elems.size(), nm = c.mono.size(), ng = gens.size();
  c.sum_with_mono.resize(ne * nm);
  c.prod_with_gen.resize(ne * ng);
  for (std::size_t x = 0; x < ne; ++x) {
    for (std::size_t w = 0; w < nm; ++w) c.sum_with_mono[x * nm + w] = c.position[R.add_ids(c.elems[x], c.mono[w])];
    for (std::size_t g = 0; g < ng; ++g) c.prod_with_gen[x * ng + g] = c.position[R.mul_ids(c.elems[x], gens[g])];
  }
  return c;
}

class IsoSearch {
 public:
  IsoSearch(const RingProfile& a, const RingProfile& b, std::uint64_t budget) : a_(a), b_(b), budget_(budget) {}

  std::optional<IsoWitness> run() {
    const FiniteRing& R1 = a_.ring;
    // Greedy ring generators: basis elements outside the subring generated so far.
    Closure current = closure(R1, {});
    for (std::size_t k = 0; k < R1.dim(); ++k) {
      const ElementId e = R1.id(R1.basis_element(k));
      if (current.position[e] != ~std::uint32_t{0}) continue;
      gens_.push_back(e);
      current = closure(R1, gens_);
    }
    for (std::size_t i = 1; i <= gens_.size(); ++i) {
      levels_.push_back(closure(R1, std::vector<ElementId>(gens_.begin(), gens_.begin() + i)));
    }
    if (gens_.empty()) levels_.push_back(std::move(current));
    candidates_.resize(gens_.size());
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      const std::uint64_t sig = a_.signature[gens_[i]];
      for (std::uint64_t y = 0; y < b_.ring.order(); ++y) {
        if (b_.signature[y] == sig) candidates_[i].push_back(static_cast<ElementId>(y));
      }
    }
    images_.assign(gens_.size(), 0);
    phi_.assign(R1.order(), 0);
    used_.assign(b_.ring.order(), 0);
    if (gens_.empty()) {
      if (!check_level(0)) return std::nullopt;
    } else if (!search(0)) {
      return std::nullopt;
    }
    IsoWitness w;
    for (std::size_t k = 0; k < R1.dim(); ++k) w.images.push_back(b_.ring.element(phi_[R1.id(R1.basis_element(k))]));
    return w;
  }

 private:
  bool search(std::size_t i) {
    for (ElementId c : candidates_[i]) {
      if (++nodes_ > budget_) {
        throw InconclusiveError("isomorphism search exceeded the node budget of " + std::to_string(budget_));
      }
      images_[i] = c;
      if (!check_level(i)) continue;
      if (i + 1 == gens_.size() || search(i + 1)) return true;
    }
    return false;
  }

  // Defines phi on the subring generated by the first i+1 generators and checks that it is an
  // injective ring homomorphism there.
  bool check_level(std::size_t i) {
    const Closure& c = levels_[i];
    const FiniteRing& R2 = b_.ring;
    const std::size_t ng = gens_.empty() ? 0 : i + 1;
    std::vector<ElementId> mono_img(c.mono.size());
    mono_img[0] = R2.one_id();
    for (std::size_t w = 1; w < c.mono.size(); ++w) {
      mono_img[w] = R2.mul_ids(mono_img[c.mono_parent[w].first], images_[c.mono_parent[w].second]);
    }
    std::vector<ElementId> img(c.elems.size());
    img[0] = 0;
    bool ok = true;
    std::vector<ElementId> touched;
    for (std::size_t x = 1; x < c.elems.size() && ok; ++x) {
      img[x] = R2.add_ids(img[c.elem_parent[x].first], mono_img[c.elem_parent[x].second]);
      if (used_[img[x]] || img[x] == 0) ok = false;
      used_[img[x]] = 1;
      touched.push_back(img[x]);
    }
    for (auto t : touched) used_[t] = 0;
    if (!ok) return false;
    const std::size_t nm = c.mono.size();
    for (std::size_t x = 0; x < c.elems.size(); ++x) {
      for (std::size_t w = 0; w < nm; ++w) {
        if (img[c.sum_with_mono[x * nm + w]] != R2.add_ids(img[x], mono_img[w])) return false;
      }
      for (std::size_t g = 0; g < ng; ++g) {
        if (img[c.prod_with_gen[x * ng + g]] != R2.mul_ids(img[x], images_[g])) return false;
      }
    }
    for (std::size_t x = 0; x < c.elems.size(); ++x) phi_[c.elems[x]] = img[x];
    return true;
  }

  const RingProfile& a_;
  const RingProfile& b_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<ElementId> gens_;
  std::vector<Closure> levels_;
  std::vector<std::vector<ElementId>> candidates_;
  std::vector<ElementId> images_;
  std::vector<ElementId> phi_;
  std::vector<std::uint8_t> used_;
};

}  // namespace

RingProfile::RingProfile(FiniteRing r) : ring(std::move(r)), census(element_census(ring)) {
  invariants = compute_invariants(ring, census);
  const auto mpdeg = kernels::omp::minpoly_degree(ring);
  signature.resize(ring.order());
  for (std::uint64_t a = 0; a < ring.order(); ++a) {
    signature[a] = pack_signature(ring.additive_order(ring.element(static_cast<ElementId>(a))), census.nilpotency[a],
                                  census.scan.unit[a] != 0, mpdeg[a], census.scan.annihilator[a]);
  }
}

bool verify_witness(const FiniteRing& from, const FiniteRing& to, const IsoWitness& w) {
  const std::size_t d = from.dim();
  if (w.images.size() != d || from.order() != to.order()) return false;
  for (const auto& img : w.images) {
    if (img.coeffs.size() != to.dim()) return false;
    for (std::size_t l = 0; l < to.dim(); ++l) {
      if (img.coeffs[l] >= to.orders()[l]) return false;
    }
  }
  for (std::size_t k = 0; k < d; ++k) {
    if (from.orders()[k] % to.additive_order(w.images[k]) != 0) return false;
  }
  if (w.images[from.one_index()] != to.one()) return false;
  auto image_of = [&](std::span<const std::uint32_t> coeffs) {
    RingElement acc = to.zero();
    for (std::size_t l = 0; l < d; ++l) acc = to.add(acc, to.scale(w.images[l], coeffs[l]));
    return acc;
  };
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (to.mul(w.images[i], w.images[j]) != image_of(from.product(i, j))) return false;
    }
  }
  // Injectivity over every element, walking the mixed-radix counter of `from`.
  std::vector<std::uint8_t> seen(to.order(), 0);
  std::vector<std::uint32_t> digits(d, 0);
  RingElement cur = to.zero();
  for (std::uint64_t idx = 0; idx < from.order(); ++idx) {
    const ElementId t = to.id(cur);
    if (seen[t]) return false;
    seen[t] = 1;
    for (std::size_t k = d; k-- > 0;) {
      cur = to.add(cur, w.images[k]);
      if (++digits[k] < from.orders()[k]) break;
      digits[k] = 0;
    }
  }
  return true;
}

nlohmann::ordered_json to_json(const FiniteRing& from, const FiniteRing& to, const IsoWitness& w) {
  auto arr = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < from.dim(); ++k) {
    nlohmann::ordered_json e;
    e["basis"] = from.labels()[k];
    e["image"] = element_json(to, to.id(w.images[k]));
    arr.push_back(std::move(e));
  }
  return arr;
}

std::optional<IsoWitness> ring_isomorphic(const RingProfile& a, const RingProfile& b, std::uint64_t node_budget) {
  if (a.ring.order() > kIsoOrderBound || b.ring.order() > kIsoOrderBound) {
    throw ResourceError("isomorphism testing is limited to rings of order <= 4096");
  }
  if (!(a.invariants == b.invariants)) return std::nullopt;
  auto w = IsoSearch(a, b, node_budget).run();
  if (w && !verify_witness(a.ring, b.ring, *w)) throw InternalError("isomorphism search produced an invalid witness");
  return w;
}

std::optional<IsoWitness> ring_isomorphic(const FiniteRing& a, const FiniteRing& b, std::uint64_t node_budget) {
  if (a.order() > kIsoOrderBound || b.order() > kIsoOrderBound) {
    throw ResourceError("isomorphism testing is limited to rings of order <= 4096");
  }
  if (a.order() != b.order() || a.characteristic() != b.characteristic()) return std::nullopt;
  return ring_isomorphic(RingProfile(a), RingProfile(b), node_budget);
}

}  // namespace zlocal
