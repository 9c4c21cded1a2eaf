#include "zlocal/presentation.hpp"

#include <set>

#include "zlocal/error.hpp"

namespace zlocal {

namespace {

constexpr std::uint64_t kMaxPresentedOrder = std::uint64_t{1} << 20;

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) {
    r *= b;
    if (r > (std::uint64_t{1} << 62)) return r;  // saturates well above every bound we test against
  }
  return r;
}

[[noreturn]] void invalid(const std::string& what) { throw ValidationError(what); }

bool uses_v(Family f) { return f == Family::F2 || f == Family::F4; }
bool uses_variant(Family f) { return f == Family::F3 || f == Family::F4; }
bool over_p2(Family f) { return f == Family::F3 || f == Family::F4; }

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::F0: return "F0";
    case Family::F1: return "F1";
    case Family::F2: return "F2";
    case Family::F3: return "F3";
    case Family::F4: return "F4";
  }
  return "?";
}

std::string to_string(Variant v) { return v == Variant::corrected ? "corrected" : "as_printed"; }

Family parse_family(std::string_view s) {
  if (s == "F0") return Family::F0;
  if (s == "F1") return Family::F1;
  if (s == "F2") return Family::F2;
  if (s == "F3") return Family::F3;
  if (s == "F4") return Family::F4;
  invalid("unknown family \"" + std::string(s) + "\" (expected F0..F4)");
}

Variant parse_variant(std::string_view s) {
  if (s == "corrected") return Variant::corrected;
  if (s == "as_printed") return Variant::as_printed;
  invalid("unknown variant \"" + std::string(s) + "\" (expected corrected or as_printed)");
}

std::uint32_t RingPresentation::coefficient_modulus() const {
  if (family_ == Family::F0) return base_;
  return over_p2(family_) ? p_ * p_ : p_;
}

std::uint64_t RingPresentation::expected_order() const {
  switch (family_) {
    case Family::F0: return ipow(base_, std::uint64_t{1} << n_vars_);
    case Family::F1:
    case Family::F2: return ipow(p_, std::uint64_t{n_} * (m_ + 1));
    case Family::F3:
    case Family::F4:
      // With p*x in the ideal, p*g(0) is too; a unit constant term then kills p itself.
      if (variant_ == Variant::as_printed && reduce_mod_p(*g_).coeff(0) != 0) {
        return ipow(p_, std::uint64_t{n_} * (m_ + 1));
      }
      return ipow(p_, std::uint64_t{n_} * (m_ + 2));
  }
  return 0;
}

RingPresentation build_presentation(const PresentationParams& in) {
  // Checklist order is part of the contract: the first failure is the one reported.
  if (!is_prime(in.p)) invalid("p = " + std::to_string(in.p) + " is not prime");
  if (in.p > kMaxPrime) invalid("p = " + std::to_string(in.p) + " exceeds the cap p <= 97");

  RingPresentation out;
  out.family_ = in.family;
  out.p_ = in.p;
  out.strict_ = in.strict;

  if (in.family == Family::F0) {
    if (in.base != in.p && in.base != in.p * in.p) invalid("F0 base must be p or p^2");
    if (in.n_vars < 1) invalid("F0 needs at least one variable");
    if (in.n_vars > 20 || ipow(in.base, std::uint64_t{1} << in.n_vars) > kMaxPresentedOrder) {
      invalid("F0 ring order exceeds 2^20");
    }
    if (!in.g.empty() || in.m != 0 || !in.v.empty()) invalid("F0 takes only base and n_vars");
    out.base_ = in.base;
    out.n_vars_ = in.n_vars;
    return out;
  }

  const std::uint32_t modulus = over_p2(in.family) ? in.p * in.p : in.p;
  if (in.g.empty()) invalid("g is required for family " + to_string(in.family));
  ModPoly g = parse_poly(in.g, modulus);
  if (g.is_zero() || *g.degree() < 1) invalid("g must have degree at least 1");
  if (!g.is_monic()) invalid("g must be monic");
  if (*g.degree() > kMaxDegree) invalid("deg g exceeds the cap 8");
  const ModPoly g_bar = over_p2(in.family) ? reduce_mod_p(g) : g;
  if (!is_irreducible(g_bar)) {
    invalid(over_p2(in.family) ? "g-bar reducible over Z_p" : "g reducible over Z_p");
  }
  const unsigned n = *g.degree();
  if (uses_v(in.family) && n < 2) {
    invalid(in.family == Family::F2 ? "deg g must be at least 2 in case (ii)" : "deg g must exceed 1 in the Q2 case");
  }
  if (uses_v(in.family) && in.m < 1) invalid("m >= 1 required: the relation g - sum v_i y_i needs a y-variable");
  if (uses_v(in.family) && in.v.size() != in.m) {
    invalid("expected " + std::to_string(in.m) + " v-polynomials, got " + std::to_string(in.v.size()));
  }
  if (!uses_v(in.family) && !in.v.empty()) invalid("family " + to_string(in.family) + " takes no v-polynomials");

  std::vector<ModPoly> v;
  for (std::size_t i = 0; i < in.v.size(); ++i) {
    ModPoly vi = parse_poly(in.v[i], modulus);
    const std::string name = "v" + std::to_string(i + 1);
    if (vi.degree() && *vi.degree() >= n) invalid("deg " + name + " >= n = deg g");
    if (in.family == Family::F2 && vi.is_zero()) invalid(name + " must be a nonzero polynomial");
    if (in.family == Family::F4 && reduce_mod_p(vi).is_zero()) invalid(name + " ≡ 0 (mod p)");
    v.push_back(std::move(vi));
  }

  if (in.strict && in.family == Family::F1 && in.m < 1) invalid("strict: m >= 1 required for F1");
  if (in.strict && in.family == Family::F2 && in.m < 2) invalid("strict: m >= 2 required for F2");

  out.n_ = n;
  out.g_ = std::move(g);
  out.m_ = in.m;
  out.v_ = std::move(v);
  out.variant_ = uses_variant(in.family) ? in.variant : Variant::corrected;
  if (!uses_variant(in.family) && in.variant != Variant::corrected) {
    invalid("variant applies to F3/F4 only");
  }
  if (out.expected_order() > kMaxPresentedOrder) invalid("ring order exceeds 2^20");
  return out;
}

nlohmann::ordered_json RingPresentation::to_json() const {
  nlohmann::ordered_json j;
  j["family"] = to_string(family_);
  j["p"] = p_;
  if (family_ == Family::F0) {
    j["base"] = base_;
    j["n_vars"] = n_vars_;
    return j;
  }
  j["g"] = g_->to_string();
  j["m"] = m_;
  if (uses_v(family_)) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& vi : v_) arr.push_back(vi.to_string());
    j["v"] = std::move(arr);
  }
  if (uses_variant(family_)) j["variant"] = to_string(variant_);
  if (strict_) j["strict"] = true;
  return j;
}

RingPresentation presentation_from_json(const nlohmann::json& j) {
  if (!j.is_object()) invalid("presentation must be a JSON object");
  if (!j.contains("family") || !j["family"].is_string()) invalid("presentation needs a string \"family\"");
  const Family fam = parse_family(j["family"].get<std::string>());

  std::set<std::string> allowed{"family", "p"};
  if (fam == Family::F0) {
    allowed.insert({"base", "n_vars"});
  } else {
    allowed.insert({"g", "m", "strict"});
    if (uses_v(fam)) allowed.insert("v");
    if (uses_variant(fam)) allowed.insert("variant");
  }
  for (const auto& [key, _] : j.items()) {
    if (!allowed.count(key)) invalid("unknown key \"" + key + "\" for family " + to_string(fam));
  }

  auto need_uint = [&](const char* key) -> std::uint32_t {
    if (!j.contains(key) || !j[key].is_number_unsigned()) {
      invalid(std::string("presentation needs a non-negative integer \"") + key + "\"");
    }
    return j[key].get<std::uint32_t>();
  };

  PresentationParams params;
  params.family = fam;
  params.p = need_uint("p");
  if (fam == Family::F0) {
    params.base = need_uint("base");
    params.n_vars = need_uint("n_vars");
    return build_presentation(params);
  }
  if (!j.contains("g") || !j["g"].is_string()) invalid("presentation needs a string \"g\"");
  params.g = j["g"].get<std::string>();
  params.m = need_uint("m");
  if (uses_v(fam)) {
    if (!j.contains("v") || !j["v"].is_array()) invalid("presentation needs an array \"v\"");
    for (const auto& vi : j["v"]) {
      if (!vi.is_string()) invalid("entries of \"v\" must be polynomial strings");
      params.v.push_back(vi.get<std::string>());
    }
  }
  if (j.contains("variant")) {
    if (!j["variant"].is_string()) invalid("\"variant\" must be a string");
    params.variant = parse_variant(j["variant"].get<std::string>());
  }
  if (j.contains("strict")) {
    if (!j["strict"].is_boolean()) invalid("\"strict\" must be a boolean");
    params.strict = j["strict"].get<bool>();
  }
  return build_presentation(params);
}

PresentationParams params_of(const RingPresentation& pres) {
  PresentationParams out;
  out.family = pres.family();
  out.p = pres.p();
  out.strict = pres.strict();
  if (pres.family() == Family::F0) {
    out.base = pres.base();
    out.n_vars = pres.n_vars();
    return out;
  }
  out.g = pres.g()->to_string();
  out.m = pres.m();
  for (const auto& vi : pres.v()) out.v.push_back(vi.to_string());
  out.variant = pres.variant();
  return out;
}

}  // namespace zlocal
