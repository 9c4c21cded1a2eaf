#include "zlocal/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "zlocal/classify.hpp"
#include "zlocal/compile.hpp"
#include "zlocal/error.hpp"
#include "zlocal/kernels.hpp"
#include "zlocal/ringcore.hpp"
#include "zlocal/zdg.hpp"

namespace zlocal::cli {

using nlohmann::ordered_json;

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::json: return "json";
    case OutputFormat::text: return "text";
    case OutputFormat::dot: return "dot";
  }
  return "?";
}

OutputFormat parse_format(std::string_view s) {
  if (s == "json") return OutputFormat::json;
  if (s == "text") return OutputFormat::text;
  if (s == "dot") return OutputFormat::dot;
  throw ValidationError("unknown output format '" + std::string(s) + "' (expected json, text or dot)");
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::uint64_t parse_positive(const std::string& key, const std::string& value) {
  std::uint64_t v = 0;
  std::size_t used = 0;
  try {
    if (value.empty() || value[0] == '-') throw std::invalid_argument(value);
    v = std::stoull(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != value.size() || used == 0 || v == 0) {
    throw ValidationError(key + " must be a positive integer, got '" + value + "'");
  }
  return v;
}

}  // namespace

CliConfig parse_config(std::string_view text, CliConfig cfg) {
  std::istringstream in{std::string(text)};
  std::string line;
  unsigned lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') quoted = !quoted;
      if (line[i] == '#' && !quoted) {
        line.resize(i);
        break;
      }
    }
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ValidationError("zlocal.toml line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(std::string_view(line).substr(0, eq));
    std::string value = trim(std::string_view(line).substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    if (key == "order_bound") {
      cfg.order_bound = parse_positive(key, value);
    } else if (key == "node_budget") {
      cfg.node_budget = parse_positive(key, value);
    } else if (key == "output_format") {
      cfg.output_format = parse_format(value);
    } else if (key == "variant_default") {
      cfg.variant_default = parse_variant(value);
    } else {
      throw ValidationError("zlocal.toml line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  return cfg;
}

CliConfig load_config() {
  CliConfig cfg;
  if (std::ifstream f{"zlocal.toml"}) {
    std::stringstream ss;
    ss << f.rdbuf();
    cfg = parse_config(ss.str(), cfg);
  }
  if (const char* env = std::getenv("ZLOCAL_BUDGET")) cfg.node_budget = parse_positive("ZLOCAL_BUDGET", env);
  return cfg;
}

namespace {

struct Context {
  CliConfig cfg;
  OutputFormat format;
  std::ostream& out;
};

FiniteRing load_ring(const std::string& path, const CliConfig& cfg) {
  std::ifstream f(path);
  if (!f) throw ValidationError("cannot read ring file '" + path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("ring file '" + path + "' is not valid JSON: " + e.what());
  }
  FiniteRing R = FiniteRing::from_json(j);
  if (R.order() > cfg.order_bound) {
    throw ResourceError("ring order " + std::to_string(R.order()) + " exceeds order_bound " +
                        std::to_string(cfg.order_bound));
  }
  return R;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ValidationError("cannot write '" + path + "'");
  f << text;
}

void emit_json(const Context& ctx, const ordered_json& j) { ctx.out << j.dump(2) << "\n"; }

void require_format(const Context& ctx, bool dot_ok) {
  if (ctx.format == OutputFormat::dot && !dot_ok) throw ValidationError("--format dot is only supported by graph");
}

void cmd_irreducibles(const Context& ctx, std::uint32_t p, unsigned n) {
  require_format(ctx, false);
  if (!is_prime(p)) throw ValidationError("p = " + std::to_string(p) + " is not prime");
  if (n < 1) throw ValidationError("degree n must be at least 1");
  const auto polys = enumerate_monic_irreducibles(p, n);
  if (ctx.format == OutputFormat::text) {
    for (const auto& f : polys) ctx.out << f.to_string() << "\n";
    return;
  }
  ordered_json j;
  j["p"] = p;
  j["n"] = n;
  j["count"] = polys.size();
  auto arr = ordered_json::array();
  for (const auto& f : polys) arr.push_back(f.to_string());
  j["polynomials"] = std::move(arr);
  emit_json(ctx, j);
}

void cmd_construct(const Context& ctx, PresentationParams params, const std::string& out_path) {
  require_format(ctx, false);
  const RingPresentation pres = build_presentation(params);
  if (pres.expected_order() > ctx.cfg.order_bound) {
    throw ResourceError("ring order " + std::to_string(pres.expected_order()) + " exceeds order_bound " +
                        std::to_string(ctx.cfg.order_bound));
  }
  const FiniteRing R = compile(pres);
  const std::string ring_text = R.to_json().dump(2) + "\n";
  if (out_path.empty()) {
    ctx.out << ring_text;
    return;
  }
  write_file(out_path, ring_text);
  if (ctx.format == OutputFormat::text) {
    ctx.out << "wrote " << out_path << ": order " << R.order() << ", char " << R.characteristic() << "\n";
    return;
  }
  ordered_json j;
  j["out"] = out_path;
  j["order"] = R.order();
  j["char"] = R.characteristic();
  j["presentation"] = pres.to_json();
  emit_json(ctx, j);
}

void cmd_verify(const Context& ctx, const std::string& path) {
  require_format(ctx, false);
  const FiniteRing R = load_ring(path, ctx.cfg);
  require_enumerable(R);
  const auto axioms = kernels::omp::check_axioms(R);
  const ElementCensus census = element_census(R);
  const ZLocalReport rep = is_z_local(R, census);
  if (ctx.format == OutputFormat::text) {
    ctx.out << "order " << R.order() << "\nchar " << R.characteristic() << "\n";
    ctx.out << "axioms " << (axioms.ok() ? "ok" : "FAILED " + axioms.witness) << " (" << kernels::to_string(axioms.mode)
            << ", " << axioms.checks << " checks)\n";
    ctx.out << "units " << census.units.size() << "\nzero_divisors " << census.zero_divisors.size() << "\nradical "
            << census.radical.size() << "\n";
    ctx.out << "is_local " << rep.is_local << "\nJ_equals_Z " << rep.J_equals_Z << "\nJ_squared_zero "
            << rep.J_squared_zero << "\nis_z_local " << rep.is_z_local << "\n";
    if (rep.witness) {
      ctx.out << "witness " << to_string(rep.witness->kind);
      for (auto e : rep.witness->elements) ctx.out << " [" << R.format(e) << "]";
      ctx.out << "\n";
    }
    return;
  }
  ordered_json j;
  j["file"] = path;
  if (R.meta()) j["presentation"] = R.meta()->to_json();
  j["order"] = R.order();
  j["char"] = R.characteristic();
  j["axioms"] = {{"mode", kernels::to_string(axioms.mode)}, {"checks", axioms.checks},
                 {"commutative", axioms.commutative},      {"associative", axioms.associative},
                 {"distributive", axioms.distributive},    {"unital", axioms.unital},
                 {"ok", axioms.ok()}};
  j["units"] = census.units.size();
  j["zero_divisors"] = census.zero_divisors.size();
  j["radical"] = census.radical.size();
  j["is_z_local"] = rep.is_z_local;
  j["report"] = to_json(R, rep);
  emit_json(ctx, j);
}

void cmd_minpoly(const Context& ctx, const std::string& path, const std::string& expr) {
  require_format(ctx, false);
  const FiniteRing R = load_ring(path, ctx.cfg);
  const RingElement a = R.parse_element(expr);
  const auto polys = minimal_polynomials(R, a);
  bool congruent = true;
  const bool char_p2 = prime_of_modulus(R.characteristic()) != R.characteristic();
  if (char_p2) {
    for (const auto& f : polys) congruent = congruent && congruent_mod_p(f, polys.front());
  }
  if (ctx.format == OutputFormat::text) {
    for (const auto& f : polys) ctx.out << f.to_string() << "\n";
    return;
  }
  ordered_json j;
  j["element"] = element_json(R, R.id(a));
  j["char"] = R.characteristic();
  j["degree"] = polys.front().degree().value_or(0);
  j["count"] = polys.size();
  auto arr = ordered_json::array();
  for (const auto& f : polys) arr.push_back(f.to_string());
  j["polynomials"] = std::move(arr);
  if (char_p2) j["congruent_mod_p"] = congruent;
  emit_json(ctx, j);
}

void cmd_graph(const Context& ctx, const std::string& path, const std::string& dot_path, const std::string& csv_path) {
  const FiniteRing R = load_ring(path, ctx.cfg);
  require_enumerable(R);
  const ZdGraph G = build_graph(R);
  if (!dot_path.empty()) write_file(dot_path, to_dot(G));
  if (!csv_path.empty()) write_file(csv_path, to_csv(G));
  switch (ctx.format) {
    case OutputFormat::dot: ctx.out << to_dot(G); break;
    case OutputFormat::text: {
      ctx.out << "vertices " << G.vertices.size() << "\nedges " << G.edge_count() << "\ncomplete "
              << is_complete(G) << "\n";
      for (std::size_t i = 0; i < G.vertices.size(); ++i) {
        ctx.out << G.labels[i] << ":";
        for (auto k : G.adjacency[i]) ctx.out << " [" << G.labels[k] << "]";
        ctx.out << "\n";
      }
      break;
    }
    case OutputFormat::json: emit_json(ctx, to_json(G)); break;
  }
}

void cmd_classify(const Context& ctx, const std::string& path) {
  require_format(ctx, false);
  const FiniteRing R = load_ring(path, ctx.cfg);
  const Classification c = classify_ring(R, ctx.cfg.node_budget);
  if (ctx.format == OutputFormat::text) {
    ctx.out << "case " << to_string(c.form.kase) << "\np " << c.form.p << "\nn " << c.form.n << "\nm " << c.form.m
            << "\ng " << c.form.g.to_string() << "\n";
    for (std::size_t i = 0; i < c.form.v.size(); ++i) ctx.out << "v" << i + 1 << " " << c.form.v[i].to_string() << "\n";
    ctx.out << "presentation " << c.presentation.key() << "\n";
    return;
  }
  emit_json(ctx, to_json(R, c));
}

int cmd_enumerate(const Context& ctx, std::uint32_t p, unsigned char_exp, std::uint64_t max_order) {
  require_format(ctx, false);
  if (max_order > ctx.cfg.order_bound) {
    throw ResourceError("max_order " + std::to_string(max_order) + " exceeds order_bound " +
                        std::to_string(ctx.cfg.order_bound));
  }
  EnumerationOptions opts;
  opts.node_budget = ctx.cfg.node_budget;
  const Census census = enumerate_presentations(p, char_exp, max_order, opts);
  if (ctx.format == OutputFormat::text) {
    ctx.out << to_text(census);
  } else {
    emit_json(ctx, to_json(census));
  }
  return census.partial ? kExitResource : kExitOk;
}

void cmd_iso(const Context& ctx, const std::string& a_path, const std::string& b_path) {
  require_format(ctx, false);
  const FiniteRing A = load_ring(a_path, ctx.cfg);
  const FiniteRing B = load_ring(b_path, ctx.cfg);
  const auto w = ring_isomorphic(A, B, ctx.cfg.node_budget);
  if (ctx.format == OutputFormat::text) {
    ctx.out << (w ? "isomorphic" : "not isomorphic") << "\n";
    if (w) {
      for (std::size_t k = 0; k < A.dim(); ++k) ctx.out << A.labels()[k] << " -> " << B.format(w->images[k]) << "\n";
    }
    return;
  }
  ordered_json j;
  j["isomorphic"] = w.has_value();
  j["witness"] = w ? to_json(A, B, *w) : ordered_json(nullptr);
  if (w) j["witness_verified"] = verify_witness(A, B, *w);
  emit_json(ctx, j);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite Z-local rings: construction, verification, classification and zero-divisor graphs", "zlocal"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format_flag;
  std::optional<std::uint64_t> budget_flag, bound_flag;
  app.add_option("--format", format_flag, "Output format: json, text or dot");
  app.add_option("--node-budget", budget_flag, "Isomorphism search node budget");
  app.add_option("--order-bound", bound_flag, "Largest ring order accepted");

  std::uint32_t irr_p = 0;
  unsigned irr_n = 0;
  auto* irr = app.add_subcommand("irreducibles", "List monic irreducible polynomials over Z_p");
  irr->add_option("p", irr_p)->required();
  irr->add_option("n", irr_n)->required();

  PresentationParams params;
  std::string family, variant, out_path;
  auto* cons = app.add_subcommand("construct", "Compile a presentation to a ring file");
  cons->add_option("--family", family, "F0..F4")->required();
  cons->add_option("--p", params.p)->required();
  cons->add_option("--g", params.g);
  cons->add_option("--m", params.m);
  cons->add_option("--v", params.v, "v_i polynomials (repeat the flag or separate with commas)")->delimiter(',');
  cons->add_option("--variant", variant, "corrected or as_printed");
  cons->add_option("--base", params.base);
  cons->add_option("--n-vars", params.n_vars);
  cons->add_flag("--strict", params.strict);
  cons->add_option("--out", out_path);

  std::string ring_path, ring_path_b, element, dot_path, csv_path;
  auto* ver = app.add_subcommand("verify", "Check ring axioms and the Z-local property");
  ver->add_option("ring", ring_path)->required();
  auto* mp = app.add_subcommand("minpoly", "Minimal polynomials of an element over the prime subring");
  mp->add_option("ring", ring_path)->required();
  mp->add_option("--element", element)->required();
  auto* gr = app.add_subcommand("graph", "Zero-divisor graph");
  gr->add_option("ring", ring_path)->required();
  gr->add_option("--dot", dot_path, "Also write Graphviz DOT to this file");
  gr->add_option("--csv", csv_path, "Also write the CSV edge list to this file");
  auto* cl = app.add_subcommand("classify", "Recover the canonical presentation of a ring");
  cl->add_option("ring", ring_path)->required();

  std::uint32_t en_p = 0;
  unsigned en_exp = 0;
  std::uint64_t en_max = 0;
  auto* en = app.add_subcommand("enumerate", "Census of canonical presentations up to isomorphism");
  en->add_option("--p", en_p)->required();
  en->add_option("--char-exp", en_exp)->required();
  en->add_option("--max-order", en_max)->required();

  auto* iso = app.add_subcommand("iso", "Decide isomorphism of two rings");
  iso->add_option("a", ring_path)->required();
  iso->add_option("b", ring_path_b)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  try {
    CliConfig cfg = load_config();
    if (budget_flag) cfg.node_budget = *budget_flag;
    if (bound_flag) cfg.order_bound = *bound_flag;
    if (cfg.node_budget == 0 || cfg.order_bound == 0) throw ValidationError("bounds must be positive");
    const OutputFormat format = format_flag.empty() ? cfg.output_format : parse_format(format_flag);
    const Context ctx{cfg, format, out};

    if (*irr) {
      cmd_irreducibles(ctx, irr_p, irr_n);
    } else if (*cons) {
      params.family = parse_family(family);
      if (!variant.empty()) {
        params.variant = parse_variant(variant);
      } else if (params.family == Family::F3 || params.family == Family::F4) {
        params.variant = cfg.variant_default;
      }
      cmd_construct(ctx, params, out_path);
    } else if (*ver) {
      cmd_verify(ctx, ring_path);
    } else if (*mp) {
      cmd_minpoly(ctx, ring_path, element);
    } else if (*gr) {
      cmd_graph(ctx, ring_path, dot_path, csv_path);
    } else if (*cl) {
      cmd_classify(ctx, ring_path);
    } else if (*en) {
      return cmd_enumerate(ctx, en_p, en_exp, en_max);
    } else if (*iso) {
      cmd_iso(ctx, ring_path, ring_path_b);
    }
    return kExitOk;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const InconclusiveError& e) {
    err << "inconclusive: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace zlocal::cli
