// gloc: localization verdicts for inclusions of finite simple groups,
// plus queries against the bundled rigid component graph.

#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gloc/aut.hpp"
#include "gloc/rigid_graph.hpp"
#include "gloc/verify.hpp"

#ifndef GLOC_DATA_DIR
#define GLOC_DATA_DIR "data"
#endif

namespace {

constexpr int kDecisive = 0;
constexpr int kError = 1;
constexpr int kUndecided = 2;

// Headline suffix listing the route families that reached the verdict.
std::string agreement(const std::vector<gloc::Route>& decisive) {
  bool criterion = false, oracle = false, coset = false;
  for (gloc::Route r : decisive) {
    switch (r) {
      case gloc::Route::oracle: oracle = true; break;
      case gloc::Route::coset_embedding: coset = true; break;
      default: criterion = true; break;
    }
  }
  std::string s;
  for (const char* name : {criterion ? "criterion" : nullptr,
                           oracle ? "oracle" : nullptr,
                           coset ? "coset" : nullptr}) {
    if (!name) continue;
    if (!s.empty()) s += '+';
    s += name;
  }
  return s;
}

int run_verify(const gloc::Atlas& atlas, const std::string& sub,
               const std::string& sup, const gloc::VerifyOptions& opt) {
  const gloc::GroupRecord& H = atlas.get(sub);
  const gloc::GroupRecord& G = atlas.get(sup);
  gloc::VerifyOutcome out = gloc::is_localization(H, G, opt);
  std::string headline = gloc::to_string(out.verdict.value);
  if (opt.cross_check && out.decisive.size() >= 2)
    headline += " (" + agreement(out.decisive) + " agree)";
  std::cout << headline << "\n\n" << gloc::to_text(out.verdict);
  return out.verdict.value == gloc::VerdictValue::Undecided ? kUndecided
                                                            : kDecisive;
}

int run_embed(const gloc::Atlas& atlas, const std::string& sub,
              const gloc::VerifyOptions& opt) {
  const gloc::GroupRecord& H = atlas.get(sub);
  if (H.subgroups.empty()) {
    std::cout << "no recorded subgroups for " << H.name << '\n';
    return kUndecided;
  }
  bool any_decisive = false;
  bool first = true;
  for (const auto& [name, words] : H.subgroups) {
    if (!first) std::cout << '\n';
    first = false;
    std::cout << "subgroup: " << name << '\n';
    try {
      gloc::Verdict v = gloc::verify_coset_edge(H, words, opt.max_cosets,
                                                opt.low_index_budget);
      std::cout << gloc::to_text(v);
      if (v.value != gloc::VerdictValue::Undecided) any_decisive = true;
    } catch (const std::invalid_argument& e) {
      std::cout << "no coset embedding: " << e.what() << '\n';
    }
  }
  return any_decisive ? kDecisive : kUndecided;
}

int run_aut(const gloc::Atlas& atlas, const std::string& name, bool realize) {
  const gloc::GroupRecord& G = atlas.get(name);
  gloc::AutOrderValue ao = gloc::aut_order(G);
  std::cout << "group: " << G.name << '\n';
  std::cout << "order: " << G.order_u64() << '\n';
  std::cout << "automorphism order: " << ao.value << " ("
            << gloc::to_string(ao.provenance) << ")\n";
  std::cout << "outer order: " << ao.value / G.order_u64() << '\n';
  if (realize) {
    gloc::AutRep rep = gloc::aut_realization(G);
    std::cout << "realization: " << gloc::to_string(rep.mode) << '\n';
    std::cout << "realization degree: " << rep.realization.degree() << '\n';
    std::cout << "certified: " << (rep.certified() ? "yes" : "no") << '\n';
  }
  return kDecisive;
}

int run_components(bool verified_only) {
  const gloc::RigidGraph& g = gloc::bundled_graph();
  auto comps = g.components(verified_only);
  std::cout << "components: " << comps.size() << '\n';
  for (std::size_t i = 0; i < comps.size(); ++i) {
    std::cout << i << " (" << comps[i].size() << "):";
    for (const std::string& m : comps[i]) std::cout << ' ' << m;
    std::cout << '\n';
  }
  return kDecisive;
}

int run_path(const std::string& from, const std::string& to) {
  const gloc::RigidGraph& g = gloc::bundled_graph();
  auto z = g.path(from, to);
  if (!z) {
    std::cout << "no path between " << from << " and " << to << '\n';
    return kDecisive;
  }
  std::cout << gloc::to_string(*z) << '\n';
  return kDecisive;
}

int run_validate(const gloc::Atlas& atlas) {
  std::cout << "records: " << atlas.records.size() << '\n';
  for (const gloc::GroupRecord& r : atlas.records) {
    std::cout << r.name;
    if (r.is_stub())
      std::cout << " stub";
    else
      std::cout << " degree " << r.degree;
    std::cout << " order " << r.meta_order.digits << " ("
              << gloc::to_string(r.meta_order.tag) << ") simplicity "
              << (r.simplicity == gloc::GroupRecord::Simplicity::verified
                      ? "verified"
                      : "asserted")
              << '\n';
  }
  return kDecisive;
}

int run_export(const std::string& format) {
  const gloc::RigidGraph& g = gloc::bundled_graph();
  std::cout << (format == "dot" ? g.to_dot() : gloc::serialize_graph(g));
  return kDecisive;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"localization verdicts for inclusions of finite simple groups"};
  app.require_subcommand(1);

  std::string atlas_path = std::string(GLOC_DATA_DIR) + "/groups.atlas";
  app.add_option("--atlas", atlas_path, "group catalog file")
      ->envname("GLOC_ATLAS");

  gloc::VerifyOptions opt;
  std::string sub_name, sup_name, from, to, group_name, format = "text";
  bool realize = false, verified_only = false;

  CLI::App* verify = app.add_subcommand(
      "verify", "decide whether sub -> sup is a localization");
  verify->add_option("sub", sub_name)->required();
  verify->add_option("sup", sup_name)->required();
  verify->add_flag("--cross-check", opt.cross_check,
                   "run every feasible route and demand agreement")
      ->envname("GLOC_CROSS_CHECK");
  verify->add_option("--max-order", opt.max_order, "target order bound")
      ->envname("GLOC_MAX_ORDER")
      ->check(CLI::PositiveNumber);
  verify->add_option("--max-degree", opt.max_degree, "target degree bound")
      ->envname("GLOC_MAX_DEGREE")
      ->check(CLI::PositiveNumber);
  verify->add_option("--max-cosets", opt.max_cosets,
                     "coset table size bound")
      ->envname("GLOC_MAX_COSETS")
      ->check(CLI::PositiveNumber);

  CLI::App* embed = app.add_subcommand(
      "embed", "run the coset route on each recorded subgroup of a group");
  embed->add_option("group", group_name)->required();
  embed->add_option("--max-cosets", opt.max_cosets, "coset table size bound")
      ->envname("GLOC_MAX_COSETS")
      ->check(CLI::PositiveNumber);

  CLI::App* aut = app.add_subcommand(
      "aut", "report the automorphism group order of a group");
  aut->add_option("group", group_name)->required();
  aut->add_flag("--realize", realize,
                "also build a permutation realization of Aut(G)");

  CLI::App* components = app.add_subcommand(
      "components", "list the rigid components of the bundled graph");
  components->add_flag("--verified-only", verified_only,
                       "keep only engine-verified edges");

  CLI::App* path = app.add_subcommand(
      "path", "show a zigzag between two groups in the bundled graph");
  path->add_option("from", from)->required();
  path->add_option("to", to)->required();

  CLI::App* validate = app.add_subcommand(
      "validate-atlas", "parse and validate the group catalog");

  CLI::App* exp = app.add_subcommand(
      "export", "print the bundled graph as text or DOT");
  exp->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "dot"}))
      ->envname("GLOC_FORMAT");

  for (CLI::App* s : {verify, embed, aut, components, path, validate, exp})
    s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kError;  // keep --help at 0
  }

  try {
    if (*verify) {
      gloc::Atlas atlas = gloc::load_atlas(atlas_path);
      return run_verify(atlas, sub_name, sup_name, opt);
    }
    if (*embed) {
      gloc::Atlas atlas = gloc::load_atlas(atlas_path);
      return run_embed(atlas, group_name, opt);
    }
    if (*aut) {
      gloc::Atlas atlas = gloc::load_atlas(atlas_path);
      return run_aut(atlas, group_name, realize);
    }
    if (*components) return run_components(verified_only);
    if (*path) return run_path(from, to);
    if (*validate) {
      gloc::Atlas atlas = gloc::load_atlas(atlas_path);
      return run_validate(atlas);
    }
    if (*exp) return run_export(format);
  } catch (const gloc::GuardError& e) {
    std::cout << "undecided: " << e.what() << '\n';
    return kUndecided;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
