#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "picard/catalog.hpp"
#include "picard/constructions.hpp"
#include "picard/equivalence.hpp"
#include "picard/error.hpp"
#include "picard/io.hpp"
#include "picard/representation.hpp"
#include "picard/rmodule.hpp"

namespace {

using namespace picard;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream out;
    out << std::cin.rdbuf();
    return out.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::parse_error, "cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void print_report(const CheckReport& report, const std::string& format, std::ostream& os) {
  if (format == "json-lines")
    os << report_json_lines(report);
  else
    os << serialize(report_document(report));
}

int run_validate(const std::string& path, const std::string& format) {
  Document doc = parse(slurp(path));
  CheckReport report;
  if (doc.kind == "twogroup") {
    report = validate_two_group(twogroup_from_document(doc));
  } else if (doc.kind == "tworing") {
    report = validate_two_ring(tworing_from_document(doc));
  } else if (doc.kind == "module") {
    report = validate_module(*module_from_document(doc));
  } else if (doc.kind == "hom") {
    report = validate_mod_hom(hom_from_document(doc));
  } else if (doc.kind == "twomorphism") {
    report = validate_mod_two_morphism(twomorphism_from_document(doc));
  } else {
    fail(Errc::parse_error, "cannot validate a document of kind " + doc.kind);
  }
  print_report(report, format, std::cout);
  return report.all_pass() ? kExitPass : kExitCheckFailed;
}

int run_construct(const std::string& what, const std::vector<std::string>& args,
                  const std::string& format, const SearchBudget& budget) {
  auto need = [&](std::size_t n) {
    if (args.size() != n)
      fail(Errc::parse_error, "construct " + what + " expects " + std::to_string(n) + " file(s)");
  };
  Document out_doc;
  CheckReport report;
  if (what == "kernel" || what == "cokernel" || what == "pip" || what == "copip" ||
      what == "im1" || what == "im2" || what == "im1pl" || what == "im2pl") {
    need(1);
    RModHom f = hom_from_document(parse(slurp(args[0])));
    std::shared_ptr<const RModule> result;
    if (what == "kernel") result = kernel(f).ker;
    if (what == "cokernel") result = cokernel(f).coker;
    if (what == "pip") result = pip(f).pip;
    if (what == "copip") result = copip(f).copip;
    if (what == "im1") result = im1(f);
    if (what == "im2") result = im2(f);
    if (what == "im1pl") result = im1_pl(f);
    if (what == "im2pl") result = im2_pl(f);
    out_doc = to_document(*result);
    report = validate_module(*result);
  } else if (what == "pip-sigma" || what == "copip-sigma") {
    need(1);
    RModHom f = hom_from_document(parse(slurp(args[0])));
    RModMor sigma = what == "pip-sigma" ? pip(f).sigma : copip(f).sigma;
    out_doc = to_document(sigma);
    report = validate_mod_two_morphism(sigma);
  } else if (what == "root" || what == "coroot") {
    need(1);
    RModMor alpha = twomorphism_from_document(parse(slurp(args[0])));
    std::shared_ptr<const RModule> result =
        what == "root" ? root(alpha).root : coroot(alpha).coroot;
    out_doc = to_document(*result);
    report = validate_module(*result);
  } else if (what == "biproduct") {
    need(2);
    auto a = module_from_document(parse(slurp(args[0])));
    auto b = module_from_document(parse(slurp(args[1])));
    BiproductResult bp = biproduct(a, b);
    out_doc = to_document(*bp.sum);
    report = validate_module(*bp.sum);
  } else if (what == "end") {
    need(1);
    SymTwoGroup a = twogroup_from_document(parse(slurp(args[0])));
    EndRing e = end_ring(a, budget);
    out_doc = to_document(*e.ring);
    report = validate_two_ring(*e.ring);
  } else if (what == "hom") {
    need(2);
    auto a = module_from_document(parse(slurp(args[0])));
    auto b = module_from_document(parse(slurp(args[1])));
    HomTwoGroupResult h = hom_two_group(a, b, budget);
    out_doc = to_document(h.hom);
    report = validate_two_group(h.hom);
  } else {
    fail(Errc::parse_error, "unknown construction " + what);
  }
  std::cout << serialize(out_doc);
  print_report(report, format, std::cerr);
  return report.all_pass() ? kExitPass : kExitCheckFailed;
}

int run_equiv(const std::string& a_path, const std::string& b_path, const std::string& format,
              const SearchBudget& budget) {
  auto a = module_from_document(parse(slurp(a_path)));
  auto b = module_from_document(parse(slurp(b_path)));
  Fingerprint fa = invariants_fingerprint(*a);
  Fingerprint fb = invariants_fingerprint(*b);
  CheckReport report;
  report.record("equiv.fingerprint", fa == fb, {fa.to_string(), fb.to_string()});
  auto witness = find_equivalence(a, b, budget);
  report.record("equiv.witness", witness.has_value(),
                {"EQUIV_NOT_FOUND", "budget=" + std::to_string(budget.max_candidates),
                 fa.to_string(), fb.to_string()});
  print_report(report, format, std::cout);
  return witness.has_value() ? kExitPass : kExitCheckFailed;
}

int run_puppe(const std::string& path, const std::string& format, const SearchBudget& budget) {
  RModHom f = hom_from_document(parse(slurp(path)));
  CheckReport report = puppe_check(f, budget);
  print_report(report, format, std::cout);
  return report.all_pass() ? kExitPass : kExitCheckFailed;
}

int run_catalog(const std::string& name) {
  if (name == "list") {
    for (const auto& n : catalog_twogroup_names()) std::cout << n << "\n";
    for (const auto& n : catalog_ring_names()) std::cout << n << "\n";
    for (const auto& n : catalog_module_names()) std::cout << n << "\n";
    for (const auto& n : catalog_hom_names()) std::cout << n << "\n";
    return kExitPass;
  }
  if (name.find(':') != std::string::npos) {
    std::cout << serialize(to_document(catalog_hom(name)));
    return kExitPass;
  }
  if (name.find('@') != std::string::npos) {
    try {
      std::cout << serialize(to_document(catalog_hom(name)));
      return kExitPass;
    } catch (const Error&) {
      std::cout << serialize(to_document(*catalog_module(name)));
      return kExitPass;
    }
  }
  if (!name.empty() && name[0] == 'z') {
    std::cout << serialize(to_document(*catalog_ring(name)));
    return kExitPass;
  }
  std::cout << serialize(to_document(catalog_twogroup(name)));
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite symmetric 2-groups, 2-rings, and 2-modules as checkable tables"};
  app.require_subcommand(1);
  app.fallthrough(true);

  std::string format = "text";
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "json-lines"}));
  bool deterministic = false;
  app.add_flag("--deterministic", deterministic,
               "Commit to the lexicographically least witness (the default order already does)");
  std::size_t budget_nodes = 2000000;
  if (const char* env = std::getenv("PICARD_BUDGET"))
    budget_nodes = std::strtoull(env, nullptr, 10);
  app.add_option("--budget", budget_nodes, "Search node budget (default from PICARD_BUDGET)");

  auto* validate_cmd = app.add_subcommand("validate", "Run the validator for a document");
  std::string validate_path;
  validate_cmd->add_option("file", validate_path)->required();

  auto* construct_cmd =
      app.add_subcommand("construct", "Build a construction and emit its document");
  std::string construct_what;
  std::vector<std::string> construct_args;
  construct_cmd->add_option("what", construct_what)->required();
  construct_cmd->add_option("args", construct_args);

  auto* equiv_cmd = app.add_subcommand("equiv", "Search for an equivalence between two modules");
  std::string equiv_a, equiv_b;
  equiv_cmd->add_option("a", equiv_a)->required();
  equiv_cmd->add_option("b", equiv_b)->required();

  auto* puppe_cmd = app.add_subcommand("puppe", "Run the four 2-Puppe-exactness certificates");
  std::string puppe_path;
  puppe_cmd->add_option("file", puppe_path)->required();

  auto* catalog_cmd = app.add_subcommand("catalog", "Emit a named catalog instance");
  std::string catalog_name;
  catalog_cmd->add_option("name", catalog_name)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    SearchBudget budget;
    budget.max_candidates = budget_nodes;
    if (*validate_cmd) return run_validate(validate_path, format);
    if (*construct_cmd) return run_construct(construct_what, construct_args, format, budget);
    if (*equiv_cmd) return run_equiv(equiv_a, equiv_b, format, budget);
    if (*puppe_cmd) return run_puppe(puppe_path, format, budget);
    if (*catalog_cmd) return run_catalog(catalog_name);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    if (e.code() == Errc::budget_exceeded) return kExitBudget;
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
