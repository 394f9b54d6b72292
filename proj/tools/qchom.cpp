#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qchom/bruteforce.hpp"
#include "qchom/closed_form.hpp"
#include "qchom/gap_polynomial.hpp"
#include "qchom/profile.hpp"
#include "qchom/transfer.hpp"
#include "qchom/verify.hpp"

using namespace qchom;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;
constexpr int kIo = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Family family_arg(const std::string& name) {
  if (auto f = parse_family(name)) return *f;
  throw UsageError("unknown family '" + name + "'");
}

Count count_with(const std::string& method, const FamilySpec& spec, int m, HomClass cls) {
  validate(spec);
  if (m < 3) throw std::invalid_argument("target K_m^1 requires m >= 3, got m = " + std::to_string(m));
  if (method == "closed") return hom_closed(spec, m, cls);
  if (method == "bruteforce") return count_by_class(make_family(spec), quasi_complete_graph(m), cls);
  // transfer
  if (spec.family == Family::complete || spec.family == Family::quasi_complete)
    throw UsageError("method unsupported for family");
  if (cls != HomClass::all) throw UsageError("method unsupported for class " + std::string(class_name(cls)));
  const Graph target = quasi_complete_graph(m);
  switch (spec.family) {
    case Family::path: return linear_hom_count(target, spec.n);
    case Family::cycle: return cyclic_hom_count(target, spec.n);
    case Family::broken_wheel: return hub_conditioned_count(target, spec.n, Rim::path);
    default: return hub_conditioned_count(target, spec.n, Rim::cycle);
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact homomorphism counts into quasi-complete graphs K_m^1"};
  app.require_subcommand(1);

  const std::vector<std::string> families_help{"complete", "quasi-complete", "path", "cycle", "broken-wheel", "wheel"};

  auto* count = app.add_subcommand("count", "Count homomorphisms from one source graph");
  std::string c_family, c_class = "hom", c_method = "closed", c_format = "text";
  int c_n = 0, c_m = 0;
  count->add_option("--family", c_family, "Source family")->required()->check(CLI::IsMember(families_help));
  count->add_option("--n", c_n, "Family size")->required();
  count->add_option("--m", c_m, "Target K_m^1")->required();
  count->add_option("--class", c_class, "hom, inj, sur or bij")->check(CLI::IsMember({"hom", "inj", "sur", "bij"}));
  count->add_option("--method", c_method, "closed, bruteforce or transfer")
      ->check(CLI::IsMember({"closed", "bruteforce", "transfer"}));
  count->add_option("--format", c_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* profile = app.add_subcommand("profile", "Partial profile over several families");
  int p_m = 0, p_n_max = 0;
  std::vector<std::string> p_families;
  std::string p_format = "csv", p_out;
  profile->add_option("--m", p_m, "Target K_m^1")->required();
  profile->add_option("--families", p_families, "Comma-separated families")->required()->delimiter(',');
  profile->add_option("--n-max", p_n_max, "Largest family size")->required();
  profile->add_option("--format", p_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  profile->add_option("--out", p_out, "Write to this file instead of stdout");

  auto* verify = app.add_subcommand("verify", "Run the equivalence sweep and write the errata CSV");
  VerifyConfig v_config;
  std::string v_errata = "errata.csv";
  verify->add_option("--n-max", v_config.n_max, "Family size bound of the brute-force grid")->capture_default_str();
  verify->add_option("--m-max", v_config.m_max, "Target bound of the brute-force grid")->capture_default_str();
  verify->add_option("--transfer-n-max", v_config.transfer_n_max, "Size bound of the transfer grid")
      ->capture_default_str();
  verify->add_option("--transfer-m-max", v_config.transfer_m_max, "Target bound of the transfer grid")
      ->capture_default_str();
  verify->add_option("--poly-i-max", v_config.poly_i_max, "Largest gap polynomial walked on its level graph")
      ->capture_default_str();
  verify->add_option("--errata", v_errata, "Errata CSV path")->capture_default_str();

  auto* poly = app.add_subcommand("poly", "Show a gap polynomial p_i or q_i");
  std::string g_kind;
  int g_i = 0;
  std::optional<long long> g_eval;
  poly->add_option("--kind", g_kind, "p or q")->required()->check(CLI::IsMember({"p", "q"}));
  poly->add_option("--i", g_i, "Gap length")->required();
  poly->add_option("--eval", g_eval, "Evaluate at this m");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*count) {
      const FamilySpec spec{family_arg(c_family), c_n};
      const HomClass cls = *parse_class(c_class);
      const Count value = count_with(c_method, spec, c_m, cls);
      if (c_format == "json") {
        nlohmann::ordered_json j;
        j["family"] = c_family;
        j["n"] = c_n;
        j["m"] = c_m;
        j["class"] = c_class;
        j["method"] = c_method;
        j["count"] = to_decimal(value);
        std::cout << j.dump() << '\n';
      } else {
        std::cout << to_decimal(value) << '\n';
      }
      return kOk;
    }

    if (*profile) {
      std::vector<Family> families;
      for (const auto& name : p_families) families.push_back(family_arg(name));
      const auto table = partial_profile(p_m, family_sweep(families, p_n_max));
      const std::string text = p_format == "csv" ? to_csv(table) : to_json(table).dump(2) + "\n";
      if (p_out.empty()) std::cout << text;
      else write_file(p_out, text);
      return kOk;
    }

    if (*verify) {
      const auto report = run_verify(v_config);
      for (const auto& check : report.checks) std::cout << check.summary() << '\n';
      write_file(v_errata, errata_csv(report.errata));
      std::cout << "errata: " << report.errata.size() << " rows written to " << v_errata << '\n';
      std::cout << "as-printed deltas: " << describe(report.deltas) << '\n';
      if (const auto* bad = report.first_failure()) {
        std::cerr << "verify failed in " << bad->name << ": "
                  << (bad->failure ? bad->failure->describe() : std::string("no checks ran")) << '\n';
        return kVerifyFailed;
      }
      std::cout << "all properties ok\n";
      return kOk;
    }

    if (*poly) {
      if (g_i < 0) throw UsageError("--i must be >= 0, got " + std::to_string(g_i));
      const GapKind kind = g_kind == "p" ? GapKind::p : GapKind::q;
      const IntPolynomial poly_value = gap_polynomial_rec(kind, g_i);
      std::cout << poly_value.coefficient_list() << "  (= " << poly_value.human() << ")\n";
      if (g_eval) std::cout << "value at m = " << *g_eval << ": " << to_decimal(poly_value(Count(*g_eval))) << '\n';
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  }
  return kUsage;
}
