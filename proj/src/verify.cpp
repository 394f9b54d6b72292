#include "qchom/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "qchom/bad_terms.hpp"
#include "qchom/bruteforce.hpp"
#include "qchom/closed_form.hpp"
#include "qchom/fit.hpp"
#include "qchom/gap_polynomial.hpp"
#include "qchom/printed.hpp"
#include "qchom/profile.hpp"
#include "qchom/transfer.hpp"

namespace qchom {

std::string Mismatch::describe() const {
  std::ostringstream os;
  os << "family=" << family << " n=" << n << " m=" << m;
  if (k >= 0) os << " k=" << k;
  os << " expected=" << expected << " got=" << got;
  if (!what.empty()) os << " (" << what << ")";
  return os.str();
}

std::string CheckResult::summary() const {
  std::ostringstream os;
  os << (ok() ? "ok   " : "FAIL ") << name << ": " << checks << " checks";
  os.setf(std::ios::fixed);
  os.precision(2);
  os << " in " << seconds << "s";
  if (failure) os << "; first mismatch " << failure->describe();
  else if (checks == 0) os << "; nothing was checked";
  return os.str();
}

Grid Grid::uniform(int n_max, int m_max) {
  Grid g;
  for (Family f : kAllFamilies)
    if (min_size(f) <= n_max) g.families.push_back({f, min_size(f), n_max});
  g.m_hi = m_max;
  return g;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  std::size_t checks = 0;
  std::optional<Mismatch> mismatch;

  // Records one comparison and keeps the first mismatch.
  bool expect(const Count& expected, const Count& got, std::string family, int n, int m, int k,
              std::string what = {}) {
    ++checks;
    if (expected == got || mismatch) return expected == got;
    mismatch = Mismatch{std::move(family), n, m, k, to_decimal(expected), to_decimal(got), std::move(what)};
    return false;
  }
};

// Evaluates every item (in parallel) and reports the first mismatch in item
// order, so the result does not depend on scheduling.
template <class Item, class Eval>
CheckResult run_items(std::string name, const std::vector<Item>& items, Eval eval) {
  const auto start = Clock::now();
  std::vector<Outcome> outcomes(items.size());
  const auto count = static_cast<std::int64_t>(items.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      eval(items[i], outcomes[i]);
    } catch (const std::exception& e) {
      ++outcomes[i].checks;
      if (!outcomes[i].mismatch) outcomes[i].mismatch = Mismatch{"-", 0, 0, -1, "no exception", e.what(), ""};
    }
  }
  CheckResult result;
  result.name = std::move(name);
  for (auto& o : outcomes) {
    result.checks += o.checks;
    if (o.mismatch && !result.failure) result.failure = std::move(o.mismatch);
  }
  result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

struct Point {
  Family family;
  int n;
  int m;
};

std::vector<Point> points(const Grid& grid, std::initializer_list<Family> only = {}) {
  std::vector<Point> out;
  for (const auto& range : grid.families) {
    if (only.size() > 0 && std::find(only.begin(), only.end(), range.family) == only.end()) continue;
    for (int n = std::max(range.n_lo, min_size(range.family)); n <= range.n_hi; ++n)
      for (int m = std::max(grid.m_lo, 3); m <= grid.m_hi; ++m) out.push_back({range.family, n, m});
  }
  return out;
}

std::string fam(Family f) { return std::string(family_name(f)); }

bool has_terms(Family f) { return f != Family::complete && f != Family::quasi_complete; }

}  // namespace

CheckResult check_bruteforce_equivalence(const Grid& grid) {
  return run_items("closed-vs-bruteforce", points(grid), [](const Point& p, Outcome& o) {
    const auto counts = count_all_classes(make_family({p.family, p.n}), quasi_complete_graph(p.m));
    for (HomClass c : kAllClasses) {
      if (!class_covered(p.family, c)) continue;
      o.expect(counts[c], hom_closed({p.family, p.n}, p.m, c), fam(p.family), p.n, p.m, -1,
               "class " + std::string(class_name(c)));
    }
  });
}

CheckResult check_term_histograms(const Grid& grid) {
  const auto items = points(grid, {Family::path, Family::cycle, Family::broken_wheel, Family::wheel});
  return run_items("bad-terms-vs-histogram", items, [](const Point& p, Outcome& o) {
    const auto hist = exceptional_histogram(make_family({p.family, p.n}), p.m);
    const auto terms = bad_terms(p.family, p.n, p.m, Evaluator::enumeration);
    for (std::size_t k = 1; k < hist.size(); ++k)
      o.expect(hist[k], terms[k], fam(p.family), p.n, p.m, static_cast<int>(k));
  });
}

CheckResult check_histogram_identities(const Grid& grid) {
  return run_items("histogram-identities", points(grid), [](const Point& p, Outcome& o) {
    const Graph g = make_family({p.family, p.n});
    const auto hist = exceptional_histogram(g, p.m);
    const std::string f = fam(p.family);
    o.expect(count_by_class(g, complete_graph(p.m), HomClass::all), hist.total(), f, p.n, p.m, -1,
             "histogram total vs hom into K_m");
    o.expect(count_by_class(g, quasi_complete_graph(p.m), HomClass::all), hist[0], f, p.n, p.m, 0,
             "histogram[0] vs hom into K_m^1");
    if (has_terms(p.family)) {
      o.expect(base_count(p.family, p.n, p.m), hist.total(), f, p.n, p.m, -1, "chromatic base count");
      const auto terms = bad_terms(p.family, p.n, p.m);
      Count rest = base_count(p.family, p.n, p.m);
      for (std::size_t k = 1; k < terms.size(); ++k) rest -= terms[k];
      o.expect(rest, hom_closed({p.family, p.n}, p.m), f, p.n, p.m, -1, "base minus bad terms");
    }
    if (p.family == Family::complete)
      for (std::size_t k = 2; k < hist.size(); ++k) o.expect(0, hist[k], f, p.n, p.m, static_cast<int>(k));
  });
}

CheckResult check_transfer_equivalence(int n_max, int m_max) {
  Grid grid;
  for (Family f : {Family::path, Family::cycle, Family::broken_wheel, Family::wheel})
    grid.families.push_back({f, min_size(f), n_max});
  grid.m_hi = m_max;
  return run_items("closed-vs-transfer", points(grid), [](const Point& p, Outcome& o) {
    const Graph target = quasi_complete_graph(p.m);
    Count oracle;
    switch (p.family) {
      case Family::path: oracle = linear_hom_count(target, p.n); break;
      case Family::cycle: oracle = cyclic_hom_count(target, p.n); break;
      case Family::broken_wheel: oracle = hub_conditioned_count(target, p.n, Rim::path); break;
      default: oracle = hub_conditioned_count(target, p.n, Rim::cycle); break;
    }
    o.expect(oracle, hom_closed({p.family, p.n}, p.m), fam(p.family), p.n, p.m, -1);
  });
}

CheckResult check_transfer_base_counts(int n_max, int m_max) {
  Grid grid;
  for (Family f : {Family::path, Family::cycle, Family::broken_wheel, Family::wheel})
    grid.families.push_back({f, min_size(f), n_max});
  grid.m_hi = m_max;
  return run_items("transfer-vs-base-count", points(grid), [](const Point& p, Outcome& o) {
    const Graph target = complete_graph(p.m);
    Count oracle;
    switch (p.family) {
      case Family::path: oracle = linear_hom_count(target, p.n); break;
      case Family::cycle: oracle = cyclic_hom_count(target, p.n); break;
      case Family::broken_wheel: oracle = hub_conditioned_count(target, p.n, Rim::path); break;
      default: oracle = hub_conditioned_count(target, p.n, Rim::cycle); break;
    }
    o.expect(oracle, base_count(p.family, p.n, p.m), fam(p.family), p.n, p.m, -1);
  });
}

CheckResult check_k3_vanishing() {
  std::vector<Point> items;
  for (int h = 2; h <= 8; ++h) items.push_back({Family::cycle, 2 * h + 1, 3});
  for (int h = 1; h <= 8; ++h) items.push_back({Family::broken_wheel, 2 * h + 1, 3});
  for (int n = 3; n <= 8; ++n) items.push_back({Family::wheel, n, 3});
  return run_items("vanishing-into-K3", items, [](const Point& p, Outcome& o) {
    const Graph target = quasi_complete_graph(3);
    Count oracle;
    switch (p.family) {
      case Family::cycle: oracle = cyclic_hom_count(target, p.n); break;
      case Family::broken_wheel: oracle = hub_conditioned_count(target, p.n, Rim::path); break;
      default: oracle = hub_conditioned_count(target, p.n, Rim::cycle); break;
    }
    o.expect(0, hom_closed({p.family, p.n}, 3), fam(p.family), p.n, 3, -1, "closed form");
    o.expect(0, oracle, fam(p.family), p.n, 3, -1, "transfer oracle");
  });
}

namespace {

struct Golden {
  GapKind kind;
  int i;
  const char* expansion;
};

// Products of (m-r) and 2, separated by '+', as printed for the gap
// polynomials of length 1..5.
constexpr Golden kGoldens[] = {
    {GapKind::p, 1, "(m-2)"},
    {GapKind::q, 1, "(m-2)"},
    {GapKind::p, 2, "(m-2)(m-3)"},
    {GapKind::q, 2, "(m-2)(m-1)"},
    {GapKind::p, 3, "(m-2)(m-3)(m-3)+(m-2)2(m-2)"},
    {GapKind::q, 3, "(m-2)(m-3)(m-1)+(m-2)2(m-2)"},
    {GapKind::p, 4, "(m-2)(m-3)(m-3)(m-3)+(m-2)(m-3)2(m-2)+(m-2)2(m-2)(m-3)"},
    {GapKind::q, 4, "(m-2)(m-3)(m-3)(m-1)+(m-2)(m-3)2(m-2)+(m-2)2(m-2)(m-1)"},
    {GapKind::p, 5,
     "(m-2)(m-3)(m-3)(m-3)(m-3)+(m-2)(m-3)(m-3)2(m-2)+(m-2)(m-3)2(m-2)(m-3)+(m-2)2(m-2)(m-3)(m-3)+"
     "(m-2)2(m-2)2(m-2)"},
    {GapKind::q, 5,
     "(m-2)(m-3)(m-3)(m-3)(m-1)+(m-2)(m-3)(m-3)2(m-2)+(m-2)(m-3)2(m-2)(m-1)+(m-2)2(m-2)(m-3)(m-1)+"
     "(m-2)2(m-2)2(m-2)"},
};

std::pair<IntPolynomial, std::uint64_t> parse_expansion(std::string_view text) {
  IntPolynomial total;
  std::uint64_t summands = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    IntPolynomial product = IntPolynomial::constant(1);
    while (pos < text.size() && text[pos] != '+') {
      if (text[pos] == '2') {
        product *= 2;
        ++pos;
      } else if (text.substr(pos, 3) == "(m-") {
        const auto close = text.find(')', pos);
        product = product * IntPolynomial::linear(std::stoi(std::string(text.substr(pos + 3, close - pos - 3))));
        pos = close + 1;
      } else {
        throw std::logic_error("malformed golden expansion");
      }
    }
    total += product;
    ++summands;
    ++pos;
  }
  return {total, summands};
}

}  // namespace

CheckResult check_gap_goldens() {
  std::vector<Golden> items(std::begin(kGoldens), std::end(kGoldens));
  return run_items("gap-polynomial-goldens", items, [](const Golden& g, Outcome& o) {
    const auto [expected, summands] = parse_expansion(g.expansion);
    const auto walked = gap_path_sum(g.kind, g.i);
    const std::string label = g.kind == GapKind::p ? "p" : "q";
    const auto same = [&](const IntPolynomial& got, const char* what) {
      ++o.checks;
      if (got == expected || o.mismatch) return;
      o.mismatch = Mismatch{label, g.i, 0, -1, expected.coefficient_list(), got.coefficient_list(), what};
    };
    same(walked.polynomial, "level graph");
    same(gap_polynomial_rec(g.kind, g.i), "recurrence");
    o.expect(summands, walked.summands, label, g.i, 0, -1, "summand count");
  });
}

CheckResult check_gap_recurrence(int i_max) {
  std::vector<std::pair<GapKind, int>> items;
  for (int i = 0; i <= i_max; ++i) {
    items.emplace_back(GapKind::p, i);
    items.emplace_back(GapKind::q, i);
  }
  // The deepest walks dominate; start them first.
  std::reverse(items.begin(), items.end());
  auto result = run_items("gap-definition-vs-recurrence", items, [](const auto& item, Outcome& o) {
    const auto [kind, i] = item;
    const std::string label = kind == GapKind::p ? "p" : "q";
    const IntPolynomial rec = gap_polynomial_rec(kind, i);
    const PathSum walked = i == 0 ? PathSum{IntPolynomial::constant(1), 1} : gap_path_sum(kind, i);
    ++o.checks;
    if (walked.polynomial != rec && !o.mismatch)
      o.mismatch = Mismatch{label, i, 0, -1, rec.coefficient_list(), walked.polynomial.coefficient_list(),
                            "level graph vs recurrence"};
    if (i >= 1) {
      // 0/1 strings of length i starting and ending in 0 with no "11":
      // these number F(i) with F(1) = F(2) = 1.
      std::uint64_t a = 1, b = 1;
      for (int j = 3; j <= i; ++j) std::tie(a, b) = std::pair{b, a + b};
      o.expect(Count(i <= 2 ? 1 : b), Count(walked.summands), label, i, 0, -1, "summands vs binary strings");
    }
  });
  return result;
}

CheckResult check_special_constants(int n_max, int m_max) {
  Grid grid;
  grid.families = {{Family::path, 2, n_max}, {Family::cycle, 4, n_max}, {Family::broken_wheel, 3, n_max},
                   {Family::wheel, 3, n_max}};
  grid.m_hi = m_max;
  return run_items("special-constants", points(grid), [](const Point& p, Outcome& o) {
    const std::string f = fam(p.family);
    const int n = p.n;
    const int m = p.m;
    switch (p.family) {
      case Family::path: o.expect(2, bad_term_path(n, m, n - 1), f, n, m, n - 1); break;
      case Family::cycle:
        o.expect(n % 2 == 0 ? 2 : 0, bad_term_cycle(n, m, n), f, n, m, n);
        o.expect(0, bad_term_cycle(n, m, n - 1), f, n, m, n - 1);
        break;
      case Family::broken_wheel:
        for (int k = (n + 1) / 2 + 1; k <= n; ++k)
          o.expect(0, broken_wheel_split(n, m, k).hub_exceptional, f, n, m, k, "u^{k,1} beyond the bound");
        break;
      default:
        for (int k = n / 2 + 1; k <= n; ++k)
          o.expect(0, wheel_split(n, m, k).hub_exceptional, f, n, m, k, "v^{k,1} beyond the bound");
        break;
    }
  });
}

CheckResult check_run_length(int n_max, int m_max) {
  struct Item {
    int kind;  // 0 linear clusters, 1 cyclic clusters, 2 linear spokes, 3 cyclic spokes
    int n;
    int m;
  };
  std::vector<Item> items;
  for (int kind = 0; kind < 4; ++kind)
    for (int n = kind == 0 ? 2 : 3; n <= n_max; ++n)
      for (int m = 3; m <= m_max; ++m) items.push_back({kind, n, m});
  return run_items("run-length-vs-enumeration", items, [](const Item& it, Outcome& o) {
    static const char* names[] = {"path", "cycle", "broken-wheel spokes", "wheel spokes"};
    const Geometry g = it.kind % 2 == 0 ? Geometry::linear : Geometry::cyclic;
    const auto slow = it.kind < 2 ? enumerate_cluster_terms(g, it.n, it.m) : enumerate_spoke_terms(g, it.n, it.m);
    const auto fast = it.kind < 2 ? run_length_cluster_terms(g, it.n, it.m) : run_length_spoke_terms(g, it.n, it.m);
    if (slow.size() != fast.size()) {
      o.expect(slow.size(), fast.size(), names[it.kind], it.n, it.m, -1, "term vector length");
      return;
    }
    for (std::size_t k = 0; k < slow.size(); ++k)
      o.expect(slow[k], fast[k], names[it.kind], it.n, it.m, static_cast<int>(k));
  });
}

CheckResult check_polynomial_fit(int max_vertices) {
  std::vector<FamilySpec> specs;
  for (Family f : kAllFamilies)
    for (int n = min_size(f);; ++n) {
      if (make_family({f, n}).vertex_count() > max_vertices) break;
      specs.push_back({f, n});
    }
  return run_items("polynomial-fit", specs, [](const FamilySpec& spec, Outcome& o) {
    const int vertices = make_family(spec).vertex_count();
    std::vector<Count> samples;
    for (int m = 3; m <= vertices + 4; ++m) samples.push_back(hom_closed(spec, m));
    const NewtonFit fit(3, samples);
    const std::string f = fam(spec.family);
    ++o.checks;
    if (fit.degree() > vertices && !o.mismatch)
      o.mismatch = Mismatch{f, spec.n, 0, -1, "degree <= " + std::to_string(vertices),
                            "degree " + std::to_string(fit.degree()), "fitted degree"};
    ++o.checks;
    if (!fit.monomial() && !o.mismatch)
      o.mismatch = Mismatch{f, spec.n, 0, -1, "integer coefficients", "fractional", "monomial expansion"};
    const int probe = vertices + 5;
    o.expect(hom_closed(spec, probe), fit(probe), f, spec.n, probe, -1, "fitted prediction");
  });
}

CheckResult check_quasi_complete_forms(int m_max) {
  std::vector<std::pair<int, int>> items;
  for (int n = 3; n + 2 <= m_max; ++n)
    for (int m = n + 2; m <= m_max; ++m) items.emplace_back(n, m);
  return run_items("quasi-complete-printed-forms", items, [](const auto& item, Outcome& o) {
    const auto [n, m] = item;
    const auto factorial_form = quasi_complete_factorial_terms(n, m);
    const auto binomial_form = quasi_complete_printed_binomial_terms(n, m);
    for (int t = 0; t < 5; ++t)
      o.expect(factorial_form[t], binomial_form[t], "quasi-complete", n, m, -1, "term " + std::to_string(t + 1));
  });
}

CheckResult check_profile_determinism(int m, int n_max) {
  std::vector<int> once{0};
  return run_items("profile-determinism", once, [m, n_max](int, Outcome& o) {
    const Family families[] = {Family::path, Family::cycle, Family::wheel, Family::broken_wheel};
    const auto specs = family_sweep(families, n_max);
    const auto a = to_csv(partial_profile(m, specs));
    auto reversed = specs;
    std::reverse(reversed.begin(), reversed.end());
    const auto b = to_csv(partial_profile(m, reversed));
    ++o.checks;
    if (a != b && !o.mismatch) o.mismatch = Mismatch{"profile", n_max, m, -1, "identical csv", "differs", ""};
  });
}

std::vector<ErrataRow> errata_rows(int n_max, int m_max) {
  std::vector<Point> items;
  for (Family f : {Family::path, Family::cycle})
    for (int n = min_size(f); n <= n_max; ++n)
      for (int m = 3; m <= m_max; ++m) items.push_back({f, n, m});
  for (int n = 3; n <= n_max; ++n)
    for (int m = n + 2; m <= m_max; ++m) items.push_back({Family::quasi_complete, n, m});

  std::vector<std::vector<ErrataRow>> per_item(items.size());
  const auto count = static_cast<std::int64_t>(items.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto& p = items[i];
    const Graph source = make_family({p.family, p.n});
    auto& rows = per_item[i];
    if (p.family == Family::quasi_complete) {
      rows.push_back({fam(p.family), p.n, p.m, 0, Rational(printed_quasi_complete_hom(p.n, p.m)),
                      hom_quasi_complete(p.n, p.m, HomClass::all),
                      count_by_class(source, quasi_complete_graph(p.m), HomClass::all)});
      continue;
    }
    const auto hist = exceptional_histogram(source, p.m);
    for (int k = 1; k < static_cast<int>(hist.size()); ++k) {
      const Count normative =
          p.family == Family::path ? bad_term_path(p.n, p.m, k) : bad_term_cycle(p.n, p.m, k);
      rows.push_back({fam(p.family), p.n, p.m, k, as_printed_term(p.family, p.n, p.m, k), normative, hist[k]});
    }
  }
  std::vector<ErrataRow> out;
  for (auto& rows : per_item) out.insert(out.end(), rows.begin(), rows.end());
  return out;
}

std::string errata_csv(const std::vector<ErrataRow>& rows) {
  std::string out = "family,n,m,k,printed_value,normative_value,oracle_value\n";
  for (const auto& r : rows) {
    out += r.family + ',' + std::to_string(r.n) + ',' + std::to_string(r.m) + ',' + std::to_string(r.k) + ',' +
           to_decimal(r.printed) + ',' + to_decimal(r.normative) + ',' + to_decimal(r.oracle) + '\n';
  }
  return out;
}

CheckResult check_errata(const std::vector<ErrataRow>& rows) {
  return run_items("errata-normative-vs-oracle", rows, [](const ErrataRow& r, Outcome& o) {
    o.expect(r.oracle, r.normative, r.family, r.n, r.m, r.k);
  });
}

SummandDeltas summand_deltas(int n_max, int m_max) {
  SummandDeltas d;
  for (Family f : {Family::path, Family::cycle}) {
    auto& flags = f == Family::path ? d.path : d.cycle;
    for (int n = min_size(f); n <= n_max; ++n)
      for (int m = 3; m <= m_max; ++m)
        for (int k = 1; k <= n; ++k) {
          const auto b = summand_breakdown(f, n, m, k);
          if (b.special) continue;
          for (int s = 0; s < 4; ++s)
            if (b.printed[s] != Rational(b.normative[s])) flags[s] = true;
        }
  }
  for (int n = 3; n <= n_max; ++n)
    for (int m = n + 2; m <= m_max; ++m) {
      const auto printed = quasi_complete_printed_binomial_terms(n, m);
      const auto corrected = quasi_complete_corrected_terms(n, m);
      for (int t = 0; t < 5; ++t)
        if (printed[t] != corrected[t]) d.quasi_complete[t] = true;
    }
  return d;
}

std::string describe(const SummandDeltas& d) {
  const auto list = [](const auto& flags) {
    std::string s;
    for (std::size_t i = 0; i < flags.size(); ++i)
      if (flags[i]) s += (s.empty() ? "" : ",") + std::to_string(i + 1);
    return "[" + s + "]";
  };
  return "path summands " + list(d.path) + ", cycle summands " + list(d.cycle) + ", quasi-complete terms " +
         list(d.quasi_complete);
}

bool VerifyReport::ok() const { return first_failure() == nullptr; }

const CheckResult* VerifyReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.ok()) return &c;
  return nullptr;
}

VerifyReport run_verify(const VerifyConfig& config) {
  if (config.n_max < 2 || config.m_max < 3 || config.transfer_n_max < 2 || config.transfer_m_max < 3 ||
      config.poly_i_max < 0)
    throw std::invalid_argument("verify: need n_max >= 2, m_max >= 3, transfer bounds >= 2/3, poly bound >= 0");
  if (config.poly_i_max > kMaxLevelGraphDepth)
    throw std::invalid_argument("verify: level graphs are materialised up to i = " +
                                std::to_string(kMaxLevelGraphDepth));
  const Grid grid = Grid::uniform(config.n_max, config.m_max);
  VerifyReport report;
  report.checks.push_back(check_bruteforce_equivalence(grid));
  report.checks.push_back(check_term_histograms(grid));
  report.checks.push_back(check_histogram_identities(grid));
  report.checks.push_back(check_transfer_equivalence(config.transfer_n_max, config.transfer_m_max));
  report.checks.push_back(check_transfer_base_counts(config.transfer_n_max, config.transfer_m_max));
  report.checks.push_back(check_k3_vanishing());
  report.checks.push_back(check_special_constants(10, 8));
  report.checks.push_back(check_run_length(std::min(config.transfer_n_max, 18), config.m_max));
  report.checks.push_back(check_gap_goldens());
  report.checks.push_back(check_gap_recurrence(config.poly_i_max));
  report.checks.push_back(check_polynomial_fit(std::max(config.n_max, 3)));
  report.checks.push_back(check_quasi_complete_forms(12));
  report.checks.push_back(check_profile_determinism(5, 10));
  report.errata = errata_rows(config.n_max, config.m_max);
  report.checks.push_back(check_errata(report.errata));
  report.deltas = summand_deltas(config.n_max, config.m_max);
  return report;
}

}  // namespace qchom
