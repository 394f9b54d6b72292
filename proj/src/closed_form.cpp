#include "qchom/closed_form.hpp"

#include <stdexcept>

namespace qchom {

namespace {

void check(const FamilySpec& spec, int m) {
  validate(spec);
  if (m < 3) throw std::invalid_argument("target K_m^1 requires m >= 3, got m = " + std::to_string(m));
}

void check_k(int k) {
  if (k < 1) throw std::invalid_argument("bad term index k must be >= 1");
}

Count sign(int n) { return n % 2 == 0 ? 1 : -1; }

const Count& term_or_zero(const std::vector<Count>& terms, int k) {
  static const Count zero = 0;
  return k < static_cast<int>(terms.size()) ? terms[k] : zero;
}

Count sum_from_one(const std::vector<Count>& terms) {
  Count s = 0;
  for (std::size_t k = 1; k < terms.size(); ++k) s += terms[k];
  return s;
}

// Hub-free plus hub-on-exceptional terms, dense k = 0..n.
std::vector<Count> hub_terms(Geometry rim, int n, int m, Evaluator ev) {
  auto free = cluster_terms(rim, n, m - 1, ev);
  auto spokes = spoke_terms(rim, n, m, ev);
  std::vector<Count> out(n + 1, 0);
  for (int k = 1; k <= n; ++k) out[k] = Count(m - 2) * term_or_zero(free, k) + spokes[k];
  return out;
}

HubSplit hub_split(Geometry rim, int n, int m, int k) {
  check_k(k);
  if (k > n) return {0, 0};
  return {Count(m - 2) * term_or_zero(cluster_terms(rim, n, m - 1), k), spoke_terms(rim, n, m)[k]};
}

}  // namespace

Count hom_complete(int n, int m, HomClass cls) {
  check({Family::complete, n}, m);
  if (cls == HomClass::surjective || cls == HomClass::bijective) return 0;
  if (n >= m) return 0;
  if (n == m - 1) return 2 * factorial(m - 1);
  return 2 * factorial(n) * binomial(m - 2, n - 1) + binomial(m - 2, n) * factorial(n);
}

Count hom_quasi_complete(int n, int m, HomClass cls) {
  check({Family::quasi_complete, n}, m);
  if (n > m) return 0;
  if (cls == HomClass::surjective || cls == HomClass::bijective)
    return n == m ? 2 * factorial(n - 2) : Count(0);

  // Source vertices 0 and 1 are the non-adjacent pair.
  const Count both = 2 * binomial(m - 2, n - 2) * factorial(n - 2);
  const Count one_shared = 2 * (n - 1) * binomial(m - 2, n - 2) * factorial(n - 2);
  const Count one_pair = 2 * binomial(m - 2, n - 1) * factorial(n - 1);
  const Count neither_injective = binomial(m - 2, n) * factorial(n);
  const Count neither_merged = binomial(m - 2, n - 1) * factorial(n - 1);

  if (cls == HomClass::injective) return both + one_shared * (m - n) + one_pair + neither_injective;
  return both + one_shared * (1 + m - n) + one_pair + neither_injective + neither_merged;
}

Count bad_term_path(int n, int m, int k) {
  check({Family::path, n}, m);
  check_k(k);
  return term_or_zero(cluster_terms(Geometry::linear, n, m), k);
}

Count bad_term_cycle(int n, int m, int k) {
  check({Family::cycle, n}, m);
  check_k(k);
  return term_or_zero(cluster_terms(Geometry::cyclic, n, m), k);
}

HubSplit broken_wheel_split(int n, int m, int k) {
  check({Family::broken_wheel, n}, m);
  return hub_split(Geometry::linear, n, m, k);
}

HubSplit wheel_split(int n, int m, int k) {
  check({Family::wheel, n}, m);
  return hub_split(Geometry::cyclic, n, m, k);
}

Count bad_term_broken_wheel(int n, int m, int k) { return broken_wheel_split(n, m, k).total(); }
Count bad_term_wheel(int n, int m, int k) { return wheel_split(n, m, k).total(); }

Count base_count(Family family, int n, int m) {
  check({family, n}, m);
  switch (family) {
    case Family::path: return m * power(m - 1, n - 1);
    case Family::cycle: return (m - 1) * (power(m - 1, n - 1) + sign(n));
    case Family::broken_wheel: return Count(m) * (m - 1) * power(m - 2, n - 1);
    case Family::wheel: return Count(m) * (m - 2) * (power(m - 2, n - 1) + sign(n));
    default: break;
  }
  throw std::invalid_argument("base_count: no chromatic decomposition for " + describe({family, n}));
}

std::vector<Count> bad_terms(Family family, int n, int m, Evaluator ev) {
  check({family, n}, m);
  const std::size_t edges = make_family({family, n}).edge_count();
  std::vector<Count> terms;
  switch (family) {
    case Family::path: terms = cluster_terms(Geometry::linear, n, m, ev); break;
    case Family::cycle: terms = cluster_terms(Geometry::cyclic, n, m, ev); break;
    case Family::broken_wheel: terms = hub_terms(Geometry::linear, n, m, ev); break;
    case Family::wheel: terms = hub_terms(Geometry::cyclic, n, m, ev); break;
    default: throw std::invalid_argument("bad_terms: not defined for " + describe({family, n}));
  }
  terms.resize(edges + 1, 0);
  return terms;
}

Count hom_path(int n, int m) { return base_count(Family::path, n, m) - sum_from_one(bad_terms(Family::path, n, m)); }
Count hom_cycle(int n, int m) { return base_count(Family::cycle, n, m) - sum_from_one(bad_terms(Family::cycle, n, m)); }
Count hom_broken_wheel(int n, int m) {
  return base_count(Family::broken_wheel, n, m) - sum_from_one(bad_terms(Family::broken_wheel, n, m));
}
Count hom_wheel(int n, int m) { return base_count(Family::wheel, n, m) - sum_from_one(bad_terms(Family::wheel, n, m)); }

bool class_covered(Family family, HomClass cls) {
  return cls == HomClass::all || family == Family::complete || family == Family::quasi_complete;
}

Count hom_closed(const FamilySpec& spec, int m, HomClass cls) {
  check(spec, m);
  if (!class_covered(spec.family, cls))
    throw std::invalid_argument("class " + std::string(class_name(cls)) + " has no closed form for " +
                                std::string(family_name(spec.family)) + "; only hom is covered");
  switch (spec.family) {
    case Family::complete: return hom_complete(spec.n, m, cls);
    case Family::quasi_complete: return hom_quasi_complete(spec.n, m, cls);
    case Family::path: return hom_path(spec.n, m);
    case Family::cycle: return hom_cycle(spec.n, m);
    case Family::broken_wheel: return hom_broken_wheel(spec.n, m);
    case Family::wheel: return hom_wheel(spec.n, m);
  }
  throw std::logic_error("unknown family");
}

}  // namespace qchom
