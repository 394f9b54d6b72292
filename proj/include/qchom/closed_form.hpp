#pragma once

#include <vector>

#include "qchom/bad_terms.hpp"
#include "qchom/count.hpp"
#include "qchom/graph.hpp"

namespace qchom {

// All functions below count homomorphisms into the quasi-complete graph
// K_m minus {0,1}, require m >= 3, and throw std::invalid_argument on
// parameters outside the family's range.

// K_n: zero once n >= m; 2 (m-1)! at n = m-1; otherwise
// 2 n! C(m-2, n-1) + C(m-2, n) n!. Every homomorphism is injective and none
// is surjective.
Count hom_complete(int n, int m, HomClass cls);

// K_n minus {0,1}, split by how many of the two exceptional target vertices
// the image uses (both / exactly one / neither).
Count hom_quasi_complete(int n, int m, HomClass cls);

// Bad terms: homomorphisms into K_m that send exactly k source edges onto the
// exceptional pair. k >= 1 is required; k beyond the family's support gives 0.
Count bad_term_path(int n, int m, int k);
Count bad_term_cycle(int n, int m, int k);
Count bad_term_broken_wheel(int n, int m, int k);
Count bad_term_wheel(int n, int m, int k);

// Hub-free / hub-on-exceptional split of the (broken) wheel terms.
struct HubSplit {
  Count hub_free;
  Count hub_exceptional;
  Count total() const { return hub_free + hub_exceptional; }
};
HubSplit broken_wheel_split(int n, int m, int k);
HubSplit wheel_split(int n, int m, int k);

Count hom_path(int n, int m);
Count hom_cycle(int n, int m);
Count hom_broken_wheel(int n, int m);
Count hom_wheel(int n, int m);

// hom(G, K_m) for the four structured families (their chromatic polynomials).
Count base_count(Family family, int n, int m);

// Dense over k = 0..|E(G)|, entry 0 unused, for path, cycle, broken_wheel
// and wheel.
std::vector<Count> bad_terms(Family family, int n, int m, Evaluator ev = Evaluator::automatic);

// Whether a closed form exists for the class: complete and quasi_complete
// cover all four, the other families only HomClass::all.
bool class_covered(Family family, HomClass cls);

// Dispatch by family. Throws std::invalid_argument for uncovered classes.
Count hom_closed(const FamilySpec& spec, int m, HomClass cls = HomClass::all);

}  // namespace qchom
