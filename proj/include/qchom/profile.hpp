#pragma once

#include <span>
#include <string>
#include <vector>

#include "qchom/count.hpp"
#include "qchom/graph.hpp"

#include "json.hpp"

namespace qchom {

struct ProfileRow {
  FamilySpec spec;
  HomClass cls;
  Count count;
};

// Homomorphism counts into K_m^1 for a list of sources. Rows are sorted by
// family name, then n, then class (hom, inj, sur, bij).
struct ProfileTable {
  int m = 0;
  std::vector<ProfileRow> rows;
};

// Closed-form counts; every class with a closed form is listed. Throws
// std::invalid_argument naming the offending family and size if one is invalid.
ProfileTable partial_profile(int m, std::span<const FamilySpec> specs);

// Every n from the family minimum up to n_max, for each family.
std::vector<FamilySpec> family_sweep(std::span<const Family> families, int n_max);

// Header "family,n,m,class,method,count", LF line endings.
std::string to_csv(const ProfileTable& table, std::string_view method = "closed");
nlohmann::ordered_json to_json(const ProfileTable& table, std::string_view method = "closed");

}  // namespace qchom
