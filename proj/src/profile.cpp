#include "qchom/profile.hpp"

#include <algorithm>
#include <stdexcept>

#include "qchom/closed_form.hpp"

namespace qchom {

namespace {

int class_rank(HomClass c) { return static_cast<int>(c); }

bool row_less(const ProfileRow& a, const ProfileRow& b) {
  const auto fa = family_name(a.spec.family);
  const auto fb = family_name(b.spec.family);
  if (fa != fb) return fa < fb;
  if (a.spec.n != b.spec.n) return a.spec.n < b.spec.n;
  return class_rank(a.cls) < class_rank(b.cls);
}

}  // namespace

ProfileTable partial_profile(int m, std::span<const FamilySpec> specs) {
  if (m < 3) throw std::invalid_argument("profile requires m >= 3");
  for (const auto& spec : specs) {
    try {
      validate(spec);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("invalid spec " + describe(spec) + ": " + e.what());
    }
  }

  std::vector<FamilySpec> unique(specs.begin(), specs.end());
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());

  std::vector<std::pair<FamilySpec, HomClass>> cells;
  for (const auto& spec : unique)
    for (HomClass c : kAllClasses)
      if (class_covered(spec.family, c)) cells.emplace_back(spec, c);

  ProfileTable table;
  table.m = m;
  table.rows.resize(cells.size());
  const auto count = static_cast<std::int64_t>(cells.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto& [spec, cls] = cells[i];
    table.rows[i] = ProfileRow{spec, cls, hom_closed(spec, m, cls)};
  }
  std::sort(table.rows.begin(), table.rows.end(), row_less);
  return table;
}

std::vector<FamilySpec> family_sweep(std::span<const Family> families, int n_max) {
  std::vector<FamilySpec> specs;
  for (Family f : families)
    for (int n = min_size(f); n <= n_max; ++n) specs.push_back({f, n});
  return specs;
}

std::string to_csv(const ProfileTable& table, std::string_view method) {
  std::string out = "family,n,m,class,method,count\n";
  for (const auto& row : table.rows) {
    out += family_name(row.spec.family);
    out += ',' + std::to_string(row.spec.n) + ',' + std::to_string(table.m) + ',';
    out += class_name(row.cls);
    out += ',';
    out += method;
    out += ',' + to_decimal(row.count) + '\n';
  }
  return out;
}

nlohmann::ordered_json to_json(const ProfileTable& table, std::string_view method) {
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json r;
    r["family"] = family_name(row.spec.family);
    r["n"] = row.spec.n;
    r["m"] = table.m;
    r["class"] = class_name(row.cls);
    r["method"] = method;
    r["count"] = to_decimal(row.count);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace qchom
