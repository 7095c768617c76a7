#include "tstar/graded.hpp"

#include <algorithm>
#include <set>

namespace tstar {

const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

GradedBasis::GradedBasis(std::vector<std::string> names, std::vector<Parity> parities)
    : names_(std::move(names)), parities_(std::move(parities)) {
  if (names_.size() != parities_.size())
    throw std::invalid_argument("GradedBasis: names and parities differ in length");
  std::set<std::string> seen;
  for (const auto& n : names_)
    if (!seen.insert(n).second) throw std::invalid_argument("GradedBasis: duplicate name '" + n + "'");
}

GradedBasis GradedBasis::anonymous(const std::vector<Parity>& parities) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < parities.size(); ++i) names.push_back("e" + std::to_string(i + 1));
  return GradedBasis(std::move(names), parities);
}

std::optional<int> GradedBasis::index_of(const std::string& name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<int>(it - names_.begin());
}

int GradedBasis::even_dim() const {
  return static_cast<int>(std::count(parities_.begin(), parities_.end(), Parity::Even));
}

std::vector<int> GradedBasis::indices(Parity p) const {
  std::vector<int> out;
  for (int i = 0; i < dim(); ++i)
    if (parity(i) == p) out.push_back(i);
  return out;
}

std::optional<Parity> homogeneous_parity(const GradedBasis& basis, const VectorQ& v) {
  bool has_even = false;
  bool has_odd = false;
  for (int i = 0; i < basis.dim(); ++i) {
    if (is_zero(v(i))) continue;
    (basis.parity(i) == Parity::Even ? has_even : has_odd) = true;
  }
  if (has_even && has_odd) return std::nullopt;
  return has_odd ? Parity::Odd : Parity::Even;
}

VectorQ parity_component(const GradedBasis& basis, const VectorQ& v, Parity p) {
  VectorQ out = VectorQ::Zero(v.size());
  for (int i = 0; i < basis.dim(); ++i)
    if (basis.parity(i) == p) out(i) = v(i);
  return out;
}

VectorQ unit_vector(int n, int i) {
  VectorQ v = VectorQ::Zero(n);
  v(i) = 1;
  return v;
}

GradedBasis concat(const GradedBasis& a, const GradedBasis& b) {
  std::vector<std::string> names = a.names();
  std::vector<Parity> parities = a.parities();
  for (int i = 0; i < b.dim(); ++i) {
    std::string name = b.name(i);
    while (std::find(names.begin(), names.end(), name) != names.end()) name += "'";
    names.push_back(std::move(name));
    parities.push_back(b.parity(i));
  }
  return GradedBasis(std::move(names), std::move(parities));
}

}  // namespace tstar
