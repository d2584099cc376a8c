#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "descentlab/permutation.hpp"
#include "descentlab/poly.hpp"

namespace descentlab {

enum class ClassKind { all, av231, stack2, explicit_set, orbit };

struct ClassSelector {
  ClassKind kind = ClassKind::all;
  std::vector<Permutation> members;  // explicit_set
  Permutation seed;                  // orbit: the MFS orbit of seed

  static ClassSelector all() { return {}; }
  static ClassSelector av231() { return {ClassKind::av231, {}, {}}; }
  static ClassSelector stack2() { return {ClassKind::stack2, {}, {}}; }
  static ClassSelector of(std::vector<Permutation> members) { return {ClassKind::explicit_set, std::move(members), {}}; }
  static ClassSelector orbit(Permutation seed) { return {ClassKind::orbit, {}, std::move(seed)}; }
  static ClassSelector from_name(std::string_view name);  // all, av231, stack2

  std::string describe() const;
};

// Members of the class inside S_n, sorted.
std::vector<Permutation> class_members(int n, const ClassSelector& sel);

std::vector<std::string> family_names();

// Sum over the class of a monomial in the family's statistics. Closed-form
// families (narayana, js_2ss, closed_231) and the signed and Catalan families
// accept only the default selector.
Poly generate_polynomial(std::string_view family, int n, const ClassSelector& sel = {});

// Weighted sum over an arbitrary list, used for the w-refined identities:
// adds w^st to each term of the family monomial.
Poly generate_polynomial_refined(std::string_view family, const std::vector<Permutation>& perms,
                                 std::string_view st);

int statistic_value(const Permutation& p, std::string_view st);

Poly narayana(int n);
Poly js_2ss(int n);
Poly closed_231(int n);

}  // namespace descentlab
