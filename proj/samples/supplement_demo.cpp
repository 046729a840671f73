// Walks the order-4 subgroups of Q8 and D8 and prints, for each one, a
// complement and an M-supplement when they exist.

#include <iostream>

#include "grouplab/grouplab.hpp"

using namespace grouplab;

namespace {

void show(const FiniteGroup& g) {
  std::cout << g.name() << " (order " << g.order() << ", " << all_subgroups(g).size() << " subgroups)\n";
  for (const SubgroupRef& h : subgroups_of_order(g, 4)) {
    std::cout << "  H = " << detail::describe(g, h);
    if (auto k = is_complemented(g, h)) std::cout << "  complement " << detail::describe(g, *k);
    if (auto k = is_m_supplemented(g, h)) {
      std::cout << "  M-supplement " << detail::describe(g, *k);
    } else {
      std::cout << "  not M-supplemented";
    }
    std::cout << "\n";
  }
  std::cout << "  in M(4): " << (holds_m_class(g, {2, 2}) ? "yes" : "no") << "\n";
}

}  // namespace

int main() {
  show(generalized_quaternion(8));
  show(dihedral(8));
  const FiniteGroup se = scalar_extension(3, 2, 2);
  const auto crit = classify_critical(se, {3, 2});
  std::cout << se.name() << ": " << to_string(crit.kind) << ", " << crit.detail << "\n";
}
