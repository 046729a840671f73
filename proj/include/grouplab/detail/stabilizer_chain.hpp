#ifndef GROUPLAB_DETAIL_STABILIZER_CHAIN_HPP_
#define GROUPLAB_DETAIL_STABILIZER_CHAIN_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "grouplab/permutation.hpp"

namespace grouplab::detail {

// Base and strong generating set built with the deterministic Schreier-Sims
// algorithm. Transversals are stored explicitly; degrees here are small.
class StabilizerChain {
 public:
  StabilizerChain(std::size_t degree, const std::vector<Permutation>& generators)
      : degree_(degree) {
    std::vector<Permutation> strong;
    for (const auto& g : generators) {
      if (!g.is_identity()) strong.push_back(g);
    }
    for (const auto& g : strong) {
      bool moves_base = false;
      for (const auto& lv : levels_) moves_base = moves_base || g[lv.base_point] != lv.base_point;
      if (!moves_base) add_level(first_moved(g));
    }
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      for (const auto& g : strong) {
        if (fixes_prefix(g, i)) levels_[i].generators.push_back(g);
      }
      rebuild_orbit(i);
    }
    schreier_sims();
  }

  // Product of the basic orbit lengths, saturating at uint64 max.
  std::uint64_t order() const noexcept {
    std::uint64_t n = 1;
    for (const auto& lv : levels_) {
      const std::uint64_t len = lv.orbit.size();
      if (n > std::numeric_limits<std::uint64_t>::max() / len) {
        return std::numeric_limits<std::uint64_t>::max();
      }
      n *= len;
    }
    return n;
  }

  std::vector<Point> base() const {
    std::vector<Point> out;
    for (const auto& lv : levels_) out.push_back(lv.base_point);
    return out;
  }

  bool contains(const Permutation& g) const {
    if (g.degree() != degree_) return false;
    auto [residue, level] = strip(g, 0);
    return level == levels_.size() && residue.is_identity();
  }

 private:
  struct Level {
    Point base_point = 0;
    std::vector<Permutation> generators;
    std::vector<Point> orbit;
    std::vector<int> slot;  // point -> index into transversal, -1 outside the orbit
    std::vector<Permutation> transversal;
    std::vector<Permutation> transversal_inv;
  };

  static Point first_moved(const Permutation& g) {
    for (std::size_t i = 0; i < g.degree(); ++i) {
      if (g[i] != i) return static_cast<Point>(i);
    }
    return 0;
  }

  bool fixes_prefix(const Permutation& g, std::size_t len) const {
    for (std::size_t j = 0; j < len; ++j) {
      if (g[levels_[j].base_point] != levels_[j].base_point) return false;
    }
    return true;
  }

  void add_level(Point b) {
    Level lv;
    lv.base_point = b;
    levels_.push_back(std::move(lv));
  }

  void rebuild_orbit(std::size_t i) {
    Level& lv = levels_[i];
    lv.orbit.assign(1, lv.base_point);
    lv.slot.assign(degree_, -1);
    lv.transversal.assign(1, Permutation::identity(degree_));
    lv.transversal_inv.assign(1, Permutation::identity(degree_));
    lv.slot[lv.base_point] = 0;
    for (std::size_t q = 0; q < lv.orbit.size(); ++q) {
      const Point beta = lv.orbit[q];
      for (const auto& s : lv.generators) {
        const Point gamma = s[beta];
        if (lv.slot[gamma] >= 0) continue;
        lv.slot[gamma] = static_cast<int>(lv.transversal.size());
        Permutation u = compose(lv.transversal[static_cast<std::size_t>(lv.slot[beta])], s);
        lv.transversal_inv.push_back(inverse(u));
        lv.transversal.push_back(std::move(u));
        lv.orbit.push_back(gamma);
      }
    }
  }

  // Sifts g through levels [from, end); returns the residue and the level
  // where sifting stopped (levels_.size() when it went all the way).
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from) const {
    for (std::size_t j = from; j < levels_.size(); ++j) {
      const Level& lv = levels_[j];
      const int t = lv.slot[g[lv.base_point]];
      if (t < 0) return {std::move(g), j};
      g = compose(g, lv.transversal_inv[static_cast<std::size_t>(t)]);
    }
    return {std::move(g), levels_.size()};
  }

  void schreier_sims() {
    auto i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
    while (i >= 0) {
      const auto li = static_cast<std::size_t>(i);
      bool extended = false;
      for (std::size_t q = 0; q < levels_[li].orbit.size() && !extended; ++q) {
        for (std::size_t si = 0; si < levels_[li].generators.size() && !extended; ++si) {
          const Level& lv = levels_[li];
          const Point beta = lv.orbit[q];
          const Permutation& s = lv.generators[si];
          const Point gamma = s[beta];
          Permutation h = compose(compose(lv.transversal[q], s),
                                  lv.transversal_inv[static_cast<std::size_t>(lv.slot[gamma])]);
          if (h.is_identity()) continue;
          auto [residue, j] = strip(std::move(h), li + 1);
          if (j == levels_.size() && residue.is_identity()) continue;
          if (j == levels_.size()) add_level(first_moved(residue));
          for (std::size_t l = li + 1; l <= j; ++l) {
            levels_[l].generators.push_back(residue);
            rebuild_orbit(l);
          }
          i = static_cast<std::ptrdiff_t>(j);
          extended = true;
        }
      }
      if (!extended) --i;
    }
  }

  std::size_t degree_;
  std::vector<Level> levels_;
};

}  // namespace grouplab::detail

#endif  // GROUPLAB_DETAIL_STABILIZER_CHAIN_HPP_
