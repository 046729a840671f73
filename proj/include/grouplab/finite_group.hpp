#ifndef GROUPLAB_FINITE_GROUP_HPP_
#define GROUPLAB_FINITE_GROUP_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "grouplab/detail/stabilizer_chain.hpp"
#include "grouplab/element_set.hpp"
#include "grouplab/error.hpp"
#include "grouplab/permutation.hpp"

namespace grouplab {

inline constexpr std::size_t kDefaultOrderCap = 2000;
inline constexpr std::size_t kDefaultLatticeBudget = 100000;

class SubgroupLattice;

namespace detail {

// Open-addressing index from "images of the base points" to element index.
// Within one group an element is determined by its base images.
class BaseImageIndex {
 public:
  BaseImageIndex() = default;
  BaseImageIndex(std::vector<Point> keys, std::size_t width, std::size_t count)
      : keys_(std::move(keys)), width_(width) {
    std::size_t cap = 4;
    while (cap < 2 * count + 2) cap <<= 1U;
    slots_.assign(cap, kEmpty);
    for (std::size_t e = 0; e < count; ++e) {
      std::size_t h = hash(&keys_[e * width_]) & (cap - 1);
      while (slots_[h] != kEmpty) h = (h + 1) & (cap - 1);
      slots_[h] = static_cast<Element>(e);
    }
  }

  std::optional<Element> find(const Point* key) const {
    if (slots_.empty()) return std::nullopt;
    const std::size_t mask = slots_.size() - 1;
    std::size_t h = hash(key) & mask;
    while (slots_[h] != kEmpty) {
      if (std::equal(key, key + width_, &keys_[slots_[h] * width_])) return slots_[h];
      h = (h + 1) & mask;
    }
    return std::nullopt;
  }

  const Point* key(Element e) const { return keys_.data() + static_cast<std::size_t>(e) * width_; }
  std::size_t width() const noexcept { return width_; }

 private:
  static constexpr Element kEmpty = ~Element{0};

  std::size_t hash(const Point* key) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (std::size_t t = 0; t < width_; ++t) {
      h ^= key[t] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

  std::vector<Point> keys_;
  std::size_t width_ = 0;
  std::vector<Element> slots_;
};

struct GroupData {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;  // sorted lexicographically by image table
  std::vector<Point> base;
  std::uint64_t chain_order = 0;
  BaseImageIndex index;
  std::vector<Element> mul;  // mul[a * n + b] = a then b
  std::vector<Element> inv;
  std::vector<std::uint32_t> element_order;
  std::vector<Element> generator_index;

  mutable std::mutex lattice_mutex;
  mutable std::shared_ptr<const SubgroupLattice> lattice;
};

}  // namespace detail

// A permutation group with its complete element table. Immutable after
// construction; copies share the same underlying data and lattice cache.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  // Enumerates <generators>. Throws CapExceeded once the closure grows past
  // order_cap.
  static FiniteGroup generate(std::size_t degree, const std::vector<Permutation>& generators,
                              std::size_t order_cap = kDefaultOrderCap) {
    if (degree == 0) throw InvalidArgument("group degree must be positive");
    for (const auto& g : generators) {
      if (g.degree() != degree) {
        throw InvalidArgument("generator degree " + std::to_string(g.degree()) +
                              " does not match group degree " + std::to_string(degree));
      }
    }
    auto data = std::make_shared<detail::GroupData>();
    data->degree = degree;
    data->generators = generators;

    // Breadth-first closure under right multiplication by the generators.
    std::unordered_set<Permutation> seen;
    std::vector<Permutation> elements{Permutation::identity(degree)};
    seen.insert(elements.front());
    for (std::size_t q = 0; q < elements.size(); ++q) {
      for (const auto& s : generators) {
        Permutation next = compose(elements[q], s);
        if (seen.insert(next).second) {
          elements.push_back(std::move(next));
          if (elements.size() > order_cap) throw CapExceeded(order_cap, elements.size());
        }
      }
    }
    std::sort(elements.begin(), elements.end());

    detail::StabilizerChain chain(degree, generators);
    data->chain_order = chain.order();
    if (data->chain_order != elements.size()) {
      throw Error("internal: stabilizer chain order " + std::to_string(data->chain_order) +
                  " disagrees with element count " + std::to_string(elements.size()));
    }
    data->base = chain.base();
    data->elements = std::move(elements);
    build_tables(*data);

    FiniteGroup g;
    g.data_ = std::move(data);
    return g;
  }

  static FiniteGroup generate(const std::vector<Permutation>& generators,
                              std::size_t order_cap = kDefaultOrderCap) {
    if (generators.empty()) throw InvalidArgument("degree required when there are no generators");
    return generate(generators.front().degree(), generators, order_cap);
  }

  // Same group, different display name; shares the element table and cache.
  FiniteGroup named(std::string name) const {
    FiniteGroup g = *this;
    g.name_ = std::move(name);
    return g;
  }

  bool valid() const noexcept { return data_ != nullptr; }
  const std::string& name() const noexcept { return name_; }
  std::size_t degree() const noexcept { return data_->degree; }
  std::size_t order() const noexcept { return data_->elements.size(); }
  std::uint64_t chain_order() const noexcept { return data_->chain_order; }
  const std::vector<Point>& base() const noexcept { return data_->base; }
  const std::vector<Permutation>& generators() const noexcept { return data_->generators; }
  const std::vector<Element>& generator_indices() const noexcept { return data_->generator_index; }
  const std::vector<Permutation>& elements() const noexcept { return data_->elements; }
  const Permutation& element(Element e) const { return data_->elements[e]; }

  static constexpr Element identity_index() noexcept { return 0; }

  Element mul(Element a, Element b) const noexcept { return data_->mul[a * order() + b]; }
  Element inv(Element a) const noexcept { return data_->inv[a]; }
  std::uint32_t element_order(Element a) const noexcept { return data_->element_order[a]; }
  // g^-1 h g
  Element conjugate(Element h, Element g) const noexcept { return mul(mul(inv(g), h), g); }
  Element commutator(Element g, Element h) const noexcept {
    return mul(mul(inv(g), inv(h)), mul(g, h));
  }
  Element power(Element a, std::uint64_t e) const noexcept {
    Element r = identity_index();
    for (std::uint64_t i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }

  std::optional<Element> index_of(const Permutation& p) const {
    if (p.degree() != degree()) return std::nullopt;
    const auto& base = data_->base;
    std::vector<Point> key(base.size());
    for (std::size_t t = 0; t < base.size(); ++t) key[t] = p[base[t]];
    auto e = data_->index.find(key.data());
    if (!e || data_->elements[*e] != p) return std::nullopt;
    return e;
  }

  bool contains(const Permutation& p) const { return index_of(p).has_value(); }

  ElementSet empty_set() const { return ElementSet(order()); }
  ElementSet all_elements() const { return ElementSet::full(order()); }

  // Identity of the underlying data; subgroups record it to check parentage.
  const void* id() const noexcept { return data_.get(); }
  const detail::GroupData& data() const noexcept { return *data_; }

 private:
  static void build_tables(detail::GroupData& d) {
    const std::size_t n = d.elements.size();
    const std::size_t w = d.base.size();
    std::vector<Point> keys(n * w);
    for (std::size_t e = 0; e < n; ++e) {
      for (std::size_t t = 0; t < w; ++t) keys[e * w + t] = d.elements[e][d.base[t]];
    }
    d.index = detail::BaseImageIndex(std::move(keys), w, n);

    d.mul.assign(n * n, 0);
    std::vector<Point> key(w);
    for (std::size_t a = 0; a < n; ++a) {
      const Point* ka = d.index.key(static_cast<Element>(a));
      for (std::size_t b = 0; b < n; ++b) {
        const Permutation& pb = d.elements[b];
        for (std::size_t t = 0; t < w; ++t) key[t] = pb[ka[t]];
        auto c = d.index.find(key.data());
        if (!c) throw Error("internal: product left the element table");
        d.mul[a * n + b] = *c;
      }
    }
    d.inv.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (d.mul[a * n + b] == 0) {
          d.inv[a] = static_cast<Element>(b);
          break;
        }
      }
    }
    d.element_order.assign(n, 1);
    for (std::size_t a = 0; a < n; ++a) {
      Element x = static_cast<Element>(a);
      std::uint32_t k = 1;
      while (x != 0) {
        x = d.mul[x * n + a];
        ++k;
      }
      d.element_order[a] = k;
    }
    for (const auto& g : d.generators) {
      std::vector<Point> gk(w);
      for (std::size_t t = 0; t < w; ++t) gk[t] = g[d.base[t]];
      d.generator_index.push_back(d.index.find(gk.data()).value());
    }
  }

  std::shared_ptr<const detail::GroupData> data_;
  std::string name_;
};

}  // namespace grouplab

#endif  // GROUPLAB_FINITE_GROUP_HPP_
