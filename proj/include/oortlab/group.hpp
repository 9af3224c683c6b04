#pragma once

#include <cstdint>
#include <iterator>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "oortlab/permutation.hpp"

namespace oortlab {

/// Upper bound on exhaustive element stores. Defaults to 250000 and can be
/// overridden with the OORTLAB_ENUM_CAP environment variable.
std::uint64_t enum_cap();

/// Process-wide override of enum_cap(); 0 restores the environment/default value.
void set_enum_cap(std::uint64_t cap);

/// Base and strong generating set built by deterministic Schreier-Sims.
/// Each new base point is the lowest point moved by the permutation that needs it.
class StabilizerChain {
 public:
  struct Level {
    Point base = 0;
    std::vector<Permutation> generators;  // strong generators fixing all earlier base points
    std::vector<Point> orbit;             // orbit of `base` under `generators`
    std::vector<std::int32_t> slot;       // point -> position in orbit, or -1
    std::vector<Permutation> reps;        // reps[i](base) == orbit[i]
    std::vector<Permutation> inverse_reps;
  };

  StabilizerChain(std::size_t degree, std::span<const Permutation> generators);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Level>& levels() const noexcept { return levels_; }
  std::vector<Point> base() const;

  /// Product of the transversal sizes. Throws TooLarge on 64-bit overflow.
  std::uint64_t order() const;

  bool contains(const Permutation& g) const;

  /// Sifts g starting at `from_level`; returns the residue and the level where sifting stopped.
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from_level = 0) const;

 private:
  void rebuild_orbit(Level& level) const;

  std::size_t degree_;
  std::vector<Level> levels_;
};

/// Lazily produced sequence covering a group exactly once (transversal products).
class ElementStream {
 public:
  explicit ElementStream(std::shared_ptr<const StabilizerChain> chain);

  /// Next element, or nullopt once every element has been produced.
  std::optional<Permutation> next();

  class iterator {
   public:
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    explicit iterator(ElementStream* s) : stream_(s) { ++*this; }
    const Permutation& operator*() const { return *current_; }
    iterator& operator++() {
      current_ = stream_->next();
      return *this;
    }
    void operator++(int) { ++*this; }
    bool operator==(std::default_sentinel_t) const { return !current_.has_value(); }

   private:
    ElementStream* stream_ = nullptr;
    std::optional<Permutation> current_;
  };

  iterator begin() { return iterator(this); }
  std::default_sentinel_t end() { return {}; }

 private:
  std::shared_ptr<const StabilizerChain> chain_;
  std::vector<std::size_t> counter_;
  bool done_ = false;
};

/// Exhaustive, lexicographically sorted element store with O(1) lookup.
/// Index 0 is always the identity.
class ElementTable {
 public:
  explicit ElementTable(std::vector<Permutation> elements);

  std::size_t size() const noexcept { return elements_.size(); }
  const Permutation& at(std::uint32_t i) const { return elements_[i]; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }

  std::optional<std::uint32_t> find(const Permutation& g) const;
  /// Throws NonMember when g is absent.
  std::uint32_t index_of(const Permutation& g) const;

  std::uint64_t order_of(std::uint32_t i) const { return orders_[i]; }
  std::uint32_t inverse_of(std::uint32_t i) const { return inverses_[i]; }
  std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const;

 private:
  std::vector<Permutation> elements_;
  std::vector<std::uint32_t> slots_;  // open addressing, UINT32_MAX = empty
  std::uint64_t mask_ = 0;
  std::vector<std::uint64_t> orders_;
  std::vector<std::uint32_t> inverses_;
};

/// A permutation group given by generators of a common degree.
///
/// The stabilizer chain and the element store are built on first use and
/// never change afterwards; copies share them, and concurrent reads are safe.
class Group {
 public:
  /// Throws DegreeMismatch when a generator has a different degree.
  Group(std::size_t degree, std::vector<Permutation> generators);

  static Group trivial(std::size_t degree);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  Permutation identity() const { return Permutation::identity(degree_); }

  const StabilizerChain& chain() const;
  std::uint64_t order() const { return chain().order(); }
  bool is_trivial() const { return order() == 1; }

  /// Throws DegreeMismatch.
  bool contains(const Permutation& g) const;

  /// Throws CapExceeded when order() > enum_cap().
  ElementStream elements() const;
  const ElementTable& table() const;

 private:
  struct Lazy;
  Group(std::size_t degree, std::vector<Permutation> generators, std::shared_ptr<Lazy> lazy);
  std::shared_ptr<const StabilizerChain> shared_chain() const;

  friend Group subgroup_from_indices(const Group& ambient, std::vector<std::uint32_t> indices);

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<Lazy> lazy_;
};

Group group_from_generators(std::size_t degree, std::vector<Permutation> generators);

inline std::uint64_t order(const Group& g) { return g.order(); }
inline bool contains(const Group& g, const Permutation& x) { return g.contains(x); }
inline ElementStream elements(const Group& g) { return g.elements(); }

/// Subgroup of G generated by `gens`. Throws NonMember if some generator is outside G.
Group subgroup_closure(const Group& G, const std::vector<Permutation>& gens);

/// Subgroup whose element set is {G.table().at(i) : i in indices}. The indices must
/// already form a subgroup; generators are chosen greedily and the element store is reused.
Group subgroup_from_indices(const Group& G, std::vector<std::uint32_t> indices);

/// Sorted orbit of `point`. Throws RangeError.
std::vector<Point> orbit(const Group& G, Point point);

/// H <= G, checked on generators.
bool is_subgroup(const Group& H, const Group& G);
bool same_subgroup(const Group& a, const Group& b);

/// Sorted G.table() indices of the elements of H (H <= G). Throws CapExceeded.
std::vector<std::uint32_t> element_indices(const Group& G, const Group& H);

}  // namespace oortlab
