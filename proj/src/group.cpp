#include "oortlab/group.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <mutex>
#include <string>

#include "oortlab/errors.hpp"

namespace oortlab {

namespace {

std::atomic<std::uint64_t> g_cap_override{0};

std::uint64_t env_cap() {
  static const std::uint64_t cap = [] {
    const char* v = std::getenv("OORTLAB_ENUM_CAP");
    if (v != nullptr && *v != '\0') {
      char* end = nullptr;
      unsigned long long parsed = std::strtoull(v, &end, 10);
      if (end != nullptr && *end == '\0' && parsed > 0) return static_cast<std::uint64_t>(parsed);
    }
    return std::uint64_t{250000};
  }();
  return cap;
}

std::uint64_t hash_points(std::span<const Point> pts) {
  std::uint64_t h = 1469598103934665603ULL;
  for (Point x : pts) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h ^ (h >> 29);
}

}  // namespace

std::uint64_t enum_cap() {
  std::uint64_t o = g_cap_override.load(std::memory_order_relaxed);
  return o != 0 ? o : env_cap();
}

void set_enum_cap(std::uint64_t cap) { g_cap_override.store(cap, std::memory_order_relaxed); }

// ---------------------------------------------------------------------------
// StabilizerChain

StabilizerChain::StabilizerChain(std::size_t degree, std::span<const Permutation> generators)
    : degree_(degree) {
  std::vector<Permutation> gens;
  for (const auto& g : generators) {
    if (g.degree() != degree) throw DegreeMismatch("generator degree differs from group degree");
    if (!g.is_identity()) gens.push_back(g);
  }
  if (gens.empty()) return;

  auto new_level = [&](Point base) {
    Level lv;
    lv.base = base;
    lv.slot.assign(degree_, -1);
    levels_.push_back(std::move(lv));
  };

  // Initial base: every generator must move some base point.
  for (const auto& g : gens) {
    std::size_t j = 0;
    while (j < levels_.size() && g(levels_[j].base) == levels_[j].base) ++j;
    if (j == levels_.size()) new_level(static_cast<Point>(g.first_moved_point()));
    for (std::size_t l = 0; l <= j; ++l) levels_[l].generators.push_back(g);
  }
  for (auto& lv : levels_) rebuild_orbit(lv);

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool restarted = false;
    Level& lv = levels_[static_cast<std::size_t>(i)];
    for (std::size_t bi = 0; bi < lv.orbit.size() && !restarted; ++bi) {
      for (std::size_t si = 0; si < lv.generators.size(); ++si) {
        const Permutation& s = lv.generators[si];
        Point gamma = s(lv.orbit[bi]);
        const Permutation& u_gamma_inv =
            lv.inverse_reps[static_cast<std::size_t>(lv.slot[gamma])];
        Permutation schreier = compose(compose(u_gamma_inv, s), lv.reps[bi]);
        if (schreier.is_identity()) continue;
        auto [h, j] = strip(std::move(schreier), static_cast<std::size_t>(i) + 1);
        if (h.is_identity()) continue;
        if (j == levels_.size()) new_level(static_cast<Point>(h.first_moved_point()));
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
          levels_[l].generators.push_back(h);
          rebuild_orbit(levels_[l]);
        }
        i = static_cast<std::ptrdiff_t>(j);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
}

void StabilizerChain::rebuild_orbit(Level& lv) const {
  std::fill(lv.slot.begin(), lv.slot.end(), -1);
  lv.orbit.clear();
  lv.reps.clear();
  lv.inverse_reps.clear();
  lv.orbit.push_back(lv.base);
  lv.slot[lv.base] = 0;
  lv.reps.push_back(Permutation::identity(degree_));
  lv.inverse_reps.push_back(Permutation::identity(degree_));
  for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
    Point beta = lv.orbit[k];
    for (const auto& s : lv.generators) {
      Point gamma = s(beta);
      if (lv.slot[gamma] >= 0) continue;
      lv.slot[gamma] = static_cast<std::int32_t>(lv.orbit.size());
      lv.orbit.push_back(gamma);
      Permutation rep = compose(s, lv.reps[k]);
      lv.inverse_reps.push_back(inverse(rep));
      lv.reps.push_back(std::move(rep));
    }
  }
}

std::pair<Permutation, std::size_t> StabilizerChain::strip(Permutation g,
                                                           std::size_t from_level) const {
  for (std::size_t l = from_level; l < levels_.size(); ++l) {
    const Level& lv = levels_[l];
    Point beta = g(lv.base);
    std::int32_t s = lv.slot[beta];
    if (s < 0) return {std::move(g), l};
    if (s != 0) g = compose(lv.inverse_reps[static_cast<std::size_t>(s)], g);
  }
  return {std::move(g), levels_.size()};
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> b;
  for (const auto& lv : levels_) b.push_back(lv.base);
  return b;
}

std::uint64_t StabilizerChain::order() const {
  std::uint64_t ord = 1;
  for (const auto& lv : levels_) {
    std::uint64_t n = lv.orbit.size();
    if (ord > UINT64_MAX / n) throw TooLarge("group order overflows 64 bits");
    ord *= n;
  }
  return ord;
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) throw DegreeMismatch("membership test with wrong degree");
  auto [h, level] = strip(g, 0);
  return level == levels_.size() && h.is_identity();
}

// ---------------------------------------------------------------------------
// ElementStream

ElementStream::ElementStream(std::shared_ptr<const StabilizerChain> chain)
    : chain_(std::move(chain)), counter_(chain_->levels().size(), 0) {}

std::optional<Permutation> ElementStream::next() {
  if (done_) return std::nullopt;
  const auto& levels = chain_->levels();
  Permutation g = Permutation::identity(chain_->degree());
  for (std::size_t l = 0; l < levels.size(); ++l) {
    if (counter_[l] != 0) g = compose(g, levels[l].reps[counter_[l]]);
  }
  // Advance the mixed-radix counter, last level fastest.
  std::size_t l = levels.size();
  while (true) {
    if (l == 0) {
      done_ = true;
      break;
    }
    --l;
    if (++counter_[l] < levels[l].orbit.size()) break;
    counter_[l] = 0;
  }
  return g;
}

// ---------------------------------------------------------------------------
// ElementTable

ElementTable::ElementTable(std::vector<Permutation> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (elements_.empty() || !elements_.front().is_identity()) {
    throw PreconditionFailed("element store must contain the identity");
  }
  std::uint64_t cap = 1;
  while (cap < 2 * elements_.size()) cap <<= 1;
  mask_ = cap - 1;
  slots_.assign(cap, UINT32_MAX);
  for (std::uint32_t i = 0; i < elements_.size(); ++i) {
    std::uint64_t h = hash_points(elements_[i].images()) & mask_;
    while (slots_[h] != UINT32_MAX) h = (h + 1) & mask_;
    slots_[h] = i;
  }
  orders_.resize(elements_.size());
  inverses_.resize(elements_.size());
  for (std::uint32_t i = 0; i < elements_.size(); ++i) {
    orders_[i] = element_order(elements_[i]);
    inverses_[i] = index_of(inverse(elements_[i]));
  }
}

std::optional<std::uint32_t> ElementTable::find(const Permutation& g) const {
  if (g.degree() != elements_.front().degree()) return std::nullopt;
  std::uint64_t h = hash_points(g.images()) & mask_;
  while (slots_[h] != UINT32_MAX) {
    if (elements_[slots_[h]] == g) return slots_[h];
    h = (h + 1) & mask_;
  }
  return std::nullopt;
}

std::uint32_t ElementTable::index_of(const Permutation& g) const {
  auto i = find(g);
  if (!i) throw NonMember("permutation " + g.cycle_string() + " is not in the element store");
  return *i;
}

std::uint32_t ElementTable::multiply(std::uint32_t a, std::uint32_t b) const {
  return index_of(compose(elements_[a], elements_[b]));
}

// ---------------------------------------------------------------------------
// Group

struct Group::Lazy {
  std::once_flag chain_once;
  std::shared_ptr<const StabilizerChain> chain;
  std::mutex table_mutex;
  std::shared_ptr<const ElementTable> table;
};

Group::Group(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)), lazy_(std::make_shared<Lazy>()) {
  if (degree_ == 0 || degree_ > kMaxDegree) throw RangeError("group degree must be in [1, 65535]");
  for (const auto& g : generators_) {
    if (g.degree() != degree_) {
      throw DegreeMismatch("generator of degree " + std::to_string(g.degree()) +
                           " in a group of degree " + std::to_string(degree_));
    }
  }
}

Group::Group(std::size_t degree, std::vector<Permutation> generators, std::shared_ptr<Lazy> lazy)
    : degree_(degree), generators_(std::move(generators)), lazy_(std::move(lazy)) {}

Group Group::trivial(std::size_t degree) { return Group(degree, {}); }

std::shared_ptr<const StabilizerChain> Group::shared_chain() const {
  std::call_once(lazy_->chain_once, [this] {
    lazy_->chain = std::make_shared<StabilizerChain>(degree_, generators_);
  });
  return lazy_->chain;
}

const StabilizerChain& Group::chain() const { return *shared_chain(); }

bool Group::contains(const Permutation& g) const {
  if (g.degree() != degree_) throw DegreeMismatch("membership test with wrong degree");
  return chain().contains(g);
}

ElementStream Group::elements() const {
  if (order() > enum_cap()) {
    throw CapExceeded("group of order " + std::to_string(order()) + " exceeds ENUM_CAP " +
                      std::to_string(enum_cap()));
  }
  return ElementStream(shared_chain());
}

const ElementTable& Group::table() const {
  std::lock_guard lock(lazy_->table_mutex);
  if (!lazy_->table) {
    std::vector<Permutation> all;
    all.reserve(order());
    for (auto& g : elements()) all.push_back(g);
    lazy_->table = std::make_shared<ElementTable>(std::move(all));
  }
  return *lazy_->table;
}

Group group_from_generators(std::size_t degree, std::vector<Permutation> generators) {
  return Group(degree, std::move(generators));
}

Group subgroup_closure(const Group& G, const std::vector<Permutation>& gens) {
  for (const auto& g : gens) {
    if (!G.contains(g)) throw NonMember(g.cycle_string() + " is not an element of the group");
  }
  return Group(G.degree(), gens);
}

Group subgroup_from_indices(const Group& G, std::vector<std::uint32_t> indices) {
  const ElementTable& t = G.table();
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  if (indices.empty() || indices.front() != 0) {
    throw PreconditionFailed("subgroup element set must contain the identity");
  }
  // Greedy generators: largest element orders first, ties by index.
  std::vector<std::uint32_t> by_order(indices.begin() + 1, indices.end());
  std::stable_sort(by_order.begin(), by_order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return t.order_of(a) > t.order_of(b);
  });
  std::vector<Permutation> gens;
  StabilizerChain current(G.degree(), gens);
  for (std::uint32_t i : by_order) {
    if (current.order() == indices.size()) break;
    if (current.contains(t.at(i))) continue;
    gens.push_back(t.at(i));
    current = StabilizerChain(G.degree(), gens);
  }
  if (current.order() != indices.size()) {
    throw PreconditionFailed("element set is not closed under multiplication");
  }
  auto lazy = std::make_shared<Group::Lazy>();
  std::vector<Permutation> elems;
  elems.reserve(indices.size());
  for (std::uint32_t i : indices) elems.push_back(t.at(i));
  lazy->table = std::make_shared<ElementTable>(std::move(elems));
  std::call_once(lazy->chain_once, [&] {
    lazy->chain = std::make_shared<StabilizerChain>(std::move(current));
  });
  return Group(G.degree(), std::move(gens), std::move(lazy));
}

std::vector<Point> orbit(const Group& G, Point point) {
  if (point >= G.degree()) throw RangeError("point outside the group degree");
  std::vector<bool> seen(G.degree(), false);
  std::vector<Point> out{point};
  seen[point] = true;
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const auto& g : G.generators()) {
      Point y = g(out[k]);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_subgroup(const Group& H, const Group& G) {
  if (H.degree() != G.degree()) return false;
  return std::all_of(H.generators().begin(), H.generators().end(),
                     [&](const Permutation& h) { return G.contains(h); });
}

bool same_subgroup(const Group& a, const Group& b) {
  return a.degree() == b.degree() && a.order() == b.order() && is_subgroup(a, b);
}

std::vector<std::uint32_t> element_indices(const Group& G, const Group& H) {
  const ElementTable& t = G.table();
  std::vector<std::uint32_t> out;
  out.reserve(H.order());
  for (const auto& h : H.table().elements()) out.push_back(t.index_of(h));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oortlab
