#include "cubic27/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace cubic27 {

namespace {

bool preserves_incidence(const Perm27::Image &image) {
  const auto &table = line_table();
  std::array<bool, kLineCount> seen{};
  for (auto x : image) {
    if (x >= kLineCount || seen[x]) return false;
    seen[x] = true;
  }
  for (std::size_t i = 0; i < kLineCount; ++i)
    for (std::size_t j = i + 1; j < kLineCount; ++j)
      if (table.incidence[image[i]][image[j]] != table.incidence[i][j]) return false;
  return true;
}

// Attempt budget per requested random subgroup before giving up.
constexpr std::size_t kDrawsPerSubgroup = 100;

std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

} // namespace

Perm27::Perm27() {
  for (std::size_t i = 0; i < kLineCount; ++i) image_[i] = static_cast<std::uint8_t>(i);
}

Perm27 Perm27::from_image(const Image &image) {
  if (!preserves_incidence(image)) throw InvalidPermutation("not an incidence-preserving permutation of the 27 lines");
  return Perm27(image, Unchecked{});
}

Perm27 Perm27::operator*(const Perm27 &rhs) const {
  Image out;
  for (std::size_t i = 0; i < kLineCount; ++i) out[i] = image_[rhs.image_[i]];
  return Perm27(out, Unchecked{});
}

Perm27 Perm27::inverse() const {
  Image out;
  for (std::size_t i = 0; i < kLineCount; ++i) out[image_[i]] = static_cast<std::uint8_t>(i);
  return Perm27(out, Unchecked{});
}

bool Perm27::is_identity() const { return *this == Perm27(); }

std::size_t Perm27::order() const {
  std::size_t n = 1;
  for (std::size_t i = 0; i < kLineCount; ++i) {
    std::size_t len = 1;
    for (std::size_t j = image_[i]; j != i; j = image_[j]) ++len;
    n = std::lcm(n, len);
  }
  return n;
}

IntMatrix Perm27::lattice_action() const {
  const auto &t = line_table();
  IntMatrix m(kPicardRank, kPicardRank);
  // H = L12 + E1 + E2
  const DivisorClass h_image = t.classes[image_[line_index_L(1, 2)]] + t.classes[image_[line_index_E(1)]] +
                               t.classes[image_[line_index_E(2)]];
  for (std::size_t r = 0; r < kPicardRank; ++r) m(r, 0) = h_image[r];
  for (int i = 1; i <= 6; ++i) {
    const auto &img = t.classes[image_[line_index_E(i)]];
    for (std::size_t r = 0; r < kPicardRank; ++r) m(r, static_cast<std::size_t>(i)) = img[r];
  }
  return m;
}

DivisorClass Perm27::apply(const DivisorClass &c) const {
  const auto v = lattice_action() * std::span<const int64_t>(c.coeffs());
  return DivisorClass::from_vector(v);
}

std::string Perm27::to_cycle_string() const {
  const auto &t = line_table();
  std::string out;
  std::array<bool, kLineCount> seen{};
  for (std::size_t i = 0; i < kLineCount; ++i) {
    if (seen[i] || image_[i] == i) continue;
    out += '(';
    for (std::size_t j = i; !seen[j]; j = image_[j]) {
      seen[j] = true;
      if (j != i) out += ' ';
      out += t.names[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::size_t Perm27Hash::operator()(const Perm27 &p) const noexcept {
  std::size_t h = 0;
  for (auto x : p.image()) h = h * 31 + x;
  return h;
}

Perm27 induced_line_permutation(const std::array<DivisorClass, kPicardRank> &basis_images) {
  IntMatrix m(kPicardRank, kPicardRank);
  for (std::size_t c = 0; c < kPicardRank; ++c)
    for (std::size_t r = 0; r < kPicardRank; ++r) m(r, c) = basis_images[c][r];

  for (std::size_t a = 0; a < kPicardRank; ++a)
    for (std::size_t b = 0; b < kPicardRank; ++b) {
      const int64_t expected = a != b ? 0 : (a == 0 ? 1 : -1);
      if (intersection_pairing(basis_images[a], basis_images[b]) != expected)
        throw InvalidPermutation("basis images do not preserve the intersection form");
    }
  const DivisorClass omega = DivisorClass::canonical();
  if (DivisorClass::from_vector(m * std::span<const int64_t>(omega.coeffs())) != omega)
    throw InvalidPermutation("basis images do not fix the canonical class");

  const auto &t = line_table();
  Perm27::Image image;
  for (std::size_t i = 0; i < kLineCount; ++i) {
    const auto img = DivisorClass::from_vector(m * std::span<const int64_t>(t.classes[i].coeffs()));
    const auto idx = t.index_of(img);
    if (!idx) throw InvalidPermutation("image of line " + t.names[i] + " is not a line class");
    image[i] = static_cast<std::uint8_t>(*idx);
  }
  return Perm27::from_image(image);
}

Perm27 point_permutation(const std::array<int, 6> &points) {
  std::array<DivisorClass, kPicardRank> images;
  images[0] = DivisorClass::hyperplane();
  for (int i = 1; i <= 6; ++i) images[static_cast<std::size_t>(i)] = DivisorClass::exceptional(points[static_cast<std::size_t>(i - 1)]);
  return induced_line_permutation(images);
}

Perm27 cremona_involution(int i, int j, int k) {
  const auto H = DivisorClass::hyperplane();
  const auto E = [](int n) { return DivisorClass::exceptional(n); };
  std::array<DivisorClass, kPicardRank> images;
  images[0] = 2 * H - E(i) - E(j) - E(k);
  for (int n = 1; n <= 6; ++n) images[static_cast<std::size_t>(n)] = E(n);
  images[static_cast<std::size_t>(i)] = H - E(j) - E(k);
  images[static_cast<std::size_t>(j)] = H - E(i) - E(k);
  images[static_cast<std::size_t>(k)] = H - E(i) - E(j);
  return induced_line_permutation(images);
}

std::vector<Perm27> standard_generators() {
  std::vector<Perm27> gens;
  for (int i = 1; i <= 5; ++i) {
    std::array<int, 6> pts{1, 2, 3, 4, 5, 6};
    std::swap(pts[static_cast<std::size_t>(i - 1)], pts[static_cast<std::size_t>(i)]);
    gens.push_back(point_permutation(pts));
  }
  gens.push_back(cremona_involution(1, 2, 3));
  return gens;
}

Subgroup::Subgroup() : elements_(std::make_shared<const std::vector<Perm27>>(std::vector<Perm27>{Perm27()})) { finish(); }

Subgroup Subgroup::generate(std::vector<Perm27> generators) {
  std::unordered_set<Perm27, Perm27Hash> seen{Perm27()};
  std::vector<Perm27> elements{Perm27()};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto &g : generators) {
      Perm27 next = g * elements[head];
      if (seen.insert(next).second) elements.push_back(next);
    }
  }
  std::sort(elements.begin(), elements.end());
  Subgroup s;
  s.generators_ = std::move(generators);
  s.elements_ = std::make_shared<const std::vector<Perm27>>(std::move(elements));
  s.finish();
  return s;
}

Subgroup Subgroup::from_elements(std::vector<Perm27> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::vector<Perm27> gens;
  Subgroup current;
  for (const auto &e : elements) {
    if (current.contains(e)) continue;
    gens.push_back(e);
    current = generate(gens);
  }
  if (current.order() != elements.size()) throw std::invalid_argument("element set is not closed under composition");
  return current;
}

void Subgroup::finish() {
  std::array<std::size_t, kLineCount> parent;
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto &g : generators_)
    for (std::size_t i = 0; i < kLineCount; ++i) {
      const std::size_t a = find(i), b = find(g(i));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  orbits_.clear();
  std::array<std::size_t, kLineCount> slot;
  slot.fill(kLineCount);
  for (std::size_t i = 0; i < kLineCount; ++i) {
    const std::size_t root = find(i);
    if (slot[root] == kLineCount) {
      slot[root] = orbits_.size();
      orbits_.emplace_back();
    }
    orbits_[slot[root]].push_back(i);
  }
  element_hash_ = elements_->size();
  for (const auto &e : *elements_) element_hash_ = hash_combine(element_hash_, Perm27Hash{}(e));
}

bool Subgroup::contains(const Perm27 &p) const { return std::binary_search(elements_->begin(), elements_->end(), p); }

bool Subgroup::is_subgroup_of(const Subgroup &g) const {
  return std::all_of(elements_->begin(), elements_->end(), [&](const Perm27 &p) { return g.contains(p); });
}

Signature Subgroup::signature() const {
  Signature s;
  s.order = order();
  for (const auto &o : orbits_) s.orbit_sizes.push_back(o.size());
  std::sort(s.orbit_sizes.begin(), s.orbit_sizes.end());
  return s;
}

bool Subgroup::fixes_line(std::size_t line) const {
  return std::all_of(generators_.begin(), generators_.end(), [line](const Perm27 &g) { return g(line) == line; });
}

std::vector<std::size_t> Subgroup::fixed_lines() const {
  std::vector<std::size_t> out;
  for (const auto &o : orbits_)
    if (o.size() == 1) out.push_back(o.front());
  return out;
}

Subgroup generate_closure(std::vector<Perm27> generators) { return Subgroup::generate(std::move(generators)); }

Orbits orbits(const Subgroup &g) { return g.orbits(); }

const Subgroup &full_symmetry_group() {
  static const Subgroup full = Subgroup::generate(standard_generators());
  return full;
}

Subgroup line_stabilizer(std::size_t line) {
  if (line >= kLineCount) throw std::out_of_range("line index out of range");
  std::vector<Perm27> fixing;
  for (const auto &e : full_symmetry_group().elements())
    if (e(line) == line) fixing.push_back(e);
  return Subgroup::from_elements(std::move(fixing));
}

std::vector<Subgroup> cyclic_subgroups() {
  std::vector<Subgroup> out;
  for (const auto &g : full_symmetry_group().elements()) {
    // Keep g only if it is the smallest generator of <g>.
    const std::size_t n = g.order();
    Perm27 power = g;
    bool smallest = true;
    for (std::size_t k = 2; k < n && smallest; ++k) {
      power = power * g;
      if (std::gcd(k, n) == 1 && power < g) smallest = false;
    }
    if (smallest) out.push_back(Subgroup::generate({g}));
  }
  return out;
}

std::string_view to_string(Family f) {
  switch (f) {
  case Family::cyclic: return "cyclic";
  case Family::stabilizer: return "stabilizer";
  case Family::random: return "random";
  case Family::explicit_gens: return "explicit";
  }
  return "?";
}

std::uint64_t bounded_draw(std::mt19937_64 &rng, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("bounded_draw needs n > 0");
  const std::uint64_t limit = std::mt19937_64::max() - (std::mt19937_64::max() % n);
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % n;
  }
}

SubgroupFamily sample_subgroups(std::uint64_t seed, std::size_t count, std::size_t max_gens, bool include_cyclic,
                                bool include_stabilizers) {
  if (count > 0 && max_gens == 0) throw std::invalid_argument("max_gens must be positive");
  SubgroupFamily fam;
  std::unordered_multimap<std::size_t, std::size_t> by_hash;
  auto add = [&](Subgroup g, Family origin) {
    const auto range = by_hash.equal_range(g.element_hash());
    for (auto it = range.first; it != range.second; ++it)
      if (fam.groups[it->second].same_elements(g)) return false;
    by_hash.emplace(g.element_hash(), fam.groups.size());
    fam.groups.push_back(std::move(g));
    fam.origin.push_back(origin);
    return true;
  };

  if (include_cyclic)
    for (auto &g : cyclic_subgroups())
      if (add(std::move(g), Family::cyclic)) ++fam.cyclic;
  if (include_stabilizers)
    for (std::size_t l = 0; l < kLineCount; ++l)
      if (add(line_stabilizer(l), Family::stabilizer)) ++fam.stabilizers;

  // Each draw picks its generators from one pool: the full group, a line
  // stabilizer, or a subgroup found by an earlier draw.
  std::vector<Subgroup> pools{full_symmetry_group()};
  for (std::size_t l = 0; l < kLineCount; ++l) pools.push_back(line_stabilizer(l));
  std::mt19937_64 rng(seed);
  const std::size_t max_draws = count * kDrawsPerSubgroup;
  while (fam.random_distinct < count && fam.random_draws < max_draws) {
    const auto &pool = pools[bounded_draw(rng, pools.size())].elements();
    // Single generators only reproduce cyclic subgroups, which are covered exhaustively.
    const std::size_t min_gens = include_cyclic ? std::min<std::size_t>(2, max_gens) : 1;
    const std::size_t ngens = min_gens + bounded_draw(rng, max_gens - min_gens + 1);
    std::vector<Perm27> gens;
    for (std::size_t k = 0; k < ngens; ++k) gens.push_back(pool[bounded_draw(rng, pool.size())]);
    ++fam.random_draws;
    Subgroup g = Subgroup::generate(std::move(gens));
    if (g.order() > 2 && g.order() < full_symmetry_group().order()) pools.push_back(g);
    if (add(std::move(g), Family::random)) ++fam.random_distinct;
  }
  return fam;
}

} // namespace cubic27
