#include "modrep/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "modrep/error.hpp"

namespace modrep {

namespace {

constexpr std::size_t kTableLimit = 1024;

std::size_t perm_order(const Perm& p) {
  std::size_t ord = 1;
  std::vector<bool> seen(p.degree(), false);
  for (unsigned s = 0; s < p.degree(); ++s) {
    if (seen[s]) continue;
    std::size_t len = 0;
    for (unsigned x = s; !seen[x]; x = p(x)) {
      seen[x] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

void require_same_parent(const Subgroup& a, const Subgroup& b) {
  if (!same_group(a.parent(), b.parent())) fail(Errc::MixedParents, "subgroups of different groups");
}

// Sorted closure of `gens` under multiplication.
std::vector<std::size_t> closure(const PermGroup& g, const std::vector<std::size_t>& gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<std::size_t> out{PermGroup::identity()};
  in[PermGroup::identity()] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (auto s : gens) {
      std::size_t y = g.mul(s, out[i]);
      if (!in[y]) {
        in[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Least index not yet in the closure, repeated until the closure is `members`.
std::vector<std::size_t> greedy_generators(const PermGroup& g, const std::vector<std::size_t>& members) {
  std::vector<std::size_t> gens;
  std::vector<bool> in(g.order(), false);
  in[PermGroup::identity()] = true;
  std::vector<std::size_t> current{PermGroup::identity()};
  for (auto m : members) {
    if (in[m]) continue;
    gens.push_back(m);
    // extend the closure with the new generator
    std::vector<std::size_t> queue = current;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (auto s : gens) {
        std::size_t y = g.mul(s, queue[i]);
        if (!in[y]) {
          in[y] = true;
          queue.push_back(y);
        }
      }
    }
    current = std::move(queue);
  }
  return gens;
}

std::uint64_t p_part(std::uint64_t n, unsigned p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

}  // namespace

GroupPtr PermGroup::make(unsigned degree, std::vector<Perm> generators, std::size_t max_order) {
  if (degree == 0) degree = 1;
  for (auto& g : generators) {
    if (g.degree() == 0) g = Perm::identity(degree);
    if (g.degree() != degree) fail(Errc::InvalidGroupMap, "generator degree does not match group degree");
  }
  auto grp = std::shared_ptr<PermGroup>(new PermGroup());
  grp->degree_ = degree;
  grp->generators_ = std::move(generators);
  auto& el = grp->elements_;
  el.push_back(Perm::identity(degree));
  grp->index_.emplace(el[0], 0);
  grp->parent_.push_back(0);
  grp->parent_gen_.push_back(0);
  for (std::size_t i = 0; i < el.size(); ++i) {
    for (std::size_t k = 0; k < grp->generators_.size(); ++k) {
      Perm y = grp->generators_[k] * el[i];
      if (grp->index_.count(y)) continue;
      if (el.size() >= max_order) fail(Errc::GroupTooLarge, "group order exceeds the configured cap");
      grp->index_.emplace(y, el.size());
      el.push_back(std::move(y));
      grp->parent_.push_back(i);
      grp->parent_gen_.push_back(k);
    }
  }
  const std::size_t n = el.size();
  for (const auto& g : grp->generators_) grp->generator_index_.push_back(grp->index_.at(g));
  grp->inverse_.resize(n);
  grp->element_order_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    grp->inverse_[i] = grp->index_.at(el[i].inverse());
    grp->element_order_[i] = perm_order(el[i]);
  }
  if (n <= kTableLimit) {
    grp->table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        grp->table_[a * n + b] = static_cast<std::uint32_t>(grp->index_.at(el[a] * el[b]));
  }
  return grp;
}

std::optional<std::size_t> PermGroup::index_of(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t PermGroup::mul(std::size_t a, std::size_t b) const {
  if (!table_.empty()) return table_[a * elements_.size() + b];
  return index_.at(elements_[a] * elements_[b]);
}

std::size_t PermGroup::pow(std::size_t a, std::uint64_t e) const {
  e %= element_order_[a];
  std::size_t r = identity();
  std::size_t b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

bool PermGroup::same_as(const PermGroup& o) const { return degree_ == o.degree_ && elements_ == o.elements_; }

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_as(*b);
}

Subgroup::Subgroup(GroupPtr parent, std::vector<std::size_t> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (auto m : members_)
    if (m >= parent_->order()) fail(Errc::BadIndex, "subgroup member index out of range");
}

bool Subgroup::contains(std::size_t g) const { return std::binary_search(members_.begin(), members_.end(), g); }

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<std::size_t>& gens) {
  for (auto s : gens)
    if (s >= g->order()) fail(Errc::BadIndex, "generator index out of range");
  return Subgroup(g, closure(*g, gens));
}

std::vector<std::size_t> subgroup_generators(const Subgroup& h) {
  return greedy_generators(*h.parent(), h.members());
}

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup(g, {PermGroup::identity()}); }

Subgroup whole_group(const GroupPtr& g) {
  std::vector<std::size_t> all(g->order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(g, std::move(all));
}

Subgroup conjugate(const Subgroup& h, std::size_t x) {
  std::vector<std::size_t> m;
  m.reserve(h.order());
  for (auto e : h.members()) m.push_back(h.parent()->conj(x, e));
  return Subgroup(h.parent(), std::move(m));
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  std::vector<std::size_t> m;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                        std::back_inserter(m));
  return Subgroup(a.parent(), std::move(m));
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  auto gens = subgroup_generators(a);
  for (auto s : subgroup_generators(b)) gens.push_back(s);
  return Subgroup(a.parent(), closure(*a.parent(), gens));
}

bool is_subgroup_of(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  return std::includes(b.members().begin(), b.members().end(), a.members().begin(), a.members().end());
}

bool is_normal_in(const Subgroup& n, const Subgroup& k) {
  require_same_parent(n, k);
  const auto& G = *n.parent();
  auto ng = subgroup_generators(n);
  for (auto x : subgroup_generators(k))
    for (auto h : ng)
      if (!n.contains(G.conj(x, h))) return false;
  return true;
}

bool is_normal(const Subgroup& n) {
  const auto& G = *n.parent();
  auto ng = subgroup_generators(n);
  for (auto x : G.generator_indices())
    for (auto h : ng)
      if (!n.contains(G.conj(x, h))) return false;
  return true;
}

Subgroup normalizer_in(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k);
  const auto& G = *h.parent();
  auto hg = subgroup_generators(h);
  std::vector<std::size_t> m;
  for (auto x : k.members()) {
    bool ok = true;
    for (auto s : hg)
      if (!h.contains(G.conj(x, s))) {
        ok = false;
        break;
      }
    if (ok) m.push_back(x);
  }
  return Subgroup(h.parent(), std::move(m));
}

Subgroup normalizer(const Subgroup& h) { return normalizer_in(h, whole_group(h.parent())); }

Subgroup normal_closure_in(const Subgroup& h, const Subgroup& k) {
  require_same_parent(h, k);
  const auto& G = *h.parent();
  auto kg = subgroup_generators(k);
  Subgroup s = h;
  for (bool changed = true; changed;) {
    changed = false;
    for (auto x : kg) {
      for (auto g : subgroup_generators(s)) {
        std::size_t c = G.conj(x, g);
        if (!s.contains(c)) {
          s = join(s, subgroup_generated(h.parent(), {c}));
          changed = true;
        }
      }
    }
  }
  return s;
}

bool is_subnormal(const Subgroup& h) {
  Subgroup k = whole_group(h.parent());
  for (;;) {
    Subgroup c = normal_closure_in(h, k);
    if (c == k) return k == h;
    k = std::move(c);
  }
}

bool is_p_group(const Subgroup& h, unsigned p) { return p_part(h.order(), p) == h.order(); }

std::optional<std::size_t> contained_up_to_conjugacy(const Subgroup& a, const Subgroup& b) {
  require_same_parent(a, b);
  if (b.order() % a.order() != 0) return std::nullopt;
  const auto& G = *a.parent();
  auto ag = subgroup_generators(a);
  for (std::size_t x = 0; x < G.order(); ++x) {
    bool ok = true;
    for (auto s : ag)
      if (!b.contains(G.conj(x, s))) {
        ok = false;
        break;
      }
    if (ok) return x;
  }
  return std::nullopt;
}

std::optional<std::size_t> conjugating_element(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return std::nullopt;
  return contained_up_to_conjugacy(a, b);
}

Subgroup canonical_conjugate(const Subgroup& h) {
  Subgroup best = h;
  for (auto x : left_transversal(normalizer(h))) {
    Subgroup c = conjugate(h, x);
    if (c.members() < best.members()) best = std::move(c);
  }
  return best;
}

std::vector<std::size_t> left_coset_labels(const Subgroup& h) {
  const auto& G = *h.parent();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(G.order(), unset);
  std::size_t next = 0;
  for (std::size_t g = 0; g < G.order(); ++g) {
    if (label[g] != unset) continue;
    for (auto e : h.members()) label[G.mul(g, e)] = next;
    ++next;
  }
  return label;
}

std::vector<std::size_t> left_transversal(const Subgroup& h) {
  auto label = left_coset_labels(h);
  std::vector<std::size_t> reps;
  for (std::size_t g = 0; g < label.size(); ++g)
    if (label[g] == reps.size()) reps.push_back(g);
  return reps;
}

std::vector<std::size_t> left_transversal_greatest(const Subgroup& h) {
  auto label = left_coset_labels(h);
  std::vector<std::size_t> reps(label.size() / h.order(), 0);
  for (std::size_t g = 0; g < label.size(); ++g) reps[label[g]] = std::max(reps[label[g]], g);
  return reps;
}

std::vector<std::size_t> double_cosets(const Subgroup& k, const Subgroup& h) {
  require_same_parent(k, h);
  const auto& G = *k.parent();
  auto label = left_coset_labels(h);
  std::vector<bool> seen_coset(G.order() / h.order(), false);
  std::vector<std::size_t> reps;
  for (std::size_t g = 0; g < G.order(); ++g) {
    if (seen_coset[label[g]]) continue;
    reps.push_back(g);
    for (auto x : k.members()) seen_coset[label[G.mul(x, g)]] = true;
  }
  return reps;
}

Subgroup sylow_p(const GroupPtr& g, unsigned p) {
  const std::uint64_t target = p_part(g->order(), p);
  Subgroup s = trivial_subgroup(g);
  while (s.order() < target) {
    Subgroup n = normalizer(s);
    std::optional<std::size_t> pick;
    for (auto x : n.members()) {
      if (s.contains(x)) continue;
      if (s.contains(g->pow(x, p))) {
        pick = x;
        break;
      }
    }
    check(pick.has_value(), "p-subgroup below Sylow order must grow inside its normalizer");
    s = join(s, subgroup_generated(g, {*pick}));
  }
  return s;
}

std::vector<Subgroup> p_subgroups_up_to_conjugacy(const GroupPtr& g, unsigned p, std::size_t max_classes) {
  std::vector<Subgroup> out{trivial_subgroup(g)};
  std::vector<Subgroup> layer = out;
  while (!layer.empty()) {
    std::set<std::vector<std::size_t>> found;
    std::vector<Subgroup> next;
    for (const auto& s : layer) {
      Subgroup n = normalizer(s);
      std::set<std::vector<std::size_t>> local;
      for (auto x : n.members()) {
        if (s.contains(x) || !s.contains(g->pow(x, p))) continue;
        Subgroup q = join(s, subgroup_generated(g, {x}));
        if (!local.insert(q.members()).second) continue;
        Subgroup c = canonical_conjugate(q);
        if (found.insert(c.members()).second) {
          next.push_back(std::move(c));
          if (out.size() + next.size() > max_classes)
            fail(Errc::SearchBudgetExceeded, "p-subgroup class budget exceeded");
        }
      }
    }
    std::sort(next.begin(), next.end());
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g, std::size_t max_subgroups) {
  std::set<std::vector<std::size_t>> seen;
  std::vector<Subgroup> cyclic;
  for (std::size_t x = 0; x < g->order(); ++x) {
    Subgroup c = subgroup_generated(g, {x});
    if (seen.insert(c.members()).second) cyclic.push_back(std::move(c));
  }
  std::vector<Subgroup> all = cyclic;
  std::vector<Subgroup> frontier = cyclic;
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const auto& a : frontier)
      for (const auto& c : cyclic) {
        if (is_subgroup_of(c, a)) continue;
        Subgroup j = join(a, c);
        if (seen.insert(j.members()).second) {
          next.push_back(j);
          all.push_back(std::move(j));
          if (all.size() > max_subgroups) fail(Errc::SearchBudgetExceeded, "subgroup enumeration budget exceeded");
        }
      }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end());
  return all;
}

StandaloneSubgroup standalone(const Subgroup& h) {
  const auto& G = *h.parent();
  std::vector<Perm> gens;
  for (auto s : subgroup_generators(h)) gens.push_back(G.element(s));
  StandaloneSubgroup out;
  out.parent = h.parent();
  out.group = PermGroup::make(G.degree(), std::move(gens), G.order());
  out.to_parent.resize(out.group->order());
  for (std::size_t i = 0; i < out.group->order(); ++i) {
    out.to_parent[i] = *G.index_of(out.group->element(i));
    out.from_parent.emplace(out.to_parent[i], i);
  }
  check(out.group->order() == h.order(), "standalone subgroup has the wrong order");
  return out;
}

Subgroup to_standalone(const Subgroup& sub, const StandaloneSubgroup& sh) {
  if (!same_group(sub.parent(), sh.parent)) fail(Errc::MixedParents, "subgroup of another group");
  std::vector<std::size_t> m;
  for (auto g : sub.members()) {
    auto it = sh.from_parent.find(g);
    if (it == sh.from_parent.end()) fail(Errc::MixedParents, "subgroup is not contained in the standalone subgroup");
    m.push_back(it->second);
  }
  return Subgroup(sh.group, std::move(m));
}

Subgroup from_standalone(const Subgroup& sub, const StandaloneSubgroup& sh) {
  if (!same_group(sub.parent(), sh.group)) fail(Errc::MixedParents, "subgroup of another group");
  std::vector<std::size_t> m;
  for (auto g : sub.members()) m.push_back(sh.to_parent[g]);
  return Subgroup(sh.parent, std::move(m));
}

QuotientMap::QuotientMap(GroupPtr source, GroupPtr target, std::vector<std::size_t> image_of)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image_of)) {
  const auto& S = *source_;
  const auto& T = *target_;
  if (image_.size() != S.order()) fail(Errc::InvalidGroupMap, "image list has the wrong length");
  for (auto t : image_)
    if (t >= T.order()) fail(Errc::InvalidGroupMap, "image index out of range");
  // f(s g) = f(s) f(g) for generators s and all g forces f to be a homomorphism
  for (auto s : S.generator_indices())
    for (std::size_t g = 0; g < S.order(); ++g)
      if (image_[S.mul(s, g)] != T.mul(image_[s], image_[g]))
        fail(Errc::InvalidGroupMap, "map is not a homomorphism");
  if (image_[PermGroup::identity()] != PermGroup::identity())
    fail(Errc::InvalidGroupMap, "identity not sent to identity");
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  least_preimage_.assign(T.order(), unset);
  std::vector<std::size_t> ker;
  for (std::size_t g = 0; g < S.order(); ++g) {
    if (least_preimage_[image_[g]] == unset) least_preimage_[image_[g]] = g;
    if (image_[g] == PermGroup::identity()) ker.push_back(g);
  }
  for (auto v : least_preimage_)
    if (v == unset) fail(Errc::InvalidGroupMap, "map is not surjective");
  kernel_ = Subgroup(source_, std::move(ker));
}

QuotientMap QuotientMap::from_generator_images(GroupPtr source, GroupPtr target,
                                               const std::vector<std::size_t>& images) {
  const auto& S = *source;
  if (images.size() != S.generators().size()) fail(Errc::InvalidGroupMap, "one image per generator required");
  for (auto t : images)
    if (t >= target->order()) fail(Errc::InvalidGroupMap, "image index out of range");
  std::vector<std::size_t> img(S.order());
  img[0] = PermGroup::identity();
  for (std::size_t i = 1; i < S.order(); ++i) img[i] = target->mul(images[S.word_generator(i)], img[S.word_parent(i)]);
  return QuotientMap(std::move(source), std::move(target), std::move(img));
}

QuotientMap QuotientMap::after(const QuotientMap& first) const {
  if (!same_group(first.target_, source_)) fail(Errc::GroupMismatch, "maps do not compose");
  std::vector<std::size_t> img(first.source_->order());
  for (std::size_t g = 0; g < img.size(); ++g) img[g] = image_[first.image_[g]];
  return QuotientMap(first.source_, target_, std::move(img));
}

Subgroup QuotientMap::image(const Subgroup& h) const {
  if (!same_group(h.parent(), source_)) fail(Errc::MixedParents, "subgroup is not in the source group");
  std::vector<std::size_t> m;
  for (auto g : h.members()) m.push_back(image_[g]);
  return Subgroup(target_, std::move(m));
}

Subgroup QuotientMap::preimage(const Subgroup& t) const {
  if (!same_group(t.parent(), target_)) fail(Errc::MixedParents, "subgroup is not in the target group");
  std::vector<std::size_t> m;
  for (std::size_t g = 0; g < image_.size(); ++g)
    if (t.contains(image_[g])) m.push_back(g);
  return Subgroup(source_, std::move(m));
}

RestrictedQuotient restrict_quotient(const QuotientMap& map, const Subgroup& h) {
  auto src = standalone(h);
  auto tgt = standalone(map.image(h));
  std::vector<std::size_t> img(src.group->order());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = tgt.from_parent.at(map(src.to_parent[i]));
  QuotientMap m(src.group, tgt.group, std::move(img));
  return {std::move(src), std::move(tgt), std::move(m)};
}

Quotient quotient(const Subgroup& n) {
  if (!is_normal(n)) fail(Errc::NotNormal, "quotient by a non-normal subgroup");
  const auto& G = *n.parent();
  auto label = left_coset_labels(n);
  auto reps = left_transversal(n);
  const unsigned index = static_cast<unsigned>(reps.size());
  std::vector<Perm> gens;
  for (auto s : G.generator_indices()) {
    std::vector<std::uint16_t> img(index);
    for (unsigned c = 0; c < index; ++c) img[c] = static_cast<std::uint16_t>(label[G.mul(s, reps[c])]);
    gens.emplace_back(std::move(img));
  }
  auto Q = PermGroup::make(index, gens, G.order());
  std::vector<std::size_t> images;
  for (const auto& p : gens) images.push_back(*Q->index_of(p.degree() ? p : Perm::identity(index)));
  auto map = QuotientMap::from_generator_images(n.parent(), Q, images);
  return {Q, std::move(map)};
}

}  // namespace modrep
