#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "modrep/permutation.hpp"

namespace modrep {

class PermGroup;
using GroupPtr = std::shared_ptr<const PermGroup>;

/// A finite permutation group with its full element list. Elements are
/// numbered in breadth-first order from the identity (index 0): element i > 0
/// equals generator(word_generator(i)) * element(word_parent(i)).
class PermGroup {
 public:
  static constexpr std::size_t kDefaultMaxOrder = 20000;

  static GroupPtr make(unsigned degree, std::vector<Perm> generators,
                       std::size_t max_order = kDefaultMaxOrder);

  unsigned degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& generators() const { return generators_; }
  /// Element index of each generator.
  const std::vector<std::size_t>& generator_indices() const { return generator_index_; }
  const Perm& element(std::size_t i) const { return elements_[i]; }
  const std::vector<Perm>& elements() const { return elements_; }
  std::optional<std::size_t> index_of(const Perm& p) const;

  static constexpr std::size_t identity() { return 0; }
  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t inv(std::size_t a) const { return inverse_[a]; }
  std::size_t pow(std::size_t a, std::uint64_t e) const;
  /// x g x^-1
  std::size_t conj(std::size_t x, std::size_t g) const { return mul(mul(x, g), inv(x)); }
  std::size_t element_order(std::size_t a) const { return element_order_[a]; }

  std::size_t word_parent(std::size_t i) const { return parent_[i]; }
  std::size_t word_generator(std::size_t i) const { return parent_gen_[i]; }

  /// Same degree and the same element list in the same order, so element
  /// indices are interchangeable.
  bool same_as(const PermGroup& o) const;

 private:
  PermGroup() = default;

  unsigned degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<std::size_t> generator_index_;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, std::size_t, PermHash> index_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> parent_gen_;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> element_order_;
  std::vector<std::uint32_t> table_;  // order^2 entries, small groups only
};

bool same_group(const GroupPtr& a, const GroupPtr& b);

/// A subgroup as a sorted set of element indices of its parent.
class Subgroup {
 public:
  Subgroup() = default;
  /// `members` must be closed; it is sorted here but closure is the caller's
  /// responsibility (use subgroup_generated otherwise).
  Subgroup(GroupPtr parent, std::vector<std::size_t> members);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<std::size_t>& members() const { return members_; }
  std::size_t order() const { return members_.size(); }
  bool contains(std::size_t g) const;
  bool is_trivial() const { return members_.size() == 1; }
  bool is_whole() const { return members_.size() == parent_->order(); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return same_group(a.parent_, b.parent_) && a.members_ == b.members_;
  }
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members_ < b.members_;
  }

 private:
  GroupPtr parent_;
  std::vector<std::size_t> members_;
};

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<std::size_t>& gens);
/// Greedy generating set: repeatedly the least member outside the closure.
std::vector<std::size_t> subgroup_generators(const Subgroup& h);
Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup whole_group(const GroupPtr& g);

/// x H x^-1
Subgroup conjugate(const Subgroup& h, std::size_t x);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
Subgroup join(const Subgroup& a, const Subgroup& b);
bool is_subgroup_of(const Subgroup& a, const Subgroup& b);
bool is_normal(const Subgroup& n);
/// N is normal in the subgroup K (both in the same parent, N <= K).
bool is_normal_in(const Subgroup& n, const Subgroup& k);
Subgroup normalizer(const Subgroup& h);
/// Normalizer of h inside k.
Subgroup normalizer_in(const Subgroup& h, const Subgroup& k);
/// Smallest normal subgroup of k containing h.
Subgroup normal_closure_in(const Subgroup& h, const Subgroup& k);
/// H is reached from G by a chain of successive normal subgroups.
bool is_subnormal(const Subgroup& h);
bool is_p_group(const Subgroup& h, unsigned p);

/// Some x with x A x^-1 = B, if A and B are conjugate.
std::optional<std::size_t> conjugating_element(const Subgroup& a, const Subgroup& b);
/// Some x with x A x^-1 <= B.
std::optional<std::size_t> contained_up_to_conjugacy(const Subgroup& a, const Subgroup& b);
/// The conjugate of h with least sorted member list.
Subgroup canonical_conjugate(const Subgroup& h);

/// Least element of each left coset gH, ordered by that least element.
std::vector<std::size_t> left_transversal(const Subgroup& h);
/// Greatest element of each left coset, in the same coset order as
/// left_transversal.
std::vector<std::size_t> left_transversal_greatest(const Subgroup& h);
/// For each element, the position of its left coset in left_transversal.
std::vector<std::size_t> left_coset_labels(const Subgroup& h);

/// One representative (least element) per double coset K g H, ordered by
/// that representative.
std::vector<std::size_t> double_cosets(const Subgroup& k, const Subgroup& h);

Subgroup sylow_p(const GroupPtr& g, unsigned p);

/// One representative per conjugacy class of p-subgroups, sorted by order
/// then member list; each representative is canonical_conjugate of itself.
std::vector<Subgroup> p_subgroups_up_to_conjugacy(const GroupPtr& g, unsigned p,
                                                  std::size_t max_classes = 10000);

/// Every subgroup, sorted by order then member list. Intended for small
/// groups; throws SearchBudgetExceeded past `max_subgroups`.
std::vector<Subgroup> all_subgroups(const GroupPtr& g, std::size_t max_subgroups = 5000);

/// H as a group in its own right, with the index translation back to the
/// parent. Generators are chosen greedily: the least parent index not yet in
/// the closure of the previous ones.
struct StandaloneSubgroup {
  GroupPtr parent;
  GroupPtr group;
  std::vector<std::size_t> to_parent;    // standalone index -> parent index
  std::unordered_map<std::size_t, std::size_t> from_parent;
};
StandaloneSubgroup standalone(const Subgroup& h);
/// A subgroup of H (given in parent indices) as a subgroup of sh.group.
Subgroup to_standalone(const Subgroup& sub, const StandaloneSubgroup& sh);
/// A subgroup of sh.group in parent indices.
Subgroup from_standalone(const Subgroup& sub, const StandaloneSubgroup& sh);

/// A surjective homomorphism source -> target.
class QuotientMap {
 public:
  /// Validates the homomorphism property and surjectivity.
  QuotientMap(GroupPtr source, GroupPtr target, std::vector<std::size_t> image_of);
  /// The homomorphism sending source generator i to target element
  /// images[i]; throws InvalidGroupMap when no such homomorphism exists.
  static QuotientMap from_generator_images(GroupPtr source, GroupPtr target,
                                           const std::vector<std::size_t>& images);

  const GroupPtr& source() const { return source_; }
  const GroupPtr& target() const { return target_; }
  const Subgroup& kernel() const { return kernel_; }
  std::size_t operator()(std::size_t g) const { return image_[g]; }
  const std::vector<std::size_t>& images() const { return image_; }
  /// Least source element mapping to each target element.
  std::size_t least_preimage(std::size_t t) const { return least_preimage_[t]; }

  /// this after first: first.source -> this.target
  QuotientMap after(const QuotientMap& first) const;
  /// Image of a source subgroup.
  Subgroup image(const Subgroup& h) const;
  /// Preimage of a target subgroup.
  Subgroup preimage(const Subgroup& t) const;

 private:
  GroupPtr source_;
  GroupPtr target_;
  std::vector<std::size_t> image_;
  std::vector<std::size_t> least_preimage_;
  Subgroup kernel_;
};

struct Quotient {
  GroupPtr group;
  QuotientMap map;
};

/// map restricted to H: standalone(H) -> standalone(map.image(H)).
struct RestrictedQuotient {
  StandaloneSubgroup source;
  StandaloneSubgroup target;
  QuotientMap map;
};
RestrictedQuotient restrict_quotient(const QuotientMap& map, const Subgroup& h);

/// G/N acting on the left cosets of N (ordered by least element).
Quotient quotient(const Subgroup& n);

}  // namespace modrep
