#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "modrep/field.hpp"
#include "modrep/group.hpp"
#include "modrep/matrix.hpp"

namespace modrep {

/// A finite-dimensional kG-module: a matrix rho(g) for every element of G.
/// Copies share the underlying data.
class Module {
 public:
  Module() = default;

  /// Builds rho on every element from the generator images and validates
  /// rho(s g) = rho(s) rho(g) for every generator s and element g, which is
  /// equivalent to the module axioms on all pairs. Throws InvalidModule.
  static Module from_generators(GroupPtr group, FieldPtr field, std::size_t dim,
                                std::vector<Matrix> generator_images);
  /// Takes rho for every element as given. No validation; used by the
  /// functors, whose output is correct by construction.
  static Module from_elements(GroupPtr group, FieldPtr field, std::size_t dim, std::vector<Matrix> rho);

  const GroupPtr& group() const { return d_->group; }
  const FieldPtr& field() const { return d_->field; }
  std::size_t dim() const { return d_->dim; }
  bool is_zero() const { return d_->dim == 0; }
  const Matrix& rho(std::size_t g) const { return d_->rho[g]; }
  /// rho of each group generator, in generator order.
  std::vector<Matrix> generator_matrices() const;

  /// rho(g) rho(h) = rho(gh) and rho(1) = 1; exhaustive when
  /// |G| <= exhaustive_limit, else on `samples` seeded random pairs.
  bool satisfies_axioms(std::size_t exhaustive_limit = 200, std::size_t samples = 1000) const;

  friend bool operator==(const Module& a, const Module& b);

 private:
  struct Data {
    GroupPtr group;
    FieldPtr field;
    std::size_t dim = 0;
    std::vector<Matrix> rho;
  };
  std::shared_ptr<const Data> d_;
};

bool same_base(const Module& a, const Module& b);

/// M rho_U(g) = rho_W(g) M for every generator g.
bool is_equivariant(const Module& u, const Module& w, const Matrix& m);

Module zero_module(GroupPtr g, FieldPtr f);
Module trivial_module(GroupPtr g, FieldPtr f);
/// Left multiplication on the element basis.
Module regular_module(GroupPtr g, FieldPtr f);
/// Action on the left cosets of h (basis ordered as left_transversal(h)).
Module permutation_module(const Subgroup& h, FieldPtr f);
Module direct_sum(const Module& a, const Module& b);
Module direct_sum(const std::vector<Module>& parts);

/// U restricted to H, as a module over standalone(H).group.
Module restrict(const Module& u, const Subgroup& h);
Module restrict(const Module& u, const Subgroup& h, const StandaloneSubgroup& sh);

/// V (over standalone(H).group) induced to the parent of H. Basis is
/// (t_i, v_k) in transversal-major order, t_i = left_transversal(h)[i].
Module induce(const Module& v, const Subgroup& h);
Module induce(const Module& v, const Subgroup& h, const StandaloneSubgroup& sh);
/// Block-diagonal Ind(phi) for phi: V -> V' over H.
Matrix induce_map(const Matrix& phi, std::size_t index);

/// U_N with the quotient map and the explicit projection and section.
struct Coinvariants {
  Module module;         // over map.target()
  QuotientMap map;       // G -> G/N
  Matrix projection;     // dim(U_N) x dim(U)
  Matrix section;        // dim(U) x dim(U_N), projection * section = 1
};

/// Coinvariants of U by the kernel of `map`, as a module over map.target().
Coinvariants coinvariants(const Module& u, const QuotientMap& map);
/// Coinvariants by a normal subgroup, over the coset-action quotient group.
Coinvariants coinvariants(const Module& u, const Subgroup& n);
/// (alpha)_N for alpha: U -> W, given the coinvariants of both.
Matrix coinvariant_map(const Matrix& alpha, const Coinvariants& cu, const Coinvariants& cw);

/// Q-module pulled back along G -> Q.
Module inflate(const Module& u, const QuotientMap& map);

/// x(V) for V over standalone(H): a module over standalone(xHx^-1) with
/// rho(x h x^-1) = rho_V(h).
Module conjugate_module(const Module& v, const Subgroup& h, std::size_t x);

/// The same module over another numbering of the same set of permutations.
Module reindex(const Module& u, const GroupPtr& target);

Module scalar_extend(const Module& u, const FieldEmbedding& e);

/// The G-stable subspace spanned by the columns of `inclusion`, with
/// `projection` a left inverse (projection * inclusion = 1) that is
/// equivariant. Throws InvalidModule if the span is not invariant.
Module summand_module(const Module& u, const Matrix& inclusion, const Matrix& projection);

/// Basis of Hom_kG(U, W) as W.dim x U.dim matrices.
std::vector<Matrix> hom_space(const Module& u, const Module& w);

struct IsoOptions {
  std::uint64_t seed = 0;
  std::uint64_t budget = 1u << 16;  // exhaustive enumeration cap on q^dimHom
  int random_tries = 64;
};

/// An invertible intertwiner U -> W, or nullopt when U and W are not
/// isomorphic. Throws IsoUndecided when neither a witness nor a proof of
/// non-isomorphism is found within the budget.
std::optional<Matrix> iso_test(const Module& u, const Module& w, const IsoOptions& opt = {});

}  // namespace modrep
