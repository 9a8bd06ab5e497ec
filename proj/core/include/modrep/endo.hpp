#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "modrep/linalg.hpp"
#include "modrep/module.hpp"

namespace modrep {

/// E = End_kG(U) with its structure constants and Jacobson radical.
class EndAlgebra {
 public:
  explicit EndAlgebra(Module u);

  const Module& module() const { return u_; }
  const FieldPtr& field() const { return u_.field(); }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Matrix>& basis() const { return basis_; }
  /// basis[i] * basis[j] = sum_k c(i,j,k) basis[k]
  Elem structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    return sc_[(i * dim() + j) * dim() + k];
  }
  std::vector<Elem> multiply(const std::vector<Elem>& a, const std::vector<Elem>& b) const;
  Matrix element(const std::vector<Elem>& coords) const;
  std::optional<std::vector<Elem>> coordinates(const Matrix& m) const;
  const std::vector<Elem>& identity_coordinates() const { return one_; }

  /// Radical basis as coordinate vectors (columns of a dim x r matrix).
  const Matrix& radical() const { return radical_; }
  std::size_t radical_dim() const { return radical_.cols(); }
  std::vector<Matrix> radical_matrices() const;
  bool radical_contains(const Matrix& m) const;

  /// E/R is a field. False for the zero module.
  bool is_local() const { return local_; }
  /// [E/R : k] when local, else 0.
  std::size_t quotient_field_degree() const { return local_ ? dim() - radical_dim() : 0; }

 private:
  void compute_radical();
  void compute_locality();

  Module u_;
  std::vector<Matrix> basis_;
  std::optional<SpanCoordinates> coords_;
  std::vector<Elem> sc_;
  std::vector<Elem> one_;
  Matrix radical_;
  bool local_ = false;
};

/// Radical by brute force: x is in it iff x*y is nilpotent for every y.
/// Throws TooLarge when q^dim E exceeds `max_elements`.
Matrix radical_oracle(const EndAlgebra& e, std::uint64_t max_elements = 1000000);

struct Summand {
  Module module;
  Matrix inclusion;   // U.dim x module.dim
  Matrix projection;  // module.dim x U.dim
  std::size_t iso_class = 0;
};

struct Decomposition {
  std::vector<Summand> summands;
  /// One entry per isomorphism class, in order of first appearance.
  std::vector<std::size_t> multiplicities;
  std::size_t class_count() const { return multiplicities.size(); }
};

/// Krull-Schmidt decomposition into summands with local endomorphism rings.
/// Summands are grouped by iso class, classes in order of first appearance.
Decomposition decompose(const Module& u, std::uint64_t seed = 0);

/// For indecomposable X, Y: an isomorphism X -> Y when one exists.
std::optional<Matrix> indecomposable_iso(const Module& x, const Module& y);

/// Exact isomorphism test through Krull-Schmidt: same summands with the
/// same multiplicities.
bool isomorphic(const Module& a, const Module& b, std::uint64_t seed = 0);

/// Whether some summand of `w` is isomorphic to the indecomposable `x`.
bool is_summand_of(const Module& x, const Module& w, std::uint64_t seed = 0);

/// F: U -> W and G: W -> U with G F = 1 when U is isomorphic to a direct
/// summand of W, matching summands through Krull-Schmidt.
struct SummandMaps {
  Matrix into;
  Matrix back;
};
std::optional<SummandMaps> summand_maps(const Module& u, const Module& w, std::uint64_t seed = 0);

struct AbsoluteIndecomposability {
  bool absolutely_indecomposable = true;
  std::size_t field_degree = 1;          // [E/R : k]
  FieldPtr splitting_field;              // set when not absolutely indecomposable
  std::optional<Decomposition> split;    // decomposition over splitting_field
};

/// Throws NotIndecomposable unless End(U) is local.
AbsoluteIndecomposability is_absolutely_indecomposable(const Module& u, std::uint64_t seed = 0);

/// U indecomposable and U | V + W through f: U -> V+W, g: V+W -> U with
/// g f = 1. Returns which of V (0) or W (1) U divides, with maps.
struct ExchangeResult {
  int side = 0;
  Matrix into;  // U -> V or W
  Matrix back;  // V or W -> U, back * into = 1
};
ExchangeResult exchange(const Module& u, const Module& v, const Module& w, const Matrix& f, const Matrix& g);

}  // namespace modrep
