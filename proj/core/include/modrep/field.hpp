#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace modrep {

/// A field element in polynomial-basis representation, packed as
/// c0 + c1*p + c2*p^2 + ... (ci the coefficient of x^i, 0 <= ci < p).
using Elem = std::uint32_t;

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

/// GF(p^deg) for p^deg <= 2^16. Immutable once built; shared by pointer.
class FiniteField {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  /// Builds GF(p^deg). Without an explicit modulus the least monic
  /// irreducible polynomial (ordered by its packed lower coefficients) is
  /// used, so construction is deterministic for a given (p, deg).
  /// `modulus` lists coefficients low to high and must have length deg+1.
  static FieldPtr make(unsigned p, unsigned deg = 1,
                       std::optional<std::vector<unsigned>> modulus = std::nullopt);

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return deg_; }
  std::uint32_t order() const { return q_; }
  const std::vector<unsigned>& modulus() const { return modulus_; }
  bool is_prime_field() const { return deg_ == 1; }

  static constexpr Elem zero() { return 0; }
  static constexpr Elem one() { return 1; }

  Elem add(Elem a, Elem b) const {
    if (kind_ == Kind::Binary || kind_ == Kind::BinaryExt) return a ^ b;
    if (kind_ == Kind::Prime) {
      Elem s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    return add_ext(a, b);
  }
  Elem neg(Elem a) const {
    if (kind_ == Kind::Binary || kind_ == Kind::BinaryExt) return a;
    if (kind_ == Kind::Prime) return a == 0 ? 0 : p_ - a;
    return neg_table_[a];
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (kind_ == Kind::Binary) return a & b;
    if (kind_ == Kind::Prime)
      return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  /// Image of an integer in the prime subfield.
  Elem from_int(long long v) const;
  /// The class of x modulo the defining polynomial (equals p for deg > 1).
  Elem generator_class() const { return deg_ == 1 ? 0 : p_; }
  /// A generator of the multiplicative group (least such code).
  Elem primitive_element() const { return primitive_; }

  std::vector<unsigned> coefficients(Elem a) const;
  Elem from_coefficients(std::span<const unsigned> coeffs) const;
  bool contains(Elem a) const { return a < q_; }

  /// y[i] += c * x[i] for i < n. The hot loop of every elimination.
  void axpy(Elem* y, const Elem* x, Elem c, std::size_t n) const;
  void scale(Elem* y, Elem c, std::size_t n) const;

  /// Integer for prime fields, "(c0,c1,...)" otherwise.
  std::string format(Elem a) const;
  /// "GF(p)" or "GF(p^d)".
  std::string name() const;

  bool operator==(const FiniteField& o) const {
    return p_ == o.p_ && deg_ == o.deg_ && modulus_ == o.modulus_;
  }

 private:
  enum class Kind { Binary, Prime, BinaryExt, Extension };

  FiniteField() = default;
  Elem add_ext(Elem a, Elem b) const;
  Elem mul_slow(Elem a, Elem b) const;
  void build_tables();

  unsigned p_ = 2;
  unsigned deg_ = 1;
  std::uint32_t q_ = 2;
  std::vector<unsigned> modulus_;
  Kind kind_ = Kind::Binary;
  Elem primitive_ = 1;
  std::vector<std::uint32_t> log_;
  std::vector<Elem> exp_;
  std::vector<Elem> neg_table_;
  std::vector<std::uint16_t> add_table_;  // q*q, only for small extension fields
};

bool same_field(const FieldPtr& a, const FieldPtr& b);
bool is_prime(unsigned n);

/// A ring homomorphism source -> target fixing the prime field, given by
/// the image of x (the class of the source's defining variable).
class FieldEmbedding {
 public:
  /// Validates that `image_of_generator` is a root of the source modulus and
  /// that the induced map is multiplicative and additive.
  FieldEmbedding(FieldPtr source, FieldPtr target, Elem image_of_generator);

  /// Embedding into `target` using its least root of the source modulus.
  static FieldEmbedding find(FieldPtr source, FieldPtr target);
  static FieldEmbedding identity(FieldPtr field);

  const FieldPtr& source() const { return source_; }
  const FieldPtr& target() const { return target_; }
  Elem image_of_generator() const { return image_; }
  Elem operator()(Elem a) const { return table_[a]; }

 private:
  FieldPtr source_;
  FieldPtr target_;
  Elem image_;
  std::vector<Elem> table_;
};

/// GF(q^d) together with the embedding of `base` into it.
FieldEmbedding extension_of_degree(const FieldPtr& base, unsigned d);

}  // namespace modrep
