#include "modrep/field.hpp"

#include <sstream>

#include "modrep/error.hpp"
#include "modrep/poly.hpp"

namespace modrep {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

std::vector<unsigned> prime_factors(std::uint32_t n) {
  std::vector<unsigned> out;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Poly modulus_poly(const FieldPtr& prime_field, const std::vector<unsigned>& coeffs) {
  std::vector<Elem> c(coeffs.begin(), coeffs.end());
  return Poly(prime_field, std::move(c));
}

}  // namespace

FieldPtr FiniteField::make(unsigned p, unsigned deg, std::optional<std::vector<unsigned>> modulus) {
  if (!is_prime(p)) fail(Errc::NonPrimeP, std::to_string(p) + " is not prime");
  if (deg == 0) fail(Errc::OrderTooLarge, "extension degree must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < deg; ++i) {
    q *= p;
    if (q > kMaxOrder) fail(Errc::OrderTooLarge, "field order exceeds 2^16");
  }

  auto field = std::shared_ptr<FiniteField>(new FiniteField());
  field->p_ = p;
  field->deg_ = deg;
  field->q_ = static_cast<std::uint32_t>(q);

  if (deg == 1) {
    if (modulus && (*modulus != std::vector<unsigned>{0, 1}))
      fail(Errc::ReducibleModulus, "prime fields use the modulus x");
    field->modulus_ = {0, 1};
    field->kind_ = p == 2 ? Kind::Binary : Kind::Prime;
    field->build_tables();
    return field;
  }

  FieldPtr prime_field = make(p, 1);
  if (modulus) {
    const auto& m = *modulus;
    if (m.size() != deg + 1 || m.back() != 1)
      fail(Errc::ReducibleModulus, "modulus must be monic of the field degree");
    for (unsigned c : m)
      if (c >= p) fail(Errc::ReducibleModulus, "modulus coefficient out of range");
    if (!is_irreducible_by_trial_division(modulus_poly(prime_field, m)))
      fail(Errc::ReducibleModulus, "modulus is reducible over GF(" + std::to_string(p) + ")");
    field->modulus_ = m;
  } else {
    std::uint64_t lower = 1;
    for (unsigned i = 0; i < deg; ++i) lower *= p;
    for (std::uint64_t code = 0; code < lower; ++code) {
      std::vector<unsigned> m(deg + 1);
      std::uint64_t c = code;
      for (unsigned i = 0; i < deg; ++i) {
        m[i] = static_cast<unsigned>(c % p);
        c /= p;
      }
      m[deg] = 1;
      if (m[0] == 0) continue;
      if (is_irreducible_by_trial_division(modulus_poly(prime_field, m))) {
        field->modulus_ = std::move(m);
        break;
      }
    }
    check(!field->modulus_.empty(), "no irreducible polynomial found");
  }
  field->kind_ = p == 2 ? Kind::BinaryExt : Kind::Extension;
  field->build_tables();
  return field;
}

Elem FiniteField::add_ext(Elem a, Elem b) const {
  if (!add_table_.empty()) return add_table_[a * q_ + b];
  Elem out = 0;
  Elem place = 1;
  for (unsigned i = 0; i < deg_; ++i) {
    out += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return out;
}

Elem FiniteField::mul_slow(Elem a, Elem b) const {
  auto ca = coefficients(a);
  auto cb = coefficients(b);
  std::vector<unsigned> prod(2 * deg_ - 1, 0);
  for (unsigned i = 0; i < deg_; ++i)
    for (unsigned j = 0; j < deg_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
  for (unsigned k = 2 * deg_ - 1; k-- > deg_;) {
    unsigned c = prod[k];
    if (c == 0) continue;
    // x^deg = -(m_0 + ... + m_{deg-1} x^{deg-1})
    for (unsigned i = 0; i < deg_; ++i)
      prod[k - deg_ + i] = (prod[k - deg_ + i] + (p_ - modulus_[i]) % p_ * c) % p_;
    prod[k] = 0;
  }
  prod.resize(deg_);
  return from_coefficients(prod);
}

void FiniteField::build_tables() {
  if (kind_ == Kind::Extension) {
    neg_table_.resize(q_);
    for (Elem a = 0; a < q_; ++a) {
      auto c = coefficients(a);
      for (auto& x : c) x = (p_ - x) % p_;
      neg_table_[a] = from_coefficients(c);
    }
    if (q_ <= 256) {
      add_table_.resize(static_cast<std::size_t>(q_) * q_);
      for (Elem a = 0; a < q_; ++a)
        for (Elem b = 0; b < q_; ++b) {
          auto ca = coefficients(a);
          auto cb = coefficients(b);
          for (unsigned i = 0; i < deg_; ++i) ca[i] = (ca[i] + cb[i]) % p_;
          add_table_[a * q_ + b] = static_cast<std::uint16_t>(from_coefficients(ca));
        }
    }
  }

  const auto factors = prime_factors(q_ - 1);
  auto slow_pow = [&](Elem a, std::uint64_t e) {
    Elem result = 1;
    while (e) {
      if (e & 1) result = deg_ == 1 ? static_cast<Elem>(static_cast<std::uint64_t>(result) * a % p_)
                                    : mul_slow(result, a);
      a = deg_ == 1 ? static_cast<Elem>(static_cast<std::uint64_t>(a) * a % p_) : mul_slow(a, a);
      e >>= 1;
    }
    return result;
  };
  primitive_ = 1;
  if (q_ > 2) {
    for (Elem g = 2; g < q_; ++g) {
      bool ok = true;
      for (unsigned r : factors)
        if (slow_pow(g, (q_ - 1) / r) == 1) {
          ok = false;
          break;
        }
      if (ok) {
        primitive_ = g;
        break;
      }
    }
  }

  if (deg_ > 1) {
    exp_.assign(2 * static_cast<std::size_t>(q_), 0);
    log_.assign(q_, 0);
    Elem x = 1;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
      exp_[i] = x;
      exp_[i + q_ - 1] = x;
      log_[x] = i;
      x = mul_slow(x, primitive_);
    }
  }
}

Elem FiniteField::inv(Elem a) const {
  if (a == 0) fail(Errc::InternalAssertion, "inverse of zero");
  if (deg_ == 1) return pow(a, p_ - 2);
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elem FiniteField::pow(Elem a, std::uint64_t e) const {
  Elem result = 1;
  while (e) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Elem FiniteField::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

std::vector<unsigned> FiniteField::coefficients(Elem a) const {
  std::vector<unsigned> c(deg_);
  for (unsigned i = 0; i < deg_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

Elem FiniteField::from_coefficients(std::span<const unsigned> coeffs) const {
  Elem out = 0;
  Elem place = 1;
  for (std::size_t i = 0; i < coeffs.size() && i < deg_; ++i) {
    out += (coeffs[i] % p_) * place;
    place *= p_;
  }
  return out;
}

void FiniteField::axpy(Elem* y, const Elem* x, Elem c, std::size_t n) const {
  if (c == 0) return;
  switch (kind_) {
    case Kind::Binary:
      for (std::size_t i = 0; i < n; ++i) y[i] ^= x[i];
      return;
    case Kind::Prime: {
      const std::uint64_t cc = c;
      for (std::size_t i = 0; i < n; ++i)
        y[i] = static_cast<Elem>((y[i] + cc * x[i]) % p_);
      return;
    }
    case Kind::BinaryExt: {
      const std::uint32_t lc = log_[c];
      for (std::size_t i = 0; i < n; ++i)
        if (x[i]) y[i] ^= exp_[lc + log_[x[i]]];
      return;
    }
    case Kind::Extension: {
      const std::uint32_t lc = log_[c];
      for (std::size_t i = 0; i < n; ++i)
        if (x[i]) y[i] = add_ext(y[i], exp_[lc + log_[x[i]]]);
      return;
    }
  }
}

void FiniteField::scale(Elem* y, Elem c, std::size_t n) const {
  for (std::size_t i = 0; i < n; ++i) y[i] = mul(y[i], c);
}

std::string FiniteField::format(Elem a) const {
  if (deg_ == 1) return std::to_string(a);
  std::ostringstream os;
  os << '(';
  auto c = coefficients(a);
  for (unsigned i = 0; i < deg_; ++i) os << (i ? "," : "") << c[i];
  os << ')';
  return os.str();
}

std::string FiniteField::name() const {
  if (deg_ == 1) return "GF(" + std::to_string(p_) + ")";
  return "GF(" + std::to_string(p_) + "^" + std::to_string(deg_) + ")";
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  return a == b || (a && b && *a == *b);
}

FieldEmbedding::FieldEmbedding(FieldPtr source, FieldPtr target, Elem image_of_generator)
    : source_(std::move(source)), target_(std::move(target)), image_(image_of_generator) {
  const auto& S = *source_;
  const auto& T = *target_;
  if (S.characteristic() != T.characteristic() || T.degree() % S.degree() != 0)
    fail(Errc::FieldMismatch, S.name() + " does not embed in " + T.name());
  if (!T.contains(image_)) fail(Errc::FieldMismatch, "generator image outside target field");

  // image must be a root of the source modulus
  Elem value = 0;
  const auto& m = S.modulus();
  for (std::size_t i = m.size(); i-- > 0;) value = T.add(T.mul(value, image_), T.from_int(m[i]));
  if (value != 0) fail(Errc::FieldMismatch, "generator image is not a root of the source modulus");

  table_.resize(S.order());
  for (Elem a = 0; a < S.order(); ++a) {
    auto c = S.coefficients(a);
    Elem v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = T.add(T.mul(v, image_), T.from_int(c[i]));
    table_[a] = v;
  }

  // homomorphism check: exhaustive on small sources, sampled on the rest
  const std::uint32_t q = S.order();
  const std::uint32_t step = q <= 256 ? 1 : q / 97 + 1;
  for (Elem a = 0; a < q; a += step)
    for (Elem b = 0; b < q; b += step) {
      if (table_[S.mul(a, b)] != T.mul(table_[a], table_[b]) ||
          table_[S.add(a, b)] != T.add(table_[a], table_[b]))
        fail(Errc::FieldMismatch, "map is not a ring homomorphism");
    }
}

FieldEmbedding FieldEmbedding::find(FieldPtr source, FieldPtr target) {
  const auto& S = *source;
  const auto& T = *target;
  if (S.characteristic() != T.characteristic() || T.degree() % S.degree() != 0)
    fail(Errc::FieldMismatch, S.name() + " does not embed in " + T.name());
  const auto& m = S.modulus();
  for (Elem r = 0; r < T.order(); ++r) {
    Elem value = 0;
    for (std::size_t i = m.size(); i-- > 0;) value = T.add(T.mul(value, r), T.from_int(m[i]));
    if (value == 0) return FieldEmbedding(source, target, r);
  }
  fail(Errc::FieldMismatch, "no root of the source modulus in the target field");
}

FieldEmbedding FieldEmbedding::identity(FieldPtr field) {
  Elem g = field->generator_class();
  return FieldEmbedding(field, field, g);
}

FieldEmbedding extension_of_degree(const FieldPtr& base, unsigned d) {
  auto big = FiniteField::make(base->characteristic(), base->degree() * d);
  return FieldEmbedding::find(base, big);
}

}  // namespace modrep
