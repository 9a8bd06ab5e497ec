#include "modrep/poly.hpp"

#include "modrep/error.hpp"

namespace modrep {

Poly::Poly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  trim();
}

Poly Poly::constant(FieldPtr field, Elem c) { return Poly(std::move(field), {c}); }

Poly Poly::x(FieldPtr field) { return Poly(std::move(field), {0, 1}); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  Elem inv = field_->inv(c_.back());
  std::vector<Elem> out(c_);
  field_->scale(out.data(), inv, out.size());
  return Poly(field_, std::move(out));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(field_, {});
  std::vector<Elem> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    out[i - 1] = field_->mul(field_->from_int(static_cast<long long>(i)), c_[i]);
  return Poly(field_, std::move(out));
}

Poly operator+(const Poly& a, const Poly& b) {
  const auto& F = a.field_ ? a.field_ : b.field_;
  std::vector<Elem> out(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = F->add(a[i], b[i]);
  return Poly(F, std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) {
  const auto& F = a.field_ ? a.field_ : b.field_;
  std::vector<Elem> out(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = F->sub(a[i], b[i]);
  return Poly(F, std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) {
  const auto& F = a.field_ ? a.field_ : b.field_;
  if (a.is_zero() || b.is_zero()) return Poly(F, {});
  std::vector<Elem> out(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) F->axpy(out.data() + i, b.c_.data(), a.c_[i], b.c_.size());
  return Poly(F, std::move(out));
}

PolyDivision divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) fail(Errc::InternalAssertion, "polynomial division by zero");
  const auto& F = b.field();
  std::vector<Elem> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Poly(F, {}), a};
  std::vector<Elem> q(static_cast<std::size_t>(a.degree() - db + 1), 0);
  const Elem inv_lead = F->inv(b.lead());
  for (int k = a.degree(); k >= db; --k) {
    Elem c = r[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Elem t = F->mul(c, inv_lead);
    q[static_cast<std::size_t>(k - db)] = t;
    F->axpy(r.data() + (k - db), b.coeffs().data(), F->neg(t), b.coeffs().size());
  }
  r.resize(static_cast<std::size_t>(db));
  return {Poly(F, std::move(q)), Poly(F, std::move(r))};
}

Poly mod(const Poly& a, const Poly& m) { return divmod(a, m).remainder; }

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return mod(a * b, m); }

Poly powmod(const Poly& base, std::uint64_t e, const Poly& m) {
  Poly result = mod(Poly::constant(m.field(), 1), m);
  Poly b = mod(base, m);
  while (e) {
    if (e & 1) result = mulmod(result, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return result;
}

bool is_irreducible_by_trial_division(const Poly& f) {
  const int d = f.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  const auto& F = f.field();
  const std::uint64_t q = F->order();
  for (int k = 1; k <= d / 2; ++k) {
    std::uint64_t count = 1;
    for (int i = 0; i < k; ++i) count *= q;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<Elem> g(static_cast<std::size_t>(k + 1));
      std::uint64_t c = code;
      for (int i = 0; i < k; ++i) {
        g[static_cast<std::size_t>(i)] = static_cast<Elem>(c % q);
        c /= q;
      }
      g[static_cast<std::size_t>(k)] = 1;
      if (mod(f, Poly(F, std::move(g))).is_zero()) return false;
    }
  }
  return true;
}

std::vector<std::pair<int, Poly>> distinct_degree_factors(const Poly& f) {
  const auto& F = f.field();
  const std::uint64_t q = F->order();
  std::vector<std::pair<int, Poly>> out;
  Poly h = f.monic();
  Poly xp = Poly::x(F);
  for (int d = 1; h.degree() > 0; ++d) {
    if (h.degree() < 2 * d) {
      out.emplace_back(h.degree(), h);
      break;
    }
    xp = powmod(mod(xp, h), q, h);
    Poly g = gcd(h, xp - Poly::x(F));
    if (g.degree() > 0) {
      out.emplace_back(d, g);
      h = divmod(h, g).quotient;
      for (Poly c = gcd(h, g); c.degree() > 0; c = gcd(h, g)) h = divmod(h, c).quotient;
    }
  }
  return out;
}

Poly equal_degree_split(const Poly& g, int d, std::mt19937_64& rng) {
  const auto& F = g.field();
  const std::uint64_t q = F->order();
  const int n = g.degree();
  check(n > d && d > 0, "equal-degree split needs a reducible input");
  std::uniform_int_distribution<Elem> pick(0, F->order() - 1);
  for (int attempt = 0; attempt < 256; ++attempt) {
    std::vector<Elem> a(static_cast<std::size_t>(n));
    for (auto& c : a) c = pick(rng);
    Poly ap(F, std::move(a));
    if (ap.degree() < 1) continue;
    Poly candidate;
    if (F->characteristic() == 2) {
      // absolute trace from GF(q^d) down to GF(2)
      const int steps = static_cast<int>(F->degree()) * d;
      Poly t = mod(ap, g), acc = t;
      for (int i = 1; i < steps; ++i) {
        t = mulmod(t, t, g);
        acc = acc + t;
      }
      candidate = acc;
    } else {
      // a^((q^d - 1)/2) = (a^(1 + q + ... + q^(d-1)))^((q-1)/2)
      Poly t = mod(ap, g), norm = t;
      for (int i = 1; i < d; ++i) {
        t = powmod(t, q, g);
        norm = mulmod(norm, t, g);
      }
      candidate = powmod(norm, (q - 1) / 2, g) - Poly::constant(F, 1);
    }
    Poly h = gcd(g, candidate);
    if (h.degree() > 0 && h.degree() < n) return h;
  }
  fail(Errc::InternalAssertion, "equal-degree factorization did not split");
}

Poly coprime_factor(const Poly& f, std::mt19937_64& rng) {
  auto parts = distinct_degree_factors(f);
  if (parts.size() >= 2) return parts.front().second;
  if (parts.size() == 1 && parts.front().second.degree() > parts.front().first)
    return equal_degree_split(parts.front().second, parts.front().first, rng);
  return Poly(f.field(), {});
}

}  // namespace modrep
