#include "polarscope/gf.hpp"

#include <string>

#include "polarscope/error.hpp"

namespace polarscope {

namespace {

using Poly = std::vector<std::uint32_t>;  // low-to-high coefficients

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of f modulo g over GF(p); g must be nonzero after trimming.
Poly poly_mod(Poly f, Poly g, std::uint32_t p) {
  trim(f);
  trim(g);
  const std::uint32_t lead_inv = inverse_mod(g.back(), p);
  while (f.size() >= g.size()) {
    const std::uint64_t factor = static_cast<std::uint64_t>(f.back()) * lead_inv % p;
    const std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) {
      const std::uint64_t sub = factor * g[i] % p;
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - sub) % p);
    }
    trim(f);
  }
  return f;
}

}  // namespace

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic) {
  Poly f(monic.begin(), monic.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t degree = f.size() - 1;
  if (degree == 1) return true;
  // Enumerate monic divisors of degree 1..degree/2.
  for (std::size_t d = 1; d <= degree / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> lowest_irreducible(std::uint32_t p, std::uint32_t h) {
  if (h == 1) return {0, 1};
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < h; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly f(h + 1, 0);
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < h; ++i) {
      f[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    f[h] = 1;
    if (f[0] != 0 && is_irreducible(p, f)) return f;
  }
  throw InvalidArgument("no irreducible polynomial found");  // unreachable for prime p
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t h) {
  if (!is_prime(p)) throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
  if (h == 0) throw InvalidArgument("field extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < h; ++i) {
    q *= p;
    if (q > kMaxOrder) {
      throw InvalidArgument("field GF(" + std::to_string(p) + "^" + std::to_string(h) +
                            ") exceeds the 2^16 size bound");
    }
  }
  return std::shared_ptr<const Field>(new Field(p, lowest_irreducible(p, h)));
}

FieldPtr Field::with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
  trim(modulus);
  if (modulus.size() < 2 || modulus.back() != 1) throw InvalidArgument("modulus must be monic of degree >= 1");
  for (auto c : modulus) {
    if (c >= p) throw InvalidArgument("modulus coefficient out of range");
  }
  const auto h = static_cast<std::uint32_t>(modulus.size() - 1);
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < h; ++i) {
    q *= p;
    if (q > kMaxOrder) throw InvalidArgument("field exceeds the 2^16 size bound");
  }
  if (h == 1) modulus = {0, 1};  // every linear modulus gives the same prime field
  if (!is_irreducible(p, modulus)) throw InvalidArgument("modulus is not irreducible");
  return std::shared_ptr<const Field>(new Field(p, std::move(modulus)));
}

Field::Field(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), h_(static_cast<std::uint32_t>(modulus.size() - 1)), modulus_(std::move(modulus)) {
  q_ = 1;
  for (std::uint32_t i = 0; i < h_; ++i) q_ *= p_;

  neg_.resize(q_);
  for (Element a = 0; a < q_; ++a) {
    auto d = digits(a);
    for (auto& x : d) x = (p_ - x) % p_;
    neg_[a] = from_digits(d);
  }
  if (p_ != 2 && h_ > 1 && q_ <= 256) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (Element a = 0; a < q_; ++a) {
      for (Element b = 0; b < q_; ++b) add_table_[a * q_ + b] = static_cast<std::uint16_t>(add_digits(a, b));
    }
  }

  // Find a primitive element by brute force and build log/antilog tables.
  const std::uint32_t group = q_ - 1;
  exp_.assign(2 * static_cast<std::size_t>(group), 0);
  log_.assign(q_, 0);
  if (group == 1) {
    primitive_ = 1;
    exp_[0] = exp_[1] = 1;
    return;
  }
  for (Element g = 2; g < q_; ++g) {
    Element x = 1;
    std::uint32_t order = 0;
    do {
      x = mul_slow(x, g);
      ++order;
    } while (x != 1 && order <= group);
    if (order != group) continue;
    primitive_ = g;
    x = 1;
    for (std::uint32_t i = 0; i < group; ++i) {
      exp_[i] = exp_[i + group] = x;
      log_[x] = i;
      x = mul_slow(x, g);
    }
    return;
  }
  throw InvalidArgument("field has no primitive element (modulus not irreducible?)");
}

Element Field::add_digits(Element a, Element b) const {
  Element result = 0, place = 1;
  for (std::uint32_t i = 0; i < h_; ++i) {
    const Element s = (a % p_ + b % p_) % p_;
    result += s * place;
    place *= p_;
    a /= p_;
    b /= p_;
  }
  return result;
}

Element Field::mul_slow(Element a, Element b) const {
  const auto da = digits(a);
  const auto db = digits(b);
  Poly prod(2 * h_, 0);
  for (std::uint32_t i = 0; i < h_; ++i) {
    for (std::uint32_t j = 0; j < h_; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_);
    }
  }
  Poly r = poly_mod(prod, modulus_, p_);
  r.resize(h_, 0);
  return from_digits(r);
}

Element Field::inv(Element a) const {
  if (a == 0) throw InvalidArgument("inverse of zero");
  const std::uint32_t group = q_ - 1;
  return exp_[(group - log_[a]) % group];
}

Element Field::pow(Element a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t group = q_ - 1;
  return exp_[static_cast<std::size_t>((static_cast<std::uint64_t>(log_[a]) * (e % group)) % group)];
}

Element Field::frobenius_root(Element a) const {
  std::uint64_t e = 1;
  for (std::uint32_t i = 0; i + 1 < h_; ++i) e *= p_;
  return pow(a, e);
}

Element Field::conj(Element a) const {
  if (h_ % 2 != 0) throw InvalidArgument("conjugation requires an even extension degree");
  std::uint64_t e = 1;
  for (std::uint32_t i = 0; i < h_ / 2; ++i) e *= p_;
  return pow(a, e);
}

std::vector<std::uint32_t> Field::digits(Element a) const {
  std::vector<std::uint32_t> d(h_);
  for (std::uint32_t i = 0; i < h_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

Element Field::from_digits(std::span<const std::uint32_t> digits) const {
  Element result = 0;
  for (std::size_t i = digits.size(); i-- > 0;) result = result * p_ + digits[i];
  return result;
}

FieldPtr field_make(std::uint32_t p, std::uint32_t h) { return Field::make(p, h); }

Element conj(const Field& field, Element x) { return field.conj(x); }

}  // namespace polarscope
