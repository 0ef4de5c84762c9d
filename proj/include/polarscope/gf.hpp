#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace polarscope {

/// A field element: the residue polynomial's coefficient vector read as a
/// base-p integer, constant term least significant. Always in [0, q).
using Element = std::uint32_t;

/// Finite field GF(p^h), p^h <= 2^16.
///
/// Construction builds log/antilog tables against a primitive element, so
/// multiplication and inversion are table lookups. Addition is XOR in
/// characteristic 2, modular for prime fields and a table (or digit loop for
/// large composite fields) otherwise. Instances are immutable and shared via
/// FieldPtr.
class Field {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  /// GF(p^h) reduced modulo the smallest monic irreducible of degree h.
  static std::shared_ptr<const Field> make(std::uint32_t p, std::uint32_t h);

  /// GF(p^h) with a caller-supplied modulus (low-to-high coefficients,
  /// monic, length h+1). Rejects reducible moduli.
  static std::shared_ptr<const Field> with_modulus(std::uint32_t p,
                                                   std::vector<std::uint32_t> modulus);

  std::uint32_t p() const { return p_; }
  std::uint32_t h() const { return h_; }
  std::uint32_t order() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  bool is_prime_field() const { return h_ == 1; }

  Element add(Element a, Element b) const {
    if (p_ == 2) return a ^ b;
    if (h_ == 1) {
      Element s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    if (!add_table_.empty()) return add_table_[a * q_ + b];
    return add_digits(a, b);
  }
  Element neg(Element a) const { return neg_[a]; }
  Element sub(Element a, Element b) const { return add(a, neg_[b]); }
  Element mul(Element a, Element b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  /// Multiplicative inverse; throws InvalidArgument for 0.
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::uint64_t e) const;

  /// x -> x^p.
  Element frobenius(Element a) const { return pow(a, p_); }
  /// Inverse of the Frobenius map, x -> x^(p^(h-1)). In characteristic 2
  /// this is the square root.
  Element frobenius_root(Element a) const;

  /// The involution x -> x^(p^(h/2)) of GF(q^2) over GF(q). Throws
  /// InvalidArgument when h is odd.
  Element conj(Element a) const;
  bool has_conjugation() const { return h_ % 2 == 0; }

  /// Base-p digits of an element (constant term first, length h).
  std::vector<std::uint32_t> digits(Element a) const;
  Element from_digits(std::span<const std::uint32_t> digits) const;

  Element primitive_element() const { return primitive_; }

  bool operator==(const Field& other) const {
    return p_ == other.p_ && h_ == other.h_ && modulus_ == other.modulus_;
  }

 private:
  Field(std::uint32_t p, std::vector<std::uint32_t> modulus);
  Element add_digits(Element a, Element b) const;
  Element mul_slow(Element a, Element b) const;

  std::uint32_t p_ = 0;
  std::uint32_t h_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  Element primitive_ = 1;
  std::vector<Element> exp_;             // length 2(q-1)
  std::vector<std::uint32_t> log_;       // log_[0] unused
  std::vector<Element> neg_;
  std::vector<std::uint16_t> add_table_; // only for small composite odd-characteristic fields
};

using FieldPtr = std::shared_ptr<const Field>;

/// Builds a field; alias of Field::make matching the CLI's (p, h) vocabulary.
FieldPtr field_make(std::uint32_t p, std::uint32_t h);

/// Conjugation x -> x^(p^(h/2)); throws InvalidArgument when h is odd.
Element conj(const Field& field, Element x);

bool is_prime(std::uint32_t n);

/// True when the monic polynomial (low-to-high coefficients) is irreducible
/// over GF(p). Trial division by every monic polynomial of degree <= deg/2.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic);

/// The monic irreducible of degree h whose lower coefficients, read as a
/// base-p integer with the x^(h-1) coefficient most significant, are smallest.
std::vector<std::uint32_t> lowest_irreducible(std::uint32_t p, std::uint32_t h);

}  // namespace polarscope
