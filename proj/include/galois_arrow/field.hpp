#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "galois_arrow/error.hpp"

namespace galois_arrow {

/// Polynomial over a prime field GF(p), coefficients stored low-to-high.
/// The zero polynomial is the empty vector once trimmed.
using Poly = std::vector<std::uint32_t>;

namespace poly {

int degree(const Poly& a);
void trim(Poly& a);
Poly add(const Poly& a, const Poly& b, std::uint32_t p);
Poly sub(const Poly& a, const Poly& b, std::uint32_t p);
Poly mul(const Poly& a, const Poly& b, std::uint32_t p);
Poly mod(Poly a, const Poly& m, std::uint32_t p);
Poly make_monic(Poly a, std::uint32_t p);
/// Monic gcd; gcd(0, 0) is the zero polynomial.
Poly gcd(Poly a, Poly b, std::uint32_t p);
std::string to_string(const Poly& a);

}  // namespace poly

bool is_prime(std::uint64_t value);

/// Irreducibility over GF(p) by the Frobenius gcd test: for every
/// 1 <= i <= deg/2, gcd(x^(p^i) - x, f) must be 1.
/// Throws ZeroPolynomial for the zero polynomial. Constants are not irreducible.
bool is_irreducible(const Poly& f, std::uint32_t p);

/// Modulus text: "1,1,0,1" (coefficients low-to-high) or, for p = 2, a hex
/// bitmask such as "0xB" (bit i is the coefficient of x^i).
Poly parse_modulus(std::string_view text, std::uint32_t p);

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// An element of GF(p^n). The code is the coefficient vector read as a
/// base-p integer, so code 0 is zero, code 1 is one and, for p = 2, the code is
/// the bitmask of the polynomial. Elements hold a non-owning pointer to their
/// field; keep the FieldPtr alive for as long as elements are in use.
class Element {
 public:
  Element() = default;
  Element(const Field* field, std::uint32_t code) : field_(field), code_(code) {}

  const Field* field() const noexcept { return field_; }
  std::uint32_t code() const noexcept { return code_; }
  bool is_zero() const noexcept { return code_ == 0; }
  bool is_one() const noexcept { return code_ == 1; }

  /// Coefficient vector of length n, low-to-high.
  std::vector<std::uint32_t> coeffs() const;

  Element operator+(const Element& other) const;
  Element operator-(const Element& other) const;
  Element operator-() const;
  Element operator*(const Element& other) const;
  Element operator/(const Element& other) const;
  Element& operator+=(const Element& other) { return *this = *this + other; }
  Element& operator-=(const Element& other) { return *this = *this - other; }
  Element& operator*=(const Element& other) { return *this = *this * other; }

  Element inv() const;
  Element square() const { return *this * *this; }
  Element pow(std::uint64_t exponent) const;

  friend bool operator==(const Element& a, const Element& b) noexcept {
    return a.code_ == b.code_ && a.field_ == b.field_;
  }
  friend std::strong_ordering operator<=>(const Element& a, const Element& b) noexcept {
    return a.code_ <=> b.code_;
  }

 private:
  const Field* field_ = nullptr;
  std::uint32_t code_ = 0;
};

/// Square root in characteristic 2: a^(2^(n-1)). Throws OddCharacteristic.
Element sqrt_char2(const Element& a);

/// Throws MixedFields unless both elements belong to the same field.
const Field& common_field(const Element& a, const Element& b);

class Field {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  /// Validates p, n and the modulus (irreducible, monic, degree n). Without a
  /// modulus the built-in default for (p, n) is used, re-validated here.
  static FieldPtr make(std::uint32_t p, std::uint32_t n,
                       std::optional<Poly> modulus = std::nullopt);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return n_; }
  std::uint32_t order() const noexcept { return q_; }
  const Poly& modulus() const noexcept { return modulus_; }

  /// Same characteristic, degree and modulus.
  bool same_as(const Field& other) const noexcept;

  Element zero() const { return {this, 0}; }
  Element one() const { return {this, 1}; }
  Element element(std::uint32_t code) const;
  Element from_int(std::int64_t value) const;
  Element from_coeffs(const Poly& coeffs) const;

  /// All q elements, ordered by code: zero first, one second.
  std::vector<Element> elements() const;

  /// The class of x for n >= 2; for prime fields, the least primitive root.
  Element generator() const;
  /// The primitive element backing the log/antilog tables.
  Element primitive() const { return {this, primitive_}; }

  std::uint32_t add_codes(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t neg_code(std::uint32_t a) const noexcept;
  /// Log/antilog table product.
  std::uint32_t mul_codes(std::uint32_t a, std::uint32_t b) const noexcept;
  /// Polynomial product reduced by the modulus; oracle for mul_codes.
  std::uint32_t mul_codes_reference(std::uint32_t a, std::uint32_t b) const;
  /// Extended Euclid on the coefficient polynomials.
  std::uint32_t inv_code(std::uint32_t a) const;

  Poly to_poly(std::uint32_t code) const;
  std::uint32_t from_poly(const Poly& a) const;

  /// Hex for p = 2 ("a"), decimal for odd p ("7").
  std::string format(const Element& a) const;
  Element parse(std::string_view text) const;

 private:
  Field(std::uint32_t p, std::uint32_t n, Poly modulus);
  void build_tables();

  std::uint32_t p_;
  std::uint32_t n_;
  std::uint32_t q_;
  Poly modulus_;
  std::uint32_t primitive_ = 1;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
};

inline FieldPtr make_field(std::uint32_t p, std::uint32_t n,
                           std::optional<Poly> modulus = std::nullopt) {
  return Field::make(p, n, std::move(modulus));
}

/// Shipped default modulus, or nullopt when (p, n) is outside the table.
std::optional<Poly> default_modulus(std::uint32_t p, std::uint32_t n);

}  // namespace galois_arrow
