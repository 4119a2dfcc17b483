#include "galois_arrow/field.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace galois_arrow {
namespace {

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exponent, std::uint32_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base % p;
    base = base * base % p;
    exponent >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

// p is prime, so Fermat gives the inverse.
std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) fail(ErrorCode::DivisionByZero, "inverse of zero in GF(p)");
  return mod_pow(a, p - 2, p);
}

void divmod(const Poly& a, const Poly& m, std::uint32_t p, Poly& quotient, Poly& remainder) {
  const int dm = poly::degree(m);
  if (dm < 0) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  remainder = a;
  poly::trim(remainder);
  const int da = poly::degree(remainder);
  quotient.assign(da >= dm ? static_cast<std::size_t>(da - dm + 1) : 0, 0);
  const std::uint64_t lead_inv = mod_inv(m[dm], p);
  for (int i = da; i >= dm; --i) {
    const std::uint64_t coef = remainder[i] * lead_inv % p;
    if (coef == 0) continue;
    quotient[i - dm] = static_cast<std::uint32_t>(coef);
    for (int j = 0; j <= dm; ++j) {
      const std::uint64_t sub = coef * m[j] % p;
      remainder[i - dm + j] = static_cast<std::uint32_t>((remainder[i - dm + j] + p - sub) % p);
    }
  }
  poly::trim(quotient);
  poly::trim(remainder);
}

Poly powmod(Poly base, std::uint64_t exponent, const Poly& m, std::uint32_t p) {
  Poly result{1};
  base = poly::mod(std::move(base), m, p);
  while (exponent > 0) {
    if (exponent & 1u) result = poly::mod(poly::mul(result, base, p), m, p);
    base = poly::mod(poly::mul(base, base, p), m, p);
    exponent >>= 1;
  }
  return poly::mod(std::move(result), m, p);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t value) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= value; ++d) {
    if (value % d == 0) {
      out.push_back(d);
      while (value % d == 0) value /= d;
    }
  }
  if (value > 1) out.push_back(value);
  return out;
}

}  // namespace

namespace poly {

int degree(const Poly& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
    if (a[i] != 0) return i;
  }
  return -1;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly add(const Poly& a, const Poly& b, std::uint32_t p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::uint64_t x = i < a.size() ? a[i] : 0;
    const std::uint64_t y = i < b.size() ? b[i] : 0;
    out[i] = static_cast<std::uint32_t>((x + y) % p);
  }
  trim(out);
  return out;
}

Poly sub(const Poly& a, const Poly& b, std::uint32_t p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::uint64_t x = i < a.size() ? a[i] : 0;
    const std::uint64_t y = i < b.size() ? b[i] % p : 0;
    out[i] = static_cast<std::uint32_t>((x + p - y) % p);
  }
  trim(out);
  return out;
}

Poly mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = static_cast<std::uint32_t>(
          (out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  trim(out);
  return out;
}

Poly mod(Poly a, const Poly& m, std::uint32_t p) {
  Poly quotient, remainder;
  divmod(a, m, p, quotient, remainder);
  return remainder;
}

Poly make_monic(Poly a, std::uint32_t p) {
  trim(a);
  if (a.empty()) return a;
  const std::uint64_t lead_inv = mod_inv(a.back(), p);
  for (auto& c : a) c = static_cast<std::uint32_t>(c * lead_inv % p);
  return a;
}

Poly gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a), p);
}

std::string to_string(const Poly& a) {
  std::ostringstream out;
  bool first = true;
  for (int i = degree(a); i >= 0; --i) {
    if (a[i] == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (a[i] != 1 || i == 0) out << a[i];
    if (i >= 1) out << "x";
    if (i >= 2) out << "^" << i;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace poly

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  for (std::uint64_t d = 2; d * d <= value; ++d) {
    if (value % d == 0) return false;
  }
  return true;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  Poly g = f;
  for (auto& c : g) c %= p;
  poly::trim(g);
  if (g.empty()) fail(ErrorCode::ZeroPolynomial, "irreducibility test of the zero polynomial");
  const int d = poly::degree(g);
  if (d == 0) return false;
  if (d == 1) return true;
  g = poly::make_monic(std::move(g), p);
  const Poly x{0, 1};
  Poly h = poly::mod(x, g, p);
  for (int i = 1; i <= d / 2; ++i) {
    h = powmod(h, p, g, p);
    const Poly common = poly::gcd(poly::sub(h, x, p), g, p);
    if (poly::degree(common) >= 1) return false;
  }
  return true;
}

Poly parse_modulus(std::string_view text, std::uint32_t p) {
  auto bad = [&]() -> Poly {
    fail(ErrorCode::InvalidModulus, "cannot parse modulus '" + std::string(text) + "'");
  };
  if (text.starts_with("0x") || text.starts_with("0X")) {
    if (p != 2) fail(ErrorCode::InvalidModulus, "hex modulus only allowed for p = 2");
    std::uint64_t mask = 0;
    const auto digits = text.substr(2);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), mask, 16);
    if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) return bad();
    Poly out;
    for (; mask != 0; mask >>= 1) out.push_back(static_cast<std::uint32_t>(mask & 1u));
    return out;
  }
  Poly out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const auto token = text.substr(start, comma - start);
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) return bad();
    if (value >= p) fail(ErrorCode::InvalidModulus, "modulus coefficient out of range for GF(p)");
    out.push_back(value);
    start = comma + 1;
  }
  return out;
}

std::optional<Poly> default_modulus(std::uint32_t p, std::uint32_t n) {
  if (n == 1 && (p == 2 || p == 3 || p == 5 || p == 7)) return Poly{0, 1};
  if (p != 2) return std::nullopt;
  // Bitmasks of primitive polynomials over GF(2).
  static constexpr std::uint32_t kMasks[] = {0, 0x3, 0x7, 0xB, 0x13, 0x25, 0x43, 0x83, 0x11D};
  if (n < 2 || n > 8) return std::nullopt;
  Poly out;
  for (std::uint32_t mask = kMasks[n]; mask != 0; mask >>= 1) out.push_back(mask & 1u);
  return out;
}

// ---------------------------------------------------------------------------
// Element

std::vector<std::uint32_t> Element::coeffs() const {
  if (field_ == nullptr) fail(ErrorCode::MixedFields, "element without a field");
  Poly out = field_->to_poly(code_);
  out.resize(field_->degree(), 0);
  return out;
}

const Field& common_field(const Element& a, const Element& b) {
  if (a.field() == nullptr || b.field() == nullptr) {
    fail(ErrorCode::MixedFields, "element without a field");
  }
  if (a.field() != b.field() && !a.field()->same_as(*b.field())) {
    fail(ErrorCode::MixedFields, "elements belong to different fields");
  }
  return *a.field();
}

Element Element::operator+(const Element& other) const {
  const Field& f = common_field(*this, other);
  return {&f, f.add_codes(code_, other.code_)};
}

Element Element::operator-(const Element& other) const {
  const Field& f = common_field(*this, other);
  return {&f, f.add_codes(code_, f.neg_code(other.code_))};
}

Element Element::operator-() const {
  if (field_ == nullptr) fail(ErrorCode::MixedFields, "element without a field");
  return {field_, field_->neg_code(code_)};
}

Element Element::operator*(const Element& other) const {
  const Field& f = common_field(*this, other);
  return {&f, f.mul_codes(code_, other.code_)};
}

Element Element::operator/(const Element& other) const {
  common_field(*this, other);
  return *this * other.inv();
}

Element Element::inv() const {
  if (field_ == nullptr) fail(ErrorCode::MixedFields, "element without a field");
  return {field_, field_->inv_code(code_)};
}

Element Element::pow(std::uint64_t exponent) const {
  if (field_ == nullptr) fail(ErrorCode::MixedFields, "element without a field");
  Element result = field_->one();
  Element base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    base = base * base;
    exponent >>= 1;
  }
  return result;
}

Element sqrt_char2(const Element& a) {
  if (a.field() == nullptr) fail(ErrorCode::MixedFields, "element without a field");
  if (a.field()->characteristic() != 2) {
    fail(ErrorCode::OddCharacteristic, "sqrt_char2 requires characteristic 2");
  }
  Element root = a;
  for (std::uint32_t i = 1; i < a.field()->degree(); ++i) root = root.square();
  return root;
}

// ---------------------------------------------------------------------------
// Field

Field::Field(std::uint32_t p, std::uint32_t n, Poly modulus)
    : p_(p), n_(n), q_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < n_; ++i) q_ *= p_;
  build_tables();
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t n, std::optional<Poly> modulus) {
  if (!is_prime(p)) {
    fail(ErrorCode::CompositeCharacteristic, "characteristic " + std::to_string(p) + " is not prime");
  }
  if (n < 1) fail(ErrorCode::UnsupportedField, "extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    q *= p;
    if (q > kMaxOrder) fail(ErrorCode::FieldTooLarge, "field order exceeds 2^16");
  }
  if (!modulus) {
    modulus = default_modulus(p, n);
    if (!modulus) {
      fail(ErrorCode::NoDefaultModulus,
           "no default modulus for p=" + std::to_string(p) + ", n=" + std::to_string(n));
    }
  }
  Poly m = *modulus;
  for (auto c : m) {
    if (c >= p) fail(ErrorCode::InvalidModulus, "modulus coefficient out of range for GF(p)");
  }
  poly::trim(m);
  if (poly::degree(m) != static_cast<int>(n)) {
    fail(ErrorCode::InvalidModulus, "modulus " + poly::to_string(m) + " does not have degree " +
                                        std::to_string(n));
  }
  if (m.back() != 1) fail(ErrorCode::InvalidModulus, "modulus must be monic");
  if (!is_irreducible(m, p)) {
    fail(ErrorCode::ReducibleModulus, "modulus " + poly::to_string(m) + " is reducible over GF(" +
                                          std::to_string(p) + ")");
  }
  return FieldPtr(new Field(p, n, std::move(m)));
}

void Field::build_tables() {
  const std::uint32_t group = q_ - 1;
  const auto factors = prime_factors(group);
  auto slow_pow = [&](std::uint32_t base, std::uint64_t e) {
    std::uint32_t result = 1;
    while (e > 0) {
      if (e & 1u) result = mul_codes_reference(result, base);
      base = mul_codes_reference(base, base);
      e >>= 1;
    }
    return result;
  };
  for (std::uint32_t c = 1; c < q_; ++c) {
    const bool primitive = std::all_of(factors.begin(), factors.end(),
                                       [&](std::uint64_t r) { return slow_pow(c, group / r) != 1; });
    if (primitive) {
      primitive_ = c;
      break;
    }
  }
  exp_.assign(2 * static_cast<std::size_t>(group), 0);
  log_.assign(q_, 0);
  std::uint32_t value = 1;
  for (std::uint32_t i = 0; i < group; ++i) {
    exp_[i] = value;
    exp_[i + group] = value;
    log_[value] = i;
    value = mul_codes_reference(value, primitive_);
  }
}

bool Field::same_as(const Field& other) const noexcept {
  return this == &other || (p_ == other.p_ && n_ == other.n_ && modulus_ == other.modulus_);
}

Element Field::element(std::uint32_t code) const {
  if (code >= q_) {
    fail(ErrorCode::UsageError, "element code " + std::to_string(code) + " outside GF(" +
                                    std::to_string(q_) + ")");
  }
  return {this, code};
}

Element Field::from_int(std::int64_t value) const {
  const std::int64_t p = p_;
  return {this, static_cast<std::uint32_t>(((value % p) + p) % p)};
}

Element Field::from_coeffs(const Poly& coeffs) const {
  Poly reduced = coeffs;
  for (auto& c : reduced) c %= p_;
  return {this, from_poly(poly::mod(std::move(reduced), modulus_, p_))};
}

std::vector<Element> Field::elements() const {
  std::vector<Element> out;
  out.reserve(q_);
  for (std::uint32_t c = 0; c < q_; ++c) out.emplace_back(this, c);
  return out;
}

Element Field::generator() const {
  if (n_ >= 2) return {this, p_};
  return {this, primitive_};
}

std::uint32_t Field::add_codes(std::uint32_t a, std::uint32_t b) const noexcept {
  if (p_ == 2) return a ^ b;
  std::uint32_t out = 0;
  std::uint32_t place = 1;
  for (std::uint32_t i = 0; i < n_; ++i) {
    out += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return out;
}

std::uint32_t Field::neg_code(std::uint32_t a) const noexcept {
  if (p_ == 2) return a;
  std::uint32_t out = 0;
  std::uint32_t place = 1;
  for (std::uint32_t i = 0; i < n_; ++i) {
    out += ((p_ - a % p_) % p_) * place;
    a /= p_;
    place *= p_;
  }
  return out;
}

std::uint32_t Field::mul_codes(std::uint32_t a, std::uint32_t b) const noexcept {
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

std::uint32_t Field::mul_codes_reference(std::uint32_t a, std::uint32_t b) const {
  return from_poly(poly::mod(poly::mul(to_poly(a), to_poly(b), p_), modulus_, p_));
}

std::uint32_t Field::inv_code(std::uint32_t a) const {
  if (a == 0) fail(ErrorCode::DivisionByZero, "inverse of zero");
  // Invariant: s_i * a == r_i (mod modulus).
  Poly r0 = modulus_, r1 = to_poly(a);
  Poly s0, s1{1};
  while (!r1.empty()) {
    Poly quotient, remainder;
    divmod(r0, r1, p_, quotient, remainder);
    Poly s2 = poly::sub(s0, poly::mul(quotient, s1, p_), p_);
    r0 = std::move(r1);
    r1 = std::move(remainder);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant because the modulus is irreducible.
  const std::uint64_t scale = mod_inv(r0[0], p_);
  for (auto& c : s0) c = static_cast<std::uint32_t>(c * scale % p_);
  return from_poly(poly::mod(std::move(s0), modulus_, p_));
}

Poly Field::to_poly(std::uint32_t code) const {
  Poly out;
  while (code != 0) {
    out.push_back(code % p_);
    code /= p_;
  }
  return out;
}

std::uint32_t Field::from_poly(const Poly& a) const {
  std::uint32_t code = 0;
  for (std::size_t i = a.size(); i-- > 0;) code = code * p_ + a[i];
  return code;
}

std::string Field::format(const Element& a) const {
  std::ostringstream out;
  if (p_ == 2) {
    out << std::hex << a.code();
  } else {
    out << a.code();
  }
  return out.str();
}

Element Field::parse(std::string_view text) const {
  int base = 10;
  if (p_ == 2) {
    base = 16;
    if (text.starts_with("0x") || text.starts_with("0X")) text.remove_prefix(2);
  }
  std::uint32_t code = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), code, base);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    fail(ErrorCode::UsageError, "cannot parse field element '" + std::string(text) + "'");
  }
  return element(code);
}

}  // namespace galois_arrow
