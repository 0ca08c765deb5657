#include "schemoid/field.hpp"

#include "schemoid/error.hpp"

namespace schemoid {

namespace {

bool is_prime_number(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t mod_of(const mpz_class& v, std::uint32_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  // The SIMD elimination kernel needs p * p to fit comfortably in 32 bits.
  if (!is_prime_number(p) || p >= (1u << 15))
    throw StructuralError("field characteristic must be a prime below 32768, got " +
                          std::to_string(p));
  return Field(p);
}

Field Field::parse(const std::string& name) {
  if (name == "Q") return rationals();
  if (name.size() >= 2 && name[0] == 'F') {
    std::uint32_t p = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
      if (name[i] < '0' || name[i] > '9' || p > 100000)
        throw ParseError("unknown field '" + name + "'");
      p = p * 10 + static_cast<std::uint32_t>(name[i] - '0');
    }
    if (!is_prime_number(p)) throw ParseError("unknown field '" + name + "'");
    return prime(p);
  }
  throw ParseError("unknown field '" + name + "' (expected Q or Fp)");
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

Scalar Field::from_int(long v) const { return normalize(Scalar(v)); }

Scalar Field::normalize(const Scalar& v) const {
  if (p_ == 0) {
    Scalar r = v;
    r.canonicalize();
    return r;
  }
  std::uint32_t num = mod_of(v.get_num(), p_);
  std::uint32_t den = mod_of(v.get_den(), p_);
  if (den == 0) throw StructuralError("value " + to_string(v) + " is not defined in " + name());
  Scalar r(num);
  if (den != 1) r = mul(r, inv(Scalar(den)));
  return r;
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a + b;
  std::uint32_t s = residue(a) + residue(b);
  return Scalar(s >= p_ ? s - p_ : s);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a - b;
  std::uint32_t x = residue(a), y = residue(b);
  return Scalar(x >= y ? x - y : x + p_ - y);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a * b;
  std::uint64_t m = std::uint64_t(residue(a)) * residue(b) % p_;
  return Scalar(static_cast<unsigned long>(m));
}

Scalar Field::neg(const Scalar& a) const {
  if (p_ == 0) return -a;
  std::uint32_t x = residue(a);
  return Scalar(x == 0 ? 0u : p_ - x);
}

Scalar Field::inv(const Scalar& a) const {
  if (sgn(a) == 0) throw InvariantViolation("division by zero in " + name());
  if (p_ == 0) return 1 / a;
  // Fermat: a^(p-2).
  std::uint64_t base = residue(a), acc = 1;
  for (std::uint32_t e = p_ - 2; e; e >>= 1) {
    if (e & 1) acc = acc * base % p_;
    base = base * base % p_;
  }
  return Scalar(static_cast<unsigned long>(acc));
}

std::uint32_t Field::residue(const Scalar& a) const {
  return static_cast<std::uint32_t>(a.get_num().get_ui());
}

std::string to_string(const Scalar& v) { return v.get_str(); }

}  // namespace schemoid
