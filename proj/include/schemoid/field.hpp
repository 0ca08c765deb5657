#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace schemoid {

/// Field element. Rationals are stored as-is; elements of F_p are stored as
/// canonical integer residues in [0, p).
using Scalar = mpq_class;

/// Exact coefficient field: the rationals or a prime field F_p.
class Field {
public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint32_t p);
  /// Accepts "Q", "F2", "F3", ..., "Fp" for prime p < 2^15.
  static Field parse(const std::string& name);

  bool is_rational() const { return p_ == 0; }
  bool is_prime() const { return p_ != 0; }
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  Scalar from_int(long v) const;
  /// Reduce an arbitrary rational into the field (fails for F_p if the
  /// denominator is divisible by p).
  Scalar normalize(const Scalar& v) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;

  /// Residue of a canonical F_p element (only valid when is_prime()).
  std::uint32_t residue(const Scalar& a) const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.p_ != b.p_; }

private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

std::string to_string(const Scalar& v);

}  // namespace schemoid
