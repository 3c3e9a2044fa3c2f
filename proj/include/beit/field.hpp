#pragma once

#include <cstdint>

namespace beit {

using Coeff = std::uint32_t;

constexpr std::uint32_t kDefaultPrime = 32003;

bool is_prime(std::uint32_t p);

/// Arithmetic in GF(p) on canonical representatives 0..p-1, p < 2^31.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t characteristic() const { return p_; }

  Coeff add(Coeff a, Coeff b) const {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Coeff inv(Coeff a) const;
  Coeff from_int(std::int64_t v) const;

  /// Symmetric lift into (-p/2, p/2] for printing.
  std::int64_t lift(Coeff a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

}  // namespace beit
