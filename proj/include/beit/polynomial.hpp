#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "beit/field.hpp"

namespace beit {

constexpr int kMaxVars = 24;

/// Exponent vector over x_1..x_n, y_1..y_n (index i-1 for x_i, n+i-1 for
/// y_i). Unused trailing slots stay zero.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(int index);

  int exponent(int var) const { return exps_[static_cast<std::size_t>(var)]; }
  void set_exponent(int var, int e);
  int degree() const { return degree_; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// Requires other.divides(*this).
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps_ == b.exps_;
  }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    return a.exps_ < b.exps_;
  }

  std::size_t hash() const;

 private:
  std::array<std::uint8_t, kMaxVars> exps_{};
  std::uint16_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class MonomialOrder { DegRevLex, Lex };

const char* to_string(MonomialOrder order);

/// Three-way comparison under `order` with x_1 > ... > x_n > y_1 > ... > y_n.
int compare(const Monomial& a, const Monomial& b, MonomialOrder order);

struct Term {
  Monomial monomial;
  Coeff coeff = 0;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Terms strictly descending under the ring order, no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  friend class PolyRing;
  std::vector<Term> terms_;
};

/// S = K[x_1..x_n, y_1..y_n] with a fixed field and monomial order.
class PolyRing {
 public:
  PolyRing(int num_vertices, PrimeField field = PrimeField(),
           MonomialOrder order = MonomialOrder::DegRevLex);

  int num_vertices() const { return n_; }
  int num_vars() const { return 2 * n_; }
  const PrimeField& field() const { return field_; }
  MonomialOrder order() const { return order_; }

  int x(int i) const { return i - 1; }
  int y(int i) const { return n_ + i - 1; }

  /// Sorts, merges and drops zero coefficients.
  Polynomial make(std::vector<Term> terms) const;
  Polynomial monomial(const Monomial& m, Coeff c = 1) const;

  Polynomial add(const Polynomial& f, const Polynomial& g) const;
  Polynomial sub(const Polynomial& f, const Polynomial& g) const;
  Polynomial scale(const Polynomial& f, Coeff c) const;
  /// c * m * f
  Polynomial mul_term(const Polynomial& f, const Monomial& m, Coeff c) const;
  /// f - c * m * g, the elementary reduction step.
  Polynomial sub_mul_term(const Polynomial& f, const Monomial& m, Coeff c,
                          const Polynomial& g) const;
  Polynomial make_monic(const Polynomial& f) const;

  /// Re-sorts f under this ring's order (for moving between orders).
  Polynomial reorder(const Polynomial& f) const;

  int compare(const Monomial& a, const Monomial& b) const {
    return beit::compare(a, b, order_);
  }

  std::string to_string(const Monomial& m) const;
  std::string to_string(const Polynomial& f) const;

  /// Multidegree in Z^n (x_v and y_v both count toward vertex v).
  std::vector<int> vertex_degree(const Monomial& m) const;
  int x_degree(const Monomial& m) const;

 private:
  int n_;
  PrimeField field_;
  MonomialOrder order_;
};

}  // namespace beit
