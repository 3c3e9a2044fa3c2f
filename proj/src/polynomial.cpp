#include "beit/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "beit/error.hpp"

namespace beit {

// ---- field ----------------------------------------------------------------

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw Error(ErrorKind::InvalidParameter, std::to_string(p) + " is not a prime below 2^31");
  }
}

Coeff PrimeField::inv(Coeff a) const {
  if (a == 0) throw Error(ErrorKind::InvalidParameter, "inverse of zero");
  // Fermat: a^(p-2)
  std::uint64_t result = 1, base = a;
  for (std::uint32_t e = p_ - 2; e; e >>= 1) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
  }
  return static_cast<Coeff>(result);
}

Coeff PrimeField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Coeff>(r);
}

// ---- monomials ------------------------------------------------------------

Monomial Monomial::variable(int index) {
  Monomial m;
  m.set_exponent(index, 1);
  return m;
}

void Monomial::set_exponent(int var, int e) {
  if (var < 0 || var >= kMaxVars || e < 0 || e > 255) {
    throw Error(ErrorKind::InvalidParameter, "monomial exponent out of range");
  }
  auto& slot = exps_[static_cast<std::size_t>(var)];
  degree_ = static_cast<std::uint16_t>(degree_ - slot + e);
  slot = static_cast<std::uint8_t>(e);
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] && other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    m.exps_[i] = static_cast<std::uint8_t>(exps_[i] + other.exps_[i]);
  }
  m.degree_ = static_cast<std::uint16_t>(degree_ + other.degree_);
  return m;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    m.exps_[i] = static_cast<std::uint8_t>(exps_[i] - other.exps_[i]);
  }
  m.degree_ = static_cast<std::uint16_t>(degree_ - other.degree_);
  return m;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial m;
  int deg = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    m.exps_[i] = std::max(exps_[i], other.exps_[i]);
    deg += m.exps_[i];
  }
  m.degree_ = static_cast<std::uint16_t>(deg);
  return m;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exps_) h = (h ^ e) * 1099511628211ull;
  return h;
}

const char* to_string(MonomialOrder order) {
  return order == MonomialOrder::Lex ? "lex" : "degrevlex";
}

int compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
  if (order == MonomialOrder::DegRevLex) {
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    for (int i = kMaxVars - 1; i >= 0; --i) {
      if (a.exponent(i) != b.exponent(i)) return a.exponent(i) < b.exponent(i) ? 1 : -1;
    }
    return 0;
  }
  for (int i = 0; i < kMaxVars; ++i) {
    if (a.exponent(i) != b.exponent(i)) return a.exponent(i) > b.exponent(i) ? 1 : -1;
  }
  return 0;
}

// ---- ring -----------------------------------------------------------------

PolyRing::PolyRing(int num_vertices, PrimeField field, MonomialOrder order)
    : n_(num_vertices), field_(field), order_(order) {
  if (num_vertices < 0 || 2 * num_vertices > kMaxVars) {
    throw Error(ErrorKind::TooLarge, "polynomial rings are capped at " +
                                         std::to_string(kMaxVars / 2) + " vertices");
  }
}

Polynomial PolyRing::make(std::vector<Term> terms) const {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return compare(a.monomial, b.monomial) > 0;
  });
  Polynomial out;
  for (Term& t : terms) {
    t.coeff %= field_.characteristic();
    if (!out.terms_.empty() && out.terms_.back().monomial == t.monomial) {
      out.terms_.back().coeff = field_.add(out.terms_.back().coeff, t.coeff);
      if (out.terms_.back().coeff == 0) out.terms_.pop_back();
    } else if (t.coeff != 0) {
      out.terms_.push_back(t);
    }
  }
  return out;
}

Polynomial PolyRing::monomial(const Monomial& m, Coeff c) const {
  return make({Term{m, c}});
}

Polynomial PolyRing::add(const Polynomial& f, const Polynomial& g) const {
  return sub_mul_term(f, Monomial{}, field_.neg(1), g);
}

Polynomial PolyRing::sub(const Polynomial& f, const Polynomial& g) const {
  return sub_mul_term(f, Monomial{}, 1, g);
}

Polynomial PolyRing::scale(const Polynomial& f, Coeff c) const {
  return mul_term(f, Monomial{}, c);
}

Polynomial PolyRing::mul_term(const Polynomial& f, const Monomial& m, Coeff c) const {
  Polynomial out;
  if (c % field_.characteristic() == 0) return out;
  out.terms_.reserve(f.terms_.size());
  for (const Term& t : f.terms_) out.terms_.push_back({t.monomial * m, field_.mul(t.coeff, c)});
  return out;
}

Polynomial PolyRing::sub_mul_term(const Polynomial& f, const Monomial& m, Coeff c,
                                  const Polynomial& g) const {
  Polynomial out;
  out.terms_.reserve(f.terms_.size() + g.terms_.size());
  auto it = f.terms_.begin();
  auto jt = g.terms_.begin();
  while (it != f.terms_.end() || jt != g.terms_.end()) {
    if (jt == g.terms_.end()) {
      out.terms_.push_back(*it++);
      continue;
    }
    Monomial shifted = jt->monomial * m;
    int cmp = it == f.terms_.end() ? -1 : compare(it->monomial, shifted);
    if (cmp > 0) {
      out.terms_.push_back(*it++);
    } else if (cmp < 0) {
      Coeff v = field_.neg(field_.mul(c, jt->coeff));
      if (v) out.terms_.push_back({shifted, v});
      ++jt;
    } else {
      Coeff v = field_.sub(it->coeff, field_.mul(c, jt->coeff));
      if (v) out.terms_.push_back({shifted, v});
      ++it;
      ++jt;
    }
  }
  return out;
}

Polynomial PolyRing::make_monic(const Polynomial& f) const {
  if (f.is_zero() || f.leading_term().coeff == 1) return f;
  return scale(f, field_.inv(f.leading_term().coeff));
}

Polynomial PolyRing::reorder(const Polynomial& f) const { return make(f.terms_); }

std::string PolyRing::to_string(const Monomial& m) const {
  std::ostringstream os;
  bool first = true;
  for (int v = 0; v < num_vars(); ++v) {
    int e = m.exponent(v);
    if (!e) continue;
    if (!first) os << '*';
    os << (v < n_ ? 'x' : 'y') << (v % n_ + 1);
    if (e > 1) os << '^' << e;
    first = false;
  }
  if (first) os << '1';
  return os.str();
}

std::string PolyRing::to_string(const Polynomial& f) const {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : f.terms()) {
    std::int64_t c = field_.lift(t.coeff);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::int64_t mag = c < 0 ? -c : c;
    bool unit_monomial = t.monomial.degree() == 0;
    if (mag != 1 || unit_monomial) {
      os << mag;
      if (!unit_monomial) os << '*';
    }
    if (!unit_monomial) os << to_string(t.monomial);
    first = false;
  }
  return os.str();
}

std::vector<int> PolyRing::vertex_degree(const Monomial& m) const {
  std::vector<int> out(static_cast<std::size_t>(n_));
  for (int v = 0; v < n_; ++v) out[static_cast<std::size_t>(v)] = m.exponent(v) + m.exponent(n_ + v);
  return out;
}

int PolyRing::x_degree(const Monomial& m) const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d += m.exponent(v);
  return d;
}

}  // namespace beit
