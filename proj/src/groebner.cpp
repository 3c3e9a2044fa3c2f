#include "beit/groebner.hpp"

#include <algorithm>

#include "beit/error.hpp"

namespace beit {

namespace {

// Divisor with the smallest index whose leading monomial divides m.
const Polynomial* find_divisor(const Monomial& m, const std::vector<const Polynomial*>& basis) {
  for (const Polynomial* g : basis) {
    if (g->leading_monomial().divides(m)) return g;
  }
  return nullptr;
}

Polynomial reduce_full(const PolyRing& ring, Polynomial f,
                       const std::vector<const Polynomial*>& basis) {
  const PrimeField& k = ring.field();
  std::vector<Term> remainder;
  while (!f.is_zero()) {
    const Term lead = f.leading_term();
    if (const Polynomial* g = find_divisor(lead.monomial, basis)) {
      Coeff c = k.mul(lead.coeff, k.inv(g->leading_term().coeff));
      f = ring.sub_mul_term(f, lead.monomial / g->leading_monomial(), c, *g);
    } else {
      remainder.push_back(lead);
      std::vector<Term> rest(f.terms().begin() + 1, f.terms().end());
      f = ring.make(std::move(rest));
    }
  }
  return ring.make(std::move(remainder));
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class Buchberger {
 public:
  explicit Buchberger(const PolyRing& ring) : ring_(ring) {}

  void insert(Polynomial h) {
    polys_.push_back(ring_.make_monic(h));
    in_basis_.push_back(true);
    update(polys_.size() - 1);
  }

  void run(BuchbergerStats* stats) {
    while (!pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
        int c = ring_.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
      });
      Pair p = *best;
      pairs_.erase(best);
      if (stats) ++stats->pairs_reduced;
      Polynomial h = reduce_full(ring_, s_polynomial(ring_, polys_[p.i], polys_[p.j]), active());
      if (h.is_zero()) {
        if (stats) ++stats->zero_reductions;
        continue;
      }
      insert(std::move(h));
    }
  }

  std::vector<const Polynomial*> active() const {
    std::vector<const Polynomial*> out;
    for (std::size_t i = 0; i < polys_.size(); ++i) {
      if (in_basis_[i]) out.push_back(&polys_[i]);
    }
    return out;
  }

  std::size_t pairs_seen = 0;

 private:
  // Gebauer-Moeller installation of the new element h = polys_[hi].
  void update(std::size_t hi) {
    const Monomial& lh = polys_[hi].leading_monomial();
    std::vector<Pair> fresh;
    for (std::size_t g = 0; g < hi; ++g) {
      if (in_basis_[g]) fresh.push_back({g, hi, polys_[g].leading_monomial().lcm(lh)});
    }
    pairs_seen += fresh.size();

    // Criterion M: drop pairs whose lcm is a proper multiple of another lcm.
    std::vector<Pair> kept;
    for (const Pair& p : fresh) {
      bool dominated = std::any_of(fresh.begin(), fresh.end(), [&](const Pair& q) {
        return q.lcm.divides(p.lcm) && !(q.lcm == p.lcm);
      });
      if (!dominated) kept.push_back(p);
    }
    // Criterion F and the product criterion: one representative per lcm, and
    // none at all if any pair with that lcm has coprime leading monomials.
    std::vector<Pair> survivors;
    for (std::size_t a = 0; a < kept.size(); ++a) {
      bool seen = false, any_coprime = false;
      for (std::size_t b = 0; b < kept.size(); ++b) {
        if (!(kept[b].lcm == kept[a].lcm)) continue;
        if (b < a) seen = true;
        if (polys_[kept[b].i].leading_monomial().coprime(lh)) any_coprime = true;
      }
      if (!seen && !any_coprime) survivors.push_back(kept[a]);
    }
    kept = std::move(survivors);

    // Old pairs made redundant by h.
    std::erase_if(pairs_, [&](const Pair& p) {
      if (!lh.divides(p.lcm)) return false;
      Monomial a = polys_[p.i].leading_monomial().lcm(lh);
      Monomial b = polys_[p.j].leading_monomial().lcm(lh);
      return !(a == p.lcm) && !(b == p.lcm);
    });
    pairs_.insert(pairs_.end(), kept.begin(), kept.end());

    for (std::size_t g = 0; g < hi; ++g) {
      if (in_basis_[g] && lh.divides(polys_[g].leading_monomial())) in_basis_[g] = false;
    }
  }

  const PolyRing& ring_;
  std::vector<Polynomial> polys_;
  std::vector<bool> in_basis_;
  std::vector<Pair> pairs_;
};

}  // namespace

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(generators_.size());
  for (const auto& g : generators_) out.push_back(g.leading_monomial());
  return out;
}

bool GroebnerBasis::is_standard(const Monomial& m) const {
  for (const auto& g : generators_) {
    if (g.leading_monomial().divides(m)) return false;
  }
  return true;
}

std::vector<Polynomial> binomial_edge_generators(const PolyRing& ring, const Graph& g) {
  if (g.num_vertices() != ring.num_vertices()) {
    throw Error(ErrorKind::InvalidParameter, "graph and ring have different vertex counts");
  }
  std::vector<Polynomial> out;
  const Coeff minus_one = ring.field().neg(1);
  for (auto [i, j] : g.edges()) {
    Monomial xiyj = Monomial::variable(ring.x(i)) * Monomial::variable(ring.y(j));
    Monomial xjyi = Monomial::variable(ring.x(j)) * Monomial::variable(ring.y(i));
    out.push_back(ring.make({{xiyj, 1}, {xjyi, minus_one}}));
  }
  return out;
}

Polynomial s_polynomial(const PolyRing& ring, const Polynomial& f, const Polynomial& g) {
  const PrimeField& k = ring.field();
  Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  Polynomial a = ring.mul_term(f, l / f.leading_monomial(), k.inv(f.leading_term().coeff));
  return ring.sub_mul_term(a, l / g.leading_monomial(), k.inv(g.leading_term().coeff), g);
}

GroebnerBasis groebner(const PolyRing& ring, const std::vector<Polynomial>& generators,
                       BuchbergerStats* stats) {
  Buchberger engine(ring);
  for (const Polynomial& f : generators) {
    Polynomial h = reduce_full(ring, ring.reorder(f), engine.active());
    if (!h.is_zero()) engine.insert(std::move(h));
  }
  engine.run(stats);
  if (stats) stats->pairs_considered = engine.pairs_seen;

  // Minimal basis, then interreduce tails.
  std::vector<const Polynomial*> minimal = engine.active();
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<const Polynomial*> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    const Polynomial& f = *minimal[i];
    std::vector<Term> tail(f.terms().begin() + 1, f.terms().end());
    Polynomial r = reduce_full(ring, ring.make(std::move(tail)), others);
    reduced.push_back(ring.add(ring.monomial(f.leading_monomial()), r));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ring.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  return GroebnerBasis(ring, std::move(reduced));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  std::vector<const Polynomial*> basis;
  for (const auto& g : gb.generators()) basis.push_back(&g);
  return reduce_full(gb.ring(), gb.ring().reorder(f), basis);
}

bool is_groebner_basis(const PolyRing& ring, const std::vector<Polynomial>& polys) {
  std::vector<Polynomial> sorted;
  for (const auto& f : polys) {
    if (!f.is_zero()) sorted.push_back(ring.reorder(f));
  }
  std::vector<const Polynomial*> basis;
  for (const auto& f : sorted) basis.push_back(&f);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (!reduce_full(ring, s_polynomial(ring, sorted[i], sorted[j]), basis).is_zero()) {
        return false;
      }
    }
  }
  return true;
}

std::uint64_t hilbert_function(const GroebnerBasis& gb, int d) {
  if (d < 0) return 0;
  const int vars = gb.ring().num_vars();
  const std::vector<Monomial> leads = gb.leading_monomials();
  Monomial m;
  auto divisible = [&]() {
    for (const auto& l : leads) {
      if (l.divides(m)) return true;
    }
    return false;
  };
  // Assign exponents variable by variable; a divisible prefix stays divisible.
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (divisible()) return;
    if (var == vars - 1) {
      m.set_exponent(var, left);
      if (!divisible()) ++count;
      m.set_exponent(var, 0);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      m.set_exponent(var, e);
      self(self, var + 1, left - e);
    }
    m.set_exponent(var, 0);
  };
  if (vars == 0) return d == 0 ? 1 : 0;
  rec(rec, 0, d);
  return count;
}

GroebnerBasis binomial_edge_ideal_basis(const PolyRing& ring, const Graph& g) {
  return groebner(ring, binomial_edge_generators(ring, g));
}

}  // namespace beit
