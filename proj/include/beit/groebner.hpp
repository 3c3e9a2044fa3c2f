#pragma once

#include <cstdint>
#include <vector>

#include "beit/graph.hpp"
#include "beit/polynomial.hpp"

namespace beit {

/// Reduced Groebner basis: monic generators sorted by ascending leading
/// monomial, each fully reduced against the others.
class GroebnerBasis {
 public:
  GroebnerBasis(PolyRing ring, std::vector<Polynomial> generators)
      : ring_(std::move(ring)), generators_(std::move(generators)) {}

  const PolyRing& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  bool is_zero_ideal() const { return generators_.empty(); }

  std::vector<Monomial> leading_monomials() const;

  /// True iff m is divisible by no leading monomial.
  bool is_standard(const Monomial& m) const;

 private:
  PolyRing ring_;
  std::vector<Polynomial> generators_;
};

/// x_i y_j - x_j y_i for every edge {i,j}, i < j, in edge order.
std::vector<Polynomial> binomial_edge_generators(const PolyRing& ring, const Graph& g);

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
};

/// Buchberger with normal selection and Gebauer-Moeller pair pruning.
GroebnerBasis groebner(const PolyRing& ring, const std::vector<Polynomial>& generators,
                       BuchbergerStats* stats = nullptr);

/// Fully reduced remainder of f modulo the basis.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

Polynomial s_polynomial(const PolyRing& ring, const Polynomial& f, const Polynomial& g);

/// Every S-polynomial of the given polynomials reduces to zero modulo them.
bool is_groebner_basis(const PolyRing& ring, const std::vector<Polynomial>& polys);

/// dim_K (S/I)_d: degree-d monomials outside the initial ideal.
std::uint64_t hilbert_function(const GroebnerBasis& gb, int d);

/// J_G in the given ring.
GroebnerBasis binomial_edge_ideal_basis(const PolyRing& ring, const Graph& g);

}  // namespace beit
