#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "beit/error.hpp"
#include "beit/linalg.hpp"
#include "beit/oracle.hpp"

namespace beit {

namespace {

// Z^n x Z degree: vertex multidegree plus the number of x variables.
struct Degree {
  std::vector<int> alpha;
  int c = 0;

  int total() const {
    int t = 0;
    for (int a : alpha) t += a;
    return t;
  }
  friend bool operator==(const Degree&, const Degree&) = default;
  friend auto operator<=>(const Degree&, const Degree&) = default;
};

struct Generator {
  Degree degree;
  // Image in the previous free module, in the coordinates of its piece at
  // `degree`. Empty for the generator of F_0.
  DenseRow image;
};

class SyzygyResolver {
 public:
  SyzygyResolver(const Graph& g, const PrimeField& field, int box)
      : graph_(g), ring_(g.num_vertices(), field), field_(field) {
    const int n = g.num_vertices();
    Degree d;
    d.alpha.assign(static_cast<std::size_t>(n), 0);
    std::vector<int> cap(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) cap[static_cast<std::size_t>(v - 1)] = g.degree(v) > 0 ? box : 0;
    while (true) {
      for (d.c = 0; d.c <= d.total(); ++d.c) degrees_.push_back(d);
      std::size_t v = 0;
      while (v < d.alpha.size() && d.alpha[v] == cap[v]) d.alpha[v++] = 0;
      if (v == d.alpha.size()) break;
      ++d.alpha[v];
    }
    std::stable_sort(degrees_.begin(), degrees_.end(),
                     [](const Degree& a, const Degree& b) { return a.total() < b.total(); });
    max_total_ = degrees_.empty() ? 0 : degrees_.back().total();
  }

  BettiTable run() {
    const int n = graph_.num_vertices();
    BettiTable table(n, field_.characteristic());
    table.set(0, 0, 1);

    Degree zero;
    zero.alpha.assign(static_cast<std::size_t>(n), 0);
    std::vector<Generator> previous;                 // F_{k-2}
    std::vector<Generator> current{{zero, {}}};      // F_{k-1}
    for (int k = 1; k <= 2 * n + 1; ++k) {
      std::vector<Generator> next = next_level(k, previous, current);
      for (const Generator& gen : next) table.add(k, gen.degree.total(), 1);
      if (next.empty()) break;
      previous = std::move(current);
      current = std::move(next);
    }
    table.certify(2 * n, max_total_);
    return table;
  }

 private:
  struct Piece {
    std::vector<std::pair<std::size_t, Monomial>> basis;  // (generator, monomial)
    std::map<std::pair<std::size_t, Monomial>, std::size_t> index;
  };

  // Monomials of S in degree d.
  std::vector<Monomial> monomials(const Degree& d) const {
    std::vector<Monomial> out;
    Monomial m;
    const int n = graph_.num_vertices();
    auto rec = [&](auto&& self, int v, int xs_left) -> void {
      if (v == n) {
        if (xs_left == 0) out.push_back(m);
        return;
      }
      const int av = d.alpha[static_cast<std::size_t>(v)];
      for (int a = 0; a <= std::min(av, xs_left); ++a) {
        m.set_exponent(ring_.x(v + 1), a);
        m.set_exponent(ring_.y(v + 1), av - a);
        self(self, v + 1, xs_left - a);
      }
      m.set_exponent(ring_.x(v + 1), 0);
      m.set_exponent(ring_.y(v + 1), 0);
    };
    if (d.c >= 0 && d.c <= d.total()) rec(rec, 0, d.c);
    return out;
  }

  static bool minus(const Degree& a, const Degree& b, Degree& out) {
    out.alpha.resize(a.alpha.size());
    for (std::size_t v = 0; v < a.alpha.size(); ++v) {
      out.alpha[v] = a.alpha[v] - b.alpha[v];
      if (out.alpha[v] < 0) return false;
    }
    out.c = a.c - b.c;
    return out.c >= 0 && out.c <= out.total();
  }

  Piece piece(const std::vector<Generator>& gens, const Degree& d) const {
    Piece p;
    Degree rest;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (!minus(d, gens[g].degree, rest)) continue;
      for (const Monomial& m : monomials(rest)) {
        p.index.emplace(std::make_pair(g, m), p.basis.size());
        p.basis.emplace_back(g, m);
      }
    }
    return p;
  }

  // Multiplies a vector living in `from` by the monomial `shift`, expressed in
  // the coordinates of `to`.
  DenseRow shift(const DenseRow& v, const Piece& from, const Monomial& by, const Piece& to) const {
    DenseRow out(to.basis.size(), 0);
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (!v[k]) continue;
      const auto& [g, m] = from.basis[k];
      auto it = to.index.find({g, m * by});
      if (it == to.index.end()) throw std::logic_error("syzygy shift left its graded piece");
      out[it->second] = field_.add(out[it->second], v[k]);
    }
    return out;
  }

  Degree degree_of_variable(int var) const {
    Degree d;
    const int n = graph_.num_vertices();
    d.alpha.assign(static_cast<std::size_t>(n), 0);
    d.alpha[static_cast<std::size_t>(var % n)] = 1;
    d.c = var < n ? 1 : 0;
    return d;
  }

  // Minimal generators of N_k, the edge ideal for k = 1 and ker(F_{k-1} -> F_{k-2}) otherwise.
  std::vector<Generator> next_level(int k, const std::vector<Generator>& previous,
                                    const std::vector<Generator>& current) {
    std::map<Degree, Piece> pieces;          // of F_{k-1}
    std::map<Degree, std::vector<DenseRow>> kernel;
    std::vector<Generator> fresh;
    const auto edge_gens = binomial_edge_generators(ring_, graph_);

    for (const Degree& d : degrees_) {
      Piece& here = pieces.emplace(d, piece(current, d)).first->second;
      const std::size_t width = here.basis.size();
      std::vector<DenseRow>& basis = kernel[d];
      if (width == 0) continue;

      if (k == 1) {
        EchelonBasis span(width, field_);
        for (const Polynomial& f : edge_gens) {
          Degree fd, rest;
          fd.alpha = ring_.vertex_degree(f.leading_monomial());
          fd.c = ring_.x_degree(f.leading_monomial());
          if (!minus(d, fd, rest)) continue;
          for (const Monomial& m : monomials(rest)) {
            DenseRow v(width, 0);
            for (const Term& t : f.terms()) {
              v[here.index.at({0, t.monomial * m})] = t.coeff;
            }
            span.insert(v);
          }
        }
        basis = span.rows();
      } else {
        const Piece target = piece(previous, d);
        std::vector<DenseRow> images;
        images.reserve(width);
        for (const auto& [g, m] : here.basis) {
          const Generator& gen = current[g];
          const Piece source = piece(previous, gen.degree);
          images.push_back(shift(gen.image, source, m, target));
        }
        basis = left_kernel(images, target.basis.size(), field_);
      }

      // Part of N_k at d generated from lower degrees.
      EchelonBasis lower(width, field_);
      for (int var = 0; var < ring_.num_vars(); ++var) {
        Degree below;
        if (!minus(d, degree_of_variable(var), below)) continue;
        auto kt = kernel.find(below);
        if (kt == kernel.end() || kt->second.empty()) continue;
        const Piece& from = pieces.at(below);
        for (const DenseRow& b : kt->second) lower.insert(shift(b, from, Monomial::variable(var), here));
      }
      for (const DenseRow& b : basis) {
        if (!lower.insert(b)) continue;
        for (std::size_t idx = 0; idx < width; ++idx) {
          if (b[idx] && here.basis[idx].second.degree() == 0) {
            throw std::logic_error("non-minimal syzygy: unit entry in the differential");
          }
        }
        fresh.push_back({d, b});
      }
    }
    return fresh;
  }

  const Graph& graph_;
  PolyRing ring_;
  PrimeField field_;
  std::vector<Degree> degrees_;
  int max_total_ = 0;
};

}  // namespace

BettiTable syzygy_betti_table(const Graph& g, const PrimeField& field, int box) {
  if (box < 1) throw Error(ErrorKind::InvalidParameter, "syzygy box must be >= 1");
  return SyzygyResolver(g, field, box).run();
}

}  // namespace beit
