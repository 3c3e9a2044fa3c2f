#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "beit/linalg.hpp"
#include "beit/oracle.hpp"

namespace beit {

namespace {

// Basis element e_W (x) m of the Koszul complex; W is a bitmask over variables.
struct Cell {
  std::uint32_t wedge;
  Monomial monomial;

  friend bool operator==(const Cell&, const Cell&) = default;
};

struct CellHash {
  std::size_t operator()(const Cell& c) const {
    return c.monomial.hash() ^ (std::size_t{c.wedge} * 0x9e3779b97f4a7c15ull);
  }
};

class KoszulPiece {
 public:
  KoszulPiece(const GroebnerBasis& gb, std::unordered_map<Monomial, Polynomial, MonomialHash>& cache)
      : gb_(gb), ring_(gb.ring()), cache_(cache) {}

  // Adds dim Tor_i(S/J)_alpha into betti[i] for every i.
  void accumulate(const std::vector<int>& alpha, std::vector<std::uint64_t>& betti) {
    const int vars = ring_.num_vars();
    groups_.clear();
    Monomial m;
    enumerate(alpha, 0, 0, m);
    for (auto& [c, by_degree] : groups_) {
      by_degree.resize(static_cast<std::size_t>(vars) + 2);
      std::vector<std::size_t> rank(static_cast<std::size_t>(vars) + 2, 0);
      for (int i = 1; i <= vars; ++i) rank[static_cast<std::size_t>(i)] = differential_rank(by_degree, i);
      for (int i = 0; i <= vars; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        const std::size_t dim = by_degree[ui].size();
        const std::size_t h = dim - rank[ui] - rank[ui + 1];
        betti[ui] += h;
      }
    }
  }

 private:
  void enumerate(const std::vector<int>& alpha, int v, std::uint32_t wedge, Monomial& m) {
    const int n = ring_.num_vertices();
    if (v == n) {
      if (!gb_.is_standard(m)) return;
      const int i = std::popcount(wedge);
      const std::uint32_t xmask = (std::uint32_t{1} << n) - 1;
      const int c = std::popcount(wedge & xmask) + ring_.x_degree(m);
      auto& by_degree = groups_[c];
      if (by_degree.size() <= static_cast<std::size_t>(i)) by_degree.resize(static_cast<std::size_t>(i) + 1);
      by_degree[static_cast<std::size_t>(i)].push_back({wedge, m});
      return;
    }
    const int av = alpha[static_cast<std::size_t>(v)];
    const std::uint32_t xb = std::uint32_t{1} << ring_.x(v + 1);
    const std::uint32_t yb = std::uint32_t{1} << ring_.y(v + 1);
    const std::uint32_t choices[4] = {0, xb, yb, xb | yb};
    for (std::uint32_t w : choices) {
      const int used = std::popcount(w);
      if (used > av) continue;
      const int rest = av - used;
      for (int a = 0; a <= rest; ++a) {
        m.set_exponent(ring_.x(v + 1), a);
        m.set_exponent(ring_.y(v + 1), rest - a);
        enumerate(alpha, v + 1, wedge | w, m);
      }
    }
    m.set_exponent(ring_.x(v + 1), 0);
    m.set_exponent(ring_.y(v + 1), 0);
  }

  const Polynomial& reduced(const Monomial& m) {
    auto it = cache_.find(m);
    if (it != cache_.end()) return it->second;
    Polynomial nf = gb_.is_standard(m) ? ring_.monomial(m) : normal_form(ring_.monomial(m), gb_);
    return cache_.emplace(m, std::move(nf)).first->second;
  }

  std::size_t differential_rank(const std::vector<std::vector<Cell>>& by_degree, int i) {
    const auto& source = by_degree[static_cast<std::size_t>(i)];
    const auto& target = by_degree[static_cast<std::size_t>(i - 1)];
    if (source.empty() || target.empty()) return 0;
    std::unordered_map<Cell, std::size_t, CellHash> index;
    index.reserve(target.size());
    for (std::size_t k = 0; k < target.size(); ++k) index.emplace(target[k], k);

    const PrimeField& field = ring_.field();
    SparseMatrix d(target.size(), source.size());
    for (std::size_t col = 0; col < source.size(); ++col) {
      const Cell& cell = source[col];
      int position = 0;
      for (std::uint32_t rest = cell.wedge; rest; rest &= rest - 1, ++position) {
        const int var = std::countr_zero(rest);
        const std::uint32_t face = cell.wedge & ~(std::uint32_t{1} << var);
        const Polynomial& image = reduced(cell.monomial * Monomial::variable(var));
        for (const Term& t : image.terms()) {
          auto hit = index.find(Cell{face, t.monomial});
          if (hit == index.end()) throw std::logic_error("Koszul differential left its graded piece");
          Coeff v = (position % 2 == 0) ? t.coeff : field.neg(t.coeff);
          d.push(hit->second, col, v);
        }
      }
    }
    d.finalize(field);
    return matrix_rank(d, field);
  }

  const GroebnerBasis& gb_;
  const PolyRing& ring_;
  std::unordered_map<Monomial, Polynomial, MonomialHash>& cache_;
  std::map<int, std::vector<std::vector<Cell>>> groups_;
};

}  // namespace

BettiTable koszul_betti_table(const GroebnerBasis& gb, unsigned threads) {
  const PolyRing& ring = gb.ring();
  const int n = ring.num_vertices();
  const int vars = ring.num_vars();

  // Per-vertex bound from the lcm of all leading monomials.
  std::vector<int> bound(static_cast<std::size_t>(n), 0);
  for (int v = 1; v <= n; ++v) {
    int mx = 0, my = 0;
    for (const Monomial& lm : gb.leading_monomials()) {
      mx = std::max(mx, lm.exponent(ring.x(v)));
      my = std::max(my, lm.exponent(ring.y(v)));
    }
    bound[static_cast<std::size_t>(v - 1)] = mx + my;
  }
  int max_total = 0;
  for (int b : bound) max_total += b;

  std::vector<std::vector<int>> degrees;
  std::vector<int> alpha(static_cast<std::size_t>(n), 0);
  while (true) {
    degrees.push_back(alpha);
    std::size_t v = 0;
    while (v < alpha.size() && alpha[v] == bound[v]) alpha[v++] = 0;
    if (v == alpha.size()) break;
    ++alpha[v];
  }
  // Largest pieces first so workers finish together.
  std::stable_sort(degrees.begin(), degrees.end(), [](const auto& a, const auto& b) {
    int sa = 0, sb = 0;
    for (int x : a) sa += x;
    for (int x : b) sb += x;
    return sa > sb;
  });

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(degrees.size())));

  // totals[d][i]
  std::vector<std::vector<std::uint64_t>> totals(
      static_cast<std::size_t>(max_total) + 1,
      std::vector<std::uint64_t>(static_cast<std::size_t>(vars) + 1, 0));
  std::atomic<std::size_t> next{0};
  std::mutex merge;
  std::exception_ptr failure;

  auto worker = [&]() {
    try {
      std::unordered_map<Monomial, Polynomial, MonomialHash> cache;
      KoszulPiece piece(gb, cache);
      std::vector<std::vector<std::uint64_t>> local(totals.size(),
                                                    std::vector<std::uint64_t>(totals[0].size(), 0));
      for (std::size_t k = next++; k < degrees.size(); k = next++) {
        int d = 0;
        for (int x : degrees[k]) d += x;
        piece.accumulate(degrees[k], local[static_cast<std::size_t>(d)]);
      }
      std::lock_guard<std::mutex> lock(merge);
      for (std::size_t d = 0; d < totals.size(); ++d)
        for (std::size_t i = 0; i < totals[d].size(); ++i) totals[d][i] += local[d][i];
    } catch (...) {
      std::lock_guard<std::mutex> lock(merge);
      if (!failure) failure = std::current_exception();
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  BettiTable table(n, ring.field().characteristic());
  for (std::size_t d = 0; d < totals.size(); ++d)
    for (std::size_t i = 0; i < totals[d].size(); ++i)
      if (totals[d][i]) table.set(static_cast<int>(i), static_cast<int>(d), totals[d][i]);
  table.certify(vars, max_total);
  return table;
}

}  // namespace beit
