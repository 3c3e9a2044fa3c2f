#include "beit/formulas.hpp"

#include <algorithm>
#include <iostream>

#include "beit/error.hpp"

namespace beit {

long long choose(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long long t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

namespace {

long long beta_h(const BettiTable& h, int i, int j) {
  if (i < 0) return 0;
  return static_cast<long long>(h.beta(i, j));
}

void put(BettiTable& t, int i, int d, long long v) {
  if (v > 0) t.set(i, d, static_cast<std::uint64_t>(v));
}

}  // namespace

BettiTable betti_cone_formula(const BettiTable& betti_h, const CliqueVector& cliques_h, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidParameter, "cone base needs n >= 1");
  if (cliques_h.k(n) > 0) throw Error(ErrorKind::CompleteInput, "cone formula needs a non-complete base");
  int pd_h = 0, reg_h = 0;
  for (const auto& [key, v] : betti_h.entries()) {
    pd_h = std::max(pd_h, key.first);
    reg_h = std::max(reg_h, key.second - key.first);
  }

  BettiTable g(n + 1, betti_h.prime());
  g.set(0, 0, 1);
  for (int i = 1; i <= n; ++i) put(g, i, i + 1, i * (cliques_h.k(i) + cliques_h.k(i + 1)));

  const int imax = std::max(pd_h + 2, n);
  for (int i = 1; i <= imax; ++i) {
    const long long v = beta_h(betti_h, i, 2) + 2 * beta_h(betti_h, i - 1, 2) +
                        beta_h(betti_h, i - 2, 2) + (i - 1) * choose(n + 1, i + 1) -
                        (i - 1) * cliques_h.k(i) - (i - 1) * cliques_h.k(i + 1);
    if (v < 0) {
      std::cerr << "warning: cone formula gave beta_{" << i << "," << i + 2 << "} = " << v
                << "; clamped to 0, the input table is suspect\n";
    }
    put(g, i, i + 2, v);
  }
  for (int j = 3; j <= reg_h; ++j) {
    for (int i = 0; i <= pd_h + 2; ++i) {
      put(g, i, i + j,
          beta_h(betti_h, i, j) + 2 * beta_h(betti_h, i - 1, j) + beta_h(betti_h, i - 2, j));
    }
  }
  if (const auto& c = betti_h.complete_through()) {
    g.certify(2 * (n + 1), std::max(c->second + 4, n + 3));
  }
  return g;
}

BettiTable wheel_betti(int n) {
  if (n == 4) {
    throw Error(ErrorKind::UnsupportedSize,
                "wheel table for n = 4 has overlapping rows; use the cone formula on C_4");
  }
  if (n < 4) throw Error(ErrorKind::InvalidParameter, "wheel needs n >= 5");
  BettiTable t(n + 1, 0);
  t.set(0, 0, 1);
  put(t, 1, 2, 2 * n);
  put(t, 2, 3, 2 * n);

  put(t, 2, 4, choose(n, 2) + choose(n + 1, 3) - n);
  put(t, 3, 5, 2 * choose(n, 2) + 2 * choose(n + 1, 4));
  put(t, 4, 6, choose(n, 2) + 3 * choose(n + 1, 5));
  for (int i = 5; i <= n; ++i) put(t, i, i + 2, (i - 1) * choose(n + 1, i + 1));

  for (int i = 3; i <= n - 3; ++i) {
    put(t, i, 2 * i, choose(n, i));
    put(t, i + 1, 2 * i + 1, 2 * choose(n, i));
    put(t, i + 2, 2 * i + 2, choose(n, i));
  }

  for (int i = 2; i <= n - 3; ++i) {
    put(t, i, i + n - 2, (n + 1 - i) * choose(n + 2, i - 2) + 2 * choose(n + 1, i - 3));
  }
  put(t, n - 2, 2 * n - 4, choose(n, 2) + 3 * choose(n + 2, 6) + 2 * choose(n + 1, 6));
  put(t, n - 1, 2 * n - 3, 2 * choose(n + 1, 3) + 2 * choose(n, 4) + 4 * choose(n + 1, 5));
  put(t, n, 2 * n - 2, choose(n - 1, 2) - 1 + choose(n + 2, 4) + 2 * choose(n + 1, 4));
  put(t, n + 1, 2 * n - 1, 2 * choose(n - 1, 2) - 2 + 2 * choose(n, 3));
  put(t, n + 2, 2 * n, choose(n - 1, 2) - 1);
  t.certify(2 * (n + 1), 2 * n);
  return t;
}

BettiTable path_betti(int m) {
  if (m < 1) throw Error(ErrorKind::InvalidParameter, "path needs m >= 1");
  BettiTable t(m, 0);
  for (int i = 0; i <= m - 1; ++i) put(t, i, 2 * i, choose(m - 1, i));
  t.certify(2 * m, 2 * (m - 1));
  return t;
}

BettiTable betti_disjoint_union(const BettiTable& a, const BettiTable& b) {
  BettiTable t(a.n() + b.n(), a.prime() == b.prime() ? a.prime() : 0);
  for (const auto& [ka, va] : a.entries())
    for (const auto& [kb, vb] : b.entries()) t.add(ka.first + kb.first, ka.second + kb.second, va * vb);
  if (a.complete_through() && b.complete_through()) {
    t.certify(a.complete_through()->first + b.complete_through()->first,
              a.complete_through()->second + b.complete_through()->second);
  }
  return t;
}

int depth_cone(int depth_h, int n, bool h_connected) {
  return h_connected ? depth_h : std::min(depth_h, n + 2);
}

int cmdef_cone(int dim_h, int cmdef_h, int n) {
  if (dim_h < n + 1) {
    throw Error(ErrorKind::InvalidDimension,
                "dim " + std::to_string(dim_h) + " < n + 1 is impossible for a connected graph");
  }
  return dim_h >= n + 2 ? cmdef_h : cmdef_h + 1;
}

int cmdef_complete_join(int dim_h, int cmdef_h, int n, int q) {
  if (q < 1) throw Error(ErrorKind::InvalidParameter, "q must be >= 1");
  if (dim_h < n + 1) {
    throw Error(ErrorKind::InvalidDimension,
                "dim " + std::to_string(dim_h) + " < n + 1 is impossible for a connected graph");
  }
  if (dim_h >= n + q + 1) return cmdef_h;
  return n + q + 1 - dim_h + cmdef_h;
}

int depth_join(const JoinFactor& g1, const JoinFactor& g2) {
  if (g1.n < 2 || g2.n < 2) throw Error(ErrorKind::InvalidParameter, "join factors need n >= 2");
  if (g1.complete || g2.complete) {
    throw Error(ErrorKind::CompleteInput, "join depth needs non-complete factors");
  }
  if (g1.connected && g2.connected) return std::min(g1.depth, g2.depth);
  if (g1.connected) return std::min({g1.depth, g2.depth, g2.n + 2});
  if (g2.connected) {
    throw Error(ErrorKind::BadOrientation, "pass the connected factor first");
  }
  if (g2.n < g1.n) {
    throw Error(ErrorKind::BadOrientation, "two disconnected factors need n2 >= n1");
  }
  return std::min({g1.depth, g2.depth, g1.n + 2});
}

int depth_multipartite(std::vector<int> parts) {
  if (parts.size() < 2) throw Error(ErrorKind::InvalidParameter, "need at least two parts");
  for (int p : parts) {
    if (p < 2) throw Error(ErrorKind::InvalidParameter, "invalid-parts: every part needs size >= 2");
  }
  return *std::min_element(parts.begin(), parts.end()) + 2;
}

int depth_disjoint_union(const std::vector<int>& component_depths) {
  int total = 0;
  for (int d : component_depths) total += d;
  return total;
}

std::vector<ExtremalEntry> extremal_transfer_cone(const std::vector<ExtremalEntry>& extremal_h, int q) {
  if (q < 0) throw Error(ErrorKind::InvalidParameter, "q must be >= 0");
  std::vector<ExtremalEntry> out;
  out.reserve(extremal_h.size());
  for (const ExtremalEntry& e : extremal_h) out.push_back({e.i + 2 * q, e.j, e.value});
  return out;
}

GrbProfile grb_profile(int r, int b) {
  if (b < 1 || b > r - 1) {
    throw Error(ErrorKind::InvalidParameter,
                "invalid-pair: need 1 <= b <= r - 1, got (" + std::to_string(r) + "," +
                    std::to_string(b) + ")");
  }
  GrbProfile p;
  p.r = r;
  p.b = b;
  p.n = b * r - b * (b - 3) / 2;
  p.pd = (2 * b - 1) * r - (b - 1) * (b - 3);
  p.depth = r - b + 3;
  p.reg = r;
  for (int i = 0; i <= b - 1; ++i) p.extremal.push_back({p.pd - i, r - b + 1 + i, 1});
  return p;
}

}  // namespace beit
