#pragma once

#include <vector>

#include "beit/betti_table.hpp"
#include "beit/graph.hpp"

namespace beit {

/// Betti table of S/J for the cone over H, from H's complete table and clique
/// counts. Rows: j = 1 from cliques, j = 2 with the binomial correction,
/// j >= 3 as the (1,2,1) shift of H's row. Throws CompleteInput for complete H.
BettiTable betti_cone_formula(const BettiTable& betti_h, const CliqueVector& cliques_h, int n);

/// Closed-form table of the wheel W_n = cone(C_n), n >= 5. n = 4 throws
/// UnsupportedSize because its j = 2 and j = n-2 rows coincide.
BettiTable wheel_betti(int n);

/// Complete-intersection table of the path P_m: beta_{i,2i} = C(m-1, i).
BettiTable path_betti(int m);

/// Betti table of a disjoint union: the convolution of the factors' tables.
BettiTable betti_disjoint_union(const BettiTable& a, const BettiTable& b);

/// Depth of the cone over H on n vertices.
int depth_cone(int depth_h, int n, bool h_connected);

/// Cohen-Macaulay defect of the cone over a connected non-complete H.
int cmdef_cone(int dim_h, int cmdef_h, int n);

/// Defect of K_q * H for connected H on n vertices.
int cmdef_complete_join(int dim_h, int cmdef_h, int n, int q);

struct JoinFactor {
  int depth = 0;
  int n = 0;
  bool connected = true;
  bool complete = false;
};

/// Depth of G_1 * G_2. A disconnected G_1 must come with a disconnected G_2
/// and n_2 >= n_1, otherwise BadOrientation.
int depth_join(const JoinFactor& g1, const JoinFactor& g2);

/// Depth of the complete multipartite graph: smallest part + 2.
int depth_multipartite(std::vector<int> parts);

/// Depth of a disjoint union: the component depths add.
int depth_disjoint_union(const std::vector<int>& component_depths);

/// Extremal entries of K_q * H from those of connected non-complete H:
/// (i, j, v) -> (i + 2q, j, v).
std::vector<ExtremalEntry> extremal_transfer_cone(const std::vector<ExtremalEntry>& extremal_h,
                                                  int q = 1);

/// Predicted invariants of G_{r,b} = P_{r-b+2} * ... * P_{r+1}.
struct GrbProfile {
  int r = 0;
  int b = 0;
  int n = 0;
  int pd = 0;
  int depth = 0;
  int reg = 0;
  /// (pd - i, r - b + 1 + i, 1) for i = 0..b-1.
  std::vector<ExtremalEntry> extremal;
};

GrbProfile grb_profile(int r, int b);

/// Binomial coefficient, 0 outside 0 <= k <= n.
long long choose(long long n, long long k);

}  // namespace beit
