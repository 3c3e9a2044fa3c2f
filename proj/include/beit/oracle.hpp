#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "beit/betti_table.hpp"
#include "beit/graph.hpp"
#include "beit/groebner.hpp"

namespace beit {

constexpr int kDefaultOracleCap = 5;
constexpr int kExtendedOracleCap = 6;

enum class OracleStrategy {
  /// Homology of the Koszul complex on S/J, graded piece by graded piece.
  Koszul,
  /// Minimal generators of successive syzygy modules by graded linear algebra.
  Syzygy,
};

const char* to_string(OracleStrategy s);

struct OracleOptions {
  std::uint32_t prime = kDefaultPrime;
  int cap = kDefaultOracleCap;
  OracleStrategy strategy = OracleStrategy::Koszul;
  MonomialOrder order = MonomialOrder::DegRevLex;
  /// Per-vertex multidegree bound scanned by the syzygy path.
  int syzygy_box = 2;
  /// Worker threads for the Koszul path; 0 means hardware concurrency.
  unsigned threads = 0;
};

/// Graded Betti numbers of S/J_G over GF(prime). Throws TooLarge above the
/// cap.
BettiTable betti_table(const Graph& g, const OracleOptions& options = {});

/// Koszul route over an existing basis of J_G. Multidegrees are scanned up
/// to the lcm of all leading monomials, which bounds the Betti support.
BettiTable koszul_betti_table(const GroebnerBasis& gb, unsigned threads = 1);

/// Syzygy route; needs no Groebner basis. Scans multidegrees whose vertex
/// components are at most `box` (0 for isolated vertices).
BettiTable syzygy_betti_table(const Graph& g, const PrimeField& field, int box = 2);

struct InvariantSummary {
  int n = 0;
  int pd = 0;
  int depth = 0;
  int reg = 0;
  int dim = 0;
  int cmdef = 0;
  std::vector<ExtremalEntry> extremal;
};

InvariantSummary summarize(const BettiTable& t, const Graph& g);

/// Consistency violations of a summary against its table: Auslander-Buchsbaum,
/// nonnegative defect, corner property of every extremal entry, and a unique
/// extremal entry whenever reg = 2. Empty when all hold.
std::vector<std::string> summary_violations(const InvariantSummary& s, const BettiTable& t);

/// Hilbert function of the basis against the alternating Betti sum in every
/// degree up to d_max. Throws IncompleteTable for uncertified tables.
bool euler_check(const BettiTable& t, const GroebnerBasis& gb, int d_max);

}  // namespace beit
