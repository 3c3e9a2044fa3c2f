#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace beit {

/// Position in (homological degree i, row j = d - i) form plus multiplicity.
struct ExtremalEntry {
  int i = 0;
  int j = 0;
  std::uint64_t value = 0;

  friend bool operator==(const ExtremalEntry&, const ExtremalEntry&) = default;
  friend auto operator<=>(const ExtremalEntry&, const ExtremalEntry&) = default;
};

/// Graded Betti numbers beta_{i,d} of S/J for a graph on n vertices.
/// A prime of 0 marks a table produced by closed-form formulas.
class BettiTable {
 public:
  BettiTable() = default;
  explicit BettiTable(int n, std::uint32_t prime = 0) : n_(n), prime_(prime) {}

  int n() const { return n_; }
  std::uint32_t prime() const { return prime_; }

  std::uint64_t get(int i, int d) const;
  std::uint64_t beta(int i, int j) const { return get(i, i + j); }
  /// Setting 0 removes the entry.
  void set(int i, int d, std::uint64_t value);
  void add(int i, int d, std::uint64_t value) { set(i, d, get(i, d) + value); }

  const std::map<std::pair<int, int>, std::uint64_t>& entries() const { return entries_; }

  /// Bounds (max i, max d) up to which every entry was computed.
  const std::optional<std::pair<int, int>>& complete_through() const { return complete_; }
  void certify(int max_i, int max_d) { complete_ = std::make_pair(max_i, max_d); }
  bool is_complete() const { return complete_.has_value(); }

  int projective_dimension() const;
  int regularity() const;

  /// Corners of the diagram: nonzero beta_{i,i+j} with nothing nonzero
  /// weakly south-east of it. Sorted by descending i.
  std::vector<ExtremalEntry> extremal() const;

  /// Same nonzero entries, ignoring prime and certification.
  bool same_entries(const BettiTable& other) const { return entries_ == other.entries_; }

 private:
  int n_ = 0;
  std::uint32_t prime_ = 0;
  std::map<std::pair<int, int>, std::uint64_t> entries_;
  std::optional<std::pair<int, int>> complete_;
};

/// Grid with columns i and rows j = d - i, zero cells printed as 0.
std::string render_diagram(const BettiTable& t);

/// {"n", "p", "entries": [{"i","d","beta"}], "complete_through": [imax, dmax]}
std::string to_json(const BettiTable& t);
BettiTable table_from_json(const std::string& text);

/// Header "i,d,j,beta" then one row per nonzero entry.
std::string to_csv(const BettiTable& t);

/// Lists differing cells as "(i,d): a vs b".
std::vector<std::string> diff_tables(const BettiTable& a, const BettiTable& b);

}  // namespace beit
