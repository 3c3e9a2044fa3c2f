#include "beit/betti_table.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "beit/error.hpp"

namespace beit {

std::uint64_t BettiTable::get(int i, int d) const {
  auto it = entries_.find({i, d});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::set(int i, int d, std::uint64_t value) {
  if (value == 0) {
    entries_.erase({i, d});
  } else {
    entries_[{i, d}] = value;
  }
}

int BettiTable::projective_dimension() const {
  int pd = 0;
  for (const auto& [key, v] : entries_) pd = std::max(pd, key.first);
  return pd;
}

int BettiTable::regularity() const {
  int reg = 0;
  for (const auto& [key, v] : entries_) reg = std::max(reg, key.second - key.first);
  return reg;
}

std::vector<ExtremalEntry> BettiTable::extremal() const {
  std::vector<ExtremalEntry> out;
  for (const auto& [key, v] : entries_) {
    const int i = key.first, j = key.second - key.first;
    bool corner = std::none_of(entries_.begin(), entries_.end(), [&](const auto& other) {
      const int r = other.first.first, s = other.first.second - other.first.first;
      return r >= i && s >= j && (r != i || s != j);
    });
    if (corner) out.push_back({i, j, v});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.i > b.i; });
  return out;
}

std::string render_diagram(const BettiTable& t) {
  const int pd = t.projective_dimension();
  const int reg = t.regularity();
  std::size_t width = 1;
  for (const auto& [key, v] : t.entries()) width = std::max(width, std::to_string(v).size());
  for (int i = 0; i <= pd; ++i) width = std::max(width, std::to_string(i).size());
  const std::size_t label = std::max<std::size_t>(1, std::to_string(reg).size());

  auto cell = [&](const std::string& s) {
    return std::string(width - s.size(), ' ') + s;
  };
  std::ostringstream os;
  os << std::string(label, ' ') << " |";
  for (int i = 0; i <= pd; ++i) os << ' ' << cell(std::to_string(i));
  os << '\n' << std::string(label + 1, '-') << '+'
     << std::string(static_cast<std::size_t>(pd + 1) * (width + 1), '-') << '\n';
  for (int j = 0; j <= reg; ++j) {
    std::string lj = std::to_string(j);
    os << std::string(label - lj.size(), ' ') << lj << " |";
    for (int i = 0; i <= pd; ++i) os << ' ' << cell(std::to_string(t.beta(i, j)));
    os << '\n';
  }
  return os.str();
}

std::string to_json(const BettiTable& t) {
  nlohmann::ordered_json j;
  j["n"] = t.n();
  j["p"] = t.prime();
  auto entries = nlohmann::ordered_json::array();
  for (const auto& [key, v] : t.entries()) {
    nlohmann::ordered_json e;
    e["i"] = key.first;
    e["d"] = key.second;
    e["beta"] = v;
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  if (t.complete_through()) {
    j["complete_through"] = {t.complete_through()->first, t.complete_through()->second};
  } else {
    j["complete_through"] = nullptr;
  }
  return j.dump();
}

BettiTable table_from_json(const std::string& text) {
  try {
    auto j = nlohmann::json::parse(text);
    BettiTable t(j.at("n").get<int>(), j.at("p").get<std::uint32_t>());
    for (const auto& e : j.at("entries")) {
      const int i = e.at("i").get<int>(), d = e.at("d").get<int>();
      const auto beta = e.at("beta").get<std::uint64_t>();
      if (beta == 0) throw Error(ErrorKind::ParseError, "zero multiplicity listed");
      if (t.get(i, d) != 0) throw Error(ErrorKind::ParseError, "duplicate table entry");
      t.set(i, d, beta);
    }
    if (j.contains("complete_through") && !j["complete_through"].is_null()) {
      const auto& c = j["complete_through"];
      t.certify(c.at(0).get<int>(), c.at(1).get<int>());
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

std::string to_csv(const BettiTable& t) {
  std::ostringstream os;
  os << "i,d,j,beta\n";
  for (const auto& [key, v] : t.entries()) {
    os << key.first << ',' << key.second << ',' << key.second - key.first << ',' << v << '\n';
  }
  return os.str();
}

std::vector<std::string> diff_tables(const BettiTable& a, const BettiTable& b) {
  std::map<std::pair<int, int>, std::pair<std::uint64_t, std::uint64_t>> cells;
  for (const auto& [k, v] : a.entries()) cells[k].first = v;
  for (const auto& [k, v] : b.entries()) cells[k].second = v;
  std::vector<std::string> out;
  for (const auto& [k, v] : cells) {
    if (v.first != v.second) {
      out.push_back("(" + std::to_string(k.first) + "," + std::to_string(k.second) +
                    "): " + std::to_string(v.first) + " vs " + std::to_string(v.second));
    }
  }
  return out;
}

}  // namespace beit
