#include "zschur/tables.hpp"

#include <chrono>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "zschur/serialize.hpp"

namespace zschur {

namespace {

constexpr Expectation fin(long long v) { return {ExpKind::Finite, v}; }
constexpr Expectation inf() { return {ExpKind::Infinite, 0}; }
constexpr Expectation lbo(long long v) { return {ExpKind::LowerBoundOnly, v}; }

// Known values of S3(k;r), k = 2..12, r = 2..5.  The (10,5) cell is only a
// published lower bound.  Cells with r not dividing k are infinite.
const std::vector<KnownCell> kTable1 = {
    {1, 2, 2, fin(1), Tier::A, "matches 2k-3"},
    {1, 2, 3, inf(), Tier::A, ""},
    {1, 2, 4, inf(), Tier::A, ""},
    {1, 2, 5, inf(), Tier::A, ""},
    {1, 3, 2, inf(), Tier::A, ""},
    {1, 3, 3, fin(10), Tier::A, ""},
    {1, 3, 4, inf(), Tier::A, ""},
    {1, 3, 5, inf(), Tier::A, ""},
    {1, 4, 2, fin(5), Tier::A, "matches 2k-3"},
    {1, 4, 3, inf(), Tier::A, ""},
    {1, 4, 4, fin(13), Tier::A, ""},
    {1, 4, 5, inf(), Tier::A, ""},
    {1, 5, 2, inf(), Tier::A, ""},
    {1, 5, 3, inf(), Tier::A, ""},
    {1, 5, 4, inf(), Tier::A, ""},
    {1, 5, 5, fin(38), Tier::C, ""},
    {1, 6, 2, fin(9), Tier::A, "matches 2k-3"},
    {1, 6, 3, fin(15), Tier::B, "matches 3k-3"},
    {1, 6, 4, inf(), Tier::A, ""},
    {1, 6, 5, inf(), Tier::A, ""},
    {1, 7, 2, inf(), Tier::A, ""},
    {1, 7, 3, inf(), Tier::A, ""},
    {1, 7, 4, inf(), Tier::A, ""},
    {1, 7, 5, inf(), Tier::A, ""},
    {1, 8, 2, fin(13), Tier::A, "matches 2k-3"},
    {1, 8, 3, inf(), Tier::A, ""},
    {1, 8, 4, fin(27), Tier::B, "matches 4k-5"},
    {1, 8, 5, inf(), Tier::A, ""},
    {1, 9, 2, inf(), Tier::A, ""},
    {1, 9, 3, fin(24), Tier::B, "matches 3k-3"},
    {1, 9, 4, inf(), Tier::A, ""},
    {1, 9, 5, inf(), Tier::A, ""},
    {1, 10, 2, fin(17), Tier::A, "matches 2k-3"},
    {1, 10, 3, inf(), Tier::A, ""},
    {1, 10, 4, inf(), Tier::A, ""},
    {1, 10, 5, lbo(45), Tier::D, "published lower bound from a long run"},
    {1, 11, 2, inf(), Tier::A, ""},
    {1, 11, 3, inf(), Tier::A, ""},
    {1, 11, 4, inf(), Tier::A, ""},
    {1, 11, 5, inf(), Tier::A, ""},
    {1, 12, 2, fin(21), Tier::A, "matches 2k-3"},
    {1, 12, 3, fin(33), Tier::C, "matches 3k-3"},
    {1, 12, 4, fin(43), Tier::C, "matches 4k-5"},
    {1, 12, 5, inf(), Tier::A, ""},
};

// Known values of S32(k;r), same grid, colorings restricted to {0,1}.
const std::vector<KnownCell> kTable2 = {
    {2, 2, 2, fin(1), Tier::A, "matches 2k-3"},
    {2, 2, 3, inf(), Tier::A, ""},
    {2, 2, 4, inf(), Tier::A, ""},
    {2, 2, 5, inf(), Tier::A, ""},
    {2, 3, 2, inf(), Tier::A, ""},
    {2, 3, 3, fin(5), Tier::A, "matches k^2-k-1"},
    {2, 3, 4, inf(), Tier::A, ""},
    {2, 3, 5, inf(), Tier::A, ""},
    {2, 4, 2, fin(5), Tier::A, "matches 2k-3"},
    {2, 4, 3, inf(), Tier::A, ""},
    {2, 4, 4, fin(11), Tier::A, "matches k^2-k-1"},
    {2, 4, 5, inf(), Tier::A, ""},
    {2, 5, 2, inf(), Tier::A, ""},
    {2, 5, 3, inf(), Tier::A, ""},
    {2, 5, 4, inf(), Tier::A, ""},
    {2, 5, 5, fin(19), Tier::A, "matches k^2-k-1"},
    {2, 6, 2, fin(9), Tier::A, "matches 2k-3"},
    {2, 6, 3, fin(13), Tier::A, "matches 3k-5"},
    {2, 6, 4, inf(), Tier::A, ""},
    {2, 6, 5, inf(), Tier::A, ""},
    {2, 7, 2, inf(), Tier::A, ""},
    {2, 7, 3, inf(), Tier::A, ""},
    {2, 7, 4, inf(), Tier::A, ""},
    {2, 7, 5, inf(), Tier::A, ""},
    {2, 8, 2, fin(13), Tier::A, "matches 2k-3"},
    {2, 8, 3, inf(), Tier::A, ""},
    {2, 8, 4, fin(25), Tier::A, ""},
    {2, 8, 5, inf(), Tier::A, ""},
    {2, 9, 2, inf(), Tier::A, ""},
    {2, 9, 3, fin(22), Tier::B, "matches 3k-5"},
    {2, 9, 4, inf(), Tier::A, ""},
    {2, 9, 5, inf(), Tier::A, ""},
    {2, 10, 2, fin(17), Tier::A, "matches 2k-3"},
    {2, 10, 3, inf(), Tier::A, ""},
    {2, 10, 4, inf(), Tier::A, ""},
    {2, 10, 5, fin(41), Tier::C, ""},
    {2, 11, 2, inf(), Tier::A, ""},
    {2, 11, 3, inf(), Tier::A, ""},
    {2, 11, 4, inf(), Tier::A, ""},
    {2, 11, 5, inf(), Tier::A, ""},
    {2, 12, 2, fin(21), Tier::A, "matches 2k-3"},
    {2, 12, 3, fin(31), Tier::B, "matches 3k-5"},
    {2, 12, 4, fin(41), Tier::C, ""},
    {2, 12, 5, inf(), Tier::A, ""},
};

}  // namespace

const std::vector<KnownCell>& known_cells(int table) {
  if (table == 1) return kTable1;
  if (table == 2) return kTable2;
  throw std::invalid_argument("table must be 1 or 2");
}

Palette table_palette(int table) {
  if (table == 1) return Palette::Full;
  if (table == 2) return Palette::Binary;
  throw std::invalid_argument("table must be 1 or 2");
}

Verdict judge_cell(const Expectation& expected, const SearchOutcome& computed,
                   bool* new_result) {
  if (new_result) *new_result = false;
  switch (expected.kind) {
    case ExpKind::Infinite:
      return computed.status == Status::Infinite ? Verdict::Match : Verdict::Mismatch;
    case ExpKind::Finite:
      if (computed.status == Status::Finite)
        return computed.value == expected.value ? Verdict::Match : Verdict::Mismatch;
      if (computed.status == Status::Unresolved) {
        // an avoiding coloring at least as long as the value would disprove it
        if (computed.lower_bound >= expected.value) return Verdict::Mismatch;
        return Verdict::SkippedBudget;
      }
      return Verdict::Mismatch;
    case ExpKind::LowerBoundOnly:
      if (computed.status == Status::Infinite) return Verdict::Mismatch;
      if (computed.status == Status::Finite) {
        if (computed.value < expected.value) return Verdict::Mismatch;
        if (new_result) *new_result = true;
        return Verdict::ConsistentLowerBound;
      }
      if (new_result && computed.lower_bound + 1 > expected.value) *new_result = true;
      return Verdict::ConsistentLowerBound;
  }
  return Verdict::Mismatch;
}

bool CellFilter::selects(const KnownCell& cell) const {
  if (cells) {
    for (const auto& [k, r] : *cells)
      if (cell.k == k && cell.r == r) return true;
    return false;
  }
  switch (cell.tier) {
    case Tier::A: return tier_a;
    case Tier::B: return tier_b;
    case Tier::C: return tier_c;
    case Tier::D: return tier_d;
  }
  return false;
}

namespace {

std::string cache_key(int table, int k, int r, Palette palette) {
  return std::to_string(table) + ":" + std::to_string(k) + ":" + std::to_string(r) + ":" +
         palette_name(palette);
}

}  // namespace

std::vector<CellResult> reproduce_table(int table, const CellFilter& filter,
                                        const SearchLimits& per_cell_limits,
                                        const std::string& cache_path) {
  const auto& cells = known_cells(table);
  const Palette palette = table_palette(table);

  std::map<std::string, CellResult> cached;
  if (!cache_path.empty()) {
    std::ifstream probe(cache_path);
    if (probe.good()) {
      for (auto& cell : load_results(cache_path))
        cached[cache_key(cell.table, cell.k, cell.r, cell.palette)] = cell;
    }
  }

  std::vector<CellResult> results;
  for (const auto& known : cells) {
    if (!filter.selects(known)) continue;
    CellResult cell;
    cell.table = table;
    cell.k = known.k;
    cell.r = known.r;
    cell.palette = palette;
    cell.expected = known.expected;

    const auto it = cached.find(cache_key(table, known.k, known.r, palette));
    if (it != cached.end()) {
      cell = it->second;
      cell.from_cache = true;
    } else {
      const auto t0 = std::chrono::steady_clock::now();
      cell.computed = compute_number(Params{known.k, known.r, palette}, per_cell_limits);
      cell.elapsed_s =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      cell.verdict = judge_cell(cell.expected, cell.computed, &cell.new_result);
    }
    results.push_back(std::move(cell));
  }

  if (!cache_path.empty()) {
    std::map<std::string, CellResult> merged = cached;
    for (const auto& cell : results)
      merged[cache_key(cell.table, cell.k, cell.r, cell.palette)] = cell;
    std::vector<CellResult> to_save;
    to_save.reserve(merged.size());
    for (auto& [key, cell] : merged) to_save.push_back(cell);
    save_results(to_save, cache_path);
  }
  return results;
}

void save_results(const std::vector<CellResult>& results, const std::string& path) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& cell : results) entries.push_back(to_json(cell));
  nlohmann::json doc{{"engine_version", kEngineVersion}, {"results", std::move(entries)}};
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open cache file for writing: " + path);
  out << doc.dump(2) << "\n";
}

std::vector<CellResult> load_results(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open cache file: " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& err) {
    throw std::runtime_error("cache parse error at byte " + std::to_string(err.byte) + ": " +
                             err.what());
  }
  std::vector<CellResult> results;
  if (doc.value("engine_version", "") != kEngineVersion)
    return results;  // stale cache, never reuse across engine changes
  for (const auto& entry : doc.at("results")) results.push_back(cell_from_json(entry));
  return results;
}

std::string render_grid(int table, const std::vector<CellResult>& results) {
  std::map<std::pair<int, int>, const CellResult*> by_cell;
  for (const auto& cell : results) by_cell[{cell.k, cell.r}] = &cell;

  std::ostringstream out;
  out << (table == 1 ? "S3(k;r)" : "S32(k;r)") << "  computed vs known\n";
  out << "  k\\r";
  for (int r = 2; r <= 5; ++r) out << "      " << r << "     ";
  out << "\n";
  for (int k = 2; k <= 12; ++k) {
    out << (k < 10 ? "   " : "  ") << k;
    for (int r = 2; r <= 5; ++r) {
      const auto it = by_cell.find({k, r});
      std::string text = "-";
      if (it != by_cell.end()) {
        const CellResult& cell = *it->second;
        switch (cell.computed.status) {
          case Status::Infinite: text = "inf"; break;
          case Status::Finite: text = std::to_string(cell.computed.value); break;
          case Status::Unresolved:
            text = ">=" + std::to_string(cell.computed.lower_bound + 1);
            break;
        }
        switch (cell.verdict) {
          case Verdict::Match: text += " ok"; break;
          case Verdict::Mismatch: text += " XX"; break;
          case Verdict::SkippedBudget: text += " ??"; break;
          case Verdict::ConsistentLowerBound: text += cell.new_result ? " !!" : " ok"; break;
        }
      }
      out << "  " << text;
      for (size_t pad = text.size(); pad < 9; ++pad) out << ' ';
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace zschur
