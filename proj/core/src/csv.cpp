#include "majority/csv.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <stdexcept>
#include <system_error>

namespace majority {

namespace {

constexpr std::string_view kHeader =
    "experiment,strategy,n,k,f1,f2,f,m,seed,slice,occupied_count,"
    "occupied_fraction,top1,top2,top3,avg_max_prob,converged";
constexpr int kColumns = 17;

void append_u64(std::string& out, std::uint64_t v) {
  std::array<char, 20> buf;
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  out.append(buf.data(), ptr);
}

template <typename T>
T parse_unsigned(std::string_view cell, std::string_view column) {
  T value{};
  auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc{} || ptr != cell.data() + cell.size()) {
    throw std::invalid_argument("bad " + std::string(column) + " value: '" +
                                std::string(cell) + "'");
  }
  return value;
}

double parse_double_cell(std::string_view cell, std::string_view column) {
  double value{};
  auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc{} || ptr != cell.data() + cell.size()) {
    throw std::invalid_argument("bad " + std::string(column) + " value: '" +
                                std::string(cell) + "'");
  }
  return value;
}

std::vector<std::string_view> split_line(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      cells.push_back(line.substr(start));
      break;
    }
    cells.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return cells;
}

}  // namespace

std::string format_double(double value) {
  std::array<char, 32> buf;
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) throw std::runtime_error("double formatting failed");
  return std::string(buf.data(), ptr);
}

std::string_view csv_header() { return kHeader; }

std::string format_rows_csv(std::span<const ResultRow> rows) {
  std::string out;
  out.reserve(rows.size() * 96 + kHeader.size() + 1);
  out.append(kHeader);
  out.push_back('\n');
  for (const ResultRow& r : rows) {
    if (r.experiment.find(',') != std::string::npos ||
        r.experiment.find('\n') != std::string::npos) {
      throw std::invalid_argument("experiment name must not contain ',' or newline");
    }
    out.append(r.experiment);
    out.push_back(',');
    out.append(to_string(r.kind));
    out.push_back(',');
    append_u64(out, r.n);
    out.push_back(',');
    if (r.k) append_u64(out, *r.k);
    out.push_back(',');
    if (r.f1) out.append(format_double(*r.f1));
    out.push_back(',');
    if (r.f2) out.append(format_double(*r.f2));
    out.push_back(',');
    if (r.f) out.append(format_double(*r.f));
    out.push_back(',');
    if (r.m) append_u64(out, *r.m);
    out.push_back(',');
    append_u64(out, r.seed);
    out.push_back(',');
    append_u64(out, r.slice);
    out.push_back(',');
    append_u64(out, r.occupied_count);
    out.push_back(',');
    out.append(format_double(r.occupied_fraction));
    out.push_back(',');
    append_u64(out, r.top1);
    out.push_back(',');
    append_u64(out, r.top2);
    out.push_back(',');
    append_u64(out, r.top3);
    out.push_back(',');
    out.append(format_double(r.avg_max_prob));
    out.push_back(',');
    out.push_back(r.converged ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

std::vector<ResultRow> parse_rows_csv(std::string_view text) {
  std::vector<ResultRow> rows;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = (eol == std::string_view::npos)
                                ? text.substr(pos)
                                : text.substr(pos, eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() : eol + 1;
    ++line_no;
    if (line.empty()) continue;
    if (line_no == 1) {
      if (line != kHeader) {
        throw std::invalid_argument("unrecognized header line: '" +
                                    std::string(line) + "'");
      }
      continue;
    }
    auto cells = split_line(line);
    if (cells.size() != kColumns) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected " +
                                  std::to_string(kColumns) + " columns, got " +
                                  std::to_string(cells.size()));
    }
    ResultRow r;
    r.experiment = std::string(cells[0]);
    auto kind = parse_strategy_kind(cells[1]);
    if (!kind) {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": unknown strategy '" + std::string(cells[1]) +
                                  "'");
    }
    r.kind = *kind;
    r.n = parse_unsigned<std::uint32_t>(cells[2], "n");
    if (!cells[3].empty()) r.k = parse_unsigned<std::uint32_t>(cells[3], "k");
    if (!cells[4].empty()) r.f1 = parse_double_cell(cells[4], "f1");
    if (!cells[5].empty()) r.f2 = parse_double_cell(cells[5], "f2");
    if (!cells[6].empty()) r.f = parse_double_cell(cells[6], "f");
    if (!cells[7].empty()) r.m = parse_unsigned<std::uint32_t>(cells[7], "m");
    r.seed = parse_unsigned<std::uint64_t>(cells[8], "seed");
    r.slice = parse_unsigned<std::uint32_t>(cells[9], "slice");
    r.occupied_count = parse_unsigned<std::uint32_t>(cells[10], "occupied_count");
    r.occupied_fraction = parse_double_cell(cells[11], "occupied_fraction");
    r.top1 = parse_unsigned<std::uint32_t>(cells[12], "top1");
    r.top2 = parse_unsigned<std::uint32_t>(cells[13], "top2");
    r.top3 = parse_unsigned<std::uint32_t>(cells[14], "top3");
    r.avg_max_prob = parse_double_cell(cells[15], "avg_max_prob");
    if (cells[16] == "1") {
      r.converged = true;
    } else if (cells[16] == "0") {
      r.converged = false;
    } else {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": converged must be 0 or 1");
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<ResultRow> rows_from_trajectory(std::string_view experiment,
                                            const StrategyConfig& strategy,
                                            std::uint32_t n,
                                            std::uint64_t seed,
                                            const Trajectory& traj) {
  ResultRow base;
  base.experiment = std::string(experiment);
  base.kind = strategy.kind;
  base.n = n;
  base.seed = seed;
  if (strategy.kind == StrategyKind::NoLearning ||
      strategy.is_ex_ante_family()) {
    base.k = strategy.k;
  }
  if (strategy.is_symmetric()) {
    base.f1 = strategy.f1;
    base.f2 = strategy.f2;
  }
  if (strategy.is_asymmetric()) {
    base.f = strategy.f;
  }
  if (strategy.kind == StrategyKind::Polya) {
    base.m = strategy.m;
  }

  std::vector<ResultRow> rows;
  rows.reserve(traj.records.size());
  for (const SliceRecord& rec : traj.records) {
    ResultRow r = base;
    r.slice = rec.slice;
    r.occupied_count = rec.occupied_count;
    r.occupied_fraction = rec.occupied_fraction;
    r.top1 = rec.top_counts[0];
    r.top2 = rec.top_counts[1];
    r.top3 = rec.top_counts[2];
    r.avg_max_prob = rec.avg_max_prob;
    r.converged = rec.converged;
    rows.push_back(std::move(r));
  }
  return rows;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string digest_hex(std::string_view bytes) {
  std::uint64_t h = fnv1a64(bytes);
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return std::string(buf, 16);
}

}  // namespace majority
