#include "randlp/instance_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "randlp/errors.hpp"

namespace randlp {

std::string format_real(double v) {
  char buf[32];
  const int len = std::snprintf(buf, sizeof buf, "%.17g", v);
  return std::string(buf, static_cast<std::size_t>(len));
}

namespace {

void write_row(std::ostream& out, const std::vector<double>& values) {
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (j) out << ' ';
    out << format_real(values[j]);
  }
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

template <typename T>
T parse_number(std::string_view token, std::size_t line_no) {
  T value{};
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line_no, "expected a number, got '" + std::string(token) + "'");
  }
  return value;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

}  // namespace

void write_instance(const LPInstance& inst, std::ostream& out) {
  out << inst.n << ' ' << inst.m() << ' ' << inst.d() << ' ' << inst.params.seed << '\n';
  for (std::size_t i = 0; i < inst.m(); ++i) {
    const Inequality& q = inst.row(i);
    write_row(out, q.a);
    out << ' ' << format_real(q.b) << '\n';
  }
  write_row(out, inst.c);
  out << '\n';
}

void write_instance(const LPInstance& inst, const std::filesystem::path& path) {
  auto out = open_for_write(path);
  write_instance(inst, out);
  finish(out, path);
}

std::string instance_to_string(const LPInstance& inst) {
  std::ostringstream os;
  write_instance(inst, os);
  return os.str();
}

LPInstance read_instance(std::istream& in, const GeneratorParams& defaults) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(std::move(line));
  while (!lines.empty() && split(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) throw ParseError(1, "empty input, expected header 'n m d seed'");

  const auto header = split(lines[0]);
  if (header.size() != 4) {
    throw ParseError(1, "header must have 4 fields 'n m d seed', got " +
                            std::to_string(header.size()));
  }
  const auto n = parse_number<std::int64_t>(header[0], 1);
  const auto m = parse_number<std::int64_t>(header[1], 1);
  const auto d = parse_number<std::int64_t>(header[2], 1);
  const auto seed = parse_number<std::uint64_t>(header[3], 1);
  if (n < 1) throw ParseError(1, "n must be at least 1");
  if (d < 0) throw ParseError(1, "d must be non-negative");
  if (m != 2 * n + 1 + d) {
    throw ParseError(1, "header inconsistent: m = " + std::to_string(m) + " but 2n+1+d = " +
                            std::to_string(2 * n + 1 + d));
  }

  const auto rows = static_cast<std::size_t>(m);
  const std::size_t present = lines.size() - 1;  // constraint rows plus objective line
  if (present < rows + 1) {
    const std::size_t found = present == 0 ? 0 : present - 1;
    throw ParseError(lines.size() + 1,
                     "header declares m = " + std::to_string(m) + " constraint rows but only " +
                         std::to_string(found) + " are present before the objective line");
  }
  if (present > rows + 1) {
    throw ParseError(rows + 3, "unexpected data after the objective line; header declares m = " +
                                   std::to_string(m) + " constraint rows");
  }

  const auto dim = static_cast<std::size_t>(n);
  auto parse_values = [&](std::size_t line_no, std::size_t expected) {
    const auto tokens = split(lines[line_no - 1]);
    if (tokens.size() != expected) {
      throw ParseError(line_no, "expected " + std::to_string(expected) + " values, got " +
                                    std::to_string(tokens.size()));
    }
    std::vector<double> values(expected);
    for (std::size_t j = 0; j < expected; ++j) values[j] = parse_number<double>(tokens[j], line_no);
    return values;
  };

  LPInstance inst;
  inst.n = n;
  const std::size_t support_rows = 2 * dim + 1;
  for (std::size_t i = 0; i < rows; ++i) {
    auto values = parse_values(i + 2, dim + 1);
    Inequality q;
    q.b = values.back();
    values.pop_back();
    q.a = std::move(values);
    (i < support_rows ? inst.support : inst.random).push_back(std::move(q));
  }
  inst.c = parse_values(rows + 2, dim);

  inst.params = defaults;
  inst.params.n = n;
  inst.params.d = d;
  inst.params.seed = seed;
  inst.params.alpha = inst.support.front().b;
  inst.params.theta = inst.c.back();
  return inst;
}

LPInstance read_instance(const std::filesystem::path& path, const GeneratorParams& defaults) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  return read_instance(in, defaults);
}

void write_stats(const GenerationStats& stats, std::ostream& out) {
  out << "candidates_drawn = " << stats.candidates_drawn << '\n'
      << "rejected_distance = " << stats.rejected_distance << '\n'
      << "rejected_objective = " << stats.rejected_objective << '\n'
      << "rejected_similarity = " << stats.rejected_similarity << '\n'
      << "rejected_similarity_coordinator = " << stats.rejected_similarity_coordinator << '\n'
      << "submitted = " << stats.submitted << '\n'
      << "accepted = " << stats.accepted << '\n'
      << "discarded_after_exit = " << stats.discarded_after_exit << '\n'
      << "rounds = " << stats.rounds << '\n'
      << "wall_time_ms = " << format_real(stats.wall_time_ms) << '\n';
}

void write_stats(const GenerationStats& stats, const std::filesystem::path& path) {
  auto out = open_for_write(path);
  write_stats(stats, out);
  finish(out, path);
}

}  // namespace randlp
