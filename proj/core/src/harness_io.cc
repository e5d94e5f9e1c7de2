// Copyright 2026 The svsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "svsim/circuit_io.h"
#include "svsim/harness.h"

namespace svsim {
namespace {

void CheckLabel(const std::string& label) {
  if (label.find_first_of(",\n\r\t") != std::string::npos) {
    throw std::invalid_argument("label '" + label +
                                "' cannot be written to CSV");
  }
}

class CsvReader {
 public:
  CsvReader(std::istream& in, std::string_view header, std::size_t columns)
      : in_(in), columns_(columns) {
    std::string line;
    if (!std::getline(in_, line)) Fail("missing header");
    ++line_no_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != header) Fail("expected header '" + std::string(header) + "'");
  }

  // Next data row split on commas; false at end of input.
  bool Next(std::vector<std::string>& fields) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      fields.clear();
      std::size_t start = 0;
      while (true) {
        const std::size_t comma = line.find(',', start);
        fields.push_back(line.substr(start, comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      if (fields.size() != columns_) {
        Fail("expected " + std::to_string(columns_) + " fields, got " +
             std::to_string(fields.size()));
      }
      return true;
    }
    return false;
  }

  template <typename T>
  T Number(const std::string& field) const {
    T value{};
    const auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() ||
        ptr != field.data() + field.size()) {
      Fail("invalid number '" + field + "'");
    }
    return value;
  }

  [[noreturn]] void Fail(const std::string& message) const {
    throw std::runtime_error("CSV line " + std::to_string(line_no_) + ": " +
                             message);
  }

 private:
  std::istream& in_;
  std::size_t columns_;
  int line_no_ = 0;
};

}  // namespace

void WriteRecordsCsv(std::ostream& out,
                     std::span<const BenchmarkRecord> records) {
  out << kRecordHeader << "\n";
  for (const BenchmarkRecord& r : records) {
    CheckLabel(r.family);
    CheckLabel(r.backend);
    out << r.family << ',' << r.width << ',' << r.depth << ',' << r.gate_count
        << ',' << r.backend << ',' << r.seed << ',' << r.rep << ','
        << FormatReal(r.seconds) << "\n";
  }
}

void WriteAggregatesCsv(std::ostream& out, std::span<const AggregateRow> rows) {
  out << kAggregateHeader << "\n";
  for (const AggregateRow& r : rows) {
    CheckLabel(r.family);
    CheckLabel(r.backend);
    out << r.family << ',' << r.width << ',' << r.backend << ','
        << r.repetitions << ',' << FormatReal(r.mean_seconds) << ','
        << FormatReal(r.stddev_seconds) << "\n";
  }
}

void WriteSpeedupsCsv(std::ostream& out, std::span<const SpeedupRow> rows) {
  out << kSpeedupHeader << "\n";
  for (const SpeedupRow& r : rows) {
    CheckLabel(r.family);
    CheckLabel(r.baseline);
    CheckLabel(r.subject);
    out << r.family << ',' << r.width << ',' << r.baseline << ',' << r.subject
        << ',' << FormatReal(r.ratio) << "\n";
  }
}

std::vector<BenchmarkRecord> ParseRecordsCsv(std::istream& in) {
  CsvReader reader(in, kRecordHeader, 8);
  std::vector<BenchmarkRecord> out;
  std::vector<std::string> f;
  while (reader.Next(f)) {
    out.push_back({f[0], reader.Number<int>(f[1]), reader.Number<int>(f[2]),
                   reader.Number<std::int64_t>(f[3]), f[4],
                   reader.Number<std::uint64_t>(f[5]), reader.Number<int>(f[6]),
                   reader.Number<double>(f[7])});
  }
  return out;
}

std::vector<AggregateRow> ParseAggregatesCsv(std::istream& in) {
  CsvReader reader(in, kAggregateHeader, 6);
  std::vector<AggregateRow> out;
  std::vector<std::string> f;
  while (reader.Next(f)) {
    out.push_back({f[0], reader.Number<int>(f[1]), f[2],
                   reader.Number<int>(f[3]), reader.Number<double>(f[4]),
                   reader.Number<double>(f[5])});
  }
  return out;
}

std::vector<SpeedupRow> ParseSpeedupsCsv(std::istream& in) {
  CsvReader reader(in, kSpeedupHeader, 5);
  std::vector<SpeedupRow> out;
  std::vector<std::string> f;
  while (reader.Next(f)) {
    out.push_back({f[0], reader.Number<int>(f[1]), f[2], f[3],
                   reader.Number<double>(f[4])});
  }
  return out;
}

std::vector<std::filesystem::path> WritePlotData(
    const std::filesystem::path& directory, std::span<const AggregateRow> rows,
    std::string_view prefix) {
  std::map<std::pair<std::string, std::string>, std::map<int, double>> series;
  for (const AggregateRow& r : rows) {
    CheckLabel(r.family);
    CheckLabel(r.backend);
    series[{r.family, r.backend}][r.width] = r.mean_seconds;
  }
  std::filesystem::create_directories(directory);
  std::vector<std::filesystem::path> written;
  for (const auto& [key, points] : series) {
    const auto path = directory / (std::string(prefix) + key.first + "_" +
                                   key.second + ".tsv");
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << "width\tmean_seconds\n";
    for (const auto& [width, mean] : points) {
      out << width << '\t' << FormatReal(mean) << "\n";
    }
    written.push_back(path);
  }
  return written;
}

}  // namespace svsim
