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


#include "svsim/circuit_io.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace svsim {
namespace {

std::string_view Trim(std::string_view s) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos
                                        ? std::string_view::npos
                                        : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

int ParseInt(std::string_view s, int line, std::string_view what) {
  s = Trim(s);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(line, "invalid " + std::string(what) + " '" +
                               std::string(s) + "'");
  }
  return value;
}

double ParseReal(std::string_view s, int line) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(line, "invalid real '" + std::string(s) + "'");
  }
  return value;
}

Gate ParseGate(std::string_view text, int line) {
  text = Trim(text);
  const std::size_t space = text.find_first_of(" \t");
  if (text.empty() || space == std::string_view::npos) {
    throw ParseError(line, "expected 'KIND targets', got '" +
                               std::string(text) + "'");
  }
  const std::string_view kind_name = text.substr(0, space);
  const std::optional<GateKind> kind = ParseGateKind(kind_name);
  if (!kind) {
    throw ParseError(line, "unknown gate kind '" + std::string(kind_name) + "'");
  }
  std::string_view rest = Trim(text.substr(space));
  std::string_view matrix_text;
  const std::size_t bracket = rest.find('[');
  if (bracket != std::string_view::npos) {
    if (rest.back() != ']') {
      throw ParseError(line, "unterminated matrix in '" + std::string(text) + "'");
    }
    matrix_text = rest.substr(bracket + 1, rest.size() - bracket - 2);
    rest = Trim(rest.substr(0, bracket));
  }
  if (rest.find_first_of(" \t") != std::string_view::npos) {
    throw ParseError(line, "targets must be comma-separated without spaces: '" +
                               std::string(rest) + "'");
  }
  std::vector<int> targets;
  for (std::string_view t : Split(rest, ',')) {
    targets.push_back(ParseInt(t, line, "qubit index"));
  }
  try {
    if (*kind != GateKind::kCustom) {
      if (bracket != std::string_view::npos) {
        throw ParseError(line, std::string(kind_name) + " takes no matrix");
      }
      return Gate(*kind, std::span<const int>(targets));
    }
    if (bracket == std::string_view::npos) {
      throw ParseError(line, "Custom gate needs a [matrix]");
    }
    std::vector<double> reals;
    std::size_t pos = 0;
    while (pos < matrix_text.size()) {
      const std::size_t start = matrix_text.find_first_not_of(" \t", pos);
      if (start == std::string_view::npos) break;
      std::size_t end = matrix_text.find_first_of(" \t", start);
      if (end == std::string_view::npos) end = matrix_text.size();
      reals.push_back(ParseReal(matrix_text.substr(start, end - start), line));
      pos = end;
    }
    const std::size_t k = targets.size();
    const std::size_t expected = 2 * (std::size_t{1} << (2 * k));
    if (k < 1 || k > kMaxGateArity || reals.size() != expected) {
      throw ParseError(line, "Custom gate on " + std::to_string(k) +
                                 " qubit(s) needs " + std::to_string(expected) +
                                 " reals, got " + std::to_string(reals.size()));
    }
    std::vector<Amplitude> entries(expected / 2);
    for (std::size_t i = 0; i < entries.size(); ++i) {
      entries[i] = Amplitude(reals[2 * i], reals[2 * i + 1]);
    }
    return Gate(GateMatrix(static_cast<int>(k), std::move(entries)),
                std::span<const int>(targets));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(line, e.what());
  }
}

}  // namespace

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " +
                                        message
                                  : message),
      line_(line) {}

std::string FormatReal(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::string PrintCircuit(const Circuit& circuit) {
  std::ostringstream out;
  out << "qubits: " << circuit.num_qubits() << "\n";
  out << "family: " << FamilyName(circuit.family()) << "\n";
  for (const auto& [key, value] : circuit.metadata()) {
    out << "meta." << key << ":";
    if (!value.empty()) out << " " << value;
    out << "\n";
  }
  for (const Moment& moment : circuit.moments()) {
    if (moment.empty()) {
      out << "-\n";
      continue;
    }
    bool first_gate = true;
    for (const Gate& gate : moment.gates()) {
      if (!first_gate) out << "; ";
      first_gate = false;
      out << GateKindName(gate.kind()) << " ";
      bool first_target = true;
      for (int q : gate.targets()) {
        if (!first_target) out << ",";
        first_target = false;
        out << q;
      }
      if (gate.custom_matrix()) {
        out << " [";
        bool first_real = true;
        for (const Amplitude& a : gate.custom_matrix()->entries()) {
          if (!first_real) out << " ";
          first_real = false;
          out << FormatReal(a.real()) << " " << FormatReal(a.imag());
        }
        out << "]";
      }
    }
    out << "\n";
  }
  return out.str();
}

Circuit ParseCircuit(std::string_view text) {
  std::optional<int> num_qubits;
  CircuitFamily family = CircuitFamily::kCustom;
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::pair<int, std::string_view>> moment_lines;

  int line_no = 0;
  for (std::string_view raw : Split(text, '\n')) {
    ++line_no;
    const std::string_view line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const std::size_t colon = line.find(':');
    const bool is_header =
        colon != std::string_view::npos &&
        line.substr(0, colon).find_first_of(" \t;") == std::string_view::npos;
    if (!is_header) {
      moment_lines.emplace_back(line_no, line);
      continue;
    }
    if (!moment_lines.empty()) {
      throw ParseError(line_no, "header after the first moment");
    }
    const std::string_view key = line.substr(0, colon);
    const std::string_view value = Trim(line.substr(colon + 1));
    if (key == "qubits") {
      if (num_qubits) throw ParseError(line_no, "duplicate 'qubits' header");
      num_qubits = ParseInt(value, line_no, "qubit count");
      if (*num_qubits < 1) {
        throw ParseError(line_no, "qubit count must be positive");
      }
    } else if (key == "family") {
      const auto parsed = ParseFamily(value);
      if (!parsed) {
        throw ParseError(line_no, "unknown family '" + std::string(value) + "'");
      }
      family = *parsed;
    } else if (key.starts_with("meta.")) {
      metadata.emplace_back(std::string(key.substr(5)), std::string(value));
    } else {
      throw ParseError(line_no, "unknown header '" + std::string(key) + "'");
    }
  }
  if (!num_qubits) {
    if (!moment_lines.empty()) {
      throw ParseError(moment_lines.front().first,
                       "moment before the 'qubits' header");
    }
    throw ParseError(0, "missing 'qubits' header");
  }

  Circuit circuit(*num_qubits, family);
  for (auto& [key, value] : metadata) {
    try {
      circuit.SetMetadata(key, std::move(value));
    } catch (const std::invalid_argument& e) {
      throw ParseError(0, e.what());
    }
  }
  for (const auto& [number, line] : moment_lines) {
    Moment moment;
    if (line != "-") {
      for (std::string_view gate_text : Split(line, ';')) {
        Gate gate = ParseGate(gate_text, number);
        if (gate.MaxTarget() >= *num_qubits) {
          throw ParseError(number, "qubit " + std::to_string(gate.MaxTarget()) +
                                       " out of range for " +
                                       std::to_string(*num_qubits) + " qubits");
        }
        if (moment.Overlaps(gate)) {
          throw ParseError(number, "gates in one moment share a qubit");
        }
        moment.Add(std::move(gate));
      }
    }
    circuit.AddMoment(std::move(moment));
  }
  return circuit;
}

Circuit ReadCircuitFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open circuit file '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseCircuit(buffer.str());
}

void WriteCircuitFile(const std::filesystem::path& path,
                      const Circuit& circuit) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot write circuit file '" + path.string() + "'");
  }
  out << PrintCircuit(circuit);
  if (!out) {
    throw std::runtime_error("failed writing circuit file '" + path.string() + "'");
  }
}

}  // namespace svsim
