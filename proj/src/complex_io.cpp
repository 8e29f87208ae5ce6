#include "overlap/complex_io.hpp"

#include "overlap/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace overlap {

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> logical_lines(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.emplace_back(line);
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

namespace {

bool starts_with_key(std::string_view line, std::string_view key, std::string_view& rest) {
  if (line.substr(0, key.size()) != key) return false;
  rest = line.substr(key.size());
  return true;
}

// Parses "<digits>:" at the start of rest, e.g. "1: a b" -> (1, " a b").
int take_dimension(std::string_view& rest, int line) {
  std::size_t i = 0;
  int k = 0;
  while (i < rest.size() && std::isdigit(static_cast<unsigned char>(rest[i]))) k = k * 10 + (rest[i++] - '0');
  if (i == 0 || i >= rest.size() || rest[i] != ':') throw ValidationError("expected '<k>:' after key", line);
  rest = rest.substr(i + 1);
  return k;
}

std::string label_of(const nlohmann::json& v, int line) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  throw ValidationError("simplex vertices must be integers or strings", line);
}

}  // namespace

ComplexSkeleton parse_complex(std::string_view text) {
  const auto lines = logical_lines(text);
  std::vector<std::vector<std::string>> simplices;
  bool have_simplices = false;
  CellSpec spec;
  bool have_cells = false;
  int last_line = 0;

  for (std::size_t i = 0; i < lines.size(); ++i) {
    const int lineno = static_cast<int>(i) + 1;
    std::string_view line = trim(lines[i]);
    if (line.empty()) continue;
    last_line = lineno;
    std::string_view rest;
    if (starts_with_key(line, "maximal_simplices:", rest)) {
      if (have_simplices) throw ValidationError("maximal_simplices given twice", lineno);
      have_simplices = true;
      std::string buffer(rest);
      int depth = 0;
      auto scan = [&](std::string_view s) {
        for (char c : s) depth += (c == '[') - (c == ']');
      };
      scan(rest);
      while ((depth > 0 || trim(buffer).empty()) && i + 1 < lines.size()) {
        ++i;
        buffer += "\n" + lines[i];
        scan(lines[i]);
      }
      nlohmann::json arr;
      try {
        arr = nlohmann::json::parse(buffer);
      } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string("malformed simplex list: ") + e.what(), lineno);
      }
      if (!arr.is_array()) throw ValidationError("maximal_simplices must be a list of lists", lineno);
      for (const auto& s : arr) {
        if (!s.is_array()) throw ValidationError("maximal_simplices must be a list of lists", lineno);
        std::vector<std::string> labels;
        for (const auto& v : s) labels.push_back(label_of(v, lineno));
        simplices.push_back(std::move(labels));
      }
    } else if (starts_with_key(line, "cells", rest)) {
      have_cells = true;
      const int k = take_dimension(rest, lineno);
      if (spec.cells.size() <= static_cast<std::size_t>(k)) spec.cells.resize(static_cast<std::size_t>(k) + 1);
      auto names = split_ws(rest);
      auto& dst = spec.cells[static_cast<std::size_t>(k)];
      dst.insert(dst.end(), names.begin(), names.end());
    } else if (starts_with_key(line, "incidence", rest)) {
      have_cells = true;
      const int k = take_dimension(rest, lineno);
      if (k < 1) throw ValidationError("incidence blocks start at dimension 1", lineno);
      auto arrow = rest.find("->");
      if (arrow == std::string_view::npos) throw ValidationError("expected 'incidence<k>: <cell> -> <faces>'", lineno);
      auto cell = split_ws(rest.substr(0, arrow));
      if (cell.size() != 1) throw ValidationError("expected exactly one cell name before '->'", lineno);
      if (spec.incidence.size() <= static_cast<std::size_t>(k)) spec.incidence.resize(static_cast<std::size_t>(k) + 1);
      spec.incidence[static_cast<std::size_t>(k)].emplace_back(cell[0], split_ws(rest.substr(arrow + 2)));
    } else {
      throw ValidationError("unrecognized line '" + std::string(line) + "'", lineno);
    }
  }

  if (have_simplices && have_cells) throw ValidationError("file mixes maximal_simplices with cells/incidence blocks");
  try {
    if (have_simplices) return ComplexSkeleton::from_simplices(simplices);
    if (have_cells) return ComplexSkeleton::from_cells(spec);
  } catch (const ValidationError& e) {
    if (e.line() > 0) throw;
    throw ValidationError(e.what(), last_line);
  }
  throw ValidationError("empty complex file", 1);
}

ComplexSkeleton read_complex_file(const std::string& path) { return parse_complex(read_text_file(path)); }

WeightedNorm parse_weights(const ComplexSkeleton& x, std::string_view text) {
  std::vector<std::vector<Rational>> weights;
  for (int k = 0; k <= x.dim(); ++k) weights.emplace_back(x.num_cells(k), Rational(0));
  const auto lines = logical_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const int lineno = static_cast<int>(i) + 1;
    auto toks = split_ws(lines[i]);
    if (toks.empty()) continue;
    if (toks.size() != 4 || toks[0] != "weight") throw ValidationError("expected 'weight <k> <cell> <p/q>'", lineno);
    int k = 0;
    try {
      k = std::stoi(toks[1]);
    } catch (const std::exception&) {
      throw ValidationError("bad dimension '" + toks[1] + "'", lineno);
    }
    auto idx = x.find(k, toks[2]);
    if (!idx || k < 0) throw ValidationError("no " + toks[1] + "-cell named '" + toks[2] + "'", lineno);
    try {
      weights[static_cast<std::size_t>(k)][*idx] = parse_rational(toks[3]);
    } catch (const std::invalid_argument& e) {
      throw ValidationError(e.what(), lineno);
    }
  }
  return WeightedNorm::from_weights(x, std::move(weights));
}

std::string format_simplices(const std::vector<std::vector<std::string>>& simplices) {
  std::string out = "maximal_simplices: [\n";
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    out += "  [";
    for (std::size_t j = 0; j < simplices[i].size(); ++j) {
      if (j) out += ", ";
      const auto& label = simplices[i][j];
      const bool numeric = !label.empty() && std::all_of(label.begin(), label.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      }) && (label.size() == 1 || label[0] != '0');
      out += numeric ? label : "\"" + label + "\"";
    }
    out += i + 1 < simplices.size() ? "],\n" : "]\n";
  }
  out += "]\n";
  return out;
}

}  // namespace overlap
