#include "ordlat/workspace.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "ordlat/formula.hpp"
#include "ordlat/presets.hpp"

namespace ordlat {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw Error("workspace line " + std::to_string(line) + ": " + what);
}

bool valid_name(const std::string& name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

// Splits on whitespace, keeping one double-quoted segment intact.
std::vector<std::string> split_line(const std::string& line, int lineno) {
  std::vector<std::string> words;
  size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    if (line[i] == '"') {
      size_t end = line.find('"', i + 1);
      if (end == std::string::npos) fail(lineno, "unterminated quote");
      words.push_back(line.substr(i + 1, end - i - 1));
      i = end + 1;
      continue;
    }
    size_t end = i;
    while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end])) &&
           line[end] != '"' && line[end] != '#') {
      ++end;
    }
    words.push_back(line.substr(i, end - i));
    i = end;
  }
  return words;
}

int parse_assignment(const std::string& word, const std::string& key, int lineno) {
  if (word.rfind(key + "=", 0) != 0) fail(lineno, "expected " + key + "=<int>");
  try {
    return std::stoi(word.substr(key.size() + 1));
  } catch (const std::exception&) {
    fail(lineno, "bad integer in '" + word + "'");
  }
}

}  // namespace

int Workspace::default_boundary_cap() const {
  const FiniteStructure& s = require_structure();
  return s.is_grid() ? s.grid_shape().height - 1 : s.size() - 1;
}

Workspace parse_workspace(const std::string& text) {
  Workspace ws;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::string> words = split_line(line, lineno);
    if (words.empty()) continue;
    const std::string& head = words[0];
    if (head == "structure") {
      if (ws.structure) fail(lineno, "structure already declared");
      if (words.size() == 3 && words[1] == "linear") {
        ws.structure = FiniteStructure::linear(parse_assignment(words[2], "n", lineno));
      } else if (words.size() == 4 && words[1] == "grid") {
        ws.structure = FiniteStructure::grid(parse_assignment(words[2], "m", lineno),
                                             parse_assignment(words[3], "h", lineno));
      } else {
        fail(lineno, "expected 'structure linear n=N' or 'structure grid m=M h=H'");
      }
    } else if (head == "rel") {
      if (!ws.structure) fail(lineno, "relation declared before structure");
      if (words.size() < 4 || words[2] != "=") {
        fail(lineno, "expected 'rel NAME = preset ...' or 'rel NAME = formula \"...\"'");
      }
      const std::string& name = words[1];
      if (!valid_name(name)) fail(lineno, "bad relation name '" + name + "'");
      if (ws.structure->has_relation(name)) {
        fail(lineno, "relation '" + name + "' already defined");
      }
      const std::string& kind = words[3];
      Relation rel{"", 0, {}};
      if (kind == "preset") {
        if (words.size() < 5) fail(lineno, "missing preset name");
        Preset p = parse_preset_name(words[4]);
        int n = 1;
        if (words.size() == 6) {
          if (!preset_takes_parameter(p)) fail(lineno, "preset takes no parameter");
          n = parse_assignment(words[5], "n", lineno);
        } else if (words.size() != 5) {
          fail(lineno, "too many arguments for preset");
        }
        rel = make_preset(*ws.structure, p, n);
      } else if (kind == "formula") {
        if (words.size() != 5) fail(lineno, "expected one quoted formula");
        DefinedRelation d = parse(words[4]);
        rel = evaluate(d, *ws.structure);
      } else {
        fail(lineno, "expected 'preset' or 'formula', got '" + kind + "'");
      }
      rel.name = name;
      ws.structure->add_relation(std::move(rel));
    } else if (head == "option") {
      if (words.size() != 2) fail(lineno, "expected 'option key=value'");
      if (words[1].rfind("jobs=", 0) == 0) {
        ws.jobs = parse_assignment(words[1], "jobs", lineno);
      } else if (words[1].rfind("boundary-cap=", 0) == 0) {
        ws.boundary_cap = parse_assignment(words[1], "boundary-cap", lineno);
      } else {
        fail(lineno, "unknown option '" + words[1] + "'");
      }
    } else {
      fail(lineno, "unknown directive '" + head + "'");
    }
  }
  return ws;
}

Workspace load_workspace(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open workspace file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_workspace(buffer.str());
}

}  // namespace ordlat
