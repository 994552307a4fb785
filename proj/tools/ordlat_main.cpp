#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ordlat/formula.hpp"
#include "ordlat/galois.hpp"
#include "ordlat/grid.hpp"
#include "ordlat/presets.hpp"
#include "ordlat/verify.hpp"
#include "ordlat/workspace.hpp"

namespace {

using namespace ordlat;

constexpr int kExitVerificationMismatch = 1;
constexpr int kExitInputError = 2;

struct GlobalFlags {
  std::string workspace_path;
  int jobs = 0;               // 0 = not set
  int boundary_cap = -1;      // -1 = not set
  std::string dot_out;
  bool regen_goldens = false;
  std::string golden_dir = "goldens";
};

Workspace need_workspace(const GlobalFlags& flags) {
  if (flags.workspace_path.empty()) {
    throw Error("this command needs --workspace FILE");
  }
  Workspace ws = load_workspace(flags.workspace_path);
  ws.require_structure();
  return ws;
}

int effective_jobs(const GlobalFlags& flags, const Workspace& ws) {
  if (flags.jobs > 0) return flags.jobs;
  if (ws.jobs) return std::max(1, *ws.jobs);
  return 1;
}

int effective_cap(const GlobalFlags& flags, const Workspace& ws) {
  if (flags.boundary_cap >= 0) return flags.boundary_cap;
  if (ws.boundary_cap) return *ws.boundary_cap;
  return ws.default_boundary_cap();
}

std::string render_tuple_line(const FiniteStructure& s, const Tuple& t) {
  std::string out;
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) out += ' ';
    out += s.point_name(t[i]);
  }
  return out;
}

std::vector<std::string> split_names(const std::string& joined) {
  std::vector<std::string> names;
  std::string current;
  for (char c : joined) {
    if (c == ',') {
      if (!current.empty()) names.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) names.push_back(current);
  if (names.empty()) throw Error("empty generator set");
  return names;
}

int cmd_eval(const GlobalFlags& flags, const std::string& rel_name) {
  Workspace ws = need_workspace(flags);
  const FiniteStructure& s = *ws.structure;
  const Relation& r = s.relation(rel_name);
  std::ostringstream out;
  for (const Tuple& t : r.extension) {
    out << render_tuple_line(s, t) << '\n';
  }
  std::cout << out.str();
  return 0;
}

int cmd_definable(const GlobalFlags& flags, const std::string& target,
                  const std::vector<std::string>& base) {
  Workspace ws = need_workspace(flags);
  const FiniteStructure& s = *ws.structure;
  if (base.empty()) throw Error("definable needs at least one base relation");
  std::optional<Witness> w =
      definable(s, s.relation(target), base, effective_jobs(flags, ws));
  if (!w) {
    std::cout << "YES\n";
  } else {
    std::cout << "NO witness=" << format_permutation(w->permutation)
              << " tuple=" << format_tuple(s, w->tuple) << '\n';
  }
  return 0;
}

int cmd_aut(const GlobalFlags& flags, const std::vector<std::string>& args) {
  Workspace ws = need_workspace(flags);
  const FiniteStructure& s = *ws.structure;
  if (args.empty()) throw Error("aut needs at least one relation name");
  std::vector<std::string> names;
  for (const std::string& arg : args) {
    for (std::string& name : split_names(arg)) names.push_back(std::move(name));
  }
  DefinabilitySpace space = make_space(s, names, effective_jobs(flags, ws));
  std::cout << "order=" << space.group.order() << '\n';
  for (const Permutation& p : space.group.members()) {
    std::cout << format_permutation(p) << '\n';
  }
  return 0;
}

std::vector<DefinabilitySpace> spaces_from_args(const FiniteStructure& s,
                                                const std::vector<std::string>& sets,
                                                int jobs) {
  if (sets.empty()) throw Error("need at least one generator set");
  std::vector<DefinabilitySpace> spaces;
  for (const std::string& joined : sets) {
    spaces.push_back(make_space(s, split_names(joined), jobs));
  }
  return spaces;
}

int cmd_lattice(const GlobalFlags& flags, const std::vector<std::string>& sets) {
  Workspace ws = need_workspace(flags);
  HasseDiagram d =
      hasse(spaces_from_args(*ws.structure, sets, effective_jobs(flags, ws)));
  std::string dot = to_dot(d);
  if (!flags.dot_out.empty()) {
    std::ofstream out(flags.dot_out);
    if (!out) throw Error("cannot write '" + flags.dot_out + "'");
    out << dot;
  } else {
    std::cout << dot;
  }
  return 0;
}

int cmd_witness(const GlobalFlags& flags, const std::vector<std::string>& sets) {
  Workspace ws = need_workspace(flags);
  const FiniteStructure& s = *ws.structure;
  HasseDiagram d = hasse(spaces_from_args(s, sets, effective_jobs(flags, ws)));
  std::vector<Witness> witnesses = strictness_witnesses(s, d);
  std::ostringstream out;
  for (size_t i = 0; i < witnesses.size(); ++i) {
    const Witness& w = witnesses[i];
    out << "edge " << d.labels[static_cast<size_t>(d.edges[i].first)] << " -> "
        << d.labels[static_cast<size_t>(d.edges[i].second)]
        << " witness=" << format_permutation(w.permutation)
        << " preserved=" << w.preserved << " broken=" << w.broken
        << " tuple=" << format_tuple(s, w.tuple) << '\n';
  }
  std::cout << out.str();
  return 0;
}

int cmd_boundary(const GlobalFlags& flags, const std::string& rel_name) {
  Workspace ws = need_workspace(flags);
  const FiniteStructure& s = *ws.structure;
  std::optional<int> b = boundary(s, s.relation(rel_name), effective_cap(flags, ws),
                                  effective_jobs(flags, ws));
  if (b) {
    std::cout << *b << '\n';
  } else {
    std::cout << "exceeds cap\n";
  }
  return 0;
}

int cmd_classify(const GlobalFlags& flags, const std::vector<std::string>& images) {
  Workspace ws = need_workspace(flags);
  const FiniteStructure& s = *ws.structure;
  std::vector<int> im;
  for (const std::string& word : images) {
    try {
      im.push_back(std::stoi(word));
    } catch (const std::exception&) {
      throw Error("bad image '" + word + "'");
    }
  }
  if (static_cast<int>(im.size()) != s.size()) {
    throw Error("expected " + std::to_string(s.size()) + " images, got " +
                std::to_string(im.size()));
  }
  Permutation p{std::move(im)};
  if (s.is_grid()) {
    PermClass pc = classify(s, p);
    auto flag = [](bool b) { return b ? "yes" : "no"; };
    std::cout << "systemic=" << flag(pc.systemic) << " positive=" << flag(pc.positive)
              << " negative=" << flag(pc.negative) << " shift=" << flag(pc.shift)
              << " vertical_shift=" << flag(pc.vertical_shift) << '\n';
    if (pc.systemic) {
      std::cout << "initiates=" << format_permutation(initiate(s, p)) << '\n';
    }
  } else {
    std::vector<SectionMatch> matches = section_classify(p);
    if (matches.empty()) {
      std::cout << "sections: none\n";
    } else {
      for (const SectionMatch& m : matches) {
        std::cout << "section split=" << m.section.split << " I1=[0," << m.section.split
                  << ") I2=[" << m.section.split << "," << p.size() << ") condition="
                  << (m.condition_i ? "i" : "ii") << '\n';
      }
    }
  }
  return 0;
}

int cmd_verify_paper(const GlobalFlags& flags) {
  VerifyOptions options;
  if (!flags.workspace_path.empty()) {
    Workspace ws = load_workspace(flags.workspace_path);
    if (ws.structure) {
      if (ws.structure->is_grid()) {
        const GridShape& shape = ws.structure->grid_shape();
        options.large_grid = shape;
        if (shape.verticals * shape.height <= 7) options.small_grid = shape;
      } else {
        options.linear_n = ws.structure->size();
      }
    }
    if (ws.jobs && flags.jobs <= 0) options.jobs = std::max(1, *ws.jobs);
    if (ws.boundary_cap && flags.boundary_cap < 0) options.boundary_cap = *ws.boundary_cap;
  }
  if (flags.jobs > 0) options.jobs = flags.jobs;
  if (flags.boundary_cap >= 0) options.boundary_cap = flags.boundary_cap;

  VerifyReport report = run_verify(options);
  std::cout << report.text();

  namespace fs = std::filesystem;
  fs::path dir(flags.golden_dir);
  const std::vector<std::pair<std::string, const std::string*>> goldens = {
      {"fig1_linear6.dot", &report.fig1_dot},
      {"fig2_grid4x3.dot", &report.fig2_dot},
      {"fig2_grid4x3_range.dot", &report.fig2_range_dot},
  };
  bool golden_failed = false;
  if (flags.regen_goldens) {
    fs::create_directories(dir);
    for (const auto& [name, text] : goldens) {
      std::ofstream out(dir / name);
      if (!out) throw Error("cannot write golden '" + (dir / name).string() + "'");
      out << *text;
    }
    std::cout << "goldens regenerated in " << dir.string() << '\n';
  } else {
    int gi = 0;
    for (const auto& [name, text] : goldens) {
      ++gi;
      std::string id = "G" + std::to_string(gi);
      fs::path path = dir / name;
      std::ifstream in(path);
      if (!in) {
        std::cout << id << " SKIP no golden " << name
                  << " (use --regen-goldens to create)\n";
        continue;
      }
      std::ostringstream buffer;
      buffer << in.rdbuf();
      bool same = buffer.str() == *text;
      if (!same) golden_failed = true;
      std::cout << id << (same ? " PASS " : " FAIL ") << name
                << (same ? " matches" : " drifted") << '\n';
    }
  }
  return report.all_pass() && !golden_failed ? 0 : kExitVerificationMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"definability lattice engine for finite linear orders and grids"};
  app.require_subcommand(1);
  GlobalFlags flags;
  app.add_option("--workspace", flags.workspace_path, "workspace file")
      ->configurable(false);
  app.add_option("--jobs", flags.jobs, "parallelism degree (default 1)");
  app.add_option("--boundary-cap", flags.boundary_cap,
                 "largest boundary considered (default h-1)");
  app.fallthrough();

  std::string eval_rel;
  CLI::App* eval = app.add_subcommand("eval", "print a relation's extension");
  eval->add_option("relation", eval_rel)->required();

  std::string def_target;
  std::vector<std::string> def_base;
  CLI::App* def = app.add_subcommand("definable", "is target definable from base?");
  def->add_option("target", def_target)->required();
  def->add_option("base", def_base, "base relation names")->required();

  std::vector<std::string> aut_names;
  CLI::App* aut = app.add_subcommand("aut", "automorphism group of relations");
  aut->add_option("relations", aut_names)->required();

  std::vector<std::string> lattice_sets;
  CLI::App* lattice = app.add_subcommand("lattice", "Hasse diagram as DOT");
  lattice->add_option("sets", lattice_sets, "generator sets (comma-joined names)")
      ->required();
  lattice->add_option("--dot-out", flags.dot_out, "write DOT here instead of stdout");

  std::vector<std::string> witness_sets;
  CLI::App* witness = app.add_subcommand("witness", "strictness witnesses per edge");
  witness->add_option("sets", witness_sets)->required();

  std::string boundary_rel;
  CLI::App* boundary_cmd = app.add_subcommand("boundary", "locality boundary of a relation");
  boundary_cmd->add_option("relation", boundary_rel)->required();

  std::vector<std::string> classify_images;
  CLI::App* classify_cmd =
      app.add_subcommand("classify", "classify a permutation (grid flags or sections)");
  classify_cmd->add_option("images", classify_images)->required();

  CLI::App* verify = app.add_subcommand("verify-paper", "run the verification suite");
  verify->add_flag("--regen-goldens", flags.regen_goldens,
                   "rewrite the golden DOT files");
  verify->add_option("--golden-dir", flags.golden_dir,
                     "golden directory (default: goldens)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (eval->parsed()) return cmd_eval(flags, eval_rel);
    if (def->parsed()) return cmd_definable(flags, def_target, def_base);
    if (aut->parsed()) return cmd_aut(flags, aut_names);
    if (lattice->parsed()) return cmd_lattice(flags, lattice_sets);
    if (witness->parsed()) return cmd_witness(flags, witness_sets);
    if (boundary_cmd->parsed()) return cmd_boundary(flags, boundary_rel);
    if (classify_cmd->parsed()) return cmd_classify(flags, classify_images);
    if (verify->parsed()) return cmd_verify_paper(flags);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
