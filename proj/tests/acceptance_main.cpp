// Acceptance suite: runs every verification criterion at the documented
// sizes and tolerances (all exact) and one golden-drift check per shipped
// diagram. One PASS/FAIL line per criterion; exit 0 only when everything
// holds.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ordlat/verify.hpp"

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

int main() {
  ordlat::VerifyOptions options;
  options.jobs = 2;
  ordlat::VerifyReport report = ordlat::run_verify(options);
  std::cout << report.text();

  bool goldens_ok = true;
  const fs::path dir = fs::path(ORDLAT_SOURCE_DIR) / "goldens";
  const std::pair<const char*, const std::string*> goldens[] = {
      {"fig1_linear6.dot", &report.fig1_dot},
      {"fig2_grid4x3.dot", &report.fig2_dot},
      {"fig2_grid4x3_range.dot", &report.fig2_range_dot},
  };
  int gi = 0;
  for (const auto& [name, text] : goldens) {
    ++gi;
    std::string stored = slurp(dir / name);
    bool same = !stored.empty() && stored == *text;
    if (!same) goldens_ok = false;
    std::cout << "G" << gi << (same ? " PASS " : " FAIL ") << name
              << (same ? " matches" : " missing or drifted") << '\n';
  }

  bool ok = report.all_pass() && goldens_ok;
  std::cout << (ok ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << '\n';
  return ok ? 0 : 1;
}
