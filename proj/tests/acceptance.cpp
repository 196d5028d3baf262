// Acceptance run: one PASS/FAIL line per criterion, row details beneath.

#include <array>
#include <cstdio>
#include <string_view>

#include "dublo/verify.hpp"

namespace {

constexpr std::array<std::string_view, 11> kTitles{
    "closed-form constants of diameter-2 families",
    "three-legs tree T",
    "Doyle graph exact 27/5",
    "E8 lower bound, E6 and E7 strictly below 3",
    "Smith graph values of C_G^0",
    "C_G < 3 on paths L_n",
    "C_G = 1 + r(A) when diam <= 2",
    "LP optimizer vs brute-force oracle",
    "structural properties (random cases)",
    "truncations of infinite graphs",
    "classification of C_G relative to 3",
};

}  // namespace

int main() {
  const auto rows = dublo::run_verify(dublo::VerifyConfig{});
  bool all = true;
  for (int c = 1; c <= 11; ++c) {
    bool pass = true;
    std::size_t count = 0;
    for (const auto& r : rows)
      if (r.criterion == c) pass &= r.pass, ++count;
    pass &= count > 0;
    all &= pass;
    std::printf("%s  criterion %2d: %s\n", pass ? "PASS" : "FAIL", c, kTitles[c - 1].data());
    for (const auto& r : rows) {
      if (r.criterion != c) continue;
      std::printf("        [%s] %-22s measured=%s expected=%s tol=%g%s%s\n", r.pass ? "ok" : "!!",
                  r.name.c_str(), r.measured.c_str(), r.expected.c_str(), r.tolerance,
                  r.note.empty() ? "" : "  # ", r.note.c_str());
    }
  }
  std::printf("%s\n", all ? "all criteria pass" : "some criteria FAIL");
  return all ? 0 : 1;
}
