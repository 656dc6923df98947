// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <cstdlib>
#include <iostream>
#include <set>
#include <string>

#include "sturmian/check/acceptance.hpp"

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  bool all = true;
  for (const auto& c : sturmian::acceptance::criteria()) {
    if (!only.empty() && !only.count(c.id)) continue;
    auto r = sturmian::acceptance::run_one(c);
    std::cout << sturmian::acceptance::format_line(r) << std::endl;
    all = all && r.pass;
  }
  std::cout << (all ? "acceptance PASS" : "acceptance FAIL") << std::endl;
  return all ? 0 : 1;
}
