// Standalone property suites; exit status 0 iff all hold.
#include <iostream>

#include "properties.hpp"

int main() {
  bool ok = true;
  for (const auto& o : properties::run_all()) {
    std::cout << (o.ok() ? "ok   " : "FAIL ") << o.name << ": " << o.checked << " checked, " << o.failed
              << " failed";
    if (!o.first_failure.empty()) std::cout << " (first: " << o.first_failure << ")";
    std::cout << "\n";
    ok = ok && o.ok();
  }
  return ok ? 0 : 1;
}
