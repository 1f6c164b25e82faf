// Order <-> topology round trip on every poset with up to five elements,
// plus a tour of one family space: opens, closeds, components.

#include <iostream>

#include "nicetop/nicetop.hpp"

using namespace nicetop;

int main() {
  long long posets = 0, ok = 0;
  for (int n = 1; n <= 5; ++n)
    for (const FinitePoset& P : enumerate_posets(n)) {
      ++posets;
      if (specialization_order(topology_from_order(P)) == P) ++ok;
    }
  std::cout << "round trips: " << ok << "/" << posets << " posets\n";

  NiceFamily F = validate_family(3, {0, bit(0), bit(1), bit(0) | bit(1),
                                     full_mask(3)});
  FamilySpace S{F};
  long long opens = 0, closeds = 0;
  for (Mask X = 0; X <= all_points(S); ++X) {
    if (is_open_set(S, X)) ++opens;
    if (is_closed_set(S, X)) ++closeds;
  }
  std::cout << "family with " << S.size() << " members: " << opens
            << " opens, " << closeds << " closeds, "
            << irreducible_components(S).size() << " component(s)\n";

  LadderReport rep = verify_ladders(S);
  std::cout << "ladder checks: " << rep.checked << ", violations: "
            << rep.violations.size() << "\n";
  return 0;
}
