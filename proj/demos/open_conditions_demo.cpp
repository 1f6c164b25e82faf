// Walks the two shrinking-chain families and prints how the six open-set
// conditions separate: the plain chain satisfies (e) but not (d), and the
// chain with a glued-in floor satisfies (f) but not (e).

#include <iostream>

#include "nicetop/nicetop.hpp"

using namespace nicetop;

namespace {

void show(const char* name, const SymbolicOpenFamily& U) {
  OpenConditions c = eval_open_conditions_symbolic(U);
  PatternRing inf = infimum_of_open(U);
  std::cout << name << "\n"
            << "  a=" << c.a << " b=" << c.b << " c=" << c.c << " d=" << c.d
            << " e=" << c.e << " f=" << c.f << "\n"
            << "  infimum (0,1) entry: " << show_cut(inf.entries[0][1])
            << ", member: " << member_of(U, inf) << "\n";
}

}  // namespace

int main() {
  CutIdeal j1 = CutIdeal::make_cut(Rat{2}, Bound::Closed);
  CutIdeal j2 = CutIdeal::make_cut(Rat{1}, Bound::Closed);

  show("chain of basic opens over (0,1)", shrinking_chain_family(Rat{1}, j1));
  show("same chain with a floor generator",
       shrinking_chain_with_floor(Rat{1}, j1, j2));

  std::cout << "reversal certificates:\n";
  for (const ReversalCertificate& c : search_reversals())
    std::cout << "  " << c.implication << " via " << c.family << ": "
              << (c.verified ? "verified" : "FAILED") << "\n";
  return 0;
}
