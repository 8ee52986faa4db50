// Acceptance suite: one pass/fail line per criterion, exit nonzero on any
// failure. Everything runs at the pinned policy (seed 7, 25 samples, dims
// up to 4) in exact rational arithmetic -- no tolerances anywhere.

#include <chrono>
#include <iostream>

#include "dercalc/corpus.hpp"

int main() {
  using namespace dercalc;
  Policy pol;  // seed 7, 25 samples, max dim 4

  const auto t0 = std::chrono::steady_clock::now();
  CorpusReport first = run_corpus(pol);

  const char* names[] = {
      "axiom suite: Der1/Der2 witnesses, Der3 triangles, Der4 Beck-Chevalley",
      "mate calculus: pasting compatibility, double-mate inversion, left iff right",
      "exact-square families pass; negative control fails reproducibly",
      "pasting cancellation: square verdict equivalent to its comma pastings",
      "fully faithful Kan extensions: unit/counit invertible",
      "pointed suite: extension by zero, levels, cofibres, exceptional adjoint",
      "morphism suite: cocontinuity, extension-by-zero compatibility, route agreement",
      "K0 additivity with the monomorphism guard",
  };

  bool ok = true;
  for (std::size_t i = 0; i < first.sections.size(); ++i) {
    bool pass = first.sections[i].second.ok();
    ok = ok && pass;
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << i + 1 << ": " << names[i]
              << "\n";
    if (!pass)
      for (const CheckLine& l : first.sections[i].second.lines)
        if (!l.pass) std::cout << "        " << l.name << " -- " << l.detail << "\n";
  }

  // criterion 9: a second full run renders byte-identically
  CorpusReport second = run_corpus(pol);
  bool deterministic = render_text(first, true) == render_text(second, true) &&
                       render_json(first) == render_json(second);
  ok = ok && deterministic;
  std::cout << (deterministic ? "[PASS]" : "[FAIL]")
            << " criterion 9: repeated seed-7 runs render byte-identical reports\n";

  const auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - t0);
  std::cout << "total " << dt.count() << " ms (target 60000 ms)\n";
  if (dt.count() > 60000) {
    std::cout << "[FAIL] runtime over budget\n";
    ok = false;
  }
  return ok ? 0 : 1;
}
