#pragma once

#include "dercalc/pointed.hpp"

namespace dercalc {

// The desk-scale category corpus every universally-quantified claim is
// falsified against.
struct Corpus {
  CatPtr empty, e, i1, i2, corner, square, disc2, zig;
  std::vector<std::pair<std::string, CatPtr>> categories;
  std::vector<std::pair<std::string, FinFunctor>> functors;

  static Corpus standard();
};

// Der1/Der2 with explicit witnesses, Der3 triangle identities and hom
// bijections, Der4 Beck-Chevalley invertibility for every corpus (u, k),
// all run through the given (possibly shifted) view.
Report check_axioms(const DerivatorView& view, const Corpus& corpus, const Policy& pol,
                    bool kan_axioms = true);

struct CorpusReport {
  Policy policy;
  std::vector<std::pair<std::string, Report>> sections;
  bool ok() const {
    for (const auto& [name, rep] : sections)
      if (!rep.ok()) return false;
    return true;
  }
};

// The full acceptance run: one section per criterion, deterministic given
// the policy.
CorpusReport run_corpus(const Policy& pol);

std::string render_text(const CorpusReport& rep, bool verbose = false);
std::string render_json(const CorpusReport& rep);

}  // namespace dercalc
