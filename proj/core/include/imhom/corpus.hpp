#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "imhom/simplicial.hpp"

namespace imh {

struct LabeledMap {
  std::string name;
  std::string label;  // "algebraic-model" or "non-algebraic-model"
  SimplicialMap map;
};

// A named example space with its expected rank tables, labeled maps, and
// two-set covers, as used by the acceptance suite and the CLI.
struct CorpusEntry {
  std::string name;
  ComplexPtr complex;
  // invariant name ("H", "IM", "KER", "IH_middle", "IH_upper") -> ranks by degree
  std::map<std::string, std::vector<int>> expected_ranks;
  std::vector<LabeledMap> maps;
  // pairs of subcomplex names forming a cover of the complex
  std::vector<std::pair<std::string, std::string>> covers;
};

std::vector<std::string> corpus_names();
CorpusEntry build_corpus(const std::string& name);

}  // namespace imh
