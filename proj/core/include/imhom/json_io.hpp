#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "imhom/corpus.hpp"
#include "imhom/simplicial.hpp"

namespace imh {

// Parsed form of the JSON complex interchange format: the complex itself
// (with any subcomplexes registered), plus the optional stratification,
// formal dimension, and component list.
struct ComplexDocument {
  std::string name;
  ComplexPtr complex;
  std::map<int, std::set<Simplex>> stratification;  // empty when absent
  std::optional<int> formal_dim;
  std::vector<std::string> components;  // subcomplex names
};

// Throws std::invalid_argument with a position-annotated message on
// malformed JSON, and with the violated invariant named on bad content.
ComplexDocument parse_complex_document(const std::string& text);
std::string serialize_complex_document(const CorpusEntry& entry);
std::string serialize_complex_document(const std::string& name, const SimplicialComplex& k);

struct MapDocument {
  std::string domain;
  std::string codomain;
  std::string label;  // "algebraic-model", "non-algebraic-model", "unlabeled"
  SimplicialMap map;
};

// Resolves a domain/codomain reference (file path or corpus name) to a
// loaded complex; supplied by the caller.
using ComplexResolver = std::function<ComplexPtr(const std::string&)>;

// The "domain"/"codomain" fields may be reference strings (resolved through
// `resolve`) or inline complex documents.
MapDocument parse_map_document(const std::string& text, const ComplexResolver& resolve);
std::string serialize_map_document(const std::string& name, const LabeledMap& m);

}  // namespace imh
