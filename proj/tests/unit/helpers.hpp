#pragma once

#include <filesystem>
#include <string>

#include "ontoforge/concept.hpp"
#include "ontoforge/dataset.hpp"
#include "ontoforge/parser.hpp"
#include "ontoforge/pipeline.hpp"

#ifndef ONTOFORGE_TEST_DATA
#define ONTOFORGE_TEST_DATA "tests/data"
#endif

namespace testing {

inline std::filesystem::path data(const std::string& name) {
    return std::filesystem::path(ONTOFORGE_TEST_DATA) / name;
}

inline ontoforge::ConceptExpr A(const std::string& name) { return ontoforge::ConceptExpr::atomic(name); }
inline ontoforge::PropertyExpr P(const std::string& name) { return {ontoforge::Iri(name)}; }

inline ontoforge::Ontology parse(const std::string& text) {
    return ontoforge::parse_ontology(text).ontology;
}

// Prefix boilerplate for small inline documents: ":X" is <urn:t:X>.
inline std::string doc(const std::string& body) {
    return "Prefix(:=<urn:t:>)\nOntology(<urn:t>\n" + body + "\n)\n";
}

inline ontoforge::ConceptExpr T(const std::string& local) {
    return ontoforge::ConceptExpr::atomic("urn:t:" + local);
}

/// Fresh empty directory under the system temp dir.
inline std::filesystem::path scratch(const std::string& name) {
    auto p = std::filesystem::temp_directory_path() / ("ontoforge_test_" + name);
    std::filesystem::remove_all(p);
    std::filesystem::create_directories(p);
    return p;
}

}  // namespace testing
