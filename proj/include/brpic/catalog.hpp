#pragma once

#include "brpic/json_io.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace brpic {

// Named expected result with its source note, printed next to the check.
struct ExpectedCheck {
    io::json value;
    std::string cite;
};

// One curated category (or scenario) with everything needed to recompute
// its invariants, plus the expectations the run report checks off.
struct CatalogEntry {
    std::string id;
    std::string description;
    FusionRingData fusion;
    std::optional<FusionRingData> center; // carries the braiding grading
    std::optional<FinAb> aut_br;          // curated braided-autoequivalence group
    std::string aut_br_cite;
    std::optional<ExactSequenceInstance> sequence;
    std::map<std::string, Cocycle> cocycles; // tensorators on the grading group
    std::optional<GaloisScenario> galois;
    std::optional<EmbeddingData> embeddings;
    std::optional<EmbeddingData> alt_embeddings;
    std::map<std::string, ExpectedCheck> expected;
    io::json raw; // source document, for catalog show round-trips
};

std::vector<CatalogEntry> catalog_parse(const io::json& doc);
// Reads a catalog file; empty/whitespace files give an empty catalog.
// Throws SchemaError / ValidationError (with the entry id).
std::vector<CatalogEntry> catalog_load(const std::string& path);
// The built-in catalog (also reachable as JSON text for --json output).
const std::vector<CatalogEntry>& builtin_catalog();
const char* builtin_catalog_source();
// Honors the BRPIC_CATALOG override, else returns the built-in catalog.
std::vector<CatalogEntry> default_catalog();

struct CheckLine {
    std::string name;
    std::string computed;
    std::string expected;
    std::string cite;
    bool pass = false;
};

struct RunReport {
    std::vector<CheckLine> lines;
    bool pass = true;

    void add(CheckLine line);
};

// Recomputes every expectation of every entry, then the base-field table
// and the structural property suites. One line per check; overall pass
// only when every line passes.
RunReport verify_paper(const std::vector<CatalogEntry>& catalog);
RunReport verify_paper();

// The finite abelian group as a concrete multiplication table (direct
// product of cyclic factors, mixed-radix element order).
FiniteGroup group_from_finab(const FinAb& g);

} // namespace brpic
