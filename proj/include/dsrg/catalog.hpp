#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dsrg/params.hpp"

namespace dsrg {

// One catalog record: enough to rebuild the construction and re-verify it.
// Persisted as one JSON object per line.
struct CatalogEntry {
    std::string family;                       // f39 | f310 | f311 | f314 | dihedral | ...
    std::map<std::string, std::string> params;
    ParamTuple tuple;
    std::string flag;                         // proper | SRG | tournament
    std::vector<std::int64_t> eigenvalues;    // k, rho, sigma when integral
    std::vector<std::int64_t> multiplicities;
    std::int64_t stab_out = 0, stab_in = 0;   // stabilizer orders (Cayley families)
    std::string hash;                         // adjacency content hash

    std::string to_jsonl() const;
    static CatalogEntry from_jsonl(const std::string& line);
};

std::vector<CatalogEntry> load_catalog(const std::string& path);
void append_catalog(const std::string& path, const CatalogEntry& e);

// Default path resolution: --catalog flag beats DSRG_CATALOG env var.
std::string catalog_path(const std::string& flag_value);

}  // namespace dsrg
