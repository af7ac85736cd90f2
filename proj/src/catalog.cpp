#include "dsrg/catalog.hpp"

#include <cstdlib>
#include <fstream>

#include <nlohmann/json.hpp>

#include "dsrg/errors.hpp"

namespace dsrg {

using nlohmann::json;

std::string CatalogEntry::to_jsonl() const {
    json j;
    j["family"] = family;
    j["params"] = params;
    j["tuple"] = {tuple.n, tuple.k, tuple.mu, tuple.lambda, tuple.t};
    j["flag"] = flag;
    j["eigenvalues"] = eigenvalues;
    j["multiplicities"] = multiplicities;
    j["stab_out"] = stab_out;
    j["stab_in"] = stab_in;
    j["hash"] = hash;
    return j.dump();
}

CatalogEntry CatalogEntry::from_jsonl(const std::string& line) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::exception& e) {
        throw PreconditionError(std::string("catalog parse: ") + e.what());
    }
    CatalogEntry e;
    e.family = j.at("family").get<std::string>();
    e.params = j.at("params").get<std::map<std::string, std::string>>();
    auto t = j.at("tuple");
    e.tuple = ParamTuple{t.at(0).get<std::int64_t>(), t.at(1).get<std::int64_t>(),
                         t.at(2).get<std::int64_t>(), t.at(3).get<std::int64_t>(),
                         t.at(4).get<std::int64_t>()};
    e.flag = j.at("flag").get<std::string>();
    e.eigenvalues = j.value("eigenvalues", std::vector<std::int64_t>{});
    e.multiplicities = j.value("multiplicities", std::vector<std::int64_t>{});
    e.stab_out = j.value("stab_out", 0);
    e.stab_in = j.value("stab_in", 0);
    e.hash = j.value("hash", std::string{});
    return e;
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
    std::ifstream in(path);
    std::vector<CatalogEntry> out;
    if (!in) return out;  // absent catalog is empty
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        out.push_back(CatalogEntry::from_jsonl(line));
    }
    return out;
}

void append_catalog(const std::string& path, const CatalogEntry& e) {
    std::ofstream out(path, std::ios::app);
    if (!out) throw PreconditionError("catalog: cannot open " + path);
    out << e.to_jsonl() << '\n';
}

std::string catalog_path(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("DSRG_CATALOG")) return env;
    return "dsrg_catalog.jsonl";
}

}  // namespace dsrg
