#include "dsrg/formats.hpp"

#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

#include "dsrg/errors.hpp"

namespace dsrg {

using nlohmann::json;

GraphFormat parse_format(const std::string& name) {
    if (name == "matrix") return GraphFormat::Matrix;
    if (name == "edges") return GraphFormat::Edges;
    if (name == "json") return GraphFormat::Json;
    if (name == "dot") return GraphFormat::Dot;
    throw PreconditionError("unknown format '" + name + "'");
}

namespace {

void write_matrix(std::ostream& os, const Digraph& d) {
    int n = d.order();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j) os << ' ';
            os << d.adjacency().at(i, j);
        }
        os << '\n';
    }
}

void write_edges(std::ostream& os, const Digraph& d) {
    int n = d.order();
    os << "# n=" << n << '\n';
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (d.arc(i, j)) os << i << ' ' << j << '\n';
}

void write_json(std::ostream& os, const Digraph& d) {
    json j;
    j["n"] = d.order();
    json arcs = json::array();
    for (int i = 0; i < d.order(); ++i)
        for (int jj = 0; jj < d.order(); ++jj)
            if (d.arc(i, jj)) arcs.push_back(json::array({i, jj}));
    j["arcs"] = std::move(arcs);
    if (!d.labels().empty()) j["labels"] = d.labels();
    VerifyOutcome v = verify_dsrg(d);
    if (v.ok()) {
        j["tuple"] = {{"n", v.tuple->n},
                      {"k", v.tuple->k},
                      {"mu", v.tuple->mu},
                      {"lambda", v.tuple->lambda},
                      {"t", v.tuple->t}};
    }
    os << j.dump() << '\n';
}

void write_dot(std::ostream& os, const Digraph& d) {
    os << "digraph dsrg {\n";
    for (int i = 0; i < d.order(); ++i)
        os << "  v" << i << " [label=\"" << d.label(i) << "\"];\n";
    for (int i = 0; i < d.order(); ++i)
        for (int j = 0; j < d.order(); ++j)
            if (d.arc(i, j)) os << "  v" << i << " -> v" << j << ";\n";
    os << "}\n";
}

Digraph read_matrix(std::istream& is) {
    std::vector<std::vector<std::int64_t>> rows;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::vector<std::int64_t> row;
        std::int64_t v;
        while (ls >> v) row.push_back(v);
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw PreconditionError("matrix parse: no rows");
    int n = static_cast<int>(rows.size());
    DenseIntMatrix a(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw PreconditionError("matrix parse: row " + std::to_string(i) +
                                    " has " + std::to_string(rows[i].size()) +
                                    " entries, expected " + std::to_string(n));
        for (int j = 0; j < n; ++j) a.at(i, j) = rows[i][j];
    }
    return Digraph(std::move(a));
}

Digraph read_edges(std::istream& is) {
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> arcs;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            auto pos = line.find("n=");
            if (pos != std::string::npos) n = std::stoi(line.substr(pos + 2));
            continue;
        }
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u >> v)) throw PreconditionError("edges parse: bad line '" + line + "'");
        arcs.emplace_back(u, v);
    }
    if (n < 0) throw PreconditionError("edges parse: missing '# n=<n>' header");
    DenseIntMatrix a(n);
    for (auto [u, v] : arcs) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw PreconditionError("edges parse: arc out of range");
        a.at(u, v) = 1;
    }
    return Digraph(std::move(a));
}

Digraph read_json(std::istream& is) {
    json j;
    try {
        is >> j;
    } catch (const json::exception& e) {
        throw PreconditionError(std::string("json parse: ") + e.what());
    }
    if (!j.contains("n") || !j.contains("arcs"))
        throw PreconditionError("json parse: need 'n' and 'arcs'");
    int n = j["n"].get<int>();
    DenseIntMatrix a(n);
    for (const auto& arc : j["arcs"]) {
        int u = arc.at(0).get<int>(), v = arc.at(1).get<int>();
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw PreconditionError("json parse: arc out of range");
        a.at(u, v) = 1;
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
    return Digraph(std::move(a), std::move(labels));
}

}  // namespace

void write_graph(std::ostream& os, const Digraph& d, GraphFormat fmt) {
    switch (fmt) {
        case GraphFormat::Matrix: write_matrix(os, d); break;
        case GraphFormat::Edges: write_edges(os, d); break;
        case GraphFormat::Json: write_json(os, d); break;
        case GraphFormat::Dot: write_dot(os, d); break;
    }
}

std::string graph_to_string(const Digraph& d, GraphFormat fmt) {
    std::ostringstream os;
    write_graph(os, d, fmt);
    return os.str();
}

Digraph read_graph(std::istream& is, GraphFormat fmt) {
    switch (fmt) {
        case GraphFormat::Matrix: return read_matrix(is);
        case GraphFormat::Edges: return read_edges(is);
        case GraphFormat::Json: return read_json(is);
        case GraphFormat::Dot: break;
    }
    throw PreconditionError("dot input is not supported");
}

Digraph read_graph_auto(std::istream& is) {
    std::stringstream buf;
    buf << is.rdbuf();
    std::string text = buf.str();
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw PreconditionError("parse: empty input");
    std::istringstream again(text);
    if (text[first] == '{') return read_json(again);
    if (text[first] == '#') return read_edges(again);
    return read_matrix(again);
}

std::string adjacency_hash(const Digraph& d) {
    std::uint64_t h = 1469598103934665603ull;  // FNV offset basis
    auto mix = [&h](std::uint64_t byte) {
        h ^= byte;
        h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(d.order()));
    for (int i = 0; i < d.order(); ++i)
        for (int j = 0; j < d.order(); ++j) mix(static_cast<std::uint64_t>(d.adjacency().at(i, j)));
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

}  // namespace dsrg
