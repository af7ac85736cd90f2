// dsrg: construct, verify, sieve, and analyze directed strongly regular
// graphs from finite-group data.
//
// Exit codes: 0 ok, 2 usage/IO/parse error, 3 bad construction parameters,
// 4 verification failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "dsrg/catalog.hpp"
#include "dsrg/errors.hpp"
#include "dsrg/families.hpp"
#include "dsrg/formats.hpp"
#include "dsrg/group_ring.hpp"
#include "dsrg/quotients.hpp"
#include "dsrg/spectral.hpp"

namespace {

using namespace dsrg;

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stoi(item));
    }
    return out;
}

struct FamilyOptions {
    std::string family;
    int p = 0, n = 0, q = 0, m_order = 0;
    std::int64_t s = 0;
    std::string H;
    int v = 0;
    bool with_identity = false;
    int variant = 24;
    int expand_tmu = 0, expand_tl1 = 0;
};

struct Built {
    Digraph digraph;
    ParamTuple expected;
    std::optional<CayleyGraph> cayley;  // absent for product/expansion outputs
    std::map<std::string, std::string> params;
};

Built build_family(const FamilyOptions& o) {
    std::map<std::string, std::string> params;
    auto record = [&params](const std::string& k, auto v) { params[k] = std::to_string(v); };

    std::vector<int> H = parse_int_list(o.H);
    if (H.empty() && o.v > 0)
        for (int l = 1; l <= o.v; ++l) H.push_back(l);  // H defaults to {1..v}

    std::optional<FamilyResult> fam;
    std::optional<PipelineResult> pipe;
    if (o.family == "f39" || o.family == "f310") {
        if (o.p <= 0 || o.n <= 0 || H.empty())
            throw PreconditionError(o.family + ": need --p, --n and --H (or --v)");
        fam = (o.family == "f39") ? family_39(o.p, o.n, H) : family_310(o.p, o.n, H);
        record("p", o.p);
        record("n", o.n);
        std::string hs;
        for (std::size_t i = 0; i < H.size(); ++i) hs += (i ? "," : "") + std::to_string(H[i]);
        params["H"] = hs;
    } else if (o.family == "f311") {
        if (o.m_order <= 0 || o.q <= 0)
            throw PreconditionError("f311: need --m (order of A) and --q");
        std::int64_t s = o.s;
        if (s == 0) {
            // search the power maps a -> a^s for one with the q-orbit condition
            FiniteGroup a = cyclic(o.m_order, "a");
            for (std::int64_t cand = 2; cand < o.m_order; ++cand) {
                if (std::gcd(cand, static_cast<std::int64_t>(o.m_order)) != 1) continue;
                if (q_orbit_check(a, power_map(a, cand), o.q).ok) {
                    s = cand;
                    break;
                }
            }
            if (s == 0 && o.q == 1) s = 1;
            if (s == 0)
                throw PreconditionError("f311: no power map of C_" + std::to_string(o.m_order) +
                                        " satisfies the " + std::to_string(o.q) +
                                        "-orbit condition");
        }
        fam = family_311_cyclic(o.m_order, s, o.q, o.with_identity);
        record("m", o.m_order);
        record("s", s);
        record("q", o.q);
        record("with_identity", static_cast<int>(o.with_identity));
    } else if (o.family == "f314") {
        if (o.p <= 0 || o.n <= 0 || o.s == 0)
            throw PreconditionError("f314: need --p, --n, --s");
        fam = family_314(o.p, o.n, o.s);
        record("p", o.p);
        record("n", o.n);
        record("s", o.s);
    } else if (o.family == "dihedral") {
        if (o.n <= 0) throw PreconditionError("dihedral: need --n");
        fam = family_dihedral(o.n);
        record("n", o.n);
    } else if (o.family == "product21") {
        if (o.n <= 0) throw PreconditionError("product21: need --n (and --variant 24|25|26)");
        ProductVariant variant = o.variant == 24   ? ProductVariant::T24
                                 : o.variant == 25 ? ProductVariant::T25
                                                   : ProductVariant::T26;
        pipe = pipeline_24_25_26(o.n, variant);
        record("n", o.n);
        record("variant", o.variant);
    } else {
        throw PreconditionError("unknown family '" + o.family +
                                "' (f39|f310|f311|f314|dihedral|product21)");
    }

    Built b{fam ? fam->graph.digraph : pipe->graph,
            fam ? fam->expected : pipe->expected,
            fam ? std::optional<CayleyGraph>(std::move(fam->graph)) : std::nullopt,
            std::move(params)};
    b.params["family"] = o.family;
    if (o.expand_tmu > 1) {
        b.digraph = expand_t_mu(b.digraph, o.expand_tmu);
        b.expected = ParamTuple{b.expected.n * o.expand_tmu, b.expected.k * o.expand_tmu,
                                b.expected.mu * o.expand_tmu, b.expected.lambda * o.expand_tmu,
                                b.expected.t * o.expand_tmu};
        b.cayley.reset();
        b.params["expand_tmu"] = std::to_string(o.expand_tmu);
    }
    if (o.expand_tl1 > 1) {
        int m = o.expand_tl1;
        b.digraph = expand_t_lambda1(b.digraph, m);
        b.expected = ParamTuple{b.expected.n * m, m * (b.expected.k + 1) - 1,
                                b.expected.mu * m, m * (b.expected.t + 1) - 2,
                                m * (b.expected.t + 1) - 1};
        b.cayley.reset();
        b.params["expand_tl1"] = std::to_string(m);
    }
    return b;
}

void add_family_flags(CLI::App* cmd, FamilyOptions& o) {
    cmd->add_option("family", o.family, "f39|f310|f311|f314|dihedral|product21")->required();
    cmd->add_option("--p", o.p, "prime p");
    cmd->add_option("--n", o.n, "order parameter n");
    cmd->add_option("--H", o.H, "comma-separated exponent set, e.g. 1,2");
    cmd->add_option("--v", o.v, "shorthand for H = {1..v}");
    cmd->add_option("--m", o.m_order, "order of the cyclic group A (f311)");
    cmd->add_option("--s", o.s, "power-map exponent / primitive root");
    cmd->add_option("--q", o.q, "orbit size q (f311)");
    cmd->add_flag("--with-identity", o.with_identity, "f311: adjoin e_A to the orbit reps");
    cmd->add_option("--variant", o.variant, "product21: 24, 25 or 26");
    cmd->add_option("--expand-tmu", o.expand_tmu, "post-expand by A(x)J_m (needs t = mu)");
    cmd->add_option("--expand-tl1", o.expand_tl1,
                    "post-expand by A(x)J_m + I(x)(J_m-I_m) (needs t = lambda+1)");
}

int cmd_feasible(std::int64_t n_max) {
    auto list = enumerate_feasible(n_max);
    std::printf("%6s %6s %6s %7s %6s  %s\n", "n", "k", "mu", "lambda", "t", "class");
    for (const auto& p : list)
        std::printf("%6lld %6lld %6lld %7lld %6lld  %s\n", static_cast<long long>(p.n),
                    static_cast<long long>(p.k), static_cast<long long>(p.mu),
                    static_cast<long long>(p.lambda), static_cast<long long>(p.t),
                    to_string(p.cls()).c_str());
    std::fprintf(stderr, "%zu feasible tuples with n <= %lld\n", list.size(),
                 static_cast<long long>(n_max));
    return 0;
}

int cmd_construct(const FamilyOptions& o, const std::string& out_file,
                  const std::string& format) {
    Built b = build_family(o);
    VerifyOutcome v = verify_dsrg(b.digraph);
    if (!v.ok() || *v.tuple != b.expected) {
        std::cerr << "VERIFICATION MISMATCH: " << v.describe() << " expected "
                  << b.expected.str() << "\n";
        return 4;
    }
    GraphFormat fmt = parse_format(format);
    if (out_file.empty() || out_file == "-") {
        write_graph(std::cout, b.digraph, fmt);
    } else {
        std::ofstream fs(out_file);
        if (!fs) {
            std::cerr << "cannot open " << out_file << "\n";
            return 2;
        }
        write_graph(fs, b.digraph, fmt);
    }
    std::cerr << "VERIFIED " << v.tuple->str() << " " << to_string(v.tuple->cls()) << "\n";
    return 0;
}

int cmd_verify(const std::string& file, const std::string& format) {
    std::ifstream fs;
    std::istream* in = &std::cin;
    if (file != "-") {
        fs.open(file);
        if (!fs) {
            std::cerr << "cannot open " << file << "\n";
            return 2;
        }
        in = &fs;
    }
    Digraph d = format == "auto" ? read_graph_auto(*in) : read_graph(*in, parse_format(format));
    VerifyOutcome v = verify_dsrg(d);
    std::cout << v.describe() << "\n";
    return 0;
}

int cmd_spectral(int n, int m, std::int64_t k, const std::string& Hcsv, bool starred) {
    std::vector<int> H = parse_int_list(Hcsv);
    SpectralProfile p = profile({n, m, k}, H, starred);
    std::cout << (starred ? "S* = [" : "S = [");
    for (int u = 0; u < p.n; ++u) {
        if (u) std::cout << ", ";
        if (p.s_is_int[u])
            std::cout << p.s_int[u];
        else
            std::cout << p.s[u].real() << (p.s[u].imag() >= 0 ? "+" : "") << p.s[u].imag()
                      << "i";
    }
    std::cout << "]";
    if (!starred) {
        Verdict v = criterion_522(p);
        if (v.yes)
            std::cout << "; criterion 5.22: YES sigma=" << v.value << " -> "
                      << v.implied->str();
        else
            std::cout << "; criterion 5.22: no (" << v.why << ")";
        // infer a (s, sigma) pattern for 5.23 when present
        std::int64_t sigma = 0, s_mult = 0;
        bool clean = true;
        for (int u = 1; u < p.n && clean; ++u) {
            if (!p.s_is_int[u]) clean = false;
            else if (p.s_int[u] != 0) {
                if (sigma == 0) sigma = p.s_int[u];
                if (p.s_int[u] != sigma) clean = false;
                ++s_mult;
            }
        }
        if (clean && sigma < 0 && s_mult > 0) {
            Verdict v23 = criterion_523(p, s_mult, sigma);
            if (v23.yes)
                std::cout << "; criterion 5.23 (s=" << s_mult << ", sigma=" << sigma
                          << "): YES -> " << v23.implied->str();
        }
    } else {
        std::int64_t target = 0, r_mult = 0;
        bool clean = true;
        for (int u = 1; u < p.n && clean; ++u) {
            if (!p.s_is_int[u]) clean = false;
            else if (p.s_int[u] != 0) {
                if (target == 0) target = p.s_int[u];
                if (p.s_int[u] != target) clean = false;
                ++r_mult;
            }
        }
        if (clean && r_mult > 0 && target >= 1) {
            Verdict v26 = criterion_526(p, r_mult, target - 1);
            if (v26.yes)
                std::cout << "; criterion 5.26 (r=" << r_mult << ", rho=" << target - 1
                          << "): YES -> " << v26.implied->str();
            else
                std::cout << "; criterion 5.26: no (" << v26.why << ")";
        } else {
            std::cout << "; criterion 5.26: no matching (r, rho) pattern";
        }
    }
    std::cout << "\n";
    return 0;
}

int cmd_quotient(const FamilyOptions& o) {
    Built b = build_family(o);
    if (!b.cayley)
        throw PreconditionError("quotient: this construction is not Cayley-backed");
    StabilizerReport rep = stabilizer_facts(*b.cayley);
    std::cout << "tuple " << rep.tuple.str() << "  |G_S| = " << rep.g_s.size()
              << "  |G_S^-1| = " << rep.g_s_inv.size() << "  gcd = " << rep.gcd_all << "\n";
    std::cout << "aut bound " << aut_bound(*b.cayley).to_string() << "\n";
    for (bool out : {true, false}) {
        try {
            QuotientResult q = quotient_graph(*b.cayley, out);
            std::cout << (out ? "S_out" : "S_in") << " quotient verifies as "
                      << q.tuple.str() << " on " << q.graph.order() << " cosets\n";
        } catch (const QuotientError& e) {
            std::cout << (out ? "S_out" : "S_in") << " quotient undefined: " << e.what()
                      << "\n";
        }
    }
    return 0;
}

int cmd_catalog(const std::string& action, const FamilyOptions& o,
                const std::string& path_flag) {
    std::string path = catalog_path(path_flag);
    if (action == "add") {
        Built b = build_family(o);
        CatalogEntry e;
        e.family = o.family;
        e.params = b.params;
        e.params.erase("family");
        e.tuple = b.expected;
        e.flag = to_string(b.expected.cls());
        try {
            SpectrumTriple sp = spectrum(b.expected);
            e.eigenvalues = {sp.k, sp.rho, sp.sigma};
            e.multiplicities = {1, sp.r, sp.s};
        } catch (const PreconditionError&) {
            // degenerate spectrum (complex or repeated); leave empty
        }
        if (b.cayley) {
            e.stab_out = set_stabilizer(*b.cayley->group, b.cayley->connection).size();
            e.stab_in =
                set_stabilizer(*b.cayley->group, b.cayley->connection.inverses()).size();
        }
        e.hash = adjacency_hash(b.digraph);
        append_catalog(path, e);
        std::cout << "added " << e.family << " " << e.tuple.str() << " to " << path << "\n";
        return 0;
    }
    if (action == "list") {
        for (const auto& e : load_catalog(path))
            std::cout << e.family << " " << e.tuple.str() << " " << e.flag << " hash=" << e.hash
                      << "\n";
        return 0;
    }
    if (action == "check") {
        int bad = 0;
        for (const auto& e : load_catalog(path)) {
            FamilyOptions o2;
            o2.family = e.family;
            auto geti = [&e](const char* k) {
                auto it = e.params.find(k);
                return it == e.params.end() ? 0 : std::stoi(it->second);
            };
            o2.p = geti("p");
            o2.n = geti("n");
            o2.q = geti("q");
            o2.m_order = geti("m");
            o2.s = geti("s");
            o2.with_identity = geti("with_identity") != 0;
            o2.variant = e.params.count("variant") ? geti("variant") : 24;
            o2.expand_tmu = geti("expand_tmu");
            o2.expand_tl1 = geti("expand_tl1");
            if (e.params.count("H")) o2.H = e.params.at("H");
            try {
                Built b = build_family(o2);
                VerifyOutcome v = verify_dsrg(b.digraph);
                bool ok = v.ok() && *v.tuple == e.tuple && adjacency_hash(b.digraph) == e.hash;
                std::cout << (ok ? "OK   " : "FAIL ") << e.family << " " << e.tuple.str()
                          << "\n";
                if (!ok) ++bad;
            } catch (const std::exception& ex) {
                std::cout << "FAIL " << e.family << ": " << ex.what() << "\n";
                ++bad;
            }
        }
        return bad ? 4 : 0;
    }
    throw PreconditionError("catalog action must be add | list | check");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"directed strongly regular graphs from finite-group data"};
    app.require_subcommand(1);

    auto* feas = app.add_subcommand("feasible", "sieve parameter tuples up to n_max");
    std::int64_t n_max = 0;
    feas->add_option("n_max", n_max, "largest vertex count")->required();

    auto* cons = app.add_subcommand("construct", "build and verify a named family");
    FamilyOptions copt;
    std::string out_file, format = "matrix";
    add_family_flags(cons, copt);
    cons->add_option("--out", out_file, "output file (default stdout)");
    cons->add_option("--format", format,
                     "matrix: n lines of n space-separated 0/1 | edges: '# n=<n>' header "
                     "then one 'u v' per arc | json: {n, arcs:[[u,v]..], labels, tuple} | "
                     "dot (output only)");

    auto* ver = app.add_subcommand("verify", "check the defining equation on a graph file");
    std::string ver_file, ver_format = "auto";
    ver->add_option("file", ver_file, "graph file, '-' for stdin")->required();
    ver->add_option("--format", ver_format,
                    "auto (sniffs '{' json, '#' edges, else matrix) | matrix | edges | json");

    auto* spec = app.add_subcommand("spectral", "root-of-unity sums and DSRG criteria");
    int sn = 0, sm = 0;
    std::int64_t sk = 0;
    std::string sH;
    bool sstar = false;
    spec->add_option("--n", sn)->required();
    spec->add_option("--m", sm)->required();
    spec->add_option("--k", sk)->required();
    spec->add_option("--H", sH)->required();
    spec->add_flag("--starred", sstar);

    auto* quot = app.add_subcommand("quotient", "stabilizers and coset quotients of a family");
    FamilyOptions qopt;
    add_family_flags(quot, qopt);

    auto* cat = app.add_subcommand("catalog", "persisted construction catalog");
    std::string cat_action, cat_path;
    FamilyOptions aopt;
    cat->add_option("action", cat_action, "add|list|check")->required();
    add_family_flags(cat, aopt);
    cat->get_option("family")->required(false);
    cat->add_option("--catalog", cat_path, "catalog path (or env DSRG_CATALOG)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (feas->parsed()) return cmd_feasible(n_max);
        if (cons->parsed()) return cmd_construct(copt, out_file, format);
        if (ver->parsed()) return cmd_verify(ver_file, ver_format);
        if (spec->parsed()) return cmd_spectral(sn, sm, sk, sH, sstar);
        if (quot->parsed()) return cmd_quotient(qopt);
        if (cat->parsed()) return cmd_catalog(cat_action, aopt, cat_path);
    } catch (const InternalCheckError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 4;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        // parse/IO problems exit 2, bad construction parameters exit 3
        bool construction = cons->parsed() || quot->parsed() || spec->parsed() ||
                            (cat->parsed() && cat_action == "add");
        return construction ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
