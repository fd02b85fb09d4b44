#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "atcert/certify.hpp"
#include "atcert/generate.hpp"
#include "atcert/graph_io.hpp"
#include "atcert/oracle.hpp"

namespace {

using namespace atcert;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

Edge parseEdgeArg(const std::string& spec) {
    for (char sep : {',', '-'}) {
        if (auto pos = spec.find(sep); pos != std::string::npos) {
            return Edge(spec.substr(0, pos), spec.substr(pos + 1));
        }
    }
    if (spec.size() == 2) {
        return Edge(std::string(1, spec[0]), std::string(1, spec[1]));
    }
    throw ValidationError("cannot parse edge '" + spec + "' (use u,v)");
}

std::string readFileOrThrow(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void writeFileOrThrow(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write " + path);
    out << text;
}

RoleAssignment rolesFromFile(const GraphFile& gf) {
    if (!gf.matching) return {};
    return RoleAssignment::fromPairs(*gf.matching);
}

DegreeCaps capsFor(const GraphFile& gf, const std::string& variant) {
    CapsVariant v = capsVariantFromName(variant);
    switch (v) {
        case CapsVariant::Theorem1:
            return theorem1Caps(gf.toNearTriangulation());
        case CapsVariant::Theorem2DoubleStar:
            return theorem2Caps(gf.toNearTriangulation(), rolesFromFile(gf), false);
        case CapsVariant::Theorem2TripleStar:
            return theorem2Caps(gf.toNearTriangulation(), rolesFromFile(gf), true);
        case CapsVariant::Theorem3:
            return theorem3Caps(gf.toNearTriangulation(), rolesFromFile(gf), true);
        case CapsVariant::Theorem4:
            return theorem4Caps(gf.graph, rolesFromFile(gf), true);
        case CapsVariant::Custom:
            throw ValidationError("caps variant must name a theorem");
    }
    throw ValidationError("caps variant must name a theorem");
}

int runMain(int argc, char** argv) {
    CLI::App app{"degree-bounded nonvanishing monomial certificates for planar "
                 "near-triangulations and K5-minor-free graphs"};
    app.require_subcommand(1);

    int workers = 1;
    std::size_t maxTerms = ExpandOptions::fromEnvironment().maxLiveTerms;
    app.add_option("--workers", workers, "expansion worker threads")
        ->check(CLI::Range(1, 64));
    app.add_option("--max-terms", maxTerms, "live-term size guard");

    auto opts = [&]() {
        ExpandOptions o;
        o.workers = workers;
        o.maxLiveTerms = maxTerms;
        return o;
    };

    // validate
    std::string validatePath;
    auto* cmdValidate = app.add_subcommand("validate", "validate a graph file");
    cmdValidate->add_option("graph", validatePath)->required();

    // expand
    std::string expandPath, expandCaps = "theorem1", expandExport;
    std::vector<std::string> expandExclude;
    auto* cmdExpand = app.add_subcommand("expand", "capped expansion of P");
    cmdExpand->add_option("graph", expandPath)->required();
    cmdExpand->add_option("--caps", expandCaps, "caps variant");
    cmdExpand->add_option("--exclude", expandExclude, "edges to exclude (u,v)");
    cmdExpand->add_option("--export", expandExport, "write ledger to file");

    // certify
    std::string certifyPath, certifyOut;
    int theoremNumber = 1;
    auto* cmdCertify = app.add_subcommand("certify", "produce certificates");
    cmdCertify->add_option("graph", certifyPath)->required();
    cmdCertify->add_option("--theorem", theoremNumber)->check(CLI::Range(1, 4));
    cmdCertify->add_option("--out", certifyOut, "write certificates to file");

    // verify
    std::string verifyGraphPath, verifyCertPath;
    auto* cmdVerify = app.add_subcommand("verify", "verify a certificate");
    cmdVerify->add_option("graph", verifyGraphPath)->required();
    cmdVerify->add_option("certificate", verifyCertPath)->required();

    // generate
    std::string genFamily, genOut;
    std::vector<std::string> genParts;
    std::string genShared;
    auto* cmdGenerate = app.add_subcommand("generate", "generate a test family");
    cmdGenerate->add_option("--family", genFamily)->required();
    cmdGenerate->add_option("--out", genOut)->required();
    cmdGenerate->add_option("--part", genParts,
                            "graph files for clique_sum (exactly two)");
    cmdGenerate->add_option("--shared", genShared,
                            "shared clique for clique_sum, e.g. a,b,c");

    // choosable
    std::string choosePath, chooseLists;
    int adversaryK = 0, universe = 0;
    auto* cmdChoose = app.add_subcommand("choosable", "list-coloring checks");
    cmdChoose->add_option("graph", choosePath)->required();
    cmdChoose->add_option("--lists", chooseLists, "JSON file vertex -> colors");
    cmdChoose->add_option("--adversary", adversaryK, "uniform list size");
    cmdChoose->add_option("--universe", universe, "adversary color universe");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (cmdValidate->parsed()) {
        GraphFile gf = readGraphFile(validatePath);
        if (gf.outerCycle && gf.distinguished) {
            NearTriangulation nt = gf.toNearTriangulation();
            std::cout << "valid near-triangulation: n=" << nt.graph().vertexCount()
                      << " s=" << nt.outerLength()
                      << " |E|=" << nt.graph().edgeCount() << "\n";
        } else {
            if (!gf.graph.connected()) throw ValidationError("graph is not connected");
            std::cout << "valid graph: n=" << gf.graph.vertexCount()
                      << " |E|=" << gf.graph.edgeCount()
                      << " (no outer cycle given)\n";
        }
        return kExitOk;
    }

    if (cmdExpand->parsed()) {
        GraphFile gf = readGraphFile(expandPath);
        DegreeCaps caps = capsFor(gf, expandCaps);
        std::set<Edge> excluded;
        for (const auto& spec : expandExclude) excluded.insert(parseEdgeArg(spec));
        CoefficientLedger ledger = cappedExpandP(gf.graph, caps, excluded, opts());
        std::string text = ledger.exportText();
        if (!expandExport.empty()) writeFileOrThrow(expandExport, text);
        std::cout << text;
        return kExitOk;
    }

    if (cmdCertify->parsed()) {
        GraphFile gf = readGraphFile(certifyPath);
        std::string text;
        if (theoremNumber == 1) {
            Certificate cert = certifyTheorem1(gf.toNearTriangulation(), opts());
            text = exportCertificate(cert);
        } else if (theoremNumber == 2 || theoremNumber == 3) {
            NearTriangulation nt = gf.toNearTriangulation();
            DualCertificates dual = theoremNumber == 2 ? certifyTheorem2(nt, opts())
                                                       : certifyTheorem3(nt, opts());
            text = exportCertificate(dual.doubleStar) +
                   exportCertificate(dual.tripleStar);
        } else {
            DualCertificates dual = certifyK5Free(gf.graph, opts());
            text = exportCertificate(dual.doubleStar) +
                   exportCertificate(dual.tripleStar);
        }
        if (!certifyOut.empty()) writeFileOrThrow(certifyOut, text);
        std::cout << text;
        return kExitOk;
    }

    if (cmdVerify->parsed()) {
        GraphFile gf = readGraphFile(verifyGraphPath);
        Certificate cert = parseCertificate(readFileOrThrow(verifyCertPath));
        std::optional<NearTriangulation> context;
        if (gf.outerCycle && gf.distinguished) context = gf.toNearTriangulation();
        Verdict verdict = verifyCertificate(gf.graph, cert, context, opts());
        std::cout << verdict.render();
        return verdict.pass() ? kExitOk : kExitNegative;
    }

    if (cmdGenerate->parsed()) {
        GeneratedGraph gen;
        if (genFamily == "clique_sum") {
            if (genParts.size() != 2 || genShared.empty()) {
                throw ValidationError(
                    "clique_sum needs --part twice and --shared u,v,w");
            }
            GraphFile p1 = readGraphFile(genParts[0]);
            GraphFile p2 = readGraphFile(genParts[1]);
            GeneratedGraph g1{p1.graph, Family::CliqueSum, p1.outerCycle,
                              p1.distinguished, {}};
            GeneratedGraph g2{p2.graph, Family::CliqueSum, p2.outerCycle,
                              p2.distinguished, {}};
            std::vector<VertexId> shared;
            std::istringstream ss(genShared);
            std::string tok;
            while (std::getline(ss, tok, ',')) shared.push_back(tok);
            gen = cliqueSum(g1, g2, shared, shared);
        } else {
            gen = generateNamed(genFamily);
        }
        writeGraphFile(genOut, gen.graph, gen.outerCycle, gen.distinguished);
        std::cout << "wrote " << genOut << ": n=" << gen.graph.vertexCount()
                  << " |E|=" << gen.graph.edgeCount() << "\n";
        return kExitOk;
    }

    if (cmdChoose->parsed()) {
        GraphFile gf = readGraphFile(choosePath);
        if (!chooseLists.empty()) {
            nlohmann::json j = nlohmann::json::parse(readFileOrThrow(chooseLists));
            std::map<VertexId, std::set<int>> lists;
            for (const auto& [v, arr] : j.items()) {
                for (const auto& c : arr) lists[v].insert(c.get<int>());
            }
            auto coloring = solveListColoring(gf.graph, lists);
            if (!coloring) {
                std::cout << "not colorable from the given lists\n";
                return kExitNegative;
            }
            for (const auto& [v, c] : *coloring) std::cout << v << ' ' << c << '\n';
            return kExitOk;
        }
        if (adversaryK <= 0 || universe <= 0) {
            throw ValidationError("choosable needs --lists or --adversary/--universe");
        }
        std::map<VertexId, int> sizes;
        for (const auto& v : gf.graph.vertices()) sizes[v] = adversaryK;
        AdversaryVerdict verdict =
            adversarialChoosability(gf.graph, sizes, universe);
        if (verdict.universeLimited) {
            std::cout << "note: universe-limited partial check (universe "
                      << universe << ")\n";
        }
        std::cout << "assignments checked: " << verdict.assignmentsChecked << '\n';
        if (verdict.allColorable) {
            std::cout << "colorable for all list assignments\n";
            return kExitOk;
        }
        std::cout << "failing assignment:\n";
        for (const auto& [v, colors] : *verdict.failingAssignment) {
            std::cout << "  " << v << ':';
            for (int c : colors) std::cout << ' ' << c;
            std::cout << '\n';
        }
        return kExitNegative;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return runMain(argc, argv);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CertifierError& e) {
        std::cerr << "certifier error: " << e.what() << '\n';
        return kExitNegative;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
