#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "strcyc/betti.hpp"
#include "strcyc/enumerate.hpp"
#include "strcyc/invariants.hpp"
#include "strcyc/monomial_ideal.hpp"
#include "strcyc/radical_verify.hpp"
#include "strcyc/witness.hpp"

using json = nlohmann::ordered_json;
using namespace strcyc;

namespace {

constexpr const char* kVersion = "strcyc 0.1.0";

long long defaultBudget() {
    if (const char* env = std::getenv("STRCYC_BUDGET")) {
        try {
            return std::stoll(env);
        } catch (...) {
            fail(Error::Code::MalformedInput, "STRCYC_BUDGET is not a number");
        }
    }
    return 1000000;
}

std::string shapeName(Shape s) {
    switch (s) {
    case Shape::String: return "string";
    case Shape::Cycle: return "cycle";
    default: return "general";
    }
}

json invariantsJson(const InvariantReport& r) {
    return json{{"s", r.s}, {"n", r.nList}, {"b", r.b}, {"M", r.modularity}, {"pd", r.pd}};
}

json witnessJson(const Witness& w) {
    json polys = json::array();
    for (const auto& poly : w.polys) {
        json terms = json::array();
        for (const auto& t : poly.terms) terms.push_back(t.gens);
        polys.push_back(terms);
    }
    return polys;
}

json verifyJson(const VerificationReport& r) {
    const char* status = r.verdict == VerificationReport::Status::True           ? "true"
                         : r.verdict == VerificationReport::Status::False        ? "false"
                                                                                 : "inconclusive";
    return json{{"status", status},
                {"containment", r.containment},
                {"memberships", r.memberships},
                {"steps", r.stepsUsed},
                {"budget", r.budgetLimit}};
}

const char* fieldName(HomologyField f) { return f == HomologyField::GF2 ? "GF2" : "QQ"; }

// full per-instance record used by enumerate and assembled piecewise by the
// single-instance subcommands
json instanceRecord(const Hypergraph& h, bool withVerify, long long budget) {
    json rec;
    rec["instance"] = h.encode();
    rec["version"] = kVersion;
    rec["shape"] = shapeName(h.shape());
    rec["mu"] = h.mu();
    InvariantReport inv = invariantReport(h);
    rec["invariants"] = invariantsJson(inv);
    MonomialIdeal ideal = canonicalIdeal(h);
    rec["height"] = height(ideal);
    Witness w = witnessFor(h);
    rec["witness"] = witnessJson(w);
    rec["witnessSize"] = w.size();
    int oraclePd = pdOracle(ideal);
    rec["oracle"] = json{{"pd", oraclePd}, {"field", "QQ"}};
    bool consistent = inv.pd == oraclePd && static_cast<int>(w.size()) == inv.pd;
    if (withVerify) {
        VerificationReport rep = verifyPolynomials(ideal, expandWitness(w, ideal), budget);
        rec["verify"] = verifyJson(rep);
        if (rep.verdict == VerificationReport::Status::False) consistent = false;
    } else {
        rec["verify"] = json{{"status", "skipped"}};
    }
    rec["consistent"] = consistent;
    return rec;
}

MonomialIdeal idealFromFileOrInstance(const std::string& instance, const std::string& idealPath,
                                      const std::string& ringSpec, Hypergraph* outH) {
    if (!idealPath.empty()) {
        std::ifstream in(idealPath);
        if (!in) fail(Error::Code::MalformedInput, "cannot open " + idealPath);
        std::string line, ringLine, gensText;
        while (std::getline(in, line)) {
            if (line.rfind("ring:", 0) == 0) {
                ringLine = line.substr(5);
            } else if (line.rfind("ideal:", 0) == 0) {
                gensText += line.substr(6);
            } else if (!line.empty()) {
                gensText += line;
            }
            gensText += " ";
        }
        std::string ringText = !ringSpec.empty() ? ringSpec : ringLine;
        if (ringText.empty())
            fail(Error::Code::MalformedInput, "ideal input needs --ring or a ring: line");
        std::vector<std::string> ring;
        std::istringstream rs(ringText);
        std::string name;
        while (std::getline(rs, name, ',')) {
            size_t a = name.find_first_not_of(" \t");
            size_t b = name.find_last_not_of(" \t");
            if (a == std::string::npos) continue;
            ring.push_back(name.substr(a, b - a + 1));
        }
        return parseIdealText(gensText, ring);
    }
    Hypergraph h = parseHypergraph(instance);
    if (outH) *outH = h;
    return canonicalIdeal(h);
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"projective dimension, small radical generating sets and homology"
                 " oracles for string and cycle hypergraph ideals"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string instance, outPath, format{"plain"}, idealPath, ringSpec, fieldSpec{"qq"};
    std::string shape{"string"};
    long long budget = -1;
    bool expand = false, betti = false, crossCheck = false, dedup = false, timings = false;
    int muMax = 6, verifyMuMax = 0, jobs = 1;

    auto* pdCmd = app.add_subcommand("pd", "combinatorial invariants and projective dimension");
    pdCmd->add_option("instance", instance, "string:<c|o>+, cycle:<c|o>+ or faces:{..};..")
        ->required();

    auto* witCmd = app.add_subcommand("witness", "synthesize the radical generating set");
    witCmd->add_option("instance", instance)->required();
    witCmd->add_flag("--expand", expand, "also print expanded polynomials");

    auto* verCmd = app.add_subcommand("verify", "Groebner-certify the witness");
    verCmd->add_option("instance", instance)->required();
    verCmd->add_option("--budget", budget, "reduction steps per Groebner run");

    auto* oraCmd = app.add_subcommand("oracle", "projective dimension via restricted homology");
    oraCmd->add_option("instance", instance);
    oraCmd->add_option("--ideal", idealPath, "file with generators (and optional ring: line)");
    oraCmd->add_option("--ring", ringSpec, "comma-separated ambient variable list");
    oraCmd->add_option("--field", fieldSpec, "qq or gf2")->check(CLI::IsMember({"qq", "gf2"}));
    oraCmd->add_flag("--betti", betti, "dump the nonzero Betti entries");
    oraCmd->add_flag("--cross-check", crossCheck, "also compute the GF(2) value");

    auto* enuCmd = app.add_subcommand("enumerate", "sweep all patterns of a shape");
    enuCmd->add_option("--shape", shape, "string or cycle")
        ->check(CLI::IsMember({"string", "cycle"}));
    enuCmd->add_option("--mu-max", muMax, "largest vertex count")->required();
    enuCmd->add_option("--verify-mu-max", verifyMuMax, "radical-verify instances up to this size");
    enuCmd->add_option("--jobs", jobs, "worker threads");
    enuCmd->add_option("--out", outPath, "report file (default stdout)");
    enuCmd->add_flag("--dedup", dedup, "keep only canonical necklaces (cycles)");
    enuCmd->add_flag("--timings", timings, "include timing fields in the summary");
    enuCmd->add_option("--budget", budget, "reduction steps per Groebner run");

    auto* expCmd = app.add_subcommand("export", "print the canonical ideal");
    expCmd->add_option("instance", instance)->required();
    expCmd->add_option("--format", format, "plain or cas")->check(CLI::IsMember({"plain", "cas"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (budget < 0) budget = defaultBudget();

        if (pdCmd->parsed()) {
            Hypergraph h = parseHypergraph(instance);
            json rec{{"instance", h.encode()},
                     {"version", kVersion},
                     {"shape", shapeName(h.shape())},
                     {"mu", h.mu()},
                     {"invariants", invariantsJson(invariantReport(h))}};
            emit(rec);
            return 0;
        }

        if (witCmd->parsed()) {
            Hypergraph h = parseHypergraph(instance);
            Witness w = witnessFor(h);
            json rec{{"instance", h.encode()},
                     {"version", kVersion},
                     {"shape", shapeName(h.shape())},
                     {"mu", h.mu()},
                     {"witness", witnessJson(w)},
                     {"witnessSize", w.size()},
                     {"trace", w.trace}};
            if (expand) {
                MonomialIdeal ideal = canonicalIdeal(h);
                json polys = json::array();
                for (const Polynomial& p : expandWitness(w, ideal)) polys.push_back(p.text(ideal.vars));
                rec["expanded"] = polys;
                rec["ring"] = ideal.vars;
            }
            emit(rec);
            return 0;
        }

        if (verCmd->parsed()) {
            Hypergraph h = parseHypergraph(instance);
            Witness w = witnessFor(h);
            VerificationReport rep = verifyWitness(h, w, budget);
            json rec{{"instance", h.encode()},
                     {"version", kVersion},
                     {"witnessSize", w.size()},
                     {"verify", verifyJson(rep)}};
            emit(rec);
            if (rep.verdict == VerificationReport::Status::True) return 0;
            if (rep.verdict == VerificationReport::Status::False) return 1;
            return 3;
        }

        if (oraCmd->parsed()) {
            if (instance.empty() && idealPath.empty())
                fail(Error::Code::MalformedInput, "oracle needs an instance or --ideal");
            Hypergraph h = Hypergraph::stringFromPattern("cc");
            bool haveH = idealPath.empty();
            MonomialIdeal ideal = idealFromFileOrInstance(instance, idealPath, ringSpec, &h);
            HomologyField field =
                fieldSpec == "gf2" ? HomologyField::GF2 : HomologyField::Rationals;
            BettiTable table = bettiTable(ideal, field);
            json rec{{"instance", haveH ? h.encode() : ("ideal:" + idealPath)},
                     {"version", kVersion},
                     {"oracle", json{{"pd", table.pd}, {"field", fieldName(field)}}}};
            if (crossCheck) {
                int other = pdOracle(ideal, field == HomologyField::GF2
                                                ? HomologyField::Rationals
                                                : HomologyField::GF2);
                rec["crossCheckPd"] = other;
                rec["fieldsAgree"] = other == table.pd;
            }
            if (haveH && h.shape() != Shape::General) {
                int f = pdFormula(h);
                rec["formulaPd"] = f;
                rec["formulaDisagrees"] = f != table.pd;
            }
            if (betti) {
                json entries = json::array();
                for (const BettiEntry& e : table.entries) {
                    json names = json::array();
                    for (size_t i = 0; i < ideal.vars.size(); ++i) {
                        if (e.sigma & (uint32_t(1) << i)) names.push_back(ideal.vars[i]);
                    }
                    entries.push_back(
                        json{{"i", e.homologicalDegree}, {"sigma", names}, {"rank", e.rank}});
                }
                rec["betti"] = entries;
            }
            emit(rec);
            return 0;
        }

        if (enuCmd->parsed()) {
            int muMin = shape == "string" ? 2 : 3;
            if (muMax < muMin)
                fail(Error::Code::TooFewVertices,
                     "mu-max below the smallest " + shape + " size (" + std::to_string(muMin) + ")");
            std::vector<std::string> patterns;
            for (int mu = muMin; mu <= muMax; ++mu) {
                auto pats = shape == "string" ? stringPatterns(mu) : cyclePatterns(mu);
                for (auto& p : pats) {
                    if (dedup && shape == "cycle" && !isCanonicalNecklace(p)) continue;
                    patterns.push_back(p);
                }
            }
            std::vector<std::string> lines(patterns.size());
            std::atomic<size_t> next{0};
            std::atomic<int> mismatches{0};
            auto worker = [&]() {
                while (true) {
                    size_t i = next.fetch_add(1);
                    if (i >= patterns.size()) break;
                    Hypergraph h = shape == "string"
                                       ? Hypergraph::stringFromPattern(patterns[i])
                                       : Hypergraph::cycleFromPattern(patterns[i]);
                    json rec = instanceRecord(h, h.mu() <= verifyMuMax, budget);
                    if (!rec["consistent"].get<bool>()) mismatches.fetch_add(1);
                    lines[i] = rec.dump();
                }
            };
            auto t0 = std::chrono::steady_clock::now();
            int threadCount = std::max(1, jobs);
            std::vector<std::thread> pool;
            for (int t = 1; t < threadCount; ++t) pool.emplace_back(worker);
            worker();
            for (auto& t : pool) t.join();
            auto t1 = std::chrono::steady_clock::now();

            std::ostream* out = &std::cout;
            std::ofstream file;
            if (!outPath.empty()) {
                file.open(outPath);
                if (!file) fail(Error::Code::MalformedInput, "cannot open " + outPath);
                out = &file;
            }
            for (const std::string& line : lines) *out << line << "\n";
            json summary{{"summary",
                          json{{"shape", shape},
                               {"muMax", muMax},
                               {"instances", patterns.size()},
                               {"mismatches", mismatches.load()},
                               {"verifyMuMax", verifyMuMax}}}};
            if (timings) {
                summary["summary"]["elapsedMs"] =
                    std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
            }
            std::cout << summary.dump() << "\n";
            return mismatches.load() ? 1 : 0;
        }

        if (expCmd->parsed()) {
            Hypergraph h = parseHypergraph(instance);
            MonomialIdeal ideal = canonicalIdeal(h);
            if (format == "cas") {
                std::string vars;
                for (size_t i = 0; i < ideal.vars.size(); ++i) {
                    if (i) vars += ",";
                    vars += ideal.vars[i];
                }
                std::cout << "R = QQ[" << vars << "];\n";
                std::cout << "I = ideal(" << ideal.generatorsText() << ");\n";
            } else {
                std::string vars;
                for (size_t i = 0; i < ideal.vars.size(); ++i) {
                    if (i) vars += ", ";
                    vars += ideal.vars[i];
                }
                std::cout << "ring: " << vars << "\n";
                std::cout << "ideal: " << ideal.generatorsText() << "\n";
            }
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error (" << e.codeName() << "): " << e.what() << "\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
