#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ringlab/claims.hpp"
#include "ringlab/error.hpp"
#include "ringlab/expr.hpp"
#include "ringlab/properties.hpp"
#include "ringlab/report.hpp"

using namespace ringlab;

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitError = 2;

struct Options {
    std::string ring;
    std::string property;
    int max_degree = 3;
    bool json = false;
    std::string corpus;
    std::uint64_t seed = 0;
    std::size_t cap = kDefaultRingSizeCap;
};

double ms_since(std::chrono::steady_clock::time_point t) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t).count();
}

std::vector<RingPtr> load_corpus(const Options& opt, RingCache& cache) {
    std::vector<std::string> lines;
    if (opt.corpus.empty()) {
        lines = default_corpus();
    } else {
        std::ifstream in(opt.corpus);
        if (!in) throw Error("cannot open corpus file " + opt.corpus);
        std::string line;
        std::size_t number = 0;
        std::vector<RingPtr> rings;
        while (std::getline(in, line)) {
            ++number;
            if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            try {
                rings.push_back(cache.evaluate(line));
            } catch (const Error& e) {
                throw Error(opt.corpus + ":" + std::to_string(number) + ": " + e.what());
            }
        }
        if (rings.empty()) throw Error("corpus file " + opt.corpus + " lists no rings");
        return rings;
    }
    std::vector<RingPtr> rings;
    for (const auto& l : lines) rings.push_back(cache.evaluate(l));
    return rings;
}

int cmd_check(const Options& opt) {
    if (!is_property_id(opt.property)) throw ContractError("unknown property '" + opt.property + "'");
    RingCache cache(opt.cap);
    auto ring = cache.evaluate(opt.ring);
    CheckOptions co;
    co.max_degree = opt.max_degree;
    const auto rep = check_property(ring, opt.property, co);
    if (opt.json) std::cout << property_json(*ring, rep, {opt.max_degree, opt.cap}).dump(2) << "\n";
    else std::cout << format_property(*ring, rep);
    return rep.verdict ? kExitTrue : kExitFalse;
}

int cmd_suite(const Options& opt) {
    const auto start = std::chrono::steady_clock::now();
    RingCache cache(opt.cap);
    auto corpus = load_corpus(opt, cache);
    SuiteCaps caps;
    caps.max_degree = opt.max_degree;
    caps.ring_size_cap = opt.cap;
    const auto rep = run_suite(corpus, caps);
    if (opt.json) std::cout << suite_json(rep, {opt.max_degree, opt.cap}, ms_since(start)).dump(2) << "\n";
    else std::cout << format_suite(rep);
    return rep.ok() ? kExitTrue : kExitFalse;
}

int cmd_explore(const Options& opt) {
    const auto start = std::chrono::steady_clock::now();
    RingCache cache(opt.cap);
    const auto rows = explore_problem(load_corpus(opt, cache));
    if (opt.json) std::cout << exploration_json(rows, {opt.max_degree, opt.cap}, ms_since(start)).dump(2) << "\n";
    else std::cout << format_exploration(rows);
    return kExitTrue;
}

int cmd_table(const Options& opt) {
    RingCache cache(opt.cap);
    auto ring = cache.evaluate(opt.ring);
    if (opt.json) std::cout << table_json(*ring).dump() << "\n";
    else std::cout << format_table(*ring);
    return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-ring property checker and claim suite"};
    app.require_subcommand(1);
    Options opt;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--max-degree", opt.max_degree, "degree bound for polynomial searches")->check(CLI::Range(0, 4));
        sub->add_flag("--json", opt.json, "machine-readable output");
        sub->add_option("--seed", opt.seed, "reserved; all searches are deterministic");
        sub->add_option("--ring-size-cap", opt.cap, "largest ring that may be built");
    };

    auto* check = app.add_subcommand("check", "decide one property of one ring");
    check->add_option("--ring", opt.ring, "ring expression, e.g. \"S2(M2(Z2))\"")->required();
    check->add_option("--property", opt.property, "property id")->required();
    common(check);

    auto* suite = app.add_subcommand("suite", "run every claim on a corpus");
    suite->add_option("--corpus", opt.corpus, "file with one ring expression per line");
    common(suite);

    auto* explore = app.add_subcommand("explore", "weakly reversible pi-duo rings that are not reversible");
    explore->add_option("--corpus", opt.corpus, "file with one ring expression per line");
    common(explore);

    auto* table = app.add_subcommand("table", "print a ring's multiplication table");
    table->add_option("--ring", opt.ring, "ring expression")->required();
    common(table);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    try {
        if (check->parsed()) return cmd_check(opt);
        if (suite->parsed()) return cmd_suite(opt);
        if (explore->parsed()) return cmd_explore(opt);
        return cmd_table(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
