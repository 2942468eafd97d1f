// cospectra: Laplacian spectra, eigenvalue location, and spanning-tree counts
// of cographs, computed directly on cotrees.
//
// Exit codes: 0 success; 1 domain failure (input graph is not a cograph, or an
// internal consistency check failed); 2 usage error or malformed input.

#include "cospectra/bench.hpp"
#include "cospectra/cotree.hpp"
#include "cospectra/cotree_text.hpp"
#include "cospectra/diagonalization.hpp"
#include "cospectra/errors.hpp"
#include "cospectra/exact.hpp"
#include "cospectra/generate.hpp"
#include "cospectra/graph.hpp"
#include "cospectra/recognition.hpp"
#include "cospectra/selftest.hpp"
#include "cospectra/spanning.hpp"
#include "cospectra/spectrum.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace cospectra;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError(0, 0, "cannot open input file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

InputFormat resolve_format(const std::string& text, const std::string& requested) {
    if (requested == "cotree") return InputFormat::CotreeText;
    if (requested == "edges") return InputFormat::EdgeList;
    return detect_format(text);
}

// Any input becomes a canonical cotree; edge lists go through recognition.
Cotree load_cotree(const std::string& path, const std::string& format) {
    const std::string text = read_input(path);
    if (resolve_format(text, format) == InputFormat::EdgeList) {
        Graph g = parse_edge_list(text);
        RecognitionOutcome out = build_cotree(g);
        if (auto* w = std::get_if<P4Witness>(&out)) throw NotACographError(*w);
        return std::get<Cotree>(std::move(out));
    }
    return normalize(parse_cotree(text));
}

bool trace_enabled() {
    const char* v = std::getenv("COSPECTRA_TRACE");
    return v != nullptr && std::string(v) == "1";
}

void print_spectrum_human(const SpectrumMultiset& s) {
    for (auto [v, m] : s.pairs) std::cout << v << " x " << m << "\n";
}

void print_spectrum_json(const SpectrumMultiset& s) {
    nlohmann::ordered_json j;
    j["n"] = s.vertex_count();
    auto arr = nlohmann::ordered_json::array();
    for (auto [v, m] : s.pairs) arr.push_back({v, m});
    j["spectrum"] = std::move(arr);
    std::cout << j.dump() << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Laplacian spectra, eigenvalue location, and spanning-tree counts of cographs"};
    app.require_subcommand(1);

    std::string input, format = "auto";
    bool stats = false, as_json = false, check = false;
    std::string x_text;
    std::int64_t gen_n = 0;
    std::uint64_t gen_seed = 0;
    double join_bias = 0.5;
    std::vector<std::int64_t> bench_sizes;
    int bench_trials = 3;
    std::uint64_t bench_seed = 1;
    int st_max_n = 6;
    std::uint64_t st_seed = 12345;
    int st_trials = 25;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", input, "input file, or - for stdin")->required();
        cmd->add_option("--format", format, "input format: auto (default), cotree, edges")
            ->check(CLI::IsMember({"auto", "cotree", "edges"}));
    };

    auto* cmd_parse = app.add_subcommand("parse", "normalize a cotree (or recognize an edge list) and print it");
    add_input(cmd_parse);
    cmd_parse->add_flag("--stats", stats, "also print n, depth, interior node count");

    auto* cmd_recognize = app.add_subcommand("recognize", "print the canonical cotree, or an induced-P4 witness");
    add_input(cmd_recognize);

    auto* cmd_spectrum = app.add_subcommand("spectrum", "print the Laplacian spectrum");
    add_input(cmd_spectrum);
    cmd_spectrum->add_flag("--json", as_json, "emit JSON instead of the value x multiplicity table");

    auto* cmd_inertia = app.add_subcommand("inertia", "count eigenvalues above / equal to / below x");
    add_input(cmd_inertia);
    cmd_inertia->add_option("--x", x_text, "threshold, integer or p/q rational")->required();

    auto* cmd_trees = app.add_subcommand("trees", "print the number of spanning trees");
    add_input(cmd_trees);
    cmd_trees->add_flag("--check", check, "cross-check against the spectral product");
    cmd_trees->add_flag("--json", as_json, "emit JSON");

    auto* cmd_gen = app.add_subcommand("gen", "generate a random canonical cotree");
    cmd_gen->add_option("--n", gen_n, "number of leaves")->required()->check(CLI::PositiveNumber);
    cmd_gen->add_option("--seed", gen_seed, "random seed")->required();
    cmd_gen->add_option("--join-bias", join_bias, "probability of a Join root (default 0.5)")
        ->check(CLI::Range(0.0, 1.0));

    auto* cmd_bench = app.add_subcommand("bench", "time the spectrum computation on random cotrees");
    cmd_bench->add_option("--sizes", bench_sizes, "comma-separated leaf counts")
        ->required()
        ->delimiter(',');
    cmd_bench->add_option("--trials", bench_trials, "trials per size (default 3)")
        ->check(CLI::PositiveNumber);
    cmd_bench->add_option("--seed", bench_seed, "random seed (default 1)");

    auto* cmd_selftest = app.add_subcommand("selftest", "run the oracle-equivalence suites");
    cmd_selftest->add_option("--max-n", st_max_n, "exhaustive enumeration cap (default 6)")
        ->check(CLI::Range(1, 10));
    cmd_selftest->add_option("--seed", st_seed, "random seed");
    cmd_selftest->add_option("--trials", st_trials, "randomized trials (default 25)")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*cmd_parse) {
            Cotree t = load_cotree(input, format);
            std::cout << format_cotree(t) << "\n";
            if (stats)
                std::cout << "n=" << t.leaf_count() << " depth=" << depth(t)
                          << " interior=" << t.nodes.size() << "\n";
        } else if (*cmd_recognize) {
            const std::string text = read_input(input);
            if (resolve_format(text, format) == InputFormat::EdgeList) {
                Graph g = parse_edge_list(text);
                RecognitionOutcome out = build_cotree(g);
                if (auto* w = std::get_if<P4Witness>(&out)) {
                    std::cout << "P4: " << w->a << " " << w->b << " " << w->c << " " << w->d
                              << "\n";
                    return 1;
                }
                std::cout << format_cotree(std::get<Cotree>(out)) << "\n";
            } else {
                std::cout << format_cotree(normalize(parse_cotree(text))) << "\n";
            }
        } else if (*cmd_spectrum) {
            Cotree t = load_cotree(input, format);
            SpectrumMultiset s = laplacian_spectrum(t);
            if (as_json)
                print_spectrum_json(s);
            else
                print_spectrum_human(s);
        } else if (*cmd_inertia) {
            Cotree t = load_cotree(input, format);
            Rational x;
            try {
                x = parse_rational(x_text);
            } catch (const std::invalid_argument& e) {
                std::cerr << "error: --x: " << e.what() << "\n";
                return 2;
            }
            DiagonalizeOptions opts;
            opts.record_trace = trace_enabled();
            Inertia r = inertia_at(t, x, opts);
            if (opts.record_trace) {
                DiagonalResult d = diagonalize(t, -x, opts);
                for (const auto& e : d.trace) std::cerr << format_trace_entry(e) << "\n";
            }
            std::cout << r.above << " " << r.equal << " " << r.below << "\n";
        } else if (*cmd_trees) {
            Cotree t = load_cotree(input, format);
            BigInt count = spanning_tree_count(t);
            if (check) {
                BigInt spectral = spanning_count_from_spectrum(laplacian_spectrum(t));
                if (spectral != count)
                    throw std::logic_error("spanning count mismatch: cotree " + count.str() +
                                           " vs spectral " + spectral.str());
            }
            if (as_json) {
                nlohmann::ordered_json j;
                j["n"] = static_cast<std::int64_t>(t.leaf_count());
                j["spanning_trees"] = count.str();
                std::cout << j.dump() << "\n";
            } else {
                std::cout << count.str() << "\n";
            }
        } else if (*cmd_gen) {
            std::cout << format_cotree(random_cotree(gen_n, gen_seed, join_bias)) << "\n";
        } else if (*cmd_bench) {
            auto rows = run_bench(bench_sizes, bench_trials, bench_seed);
            std::printf("%12s %8s %12s %10s\n", "n", "trials", "mean_ms", "ns/leaf");
            for (const auto& r : rows)
                std::printf("%12lld %8d %12.3f %10.2f\n", static_cast<long long>(r.n), r.trials,
                            r.mean_ms, r.ns_per_leaf);
            if (rows.size() >= 2)
                std::printf("linearity ratio (ns/leaf, largest vs smallest n): %.3f\n",
                            linearity_ratio(rows));
        } else if (*cmd_selftest) {
            auto results = run_selftest(st_max_n, st_seed, st_trials);
            bool all = true;
            for (const auto& r : results) {
                std::cout << (r.pass ? "PASS " : "FAIL ") << r.name;
                if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
                std::cout << "\n";
                all = all && r.pass;
            }
            std::cout << (all ? "selftest: all suites passed" : "selftest: FAILURES") << "\n";
            if (!all) return 1;
        }
    } catch (const NotACographError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
