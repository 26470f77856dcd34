#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "dirminor/butterfly.hpp"
#include "dirminor/certificates.hpp"
#include "dirminor/coloring.hpp"
#include "dirminor/decomposition.hpp"
#include "dirminor/digraph.hpp"
#include "dirminor/generators.hpp"
#include "dirminor/io.hpp"
#include "dirminor/isomorphism.hpp"
#include "dirminor/strong_minors.hpp"
#include "dirminor/subdivision.hpp"

namespace {

using namespace dirminor;

constexpr int kExitProduced = 0;
constexpr int kExitError = 1;
constexpr int kExitAbsent = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Digraph load_digraph(const std::string& path) {
    return parse_digraph(read_file(path));
}

int thread_cap() {
    if (const char* env = std::getenv("DIRMINOR_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) {
            return n;
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void write_dot(const std::string& path, const Digraph& d,
               const std::vector<VertexSet>* parts = nullptr) {
    if (path.empty()) {
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << to_dot(d, parts);
    std::cerr << "wrote " << path << "\n";
}

std::vector<VertexSet> color_classes(const std::vector<int>& colors) {
    std::vector<VertexSet> classes;
    for (std::size_t v = 0; v < colors.size(); ++v) {
        if (colors[v] >= static_cast<int>(classes.size())) {
            classes.resize(static_cast<std::size_t>(colors[v]) + 1);
        }
        classes[colors[v]].push_back(static_cast<int>(v));
    }
    return classes;
}

int emit(const Json& doc, bool verify_all) {
    if (verify_all) {
        VerifyOutcome r = verify_certificate(doc);
        if (!r.ok) {
            std::cerr << "internal re-verification failed: " << r.message << "\n";
            return kExitError;
        }
        std::cerr << r.message << "\n";
    }
    std::cout << doc.dump(2) << "\n";
    return kExitProduced;
}

int run_explore(int t, int max_n, std::uint64_t seed, bool exhaustive,
                bool butterfly, int samples, bool verify_all) {
    if (t < 1) {
        throw std::invalid_argument("--t must be at least 1");
    }
    if (max_n < 1) {
        throw std::invalid_argument("--max-n must be at least 1");
    }
    if (exhaustive && max_n > 5) {
        throw std::invalid_argument(
            "exhaustive mode enumerates isomorphism classes up to 5 vertices "
            "only");
    }
    if (butterfly && max_n > 7) {
        throw std::invalid_argument(
            "butterfly-minor search supports at most 7 vertices");
    }
    if (!butterfly && max_n > 20) {
        throw std::invalid_argument(
            "strong-model search supports at most 20 vertices");
    }
    std::vector<Digraph> candidates;
    if (exhaustive) {
        for (int n = 1; n <= max_n; ++n) {
            for (Digraph& d : enumerate_digraphs(n)) {
                candidates.push_back(std::move(d));
            }
        }
    } else {
        std::mt19937_64 rng(seed);
        for (int i = 0; i < samples; ++i) {
            int n = 1 + static_cast<int>(rng() % max_n);
            double p = 0.1 * (1 + static_cast<int>(rng() % 9));
            candidates.push_back(random_digraph(n, p, rng()));
        }
    }

    Digraph target = bidirected_clique(t);
    std::vector<std::optional<ExploreCounterexample>> found(candidates.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= candidates.size()) {
                return;
            }
            const Digraph& d = candidates[i];
            int k = dichromatic_number(d).first;
            if (k < t + 1) {
                continue;
            }
            bool has_minor = butterfly
                                 ? has_butterfly_minor(d, target)
                                 : find_strong_model(d, target).has_value();
            if (!has_minor) {
                found[i] = ExploreCounterexample{d, k};
            }
        }
    };
    int threads = std::min<int>(thread_cap(),
                                static_cast<int>(candidates.size()));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) {
            pool.emplace_back(worker);
        }
        for (auto& th : pool) {
            th.join();
        }
    }

    ExploreReport report;
    report.t = t;
    report.max_n = max_n;
    report.seed = seed;
    report.exhaustive = exhaustive;
    report.butterfly = butterfly;
    report.samples = exhaustive ? 0 : samples;
    report.checked = static_cast<long long>(candidates.size());
    for (auto& cx : found) {
        if (cx) {
            report.counterexamples.push_back(std::move(*cx));
        }
    }
    if (report.counterexamples.empty()) {
        std::cerr << "none found in range (" << report.checked
                  << " digraphs checked)\n";
    } else {
        std::cerr << report.counterexamples.size()
                  << " counterexample candidate(s) found\n";
    }
    return emit(make_explore_report(report), verify_all);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "certificate-producing toolkit for dichromatic decompositions, "
        "bidirected-clique strong minors, butterfly minors, and subcubic "
        "subdivisions"};
    app.require_subcommand(1);
    bool verify_all = true;
    app.add_flag("--verify-all,!--no-verify-all", verify_all,
                 "re-verify every emitted certificate before printing "
                 "(default: on)");

    std::string in_path, pattern_path, cert_path, dot_path;
    int t = 3, max_n = 4, samples = 200;
    std::uint64_t seed = 1;
    bool exhaustive = false, butterfly_mode = false;

    auto* cmd_dichromatic = app.add_subcommand(
        "dichromatic", "exact dichromatic number with an optimal witness");
    cmd_dichromatic->add_option("file", in_path, "digraph file")->required();
    cmd_dichromatic->add_option("--dot", dot_path, "write a GraphViz rendering");

    auto* cmd_decompose = app.add_subcommand(
        "decompose",
        "partition into maximal 2-dicolorable strongly connected parts with "
        "quotient coloring, lift, and quotient model");
    cmd_decompose->add_option("file", in_path, "digraph file")->required();
    cmd_decompose->add_option("--dot", dot_path, "write a GraphViz rendering");

    auto* cmd_strong = app.add_subcommand(
        "strong-minor",
        "force a strong bidirected-clique model through the decomposition");
    cmd_strong->add_option("file", in_path, "digraph file")->required();
    cmd_strong->add_option("--t", t, "clique order (1..6)")->required();
    cmd_strong->add_option("--dot", dot_path, "write a GraphViz rendering");

    auto* cmd_butterfly = app.add_subcommand(
        "butterfly",
        "force a butterfly bidirected-clique minor and emit its derivation");
    cmd_butterfly->add_option("file", in_path, "digraph file")->required();
    cmd_butterfly->add_option("--t", t, "clique order (1..3)")->required();
    cmd_butterfly->add_option("--dot", dot_path, "write a GraphViz rendering");

    auto* cmd_subdivide = app.add_subcommand(
        "subdivide", "embed a subdivision of a subcubic pattern");
    cmd_subdivide->add_option("host", in_path, "host digraph file")->required();
    cmd_subdivide->add_option("pattern", pattern_path, "pattern digraph file")
        ->required();
    cmd_subdivide->add_option("--dot", dot_path, "write a GraphViz rendering");

    auto* cmd_verify =
        app.add_subcommand("verify", "re-verify a certificate document");
    cmd_verify->add_option("certificate", cert_path, "certificate file")
        ->required();

    auto* cmd_lower = app.add_subcommand(
        "lower-bound",
        "emit the bidirected lower-bound construction; at order 3 also "
        "re-derives its dichromatic number and butterfly-freeness");
    cmd_lower->add_option("--t", t, "order (>= 3)")->required();
    cmd_lower->add_option("--dot", dot_path, "write a GraphViz rendering");

    auto* cmd_explore = app.add_subcommand(
        "explore",
        "search digraphs of high dichromatic number for missing clique "
        "minors");
    cmd_explore->add_option("--t", t, "clique order")->required();
    cmd_explore->add_option("--max-n", max_n, "largest host order")->required();
    cmd_explore->add_option("--seed", seed, "sampling seed");
    cmd_explore->add_flag("--exhaustive", exhaustive,
                          "all isomorphism classes up to --max-n (<= 5)");
    cmd_explore->add_flag("--butterfly", butterfly_mode,
                          "test butterfly minors instead of strong minors");
    cmd_explore->add_option("--samples", samples,
                            "random candidates when not exhaustive");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_dichromatic) {
            Digraph d = load_digraph(in_path);
            auto [k, witness] = dichromatic_number(d);
            std::vector<VertexSet> classes = color_classes(witness.color);
            write_dot(dot_path, d, &classes);
            std::cerr << "dichromatic number " << k << "\n";
            return emit(make_dicoloring_certificate(d, witness), verify_all);
        }
        if (*cmd_decompose) {
            Digraph d = load_digraph(in_path);
            DecompositionCertificate cert = certify_decomposition(d);
            write_dot(dot_path, d, &cert.partition.parts);
            std::cerr << cert.partition.parts.size() << " part(s), "
                      << cert.stats.repair_count << " repair(s), quotient "
                      << "chromatic number " << cert.quotient_coloring.k
                      << "\n";
            return emit(make_decomposition_certificate(cert), verify_all);
        }
        if (*cmd_strong) {
            Digraph d = load_digraph(in_path);
            std::optional<StrongMinorModel> model =
                force_strong_clique_minor(d, t);
            if (!model) {
                write_dot(dot_path, d);
                std::cerr << "not forced: the quotient chromatic number is "
                             "below the threshold for order "
                          << t << "\n";
                return kExitAbsent;
            }
            write_dot(dot_path, d, &model->branch_sets);
            return emit(make_strong_model_certificate(*model, false),
                        verify_all);
        }
        if (*cmd_butterfly) {
            Digraph d = load_digraph(in_path);
            write_dot(dot_path, d);
            std::optional<ButterflyTrace> trace =
                force_butterfly_clique_minor(d, t);
            if (!trace) {
                std::cerr << "not forced: the quotient chromatic number is "
                             "below the threshold for order "
                          << 2 * t << "\n";
                return kExitAbsent;
            }
            return emit(make_butterfly_certificate(*trace, t), verify_all);
        }
        if (*cmd_subdivide) {
            Digraph host = load_digraph(in_path);
            Digraph pattern = load_digraph(pattern_path);
            std::optional<SubdivisionEmbedding> emb =
                find_subdivision(host, pattern);
            if (!emb) {
                write_dot(dot_path, host);
                std::cerr << "no strong model of the pattern exists in the "
                             "host\n";
                return kExitAbsent;
            }
            std::vector<VertexSet> marks;
            for (int v : emb->branch_vertex) {
                marks.push_back({v});
            }
            write_dot(dot_path, host, &marks);
            return emit(make_subdivision_certificate(*emb), verify_all);
        }
        if (*cmd_verify) {
            Json doc = Json::parse(read_file(cert_path));
            VerifyOutcome r = verify_certificate(doc);
            std::cout << (r.ok ? "PASS: " : "FAIL: ") << r.message << "\n";
            return r.ok ? kExitProduced : kExitError;
        }
        if (*cmd_lower) {
            Digraph d = lower_bound_butterfly(t);
            auto [k, witness] = dichromatic_number(d);
            std::vector<VertexSet> classes = color_classes(witness.color);
            write_dot(dot_path, d, &classes);
            std::optional<bool> butterfly_free;
            if (t == 3) {
                butterfly_free = !has_butterfly_minor(d, bidirected_clique(3));
                std::cerr << "dichromatic number " << k
                          << ", butterfly-clique-free: "
                          << (*butterfly_free ? "true" : "false") << "\n";
            } else {
                std::cerr << "dichromatic number " << k << "\n";
            }
            return emit(make_lower_bound_certificate(t, d, witness,
                                                     butterfly_free),
                        verify_all);
        }
        if (*cmd_explore) {
            return run_explore(t, max_n, seed, exhaustive, butterfly_mode,
                               samples, verify_all);
        }
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
