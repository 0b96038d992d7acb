// Command-line front end: construct k-Thue sequences, inspect words for
// repetitions, run the verification suite, and search for morphisms.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "kthue/constructions.hpp"
#include "kthue/repetition.hpp"
#include "kthue/search.hpp"
#include "kthue/verify.hpp"

namespace {

using namespace kthue;

std::size_t default_jobs() {
    if (const char* env = std::getenv("KTHUE_JOBS")) {
        const long v = std::atol(env);
        if (v > 0) return std::size_t(v);
    }
    return 1;
}

Word parse_input_word(const std::string& line, bool letters, int offset) {
    if (!letters) return parse_word(line, offset);
    std::string digits;
    digits.reserve(line.size());
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (c == '\r') continue;
        if (c < 'a' || c > 'j') throw WordParseError("expected letter a..j", i + 1);
        digits.push_back(char('0' + (c - 'a')));
    }
    return parse_word(digits, 0);
}

std::string describe(const Certificate& c) {
    std::ostringstream out;
    out << c.task;
    for (const char* key : {"k", "t", "kind", "max_len"}) {
        if (c.parameters.contains(key)) {
            out << ' ' << key << '=' << c.parameters[key].dump();
        }
    }
    out << ": " << status_name(c.status);
    if (c.counts.contains("max_length")) out << " max_length=" << c.counts["max_length"].dump();
    if (!c.witness.is_null()) out << " witness=" << c.witness.dump();
    return out.str();
}

int run_verify(const std::string& task, int k, long t_arg, std::size_t max_len,
               std::size_t jobs, std::uint64_t budget, bool json) {
    SuiteConfig cfg;
    cfg.jobs = jobs;
    cfg.node_budget = budget;
    cfg.bounded_max_len = max_len;
    if (t_arg >= 0) {
        cfg.exhaustive_t = std::size_t(t_arg);
        cfg.table_t = std::size_t(t_arg);
        cfg.phi4_t = std::size_t(t_arg);
        cfg.phi6_t = std::size_t(t_arg);
    }
    if (k > 0) {
        cfg.ks = {k};
        cfg.tightness_ks = {k};
    }
    if (task == "all") {
        cfg.bounded_images = cfg.window_determinism = cfg.tightness = true;
        cfg.kappa = cfg.lambda = cfg.construction = true;
    } else if (task == "bounded-images") {
        cfg.bounded_images = true;
    } else if (task == "window-determinism") {
        cfg.window_determinism = true;
    } else if (task == "tightness") {
        cfg.tightness = true;
    } else if (task == "kappa") {
        cfg.kappa = true;
    } else if (task == "lambda") {
        cfg.lambda = true;
    } else if (task == "construction") {
        cfg.construction = true;
    } else {
        std::cerr << "unknown task: " << task << "\n";
        return 2;
    }
    const std::vector<Certificate> certs = run_suite(cfg);
    if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const Certificate& c : certs) arr.push_back(to_json(c));
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const Certificate& c : certs) std::cout << describe(c) << "\n";
    }
    return exit_code_for(certs);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-Thue sequences: constructions, verification, morphism search"};
    app.require_subcommand(1);

    // generate
    int gen_k = 0;
    std::size_t gen_n = 0;
    auto* generate = app.add_subcommand("generate", "k-Thue word over k+2 symbols");
    generate->add_option("--k", gen_k, "k in 2..8")->required();
    generate->add_option("--length", gen_n, "word length")->required();

    // construct
    std::string kind;
    std::size_t con_t = 0;
    auto* construct = app.add_subcommand("construct", "wreathing constructions phi4/phi6");
    construct->add_option("--kind", kind, "phi4 or phi6")
        ->required()
        ->check(CLI::IsMember({"phi4", "phi6"}));
    construct->add_option("--t", con_t, "iteration count (>= 1)")->required();

    // inspect
    int ins_k = 1;
    bool ins_exponent = false;
    bool ins_letters = false;
    int ins_offset = 0;
    std::string ins_file = "-";
    auto* inspect = app.add_subcommand("inspect", "check words from stdin or a file");
    inspect->add_option("--k", ins_k, "check d-subsequences for d <= k (default 1)");
    inspect->add_flag("--exponent", ins_exponent, "report the maximum exponent instead");
    inspect->add_flag("--letters", ins_letters, "input uses letters a..j for 0..9");
    inspect->add_option("--offset", ins_offset, "digit display offset of the input");
    inspect->add_option("file", ins_file, "input file (default: stdin)");

    // verify
    std::string task;
    int ver_k = 0;
    long ver_t = -1;
    std::size_t ver_max_len = 40;
    std::size_t ver_jobs = default_jobs();
    std::uint64_t ver_budget = 0;
    bool ver_json = false;
    auto* verify = app.add_subcommand("verify", "run verification tasks, emit certificates");
    verify->add_option("--task", task, "bounded-images|window-determinism|tightness|kappa|lambda|construction|all")
        ->required();
    verify->add_option("--k", ver_k, "restrict to one k");
    verify->add_option("--t", ver_t, "iteration count for kappa/lambda/construction tasks");
    verify->add_option("--max-len", ver_max_len, "bounded-images word length bound (default 40)");
    verify->add_option("--jobs", ver_jobs, "worker threads (default $KTHUE_JOBS or 1)");
    verify->add_option("--budget", ver_budget, "node budget; 0 = unlimited");
    verify->add_flag("--json", ver_json, "emit certificates as JSON");

    // search
    SearchConfig scfg;
    std::vector<std::string> prefix_args;
    bool sea_json = false;
    auto* search = app.add_subcommand("search", "exhaustive morphism search");
    search->add_option("--k", scfg.k, "target k")->required();
    search->add_option("--width", scfg.width, "uniform image width")->required();
    search->add_option("--alphabet", scfg.alphabet_size, "codomain size (default k+2)");
    search->add_option("--prefix", prefix_args,
                       "fixed leading symbols; one value for all images or three values");
    search->add_option("--budget", scfg.node_budget, "node budget; 0 = unlimited");
    search->add_option("--resume", scfg.resume_token, "checkpoint token from a previous run");
    search->add_option("--test-length", scfg.test_length, "bounded-image filter length (default 20)");
    search->add_option("--partition-depth", scfg.partition_depth, "parallel partition depth");
    search->add_option("--jobs", scfg.jobs, "worker threads");
    search->add_flag("--json", sea_json, "emit the result as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n" << app.help() << "\n";
        return 2;
    }

    try {
        if (generate->parsed()) {
            std::cout << format_word(k_thue_word(gen_k, gen_n)) << "\n";
            return 0;
        }
        if (construct->parsed()) {
            const Word w = kind == "phi4" ? phi4(con_t) : phi6(con_t);
            std::cout << format_word(w, 1) << "\n";
            return 0;
        }
        if (inspect->parsed()) {
            std::ifstream file;
            std::istream* in = &std::cin;
            if (ins_file != "-") {
                file.open(ins_file);
                if (!file) {
                    std::cerr << "cannot open " << ins_file << "\n";
                    return 2;
                }
                in = &file;
            }
            std::string line;
            std::size_t line_no = 0;
            int code = 0;
            while (std::getline(*in, line)) {
                ++line_no;
                if (line.empty()) continue;
                Word w;
                try {
                    w = parse_input_word(line, ins_letters, ins_offset);
                } catch (const WordParseError& e) {
                    std::cerr << "parse error: line " << line_no << " col " << e.column()
                              << ": " << e.what() << "\n";
                    return 2;
                }
                if (ins_exponent) {
                    const ExponentWitness m = max_exponent(w);
                    std::cout << "max exponent " << m.exponent().str() << " start=" << m.start
                              << " pi_length=" << m.pi_length
                              << " total_length=" << m.total_length << "\n";
                } else if (auto rep = is_k_thue(w, std::size_t(ins_k))) {
                    std::cout << "repetition d=" << rep->d << " start=" << rep->start
                              << " half_length=" << rep->half_length << "\n";
                    code = 1;
                } else {
                    std::cout << "no repetition up to k=" << ins_k << "\n";
                }
            }
            return code;
        }
        if (verify->parsed()) {
            return run_verify(task, ver_k, ver_t, ver_max_len, ver_jobs, ver_budget, ver_json);
        }
        if (search->parsed()) {
            if (prefix_args.size() == 1) {
                for (auto& p : scfg.prefixes) p = parse_word(prefix_args[0]).symbols();
            } else if (prefix_args.size() == 3) {
                for (std::size_t i = 0; i < 3; ++i) {
                    scfg.prefixes[i] = parse_word(prefix_args[i]).symbols();
                }
            } else if (!prefix_args.empty()) {
                std::cerr << "--prefix takes one value (all images) or three values\n";
                return 2;
            }
            const SearchResult result = search_morphisms(
                scfg, sea_json ? std::function<void(const Morphism&)>{}
                               : [&](const Morphism& m) {
                                     std::cout << to_morphism_file(m, scfg.k) << "\n";
                                 });
            if (sea_json) {
                nlohmann::json j;
                j["morphisms"] = nlohmann::json::array();
                for (const Morphism& m : result.morphisms) {
                    j["morphisms"].push_back(to_morphism_file(m, scfg.k));
                }
                j["nodes"] = result.nodes;
                j["pruning"] = result.pruning;
                j["exhausted"] = result.exhausted;
                if (result.checkpoint) j["checkpoint"] = *result.checkpoint;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cerr << "nodes=" << result.nodes << " found=" << result.morphisms.size()
                          << (result.exhausted ? " (exhausted)" : "") << "\n";
                if (result.checkpoint) std::cout << "# checkpoint: " << *result.checkpoint << "\n";
            }
            return result.checkpoint ? 2 : 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
