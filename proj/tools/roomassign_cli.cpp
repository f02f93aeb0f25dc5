// Command-line front end. Talks to the library only through roomassign.h.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <unistd.h>

#include "CLI11.hpp"
#include "roomassign.h"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_internal = 1;
constexpr int exit_input = 2;
constexpr int exit_budget = 3;

// Raised for any failure reported by the library or by file handling.
struct cli_failure {
    int code;
    std::string message;
};

[[noreturn]] void input_failure(std::string message) { throw cli_failure{exit_input, std::move(message)}; }

void check(ra_status status) {
    if (status == RA_OK) return;
    int code = exit_input;
    if (status == RA_BUDGET) code = exit_budget;
    if (status == RA_INTERNAL) code = exit_internal;
    throw cli_failure{code, ra_last_error()};
}

struct string_deleter {
    void operator()(char* s) const { ra_string_free(s); }
};
struct instance_deleter {
    void operator()(ra_instance* p) const { ra_instance_free(p); }
};
struct assignment_deleter {
    void operator()(ra_assignment* p) const { ra_assignment_free(p); }
};
using owned_string = std::unique_ptr<char, string_deleter>;
using owned_instance = std::unique_ptr<ra_instance, instance_deleter>;
using owned_assignment = std::unique_ptr<ra_assignment, assignment_deleter>;

std::string take(char* s) {
    owned_string holder(s);
    return s == nullptr ? std::string() : std::string(s);
}

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) input_failure("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), {}};
}

struct options {
    std::string instance_path;
    std::string assignment_path;
    std::string input_path;
    std::string out_path;
    std::string order;
    std::string method;
    std::string construction;
    std::string problem;
    std::string distinguished_path;
    std::uint64_t node_limit = 1'000'000'000;
    double time_limit = 0.0;
    bool poa_only = false;
    bool trace = false;
    // gen
    int n = 0;
    std::vector<int> rooms;
    std::string mode = "best";
    bool weak = false;
    bool incomplete = false;
    double acceptability = 1.0;
    double ties = 0.0;
    std::uint64_t seed = 0;
};

class runner {
public:
    explicit runner(const options& opt) : opt_(opt) {
        budget_.node_limit = opt.node_limit;
        budget_.time_limit_seconds = opt.time_limit;
    }

    int verify() {
        auto inst = load_instance();
        auto a = load_assignment(inst.get());
        int optimal = 0;
        ra_assignment* witness = nullptr;
        const auto method = opt_.method == "brute" ? RA_VERIFY_BRUTE : RA_VERIFY_PRUNED;
        check(ra_verify(inst.get(), a.get(), method, &budget_, &optimal, &witness));
        owned_assignment w(witness);
        return decide(optimal != 0, w ? write(inst.get(), w.get()) : std::string());
    }

    int find() {
        auto inst = load_instance();
        if (opt_.method == "sd") {
            std::vector<int> order = parse_order(ra_instance_player_count(inst.get()));
            ra_assignment* out = nullptr;
            char* trace = nullptr;
            check(ra_find_sd(inst.get(), order.empty() ? nullptr : order.data(), order.size(), &out, &trace));
            owned_assignment a(out);
            std::string block = write(inst.get(), a.get());
            std::string trace_text = take(trace);
            if (opt_.trace) block += commented(trace_text);
            return decide(true, block);
        }
        if (opt_.method == "brute") {
            int found = 0;
            ra_assignment* out = nullptr;
            check(ra_find_brute(inst.get(), &budget_, &found, &out));
            owned_assignment a(out);
            return decide(found != 0, a ? write(inst.get(), a.get()) : std::string());
        }
        // improve: from the given start, or from the first feasible assignment
        owned_assignment start;
        if (!opt_.assignment_path.empty()) {
            start = load_assignment(inst.get());
        } else {
            int found = 0;
            ra_assignment* out = nullptr;
            check(ra_find_feasible(inst.get(), &budget_, &found, &out));
            start.reset(out);
            if (!found) return decide(false, {});
        }
        ra_assignment* out = nullptr;
        std::size_t length = 0;
        char* potentials = nullptr;
        check(ra_improve(inst.get(), start.get(), &budget_, &out, &length, &potentials));
        owned_assignment result(out);
        std::string pots = take(potentials);
        std::string block = write(inst.get(), result.get());
        block += "# chain length " + std::to_string(length) + "\n# potentials";
        std::istringstream in(pots);
        for (std::string p; in >> p;) block += ' ' + p;
        block += '\n';
        return decide(true, block);
    }

    int feasible() { return search(ra_find_feasible); }
    int unanimous() { return search(ra_find_unanimous); }

    int enumerate() {
        auto inst = load_instance();
        std::size_t count = 0;
        char* text = nullptr;
        check(ra_enumerate(inst.get(), opt_.poa_only ? 1 : 0, &budget_, &count, &text));
        std::string body = take(text);
        emit("# " + std::to_string(count) + (opt_.poa_only ? " pareto optimal" : " feasible") +
             " assignment(s)\n" + (body.empty() ? "" : "\n" + body));
        return exit_ok;
    }

    int reduce() {
        const std::string input = read_input(opt_.input_path);
        char* out = nullptr;
        char* distinguished = nullptr;
        check(ra_reduce(opt_.construction.c_str(), input.c_str(), &out,
                        opt_.distinguished_path.empty() ? nullptr : &distinguished));
        std::string text = take(out);
        std::string extra = take(distinguished);
        if (!opt_.distinguished_path.empty()) {
            if (extra.empty()) input_failure("construction '" + opt_.construction + "' has no distinguished assignment");
            write_file(opt_.distinguished_path, extra);
        }
        emit(text);
        return exit_ok;
    }

    int oracle() {
        const std::string input = read_input(opt_.input_path);
        int found = 0;
        char* cert = nullptr;
        check(ra_oracle(opt_.problem.c_str(), input.c_str(), &budget_, &found, &cert));
        return decide(found != 0, take(cert));
    }

    int gen() {
        ra_generator_params p{};
        p.n = opt_.n;
        p.capacities = opt_.rooms.data();
        p.capacity_count = opt_.rooms.size();
        p.mode = opt_.mode == "worst" ? RA_MODE_WORST : RA_MODE_BEST;
        p.strict = opt_.weak ? 0 : 1;
        p.complete = opt_.incomplete ? 0 : 1;
        p.acceptability = opt_.acceptability;
        p.ties = opt_.ties;
        p.seed = opt_.seed;
        ra_instance* out = nullptr;
        check(ra_instance_generate(&p, &out));
        owned_instance inst(out);
        char* text = nullptr;
        check(ra_instance_write(inst.get(), &text));
        emit(take(text));
        return exit_ok;
    }

private:
    using search_fn = ra_status (*)(const ra_instance*, const ra_budget*, int*, ra_assignment**);

    int search(search_fn fn) {
        auto inst = load_instance();
        int found = 0;
        ra_assignment* out = nullptr;
        check(fn(inst.get(), &budget_, &found, &out));
        owned_assignment a(out);
        return decide(found != 0, a ? write(inst.get(), a.get()) : std::string());
    }

    owned_instance load_instance() const {
        const std::string text = read_input(opt_.instance_path);
        ra_instance* out = nullptr;
        check(ra_instance_parse(text.c_str(), &out));
        return owned_instance(out);
    }

    owned_assignment load_assignment(const ra_instance* inst) const {
        if (opt_.assignment_path.empty()) input_failure("an assignment is required (-a)");
        const std::string text = read_input(opt_.assignment_path);
        ra_assignment* out = nullptr;
        check(ra_assignment_parse(text.c_str(), inst, &out));
        return owned_assignment(out);
    }

    static std::string write(const ra_instance* inst, const ra_assignment* a) {
        char* text = nullptr;
        check(ra_assignment_write(inst, a, &text));
        return take(text);
    }

    static std::string commented(const std::string& text) {
        std::string out;
        std::istringstream in(text);
        for (std::string line; std::getline(in, line);) out += "# " + line + '\n';
        return out;
    }

    // 1-based ids separated by commas or blanks; empty means ascending.
    std::vector<int> parse_order(int n) const {
        std::vector<int> order;
        std::string text = opt_.order;
        for (char& c : text) {
            if (c == ',') c = ' ';
        }
        std::istringstream in(text);
        for (std::string tok; in >> tok;) {
            std::size_t used = 0;
            int id = 0;
            try {
                id = std::stoi(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size() || id < 1 || id > n) input_failure("bad player id '" + tok + "' in --order");
            order.push_back(id - 1);
        }
        return order;
    }

    static void write_file(const std::string& path, const std::string& text) {
        std::ofstream out(path, std::ios::binary);
        if (!out) input_failure("cannot write '" + path + "'");
        out << text;
        if (!out) input_failure("cannot write '" + path + "'");
    }

    void emit(const std::string& text) const {
        if (opt_.out_path.empty()) {
            std::cout << text;
        } else {
            write_file(opt_.out_path, text);
        }
    }

    int decide(bool yes, const std::string& witness) const {
        std::cout << (yes ? "YES" : "NO") << '\n';
        if (!witness.empty()) emit(witness);
        return exit_ok;
    }

    const options& opt_;
    ra_budget budget_{};
};

bool use_color() {
    const char* no_color = std::getenv("NO_COLOR");
    return (no_color == nullptr || *no_color == '\0') && isatty(STDERR_FILENO) != 0;
}

void report(const std::string& message) {
    if (use_color()) {
        std::cerr << "\033[31merror:\033[0m " << message << '\n';
    } else {
        std::cerr << "error: " << message << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pareto-optimal assignment of players to rooms"};
    app.require_subcommand(1);
    app.fallthrough();
    options opt;

    app.add_option("--node-limit", opt.node_limit, "Search node limit (0 = unlimited)")->capture_default_str();
    app.add_option("--time-limit", opt.time_limit, "Time limit in seconds (0 = unlimited)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("-o,--out", opt.out_path, "Write the main output block to this file");

    auto add_instance = [&](CLI::App* sub) {
        sub->add_option("-i,--instance", opt.instance_path, "Instance file ('-' for stdin)")->required();
    };

    auto* verify = app.add_subcommand("verify", "Is the assignment Pareto optimal?");
    add_instance(verify);
    verify->add_option("-a,--assignment", opt.assignment_path, "Assignment file")->required();
    verify->add_option("--method", opt.method, "pruned or brute")
        ->check(CLI::IsMember({"pruned", "brute"}))
        ->default_val("pruned");

    auto* find = app.add_subcommand("find", "Compute a Pareto optimal assignment");
    add_instance(find);
    find->add_option("--method", opt.method, "sd, brute or improve")
        ->check(CLI::IsMember({"sd", "brute", "improve"}))
        ->required();
    find->add_option("--order", opt.order, "Dictator order for sd, 1-based ids");
    find->add_option("-a,--assignment", opt.assignment_path, "Starting assignment for improve");
    find->add_flag("--trace", opt.trace, "Append the dictatorship trace as comments");

    auto* feasible = app.add_subcommand("feasible", "Does a feasible assignment exist?");
    add_instance(feasible);

    auto* enumerate = app.add_subcommand("enumerate", "List feasible assignments");
    add_instance(enumerate);
    enumerate->add_flag("--poa-only", opt.poa_only, "Only Pareto optimal ones");

    auto* unanimous = app.add_subcommand("unanimous", "Can everyone get a first-ranked roommate?");
    add_instance(unanimous);

    auto* reduce = app.add_subcommand("reduce", "Build an instance from a graph-like input");
    reduce->add_option("--construction", opt.construction, "verw, verb, feas, binpack, tiesbest, tiesworst, dtc3dm")
        ->check(CLI::IsMember({"verw", "verb", "feas", "binpack", "tiesbest", "tiesworst", "dtc3dm"}))
        ->required();
    reduce->add_option("-g,--input", opt.input_path, "Input file ('-' for stdin)")->required();
    reduce->add_option("--distinguished", opt.distinguished_path, "Write the distinguished assignment here");

    auto* oracle = app.add_subcommand("oracle", "Solve a covering or packing input exactly");
    oracle->add_option("--problem", opt.problem, "tc, dtc, 3dm, bin")
        ->check(CLI::IsMember({"tc", "dtc", "3dm", "bin"}))
        ->required();
    oracle->add_option("-g,--input", opt.input_path, "Input file ('-' for stdin)")->required();

    auto* gen = app.add_subcommand("gen", "Generate a random instance");
    gen->add_option("-n,--players", opt.n, "Number of players")->required();
    gen->add_option("--rooms", opt.rooms, "Room capacities")->delimiter(',')->required();
    gen->add_option("--mode", opt.mode, "best or worst")->check(CLI::IsMember({"best", "worst"}));
    gen->add_flag("--weak", opt.weak, "Allow ties");
    gen->add_flag("--incomplete", opt.incomplete, "Allow unacceptable pairs");
    gen->add_option("--acceptability", opt.acceptability, "Probability that a pair is acceptable");
    gen->add_option("--ties", opt.ties, "Probability that an entry ties with the previous one");
    gen->add_option("--seed", opt.seed, "Random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        runner run(opt);
        if (verify->parsed()) return run.verify();
        if (find->parsed()) return run.find();
        if (feasible->parsed()) return run.feasible();
        if (enumerate->parsed()) return run.enumerate();
        if (unanimous->parsed()) return run.unanimous();
        if (reduce->parsed()) return run.reduce();
        if (oracle->parsed()) return run.oracle();
        if (gen->parsed()) return run.gen();
    } catch (const cli_failure& f) {
        report(f.message);
        return f.code;
    } catch (const std::exception& e) {
        report(e.what());
        return exit_internal;
    }
    return exit_input;
}
