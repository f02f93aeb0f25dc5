#include "roomassign.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <string_view>

#include "roomassign/covers.hpp"
#include "roomassign/dictatorship.hpp"
#include "roomassign/errors.hpp"
#include "roomassign/exact.hpp"
#include "roomassign/generate.hpp"
#include "roomassign/io.hpp"
#include "roomassign/reductions.hpp"

struct ra_instance {
    roomassign::instance value;
};

struct ra_assignment {
    roomassign::assignment value;
};

namespace {

namespace ra = roomassign;

struct last_error_state {
    std::string message;
    std::size_t line = 0;
    std::size_t column = 0;
};

thread_local last_error_state last_error;

ra_status record(ra_status status, const char* what, std::size_t line = 0, std::size_t column = 0) {
    last_error.message = what;
    last_error.line = line;
    last_error.column = column;
    return status;
}

template <class F>
ra_status guarded(F&& body) {
    try {
        body();
        last_error = {};
        return RA_OK;
    } catch (const ra::parse_error& e) {
        return record(RA_PARSE, e.what(), e.line(), e.column());
    } catch (const ra::budget_exhausted& e) {
        return record(RA_BUDGET, e.what());
    } catch (const ra::precondition_error& e) {
        return record(RA_PRECONDITION, e.what());
    } catch (const std::invalid_argument& e) {
        return record(RA_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return record(RA_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return record(RA_INTERNAL, e.what());
    } catch (...) {
        return record(RA_INTERNAL, "unknown failure");
    }
}

void need(const void* p, const char* name) {
    if (p == nullptr) throw std::invalid_argument(std::string(name) + " must not be null");
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

ra::search_budget to_budget(const ra_budget* b) {
    ra::search_budget out;
    if (b == nullptr) return out;
    if (b->node_limit > 0) out.node_limit = b->node_limit;
    if (b->time_limit_seconds < 0 || std::isnan(b->time_limit_seconds)) {
        throw std::invalid_argument("time limit must be non-negative");
    }
    if (b->time_limit_seconds > 0) {
        out.time_limit = std::chrono::milliseconds(
            std::max<long long>(1, std::llround(b->time_limit_seconds * 1000.0)));
    }
    return out;
}

ra_assignment* wrap(ra::assignment a) { return new ra_assignment{std::move(a)}; }

void put_found(const std::optional<ra::assignment>& a, int* found, ra_assignment** out) {
    need(found, "found");
    *found = a ? 1 : 0;
    if (a && out != nullptr) *out = wrap(*a);
}

}  // namespace

extern "C" {

const char* ra_last_error(void) { return last_error.message.c_str(); }
size_t ra_last_error_line(void) { return last_error.line; }
size_t ra_last_error_column(void) { return last_error.column; }

void ra_string_free(char* s) { std::free(s); }

ra_status ra_instance_parse(const char* text, ra_instance** out) {
    return guarded([&] {
        need(text, "text");
        need(out, "out");
        *out = new ra_instance{ra::parse_instance(text)};
    });
}

ra_status ra_instance_write(const ra_instance* inst, char** out) {
    return guarded([&] {
        need(inst, "instance");
        need(out, "out");
        *out = dup(ra::write_instance(inst->value));
    });
}

ra_status ra_instance_generate(const ra_generator_params* params, ra_instance** out) {
    return guarded([&] {
        need(params, "params");
        need(out, "out");
        if (params->capacity_count > 0) need(params->capacities, "capacities");
        ra::generator_params p;
        p.n = params->n;
        p.capacities.assign(params->capacities, params->capacities + params->capacity_count);
        p.mode = params->mode == RA_MODE_WORST ? ra::comparison_mode::worst : ra::comparison_mode::best;
        p.strict = params->strict != 0;
        p.complete = params->complete != 0;
        p.acceptability = params->acceptability;
        p.ties = params->ties;
        p.seed = params->seed;
        *out = new ra_instance{ra::gen_random_instance(p)};
    });
}

int ra_instance_player_count(const ra_instance* inst) { return inst == nullptr ? 0 : inst->value.n; }

void ra_instance_free(ra_instance* inst) { delete inst; }

ra_status ra_assignment_parse(const char* text, const ra_instance* inst, ra_assignment** out) {
    return guarded([&] {
        need(text, "text");
        need(inst, "instance");
        need(out, "out");
        *out = wrap(ra::parse_assignment(text, inst->value));
    });
}

ra_status ra_assignment_write(const ra_instance* inst, const ra_assignment* a, char** out) {
    return guarded([&] {
        need(inst, "instance");
        need(a, "assignment");
        need(out, "out");
        *out = dup(ra::write_assignment(inst->value, a->value));
    });
}

void ra_assignment_free(ra_assignment* a) { delete a; }

ra_status ra_verify(const ra_instance* inst, const ra_assignment* a, ra_verify_method method,
                    const ra_budget* budget, int* pareto_optimal, ra_assignment** witness) {
    return guarded([&] {
        need(inst, "instance");
        need(a, "assignment");
        need(pareto_optimal, "pareto_optimal");
        auto v = ra::verify_poa(inst->value, a->value,
                                method == RA_VERIFY_BRUTE ? ra::verify_method::brute : ra::verify_method::pruned,
                                to_budget(budget));
        *pareto_optimal = v.is_pareto_optimal() ? 1 : 0;
        if (!v.is_pareto_optimal() && witness != nullptr) *witness = wrap(*v.witness());
    });
}

ra_status ra_find_sd(const ra_instance* inst, const int* order, size_t order_len, ra_assignment** out,
                     char** trace) {
    return guarded([&] {
        need(inst, "instance");
        need(out, "out");
        ra::dictator_order o;
        if (order != nullptr) {
            o.assign(order, order + order_len);
        } else {
            o = ra::default_order(inst->value.n);
        }
        auto r = inst->value.mode == ra::comparison_mode::best ? ra::sd_best_triples(inst->value, o)
                                                               : ra::sd_worst(inst->value, o);
        std::string text = trace != nullptr ? ra::write_trace(r.trace) : std::string();
        *out = wrap(std::move(r.result));
        if (trace != nullptr) *trace = dup(text);
    });
}

ra_status ra_find_brute(const ra_instance* inst, const ra_budget* budget, int* found, ra_assignment** out) {
    return guarded([&] {
        need(inst, "instance");
        put_found(ra::find_poa_brute(inst->value, to_budget(budget)), found, out);
    });
}

ra_status ra_find_feasible(const ra_instance* inst, const ra_budget* budget, int* found, ra_assignment** out) {
    return guarded([&] {
        need(inst, "instance");
        put_found(ra::find_feasible(inst->value, to_budget(budget)), found, out);
    });
}

ra_status ra_find_unanimous(const ra_instance* inst, const ra_budget* budget, int* found, ra_assignment** out) {
    return guarded([&] {
        need(inst, "instance");
        put_found(ra::find_unanimous_best(inst->value, to_budget(budget)), found, out);
    });
}

ra_status ra_improve(const ra_instance* inst, const ra_assignment* start, const ra_budget* budget,
                     ra_assignment** out, size_t* length, char** potentials) {
    return guarded([&] {
        need(inst, "instance");
        need(start, "start");
        need(out, "out");
        auto chain = ra::improve_to_poa(inst->value, start->value, to_budget(budget));
        std::string text;
        for (long p : chain.potentials) text += std::to_string(p) + '\n';
        if (length != nullptr) *length = chain.length;
        if (potentials != nullptr) *potentials = dup(text);
        *out = wrap(std::move(chain.result));
    });
}

ra_status ra_enumerate(const ra_instance* inst, int poa_only, const ra_budget* budget, size_t* count,
                       char** out) {
    return guarded([&] {
        need(inst, "instance");
        need(out, "out");
        auto all = poa_only ? ra::enumerate_poa(inst->value, to_budget(budget))
                            : ra::all_feasible(inst->value, to_budget(budget));
        std::string text;
        for (std::size_t k = 0; k < all.size(); ++k) {
            if (k > 0) text += '\n';
            text += ra::write_assignment(inst->value, all[k]);
        }
        if (count != nullptr) *count = all.size();
        *out = dup(text);
    });
}

ra_status ra_reduce(const char* construction, const char* input, char** out, char** distinguished) {
    return guarded([&] {
        need(construction, "construction");
        need(input, "input");
        need(out, "out");
        const std::string_view c = construction;
        std::string text;
        std::optional<std::string> extra;
        auto emit = [&](const ra::reduction_output& r) {
            text = ra::write_instance(r.inst);
            if (r.distinguished) extra = ra::write_assignment(r.inst, *r.distinguished);
        };
        if (c == "verw") {
            emit(ra::verification_instance_worst(ra::parse_graph(input)));
        } else if (c == "verb") {
            emit(ra::verification_instance_best(ra::parse_digraph(input)));
        } else if (c == "feas") {
            text = ra::write_instance(ra::feasibility_instance(ra::parse_graph(input)));
        } else if (c == "binpack") {
            text = ra::write_instance(ra::poa_instance_binpack(ra::parse_binpack(input)));
        } else if (c == "tiesbest") {
            text = ra::write_instance(ra::poa_instance_ties_best(ra::parse_digraph(input)));
        } else if (c == "tiesworst") {
            text = ra::write_instance(ra::poa_instance_ties_worst(ra::parse_graph(input)));
        } else if (c == "dtc3dm") {
            text = ra::write_digraph(ra::dtc_from_3dm(ra::parse_hypergraph(input)).graph);
        } else {
            throw std::invalid_argument("unknown construction '" + std::string(c) + "'");
        }
        char* extra_out = extra && distinguished != nullptr ? dup(*extra) : nullptr;
        *out = dup(text);
        if (distinguished != nullptr) *distinguished = extra_out;
    });
}

ra_status ra_oracle(const char* problem, const char* input, const ra_budget* budget, int* found,
                    char** certificate) {
    return guarded([&] {
        need(problem, "problem");
        need(input, "input");
        need(found, "found");
        const std::string_view p = problem;
        const auto b = to_budget(budget);
        std::optional<std::string> cert;
        if (p == "tc") {
            if (auto c = ra::triangle_cover(ra::parse_graph(input), b)) cert = ra::write_triangles(*c);
        } else if (p == "dtc") {
            if (auto c = ra::directed_triangle_cover(ra::parse_digraph(input), b)) cert = ra::write_triangles(*c);
        } else if (p == "3dm") {
            auto h = ra::parse_hypergraph(input);
            if (auto c = ra::perfect_3dm(h, b)) cert = ra::write_matching(h, *c);
        } else if (p == "bin") {
            if (auto c = ra::unary_bin_pack(ra::parse_binpack(input), b)) cert = ra::write_packing(*c);
        } else {
            throw std::invalid_argument("unknown problem '" + std::string(p) + "'");
        }
        *found = cert ? 1 : 0;
        if (cert && certificate != nullptr) *certificate = dup(*cert);
    });
}

}  // extern "C"
