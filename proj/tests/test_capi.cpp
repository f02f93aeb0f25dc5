#include "doctest.h"

#include <string>

#include "roomassign.h"

namespace {

const char* example_text =
    "nplayers 9\nrooms 3 3 3\nmode best\nprefs strict complete\n"
    "p 1 : 5 4 7 3 9 6 8 2\np 2 : 1 4 5 9 8 6 3 7\np 3 : 2 5 4 9 1 6 7 8\n"
    "p 4 : 3 6 7 2 9 5 8 1\np 5 : 3 6 2 7 8 4 1 9\np 6 : 7 2 8 5 4 9 1 3\n"
    "p 7 : 1 2 9 3 4 6 8 5\np 8 : 6 3 7 1 9 5 4 2\np 9 : 2 4 1 6 7 3 8 5\n";

const char* sd_rooms = "room 1 : 1 2 5\nroom 2 : 3 4 8\nroom 3 : 6 7 9\n";

// Takes ownership of a library string.
std::string take(char* s) {
    std::string out = s ? s : "";
    ra_string_free(s);
    return out;
}

ra_instance* example() {
    ra_instance* inst = nullptr;
    REQUIRE(ra_instance_parse(example_text, &inst) == RA_OK);
    return inst;
}

}  // namespace

TEST_CASE("instance lifecycle") {
    ra_instance* inst = example();
    CHECK(ra_instance_player_count(inst) == 9);
    char* text = nullptr;
    REQUIRE(ra_instance_write(inst, &text) == RA_OK);
    CHECK(take(text) == example_text);
    ra_instance_free(inst);
    ra_instance_free(nullptr);
    ra_string_free(nullptr);
    ra_assignment_free(nullptr);
}

TEST_CASE("parse errors report line and column") {
    ra_instance* inst = nullptr;
    CHECK(ra_instance_parse("nplayers 3\nrooms 3\nmode best\nprefs strict complete\np 1 : 2 x\n", &inst) == RA_PARSE);
    CHECK(inst == nullptr);
    CHECK(ra_last_error_line() == 5);
    CHECK(ra_last_error_column() == 9);
    CHECK(std::string(ra_last_error()).find("line 5") != std::string::npos);
    CHECK(ra_instance_parse(nullptr, &inst) == RA_INVALID_ARGUMENT);
    CHECK(ra_last_error_line() == 0);
}

TEST_CASE("serial dictatorship and verification") {
    ra_instance* inst = example();
    ra_assignment* a = nullptr;
    char* trace = nullptr;
    REQUIRE(ra_find_sd(inst, nullptr, 0, &a, &trace) == RA_OK);
    CHECK(take(trace).starts_with("step 1 : 1 open-room 5 @ room 1\n"));
    char* text = nullptr;
    REQUIRE(ra_assignment_write(inst, a, &text) == RA_OK);
    CHECK(take(text) == sd_rooms);

    int poa = -1;
    ra_assignment* witness = nullptr;
    REQUIRE(ra_verify(inst, a, RA_VERIFY_PRUNED, nullptr, &poa, &witness) == RA_OK);
    CHECK(poa == 1);
    CHECK(witness == nullptr);
    ra_assignment_free(a);

    const int order[] = {8, 7, 6, 5, 4, 3, 2, 1, 0};
    REQUIRE(ra_find_sd(inst, order, 9, &a, nullptr) == RA_OK);
    ra_assignment_free(a);
    const int bad_order[] = {0, 0, 1, 2, 3, 4, 5, 6, 7};
    a = nullptr;
    CHECK(ra_find_sd(inst, bad_order, 9, &a, nullptr) == RA_PRECONDITION);
    CHECK(a == nullptr);
    ra_instance_free(inst);
}

TEST_CASE("dominated assignments come with a witness") {
    ra_instance* inst = example();
    int found = 0;
    ra_assignment* start = nullptr;
    REQUIRE(ra_assignment_parse("room 1 : 1 2 3\nroom 2 : 4 5 7\nroom 3 : 6 8 9\n", inst, &start) == RA_OK);
    int poa = -1;
    ra_assignment* witness = nullptr;
    REQUIRE(ra_verify(inst, start, RA_VERIFY_BRUTE, nullptr, &poa, &witness) == RA_OK);
    CHECK(poa == 0);
    REQUIRE(witness != nullptr);
    REQUIRE(ra_verify(inst, witness, RA_VERIFY_PRUNED, nullptr, &poa, nullptr) == RA_OK);
    ra_assignment_free(witness);
    ra_assignment* end = nullptr;
    size_t length = 0;
    char* potentials = nullptr;
    REQUIRE(ra_improve(inst, start, nullptr, &end, &length, &potentials) == RA_OK);
    const std::string pots = take(potentials);
    size_t lines = 0;
    for (char c : pots) lines += c == '\n';
    CHECK(lines == length + 1);
    REQUIRE(ra_verify(inst, end, RA_VERIFY_PRUNED, nullptr, &poa, nullptr) == RA_OK);
    CHECK(poa == 1);
    ra_assignment_free(end);
    ra_assignment_free(start);

    ra_assignment* any = nullptr;
    REQUIRE(ra_find_brute(inst, nullptr, &found, &any) == RA_OK);
    CHECK(found == 1);
    ra_assignment_free(any);
    REQUIRE(ra_find_feasible(inst, nullptr, &found, &any) == RA_OK);
    CHECK(found == 1);
    ra_assignment_free(any);
    any = nullptr;
    REQUIRE(ra_find_unanimous(inst, nullptr, &found, &any) == RA_OK);
    if (!found) CHECK(any == nullptr);
    ra_assignment_free(any);

    size_t count = 0;
    char* all = nullptr;
    REQUIRE(ra_enumerate(inst, 1, nullptr, &count, &all) == RA_OK);
    CHECK(count == 111);
    ra_string_free(all);
    ra_instance_free(inst);
}

TEST_CASE("budgets surface as their own status") {
    ra_instance* inst = example();
    ra_budget tight{5, 0.0};
    size_t count = 0;
    char* all = nullptr;
    CHECK(ra_enumerate(inst, 0, &tight, &count, &all) == RA_BUDGET);
    CHECK(all == nullptr);
    ra_instance_free(inst);
}

TEST_CASE("assignment errors") {
    ra_instance* inst = example();
    ra_assignment* a = nullptr;
    CHECK(ra_assignment_parse("room 1 : 1 2 5\nroom 2 : 3 4 8\n", inst, &a) == RA_PARSE);
    CHECK(ra_last_error_line() == 2);
    CHECK(ra_assignment_parse(sd_rooms, nullptr, &a) == RA_INVALID_ARGUMENT);
    CHECK(a == nullptr);
    ra_instance_free(inst);
}

TEST_CASE("reductions and oracles") {
    char* out = nullptr;
    char* dist = nullptr;
    REQUIRE(ra_reduce("verw", "graph 3\ne 0 1\ne 1 2\ne 0 2\n", &out, &dist) == RA_OK);
    const std::string text = take(out);
    CHECK(text.starts_with("nplayers 9\n"));
    CHECK(take(dist).starts_with("room 1 : "));
    ra_instance* inst = nullptr;
    REQUIRE(ra_instance_parse(text.c_str(), &inst) == RA_OK);
    ra_instance_free(inst);

    int found = 0;
    char* cert = nullptr;
    REQUIRE(ra_oracle("tc", "graph 3\ne 0 1\ne 1 2\ne 0 2\n", nullptr, &found, &cert) == RA_OK);
    CHECK(found == 1);
    CHECK(take(cert) == "t 0 1 2\n");
    REQUIRE(ra_oracle("bin", "binpack b=3\nitems 2 2 2\n", nullptr, &found, nullptr) == RA_OK);
    CHECK(found == 0);
    CHECK(ra_oracle("knapsack", "graph 3\n", nullptr, &found, nullptr) == RA_INVALID_ARGUMENT);
    CHECK(ra_reduce("verw", "graph 4\ne 0 1\n", &out, nullptr) == RA_PRECONDITION);
    CHECK(ra_reduce("verw", "graph x\n", &out, nullptr) == RA_PARSE);
}

TEST_CASE("generation") {
    const int caps[] = {3, 3, 3};
    ra_generator_params p{9, caps, 3, RA_MODE_WORST, 1, 1, 1.0, 0.0, 42};
    ra_instance* a = nullptr;
    ra_instance* b = nullptr;
    REQUIRE(ra_instance_generate(&p, &a) == RA_OK);
    REQUIRE(ra_instance_generate(&p, &b) == RA_OK);
    char* ta = nullptr;
    char* tb = nullptr;
    ra_instance_write(a, &ta);
    ra_instance_write(b, &tb);
    CHECK(take(ta) == take(tb));
    ra_instance_free(a);
    ra_instance_free(b);
    p.acceptability = 0.5;
    CHECK(ra_instance_generate(&p, &a) == RA_INVALID_ARGUMENT);
    CHECK(ra_instance_generate(nullptr, &a) == RA_INVALID_ARGUMENT);
}
