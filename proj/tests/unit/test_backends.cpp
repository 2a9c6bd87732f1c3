#include "doctest.h"

#include "json.hpp"

#include "hurwitz/backends.hpp"

using namespace hurwitz;

TEST_CASE("backend names round-trip") {
    for (Backend b : {Backend::Brute, Backend::Character, Backend::ClassAlg, Backend::Graphs,
                      Backend::Fock, Backend::Closed, Backend::Auto}) {
        auto parsed = parse_backend(backend_name(b));
        REQUIRE(parsed.has_value());
        CHECK(*parsed == b);
    }
    CHECK_FALSE(parse_backend("nope").has_value());
}

TEST_CASE("every backend computes the degree-3 genus-1 instance") {
    HurwitzInstance inst(1, Partition({2, 1}));
    for (Backend b : {Backend::Brute, Backend::Character, Backend::ClassAlg, Backend::Graphs,
                      Backend::Fock, Backend::Closed, Backend::Auto}) {
        CHECK(compute_hurwitz(inst, b, true) == Rat(40));
    }
    for (Backend b : {Backend::Brute, Backend::Character, Backend::ClassAlg, Backend::Fock}) {
        CHECK(compute_hurwitz(inst, b, false) == Rat(81, 2));
    }
}

TEST_CASE("check matrix agreement and the corruption hook") {
    CheckReport ok = run_check_matrix(3, 1);
    CHECK(ok.all_agree);
    CHECK(ok.first_divergence.empty());
    CHECK(ok.render().find("all backends agree") != std::string::npos);

    CheckReport bad = run_check_matrix(2, 0, 1, "class");
    CHECK_FALSE(bad.all_agree);
    CHECK(bad.first_divergence.find("class") != std::string::npos);
}

TEST_CASE("json value schema round-trips byte-identically") {
    nlohmann::json j;
    j["genus"] = 1;
    j["profile"] = std::vector<int>{2, 1};
    j["degree"] = 3;
    j["branch_points"] = 5;
    j["connected"] = true;
    j["backend"] = "character";
    j["value"] = "40";
    std::string once = j.dump();
    std::string twice = nlohmann::json::parse(once).dump();
    CHECK(once == twice);
}
