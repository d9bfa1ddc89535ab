#include "tri/homology.hpp"

#include "doctest.h"

#include <map>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tri/census.hpp"
#include "tri/isosig.hpp"

namespace {

using tri::HomologyProfile;
using tri::Triangulation;
using Factors = std::vector<long long>;

} // namespace

TEST_CASE("smith invariant factors of small matrices") {
    using tri::detail::smith_invariant_factors;
    CHECK(smith_invariant_factors({{1, 0}, {0, 1}}) == Factors{1, 1});
    CHECK(smith_invariant_factors({{0}}) == Factors{});
    CHECK(smith_invariant_factors({{6}}) == Factors{6});
    CHECK(smith_invariant_factors({{2, 4}, {6, 8}}) == Factors{2, 4});
    CHECK(smith_invariant_factors({{2, 0}, {0, 3}}) == Factors{1, 6});
    CHECK(smith_invariant_factors({{0, 0}, {0, 0}}) == Factors{});
    // Each factor divides the next.
    Factors f = smith_invariant_factors({{4, 2, 0}, {2, 8, 2}, {0, 2, 12}});
    for (std::size_t i = 1; i < f.size(); ++i) CHECK(f[i] % f[i - 1] == 0);
}

TEST_CASE("profile rendering") {
    CHECK(HomologyProfile{}.trivial());
    CHECK(HomologyProfile{}.to_string() == "0");
    CHECK(HomologyProfile{{0}}.to_string() == "Z");
    CHECK(HomologyProfile{{2, 6, 0}}.to_string() == "Z/2 + Z/6 + Z");
}

TEST_CASE("known first homology groups") {
    CHECK(tri::homology_h1(tri::canonical_sphere(1)).trivial());
    CHECK(tri::homology_h1(tri::canonical_sphere(2)).trivial());
    CHECK(tri::homology_h1(fixtures::sample3()).invariant_factors == Factors{3});

    // The four closed one-tetrahedron triangulations: two spheres and the
    // two lens spaces with fundamental groups Z/4 and Z/5.
    std::map<std::string, Factors> expect = {
        {"bagagabab", {}},
        {"bagagajas", {}},
        {"bajasajas", {4}},
        {"bajasanak", {5}},
    };
    tri::CensusSpec spec;
    spec.size = 1;
    auto sigs = tri::enumerate_closed(spec);
    REQUIRE(sigs.size() == expect.size());
    for (const std::string& sig : sigs) {
        REQUIRE(expect.count(sig));
        CHECK(tri::homology_h1(tri::decode(sig)).invariant_factors == expect[sig]);
    }
}

TEST_CASE("homology requires a closed 3-manifold") {
    CHECK_THROWS_AS(tri::homology_h1(fixtures::bad_edge()), tri::TriError);
    CHECK_THROWS_AS(tri::homology_h1(fixtures::bad_link()), tri::TriError);
    try {
        tri::homology_h1(fixtures::bad_edge());
    } catch (const tri::TriError& e) {
        CHECK(e.kind() == tri::Err::NotAManifold);
    }
}

TEST_CASE("homology agrees with the dual-presentation oracle") {
    CHECK(oracle::h1_invariants(fixtures::sample3()) == Factors{3});
    for (int n = 1; n <= 3; ++n) {
        tri::CensusSpec spec;
        spec.size = n;
        for (const std::string& sig : tri::enumerate_closed(spec)) {
            Triangulation t = tri::decode(sig);
            CHECK(tri::homology_h1(t).invariant_factors == oracle::h1_invariants(t));
        }
    }
}

TEST_CASE("homology is a relabelling invariant") {
    std::mt19937 rng(7);
    for (const Triangulation& t : {fixtures::sample3(), tri::canonical_sphere(2)}) {
        auto base = tri::homology_h1(t);
        for (int i = 0; i < 10; ++i)
            CHECK(tri::homology_h1(oracle::random_relabel(t, rng)) == base);
    }
}
