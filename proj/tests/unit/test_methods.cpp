#include <doctest.h>

#include <set>

#include "dcp/errors.hpp"
#include "dcp/methods.hpp"
#include "dcp/synth.hpp"
#include "support.hpp"

using namespace dcp;

TEST_CASE("method registry") {
    CHECK(method_ids().size() == 14);
    std::set<std::uint64_t> keys;
    for (const auto& id : method_ids()) {
        CHECK(is_method(id));
        keys.insert(method_key(id));
    }
    CHECK(keys.size() == method_ids().size());
    CHECK_FALSE(is_method("spectral"));
    CHECK_THROWS_AS(make_detector("spectral"), Error);
    CHECK(method_key("advhits") == method_key(std::string("adv") + "hits"));
}

TEST_CASE("every method runs and reports its id") {
    const PlantedGraph pg = sample_one_param(0.25, {12, 12, 12, 12}, 1);
    for (const auto& id : method_ids()) {
        CAPTURE(id);
        const DetectionResult r = make_detector(id)(pg.graph, 3);
        CHECK(r.partition.size() == pg.graph.n());
        CHECK(r.diagnostics.method == id);
        CHECK(r.partition.k == (id == "bowtie" ? 7 : 4));
        CHECK(make_detector(id)(pg.graph, 3).partition == r.partition);
    }
}

TEST_CASE("overrides reach the detectors") {
    const PlantedGraph pg = sample_one_param(0.1, {20, 20, 20, 20}, 2);
    MethodOverrides loose;
    loose.tol = 1e-2;
    const auto a = make_detector("advhits")(pg.graph, 1), b = make_detector("advhits", loose)(pg.graph, 1);
    CHECK(b.diagnostics.iterations <= a.diagnostics.iterations);
    MethodOverrides one;
    one.restarts = 1;
    CHECK(make_detector("hillclimb", one)(pg.graph, 1).partition.size() == 80);
}
