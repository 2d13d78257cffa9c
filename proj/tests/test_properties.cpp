#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/oracles.hpp"
#include "support/property_suites.hpp"

using namespace fszlab;
using namespace fszlab::testing;

TEST_CASE("randomized property suites hold on the corpus") {
    std::vector<Group> corpus = small_corpus();
    for (const Group& g : random_subgroups(corpus, 8, 321)) corpus.push_back(g);
    // a lighter instance budget than the acceptance run; same properties
    std::vector<SuiteResult> results = run_property_suites(corpus, /*seed=*/42,
                                                           /*min_instances=*/200);
    REQUIRE(results.size() == 7);
    for (const SuiteResult& r : results) {
        INFO(r.name);
        CHECK(r.instances >= 5);
        CHECK(r.failures == 0);
    }
}
