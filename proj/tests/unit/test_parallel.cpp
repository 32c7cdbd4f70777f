#include <doctest.h>

#include "plcat/parallel.hpp"
#include "plcat/plgcat.hpp"
#include "plcat/sat.hpp"
#include "support/fixtures.hpp"
#include "support/gen.hpp"

using namespace plcat;

TEST_CASE("first_success serial and parallel report the same canonical rank") {
    auto pred = [](std::uint64_t r) { return r % 97 == 41; };
    auto s = parallel::first_success_serial(100'000, 100'000, pred);
    auto p = parallel::first_success_parallel(100'000, 100'000, pred);
    REQUIRE(s.rank.has_value());
    CHECK(s.rank == p.rank);
    CHECK(*s.rank == 41);
    CHECK(s.examined == p.examined);

    auto none_s = parallel::first_success_serial(5'000, 5'000, [](std::uint64_t) { return false; });
    auto none_p = parallel::first_success_parallel(5'000, 5'000, [](std::uint64_t) { return false; });
    CHECK(!none_s.rank.has_value());
    CHECK(!none_p.rank.has_value());
    CHECK(none_s.exhausted);
    CHECK(none_p.exhausted);

    auto capped = parallel::first_success_serial(5'000, 10, [](std::uint64_t) { return false; });
    CHECK(!capped.exhausted);
    CHECK(capped.examined == 10);
}

TEST_CASE("thread cap is honored and kernels stay deterministic") {
    int before = parallel::max_threads();
    parallel::set_max_threads(2);
    CHECK(parallel::max_threads() == 2);

    gen::Rng rng(23);
    for (int i = 0; i < 10; ++i) {
        Formula f = gen::random_formula(rng, 9);
        CHECK(sat_bruteforce_serial(f) == sat_bruteforce_parallel(f));
    }
    parallel::set_max_threads(0);
    CHECK(parallel::max_threads() >= 1);
    (void)before;
}

TEST_CASE("cover search results do not depend on the thread count") {
    Complex2 sphere = fixtures::boundary_tetrahedron();
    parallel::set_max_threads(1);
    CoverSearchResult one = search_cover_two(sphere, 1'000'000);
    parallel::set_max_threads(0);
    CoverSearchResult many = search_cover_two(sphere, 1'000'000);
    REQUIRE(one.status == CoverSearchStatus::found);
    REQUIRE(many.status == CoverSearchStatus::found);
    CHECK(one.stage == many.stage);
    CHECK(one.cover->piece1 == many.cover->piece1);
    CHECK(one.cover->piece2 == many.cover->piece2);
}
