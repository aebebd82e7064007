#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <stdexcept>

#include "grasstilt/partition.hpp"
#include "oracles.hpp"

using namespace grasstilt;

TEST_CASE("canonical form")
{
    CHECK(Partition{3, 1, 0, 0} == Partition{3, 1});
    CHECK(Partition{0, 0}.empty());
    CHECK(Partition{3, 1}.size() == 4);
    CHECK(Partition{3, 1}.length() == 2);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0, 1}), std::invalid_argument);
    CHECK(Partition{2, 1}.to_string() == "(2,1)");
}

TEST_CASE("conjugate")
{
    CHECK(conjugate(Partition{}) == Partition{});
    CHECK(conjugate(Partition{2, 1}) == Partition{2, 1});
    CHECK(conjugate(Partition{3, 1}) == oracle::conjugate_by_cells(Partition{3, 1}));
    CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});

    for (const auto& p : partitions_up_to(10)) {
        CHECK(conjugate(p) == oracle::conjugate_by_cells(p));
        CHECK(conjugate(conjugate(p)) == p);
    }
}

TEST_CASE("lexicographic order")
{
    CHECK(lex_compare(Partition{2}, Partition{1, 1}) > 0);
    CHECK(lex_compare(Partition{2, 1}, Partition{2}) > 0);
    CHECK(lex_compare(Partition{2, 1}, Partition{2, 1}) == 0);
    CHECK(lex_compare(Partition{}, Partition{1}) < 0);

    SUBCASE("total order on small partitions")
    {
        const auto all = partitions_up_to(6);
        for (const auto& a : all)
            for (const auto& b : all) {
                auto ab = lex_compare(a, b);
                CHECK((ab == 0) == (a == b));
                CHECK((lex_compare(b, a) < 0) == (ab > 0));
            }
    }

    SUBCASE("transitive on the box (5,5)")
    {
        const auto box = enumerate_box({5, 5});
        REQUIRE(box.size() == 252);
        for (std::size_t i = 0; i < box.size(); ++i)
            for (std::size_t j = 0; j < box.size(); ++j) {
                if (lex_compare(box[i], box[j]) >= 0)
                    continue;
                for (std::size_t k = 0; k < box.size(); ++k)
                    if (lex_compare(box[j], box[k]) < 0)
                        CHECK(lex_compare(box[i], box[k]) < 0);
            }
        for (std::size_t i = 1; i < box.size(); ++i)
            CHECK(lex_compare(box[i - 1], box[i]) > 0);
    }
}

TEST_CASE("dominance")
{
    CHECK(dominance_compare(Partition{2}, Partition{1, 1}) == Dominance::dominates);
    CHECK(dominance_compare(Partition{1, 1}, Partition{2}) == Dominance::dominated);
    CHECK(dominance_compare(Partition{3, 1, 1, 1}, Partition{2, 2, 2}) == Dominance::incomparable);
    CHECK(oracle::dominance_by_prefix_sums(Partition{3, 1, 1, 1}, Partition{2, 2, 2}) == 2);
    CHECK(dominance_compare(Partition{2, 1}, Partition{2, 1}) == Dominance::equal);
    CHECK_THROWS_AS(dominance_compare(Partition{2}, Partition{1}), std::domain_error);

    for (int n = 0; n <= 8; ++n) {
        const auto level = partitions_of(n);
        for (const auto& a : level)
            for (const auto& b : level) {
                const int expected = oracle::dominance_by_prefix_sums(a, b);
                const auto got = dominance_compare(a, b);
                CHECK(got == (expected == 1    ? Dominance::dominates
                              : expected == -1 ? Dominance::dominated
                              : expected == 0  ? Dominance::equal
                                               : Dominance::incomparable));
                // lex refines dominance
                if (got == Dominance::dominates)
                    CHECK(lex_compare(a, b) > 0);
            }
    }
}

TEST_CASE("box enumeration")
{
    const auto b22 = enumerate_box({2, 2});
    const std::vector<Partition> expected{{2, 2}, {2, 1}, {2}, {1, 1}, {1}, {}};
    CHECK(b22 == expected);
    CHECK(enumerate_box({1, 3}) == std::vector<Partition>{{3}, {2}, {1}, {}});
    CHECK(enumerate_box({0, 5}) == std::vector<Partition>{{}});
    CHECK(enumerate_box({5, 0}) == std::vector<Partition>{{}});
    CHECK_THROWS_AS(enumerate_box({-1, 2}), std::invalid_argument);

    for (int u = 0; u <= 6; ++u)
        for (int v = 0; v <= 6; ++v) {
            const auto box = enumerate_box({u, v});
            CHECK(box.size() == oracle::pascal(u + v, u));
            auto brute = oracle::box_by_filter(u, v);
            std::sort(brute.begin(), brute.end(), LexDescending{});
            CHECK(box == brute);

            // conjugation is a bijection onto the transposed box
            auto transposed = enumerate_box({v, u});
            std::vector<Partition> image;
            for (const auto& p : box)
                image.push_back(conjugate(p));
            std::sort(image.begin(), image.end(), LexDescending{});
            CHECK(image == transposed);
        }
}

TEST_CASE("box membership")
{
    PartitionBox box{2, 3};
    CHECK(box.contains(Partition{}));
    CHECK(box.contains(Partition{3, 3}));
    CHECK_FALSE(box.contains(Partition{4}));
    CHECK_FALSE(box.contains(Partition{1, 1, 1}));
}

TEST_CASE("partitions of n")
{
    const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n) {
        const auto level = partitions_of(n);
        CHECK(level.size() == static_cast<std::size_t>(counts[n]));
        for (const auto& p : level)
            CHECK(p.size() == n);
    }
}
