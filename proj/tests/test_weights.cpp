#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schurcat/weights.hpp"

using namespace schurcat;

TEST_CASE("bar and phi") {
    CHECK(bar({1, 1}) == SlWeight{0});
    CHECK(bar({2, 0, 1}) == SlWeight{2, -1});
    CHECK(bar({3, 0, 0}) == SlWeight{3, 0});

    CHECK(phi({0}, 2, 2) == GlWeight{1, 1});
    CHECK(!phi({0}, 2, 1).has_value());
    CHECK(phi({1}, 2, 3) == GlWeight{2, 1});

    // bar . phi = id on the non-star domain
    for (int n = 2; n <= 4; ++n)
        for (int dd = 0; dd <= 6; ++dd) {
            std::vector<int> mu(n - 1, 0);
            std::function<void(int)> rec = [&](int pos) {
                if (pos == n - 1) {
                    auto lam = phi(mu, n, dd);
                    if (lam) CHECK(bar(*lam) == mu);
                    return;
                }
                for (int v = -4; v <= 4; ++v) {
                    mu[pos] = v;
                    rec(pos + 1);
                }
            };
            rec(0);
        }
}

TEST_CASE("weight set enumeration") {
    auto l22 = enumerate_lambda(2, 2);
    CHECK(l22.size() == 3);
    auto d22 = enumerate_dominant(2, 2);
    CHECK(d22 == std::vector<GlWeight>{{1, 1}, {2, 0}});
    CHECK(enumerate_lambda(1, 5) == std::vector<GlWeight>{{5}});
    CHECK(enumerate_lambda(3, 1).size() == 3);

    for (int n = 1; n <= 4; ++n)
        for (int dd = 0; dd <= 5; ++dd)
            CHECK((long)enumerate_lambda(n, dd).size() == binom_long(n + dd - 1, dd));

    // |Lambda^+(n,d)| = number of partitions of d into at most n parts
    auto partitions_leq = [](int dd, int parts) {
        std::function<long(int, int)> rec = [&](int rem, int maxp) -> long {
            if (rem == 0) return 1;
            long acc = 0;
            for (int v = std::min(rem, maxp); v >= 1; --v) acc += rec(rem - v, v);
            return acc;
        };
        // at most `parts` parts <=> largest part of the conjugate <= parts
        std::function<long(int, int, int)> rec2 = [&](int rem, int maxp, int left) -> long {
            if (rem == 0) return 1;
            if (left == 0) return 0;
            long acc = 0;
            for (int v = std::min(rem, maxp); v >= 1; --v) acc += rec2(rem - v, v, left - 1);
            return acc;
        };
        (void)rec;
        return rec2(dd, dd, parts);
    };
    for (int n = 1; n <= 4; ++n)
        for (int dd = 0; dd <= 6; ++dd)
            CHECK((long)enumerate_dominant(n, dd).size() == partitions_leq(dd, n));
}

TEST_CASE("shift and cartan") {
    CHECK(shift_weight({1, 1}, 1, +1) == GlWeight{2, 0});
    CHECK(cartan(1, 2) == -1);
    CHECK(cartan(1, 3) == 0);
    CHECK(cartan(2, 2) == 2);
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j) CHECK(cartan(i, j) == cartan(j, i));
}

TEST_CASE("lexicographic order is total on Lambda(n,d)") {
    auto l = enumerate_lambda(3, 3);
    for (size_t a = 0; a < l.size(); ++a)
        for (size_t b = 0; b < l.size(); ++b) {
            if (a == b) continue;
            CHECK((lex_less(l[a], l[b]) || lex_less(l[b], l[a])));
        }
}

TEST_CASE("ssyt counts") {
    CHECK(ssyt_count({2, 0}, 2) == 3);
    CHECK(ssyt_count({1, 1}, 2) == 1);
    CHECK(ssyt_count({2, 0, 0}, 3) == 6);
    CHECK(ssyt_count({1, 1, 0}, 3) == 3);
}
