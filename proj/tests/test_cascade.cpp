#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "recon/cascade.hpp"
#include "recon/channel.hpp"
#include "recon/entropy.hpp"
#include "recon/errors.hpp"
#include "recon/rng.hpp"

using namespace recon;

TEST_CASE("identical strings pay only the block parities") {
    BitString x = BitString::random(1000, 5);
    CascadeSession session(x, x, 0.05, 99);
    CHECK(session.initial_block_size() == 15);
    session.run();
    CHECK(session.corrected() == x);
    // ceil(1000/15) + ceil(1000/30) + ceil(1000/60) + ceil(1000/120)
    CHECK(session.leak_bits() == 67 + 34 + 17 + 9);
}

TEST_CASE("a single error costs one bisection") {
    BitString x = BitString::random(64, 8);
    BitString y = x;
    y.flip(29);
    CascadeSession session(x, y, 0.0913, 3);
    CHECK(session.initial_block_size() == 8);
    session.run();
    CHECK(session.corrected() == x);
    // pass one: 8 parities and a 3-step bisection; the flip cancels the
    // odd block, so later passes see clean strings: 4 + 2 + 1 parities
    CHECK(session.leak_bits() == 8 + 3 + 4 + 2 + 1);
}

TEST_CASE("two-bit toy session by hand") {
    BitString x(2);
    BitString y(2);
    y.set(0, true);
    auto [corrected, leak] = cascade_reconcile(x, y, 0.4, 11);
    CHECK(corrected == x);
    // one differing block, one split, then three clean passes
    CHECK(leak == 5);
}

TEST_CASE("empty strings are a no-op") {
    BitString x;
    auto [corrected, leak] = cascade_reconcile(x, x, 0.1, 1);
    CHECK(corrected.empty());
    CHECK(leak == 0);
}

TEST_CASE("argument validation") {
    BitString x(16), y(8);
    CHECK_THROWS_AS(CascadeSession(x, y, 0.1, 1), DimensionError);
    CHECK_THROWS_AS(CascadeSession(x, x, 0.0, 1), DomainError);
    CHECK_THROWS_AS(CascadeSession(x, x, 0.5, 1), DomainError);
}

TEST_CASE("sessions are deterministic in the seed") {
    BitString x = BitString::random(512, 21);
    BitString y = x;
    for (std::size_t i = 0; i < 512; i += 37) y.flip(i);
    auto [c1, l1] = cascade_reconcile(x, y, 0.03, 7);
    auto [c2, l2] = cascade_reconcile(x, y, 0.03, 7);
    CHECK(c1 == c2);
    CHECK(l1 == l2);
}

TEST_CASE("typical operating point corrects and leaks sanely") {
    const std::size_t n = 10000;
    const double p = 0.02;
    std::size_t good = 0;
    std::size_t total_leak = 0;
    const int sessions = 20;
    for (int i = 0; i < sessions; ++i) {
        std::uint64_t seed = mix_seed(600, static_cast<std::uint64_t>(i));
        BitString x = BitString::random(n, mix_seed(seed, 1));
        BitString y = transmit(x, BscChannel{p}, mix_seed(seed, 2));
        auto [corrected, leak] = cascade_reconcile(x, y, p, mix_seed(seed, 3));
        if (corrected == x) ++good;
        total_leak += leak;
    }
    CHECK(good >= sessions * 8 / 10);
    double f = static_cast<double>(total_leak) / sessions /
               (static_cast<double>(n) * binary_entropy(p));
    CHECK(f > 1.0);
    CHECK(f < 1.8);
}
