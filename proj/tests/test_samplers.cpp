#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>

#include "ncrrt/io.hpp"
#include "ncrrt/samplers.hpp"

using namespace ncrrt;

namespace {

Scenario open_world(double size = 500.0) {
    Scenario s;
    s.name = "open";
    s.bounds = {0, 0, size, size};
    s.start = {1, 1};
    s.goal = {size - 1, size - 1};
    return s;
}

Scenario shipped(int i) {
    return io::load_scenario(std::string(NCRRT_DATA_DIR) + "/scenario" + std::to_string(i) + ".json");
}

// The cluster test written out directly: N disk draws, each checked against
// the whole scenario.
bool reference_is_narrow(const Config& c, const Scenario& s, RngStream& rng, double lambda, double sigma,
                         int n) {
    int hits = 0;
    for (int i = 0; i < n; ++i) {
        hits += collision_check(sample_disk(c, lambda, rng), s) ? 1 : 0;
    }
    return hits * 100.0 >= sigma * n;
}

struct NarrowReplay {
    Config config;
    std::uint64_t draw_position{0};
    bool passed{false};
};

NarrowReplay reference_narrow_state(const Scenario& s, RngStream& rng, const SamplerParams& p) {
    NarrowReplay out;
    for (int attempt = 0; attempt < p.max_attempts; ++attempt) {
        out.config = random_state(s, rng, 10 * p.max_attempts);
        out.draw_position = rng.position();
        if (reference_is_narrow(out.config, s, rng, p.lambda, p.sigma, p.cluster_size)) {
            out.passed = true;
            return out;
        }
    }
    return out;
}

// Fraction of a fine grid over the disk that collides.
double area_fraction(const Config& c, const Scenario& s, double lambda, double step = 0.05) {
    long inside = 0;
    long hits = 0;
    for (double dx = -lambda + step / 2; dx < lambda; dx += step) {
        for (double dy = -lambda + step / 2; dy < lambda; dy += step) {
            if (dx * dx + dy * dy > lambda * lambda) {
                continue;
            }
            ++inside;
            hits += collision_check({c.x + dx, c.y + dy}, s) ? 1 : 0;
        }
    }
    return static_cast<double>(hits) / static_cast<double>(inside);
}

Scenario corridor(double width) {
    Scenario s = open_world();
    s.obstacles = {{0, 0, 250 - width / 2, 500}, {250 + width / 2, 0, 500, 500}};
    s.start = {250, 10};
    s.goal = {250, 490};
    return s;
}

}  // namespace

TEST_CASE("rng matches the published SplitMix64 sequence") {
    RngStream zero(0);
    CHECK(zero.next_u64() == 0xE220A8397B1DCDAFULL);
    RngStream r(1234567);
    CHECK(r.next_u64() == 6457827717110365317ULL);
    CHECK(r.next_u64() == 3203168211198807973ULL);
    CHECK(r.next_u64() == 9817491932198370423ULL);
}

TEST_CASE("rng discard, position and peek agree with sequential draws") {
    RngStream a(99);
    RngStream b(99);
    CHECK(a.position() == 0);
    for (std::uint64_t ahead = 0; ahead < 10; ++ahead) {
        RngStream c = a;
        c.discard(ahead);
        CHECK(a.peek_uniform(ahead) == c.uniform());
    }
    for (int i = 0; i < 1000; ++i) {
        (void)a.uniform();
    }
    b.discard(1000);
    CHECK(a == b);
    CHECK(a.position() == 1000);
    CHECK(a.next_u64() == b.next_u64());

    RngStream u(5);
    for (int i = 0; i < 10000; ++i) {
        const double v = u.uniform();
        REQUIRE(v >= 0.0);
        REQUIRE(v < 1.0);
    }
}

TEST_CASE("random_state is deterministic and free") {
    RngStream a(42);
    RngStream b(42);
    const Scenario s = shipped(1);
    CHECK(random_state(s, a) == random_state(s, b));

    for (int i = 1; i <= 4; ++i) {
        const Scenario sc = shipped(i);
        RngStream rng(static_cast<std::uint64_t>(i));
        for (int k = 0; k < 10000; ++k) {
            const Config c = random_state(sc, rng);
            REQUIRE_FALSE(collision_check(c, sc));
        }
    }
}

TEST_CASE("random_state mean on an open map") {
    const Scenario s = open_world();
    RngStream rng(2024);
    double sx = 0;
    double sy = 0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const Config c = random_state(s, rng);
        sx += c.x;
        sy += c.y;
    }
    CHECK(std::abs(sx / n - 250.0) < 5.0);
    CHECK(std::abs(sy / n - 250.0) < 5.0);
}

TEST_CASE("random_state gives up on a blocked map") {
    Scenario s = open_world(10);
    s.obstacles = {{0, 0, 10, 10}};
    RngStream rng(1);
    CHECK_THROWS_AS((void)random_state(s, rng, 50), SamplingExhausted);
    CHECK(rng.position() == 100);
}

TEST_CASE("sample_disk matches the textbook construction") {
    RngStream rng(77);
    const Config center{123.25, -40.5};
    const double radius = 20.0;
    double worst = 0.0;
    for (int i = 0; i < 100000; ++i) {
        RngStream probe = rng;
        const double u = probe.uniform();
        const double v = probe.uniform();
        const Config got = sample_disk(center, radius, rng);
        REQUIRE(rng == probe);
        const double r = radius * std::sqrt(u);
        const double a = 2.0 * std::numbers::pi * v;
        const double err = std::hypot(got.x - (center.x + r * std::cos(a)), got.y - (center.y + r * std::sin(a)));
        worst = std::max(worst, err);
        REQUIRE(metric(got, center) <= radius * (1.0 + 1e-12));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("sample_disk is uniform over the disk") {
    RngStream rng(8);
    const int n = 40000;
    int inner = 0;
    int quadrant[4] = {0, 0, 0, 0};
    for (int i = 0; i < n; ++i) {
        const Config c = sample_disk({0, 0}, 10.0, rng);
        inner += metric(c, {0, 0}) < 5.0 ? 1 : 0;
        quadrant[(c.x >= 0 ? 0 : 1) + (c.y >= 0 ? 0 : 2)]++;
    }
    // Binomial 4-sigma bands.
    CHECK(std::abs(inner - n * 0.25) < 4 * std::sqrt(n * 0.25 * 0.75));
    for (int q : quadrant) {
        CHECK(std::abs(q - n * 0.25) < 4 * std::sqrt(n * 0.25 * 0.75));
    }
}

TEST_CASE("goal_bias_state extremes") {
    const Scenario s = open_world();
    RngStream rng(3);
    for (int i = 0; i < 1000; ++i) {
        REQUIRE(goal_bias_state(s, rng, 0.0) == s.goal);
    }
    for (int i = 0; i < 1000; ++i) {
        REQUIRE_FALSE(goal_bias_state(s, rng, 1.0) == s.goal);
    }
}

TEST_CASE("goal_bias_state frequency lies in the binomial band") {
    const Scenario s = shipped(1);
    for (const double p : {0.9, 0.5}) {
        RngStream rng(static_cast<std::uint64_t>(p * 1000));
        const int n = 10000;
        int goals = 0;
        for (int i = 0; i < n; ++i) {
            const Config c = goal_bias_state(s, rng, p);
            REQUIRE_FALSE(collision_check(c, s));
            goals += c == s.goal ? 1 : 0;
        }
        const double mean = n * (1.0 - p);
        CHECK(std::abs(goals - mean) <= 3.0 * std::sqrt(n * p * (1.0 - p)));
    }
}

TEST_CASE("goal_zoom_state samples the disk around the goal") {
    Scenario s = open_world();
    s.goal = {250, 250};
    SamplerParams params;
    params.p = 0.0;

    SUBCASE("goal already in the tree") {
        Tree t = tree_init({10, 10});
        add_node(t, s.goal, NodeId{0});
        RngStream rng(1);
        CHECK(goal_zoom_state(s, t, rng, params) == s.goal);
    }

    SUBCASE("radius follows the nearest node") {
        const Tree t = tree_init({350, 250});
        RngStream rng(2);
        double farthest = 0.0;
        for (int i = 0; i < 10000; ++i) {
            const Config c = goal_zoom_state(s, t, rng, params);
            farthest = std::max(farthest, metric(c, s.goal));
            REQUIRE(metric(c, s.goal) <= 100.0);
        }
        CHECK(farthest > 95.0);
    }
}

TEST_CASE("goal_zoom_state falls back when the disk is blocked") {
    // The goal sits in a pinhole; only the lower-left square is otherwise free.
    Scenario s = open_world();
    s.goal = {250, 250};
    const double h = 1e-6;
    s.obstacles = {{100, 0, 500, 250 - h},
                   {0, 250 + h, 500, 500},
                   {0, 100, 250 - h, 250 + h},
                   {250 + h, 250 - h, 500, 250 + h}};
    s.start = {10, 10};
    REQUIRE_NOTHROW(validate(s));
    SamplerParams params;
    params.p = 0.0;
    params.max_attempts = 20;
    const Tree t = tree_init({250, 270});

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        RngStream rng(seed);
        const Config got = goal_zoom_state(s, t, rng, params);
        RngStream replay(seed);
        (void)replay.uniform();
        replay.discard(2 * static_cast<std::uint64_t>(params.max_attempts));
        const Config expected = random_state(s, replay, 10 * params.max_attempts);
        CHECK(got == expected);
        CHECK(rng == replay);
        CHECK_FALSE(collision_check(got, s));
    }
}

TEST_CASE("is_narrow on open space and in a corridor") {
    const Scenario open = open_world();
    RngStream rng(4);
    CHECK_FALSE(is_narrow({250, 250}, open, rng, 20, 40, 50));

    const Scenario s = corridor(4);
    const double fraction = area_fraction({250, 250}, s, 20);
    CHECK(fraction == doctest::Approx(0.87).epsilon(0.01));
    RngStream a(5);
    CHECK(is_narrow({250, 250}, s, a, 20, 40, 1000));
    RngStream b(5);
    CHECK_FALSE(is_narrow({250, 250}, s, b, 20, 95, 1000));
}

TEST_CASE("is_narrow consumes exactly two outputs per cluster point") {
    const Scenario s = shipped(3);
    for (const int n : {1, 7, 50, 1000}) {
        for (const Config c : {Config{60, 60}, Config{250, 60}, Config{250, 450}, Config{0.5, 0.5}}) {
            RngStream rng(n);
            (void)is_narrow(c, s, rng, 20, 40, n);
            CHECK(rng.position() == 2 * static_cast<std::uint64_t>(n));
        }
    }
}

TEST_CASE("is_narrow matches the direct cluster count") {
    for (int i = 1; i <= 4; ++i) {
        const Scenario s = shipped(i);
        RngStream candidates(static_cast<std::uint64_t>(100 + i));
        int agreed_true = 0;
        for (int k = 0; k < 3000; ++k) {
            const Config c = random_state(s, candidates);
            const double sigma = k % 3 == 0 ? 40.0 : (k % 3 == 1 ? 25.0 : 100.0);
            const int n = k % 5 == 0 ? 7 : 50;
            RngStream fast(static_cast<std::uint64_t>(k));
            RngStream slow(static_cast<std::uint64_t>(k));
            const bool got = is_narrow(c, s, fast, 20, sigma, n);
            REQUIRE(got == reference_is_narrow(c, s, slow, 20, sigma, n));
            REQUIRE(fast == slow);
            agreed_true += got ? 1 : 0;
        }
        CHECK(agreed_true > 50);
    }
}

TEST_CASE("is_narrow near the world edge counts out-of-bounds points") {
    const Scenario s = open_world();
    RngStream a(6);
    RngStream b(6);
    // A corner cluster loses three quarters of its disk to the outside.
    CHECK(is_narrow({0, 0}, s, a, 20, 60, 200));
    CHECK(reference_is_narrow({0, 0}, s, b, 20, 60, 200));
}

TEST_CASE("is_narrow is monotone in sigma") {
    const Scenario s = shipped(2);
    RngStream candidates(12);
    for (int k = 0; k < 500; ++k) {
        const Config c = random_state(s, candidates);
        bool previous = true;
        for (double sigma = 5; sigma <= 100; sigma += 5) {
            RngStream rng(static_cast<std::uint64_t>(k));
            const bool now = is_narrow(c, s, rng, 20, sigma, 50);
            REQUIRE((previous || !now));
            previous = now;
        }
    }
}

TEST_CASE("narrow_state replays on scenario 1") {
    const Scenario s = shipped(1);
    SamplerParams params;
    params.max_attempts = 100;
    RngStream rng(7);
    const Config got = narrow_state(s, rng, params);

    RngStream replay_rng(7);
    const NarrowReplay replay = reference_narrow_state(s, replay_rng, params);
    REQUIRE(replay.passed);
    CHECK(got == replay.config);
    CHECK(rng == replay_rng);

    RngStream at(7);
    at.discard(replay.draw_position);
    CHECK(reference_is_narrow(got, s, at, params.lambda, params.sigma, params.cluster_size));
}

TEST_CASE("narrow_state agrees with the reference on every scenario") {
    SamplerParams params;
    for (int i = 1; i <= 4; ++i) {
        const Scenario s = shipped(i);
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            RngStream a(seed);
            RngStream b(seed);
            const Config got = narrow_state(s, a, params);
            const NarrowReplay expected = reference_narrow_state(s, b, params);
            REQUIRE(got == expected.config);
            REQUIRE(a == b);
            REQUIRE_FALSE(collision_check(got, s));
        }
    }
}

TEST_CASE("narrow_state on an open map falls back to the last candidate") {
    const Scenario s = open_world();
    SamplerParams params;
    params.max_attempts = 10;
    RngStream rng(31);
    const Config got = narrow_state(s, rng, params);

    RngStream replay(31);
    Config last;
    for (int i = 0; i < params.max_attempts; ++i) {
        last = random_state(s, replay);
        replay.discard(2 * static_cast<std::uint64_t>(params.cluster_size));
    }
    CHECK(got == last);
    CHECK(rng == replay);
}

TEST_CASE("sampler parameter validation") {
    SamplerParams ok;
    CHECK_NOTHROW(validate(ok));
    auto broken = [&](auto edit) {
        SamplerParams p = ok;
        edit(p);
        return p;
    };
    CHECK_THROWS_AS(validate(broken([](auto& p) { p.p = 1.5; })), ValidationError);
    CHECK_THROWS_AS(validate(broken([](auto& p) { p.p = -0.1; })), ValidationError);
    CHECK_THROWS_AS(validate(broken([](auto& p) { p.lambda = 0; })), ValidationError);
    CHECK_THROWS_AS(validate(broken([](auto& p) { p.sigma = 0; })), ValidationError);
    CHECK_THROWS_AS(validate(broken([](auto& p) { p.sigma = 100.5; })), ValidationError);
    CHECK_THROWS_AS(validate(broken([](auto& p) { p.cluster_size = 0; })), ValidationError);
    CHECK_THROWS_AS(validate(broken([](auto& p) { p.max_attempts = 0; })), ValidationError);
}
