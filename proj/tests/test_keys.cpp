#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "hzeta/cache.hpp"
#include "hzeta/error.hpp"
#include "hzeta/keys.hpp"
#include "support.hpp"

using namespace hzeta;
using testing::lit;

namespace {

std::filesystem::path fresh_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("hzeta_test_" + name);
    std::filesystem::remove_all(dir);
    return dir;
}

}  // namespace

TEST_CASE("key parsing and canonical text") {
    ConstantKey k = ConstantKey::parse("gammaA(m=3, k=2)", 20);
    CHECK(k.family == Family::gammaA);
    CHECK(k.id() == "gammaA(k=2,m=3)");
    CHECK(k.param("m") == Rational(3));
    CHECK(ConstantKey::parse("gamma", 12).id() == "gamma()");
    CHECK(ConstantKey::parse("gamma()", 12).id() == "gamma()");
    CHECK(ConstantKey::parse("zeta(s=2.5)", 12).params[0] == Rational(5, 2));
    CHECK(ConstantKey::parse("zeta(s=-0.25)", 12).params[0] == Rational(-1, 4));
    CHECK(ConstantKey::parse("digamma(a=1/3)", 12).id() == "digamma(a=1/3)");
    CHECK(ConstantKey::parse("stieltjes_gen(m=0,a=0.08)", 12).params[1] == Rational(2, 25));
    for (const auto& info : family_table()) CHECK(family_from_name(info.name) == info.family);
}

TEST_CASE("key errors") {
    CHECK_THROWS_AS(ConstantKey::parse("nope(m=1)", 20), DomainError);
    CHECK_THROWS_AS(ConstantKey::parse("gammaA(k=2)", 20), DomainError);
    CHECK_THROWS_AS(ConstantKey::parse("gammaA(k=2,m=1,x=3)", 20), DomainError);
    CHECK_THROWS_AS(ConstantKey::parse("gammaA(k=2,m=1,m=2)", 20), DomainError);
    CHECK_THROWS_AS(ConstantKey::parse("gammaA(k=0,m=1)", 20), DomainError);
    CHECK_THROWS_AS(ConstantKey::parse("gammaO(m=1/2)", 20), DomainError);
    CHECK_THROWS_AS(ConstantKey::parse("gammaO(m=41)", 20), DomainError);
    CHECK_THROWS_AS(ConstantKey::parse("gammaO(m=1)", 9), DomainError);
    CHECK_THROWS_AS(ConstantKey::parse("zeta(s=1)", 20), PoleError);
    CHECK_THROWS_AS(ConstantKey::parse("zeta(s=1.)", 20), DomainError);
}

TEST_CASE("key ordering is family then parameters") {
    auto a = ConstantKey::parse("gammaA(k=2,m=10)", 20);
    auto b = ConstantKey::parse("gammaA(k=3,m=0)", 20);
    auto c = ConstantKey::parse("gammaH(m=0)", 20);
    CHECK(a < b);
    CHECK(b < c);
    CHECK(ConstantKey::parse("gammaA(k=2,m=2)", 20) < a);
}

TEST_CASE("evaluate dispatches to the right routine") {
    auto g = evaluate(ConstantKey::parse("gamma", 20));
    CHECK(render_value(g.value, g.error_bound, 10) == std::string("0.5772156649"));
    auto a = evaluate(ConstantKey::parse("gammaA(k=2,m=0)", 18));
    CHECK(render_value(a.value, a.error_bound, 18) == std::string("1.02587476785559324"));
    auto h = evaluate(ConstantKey::parse("gammaHminus(m=0)", 14));
    CHECK(render_value(h.value, h.error_bound, 14) == std::string("0.42762775101889"));
    auto e = evaluate(ConstantKey::parse("zetaA_neg_even(k=2,m=1)", 20));
    REQUIRE(e.exact.has_value());
    CHECK(e.exact->str() == "1/8");
    CHECK(e.error_bound.is_zero());
    auto s = evaluate(ConstantKey::parse("s_half_special(m=1)", 20));
    CHECK(s.exact->str() == "-1/24");
    CHECK_FALSE(exact_value(ConstantKey::parse("gammaO(m=1)", 20)).has_value());
    auto z = evaluate(ConstantKey::parse("zeta(s=2)", 20));
    CHECK(render_value(z.value, z.error_bound, 12) == std::string("1.64493406685"));
    auto i = evaluate(ConstantKey::parse("integral_i(k=1,m=0)", 20));
    CHECK(render_value(i.value, i.error_bound, 15) == std::string("0.728693917003931"));
}

TEST_CASE("rendering rounds half to even and refuses loose bounds") {
    const long bits = 256;
    const Real tiny = lit("1e-40", bits);
    CHECK(render_value(lit("0.125", bits), tiny, 2) == std::string("0.12"));
    CHECK(render_value(lit("0.375", bits), tiny, 2) == std::string("0.38"));
    CHECK(render_value(lit("0.0625", bits), tiny, 2) == std::string("0.062"));
    CHECK(render_value(lit("-2.5", bits), tiny, 1) == std::string("-2"));
    CHECK(render_value(lit("123456", bits), tiny, 3) == std::string("123000"));
    CHECK(render_value(lit("1.23", bits), lit("0.004", bits), 3) == std::string("1.23"));
    CHECK_FALSE(render_value(lit("1.23", bits), lit("0.005", bits), 3).has_value());
    CHECK(render_value(lit("0", bits), lit("0", bits), 5) == std::string("0"));
    CHECK_FALSE(render_value(lit("0", bits), tiny, 5).has_value());
}

TEST_CASE("cache entry json round trip") {
    CacheEntry e{"gammaA(k=2,m=3)", 25, "2.93741964148769001e0", "1e-35", "2026-01-01T00:00:00Z", "0.1.0"};
    CacheEntry back = cache_entry_from_json(cache_entry_to_json(e));
    CHECK(back.key == e.key);
    CHECK(back.digits == e.digits);
    CHECK(back.value == e.value);
    CHECK(back.error_bound == e.error_bound);
    CHECK(back.created_at == e.created_at);
    CHECK(back.library_version == e.library_version);
}

TEST_CASE("cache hit needs enough stored digits and survives reload") {
    auto dir = fresh_dir("hit");
    auto key20 = ConstantKey::parse("gammaO(m=2)", 20);
    auto key30 = ConstantKey::parse("gammaO(m=2)", 30);
    ConstantResult r = evaluate(key20);
    {
        ConstantCache cache(dir);
        CHECK_FALSE(cache.lookup(key20).has_value());
        cache.store(r);
        CHECK(cache.lookup(key20).has_value());
        CHECK_FALSE(cache.lookup(key30).has_value());
    }
    ConstantCache reloaded(dir);
    auto hit = reloaded.lookup(ConstantKey::parse("gammaO(m=2)", 15));
    REQUIRE(hit.has_value());
    CHECK(render_value(hit->value, hit->error_bound, 15) == render_value(r.value, r.error_bound, 15));
    CHECK(render_value(hit->value, hit->error_bound, 20) == render_value(r.value, r.error_bound, 20));
    std::filesystem::remove_all(dir);
}

TEST_CASE("cache is last-write-wins, tolerates torn lines and compacts") {
    auto dir = fresh_dir("lww");
    std::filesystem::create_directories(dir);
    {
        std::ofstream out(dir / "constants.jsonl");
        out << cache_entry_to_json({"gamma()", 12, "1e0", "1e-20", "", ""}) << "\n";
        out << "{\"key\": \"trunc\n";
        out << cache_entry_to_json({"gamma()", 12, "5.772156649015328606e-1", "1e-20", "", ""}) << "\n";
    }
    ConstantCache cache(dir);
    CHECK(cache.size() == 1);
    auto hit = cache.lookup(ConstantKey::parse("gamma", 12));
    REQUIRE(hit.has_value());
    CHECK(render_value(hit->value, hit->error_bound, 10) == std::string("0.5772156649"));
    cache.compact();
    std::ifstream in(cache.file());
    int lines = 0;
    for (std::string line; std::getline(in, line);) ++lines;
    CHECK(lines == 1);
    std::filesystem::remove_all(dir);
}
