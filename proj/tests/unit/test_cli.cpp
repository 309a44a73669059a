#include "generators.hpp"

#include <steenspec_cli/app.hpp>
#include <steenspec_cli/parse.hpp>

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace steenspec;
using namespace steenspec::cli;
using gen::h;

namespace {

struct Outcome
{
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_SUITE("cli")
{
    const Truncation tr{4, 64, 64};

    TEST_CASE("parser basics")
    {
        const auto D = d_limit_ring(tr);
        CHECK(parse_poly("h(2,0)*h(1,0) + h(3,0)", &D.ring()) == h(2, 0) * h(1, 0) + h(3, 0));
        CHECK(parse_poly("h(1,0) + h(1,0)", &D.ring()).is_zero());
        CHECK(parse_poly(" ( h(1,0) + 1 ) ^ 2 ", &D.ring()) == h(1, 0).pow(2) + Poly::one());
        CHECK(parse_poly("h(1,0)*h(2,1)", &D.ring()).is_zero());
        CHECK(parse_poly("xi(2)*xi(1)^3", nullptr) == gen::xi(2) * gen::xi(1).pow(3));
        CHECK(parse_poly("0", nullptr).is_zero());
        CHECK(parse_poly_list("h(1,0), h(2,0)*h(1,0)", &D.ring()).size() == 2);
        CHECK(parse_poly_list("  ", &D.ring()).empty());
    }

    TEST_CASE("parser errors carry positions")
    {
        const auto D = d_limit_ring(tr);
        try {
            parse_poly("h(1,0) +\n  h(2,0)^0", &D.ring());
            FAIL("expected an error");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
            CHECK(e.column() == 10);
        }
        CHECK_THROWS_AS(parse_poly("xi(1)^2*(1 + h(1,0))", &D.ring()), ParseError);
        CHECK_THROWS_AS(parse_poly("h(5,0)", &D.ring()), ParseError);
        CHECK_THROWS_AS(parse_poly("h(1,0)", nullptr), ParseError);
        CHECK_THROWS_AS(parse_poly("2", &D.ring()), ParseError);
        CHECK_THROWS_AS(parse_poly("h(1,0) +", &D.ring()), ParseError);
        CHECK_THROWS_AS(parse_poly("(h(1,0)", &D.ring()), ParseError);
        CHECK_THROWS_AS(parse_poly("", &D.ring()), ParseError);
        try {
            parse_poly_list("h(1,0), h(9,9)", &D.ring());
            FAIL("expected an error");
        } catch (const ParseError& e) {
            CHECK(e.column() == 9);
        }
    }

    TEST_CASE("parse(print(p)) == p on random polynomials")
    {
        oracle::Rng rng(71);
        const auto D = d_limit_ring(tr);
        for (int n = 0; n < 1000; ++n) {
            const Poly p = D.ring().reduce(gen::poly(rng, D.ring().variables(), 5, 3, 4));
            REQUIRE(parse_poly(to_string(p), &D.ring()) == p);
            const Poly q = gen::poly(rng, gen::xis(4), 5, 3, 5);
            REQUIRE(parse_poly(to_string(q), nullptr) == q);
        }
    }

    TEST_CASE("subcommands and exit codes")
    {
        auto r = invoke({"profile-check", "--profile", "prefix=[];tail=slope1:0"});
        CHECK(r.code == 0);
        CHECK(r.out == "admissible: true\n");
        r = invoke({"coaction", "--ring", "d-limit", "--max-t", "3", "h(2,0)"});
        CHECK(r.out == "xi(1)^2 (x) h(1,0) + 1 (x) h(2,0)\n");
        r = invoke({"thick", "--ring", "d-limit", "--max-t", "3", "--x", "h(1,0),h(2,0)", "--y", "h(1,0)"});
        CHECK(r.out == "subset: true\n");
        r = invoke({"coaction", "--max-t", "3", "xi(1)^2*(1 + h(1,0))"});
        CHECK(r.code == 1);
        CHECK(r.err.find("\"kind\":\"not-ring-element\"") != std::string::npos);
        CHECK(r.err.find("\"line\":1") != std::string::npos);
        r = invoke({"sharp", "--bogus"});
        CHECK(r.code == 2);
        r = invoke({});
        CHECK(r.code == 2);
        r = invoke({"sharp", "--ring", "elementary", "--ideal", "h(1,0)"});
        CHECK(r.code == 2);
        r = invoke({"sharp", "--max-t", "3", "--ideal", "h(2,0)", "--json"});
        CHECK(r.out == "{\"sharp\":[\"h(1,0)\",\"h(2,0)\"]}\n");
        r = invoke({"profile-check", "--profile", "prefix=[3,0];tail=const:0", "--elementary"});
        CHECK(r.out == "admissible: false\nelementary: false\n");
    }

    TEST_CASE("identical invocations give identical bytes")
    {
        const std::vector<std::string> args{"enum-primes", "--max-t", "4"};
        const auto a = invoke(args), b = invoke(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }

    TEST_CASE("job files")
    {
        const std::string path = "steenspec_test_job.json";
        {
            std::ofstream f(path);
            f << R"J({"ring":{"flavor":"d-limit","max_t":3},"command":"sharp","arguments":{"ideal":"h(3,0)"}})J";
        }
        auto r = invoke({"--job", path});
        CHECK(r.code == 0);
        CHECK(r.out == "sharp: (h(1,0), h(2,0), h(2,1), h(3,0))\n");
        {
            std::ofstream f(path);
            f << R"J({"command":"sharp","surprise":true})J";
        }
        r = invoke({"--job", path});
        CHECK(r.code == 1);
        CHECK(r.err.find("bad-job") != std::string::npos);
        {
            std::ofstream f(path);
            f << R"J({"command":"conjugate","arguments":{"n":2},"json":true})J";
        }
        r = invoke({"--job", path});
        CHECK(r.out == "{\"result\":\"xi(1)^3 + xi(2)\"}\n");
        std::remove(path.c_str());
    }
}
