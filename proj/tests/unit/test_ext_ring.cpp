#include "generators.hpp"

#include <steenspec/error.hpp>
#include <steenspec/ext_ring.hpp>

#include <doctest.h>

using namespace steenspec;
using gen::h;

TEST_SUITE("ext-rings")
{
    TEST_CASE("elementary Ext rings are polynomial on the alive h(t,s)")
    {
        const Truncation tr{4, 64, 64};
        const auto E0 = ext_of_elementary(make_E(0), tr);
        CHECK(E0.ring().variables() ==
              std::vector<Generator>{Generator::h(1, 0), Generator::h(2, 0), Generator::h(3, 0), Generator::h(4, 0)});
        CHECK(E0.ring().relations().empty());
        const auto E1 = ext_of_elementary(make_E(1), tr);
        // n = (0, 2, 2, 2): h(2,0), h(2,1), h(3,0), h(3,1), h(4,0), h(4,1)
        CHECK(E1.ring().variables().size() == 6);
        CHECK(!E1.ring().has_variable(Generator::h(1, 0)));
        CHECK_THROWS_AS(ext_of_elementary(make_D(), tr), Error);
    }

    TEST_CASE("the D-limit ring")
    {
        const auto D = d_limit_ring(Truncation{4, 64, 64});
        CHECK(D.ring().variables().size() == 10);
        // brute force: ordered pairs (t,s),(v,u) with t <= u, as unordered monomials
        std::set<std::string> expect;
        for (auto a : gen::hs(4))
            for (auto b : gen::hs(4))
                if (a.t() <= b.s())
                    expect.insert(to_string(Monomial(a) * Monomial(b)));
        std::set<std::string> got;
        for (const auto& r : D.ring().relations())
            got.insert(to_string(r));
        CHECK(got == expect);
        CHECK(D.ring().is_zero_monomial(Monomial{{Generator::h(1, 0), 1}, {Generator::h(2, 1), 1}}));
        CHECK(!D.ring().is_zero_monomial(Monomial{{Generator::h(1, 0), 1}, {Generator::h(2, 0), 1}}));
        CHECK(D.flavor() == ExtFlavor::DLimit);
    }

    TEST_CASE("ring descriptors")
    {
        const Truncation bounds{4, 30, 30};
        const auto D = ring_from_descriptor(R"({"flavor":"d-limit","max_t":3})", bounds);
        CHECK(D.ring().variables().size() == 6);
        CHECK(D.truncation().max_internal == 30);
        CHECK(ring_descriptor(D) == R"({"flavor":"d-limit","max_t":3})");
        const auto E = ring_from_descriptor(R"({"flavor":"elementary","profile":"prefix=[];tail=const:1","max_t":2})", bounds);
        CHECK(ring_descriptor(E) == R"({"flavor":"elementary","profile":"prefix=[];tail=const:1","max_t":2})");
        CHECK(ring_from_descriptor(ring_descriptor(E), bounds) == E);
        CHECK_THROWS_AS(ring_from_descriptor(R"({"flavor":"d-limit","max_t":3,"x":1})", bounds), Error);
        CHECK_THROWS_AS(ring_from_descriptor(R"({"flavor":"weird","max_t":3})", bounds), Error);
        CHECK_THROWS_AS(ring_from_descriptor("{", bounds), Error);
    }

    TEST_CASE("restriction kills dead generators and respects relations")
    {
        const Truncation tr{4, 64, 64};
        const auto D = d_limit_ring(tr);
        const auto res = restriction(D, make_E(0));
        CHECK(res.image(Generator::h(3, 0)).has_value());
        CHECK(!res.image(Generator::h(3, 1)).has_value());
        CHECK(res.apply(h(2, 0) * h(1, 0) + h(2, 1)) == h(2, 0) * h(1, 0));
        // every D relation maps to zero: at most one factor of h(t,s)h(v,u), t <= u, is alive in E(m)
        for (int m = 0; m <= 3; ++m) {
            const auto r = restriction(D, make_E(m));
            for (const auto& rel : D.ring().relations())
                REQUIRE(r.apply(Poly(rel)).is_zero());
        }
        CHECK_THROWS_AS(res.image(Generator::h(5, 0)), Error);
    }

    TEST_CASE("direct limit of the E_i")
    {
        const Truncation tr{4, 64, 64};
        for (int m = 0; m <= 2; ++m)
            for (int i = 0; i <= 3; ++i)
                for (int j = i; j <= 4; ++j)
                    CHECK(direct_limit_consistency(make_E(m), i, j, tr));
    }
}
