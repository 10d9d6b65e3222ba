#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grstwist/galois.hpp"
#include "grstwist/linalg.hpp"
#include "testutil.hpp"

#include <set>

using namespace grstwist;

TEST_CASE("field construction picks the expected parameters") {
    auto f = Field::make(2, 8);
    CHECK(f->units() == 255);
    CHECK(f->order() == 256);
    CHECK(f->describe() == "2^8/1,0,1,1,1,0,0,0,1");

    auto f5 = Field::make(5, 1);
    CHECK(f5->units() == 4);
    // eta is a primitive root mod 5
    std::set<std::uint32_t> seen;
    for (int j = 0; j < 4; ++j) seen.insert(f5->exp(j).v);
    CHECK(seen.size() == 4);
}

TEST_CASE("field construction rejects bad input") {
    CHECK_THROWS(Field::make(6, 2));   // not prime
    CHECK_THROWS(Field::make(4, 1));   // not prime
    CHECK_THROWS(Field::make(2, 21));  // 2^21 > 2^20
    CHECK_THROWS(Field::make(2, 0));
    // reducible: x^2 + 1 = (x+1)^2 over F_2
    CHECK_THROWS(Field::make(2, 2, {1, 0, 1}));
    // irreducible but not primitive: x^4 + x^3 + x^2 + x + 1 has order 5
    CHECK_THROWS(Field::make(2, 4, {1, 1, 1, 1, 1}));
    // not monic
    CHECK_THROWS(Field::make(3, 2, {1, 1, 2}));
}

TEST_CASE("basic arithmetic and log tables") {
    for (auto [p, m] : {std::pair{2, 4}, {3, 2}, {5, 2}, {7, 1}}) {
        auto f = Field::make(p, m);
        const std::uint32_t q = f->order();
        // log/antilog round trip
        for (std::uint32_t v = 1; v < q; ++v)
            CHECK(f->exp(f->log({v})) == FieldElem{v});
        CHECK_THROWS(f->log(f->zero()));
        CHECK_THROWS(f->inv(f->zero()));
        // multiplication agrees with repeated addition for small scalars
        for (std::uint32_t v = 0; v < q; ++v) {
            FieldElem x{v};
            FieldElem twice = f->add(x, x);
            CHECK(f->mul(x, f->from_base(2)) == twice);
            CHECK(f->add(x, f->neg(x)) == f->zero());
            if (v != 0) CHECK(f->mul(x, f->inv(x)) == f->one());
        }
        // eta has full order
        std::set<std::uint32_t> powers;
        for (std::uint32_t j = 0; j < f->units(); ++j) powers.insert(f->exp(j).v);
        CHECK(powers.size() == f->units());
    }
}

TEST_CASE("trace values from the definitions") {
    auto f4 = Field::make(2, 2);  // modulus x^2 + x + 1
    FieldElem omega = f4->eta();
    CHECK(f4->trace(omega) == f4->one());  // w + w^2 = 1
    CHECK(f4->trace(f4->zero()) == f4->zero());

    auto f125 = Field::make(5, 3);
    CHECK(f125->trace(f125->one()) == f125->from_base(3));  // m mod p
}

TEST_CASE("trace properties hold exhaustively on small fields") {
    for (auto [p, m] : {std::pair{2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}}) {
        auto f = Field::make(p, m);
        const std::uint32_t q = f->order();
        std::set<std::uint32_t> image;
        for (std::uint32_t v = 0; v < q; ++v) {
            FieldElem x{v};
            FieldElem t = f->trace(x);
            CHECK(f->in_base(t));
            CHECK(f->trace(f->frob(x)) == t);       // tr(x^p) = tr(x)
            CHECK(f->pow(t, p) == t);               // tr(x)^p = tr(x)
            image.insert(t.v);
            for (std::uint32_t w = 0; w < q; ++w)   // additivity
                CHECK(f->trace(f->add(x, {w})) == f->add(t, f->trace({w})));
        }
        CHECK(image.size() == static_cast<std::size_t>(p));  // surjective
    }
}

TEST_CASE("trace transitivity along subfield chains") {
    for (auto [p, m, s] : {std::tuple{2, 4, 2}, {2, 6, 2}, {2, 6, 3}, {3, 4, 2}}) {
        auto f = Field::make(p, m);
        for (std::uint32_t v = 0; v < f->order(); ++v) {
            FieldElem x{v};
            FieldElem mid = f->rel_trace(x, s);
            // trace of the subfield element down to F_p, inside the big field
            FieldElem down{0};
            FieldElem cur = mid;
            for (int i = 0; i < s; ++i) {
                down = f->add(down, cur);
                cur = f->frob(cur);
            }
            CHECK(down == f->trace(x));
        }
    }
}

TEST_CASE("relative trace kernel basis") {
    auto f16 = Field::make(2, 4);
    CHECK(f16->rel_trace_kernel_basis(4).empty());  // trace is the identity

    auto basis = f16->rel_trace_kernel_basis(2);
    REQUIRE(basis.size() == 2);
    for (auto e : basis) {
        // killed by x + x^4
        CHECK(f16->add(e, f16->frob(e, 2)) == f16->zero());
        CHECK(e.v != 0);
    }
    CHECK(basis[0] != basis[1]);
    CHECK(f16->add(basis[0], basis[1]).v != 0);  // independent over F_2

    auto f125 = Field::make(5, 3);
    auto abs_kernel = f125->rel_trace_kernel_basis(1);
    REQUIRE(abs_kernel.size() == 2);
    for (auto e : abs_kernel) CHECK(f125->trace(e) == f125->zero());
    // independence over F_5 via a rank computation in the base field
    Mat coords(f125->base_ref(), 2, 3);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 3; ++c)
            coords.at(r, c) = f125->base().from_base(f125->coeff(abs_kernel[r], c));
    CHECK(coords.rank() == 2);

    CHECK_THROWS(f16->rel_trace_kernel_basis(3));  // 3 does not divide 4
}

TEST_CASE("kernel count: every divisor, several fields") {
    for (auto [p, m] : {std::pair{2, 4}, {2, 6}, {3, 4}, {5, 2}}) {
        auto f = Field::make(p, m);
        for (int s = 1; s <= m; ++s) {
            if (m % s != 0) continue;
            auto basis = f->rel_trace_kernel_basis(s);
            CHECK(basis.size() == static_cast<std::size_t>(m - s));
            for (auto e : basis) CHECK(f->rel_trace(e, s) == f->zero());
        }
    }
}

TEST_CASE("description format round trips") {
    for (auto [p, m] : {std::pair{2, 8}, {3, 5}, {5, 3}, {5, 1}}) {
        auto f = Field::make(p, m);
        auto g = Field::parse(f->describe());
        CHECK(g->describe() == f->describe());
        CHECK(g->same(*f));
    }
    auto f = Field::parse("2^8/1,0,1,1,1,0,0,0,1");
    CHECK(f->units() == 255);
    CHECK_THROWS(Field::parse("nonsense"));
}

TEST_CASE("element text round trips") {
    auto f = Field::make(3, 3);
    CHECK(f->elem_str(f->zero()) == "0");
    CHECK(f->elem_str(f->one()) == "e0");
    testutil::Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        FieldElem x = testutil::random_elem(rng, *f);
        CHECK(f->elem_parse(f->elem_str(x)) == x);
    }
    CHECK(f->elem_parse("2") == f->from_base(2));
    CHECK_THROWS(f->elem_parse("5"));  // base integers must be < p
}

TEST_CASE("shared base field matches a standalone prime field") {
    auto f = Field::make(3, 4);
    CHECK(f->base().degree() == 1);
    CHECK(f->base().p() == 3);
    auto lone = Field::make(3, 1);
    CHECK(f->base().same(*lone));
}

TEST_CASE("log-table products match schoolbook polynomial products") {
    for (auto [p, m] : {std::pair{2, 3}, {3, 2}, {5, 2}}) {
        auto f = Field::make(p, m);
        const auto& mod = f->modulus();
        auto schoolbook = [&](FieldElem a, FieldElem b) {
            std::vector<int> prod(2 * m, 0);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j)
                    prod[i + j] = (prod[i + j] + f->coeff(a, i) * f->coeff(b, j)) % p;
            for (int d = 2 * m - 1; d >= m; --d) {
                int c = prod[d];
                if (c == 0) continue;
                prod[d] = 0;
                for (int i = 0; i < m; ++i)
                    prod[d - m + i] = ((prod[d - m + i] - c * mod[i]) % p + p * p) % p;
            }
            prod.resize(m);
            return f->from_coeffs(prod);
        };
        for (std::uint32_t a = 0; a < f->order(); ++a)
            for (std::uint32_t b = 0; b < f->order(); ++b)
                CHECK(f->mul({a}, {b}) == schoolbook({a}, {b}));
    }
}

TEST_CASE("log round trip and trace surjectivity at production sizes") {
    for (auto [p, m] : {std::pair{2, 8}, {3, 5}, {5, 3}, {2, 12}}) {
        auto f = Field::make(p, m);
        std::set<std::uint32_t> image;
        for (std::uint32_t v = 1; v < f->order(); ++v) {
            CHECK(f->exp(f->log({v})) == FieldElem{v});
            image.insert(f->trace({v}).v);
        }
        image.insert(f->trace(f->zero()).v);
        CHECK(image.size() == static_cast<std::size_t>(p));
    }
}
