#include <doctest.h>

#include "grstwist/linalg.hpp"
#include "testutil.hpp"

using namespace grstwist;

TEST_CASE("rref canonical form") {
    auto f = Field::make(2, 1);
    Mat m(f, 3, 4);
    // rows: 1101, 0110, 1011 -> rank 2 (row3 = row1 + row2)
    auto set = [&](std::size_t r, std::initializer_list<int> bits) {
        std::size_t c = 0;
        for (int b : bits) m.at(r, c++) = f->from_base(b);
    };
    set(0, {1, 1, 0, 1});
    set(1, {0, 1, 1, 0});
    set(2, {1, 0, 1, 1});
    Mat r = m.rref();
    CHECK(r.rows() == 2);
    CHECK(m.rank() == 2);
    // pivots normalized and eliminated above
    CHECK(r.at(0, 0) == f->one());
    CHECK(r.at(1, 1) == f->one());
    CHECK(r.at(0, 1) == f->zero());
}

TEST_CASE("rank-nullity and orthogonality") {
    testutil::Rng rng(101);
    for (auto [p, m] : {std::pair{2, 1}, {3, 1}, {2, 3}, {3, 2}}) {
        auto f = Field::make(p, m);
        for (int trial = 0; trial < 20; ++trial) {
            std::size_t rows = 1 + rng.below(6), cols = 1 + rng.below(8);
            Mat a = testutil::random_matrix(rng, f, rows, cols);
            Mat ns = a.nullspace();
            CHECK(a.rank() + ns.rows() == cols);
            CHECK(ns.rank() == ns.rows());
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < ns.rows(); ++j)
                    CHECK(dot(*f, a.row(i), ns.row(j)) == f->zero());
        }
    }
}

TEST_CASE("nullspace of extreme shapes") {
    auto f = Field::make(3, 1);
    Mat zero_rows(f, 0, 4);
    CHECK(zero_rows.nullspace().rows() == 4);  // everything is in the kernel
    Mat id(f, 3, 3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = f->one();
    CHECK(id.nullspace().rows() == 0);
}

TEST_CASE("row space comparison") {
    testutil::Rng rng(103);
    auto f = Field::make(2, 2);
    Mat a = testutil::random_matrix(rng, f, 3, 6);
    Mat shuffled(f, 3, 6);
    shuffled.set_row(0, a.row(2));
    shuffled.set_row(1, a.row(0));
    shuffled.set_row(2, a.row(1));
    CHECK(a.same_row_space(shuffled));
    // scaling rows keeps the row space
    Mat scaled = a;
    for (std::size_t c = 0; c < 6; ++c) scaled.at(0, c) = f->mul(f->eta(), scaled.at(0, c));
    CHECK(a.same_row_space(scaled));
    Mat b = testutil::random_matrix(rng, f, 3, 6);
    if (!a.rref().same_row_space(b.rref())) CHECK_FALSE(a.same_row_space(b));
}

TEST_CASE("select_cols and vstack") {
    auto f = Field::make(5, 1);
    Mat a(f, 2, 4);
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 4; ++c) a.at(r, c) = f->from_base(static_cast<int>(r + c));
    Mat sel = a.select_cols({0, 2});
    CHECK(sel.cols() == 2);
    CHECK(sel.at(1, 1) == f->from_base(3));
    Mat st = a.vstack(a);
    CHECK(st.rows() == 4);
    CHECK(st.rank() == a.rank());
    CHECK_THROWS(a.select_cols({7}));
}
