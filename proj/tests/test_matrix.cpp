#include <catch2/catch_amalgamated.hpp>

#include "triwass/matrix.hpp"
#include "triwass/random.hpp"

using namespace triwass;

TEST_CASE("field axioms hold in GF(2), GF(5), GF(32003)") {
    for (std::uint32_t q : {2u, 5u, 32003u}) {
        Rng rng(q);
        for (int t = 0; t < 100; ++t) {
            Fp a(rng.below(q), q), b(rng.below(q), q), c(rng.below(q), q);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (-a) == Fp(0, q));
            if (!b.is_zero()) {
                CHECK(b * b.inverse() == Fp(1, q));
                CHECK(a / b * b == a);
            }
        }
        CHECK(is_prime_u32(q));
    }
    CHECK(!is_prime_u32(32001));
    CHECK_THROWS_AS(checked_prime(10), input_error);
}

TEST_CASE("rank on pinned cases") {
    CHECK(Matrix(0, 0, 32003).rank() == 0);
    CHECK(Matrix::identity(4, 32003).rank() == 4);
    CHECK(Matrix::from_rows({{1, 2}, {2, 4}}, 32003).rank() == 1);
}

TEST_CASE("kernel basis on pinned cases") {
    CHECK(Matrix::identity(3, 32003).kernel_basis().cols() == 0);
    Matrix z(2, 2, 32003);
    CHECK(z.kernel_basis().cols() == 2);

    Matrix m = Matrix::from_rows({{1, 1}}, 32003);
    Matrix k = m.kernel_basis();
    REQUIRE(k.cols() == 1);
    CHECK((m * k).is_zero());
    // proportional to (1, -1)
    CHECK(fp_detail::add_mod(k.at(0, 0), k.at(1, 0), 32003) == 0);
    CHECK(k.at(0, 0) != 0);
}

TEST_CASE("cokernel projection on pinned cases") {
    CHECK(Matrix::identity(3, 32003).cokernel_projection().rows() == 0);
    Matrix z(2, 2, 32003);
    CHECK(z.cokernel_projection() == Matrix::identity(2, 32003));

    Matrix m = Matrix::from_rows({{1}, {1}}, 32003);
    Matrix p = m.cokernel_projection();
    REQUIRE(p.rows() == 1);
    CHECK((p * m).is_zero());
    CHECK(p.rank() == 1);
}

TEST_CASE("solve on pinned cases") {
    Matrix b = Matrix::from_rows({{5}, {7}}, 32003);
    auto x = Matrix::identity(2, 32003).solve(b);
    REQUIRE(x);
    CHECK(*x == b);

    Matrix z(2, 1, 32003);
    CHECK(!z.solve(b).has_value());

    Matrix m = Matrix::from_rows({{1, 1}}, 32003);
    Matrix rhs = Matrix::from_rows({{2}}, 32003);
    auto y = m.solve(rhs);
    REQUIRE(y);
    CHECK(m * *y == rhs);

    CHECK_THROWS_AS(m.solve(b), input_error);  // row count mismatch
}

TEST_CASE("rank-nullity, kernel and cokernel identities on random matrices") {
    for (std::uint32_t q : {2u, 32003u}) {
        Rng rng(55 + q);
        for (int t = 0; t < 80; ++t) {
            int r = rng.range(0, 5), c = rng.range(0, 5);
            Matrix m = random_matrix(r, c, q, rng);
            Matrix k = m.kernel_basis();
            CHECK(m.rank() + k.cols() == c);
            CHECK((m * k).is_zero());
            CHECK(k.rank() == k.cols());
            Matrix p = m.cokernel_projection();
            CHECK((p * m).is_zero());
            CHECK(p.rank() == p.rows());
            CHECK(p.rows() == r - m.rank());
            // consistent systems solve exactly
            Matrix x0 = random_matrix(c, 2, q, rng);
            auto sol = m.solve(m * x0);
            REQUIRE(sol);
            CHECK(m * *sol == m * x0);
            CHECK(m.rank() == m.transpose().rank());
        }
    }
}
