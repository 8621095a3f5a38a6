#include <doctest.h>

#include <set>

#include "apolar/linalg.hpp"
#include "apolar/random.hpp"

using namespace apolar;

namespace {

ExactMatrix random_matrix(Rng& rng, const Field& f, std::size_t r, std::size_t c, bool sparse) {
    ExactMatrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (!sparse || rng.below(3) == 0) m.set(i, j, rng.scalar(f));
    return m;
}

// Counts the row space by enumeration: |rowspace| = p^rank.
std::size_t rank_by_enumeration(const ExactMatrix& m) {
    const std::uint32_t p = m.field().characteristic();
    std::set<std::vector<std::uint32_t>> seen;
    std::vector<std::uint32_t> coeff(m.rows(), 0);
    while (true) {
        std::vector<std::uint32_t> v(m.cols(), 0);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) v[j] = (v[j] + coeff[i] * m(i, j).residue()) % p;
        seen.insert(v);
        std::size_t i = 0;
        while (i < m.rows() && ++coeff[i] == p) coeff[i++] = 0;
        if (i == m.rows()) break;
    }
    std::size_t r = 0, n = 1;
    while (n < seen.size()) n *= p, ++r;
    return r;
}

}  // namespace

TEST_CASE("rank of small fixed matrices") {
    Field q = Field::rationals();
    CHECK(rank(ExactMatrix::identity(q, 3)) == 3);
    CHECK(rank(ExactMatrix(q, 2, 3)) == 0);
    CHECK(rank(ExactMatrix::from_ints(q, {{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("kernel of fixed matrices") {
    Field q = Field::rationals();
    CHECK(kernel_basis(ExactMatrix::identity(q, 3)).cols() == 0);
    ExactMatrix k = kernel_basis(ExactMatrix::from_ints(q, {{1, 2}, {2, 4}}));
    REQUIRE(k.cols() == 1);
    CHECK(k(0, 0) == q.from_int(-2));
    CHECK(k(1, 0) == q.from_int(1));
}

TEST_CASE("mixed fields are rejected") {
    ExactMatrix m(Field::prime(101), 2, 2);
    CHECK_THROWS_AS(m.set(0, 0, Field::rationals().one()), FieldMismatch);
    CHECK_THROWS_AS(m.set(0, 0, Field::prime(7).one()), FieldMismatch);
    CHECK_THROWS_AS(Field::prime(7).one() + Field::prime(11).one(), FieldMismatch);
}

TEST_CASE("seeded 5x8 over F_101: rank-nullity by multiplying back") {
    Field f = Field::prime(101);
    Rng rng(7);
    ExactMatrix m = random_matrix(rng, f, 5, 8, false);
    ExactMatrix k = kernel_basis(m);
    CHECK(k.cols() == 8 - rank(m));
    CHECK((m * k).is_zero());
}

TEST_CASE("solve_membership fixtures") {
    Field f = Field::prime(101);
    ExactMatrix s = ExactMatrix::from_ints(f, {{1, 0}, {2, 1}, {0, 3}});
    auto c = solve_membership(s.column(0), s);
    REQUIRE(c);
    CHECK((*c)[0].is_one());
    CHECK((*c)[1].is_zero());
    auto z = solve_membership(zero_vec(f, 3), s);
    REQUIRE(z);
    CHECK(is_zero_vec(*z));

    Rng rng(11);
    int outside = 0;
    for (int trial = 0; trial < 50; ++trial) {
        ExactMatrix a = random_matrix(rng, f, 6, 3, false);
        Vec v = rng.vec(f, 6);
        auto sol = solve_membership(v, a);
        ExactMatrix aug(f, 6, 4);
        for (std::size_t i = 0; i < 6; ++i) {
            for (std::size_t j = 0; j < 3; ++j) aug.set(i, j, a(i, j));
            aug.set(i, 3, v[i]);
        }
        bool increases = rank(aug) > rank(a);
        CHECK(sol.has_value() == !increases);
        if (sol) CHECK(a * *sol == v);
        else ++outside;
    }
    CHECK(outside > 0);
}

TEST_CASE("1000 seeded matrices: rank-nullity, transpose rank, exact zero kernels") {
    Rng rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
        Field f = trial % 4 == 0 ? Field::rationals() : Field::prime(trial % 4 == 1 ? 3 : 101);
        std::size_t r = 1 + rng.below(7), c = 1 + rng.below(7);
        ExactMatrix m = random_matrix(rng, f, r, c, trial % 2 == 0);
        std::size_t rk = rank(m);
        ExactMatrix k = kernel_basis(m);
        CHECK(rk == rank(m.transpose()));
        CHECK(c == rk + k.cols());
        CHECK((m * k).is_zero());
        CHECK(rank(k) == k.cols());
    }
}

TEST_CASE("rank agrees with row-space enumeration over F_3") {
    Rng rng(5);
    Field f = Field::prime(3);
    for (int trial = 0; trial < 200; ++trial) {
        ExactMatrix m = random_matrix(rng, f, 1 + rng.below(4), 1 + rng.below(5), trial % 2 == 0);
        CHECK(rank(m) == rank_by_enumeration(m));
    }
}

TEST_CASE("rank is independent of row and column order") {
    Rng rng(9);
    Field f = Field::prime(101);
    for (int trial = 0; trial < 100; ++trial) {
        ExactMatrix m = random_matrix(rng, f, 5, 6, true);
        ExactMatrix p(f, 5, 6);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 6; ++j) p.set(4 - i, (j + 2) % 6, m(i, j));
        CHECK(rank(m) == rank(p));
    }
}

TEST_CASE("subspace canonical form, sum and intersection") {
    Field f = Field::rationals();
    Subspace a = Subspace::span(f, 3, {{f.from_int(1), f.from_int(1), f.zero()}, {f.zero(), f.from_int(2), f.zero()}});
    Subspace b = Subspace::span(f, 3, {{f.from_int(3), f.zero(), f.zero()}, {f.zero(), f.one(), f.zero()}});
    CHECK(a == b);
    Subspace c = Subspace::span(f, 3, {{f.zero(), f.one(), f.one()}});
    CHECK(a.intersect(c).dim() == 0);
    CHECK(a.sum(c).dim() == 3);
    Subspace d = Subspace::span(f, 3, {{f.one(), f.one(), f.one()}, {f.zero(), f.zero(), f.one()}});
    Subspace i = a.intersect(d);
    CHECK(i.dim() == 1);
    CHECK(i.contains(Vec{f.one(), f.one(), f.zero()}));
    CHECK((a.equations() * a.basis_matrix().transpose()).is_zero());
}

TEST_CASE("rational field arithmetic is exact") {
    Field q = Field::rationals();
    Scalar third = q.one() / q.from_int(3);
    CHECK(third * q.from_int(3) == q.one());
    CHECK(third.to_string() == "1/3");
    Field p = Field::prime(101);
    CHECK(p.from_rational(Rational(1) / 3) * p.from_int(3) == p.one());
    CHECK(p.from_int(-1).to_signed_string() == "-1");
    CHECK_THROWS(Field::prime(100));
    CHECK(Field::parse("p=5").characteristic() == 5);
    CHECK(Field::parse("q").is_rational());
}
