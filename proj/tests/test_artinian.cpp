#include <doctest.h>

#include "apolar/artinian.hpp"
#include "apolar/random.hpp"

using namespace apolar;

namespace {

AlgebraPtr alg(const Field& f, std::vector<std::string> vars, std::vector<std::string> monos) {
    return ArtinLocalAlgebra::from_presentation(f, MonomialQuotientPresentation::parse(std::move(vars), monos));
}

Vec named(const AlgebraPtr& a, const std::string& name) { return *a->element_for_name(name); }

bool in_socle(const ArtinLocalAlgebra& a, const Vec& v) {
    for (std::size_t i = 1; i < a.dim(); ++i)
        if (!is_zero_vec(a.multiply(a.basis_vector(i), v))) return false;
    return true;
}

}  // namespace

TEST_CASE("standard monomial bases") {
    Field f = Field::prime(101);
    auto a = alg(f, {"s", "t"}, {"s^2", "s*t", "t^2"});
    CHECK(a->basis_names() == std::vector<std::string>{"1", "s", "t"});
    auto b = alg(f, {"s", "t"}, {"s^2", "t^2"});
    CHECK(b->basis_names() == std::vector<std::string>{"1", "s", "t", "s*t"});
    auto c = alg(f, {"t"}, {"t^4"});
    CHECK(c->basis_names() == std::vector<std::string>{"1", "t", "t^2", "t^3"});
    CHECK_THROWS_AS(alg(f, {"s", "t"}, {"s^2", "s*t"}), DomainError);
}

TEST_CASE("catalog tables are associative and commutative, products match exponent sums") {
    Field f = Field::prime(101);
    for (const auto& [name, a] : algebra_catalog(f)) {
        CAPTURE(name);
        const auto& mons = a->basis_monomials();
        const auto& gens = a->presentation()->generators;
        for (std::size_t i = 0; i < a->dim(); ++i)
            for (std::size_t j = 0; j < a->dim(); ++j) {
                Vec ij = a->multiply(a->basis_vector(i), a->basis_vector(j));
                CHECK(ij == a->multiply(a->basis_vector(j), a->basis_vector(i)));
                // Oracle: the exponent sum is either a basis monomial or divisible by a generator.
                Exponent sum = mons[i];
                for (std::size_t v = 0; v < sum.size(); ++v) sum[v] += mons[j][v];
                bool killed = false;
                for (const auto& g : gens) {
                    bool div = true;
                    for (std::size_t v = 0; v < sum.size(); ++v) div = div && g[v] <= sum[v];
                    killed = killed || div;
                }
                if (killed) CHECK(is_zero_vec(ij));
                else CHECK(ij == a->basis_vector(static_cast<std::size_t>(
                                     std::find(mons.begin(), mons.end(), sum) - mons.begin())));
                for (std::size_t k = 0; k < a->dim(); ++k)
                    CHECK(a->multiply(ij, a->basis_vector(k)) ==
                          a->multiply(a->basis_vector(i), a->multiply(a->basis_vector(j), a->basis_vector(k))));
            }
    }
}

TEST_CASE("socles and the Gorenstein predicate") {
    Field f = Field::prime(101);
    auto a = alg(f, {"s", "t"}, {"s^2", "s*t", "t^2"});
    CHECK(a->socle() == Subspace::span(f, 3, {named(a, "s"), named(a, "t")}));
    CHECK_FALSE(a->is_gorenstein());
    auto b = alg(f, {"s", "t"}, {"s^2", "t^2"});
    CHECK(b->socle() == Subspace::span(f, 4, {named(b, "s*t")}));
    CHECK(b->is_gorenstein());
    for (int k = 2; k <= 5; ++k) {
        auto c = alg(f, {"t"}, {"t^" + std::to_string(k)});
        CHECK(c->socle() == Subspace::span(f, static_cast<std::size_t>(k), {c->basis_vector(static_cast<std::size_t>(k - 1))}));
        CHECK(c->is_gorenstein());
    }
    std::vector<std::string> gor;
    for (const auto& [name, x] : algebra_catalog(f)) {
        if (x->is_gorenstein()) gor.push_back(name);
        // m * soc = 0
        Subspace soc = x->socle();
        for (const auto& v : soc.basis()) CHECK(in_socle(*x, v));
    }
    CHECK(gor == std::vector<std::string>{"t2", "t3", "s2t2", "s3t3"});
}

TEST_CASE("multiply_to_socle fixtures") {
    Field f = Field::prime(101);
    auto a = alg(f, {"t"}, {"t^4"});
    CHECK(multiply_to_socle(*a, {named(a, "t"), named(a, "t^2")}) == named(a, "t^2"));
    auto b = alg(f, {"s", "t"}, {"s^2", "t^2"});
    CHECK(multiply_to_socle(*b, {named(b, "s")}) == named(b, "t"));
    CHECK(multiply_to_socle(*b, {named(b, "s*t")}) == b->unit());
    CHECK_THROWS_AS(multiply_to_socle(*b, {zero_vec(f, 4)}), DomainError);
}

TEST_CASE("multiply_to_socle postcondition on 500 seeded inputs per Gorenstein catalog algebra") {
    Field f = Field::prime(101);
    Rng rng(31);
    for (const auto& [name, a] : algebra_catalog(f)) {
        if (!a->is_gorenstein()) continue;
        CAPTURE(name);
        for (int trial = 0; trial < 500; ++trial) {
            std::size_t r = 1 + rng.below(3);
            std::vector<Vec> xs;
            for (std::size_t i = 0; i < r; ++i) {
                Vec v = rng.vec(f, a->dim());
                // Push some inputs deep into the filtration.
                for (std::size_t k = 0, n = rng.below(a->dim()); k < n && k < a->dim(); ++k) v[k] = f.zero();
                xs.push_back(v);
            }
            bool any = false;
            for (const auto& v : xs) any = any || !is_zero_vec(v);
            if (!any) continue;
            Vec b = multiply_to_socle(*a, xs);
            bool nonzero = false;
            for (const auto& v : xs) {
                Vec p = a->multiply(b, v);
                CHECK(in_socle(*a, p));
                nonzero = nonzero || !is_zero_vec(p);
            }
            CHECK(nonzero);
        }
    }
}

TEST_CASE("gorenstein_witness fixtures") {
    Field f = Field::prime(101);
    auto a = alg(f, {"s", "t"}, {"s^2", "s*t", "t^2"});
    auto w = gorenstein_witness(*a, named(a, "s"));
    CHECK(w.ideal == Subspace::span(f, 3, {named(a, "t")}));
    CHECK(w.quotient->is_gorenstein());
    CHECK(w.quotient->dim() == 2);
    CHECK(w.quotient->socle() == Subspace::span(f, 2, {w.image_of_f}));

    auto b = alg(f, {"s", "t"}, {"s^2", "t^2"});
    auto w0 = gorenstein_witness(*b, named(b, "s*t"));
    CHECK(w0.ideal.dim() == 0);
    CHECK(w0.steps == 0);
    CHECK_THROWS_AS(gorenstein_witness(*b, zero_vec(f, 4)), DomainError);
}

TEST_CASE("gorenstein_witness for s+t agrees with brute force over F_3") {
    Field f = Field::prime(3);
    auto a = alg(f, {"s", "t"}, {"s^2", "s*t", "t^2"});
    Vec fv = add(named(a, "s"), named(a, "t"));
    auto w = gorenstein_witness(*a, fv);
    // Brute force: every line L in soc = <s,t> not containing f gives a Gorenstein
    // quotient with socle <f>; the witness must be one of them.
    std::vector<Subspace> admissible;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) {
            if (x == 0 ? y != 1 : x != 1) continue;  // one representative per line
            Vec g = add(scale(f.from_int(x), named(a, "s")), scale(f.from_int(y), named(a, "t")));
            Subspace line = Subspace::span(f, 3, {g});
            if (line.contains(fv)) continue;
            AlgebraMap q = quotient_by_ideal(a, line);
            CHECK(q.target->is_gorenstein());
            CHECK(q.target->socle() == Subspace::span(f, q.target->dim(), {q.apply(fv)}));
            admissible.push_back(line);
        }
    CHECK(admissible.size() == 3);
    CHECK(std::find(admissible.begin(), admissible.end(), w.ideal) != admissible.end());
    CHECK(w.ideal == Subspace::span(f, 3, {named(a, "s")}));
}

TEST_CASE("gorenstein_witness on seeded elements of every catalog algebra") {
    Field f = Field::prime(101);
    Rng rng(4);
    for (const auto& [name, a] : algebra_catalog(f)) {
        CAPTURE(name);
        for (int trial = 0; trial < 40; ++trial) {
            Vec v = rng.vec(f, a->dim());
            for (std::size_t k = 0, n = rng.below(a->dim()); k < n; ++k) v[k] = f.zero();
            if (is_zero_vec(v)) continue;
            auto w = gorenstein_witness(*a, v);
            CHECK_FALSE(w.ideal.contains(v));
            CHECK(w.quotient->socle().dim() == 1);
            CHECK(w.quotient->socle() == Subspace::span(f, w.quotient->dim(), {w.image_of_f}));
        }
    }
}

TEST_CASE("algebra_quotient") {
    Field f = Field::prime(101);
    auto t3 = catalog_algebra(f, "t3");
    auto q = algebra_quotient(t3, {{2}});
    CHECK(q.target->same_as(*catalog_algebra(f, "t2")));
    auto s2t2 = catalog_algebra(f, "s2t2");
    auto q2 = algebra_quotient(s2t2, {{1, 1}});
    CHECK(q2.target->same_as(*catalog_algebra(f, "s2stt2")));
    // The surjection respects multiplication.
    Rng rng(1);
    for (int i = 0; i < 50; ++i) {
        Vec x = rng.vec(f, 4), y = rng.vec(f, 4);
        CHECK(q2.apply(s2t2->multiply(x, y)) == q2.target->multiply(q2.apply(x), q2.apply(y)));
    }
    CHECK_THROWS_AS(algebra_quotient(t3, {{0}}), DomainError);
}

TEST_CASE("table algebras") {
    Field f = Field::prime(101);
    auto t2 = catalog_algebra(f, "t2");
    std::vector<std::vector<Vec>> table = {{t2->basis_vector(0), t2->basis_vector(1)},
                                           {t2->basis_vector(1), zero_vec(f, 2)}};
    auto d = ArtinLocalAlgebra::from_table(f, {"1", "e"}, table);
    CHECK(d->is_gorenstein());
    CHECK(d->is_dual_numbers());
    std::vector<std::vector<Vec>> bad = {{t2->basis_vector(0), t2->basis_vector(1)},
                                         {t2->basis_vector(1), t2->basis_vector(1)}};
    CHECK_THROWS_AS(ArtinLocalAlgebra::from_table(f, {"1", "e"}, bad), DomainError);
}
