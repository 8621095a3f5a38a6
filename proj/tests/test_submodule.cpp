#include <doctest.h>

#include "apolar/random.hpp"
#include "apolar/submodule.hpp"

using namespace apolar;

namespace {

// Element of A (x) W from its W-coordinates, each an element of A.
Vec tensor(const ArtinLocalAlgebra& a, const std::vector<Vec>& coords) {
    const std::size_t w = coords.size();
    Vec v = zero_vec(a.field(), a.dim() * w);
    for (std::size_t j = 0; j < w; ++j)
        for (std::size_t i = 0; i < a.dim(); ++i) v[i * w + j] = coords[j][i];
    return v;
}

std::vector<Vec> coords_of(const ArtinLocalAlgebra& a, std::size_t w, const Vec& v) {
    std::vector<Vec> out(w, zero_vec(a.field(), a.dim()));
    for (std::size_t j = 0; j < w; ++j)
        for (std::size_t i = 0; i < a.dim(); ++i) out[j][i] = v[i * w + j];
    return out;
}

Vec pairing(const ArtinLocalAlgebra& a, std::size_t w, const Vec& phi, const Vec& m) {
    auto p = coords_of(a, w, phi), q = coords_of(a, w, m);
    Vec out = zero_vec(a.field(), a.dim());
    for (std::size_t j = 0; j < w; ++j) out = add(out, a.multiply(p[j], q[j]));
    return out;
}

Vec element(const AlgebraPtr& a, const std::string& name) { return *a->element_for_name(name); }

SubmoduleOfFree random_submodule(Rng& rng, const AlgebraPtr& a, std::size_t w) {
    std::vector<Vec> gens;
    std::size_t n = rng.below(3) + (rng.below(4) == 0 ? 0 : 1);
    for (std::size_t g = 0; g < n; ++g) {
        std::vector<Vec> c;
        for (std::size_t j = 0; j < w; ++j) {
            Vec x = rng.vec(a->field(), a->dim());
            if (rng.coin()) x[0] = a->field().zero();
            c.push_back(x);
        }
        gens.push_back(tensor(*a, c));
    }
    return a_span(a, w, gens);
}

std::size_t dim_mM(const SubmoduleOfFree& m) {
    const auto& a = *m.algebra();
    std::vector<Vec> prods;
    for (std::size_t i = 1; i < a.dim(); ++i)
        for (const auto& v : m.space().basis()) prods.push_back(act(a, m.rank_w(), a.basis_vector(i), v));
    return Subspace::span(a.field(), m.space().ambient(), prods).dim();
}

}  // namespace

TEST_CASE("a_span fixtures") {
    Field f = Field::prime(101);
    auto a = catalog_algebra(f, "s2stt2");
    auto zero = zero_vec(f, 3);
    CHECK(a_span(a, 2, {tensor(*a, {a->unit(), zero})}).dim() == 3);
    CHECK(a_span(a, 2, {tensor(*a, {element(a, "s"), zero}), tensor(*a, {zero, element(a, "t")})}).dim() == 2);
    CHECK(a_span(a, 2, {}).dim() == 0);
    CHECK_THROWS_AS(SubmoduleOfFree(a, 1, Subspace::span(f, 3, {a->unit()})), DomainError);
}

TEST_CASE("double perp fails over the non-Gorenstein algebra") {
    Field f = Field::prime(101);
    auto a = catalog_algebra(f, "s2stt2");
    Vec s = element(a, "s"), t = element(a, "t"), z = zero_vec(f, 3);
    SubmoduleOfFree m = a_span(a, 2, {tensor(*a, {s, z}), tensor(*a, {z, t})});
    SubmoduleOfFree p = perp(m);
    SubmoduleOfFree expected =
        a_span(a, 2, {tensor(*a, {s, z}), tensor(*a, {t, z}), tensor(*a, {z, s}), tensor(*a, {z, t})});
    CHECK(p == expected);
    SubmoduleOfFree pp = perp(p);
    CHECK(pp == expected);
    CHECK(pp.contains(m));
    CHECK_FALSE(pp == m);
    CHECK(perp(SubmoduleOfFree::zero(a, 2)) == SubmoduleOfFree::whole(a, 2));
}

TEST_CASE("double perp over s2t2 for A*(s,0)") {
    Field f = Field::prime(101);
    auto a = catalog_algebra(f, "s2t2");
    Vec z = zero_vec(f, 4);
    SubmoduleOfFree m = a_span(a, 2, {tensor(*a, {element(a, "s"), z})});
    CHECK(m.dim() == 2);
    CHECK(m.space() == Subspace::span(f, 8, {tensor(*a, {element(a, "s"), z}), tensor(*a, {element(a, "s*t"), z})}));
    CHECK(perp(perp(m)) == m);
}

TEST_CASE("perp agrees with exhaustive enumeration over F_3") {
    Field f = Field::prime(3);
    Rng rng(21);
    for (const char* name : {"t2", "s2stt2", "t3"}) {
        auto a = catalog_algebra(f, name);
        const std::size_t w = 2, n = a->dim() * w;
        for (int trial = 0; trial < 8; ++trial) {
            SubmoduleOfFree m = random_submodule(rng, a, w);
            SubmoduleOfFree p = perp(m);
            std::size_t count = 0;
            Vec v = zero_vec(f, n);
            std::vector<int> digits(n, 0);
            while (true) {
                for (std::size_t i = 0; i < n; ++i) v[i] = f.from_int(digits[i]);
                bool kills = true;
                for (const auto& b : m.space().basis()) kills = kills && is_zero_vec(pairing(*a, w, v, b));
                if (kills) {
                    ++count;
                    CHECK(p.space().contains(v));
                }
                std::size_t i = 0;
                while (i < n && ++digits[i] == 3) digits[i++] = 0;
                if (i == n) break;
            }
            std::size_t expect = 1;
            for (std::size_t k = 0; k < p.dim(); ++k) expect *= 3;
            CHECK(count == expect);
        }
    }
}

TEST_CASE("perp is inclusion reversing and M is inside its double perp") {
    Field f = Field::prime(101);
    Rng rng(13);
    for (const auto& [name, a] : algebra_catalog(f)) {
        CAPTURE(name);
        for (int trial = 0; trial < 30; ++trial) {
            SubmoduleOfFree m = random_submodule(rng, a, 3);
            SubmoduleOfFree m2 = a_span(a, 3, [&] {
                auto b = m.space().basis();
                auto extra = random_submodule(rng, a, 3).space().basis();
                b.insert(b.end(), extra.begin(), extra.end());
                return b;
            }());
            CHECK(m2.contains(m));
            CHECK(perp(m).contains(perp(m2)));
            CHECK(perp(perp(m)).contains(m));
        }
    }
}

TEST_CASE("double perp is the identity over Gorenstein catalog algebras (200 seeded each)") {
    Field f = Field::prime(101);
    Rng rng(200);
    for (const auto& [name, a] : algebra_catalog(f)) {
        if (!a->is_gorenstein()) continue;
        CAPTURE(name);
        for (int trial = 0; trial < 200; ++trial) {
            std::size_t w = 1 + rng.below(3);
            SubmoduleOfFree m = random_submodule(rng, a, w);
            SubmoduleOfFree p = perp(m);
            CHECK(p.dim() == a->dim() * w - m.dim());
            CHECK(perp(p) == m);
        }
    }
}

TEST_CASE("double perp of a cyclic module with unit residue") {
    Field f = Field::prime(101);
    Rng rng(17);
    for (const auto& [name, a] : algebra_catalog(f)) {
        CAPTURE(name);
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<Vec> c;
            for (int j = 0; j < 3; ++j) c.push_back(rng.vec(f, a->dim()));
            if (c[0][0].is_zero()) c[0][0] = f.one();
            SubmoduleOfFree m = a_span(a, 3, {tensor(*a, c)});
            CHECK(perp(perp(m)) == m);
        }
    }
}

TEST_CASE("freeness report fixtures") {
    Field f = Field::prime(101);
    auto a = catalog_algebra(f, "s2t2");
    Vec st = element(a, "s*t"), z = zero_vec(f, 4);
    auto free1 = freeness_report(a_span(a, 2, {tensor(*a, {a->unit(), z})}), st);
    CHECK(free1.dim_sM == 1);
    CHECK(free1.dim_M_over_mM == 1);
    CHECK(free1.is_free);
    auto nonfree = freeness_report(a_span(a, 2, {tensor(*a, {element(a, "s"), z})}), st);
    CHECK(nonfree.dim_sM == 0);
    CHECK(nonfree.dim_M_over_mM == 1);
    CHECK_FALSE(nonfree.is_free);
    auto whole = freeness_report(SubmoduleOfFree::whole(a, 3), st);
    CHECK(whole.is_free);
    CHECK(whole.dim_sM == 3);
    CHECK(whole.free_rank == 3);

    auto ng = catalog_algebra(f, "s2stt2");
    CHECK_THROWS_AS(freeness_report(SubmoduleOfFree::whole(ng, 1), element(ng, "s")), DomainError);
    CHECK_THROWS_AS(freeness_report(SubmoduleOfFree::whole(a, 1), element(a, "s")), DomainError);
}

TEST_CASE("freeness criteria agree with each other and with the rank count") {
    Field f = Field::prime(101);
    Rng rng(99);
    for (const auto& [name, a] : algebra_catalog(f)) {
        if (!a->is_gorenstein()) continue;
        CAPTURE(name);
        Vec s = a->socle_generator();
        int frees = 0;
        for (int trial = 0; trial < 150; ++trial) {
            SubmoduleOfFree m = random_submodule(rng, a, 1 + rng.below(3));
            auto r = freeness_report(m, s);
            std::size_t quotient = m.dim() - dim_mM(m);
            CHECK(r.dim_M_over_mM == quotient);
            bool free_by_count = m.dim() == quotient * a->dim();
            CHECK(r.is_free == free_by_count);
            CHECK(r.socle_criterion == r.is_free);
            CHECK(r.criteria_agree);
            CHECK(is_free_local(m) == free_by_count);
            frees += r.is_free;
        }
        CHECK(frees > 0);
        CHECK(frees < 150);
    }
}

TEST_CASE("partial_t fixtures and the dimension identity") {
    Field f = Field::prime(101);
    auto a = catalog_algebra(f, "t2");
    Vec t = element(a, "t"), z = zero_vec(f, 2);
    Vec e1 = a->unit();

    auto r = partial_t(a_span(a, 2, {tensor(*a, {e1, t})}));
    CHECK(r.partial == Subspace::whole(f, 2));
    CHECK(r.constant_part.dim() == 0);

    auto tw = a_span(a, 2, {tensor(*a, {t, z}), tensor(*a, {z, t})});
    auto r2 = partial_t(tw);
    CHECK(r2.partial == Subspace::whole(f, 2));
    CHECK(r2.constant_part.dim() == 0);

    auto r3 = partial_t(SubmoduleOfFree::whole(a, 2));
    CHECK(r3.partial.dim() == 2);
    CHECK(r3.constant_part.dim() == 2);

    CHECK_THROWS_AS(partial_t(SubmoduleOfFree::whole(catalog_algebra(f, "t3"), 1)), DomainError);

    Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t w = 1 + rng.below(4);
        SubmoduleOfFree m = random_submodule(rng, a, w);
        auto p = partial_t(m);
        CHECK(m.dim() == p.partial.dim() + p.constant_part.dim());
        // M/(M cap tW) embeds in dM: every residue of M lies in dM.
        CHECK(p.partial.contains(residue_image(*a, w, m.space())));
        // Direct check of the definition on the basis: phi + t phi' in M gives phi' in dM.
        for (const auto& v : m.space().basis()) {
            Vec tail(v.begin() + static_cast<long>(w), v.end());
            CHECK(p.partial.contains(tail));
        }
    }
}
