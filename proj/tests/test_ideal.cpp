#include <doctest.h>

#include "apolar/ideal.hpp"
#include "apolar/random.hpp"

using namespace apolar;

namespace {

PolyOverA random_form(Rng& rng, const AlgebraPtr& a, int nv, int deg, bool in_max) {
    PolyOverA p(a, nv);
    for (const auto& e : monomial_basis(nv, deg).monomials)
        if (rng.coin()) {
            Vec c = rng.vec(a->field(), a->dim());
            if (in_max) c[0] = a->field().zero();
            p.add_term(e, c);
        }
    return p;
}

GradedIdeal random_ideal(Rng& rng, const AlgebraPtr& a, int nv, int cap) {
    std::vector<PolyOverA> gens;
    std::size_t n = 1 + rng.below(3);
    for (std::size_t g = 0; g < n; ++g) {
        int deg = 1 + static_cast<int>(rng.below(2));
        PolyOverA p = random_form(rng, a, nv, deg, rng.below(3) == 0);
        if (!p.is_zero()) gens.push_back(p);
    }
    return ideal_generate(a, nv, gens, cap);
}

GradedIdeal random_linear_ideal(Rng& rng, const AlgebraPtr& a, int nv, int cap) {
    std::vector<PolyOverA> gens;
    if (a->dim() > 1 && rng.below(3) == 0) gens.push_back(random_form(rng, a, nv, 0, true));
    std::size_t n = 1 + rng.below(2);
    for (std::size_t g = 0; g < n; ++g) gens.push_back(random_form(rng, a, nv, 1, rng.coin()));
    std::erase_if(gens, [](const PolyOverA& p) { return p.is_zero(); });
    return ideal_generate(a, nv, gens, cap);
}

bool divides(const Exponent& g, const Exponent& e) {
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g[i] > e[i]) return false;
    return true;
}

bool in_monomial_ideal(const std::vector<Exponent>& gens, const Exponent& e) {
    for (const auto& g : gens)
        if (divides(g, e)) return true;
    return false;
}

GradedIdeal monomial_ideal(const AlgebraPtr& k, int nv, const std::vector<Exponent>& gens, int cap) {
    std::vector<PolyOverA> polys;
    for (const auto& g : gens) polys.push_back(PolyOverA::monomial(k, nv, g, k->unit()));
    return ideal_generate(k, nv, polys, cap);
}

// Pieces spanned by the monomials of degree k satisfying the predicate (A = k).
template <typename Pred>
std::vector<Subspace> monomial_pieces(const Field& f, int nv, int cap, Pred pred) {
    std::vector<Subspace> out;
    for (int k = 0; k <= cap; ++k) {
        const auto& mb = monomial_basis(nv, k);
        std::vector<Vec> vs;
        for (std::size_t i = 0; i < mb.size(); ++i)
            if (pred(mb.monomials[i])) {
                Vec v = zero_vec(f, mb.size());
                v[i] = f.one();
                vs.push_back(v);
            }
        out.push_back(Subspace::span(f, mb.size(), vs));
    }
    return out;
}

// Maximal h(k+1) over quotients with h(k) = h, computed from the lex segment:
// the ideal spanned in degree k by the first N_k - h monomials in lex order.
std::size_t lex_segment_growth(std::size_t h, int k, int nv) {
    const auto& mk = monomial_basis(nv, k);
    const auto& mk1 = monomial_basis(nv, k + 1);
    std::vector<Exponent> seg(mk.monomials.begin(), mk.monomials.end() - static_cast<long>(h));
    std::size_t inside = 0;
    for (const auto& e : mk1.monomials) inside += in_monomial_ideal(seg, e);
    return mk1.size() - inside;
}

Vec named(const AlgebraPtr& a, const std::string& n) { return *a->element_for_name(n); }

}  // namespace

TEST_CASE("ideal_generate fixtures") {
    Field f = Field::prime(101);
    auto k = ArtinLocalAlgebra::ground(f);
    GradedIdeal irr = ideal_generate(k, 3, {parse_operator(k, "a0", 3), parse_operator(k, "a1", 3), parse_operator(k, "a2", 3)}, 4);
    CHECK(irr.piece(0).dim() == 0);
    for (int d = 1; d <= 4; ++d) CHECK(irr.piece(d).dim() == irr.ambient_dim(static_cast<int>(d)));

    GradedIdeal ab = ideal_generate(k, 2, {parse_operator(k, "a0*a1", 2)}, 6);
    CHECK(hilbert_function(ab).h == std::vector<std::size_t>{1, 2, 2, 2, 2, 2, 2});

    auto t2 = catalog_algebra(f, "t2");
    GradedIdeal ta = ideal_generate(t2, 1, {parse_operator(t2, "t*a0", 1)}, 5);
    CHECK(ta.piece(0).dim() == 0);
    for (int d = 1; d <= 5; ++d) {
        Exponent e{d};
        CHECK(ta.piece(d) == Subspace::span(f, 2, {PolyOverA::monomial(t2, 1, e, named(t2, "t")).to_vector(d)}));
    }
    CHECK_THROWS_AS(ideal_generate(k, 2, {parse_operator(k, "a0 + a1^2", 2)}, 4), DomainError);
    CHECK(ab.contains(parse_operator(k, "a0^2*a1 - 3*a0*a1^2", 2)));
    CHECK_FALSE(ab.contains(parse_operator(k, "a0^2", 2)));
}

TEST_CASE("Hilbert function of monomial ideals matches the staircase count") {
    Field f = Field::prime(101);
    auto k = ArtinLocalAlgebra::ground(f);
    Rng rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        int nv = 2 + static_cast<int>(rng.below(2));
        std::vector<Exponent> gens;
        for (std::size_t g = 0, n = 1 + rng.below(3); g < n; ++g) {
            int deg = 1 + static_cast<int>(rng.below(3));
            const auto& mb = monomial_basis(nv, deg).monomials;
            gens.push_back(mb[rng.below(mb.size())]);
        }
        GradedIdeal id = monomial_ideal(k, nv, gens, 6);
        auto h = hilbert_function(id).h;
        for (int d = 0; d <= 6; ++d) {
            std::size_t outside = 0;
            for (const auto& e : monomial_basis(nv, d).monomials) outside += !in_monomial_ideal(gens, e);
            CHECK(h[static_cast<std::size_t>(d)] == outside);
        }
    }
}

TEST_CASE("colon by the irrelevant ideal") {
    Field f = Field::prime(101);
    auto k = ArtinLocalAlgebra::ground(f);
    GradedIdeal n2 = ideal_generate(k, 2, {parse_operator(k, "a0^2", 2), parse_operator(k, "a0*a1", 2), parse_operator(k, "a1^2", 2)}, 5);
    GradedIdeal n1 = ideal_generate(k, 2, {parse_operator(k, "a0", 2), parse_operator(k, "a1", 2)}, 4);
    CHECK(colon_irrelevant(n2) == n1);
    GradedIdeal pt = ideal_generate(k, 3, {parse_operator(k, "a1", 3), parse_operator(k, "a2", 3)}, 5);
    CHECK(colon_irrelevant(pt) == pt.truncate(4));
    CHECK_THROWS_AS(colon_irrelevant(GradedIdeal::zero(k, 2, 0)), DomainError);
}

TEST_CASE("colon agrees with its definition by enumeration over F_3") {
    Field f = Field::prime(3);
    auto t2 = catalog_algebra(f, "t2");
    Rng rng(3);
    for (int trial = 0; trial < 6; ++trial) {
        GradedIdeal id = random_ideal(rng, t2, 2, 3);
        GradedIdeal col = colon_irrelevant(id);
        for (int d = 0; d <= 1; ++d) {
            const std::size_t n = id.ambient_dim(d);
            std::vector<int> digits(n, 0);
            std::size_t count = 0;
            while (true) {
                Vec v = zero_vec(f, n);
                for (std::size_t i = 0; i < n; ++i) v[i] = f.from_int(digits[i]);
                bool in = true;
                for (int j = 0; j < 2; ++j) in = in && id.piece(d + 1).contains(times_variable(2, 2, d, j, v));
                CHECK(col.piece(d).contains(v) == in);
                count += in;
                std::size_t i = 0;
                while (i < n && ++digits[i] == 3) digits[i++] = 0;
                if (i == n) break;
            }
            std::size_t expect = 1;
            for (std::size_t i = 0; i < col.piece(d).dim(); ++i) expect *= 3;
            CHECK(count == expect);
        }
    }
}

TEST_CASE("blow-up ideal: saturation adds st in degree 0 and stays linear") {
    Field f = Field::prime(101);
    auto a = catalog_algebra(f, "s2t2");
    GradedIdeal id = ideal_generate(a, 2, {parse_operator(a, "t*a0 - s*a1", 2)}, 8);
    SaturationResult sat = saturate(id);
    CHECK(sat.ideal.contains(parse_operator(a, "s*t", 2)));
    CHECK(id.piece(0).dim() == 0);
    GradedIdeal expected =
        ideal_generate(a, 2, {parse_operator(a, "t*a0 - s*a1", 2), parse_operator(a, "s*t", 2)}, sat.certified_through);
    CHECK(sat.ideal == expected);
    CHECK(sat.certified_through >= 4);

    // Decomposition as an intersection with the irrelevant ideal, degreewise.
    GradedIdeal irr = ideal_generate(a, 2, {parse_operator(a, "a0", 2), parse_operator(a, "a1", 2)}, sat.certified_through);
    CHECK(intersect(expected, irr) == id.truncate(sat.certified_through));

    SaturationProbe probe = saturation_probe(id);
    CHECK(probe.saturation_is_linear_up_to_cap);
    CHECK_FALSE(probe.witness_degree.has_value());
}

TEST_CASE("saturate fixtures") {
    Field f = Field::prime(101);
    auto k = ArtinLocalAlgebra::ground(f);
    std::vector<PolyOverA> gens;
    for (const auto& e : monomial_basis(2, 5).monomials) gens.push_back(PolyOverA::monomial(k, 2, e, k->unit()));
    SaturationResult s = saturate(ideal_generate(k, 2, gens, 12));
    CHECK(s.certified_through >= 0);
    for (int d = 0; d <= s.certified_through; ++d) CHECK(s.ideal.piece(d).dim() == s.ideal.ambient_dim(d));

    GradedIdeal pt = ideal_generate(k, 3, {parse_operator(k, "a1", 3), parse_operator(k, "a2", 3)}, 6);
    SaturationResult sp = saturate(pt);
    CHECK(sp.ideal == pt.truncate(sp.certified_through));
    CHECK(sp.steps == 1);
    CHECK_THROWS_AS(saturate(pt.truncate(1)), DomainError);
}

TEST_CASE("saturation of monomial ideals matches the monomial oracle") {
    Field f = Field::prime(101);
    auto k = ArtinLocalAlgebra::ground(f);
    Rng rng(55);
    for (int trial = 0; trial < 40; ++trial) {
        int nv = 2 + static_cast<int>(rng.below(2));
        std::vector<Exponent> gens;
        for (std::size_t g = 0, n = 1 + rng.below(4); g < n; ++g) {
            int deg = 1 + static_cast<int>(rng.below(3));
            const auto& mb = monomial_basis(nv, deg).monomials;
            gens.push_back(mb[rng.below(mb.size())]);
        }
        SaturationResult s = saturate(monomial_ideal(k, nv, gens, 10));
        // x^e is in the saturation iff x^e * x_i^N is in I for every i.
        auto oracle = monomial_pieces(f, nv, s.certified_through, [&](const Exponent& e) {
            for (int i = 0; i < nv; ++i) {
                Exponent g = e;
                g[static_cast<std::size_t>(i)] += 4;
                if (!in_monomial_ideal(gens, g)) return false;
            }
            return true;
        });
        CHECK(s.ideal == GradedIdeal(k, nv, oracle));
    }
}

TEST_CASE("saturation invariants on seeded ideals") {
    Field f = Field::prime(101);
    Rng rng(71);
    for (const auto& [name, a] : algebra_catalog(f)) {
        CAPTURE(name);
        for (int trial = 0; trial < 12; ++trial) {
            GradedIdeal id = random_ideal(rng, a, 2, 6);
            SaturationResult s = saturate(id);
            // Revalidating through the checked constructor confirms closure.
            CHECK_NOTHROW(GradedIdeal(a, 2, s.ideal.pieces()));
            CHECK_NOTHROW(GradedIdeal(a, 2, colon_irrelevant(id).pieces()));
            CHECK(s.ideal.contains(id.truncate(s.certified_through)));
            GradedIdeal again = colon_irrelevant(s.ideal);
            CHECK(again == s.ideal.truncate(again.cap()));
        }
    }
}

TEST_CASE("Hilbert function and freeness of the lift-example ideal") {
    Field f = Field::prime(101);
    auto t2 = catalog_algebra(f, "t2");
    GradedIdeal id = ideal_generate(t2, 2, {parse_operator(t2, "a0*a1 - t*a0^2", 2)}, 6);
    HilbertReport h = hilbert_function(id);
    CHECK(h.h == std::vector<std::size_t>{2, 4, 4, 4, 4, 4, 4});
    for (int d = 1; d <= 6; ++d) {
        CHECK(h.quotient_free[static_cast<std::size_t>(d)]);
        CHECK(h.fiber_rank[static_cast<std::size_t>(d)] == 2);
    }
    auto k = ArtinLocalAlgebra::ground(f);
    CHECK(hilbert_function(GradedIdeal::zero(k, 2, 4)).h == std::vector<std::size_t>{1, 2, 3, 4, 5});
}

TEST_CASE("fiber ideals") {
    Field f = Field::prime(101);
    auto t2 = catalog_algebra(f, "t2");
    auto k = ArtinLocalAlgebra::ground(f);
    GradedIdeal ta = ideal_generate(t2, 1, {parse_operator(t2, "t*a0", 1)}, 4);
    FiberIdeals fi = fiber_ideals(ta, named(t2, "t"));
    CHECK(fi.special == GradedIdeal::zero(k, 1, 4));
    CHECK(fi.socle == ideal_generate(k, 1, {parse_operator(k, "a0", 1)}, 4));
    CHECK(fi.contained);
    CHECK_THROWS_AS(fiber_ideals(ta, t2->unit()), DomainError);

    auto a = catalog_algebra(f, "s2t2");
    GradedIdeal over_k = ideal_generate(k, 2, {parse_operator(k, "a0*a1", 2), parse_operator(k, "a1^3", 2)}, 5);
    GradedIdeal ext = ideal_generate(a, 2, {parse_operator(a, "a0*a1", 2), parse_operator(a, "a1^3", 2)}, 5);
    FiberIdeals fe = fiber_ideals(ext, named(a, "s*t"));
    CHECK(fe.special == over_k);
    CHECK(fe.socle == over_k);
}

TEST_CASE("fiber containment and saturated socle fibers on seeded ideals") {
    Field f = Field::prime(101);
    Rng rng(61);
    for (const auto& [name, a] : algebra_catalog(f)) {
        if (!a->is_gorenstein()) continue;
        CAPTURE(name);
        Vec s = a->socle_generator();
        for (int trial = 0; trial < 10; ++trial) {
            GradedIdeal id = random_ideal(rng, a, 2, 6);
            CHECK(fiber_ideals(id, s).contained);
            GradedIdeal sat = saturate(id).ideal;
            FiberIdeals fs = fiber_ideals(sat, s);
            CHECK(fs.contained);
            GradedIdeal col = colon_irrelevant(fs.socle);
            CHECK(col == fs.socle.truncate(col.cap()));
        }
    }
}

namespace {

// I' = preimage of I along k[t]/(t^2) -> A, t -> s, degree by degree.
GradedIdeal pull_back_to_dual_numbers(const GradedIdeal& id, const AlgebraPtr& t2, const Vec& s) {
    const auto& a = *id.algebra();
    const Field& f = a.field();
    std::vector<Subspace> pieces;
    for (int d = 0; d <= id.cap(); ++d) {
        const std::size_t w = monomial_count(id.nvars(), d);
        ExactMatrix xi(f, a.dim() * w, 2 * w);
        for (std::size_t m = 0; m < w; ++m) {
            xi.set(m, m, f.one());
            for (std::size_t b = 0; b < a.dim(); ++b) xi.set(b * w + m, w + m, s[b]);
        }
        const Subspace& p = id.piece(d);
        pieces.push_back(p.dim() == p.ambient() ? Subspace::whole(f, 2 * w) : Subspace::kernel(p.equations() * xi));
    }
    return GradedIdeal(t2, id.nvars(), pieces);
}

}  // namespace

TEST_CASE("reduction to dual numbers: socle fibers agree, special fibers only include") {
    Field f = Field::prime(101);
    auto a = catalog_algebra(f, "s2t2");
    auto t2 = catalog_algebra(f, "t2");
    Vec st = named(a, "s*t");
    Rng rng(81);
    for (int trial = 0; trial < 20; ++trial) {
        GradedIdeal id = random_ideal(rng, a, 2, 5);
        GradedIdeal pulled = pull_back_to_dual_numbers(id, t2, st);
        FiberIdeals lhs = fiber_ideals(pulled, named(t2, "t"));
        FiberIdeals rhs = fiber_ideals(id, st);
        CHECK(rhs.special.contains(lhs.special));
        CHECK(lhs.socle == rhs.socle);

        GradedIdeal sat = saturate(id).ideal;
        GradedIdeal psat = pull_back_to_dual_numbers(sat, t2, st);
        GradedIdeal col = colon_irrelevant(psat);
        CHECK(col == psat.truncate(col.cap()));
    }
    // alpha_0 lies in the special fiber of (alpha_0 - s alpha_1) but no lift
    // alpha_0 + st*psi lies in the ideal.
    GradedIdeal id = ideal_generate(a, 2, {parse_operator(a, "a0 - s*a1", 2)}, 3);
    GradedIdeal pulled = pull_back_to_dual_numbers(id, t2, st);
    auto k = ArtinLocalAlgebra::ground(f);
    CHECK(special_fiber(id).contains(parse_operator(k, "a0", 2)));
    CHECK_FALSE(special_fiber(pulled).contains(parse_operator(k, "a0", 2)));
}

TEST_CASE("Macaulay bound against lex-segment growth") {
    for (int k = 1; k <= 4; ++k)
        for (std::size_t h = 0; h <= 6; ++h) {
            CAPTURE(k);
            CAPTURE(h);
            CHECK(macaulay_bound(h, k) == lex_segment_growth(h, k, 7));
        }
    CHECK(macaulay_bound(2, 2) == 2);
    CHECK(macaulay_bound(3, 1) == 6);
}

TEST_CASE("growth report fixtures") {
    auto bad = growth_report(std::vector<std::size_t>{1, 3, 2, 3}, 2, 2);
    CHECK(bad.classical.macaulay_ok == Verdict::Fails);
    CHECK(bad.classical.macaulay_bound == Verdict::Fails);

    Field f = Field::prime(101);
    auto k = ArtinLocalAlgebra::ground(f);
    GradedIdeal ab = ideal_generate(k, 2, {parse_operator(k, "a0*a1", 2)}, 7);
    auto g = growth_report(ab, 2, 2, std::nullopt, 1);
    CHECK(g.h == std::vector<std::size_t>{1, 2, 2, 2, 2, 2, 2, 2});
    CHECK(g.classical.macaulay_bound == Verdict::Holds);
    CHECK(g.classical.macaulay_ok == Verdict::Holds);
    CHECK(g.classical.gotzmann_persists == Verdict::Holds);
    CHECK(g.classical.saturated_in_degrees == Verdict::Holds);
    CHECK(g.classical.weak_lefschetz_ok == Verdict::Holds);
    CHECK(g.classical.weak_lefschetz_saturated == Verdict::Holds);
    CHECK_FALSE(g.relative.has_value());

    auto t2 = catalog_algebra(f, "t2");
    GradedIdeal lift = ideal_generate(t2, 2, {parse_operator(t2, "a0*a1 - t*a0^2", 2)}, 8);
    auto rel = growth_report(lift, 2, 2, 4, 1);
    REQUIRE(rel.relative.has_value());
    CHECK(rel.relative->hypotheses);
    CHECK(rel.relative->relative_flat_range == Verdict::Holds);
    CHECK(rel.relative->no_new_generators_range == Verdict::Holds);
    CHECK(rel.relative->truncation_matches_saturation == Verdict::Holds);
    CHECK(rel.relative->saturation_flat_from_r_minus_1 == Verdict::Holds);
    CHECK_THROWS_AS(growth_report(lift, 2, 2, 12, 1), DomainError);
    auto ng = catalog_algebra(f, "s2stt2");
    CHECK_THROWS_AS(growth_report(GradedIdeal::zero(ng, 2, 6), 2, 2, 4, 1), DomainError);
}

TEST_CASE("classical growth holds on seeded ideals over k") {
    Field f = Field::prime(101);
    auto k = ArtinLocalAlgebra::ground(f);
    Rng rng(91);
    for (int trial = 0; trial < 40; ++trial) {
        GradedIdeal id = random_ideal(rng, k, 3, 6);
        auto h = hilbert_function(id).h;
        auto g = growth_report(h, 2, 2);
        CHECK(g.classical.macaulay_bound == Verdict::Holds);
    }
}

TEST_CASE("saturation probe on seeded linear ideals") {
    Field f = Field::prime(101);
    Rng rng(1000);
    int linear = 0, total = 0;
    for (const auto& [name, a] : algebra_catalog(f)) {
        for (int trial = 0; trial < 20; ++trial) {
            GradedIdeal id = random_linear_ideal(rng, a, 2, 6);
            SaturationProbe p = saturation_probe(id);
            CHECK(p.saturation.contains(id.truncate(p.certified_through)));
            CHECK(p.saturation_is_linear_up_to_cap == !p.witness_degree.has_value());
            linear += p.saturation_is_linear_up_to_cap;
            ++total;
        }
    }
    MESSAGE("linear saturations: " << linear << " of " << total);
    auto k = ArtinLocalAlgebra::ground(f);
    CHECK_THROWS_AS(saturation_probe(ideal_generate(k, 2, {parse_operator(k, "a0*a1", 2)}, 5)), DomainError);
}

TEST_CASE("minimal generators and generated parts") {
    Field f = Field::prime(101);
    auto a = catalog_algebra(f, "t2");
    GradedIdeal id = ideal_generate(a, 2, {parse_operator(a, "t*a0", 2), parse_operator(a, "a1^2", 2)}, 5);
    auto gens = id.minimal_generators();
    REQUIRE(gens.size() == 2);
    CHECK(ideal_generate(a, 2, gens, 5) == id);
    CHECK(generated_in_degrees(id, 1) == ideal_generate(a, 2, {parse_operator(a, "t*a0", 2)}, 5));
    std::optional<int> extra;
    CHECK_FALSE(is_linear(id, &extra));
    CHECK(extra == 2);
}
