#include "fixtures.hpp"

#include <functional>

#include "apolar/determinant.hpp"
#include "apolar/error.hpp"
#include "apolar/families.hpp"

namespace apolar::tools {

namespace {

using Outcome = std::pair<bool, std::string>;

GradedIdeal generate(const AlgebraPtr& a, int nv, const std::vector<std::string>& gens, int cap) {
    std::vector<PolyOverA> ps;
    for (const auto& g : gens) ps.push_back(parse_operator(a, g, nv));
    return ideal_generate(a, nv, ps, cap);
}

Vec pair_vec(const ArtinLocalAlgebra& a, const Vec& x, const Vec& y) {
    Vec v = zero_vec(a.field(), 2 * a.dim());
    for (std::size_t b = 0; b < a.dim(); ++b) {
        v[2 * b] = x[b];
        v[2 * b + 1] = y[b];
    }
    return v;
}

std::string join_h(const std::vector<std::size_t>& h) {
    std::string s;
    for (auto v : h) s += (s.empty() ? "" : ",") + std::to_string(v);
    return "(" + s + ")";
}

Outcome perp_fixture(const Field& f) {
    auto a = catalog_algebra(f, "s2stt2");
    Vec s = *a->element_for_name("s"), t = *a->element_for_name("t"), z = zero_vec(f, a->dim());
    SubmoduleOfFree m = a_span(a, 2, {pair_vec(*a, s, z), pair_vec(*a, z, t)});
    SubmoduleOfFree expected =
        a_span(a, 2, {pair_vec(*a, s, z), pair_vec(*a, t, z), pair_vec(*a, z, s), pair_vec(*a, z, t)});
    SubmoduleOfFree p = perp(m), pp = perp(p);
    bool ok = p == expected && pp == expected && !(pp == m);
    return {ok, "dim M = " + std::to_string(m.dim()) + ", dim M^perp^perp = " + std::to_string(pp.dim())};
}

Outcome contraction_gorenstein(const Field& f) {
    auto a = catalog_algebra(f, "s2t2");
    DPOverA g = contract(parse_operator(a, "a1^2 + s*a2*a0", 3), parse_state(a, "x0^(3) + s*x0^(2)*x1 + t*x0^(2)*x2", 3));
    return {g == parse_state(a, "s*t*x0", 3), g.to_string()};
}

Outcome contraction_non_gorenstein(const Field& f) {
    auto a = catalog_algebra(f, "s2stt2");
    DPOverA g = contract(parse_operator(a, "a1^2 + s*a2*a0", 3), parse_state(a, "x0^(3) + s*x0^(2)*x1 + t*x0^(2)*x2", 3));
    return {g.is_zero(), g.is_zero() ? "0" : g.to_string()};
}

Outcome tensor_fixtures(const Field& f) {
    auto t2 = catalog_algebra(f, "t2"), t3 = catalog_algebra(f, "t3"), s2t2 = catalog_algebra(f, "s2t2");
    bool moving = tensor_report(parse_state(t2, "x0 + 2*x1 + t*x1", 2)).embedding;
    bool still = tensor_report(parse_state(t2, "x0 + 2*x1", 2)).embedding;
    auto q = tensor_report(parse_state(s2t2, "s*x1 + t*x2 + s*t*x0", 3));
    bool square = tensor_report(parse_state(t3, "x0 + 2*x1 + t^2*x1", 2)).embedding;
    bool ok = moving && !still && q.embedding && is_zero_vec(q.support) && !square;
    return {ok, "embeddings: v+tv' " + std::to_string(moving) + ", v " + std::to_string(still) + ", sx1+tx2+stx0 " +
                    std::to_string(q.embedding) + ", v+t^2v'' " + std::to_string(square)};
}

Outcome ann_point(const Field& f) {
    AlgebraPtr k = ArtinLocalAlgebra::ground(f);
    GradedIdeal ann = annihilator(parse_state(k, "x0^(3)", 3), 8);
    return {ann == generate(k, 3, {"a1", "a2", "a0^4"}, 8), "(a1, a2, a0^4) through degree 8"};
}

Outcome ann_three_powers(const Field& f) {
    auto t2 = catalog_algebra(f, "t2");
    GradedIdeal ann = annihilator(parse_state(t2, "x0^(3) + t*x1^(3) + t^2*x2^(3)", 3), 8);
    GradedIdeal listed =
        generate(t2, 3, {"t*a1", "a2", "a0*a1", "a0*a2", "a1*a2", "a1^3 - t*a0^3", "a2^3", "a0^4"}, 8);
    return {ann == listed, "listed ideal through degree 8"};
}

Outcome ann_non_gorenstein(const Field& f) {
    auto a = catalog_algebra(f, "s2stt2");
    GradedIdeal ann = annihilator(parse_state(a, "s*x0^(3) + t*x1^(3)", 2), 8);
    return {ann == generate(a, 2, {"s", "t", "a0*a1", "a0^4", "a1^4"}, 8), "(s, t, a0*a1, a0^4, a1^4)"};
}

Outcome duality_negative(const Field& f) {
    auto a = catalog_algebra(f, "s2stt2");
    DPOverA g = parse_state(a, "s*x0^(3) + t*x1^(3)", 2);
    auto h = apolar_hilbert_function(g);
    bool refused = false;
    try {
        duality_report(g);
    } catch (const DomainError&) {
        refused = true;
    }
    return {h.front() == 1 && h.back() == 2 && refused, "h = " + join_h(h) + ", duality refused"};
}

Outcome veronese_rank_one(const Field& f) {
    AlgebraPtr k = ArtinLocalAlgebra::ground(f);
    DPOverA g = parse_state(k, "x0^(5)", 3);
    bool ok = true;
    for (int i = 1; i <= 4; ++i) ok = ok && rank_profile(g, i, 1).constant_rank;
    return {ok, "rank 1 for 1 <= i <= 4"};
}

Outcome blow_up(const Field& f) {
    auto a = catalog_algebra(f, "s2t2");
    GradedIdeal id = generate(a, 2, {"t*a0 - s*a1"}, 8);
    SaturationProbe probe = saturation_probe(id);
    bool st = probe.saturation.contains(parse_operator(a, "s*t", 2));
    return {st && probe.saturation_is_linear_up_to_cap,
            "st in saturation: " + std::to_string(st) + ", linear through degree " +
                std::to_string(probe.certified_through)};
}

Outcome non_gorenstein_familiar(const Field& f) {
    auto a = catalog_algebra(f, "s2stt2");
    GradedIdeal i = generate(a, 3, {"t*a0", "s*a1", "s*a0 - t*a1", "a0^2", "a0*a1", "a1^2"}, 7);
    auto rep = familiar_report(i, 3);
    bool independent = true;
    for (int d = 1; d <= rep.certified_through; ++d) independent = independent && rep.independent_at(d);
    bool span = veronese_span(i, 1).ideal(4) == generate(a, 3, {"t*a0", "s*a1", "s*a0 - t*a1"}, 4);
    return {rep.degree_r && independent && !rep.flat && span,
            "degree 3, independent " + std::to_string(independent) + ", flat " + std::to_string(rep.flat) +
                ", span (t*a0, s*a1, s*a0 - t*a1) " + std::to_string(span)};
}

GradedIdeal three_points(const AlgebraPtr& a, int cap) {
    return intersect(intersect(generate(a, 4, {"a0 - a1", "a2", "a3"}, cap), generate(a, 4, {"a0", "a2", "a3"}, cap)),
                     generate(a, 4, {"a1", "a2 - s*a0", "a3 - t*a0"}, cap));
}

Outcome bad_span(const Field& f) {
    auto a = catalog_algebra(f, "s2stt2");
    GradedIdeal i = three_points(a, 5);
    auto dim = veronese_span(i, 1).fiber_dimension();
    bool refused = false;
    try {
        span_rank_check(i, 1, 3);
    } catch (const DomainError&) {
        refused = true;
    }
    bool ok = dim && *dim == 3 && refused && familiar_report(i, 3).flat;
    return {ok, "span fiber dimension " + (dim ? std::to_string(*dim) : std::string("empty")) +
                    ", span rank check refused: " + std::to_string(refused)};
}

Outcome veronese_variant(const Field& f) {
    auto a = catalog_algebra(f, "s3t3");
    GradedIdeal i1 = generate(a, 8, {"a0 - a1", "a1 - a4", "a2", "a3", "a5", "a6", "a7"}, 1);
    GradedIdeal i2 = generate(a, 8, {"a0", "a1", "a2", "a3", "a5", "a6", "a7"}, 1);
    GradedIdeal i3 =
        generate(a, 8, {"a1", "a4", "a2 - s*a0", "a3 - t*a0", "a5 - s^2*a0", "a6 - s*t*a0", "a7 - t^2*a0"}, 1);
    SpanOverA span = veronese_span(intersect(intersect(i1, i2), i3), 1);
    GradedIdeal five = generate(a, 8,
                                {"a2 - s*a0 + s*a1", "a3 - t*a0 + t*a1", "a5 - s^2*a0 + s^2*a1",
                                 "a6 - s*t*a0 + s*t*a1", "a7 - t^2*a0 + t^2*a1"},
                                1);
    return {span.i0.dim() == 0 && span.i1 == five.piece(1),
            std::to_string(span.linear_generators().size()) + " degree-1 generators"};
}

Outcome bounded_rank(const Field& f) {
    AlgebraPtr k = ArtinLocalAlgebra::ground(f);
    GradedIdeal ir = generate(k, 3, {"a0^2", "a1"}, 3);
    GradedIdeal span = veronese_span(ir, 1).ideal(3);
    PolyOverA zero(k, 3), a0 = parse_operator(k, "a0", 3);
    PolyOverA det = subset_determinant<PolyOverA>(
        3, zero, PolyOverA::monomial(k, 3, Exponent(3, 0), k->unit()),
        [&](std::size_t r, std::size_t c) { return r == c ? a0 : zero; },
        [](const PolyOverA& x, const PolyOverA& y) { return x * y; },
        [](const PolyOverA& x, const PolyOverA& y) { return x + y; }, [&](const PolyOverA& x) { return zero - x; });
    bool ok = span == generate(k, 3, {"a1"}, 3) && ir.contains(det) && !span.contains(det);
    return {ok, "3-minor " + det.to_string() + " outside the span ideal (a1)"};
}

Outcome stratum_point(const Field& f) {
    auto s = cactus_stratum(parse_state(ArtinLocalAlgebra::ground(f), "x0^(4)", 2));
    return {s.rank == 1 && s.certified, "stratum " + std::to_string(s.rank)};
}

}  // namespace

std::vector<FixtureResult> run_reference_fixtures(const Field& f) {
    const std::vector<std::pair<std::string, std::function<Outcome(const Field&)>>> all{
        {"double perp differs from M over k[s,t]/(s^2,st,t^2)", perp_fixture},
        {"contraction over k[s,t]/(s^2,t^2) is s*t*x0", contraction_gorenstein},
        {"contraction over k[s,t]/(s^2,st,t^2) is 0", contraction_non_gorenstein},
        {"affine tensors and embeddings", tensor_fixtures},
        {"Ann(x^(3)) of a point", ann_point},
        {"Ann(x^(3) + t y^(3) + t^2 z^(3)) over k[t]/(t^2)", ann_three_powers},
        {"Ann(s x^(3) + t y^(3)) over k[s,t]/(s^2,st,t^2)", ann_non_gorenstein},
        {"duality fails over a non-Gorenstein base", duality_negative},
        {"powers of linear forms have catalecticant rank 1", veronese_rank_one},
        {"blow-up ideal saturation contains st and is linear", blow_up},
        {"independent non-flat familiar of degree 3", non_gorenstein_familiar},
        {"bad linear span of three points", bad_span},
        {"Veronese variant span generators", veronese_variant},
        {"bounded-rank counterexample", bounded_rank},
        {"cactus stratum of x^(4)", stratum_point},
    };
    std::vector<FixtureResult> out;
    for (const auto& [name, run] : all) {
        try {
            auto [pass, detail] = run(f);
            out.push_back({name, pass, detail});
        } catch (const std::exception& e) {
            out.push_back({name, false, std::string("error: ") + e.what()});
        }
    }
    return out;
}

}  // namespace apolar::tools
