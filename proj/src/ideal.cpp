#include "apolar/ideal.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "apolar/random.hpp"

namespace apolar {

namespace {

/// Position of (monomial * a_j) in the next degree, for each monomial of degree k.
const std::vector<std::size_t>& shift(int nvars, int k, int j) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, std::unique_ptr<std::vector<std::size_t>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{nvars, k, j}];
    if (!slot) {
        const auto& src = monomial_basis(nvars, k);
        const auto& dst = monomial_basis(nvars, k + 1);
        slot = std::make_unique<std::vector<std::size_t>>();
        for (const auto& e : src.monomials) {
            Exponent f = e;
            ++f[static_cast<std::size_t>(j)];
            slot->push_back(dst.index(f));
        }
    }
    return *slot;
}

std::vector<Vec> unit_and_max_basis(const ArtinLocalAlgebra& a) {
    std::vector<Vec> out;
    for (std::size_t i = 0; i < a.dim(); ++i) out.push_back(a.basis_vector(i));
    return out;
}

}  // namespace

Vec times_variable(int nvars, std::size_t alg_dim, int k, int j, const Vec& v) {
    const std::size_t ns = monomial_count(nvars, k), nd = monomial_count(nvars, k + 1);
    const auto& map = shift(nvars, k, j);
    Vec out(alg_dim * nd, v.empty() ? Scalar() : v[0].field().zero());
    for (std::size_t b = 0; b < alg_dim; ++b)
        for (std::size_t m = 0; m < ns; ++m) out[b * nd + map[m]] = v[b * ns + m];
    return out;
}

GradedIdeal::GradedIdeal(AlgebraPtr a, int nvars, std::vector<Subspace> pieces, NoCheck)
    : alg_(std::move(a)), nvars_(nvars), pieces_(std::move(pieces)) {}

GradedIdeal GradedIdeal::unchecked(AlgebraPtr a, int nvars, std::vector<Subspace> pieces) {
    return GradedIdeal(std::move(a), nvars, std::move(pieces), NoCheck{});
}

GradedIdeal::GradedIdeal(AlgebraPtr a, int nvars, std::vector<Subspace> pieces)
    : alg_(std::move(a)), nvars_(nvars), pieces_(std::move(pieces)) {
    if (pieces_.empty()) throw DomainError("graded ideal needs at least degree 0");
    for (int k = 0; k <= cap(); ++k) {
        const auto& p = piece(k);
        if (p.ambient() != ambient_dim(k)) throw DomainError("graded ideal piece has wrong ambient dimension");
        const std::size_t w = monomial_count(nvars_, k);
        for (std::size_t i = 1; i < alg_->dim(); ++i)
            for (const auto& v : p.basis())
                if (!p.contains(act(*alg_, w, alg_->basis_vector(i), v)))
                    throw DomainError("graded ideal piece " + std::to_string(k) + " is not an A-submodule");
        if (k < cap())
            for (int j = 0; j < nvars_; ++j)
                for (const auto& v : p.basis())
                    if (!piece(k + 1).contains(times_variable(nvars_, alg_->dim(), k, j, v)))
                        throw DomainError("graded ideal is not closed under multiplication in degree " +
                                          std::to_string(k));
    }
}

std::size_t GradedIdeal::ambient_dim(int k) const { return alg_->dim() * monomial_count(nvars_, k); }

GradedIdeal GradedIdeal::zero(AlgebraPtr a, int nvars, int cap) {
    std::vector<Subspace> pieces;
    for (int k = 0; k <= cap; ++k) pieces.emplace_back(a->field(), a->dim() * monomial_count(nvars, k));
    return unchecked(std::move(a), nvars, std::move(pieces));
}

bool GradedIdeal::contains(const PolyOverA& p) const {
    for (int k = 0; k <= p.max_degree(); ++k) {
        PolyOverA part = p.homogeneous_part(k);
        if (part.is_zero()) continue;
        if (k > cap()) throw DomainError("polynomial degree exceeds the ideal cap");
        if (!piece(k).contains(part.to_vector(k))) return false;
    }
    return true;
}

bool GradedIdeal::contains(const GradedIdeal& o) const {
    int top = std::min(cap(), o.cap());
    for (int k = 0; k <= top; ++k)
        if (!piece(k).contains(o.piece(k))) return false;
    return true;
}

bool GradedIdeal::operator==(const GradedIdeal& o) const {
    return alg_->same_as(*o.alg_) && nvars_ == o.nvars_ && pieces_ == o.pieces_;
}

GradedIdeal GradedIdeal::truncate(int c) const {
    if (c > cap()) throw DomainError("cannot truncate above the cap");
    std::vector<Subspace> p(pieces_.begin(), pieces_.begin() + c + 1);
    return unchecked(alg_, nvars_, std::move(p));
}

std::vector<PolyOverA> GradedIdeal::basis_polys(int k) const {
    std::vector<PolyOverA> out;
    for (const auto& v : piece(k).basis()) out.push_back(PolyOverA::from_vector(alg_, nvars_, k, v));
    return out;
}

Subspace GradedIdeal::generated_part(int k) const {
    if (k == 0) return Subspace(alg_->field(), ambient_dim(0));
    std::vector<Vec> gens;
    for (int j = 0; j < nvars_; ++j)
        for (const auto& v : piece(k - 1).basis()) gens.push_back(times_variable(nvars_, alg_->dim(), k - 1, j, v));
    return Subspace::span(alg_->field(), ambient_dim(k), gens);
}

std::vector<PolyOverA> GradedIdeal::minimal_generators() const {
    std::vector<PolyOverA> out;
    for (int k = 0; k <= cap(); ++k) {
        Subspace acc = generated_part(k);
        for (const auto& v : piece(k).basis()) {
            if (acc.contains(v)) continue;
            // Each new generator brings its A-multiples along.
            std::vector<Vec> add_basis = acc.basis();
            for (std::size_t i = 0; i < alg_->dim(); ++i)
                add_basis.push_back(act(*alg_, monomial_count(nvars_, k), alg_->basis_vector(i), v));
            acc = Subspace::span(alg_->field(), ambient_dim(k), add_basis);
            out.push_back(PolyOverA::from_vector(alg_, nvars_, k, v));
        }
    }
    return out;
}

GradedIdeal ideal_generate_vectors(const AlgebraPtr& a, int nvars, const std::vector<std::vector<Vec>>& gens,
                                   int cap) {
    if (cap < 0) throw DomainError("degree cap must be nonnegative");
    const auto abasis = unit_and_max_basis(*a);
    std::vector<Subspace> pieces;
    for (int k = 0; k <= cap; ++k) {
        const std::size_t w = monomial_count(nvars, k);
        std::vector<Vec> all;
        if (k > 0)
            for (int j = 0; j < nvars; ++j)
                for (const auto& v : pieces.back().basis()) all.push_back(times_variable(nvars, a->dim(), k - 1, j, v));
        if (static_cast<std::size_t>(k) < gens.size())
            for (const auto& g : gens[static_cast<std::size_t>(k)])
                for (const auto& b : abasis) all.push_back(act(*a, w, b, g));
        pieces.push_back(Subspace::span(a->field(), a->dim() * w, all));
    }
    return GradedIdeal::unchecked(a, nvars, std::move(pieces));
}

GradedIdeal ideal_generate(const AlgebraPtr& a, int nvars, const std::vector<PolyOverA>& gens, int cap) {
    std::vector<std::vector<Vec>> by_degree(static_cast<std::size_t>(cap + 1));
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (!g.algebra()->same_as(*a) || g.nvars() != nvars) throw DomainError("generator lives in another ring");
        auto d = g.degree();
        if (!d) throw DomainError("inhomogeneous generator: " + g.to_string());
        if (*d > cap) continue;
        by_degree[static_cast<std::size_t>(*d)].push_back(g.to_vector(*d));
    }
    return ideal_generate_vectors(a, nvars, by_degree, cap);
}

GradedIdeal generated_in_degrees(const GradedIdeal& ideal, int max_degree) {
    std::vector<std::vector<Vec>> gens;
    for (int k = 0; k <= std::min(max_degree, ideal.cap()); ++k) gens.push_back(ideal.piece(k).basis());
    return ideal_generate_vectors(ideal.algebra(), ideal.nvars(), gens, ideal.cap());
}

GradedIdeal intersect(const GradedIdeal& i, const GradedIdeal& j) {
    if (!i.algebra()->same_as(*j.algebra()) || i.nvars() != j.nvars()) throw DomainError("intersect: ring mismatch");
    int top = std::min(i.cap(), j.cap());
    std::vector<Subspace> pieces;
    for (int k = 0; k <= top; ++k) pieces.push_back(i.piece(k).intersect(j.piece(k)));
    return GradedIdeal::unchecked(i.algebra(), i.nvars(), std::move(pieces));
}

GradedIdeal colon_irrelevant(const GradedIdeal& ideal) {
    if (ideal.cap() < 1) throw DomainError("colon needs cap at least 1");
    const auto& a = ideal.algebra();
    const int nv = ideal.nvars();
    std::vector<Subspace> pieces;
    for (int k = 0; k < ideal.cap(); ++k) {
        const Subspace& next = ideal.piece(k + 1);
        const std::size_t src_dim = ideal.ambient_dim(k);
        if (next.dim() == next.ambient()) {
            pieces.push_back(Subspace::whole(a->field(), src_dim));
            continue;
        }
        ExactMatrix eq = next.equations();
        const std::size_t ns = monomial_count(nv, k), nd = monomial_count(nv, k + 1);
        ExactMatrix stacked(a->field(), eq.rows() * static_cast<std::size_t>(nv), src_dim);
        for (int j = 0; j < nv; ++j) {
            const auto& map = shift(nv, k, j);
            for (std::size_t r = 0; r < eq.rows(); ++r)
                for (std::size_t b = 0; b < a->dim(); ++b)
                    for (std::size_t m = 0; m < ns; ++m)
                        stacked.set(static_cast<std::size_t>(j) * eq.rows() + r, b * ns + m, eq(r, b * nd + map[m]));
        }
        pieces.push_back(Subspace::kernel(stacked));
    }
    return GradedIdeal::unchecked(a, nv, std::move(pieces));
}

SaturationResult saturate(const GradedIdeal& ideal) {
    if (ideal.cap() < 2) throw DomainError("cap too small: saturation needs at least two colon steps");
    GradedIdeal cur = ideal;
    int steps = 0;
    while (true) {
        if (cur.cap() < 1) throw DomainError("cap too small: saturation did not stabilize");
        GradedIdeal next = colon_irrelevant(cur);
        ++steps;
        if (next == cur.truncate(next.cap())) return {next, next.cap(), steps};
        cur = std::move(next);
    }
}

HilbertReport hilbert_function(const GradedIdeal& ideal) {
    HilbertReport r;
    const auto& a = *ideal.algebra();
    for (int k = 0; k <= ideal.cap(); ++k) {
        const std::size_t w = monomial_count(ideal.nvars(), k);
        std::size_t h = ideal.ambient_dim(k) - ideal.piece(k).dim();
        std::size_t fr = w - residue_image(a, w, ideal.piece(k)).dim();
        r.h.push_back(h);
        r.fiber_rank.push_back(fr);
        r.quotient_free.push_back(h == fr * a.dim());
    }
    return r;
}

GradedIdeal special_fiber(const GradedIdeal& ideal) {
    const auto& a = *ideal.algebra();
    AlgebraPtr k = ArtinLocalAlgebra::ground(a.field());
    std::vector<Subspace> pieces;
    for (int d = 0; d <= ideal.cap(); ++d)
        pieces.push_back(residue_image(a, monomial_count(ideal.nvars(), d), ideal.piece(d)));
    return GradedIdeal::unchecked(k, ideal.nvars(), std::move(pieces));
}

FiberIdeals fiber_ideals(const GradedIdeal& ideal, const Vec& s) {
    const auto& a = *ideal.algebra();
    if (is_zero_vec(s) || !a.socle().contains(s)) throw DomainError("s must be a nonzero socle element");
    AlgebraPtr k = ArtinLocalAlgebra::ground(a.field());
    std::vector<Subspace> soc;
    for (int d = 0; d <= ideal.cap(); ++d) {
        const std::size_t w = monomial_count(ideal.nvars(), d);
        // Phi -> s (x) Phi, then the equations of I_d.
        ExactMatrix embed(a.field(), a.dim() * w, w);
        for (std::size_t b = 0; b < a.dim(); ++b)
            for (std::size_t m = 0; m < w; ++m) embed.set(b * w + m, m, s[b]);
        const Subspace& p = ideal.piece(d);
        if (p.dim() == p.ambient()) soc.push_back(Subspace::whole(a.field(), w));
        else soc.push_back(Subspace::kernel(p.equations() * embed));
    }
    FiberIdeals out{special_fiber(ideal), GradedIdeal::unchecked(k, ideal.nvars(), std::move(soc)), false};
    out.contained = out.socle.contains(out.special);
    return out;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Fails: return "fails";
        case Verdict::NotApplicable: return "not_applicable";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

std::size_t binom(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Verdict verdict(bool b) { return b ? Verdict::Holds : Verdict::Fails; }

void classical_from_h(const std::vector<std::size_t>& h, int r, int i, ClassicalGrowth& c) {
    const int top = static_cast<int>(h.size()) - 1;
    bool bound = h.empty() || h[0] <= 1;
    for (int k = 1; k < top; ++k)
        if (h[static_cast<std::size_t>(k + 1)] > macaulay_bound(h[static_cast<std::size_t>(k)], k)) bound = false;
    c.macaulay_bound = verdict(bound);
    if (i > top) throw DomainError("cap too small for the requested degree i");
    if (i >= r && h[static_cast<std::size_t>(i)] <= static_cast<std::size_t>(r)) {
        bool ok = true;
        for (int k = i; k < top; ++k)
            if (h[static_cast<std::size_t>(k + 1)] > h[static_cast<std::size_t>(k)]) ok = false;
        for (int k = std::max(0, r - 1); k <= i; ++k)
            if (h[static_cast<std::size_t>(k)] < h[static_cast<std::size_t>(i)]) ok = false;
        c.macaulay_ok = verdict(ok);
    }
}

/// Injectivity of multiplication by the form on (S/I)_k -> (S/I)_{k+1}.
bool injective_multiplication(const GradedIdeal& ideal, int k, const Vec& form) {
    const auto& a = ideal.algebra();
    const int nv = ideal.nvars();
    const Subspace& next = ideal.piece(k + 1);
    const std::size_t src = ideal.ambient_dim(k);
    if (next.dim() == next.ambient()) return ideal.piece(k).dim() == src;
    ExactMatrix eq = next.equations();
    const std::size_t ns = monomial_count(nv, k), nd = monomial_count(nv, k + 1);
    ExactMatrix m(a->field(), eq.rows(), src);
    for (int j = 0; j < nv; ++j) {
        if (form[static_cast<std::size_t>(j)].is_zero()) continue;
        const auto& map = shift(nv, k, j);
        for (std::size_t r = 0; r < eq.rows(); ++r)
            for (std::size_t b = 0; b < a->dim(); ++b)
                for (std::size_t mm = 0; mm < ns; ++mm)
                    m.set(r, b * ns + mm, m(r, b * ns + mm) + form[static_cast<std::size_t>(j)] * eq(r, b * nd + map[mm]));
    }
    return Subspace::kernel(m).dim() == ideal.piece(k).dim();
}

Verdict weak_lefschetz(const GradedIdeal& ideal, const std::vector<std::size_t>& h, int from, int to, Rng& rng,
                       int& tried) {
    if (from > to) return Verdict::NotApplicable;
    for (int k = from; k <= to; ++k)
        if (h[static_cast<std::size_t>(k)] != h[static_cast<std::size_t>(k + 1)]) return Verdict::Fails;
    const Field& f = ideal.algebra()->field();
    for (int attempt = 0; attempt < 20; ++attempt) {
        Vec form = rng.vec(f, static_cast<std::size_t>(ideal.nvars()));
        ++tried;
        bool ok = true;
        for (int k = from; k <= to && ok; ++k) ok = injective_multiplication(ideal, k, form);
        if (ok) return Verdict::Holds;
    }
    return Verdict::Inconclusive;
}

bool no_new_generators(const GradedIdeal& ideal, int k) { return ideal.generated_part(k) == ideal.piece(k); }

}  // namespace

std::size_t macaulay_bound(std::size_t h, int k) {
    if (h == 0) return 0;
    // k-binomial expansion h = C(a_k,k) + C(a_{k-1},k-1) + ... with a_k > a_{k-1} > ...
    std::size_t rest = h, out = 0;
    for (int j = k; j >= 1 && rest > 0; --j) {
        std::size_t a = static_cast<std::size_t>(j);
        while (binom(a + 1, static_cast<std::size_t>(j)) <= rest) ++a;
        rest -= binom(a, static_cast<std::size_t>(j));
        out += binom(a + 1, static_cast<std::size_t>(j + 1));
    }
    return out;
}

GrowthReport growth_report(const std::vector<std::size_t>& h, int r, int i) {
    GrowthReport g;
    g.h = h;
    classical_from_h(h, r, i, g.classical);
    return g;
}

GrowthReport growth_report(const GradedIdeal& ideal, int r, int i, std::optional<int> j, std::uint64_t seed) {
    GrowthReport g;
    HilbertReport hr = hilbert_function(ideal);
    g.h = hr.h;
    const int top = ideal.cap();
    if (i > top || (j && *j > top)) throw DomainError("cap too small for the requested range");
    Rng rng(seed);
    const auto& a = *ideal.algebra();

    if (a.dim() == 1) {
        classical_from_h(g.h, r, i, g.classical);
        bool hyp = i >= r && g.h[static_cast<std::size_t>(i)] == static_cast<std::size_t>(r);
        bool gen_low = true;
        for (int k = i + 1; k <= top; ++k) gen_low = gen_low && no_new_generators(ideal, k);
        if (hyp && gen_low) {
            bool persist = true;
            for (int k = i; k <= top; ++k) persist = persist && g.h[static_cast<std::size_t>(k)] == static_cast<std::size_t>(r);
            g.classical.gotzmann_persists = verdict(persist);
            SaturationResult sat = saturate(ideal);
            bool same = true;
            for (int k = i; k <= sat.certified_through; ++k) same = same && sat.ideal.piece(k) == ideal.piece(k);
            g.classical.saturated_in_degrees = verdict(same);
            int tried = 0;
            g.classical.weak_lefschetz_ok = weak_lefschetz(ideal, g.h, i, top - 1, rng, tried);
            bool saturated = true;
            for (int k = 0; k <= sat.certified_through; ++k) saturated = saturated && sat.ideal.piece(k) == ideal.piece(k);
            if (saturated)
                g.classical.weak_lefschetz_saturated =
                    weak_lefschetz(ideal, g.h, std::max(0, r - 1), sat.certified_through - 1, rng, tried);
            g.classical.weak_lefschetz_forms_tried = tried;
        }
    }

    if (j) {
        if (!a.is_gorenstein()) throw DomainError("relative growth checks require a local Gorenstein base");
        if (*j <= i || i < r) throw DomainError("relative growth checks need j > i >= r");
        RelativeGrowth rel;
        auto free_rank_r = [&](const HilbertReport& h, int k) {
            return h.quotient_free[static_cast<std::size_t>(k)] && h.fiber_rank[static_cast<std::size_t>(k)] == static_cast<std::size_t>(r);
        };
        rel.hypotheses = free_rank_r(hr, i) && free_rank_r(hr, *j);
        if (rel.hypotheses) {
            bool flat = true;
            for (int k = i + 1; k < *j; ++k) flat = flat && free_rank_r(hr, k);
            rel.relative_flat_range = verdict(flat);
            bool nogen = true;
            for (int k = i + 1; k <= *j; ++k) nogen = nogen && no_new_generators(ideal, k);
            rel.no_new_generators_range = verdict(nogen);

            GradedIdeal jdeal = generated_in_degrees(ideal, i);
            SaturationResult jsat = saturate(jdeal);
            HilbertReport hj = hilbert_function(jdeal);
            HilbertReport hs = hilbert_function(jsat.ideal);
            bool match = true;
            for (int k = i; k <= jsat.certified_through; ++k)
                match = match && jsat.ideal.piece(k) == jdeal.piece(k) && free_rank_r(hj, k);
            rel.truncation_matches_saturation = verdict(match);
            bool low = true;
            for (int k = std::max(0, r - 1); k <= jsat.certified_through; ++k) low = low && free_rank_r(hs, k);
            rel.saturation_flat_from_r_minus_1 = verdict(low);
            rel.certified_through = jsat.certified_through;
        }
        g.relative = rel;
    }
    return g;
}

bool is_linear(const GradedIdeal& ideal, std::optional<int>* first_extra) {
    GradedIdeal lin = generated_in_degrees(ideal, 1);
    for (int k = 2; k <= ideal.cap(); ++k)
        if (lin.piece(k) != ideal.piece(k)) {
            if (first_extra) *first_extra = k;
            return false;
        }
    return true;
}

SaturationProbe saturation_probe(const GradedIdeal& ideal) {
    if (!is_linear(ideal)) throw DomainError("saturation_probe expects an ideal generated in degrees 0 and 1");
    SaturationResult sat = saturate(ideal);
    std::optional<int> witness;
    bool lin = is_linear(sat.ideal, &witness);
    return {lin, witness, sat.certified_through, sat.ideal};
}

}  // namespace apolar
