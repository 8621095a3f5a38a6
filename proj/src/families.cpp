#include "apolar/families.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "apolar/error.hpp"

namespace apolar {

bool FamiliarReport::independent_at(int d) const {
    if (d < 0 || special_h.empty()) return false;
    const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(d), special_h.size() - 1);
    return special_h[k] == static_cast<std::size_t>(r);
}

FamiliarReport familiar_report(const GradedIdeal& ideal, int r) {
    SaturationResult sat = saturate(special_fiber(ideal));
    const int c = sat.certified_through;
    if (c < 1) throw DomainError("cap too small to observe stabilization of the special fiber");
    FamiliarReport rep;
    rep.r = r;
    rep.certified_through = c;
    rep.special_h = hilbert_function(sat.ideal).h;
    int from = c;
    while (from > 0 && rep.special_h[static_cast<std::size_t>(from - 1)] == rep.special_h[static_cast<std::size_t>(c)])
        --from;
    rep.stable_from = from;
    rep.finite = from < c;
    rep.degree_r = rep.finite && rep.special_h[static_cast<std::size_t>(c)] == static_cast<std::size_t>(r);
    HilbertReport own = hilbert_function(ideal);
    rep.flat = rep.degree_r;
    for (int k = from; k <= std::min(c, ideal.cap()); ++k) {
        const auto ku = static_cast<std::size_t>(k);
        rep.flat = rep.flat && own.quotient_free[ku] && own.fiber_rank[ku] == static_cast<std::size_t>(r);
    }
    return rep;
}

std::optional<std::size_t> SpanOverA::fiber_dimension() const {
    const auto& a = *algebra;
    if (residue_image(a, 1, i0).dim() > 0) return std::nullopt;
    const std::size_t n = static_cast<std::size_t>(nvars);
    const std::size_t used = residue_image(a, n, i1).dim();
    if (used >= n) return std::nullopt;
    return n - used - 1;
}

GradedIdeal SpanOverA::ideal(int cap) const {
    return ideal_generate_vectors(algebra, nvars, {i0.basis(), i1.basis()}, cap);
}

std::vector<PolyOverA> SpanOverA::linear_generators() const { return ideal(1).minimal_generators(); }

SpanOverA veronese_span(const GradedIdeal& ideal, int d) {
    if (d < 0 || d > ideal.cap()) throw DomainError("veronese_span: degree outside the ideal's cap");
    return SpanOverA{ideal.algebra(), static_cast<int>(monomial_count(ideal.nvars(), d)), ideal.piece(0),
                     ideal.piece(d)};
}

SpanRankReport span_rank_check(const GradedIdeal& ideal, int d, int r) {
    FamiliarReport fam = familiar_report(ideal, r);
    SpanOverA span = veronese_span(ideal, d);
    auto fd = span.fiber_dimension();
    if (!fam.independent_at(d)) {
        std::string dim = fd ? std::to_string(*fd) : std::string("empty");
        throw DomainError("family is not independent at degree " + std::to_string(d) + ": span fiber dimension " + dim +
                          ", expected r-1 = " + std::to_string(r - 1));
    }
    const auto& a = *ideal.algebra();
    const std::size_t n = monomial_count(ideal.nvars(), d);
    const Subspace& piece = ideal.piece(d);
    Subspace res = residue_image(a, n, piece);
    SpanRankReport rep;
    rep.fiber_dimension = fd.value_or(0);
    std::vector<bool> pivot(n, false);
    for (auto p : res.pivots()) pivot[p] = true;
    std::vector<Vec> comp;
    for (std::size_t m = 0; m < n; ++m) {
        if (pivot[m]) continue;
        rep.complement.push_back(monomial_basis(ideal.nvars(), d).monomials[m]);
        for (std::size_t b = 0; b < a.dim(); ++b) {
            Vec e = zero_vec(a.field(), a.dim() * n);
            e[b * n + m] = a.field().one();
            comp.push_back(e);
        }
    }
    const std::size_t total = a.dim() * n;
    rep.holds = rep.complement.size() == static_cast<std::size_t>(r) && piece.dim() + comp.size() == total &&
                piece.sum(Subspace::span(a.field(), total, comp)).dim() == total;
    return rep;
}

GradedIdeal relative_span_ideal(const GradedIdeal& j) {
    const auto& a = *j.algebra();
    std::vector<Subspace> pieces;
    for (int k = 0; k <= j.cap(); ++k) {
        const std::size_t w = monomial_count(j.nvars(), k);
        const Subspace& p = j.piece(k);
        if (p.dim() == p.ambient()) {
            pieces.push_back(Subspace::whole(a.field(), w));
            continue;
        }
        // The unit block sits in the first w coordinates.
        ExactMatrix eq = p.equations();
        ExactMatrix unit_cols(a.field(), eq.rows(), w);
        for (std::size_t r = 0; r < eq.rows(); ++r)
            for (std::size_t m = 0; m < w; ++m) unit_cols.set(r, m, eq(r, m));
        pieces.push_back(Subspace::kernel(unit_cols));
    }
    return GradedIdeal(ArtinLocalAlgebra::ground(a.field()), j.nvars(), std::move(pieces));
}

namespace {

int tensor_degree(const DPOverA& f) {
    auto d = f.degree();
    if (!d) throw DomainError("tensor must be homogeneous and nonzero");
    return *d;
}

bool contracts_to_zero(const GradedIdeal& ideal, int k, const DPOverA& f) {
    for (const auto& phi : ideal.basis_polys(k))
        if (!contract(phi, f).is_zero()) return false;
    return true;
}

}  // namespace

ApolarityReport apolarity_check(const DPOverA& f, const GradedIdeal& ideal) {
    const int d = tensor_degree(f);
    if (residue_tensor(f).is_zero()) throw DomainError("apolarity needs a tensor with nonzero residue");
    if (!f.algebra()->same_as(*ideal.algebra()) || f.nvars() != ideal.nvars())
        throw DomainError("apolarity: tensor and ideal live over different rings");
    if (ideal.cap() < d) throw DomainError("apolarity: ideal cap below the tensor degree");
    ApolarityReport rep;
    GradedIdeal ann = annihilator(f, d);
    rep.ideal_side = true;
    for (int k = 0; k <= d; ++k) rep.ideal_side = rep.ideal_side && ann.piece(k).contains(ideal.piece(k));
    rep.span_side = ideal.piece(0).dim() == 0 && contracts_to_zero(ideal, d, f);
    return rep;
}

LiftResult lift_to_familiar(const DPOverA& f, int r, int i, int cap) {
    const int d = tensor_degree(f);
    const auto& a = f.algebra();
    if (!a->is_gorenstein()) throw DomainError("lift needs a Gorenstein base");
    if (r < 1 || d < 2 * r) throw DomainError("lift needs d >= 2r");
    if (i < r || i > d - r) throw DomainError("lift needs r <= i <= d - r");
    RankProfile prof = rank_profile(f, i, r);
    if (!prof.constant_rank)
        throw DomainError("constant-rank precondition fails: residue rank " + std::to_string(prof.residue_rank) +
                          (prof.minors_vanish ? "" : ", a nonzero minor") + (prof.exhaustive ? "" : ", minor search capped"));
    if (cap < 0) cap = 2 * d + 2;
    GradedIdeal ann = annihilator(f, cap);
    GradedIdeal j = generated_in_degrees(ann, i);
    SaturationResult sat = saturate(j);
    LiftResult out{sat.ideal};
    out.certified_through = sat.certified_through;
    if (out.certified_through < d) {
        out.diagnostics = "saturation certified only through degree " + std::to_string(out.certified_through);
        return out;
    }
    const GradedIdeal& ideal = sat.ideal;
    out.report = familiar_report(ideal, r);
    out.ann_contains = true;
    for (int k = 0; k <= d; ++k) out.ann_contains = out.ann_contains && ann.piece(k).contains(ideal.piece(k));
    out.in_span = ideal.piece(0).dim() == 0 && contracts_to_zero(ideal, d, f);
    out.generated_matches = true;
    for (int k = 0; k <= i; ++k) out.generated_matches = out.generated_matches && ideal.piece(k) == j.piece(k);
    out.ok = out.report.finite && out.report.degree_r && out.report.flat && out.ann_contains && out.in_span;
    if (!out.ok) {
        std::string h;
        for (auto v : out.report.special_h) h += (h.empty() ? "" : ",") + std::to_string(v);
        out.diagnostics = "special fiber h = (" + h + "), finite " + std::to_string(out.report.finite) + ", flat " +
                          std::to_string(out.report.flat) + ", inside Ann " + std::to_string(out.ann_contains) +
                          ", in span " + std::to_string(out.in_span);
    }
    return out;
}

PartialIdealReport partial_ideal(const GradedIdeal& ideal, int r, const std::optional<DPOverA>& f) {
    const auto& a = ideal.algebra();
    if (!a->is_dual_numbers()) throw DomainError("partial ideal needs the base k[t]/(t^2)");
    std::vector<Subspace> pieces;
    for (int k = 0; k <= ideal.cap(); ++k)
        pieces.push_back(partial_t(SubmoduleOfFree(a, monomial_count(ideal.nvars(), k), ideal.piece(k))).partial);
    PartialIdealReport rep{GradedIdeal(ArtinLocalAlgebra::ground(a->field()), ideal.nvars(), std::move(pieces))};
    const GradedIdeal& partial = rep.partial;
    GradedIdeal special = special_fiber(ideal);
    rep.special_inside = partial.contains(special) ? Verdict::Holds : Verdict::Fails;

    if (f) {
        const int d = tensor_degree(*f);
        if (f->algebra()->dim() != 1) throw DomainError("partial ideal: F must be defined over the ground field");
        GradedIdeal ann = annihilator(*f, std::min(d, partial.cap()));
        rep.inside_ann = ann.contains(partial) ? Verdict::Holds : Verdict::Fails;
    }

    SaturationResult psat = saturate(partial);
    SaturationResult ssat = saturate(special);
    rep.certified_through = psat.certified_through;
    const int from = std::max(2 * r - 1, 0);
    if (from > psat.certified_through) {
        rep.saturated = Verdict::Inconclusive;
    } else {
        bool same = true;
        for (int k = from; k <= psat.certified_through; ++k) same = same && psat.ideal.piece(k) == partial.piece(k);
        rep.saturated = same ? Verdict::Holds : Verdict::Fails;
    }
    const int top = std::min(psat.certified_through, ssat.certified_through);
    bool differ = false;
    for (int k = 0; k <= top; ++k) differ = differ || psat.ideal.piece(k) != ssat.ideal.piece(k);
    rep.differs = differ ? Verdict::Holds : Verdict::Fails;
    return rep;
}

StratumReport cactus_stratum(const DPOverA& f) {
    if (f.algebra()->dim() != 1) throw DomainError("cactus stratum needs a tensor over the ground field");
    const int d = tensor_degree(f);
    StratumReport rep;
    rep.rank = rank(catalecticant(f, d / 2).residue());
    rep.certified = static_cast<std::size_t>(d) >= 2 * rep.rank;
    return rep;
}

namespace {

/// Calls visit on every nonzero vector of F_p^n whose first nonzero entry is 1.
template <class Visit>
bool any_normalized(const Field& fd, std::size_t n, Visit visit) {
    const std::uint32_t p = fd.characteristic();
    for (std::size_t lead = 0; lead < n; ++lead) {
        std::vector<std::uint32_t> digits(n - lead - 1, 0);
        while (true) {
            Vec v = zero_vec(fd, n);
            v[lead] = fd.one();
            for (std::size_t i = 0; i < digits.size(); ++i) v[lead + 1 + i] = fd.from_int(digits[i]);
            if (visit(v)) return true;
            std::size_t i = 0;
            while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
            if (i == digits.size()) break;
        }
    }
    return false;
}

PolyOverA linear_form(const AlgebraPtr& k, const Vec& coeffs) {
    return PolyOverA::from_vector(k, static_cast<int>(coeffs.size()), 1, coeffs);
}

bool annihilated_by(const std::vector<PolyOverA>& forms, const DPOverA& f) {
    for (const auto& l : forms)
        if (!contract(l, f).is_zero()) return false;
    return true;
}

}  // namespace

bool brute_force_cactus(const DPOverA& f, int r) {
    const auto& k = f.algebra();
    const Field& fd = k->field();
    if (k->dim() != 1) throw DomainError("brute force needs a tensor over the ground field");
    if (fd.is_rational() || fd.characteristic() > 7) throw DomainError("brute force needs a prime field of size at most 7");
    const int d = tensor_degree(f);
    const int nv = f.nvars();
    if (nv > 2 && r > 2) throw DomainError("brute force in P^n, n >= 2, only enumerates degree <= 2");
    if (r <= 0) return false;
    if (d == 0 || nv == 1) return true;
    if (nv == 2) {
        for (int e = 1; e <= r; ++e) {
            if (e > d) return true;
            const auto& basis = monomial_basis(2, e);
            if (any_normalized(fd, basis.size(), [&](const Vec& c) {
                    return contract(PolyOverA::from_vector(k, 2, e, c), f).is_zero();
                }))
                return true;
        }
        return false;
    }
    const std::size_t n = static_cast<std::size_t>(nv);
    // Points: the linear forms vanishing at p annihilate F.
    bool hit = any_normalized(fd, n, [&](const Vec& p) {
        std::vector<PolyOverA> forms;
        for (const auto& row : Subspace::span(fd, n, {p}).equations().row_list()) forms.push_back(linear_form(k, row));
        return annihilated_by(forms, f);
    });
    if (hit || r == 1) return hit;
    // Degree-2 schemes lie on a line L and are cut out there by a binary quadric q:
    // I(Z)_d contracts F to zero iff I(L)_1 and a lift of q do.
    std::set<std::vector<std::uint32_t>> seen;
    std::vector<Vec> points;
    any_normalized(fd, n, [&](const Vec& p) {
        points.push_back(p);
        return false;
    });
    for (std::size_t u = 0; u < points.size(); ++u) {
        for (std::size_t v = u + 1; v < points.size(); ++v) {
            Subspace line = Subspace::span(fd, n, {points[u], points[v]});
            std::vector<std::uint32_t> key;
            for (const auto& row : line.basis())
                for (const auto& s : row) key.push_back(s.residue());
            if (!seen.insert(key).second) continue;
            std::vector<PolyOverA> forms;
            for (const auto& row : line.equations().row_list()) forms.push_back(linear_form(k, row));
            if (!annihilated_by(forms, f)) continue;
            if (d < 2) return true;
            const int p0 = static_cast<int>(line.pivots()[0]), p1 = static_cast<int>(line.pivots()[1]);
            Exponent e00(n, 0), e01(n, 0), e11(n, 0);
            e00[static_cast<std::size_t>(p0)] = 2;
            e01[static_cast<std::size_t>(p0)] = e01[static_cast<std::size_t>(p1)] = 1;
            e11[static_cast<std::size_t>(p1)] = 2;
            if (any_normalized(fd, 3, [&](const Vec& c) {
                    PolyOverA q(k, nv);
                    q.add_term(e00, Vec{c[0]});
                    q.add_term(e01, Vec{c[1]});
                    q.add_term(e11, Vec{c[2]});
                    return contract(q, f).is_zero();
                }))
                return true;
        }
    }
    return false;
}

GradedIdeal base_change(const GradedIdeal& ideal, const AlgebraMap& xi) {
    const auto& a = *ideal.algebra();
    const auto& b = xi.target;
    std::vector<std::vector<Vec>> gens;
    for (int k = 0; k <= ideal.cap(); ++k) {
        const std::size_t w = monomial_count(ideal.nvars(), k);
        std::vector<Vec> images;
        for (const auto& v : ideal.piece(k).basis()) {
            Vec out = zero_vec(b->field(), b->dim() * w);
            for (std::size_t m = 0; m < w; ++m) {
                Vec coeff(a.dim());
                for (std::size_t i = 0; i < a.dim(); ++i) coeff[i] = v[i * w + m];
                Vec img = xi.apply(coeff);
                for (std::size_t i = 0; i < b->dim(); ++i) out[i * w + m] = img[i];
            }
            images.push_back(std::move(out));
        }
        gens.push_back(std::move(images));
    }
    return ideal_generate_vectors(b, ideal.nvars(), gens, ideal.cap());
}

ScanReport scan(int n, int d, int r, std::uint32_t p, unsigned jobs) {
    if (n < 1 || d < 1 || r < 1) throw DomainError("scan needs n, d, r >= 1");
    if (d < 2 * r) throw DomainError("d < 2r is outside the certified range");
    if (p != 2 && p != 3 && p != 5 && p != 7) throw DomainError("scan needs a prime field of size at most 7");
    if (n > 1 && r > 2) throw DomainError("brute force in P^n, n >= 2, only enumerates degree <= 2");
    const int nv = n + 1;
    const std::size_t len = monomial_count(nv, d);
    // Number of normalized vectors, (p^len - 1)/(p - 1), with an overflow guard.
    std::vector<std::uint64_t> block(len);
    std::uint64_t total = 0, pw = 1;
    for (std::size_t j = 0; j < len; ++j) {
        block[len - 1 - j] = pw;
        total += pw;
        if (total > scan_point_limit) throw DomainError("scan exceeds the point limit of 10^7");
        pw *= p;
    }
    Field fd = Field::prime(p);
    AlgebraPtr k = ArtinLocalAlgebra::ground(fd);
    const auto& mons = monomial_basis(nv, d).monomials;

    auto decode = [&](std::uint64_t t) {
        std::vector<long long> c(len, 0);
        std::size_t lead = 0;
        while (t >= block[lead]) t -= block[lead++];
        c[lead] = 1;
        for (std::size_t i = len; i-- > lead + 1;) {
            c[i] = static_cast<long long>(t % p);
            t /= p;
        }
        return c;
    };

    std::vector<ScanPoint> results(total);
    std::atomic<std::uint64_t> next{0};
    auto work = [&] {
        while (true) {
            const std::uint64_t t = next.fetch_add(1);
            if (t >= total) return;
            ScanPoint& pt = results[t];
            pt.coefficients = decode(t);
            DPOverA f(k, nv);
            for (std::size_t m = 0; m < len; ++m)
                if (pt.coefficients[m]) f.add_term(mons[m], Vec{fd.from_int(pt.coefficients[m])});
            pt.rank = cactus_stratum(f).rank;
            for (int rr = 1; rr <= r; ++rr)
                if (brute_force_cactus(f, rr)) {
                    pt.brute_class = rr;
                    break;
                }
        }
    };
    const unsigned workers = std::max(1u, jobs);
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();

    ScanReport rep;
    rep.points = total;
    for (auto& pt : results) {
        if (pt.rank >= rep.rank_counts.size()) rep.rank_counts.resize(pt.rank + 1, 0);
        ++rep.rank_counts[pt.rank];
        const bool agree = pt.rank <= static_cast<std::size_t>(r)
                               ? pt.brute_class && static_cast<std::size_t>(*pt.brute_class) == pt.rank
                               : !pt.brute_class;
        if (!agree) rep.disagreements.push_back(std::move(pt));
    }
    return rep;
}

}  // namespace apolar
