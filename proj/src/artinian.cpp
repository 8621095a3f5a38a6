#include "apolar/artinian.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace apolar {

namespace {

bool divides(const Exponent& a, const Exponent& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

std::vector<Exponent> minimize(std::vector<Exponent> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Exponent> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
            if (i != j && divides(gens[j], gens[i])) redundant = true;
        if (!redundant) out.push_back(gens[i]);
    }
    return out;
}

int total_degree(const Exponent& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

std::string monomial_name(const std::vector<std::string>& vars, const Exponent& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += vars[i];
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out.empty() ? "1" : out;
}

}  // namespace

MonomialQuotientPresentation MonomialQuotientPresentation::parse(std::vector<std::string> vars,
                                                                 const std::vector<std::string>& monomials) {
    MonomialQuotientPresentation p;
    p.var_names = std::move(vars);
    for (const auto& text : monomials) {
        Exponent e(p.var_names.size(), 0);
        std::stringstream ss(text);
        std::string factor;
        bool any = false;
        while (std::getline(ss, factor, '*')) {
            factor.erase(std::remove_if(factor.begin(), factor.end(), ::isspace), factor.end());
            if (factor.empty()) throw ParseError("empty factor in monomial '" + text + "'");
            if (factor == "1") { any = true; continue; }
            std::string name = factor;
            int power = 1;
            auto caret = factor.find('^');
            if (caret != std::string::npos) {
                name = factor.substr(0, caret);
                std::string pw = factor.substr(caret + 1);
                if (pw.empty() || pw.find_first_not_of("0123456789") != std::string::npos)
                    throw ParseError("bad exponent in monomial '" + text + "'");
                power = std::stoi(pw);
            }
            auto it = std::find(p.var_names.begin(), p.var_names.end(), name);
            if (it == p.var_names.end()) throw ParseError("unknown algebra variable '" + name + "' in '" + text + "'");
            e[static_cast<std::size_t>(it - p.var_names.begin())] += power;
            any = true;
        }
        if (!any) throw ParseError("empty monomial");
        p.generators.push_back(e);
    }
    return p;
}

AlgebraPtr ArtinLocalAlgebra::from_presentation(const Field& f, const MonomialQuotientPresentation& p0) {
    MonomialQuotientPresentation p = p0;
    const std::size_t m = p.var_names.size();
    for (const auto& g : p.generators)
        if (g.size() != m) throw DomainError("generator arity does not match variable count");
    p.generators = minimize(p.generators);
    for (const auto& g : p.generators)
        if (total_degree(g) == 0) throw DomainError("presentation contains the unit monomial");

    Exponent bound(m, 0);
    for (std::size_t v = 0; v < m; ++v) {
        int best = 0;
        for (const auto& g : p.generators) {
            bool pure = g[v] > 0;
            for (std::size_t u = 0; u < m && pure; ++u)
                if (u != v && g[u] != 0) pure = false;
            if (pure && (best == 0 || g[v] < best)) best = g[v];
        }
        if (best == 0) throw DomainError("not Artinian: no pure power of '" + p.var_names[v] + "' in the ideal");
        bound[v] = best;
    }

    std::vector<Exponent> standard;
    Exponent e(m, 0);
    while (true) {
        bool in_j = false;
        for (const auto& g : p.generators)
            if (divides(g, e)) { in_j = true; break; }
        if (!in_j) standard.push_back(e);
        std::size_t v = 0;
        while (v < m) {
            if (++e[v] < bound[v]) break;
            e[v] = 0;
            ++v;
        }
        if (v == m) break;
    }
    std::sort(standard.begin(), standard.end(), [](const Exponent& a, const Exponent& b) {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a > b;
    });

    auto alg = std::shared_ptr<ArtinLocalAlgebra>(new ArtinLocalAlgebra(f));
    alg->monomials_ = standard;
    for (const auto& s : standard) alg->names_.push_back(monomial_name(p.var_names, s));
    std::map<Exponent, std::size_t> index;
    for (std::size_t i = 0; i < standard.size(); ++i) index[standard[i]] = i;
    const std::size_t n = standard.size();
    alg->table_.assign(n * n, {});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Exponent sum(m);
            for (std::size_t v = 0; v < m; ++v) sum[v] = standard[i][v] + standard[j][v];
            auto it = index.find(sum);
            if (it != index.end()) alg->table_[i * n + j].push_back({it->second, f.one()});
        }
    alg->presentation_ = p;
    alg->finish();
    return alg;
}

AlgebraPtr ArtinLocalAlgebra::ground(const Field& f) {
    return from_presentation(f, MonomialQuotientPresentation{});
}

AlgebraPtr ArtinLocalAlgebra::from_table(const Field& f, std::vector<std::string> names,
                                         const std::vector<std::vector<Vec>>& table) {
    const std::size_t n = names.size();
    if (n == 0) throw DomainError("algebra table must be nonempty");
    auto alg = std::shared_ptr<ArtinLocalAlgebra>(new ArtinLocalAlgebra(f));
    alg->names_ = std::move(names);
    alg->table_.assign(n * n, {});
    if (table.size() != n) throw DomainError("algebra table has wrong size");
    for (std::size_t i = 0; i < n; ++i) {
        if (table[i].size() != n) throw DomainError("algebra table has wrong size");
        for (std::size_t j = 0; j < n; ++j) {
            if (table[i][j].size() != n) throw DomainError("algebra table entry has wrong length");
            for (std::size_t k = 0; k < n; ++k)
                if (!table[i][j][k].is_zero()) alg->table_[i * n + j].push_back({k, table[i][j][k]});
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        Vec ei = alg->basis_vector(i);
        if (alg->multiply(alg->unit(), ei) != ei || alg->multiply(ei, alg->unit()) != ei)
            throw DomainError("basis element 0 is not the unit");
        for (std::size_t j = 0; j < n; ++j) {
            Vec ej = alg->basis_vector(j);
            if (alg->multiply(ei, ej) != alg->multiply(ej, ei)) throw DomainError("algebra table is not commutative");
            for (std::size_t k = 0; k < n; ++k) {
                Vec ek = alg->basis_vector(k);
                if (alg->multiply(alg->multiply(ei, ej), ek) != alg->multiply(ei, alg->multiply(ej, ek)))
                    throw DomainError("algebra table is not associative");
            }
        }
    }
    alg->finish();
    return alg;
}

void ArtinLocalAlgebra::finish() {
    const std::size_t n = dim();
    powers_.clear();
    powers_.push_back(Subspace::whole(field_, n));
    std::vector<Vec> mbasis;
    for (std::size_t i = 1; i < n; ++i) mbasis.push_back(basis_vector(i));
    powers_.push_back(Subspace::span(field_, n, mbasis));
    while (powers_.back().dim() > 0) {
        if (powers_.size() > n + 1) throw DomainError("maximal ideal is not nilpotent: algebra is not local");
        std::vector<Vec> next;
        for (const auto& b : mbasis)
            for (const auto& v : powers_.back().basis()) next.push_back(multiply(b, v));
        powers_.push_back(Subspace::span(field_, n, next));
    }
    loewy_ = powers_.size() - 1;
}

const Subspace& ArtinLocalAlgebra::maximal_power(std::size_t j) const {
    return j < powers_.size() ? powers_[j] : powers_.back();
}

Vec ArtinLocalAlgebra::multiply(const Vec& a, const Vec& b) const {
    const std::size_t n = dim();
    Vec out = zero_vec(field_, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j].is_zero()) continue;
            Scalar c = a[i] * b[j];
            for (const auto& t : table_[i * n + j]) out[t.index] += c * t.coeff;
        }
    }
    return out;
}

Vec ArtinLocalAlgebra::unit() const { return basis_vector(0); }

Vec ArtinLocalAlgebra::basis_vector(std::size_t i) const {
    Vec v = zero_vec(field_, dim());
    v[i] = field_.one();
    return v;
}

ExactMatrix ArtinLocalAlgebra::multiplication_matrix(const Vec& a) const {
    const std::size_t n = dim();
    ExactMatrix m(field_, n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Vec col = multiply(a, basis_vector(j));
        for (std::size_t i = 0; i < n; ++i) m.set(i, j, col[i]);
    }
    return m;
}

Subspace ArtinLocalAlgebra::socle() const {
    const std::size_t n = dim();
    ExactMatrix stacked(field_, 0, n);
    for (std::size_t i = 1; i < n; ++i) stacked = stacked.vstack(multiplication_matrix(basis_vector(i)));
    return Subspace::kernel(stacked);
}

Vec ArtinLocalAlgebra::socle_generator() const {
    Subspace s = socle();
    if (s.dim() != 1) throw DomainError("algebra is not Gorenstein (socle dimension " + std::to_string(s.dim()) + ")");
    return s.basis()[0];
}

bool ArtinLocalAlgebra::is_dual_numbers() const { return dim() == 2; }

std::optional<Vec> ArtinLocalAlgebra::element_for_name(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return basis_vector(i);
    if (presentation_) {
        const auto& vars = presentation_->var_names;
        auto it = std::find(vars.begin(), vars.end(), name);
        if (it != vars.end()) return zero_vec(field_, dim());  // the variable itself lies in J
    }
    return std::nullopt;
}

std::string ArtinLocalAlgebra::format(const Vec& a) const {
    std::string out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        std::string c = a[i].to_signed_string();
        bool neg = !c.empty() && c[0] == '-';
        if (neg) c = c.substr(1);
        std::string term;
        if (i == 0) term = c;
        else if (c == "1") term = names_[i];
        else term = c + "*" + names_[i];
        if (out.empty()) out = neg ? "-" + term : term;
        else out += (neg ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

bool ArtinLocalAlgebra::same_as(const ArtinLocalAlgebra& o) const {
    if (this == &o) return true;
    if (field_ != o.field_ || names_ != o.names_) return false;
    const std::size_t n = dim();
    for (std::size_t k = 0; k < n * n; ++k) {
        const auto& a = table_[k];
        const auto& b = o.table_[k];
        if (a.size() != b.size()) return false;
        for (std::size_t t = 0; t < a.size(); ++t)
            if (a[t].index != b[t].index || a[t].coeff != b[t].coeff) return false;
    }
    return true;
}

AlgebraElement::AlgebraElement(AlgebraPtr a, Vec coeffs) : alg_(std::move(a)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != alg_->dim()) throw DomainError("algebra element has wrong length");
}

AlgebraElement AlgebraElement::zero(AlgebraPtr a) {
    Vec z = zero_vec(a->field(), a->dim());
    return AlgebraElement(std::move(a), std::move(z));
}

AlgebraElement AlgebraElement::one(AlgebraPtr a) {
    Vec u = a->unit();
    return AlgebraElement(std::move(a), std::move(u));
}

void AlgebraElement::check(const AlgebraElement& o) const {
    if (!alg_->same_as(*o.alg_)) throw DomainError("algebra mismatch");
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    check(o);
    return AlgebraElement(alg_, add(coeffs_, o.coeffs_));
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    check(o);
    return AlgebraElement(alg_, add(coeffs_, scale(-alg_->field().one(), o.coeffs_)));
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    check(o);
    return AlgebraElement(alg_, alg_->multiply(coeffs_, o.coeffs_));
}

AlgebraElement AlgebraElement::operator-() const {
    return AlgebraElement(alg_, scale(-alg_->field().one(), coeffs_));
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    check(o);
    return coeffs_ == o.coeffs_;
}

namespace {

std::size_t adic_order(const ArtinLocalAlgebra& a, const Vec& v) {
    std::size_t j = 0;
    while (j + 1 <= a.socle_degree() + 1 && a.maximal_power(j + 1).contains(v)) ++j;
    return j;
}

}  // namespace

Vec multiply_to_socle(const ArtinLocalAlgebra& a, const std::vector<Vec>& elements) {
    if (!a.is_gorenstein()) throw DomainError("multiply_to_socle requires a Gorenstein algebra");
    std::vector<Vec> cur = elements;
    bool any = false;
    for (const auto& v : cur) any = any || !is_zero_vec(v);
    if (!any) throw DomainError("multiply_to_socle: all inputs are zero");

    const std::size_t d = a.socle_degree();
    Vec b = a.unit();
    while (true) {
        std::size_t k = d + 1, i0 = 0;
        for (std::size_t i = 0; i < cur.size(); ++i) {
            if (is_zero_vec(cur[i])) continue;
            std::size_t o = adic_order(a, cur[i]);
            if (o < k) { k = o; i0 = i; }
        }
        if (k >= d) return b;
        std::size_t pick = 0;
        for (std::size_t j = 1; j < a.dim() && pick == 0; ++j)
            if (!is_zero_vec(a.multiply(a.basis_vector(j), cur[i0]))) pick = j;
        if (pick == 0) throw DomainError("multiply_to_socle: element outside the socle is killed by m");
        Vec bk = a.basis_vector(pick);
        for (auto& v : cur) v = a.multiply(bk, v);
        b = a.multiply(b, bk);
    }
}

AlgebraMap quotient_by_ideal(const AlgebraPtr& a, const Subspace& ideal) {
    const std::size_t n = a->dim();
    const Field& f = a->field();
    for (const auto& v : ideal.basis())
        for (std::size_t i = 0; i < n; ++i)
            if (!ideal.contains(a->multiply(a->basis_vector(i), v)))
                throw DomainError("quotient_by_ideal: subspace is not an ideal");
    std::vector<bool> pivot(n, false);
    for (auto p : ideal.pivots()) pivot[p] = true;
    if (pivot[0]) throw DomainError("quotient collapses the unit");
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i)
        if (!pivot[i]) keep.push_back(i);
    const std::size_t q = keep.size();

    ExactMatrix proj(f, q, n);
    for (std::size_t j = 0; j < n; ++j) {
        Vec r = ideal.reduce(a->basis_vector(j));
        for (std::size_t i = 0; i < q; ++i) proj.set(i, j, r[keep[i]]);
    }
    std::vector<std::string> names;
    for (auto i : keep) names.push_back(a->basis_names()[i]);
    std::vector<std::vector<Vec>> table(q, std::vector<Vec>(q));
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j)
            table[i][j] = proj * a->multiply(a->basis_vector(keep[i]), a->basis_vector(keep[j]));
    return {ArtinLocalAlgebra::from_table(f, names, table), proj};
}

GorensteinWitness gorenstein_witness(const ArtinLocalAlgebra& a0, const Vec& f) {
    if (is_zero_vec(f)) throw DomainError("gorenstein_witness: f must be nonzero");
    const Field& fld = a0.field();
    // Work on a private copy so quotient maps compose against a shared pointer.
    AlgebraPtr a = std::make_shared<ArtinLocalAlgebra>(a0);
    AlgebraPtr cur = a;
    ExactMatrix total = ExactMatrix::identity(fld, a->dim());
    std::size_t steps = 0;
    while (true) {
        Vec fbar = total * f;
        Subspace soc = cur->socle();
        Subspace line = Subspace::span(fld, cur->dim(), {fbar});
        if (soc == line) {
            GorensteinWitness w{Subspace::kernel(total), cur, total, fbar, steps};
            return w;
        }
        const Vec* pick = nullptr;
        for (const auto& g : soc.basis())
            if (!line.contains(g)) { pick = &g; break; }
        if (!pick) throw DomainError("gorenstein_witness: f is not reachable");  // soc strictly inside <f>: impossible
        AlgebraMap q = quotient_by_ideal(cur, Subspace::span(fld, cur->dim(), {*pick}));
        total = q.matrix * total;
        cur = q.target;
        ++steps;
    }
}

AlgebraMap algebra_quotient(const AlgebraPtr& a, const std::vector<Exponent>& extra) {
    if (!a->presentation()) throw DomainError("algebra_quotient requires a monomial presentation");
    MonomialQuotientPresentation p = *a->presentation();
    for (const auto& e : extra) {
        if (e.size() != p.var_names.size()) throw DomainError("monomial arity mismatch");
        if (total_degree(e) == 0) throw DomainError("quotient collapses the unit");
        p.generators.push_back(e);
    }
    AlgebraPtr b = ArtinLocalAlgebra::from_presentation(a->field(), p);
    ExactMatrix m(a->field(), b->dim(), a->dim());
    const auto& bm = b->basis_monomials();
    for (std::size_t j = 0; j < a->dim(); ++j) {
        auto it = std::find(bm.begin(), bm.end(), a->basis_monomials()[j]);
        if (it != bm.end()) m.set(static_cast<std::size_t>(it - bm.begin()), j, a->field().one());
    }
    return {b, m};
}

AlgebraMap algebra_map_from_images(const AlgebraPtr& a, const AlgebraPtr& b, const std::vector<Vec>& images) {
    if (!a->presentation()) throw DomainError("algebra map requires a monomial presentation of the source");
    const auto& p = *a->presentation();
    if (images.size() != p.var_names.size()) throw DomainError("algebra map: wrong number of images");
    auto power_product = [&](const Exponent& e) {
        Vec v = b->unit();
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) v = b->multiply(v, images[i]);
        return v;
    };
    for (const auto& g : p.generators)
        if (!is_zero_vec(power_product(g))) throw DomainError("algebra map does not kill the defining ideal");
    std::vector<Vec> cols;
    for (const auto& e : a->basis_monomials()) cols.push_back(power_product(e));
    return {b, ExactMatrix::from_columns(a->field(), b->dim(), cols)};
}

std::vector<std::pair<std::string, AlgebraPtr>> algebra_catalog(const Field& f) {
    std::vector<std::pair<std::string, AlgebraPtr>> out;
    out.emplace_back("t2", ArtinLocalAlgebra::from_presentation(f, MonomialQuotientPresentation::parse({"t"}, {"t^2"})));
    out.emplace_back("t3", ArtinLocalAlgebra::from_presentation(f, MonomialQuotientPresentation::parse({"t"}, {"t^3"})));
    out.emplace_back("s2t2", ArtinLocalAlgebra::from_presentation(
                                 f, MonomialQuotientPresentation::parse({"s", "t"}, {"s^2", "t^2"})));
    out.emplace_back("s2stt2", ArtinLocalAlgebra::from_presentation(
                                   f, MonomialQuotientPresentation::parse({"s", "t"}, {"s^2", "s*t", "t^2"})));
    out.emplace_back("s3t3", ArtinLocalAlgebra::from_presentation(
                                 f, MonomialQuotientPresentation::parse({"s", "t"}, {"s^3", "t^3"})));
    return out;
}

AlgebraPtr catalog_algebra(const Field& f, const std::string& name) {
    for (auto& [n, a] : algebra_catalog(f))
        if (n == name) return a;
    throw DomainError("unknown catalog algebra '" + name + "'");
}

}  // namespace apolar
