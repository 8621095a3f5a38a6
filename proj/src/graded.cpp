#include "apolar/graded.hpp"

#include <cctype>
#include <memory>
#include <mutex>

namespace apolar {

int total_degree(const Exponent& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

bool MonomialLess::operator()(const Exponent& a, const Exponent& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a > b;
}

std::size_t MonomialBasis::index(const Exponent& e) const {
    auto it = position.find(e);
    if (it == position.end()) throw DomainError("monomial not in basis of this degree");
    return it->second;
}

namespace {

void enumerate(int nvars, int var, int remaining, Exponent& cur, std::vector<Exponent>& out) {
    if (var == nvars - 1) {
        cur[static_cast<std::size_t>(var)] = remaining;
        out.push_back(cur);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur[static_cast<std::size_t>(var)] = e;
        enumerate(nvars, var + 1, remaining - e, cur, out);
    }
    cur[static_cast<std::size_t>(var)] = 0;
}

}  // namespace

const MonomialBasis& monomial_basis(int nvars, int degree) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<MonomialBasis>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{nvars, degree}];
    if (!slot) {
        auto b = std::make_unique<MonomialBasis>();
        b->nvars = nvars;
        b->degree = degree;
        if (degree >= 0) {
            if (nvars == 0) {
                if (degree == 0) b->monomials.push_back({});
            } else {
                Exponent cur(static_cast<std::size_t>(nvars), 0);
                enumerate(nvars, 0, degree, cur, b->monomials);
            }
        }
        for (std::size_t i = 0; i < b->monomials.size(); ++i) b->position[b->monomials[i]] = i;
        slot = std::move(b);
    }
    return *slot;
}

std::size_t monomial_count(int nvars, int degree) { return monomial_basis(nvars, degree).size(); }

template <GradedKind K>
GradedElement<K> GradedElement<K>::monomial(AlgebraPtr a, int nvars, const Exponent& e, const Vec& coeff) {
    GradedElement g(std::move(a), nvars);
    g.add_term(e, coeff);
    return g;
}

template <GradedKind K>
GradedElement<K> GradedElement<K>::from_vector(AlgebraPtr a, int nvars, int degree, const Vec& v) {
    const auto& basis = monomial_basis(nvars, degree);
    const std::size_t n = basis.size(), da = a->dim();
    if (v.size() != n * da) throw DomainError("from_vector: length mismatch");
    GradedElement g(a, nvars);
    for (std::size_t m = 0; m < n; ++m) {
        Vec c = zero_vec(a->field(), da);
        bool any = false;
        for (std::size_t i = 0; i < da; ++i) {
            c[i] = v[i * n + m];
            any = any || !c[i].is_zero();
        }
        if (any) g.terms_[basis.monomials[m]] = std::move(c);
    }
    return g;
}

template <GradedKind K>
void GradedElement<K>::add_term(const Exponent& e, const Vec& coeff) {
    if (static_cast<int>(e.size()) != nvars_) throw DomainError("term arity does not match variable count");
    if (coeff.size() != alg_->dim()) throw DomainError("term coefficient has wrong length");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!is_zero_vec(coeff)) terms_.emplace(e, coeff);
        return;
    }
    it->second = add(it->second, coeff);
    if (is_zero_vec(it->second)) terms_.erase(it);
}

template <GradedKind K>
std::optional<int> GradedElement<K>::degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) != d) return std::nullopt;
    return d;
}

template <GradedKind K>
int GradedElement<K>::max_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

template <GradedKind K>
GradedElement<K> GradedElement<K>::homogeneous_part(int k) const {
    GradedElement g(alg_, nvars_);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) == k) g.terms_.emplace(e, c);
    return g;
}

template <GradedKind K>
Vec GradedElement<K>::to_vector(int degree) const {
    const auto& basis = monomial_basis(nvars_, degree);
    const std::size_t n = basis.size(), da = alg_->dim();
    Vec v = zero_vec(alg_->field(), n * da);
    for (const auto& [e, c] : terms_) {
        if (total_degree(e) != degree) continue;
        std::size_t m = basis.index(e);
        for (std::size_t i = 0; i < da; ++i) v[i * n + m] = c[i];
    }
    return v;
}

template <GradedKind K>
GradedElement<K> GradedElement<K>::residue() const {
    GradedElement g(alg_, nvars_);
    for (const auto& [e, c] : terms_) {
        Vec r = zero_vec(alg_->field(), alg_->dim());
        r[0] = c[0];
        g.add_term(e, r);
    }
    return g;
}

template <GradedKind K>
void GradedElement<K>::check(const GradedElement& o) const {
    if (!alg_->same_as(*o.alg_)) throw DomainError("algebra mismatch");
    if (nvars_ != o.nvars_) throw DomainError("variable count mismatch");
}

template <GradedKind K>
GradedElement<K> GradedElement<K>::operator+(const GradedElement& o) const {
    check(o);
    GradedElement g = *this;
    for (const auto& [e, c] : o.terms_) g.add_term(e, c);
    return g;
}

template <GradedKind K>
GradedElement<K> GradedElement<K>::operator-(const GradedElement& o) const {
    check(o);
    GradedElement g = *this;
    Scalar m1 = -alg_->field().one();
    for (const auto& [e, c] : o.terms_) g.add_term(e, scale(m1, c));
    return g;
}

template <GradedKind K>
GradedElement<K> GradedElement<K>::scaled(const Vec& a) const {
    GradedElement g(alg_, nvars_);
    for (const auto& [e, c] : terms_) g.add_term(e, alg_->multiply(a, c));
    return g;
}

template <GradedKind K>
bool GradedElement<K>::operator==(const GradedElement& o) const {
    check(o);
    return terms_ == o.terms_;
}

template <GradedKind K>
std::vector<std::tuple<std::size_t, Exponent, Scalar>> GradedElement<K>::canonical_terms() const {
    std::vector<std::tuple<std::size_t, Exponent, Scalar>> out;
    for (std::size_t i = 0; i < alg_->dim(); ++i)
        for (const auto& [e, c] : terms_)
            if (!c[i].is_zero()) out.emplace_back(i, e, c[i]);
    return out;
}

namespace {

template <GradedKind K>
std::string monomial_text(const Exponent& e) {
    std::string out;
    const char* var = K == GradedKind::Operator ? "a" : "x";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += var + std::to_string(i);
        if (K == GradedKind::Operator) {
            if (e[i] > 1) out += "^" + std::to_string(e[i]);
        } else if (e[i] > 1) {
            out += "^(" + std::to_string(e[i]) + ")";
        }
    }
    return out;
}

}  // namespace

template <GradedKind K>
std::string GradedElement<K>::to_string() const {
    std::string out;
    for (const auto& [idx, e, c] : canonical_terms()) {
        std::string coeff = c.to_signed_string();
        bool neg = coeff[0] == '-';
        if (neg) coeff = coeff.substr(1);
        std::string alg = idx == 0 ? "" : alg_->basis_names()[idx];
        std::string mono = monomial_text<K>(e);
        std::vector<std::string> parts;
        if (coeff != "1" || (alg.empty() && mono.empty())) parts.push_back(coeff);
        if (!alg.empty()) parts.push_back(alg);
        if (!mono.empty()) parts.push_back(mono);
        std::string term;
        for (std::size_t i = 0; i < parts.size(); ++i) term += (i ? "*" : "") + parts[i];
        if (out.empty()) out = neg ? "-" + term : term;
        else out += (neg ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

template <GradedKind K>
GradedElement<K> GradedElement<K>::map_coefficients(const AlgebraMap& f) const {
    GradedElement g(f.target, nvars_);
    for (const auto& [e, c] : terms_) g.add_term(e, f.apply(c));
    return g;
}

template class GradedElement<GradedKind::Operator>;
template class GradedElement<GradedKind::State>;

PolyOverA operator*(const PolyOverA& a, const PolyOverA& b) {
    if (!a.algebra()->same_as(*b.algebra())) throw DomainError("algebra mismatch");
    if (a.nvars() != b.nvars()) throw DomainError("variable count mismatch");
    PolyOverA out(a.algebra(), a.nvars());
    for (const auto& [e, c] : a.terms())
        for (const auto& [f, d] : b.terms()) {
            Exponent sum(e.size());
            for (std::size_t i = 0; i < e.size(); ++i) sum[i] = e[i] + f[i];
            out.add_term(sum, a.algebra()->multiply(c, d));
        }
    return out;
}

DPOverA contract(const PolyOverA& theta, const DPOverA& g) {
    if (!theta.algebra()->same_as(*g.algebra())) throw DomainError("contract: algebra mismatch");
    if (theta.nvars() != g.nvars()) throw DomainError("contract: variable count mismatch");
    const auto& alg = theta.algebra();
    DPOverA out(alg, g.nvars());
    for (const auto& [e, c] : theta.terms())
        for (const auto& [f, d] : g.terms()) {
            Exponent diff(f.size());
            bool ok = true;
            for (std::size_t i = 0; i < f.size() && ok; ++i) {
                diff[i] = f[i] - e[i];
                ok = diff[i] >= 0;
            }
            if (ok) out.add_term(diff, alg->multiply(c, d));
        }
    return out;
}

Vec evaluate(const PolyOverA& theta, const DPOverA& t) {
    const auto& alg = theta.algebra();
    if (!alg->same_as(*t.algebra())) throw DomainError("evaluate: algebra mismatch");
    if (theta.nvars() != t.nvars()) throw DomainError("evaluate: variable count mismatch");
    std::vector<Vec> point(static_cast<std::size_t>(t.nvars()), zero_vec(alg->field(), alg->dim()));
    for (const auto& [e, c] : t.terms()) {
        if (total_degree(e) != 1) throw DomainError("evaluate: tensor must be linear in x");
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] == 1) point[i] = c;
    }
    Vec out = zero_vec(alg->field(), alg->dim());
    for (const auto& [e, c] : theta.terms()) {
        Vec term = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) term = alg->multiply(term, point[i]);
        out = add(out, term);
    }
    return out;
}

ExactMatrix multiplication_matrix(const AlgebraPtr& a, int nvars, int k, const PolyOverA& theta) {
    auto g = theta.degree();
    if (theta.is_zero()) g = 0;
    if (!g) throw DomainError("multiplication_matrix: operator must be homogeneous");
    const auto& src = monomial_basis(nvars, k);
    const auto& dst = monomial_basis(nvars, k + *g);
    const std::size_t da = a->dim(), ns = src.size(), nd = dst.size();
    ExactMatrix m(a->field(), da * nd, da * ns);
    for (const auto& [e, c] : theta.terms())
        for (std::size_t ms = 0; ms < ns; ++ms) {
            Exponent sum(e.size());
            for (std::size_t i = 0; i < e.size(); ++i) sum[i] = e[i] + src.monomials[ms][i];
            std::size_t md = dst.index(sum);
            for (std::size_t b = 0; b < da; ++b) {
                Vec prod = a->multiply(c, a->basis_vector(b));
                for (std::size_t r = 0; r < da; ++r)
                    if (!prod[r].is_zero()) m.set(r * nd + md, b * ns + ms, m(r * nd + md, b * ns + ms) + prod[r]);
            }
        }
    return m;
}

ExactMatrix contraction_matrix(const DPOverA& f, int k) {
    auto d = f.degree();
    if (f.is_zero()) d = 0;
    if (!d) throw DomainError("contraction_matrix: tensor must be homogeneous");
    const auto& a = f.algebra();
    const int nv = f.nvars();
    const auto& src = monomial_basis(nv, k);
    const auto& dst = monomial_basis(nv, *d - k);
    const std::size_t da = a->dim(), ns = src.size(), nd = dst.size();
    ExactMatrix m(a->field(), da * nd, da * ns);
    if (k > *d) return m;
    for (const auto& [fe, c] : f.terms())
        for (std::size_t ms = 0; ms < ns; ++ms) {
            const auto& e = src.monomials[ms];
            Exponent diff(fe.size());
            bool ok = true;
            for (std::size_t i = 0; i < fe.size() && ok; ++i) {
                diff[i] = fe[i] - e[i];
                ok = diff[i] >= 0;
            }
            if (!ok) continue;
            std::size_t md = dst.index(diff);
            for (std::size_t b = 0; b < da; ++b) {
                Vec prod = a->multiply(c, a->basis_vector(b));
                for (std::size_t r = 0; r < da; ++r)
                    if (!prod[r].is_zero()) m.set(r * nd + md, b * ns + ms, m(r * nd + md, b * ns + ms) + prod[r]);
            }
        }
    return m;
}

ExactMatrix algebra_action_matrix(const AlgebraPtr& a, std::size_t piece_dim, const Vec& elem) {
    const std::size_t da = a->dim();
    ExactMatrix m(a->field(), da * piece_dim, da * piece_dim);
    for (std::size_t b = 0; b < da; ++b) {
        Vec prod = a->multiply(elem, a->basis_vector(b));
        for (std::size_t r = 0; r < da; ++r)
            if (!prod[r].is_zero())
                for (std::size_t w = 0; w < piece_dim; ++w) m.set(r * piece_dim + w, b * piece_dim + w, prod[r]);
    }
    return m;
}

namespace {

Rational binomial(int n, int k) {
    Rational r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

class TermParser {
public:
    TermParser(const AlgebraPtr& a, const std::string& text, GradedKind kind)
        : alg_(a), text_(text), kind_(kind) {}

    struct Term {
        Vec coeff;
        Exponent exps;
    };

    std::vector<Term> parse() {
        std::vector<Term> out;
        skip();
        if (pos_ >= text_.size()) throw error("empty expression");
        bool first = true;
        while (pos_ < text_.size()) {
            bool negative = false;
            if (peek() == '+' || peek() == '-') {
                negative = peek() == '-';
                ++pos_;
                skip();
            } else if (!first) {
                throw error("expected '+' or '-'");
            }
            Term t = term();
            if (negative) t.coeff = scale(-alg_->field().one(), t.coeff);
            out.push_back(std::move(t));
            first = false;
            skip();
        }
        return out;
    }

    int max_index() const { return max_index_; }

private:
    ParseError error(const std::string& msg) const {
        return ParseError(msg + " at position " + std::to_string(pos_) + " in '" + text_ + "'");
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    long long integer() {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) throw error("expected integer");
        if (pos_ - start > 18) throw error("integer too large");
        return std::stoll(text_.substr(start, pos_ - start));
    }

    Term term() {
        const Field& f = alg_->field();
        Rational scalar = 1;
        Vec algpart = alg_->unit();
        Exponent exps;
        bool expect = true;
        while (expect) {
            skip();
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                Rational q = Rational(integer());
                skip();
                if (peek() == '/') {
                    ++pos_;
                    skip();
                    long long den = integer();
                    if (den == 0) throw error("zero denominator");
                    q /= den;
                }
                scalar *= q;
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t start = pos_;
                while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
                std::string name = text_.substr(start, pos_ - start);
                skip();
                const char var = kind_ == GradedKind::Operator ? 'a' : 'x';
                bool is_var = name.size() > 1 && name[0] == var &&
                              name.find_first_not_of("0123456789", 1) == std::string::npos;
                if (is_var) {
                    int idx = std::stoi(name.substr(1));
                    int power = 1;
                    if (peek() == '^') {
                        ++pos_;
                        skip();
                        if (kind_ == GradedKind::State) {
                            if (peek() != '(') throw error("divided powers are written x_i^(k)");
                            ++pos_;
                            skip();
                            power = static_cast<int>(integer());
                            skip();
                            if (peek() != ')') throw error("expected ')'");
                            ++pos_;
                        } else {
                            if (peek() == '(') throw error("operator powers are written a_i^k");
                            power = static_cast<int>(integer());
                        }
                    }
                    if (static_cast<std::size_t>(idx) >= exps.size()) exps.resize(static_cast<std::size_t>(idx) + 1, 0);
                    if (kind_ == GradedKind::State && exps[static_cast<std::size_t>(idx)] > 0)
                        scalar *= binomial(exps[static_cast<std::size_t>(idx)] + power, power);
                    exps[static_cast<std::size_t>(idx)] += power;
                    max_index_ = std::max(max_index_, idx);
                } else {
                    auto elem = alg_->element_for_name(name);
                    if (!elem) throw error("unknown symbol '" + name + "'");
                    int power = 1;
                    if (peek() == '^') {
                        ++pos_;
                        skip();
                        power = static_cast<int>(integer());
                    }
                    for (int k = 0; k < power; ++k) algpart = alg_->multiply(algpart, *elem);
                }
            } else {
                throw error("unexpected character");
            }
            skip();
            if (peek() == '*') {
                ++pos_;
            } else {
                expect = false;
            }
        }
        return {scale(f.from_rational(scalar), algpart), exps};
    }

    AlgebraPtr alg_;
    std::string text_;
    GradedKind kind_;
    std::size_t pos_ = 0;
    int max_index_ = -1;
};

template <GradedKind K>
GradedElement<K> parse_graded(const AlgebraPtr& a, const std::string& text, int nvars) {
    TermParser p(a, text, K);
    auto terms = p.parse();
    if (nvars < 0) nvars = std::max(1, p.max_index() + 1);
    if (p.max_index() >= nvars)
        throw ParseError("variable index " + std::to_string(p.max_index()) + " out of range in '" + text + "'");
    GradedElement<K> g(a, nvars);
    for (auto& t : terms) {
        t.exps.resize(static_cast<std::size_t>(nvars), 0);
        g.add_term(t.exps, t.coeff);
    }
    return g;
}

}  // namespace

PolyOverA parse_operator(const AlgebraPtr& a, const std::string& text, int nvars) {
    return parse_graded<GradedKind::Operator>(a, text, nvars);
}

DPOverA parse_state(const AlgebraPtr& a, const std::string& text, int nvars, int degree_cap) {
    DPOverA g = parse_graded<GradedKind::State>(a, text, nvars);
    if (degree_cap >= 0 && g.max_degree() > degree_cap)
        throw ParseError("state of degree " + std::to_string(g.max_degree()) + " exceeds the degree cap " +
                         std::to_string(degree_cap));
    return g;
}

DPOverA divided_power_of_linear(const AlgebraPtr& a, const std::vector<Vec>& coeffs, int d) {
    const int nv = static_cast<int>(coeffs.size());
    DPOverA out(a, nv);
    for (const auto& e : monomial_basis(nv, d).monomials) {
        Vec c = a->unit();
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) c = a->multiply(c, coeffs[i]);
        out.add_term(e, c);
    }
    return out;
}

}  // namespace apolar
