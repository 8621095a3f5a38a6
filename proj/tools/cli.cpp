#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <json.hpp>
#include <set>

#include "apolar/error.hpp"
#include "apolar/families.hpp"
#include "fixtures.hpp"

namespace apolar::tools {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string field = "p=101";
    int cap = -1;
    std::uint64_t seed = 0;
    std::string out = "text";
    unsigned jobs = 1;
    bool timing = false;
    std::string problem;
    int n = 1, d = 4, r = 2;
    std::uint32_t p = 3;
    bool field_set = false, seed_set = false;
};

const std::set<std::string> problem_keys{"field", "algebra", "nvars", "tensor", "ideal", "h", "r", "i", "j", "d", "cap", "seed"};

class Problem {
public:
    Problem(const Options& o) : path_(o.problem) {
        if (path_.empty()) throw UsageError("missing problem file");
        std::ifstream in(path_);
        if (!in) throw UsageError(path_ + ": cannot open");
        try {
            doc_ = json::parse(in);
        } catch (const json::parse_error& e) {
            throw UsageError(path_ + ": " + e.what());
        }
        if (!doc_.is_object()) throw UsageError(path_ + ": top level must be an object");
        for (const auto& [key, value] : doc_.items())
            if (!problem_keys.count(key)) throw UsageError(path_ + ": unknown key '" + key + "'");
        std::string spec = o.field;
        if (!o.field_set && doc_.contains("field")) spec = string_key("field");
        try {
            field_ = Field::parse(spec);
        } catch (const std::exception& e) {
            throw UsageError(path_ + ": field: " + e.what());
        }
        algebra_ = load_algebra();
        seed_ = o.seed_set || !doc_.contains("seed") ? o.seed : static_cast<std::uint64_t>(int_key("seed"));
        cap_flag_ = o.cap;
    }

    const Field& field() const { return field_; }
    const AlgebraPtr& algebra() const { return algebra_; }
    std::uint64_t seed() const { return seed_; }
    bool has(const std::string& key) const { return doc_.contains(key); }

    int int_key(const std::string& key) const {
        if (!doc_.contains(key)) throw UsageError(path_ + ": missing key '" + key + "'");
        const auto& v = doc_.at(key);
        if (!v.is_number_integer()) throw UsageError(path_ + ": key '" + key + "' must be an integer");
        return v.get<int>();
    }
    std::optional<int> opt_int(const std::string& key) const {
        if (!doc_.contains(key)) return std::nullopt;
        return int_key(key);
    }
    std::string string_key(const std::string& key) const {
        if (!doc_.contains(key)) throw UsageError(path_ + ": missing key '" + key + "'");
        const auto& v = doc_.at(key);
        if (!v.is_string()) throw UsageError(path_ + ": key '" + key + "' must be a string");
        return v.get<std::string>();
    }

    /// Flag, then problem file, then the fallback.
    int cap(int fallback) const {
        if (cap_flag_ >= 0) return cap_flag_;
        if (auto c = opt_int("cap")) return *c;
        return fallback;
    }

    DPOverA tensor() const {
        const std::string text = string_key("tensor");
        try {
            return parse_state(algebra_, text, opt_int("nvars").value_or(-1));
        } catch (const ParseError& e) {
            throw UsageError(path_ + ": tensor: " + e.what());
        }
    }

    std::vector<PolyOverA> ideal_generators() const {
        if (!doc_.contains("ideal") || !doc_.at("ideal").is_array())
            throw UsageError(path_ + ": key 'ideal' must be an array of strings");
        std::vector<std::string> texts;
        for (const auto& g : doc_.at("ideal")) {
            if (!g.is_string()) throw UsageError(path_ + ": key 'ideal' must be an array of strings");
            texts.push_back(g.get<std::string>());
        }
        int nv = opt_int("nvars").value_or(-1);
        try {
            if (nv < 0)
                for (const auto& t : texts) nv = std::max(nv, parse_operator(algebra_, t).nvars());
            std::vector<PolyOverA> out;
            for (const auto& t : texts) out.push_back(parse_operator(algebra_, t, std::max(nv, 1)));
            return out;
        } catch (const ParseError& e) {
            throw UsageError(path_ + ": ideal: " + e.what());
        }
    }

    GradedIdeal ideal(int cap) const {
        auto gens = ideal_generators();
        if (gens.empty()) throw UsageError(path_ + ": key 'ideal' is empty");
        return ideal_generate(algebra_, gens[0].nvars(), gens, cap);
    }

    std::vector<std::size_t> hilbert_values() const {
        const auto& v = doc_.at("h");
        if (!v.is_array()) throw UsageError(path_ + ": key 'h' must be an array of integers");
        std::vector<std::size_t> h;
        for (const auto& x : v) {
            if (!x.is_number_unsigned()) throw UsageError(path_ + ": key 'h' must be an array of integers");
            h.push_back(x.get<std::size_t>());
        }
        return h;
    }

private:
    AlgebraPtr load_algebra() const {
        if (!doc_.contains("algebra")) return ArtinLocalAlgebra::ground(field_);
        const auto& a = doc_.at("algebra");
        try {
            if (a.is_string()) {
                const std::string name = a.get<std::string>();
                if (name == "k") return ArtinLocalAlgebra::ground(field_);
                return catalog_algebra(field_, name);
            }
            if (!a.is_object()) throw UsageError(path_ + ": key 'algebra' must be a name or an object");
            for (const auto& [key, value] : a.items())
                if (key != "vars" && key != "relations") throw UsageError(path_ + ": algebra: unknown key '" + key + "'");
            auto vars = a.at("vars").get<std::vector<std::string>>();
            auto rels = a.at("relations").get<std::vector<std::string>>();
            return ArtinLocalAlgebra::from_presentation(field_, MonomialQuotientPresentation::parse(vars, rels));
        } catch (const json::exception& e) {
            throw UsageError(path_ + ": algebra: " + e.what());
        } catch (const ParseError& e) {
            throw UsageError(path_ + ": algebra: " + e.what());
        } catch (const DomainError& e) {
            throw UsageError(path_ + ": algebra: " + e.what());
        }
    }

    std::string path_;
    json doc_;
    Field field_ = Field::prime(101);
    AlgebraPtr algebra_;
    std::uint64_t seed_ = 0;
    int cap_flag_ = -1;
};

int degree_of(const DPOverA& f) {
    auto d = f.degree();
    if (!d) throw DomainError("tensor must be homogeneous and nonzero");
    return *d;
}

json generators_by_degree(const GradedIdeal& ideal) {
    json g = json::object();
    for (const auto& p : ideal.minimal_generators()) g[std::to_string(p.degree().value_or(0))].push_back(p.to_string());
    return g;
}

json size_list(const std::vector<std::size_t>& v) {
    json a = json::array();
    for (auto x : v) a.push_back(x);
    return a;
}

json monomial_names(int nvars, int d) {
    json a = json::array();
    for (const auto& e : monomial_basis(nvars, d).monomials) {
        std::string s;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += "a" + std::to_string(i);
            if (e[i] > 1) s += "^" + std::to_string(e[i]);
        }
        a.push_back(s.empty() ? "1" : s);
    }
    return a;
}

json familiar_json(const FamiliarReport& f) {
    return json{{"finite", f.finite},
                {"degree_r", f.degree_r},
                {"flat", f.flat},
                {"special_fiber_h", size_list(f.special_h)},
                {"certified_through", f.certified_through}};
}

json cmd_ann(const Problem& pb) {
    DPOverA f = pb.tensor();
    const int d = degree_of(f);
    const int cap = pb.cap(2 * d + 2);
    GradedIdeal ann = annihilator(f, cap);
    return json{{"degree", d},
                {"certified_through", cap},
                {"generators", generators_by_degree(ann)},
                {"hilbert_function", size_list(apolar_hilbert_function(f))}};
}

json cmd_cata(const Problem& pb) {
    DPOverA f = pb.tensor();
    const int d = degree_of(f);
    auto r = pb.opt_int("r");
    std::vector<int> degrees;
    if (auto i = pb.opt_int("i")) degrees.push_back(*i);
    else
        for (int i = 0; i <= d; ++i) degrees.push_back(i);
    json rows = json::array();
    for (int i : degrees) {
        AMatrix m = catalecticant(f, i);
        json row{{"i", i}, {"rows", m.rows()}, {"cols", m.cols()}, {"residue_rank", rank(m.residue())}};
        if (r && static_cast<std::size_t>(*r) + 1 <= std::min(m.rows(), m.cols())) {
            RankProfile p = rank_profile(m, *r);
            row["minors_vanish"] = p.minors_vanish;
            row["exhaustive"] = p.exhaustive;
            row["constant_rank"] = p.constant_rank;
            row["minors_checked"] = p.minors_checked;
        }
        rows.push_back(row);
    }
    return json{{"degree", d}, {"catalecticants", rows}};
}

json cmd_stratum(const Problem& pb) {
    DPOverA f = pb.tensor();
    const int d = degree_of(f);
    StratumReport s = cactus_stratum(f);
    return json{{"degree", d}, {"i", d / 2}, {"rank", s.rank}, {"certified", s.certified}};
}

json cmd_span(const Problem& pb, int& code) {
    const int d = pb.int_key("d");
    GradedIdeal ideal = pb.ideal(pb.cap(2 * d + 2));
    SpanOverA span = veronese_span(ideal, d);
    json res{{"degree", d}, {"ambient", monomial_names(ideal.nvars(), d)}};
    auto fd = span.fiber_dimension();
    res["fiber_dimension"] = fd ? json(*fd) : json(nullptr);
    json gens = json::array();
    for (const auto& g : span.linear_generators()) gens.push_back(g.to_string());
    res["generators"] = gens;
    if (auto r = pb.opt_int("r")) {
        FamiliarReport fam = familiar_report(ideal, *r);
        res["familiar"] = familiar_json(fam);
        res["familiar"]["independent"] = fam.independent_at(d);
        try {
            SpanRankReport sr = span_rank_check(ideal, d, *r);
            json comp = json::array();
            for (const auto& e : sr.complement) comp.push_back(PolyOverA::monomial(ideal.algebra(), ideal.nvars(), e, ideal.algebra()->unit()).to_string());
            res["rank_check"] = json{{"holds", sr.holds}, {"complement", comp}};
        } catch (const DomainError& e) {
            res["rank_check"] = json{{"refused", e.what()}};
            code = DomainFailure;
        }
    }
    return res;
}

json cmd_relspan(const Problem& pb) {
    auto d = pb.opt_int("d");
    const int cap = pb.cap(d ? 2 * *d + 2 : 4);
    GradedIdeal ideal = pb.ideal(d ? std::max(cap, *d) : cap);
    GradedIdeal span = d ? veronese_span(ideal, *d).ideal(cap) : generated_in_degrees(ideal, 1);
    GradedIdeal rel = relative_span_ideal(span);
    json res{{"certified_through", rel.cap()}};
    if (d) res["ambient"] = monomial_names(ideal.nvars(), *d);
    res["generators"] = generators_by_degree(rel);
    return res;
}

json cmd_lift(const Problem& pb, int& code) {
    DPOverA f = pb.tensor();
    const int d = degree_of(f);
    const int r = pb.int_key("r");
    const int i = pb.opt_int("i").value_or(d / 2);
    LiftResult lift = lift_to_familiar(f, r, i, pb.cap(2 * d + 2));
    if (!lift.ok) code = DomainFailure;
    json res{{"ok", lift.ok},
             {"certified_through", lift.certified_through},
             {"generators", generators_by_degree(lift.ideal)},
             {"familiar", familiar_json(lift.report)},
             {"inside_annihilator", lift.ann_contains},
             {"in_span", lift.in_span},
             {"matches_generated_ideal", lift.generated_matches}};
    if (!lift.diagnostics.empty()) res["diagnostics"] = lift.diagnostics;
    return res;
}

json growth_json(const GrowthReport& g) {
    json res{{"h", size_list(g.h)},
             {"classical",
              {{"macaulay_bound", to_string(g.classical.macaulay_bound)},
               {"macaulay_ok", to_string(g.classical.macaulay_ok)},
               {"gotzmann_persists", to_string(g.classical.gotzmann_persists)},
               {"saturated_in_degrees", to_string(g.classical.saturated_in_degrees)},
               {"weak_lefschetz_ok", to_string(g.classical.weak_lefschetz_ok)},
               {"weak_lefschetz_saturated", to_string(g.classical.weak_lefschetz_saturated)},
               {"weak_lefschetz_forms_tried", g.classical.weak_lefschetz_forms_tried}}}};
    if (g.relative) {
        const auto& rel = *g.relative;
        res["relative"] = json{{"hypotheses", rel.hypotheses},
                               {"relative_flat_range", to_string(rel.relative_flat_range)},
                               {"no_new_generators_range", to_string(rel.no_new_generators_range)},
                               {"truncation_matches_saturation", to_string(rel.truncation_matches_saturation)},
                               {"saturation_flat_from_r_minus_1", to_string(rel.saturation_flat_from_r_minus_1)},
                               {"certified_through", rel.certified_through}};
    }
    return res;
}

json cmd_growth(const Problem& pb) {
    const int r = pb.int_key("r");
    const int i = pb.int_key("i");
    if (pb.has("h")) return growth_json(growth_report(pb.hilbert_values(), r, i));
    GradedIdeal ideal = pb.ideal(pb.cap(8));
    return growth_json(growth_report(ideal, r, i, pb.opt_int("j"), pb.seed()));
}

json cmd_probe(const Problem& pb) {
    SaturationProbe probe = saturation_probe(pb.ideal(pb.cap(8)));
    json res{{"linear", probe.saturation_is_linear_up_to_cap}, {"certified_through", probe.certified_through}};
    res["witness_degree"] = probe.witness_degree ? json(*probe.witness_degree) : json(nullptr);
    res["saturation_generators"] = generators_by_degree(probe.saturation);
    return res;
}

json cmd_scan(const Options& o, int& code) {
    ScanReport rep = scan(o.n, o.d, o.r, o.p, o.jobs);
    json dis = json::array();
    for (const auto& pt : rep.disagreements) {
        json c = json::array();
        for (auto x : pt.coefficients) c.push_back(x);
        dis.push_back(json{{"coefficients", c},
                           {"rank", pt.rank},
                           {"brute_force_class", pt.brute_class ? json(*pt.brute_class) : json(nullptr)}});
    }
    if (!rep.disagreements.empty()) code = DomainFailure;
    return json{{"n", o.n},         {"d", o.d},
                {"r", o.r},         {"p", o.p},
                {"ambient", monomial_names(o.n + 1, o.d)},
                {"points", rep.points}, {"rank_counts", size_list(rep.rank_counts)},
                {"disagreement_count", rep.disagreements.size()}, {"disagreements", dis}};
}

json cmd_verify(const Options& o, int& code) {
    json rows = json::array();
    std::size_t passed = 0;
    for (const auto& fx : run_reference_fixtures(Field::parse(o.field))) {
        passed += fx.pass;
        rows.push_back(json{{"fixture", fx.name}, {"pass", fx.pass}, {"detail", fx.detail}});
    }
    if (passed != rows.size()) code = DomainFailure;
    return json{{"passed", passed}, {"total", rows.size()}, {"fixtures", rows}};
}

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void print_text(const json& j, std::ostream& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (const auto& [key, v] : j.items()) {
        if (v.is_primitive()) {
            out << pad << key << ": " << scalar_text(v) << "\n";
        } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_primitive(); })) {
            out << pad << key << ": [";
            for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar_text(v[i]);
            out << "]\n";
        } else if (v.is_array()) {
            out << pad << key << ":\n";
            for (const auto& x : v) {
                out << pad << "  -\n";
                print_text(x, out, indent + 4);
            }
        } else {
            out << pad << key << ":\n";
            print_text(v, out, indent + 2);
        }
    }
}

void print_fixture_table(const json& res, std::ostream& out) {
    for (const auto& row : res.at("fixtures"))
        out << (row.at("pass").get<bool>() ? "PASS  " : "FAIL  ") << row.at("fixture").get<std::string>() << "  ["
            << row.at("detail").get<std::string>() << "]\n";
    out << res.at("passed").get<std::size_t>() << "/" << res.at("total").get<std::size_t>() << " fixtures pass\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Apolarity and cactus computations over finite local algebras", "apolar"};
    app.require_subcommand(1);
    Options o;
    auto* field_opt = app.add_option("--field", o.field, "q or p=<prime>")->capture_default_str();
    auto* seed_opt = app.add_option("--seed", o.seed, "seed for randomized checks")->capture_default_str();
    app.add_option("--cap", o.cap, "degree cap (default 2d+2)");
    app.add_option("--out", o.out, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    app.add_option("--jobs", o.jobs, "scanner workers")->capture_default_str();
    app.add_flag("--timing", o.timing, "include wall-clock timing in the report");

    const std::vector<std::pair<std::string, std::string>> with_file{
        {"ann", "annihilator generators per degree"},
        {"cata", "catalecticant ranks and minors"},
        {"stratum", "cactus stratum of a tensor over k"},
        {"span", "linear span of nu_d of a familiar"},
        {"relspan", "relative linear span over k"},
        {"lift", "lift a constant-rank tensor to a flat familiar"},
        {"growth", "Macaulay and Gotzmann growth report"},
        {"probe-saturation", "is the saturation of a linear ideal linear"}};
    for (const auto& [name, help] : with_file) {
        auto* sub = app.add_subcommand(name, help)->fallthrough();
        sub->add_option("problem", o.problem, "problem file (JSON)")->required();
    }
    auto* scan_cmd = app.add_subcommand("scan", "compare catalecticant strata with brute force")->fallthrough();
    scan_cmd->add_option("--n", o.n, "projective dimension")->capture_default_str();
    scan_cmd->add_option("--d", o.d, "degree")->capture_default_str();
    scan_cmd->add_option("--r", o.r, "largest stratum")->capture_default_str();
    scan_cmd->add_option("--p", o.p, "field size")->capture_default_str();
    app.add_subcommand("verify-paper", "reference fixture table")->fallthrough();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Success;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return UsageFailure;
    }
    o.field_set = field_opt->count() > 0;
    o.seed_set = seed_opt->count() > 0;
    const std::string cmd = app.get_subcommands().front()->get_name();

    int code = Success;
    json report{{"command", cmd}};
    const auto start = std::chrono::steady_clock::now();
    try {
        json res;
        if (cmd == "scan") {
            report["field"] = Field::prime(o.p).name();
            res = cmd_scan(o, code);
        } else if (cmd == "verify-paper") {
            report["field"] = Field::parse(o.field).name();
            res = cmd_verify(o, code);
        } else {
            Problem pb(o);
            report["field"] = pb.field().name();
            report["seed"] = pb.seed();
            if (cmd == "ann") res = cmd_ann(pb);
            else if (cmd == "cata") res = cmd_cata(pb);
            else if (cmd == "stratum") res = cmd_stratum(pb);
            else if (cmd == "span") res = cmd_span(pb, code);
            else if (cmd == "relspan") res = cmd_relspan(pb);
            else if (cmd == "lift") res = cmd_lift(pb, code);
            else if (cmd == "growth") res = cmd_growth(pb);
            else res = cmd_probe(pb);
        }
        report["results"] = res;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return UsageFailure;
    } catch (const ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return UsageFailure;
    } catch (const DomainError& e) {
        report["error"] = e.what();
        code = DomainFailure;
    }
    if (o.timing)
        report["timing_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();

    if (o.out == "json") {
        out << report.dump(2) << "\n";
    } else if (cmd == "verify-paper" && report.contains("results")) {
        print_fixture_table(report["results"], out);
    } else {
        print_text(report, out, 0);
    }
    if (report.contains("error") && o.out == "json") err << "error: " << report["error"].get<std::string>() << "\n";
    return code;
}

}  // namespace apolar::tools
