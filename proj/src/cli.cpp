#include "gauge5/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "gauge5/bott.hpp"
#include "gauge5/classify.hpp"
#include "gauge5/decomp.hpp"
#include "gauge5/errors.hpp"
#include "gauge5/exponents.hpp"
#include "gauge5/rational.hpp"
#include "gauge5/spaces.hpp"

namespace gauge5::cli {

using arith::Int;
using nlohmann::json;

namespace {

struct Options {
    std::string format = "text";

    std::string config;
    std::optional<Int> c;
    std::optional<int> m;
    bool spin = false;
    bool sp = false;
    bool stc = false;

    std::string group;
    Int k = 0;
    std::optional<Int> l;
    std::string loops;
    std::optional<Int> at_p;
    std::string away;
    bool rational = false;
    bool trivial = false;

    std::string table;
    std::optional<Int> p;
    std::optional<int> nu;
    std::string route = "best";

    std::string family;
    std::optional<int> r;
    bool away_2c = false;
    std::optional<int> n;

    std::string betti;
    std::optional<int> betti_m;
    std::string model;
    std::string what;
    std::optional<int> q;

    std::string target;
    std::optional<int> t;
};

class Runner {
public:
    Runner(const Options& o, std::ostream& out, const lie::Catalog& cat) : o_(o), out_(out), cat_(cat) {}

    bool machine() const { return o_.format == "machine"; }

    spaces::ManifoldSpec manifold() const {
        spaces::ManifoldSpec M;
        if (!o_.config.empty()) {
            std::ifstream in(o_.config);
            if (!in) throw std::runtime_error("cannot open config file " + o_.config);
            std::stringstream ss;
            ss << in.rdbuf();
            return spaces::ManifoldSpec::parse_config(ss.str());
        }
        if (!o_.c) throw std::invalid_argument("--c is required (or --config)");
        if (!o_.m) throw std::invalid_argument("--m is required (or --config)");
        M.c = *o_.c;
        M.m = *o_.m;
        M.spin = o_.spin;
        M.stably_parallelizable = o_.sp;
        M.single_top_cell = o_.stc;
        M.validate();
        return M;
    }

    Int c_only() const {
        if (o_.c) return *o_.c;
        if (!o_.config.empty()) return manifold().c;
        throw std::invalid_argument("--c is required");
    }

    lie::LieGroupSpec group() const {
        if (o_.group.empty()) throw std::invalid_argument("--group is required");
        return lie::LieGroupSpec::parse(o_.group);
    }

    Int prime() const {
        if (!o_.p) throw std::invalid_argument("--p is required");
        return *o_.p;
    }

    Localization ctx() const {
        if (o_.at_p) return Localization::at_prime(*o_.at_p);
        if (!o_.away.empty()) return Localization::parse("away:" + o_.away);
        if (o_.rational) return Localization::rational();
        return Localization::integral();
    }

    void emit_group(const std::string& label, const FGAbelianGroup& g) {
        if (machine())
            out_ << json{{"record", "group"}, {"label", label}, {"value", g.serialize()}}.dump() << "\n";
        else
            out_ << label << " = " << g.to_string() << "\n";
    }

    void emit_value(const std::string& label, const json& value) {
        if (machine())
            out_ << json{{"record", "value"}, {"label", label}, {"value", value}}.dump() << "\n";
        else
            out_ << label << " = " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }

    void emit_expr(const decomp::SpaceExpr& e) {
        if (machine())
            out_ << e.serialize();
        else
            out_ << e.to_string() << "\n";
    }

    void emit_bound(const exponents::ExponentBound& b, const std::string& role) {
        if (machine()) {
            out_ << json{{"record", "exponent_bound"}, {"role", role},     {"p", b.p},
                         {"exponent", b.exponent},     {"route", exponents::to_string(b.route)},
                         {"assumptions", b.assumptions}}
                        .dump()
                 << "\n";
            return;
        }
        out_ << role << ": exp_" << b.p << " <= " << b.p << "^" << b.exponent << " (" << exponents::to_string(b.route)
             << ")";
        for (const auto& a : b.assumptions) out_ << "; " << a;
        out_ << "\n";
    }

    void classify() {
        auto G = group();
        if (o_.trivial) {
            emit_value("trivial_case", classify::trivial_case(G, prime(), c_only(), cat_));
            return;
        }
        if (o_.l) {
            emit_value("same_type_moore", classify::same_type_moore(o_.k, *o_.l, G, c_only(), cat_));
            return;
        }
        classify::ClassificationReport rep;
        if (o_.loops.empty()) {
            rep = classify::classify_moore(G, c_only(), cat_);
        } else {
            int i = o_.loops == "2" ? 2 : o_.loops == "3" ? 3 : 0;
            if (!i) throw std::invalid_argument("--loops must be 2 or 3 for classify");
            rep = classify::classify_looped_manifold(manifold(), G, i, ctx(), cat_);
        }
        out_ << (machine() ? rep.serialize() : rep.to_table());
    }

    void decompose() {
        auto M = manifold();
        auto G = group();
        std::string loops = o_.loops.empty() ? "2" : o_.loops;
        if (loops == "2")
            emit_expr(decomp::loops2_gauge(M, G, o_.k, ctx()));
        else if (loops == "3")
            emit_expr(decomp::loops3_gauge(M, G, o_.k, ctx()));
        else if (loops == "away")
            emit_expr(decomp::gauge_away_from_c(M, G, o_.k));
        else
            throw std::invalid_argument("--loops must be 2, 3 or away");
    }

    void exponent() {
        if (!o_.table.empty()) {
            if (o_.table != "exceptional") throw std::invalid_argument("--table supports only 'exceptional'");
            auto rows = exponents::exceptional_table(o_.p, cat_);
            if (!machine()) {
                out_ << exponents::render_exceptional_table(rows);
                return;
            }
            for (const auto& row : rows)
                out_ << json{{"record", "exceptional_row"}, {"group", row.group.serialize()}, {"p", row.p},
                             {"tail", row.tail},            {"constant", row.constant},       {"shift", row.shift}}
                            .dump()
                     << "\n";
            return;
        }
        Int p = prime();
        if (o_.route == "moore-fiber") {
            emit_bound(exponents::exp_moore_fiber(c_only(), p), "bound");
            return;
        }
        auto G = group();
        if (o_.route == "closed") {
            emit_bound(o_.nu ? exponents::exp_bound_closed_form_nu(G, p, *o_.nu, cat_)
                             : exponents::exp_bound_closed_form(G, p, c_only(), cat_),
                       "bound");
            return;
        }
        if (o_.route == "regular") {
            emit_bound(o_.nu ? exponents::exp_bound_regular_nu(G, p, *o_.nu, cat_)
                             : exponents::exp_bound_regular(manifold(), G, p, o_.k, cat_),
                       "bound");
            return;
        }
        if (o_.route == "theriault") {
            emit_bound(o_.nu ? exponents::exp_bound_theriault_nu(G, p, *o_.nu, cat_)
                             : exponents::exp_bound_theriault(manifold(), G, p, o_.k, cat_),
                       "bound");
            return;
        }
        if (o_.route != "best") throw std::invalid_argument("--route must be best, regular, theriault, closed or moore-fiber");
        auto combined = o_.nu ? exponents::exp_bound_nu(G, p, *o_.nu, cat_)
                              : exponents::exp_bound(manifold(), G, p, o_.k, cat_);
        emit_bound(combined.best, "best");
        for (const auto& b : combined.routes) emit_bound(b, "route");
    }

    void bott() {
        auto M = manifold();
        auto family = lie::parse_stable_family(o_.family.empty() ? "SU" : o_.family);
        if (!o_.r) {
            if (machine()) {
                int period = family == lie::StableFamily::SU ? 2 : (o_.away_2c ? 4 : 8);
                int first = family == lie::StableFamily::SU ? 1 : 2;
                for (int r = first; r < first + period; ++r)
                    emit_group("pi_" + std::to_string(r), bott::stable_pi_gauge({M, family, o_.k, r, o_.away_2c, o_.n}));
            } else {
                out_ << bott::render_table(M, family, o_.away_2c);
            }
            return;
        }
        emit_group("pi_" + std::to_string(*o_.r), bott::stable_pi_gauge({M, family, o_.k, *o_.r, o_.away_2c, o_.n}));
    }

    void rational() {
        rational::HilbertSeries X;
        if (!o_.betti.empty())
            X = rational::HilbertSeries::parse(o_.betti);
        else if (o_.betti_m)
            X = rational::HilbertSeries::manifold(*o_.betti_m);
        else
            throw std::invalid_argument("--betti or --manifold-m is required");
        rational::RationalGroupModel G;
        if (!o_.model.empty())
            G = rational::RationalGroupModel::parse(o_.model);
        else
            G = rational::RationalGroupModel::of(group());
        const std::string what = o_.what.empty() ? "gauge" : o_.what;
        if (what == "gauge" || what == "based") {
            emit_expr(rational::rational_gauge(X, G, what == "based"));
        } else if (what == "bstar") {
            emit_expr(rational::rational_B_star(X, G));
        } else if (what == "em" || what == "em-based") {
            emit_expr(rational::em_expansion(X, G, what == "em-based"));
        } else if (what == "rank" || what == "rank-based") {
            if (!o_.q) throw std::invalid_argument("--q is required for rank");
            emit_value("rank", rational::rational_rank_formula(X, G, *o_.q, what == "rank-based"));
        } else if (what == "ring" || what == "ring-bstar") {
            auto ledger = rational::rational_cohomology_ring(
                what == "ring" ? rational::RingTarget::Gauge : rational::RingTarget::BStar, X, G);
            out_ << (machine() ? rational::serialize(ledger) : rational::to_string(ledger) + "\n");
        } else {
            throw std::invalid_argument("--what must be gauge, based, bstar, em, em-based, rank, rank-based, ring or ring-bstar");
        }
    }

    void moore() {
        const std::string what = o_.what.empty() ? "pi6" : o_.what;
        if (what == "self") {
            if (!o_.n) throw std::invalid_argument("--n is required");
            emit_group("pi_" + std::to_string(*o_.n) + "(P^" + std::to_string(*o_.n) + "(c))",
                       spaces::pi_moore_self(*o_.n, c_only()));
        } else if (what == "pi6") {
            emit_group("pi_6(P^4(c))", spaces::pi6_P4(c_only()));
        } else if (what == "pi7") {
            emit_group("pi_7(P^5(c))", spaces::pi7_P5(c_only()));
        } else if (what == "suspension") {
            emit_value("suspension_image_order", spaces::suspension_image_order(c_only()));
        } else if (what == "coeff") {
            emit_group(o_.target, spaces::pi_with_coefficients(spaces::parse_coefficient_target(o_.target), c_only()));
        } else if (what == "splitting") {
            if (!o_.t) throw std::invalid_argument("--t is required");
            auto w = spaces::suspension_splitting(manifold(), *o_.t);
            if (machine()) {
                for (const auto& a : w.atoms())
                    out_ << json{{"record", "wedge_atom"},
                                 {"kind", a.kind == spaces::WedgeAtom::Kind::Sphere  ? "Sphere"
                                          : a.kind == spaces::WedgeAtom::Kind::Moore ? "Moore"
                                                                                     : "Opaque"},
                                 {"n", a.n},
                                 {"c", a.c},
                                 {"tag", a.tag}}
                                .dump()
                         << "\n";
            } else {
                out_ << w.to_string() << "\n";
            }
        } else if (what == "bundles") {
            emit_group("[M,BG]", spaces::bundle_classes(manifold(), group(), ctx()));
        } else {
            throw std::invalid_argument("--what must be self, pi6, pi7, suspension, coeff, splitting or bundles");
        }
    }

    void homology() {
        auto H = spaces::homology(manifold());
        for (int i = 0; i < 6; ++i) emit_group("H_" + std::to_string(i), H[i]);
    }

private:
    const Options& o_;
    std::ostream& out_;
    const lie::Catalog& cat_;
};

void add_manifold(CLI::App* sub, Options& o) {
    auto* cfg = sub->add_option("--config", o.config, "Manifold config file (keys c, m, spin, stably_parallelizable, single_top_cell)");
    sub->add_option("--c", o.c, "Order of the fundamental group")->excludes(cfg);
    sub->add_option("--m", o.m, "H_2 has rank m-1")->excludes(cfg);
    sub->add_flag("--spin", o.spin, "M is spin")->excludes(cfg);
    sub->add_flag("--sp", o.sp, "M is stably parallelizable")->excludes(cfg);
    sub->add_flag("--stc", o.stc, "M has a single top cell")->excludes(cfg);
}

void add_group(CLI::App* sub, Options& o) {
    sub->add_option("--group", o.group, "Group as FAMILY:PARAM (SU:4, Sp:2, Spin:8) or G2, F4, E6, E7, E8");
}

void add_ctx(CLI::App* sub, Options& o) {
    auto* a = sub->add_option("--at-p", o.at_p, "Localize at a prime");
    auto* b = sub->add_option("--away", o.away, "Localize away from a comma list of integers");
    auto* r = sub->add_flag("--rational", o.rational, "Rationalize");
    a->excludes(b)->excludes(r);
    b->excludes(r);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Homotopy invariants of gauge groups over 5-manifolds with finite cyclic fundamental group", "gauge5"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "machine"}));

    auto* classify = app.add_subcommand("classify", "Count homotopy types of gauge groups over P^4(c) or looped over M");
    add_manifold(classify, o);
    add_group(classify, o);
    add_ctx(classify, o);
    classify->add_option("--k", o.k, "Bundle class in Z/c");
    classify->add_option("--l", o.l, "Second bundle class: report the same-type condition for k and l");
    classify->add_option("--loops", o.loops, "2 or 3: classify looped gauge groups over M");
    classify->add_flag("--trivial", o.trivial, "Report whether (G, p, c) is a listed trivial case");
    classify->add_option("--p", o.p, "Prime for --trivial");

    auto* decompose = app.add_subcommand("decompose", "Product decomposition of a looped gauge group");
    add_manifold(decompose, o);
    add_group(decompose, o);
    add_ctx(decompose, o);
    decompose->add_option("--k", o.k, "Bundle class in Z/c");
    decompose->add_option("--loops", o.loops, "2, 3 or away (away from c)");

    auto* exponent = app.add_subcommand("exponent", "Homotopy exponent bounds");
    add_manifold(exponent, o);
    add_group(exponent, o);
    exponent->add_option("--p", o.p, "Odd prime");
    exponent->add_option("--nu", o.nu, "nu_p(c), used instead of a manifold");
    exponent->add_option("--k", o.k, "Bundle class in Z/c");
    exponent->add_option("--route", o.route, "best, regular, theriault, closed or moore-fiber");
    exponent->add_option("--table", o.table, "Print a table: exceptional");

    auto* bott = app.add_subcommand("bott", "Stable homotopy groups of gauge groups via Bott periodicity");
    add_manifold(bott, o);
    bott->add_option("--family", o.family, "SU or Spin");
    bott->add_option("--r", o.r, "Degree; omit for a table over one period");
    bott->add_option("--k", o.k, "Bundle class in Z/c");
    bott->add_option("--n", o.n, "Finite rank to check against the stable range");
    bott->add_flag("--away-2c", o.away_2c, "Localize away from 2c instead of c");

    auto* rational = app.add_subcommand("rational", "Rational homotopy of gauge groups and connection spaces");
    rational->add_option("--betti", o.betti, "Betti numbers b0,b1,... of the base");
    rational->add_option("--manifold-m", o.betti_m, "Use the Betti numbers 1,0,m-1,m-1,0,1");
    add_group(rational, o);
    rational->add_option("--model", o.model, "Group model, e.g. exterior=3,5;polynomial=4");
    rational->add_option("--what", o.what, "gauge, based, bstar, em, em-based, rank, rank-based, ring, ring-bstar");
    rational->add_option("--q", o.q, "Degree for rank");

    auto* moore = app.add_subcommand("moore", "Moore-space homotopy groups, splittings and bundle classes");
    add_manifold(moore, o);
    add_group(moore, o);
    add_ctx(moore, o);
    moore->add_option("--what", o.what, "self, pi6, pi7, suspension, coeff, splitting or bundles");
    moore->add_option("--n", o.n, "n for pi_n(P^n(c))");
    moore->add_option("--target", o.target, "S3@4, S4@5, P3@4 or P4@5");
    moore->add_option("--t", o.t, "Suspension degree 2, 3 or 4");

    auto* homology = app.add_subcommand("homology", "Integral homology of M");
    add_manifold(homology, o);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        std::optional<lie::Catalog> custom;
        if (const char* path = std::getenv("GAUGE_CATALOG"); path && *path) custom = lie::Catalog::load(path);
        Runner run(o, out, custom ? *custom : lie::Catalog::builtin());
        if (*classify) run.classify();
        if (*decompose) run.decompose();
        if (*exponent) run.exponent();
        if (*bott) run.bott();
        if (*rational) run.rational();
        if (*moore) run.moore();
        if (*homology) run.homology();
    } catch (const HypothesisError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace gauge5::cli
