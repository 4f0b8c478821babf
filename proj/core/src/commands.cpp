#include "qeuler/commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "qeuler/errors.hpp"
#include "qeuler/frobenius.hpp"
#include "qeuler/grassmannian.hpp"
#include "qeuler/ground.hpp"
#include "qeuler/hypersurface.hpp"
#include "qeuler/mpoly.hpp"
#include "qeuler/presentation.hpp"
#include "qeuler/report.hpp"
#include "qeuler/specialize.hpp"

namespace qeuler {

namespace {

using Clock = std::chrono::steady_clock;
using Timings = std::vector<std::pair<std::string, long>>;

long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

std::string poly_text(const Algebra<Rational>& alg, const std::vector<Rational>& v) {
    return alg.to_poly(v).to_string();
}

std::string poly_text(const Algebra<RatFnQ>& alg, const std::vector<RatFnQ>& v) {
    try {
        return demote_q(alg.to_poly(v)).to_string();
    } catch (const ValidationError&) {
        // A coefficient is not polynomial in q; fall back to the coordinate
        // expansion with Laurent/rational-function coefficients.
        return alg.coords_to_string(v);
    }
}

template <typename K>
void fill_common(Report& rep, const Algebra<K>& alg) {
    rep.dimension = static_cast<long>(alg.dim());
    rep.basis.clear();
    for (std::size_t i = 0; i < alg.dim(); ++i) rep.basis.push_back(alg.basis_name(i));
}

// Ground-Q verdicts: the characteristic-element test and the trace-form
// reference test, with a zero-divisor witness when one exists.
void fill_rational_verdicts(Report& rep, const FrobeniusData<Rational>& data) {
    const auto& alg = *data.algebra;
    auto unit = is_semisimple_via_omega(data);
    rep.omega_unit = unit.is_unit();
    rep.omega_certificate =
        "det(regular representation of omega) = " + Ground<Rational>::to_string(unit.det);
    rep.semisimple_omega = unit.is_unit();
    rep.semisimple_trace = is_semisimple_trace_oracle(alg);
    if (unit.witness) rep.witness = poly_text(alg, *unit.witness);
}

// Lambda-level verdict: omega is a unit iff det of its regular
// representation is a Laurent unit c * q^m, which settles every nonzero
// specialization at once.
void fill_laurent_verdicts(Report& rep, const FrobeniusData<RatFnQ>& data) {
    auto unit = is_semisimple_via_omega(data);
    rep.omega_unit = unit.is_unit();
    rep.omega_certificate = "det(regular representation of omega) = " +
                            Ground<RatFnQ>::unit_certificate(unit.det);
    rep.extras.emplace_back("all nonzero specializations semisimple",
                            unit.is_unit() ? "yes" : "no");
    if (unit.witness) rep.witness = poly_text(*data.algebra, *unit.witness);
}

void fill_specialized(Report& rep, const FrobeniusData<RatFnQ>& ext, const Rational& r,
                      Timings& timings) {
    auto t0 = Clock::now();
    SpecializationMap theta(r);
    FrobeniusData<Rational> sd = specialize_data(ext, theta);
    timings.emplace_back("specialize", ms_since(t0));
    rep.specialized_at = r.to_string();
    const auto& alg = *sd.algebra;
    auto unit = is_semisimple_via_omega(sd);
    rep.semisimple_omega = unit.is_unit();
    rep.semisimple_trace = is_semisimple_trace_oracle(alg);
    if (unit.witness) rep.witness = poly_text(alg, *unit.witness);
    rep.extras.emplace_back("omega at q = " + r.to_string(), poly_text(alg, sd.omega));
}

template <typename Coh>
std::optional<std::string> fill_hessian(Report& rep, const Coh& coh, Timings& timings) {
    auto t0 = Clock::now();
    auto hr = verify_hessian_theorem(coh);
    timings.emplace_back("verify-theorem", ms_since(t0));
    const auto& alg = *coh.data.algebra;
    rep.hessian = poly_text(alg, hr.hessian_nf);
    rep.paper_sign = hr.paper_sign;
    if (hr.epsilon) rep.epsilon = hr.epsilon->to_string();
    rep.extras.emplace_back("hessian equals epsilon * omega", hr.scalar_ok() ? "yes" : "no");
    if (!hr.scalar_ok() && hr.unit_ok())
        rep.extras.emplace_back("hessian unit factor", poly_text(alg, *hr.unit_factor));
    if (!hr.ok())
        return "the Hessian class is not a unit multiple of the characteristic element for " +
               rep.description;
    return std::nullopt;
}

struct GrassArgs {
    int k = 1;
    int n = 2;
    bool classical = false;
    bool quantum = false;
    bool verify = false;
    bool json = false;
    std::string specialize;
};

int run_grassmannian(const GrassArgs& a, bool projective_alias, std::ostream& out,
                     std::ostream& err) {
    if (a.classical && a.quantum)
        throw ValidationError("choose one of --classical / --quantum");
    const bool classical = a.classical;
    Report rep;
    rep.subject = "grassmannian";
    const std::string gname = "G_{" + std::to_string(a.k) + "," + std::to_string(a.n) + "}";
    const std::string space =
        projective_alias ? "P^" + std::to_string(a.n - 1) + " = " + gname : gname;
    rep.description = (classical ? "H*(" : "QH*(") + space + ")";
    Timings timings;
    std::optional<std::string> violation;
    if (classical) {
        if (!a.specialize.empty())
            throw ValidationError("--specialize applies to the quantum build only");
        auto t0 = Clock::now();
        ClassicalCohomology coh = build_cohomology_classical(a.k, a.n);
        timings.emplace_back("build", ms_since(t0));
        const auto& alg = *coh.data.algebra;
        fill_common(rep, alg);
        rep.omega = poly_text(alg, coh.data.omega);
        fill_rational_verdicts(rep, coh.data);
        rep.extras.emplace_back("functional sign", coh.functional_sign.to_string());
        if (a.verify) violation = fill_hessian(rep, coh, timings);
    } else {
        auto t0 = Clock::now();
        QuantumCohomology coh = build_cohomology_quantum(a.k, a.n);
        timings.emplace_back("build", ms_since(t0));
        const auto& alg = *coh.data.algebra;
        fill_common(rep, alg);
        rep.omega = poly_text(alg, coh.data.omega);
        fill_laurent_verdicts(rep, coh.data);
        rep.extras.emplace_back("functional sign", coh.functional_sign.to_string());
        if (!a.specialize.empty())
            fill_specialized(rep, coh.data, Rational::from_string(a.specialize), timings);
        if (a.verify) violation = fill_hessian(rep, coh, timings);
    }
    rep.timings_ms = std::move(timings);
    out << (a.json ? rep.to_json_text() : rep.to_text());
    if (violation) {
        err << "theorem violation: " << *violation << "\n";
        return 3;
    }
    return 0;
}

struct HyperArgs {
    int dim = 2;
    std::string degrees;
    int prank = 0;
    std::string pairing_path;
    std::string specialize;
    bool json = false;
};

std::vector<int> parse_degree_list(const std::string& text) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ValidationError("--degrees expects a comma-separated list of integers, got '" +
                                  text + "'");
        }
    }
    if (out.empty())
        throw ValidationError("--degrees expects a comma-separated list of integers, got '" +
                              text + "'");
    return out;
}

Matrix<Rational> read_pairing_file(const std::string& path, int rank) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open pairing file: " + path);
    std::vector<Rational> vals;
    std::string tok;
    while (in >> tok) {
        if (tok[0] == '#') {
            std::string discard;
            std::getline(in, discard);
            continue;
        }
        vals.push_back(Rational::from_string(tok));
    }
    const std::size_t want = static_cast<std::size_t>(rank) * static_cast<std::size_t>(rank);
    if (vals.size() != want)
        throw ValidationError("pairing file has " + std::to_string(vals.size()) +
                              " entries; expected rank^2 = " + std::to_string(want));
    Matrix<Rational> m(rank, rank);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) m.at(i, j) = vals[static_cast<std::size_t>(i) * rank + j];
    return m;
}

void add_hypersurface_extras(Report& rep, const HypersurfaceSpec& hs) {
    rep.extras.emplace_back("internal degree d", std::to_string(hs.d()));
    rep.extras.emplace_back("constant D = prod d_i^{d_i}", hs.degree_product().to_string());
    rep.extras.emplace_back("q weight", std::to_string(hs.q_weight()));
}

void add_closed_form(Report& rep, const HypersurfaceSpec& hs) {
    OmegaClosedForm cf = omega_closed_form(hs);
    rep.extras.emplace_back("omega (literal display)", poly_text(*cf.algebra, cf.paper_value));
    rep.extras.emplace_back("omega display matches computed", cf.match ? "yes" : "no");
}

int run_hypersurface(const HyperArgs& a, std::ostream& out, std::ostream&) {
    HypersurfaceSpec hs;
    hs.n = a.dim;
    hs.degrees = parse_degree_list(a.degrees);
    hs.primitive_rank = a.prank;
    if (!a.pairing_path.empty()) hs.pairing = read_pairing_file(a.pairing_path, a.prank);

    Report rep;
    rep.subject = "hypersurface";
    {
        std::ostringstream d;
        d << "quantum cohomology of a complete intersection of degree (";
        for (std::size_t i = 0; i < hs.degrees.size(); ++i)
            d << (i ? "," : "") << hs.degrees[i];
        d << ") in P^" << (a.dim + hs.codim()) << ", primitive rank " << a.prank;
        rep.description = d.str();
    }
    Timings timings;
    if (a.specialize.empty()) {
        auto t0 = Clock::now();
        FrobeniusData<RatFnQ> data = build_hypersurface_algebra(hs);
        timings.emplace_back("build", ms_since(t0));
        const auto& alg = *data.algebra;
        fill_common(rep, alg);
        rep.omega = poly_text(alg, data.omega);
        fill_laurent_verdicts(rep, data);
    } else {
        Rational r = Rational::from_string(a.specialize);
        auto t0 = Clock::now();
        SemisimpleClassification cls = classify_semisimple(hs, r);
        timings.emplace_back("build+classify", ms_since(t0));
        const auto& alg = *cls.extension.algebra;
        fill_common(rep, alg);
        rep.omega = poly_text(alg, cls.extension.omega);
        fill_laurent_verdicts(rep, cls.extension);
        rep.specialized_at = r.to_string();
        rep.semisimple_omega = cls.semisimple_omega;
        rep.semisimple_trace = cls.semisimple_trace;
        if (cls.witness) rep.witness = poly_text(*cls.specialized.algebra, *cls.witness);
        rep.extras.emplace_back("omega at q = " + r.to_string(),
                                poly_text(*cls.specialized.algebra, cls.specialized.omega));
        if (hs.d() == 2) {
            rep.extras.emplace_back("omega regular representation has the quadric block shape",
                                    cls.structure_shape_ok ? "yes" : "no");
            if (cls.middle_scalar)
                rep.extras.emplace_back("omega action on middle classes (computed)",
                                        cls.middle_scalar->to_string());
            rep.extras.emplace_back("omega action on middle classes (reference display)",
                                    cls.paper_middle_scalar.to_string());
            if (cls.primitive_scalar)
                rep.extras.emplace_back("omega action on primitive classes (computed)",
                                        cls.primitive_scalar->to_string());
            rep.extras.emplace_back("omega action on primitive classes (reference display)",
                                    cls.paper_primitive_scalar.to_string());
        }
    }
    add_hypersurface_extras(rep, hs);
    if (hs.codim() == 1) add_closed_form(rep, hs);
    rep.timings_ms = std::move(timings);
    out << (a.json ? rep.to_json_text() : rep.to_text());
    return 0;
}

struct AnalyzeArgs {
    std::string presentation_path;
    std::string functional;  // empty | "auto" | path to a values file
    bool json = false;
};

template <typename K>
void analyze_with_functional(Report& rep, const AlgebraPtr<K>& alg, std::vector<K> f,
                             const std::string& fdesc, bool auto_used, std::size_t auto_index,
                             Timings& timings) {
    auto t0 = Clock::now();
    FrobeniusData<K> data = [&] {
        try {
            return frobenius_structure(alg, std::move(f));
        } catch (const ValidationError& e) {
            if (auto_used)
                throw ValidationError(std::string(e.what()) +
                                      " (the auto functional is dual to basis monomial " +
                                      alg->basis_name(auto_index) +
                                      "; supply explicit functional values)");
            throw;
        }
    }();
    timings.emplace_back("frobenius", ms_since(t0));
    rep.omega = poly_text(*data.algebra, data.omega);
    rep.extras.emplace_back("functional", fdesc);
    if constexpr (std::is_same_v<K, Rational>)
        fill_rational_verdicts(rep, data);
    else
        fill_laurent_verdicts(rep, data);
}

template <typename K>
void analyze_ground(Report& rep, const AlgebraPtr<K>& alg, const Presentation& p,
                    const AnalyzeArgs& a, Timings& timings) {
    fill_common(rep, *alg);
    Presentation::FunctionalKind kind = p.functional_kind;
    if (a.functional == "auto") kind = Presentation::FunctionalKind::automatic;
    else if (!a.functional.empty()) kind = Presentation::FunctionalKind::values;

    if (kind == Presentation::FunctionalKind::none) {
        rep.omega = "(not computed)";
        rep.extras.emplace_back(
            "note", "dry run: no functional given; supply 'functional:' with " +
                        std::to_string(alg->dim()) + " basis values or 'auto'");
        return;
    }
    if (kind == Presentation::FunctionalKind::automatic) {
        std::size_t m = automatic_functional_index(*alg);
        std::vector<K> f(alg->dim(), Ground<K>::zero());
        f[m] = Ground<K>::one();
        analyze_with_functional(rep, alg, std::move(f),
                                "auto (dual to basis monomial " + alg->basis_name(m) + ")", true,
                                m, timings);
        return;
    }
    std::vector<Rational> values;
    if (!a.functional.empty() && a.functional != "auto") {
        values = read_functional_file(a.functional, alg->dim());
    } else {
        if (p.functional_values.size() != alg->dim())
            throw ValidationError("functional lists " + std::to_string(p.functional_values.size()) +
                                  " values but the basis has " + std::to_string(alg->dim()) +
                                  " elements");
        values = p.functional_values;
    }
    std::vector<K> f;
    f.reserve(values.size());
    for (const auto& v : values) f.push_back(Ground<K>::from_rational(v));
    analyze_with_functional(rep, alg, std::move(f), "explicit", false, 0, timings);
}

int run_analyze(const AnalyzeArgs& a, std::ostream& out, std::ostream&) {
    Presentation p = read_presentation_file(a.presentation_path);
    Report rep;
    rep.subject = "custom";
    rep.description =
        std::string("presented algebra over ") + (p.ground_lambda ? "Lambda" : "Q");
    Timings timings;
    auto t0 = Clock::now();
    if (p.ground_lambda) {
        AlgebraPtr<RatFnQ> alg = build_presented_algebra_laurent(p);
        timings.emplace_back("build", ms_since(t0));
        analyze_ground(rep, alg, p, a, timings);
    } else {
        AlgebraPtr<Rational> alg = build_presented_algebra_rational(p);
        timings.emplace_back("build", ms_since(t0));
        analyze_ground(rep, alg, p, a, timings);
    }
    rep.timings_ms = std::move(timings);
    out << (a.json ? rep.to_json_text() : rep.to_text());
    return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"characteristic elements of Frobenius algebras: quantum cohomology of "
                 "Grassmannians, projective spaces, complete intersections, and user-presented "
                 "algebras"};
    app.require_subcommand(1);

    GrassArgs ga;
    auto* g = app.add_subcommand("grassmannian",
                                 "quantum or classical cohomology ring of G_{k,n}");
    g->add_option("--k", ga.k, "dimension k of the subspaces")->required();
    g->add_option("--n", ga.n, "dimension n of the ambient space")->required();
    g->add_flag("--classical", ga.classical, "classical cohomology over Q");
    g->add_flag("--quantum", ga.quantum, "quantum cohomology over Lambda (default)");
    g->add_option("--specialize", ga.specialize, "evaluate q at a nonzero rational");
    g->add_flag("--verify-theorem", ga.verify,
                "check that the Hessian class is a unit multiple of omega");
    g->add_flag("--json", ga.json, "emit the report as JSON");

    GrassArgs pa;
    auto* pr = app.add_subcommand("projective",
                                  "cohomology of the projective space P^{n-1} = G_{1,n}");
    pr->add_option("--n", pa.n, "P^{n-1} as lines in an n-dimensional space")->required();
    pr->add_flag("--classical", pa.classical, "classical cohomology over Q");
    pr->add_flag("--quantum", pa.quantum, "quantum cohomology over Lambda (default)");
    pr->add_option("--specialize", pa.specialize, "evaluate q at a nonzero rational");
    pr->add_flag("--verify-theorem", pa.verify,
                 "check that the Hessian class is a unit multiple of omega");
    pr->add_flag("--json", pa.json, "emit the report as JSON");

    HyperArgs ha;
    auto* h = app.add_subcommand(
        "hypersurface", "quantum cohomology of an even-dimensional complete intersection");
    h->add_option("--dim", ha.dim, "complex dimension n of the variety (even)")->required();
    h->add_option("--degrees", ha.degrees, "comma-separated degrees d_1,...,d_r")->required();
    h->add_option("--primitive-rank", ha.prank, "rank of the primitive middle cohomology")
        ->required();
    h->add_option("--pairing", ha.pairing_path,
                  "file with the rank x rank symmetric pairing matrix (row-major rationals)");
    h->add_option("--specialize", ha.specialize, "evaluate q at a nonzero rational");
    h->add_flag("--json", ha.json, "emit the report as JSON");

    AnalyzeArgs aa;
    auto* an = app.add_subcommand("analyze", "Frobenius analysis of a presented algebra");
    an->add_option("--presentation", aa.presentation_path, "presentation file")->required();
    an->add_option("--functional", aa.functional, "'auto' or a file of basis values");
    an->add_flag("--json", aa.json, "emit the report as JSON");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        const CLI::App* target = &app;
        auto parsed = app.get_subcommands();
        if (!parsed.empty()) target = parsed.front();
        out << target->help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(g)) return run_grassmannian(ga, false, out, err);
        if (app.got_subcommand(pr)) {
            pa.k = 1;
            return run_grassmannian(pa, true, out, err);
        }
        if (app.got_subcommand(h)) return run_hypersurface(ha, out, err);
        if (app.got_subcommand(an)) return run_analyze(aa, out, err);
        err << "usage error: no subcommand given\n";
        return 2;
    } catch (const TheoremViolation& e) {
        err << "theorem violation: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace qeuler
