#include "gsforge/cli.hpp"
#include "gsforge/corpus.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace gsforge {

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DomainError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw DomainError("cannot write file: " + out_path);
    out << text;
}

void emit_report(const Report& r, bool json, const std::string& out_path) {
    emit(json ? r.dump(2) + "\n" : report::render_text(r), out_path);
}

struct Options {
    std::string file;
    std::string max_degree = "10";
    long stages = 4;
    std::string truncation = "10";
    int grid = 100;
    bool json = false;
    std::string out;
};

int run_certify(const Options& o) {
    AlgebraFile f = parse_algebra(slurp(o.file));
    if (f.is_limit()) {
        std::cerr << "certify expects a finite presentation; this file declares relation "
                     "families. Use: gsforge limit " << o.file << "\n";
        return 1;
    }
    GsCertificate cert = certify(f.to_presentation());
    emit_report(report::certificate(f.name, cert), o.json, o.out);
    return 0;
}

int run_hilbert(const Options& o) {
    AlgebraFile f = parse_algebra(slurp(o.file));
    Rational cutoff = parse_rational(o.max_degree);
    HilbertTruncation h = f.is_limit() ? limit_hilbert(f.to_limit_spec(), cutoff)
                                       : hilbert_truncation(f.to_presentation(), cutoff);
    std::vector<std::string> flags;
    if (f.is_limit())
        flags.push_back("limit-algebra");
    // Inhomogeneous relations: the counts describe the associated graded
    // algebra of the degree filtration.
    bool inhomogeneous = false;
    for (const auto& r : f.relations) {
        std::optional<Rational> d;
        for (const auto& [w, c] : r.terms()) {
            Rational wd = word_degree(w, f.deg);
            if (d && *d != wd)
                inhomogeneous = true;
            d = wd;
        }
    }
    if (inhomogeneous)
        flags.push_back("associated-graded");
    emit_report(report::hilbert(f.name, h, cutoff, flags), o.json, o.out);
    return 0;
}

int run_growth(const Options& o) {
    AlgebraFile f = parse_algebra(slurp(o.file));
    Rational m = parse_rational(o.max_degree);
    if (m.get_den() != 1 || m <= 0 || !m.get_num().fits_sint_p()) {
        std::cerr << "--max-degree must be a positive integer for growth\n";
        return 1;
    }
    int maxlen = static_cast<int>(m.get_num().get_si());
    GrowthResult g;
    StandardSeries s;
    if (f.is_limit()) {
        LimitSpec spec = f.to_limit_spec();
        g = limit_growth(spec);
        // Standard series of the limit: re-grade with unit weights.
        std::vector<Rational> ones(spec.gens.size(), Rational(1));
        LimitSpec std_spec(spec.gens, DegreeFunction(ones), spec.base_relations, spec.families);
        HilbertTruncation h = limit_hilbert(std_spec, Rational(maxlen));
        s.h.assign(maxlen + 1, 0);
        for (const auto& [deg, dim] : h.entries)
            if (deg.get_den() == 1 && deg <= maxlen)
                s.h[deg.get_num().get_si()] = dim;
    } else {
        Presentation p = f.to_presentation();
        g = classify_growth(p);
        s = standard_hilbert(p, maxlen);
    }
    std::vector<std::string> flags;
    if (f.is_limit())
        flags.push_back("limit-algebra");
    emit_report(report::growth(f.name, g, s, flags), o.json, o.out);
    return 0;
}

int run_vinberg(const Options& o) {
    AlgebraFile f = parse_algebra(slurp(o.file));
    if (f.is_limit()) {
        std::cerr << "vinberg expects a finite presentation (instantiate a stage first)\n";
        return 1;
    }
    Rational m = parse_rational(o.max_degree);
    if (m.get_den() != 1 || m <= 0) {
        std::cerr << "--max-degree must be a positive integer for vinberg\n";
        return 1;
    }
    VinbergReport v = verify_vinberg(f.to_presentation(), static_cast<int>(m.get_num().get_si()));
    emit_report(report::vinberg(f.name, v), o.json, o.out);
    return 0;
}

int run_limit(const Options& o) {
    AlgebraFile f = parse_algebra(slurp(o.file));
    if (!f.is_limit()) {
        std::cerr << "limit expects a file with family blocks; use certify for finite "
                     "presentations\n";
        return 1;
    }
    LimitSpec spec = f.to_limit_spec();
    Rational trunc = parse_rational(o.truncation);
    long stab_upto = 0;
    if (trunc.get_den() == 1 && trunc.get_num().fits_slong_p())
        stab_upto = std::min(12L, trunc.get_num().get_si());
    NestedSetsReport nested = nested_sets(spec, o.stages, kDefaultExponentDenomCap, stab_upto);
    LimitCertificate cert = certify_limit(spec, trunc);
    std::vector<std::string> flags;
    std::string note;
    if (cert.verdict == LimitVerdict::NotWgs) {
        try {
            GrowthResult g = limit_growth(spec);
            if (!g.exponential)
                note = "the limit algebra has polynomial growth (per-degree exponent " +
                       std::to_string(g.degree) +
                       "), which rules out the weak series condition for every choice of "
                       "generators and degree function";
        } catch (const DomainError&) {
            // non-monomial base: growth note unavailable
        }
    }
    Report rep = report::limit(f.name, nested, cert, flags);
    if (!note.empty())
        rep["note"] = note;
    emit_report(rep, o.json, o.out);
    return 0;
}

int run_sample(const Options& o) {
    AlgebraFile f = parse_algebra(slurp(o.file));
    if (o.grid < 1) {
        std::cerr << "--grid must be >= 1\n";
        return 1;
    }
    std::ostringstream os;
    os << "# non-certified floating-point samples; exact decisions come from certify/limit\n";
    os << "z,f(z)\n";
    if (f.is_limit()) {
        LimitSpec spec = f.to_limit_spec();
        for (int i = 0; i <= o.grid; ++i) {
            Rational z = frac(i, o.grid);
            if (z == 1) {
                os << "1,inf\n";
                continue;
            }
            os << z.get_d() << "," << limit_closed_eval(spec, z).get_d() << "\n";
        }
    } else {
        GenPoly series = gs_series(f.to_presentation());
        unsigned long q = series.exponent_denominator_lcm();
        for (int i = 0; i <= o.grid; ++i) {
            Rational w = frac(i, o.grid);
            // Sample on the u-grid so every value is exact before conversion.
            Rational z = pow_rational(w, q);
            os << z.get_d() << "," << evaluate(series, z).get_d() << "\n";
        }
    }
    emit(os.str(), o.out);
    return 0;
}

int run_examples(const Options& o) {
    auto results = run_corpus();
    if (o.json)
        emit(corpus_report(results).dump(2) + "\n", o.out);
    else
        emit(corpus_text(results), o.out);
    for (const auto& r : results)
        if (!r.ok())
            return 4;
    return 0;
}

} // namespace

int cli_main(int argc, char** argv) {
    CLI::App app{"exact Golod-Shafarevich analysis of finitely presented algebras"};
    app.require_subcommand(1);

    Options o;
    auto add_common = [&](CLI::App* cmd, bool needs_file) {
        if (needs_file)
            cmd->add_option("file", o.file, "algebra file")->required();
        cmd->add_flag("--json", o.json, "machine-readable JSON output");
        cmd->add_option("--out", o.out, "write output to a file");
    };

    auto* c_certify = app.add_subcommand("certify", "series negativity certificate");
    add_common(c_certify, true);
    auto* c_hilbert = app.add_subcommand("hilbert", "dimensions per degree");
    add_common(c_hilbert, true);
    c_hilbert->add_option("--max-degree", o.max_degree, "degree cutoff (rational)");
    auto* c_growth = app.add_subcommand("growth", "growth classification");
    add_common(c_growth, true);
    c_growth->add_option("--max-degree", o.max_degree, "length cutoff for the standard series");
    auto* c_vinberg = app.add_subcommand("vinberg", "coefficient-wise series inequality");
    add_common(c_vinberg, true);
    c_vinberg->add_option("--max-degree", o.max_degree, "coefficient cutoff (integer)");
    auto* c_limit = app.add_subcommand("limit", "direct-limit certification");
    add_common(c_limit, true);
    c_limit->add_option("--stages", o.stages, "number of finite stages to report");
    c_limit->add_option("--truncation", o.truncation, "degree bound for truncated fallbacks");
    auto* c_sample = app.add_subcommand("sample", "CSV samples of the series (floats)");
    add_common(c_sample, true);
    c_sample->add_option("--grid", o.grid, "number of grid intervals");
    auto* c_examples = app.add_subcommand("examples", "run the built-in example corpus");
    add_common(c_examples, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (c_certify->parsed())
            return run_certify(o);
        if (c_hilbert->parsed())
            return run_hilbert(o);
        if (c_growth->parsed())
            return run_growth(o);
        if (c_vinberg->parsed())
            return run_vinberg(o);
        if (c_limit->parsed())
            return run_limit(o);
        if (c_sample->parsed())
            return run_sample(o);
        if (c_examples->parsed())
            return run_examples(o);
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const InexactEvalError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 1;
}

} // namespace gsforge
