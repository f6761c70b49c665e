#include "gsforge/corpus.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <sstream>

namespace gsforge {

bool CorpusEntryResult::ok() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CorpusCheck& c) { return c.ok; });
}

namespace {

const char* kMStandard = R"(algebra m_standard
generators x=1 y=1 z=1
relations
  x*x
  y*y
  x*z
end
)";

const char* kMWeighted = R"(algebra m_weighted
generators x=2 y=2 z=1
relations
  x*x
  y*y
  x*z
end
)";

const char* kEx22Minimal = R"(algebra two_gen_minimal
generators x=1 y=1
relations
  (x*y)^2*x
  (x*y)^2*y
  x*(x*y)^2
end
)";

const char* kEx22Extended = R"(algebra two_gen_extended
generators x=1 y=1 v=3
relations
  v - x*y
  v^2*x
  v^2*y
  x*v^2
end
)";

const char* kOneSquare = R"(algebra one_square
generators x=1 y=1
relations
  x*x
end
)";

const char* kA1 = R"(algebra a1
generators x=1 y=1
relations
  x*x
  x*y*x
end
)";

const char* kCommutator = R"(algebra commutator
generators x=1 y=1
relations
  x*y - y*x
end
)";

const char* kFree2 = R"(algebra free2
generators x=1 y=1
relations
end
)";

const char* kFree1 = R"(algebra free1
generators x=1
relations
end
)";

const char* kLimitFamily = R"(algebra limit_xyx
generators x=1 y=1
relations
family t from 0
  x*y^t*x
end
)";

const char* kDFamily = R"(algebra d_family
generators x=1 y=1
relations
family t from 0
  x*y^t*x^4
end
)";

CorpusCheck make_check(const std::string& name, const std::string& expected,
                       const std::string& computed,
                       std::vector<std::string> flags = {},
                       std::string source_claim = {}) {
    CorpusCheck c;
    c.name = name;
    c.expected = expected;
    c.computed = computed;
    c.ok = expected == computed;
    c.flags = std::move(flags);
    c.source_claim = std::move(source_claim);
    return c;
}

std::string dims_string(const HilbertTruncation& h, int upto) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [deg, dim] : h.entries) {
        if (deg.get_den() != 1 || deg > upto)
            continue;
        if (!first)
            os << ",";
        first = false;
        os << dim;
    }
    return os.str();
}

CorpusEntryResult run_m_standard() {
    CorpusEntryResult r{"m_standard", {}};
    auto file = parse_algebra(kMStandard);
    auto p = file.to_presentation();
    GsCertificate cert = certify(p);
    r.checks.push_back(make_check("gs_series", "1 - 3*z + 3*z^2", cert.series.str()));
    r.checks.push_back(make_check("status", "not_wGS", to_string(cert.status)));
    return r;
}

CorpusEntryResult run_m_weighted() {
    CorpusEntryResult r{"m_weighted", {}};
    auto file = parse_algebra(kMWeighted);
    auto p = file.to_presentation();
    GsCertificate cert = certify(p);
    r.checks.push_back(
        make_check("gs_series", "1 - z - 2*z^2 + z^3 + 2*z^4", cert.series.str()));
    r.checks.push_back(make_check("status", "not_wGS", to_string(cert.status), {"paper-discrepancy"},
                                  "source example asserts f_M(0.6) < 0, hence GS"));
    Rational v = evaluate(cert.series, frac(3, 5));
    r.checks.push_back(make_check("value_at(3/5)", "97/625", rational_str(v),
                                  {"paper-discrepancy"},
                                  "source example asserts f_M(0.6) < 0; exact value is positive"));
    r.checks.push_back(make_check("sign_at(3/5)", "positive",
                                  v > 0 ? "positive" : (v < 0 ? "negative" : "zero"),
                                  {"paper-discrepancy"},
                                  "deviation direction: computed sign must be positive"));
    return r;
}

CorpusEntryResult run_ex22_minimal() {
    CorpusEntryResult r{"two_gen_minimal", {}};
    auto p = parse_algebra(kEx22Minimal).to_presentation();
    GsCertificate cert = certify(p);
    r.checks.push_back(make_check("gs_series", "1 - 2*z + 3*z^5", cert.series.str()));
    r.checks.push_back(make_check("status", "not_wGS", to_string(cert.status)));
    return r;
}

CorpusEntryResult run_ex22_extended() {
    CorpusEntryResult r{"two_gen_extended", {}};
    auto p = parse_algebra(kEx22Extended).to_presentation();
    GsCertificate cert = certify(p);
    r.checks.push_back(
        make_check("gs_series", "1 - 2*z + z^2 - z^3 + 3*z^7", cert.series.str()));
    r.checks.push_back(make_check("status", "GS", to_string(cert.status)));
    r.checks.push_back(make_check("value_at(7/10)", "-59371/10000000",
                                  rational_str(evaluate(cert.series, frac(7, 10)))));
    r.checks.push_back(make_check("witness_in_set",
                                  "true",
                                  cert.negativity_set.contains(frac(7, 10)) ? "true" : "false"));
    return r;
}

CorpusEntryResult run_one_square() {
    CorpusEntryResult r{"one_square", {}};
    auto p = parse_algebra(kOneSquare).to_presentation();
    GsCertificate cert = certify(p);
    r.checks.push_back(make_check("gs_series", "1 - 2*z + z^2", cert.series.str()));
    r.checks.push_back(make_check("status", "wGS_only", to_string(cert.status)));
    r.checks.push_back(make_check("negativity_set", "{1}", cert.negativity_set.str()));
    return r;
}

CorpusEntryResult run_a1() {
    CorpusEntryResult r{"a1", {}};
    auto p = parse_algebra(kA1).to_presentation();
    HilbertTruncation h = hilbert_truncation(p, Rational(3));
    r.checks.push_back(make_check("hilbert(0..3)", "1,2,3,4", dims_string(h, 3)));
    GrowthResult g = classify_growth(p);
    r.checks.push_back(make_check("growth", "exponential",
                                  g.exponential ? "exponential"
                                                : "polynomial:" + std::to_string(g.degree)));
    VinbergReport v = verify_vinberg(p, 10);
    r.checks.push_back(make_check("vinberg(10)", "holds", v.holds ? "holds" : "fails"));
    return r;
}

CorpusEntryResult run_commutator() {
    CorpusEntryResult r{"commutator", {}};
    auto p = parse_algebra(kCommutator).to_presentation();
    HilbertTruncation h = hilbert_truncation(p, Rational(5));
    r.checks.push_back(make_check("hilbert(0..5)", "1,2,3,4,5,6", dims_string(h, 5)));
    VinbergReport v = verify_vinberg(p, 10);
    r.checks.push_back(make_check("vinberg(10)", "holds", v.holds ? "holds" : "fails"));
    return r;
}

CorpusEntryResult run_free2() {
    CorpusEntryResult r{"free2", {}};
    auto p = parse_algebra(kFree2).to_presentation();
    HilbertTruncation h = hilbert_truncation(p, Rational(4));
    r.checks.push_back(make_check("hilbert(0..4)", "1,2,4,8,16", dims_string(h, 4)));
    VinbergReport v = verify_vinberg(p, 10);
    r.checks.push_back(make_check("vinberg(10)", "holds", v.holds ? "holds" : "fails"));
    r.checks.push_back(
        make_check("vinberg_exact_equality", "true", v.exact_equality ? "true" : "false"));
    GrowthResult g = classify_growth(p);
    r.checks.push_back(make_check("growth", "exponential",
                                  g.exponential ? "exponential"
                                                : "polynomial:" + std::to_string(g.degree)));
    return r;
}

CorpusEntryResult run_free1() {
    CorpusEntryResult r{"free1", {}};
    auto p = parse_algebra(kFree1).to_presentation();
    VinbergReport v = verify_vinberg(p, 10);
    r.checks.push_back(make_check("vinberg(10)", "holds", v.holds ? "holds" : "fails"));
    r.checks.push_back(
        make_check("vinberg_exact_equality", "true", v.exact_equality ? "true" : "false"));
    GrowthResult g = classify_growth(p);
    r.checks.push_back(make_check("growth", "polynomial:0",
                                  g.exponential ? "exponential"
                                                : "polynomial:" + std::to_string(g.degree)));
    return r;
}

CorpusEntryResult run_limit_family() {
    CorpusEntryResult r{"limit_xyx", {}};
    auto spec = parse_algebra(kLimitFamily).to_limit_spec();
    LimitCertificate cert = certify_limit(spec, Rational(10));
    r.checks.push_back(make_check("limit_verdict", "not_wGS", to_string(cert.verdict)));
    r.checks.push_back(make_check("cleared_numerator", "1 - 3*z + 3*z^2",
                                  cert.cleared_numerator.str()));
    HilbertTruncation h = limit_hilbert(spec, Rational(10));
    r.checks.push_back(make_check("limit_hilbert(0..10)", "1,2,3,4,5,6,7,8,9,10,11",
                                  dims_string(h, 10), {"paper-discrepancy"},
                                  "source example asserts dim A_t = 3 for t >= 3; the normal "
                                  "words y^a x y^b give t+1"));
    GrowthResult g = limit_growth(spec);
    r.checks.push_back(make_check("limit_growth", "polynomial:1",
                                  g.exponential ? "exponential"
                                                : "polynomial:" + std::to_string(g.degree)));
    return r;
}

CorpusEntryResult run_d_family() {
    CorpusEntryResult r{"d_family", {}};
    auto spec = parse_algebra(kDFamily).to_limit_spec();
    LimitCertificate cert = certify_limit(spec, Rational(10));
    r.checks.push_back(make_check("limit_verdict", "wGS_certified", to_string(cert.verdict)));
    r.checks.push_back(make_check("strict_witness", "true", cert.strict ? "true" : "false"));
    r.checks.push_back(make_check("witness", "3/5",
                                  cert.witness ? rational_str(*cert.witness) : "(none)"));
    r.checks.push_back(make_check("value_at(3/5)", "-7/1250",
                                  rational_str(limit_closed_eval(spec, frac(3, 5)))));
    GrowthResult g = limit_growth(spec);
    r.checks.push_back(make_check("limit_growth", "exponential",
                                  g.exponential ? "exponential"
                                                : "polynomial:" + std::to_string(g.degree)));
    NestedSetsReport nested = nested_sets(spec, 4);
    r.checks.push_back(make_check("stages_nested", "true", nested.all_nested ? "true" : "false"));
    bool nonempty = true;
    for (const auto& s : nested.stages)
        nonempty = nonempty && !s.negativity.is_empty();
    r.checks.push_back(make_check("stages_nonempty", "true", nonempty ? "true" : "false"));
    bool common = true;
    for (const auto& s : nested.stages)
        common = common && s.negativity.contains(frac(3, 5));
    r.checks.push_back(make_check("common_point(3/5)", "true", common ? "true" : "false"));
    return r;
}

} // namespace

const std::vector<std::pair<std::string, std::string>>& corpus_files() {
    static const std::vector<std::pair<std::string, std::string>> files = {
        {"m_standard", kMStandard},
        {"m_weighted", kMWeighted},
        {"two_gen_minimal", kEx22Minimal},
        {"two_gen_extended", kEx22Extended},
        {"one_square", kOneSquare},
        {"a1", kA1},
        {"commutator", kCommutator},
        {"free2", kFree2},
        {"free1", kFree1},
        {"limit_xyx", kLimitFamily},
        {"d_family", kDFamily},
    };
    return files;
}

std::vector<CorpusEntryResult> run_corpus() {
    std::vector<std::function<CorpusEntryResult()>> jobs = {
        run_m_standard, run_m_weighted, run_ex22_minimal, run_ex22_extended,
        run_one_square, run_a1,         run_commutator,   run_free2,
        run_free1,      run_limit_family, run_d_family,
    };
    std::vector<std::future<CorpusEntryResult>> futs;
    futs.reserve(jobs.size());
    for (auto& j : jobs)
        futs.push_back(std::async(std::launch::async, j));
    std::vector<CorpusEntryResult> out;
    out.reserve(futs.size());
    for (auto& f : futs)
        out.push_back(f.get());
    return out;
}

Report corpus_report(const std::vector<CorpusEntryResult>& results) {
    Report j;
    j["command"] = "examples";
    Report entries = Report::array();
    bool all = true;
    for (const auto& r : results) {
        Report e;
        e["entry"] = r.entry;
        e["ok"] = r.ok();
        all = all && r.ok();
        Report checks = Report::array();
        for (const auto& c : r.checks) {
            Report cc;
            cc["name"] = c.name;
            cc["expected"] = c.expected;
            cc["computed"] = c.computed;
            cc["ok"] = c.ok;
            cc["flags"] = c.flags;
            if (!c.source_claim.empty())
                cc["source_claim"] = c.source_claim;
            checks.push_back(std::move(cc));
        }
        e["checks"] = checks;
        entries.push_back(std::move(e));
    }
    j["entries"] = entries;
    j["ok"] = all;
    j["flags"] = Report::array();
    return j;
}

std::string corpus_text(const std::vector<CorpusEntryResult>& results) {
    std::ostringstream os;
    for (const auto& r : results) {
        os << r.entry << ": " << (r.ok() ? "ok" : "MISMATCH") << "\n";
        for (const auto& c : r.checks) {
            os << "  " << (c.ok ? "ok   " : "FAIL ") << c.name << ": expected " << c.expected
               << ", computed " << c.computed;
            for (const auto& f : c.flags)
                os << " [" << f << "]";
            os << "\n";
            if (!c.source_claim.empty())
                os << "       note: " << c.source_claim << "\n";
        }
    }
    return os.str();
}

} // namespace gsforge
