#include "gsforge/report.hpp"

#include <sstream>

namespace gsforge {
namespace report {

Report exact_point(const ExactPoint& p) {
    Report j;
    if (auto r = p.rational()) {
        j["type"] = "rational";
        j["value"] = rational_str(*r);
        return j;
    }
    const AlgebraicNumber& a = p.u.algebraic();
    j["type"] = "algebraic";
    j["root_power"] = std::to_string(p.power); // z = u^root_power
    Report poly = Report::array();
    for (const auto& c : a.defining_poly)
        poly.push_back(c.get_str());
    j["poly"] = poly; // coefficients of the defining polynomial in u, low to high
    j["u_lower"] = rational_str(a.lo);
    j["u_upper"] = rational_str(a.hi);
    j["z_lower"] = rational_str(p.lower());
    j["z_upper"] = rational_str(p.upper());
    return j;
}

Report interval_set(const IntervalSet& s) {
    Report arr = Report::array();
    for (size_t i = 0; i < s.component_count(); ++i) {
        Report c;
        c["kind"] = s.components()[i].degenerate ? "point" : "interval";
        c["lower"] = exact_point(s.component_lower(i));
        c["upper"] = exact_point(s.component_upper(i));
        arr.push_back(std::move(c));
    }
    return arr;
}

Report genpoly(const GenPoly& f) {
    Report arr = Report::array();
    for (const auto& [e, c] : f.terms()) {
        Report t = Report::array();
        t.push_back(rational_str(e));
        t.push_back(rational_str(c));
        arr.push_back(std::move(t));
    }
    return arr;
}

Report certificate(const std::string& algebra, const GsCertificate& cert,
                   const std::vector<std::string>& flags) {
    Report j;
    j["command"] = "certify";
    j["algebra"] = algebra;
    j["status"] = to_string(cert.status);
    j["series"] = genpoly(cert.series);
    j["series_text"] = cert.series.str();
    j["negativity_set"] = interval_set(cert.negativity_set);
    if (cert.witness)
        j["witness"] = rational_str(*cert.witness);
    if (cert.witness_value)
        j["witness_value"] = rational_str(*cert.witness_value);
    if (cert.boundary_witness)
        j["boundary_witness"] = exact_point(*cert.boundary_witness);
    j["flags"] = flags;
    return j;
}

Report hilbert(const std::string& algebra, const HilbertTruncation& h,
               const Rational& cutoff, const std::vector<std::string>& flags) {
    Report j;
    j["command"] = "hilbert";
    j["algebra"] = algebra;
    j["truncation"] = rational_str(cutoff);
    Report rows = Report::array();
    for (const auto& [deg, dim] : h.entries) {
        Report row = Report::array();
        row.push_back(rational_str(deg));
        row.push_back(std::to_string(dim));
        rows.push_back(std::move(row));
    }
    j["hilbert"] = rows;
    j["flags"] = flags;
    return j;
}

Report growth(const std::string& algebra, const GrowthResult& g, const StandardSeries& s,
              const std::vector<std::string>& flags) {
    Report j;
    j["command"] = "growth";
    j["algebra"] = algebra;
    Report gg;
    gg["kind"] = g.exponential ? "exponential" : "polynomial";
    if (!g.exponential)
        gg["degree"] = g.degree;
    if (g.finite_dimensional)
        gg["finite_dimensional"] = true;
    if (!g.note.empty())
        gg["note"] = g.note;
    j["growth"] = gg;
    Report hs = Report::array();
    for (long v : s.h)
        hs.push_back(std::to_string(v));
    j["standard_series"] = hs;
    std::vector<std::string> fl = flags;
    if (g.associated_graded)
        fl.push_back("associated-graded");
    j["flags"] = fl;
    return j;
}

Report vinberg(const std::string& algebra, const VinbergReport& v) {
    Report j;
    j["command"] = "vinberg";
    j["algebra"] = algebra;
    j["holds"] = v.holds;
    j["conclusive"] = v.conclusive;
    j["cutoff"] = v.cutoff;
    j["exact_equality"] = v.exact_equality;
    if (!v.holds)
        j["first_violation"] = v.first_violation;
    Report rows = Report::array();
    for (const auto& c : v.cumulative)
        rows.push_back(rational_str(c));
    j["cumulative"] = rows;
    j["flags"] = Report::array();
    return j;
}

Report limit(const std::string& algebra, const NestedSetsReport& nested,
             const LimitCertificate& cert, const std::vector<std::string>& flags) {
    Report j;
    j["command"] = "limit";
    j["algebra"] = algebra;
    j["verdict"] = to_string(cert.verdict);
    j["strict"] = cert.strict;
    if (cert.witness)
        j["witness"] = rational_str(*cert.witness);
    if (cert.witness_value)
        j["witness_value"] = rational_str(*cert.witness_value);
    if (cert.boundary_witness)
        j["boundary_witness"] = exact_point(*cert.boundary_witness);
    if (cert.used_closed_form) {
        j["cleared_numerator"] = genpoly(cert.cleared_numerator);
        j["cleared_numerator_text"] = cert.cleared_numerator.str();
        j["denominator_exponent"] = rational_str(cert.denominator_exponent);
    }
    Report stages = Report::array();
    for (const auto& s : nested.stages) {
        Report st;
        st["index"] = s.index;
        st["series"] = genpoly(s.series);
        st["series_text"] = s.series.str();
        st["status"] = to_string(s.certificate.status);
        st["negativity_set"] = interval_set(s.negativity);
        st["nested_in_previous"] = s.nested_in_previous;
        stages.push_back(std::move(st));
    }
    j["stages"] = stages;
    j["all_nested"] = nested.all_nested;
    if (!nested.stabilization.empty()) {
        Report st = Report::array();
        for (const auto& [n, m] : nested.stabilization) {
            Report row = Report::array();
            row.push_back(std::to_string(n));
            row.push_back(std::to_string(m));
            st.push_back(std::move(row));
        }
        j["stabilization"] = st;
    }
    j["intersection"] = interval_set(nested.intersection);
    if (nested.common_witness)
        j["common_witness"] = rational_str(*nested.common_witness);
    j["flags"] = flags;
    return j;
}

namespace {

void render_interval_set(std::ostringstream& os, const Report& s) {
    if (s.empty()) {
        os << "{}";
        return;
    }
    bool first = true;
    for (const auto& c : s) {
        if (!first)
            os << " U ";
        first = false;
        auto pt = [&](const Report& p) {
            if (p.at("type") == "rational")
                return std::string(p.at("value"));
            return "alg(" + std::string(p.at("z_lower")) + ".." +
                   std::string(p.at("z_upper")) + ")";
        };
        if (c.at("kind") == "point")
            os << "{" << pt(c.at("lower")) << "}";
        else
            os << "[" << pt(c.at("lower")) << ", " << pt(c.at("upper")) << "]";
    }
}

} // namespace

std::string render_text(const Report& r) {
    std::ostringstream os;
    std::string cmd = r.value("command", "");
    os << r.value("algebra", "") << ": ";
    if (cmd == "certify") {
        os << "status " << std::string(r.at("status"));
        os << "\n  series: " << std::string(r.at("series_text"));
        if (r.contains("witness"))
            os << "\n  witness: z0 = " << std::string(r.at("witness"))
               << ", f(z0) = " << std::string(r.at("witness_value"));
        os << "\n  negativity set: ";
        render_interval_set(os, r.at("negativity_set"));
    } else if (cmd == "hilbert") {
        os << "Hilbert truncation up to degree " << std::string(r.at("truncation"));
        for (const auto& row : r.at("hilbert")) {
            if (row.at(1) != "0")
                os << "\n  degree " << std::string(row.at(0)) << ": dim " << std::string(row.at(1));
        }
    } else if (cmd == "growth") {
        const auto& g = r.at("growth");
        if (g.at("kind") == "exponential")
            os << "growth exponential";
        else
            os << "growth polynomial, per-degree exponent " << g.at("degree").get<int>();
        if (g.contains("finite_dimensional"))
            os << " (finite-dimensional)";
        if (g.contains("note"))
            os << "\n  note: " << std::string(g.at("note"));
        os << "\n  standard series:";
        for (const auto& v : r.at("standard_series"))
            os << " " << std::string(v);
    } else if (cmd == "vinberg") {
        os << "coefficient-wise check "
           << (r.at("holds").get<bool>() ? "holds" : "FAILS") << " up to cutoff "
           << r.at("cutoff").get<int>();
        if (r.at("exact_equality").get<bool>())
            os << " (exact equality throughout)";
    } else if (cmd == "limit") {
        os << "limit verdict " << std::string(r.at("verdict"));
        if (r.contains("witness"))
            os << "\n  witness: z0 = " << std::string(r.at("witness"))
               << ", f_lim(z0) = " << std::string(r.at("witness_value"));
        if (r.contains("cleared_numerator_text"))
            os << "\n  (1 - z^" << std::string(r.at("denominator_exponent"))
               << ") * f_lim = " << std::string(r.at("cleared_numerator_text"));
        for (const auto& st : r.at("stages")) {
            os << "\n  stage " << st.at("index").get<long>() << ": "
               << std::string(st.at("status")) << ", S = ";
            render_interval_set(os, st.at("negativity_set"));
        }
        if (r.contains("common_witness"))
            os << "\n  common rational point of all stages: "
               << std::string(r.at("common_witness"));
        if (r.contains("stabilization")) {
            os << "\n  stabilization m(n):";
            for (const auto& row : r.at("stabilization"))
                os << " n=" << std::string(row.at(0)) << "->m=" << std::string(row.at(1));
        }
        if (r.contains("note"))
            os << "\n  note: " << std::string(r.at("note"));
    } else {
        os << r.dump(2);
    }
    auto flags = r.value("flags", Report::array());
    if (!flags.empty()) {
        os << "\n  flags:";
        for (const auto& f : flags)
            os << " " << std::string(f);
    }
    os << "\n";
    return os.str();
}

} // namespace report
} // namespace gsforge
