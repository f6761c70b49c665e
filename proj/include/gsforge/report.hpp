#ifndef GSFORGE_REPORT_HPP
#define GSFORGE_REPORT_HPP

#include "gsforge/limits.hpp"
#include "gsforge/parse.hpp"

#include <json.hpp>

#include <string>

namespace gsforge {

/// Machine-readable command output. Every number is an exact decimal-free
/// string ("p" or "p/q"); the only floating-point surface in the tool is the
/// sampling CSV.
using Report = nlohmann::json;

namespace report {

Report exact_point(const ExactPoint& p);
Report interval_set(const IntervalSet& s);
Report genpoly(const GenPoly& f);

Report certificate(const std::string& algebra, const GsCertificate& cert,
                   const std::vector<std::string>& flags = {});
Report hilbert(const std::string& algebra, const HilbertTruncation& h,
               const Rational& cutoff, const std::vector<std::string>& flags = {});
Report growth(const std::string& algebra, const GrowthResult& g, const StandardSeries& s,
              const std::vector<std::string>& flags = {});
Report vinberg(const std::string& algebra, const VinbergReport& v);
Report limit(const std::string& algebra, const NestedSetsReport& nested,
             const LimitCertificate& cert, const std::vector<std::string>& flags = {});

std::string render_text(const Report& r);

} // namespace report

} // namespace gsforge

#endif
