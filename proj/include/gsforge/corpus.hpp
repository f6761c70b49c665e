#ifndef GSFORGE_CORPUS_HPP
#define GSFORGE_CORPUS_HPP

#include "gsforge/report.hpp"

#include <string>
#include <vector>

namespace gsforge {

/// One expected-vs-computed row of the built-in example suite.
struct CorpusCheck {
    std::string name;
    std::string expected;
    std::string computed;
    bool ok = false;
    std::vector<std::string> flags;
    std::string source_claim; // the claim the computation contradicts, if any
};

struct CorpusEntryResult {
    std::string entry;
    std::vector<CorpusCheck> checks;
    bool ok() const;
};

/// The built-in algebra files (name, text), parseable by parse_algebra.
const std::vector<std::pair<std::string, std::string>>& corpus_files();

/// Run every entry's recorded checks. Entries run concurrently; results come
/// back in corpus order.
std::vector<CorpusEntryResult> run_corpus();

Report corpus_report(const std::vector<CorpusEntryResult>& results);
std::string corpus_text(const std::vector<CorpusEntryResult>& results);

} // namespace gsforge

#endif
