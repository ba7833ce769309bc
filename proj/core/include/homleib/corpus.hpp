#ifndef HOMLEIB_CORPUS_HPP
#define HOMLEIB_CORPUS_HPP

#include "homleib/report.hpp"

#include <string>
#include <vector>

namespace homleib {

/// A bundled worked example: presentation/action/operator files, a checks
/// manifest (checks.json), a frozen golden report and a provenance note.
struct CorpusEntry {
  std::string id;
  std::string dir;
};

std::vector<CorpusEntry> corpus_list(const std::string& root);

/// Executes the entry's declared checks. Check labels prefix the identity
/// names in the returned report ("label/identity").
SuiteReport corpus_run(const std::string& root, const std::string& id, unsigned jobs = 1);

/// Runs the entry and diffs the machine rendering against golden.report.
/// Returns an empty string on a bit-exact match, else a description.
std::string corpus_diff_golden(const std::string& root, const std::string& id, unsigned jobs = 1);

}  // namespace homleib

#endif
