#ifndef HOMLEIB_TESTS_ORACLE_HPP
#define HOMLEIB_TESTS_ORACLE_HPP

#include "homleib/report.hpp"

#include <string>

namespace homleib::oracle {

/// Straight-line regeneration of a corpus entry's report: every verdict,
/// counterexample, residual and constructed table is recomputed here with
/// plain nested loops over arrays of Scalars, independently of the identity
/// engine, the catalog and the DSL. Only the scalar arithmetic, the document
/// (de)serialization and the report container are shared.
SuiteReport corpus_run(const std::string& root, const std::string& id);

/// Recomputes the entry's constructed outputs and writes the expected_*.alg
/// files plus golden.report. Used by the golden generator.
void write_goldens(const std::string& root, const std::string& id);

}  // namespace homleib::oracle

#endif
