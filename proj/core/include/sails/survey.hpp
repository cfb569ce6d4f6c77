#pragma once

// Batch classification of every reduced surd up to a discriminant bound, with
// the cross-checks between centers, witnesses and rotation shapes.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sails/criterion.hpp"

namespace sails {

struct ReducedSurd {
  std::int64_t discriminant;
  QuadraticSurd surd;
};

/// All reduced (-B + sqrt D) / 2A with gcd(A, B, C) = 1 and nonsquare
/// D = B^2 - 4AC <= dmax, sorted by D and then by surd text.
std::vector<ReducedSurd> reduced_surds(std::int64_t dmax);

struct SurveyRecord {
  std::int64_t discriminant;
  Classification classification;
};

struct SurveyViolation {
  std::string surd;
  std::string what;
};

struct SurveyReport {
  std::vector<SurveyRecord> records;  // reduced_surds order, failures omitted
  std::vector<SurveyViolation> violations;
  std::map<std::string, std::size_t> flag_sets;  // "abc" -> count, "-" for none
};

/// Worker count from SURD_SAILS_THREADS, else the hardware concurrency.
unsigned survey_threads();

/// Classifies every reduced surd with discriminant <= dmax and checks
///  (i)   flags nonempty iff the period is a cyclic palindrome,
///  (ii)  every witness solves its equation and is equivalent to the surd,
///  (iii) b in flags iff c in flags,
///  (iv)  shape_oracle agrees with the flags in {a, b, d},
/// and that monic surds (quadratic integers) have flags. Output does not
/// depend on `threads`; 0 means survey_threads().
SurveyReport run_survey(std::int64_t dmax, unsigned threads = 0);

}  // namespace sails
