#pragma once

// Verification suites behind the `verify` CLI subcommand. Every check is
// exact; a failure message names the offending cell and both conflicting
// values. Tree-backed checks run on the cells whose tree count fits the
// configured cap.

#include <string>
#include <vector>

#include "nchilb/steinberg.hpp"
#include "nchilb/trees.hpp"

namespace nchilb {

struct VerifyOptions {
  long mMax = 2;
  long dMax = 4;
  long treeCap = kDefaultTreeCap;
  long permCap = kDefaultPermCap;
  unsigned long seed = 1;  // drives the randomized algebra spot checks
};

using Failures = std::vector<std::string>;

Failures verifyRoutes(const VerifyOptions& opt);
Failures verifyPaving(const VerifyOptions& opt);
Failures verifyReciprocity(const VerifyOptions& opt);
Failures verifyQBinomial(const VerifyOptions& opt);
Failures verifyEuler(const VerifyOptions& opt);
Failures verifySteinberg(const VerifyOptions& opt);

const std::vector<std::string>& verifySuiteNames();  // excludes "all"

// Runs one suite by name ("all" runs every suite in order).
Failures runVerifySuite(const std::string& name, const VerifyOptions& opt);

}  // namespace nchilb
