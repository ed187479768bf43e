#include "nchilb/verify.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "nchilb/motives.hpp"
#include "nchilb/qtools.hpp"
#include "nchilb/series.hpp"

namespace nchilb {

namespace {

bool treesFeasible(long m, long d, long cap) { return fussCatalan(m, d) <= cap; }

std::string cell(long m, long d) {
  return "m=" + std::to_string(m) + " d=" + std::to_string(d);
}

LaurentPolynomial randomLaurent(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> expDist(-4, 6);
  std::uniform_int_distribution<long> coeffDist(-9, 9);
  std::uniform_int_distribution<int> termsDist(0, 5);
  LaurentPolynomial p;
  const int terms = termsDist(rng);
  for (int i = 0; i < terms; ++i)
    p += LaurentPolynomial::monomial(expDist(rng), coeffDist(rng));
  return p;
}

}  // namespace

Failures verifyRoutes(const VerifyOptions& opt) {
  Failures failures;
  for (long m = 1; m <= opt.mMax; ++m) {
    for (long d = 0; d <= opt.dMax; ++d) {
      const LaurentPolynomial functional = punctualMotive(m, d, Route::functional);
      auto compare = [&](Route route, const LaurentPolynomial& value) {
        if (!(value == functional)) {
          std::ostringstream os;
          os << "routes: " << cell(m, d) << " functional=" << functional << " "
             << routeName(route) << "=" << value;
          failures.push_back(os.str());
        }
      };
      compare(Route::reciprocity, punctualMotive(m, d, Route::reciprocity));
      compare(Route::ratio, punctualMotive(m, d, Route::ratio));
      if (treesFeasible(m, d, opt.treeCap))
        compare(Route::trees, punctualMotive(m, d, Route::trees, opt.treeCap));
    }
  }
  // seeded algebra spot checks
  std::mt19937_64 rng(opt.seed);
  for (int i = 0; i < 25; ++i) {
    const LaurentPolynomial a = randomLaurent(rng);
    const LaurentPolynomial b = randomLaurent(rng);
    const LaurentPolynomial c = randomLaurent(rng);
    if (!((a + b) * c == a * c + b * c))
      failures.push_back("routes: distributivity spot check failed at sample " +
                         std::to_string(i));
    if (!(a * (b * c) == (a * b) * c))
      failures.push_back("routes: associativity spot check failed at sample " +
                         std::to_string(i));
  }
  return failures;
}

Failures verifyPaving(const VerifyOptions& opt) {
  Failures failures;
  for (long m = 1; m <= opt.mMax; ++m) {
    for (long d = 0; d <= opt.dMax; ++d) {
      if (!treesFeasible(m, d, opt.treeCap)) continue;
      LaurentPolynomial punctualSum, fullSum;
      for (const Tree& t : enumerateTrees(static_cast<int>(m), d, opt.treeCap)) {
        punctualSum += LaurentPolynomial::monomial(cellDimPunctual(t));
        fullSum += LaurentPolynomial::monomial(cellDimFull(t));
        if (!t.empty() && !dRecursionCheck(t))
          failures.push_back("paving: grafting recursion failed at " + cell(m, d) +
                             " tree " + t.str());
      }
      const LaurentPolynomial expectedPunctual = punctualMotive(m, d);
      if (!(punctualSum == expectedPunctual)) {
        std::ostringstream os;
        os << "paving: " << cell(m, d) << " punctual census=" << punctualSum
           << " functional=" << expectedPunctual;
        failures.push_back(os.str());
      }
      const LaurentPolynomial expectedFull = hilbMotive(m, d);
      if (!(fullSum == expectedFull)) {
        std::ostringstream os;
        os << "paving: " << cell(m, d) << " full census=" << fullSum
           << " functional=" << expectedFull;
        failures.push_back(os.str());
      }
    }
  }
  return failures;
}

Failures verifyReciprocity(const VerifyOptions& opt) {
  Failures failures;
  for (long m = 1; m <= opt.mMax; ++m) {
    for (long d = 0; d <= opt.dMax; ++d) {
      const long s = (m - 1) * d * d + d;
      const LaurentPolynomial h = hilbMotive(m, d);
      const LaurentPolynomial p = punctualMotive(m, d);
      if (!(p == h.reciprocal(s)) || !(h == p.reciprocal(s))) {
        std::ostringstream os;
        os << "reciprocity: " << cell(m, d) << " hilb=" << h << " punctual=" << p;
        failures.push_back(os.str());
      }
    }
  }
  return failures;
}

Failures verifyQBinomial(const VerifyOptions&) {
  QIdentityReport report = qBinomialTheoremCheck(10, {1, 2, 3});
  Failures failures;
  for (const std::string& f : report.failures) failures.push_back("qbinomial: " + f);
  return failures;
}

Failures verifyEuler(const VerifyOptions& opt) {
  Failures failures;
  for (long m = 1; m <= opt.mMax; ++m) {
    for (long d = 0; d <= opt.dMax; ++d) {
      const mpz_class punctualChi = eulerCharacteristic(m, d, Kind::punctual);
      const mpz_class fc = fussCatalan(m, d);
      if (punctualChi != fc)
        failures.push_back("euler: " + cell(m, d) + " punctual chi=" + punctualChi.get_str() +
                           " fuss-catalan=" + fc.get_str());
      const mpz_class resolutionChi = eulerCharacteristic(m, d, Kind::resolution);
      mpz_class oddProduct = 1;
      for (long i = 0; i < d; ++i) oddProduct *= (m - 1) * i + 1;
      if (resolutionChi != oddProduct)
        failures.push_back("euler: " + cell(m, d) + " resolution chi=" +
                           resolutionChi.get_str() + " product=" + oddProduct.get_str());
      if (treesFeasible(m, d, opt.treeCap)) {
        mpz_class extensionSum = 0;
        for (const Tree& t : enumerateTrees(static_cast<int>(m), d, opt.treeCap))
          extensionSum += linearExtensionCount(t);
        if (extensionSum != resolutionChi)
          failures.push_back("euler: " + cell(m, d) + " resolution chi=" +
                             resolutionChi.get_str() +
                             " linear-extension sum=" + extensionSum.get_str());
      }
    }
  }
  return failures;
}

Failures verifySteinberg(const VerifyOptions& opt) {
  Failures failures;
  mpz_class fac;
  for (long m = 1; m <= opt.mMax; ++m) {
    for (long d = 0; d <= opt.dMax; ++d) {
      const AuditReport grouped = smallnessAudit(m, d, AuditMode::grouped, opt.permCap);
      if (grouped.printedDimMatches != (grouped.printedDim == grouped.stratumFormulaDim))
        failures.push_back("steinberg: " + cell(m, d) + " printed-dimension flag inconsistent");
      mpz_fac_ui(fac.get_mpz_t(), static_cast<unsigned long>(d));
      if (fac <= opt.permCap) {
        const AuditReport exhaustive = smallnessAudit(m, d, AuditMode::exhaustive, opt.permCap);
        bool same = exhaustive.strata.size() == grouped.strata.size() &&
                    exhaustive.topDim == grouped.topDim &&
                    exhaustive.uniqueTop == grouped.uniqueTop &&
                    exhaustive.small == grouped.small;
        if (same)
          for (std::size_t i = 0; i < grouped.strata.size(); ++i)
            same = same && exhaustive.strata[i].length == grouped.strata[i].length &&
                   exhaustive.strata[i].count == grouped.strata[i].count &&
                   exhaustive.strata[i].quotientDim == grouped.strata[i].quotientDim;
        if (!same)
          failures.push_back("steinberg: " + cell(m, d) + " grouped and exhaustive audits differ");
      }
      if (m >= 2 || d <= 1) {
        if (!grouped.uniqueTop || grouped.topDim != dimension(m, d, Kind::punctual))
          failures.push_back("steinberg: " + cell(m, d) + " top stratum not unique at dim " +
                             std::to_string(grouped.topDim));
      } else {
        for (const AuditStratum& s : grouped.strata)
          if (s.quotientDim != 0)
            failures.push_back("steinberg: " + cell(m, d) +
                               " m=1 stratum with nonzero quotient dimension");
      }
    }
  }
  return failures;
}

const std::vector<std::string>& verifySuiteNames() {
  static const std::vector<std::string> names = {"routes",    "paving", "reciprocity",
                                                 "qbinomial", "euler",  "steinberg"};
  return names;
}

Failures runVerifySuite(const std::string& name, const VerifyOptions& opt) {
  if (name == "routes") return verifyRoutes(opt);
  if (name == "paving") return verifyPaving(opt);
  if (name == "reciprocity") return verifyReciprocity(opt);
  if (name == "qbinomial") return verifyQBinomial(opt);
  if (name == "euler") return verifyEuler(opt);
  if (name == "steinberg") return verifySteinberg(opt);
  if (name == "all") {
    Failures all;
    for (const std::string& suite : verifySuiteNames()) {
      Failures f = runVerifySuite(suite, opt);
      all.insert(all.end(), f.begin(), f.end());
    }
    return all;
  }
  throw std::invalid_argument("unknown verify suite: " + name);
}

}  // namespace nchilb
