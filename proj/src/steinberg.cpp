#include "nchilb/steinberg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "nchilb/qtools.hpp"

namespace nchilb {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("not a bijection on {1..d}");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(long d) {
  std::vector<int> images(static_cast<std::size_t>(d));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

bool Permutation::isIdentity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

long inversions(const Permutation& sigma) {
  long count = 0;
  const auto& v = sigma.images();
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) ++count;
  return count;
}

StratumDimensions stratumDimension(long m, long d, const Permutation& sigma) {
  if (m < 1) throw std::domain_error("m must be positive");
  if (sigma.size() != d) throw std::invalid_argument("permutation size mismatch");
  const long l = inversions(sigma);
  StratumDimensions out;
  out.quotient = (m - 1) * (d * (d - 1) / 2 - l);
  out.total = out.quotient + d * d;
  return out;
}

namespace {

void requirePermCap(long d, long cap) {
  mpz_class fac;
  mpz_fac_ui(fac.get_mpz_t(), static_cast<unsigned long>(d));
  if (fac > cap)
    throw CapExceeded("permutation enumeration would generate " + fac.get_str() +
                          " permutations at d=" + std::to_string(d) + " (cap " +
                          std::to_string(cap) + "); use grouped mode",
                      fac.get_str());
}

// counts of permutations per inversion number
std::vector<mpz_class> lengthHistogram(long d, AuditMode mode, long cap) {
  const long maxLength = d * (d - 1) / 2;
  std::vector<mpz_class> hist(static_cast<std::size_t>(maxLength) + 1);
  if (mode == AuditMode::grouped) {
    const LaurentPolynomial gf = qFactorial(d);
    for (long l = 0; l <= maxLength; ++l) hist[static_cast<std::size_t>(l)] = gf.coefficient(l);
    return hist;
  }
  requirePermCap(d, cap);
  std::vector<int> images(static_cast<std::size_t>(d));
  std::iota(images.begin(), images.end(), 1);
  do {
    ++hist[static_cast<std::size_t>(inversions(Permutation(images)))];
  } while (std::next_permutation(images.begin(), images.end()));
  return hist;
}

}  // namespace

AuditReport smallnessAudit(long m, long d, AuditMode mode, long perm_cap) {
  if (m < 1 || d < 0) throw std::domain_error("audit requires m >= 1, d >= 0");
  AuditReport report;
  report.m = m;
  report.d = d;
  report.mode = mode;
  report.stratumFormulaDim = (m - 1) * d * (d - 1) / 2;
  report.printedDim = m * (m - 1) / 2;
  report.printedDimMatches = report.printedDim == report.stratumFormulaDim;
  const std::vector<mpz_class> hist = lengthHistogram(d, mode, perm_cap);
  report.topDim = 0;
  for (long l = 0; l < static_cast<long>(hist.size()); ++l) {
    const mpz_class& count = hist[static_cast<std::size_t>(l)];
    if (count == 0) continue;
    const long quotientDim = (m - 1) * (d * (d - 1) / 2 - l);
    report.strata.push_back({l, count, quotientDim});
    report.topDim = std::max(report.topDim, quotientDim);
  }
  mpz_class atTop = 0;
  for (const AuditStratum& s : report.strata)
    if (s.quotientDim == report.topDim) atTop += s.count;
  report.uniqueTop = atTop == 1;
  report.small = report.uniqueTop && report.topDim == report.stratumFormulaDim;
  return report;
}

bool inversionGfCheck(long d, long perm_cap) {
  requirePermCap(d, perm_cap);
  std::vector<int> images(static_cast<std::size_t>(d));
  std::iota(images.begin(), images.end(), 1);
  LaurentPolynomial sum;
  do {
    sum += LaurentPolynomial::monomial(inversions(Permutation(images)));
  } while (std::next_permutation(images.begin(), images.end()));
  return sum == qFactorial(d);
}

}  // namespace nchilb
