#pragma once

// Smallness audit for the resolution: stratum dimensions of the
// Steinberg-type self-fibre-product are indexed by permutations through the
// inversion statistic, and the certificate is that the identity stratum is
// the unique one of top dimension. Computed from the stratum formula, never
// assumed.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "nchilb/errors.hpp"
#include "nchilb/laurent.hpp"

namespace nchilb {

inline constexpr long kDefaultPermCap = 1'000'000;

class Permutation {
 public:
  explicit Permutation(std::vector<int> images);  // images[i] = sigma(i+1), values 1..d
  static Permutation identity(long d);

  long size() const { return static_cast<long>(images_.size()); }
  int operator()(long i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& images() const { return images_; }
  bool isIdentity() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

// l(sigma) = #{i < j : sigma(i) > sigma(j)}.
long inversions(const Permutation& sigma);

struct StratumDimensions {
  long total = 0;     // (m-1)(d(d-1)/2 - l(sigma)) + d^2
  long quotient = 0;  // total - d^2
  bool operator==(const StratumDimensions&) const = default;
};

StratumDimensions stratumDimension(long m, long d, const Permutation& sigma);

enum class AuditMode { exhaustive, grouped };

struct AuditStratum {
  long length = 0;        // inversion count
  mpz_class count;        // number of permutations with this length
  long quotientDim = 0;
};

struct AuditReport {
  long m = 0;
  long d = 0;
  AuditMode mode = AuditMode::exhaustive;
  std::vector<AuditStratum> strata;  // ascending length
  long topDim = 0;
  bool uniqueTop = false;
  bool small = false;
  long stratumFormulaDim = 0;   // (m-1)d(d-1)/2, from the stratum formula
  long printedDim = 0;          // m(m-1)/2, the printed claim
  bool printedDimMatches = false;
};

// Exhaustive mode enumerates S_d (refusing beyond the cap); grouped mode
// reads the length distribution off the q-factorial and needs no
// enumeration. Both must produce identical reports.
AuditReport smallnessAudit(long m, long d, AuditMode mode = AuditMode::exhaustive,
                           long perm_cap = kDefaultPermCap);

// sum_sigma q^{l(sigma)} == [d]_q! by exhaustive enumeration.
bool inversionGfCheck(long d, long perm_cap = kDefaultPermCap);

}  // namespace nchilb
