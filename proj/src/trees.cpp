#include "nchilb/trees.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace nchilb {

Word Word::append(int k) const {
  std::vector<int> letters = letters_;
  letters.push_back(k);
  return Word(std::move(letters));
}

Word Word::parent() const {
  if (letters_.empty()) throw std::domain_error("the empty word has no parent");
  return Word(std::vector<int>(letters_.begin(), letters_.end() - 1));
}

std::string Word::str() const {
  if (letters_.empty()) return "e";
  const bool wide = std::any_of(letters_.begin(), letters_.end(), [](int k) { return k > 9; });
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (wide && i > 0) out += '.';
    out += std::to_string(letters_[i]);
  }
  return out;
}

std::strong_ordering lexCompare(const Word& a, const Word& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.letter(i) != b.letter(i))
      return a.letter(i) < b.letter(i) ? std::strong_ordering::less
                                       : std::strong_ordering::greater;
  }
  if (a.size() == b.size()) return std::strong_ordering::equal;
  return a.size() < b.size() ? std::strong_ordering::less : std::strong_ordering::greater;
}

bool prefixLeq(const Word& a, const Word& b) {
  if (a.size() > b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.letter(i) != b.letter(i)) return false;
  return true;
}

Tree::Tree(int alphabet_size) : m_(alphabet_size) {
  if (m_ < 1) throw std::invalid_argument("alphabet size must be >= 1");
}

Tree::Tree(int alphabet_size, std::vector<Word> words) : m_(alphabet_size), words_(std::move(words)) {
  if (m_ < 1) throw std::invalid_argument("alphabet size must be >= 1");
  std::sort(words_.begin(), words_.end(),
            [](const Word& a, const Word& b) { return lexCompare(a, b) < 0; });
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
  for (const Word& w : words_) {
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w.letter(i) < 1 || w.letter(i) > m_)
        throw std::invalid_argument("word letter out of range: " + w.str());
    if (!w.empty() && !contains(w.parent()))
      throw std::invalid_argument("word set is not left-subword closed at " + w.str());
  }
}

Tree Tree::singleton(int alphabet_size) { return Tree(alphabet_size, {Word()}); }

bool Tree::contains(const Word& w) const {
  return std::binary_search(words_.begin(), words_.end(), w,
                            [](const Word& a, const Word& b) { return lexCompare(a, b) < 0; });
}

std::string Tree::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (i > 0) out += ",";
    out += words_[i].str();
  }
  return out + "}";
}

bool treeLess(const Tree& a, const Tree& b) {
  const std::size_t n = std::min(a.words().size(), b.words().size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = lexCompare(a.words()[i], b.words()[i]);
    if (c != 0) return c < 0;
  }
  return a.words().size() < b.words().size();
}

Tree graft(const std::vector<Tree>& branches) {
  const int m = static_cast<int>(branches.size());
  if (m < 1) throw std::invalid_argument("grafting needs at least one branch");
  std::vector<Word> words;
  words.emplace_back();
  for (int k = 1; k <= m; ++k) {
    const Tree& branch = branches[static_cast<std::size_t>(k - 1)];
    if (branch.alphabetSize() != m)
      throw std::invalid_argument("branch alphabet size must equal the number of branches");
    for (const Word& w : branch.words()) {
      std::vector<int> letters;
      letters.reserve(w.size() + 1);
      letters.push_back(k);
      letters.insert(letters.end(), w.letters().begin(), w.letters().end());
      words.emplace_back(std::move(letters));
    }
  }
  return Tree(m, std::move(words));
}

std::vector<Tree> ungraft(const Tree& t) {
  if (t.empty()) throw std::domain_error("cannot ungraft the empty tree");
  const int m = t.alphabetSize();
  std::vector<std::vector<Word>> branchWords(static_cast<std::size_t>(m));
  for (const Word& w : t.words()) {
    if (w.empty()) continue;
    std::vector<int> rest(w.letters().begin() + 1, w.letters().end());
    branchWords[static_cast<std::size_t>(w.letter(0) - 1)].emplace_back(std::move(rest));
  }
  std::vector<Tree> out;
  out.reserve(static_cast<std::size_t>(m));
  for (auto& words : branchWords) out.emplace_back(m, std::move(words));
  return out;
}

std::vector<Word> triangleSort(const Tree& t) {
  std::vector<Word> out = t.words();
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
      if (a.letter(i) != b.letter(i)) return a.letter(i) > b.letter(i);
    return a.size() < b.size();
  });
  return out;
}

long boundaryCount(const Tree& t) {
  if (t.empty()) throw std::domain_error("boundary of the empty tree");
  long count = 0;
  for (const Word& w : t.words())
    for (int k = 1; k <= t.alphabetSize(); ++k)
      if (!t.contains(w.append(k))) ++count;
  return count;
}

std::vector<PavingTriple> fullCellTriples(const Tree& t) {
  std::vector<PavingTriple> out;
  for (const Word& w : t.words()) {
    for (int k = 1; k <= t.alphabetSize(); ++k) {
      const Word extended = w.append(k);
      if (t.contains(extended)) continue;
      for (const Word& target : t.words())
        if (lexCompare(target, extended) < 0) out.push_back({w, k, target});
    }
  }
  return out;
}

long cellDimFull(const Tree& t) { return static_cast<long>(fullCellTriples(t).size()); }

std::vector<PavingTriple> dSet(const Tree& t) {
  std::vector<PavingTriple> out;
  for (const Word& w : t.words()) {
    for (int k = 1; k <= t.alphabetSize(); ++k) {
      const Word extended = w.append(k);
      if (t.contains(extended)) continue;
      for (const Word& target : t.words())
        if (lexCompare(target, extended) < 0 && !prefixLeq(target, w))
          out.push_back({w, k, target});
    }
  }
  return out;
}

long cellDimPunctual(const Tree& t) { return static_cast<long>(dSet(t).size()); }

bool dRecursionCheck(const Tree& t) {
  if (t.empty()) throw std::domain_error("recursion check needs a nonempty tree");
  const long m = t.alphabetSize();
  const long lhs = cellDimPunctual(t);
  std::vector<Tree> branches = ungraft(t);
  long rhs = 0;
  for (const Tree& branch : branches) rhs += branch.empty() ? 0 : cellDimPunctual(branch);
  for (std::size_t k2 = 0; k2 < branches.size(); ++k2)
    for (std::size_t k1 = 0; k1 < k2; ++k1)
      rhs += branches[k1].size() * ((m - 1) * branches[k2].size() + 1);
  return lhs == rhs;
}

mpz_class fussCatalan(long m, long d) {
  if (m < 1 || d < 0) throw std::domain_error("fussCatalan requires m >= 1, d >= 0");
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m * d),
               static_cast<unsigned long>(d));
  const mpz_class divisor = (m - 1) * d + 1;
  if (!mpz_divisible_p(binom.get_mpz_t(), divisor.get_mpz_t()))
    throw std::logic_error("Fuss-Catalan divisibility violated");
  mpz_class out;
  mpz_divexact(out.get_mpz_t(), binom.get_mpz_t(), divisor.get_mpz_t());
  return out;
}

namespace {

// Trees of every size up to d, built bottom-up by grafting over the
// compositions of size-1 into m branch sizes.
std::vector<std::vector<Tree>> treesBySize(int m, long d) {
  std::vector<std::vector<Tree>> bySize(static_cast<std::size_t>(d) + 1);
  bySize[0] = {Tree(m)};
  for (long size = 1; size <= d; ++size) {
    std::vector<Tree> out;
    std::vector<long> parts(static_cast<std::size_t>(m), 0);
    std::vector<Tree> picks;
    std::function<void(std::size_t)> pick = [&](std::size_t k) {
      if (k == parts.size()) {
        out.push_back(graft(picks));
        return;
      }
      for (const Tree& branch : bySize[static_cast<std::size_t>(parts[k])]) {
        picks.push_back(branch);
        pick(k + 1);
        picks.pop_back();
      }
    };
    std::function<void(std::size_t, long)> compose = [&](std::size_t idx, long remaining) {
      if (idx + 1 == parts.size()) {
        parts[idx] = remaining;
        pick(0);
        return;
      }
      for (long v = 0; v <= remaining; ++v) {
        parts[idx] = v;
        compose(idx + 1, remaining - v);
      }
    };
    compose(0, size - 1);
    std::sort(out.begin(), out.end(), treeLess);
    bySize[static_cast<std::size_t>(size)] = std::move(out);
  }
  return bySize;
}

void requireTreeCap(int m, long d, long cap, const char* what) {
  mpz_class count = fussCatalan(m, d);
  if (count > cap)
    throw CapExceeded(std::string(what) + " would generate " + count.get_str() +
                          " trees at m=" + std::to_string(m) + " d=" + std::to_string(d) +
                          " (cap " + std::to_string(cap) + ")",
                      count.get_str());
}

}  // namespace

std::vector<Tree> enumerateTrees(int m, long d, long cap) {
  if (d < 0) throw std::domain_error("negative tree size");
  requireTreeCap(m, d, cap, "tree enumeration");
  return std::move(treesBySize(m, d)[static_cast<std::size_t>(d)]);
}

mpz_class linearExtensionCount(const Tree& t) {
  if (t.size() <= 1) return 1;
  mpz_class out = 1;
  long remaining = t.size() - 1;
  for (const Tree& branch : ungraft(t)) {
    mpz_class choose;
    mpz_bin_uiui(choose.get_mpz_t(), static_cast<unsigned long>(remaining),
                 static_cast<unsigned long>(branch.size()));
    out *= choose * linearExtensionCount(branch);
    remaining -= branch.size();
  }
  return out;
}

std::vector<CompatibleOrdering> linearExtensionsList(const Tree& t, long cap) {
  mpz_class count = linearExtensionCount(t);
  if (count > cap)
    throw CapExceeded("linear extension listing would generate " + count.get_str() +
                          " orderings (cap " + std::to_string(cap) + ")",
                      count.get_str());
  const std::size_t d = static_cast<std::size_t>(t.size());
  // parent index of each word in lex position order
  std::vector<long> parentIndex(d, -1);
  for (std::size_t i = 0; i < d; ++i) {
    const Word& w = t.words()[i];
    if (w.empty()) continue;
    const Word p = w.parent();
    for (std::size_t j = 0; j < d; ++j)
      if (t.words()[j] == p) {
        parentIndex[i] = static_cast<long>(j);
        break;
      }
  }
  std::vector<CompatibleOrdering> out;
  std::vector<int> labels(d, 0);
  std::function<void(int)> place = [&](int next) {
    if (next > static_cast<int>(d)) {
      out.push_back({labels});
      return;
    }
    for (std::size_t i = 0; i < d; ++i) {
      if (labels[i] != 0) continue;
      if (parentIndex[i] >= 0 && labels[static_cast<std::size_t>(parentIndex[i])] == 0) continue;
      labels[i] = next;
      place(next + 1);
      labels[i] = 0;
    }
  };
  place(1);
  return out;
}

TwistedSeries<LaurentPolynomial> pavingSeries(int m, long dmax, PavingKind kind, long cap) {
  TwistedSeries<LaurentPolynomial> out(0, dmax);
  for (long d = 0; d <= dmax; ++d) {
    requireTreeCap(m, d, cap, "paving census");
    LaurentPolynomial sum;
    for (const Tree& t : enumerateTrees(m, d, cap)) {
      const long dim = kind == PavingKind::full ? cellDimFull(t) : cellDimPunctual(t);
      sum += LaurentPolynomial::monomial(dim);
    }
    if (kind == PavingKind::punctual) sum = sum.mulQPower(-(m - 1) * d * (d - 1) / 2);
    out.setCoefficient(d, sum);
  }
  return out;
}

std::vector<CensusRow> census(int m, long d, long cap) {
  std::vector<CensusRow> out;
  long id = 0;
  for (const Tree& t : enumerateTrees(m, d, cap)) {
    out.push_back({id++, cellDimFull(t), cellDimPunctual(t), linearExtensionCount(t)});
  }
  return out;
}

void emitCensusCsv(int m, long d, const std::vector<CensusRow>& rows, std::ostream& os) {
  os << "m,d,tree_id,dim_full,dim_punctual,n_linear_extensions\n";
  for (const CensusRow& row : rows)
    os << m << "," << d << "," << row.treeId << "," << row.dimFull << "," << row.dimPunctual
       << "," << row.linearExtensions.get_str() << "\n";
}

}  // namespace nchilb
