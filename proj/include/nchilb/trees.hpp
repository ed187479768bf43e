#pragma once

// m-ary word trees: finite sets of words over {1..m} closed under left
// subwords. These index the affine paving cells of both the full and the
// punctual scheme; everything here is dimension and count bookkeeping.

#include <gmpxx.h>

#include <compare>
#include <string>
#include <vector>

#include "nchilb/errors.hpp"
#include "nchilb/laurent.hpp"
#include "nchilb/series.hpp"

namespace nchilb {

inline constexpr long kDefaultTreeCap = 1'000'000;

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {}

  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  int letter(std::size_t i) const { return letters_.at(i); }
  const std::vector<int>& letters() const { return letters_; }
  Word append(int k) const;
  Word parent() const;  // drops the last letter; throws on the empty word

  bool operator==(const Word& rhs) const { return letters_ == rhs.letters_; }
  std::string str() const;  // digits, "e" for the empty word

 private:
  std::vector<int> letters_;
};

// Lexicographic order with 1 < 2 < ... < m; a proper left subword precedes
// its extensions, so the empty word is the minimum.
std::strong_ordering lexCompare(const Word& a, const Word& b);

// The prefix order: true iff a is a left subword of b.
bool prefixLeq(const Word& a, const Word& b);

class Tree {
 public:
  explicit Tree(int alphabet_size);  // the empty tree
  Tree(int alphabet_size, std::vector<Word> words);  // validates and sorts

  static Tree singleton(int alphabet_size);  // {empty word}

  int alphabetSize() const { return m_; }
  long size() const { return static_cast<long>(words_.size()); }
  bool empty() const { return words_.empty(); }
  bool contains(const Word& w) const;
  const std::vector<Word>& words() const { return words_; }  // lex-sorted

  bool operator==(const Tree& rhs) const { return m_ == rhs.m_ && words_ == rhs.words_; }

  std::string str() const;

 private:
  int m_;
  std::vector<Word> words_;
};

// Canonical comparison: lexicographic on the lex-sorted word lists.
bool treeLess(const Tree& a, const Tree& b);

// T = {empty} union k . T_k; the branches determine the alphabet size.
Tree graft(const std::vector<Tree>& branches);
std::vector<Tree> ungraft(const Tree& t);  // throws on the empty tree

// Enumeration in the total order defined by: a word precedes its
// extensions, and words branching apart are ordered by the larger first
// differing letter coming first.
std::vector<Word> triangleSort(const Tree& t);

// Pairs (w, k) with w in T, wk not in T. Equals (m-1)|T|+1 for nonempty T.
long boundaryCount(const Tree& t);

struct PavingTriple {
  Word source;
  int letter = 0;
  Word target;
  bool operator==(const PavingTriple&) const = default;
};

// Triples (w, k, w') with w in T, wk not in T, w' in T, w' <lex wk; the
// count is the dimension of the full paving cell attached to T.
std::vector<PavingTriple> fullCellTriples(const Tree& t);
long cellDimFull(const Tree& t);

// The subset of fullCellTriples with w' not a prefix of w; its size |D(T)|
// is the dimension of the punctual paving cell.
std::vector<PavingTriple> dSet(const Tree& t);
long cellDimPunctual(const Tree& t);

// |D(T)| = sum_k |D(T_k)| + sum_{k'<k} |T_{k'}| ((m-1)|T_k|+1) against the
// ungrafting of T. Nonempty trees only.
bool dRecursionCheck(const Tree& t);

// (1/((m-1)d+1)) C(md, d): the number of d-element m-ary trees.
mpz_class fussCatalan(long m, long d);

// All d-element trees over {1..m}, canonically ordered; refuses (with the
// would-be count) when fussCatalan(m, d) exceeds the cap.
std::vector<Tree> enumerateTrees(int m, long d, long cap = kDefaultTreeCap);

// A bijection T -> {1..d} monotone for the prefix order; labels[i] is the
// value assigned to words()[i].
struct CompatibleOrdering {
  std::vector<int> labels;
  bool operator==(const CompatibleOrdering&) const = default;
};

mpz_class linearExtensionCount(const Tree& t);
std::vector<CompatibleOrdering> linearExtensionsList(const Tree& t, long cap = kDefaultTreeCap);

enum class PavingKind { full, punctual };

// Census generating series, twist 0 over Z[q, q^-1]:
//   punctual: sum_T q^{-(m-1)|T|(|T|-1)/2 + |D(T)|} t^{|T|}  (the normalized
//             series matching the functional-equation solution),
//   full:     sum_T q^{dim S_T} t^{|T|}  (unnormalized).
TwistedSeries<LaurentPolynomial> pavingSeries(int m, long dmax, PavingKind kind,
                                              long cap = kDefaultTreeCap);

struct CensusRow {
  long treeId = 0;
  long dimFull = 0;
  long dimPunctual = 0;
  mpz_class linearExtensions;
};

std::vector<CensusRow> census(int m, long d, long cap = kDefaultTreeCap);

// CSV rows m,d,tree_id,dim_full,dim_punctual,n_linear_extensions.
void emitCensusCsv(int m, long d, const std::vector<CensusRow>& rows, std::ostream& os);

}  // namespace nchilb
