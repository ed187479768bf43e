#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "nchilb/motives.hpp"
#include "nchilb/serialize.hpp"
#include "nchilb/trees.hpp"

using namespace nchilb;

namespace {

Word word(std::initializer_list<int> letters) { return Word(std::vector<int>(letters)); }

Tree tree(int m, std::initializer_list<std::initializer_list<int>> words) {
  std::vector<Word> list;
  for (const auto& w : words) list.emplace_back(std::vector<int>(w));
  return Tree(m, std::move(list));
}

// brute-force linear extension count: try all d! label assignments
long bruteForceExtensions(const Tree& t) {
  const std::size_t d = static_cast<std::size_t>(t.size());
  std::vector<int> labels(d);
  std::iota(labels.begin(), labels.end(), 1);
  long count = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < d && ok; ++i)
      for (std::size_t j = 0; j < d && ok; ++j)
        if (prefixLeq(t.words()[i], t.words()[j]) && labels[i] > labels[j]) ok = false;
    if (ok) ++count;
  } while (std::next_permutation(labels.begin(), labels.end()));
  return count;
}

}  // namespace

TEST_SUITE("trees") {

TEST_CASE("lexicographic order") {
  CHECK(lexCompare(word({}), word({2})) < 0);
  CHECK(lexCompare(word({1, 2}), word({2})) < 0);
  CHECK(lexCompare(word({1}), word({1, 1})) < 0);
  CHECK(lexCompare(word({2}), word({1, 1})) > 0);
  CHECK(lexCompare(word({1, 2}), word({1, 2})) == 0);
}

TEST_CASE("prefix order") {
  CHECK(prefixLeq(word({}), word({2, 1})));
  CHECK(prefixLeq(word({1}), word({1, 2})));
  CHECK_FALSE(prefixLeq(word({2}), word({1, 2})));
  CHECK_FALSE(prefixLeq(word({1, 2}), word({1})));
}

TEST_CASE("tree validation") {
  CHECK_THROWS_AS(tree(2, {{}, {3}}), std::invalid_argument);
  CHECK_THROWS_AS(tree(2, {{}, {1, 1}}), std::invalid_argument);  // missing (1)
  CHECK_THROWS_AS(tree(2, {{1}}), std::invalid_argument);         // missing root
  const Tree t = tree(2, {{1}, {}, {2}});  // sorted on construction
  CHECK(t.words()[0] == word({}));
  CHECK(t.words()[1] == word({1}));
  CHECK(t.words()[2] == word({2}));
}

TEST_CASE("triangle sort") {
  CHECK(triangleSort(tree(2, {{}, {1}, {2}})) ==
        std::vector<Word>{word({}), word({2}), word({1})});
  CHECK(triangleSort(Tree::singleton(3)) == std::vector<Word>{word({})});
  CHECK(triangleSort(tree(2, {{}, {1}, {1, 1}})) ==
        std::vector<Word>{word({}), word({1}), word({1, 1})});
}

TEST_CASE("enumeration matches hand lists and Fuss-Catalan counts") {
  const auto pairs = enumerateTrees(2, 2);
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0] == tree(2, {{}, {1}}));
  CHECK(pairs[1] == tree(2, {{}, {2}}));
  CHECK(enumerateTrees(2, 3).size() == 5);
  CHECK(enumerateTrees(3, 3).size() == 12);
  for (int m = 1; m <= 3; ++m)
    for (long d = 0; d <= 7; ++d)
      CHECK(mpz_class(enumerateTrees(m, d).size()) == fussCatalan(m, d));
}

TEST_CASE("enumeration is canonically ordered and duplicate free") {
  const auto trees = enumerateTrees(3, 4);
  for (std::size_t i = 1; i < trees.size(); ++i) CHECK(treeLess(trees[i - 1], trees[i]));
}

TEST_CASE("enumeration refuses beyond the cap") {
  CHECK_THROWS_AS(enumerateTrees(2, 10, 100), CapExceeded);
  try {
    enumerateTrees(2, 10, 100);
  } catch (const CapExceeded& e) {
    CHECK(e.count() == "16796");  // the Catalan number it would generate
  }
}

TEST_CASE("fuss-catalan values") {
  CHECK(fussCatalan(2, 4) == 14);
  CHECK(fussCatalan(1, 9) == 1);
  CHECK(fussCatalan(3, 3) == 12);
}

TEST_CASE("full cell dimensions by hand") {
  CHECK(cellDimFull(tree(2, {{}, {1}})) == 6);
  CHECK(cellDimFull(tree(2, {{}, {2}})) == 5);
  for (int m = 1; m <= 4; ++m) CHECK(cellDimFull(Tree::singleton(m)) == m);
}

TEST_CASE("punctual cell dimensions by hand") {
  const auto triples = dSet(tree(2, {{}, {1}}));
  REQUIRE(triples.size() == 1);
  CHECK(triples[0].source == word({}));
  CHECK(triples[0].letter == 2);
  CHECK(triples[0].target == word({1}));
  CHECK(cellDimPunctual(tree(2, {{}, {2}})) == 0);
  CHECK(cellDimPunctual(Tree::singleton(4)) == 0);
}

TEST_CASE("punctual triples are full triples") {
  for (int m = 2; m <= 3; ++m) {
    for (long d = 1; d <= 4; ++d) {
      for (const Tree& t : enumerateTrees(m, d)) {
        const auto full = fullCellTriples(t);
        for (const PavingTriple& triple : dSet(t))
          CHECK(std::find(full.begin(), full.end(), triple) != full.end());
        CHECK(cellDimPunctual(t) <= cellDimFull(t));
      }
    }
  }
}

TEST_CASE("triangle order is compatible with the punctual triples") {
  // for (w,k,w') in D(T), w strictly precedes w' in the triangle order
  for (int m = 2; m <= 3; ++m) {
    for (long d = 1; d <= 5; ++d) {
      for (const Tree& t : enumerateTrees(m, d)) {
        const auto order = triangleSort(t);
        auto position = [&order](const Word& w) {
          return std::find(order.begin(), order.end(), w) - order.begin();
        };
        for (const PavingTriple& triple : dSet(t))
          CHECK(position(triple.source) < position(triple.target));
      }
    }
  }
}

TEST_CASE("grafting") {
  CHECK(ungraft(tree(2, {{}, {1}, {2}})) ==
        std::vector<Tree>{Tree::singleton(2), Tree::singleton(2)});
  CHECK(graft({Tree(2), Tree::singleton(2)}) == tree(2, {{}, {2}}));
  CHECK_THROWS_AS(ungraft(Tree(2)), std::domain_error);
  for (int m = 2; m <= 3; ++m)
    for (long d = 1; d <= 5; ++d)
      for (const Tree& t : enumerateTrees(m, d)) CHECK(graft(ungraft(t)) == t);
}

TEST_CASE("boundary counts") {
  for (const Tree& t : enumerateTrees(2, 3)) CHECK(boundaryCount(t) == 4);
  CHECK(boundaryCount(tree(1, {{}, {1}, {1, 1}})) == 1);
  CHECK(boundaryCount(Tree::singleton(3)) == 3);
  for (int m = 1; m <= 3; ++m)
    for (long d = 1; d <= 5; ++d)
      for (const Tree& t : enumerateTrees(m, d))
        CHECK(boundaryCount(t) == (m - 1) * t.size() + 1);
}

TEST_CASE("grafting recursion for the punctual dimension") {
  for (const Tree& t : enumerateTrees(2, 3)) CHECK(dRecursionCheck(t));
  CHECK(dRecursionCheck(Tree::singleton(2)));
  for (long d = 1; d <= 4; ++d)
    for (const Tree& t : enumerateTrees(3, d)) CHECK(dRecursionCheck(t));
}

TEST_CASE("linear extension counts") {
  CHECK(linearExtensionCount(tree(1, {{}, {1}, {1, 1}, {1, 1, 1}})) == 1);
  CHECK(linearExtensionCount(tree(2, {{}, {1}, {2}})) == 2);
  mpz_class total = 0;
  for (const Tree& t : enumerateTrees(3, 3)) total += linearExtensionCount(t);
  CHECK(total == 15);
}

TEST_CASE("linear extension count against brute force") {
  for (int m = 2; m <= 3; ++m)
    for (long d = 0; d <= 4; ++d)
      for (const Tree& t : enumerateTrees(m, d))
        CHECK(linearExtensionCount(t) == bruteForceExtensions(t));
}

TEST_CASE("linear extension listing") {
  const Tree t = tree(2, {{}, {1}, {2}});
  const auto list = linearExtensionsList(t);
  REQUIRE(list.size() == 2);
  for (const CompatibleOrdering& f : list) {
    CHECK(f.labels.size() == 3);
    // monotone for the prefix order
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        if (prefixLeq(t.words()[i], t.words()[j])) CHECK(f.labels[i] <= f.labels[j]);
  }
  CHECK(list[0] != list[1]);
  CHECK_THROWS_AS(linearExtensionsList(tree(2, {{}, {1}, {2}}), 1), CapExceeded);
  // counts match the listing everywhere small
  for (long d = 0; d <= 4; ++d)
    for (const Tree& t2 : enumerateTrees(2, d))
      CHECK(mpz_class(linearExtensionsList(t2).size()) == linearExtensionCount(t2));
}

TEST_CASE("paving series") {
  const auto punctual = pavingSeries(2, 2, PavingKind::punctual);
  CHECK(punctual[0] == LaurentPolynomial(1));
  CHECK(punctual[2].mulQPower(1) == LaurentPolynomial::fromCoefficients(0, {1, 1}));
  const auto full = pavingSeries(2, 2, PavingKind::full);
  CHECK(full[2] == LaurentPolynomial::fromCoefficients(5, {1, 1}));
  CHECK(full[0] == LaurentPolynomial(1));
}

TEST_CASE("paving series matches both functional equation solutions") {
  for (int m = 1; m <= 3; ++m) {
    const long dmax = 7;
    const auto punctual = pavingSeries(m, dmax, PavingKind::punctual);
    const auto full = pavingSeries(m, dmax, PavingKind::full);
    for (long d = 0; d <= dmax; ++d) {
      CHECK(punctual[d].mulQPower((m - 1) * d * (d - 1) / 2) == punctualMotive(m, d));
      CHECK(full[d] == hilbMotive(m, d));
    }
  }
}

TEST_CASE("exactly one tree attains each maximal cell dimension") {
  for (int m = 2; m <= 3; ++m) {
    for (long d = 1; d <= 6; ++d) {
      const auto trees = enumerateTrees(m, d);
      long punctualMax = 0, fullMax = 0;
      for (const Tree& t : trees) {
        punctualMax = std::max(punctualMax, cellDimPunctual(t));
        fullMax = std::max(fullMax, cellDimFull(t));
      }
      CHECK(punctualMax == (m - 1) * d * (d - 1) / 2);
      long punctualHits = 0, fullHits = 0;
      for (const Tree& t : trees) {
        if (cellDimPunctual(t) == punctualMax) ++punctualHits;
        if (cellDimFull(t) == fullMax) ++fullHits;
      }
      CHECK(punctualHits == 1);
      CHECK(fullHits == 1);
    }
  }
}

TEST_CASE("extension sums match the resolution census product") {
  for (int m = 1; m <= 3; ++m) {
    for (long d = 0; d <= 7; ++d) {
      mpz_class sum = 0;
      for (const Tree& t : enumerateTrees(m, d)) sum += linearExtensionCount(t);
      mpz_class expected = 1;
      for (long i = 0; i < d; ++i) expected *= (m - 1) * i + 1;
      CHECK(sum == expected);
    }
  }
}

TEST_CASE("census rows and CSV export") {
  const auto rows = census(3, 3);
  REQUIRE(rows.size() == 12);
  mpz_class extensions = 0;
  for (const CensusRow& row : rows) extensions += row.linearExtensions;
  CHECK(extensions == 15);
  std::ostringstream os;
  emitCensusCsv(3, 3, rows, os);
  std::istringstream lines(os.str());
  std::string header;
  std::getline(lines, header);
  CHECK(header == "m,d,tree_id,dim_full,dim_punctual,n_linear_extensions");
  long count = 0;
  for (std::string line; std::getline(lines, line);) ++count;
  CHECK(count == 12);
}

TEST_CASE("tree serialization") {
  const nlohmann::json j = tree(2, {{}, {1}, {1, 2}});
  CHECK(j == nlohmann::json({nlohmann::json::array(), {1}, {1, 2}}));
}

}  // TEST_SUITE
