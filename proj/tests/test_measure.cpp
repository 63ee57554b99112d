#include <doctest.h>

#include <algorithm>
#include <random>

#include "ob/clopen.hpp"
#include "ob/dyadic.hpp"
#include "support/oracles.hpp"

using namespace ob;

namespace {

BinNode b(std::vector<unsigned> bits) { return BinNode(std::move(bits)); }

// The zeros-then-one stems 1, 01, 001, ... as binary nodes.
std::vector<BinNode> zeros_then_one(std::size_t count) {
  std::vector<BinNode> out;
  for (std::size_t zeros = 0; zeros < count; ++zeros) {
    std::vector<unsigned> bits(zeros, 0u);
    bits.push_back(1u);
    out.push_back(BinNode(std::move(bits)));
  }
  return out;
}

}  // namespace

TEST_SUITE("dyadic") {

TEST_CASE("normal form and rendering") {
  CHECK(Dyadic(2, 3) == Dyadic(1, 2));
  CHECK(Dyadic(0, 5) == Dyadic::zero());
  CHECK(Dyadic(1, 2).str() == "1/2^2");
  CHECK(Dyadic::zero().str() == "0/2^0");
  CHECK(Dyadic::one().str() == "1/2^0");
}

TEST_CASE("exact arithmetic") {
  CHECK(Dyadic(1, 1) + Dyadic(1, 2) == Dyadic(3, 2));
  CHECK(Dyadic(1, 0) - Dyadic(1, 3) == Dyadic(7, 3));
  CHECK(Dyadic(7, 3).doubled() == Dyadic(7, 2));
  CHECK(Dyadic(3, 0).doubled() == Dyadic(6, 0));
  CHECK(Dyadic(1, 3) < Dyadic(1, 2));
  CHECK_THROWS_AS((void)(Dyadic(1, 3) - Dyadic(1, 2)), Error);
}

}  // TEST_SUITE

TEST_SUITE("measure") {

TEST_CASE("intervals") {
  CHECK(ClopenSet::interval(b({0, 1})).measure() == Dyadic(1, 2));
  CHECK(ClopenSet::interval(BinNode{}).measure() == Dyadic::one());
  CHECK(ClopenSet::interval(b({1})).measure() == Dyadic(1, 1));
}

TEST_CASE("union basics") {
  ClopenSet zero = ClopenSet::interval(b({0}));
  ClopenSet one = ClopenSet::interval(b({1}));
  CHECK(unite(zero, one) == ClopenSet::whole());
  CHECK(unite(zero, ClopenSet::interval(b({0, 1}))) == zero);
  ClopenSet corners = unite(ClopenSet::interval(b({0, 0})),
                            ClopenSet::interval(b({1, 1})));
  CHECK(corners.stems() == std::vector<BinNode>{b({0, 0}), b({1, 1})});
  CHECK(corners.measure() == Dyadic(1, 1));
}

TEST_CASE("meet and difference") {
  CHECK(intersect(ClopenSet::interval(b({0})), ClopenSet::interval(b({0, 1}))) ==
        ClopenSet::interval(b({0, 1})));
  CHECK(intersect(ClopenSet::interval(b({0})), ClopenSet::interval(b({1})))
            .empty());
  ClopenSet rest = subtract(ClopenSet::whole(), ClopenSet::interval(b({0, 0})));
  CHECK(rest.stems() == std::vector<BinNode>{b({1}), b({0, 1})});
  CHECK(rest.measure() == Dyadic(3, 2));
}

TEST_CASE("measures of canonical sets") {
  CHECK(ClopenSet::whole().measure() == Dyadic::one());
  CHECK(ClopenSet{}.measure() == Dyadic::zero());
  CHECK(ClopenSet::from_stems({b({0}), b({1, 0})}).measure() == Dyadic(3, 2));
}

TEST_CASE("window unions") {
  std::vector<BinNode> f = zeros_then_one(8);
  ClopenSet window = window_union(f, 0, 3);
  CHECK(window.stems() == std::vector<BinNode>{b({1}), b({0, 1}), b({0, 0, 1})});
  CHECK(window.measure() == Dyadic(7, 3));
  CHECK(window_union(f, 2, 2).empty());
  std::vector<BinNode> nested = {b({0}), b({0, 1})};
  CHECK(window_union(nested, 0, 2) == ClopenSet::interval(b({0})));
  CHECK_THROWS_AS((void)window_union(f, 3, 2), Error);
  CHECK_THROWS_AS((void)window_union(f, 0, 9), Error);
}

TEST_CASE("tail decay table for the zeros-then-one family") {
  std::vector<BinNode> f = zeros_then_one(8);
  auto table = tail_decay_table(f, 8);
  REQUIRE(table.size() == 9);
  for (std::size_t n = 0; n <= 8; ++n) {
    CAPTURE(n);
    // Geometric tail: sum_{k=n..7} 1/2^(k+1) = 1/2^n - 1/2^8.
    Dyadic expected = Dyadic(1, static_cast<unsigned>(n)) - Dyadic(1, 8);
    CHECK(table[n].second == expected);
  }
}

TEST_CASE("deeper windows leave smaller tails") {
  // Observed decay: for an antichain enumeration, the last shrinking
  // window's measure falls as the enumeration extends.
  Dyadic previous = Dyadic::one();
  for (std::size_t N : {4, 6, 8}) {
    std::vector<BinNode> f = zeros_then_one(N);
    Dyadic last = tail_decay_table(f, N)[N - 1].second;
    CHECK(last < previous);
    previous = last;
  }
}

TEST_CASE("tail decay is nonincreasing and constant lists stay flat") {
  std::vector<BinNode> constant(5, b({1, 0}));
  for (const auto& [n, m] : tail_decay_table(constant, 5))
    if (n < 5) CHECK(m == Dyadic(1, 2));
  std::mt19937_64 rng(50);
  for (int round = 0; round < 100; ++round) {
    std::vector<BinNode> f;
    for (int i = 0; i < 10; ++i) f.push_back(oracles::random_bin_node(rng, 6));
    auto table = tail_decay_table(f, f.size());
    for (std::size_t i = 0; i + 1 < table.size(); ++i)
      CHECK(table[i + 1].second <= table[i].second);
  }
}

TEST_CASE("parent window bound examples") {
  std::vector<BinNode> f = zeros_then_one(8);
  WindowBound bound = parent_window_bound(f, 0, 3);
  CHECK(bound.lhs == Dyadic::one());
  CHECK(bound.rhs == Dyadic(7, 2));
  CHECK(bound.holds);

  WindowBound single = parent_window_bound(f, 2, 3);
  CHECK(single.lhs == Dyadic(1, 2));  // parent of 0.0.1 spans 1/2^2
  CHECK(single.rhs == Dyadic(1, 2));
  CHECK(single.holds);

  WindowBound empty = parent_window_bound(f, 3, 3);
  CHECK(empty.lhs == Dyadic::zero());
  CHECK(empty.rhs == Dyadic::zero());
  CHECK(empty.holds);
}

TEST_CASE("parent window bound holds on random windows") {
  std::mt19937_64 rng(51);
  for (int round = 0; round < 500; ++round) {
    std::vector<BinNode> f;
    std::size_t len = 1 + rng() % 12;
    for (std::size_t i = 0; i < len; ++i)
      f.push_back(oracles::random_bin_node(rng, 6));
    std::size_t n = rng() % (len + 1);
    std::size_t N = n + rng() % (len - n + 1);
    CHECK(parent_window_bound(f, n, N).holds);
  }
}

TEST_CASE("shrinking a condition against a window") {
  std::vector<BinNode> f = zeros_then_one(8);
  ClopenSet shrunk = shrink_against_window(ClopenSet::whole(), f, 2, 8);
  Dyadic removed = Dyadic(1, 2) - Dyadic(1, 8);
  CHECK(shrunk.measure() == Dyadic::one() - removed);

  ClopenSet disjoint = ClopenSet::interval(b({1, 1}));
  CHECK(shrink_against_window(disjoint, f, 1, 8) == disjoint);

  ClopenSet inside = ClopenSet::interval(b({0, 1, 0}));
  CHECK(shrink_against_window(inside, f, 0, 8).empty());

  // Contract: measure(q \ window) >= measure(q) - measure(window).
  std::mt19937_64 rng(52);
  for (int round = 0; round < 200; ++round) {
    ClopenSet q = oracles::random_clopen(rng, 3, 5);
    std::vector<BinNode> list;
    for (int i = 0; i < 6; ++i) list.push_back(oracles::random_bin_node(rng, 5));
    ClopenSet window = window_union(list, 0, list.size());
    Dyadic left = shrink_against_window(q, list, 0, list.size()).measure();
    Dyadic right = q.measure();
    if (window.measure() < right) {
      CHECK(left >= right - window.measure());
    }
  }
}

TEST_CASE("canonicalization is order-insensitive and idempotent") {
  std::mt19937_64 rng(53);
  for (int round = 0; round < 200; ++round) {
    std::vector<BinNode> stems;
    for (int i = 0; i < 8; ++i) stems.push_back(oracles::random_bin_node(rng, 6));
    ClopenSet canonical = ClopenSet::from_stems(stems);
    std::shuffle(stems.begin(), stems.end(), rng);
    CHECK(ClopenSet::from_stems(stems) == canonical);
    CHECK(ClopenSet::from_stems(canonical.stems()) == canonical);
  }
}

TEST_CASE("all operations agree with the depth-6 bitset model") {
  std::mt19937_64 rng(54);
  for (int round = 0; round < 2000; ++round) {
    ClopenSet a = oracles::random_clopen(rng, 1 + rng() % 5, 6);
    ClopenSet c = oracles::random_clopen(rng, 1 + rng() % 5, 6);
    std::uint64_t ma = oracles::to_mask(a);
    std::uint64_t mc = oracles::to_mask(c);
    CHECK(oracles::to_mask(unite(a, c)) == (ma | mc));
    CHECK(oracles::to_mask(intersect(a, c)) == (ma & mc));
    CHECK(oracles::to_mask(subtract(a, c)) == (ma & ~mc));
    CHECK(oracles::measure_matches(a.measure(), ma));
  }
}

TEST_CASE("finite additivity and inclusion-exclusion") {
  std::mt19937_64 rng(55);
  for (int round = 0; round < 300; ++round) {
    ClopenSet a = oracles::random_clopen(rng, 3, 6);
    ClopenSet c = oracles::random_clopen(rng, 3, 6);
    ClopenSet disjoint_part = subtract(c, a);
    CHECK(unite(a, disjoint_part).measure() ==
          a.measure() + disjoint_part.measure());
    CHECK(a.measure() + c.measure() ==
          unite(a, c).measure() + intersect(a, c).measure());
  }
  ClopenSet a = oracles::random_clopen(rng, 4, 6);
  CHECK(subtract(ClopenSet::whole(), a).measure() ==
        Dyadic::one() - a.measure());
}

TEST_CASE("minimal stems and their union agree as clopen sets") {
  std::mt19937_64 rng(56);
  for (int round = 0; round < 200; ++round) {
    BinNodeSet stems;
    for (int i = 0; i < 7; ++i) stems.insert(oracles::random_bin_node(rng, 6));
    BinNodeSet mins = minimal_elements(stems);
    CHECK(ClopenSet::from_stems({stems.begin(), stems.end()}) ==
          ClopenSet::from_stems({mins.begin(), mins.end()}));
  }
}

}  // TEST_SUITE
