#include <doctest.h>

#include "bergman/fan.hpp"
#include "bergman/subdominant.hpp"
#include "bergman/tropical.hpp"
#include "fixtures.hpp"

using namespace bergman;
using namespace fixtures;

namespace {

// All vectors over a small value grid, for exhaustive sweeps.
std::vector<WeightVector> grid_vectors(int n, const std::vector<Rat>& values) {
  std::vector<WeightVector> out;
  std::vector<int> idx(n, 0);
  while (true) {
    WeightVector w;
    for (int i : idx) w.push_back(values[i]);
    out.push_back(w);
    int k = 0;
    while (k < n && ++idx[k] == static_cast<int>(values.size())) idx[k++] = 0;
    if (k == n) break;
  }
  return out;
}

}  // namespace

TEST_CASE("membership witnesses on the rank-2 triangle") {
  Matroid m = u23();
  WeightVector w = {rq(1), rq(2), rq(3)};

  auto uncovered = find_uncovered_element(m, w);
  REQUIRE(uncovered.has_value());
  CHECK(*uncovered == 2);  // only {a,b} is a minimum basis

  auto violation = find_unique_max_circuit(m, w);
  REQUIRE(violation.has_value());
  CHECK(violation->circuit == Subset::full(3));
  CHECK(violation->unique_max == 2);

  auto nowhere = find_nowhere_min_element(m, w);
  REQUIRE(nowhere.has_value());
  CHECK(*nowhere == 2);

  auto non_flat = find_non_flat_part(m, w);
  REQUIRE(non_flat.has_value());
  CHECK(*non_flat == Subset::of({0, 1}));  // rank 2, closure is everything

  WeightVector fixed = {rq(1), rq(2), rq(2)};
  CHECK(is_ultrametric_bases(m, fixed));
  CHECK(is_ultrametric_circuits(m, fixed));
  CHECK(is_ultrametric_cocircuits(m, fixed));
  CHECK(is_ultrametric_flag(m, fixed));
}

TEST_CASE("weight class flag structure") {
  WeightVector w = {rq(3), rq(1), rq(3), rq(1, 2), rq(1)};
  WeightClassFlag flag = weight_class_flag(w);
  REQUIRE(flag.parts.size() == 3);
  CHECK(flag.values == std::vector<Rat>{rq(1, 2), rq(1), rq(3)});
  CHECK(flag.parts[0] == Subset::of({3}));
  CHECK(flag.parts[1] == Subset::of({1, 3, 4}));
  CHECK(flag.parts[2] == Subset::full(5));

  RandomWeights gen(11);
  for (int i = 0; i < 200; ++i) {
    WeightVector v = gen.next(6);
    WeightClassFlag f = weight_class_flag(v);
    REQUIRE(!f.parts.empty());
    CHECK(f.parts.back() == Subset::full(6));
    for (std::size_t k = 0; k + 1 < f.parts.size(); ++k) {
      CHECK(f.parts[k + 1].contains(f.parts[k]));
      CHECK(f.parts[k] != f.parts[k + 1]);
      CHECK(f.values[k] < f.values[k + 1]);
    }
  }
}

TEST_CASE("a tree metric lies in the fan of its complete graph") {
  Matroid m = k4();
  WeightVector w = w1();
  CHECK(is_ultrametric_bases(m, w));
  CHECK(is_ultrametric_circuits(m, w));
  CHECK(is_ultrametric_cocircuits(m, w));
  CHECK(is_ultrametric_flag(m, w));

  WeightClassFlag flag = weight_class_flag(w);
  REQUIRE(flag.parts.size() == 3);
  CHECK(flag.parts[0] == Subset::of({3}));           // BC
  CHECK(flag.parts[1] == Subset::of({0, 1, 3}));     // + AB, AC
  CHECK(m.is_flat(flag.parts[0]));
  CHECK(m.is_flat(flag.parts[1]));

  // Raising one edge off the fan point breaks membership.
  WeightVector off = w;
  off[5] = rq(5);  // CD
  CHECK(!is_ultrametric_bases(m, off));
  CHECK(!is_ultrametric_circuits(m, off));
  CHECK(!is_ultrametric_cocircuits(m, off));
  CHECK(!is_ultrametric_flag(m, off));
}

TEST_CASE("the four characterizations agree exhaustively on small grids") {
  std::vector<Rat> grid = {rq(0), rq(1), rq(2)};
  for (const Matroid& m : {u12(), u23(), k3()}) {
    for (const auto& w : grid_vectors(m.size(), grid)) {
      bool b = is_ultrametric_bases(m, w);
      CHECK(b == is_ultrametric_circuits(m, w));
      CHECK(b == is_ultrametric_cocircuits(m, w));
      CHECK(b == is_ultrametric_flag(m, w));
    }
  }
}

TEST_CASE("the four characterizations agree on random vectors") {
  RandomWeights gen(2026);
  for (const Matroid& m : {u24(), u35(), k4(), fano()}) {
    for (int i = 0; i < 300; ++i) {
      WeightVector w = gen.next(m.size());
      bool b = is_ultrametric_bases(m, w);
      CHECK(b == is_ultrametric_circuits(m, w));
      CHECK(b == is_ultrametric_cocircuits(m, w));
      CHECK(b == is_ultrametric_flag(m, w));
    }
  }
}

TEST_CASE("superlevel sets of generators and negated weights") {
  Matroid m = k4();

  // v for the triangle flat {AB, AC, BC}: infinite there, zero elsewhere.
  TropicalPoint v = flat_generator(m, Subset::of({0, 1, 3}));
  CHECK(superlevel_flat_test(m, v));

  // Infinity on a non-flat set fails.
  TropicalPoint bad;
  bad.coords.assign(6, TropScalar::of(Rat(0)));
  bad.coords[0] = TropScalar::infinity();  // {AB, AC} is not a flat
  bad.coords[1] = TropScalar::infinity();
  CHECK(!superlevel_flat_test(m, bad));

  // For finite points, the test decides fan membership of the negation.
  RandomWeights gen(5);
  for (int i = 0; i < 300; ++i) {
    WeightVector w = gen.next(6);
    std::vector<Rat> neg;
    for (const Rat& x : w) neg.push_back(-x);
    CHECK(superlevel_flat_test(m, TropicalPoint::finite(neg)) ==
          is_ultrametric_flag(m, w));
  }

  TropicalPoint wrong_dim;
  wrong_dim.coords.assign(3, TropScalar::of(Rat(0)));
  CHECK_THROWS_AS(superlevel_flat_test(m, wrong_dim), std::invalid_argument);
}

TEST_CASE("membership survives translation and scaling") {
  Matroid m = u35();
  RandomWeights gen(99);
  for (int i = 0; i < 100; ++i) {
    WeightVector w = gen.next(5);
    bool member = is_ultrametric_bases(m, w);
    WeightVector shifted = w, scaled = w;
    for (auto& x : shifted) x += rq(7, 3);
    for (auto& x : scaled) x *= rq(5, 2);
    CHECK(is_ultrametric_bases(m, shifted) == member);
    CHECK(is_ultrametric_bases(m, scaled) == member);
  }
}
