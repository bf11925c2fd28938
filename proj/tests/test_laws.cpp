#include <doctest.h>

#include "sharkovsky/loop_builder.hpp"
#include "sharkovsky/permutation.hpp"
#include "support.hpp"

using namespace sharkovsky;

// Randomized checks of the segment operator over many cyclic permutations.
TEST_SUITE("laws") {
  TEST_CASE("A operator laws on random cycles") {
    std::mt19937 rng(20240611);
    int checked = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      const int n = 3 + trial % 10;
      const auto pi = testing_support::random_cycle(n, rng);
      const Segment full(1, n);
      for (int lo = 1; lo < n; ++lo) {
        for (int hi = lo + 1; hi <= n; ++hi) {
          const Segment s(lo, hi);
          const Segment a = apply_A(pi, s);
          const auto [na, nb] = testing_support::naive_A(pi.images(), lo, hi);
          REQUIRE(a == Segment(na, nb));
          CHECK(a.card() >= s.card());
          CHECK(s.contains(a) == (s == full));
          for (int lo2 = lo; lo2 < hi; ++lo2) {
            for (int hi2 = lo2 + 1; hi2 <= hi; ++hi2) CHECK(a.contains(apply_A(pi, Segment(lo2, hi2))));
          }
          ++checked;
        }
      }
      const int i0 = pivot(pi);
      CHECK(pi(i0) > i0);
      CHECK(pi(i0 + 1) <= i0);
      CHECK(apply_A(pi, Segment::unit(i0)).contains(Segment::unit(i0)));
      const int k = expansion_steps(pi);
      CHECK(k >= 1);
      CHECK(k <= n - 2);

      if (n % 2 == 1) CHECK(is_class_A(pi).member);

      const auto mu = transition_matrix(pi);
      for (int i = 1; i < n; ++i) {
        CHECK(mu.row(i - 1).sum() >= 1);
        for (int s = 1; s < n; ++s) {
          CHECK((mu(i - 1, s - 1) == 1) == apply_A(pi, Segment::unit(i)).contains(Segment::unit(s)));
        }
      }
    }
    CHECK(checked > 10000);
  }

  TEST_CASE("chains and loops on random class-A cycles") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 400; ++trial) {
      const int n = 3 + trial % 9;
      const auto pi = testing_support::random_cycle(n, rng);
      const int i0 = pivot(pi);
      for (int i1 = 1; i1 < n; ++i1) {
        if (i1 == i0) continue;
        const auto chain = chain_to(pi, i1);
        REQUIRE(chain.steps.size() >= 2);
        CHECK(chain.steps.front() == Segment::unit(i0));
        CHECK(chain.steps.back() == Segment::unit(i1));
        CHECK(static_cast<int>(chain.steps.size()) - 1 <= n - 2);
        std::vector<int> idx;
        for (std::size_t j = 0; j < chain.steps.size(); ++j) {
          idx.push_back(chain.steps[j].lo);
          if (j + 1 < chain.steps.size()) CHECK(apply_A(pi, chain.steps[j]).contains(chain.steps[j + 1]));
        }
        std::sort(idx.begin(), idx.end());
        CHECK(std::adjacent_find(idx.begin(), idx.end()) == idx.end());
      }
      if (!is_class_A(pi).member) continue;
      const auto loop = closed_unit_loop(pi);
      CHECK(apply_A(pi, loop.steps.back()).contains(Segment::unit(i0)));

      const auto d = double_graph_data(pi);
      CHECK(d.i1 < d.i2);
      CHECK(d.i2 < d.i3);
      const Segment both(d.i1, d.i3);
      CHECK(apply_A(pi, apply_A(pi, d.left())).contains(both));
      CHECK(apply_A(pi, apply_A(pi, d.right())).contains(both));
      // The proof's inequality chain, evaluated on the permutation the indices came from.
      const auto& src = d.reflected ? pi.reflected() : pi;
      const int n1 = n + 1;
      const int j1 = d.reflected ? n1 - d.i3 : d.i1;
      const int j2 = d.reflected ? n1 - d.i2 : d.i2;
      const int j3 = d.reflected ? n1 - d.i1 : d.i3;
      const int j4 = d.reflected ? n1 - d.i4 : d.i4;
      const int s0 = pivot(src);
      CHECK(src(j4) <= j1);
      CHECK(j1 < j2);
      CHECK(j2 < j3);
      CHECK(j3 <= src(s0));
      CHECK(src(s0) <= src(j2));
    }
  }
}
