#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "reciplab/combinatorics.hpp"
#include "reciplab/params.hpp"
#include "reciplab/poles.hpp"

using namespace reciplab;

namespace {
Params make(std::vector<unsigned long> a, std::vector<unsigned long> m,
            std::vector<Rational> w, unsigned jI, unsigned jII) {
  Params p;
  p.a = std::move(a);
  p.m = std::move(m);
  p.w = std::move(w);
  p.j_I = jI;
  p.j_II = jII;
  p.validate();
  return p;
}
}  // namespace

TEST_CASE("case classification") {
  CHECK(classify_case(make({2, 3}, {1, 1}, {0, 0}, 2, 0)) == Kind::I);
  CHECK(classify_case(make({2, 3}, {1, 1}, {0, 0}, 0, 2)) == Kind::II);  // 2+3 odd
  CHECK(classify_case(make({2, 3, 5}, {1, 1, 1}, {0, 0, 0}, 1, 2)) == Kind::I);  // 3+5 even

  // stable under permutations within each block
  CHECK(classify_case(make({3, 2, 5}, {1, 1, 1}, {0, 0, 0}, 1, 2)) ==
        classify_case(make({3, 5, 2}, {1, 1, 1}, {0, 0, 0}, 1, 2)));
  CHECK(classify_case(make({2, 3, 5, 4}, {1, 1, 1, 1}, {0, 0, 0, 0}, 2, 2)) ==
        classify_case(make({3, 2, 4, 5}, {1, 1, 1, 1}, {0, 0, 0, 0}, 2, 2)));
}

TEST_CASE("pole enumeration with trivial shifts") {
  const Params p = make({2, 3}, {1, 1}, {0, 0}, 2, 0);
  const auto poles = enumerate_poles(p);
  REQUIRE(poles.size() == 4);
  CHECK(poles[0].rho == Rational(0));
  CHECK(poles[1].rho == Rational(1, 3));
  CHECK(poles[2].rho == Rational(1, 2));
  CHECK(poles[3].rho == Rational(2, 3));
  CHECK(poles[0].integral_set == std::vector<std::size_t>{0, 1});
  CHECK(poles[1].integral_set == std::vector<std::size_t>{1});
  CHECK(poles[2].integral_set == std::vector<std::size_t>{0});
  CHECK(poles[3].integral_set == std::vector<std::size_t>{1});
}

TEST_CASE("pole enumeration with rational shifts") {
  const Params p = make({2, 3}, {1, 1}, {Rational(1, 2), Rational(3, 4)}, 2, 0);
  const auto poles = enumerate_poles(p);
  REQUIRE(poles.size() == 4);
  CHECK(poles[0].rho == Rational(1, 4));
  CHECK(poles[1].rho == Rational(7, 12));
  CHECK(poles[2].rho == Rational(3, 4));
  CHECK(poles[3].rho == Rational(11, 12));
  CHECK(poles[0].integral_set == std::vector<std::size_t>{0, 1});

  const Params p2 = make({1, 1}, {1, 1}, {Rational(0), Rational(1, 2)}, 2, 0);
  const auto poles2 = enumerate_poles(p2);
  REQUIRE(poles2.size() == 2);
  CHECK(poles2[0].integral_set.size() == 1);
  CHECK(poles2[1].integral_set.size() == 1);
}

TEST_CASE("node multiplicities") {
  const Params p = make({2, 3}, {1, 1}, {0, 0}, 2, 0);
  CHECK(multiplicity_d(p, 0, 0) == 2);
  CHECK(multiplicity_d(p, 0, 1) == 1);
  const Params p3 = make({1, 1, 1}, {1, 1, 1}, {0, 0, 0}, 3, 0);
  CHECK(multiplicity_d(p3, 1, 0) == 3);
  CHECK_THROWS_AS(multiplicity_d(p, 0, 2), UsageError);

  // sum over nodes of 1/d equals the number of distinct poles, exactly
  for (const Params& q :
       {p, p3, make({2, 3}, {1, 1}, {Rational(1, 2), Rational(3, 4)}, 2, 0),
        make({4, 6}, {2, 1}, {Rational(1, 3), Rational(0)}, 1, 1)}) {
    Rational total(0);
    for (std::size_t v = 0; v < q.r(); ++v)
      for (unsigned long mu = 0; mu < q.a[v]; ++mu)
        total += Rational(1, static_cast<long>(multiplicity_d(q, v, mu)));
    CHECK(total == Rational(BigInt(enumerate_poles(q).size())));
  }
}

TEST_CASE("integral sets agree with the shift test") {
  const Params p = make({4, 6}, {2, 1}, {Rational(1, 3), Rational(0)}, 1, 1);
  for (const PoleDatum& d : enumerate_poles(p)) {
    for (std::size_t l = 0; l < p.r(); ++l) {
      const bool member = std::binary_search(d.integral_set.begin(), d.integral_set.end(), l);
      CHECK(shift_test(p.a[l], p.w[l], d.rho).is_integral == member);
    }
  }
}

TEST_CASE("residue subsets") {
  PoleDatum d;
  d.rho = Rational(0);
  CHECK(residue_subsets(d) == std::vector<std::vector<std::size_t>>{{}});
  d.integral_set = {0};
  d.int_values = {BigInt(0)};
  CHECK(residue_subsets(d).size() == 2);
  d.integral_set = {0, 1};
  d.int_values = {BigInt(0), BigInt(0)};
  const auto subsets = residue_subsets(d);
  REQUIRE(subsets.size() == 4);
  CHECK(subsets[0].empty());
  CHECK(subsets[3] == std::vector<std::size_t>{0, 1});
}

TEST_CASE("composition tuples") {
  const Params p = make({1, 1, 1}, {2, 1, 1}, {0, Rational(1, 3), Rational(2, 3)}, 3, 0);
  // sign '-', n = 1, Lambda = {0}: tuples over {1,2} summing to 1, lex order
  const auto km = compositions_K(1, '-', {0}, p);
  REQUIRE(km.size() == 2);
  CHECK(km[0] == std::vector<unsigned long>{0, 1});
  CHECK(km[1] == std::vector<unsigned long>{1, 0});
  // empty Lambda makes the required sum negative
  CHECK(compositions_K(1, '-', {}, p).empty());
  // sign '+', mu = 0, empty Lambda: the all-zero tuple
  const Params p2 = make({1, 1}, {1, 1}, {0, Rational(1, 2)}, 2, 0);
  const auto kp = compositions_K(0, '+', {}, p2);
  REQUIRE(kp.size() == 1);
  CHECK(kp[0] == std::vector<unsigned long>{0, 0});
  // Lambda = [r] admits only the empty tuple, exactly at n = |m|
  CHECK(compositions_K(4, '-', {0, 1, 2}, p).size() == 1);
  CHECK(compositions_K(3, '-', {0, 1, 2}, p).empty());
}

TEST_CASE("composition counts match stars and bars") {
  for (unsigned long r = 2; r <= 4; ++r) {
    Params p;
    for (unsigned long l = 0; l < r; ++l) {
      p.a.push_back(l + 1);
      p.m.push_back(1 + (l % 3));
      p.w.push_back(Rational(0));
    }
    p.j_I = static_cast<unsigned>(r);
    p.j_II = 0;
    for (std::size_t mask = 1; mask < (1UL << r); ++mask) {
      std::vector<std::size_t> lambda;
      long sum_m = 0;
      for (std::size_t l = 0; l < r; ++l)
        if (mask & (1UL << l)) {
          lambda.push_back(l);
          sum_m += static_cast<long>(p.m[l]);
        }
      const std::size_t cs = r - lambda.size();
      if (cs == 0) continue;
      for (long n = 1; n <= sum_m; ++n) {
        const auto tuples = compositions_K(n, '-', lambda, p);
        CHECK(BigInt(tuples.size()) ==
              binom(static_cast<unsigned long>(sum_m - n) + cs - 1, cs - 1));
      }
    }
  }
}
