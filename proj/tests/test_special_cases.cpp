#include <catch2/catch_amalgamated.hpp>

#include "reciplab/dedekind.hpp"
#include "reciplab/special.hpp"

using namespace reciplab;

namespace {
constexpr Precision P = 256;

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

Real rabs(const Real& x) { return x.sign() < 0 ? -x : x; }
}  // namespace

TEST_CASE("multiplicity-free detection") {
  CHECK(check_multiplicity_free(make({2, 3}, {1, 1}, {Rational(0), Rational(1, 3)}, 2, 0)));
  CHECK_FALSE(check_multiplicity_free(make({2, 3}, {1, 1}, {0, 0}, 2, 0)));
  CHECK(check_multiplicity_free(make({1, 1}, {1, 1}, {Rational(0), Rational(1, 2)}, 2, 0)));
}

TEST_CASE("multiplicity-free reciprocity") {
  const auto r1 =
      multiplicity_free_reciprocity(make({2, 3}, {1, 1}, {Rational(0), Rational(1, 3)}, 2, 0), P);
  CHECK(r1.passed);  // r = 2, right side 0

  const auto r2 = multiplicity_free_reciprocity(
      make({2, 3, 5}, {1, 1, 1}, {Rational(0), Rational(1, 3), Rational(1, 5)}, 0, 3), P);
  CHECK(r2.passed);  // cosecant analogue, right side 0 by the block delta

  const auto r3 = multiplicity_free_reciprocity(
      make({2, 3, 5}, {1, 1, 1}, {Rational(0), Rational(1, 3), Rational(1, 5)}, 3, 0), P);
  CHECK(r3.passed);  // right side -30 pi^2

  const auto r4 = multiplicity_free_reciprocity(
      make({3, 4}, {2, 3}, {Rational(1, 5), Rational(1, 3)}, 1, 1), P);
  CHECK(r4.passed);  // higher orders, mixed kinds, Case I via even a_2

  CHECK_THROWS_AS(multiplicity_free_reciprocity(make({2, 3}, {1, 1}, {0, 0}, 2, 0), P),
                  NotMultiplicityFreeError);
  // the law lives on Case I; a cosecant block with odd total is out of domain
  CHECK_THROWS_AS(multiplicity_free_reciprocity(
                      make({2, 3}, {2, 3}, {Rational(1, 4), Rational(1, 3)}, 1, 1), P),
                  UsageError);
}

TEST_CASE("multiplicity-free nodes match the assembled coefficients term for term") {
  const Params p = make({2, 3, 5}, {1, 2, 1},
                        {Rational(0), Rational(1, 3), Rational(1, 5)}, 2, 1);
  REQUIRE(check_multiplicity_free(p));
  const PsiExpansion exp = build_psi_expansion(p, P);
  for (std::size_t pi = 0; pi < exp.poles.size(); ++pi) {
    const PoleDatum& d = exp.poles[pi];
    REQUIRE(d.integral_set.size() == 1);
    const std::size_t l = d.integral_set[0];
    // explicit node value at depth 1: signed product of the regular factors
    std::vector<std::size_t> others;
    for (std::size_t u = 0; u < p.r(); ++u)
      if (u != l) others.push_back(u);
    Complex node(P);
    for (const auto& nu :
         weak_compositions(static_cast<long>(p.m[l]) - 1, others.size())) {
      Complex prod(Real(1L, P), Real(P));
      for (std::size_t i = 0; i < others.size(); ++i)
        prod *= coeff_A(p.kind_of(others[i]), nu[i], d.rho, p.a[others[i]],
                        p.m[others[i]], p.w[others[i]], P)
                    .value;
      node += prod;
    }
    if (p.is_csc(l) && !integer_is_even(d.int_values[0])) node = -node;
    CHECK((exp.coeff[pi][1] - node).abs() <=
          Real::exp2i(-200, P) * max(Real(1L, P), node.abs()));
  }
}

TEST_CASE("origin coefficients for zero shifts") {
  const Params p111 = make({1, 1, 1}, {1, 1, 1}, {0, 0, 0}, 3, 0);
  const ACoeff m1 = M_coefficient(p111, 1, P);
  REQUIRE(m1.exact_part.has_value());
  CHECK(m1.exact_part->coeff == Rational(-1));
  CHECK(m1.exact_part->pi_power == 2);

  const ACoeff m2 = M_coefficient(p111, 2, P);
  CHECK(m2.exact_part->coeff.is_zero());

  const ACoeff m3 = M_coefficient(p111, 3, P);
  CHECK(m3.exact_part->coeff == Rational(1));
  CHECK(m3.exact_part->pi_power == 0);

  const Params p235 = make({2, 3, 5}, {1, 1, 1}, {0, 0, 0}, 3, 0);
  const ACoeff m235 = M_coefficient(p235, 1, P);
  CHECK(m235.exact_part->coeff == Rational(-38, 3));
  CHECK(m235.exact_part->pi_power == 2);

  // n = |m| keeps only the full subset, with empty product 1
  const Params pm = make({2, 3}, {2, 3}, {0, 0}, 1, 1);
  const ACoeff mtop = M_coefficient(pm, 5, P);
  CHECK(mtop.exact_part->coeff == Rational(1));

  CHECK_THROWS_AS(M_coefficient(make({2, 3}, {1, 1}, {Rational(1, 2), Rational(0)}, 2, 0), 1, P),
                  UsageError);
  CHECK_THROWS_AS(M_coefficient(make({2, 4}, {1, 1}, {0, 0}, 2, 0), 1, P), NotCoprimeError);
}

TEST_CASE("origin coefficients equal the assembled sum-side coefficients") {
  const Params p = make({2, 3, 5}, {2, 1, 1}, {0, 0, 0}, 2, 1);
  const PsiExpansion exp = build_psi_expansion(p, P);
  REQUIRE(exp.poles[0].rho == Rational(0));
  for (unsigned long n = 1; n <= p.total_m(); ++n) {
    const Complex mn = M_coefficient(p, n, P).value;
    CHECK((exp.coeff[0][n] - mn).abs() <=
          Real::exp2i(-200, P) * max(Real(1L, P), mn.abs()));
  }
}

TEST_CASE("zagier reciprocity") {
  const auto r1 = zagier_reciprocity({1, 1, 1}, 3, 0, P);
  CHECK(r1.passed);  // empty sums on both sides

  const auto r2 = zagier_reciprocity({2, 3, 5}, 3, 0, P);
  CHECK(r2.passed);
  CHECK(r2.max_rel_err <= Real::exp2i(-100, P));

  const auto r3 = zagier_reciprocity({2, 3, 5}, 0, 3, P);
  CHECK(r3.passed);
  CHECK(r3.law == "zagier-reciprocity-csc");

  CHECK_THROWS_AS(zagier_reciprocity({2, 4, 5}, 3, 0, P), NotCoprimeError);
  // cosecant split with odd total falls in Case II, outside the law
  CHECK_THROWS_AS(zagier_reciprocity({1, 1, 1}, 0, 3, P), UsageError);
}

TEST_CASE("apostol sums") {
  // single node with a vanishing cotangent
  CHECK(apostol_sum(1, 3, 2, P).abs() <= Real::exp2i(-200, P));
  // empty sum
  CHECK(apostol_sum(1, 1, 1, P).is_zero());
  // s_1(2;3) = -1/18
  const Complex s = apostol_sum(1, 2, 3, P);
  const Real expect = Real(Rational(-1, 18), P);
  CHECK((s - Complex(expect, Real(P))).abs() <= Real::exp2i(-240, P));
  CHECK_THROWS_AS(apostol_sum(1, 2, 4, P), NotCoprimeError);
}

TEST_CASE("apostol reciprocity") {
  const auto r0 = apostol_reciprocity(0, 2, 3, P);
  CHECK(r0.passed);
  CHECK(apostol_reciprocity_rhs(0, 2, 3) == Rational(-1, 18));
  const auto r11 = apostol_reciprocity(0, 1, 1, P);
  CHECK(r11.passed);
  CHECK(apostol_reciprocity_rhs(0, 1, 1).is_zero());

  for (unsigned long k : {1UL, 2UL}) {
    for (auto [pp, qq] : {std::pair<unsigned long, unsigned long>{2, 3}, {3, 4}, {5, 7}}) {
      const auto rep = apostol_reciprocity(k, pp, qq, P);
      INFO("k=" << k << " p=" << pp << " q=" << qq);
      CHECK(rep.passed);
      CHECK(rep.max_rel_err <= Real::exp2i(-100, P));
    }
  }
}

TEST_CASE("classical two-factor formulas") {
  const Complex z(0.37, 0.21, P);
  // identity -cot' - 1 = cot^2 via the trivial instance
  const auto r0 = fukuhara_instance(0, 1, 1, Complex(0.7, 0.3, P), P);
  CHECK(r0.passed);
  const auto r2 = fukuhara_instance(2, 2, 3, z, P);
  CHECK(r2.passed);
  CHECK(r2.max_rel_err <= Real::exp2i(-128, P));
  const auto r4 = fukuhara_instance(4, 3, 2, z, P);
  CHECK(r4.passed);
  const auto r3 = fukuhara_instance(3, 3, 5, z, P);
  CHECK(r3.passed);
  const auto r1 = fukuhara_instance(1, 3, 2, z, P);
  CHECK(r1.passed);

  CHECK_THROWS_AS(fukuhara_instance(1, 2, 3, z, P), ParityMismatchError);
  CHECK_THROWS_AS(fukuhara_instance(3, 2, 3, z, P), ParityMismatchError);
  CHECK_THROWS_AS(fukuhara_instance(0, 2, 4, z, P), NotCoprimeError);
}

TEST_CASE("two-factor identity") {
  const Complex z(0.37, 0.21, P);
  // Dieter instance: reduces to -1 + csc^2 = cot^2
  const auto r0 = r2_identity(1, 1, Rational(0), Rational(0), Kind::I, Kind::I, z, P);
  CHECK(r0.passed);

  // shared-pole branch with rational shifts
  const auto [A1, A2] = bezout_canonical(2, 3);
  CHECK(A1 == BigInt(1));
  CHECK(A2 == BigInt(-1));
  CHECK(sgn2(Kind::I, Kind::I, 2, 3, Rational(1, 2), Rational(3, 4), A1, A2) == 1);
  const auto r1 =
      r2_identity(2, 3, Rational(1, 2), Rational(3, 4), Kind::I, Kind::I, z, P);
  CHECK(r1.passed);

  // cosecant pair with odd a1 + a2
  const auto r2 = r2_identity(2, 3, Rational(0), Rational(0), Kind::II, Kind::II, z, P);
  CHECK(r2.passed);
  CHECK(r2.case_tag == Kind::II);

  // mixed pair, J by the parity of a2
  const auto r3 =
      r2_identity(3, 4, Rational(1, 3), Rational(1, 5), Kind::I, Kind::II, z, P);
  CHECK(r3.passed);
  CHECK(r3.case_tag == Kind::I);
  const auto r4 =
      r2_identity(2, 3, Rational(1, 4), Rational(0), Kind::I, Kind::II, z, P);
  CHECK(r4.passed);
  CHECK(r4.case_tag == Kind::II);

  CHECK_THROWS_AS(r2_identity(2, 4, Rational(0), Rational(0), Kind::I, Kind::I, z, P),
                  NotCoprimeError);
  CHECK_THROWS_AS(r2_identity(2, 3, Rational(0), Rational(0), Kind::II, Kind::I, z, P),
                  InadmissibleTripleError);
}

TEST_CASE("shared-pole term is invariant under the Bezout normalization") {
  const unsigned long a1 = 2, a2 = 3;
  const Rational w1(1, 2), w2(3, 4);
  const auto [A1, A2] = bezout_canonical(a1, a2);
  const BigInt B1 = A1 + BigInt(a1);
  const BigInt B2 = A2 - BigInt(a2);
  CHECK(B1 * BigInt(a2) + B2 * BigInt(a1) == BigInt(1));
  const Complex z(0.41, 0.33, P);
  for (auto [k1, k2] : {std::pair<Kind, Kind>{Kind::I, Kind::I}, {Kind::II, Kind::II}}) {
    Params p;
    p.a = {a1, a2};
    p.m = {1, 1};
    p.w = {w1, w2};
    p.j_I = k1 == Kind::I ? 2 : 0;
    p.j_II = 2 - p.j_I;
    const Kind J = classify_case(p);
    const auto term = [&](const BigInt& X1, const BigInt& X2) {
      const int s = sgn2(k1, k2, a1, a2, w1, w2, X1, X2);
      const Rational center = Rational(X1) * w2 + Rational(X2) * w1;
      const Complex f = phi(J, 2, z - Complex(center, P));
      return s < 0 ? -f : (s == 0 ? Complex(P) : f);
    };
    const Complex t1 = term(A1, A2);
    const Complex t2 = term(B1, B2);
    CHECK((t1 - t2).abs() <= Real::exp2i(-200, P) * max(Real(1L, P), t1.abs()));
  }
}

TEST_CASE("raw node sums") {
  // the two node sums of the w = 0 two-factor split cancel:
  // a2 sum_1 + a1 sum_2 = 0 for coprime moduli
  Params p = make({3, 5}, {1, 1}, {0, 0}, 2, 0);
  const Complex s1 = node_sum(p, 0, P);
  const Complex s2 = node_sum(p, 1, P);
  CHECK((s1 + s2).abs() <= Real::exp2i(-200, P) * max(Real(1L, P), s1.abs()));
}
