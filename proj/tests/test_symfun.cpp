#include <doctest.h>

#include <algorithm>
#include <set>

#include "newt/bigint.hpp"
#include "newt/errors.hpp"
#include "newt/polytope.hpp"
#include "newt/symfun.hpp"
#include "oracles.hpp"

using namespace newt;

namespace {

Partition P(const std::vector<int>& v, int m) { return Partition::make(v, m); }

}  // namespace

TEST_CASE("ssyt enumeration matches the worked shapes") {
  CHECK(enumerate_ssyt(P({3}, 3), 3).size() == 10);
  CHECK(enumerate_ssyt(P({2, 1}, 3), 3).size() == 8);
  CHECK(enumerate_ssyt(P({1, 1}, 2), 1).empty());

  const auto all = enumerate_ssyt(P({2, 1}, 3), 3);
  std::set<std::vector<int>> words;
  for (const Tableau& t : all) {
    CHECK(t.well_formed());
    words.insert(t.reading_word());
  }
  CHECK(words.size() == all.size());  // duplicate-free
  // Deterministic order: lexicographic by reading word.
  std::vector<std::vector<int>> sorted(words.begin(), words.end());
  for (size_t i = 0; i < all.size(); ++i) {
    CHECK(all[i].reading_word() == sorted[i]);
  }
}

TEST_CASE("single-row SSYT count is a weak-composition count") {
  for (int m = 1; m <= 4; ++m) {
    for (int k = 0; k <= 5; ++k) {
      const auto tabs = enumerate_ssyt(P({k}, m), m);
      CHECK(Int(tabs.size()) == binomial(k + m - 1, m - 1));
    }
  }
}

TEST_CASE("schur expansion of (2,1,0)") {
  const MonomialMap s = schur_expansion(P({2, 1}, 3));
  CHECK(s.size() == 7);
  CHECK(s.coeff({1, 1, 1}) == 2);
  CHECK(s.coeff({2, 1, 0}) == 1);
  CHECK(s.coeff({3, 0, 0}) == 0);
  CHECK(s.coefficient_sum() == 8);
  CHECK(s.is_symmetric());
}

TEST_CASE("schur expansion of (3,0,0)") {
  const MonomialMap s = schur_expansion(P({3}, 3));
  CHECK(s.size() == 10);
  CHECK(s.coeff({3, 0, 0}) == 1);
  CHECK(s.coeff({1, 1, 1}) == 1);
}

TEST_CASE("skew strict filling counts") {
  CHECK(skew_strict_fillings_count(1, P({2, 1}, 3), P({2, 1, 1}, 3)) == 2);
  CHECK(skew_strict_fillings_count(2, P({2, 1}, 3), P({2, 2, 2}, 3)) == 11);
  CHECK(skew_strict_fillings_count(1, P({2, 1}, 3), P({2, 1}, 3)) == 1);
  CHECK(skew_strict_fillings_count(3, P({4, 2}, 2), P({4, 2}, 2)) == 1);
  CHECK_THROWS_AS(skew_strict_fillings_count(1, P({2, 1}, 3), P({1, 1}, 3)),
                  validation_error);
}

TEST_CASE("skew counts are positive exactly on the containment interval") {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 0; n <= 4; ++n) {
      for (const Partition& lam : oracles::partitions_of(n, m)) {
        for (int h : {1, 2}) {
          const auto ds = dominating_sequence(h, lam);
          for (int bigger = 0; bigger <= ds.steps() + 2; ++bigger) {
            for (const Partition& mu : oracles::partitions_of(n + bigger, m)) {
              if (!lam.contained_in(mu)) continue;
              const Int b = skew_strict_fillings_count(h, lam, mu);
              CHECK((b > 0) == in_A(h, lam, mu));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("grothendieck expansion coefficients for (2,1,0)") {
  // Schur-coefficient vector over mu between lambda and lambda^(N).
  const Partition lam = P({2, 1}, 3);
  const std::vector<std::pair<Partition, Int>> expected_h1 = {
      {P({2, 1}, 3), 1},
      {P({2, 2}, 3), -1},
      {P({2, 1, 1}, 3), -2},
      {P({2, 2, 1}, 3), 2},
      {P({2, 2, 2}, 3), -1},
  };
  for (const auto& [mu, c] : expected_h1) {
    const long long boxes = mu.weight() - lam.weight();
    const Int b = skew_strict_fillings_count(1, lam, mu);
    CHECK((boxes % 2 == 0 ? b : -b) == c);
  }
  const std::vector<std::pair<Partition, Int>> expected_h2 = {
      {P({2, 1}, 3), 1},
      {P({2, 2}, 3), -2},
      {P({2, 1, 1}, 3), -4},
      {P({2, 2, 1}, 3), 8},
      {P({2, 2, 2}, 3), -11},
  };
  for (const auto& [mu, c] : expected_h2) {
    const long long boxes = mu.weight() - lam.weight();
    const Int b = skew_strict_fillings_count(2, lam, mu);
    CHECK((boxes % 2 == 0 ? b : -b) == c);
  }

  // The full monomial expansion agrees with assembling Schur terms by hand.
  MonomialMap byhand(3);
  for (const auto& [mu, c] : expected_h1) {
    byhand.add_scaled(schur_expansion(mu), c);
  }
  CHECK(grothendieck_expansion(1, lam) == byhand);
}

TEST_CASE("grothendieck expansion of the empty shape is 1") {
  const MonomialMap g = grothendieck_expansion(3, P({}, 4));
  CHECK(g.size() == 1);
  CHECK(g.coeff({0, 0, 0, 0}) == 1);
}

TEST_CASE("snp_check agrees and catches deletions") {
  const Partition lam = P({2, 1}, 3);
  const MonomialMap s = schur_expansion(lam);
  const auto pts = permutohedron::lattice_points(lam);
  auto member = [&](const std::vector<int>& p) {
    return permutohedron::contains(lam, p);
  };
  CHECK(snp_check(s, member, pts));

  MonomialMap broken(3);
  for (const auto& [e, c] : s.terms()) {
    if (e != std::vector<int>{1, 1, 1}) broken.add(e, c);
  }
  CHECK_FALSE(snp_check(broken, member, pts));
}

TEST_CASE("schur SNP on the small sweep") {
  for (int m = 2; m <= 4; ++m) {
    for (int n = 0; n <= 5; ++n) {
      for (const Partition& lam : oracles::partitions_of(n, m)) {
        const MonomialMap s = schur_expansion(lam);
        const auto pts = permutohedron::lattice_points(lam);
        auto member = [&](const std::vector<int>& p) {
          return permutohedron::contains(lam, p);
        };
        CHECK(snp_check(s, member, pts));
        CHECK(s.is_symmetric());
      }
    }
  }
}

TEST_CASE("grothendieck SNP at desk scale") {
  for (int m = 2; m <= 3; ++m) {
    for (int n = 0; n <= 3; ++n) {
      for (const Partition& lam : oracles::partitions_of(n, m)) {
        for (int h : {1, 2}) {
          const MonomialMap g = grothendieck_expansion(h, lam);
          const auto pts = grothendieck_polytope::lattice_points(h, lam);
          auto member = [&](const std::vector<int>& p) {
            return grothendieck_polytope::contains(h, lam, p);
          };
          CHECK(snp_check(g, member, pts));
        }
      }
    }
  }
}
