#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <memory>
#include <set>
#include <vector>

#include "gaudin/bethe_generators.hpp"
#include "gaudin/group_algebra.hpp"
#include "gaudin/irrep.hpp"
#include "gaudin/matrix.hpp"
#include "gaudin/partition.hpp"
#include "gaudin/perm.hpp"

using namespace gaudin;

TEST_CASE("permutation composition applies the right factor first") {
  Perm a = Perm::transposition(3, 0, 1);
  Perm b = Perm::transposition(3, 1, 2);
  Perm c = a * b;  // (a*b)(i) = a(b(i))
  CHECK(c == Perm::from_cycle(3, {0, 1, 2}));
  CHECK(c.sign() == 1);
  CHECK(a.sign() == -1);
  CHECK((c * c.inverse()).is_identity());
  CHECK(c.inverse() == Perm::from_cycle(3, {2, 1, 0}));
}

TEST_CASE("permutation support, cycles, and one-line form") {
  Perm p = Perm::from_cycle(5, {1, 3, 4});
  CHECK(p.support() == ((1u << 1) | (1u << 3) | (1u << 4)));
  auto cyc = p.cycles();
  REQUIRE(cyc.size() == 1);
  CHECK(cyc[0].size() == 3);

  auto ct = p.cycle_type_on(full_mask(5));
  std::sort(ct.begin(), ct.end(), std::greater<int>());
  CHECK(ct == std::vector<int>{3, 1, 1});
  auto ct2 = p.cycle_type_on((1u << 1) | (1u << 3) | (1u << 4));
  std::sort(ct2.begin(), ct2.end(), std::greater<int>());
  CHECK(ct2 == std::vector<int>{3});

  auto ol = p.one_line();
  CHECK(ol.size() == 5);
  CHECK(Perm::from_one_line(ol) == p);
  CHECK(ol[0] == 1);  // one-based, fixed point
  CHECK(ol[1] == 4);  // 1 -> 3 zero-based, so 2 -> 4 one-based
}

TEST_CASE("subset enumeration is ascending and complete") {
  auto subs = k_subsets_of(full_mask(5), 2);
  CHECK(subs.size() == 10);
  CHECK(std::is_sorted(subs.begin(), subs.end()));
  for (uint32_t m : subs) CHECK(__builtin_popcount(m) == 2);

  auto all = all_submasks(0b101u);
  CHECK(all == std::vector<uint32_t>{0u, 1u, 4u, 5u});

  CHECK(mask_elements(0b1011u) == std::vector<int>{0, 1, 3});
  CHECK(full_mask(3) == 7u);
}

TEST_CASE("permutations confined to a subset") {
  auto g = perms_moving_within(4, 0b0101u);
  CHECK(g.size() == 2);  // S_{0,2}
  for (const Perm& p : g) CHECK((p.support() & ~0b0101u) == 0);

  std::vector<Perm> everyone = all_perms(4);
  CHECK(everyone.size() == 24);
  std::set<Perm> uniq(everyone.begin(), everyone.end());
  CHECK(uniq.size() == 24);
}

TEST_CASE("supported permutation pairs are counted by sum of binomial times factorial") {
  // |pairs| for n = sum_k C(n,k) k!
  CHECK(all_supported_perms(1).size() == 2);
  CHECK(all_supported_perms(2).size() == 5);
  CHECK(all_supported_perms(3).size() == 16);
  CHECK(all_supported_perms(4).size() == 65);
  for (const auto& sp : all_supported_perms(4)) {
    CHECK((sp.sigma.support() & ~sp.z) == 0);
  }
  auto sp3 = all_supported_perms(3);
  std::set<SupportedPerm> uniq(sp3.begin(), sp3.end());
  CHECK(uniq.size() == sp3.size());
}

TEST_CASE("partition shape bookkeeping") {
  Partition lam({3, 1});
  CHECK(lam.size() == 4);
  CHECK(lam.rows() == 2);
  CHECK(lam.part(0) == 3);
  CHECK(lam.part(5) == 0);
  CHECK(lam.conjugate() == Partition({2, 1, 1}));
  CHECK(lam.conjugate().conjugate() == lam);
  CHECK(lam.to_string() == "(3,1)");
  CHECK_THROWS_AS(Partition({1, 3}), std::invalid_argument);

  auto removed = Partition({2, 2, 1}).corners_removed();
  std::set<Partition> rm(removed.begin(), removed.end());
  CHECK(rm == std::set<Partition>{Partition({2, 1, 1}), Partition({2, 2})});
}

TEST_CASE("partition enumeration order") {
  auto p4 = partitions_of(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4[0] == Partition({4}));
  CHECK(p4[1] == Partition({3, 1}));
  CHECK(p4[2] == Partition({2, 2}));
  CHECK(p4[3] == Partition({2, 1, 1}));
  CHECK(p4[4] == Partition({1, 1, 1, 1}));
  CHECK(partitions_of(6).size() == 11);
  CHECK(partitions_of(8).size() == 22);
}

TEST_CASE("standard tableau counts match the hook length formula") {
  CHECK(Partition({2, 1}).tableau_count() == 2);
  CHECK(Partition({2, 2}).tableau_count() == 2);
  CHECK(Partition({3, 2}).tableau_count() == 5);
  CHECK(Partition({3, 3}).tableau_count() == 5);
  CHECK(Partition({4, 2}).tableau_count() == 9);
  CHECK(Partition({2, 2, 1}).tableau_count() == 5);
  for (int n = 1; n <= 5; ++n) {
    for (const Partition& lam : partitions_of(n)) {
      CHECK(lam.standard_tableaux().size() == lam.tableau_count());
    }
  }
}

TEST_CASE("squared dimensions sum to the group order") {
  unsigned long fact = 1;
  for (int n = 1; n <= 6; ++n) {
    fact *= static_cast<unsigned long>(n);
    unsigned long total = 0;
    for (const Partition& lam : partitions_of(n)) {
      unsigned long d = lam.tableau_count();
      total += d * d;
    }
    CHECK(total == fact);
  }
}

TEST_CASE("central character vectors take known exact values") {
  using V = std::vector<Rat>;
  CHECK(central_character(Partition({1})) == V{Rat(1), Rat(1)});
  CHECK(central_character(Partition({2})) == V{Rat(0), Rat(1), rat_of(1, 2)});
  CHECK(central_character(Partition({1, 1})) == V{Rat(1), Rat(1), rat_of(1, 2)});
  CHECK(central_character(Partition({3})) == V{Rat(0), Rat(0), rat_of(1, 2), rat_of(1, 6)});
  CHECK(central_character(Partition({1, 1, 1})) ==
        V{Rat(1), Rat(1), rat_of(1, 2), rat_of(1, 6)});
  CHECK(central_character(Partition({2, 1})) == V{Rat(0), Rat(1), Rat(1), rat_of(1, 3)});
}

TEST_CASE("central character tail equals dimension over group order") {
  unsigned long fact = 1;
  for (int n = 1; n <= 7; ++n) {
    fact *= static_cast<unsigned long>(n);
    for (const Partition& lam : partitions_of(n)) {
      auto c = central_character(lam);
      REQUIRE(c.size() == static_cast<size_t>(n) + 1);
      CHECK(c.back() == Rat(lam.tableau_count()) / Rat(fact));
      CHECK(c.back() != Rat(0));
    }
  }
}

TEST_CASE("central character vectors separate shapes") {
  for (int n = 1; n <= 7; ++n) {
    std::set<std::vector<Rat>> seen;
    for (const Partition& lam : partitions_of(n)) seen.insert(central_character(lam));
    CHECK(seen.size() == partitions_of(n).size());
  }
}

TEST_CASE("normalized central scalars") {
  // (shape, index) -> group-order/dimension times the character entry.
  CHECK(central_scalar(Partition({2, 1}), 0) == Rat(0));
  CHECK(central_scalar(Partition({2, 1}), 1) == Rat(3));
  CHECK(central_scalar(Partition({2, 1}), 2) == Rat(3));
  CHECK(central_scalar(Partition({2, 1}), 3) == Rat(1));
  CHECK(central_scalar(Partition({3}), 0) == Rat(0));
  CHECK(central_scalar(Partition({1, 1, 1}), 0) == Rat(6));
}

TEST_CASE("seminormal matrices for the two-row three-box shape") {
  IrrepModel m(Partition({2, 1}));
  CHECK(m.letters() == 3);
  CHECK(m.dim() == 2);

  Matrix<Rat> s1(2, 2), s2(2, 2);
  s1.at(0, 0) = Rat(1); s1.at(1, 1) = Rat(-1);
  s2.at(0, 0) = rat_of(-1, 2); s2.at(0, 1) = Rat(1);
  s2.at(1, 0) = rat_of(3, 4);  s2.at(1, 1) = rat_of(1, 2);
  CHECK(m.adjacent(1) == s1);
  CHECK(m.adjacent(2) == s2);

  // Involutions and the braid relation.
  CHECK(s1 * s1 == Matrix<Rat>::identity(2));
  CHECK(s2 * s2 == Matrix<Rat>::identity(2));
  CHECK(s1 * s2 * s1 == s2 * s1 * s2);

  // act is a homomorphism for the composition convention in use.
  Perm a = Perm::transposition(3, 0, 1);
  Perm b = Perm::transposition(3, 1, 2);
  CHECK(m.act(a * b) == m.act(a) * m.act(b));
}

TEST_CASE("representation matrices satisfy defining relations for all shapes up to five letters") {
  for (int n = 2; n <= 5; ++n) {
    for (const Partition& lam : partitions_of(n)) {
      // Construction runs the defining-relation verification and throws on failure.
      std::unique_ptr<IrrepModel> m;
      CHECK_NOTHROW(m = std::make_unique<IrrepModel>(lam));
      REQUIRE(m != nullptr);
      CHECK(m->dim() == lam.tableau_count());
    }
  }
}

TEST_CASE("acting with algebra elements is linear") {
  IrrepModel m(Partition({2, 1}));
  Perm a = Perm::transposition(3, 0, 1);
  Perm b = Perm::transposition(3, 1, 2);
  GroupElemQ g = GroupElemQ::single(a, rat_of(2)) + GroupElemQ::single(b, rat_of(-1, 3));
  Matrix<Rat> expect = rat_of(2) * m.act(a) + rat_of(-1, 3) * m.act(b);
  CHECK(m.act_on(g) == expect);
}

TEST_CASE("full antisymmetrizer annihilates every shape except the single column") {
  for (int n = 2; n <= 4; ++n) {
    GroupElemQ anti = set_symmetrizer<Rat>(static_cast<size_t>(n), full_mask(static_cast<size_t>(n)), Sign::minus);
    for (const Partition& lam : partitions_of(n)) {
      IrrepModel m(lam);
      Matrix<Rat> img = m.act_on(anti);
      if (lam == Partition(std::vector<int>(static_cast<size_t>(n), 1))) {
        unsigned long fact = 1;
        for (int i = 2; i <= n; ++i) fact *= static_cast<unsigned long>(i);
        CHECK(img == Rat(fact) * Matrix<Rat>::identity(m.dim()));
      } else {
        CHECK(img.all_zero());
      }
    }
  }
}

TEST_CASE("antisymmetrized subset sums act as the predicted central scalars") {
  for (int n = 2; n <= 4; ++n) {
    size_t un = static_cast<size_t>(n);
    for (const Partition& lam : partitions_of(n)) {
      IrrepModel m(lam);
      for (int k = 0; k <= n; ++k) {
        GroupElemQ total(un);
        for (uint32_t x : k_subsets_of(full_mask(un), n - k)) {
          total = total + set_symmetrizer<Rat>(un, x, Sign::minus);
        }
        Matrix<Rat> img = m.act_on(total);
        CHECK(img == central_scalar(lam, k) * Matrix<Rat>::identity(m.dim()));
      }
    }
  }
}
