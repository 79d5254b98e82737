#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bsnq/classifier.hpp"
#include "bsnq/lattice.hpp"
#include "bsnq/nq.hpp"
#include "bsnq/presentations.hpp"
#include "test_util.hpp"

using namespace bsnq;
using namespace bsnq::testutil;

TEST_CASE("full and zero lattices") {
  auto pc = nilpotent_quotient(bs_presentation(bs_params(6, 9)), 3);
  ExponentLattice full = full_lattice(pc);
  ExponentLattice zero = zero_lattice(pc);
  CHECK(zero.is_zero());
  for (std::size_t i = 0; i < pc.size(); ++i) {
    CHECK(full.contains(pc.unit(i)));
    CHECK_FALSE(zero.contains(pc.unit(i)));
  }
  std::vector<ExpVec> all_units;
  for (std::size_t i = 0; i < pc.size(); ++i) all_units.push_back(pc.unit(i));
  CHECK(normal_closure_lattice(pc, std::span<const ExpVec>(all_units)) == full);
  CHECK(normal_closure_lattice(pc, std::span<const ExpVec>()).is_zero());
}

TEST_CASE("closure of a in BS(2,3) equals the derived subgroup lattice") {
  auto pc = nilpotent_quotient(bs_presentation(bs_params(2, 3)), 4);
  std::vector<FreeWord> gens = {FreeWord::generator(kGenA)};
  ExponentLattice closure_a = normal_closure_lattice(pc, std::span<const FreeWord>(gens));
  ExponentLattice full = full_lattice(pc);
  ExponentLattice derived = commutator_lattice(pc, full, full);
  CHECK(closure_a == derived);
}

TEST_CASE("commutator lattice basics") {
  auto pc1 = nilpotent_quotient(bs_presentation(bs_params(6, 9)), 1);
  ExponentLattice f1 = full_lattice(pc1);
  CHECK(commutator_lattice(pc1, f1, f1).is_zero());  // abelian quotient

  auto pc2 = nilpotent_quotient(bs_presentation(bs_params(2, 2)), 2);
  ExponentLattice z = zero_lattice(pc2);
  ExponentLattice f2 = full_lattice(pc2);
  CHECK(commutator_lattice(pc2, z, f2).is_zero());

  // BS(2,2) at class 2: [G,G] covers the weight-2 layer (gr_2 = Z/2)
  ExponentLattice derived = commutator_lattice(pc2, f2, f2);
  CHECK_FALSE(derived.is_zero());
  for (std::size_t j = 0; j < pc2.size(); ++j) {
    if (pc2.weight(j) == 2) CHECK(derived.contains(pc2.unit(j)));
    if (pc2.weight(j) == 1) CHECK_FALSE(derived.contains(pc2.unit(j)));
  }
}

TEST_CASE("lattice operations are monotone and idempotent") {
  auto pc = nilpotent_quotient(bs_presentation(bs_params(6, 10)), 3);
  std::vector<FreeWord> gens = instantiate(gamma_omega_generators(bs_params(6, 10)), 2);
  ExponentLattice lat = normal_closure_lattice(pc, std::span<const FreeWord>(gens));
  for (const FreeWord& w : gens) CHECK(lat.contains(pc.image(w)));
  // re-closing the basis changes nothing
  std::vector<ExpVec> rows(lat.rows().begin(), lat.rows().end());
  CHECK(normal_closure_lattice(pc, std::span<const ExpVec>(rows)) == lat);
  // closed under products and conjugation
  for (const ExpVec& r1 : lat.rows())
    for (const ExpVec& r2 : lat.rows()) CHECK(lat.contains(pc.multiply(ExpVec(r1), r2)));
  for (const ExpVec& r : lat.rows())
    for (std::size_t i = 0; i < pc.size(); ++i)
      CHECK(lat.contains(pc.conjugate(r, pc.unit(i))));
  // basis matrix is echelon with increasing pivot columns
  IntMatrix b = lat.basis_matrix();
  std::size_t last = 0;
  bool first = true;
  for (std::size_t r = 0; r < b.rows(); ++r) {
    std::size_t lead = b.cols();
    for (std::size_t c = 0; c < b.cols(); ++c)
      if (b.at(r, c) != 0) {
        lead = c;
        break;
      }
    REQUIRE(lead < b.cols());
    if (!first) CHECK(lead > last);
    last = lead;
    first = false;
  }
}

TEST_CASE("mismatched ambient presentations are rejected") {
  auto pc1 = nilpotent_quotient(bs_presentation(bs_params(2, 3)), 2);
  auto pc2 = nilpotent_quotient(bs_presentation(bs_params(2, 2)), 2);
  ExponentLattice a(pc1), b(pc2);
  CHECK_THROWS_AS(commutator_lattice(pc1, a, b), std::invalid_argument);
  CHECK_THROWS_AS((void)a.contains(b), std::invalid_argument);
}
