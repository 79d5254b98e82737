#include "bsnq/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace bsnq {

std::size_t ExponentLattice::lead(const ExpVec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return i;
  return v.size();
}

void ExponentLattice::add(ExpVec v0) {
  std::vector<ExpVec> work;
  work.push_back(std::move(v0));
  while (!work.empty()) {
    ExpVec v = std::move(work.back());
    work.pop_back();
    for (;;) {
      std::size_t l = lead(v);
      if (l == v.size()) break;  // reduced to the identity
      auto it = std::lower_bound(rows_.begin(), rows_.end(), l,
                                 [](const ExpVec& r, std::size_t key) { return lead(r) < key; });
      if (it == rows_.end() || lead(*it) != l) {
        // New pivot coordinate. Normalize the pivot so the cyclic group it
        // generates in the layer is visible: positive for a free coordinate,
        // gcd with the relative order for a torsion one (the wrap power then
        // carries the rest of <v> into higher coordinates).
        const Int& o = pc_->generator(l).order;
        if (o == 0) {
          if (v[l] < 0) v = pc_->inverse(v);
        } else {
          Int g = gcd(v[l], o);
          Int b = o / g;
          if (g != v[l]) {
            Int a = v[l] / g, x;
            if (mpz_invert(x.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t()) == 0)
              throw std::logic_error("ExponentLattice: pivot normalization failed");
            ExpVec scaled = pc_->power(v, x);
            work.push_back(std::move(v));  // re-sift the original
            v = std::move(scaled);
          }
          work.push_back(pc_->power(v, b));  // torsion wrap
        }
        rows_.insert(it, std::move(v));
        break;
      }
      const Int& beta = (*it)[l];
      auto [q, rho] = floor_divmod(v[l], beta);
      if (q != 0) v = pc_->multiply(pc_->power(pc_->inverse(*it), q), v);
      if (rho == 0) continue;  // lead advanced, keep sifting
      // Remainder outside the pivot's reach: re-sift both elements; pivots at
      // this coordinate strictly decrease, so this terminates.
      work.push_back(std::move(*it));
      rows_.erase(it);
      work.push_back(std::move(v));
      break;
    }
  }
}

bool ExponentLattice::contains(ExpVec v) const {
  for (;;) {
    std::size_t l = lead(v);
    if (l == v.size()) return true;
    auto it = std::lower_bound(rows_.begin(), rows_.end(), l,
                               [](const ExpVec& r, std::size_t key) { return lead(r) < key; });
    if (it == rows_.end() || lead(*it) != l) return false;
    auto [q, rho] = floor_divmod(v[l], (*it)[l]);
    if (rho != 0) return false;
    v = pc_->multiply(pc_->power(pc_->inverse(*it), q), v);
  }
}

bool ExponentLattice::contains(const ExponentLattice& other) const {
  if (pc_ != other.pc_)
    throw std::invalid_argument("ExponentLattice: mismatched ambient presentations");
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [&](const ExpVec& r) { return contains(r); });
}

bool ExponentLattice::operator==(const ExponentLattice& other) const {
  return contains(other) && other.contains(*this);
}

IntMatrix ExponentLattice::basis_matrix() const {
  IntMatrix m(rows_.size(), pc_->size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < pc_->size(); ++c) m.at(r, c) = rows_[r][c];
  return m;
}

static ExponentLattice saturate(const PcPresentation& pc, std::vector<ExpVec> gens) {
  ExponentLattice lat(pc);
  for (auto& g : gens) lat.add(std::move(g));
  for (;;) {
    bool changed = false;
    std::vector<ExpVec> snapshot(lat.rows().begin(), lat.rows().end());
    auto feed = [&](ExpVec v) {
      if (!lat.contains(v)) {
        lat.add(std::move(v));
        changed = true;
      }
    };
    for (const ExpVec& r : snapshot) {
      feed(pc.inverse(r));
      for (std::size_t i = 0; i < pc.size(); ++i) {
        ExpVec gi = pc.unit(i);
        feed(pc.conjugate(r, gi));
        feed(pc.conjugate(r, pc.inverse(gi)));
      }
    }
    for (const ExpVec& r1 : snapshot)
      for (const ExpVec& r2 : snapshot) feed(pc.multiply(ExpVec(r1), r2));
    if (!changed) break;
  }
  return lat;
}

ExponentLattice normal_closure_lattice(const PcPresentation& pc, std::span<const ExpVec> gens) {
  return saturate(pc, std::vector<ExpVec>(gens.begin(), gens.end()));
}

ExponentLattice normal_closure_lattice(const PcPresentation& pc, std::span<const FreeWord> gens) {
  std::vector<ExpVec> images;
  images.reserve(gens.size());
  for (const FreeWord& w : gens) images.push_back(pc.image(w));
  return saturate(pc, std::move(images));
}

ExponentLattice commutator_lattice(const PcPresentation& pc, const ExponentLattice& a,
                                   const ExponentLattice& b) {
  if (&a.pc() != &pc || &b.pc() != &pc)
    throw std::invalid_argument("commutator_lattice: mismatched ambient presentations");
  std::vector<ExpVec> gens;
  for (const ExpVec& u : a.rows())
    for (const ExpVec& v : b.rows()) gens.push_back(pc.commutator(u, v));
  return saturate(pc, std::move(gens));
}

ExponentLattice full_lattice(const PcPresentation& pc) {
  std::vector<ExpVec> units;
  for (std::size_t i = 0; i < pc.size(); ++i) units.push_back(pc.unit(i));
  return saturate(pc, std::move(units));
}

ExponentLattice zero_lattice(const PcPresentation& pc) { return ExponentLattice(pc); }

}  // namespace bsnq
