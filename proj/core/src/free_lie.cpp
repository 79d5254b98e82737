#include "bsnq/free_lie.hpp"

#include <algorithm>
#include <stdexcept>

#include "bsnq/matrix.hpp"

namespace bsnq {

void LieElement::add(int tree, const Int& coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(tree);
  if (it == terms_.end()) {
    terms_.emplace(tree, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

Int LieElement::coefficient(int tree) const {
  auto it = terms_.find(tree);
  return it == terms_.end() ? Int(0) : it->second;
}

LieElement& LieElement::operator+=(const LieElement& o) {
  for (const auto& [t, c] : o.terms_) add(t, c);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
  for (const auto& [t, c] : o.terms_) add(t, -c);
  return *this;
}

LieElement LieElement::operator-() const {
  LieElement r;
  for (const auto& [t, c] : terms_) r.terms_.emplace(t, -c);
  return r;
}

LieElement& LieElement::operator*=(const Int& k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, c] : terms_) c *= k;
  return *this;
}

LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
LieElement operator*(const Int& k, LieElement a) { return a *= k; }

FreeLie::FreeLie() {
  trees_.push_back({-1, -1, 1, 1});  // id 0 = y
  trees_.push_back({-1, -1, 1, 0});  // id 1 = x
  by_degree_.push_back({kY, kX});
}

std::string FreeLie::tree_string(int id) const {
  const Tree& t = trees_[id];
  if (t.is_leaf()) return id == kX ? "x" : "y";
  return "[" + tree_string(t.left) + "," + tree_string(t.right) + "]";
}

// Ids are assigned degree by degree, so id comparison is the (degree-first)
// tree order the Hall condition refers to.
bool FreeLie::is_hall_pair(int u, int v) const {
  if (u <= v) return false;
  const Tree& tu = trees_[u];
  return tu.is_leaf() || tu.right <= v;
}

void FreeLie::extend_to_degree(int c) {
  while (static_cast<int>(by_degree_.size()) < c) {
    int deg = static_cast<int>(by_degree_.size()) + 1;
    std::vector<int> ids;
    // Candidates (u, v) with deg(u) + deg(v) = deg, enumerated in the order
    // (deg(v), v, u) so that ids within a degree follow a fixed convention.
    for (int dv = 1; dv <= deg - 1; ++dv) {
      int du = deg - dv;
      for (int v : by_degree_[dv - 1])
        for (int u : by_degree_[du - 1]) {
          if (u <= v) continue;
          if (!trees_[u].is_leaf() && trees_[u].right > v) continue;
          Tree t;
          t.left = u;
          t.right = v;
          t.degree = deg;
          t.y_degree = trees_[u].y_degree + trees_[v].y_degree;
          int id = static_cast<int>(trees_.size());
          trees_.push_back(t);
          node_ids_[{u, v}] = id;
          ids.push_back(id);
        }
    }
    by_degree_.push_back(std::move(ids));
  }
}

std::vector<int> FreeLie::hall_basis(int c) {
  if (c < 1) throw std::invalid_argument("hall_basis: degree must be >= 1");
  std::lock_guard lock(mutex_);
  extend_to_degree(c);
  return by_degree_[c - 1];
}

LieElement FreeLie::bracket_trees(int u, int v) {
  if (u == v) return {};
  if (u < v) {
    LieElement r = bracket_trees(v, u);
    return -r;
  }
  auto key = std::make_pair(u, v);
  auto memo = bracket_memo_.find(key);
  if (memo != bracket_memo_.end()) return memo->second;

  int deg = trees_[u].degree + trees_[v].degree;
  extend_to_degree(deg);

  LieElement result;
  if (is_hall_pair(u, v)) {
    result = LieElement::basis(node_ids_.at({u, v}));
  } else {
    // u = (u1, u2) with u2 > v; Jacobi: [[u1,u2],v] = [[u1,v],u2] + [u1,[u2,v]]
    int u1 = trees_[u].left, u2 = trees_[u].right;
    LieElement left = bracket_trees(u1, v);
    for (const auto& [t, c] : left.terms()) {
      LieElement piece = bracket_trees(t, u2);
      piece *= c;
      result += piece;
    }
    LieElement right = bracket_trees(u2, v);
    for (const auto& [t, c] : right.terms()) {
      LieElement piece = bracket_trees(u1, t);
      piece *= c;
      result += piece;
    }
  }
  bracket_memo_.emplace(key, result);
  return result;
}

LieElement FreeLie::bracket(const LieElement& u, const LieElement& v) {
  std::lock_guard lock(mutex_);
  auto validate = [&](const LieElement& e) {
    if (!e.terms().empty() && e.terms().rbegin()->first >= static_cast<int>(trees_.size()))
      throw std::invalid_argument("bracket: element uses trees from another arena");
  };
  validate(u);
  validate(v);
  LieElement result;
  for (const auto& [tu, cu] : u.terms())
    for (const auto& [tv, cv] : v.terms()) {
      LieElement piece = bracket_trees(tu, tv);
      piece *= cu * cv;
      result += piece;
    }
  return result;
}

LieElement FreeLie::psi_substitute(const Int& kappa, const LieElement& u) {
  std::lock_guard lock(mutex_);
  if (!u.terms().empty() && u.terms().rbegin()->first >= static_cast<int>(trees_.size()))
    throw std::invalid_argument("psi_substitute: element uses trees from another arena");
  LieElement r;
  for (const auto& [t, c] : u.terms()) {
    int e = trees_[t].y_degree;
    r.add(t, c * pow(kappa, static_cast<unsigned long>(e)));
  }
  return r;
}

Int FreeLie::y_degree_sum(int c) {
  Int sum = 0;
  for (int id : hall_basis(c)) sum += tree(id).y_degree;
  return sum;
}

Int witt_rank(int c) {
  if (c < 1) throw std::invalid_argument("witt_rank: degree must be >= 1");
  Int sum = 0;
  for (long e = 1; e <= c; ++e) {
    if (c % e != 0) continue;
    sum += Int(mobius(e)) * pow(Int(2), static_cast<unsigned long>(c / e));
  }
  return sum / c;
}

Int lattice_index(FreeLie& lie, int c, const Int& kappa) {
  if (c < 1) throw std::invalid_argument("lattice_index: degree must be >= 1");
  if (kappa == 0) throw std::invalid_argument("lattice_index: kappa must be nonzero");
  Int tc = lie.y_degree_sum(c);
  Int index = pow(abs(kappa), tc.get_ui());
  if (c <= 8) {
    // Cross-check against the matrix of psi_c on the Hall basis.
    auto basis = lie.hall_basis(c);
    IntMatrix m(basis.size(), basis.size());
    for (std::size_t col = 0; col < basis.size(); ++col) {
      LieElement image = lie.psi_substitute(kappa, LieElement::basis(basis[col]));
      for (const auto& [t, coeff] : image.terms()) {
        auto row = std::find(basis.begin(), basis.end(), t);
        if (row == basis.end()) throw std::logic_error("lattice_index: image left the degree");
        m.at(row - basis.begin(), col) = coeff;
      }
    }
    if (abs(determinant(m)) != index)
      throw std::logic_error("lattice_index: determinant cross-check failed");
  }
  return index;
}

Int grc_order_bound(FreeLie& lie, const BSParams& p, int c) {
  if (c < 2) throw std::invalid_argument("grc_order_bound: c must be >= 2");
  Int kappa = p.delta != 0 ? p.delta : p.m;
  return pow(abs(kappa), lie.y_degree_sum(c).get_ui());
}

}  // namespace bsnq
