#include "bsnq/nq.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace bsnq {

const ExpVec* PcPresentation::commutator_rhs(std::size_t j, std::size_t i) const {
  if (j <= i) throw std::invalid_argument("commutator_rhs: requires j > i");
  const ExpVec& v = comm_[j][i];
  return v.empty() ? nullptr : &v;
}

ExpVec PcPresentation::unit(std::size_t i) const {
  ExpVec v(size());
  v[i] = 1;
  return v;
}

void PcPresentation::check_entry(const Int& v) const {
  if (mpz_sizeinbase(v.get_mpz_t(), 2) > opts_.max_entry_bits)
    throw NqResourceError("collection exceeded the entry bit-length budget");
}

// g_i^-s g_j g_i^s for j > i; the correction [g_j, g_i] lives strictly above
// j, so the recursion climbs the generator list and terminates.
ExpVec PcPresentation::conjugated_gen(std::size_t j, std::size_t i, const Int& s) const {
  const ExpVec& c = comm_[j][i];
  if (c.empty() || s == 0) return unit(j);
  if (s == 1) return multiply(unit(j), c);
  if (s == -1) return multiply(unit(j), conjugate_by_gen_power(inverse(c), i, -1));
  Int half = s / 2;  // truncates toward zero
  return conjugate_by_gen_power(conjugated_gen(j, i, half), i, s - half);
}

ExpVec PcPresentation::conjugate_by_gen_power(ExpVec x, std::size_t i, const Int& s) const {
  if (s == 0) return x;
  bool trivial = true;
  for (std::size_t j = i + 1; j < size(); ++j)
    if (x[j] != 0) {
      trivial = false;
      break;
    }
  if (trivial) return x;
  ExpVec res = one();
  for (std::size_t j = i + 1; j < size(); ++j)
    if (x[j] != 0) res = multiply(std::move(res), power(conjugated_gen(j, i, s), x[j]));
  return res;
}

ExpVec PcPresentation::multiply_gen(ExpVec a, std::size_t i, Int s) const {
  if (s == 0) return a;
  bool has_suffix = false;
  for (std::size_t j = i + 1; j < size(); ++j)
    if (a[j] != 0) {
      has_suffix = true;
      break;
    }
  if (has_suffix) {
    ExpVec tail = one();
    for (std::size_t j = i + 1; j < size(); ++j) {
      tail[j] = std::move(a[j]);
      a[j] = 0;
    }
    ExpVec moved = conjugate_by_gen_power(std::move(tail), i, s);
    a = multiply_gen(std::move(a), i, std::move(s));
    return multiply(std::move(a), moved);
  }
  a[i] += s;
  check_entry(a[i]);
  const Int& o = gens_[i].order;
  if (o != 0 && (a[i] < 0 || a[i] >= o)) {
    auto [q, r] = floor_divmod(a[i], o);
    a[i] = std::move(r);
    const ExpVec& rhs = gens_[i].power_rhs;
    if (q != 0 && !rhs.empty()) return multiply(std::move(a), power(rhs, q));
  }
  return a;
}

ExpVec PcPresentation::multiply(ExpVec a, const ExpVec& b) const {
  for (std::size_t j = 0; j < size(); ++j)
    if (b[j] != 0) a = multiply_gen(std::move(a), j, b[j]);
  return a;
}

ExpVec PcPresentation::inverse(const ExpVec& a) const {
  ExpVec res = one();
  for (std::size_t j = size(); j-- > 0;)
    if (a[j] != 0) res = multiply_gen(std::move(res), j, -a[j]);
  return res;
}

ExpVec PcPresentation::power(const ExpVec& a, const Int& e) const {
  if (e == 0) return one();
  if (e < 0) return power(inverse(a), -e);
  ExpVec result = one();
  ExpVec base = a;
  Int k = e;
  for (;;) {
    if (mpz_odd_p(k.get_mpz_t())) result = multiply(std::move(result), base);
    k >>= 1;
    if (k == 0) break;
    base = multiply(base, base);
  }
  return result;
}

ExpVec PcPresentation::conjugate(const ExpVec& a, const ExpVec& g) const {
  return multiply(multiply(inverse(g), a), g);
}

ExpVec PcPresentation::commutator(const ExpVec& a, const ExpVec& b) const {
  return multiply(multiply(multiply(inverse(a), inverse(b)), a), b);
}

ExpVec PcPresentation::collect(std::span<const std::pair<std::size_t, Int>> word) const {
  ExpVec res = one();
  for (const auto& [gen, exp] : word) {
    if (gen >= size()) throw std::invalid_argument("collect: pc generator out of range");
    res = multiply_gen(std::move(res), gen, exp);
  }
  return res;
}

ExpVec PcPresentation::image(const FreeWord& w) const {
  ExpVec res = one();
  for (const auto& s : w.syllables()) {
    if (s.gen < 0 || static_cast<std::size_t>(s.gen) >= epi_.size())
      throw std::invalid_argument("image: word uses an undeclared generator");
    res = multiply(std::move(res), power(epi_[s.gen], s.exp));
  }
  return res;
}

bool PcPresentation::in_gamma(const FreeWord& w, int i) const {
  if (i < 1 || i > cls_) throw std::invalid_argument("in_gamma: class index out of range");
  ExpVec v = image(w);
  for (std::size_t j = 0; j < size(); ++j)
    if (gens_[j].weight <= i && v[j] != 0) return false;
  return true;
}

std::vector<ExpVec> PcPresentation::consistency_defects(int weight_cap) const {
  std::vector<ExpVec> rows;
  // The difference of the two collections is taken coordinatewise, not by a
  // collected quotient: while consistency is still being enforced the group
  // operations themselves may smear the very defect being measured. The
  // settled part of both sides agrees (the lower stage is consistent), so the
  // difference is a vector of central tail coordinates.
  auto defect = [&](const ExpVec& lhs, const ExpVec& rhs) {
    if (lhs == rhs) return;
    ExpVec d(size());
    for (std::size_t c = 0; c < size(); ++c) d[c] = lhs[c] - rhs[c];
    rows.push_back(std::move(d));
  };
  const std::size_t n = size();
  for (std::size_t k = 2; k < n; ++k)
    for (std::size_t j = 1; j < k; ++j) {
      if (gens_[k].weight + gens_[j].weight + 1 > weight_cap) continue;
      for (std::size_t i = 0; i < j; ++i) {
        if (gens_[k].weight + gens_[j].weight + gens_[i].weight > weight_cap) continue;
        ExpVec lhs = multiply(unit(k), multiply(unit(j), unit(i)));
        ExpVec rhs = multiply(multiply(unit(k), unit(j)), unit(i));
        defect(lhs, rhs);
      }
    }
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      if (gens_[j].weight + gens_[i].weight > weight_cap) continue;
      if (gens_[j].order != 0) {
        ExpVec lhs = multiply(power(unit(j), gens_[j].order), unit(i));
        ExpVec rhs = multiply(power(unit(j), gens_[j].order - 1), multiply(unit(j), unit(i)));
        defect(lhs, rhs);
      }
      if (gens_[i].order != 0) {
        ExpVec lhs = multiply(unit(j), power(unit(i), gens_[i].order));
        ExpVec rhs = multiply(multiply(unit(j), unit(i)), power(unit(i), gens_[i].order - 1));
        defect(lhs, rhs);
      }
    }
  for (std::size_t i = 0; i < n; ++i) {
    if (gens_[i].order == 0) continue;
    ExpVec lhs = multiply(power(unit(i), gens_[i].order), unit(i));
    ExpVec rhs = multiply(unit(i), power(unit(i), gens_[i].order));
    defect(lhs, rhs);
  }
  return rows;
}

bool PcPresentation::is_consistent() const { return consistency_defects(cls_).empty(); }

std::string PcPresentation::format_element(const ExpVec& v) const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!first) out << ' ';
    first = false;
    out << 'g' << (i + 1);
    if (v[i] != 1) out << '^' << v[i].get_str();
  }
  return first ? "1" : out.str();
}

// ---------------------------------------------------------------------------
// Construction

namespace {

struct TailSource {
  bool is_power;
  std::size_t i, j;  // power of g_i, or [g_j, g_i]
};

}  // namespace

class NqBuilder {
 public:
  NqBuilder(const GroupPresentation& pres, int cls, const NqOptions& opts) : cls_(cls) {
    if (pres.generator_count() < 1)
      throw std::invalid_argument("nilpotent_quotient: presentation needs a generator");
    if (cls < 1) throw std::invalid_argument("nilpotent_quotient: class must be >= 1");
    pc_.source_ = pres;
    pc_.opts_ = opts;
  }

  PcPresentation run() {
    abelianize();
    while (pc_.cls_ < cls_) extend();
    return std::move(pc_);
  }

 private:
  void check_budget() {
    if (pc_.size() > pc_.opts_.max_generators)
      throw NqResourceError("pc generator count exceeded the budget");
  }

  void abelianize() {
    const auto& pres = pc_.source_;
    const std::size_t ngens = pres.generator_names.size();
    IntMatrix rel(pres.relators.size(), ngens);
    for (std::size_t r = 0; r < pres.relators.size(); ++r)
      for (std::size_t j = 0; j < ngens; ++j)
        rel.at(r, j) = pres.relators[r].exponent_sum(static_cast<int>(j));

    auto snf = smith_normal_form(rel);
    std::vector<long> kept(ngens, -1);
    for (std::size_t c = 0; c < ngens; ++c) {
      Int d = c < snf.divisors.size() ? snf.divisors[c] : Int(0);
      if (d == 1) continue;  // trivial coordinate
      kept[c] = static_cast<long>(pc_.gens_.size());
      pc_.gens_.push_back({1, d, {}});
    }
    const std::size_t n = pc_.gens_.size();
    for (auto& g : pc_.gens_) g.power_rhs = {};
    pc_.comm_.assign(n, {});
    for (std::size_t j = 0; j < n; ++j) pc_.comm_[j].assign(j, {});
    pc_.epi_.assign(ngens, ExpVec(n));
    for (std::size_t gen = 0; gen < ngens; ++gen)
      for (std::size_t c = 0; c < ngens; ++c)
        if (kept[c] >= 0) pc_.epi_[gen][kept[c]] = snf.right.at(gen, c);
    pc_.graded_.push_back(abelian_invariants(rel, ngens));
    pc_.cls_ = 1;
    check_budget();
  }

  void extend() {
    const int new_class = pc_.cls_ + 1;
    const std::size_t old_n = pc_.size();

    // Central tails on every non-defining relation inside the weight budget,
    // power relations first, then commutators in generator order.
    std::vector<TailSource> tails;
    for (std::size_t i = 0; i < old_n; ++i)
      if (pc_.gens_[i].order != 0 && !power_definition_.count(i))
        tails.push_back({true, i, i});
    for (std::size_t j = 1; j < old_n; ++j)
      for (std::size_t i = 0; i < j; ++i) {
        if (pc_.gens_[j].weight + pc_.gens_[i].weight > new_class) continue;
        if (comm_definition_.count({j, i})) continue;
        tails.push_back({false, i, j});
      }
    const std::size_t t_count = tails.size();
    const std::size_t ext_n = old_n + t_count;
    if (ext_n > pc_.opts_.max_generators)
      throw NqResourceError("pc generator count exceeded the budget");

    auto widen = [&](ExpVec& v) { v.resize(ext_n); };
    for (auto& g : pc_.gens_)
      if (!g.power_rhs.empty()) widen(g.power_rhs);
    for (auto& row : pc_.comm_)
      for (auto& v : row)
        if (!v.empty()) widen(v);
    for (auto& v : pc_.epi_) widen(v);

    for (std::size_t t = 0; t < t_count; ++t) {
      pc_.gens_.push_back({new_class, 0, {}});
      pc_.comm_.emplace_back(old_n + t);  // trivial with everything
    }
    for (std::size_t t = 0; t < t_count; ++t) {
      const TailSource& src = tails[t];
      if (src.is_power) {
        ExpVec& rhs = pc_.gens_[src.i].power_rhs;
        if (rhs.empty()) rhs.assign(ext_n, 0);
        rhs[old_n + t] = 1;
      } else {
        ExpVec& rhs = pc_.comm_[src.j][src.i];
        if (rhs.empty()) rhs.assign(ext_n, 0);
        rhs[old_n + t] = 1;
      }
    }

    // Consistency and relator conditions are pure tail vectors.
    std::vector<ExpVec> raw_rows = pc_.consistency_defects(new_class);
    for (const FreeWord& rel : pc_.source_.relators) raw_rows.push_back(pc_.image(rel));
    IntMatrix rows(raw_rows.size(), t_count);
    for (std::size_t r = 0; r < raw_rows.size(); ++r) {
      for (std::size_t c = 0; c < old_n; ++c)
        if (raw_rows[r][c] != 0)
          throw std::logic_error("nilpotent_quotient: stage condition touches settled coordinates");
      for (std::size_t t = 0; t < t_count; ++t) rows.at(r, t) = raw_rows[r][old_n + t];
    }

    pc_.graded_.push_back(abelian_invariants(rows, t_count));

    auto hnf = hermite_normal_form(rows);

    // pivot value 1: tail eliminated; pivot > 1: torsion; no pivot: free.
    std::vector<long> pivot_row(t_count, -1);
    for (std::size_t r = 0; r < hnf.pivot_cols.size(); ++r) pivot_row[hnf.pivot_cols[r]] = static_cast<long>(r);
    std::vector<bool> eliminated(t_count, false);
    for (std::size_t t = 0; t < t_count; ++t)
      if (pivot_row[t] >= 0 && hnf.basis.at(pivot_row[t], t) == 1) eliminated[t] = true;

    // Substitute eliminated tails (ascending works: expressions only involve
    // later tails) and compact the survivors.
    std::vector<long> new_index(t_count, -1);
    std::size_t survivors = 0;
    for (std::size_t t = 0; t < t_count; ++t)
      if (!eliminated[t]) new_index[t] = static_cast<long>(survivors++);
    const std::size_t final_n = old_n + survivors;

    auto substitute = [&](const ExpVec& v) {
      ExpVec tail_part(t_count);
      for (std::size_t t = 0; t < t_count; ++t)
        if (v.size() > old_n + t) tail_part[t] = v[old_n + t];
      for (std::size_t t = 0; t < t_count; ++t) {
        if (!eliminated[t] || tail_part[t] == 0) continue;
        Int coeff = tail_part[t];
        tail_part[t] = 0;
        const std::size_t r = pivot_row[t];
        for (std::size_t q = t + 1; q < t_count; ++q)
          tail_part[q] -= coeff * hnf.basis.at(r, q);
      }
      ExpVec out(final_n);
      for (std::size_t c = 0; c < old_n && c < v.size(); ++c) out[c] = v[c];
      for (std::size_t t = 0; t < t_count; ++t)
        if (new_index[t] >= 0) out[old_n + new_index[t]] = tail_part[t];
      return out;
    };
    auto substitute_rel = [&](ExpVec& v) {
      if (v.empty()) return;
      v = substitute(v);
      if (std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; })) v.clear();
    };

    for (auto& g : pc_.gens_) substitute_rel(g.power_rhs);
    for (auto& row : pc_.comm_)
      for (auto& v : row) substitute_rel(v);
    for (auto& v : pc_.epi_) v = substitute(v);

    // Shrink the generator list to the survivors and install their orders,
    // power relations and definitions.
    pc_.gens_.resize(old_n + survivors);
    pc_.comm_.resize(old_n + survivors);
    {
      std::size_t next = old_n;
      for (std::size_t t = 0; t < t_count; ++t) {
        if (eliminated[t]) continue;
        pc_.comm_[next].assign(next, {});
        PcPresentation::PcGenerator& g = pc_.gens_[next];
        g.weight = new_class;
        g.power_rhs.clear();
        if (pivot_row[t] >= 0) {
          g.order = hnf.basis.at(pivot_row[t], t);
          ExpVec rhs(ext_n);
          for (std::size_t q = t + 1; q < t_count; ++q)
            rhs[old_n + q] = -hnf.basis.at(pivot_row[t], q);
          g.power_rhs = substitute(rhs);
          if (std::all_of(g.power_rhs.begin(), g.power_rhs.end(),
                          [](const Int& x) { return x == 0; }))
            g.power_rhs.clear();
        } else {
          g.order = 0;
        }
        if (tails[t].is_power)
          power_definition_.insert(tails[t].i);
        else
          comm_definition_.insert({tails[t].j, tails[t].i});
        ++next;
      }
    }
    pc_.cls_ = new_class;
    check_budget();
  }

  int cls_;
  PcPresentation pc_;
  std::set<std::size_t> power_definition_;
  std::set<std::pair<std::size_t, std::size_t>> comm_definition_;
};

PcPresentation nilpotent_quotient(const GroupPresentation& pres, int cls, const NqOptions& opts) {
  return NqBuilder(pres, cls, opts).run();
}

}  // namespace bsnq
