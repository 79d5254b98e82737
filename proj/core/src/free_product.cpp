#include "bsnq/free_product.hpp"

#include <stdexcept>

namespace bsnq {

FreeWord FreeProductNormalForm::to_word() const {
  FreeWord w;
  for (const auto& s : syllables) w.append(s.gen, s.exp);
  return w;
}

FreeProductNormalForm free_product_reduce(const Int& m, const FreeWord& w) {
  if (m < 2) throw std::invalid_argument("free_product_reduce: m must be >= 2");
  std::vector<Syllable> stack;
  auto push = [&](int gen, Int exp) {
    if (!stack.empty() && stack.back().gen == gen) {
      exp += stack.back().exp;
      stack.pop_back();
    }
    if (gen == kGenA) exp = floor_mod(exp, m);
    if (exp != 0) stack.push_back({gen, exp});
  };
  for (const auto& s : w.syllables()) {
    if (s.gen != kGenT && s.gen != kGenA)
      throw std::invalid_argument("free_product_reduce: word must use generators t, a");
    push(s.gen, s.exp);
  }
  return {std::move(stack)};
}

}  // namespace bsnq
