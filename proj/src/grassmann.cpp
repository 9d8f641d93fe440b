#include "chernfqh/grassmann.hpp"

namespace chernfqh {

GeneratorLayout::GeneratorLayout(int layers, int cycles) : layers_(layers), cycles_(cycles) {
  if (layers < 0 || cycles < 0) throw std::invalid_argument("layout needs non-negative layers and cycles");
  if (count() > kMaxGenerators) throw std::invalid_argument("layout exceeds 64 generators");
}

int GeneratorLayout::position(const GeneratorIndex& gen) const {
  if (gen.cycle < 0 || gen.cycle >= cycles_) throw std::out_of_range("cycle index out of range");
  switch (gen.kind) {
    case GeneratorKind::psi:
    case GeneratorKind::psibar: {
      if (gen.layer < 0 || gen.layer >= layers_) throw std::out_of_range("layer index out of range");
      const int base = 2 * (gen.layer * cycles_ + gen.cycle);
      return gen.kind == GeneratorKind::psi ? base : base + 1;
    }
    case GeneratorKind::alpha:
      return 2 * layers_ * cycles_ + 2 * gen.cycle;
    case GeneratorKind::beta:
      return 2 * layers_ * cycles_ + 2 * gen.cycle + 1;
  }
  throw std::logic_error("unknown generator kind");
}

GeneratorIndex GeneratorLayout::generator(int position) const {
  if (position < 0 || position >= count()) throw std::out_of_range("generator position out of range");
  const int fermions = 2 * layers_ * cycles_;
  if (position < fermions) {
    const int pair = position / 2;
    return {position % 2 == 0 ? GeneratorKind::psi : GeneratorKind::psibar, pair / cycles_, pair % cycles_};
  }
  const int rest = position - fermions;
  return {rest % 2 == 0 ? GeneratorKind::alpha : GeneratorKind::beta, 0, rest / 2};
}

Monomial GeneratorLayout::fermion_mask() const {
  const int fermions = 2 * layers_ * cycles_;
  return fermions == 0 ? Monomial{0} : (Monomial{1} << fermions) - 1;
}

Monomial GeneratorLayout::block_mask(int cycle) const {
  Monomial m = 0;
  for (int i = 0; i < layers_; ++i) {
    m |= Monomial{1} << psi(i, cycle);
    m |= Monomial{1} << psibar(i, cycle);
  }
  return m;
}

Monomial GeneratorLayout::source_mask() const {
  const Monomial all = count() == 64 ? ~Monomial{0} : (Monomial{1} << count()) - 1;
  return all & ~fermion_mask();
}

std::vector<int> GeneratorLayout::block_measure(int cycle) const {
  std::vector<int> measure;
  measure.reserve(2 * static_cast<std::size_t>(layers_));
  for (int i = 0; i < layers_; ++i) {
    measure.push_back(psi(i, cycle));
    measure.push_back(psibar(i, cycle));
  }
  return measure;
}

std::vector<int> GeneratorLayout::full_measure() const {
  std::vector<int> measure;
  for (int r = 0; r < cycles_; ++r) {
    auto block = block_measure(r);
    measure.insert(measure.end(), block.begin(), block.end());
  }
  return measure;
}

std::string GeneratorLayout::name(int position) const {
  const GeneratorIndex gen = generator(position);
  const std::string r = std::to_string(gen.cycle + 1);
  switch (gen.kind) {
    case GeneratorKind::psi: return "psi" + std::to_string(gen.layer + 1) + "^" + r;
    case GeneratorKind::psibar: return "psibar" + std::to_string(gen.layer + 1) + "^" + r;
    case GeneratorKind::alpha: return "alpha^" + r;
    case GeneratorKind::beta: return "beta^" + r;
  }
  return "?";
}

}  // namespace chernfqh
