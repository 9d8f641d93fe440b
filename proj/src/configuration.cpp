#include "chernfqh/configuration.hpp"

namespace chernfqh {

Configuration::Configuration(IntSymMatrix coupling, int genus, IntVector degrees, IntVector particles)
    : coupling_(std::move(coupling)), genus_(genus), degrees_(std::move(degrees)), particles_(std::move(particles)) {
  if (genus_ < 0) throw std::invalid_argument("genus must be non-negative");
  if (degrees_.size() != layers() || particles_.size() != layers())
    throw std::invalid_argument("degree and particle vectors must have one entry per layer");
  for (int i = 0; i < layers(); ++i)
    for (int j = 0; j < layers(); ++j)
      if (coupling_(i, j) < 0) throw std::invalid_argument("K must have non-negative entries");
}

Configuration Configuration::from_quasiholes(IntSymMatrix coupling, int genus, IntVector particles,
                                             const IntVector& quasiholes) {
  if (quasiholes.size() != coupling.size() || particles.size() != coupling.size())
    throw std::invalid_argument("quasi-hole and particle vectors must have one entry per layer");
  IntVector degrees = quasiholes + coupling.matrix() * particles + Integer(genus - 1) * coupling.diagonal();
  return Configuration(std::move(coupling), genus, std::move(degrees), std::move(particles));
}

IntVector Configuration::quasiholes() const {
  return degrees_ - coupling_.matrix() * particles_ - Integer(genus_ - 1) * coupling_.diagonal();
}

IntVector broadcast(const Integer& value, int k) { return IntVector::Constant(k, value); }

IntVector to_int_vector(std::initializer_list<long long> values) {
  IntVector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (long long x : values) v(i++) = Integer(x);
  return v;
}

IntVector minimal_particles(int k, int genus) { return broadcast(Integer(std::max(0, 2 * genus)), k); }

}  // namespace chernfqh
