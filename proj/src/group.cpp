#include "heisenberg/group.hpp"

namespace heis {

GroupPoint make_point(std::initializer_list<Rational> coordinates) {
  return GroupPoint::from_coordinates(std::vector<Rational>(coordinates));
}

} // namespace heis
