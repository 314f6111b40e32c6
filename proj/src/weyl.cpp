#include "f4gvm/weyl.hpp"

namespace f4gvm {

std::size_t group_order(const RootSystem& rs) { return orbit(rs, rho(rs)).points.size(); }

} // namespace f4gvm
