#ifndef CARTDEC_BACKTRACK_HPP
#define CARTDEC_BACKTRACK_HPP

#include <vector>

#include "cartdec/group.hpp"

namespace cartdec {

// A ∩ B by depth-first search over a common base, pruning image choices
// against both chains and against the orbits of the partially found result.
Group intersect(const Group& a, const Group& b);

// {g in G : S^g = S} by the same search with a point/image membership filter.
Group set_stabilizer(const Group& g, const std::vector<Point>& s);

// |A B| as a rational-free exact product |A||B|/|A∩B|
BigInt product_size(const Group& a, const Group& b);

}  // namespace cartdec

#endif
