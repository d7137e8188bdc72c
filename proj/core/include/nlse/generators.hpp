#pragma once

#include <cstddef>
#include <cstdint>

#include "nlse/graph.hpp"

namespace nlse::generators {

// Node labels are "1".."n" in id order.

Graph path(std::size_t n);
Graph complete(std::size_t n);
/// K_{1,leaves}; the center is label "1".
Graph star(std::size_t leaves);
/// G(n, p). May contain isolated nodes.
Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);

}  // namespace nlse::generators
