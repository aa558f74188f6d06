#ifndef GOLDSIEVE_TYPES_HPP
#define GOLDSIEVE_TYPES_HPP

#include <cstdint>

namespace goldsieve {

using Int = std::int64_t;

}

#endif
