#ifndef MOTZGEN_LABEL_HPP
#define MOTZGEN_LABEL_HPP

#include <cstdint>

namespace motzgen {

// Node label in the flat vector encodings. Odd labels are internal nodes,
// even labels are leaves; the children of the internal node labeled 2k+1
// sit at indices 2k+1 (left) and 2k+2 (right), and the root is at index 0.
using Label = std::uint32_t;

}  // namespace motzgen

#endif  // MOTZGEN_LABEL_HPP
