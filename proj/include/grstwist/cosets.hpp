#ifndef GRSTWIST_COSETS_HPP
#define GRSTWIST_COSETS_HPP

#include "grstwist/galois.hpp"

#include <vector>

namespace grstwist {

// Minimal cyclotomic coset of Z_N under multiplication by p: the orbit of
// its smallest element. Orbit sizes always divide m.
struct CycCoset {
    std::uint32_t rep = 0;
    std::vector<std::uint32_t> elements;  // sorted ascending
    int size() const { return static_cast<int>(elements.size()); }
};

// all minimal cosets, sorted by representative; they partition {0,...,N-1}
std::vector<CycCoset> minimal_cosets(const Field& field);

// the unique minimal coset containing t
CycCoset coset_of(const Field& field, std::uint32_t t);

// Unions of 1..max_parts distinct minimal cosets, as sorted representative
// tuples, enumerated by part count then lexicographically. The zero coset
// is left out unless include_zero is set.
std::vector<std::vector<std::uint32_t>> coset_unions(const Field& field, int max_parts,
                                                     bool include_zero = false);

// sorted elements of the union of the cosets of the given representatives
std::vector<std::uint32_t> union_elements(const Field& field,
                                          const std::vector<std::uint32_t>& reps);

} // namespace grstwist

#endif
