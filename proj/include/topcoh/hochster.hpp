#pragma once

#include <cstdint>
#include <vector>

#include "topcoh/groebner.hpp"

namespace topcoh {

// Finite simplicial complex on the vertex set {0,...,n-1}; faces are vertex
// bitmasks. Stored by its facets (pairwise incomparable maximal faces), so
// every subset of a face is automatically a face. The complex {emptyset}
// (facet mask 0) is allowed and has dimension -1; the void complex (no
// faces at all) only arises as a degenerate value and has dimension -2.
class SimplicialComplex {
public:
    static SimplicialComplex from_faces(int nvertices, std::vector<std::uint32_t> faces);

    int nvertices() const { return nvertices_; }
    int dimension() const;
    const std::vector<std::uint32_t>& facets() const { return facets_; }

    bool has_face(std::uint32_t face) const;
    // Faces with exactly `size` vertices, ascending by mask.
    std::vector<std::uint32_t> faces_of_size(int size) const;

private:
    SimplicialComplex(int nvertices, std::vector<std::uint32_t> facets)
        : nvertices_(nvertices), facets_(std::move(facets)) {}

    int nvertices_ = 0;
    std::vector<std::uint32_t> facets_;
};

// Stanley-Reisner complex of a proper squarefree monomial ideal: the faces
// are the variable subsets whose product lies outside I.
SimplicialComplex stanley_reisner(const Ideal& I);

// link(C, f) = {g : g disjoint from f, g union f in C}. Rejects non-faces.
SimplicialComplex link(const SimplicialComplex& C, std::uint32_t face);

// Ranks of the reduced simplicial cohomology over Q (characteristic 0) or
// F_p, from the coboundary matrices of the full face poset; entry k holds
// the rank in degree k-1, for degrees -1 through dim C.
std::vector<int> reduced_cohomology_ranks(const SimplicialComplex& C, long characteristic);

// Graded ranks of the top local cohomology of R/I at the irrelevant maximal
// ideal: in multidegree -e(sigma) the rank of H^d is the rank of reduced
// cohomology of link(sigma) in degree d - |sigma| - 1, and a non-positive
// multidegree contributes through its support only. Computed entirely from
// the complex, independent of the ideal-arithmetic engine.
struct GradedRank {
    std::vector<int> degree;  // non-positive multidegree
    int rank = 0;
};

struct TopRankReport {
    int d = 0;
    bool nonvanishing = false;     // over all squarefree degrees
    std::vector<GradedRank> ranks; // the requested box, sorted by degree
};

// Default box: all squarefree non-positive multidegrees.
TopRankReport top_local_cohomology_ranks(const Ideal& I);
TopRankReport top_local_cohomology_ranks(const Ideal& I,
                                         const std::vector<std::vector<int>>& degree_box);

} // namespace topcoh
