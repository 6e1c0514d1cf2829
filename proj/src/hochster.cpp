#include "topcoh/hochster.hpp"

#include <algorithm>
#include <bit>

#include <gmpxx.h>

namespace topcoh {

namespace {

const MonomialOrder kGrevlex = MonomialOrder::grevlex();

// Rank over Q by fraction-free (Bareiss) elimination on integer entries.
int rank_rational(std::vector<std::vector<mpz_class>> m) {
    if (m.empty() || m[0].empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    mpz_class previous_pivot = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                m[i][j] = (m[i][j] * m[rank][col] - m[i][col] * m[rank][j]) / previous_pivot;
            m[i][col] = 0;
        }
        previous_pivot = m[rank][col];
        ++rank;
    }
    return static_cast<int>(rank);
}

int rank_modp(std::vector<std::vector<long>> m, long p) {
    if (m.empty() || m[0].empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    const auto inv = [p](long a) {
        long t = 0, new_t = 1, r = p, new_r = a % p;
        if (new_r < 0) new_r += p;
        while (new_r != 0) {
            const long q = r / new_r;
            t = std::exchange(new_t, t - q * new_t);
            r = std::exchange(new_r, r - q * new_r);
        }
        return t < 0 ? t + p : t;
    };
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] % p == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        const long scale = inv(m[rank][col]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const long factor = ((m[i][col] % p) * scale) % p;
            if (factor == 0) continue;
            for (std::size_t j = col; j < cols; ++j)
                m[i][j] = ((m[i][j] - factor * m[rank][j]) % p + p) % p;
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

} // namespace

SimplicialComplex SimplicialComplex::from_faces(int nvertices,
                                                std::vector<std::uint32_t> faces) {
    if (nvertices < 0 || nvertices > 31)
        throw InvalidArgumentError("complex vertex count out of range");
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<std::uint32_t> facets;
    for (std::uint32_t f : faces) {
        const bool maximal = std::none_of(faces.begin(), faces.end(), [f](std::uint32_t g) {
            return g != f && (f & ~g) == 0;
        });
        if (maximal) facets.push_back(f);
    }
    std::sort(facets.begin(), facets.end(), [](std::uint32_t a, std::uint32_t b) {
        if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
        return a < b;
    });
    return SimplicialComplex(nvertices, std::move(facets));
}

int SimplicialComplex::dimension() const {
    int best = -2;
    for (std::uint32_t f : facets_) best = std::max(best, std::popcount(f) - 1);
    return best;
}

bool SimplicialComplex::has_face(std::uint32_t face) const {
    return std::any_of(facets_.begin(), facets_.end(),
                       [face](std::uint32_t f) { return (face & ~f) == 0; });
}

std::vector<std::uint32_t> SimplicialComplex::faces_of_size(int size) const {
    std::vector<std::uint32_t> out;
    if (size < 0 || nvertices_ > 31) return out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << nvertices_); ++mask)
        if (std::popcount(mask) == size && has_face(mask)) out.push_back(mask);
    return out;
}

SimplicialComplex stanley_reisner(const Ideal& I) {
    if (I.is_unit())
        throw InvalidArgumentError("the unit ideal has no Stanley-Reisner complex");
    if (!I.is_monomial())
        throw InvalidArgumentError("Stanley-Reisner complex needs a monomial ideal");
    const int n = I.ring()->nvars();
    if (n > 31) throw InvalidArgumentError("too many variables for a face enumeration");
    std::vector<Monomial> gens;
    for (const Polynomial& g : I.reduced_basis()) {
        const Monomial& m = g.leading_term(kGrevlex).monomial;
        if (!m.is_squarefree())
            throw InvalidArgumentError("Stanley-Reisner complex needs a squarefree ideal");
        gens.push_back(m);
    }
    std::vector<std::uint32_t> faces;
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
        // x_sigma lies in I iff some squarefree generator's support is inside sigma.
        const bool in_ideal = std::any_of(gens.begin(), gens.end(), [mask](const Monomial& m) {
            return (static_cast<std::uint32_t>(m.support()) & ~mask) == 0;
        });
        if (!in_ideal) faces.push_back(mask);
    }
    return SimplicialComplex::from_faces(n, std::move(faces));
}

SimplicialComplex link(const SimplicialComplex& C, std::uint32_t face) {
    if (!C.has_face(face))
        throw InvalidArgumentError("link of a non-face");
    std::vector<std::uint32_t> faces;
    for (std::uint32_t f : C.facets()) {
        if ((face & ~f) != 0) continue;
        const std::uint32_t rest = f & ~face;
        // Every subset of rest is a link face; record the maximal one and let
        // from_faces re-derive the facets.
        faces.push_back(rest);
    }
    return SimplicialComplex::from_faces(C.nvertices(), std::move(faces));
}

std::vector<int> reduced_cohomology_ranks(const SimplicialComplex& C, long characteristic) {
    const int dim = C.dimension();
    if (dim < -1) return {};
    // Face lists per degree: degree i has faces of size i+1, i = -1..dim.
    std::vector<std::vector<std::uint32_t>> faces;
    for (int i = -1; i <= dim; ++i) faces.push_back(C.faces_of_size(i + 1));

    // rank of the coboundary from degree i-1 into degree i, i = 0..dim.
    std::vector<int> coboundary_rank(static_cast<std::size_t>(dim + 2), 0);
    for (int i = 0; i <= dim; ++i) {
        const auto& lower = faces[static_cast<std::size_t>(i)];       // degree i-1
        const auto& upper = faces[static_cast<std::size_t>(i + 1)];   // degree i
        if (lower.empty() || upper.empty()) continue;
        std::vector<std::vector<long>> m(upper.size(), std::vector<long>(lower.size(), 0));
        for (std::size_t r = 0; r < upper.size(); ++r) {
            const std::uint32_t tau = upper[r];
            for (std::size_t c = 0; c < lower.size(); ++c) {
                const std::uint32_t sigma = lower[c];
                if ((sigma & ~tau) != 0 || std::popcount(tau & ~sigma) != 1) continue;
                const std::uint32_t added = tau & ~sigma;
                const int position = std::popcount(tau & (added - 1));
                m[r][c] = (position % 2 == 0) ? 1 : -1;
            }
        }
        if (characteristic == 0) {
            std::vector<std::vector<mpz_class>> mz(m.size());
            for (std::size_t r = 0; r < m.size(); ++r)
                mz[r].assign(m[r].begin(), m[r].end());
            coboundary_rank[static_cast<std::size_t>(i + 1)] = rank_rational(std::move(mz));
        } else {
            coboundary_rank[static_cast<std::size_t>(i + 1)] = rank_modp(std::move(m), characteristic);
        }
    }

    std::vector<int> ranks(static_cast<std::size_t>(dim + 2), 0);
    for (int i = -1; i <= dim; ++i) {
        const int faces_here = static_cast<int>(faces[static_cast<std::size_t>(i + 1)].size());
        const int out = i < dim ? coboundary_rank[static_cast<std::size_t>(i + 2)] : 0;
        const int in = coboundary_rank[static_cast<std::size_t>(i + 1)];
        ranks[static_cast<std::size_t>(i + 1)] = faces_here - out - in;
    }
    return ranks;
}

namespace {

// Rank of H^d in multidegree with support sigma, via the link.
int rank_at_support(const SimplicialComplex& complex, long characteristic, int d,
                    std::uint32_t sigma) {
    if (!complex.has_face(sigma)) return 0;
    const SimplicialComplex lk = link(complex, sigma);
    const int degree = d - std::popcount(sigma) - 1;
    const std::vector<int> ranks = reduced_cohomology_ranks(lk, characteristic);
    const int index = degree + 1;
    if (index < 0 || index >= static_cast<int>(ranks.size())) return 0;
    return ranks[static_cast<std::size_t>(index)];
}

} // namespace

TopRankReport top_local_cohomology_ranks(const Ideal& I) {
    const int n = I.ring()->nvars();
    std::vector<std::vector<int>> box;
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
        std::vector<int> degree(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) degree[static_cast<std::size_t>(i)] = -1;
        box.push_back(std::move(degree));
    }
    return top_local_cohomology_ranks(I, box);
}

TopRankReport top_local_cohomology_ranks(const Ideal& I,
                                         const std::vector<std::vector<int>>& degree_box) {
    const SimplicialComplex complex = stanley_reisner(I);
    const int n = I.ring()->nvars();
    const long characteristic = I.ring()->characteristic;

    TopRankReport report;
    report.d = krull_dim(I);

    std::vector<int> by_support(std::size_t(1) << n, 0);
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
        by_support[mask] = rank_at_support(complex, characteristic, report.d, mask);
        if (by_support[mask] > 0) report.nonvanishing = true;
    }

    for (const std::vector<int>& degree : degree_box) {
        if (static_cast<int>(degree.size()) != n)
            throw InvalidArgumentError("multidegree arity does not match the ring");
        std::uint32_t support = 0;
        for (int i = 0; i < n; ++i) {
            if (degree[static_cast<std::size_t>(i)] > 0)
                throw InvalidArgumentError("degree box entries must be non-positive");
            if (degree[static_cast<std::size_t>(i)] < 0) support |= std::uint32_t(1) << i;
        }
        report.ranks.push_back({degree, by_support[support]});
    }
    std::sort(report.ranks.begin(), report.ranks.end(),
              [](const GradedRank& a, const GradedRank& b) { return a.degree < b.degree; });
    return report;
}

} // namespace topcoh
