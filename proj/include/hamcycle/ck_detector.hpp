#ifndef HAMCYCLE_CK_DETECTOR_HPP
#define HAMCYCLE_CK_DETECTOR_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hamcycle/cycle_space.hpp"
#include "hamcycle/solver.hpp"

namespace hamcycle {

enum class VertexClass { Boundary, Cut, Inside };

/// Per-edge coverage R (how many basis cycles contain the edge) and the
/// vertex classification derived from it.
///
/// A vertex with exactly two incident R=1 edges is Boundary; otherwise it
/// is Cut when every incident edge has R=1, and Inside in all remaining
/// cases. The Boundary test is applied first, so a degree-2 vertex whose
/// two edges both have R=1 is Boundary. K vertices are the Boundary
/// vertices of degree 4.
struct CoverageProfile {
    std::vector<std::size_t> r;               // indexed by edge id
    std::vector<VertexClass> vertex_class;    // indexed by vertex id
    VertexSet k_vertices;
};

struct RemovabilityResult {
    std::vector<EdgeId> unique_edges; // cycle edges with R = 1
    bool removable = false;
    std::string reason;
};

struct CkReport {
    std::vector<std::size_t> ck_cycles; // ascending basis indices
    std::size_t count = 0;
    /// Removability of every C_k cycle, parallel to ck_cycles.
    std::vector<RemovabilityResult> removability;
};

enum class Verdict { Hamiltonian, NonHamiltonian, NotSolvable };

struct Lemma31Check {
    bool p_ge_3 = false;
    bool ck_nonzero = false;
    bool agree = false;
};

[[nodiscard]] CoverageProfile coverage(const Graph& g, const CycleBasis& basis);

/// A basis cycle is C_k when it has at least one Boundary vertex, all of
/// its Boundary vertices are K vertices, and none of its edges has R = 1.
[[nodiscard]] CkReport detect_ck(const Graph& g, const CycleBasis& basis, const CoverageProfile& profile);

/// Removable: exactly one R=1 edge and deleting it leaves every vertex with
/// degree >= 1 and |P| < 3.
[[nodiscard]] RemovabilityResult is_removable(const Graph& g, const CycleBasis& basis,
                                              const CoverageProfile& profile, std::size_t index);
[[nodiscard]] RemovabilityResult is_removable(const Graph& g, const CycleBasis& basis, std::size_t index);

/// NotSolvable when the basis admits no solution; otherwise Hamiltonian
/// iff no C_k cycle exists.
[[nodiscard]] Verdict verdict(const Graph& g, const CycleBasis& basis);

/// Compares "some vertex has |P| >= 3" against "|C_k| != 0".
[[nodiscard]] Lemma31Check lemma31_check(const Graph& g, const CycleBasis& basis);
[[nodiscard]] Lemma31Check lemma31_check(const Graph& g, const CkReport& ck);

[[nodiscard]] bool any_p_ge_3(const Graph& g);

[[nodiscard]] std::string_view to_string(VertexClass c);
[[nodiscard]] std::string_view to_string(Verdict v);

} // namespace hamcycle

#endif // HAMCYCLE_CK_DETECTOR_HPP
