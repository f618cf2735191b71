//! Fixtures shared by the criterion targets.

use vrhq_core::graph::{build_hamming_graph, Graph, HammingGraphSpec};
use vrhq_core::SimplicialComplex;

/// `G^c_{n,r}`, panicking on invalid parameters.
pub fn complement_graph(n: u32, r: u32) -> Graph {
    build_hamming_graph(HammingGraphSpec::new(n, r, true)).expect("valid hypercube parameters")
}

pub fn cycle(m: usize) -> Graph {
    Graph::from_edges(m, (0..m).map(|i| (i.min((i + 1) % m), i.max((i + 1) % m)))).expect("cycle")
}

/// Six-vertex projective plane; its integral homology has 2-torsion.
pub fn projective_plane() -> SimplicialComplex {
    let facets =
        [[0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1], [1, 2, 4], [2, 3, 5], [3, 4, 1], [4, 5, 2], [5, 1, 3]];
    SimplicialComplex::from_facets(6, 3, facets).expect("valid facets")
}
