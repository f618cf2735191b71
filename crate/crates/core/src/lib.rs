//! Connectivity lower bounds for Vietoris-Rips complexes of hypercube graphs,
//! with the computational ingredients needed to check them at small scale:
//! exact total domination numbers, clique and independence complexes, and
//! simplicial homology over GF(2) and the integers.

pub mod arith;
pub mod bitset;
pub mod complexes;
pub mod domination;
pub mod error;
pub mod graph;
pub mod homology;

pub use arith::{
    alpha, binomial, connectivity_lower_bound, consistency_check_2r, counterexample_scan, paper_table, tail_degree,
    BoundQuery, ConnectivityBound, Counterexample, ExactRatio, TableRow,
};
pub use bitset::BitSet;
pub use complexes::{
    clique_complex, cross_polytope_witness_check, euler_characteristic, f_vector, independence_complex, read_complex,
    vietoris_rips, vietoris_rips_capped, write_complex, SimplicialComplex, WitnessReport,
};
pub use domination::{
    exact_gamma_t, exact_gamma_t_with, gamma_t_exhaustive, greedy_upper_bound, is_total_dominating,
    tight_example_graph, trivial_lower_bound, DominationResult, SolveOptions, SolverStatus, VertexSet,
};
pub use error::{Error, Result};
pub use graph::{
    antipode, build_hamming_graph, degree_profile, hamming_distance, read_dimacs, write_dimacs, Graph,
    HammingGraphSpec, VertexLabel,
};
pub use homology::{
    betti_gf2, betti_integer, boundary_matrix, gf2_rank, is_boundary_gf2, reduced_homology, smith_normal_form,
    BettiProfile, BoundaryMatrix, BoundarySpace, Coefficients, Gf2Reducer,
};
