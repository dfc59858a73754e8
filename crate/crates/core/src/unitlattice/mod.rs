//! Lattices of multiples modulo `g`, finite orbits on the torus, and the
//! lattice-point-in-square guarantees used for rational angle pairs.

pub mod certify;
pub mod lattice;
pub mod torus;

pub use certify::{exhaustive_hit, rational_route, square_always_hit, HitBranch, HitCertificate, RationalRoute};
pub use lattice::{
    bender_guarantee, gauss_reduce, minimax_horizontal_gap, short_vector_bound, LatticeBasis2, LgLattice, SuccessiveMinima, Vec2,
};
pub use torus::{
    apply_s, apply_tau, crt_solve, empty_square_center, empty_square_witness, is_exceptional_pair, multiples_mod1, TorusPointSet,
    TorusSquare,
};
