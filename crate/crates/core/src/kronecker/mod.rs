//! Angles of dominating roots, integer relations among them, and whether the
//! orbit `n (xi1, xi2) mod 1` meets every quarter square.

pub mod angle;

pub use angle::{angle_of_root, AngleDescriptor, AngleKind, AngleReport};
pub mod relation;

pub use relation::{classify_pair, Certainty, RelationCase, RelationReport, DEFAULT_RELATION_BOUND};
pub mod hits;

pub use hits::{half_angle_hit, hits_square, quarter_membership, HalfAngleHit, HitOutcome, HitVerdict};
