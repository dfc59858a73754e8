//! Exact numeric substrate: rationals, intervals, polynomials and algebraic roots.

pub mod cyclotomic;
pub mod interval;
pub mod poly;
pub mod rational;
pub mod roots;
pub mod trig;

pub use interval::{ComplexBox, Interval, IntervalReport};
pub use poly::RatPoly;
pub use rational::{int, parse_rational, rat, Rational};
pub use roots::AlgebraicRoot;
