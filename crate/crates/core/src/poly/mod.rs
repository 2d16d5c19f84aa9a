//! Exact arithmetic kernel: Gaussian rationals, sparse polynomials,
//! rational functions, resultants, GCDs and residues.

mod gaussian;
pub mod gcd;
mod multipoly;
mod parse;
mod rational;
pub mod residue;
pub mod resultant;
pub mod roots;

pub use gaussian::GaussianRational;
pub use gcd::{divides_upto_unit, gcd, gcd_all, radical, squarefree_part, squarefree_split};
pub use multipoly::{unify, vars_of, Monomial, MultiPoly, Vars};
pub use parse::{parse_expr, parse_number, parse_poly, parse_rational, parse_with_vars, Parsed};
pub use rational::{substitute, RationalFunction};
pub use residue::residue_at;
pub use resultant::{discriminant, resultant, sylvester_matrix};
pub use roots::distinct_roots;
