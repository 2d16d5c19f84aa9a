//! Exact symbolic computations for singular holomorphic webs and
//! foliations on complex surfaces.

pub mod error;
pub mod foliation;
pub mod poly;
pub mod projective;
pub mod segre;
pub mod web;

pub use error::{Error, Result};

// Guide chapters are compiled and run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/webs.md")]
    mod webs {}
    #[doc = include_str!("../../../book/src/foliations.md")]
    mod foliations {}
    #[doc = include_str!("../../../book/src/segre.md")]
    mod segre {}
    #[doc = include_str!("../../../book/src/projective.md")]
    mod projective {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
