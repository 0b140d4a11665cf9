pub mod asym;
pub mod cli;
pub mod daha_deformed;
pub mod daha_finite;
pub mod ddpa;
pub mod error;
pub mod field;
pub mod pbullet_phi;
pub mod ops;
pub mod polyring;
pub mod suite;
pub mod symfunc;

pub use error::{Error, Result};
pub use field::{Int, QtPoly, QtScalar};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/finite.md")]
    mod finite {}
    #[doc = include_str!("../../../book/src/stable.md")]
    mod stable {}
    #[doc = include_str!("../../../book/src/symfunc.md")]
    mod symfunc {}
    #[doc = include_str!("../../../book/src/dyck.md")]
    mod dyck {}
    #[doc = include_str!("../../../book/src/suites.md")]
    mod suites {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
