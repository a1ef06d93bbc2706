//! Truncated power series in one and two variables, rational-function
//! expansion, matrix-product convolution, substitution, square roots and a
//! multivariate constant-term engine.
//!
//! A bivariate series `f(u, v)` doubles as the infinite matrix with entries
//! `f|_{u^i v^j}`. Orders are always explicit and every read outside them
//! fails with [`Error::Truncation`](crate::Error::Truncation).

mod bi;
mod laurent;
mod ratfun;
mod uni;

pub use bi::BiSeries;
pub use laurent::{constant_term, LaurentMulti};
pub use ratfun::{Poly2, RatFun2};
pub use uni::USeries;
