//! Exact commutative algebra for blowups of surfaces along Artinian centers.
//!
//! The crate is organised bottom-up:
//!
//! - [`poly`]: sparse polynomials over `Q` with lex, grevlex and elimination orders.
//! - [`groebner`]: Buchberger's algorithm and ideal arithmetic built on it.
//! - [`modmat`]: polynomial matrices, syzygies, free resolutions, Ext and Fitting ideals.
//! - [`hilbert`]: Hilbert series, Artinian length and Hilbert–Samuel multiplicity.
//! - [`blowup`]: Rees algebras, special fibers over `t = 0`, charts and components.
//! - [`pipeline`]: from a singularity module to the degenerate fiber report.
//! - [`frontend`]: the scripting language, interpreter and report rendering.

pub mod blowup;
pub mod error;
pub mod frontend;
pub mod groebner;
pub mod hilbert;
pub mod limits;
pub mod modmat;
pub mod pipeline;
pub mod poly;

pub use error::{AlgebraError, Result};
pub use groebner::Ideal;
pub use limits::Limits;
pub use modmat::{FreeResolution, ModulePresentation, PolyMatrix};
pub use poly::{Coefficient, Monomial, MonomialOrder, Polynomial, RingContext};
