//! Finitely presented modules over a polynomial ring: syzygies, free
//! resolutions, `Ext^i(-, R)` and Fitting ideals.
//!
//! Module Gröbner bases share the ideal kernel, run over `R^k` with a
//! position-over-term order.

mod matrix;
mod module;

pub use matrix::PolyMatrix;
#[cfg(test)]
pub(crate) use matrix::combinations;
pub use module::{
    ext_module, fitting_ideal, free_resolution, is_surjective, kernel_presentation, subquotient, syzygies,
    FreeResolution, ModulePresentation, SubmoduleBasis,
};
