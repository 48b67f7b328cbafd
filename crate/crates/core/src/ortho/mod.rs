//! Orthogonal polynomials from the three-term recursion
//! `Q_{n+1} = (x - c_n) Q_n - λ_n Q_{n-1}`, `Q_{-1} = 0`, `Q_0 = 1`,
//! together with their moment functional.

mod basis;
mod expand;
mod hankel;
mod moments;
pub mod special;
mod spec;

pub use basis::{generate_basis, OrthoBasis};
pub use expand::{expand_in_basis, recursion_coeffs, RecursionCoeffs};
pub use hankel::{
    basis_inverse_check, bordered_moment_det, hankel_dets, hankel_positivity, qn_via_determinant, HankelMatrix,
    HankelVariant,
    HankelVerdict,
};
pub use moments::{scalar_product, stieltjes_moments, stieltjes_moments_with, MomentSeq};
pub use spec::CoeffSpec;
