//! Shifted Popov approximant bases of univariate polynomial matrices over a
//! prime field.
//!
//! Given `F` in `K[X]^(m x n)`, orders `d` and a shift `s`, the approximants
//! are the row vectors `p` with `p * F = 0 mod X^d` (column-wise). They form
//! a free module of rank `m`; [`popov_appbasis`] returns its unique
//! `s`-Popov basis.
//!
//! ```
//! use appbas::{popov_appbasis, Field, PolyMat};
//!
//! let f = Field::new(7).unwrap();
//! let m = PolyMat::from_i64(f, &[vec![vec![1]], vec![vec![1, 1]]]);
//! let p = popov_appbasis(&[2], &m, &[0, 0]).unwrap();
//! assert_eq!(p.matrix, PolyMat::from_i64(f, &[vec![vec![1, 1], vec![6]], vec![vec![1], vec![6, 1]]]));
//! ```

#![allow(clippy::needless_range_loop)]

pub mod basecase;
pub mod coldim;
pub mod error;
pub mod field;
pub mod forms;
pub mod knowndeg;
pub mod linearize;
pub mod lsp;
pub mod mat;
pub mod ntt;
pub mod oracle;
pub mod pmbasis;
pub mod poly;
pub mod polymat;
pub mod random;
pub mod residual;
pub mod solver;
pub mod unbalanced;

pub use basecase::mbasis1;
pub use coldim::{reduce_coldim, ColDimReduction};
pub use error::{Error, Result};
pub use field::{Field, FieldElem, DEFAULT_MODULUS};
pub use forms::{check_form, pivot_profile, BasisResult, Form, PivotProfile};
pub use knowndeg::known_deg_appbasis;
pub use mat::Mat;
pub use oracle::{canonical_basis, iterative_appbasis, matmul_embed, verify_basis, VerifyReport};
pub use pmbasis::{pm_basis, popov_pm_basis};
pub use poly::Poly;
pub use polymat::{MulBackend, PolyMat};
pub use residual::{residual, ResidualStrategy};
pub use solver::popov_appbasis;
pub use unbalanced::{shift_around_max, shift_around_min};
