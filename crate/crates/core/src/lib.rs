//! Exact symmetric bilinear forms attached to pointed rational functions.
//!
//! For a rational function `F = f/g` with `f` monic, `gcd(f, g) = 1` and
//! `deg f > deg g`, this crate builds the Bezout, Hankel, Newton and
//! Vandermonde matrices, the change-of-basis matrices relating them, the
//! residue pairing on `k[x]/(f)`, Grothendieck-Witt invariants of the
//! resulting forms, Cauchy indices and the unstable pair `(w, d)`.
//!
//! All arithmetic is exact. The algorithms are generic over [`Scalar`]; the
//! aliases below name the concrete fields.

pub mod bezforms;
pub mod degree;
pub mod error;
pub mod field;
pub mod gw;
pub mod json;
pub mod matrix;
pub mod parse;
pub mod poly;
pub mod ratmap;
pub mod residue;

pub use error::{Error, Result};
pub use field::{Ext, Fp, Scalar, Sign, SquareClass};
pub use matrix::Matrix;
pub use poly::{Polynomial, SplitData};
pub use ratmap::PointedRationalFunction;

/// Arbitrary-precision rationals.
pub type Rational = num_rational::BigRational;
/// Simple extension of the rationals, `Q[t]/(m)`.
pub type QExt = Ext<Rational>;
/// Simple extension of a prime field, `F_p[t]/(m)`.
pub type FpExt = Ext<Fp>;

pub type QPoly = Polynomial<Rational>;
pub type FpPoly = Polynomial<Fp>;
pub type QExtPoly = Polynomial<QExt>;
pub type FpExtPoly = Polynomial<FpExt>;

pub type QMatrix = Matrix<Rational>;
pub type QMap = PointedRationalFunction<Rational>;
pub type FpMap = PointedRationalFunction<Fp>;
pub type QExtMap = PointedRationalFunction<QExt>;
pub type FpExtMap = PointedRationalFunction<FpExt>;
