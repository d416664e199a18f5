//! Exact multivariate polynomials over `F_p` and `Q` in the matrix
//! variables `x[i,j]`.

mod field;
mod monomial;
mod parse;
mod poly;
mod table;

pub use field::{Coefficients, Field, PrimeField, Rationals};
pub use monomial::{mono_cmp, Monomial, MonomialOrder, OrderKind};
pub use parse::{parse_poly, print_monomial, print_poly};
pub use poly::{leading_term, poly_arith, ArithOp, PolyRing, Polynomial};
pub use table::{MatrixKind, VariableTable};
