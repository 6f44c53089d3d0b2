//! Exact computer algebra for lowest-energy representations of the
//! Virasoro algebra.
//!
//! The crate certifies, by exact arithmetic over `Q(i)[alpha]`, the
//! algebraic facts behind restricting such representations to the
//! subalgebras of vector fields vanishing at finitely many points of the
//! circle:
//!
//! - [`coeff`]: rationals, Gaussian rationals, and polynomials in a formal
//!   Hermitian parameter `alpha`
//! - [`liealg`]: the Virasoro bracket, the involution `theta`, the
//!   point-stabilizer subalgebras and their rescaling endomorphisms
//! - [`verma`]: partition-indexed lowest-energy modules, Gram matrices,
//!   exact ranks and positivity tests, admissibility of `(c, h)`
//! - [`kreduce`]: the difference-generator calculus on modules: universal
//!   scalar products, spanning certificates, eigenvector checks
//! - [`fock`]: the charged oscillator space, the quadratic Virasoro
//!   realization at central charge one, the `alpha`-twisted generators and
//!   the two-lowest-vector analysis they produce
//! - [`report`]: deterministic machine-readable pass/fail records

pub mod coeff;
pub mod fock;
pub mod kreduce;
pub mod liealg;
pub mod linalg;
pub mod partitions;
pub mod report;
pub mod verma;

pub use coeff::{Gaussian, Rational, Scalar};
pub use partitions::Partition;
pub use report::{Report, Status};
