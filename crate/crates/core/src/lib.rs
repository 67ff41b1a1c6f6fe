//! Pivotal decompositions of functions on finite domains.
//!
//! A function `f: X^n -> Y` is *Π-decomposable* when every value can be
//! recovered from a pivot coordinate and the two cofactors obtained by
//! setting that coordinate to the distinguished elements `1` and `0`:
//!
//! ```text
//! f(x) = Π(x_k, f(x_k^1), f(x_k^0))      for all x and k
//! ```
//!
//! Shannon expansion is the Boolean case with `Π = if-then-else`. The crate
//! checks and synthesizes such decompositions for Boolean, rational and
//! lattice-valued tables ([`pivotal`]), provides the multilinear and Lovász
//! extensions of pseudo-Boolean functions ([`extensions`]), lattice
//! polynomials and Sugeno integrals ([`lattice`]), the sixteen classes of
//! Boolean functions determined by their unary sections ([`classes`]), and
//! reduced ordered decision diagrams ([`diagram`]).
//!
//! ```
//! use pivotal::{check_decomposition, synthesize_pivotal, BoolTable, Ite};
//!
//! let xor = BoolTable::boolean(2, |x| x[0] != x[1]).unwrap();
//! assert!(check_decomposition(&xor, &Ite).unwrap().holds);
//! let pi = synthesize_pivotal(&xor).unwrap();
//! assert_eq!(pi.get(1, &true, &false), Some(&true));
//! ```
//!
//! Library argument indices are 0-based.

pub mod classes;
pub mod diagram;
pub mod error;
pub mod extensions;
pub mod io;
pub mod lattice;
pub mod pivotal;
pub mod scalar;
pub mod sort;
pub mod table;

pub use classes::{
    boolean_delta, boolean_partial, gamma_membership, minimal_um_class, um_algebra, um_closed_form, um_membership,
    AlgebraOp, ClassId, UnaryBool, VSet,
};
pub use diagram::{Diagram, Node, Rule};
pub use error::{Error, Result};
pub use extensions::{monotone_witness, sop_form, LovaszForm, MultilinearForm, Orientation, OrientationWitness};
pub use lattice::{
    is_lattice_polynomial, qlp_check, FiniteLattice, LatticeError, LatticePolynomial, LatticeSpec, Order, TotalOrder,
};
pub use pivotal::{
    check_componentwise, check_decomposition, cofactor_relation, monotone_restrict, synthesize_componentwise,
    synthesize_pivotal, CofactorRelation, DecompositionReport, Extensional, Ite, Median, MleAffine, PhiMedian,
    Pivotal, TNorm,
};
pub use scalar::{Rational, Scalar};
pub use sort::{Elem, Sort, Value};
pub use table::{EquivalenceWitness, FunctionTable, Point};

/// Boolean-valued table.
pub type BoolTable = FunctionTable<bool>;
/// Rational-valued table (pseudo-Boolean on the Boolean sort, or sampled
/// on a grid).
pub type RatTable = FunctionTable<Rational>;
/// Table whose values are elements of a chain or lattice.
pub type LatTable = FunctionTable<Elem>;
pub type MultilinearFormQ = MultilinearForm<Rational>;
pub type LovaszFormQ = LovaszForm<Rational>;
