//! Finite bounded distributive lattices, the median, lattice polynomial
//! functions and quasi-polynomial checks.

use std::collections::HashMap;
use std::sync::Arc;

use thiserror::Error;

use crate::error::{Error, Result};
use crate::pivotal::{check_componentwise, check_decomposition, Median, PhiMedian};
use crate::sort::{Elem, Sort, Value};
use crate::table::{FunctionTable, Point};

/// Default cap on lattice size for exhaustive operations.
pub const DEFAULT_MAX_LATTICE_SIZE: usize = 16;

/// Meet, join and order on a value type.
pub trait Order<Y> {
    fn meet(&self, a: &Y, b: &Y) -> Y;
    fn join(&self, a: &Y, b: &Y) -> Y;
    fn leq(&self, a: &Y, b: &Y) -> bool;
    fn is_total(&self) -> bool;

    /// `(x ∧ y) ∨ (y ∧ z) ∨ (z ∧ x)`
    fn median(&self, x: &Y, y: &Y, z: &Y) -> Y {
        let xy = self.meet(x, y);
        let yz = self.meet(y, z);
        let zx = self.meet(z, x);
        self.join(&self.join(&xy, &yz), &zx)
    }
}

/// The order of an `Ord` type (Booleans, rationals, chain indices).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TotalOrder;

impl<Y: Ord + Clone> Order<Y> for TotalOrder {
    fn meet(&self, a: &Y, b: &Y) -> Y {
        a.min(b).clone()
    }

    fn join(&self, a: &Y, b: &Y) -> Y {
        a.max(b).clone()
    }

    fn leq(&self, a: &Y, b: &Y) -> bool {
        a <= b
    }

    fn is_total(&self) -> bool {
        true
    }
}

impl<Y, O: Order<Y>> Order<Y> for &O {
    fn meet(&self, a: &Y, b: &Y) -> Y {
        (**self).meet(a, b)
    }
    fn join(&self, a: &Y, b: &Y) -> Y {
        (**self).join(a, b)
    }
    fn leq(&self, a: &Y, b: &Y) -> bool {
        (**self).leq(a, b)
    }
    fn is_total(&self) -> bool {
        (**self).is_total()
    }
}

impl<Y, O: Order<Y>> Order<Y> for Arc<O> {
    fn meet(&self, a: &Y, b: &Y) -> Y {
        (**self).meet(a, b)
    }
    fn join(&self, a: &Y, b: &Y) -> Y {
        (**self).join(a, b)
    }
    fn leq(&self, a: &Y, b: &Y) -> bool {
        (**self).leq(a, b)
    }
    fn is_total(&self) -> bool {
        (**self).is_total()
    }
}

/// Reasons an order description fails to be a bounded distributive lattice.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("duplicate element name `{0}`")]
    DuplicateElement(String),
    #[error("lattice must have at least two elements")]
    TooSmall,
    #[error("{size} elements exceed the limit of {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("not a poset: `{0}` <= `{1}` and `{1}` <= `{0}`")]
    NotAntisymmetric(String, String),
    #[error("not a poset: `{0}` <= `{1}` <= `{2}` but not `{0}` <= `{2}`")]
    NotTransitive(String, String, String),
    #[error("unbounded: `{element}` is not between `{bottom}` and `{top}`")]
    Unbounded {
        element: String,
        bottom: String,
        top: String,
    },
    #[error("`{0}` and `{1}` have no meet")]
    MissingMeet(String, String),
    #[error("`{0}` and `{1}` have no join")]
    MissingJoin(String, String),
    #[error("not distributive: {0} ∧ ({1} ∨ {2}) differs from ({0} ∧ {1}) ∨ ({0} ∧ {2})")]
    NonDistributive(String, String, String),
    #[error("foreign element index {0}")]
    ForeignElement(Elem),
}

/// Raw order data, as read from a `.lat` file.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LatticeSpec {
    pub names: Vec<String>,
    pub bottom: String,
    pub top: String,
    /// Pairs `a <= b`; the reflexive closure is added automatically.
    pub leq: Vec<(String, String)>,
}

impl LatticeSpec {
    pub fn validate(&self) -> std::result::Result<FiniteLattice, LatticeError> {
        validate_lattice(self, DEFAULT_MAX_LATTICE_SIZE)
    }
}

/// A validated finite bounded distributive lattice.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteLattice {
    names: Vec<String>,
    leq: Vec<bool>,
    bottom: Elem,
    top: Elem,
    meet: Vec<Elem>,
    join: Vec<Elem>,
}

/// Checks the poset, bound, lattice and distributivity axioms in that
/// order and reports the first violation with a witness.
pub fn validate_lattice(
    spec: &LatticeSpec,
    limit: usize,
) -> std::result::Result<FiniteLattice, LatticeError> {
    let n = spec.names.len();
    if n < 2 {
        return Err(LatticeError::TooSmall);
    }
    if n > limit {
        return Err(LatticeError::TooLarge { size: n, limit });
    }
    let mut index = HashMap::new();
    for (i, name) in spec.names.iter().enumerate() {
        if index.insert(name.as_str(), i).is_some() {
            return Err(LatticeError::DuplicateElement(name.clone()));
        }
    }
    let lookup = |name: &str| {
        index
            .get(name)
            .copied()
            .ok_or_else(|| LatticeError::UnknownElement(name.to_string()))
    };
    let mut leq = vec![false; n * n];
    for i in 0..n {
        leq[i * n + i] = true;
    }
    for (a, b) in &spec.leq {
        leq[lookup(a)? * n + lookup(b)?] = true;
    }
    let bottom = lookup(&spec.bottom)?;
    let top = lookup(&spec.top)?;
    let name = |i: usize| spec.names[i].clone();

    for a in 0..n {
        for b in 0..n {
            if a != b && leq[a * n + b] && leq[b * n + a] {
                return Err(LatticeError::NotAntisymmetric(name(a), name(b)));
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            if !leq[a * n + b] {
                continue;
            }
            for c in 0..n {
                if leq[b * n + c] && !leq[a * n + c] {
                    return Err(LatticeError::NotTransitive(name(a), name(b), name(c)));
                }
            }
        }
    }
    for x in 0..n {
        if !leq[bottom * n + x] || !leq[x * n + top] {
            return Err(LatticeError::Unbounded {
                element: name(x),
                bottom: name(bottom),
                top: name(top),
            });
        }
    }
    if bottom == top {
        return Err(LatticeError::TooSmall);
    }

    let mut meet = vec![0; n * n];
    let mut join = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            let lower: Vec<usize> = (0..n).filter(|&c| leq[c * n + a] && leq[c * n + b]).collect();
            let glb = lower
                .iter()
                .copied()
                .find(|&c| lower.iter().all(|&d| leq[d * n + c]))
                .ok_or_else(|| LatticeError::MissingMeet(name(a), name(b)))?;
            let upper: Vec<usize> = (0..n).filter(|&c| leq[a * n + c] && leq[b * n + c]).collect();
            let lub = upper
                .iter()
                .copied()
                .find(|&c| upper.iter().all(|&d| leq[c * n + d]))
                .ok_or_else(|| LatticeError::MissingJoin(name(a), name(b)))?;
            meet[a * n + b] = glb;
            join[a * n + b] = lub;
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = meet[x * n + join[y * n + z]];
                let rhs = join[meet[x * n + y] * n + meet[x * n + z]];
                if lhs != rhs {
                    return Err(LatticeError::NonDistributive(name(x), name(y), name(z)));
                }
            }
        }
    }
    Ok(FiniteLattice {
        names: spec.names.clone(),
        leq,
        bottom,
        top,
        meet,
        join,
    })
}

impl FiniteLattice {
    /// The chain `0 < ... < 1` with `m` elements, named as in
    /// [`Sort::label`].
    pub fn chain(m: usize) -> Self {
        assert!(m >= 2, "a chain needs two elements");
        let sort = Sort::Chain(m);
        let names: Vec<String> = (0..m).map(|e| sort.label(e)).collect();
        let leq = (0..m)
            .flat_map(|a| (a..m).map(move |b| (a, b)))
            .map(|(a, b)| (names[a].clone(), names[b].clone()))
            .collect();
        let spec = LatticeSpec {
            bottom: names[0].clone(),
            top: names[m - 1].clone(),
            names,
            leq,
        };
        validate_lattice(&spec, usize::MAX).expect("chains are distributive")
    }

    /// Componentwise product; element `(a, b)` is named `a.b`.
    pub fn product(left: &FiniteLattice, right: &FiniteLattice) -> Self {
        let (n, m) = (left.size(), right.size());
        let name = |i: usize| format!("{}.{}", left.names[i / m], right.names[i % m]);
        let names: Vec<String> = (0..n * m).map(name).collect();
        let mut leq = Vec::new();
        for i in 0..n * m {
            for j in 0..n * m {
                if left.leq(i / m, j / m) && right.leq(i % m, j % m) {
                    leq.push((names[i].clone(), names[j].clone()));
                }
            }
        }
        let spec = LatticeSpec {
            bottom: name(left.bottom * m + right.bottom),
            top: name(left.top * m + right.top),
            names,
            leq,
        };
        validate_lattice(&spec, usize::MAX).expect("products of distributive lattices")
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    pub fn name(&self, e: Elem) -> &str {
        &self.names[e]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<Elem> {
        self.names.iter().position(|n| n == name)
    }

    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.leq[a * self.size() + b]
    }

    pub fn meet_of(&self, a: Elem, b: Elem) -> Elem {
        self.meet[a * self.size() + b]
    }

    pub fn join_of(&self, a: Elem, b: Elem) -> Elem {
        self.join[a * self.size() + b]
    }

    pub fn is_chain(&self) -> bool {
        (0..self.size()).all(|a| (0..self.size()).all(|b| self.leq(a, b) || self.leq(b, a)))
    }

    fn check(&self, e: Elem) -> std::result::Result<(), LatticeError> {
        if e < self.size() {
            Ok(())
        } else {
            Err(LatticeError::ForeignElement(e))
        }
    }

    /// `med(p, u, v)`, rejecting foreign elements.
    pub fn checked_median(
        &self,
        p: Elem,
        u: Elem,
        v: Elem,
    ) -> std::result::Result<Elem, LatticeError> {
        self.check(p)?;
        self.check(u)?;
        self.check(v)?;
        Ok(Order::median(self, &p, &u, &v))
    }

    /// Covering pairs `(a, b)` with `a < b` and nothing strictly between.
    pub fn covers(&self) -> Vec<(Elem, Elem)> {
        let n = self.size();
        let lt = |a: Elem, b: Elem| a != b && self.leq(a, b);
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if lt(a, b) && !(0..n).any(|c| lt(a, c) && lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

impl Order<Elem> for FiniteLattice {
    fn meet(&self, a: &Elem, b: &Elem) -> Elem {
        self.meet_of(*a, *b)
    }

    fn join(&self, a: &Elem, b: &Elem) -> Elem {
        self.join_of(*a, *b)
    }

    fn leq(&self, a: &Elem, b: &Elem) -> bool {
        FiniteLattice::leq(self, *a, *b)
    }

    fn is_total(&self) -> bool {
        self.is_chain()
    }
}

/// `f(x) = ⋁_S c(S) ∧ ⋀_{i∈S} x_i` with one coefficient per subset mask
/// (bit `i` stands for argument `i`). Absorption-equivalent maps may
/// describe the same function; compare tables, not coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePolynomial {
    lattice: Arc<FiniteLattice>,
    arity: usize,
    coefficients: Vec<Elem>,
}

impl LatticePolynomial {
    pub fn new(lattice: Arc<FiniteLattice>, arity: usize, coefficients: Vec<Elem>) -> Result<Self> {
        if arity == 0 {
            return Err(Error::ZeroArity);
        }
        if coefficients.len() != 1 << arity {
            return Err(Error::LengthMismatch {
                expected: 1 << arity,
                found: coefficients.len(),
            });
        }
        for &c in &coefficients {
            if c >= lattice.size() {
                return Err(Error::ForeignElement {
                    elem: c,
                    size: lattice.size(),
                });
            }
        }
        // order-preserving on single-element extensions suffices
        for s in 0..coefficients.len() {
            for i in 0..arity {
                let t = s | 1 << i;
                if t != s && !FiniteLattice::leq(&lattice, coefficients[s], coefficients[t]) {
                    return Err(Error::NotOrderPreserving { lower: s, upper: t });
                }
            }
        }
        Ok(LatticePolynomial {
            lattice,
            arity,
            coefficients,
        })
    }

    pub fn lattice(&self) -> &Arc<FiniteLattice> {
        &self.lattice
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn coefficients(&self) -> &[Elem] {
        &self.coefficients
    }

    pub fn coefficient(&self, mask: usize) -> Elem {
        self.coefficients[mask]
    }

    pub fn evaluate(&self, x: &[Elem]) -> Result<Elem> {
        if x.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: x.len(),
            });
        }
        let l = &self.lattice;
        for &e in x {
            if e >= l.size() {
                return Err(Error::ForeignElement {
                    elem: e,
                    size: l.size(),
                });
            }
        }
        let mut acc = l.bottom();
        for (mask, &c) in self.coefficients.iter().enumerate() {
            let term = (0..self.arity)
                .filter(|i| mask >> i & 1 == 1)
                .fold(c, |t, i| l.meet_of(t, x[i]));
            acc = l.join_of(acc, term);
        }
        Ok(acc)
    }

    pub fn sort(&self) -> Sort {
        Sort::Lattice(self.lattice.clone())
    }

    pub fn to_table(&self) -> FunctionTable<Elem> {
        FunctionTable::from_fn(self.sort(), self.arity, |x| {
            self.evaluate(x).expect("points of the lattice")
        })
        .expect("bounded arity")
    }

    /// Reflexive lattice polynomial, i.e. a discrete Sugeno integral.
    pub fn is_sugeno(&self) -> bool {
        (0..self.lattice.size()).all(|x| self.evaluate(&vec![x; self.arity]).ok() == Some(x))
    }
}

/// Recovers the DNF coefficients `f(1_S)` when `f` satisfies the median
/// decomposition `f(x) = med(x_k, f(x_k^1), f(x_k^0))` at every point and
/// pivot; `None` otherwise.
pub fn is_lattice_polynomial(f: &FunctionTable<Elem>) -> Result<Option<LatticePolynomial>> {
    let lattice = f
        .sort()
        .as_lattice()
        .ok_or_else(|| Error::SortMismatch("lattice polynomials need a lattice sort".into()))?;
    for &v in f.values() {
        f.sort().check(v)?;
    }
    let report = check_decomposition(f, &Median::new(lattice.clone()))?;
    if !report.holds {
        return Ok(None);
    }
    let n = f.arity();
    let sort = f.sort();
    let coefficients = (0..1usize << n)
        .map(|mask| {
            let x: Vec<Elem> = (0..n)
                .map(|i| if mask >> i & 1 == 1 { sort.one() } else { sort.zero() })
                .collect();
            *f.evaluate(&x).expect("vertex")
        })
        .collect();
    LatticePolynomial::new(lattice, n, coefficients).map(Some)
}

/// Outcome of a quasi-polynomial check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QlpReport {
    pub holds: bool,
    pub violations: Vec<(Point, usize)>,
}

/// Checks `f(x) = med(φ_k(x_k), f(x_k^1), f(x_k^0))` for every point and
/// argument, after validating `φ_k(x) = med(φ_k(x), φ_k(1), φ_k(0))`.
pub fn qlp_check<Y: Value, O: Order<Y> + Clone>(
    f: &FunctionTable<Y>,
    order: &O,
    phis: &[Vec<Y>],
) -> Result<QlpReport> {
    if phis.len() != f.arity() {
        return Err(Error::ArityMismatch {
            expected: f.arity(),
            found: phis.len(),
        });
    }
    let sort = f.sort();
    for (k, phi) in phis.iter().enumerate() {
        if phi.len() != sort.size() {
            return Err(Error::LengthMismatch {
                expected: sort.size(),
                found: phi.len(),
            });
        }
        let (hi, lo) = (&phi[sort.one()], &phi[sort.zero()]);
        if let Some(x) = (0..sort.size()).find(|&x| order.median(&phi[x], hi, lo) != phi[x]) {
            return Err(Error::PhiRange { index: k, at: x });
        }
    }
    let pis: Vec<PhiMedian<Y, O>> = phis
        .iter()
        .map(|phi| PhiMedian::new(phi.clone(), order.clone()))
        .collect();
    let report = check_componentwise(f, &pis)?;
    Ok(QlpReport {
        holds: report.holds,
        violations: report.violations,
    })
}

/// Single-map mode: every `φ_k` is the diagonal `p ↦ f(p, ..., p)`.
pub fn qlp_check_diagonal<Y: Value, O: Order<Y> + Clone>(
    f: &FunctionTable<Y>,
    order: &O,
) -> Result<QlpReport> {
    let n = f.arity();
    let phi: Vec<Y> = (0..f.sort().size())
        .map(|p| f.evaluate(&vec![p; n]).expect("diagonal").clone())
        .collect();
    qlp_check(f, order, &vec![phi; n])
}
