//! Pivotal functions and the decomposability engine.
//!
//! A function `f: X^n -> Y` is Π-decomposable when
//! `f(x) = Π(x_k, f(x_k^1), f(x_k^0))` for every point `x` and every
//! argument `k`. This module checks that identity for built-in and
//! extensional pivotal functions, synthesizes the (unique on `X × R_f`)
//! extensional Π when one exists, and does the same per argument for
//! componentwise decompositions.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Debug;

use crate::error::{Error, Result};
use crate::lattice::Order;
use crate::scalar::{Rational, Scalar};
use crate::sort::{Elem, Sort, Value};
use crate::table::{FunctionTable, Point};

/// A partial map `Π: D ⊆ X × Y² -> Y`.
pub trait Pivotal<Y> {
    /// `None` when `(p, u, v)` lies outside the domain of Π.
    fn apply(&self, sort: &Sort, p: Elem, u: &Y, v: &Y) -> Option<Y>;

    /// Short family name used in reports.
    fn name(&self) -> String;
}

impl<Y, P: Pivotal<Y> + ?Sized> Pivotal<Y> for &P {
    fn apply(&self, sort: &Sort, p: Elem, u: &Y, v: &Y) -> Option<Y> {
        (**self).apply(sort, p, u, v)
    }
    fn name(&self) -> String {
        (**self).name()
    }
}

impl<Y, P: Pivotal<Y> + ?Sized> Pivotal<Y> for Box<P> {
    fn apply(&self, sort: &Sort, p: Elem, u: &Y, v: &Y) -> Option<Y> {
        (**self).apply(sort, p, u, v)
    }
    fn name(&self) -> String {
        (**self).name()
    }
}

/// If-then-else: `Π(1, u, v) = u`, `Π(0, u, v) = v`, undefined elsewhere.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Ite;

impl<Y: Clone> Pivotal<Y> for Ite {
    fn apply(&self, sort: &Sort, p: Elem, u: &Y, v: &Y) -> Option<Y> {
        if p == sort.one() {
            Some(u.clone())
        } else if p == sort.zero() {
            Some(v.clone())
        } else {
            None
        }
    }

    fn name(&self) -> String {
        "ite".into()
    }
}

/// Affine interpolation `Π(p, u, v) = p u + (1 - p) v` on sorts with
/// rational coordinates.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MleAffine;

impl MleAffine {
    pub fn eval<T: Scalar>(p: &T, u: &T, v: &T) -> T {
        p.clone() * u.clone() + (T::one() - p.clone()) * v.clone()
    }
}

impl Pivotal<Rational> for MleAffine {
    fn apply(&self, sort: &Sort, p: Elem, u: &Rational, v: &Rational) -> Option<Rational> {
        sort.coordinate(p).map(|p| Self::eval(&p, u, v))
    }

    fn name(&self) -> String {
        "mle-affine".into()
    }
}

/// `Π(p, u, v) = med(p, u, v)`, with `p` embedded into the codomain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Median<O> {
    order: O,
}

impl<O> Median<O> {
    pub fn new(order: O) -> Self {
        Median { order }
    }
}

impl<Y: Value, O: Order<Y>> Pivotal<Y> for Median<O> {
    fn apply(&self, sort: &Sort, p: Elem, u: &Y, v: &Y) -> Option<Y> {
        Y::embed(sort, p).map(|p| self.order.median(&p, u, v))
    }

    fn name(&self) -> String {
        "median".into()
    }
}

/// `Π(p, u, v) = med(φ(p), u, v)` for a unary map `φ: X -> Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiMedian<Y, O> {
    phi: Vec<Y>,
    order: O,
}

impl<Y, O> PhiMedian<Y, O> {
    pub fn new(phi: Vec<Y>, order: O) -> Self {
        PhiMedian { phi, order }
    }

    pub fn phi(&self) -> &[Y] {
        &self.phi
    }
}

impl<Y: Value, O: Order<Y>> Pivotal<Y> for PhiMedian<Y, O> {
    fn apply(&self, _sort: &Sort, p: Elem, u: &Y, v: &Y) -> Option<Y> {
        self.phi.get(p).map(|phi| self.order.median(phi, u, v))
    }

    fn name(&self) -> String {
        "qlp".into()
    }
}

/// A t-norm on a finite chain, with `Π(p, u, v) = T(p, u)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TNorm {
    size: usize,
    table: Vec<Elem>,
}

impl TNorm {
    /// Validates symmetry, monotonicity, associativity and the unit law
    /// `T(1, x) = x` on the chain `0 < 1 < ... < size - 1`.
    pub fn new(size: usize, table: Vec<Elem>) -> Result<Self> {
        if size < 2 {
            return Err(Error::InvalidFamily("t-norm chain needs two elements".into()));
        }
        if table.len() != size * size {
            return Err(Error::LengthMismatch {
                expected: size * size,
                found: table.len(),
            });
        }
        if let Some(&v) = table.iter().find(|&&v| v >= size) {
            return Err(Error::ForeignElement { elem: v, size });
        }
        let t = |a: usize, b: usize| table[a * size + b];
        let top = size - 1;
        for a in 0..size {
            if t(top, a) != a {
                return Err(Error::InvalidFamily(format!("unit law fails: T(1, {a}) = {}", t(top, a))));
            }
            for b in 0..size {
                if t(a, b) != t(b, a) {
                    return Err(Error::InvalidFamily(format!("not symmetric at ({a}, {b})")));
                }
                if a + 1 < size && t(a, b) > t(a + 1, b) {
                    return Err(Error::InvalidFamily(format!(
                        "not nondecreasing at ({a}, {b}) -> ({}, {b})",
                        a + 1
                    )));
                }
                for c in 0..size {
                    if t(t(a, b), c) != t(a, t(b, c)) {
                        return Err(Error::InvalidFamily(format!(
                            "not associative at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(TNorm { size, table })
    }

    /// `T = min`.
    pub fn minimum(size: usize) -> Result<Self> {
        Self::new(size, (0..size * size).map(|i| (i / size).min(i % size)).collect())
    }

    /// `T(a, b) = max(0, a + b - 1)` on the evenly spaced chain.
    pub fn lukasiewicz(size: usize) -> Result<Self> {
        let top = size.saturating_sub(1);
        Self::new(
            size,
            (0..size * size)
                .map(|i| (i / size + i % size).saturating_sub(top))
                .collect(),
        )
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn table(&self) -> &[Elem] {
        &self.table
    }

    pub fn eval(&self, a: Elem, b: Elem) -> Elem {
        self.table[a * self.size + b]
    }

    /// `T` as a binary function table on its chain.
    pub fn to_function(&self) -> FunctionTable<Elem> {
        FunctionTable::new(
            Sort::chain(self.size).expect("validated size"),
            2,
            self.table.clone(),
        )
        .expect("square table")
    }
}

impl Pivotal<Elem> for TNorm {
    fn apply(&self, _sort: &Sort, p: Elem, u: &Elem, _v: &Elem) -> Option<Elem> {
        (p < self.size && *u < self.size).then(|| self.eval(p, *u))
    }

    fn name(&self) -> String {
        "tnorm".into()
    }
}

/// `Π'(p, u, v) = Π(p, u ∨ v, u ∧ v)` over a totally ordered codomain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonotoneRestrict<P, O> {
    inner: P,
    order: O,
}

/// Wraps `pi` so that cofactor pairs are first sorted into (max, min).
pub fn monotone_restrict<Y, P, O>(pi: P, order: O) -> Result<MonotoneRestrict<P, O>>
where
    P: Pivotal<Y>,
    O: Order<Y>,
{
    if !order.is_total() {
        return Err(Error::NotTotallyOrdered);
    }
    Ok(MonotoneRestrict { inner: pi, order })
}

impl<Y, P: Pivotal<Y>, O: Order<Y>> Pivotal<Y> for MonotoneRestrict<P, O> {
    fn apply(&self, sort: &Sort, p: Elem, u: &Y, v: &Y) -> Option<Y> {
        let hi = self.order.join(u, v);
        let lo = self.order.meet(u, v);
        self.inner.apply(sort, p, &hi, &lo)
    }

    fn name(&self) -> String {
        format!("monotone({})", self.inner.name())
    }
}

/// An explicit table of Π over a finite domain `D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extensional<Y> {
    entries: BTreeMap<(Elem, Y, Y), Y>,
}

impl<Y: Value> Extensional<Y> {
    pub fn new(entries: BTreeMap<(Elem, Y, Y), Y>) -> Self {
        Extensional { entries }
    }

    pub fn entries(&self) -> &BTreeMap<(Elem, Y, Y), Y> {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, p: Elem, u: &Y, v: &Y) -> Option<&Y> {
        self.entries.get(&(p, u.clone(), v.clone()))
    }

    /// The cofactor pairs `(u, v)` appearing in the domain.
    pub fn pairs(&self) -> BTreeSet<(Y, Y)> {
        self.entries.keys().map(|(_, u, v)| (u.clone(), v.clone())).collect()
    }
}

impl<Y: Value> Pivotal<Y> for Extensional<Y> {
    fn apply(&self, _sort: &Sort, p: Elem, u: &Y, v: &Y) -> Option<Y> {
        self.get(p, u, v).cloned()
    }

    fn name(&self) -> String {
        "extensional".into()
    }
}

/// `R_f` together with its per-argument parts `R_f^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CofactorRelation<Y> {
    pub pairs: BTreeSet<(Y, Y)>,
    pub per_argument: Vec<BTreeSet<(Y, Y)>>,
}

pub fn cofactor_relation<Y: Value>(f: &FunctionTable<Y>) -> CofactorRelation<Y> {
    let per_argument: Vec<BTreeSet<(Y, Y)>> = (0..f.arity())
        .map(|k| {
            (0..f.len())
                .map(|i| {
                    let (u, v) = f.cofactor_pair(i, k);
                    (u.clone(), v.clone())
                })
                .collect()
        })
        .collect();
    let pairs = per_argument.iter().flatten().cloned().collect();
    CofactorRelation {
        pairs,
        per_argument,
    }
}

/// Result of checking a decomposition identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionReport {
    pub holds: bool,
    /// Every `(x, k)` at which the identity fails, in index order.
    pub violations: Vec<(Point, usize)>,
    /// Set when the domain is a sampled grid: a positive answer then only
    /// certifies the grid points.
    pub grid_verified: bool,
}

fn check_argument<Y: Value, P: Pivotal<Y>>(
    f: &FunctionTable<Y>,
    k: usize,
    pi: &P,
    violations: &mut Vec<(Point, usize)>,
) -> Result<()> {
    let sort = f.sort();
    for i in 0..f.len() {
        let (u, v) = f.cofactor_pair(i, k);
        let x = f.point_at(i);
        let Some(w) = pi.apply(sort, x[k], u, v) else {
            return Err(Error::DomainNotCovered {
                triple: format!("({}, {u:?}, {v:?})", sort.label(x[k])),
                point: x,
                pivot: k,
            });
        };
        if &w != f.value_at(i) {
            violations.push((x, k));
        }
    }
    Ok(())
}

fn finish(f_sort: &Sort, mut violations: Vec<(Point, usize)>) -> DecompositionReport {
    violations.sort();
    DecompositionReport {
        holds: violations.is_empty(),
        violations,
        grid_verified: matches!(f_sort, Sort::Grid(_)),
    }
}

/// Checks `f(x) = Π(x_k, f(x_k^1), f(x_k^0))` at every point and pivot.
/// Fails if Π is undefined somewhere on `X × R_f`.
pub fn check_decomposition<Y: Value, P: Pivotal<Y>>(
    f: &FunctionTable<Y>,
    pi: &P,
) -> Result<DecompositionReport> {
    let mut violations = Vec::new();
    for k in 0..f.arity() {
        check_argument(f, k, pi, &mut violations)?;
    }
    Ok(finish(f.sort(), violations))
}

/// Checks `f(x) = Π_k(x_k, f(x_k^1), f(x_k^0))` with one pivotal function
/// per argument.
pub fn check_componentwise<Y: Value, P: Pivotal<Y>>(
    f: &FunctionTable<Y>,
    pis: &[P],
) -> Result<DecompositionReport> {
    if pis.len() != f.arity() {
        return Err(Error::ArityMismatch {
            expected: f.arity(),
            found: pis.len(),
        });
    }
    let mut violations = Vec::new();
    for (k, pi) in pis.iter().enumerate() {
        check_argument(f, k, pi, &mut violations)?;
    }
    Ok(finish(f.sort(), violations))
}

/// One side of a synthesis conflict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Occurrence<Y> {
    pub point: Point,
    pub pivot: usize,
    pub value: Y,
}

/// Two points and pivots sharing the key `(x_k, f(x_k^1), f(x_k^0))` while
/// `f` takes different values there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conflict<Y> {
    pub key: (Elem, Y, Y),
    pub first: Occurrence<Y>,
    pub second: Occurrence<Y>,
}

type Slots<Y> = BTreeMap<(Elem, Y, Y), (Y, Point, usize)>;

fn record<Y: Value>(
    f: &FunctionTable<Y>,
    slots: &mut Slots<Y>,
    i: usize,
    k: usize,
) -> Option<Conflict<Y>> {
    let (u, v) = f.cofactor_pair(i, k);
    let x = f.point_at(i);
    let key = (x[k], u.clone(), v.clone());
    let value = f.value_at(i);
    match slots.get(&key) {
        None => {
            slots.insert(key, (value.clone(), x, k));
            None
        }
        Some((w, _, _)) if w == value => None,
        Some((w, y, j)) => Some(Conflict {
            first: Occurrence {
                point: y.clone(),
                pivot: *j,
                value: w.clone(),
            },
            second: Occurrence {
                point: x,
                pivot: k,
                value: value.clone(),
            },
            key,
        }),
    }
}

fn into_extensional<Y: Value>(slots: Slots<Y>) -> Extensional<Y> {
    Extensional::new(slots.into_iter().map(|(key, (w, _, _))| (key, w)).collect())
}

/// Builds Π on exactly `X × R_f` by reading `Π(x_k, f(x_k^1), f(x_k^0)) :=
/// f(x)` over all points (in index order) and arguments. Returns the first
/// conflicting pair when no such Π exists.
pub fn synthesize_pivotal<Y: Value>(
    f: &FunctionTable<Y>,
) -> std::result::Result<Extensional<Y>, Conflict<Y>> {
    let mut slots = Slots::new();
    for i in 0..f.len() {
        for k in 0..f.arity() {
            if let Some(conflict) = record(f, &mut slots, i, k) {
                return Err(conflict);
            }
        }
    }
    Ok(into_extensional(slots))
}

/// Failure of componentwise synthesis: the first conflict of every failing
/// argument.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentwiseConflict<Y> {
    pub conflicts: Vec<Conflict<Y>>,
}

impl<Y> ComponentwiseConflict<Y> {
    pub fn failing_arguments(&self) -> Vec<usize> {
        self.conflicts.iter().map(|c| c.first.pivot).collect()
    }
}

/// Per-argument version of [`synthesize_pivotal`]: returns `(Π_1, ..., Π_n)`
/// with `Π_k` defined on `X × R_f^k`.
pub fn synthesize_componentwise<Y: Value>(
    f: &FunctionTable<Y>,
) -> std::result::Result<Vec<Extensional<Y>>, ComponentwiseConflict<Y>> {
    let mut pis = Vec::with_capacity(f.arity());
    let mut conflicts = Vec::new();
    for k in 0..f.arity() {
        let mut slots = Slots::new();
        let found = (0..f.len()).find_map(|i| record(f, &mut slots, i, k));
        match found {
            Some(c) => conflicts.push(c),
            None => pis.push(into_extensional(slots)),
        }
    }
    if conflicts.is_empty() {
        Ok(pis)
    } else {
        Err(ComponentwiseConflict { conflicts })
    }
}

/// Whether `a` and `b` witness the failure of a componentwise decomposition
/// in argument `k`: equal cofactor pairs and pivot values, different values
/// of `f`.
pub fn is_conflict_pair<Y: Value>(f: &FunctionTable<Y>, k: usize, a: &[Elem], b: &[Elem]) -> Result<bool> {
    let ia = f.index_of(a)?;
    let ib = f.index_of(b)?;
    if k >= f.arity() {
        return Err(Error::IndexOutOfRange {
            index: k,
            arity: f.arity(),
        });
    }
    Ok(a[k] == b[k] && f.cofactor_pair(ia, k) == f.cofactor_pair(ib, k) && f.value_at(ia) != f.value_at(ib))
}

/// All points sharing one key `(p, u, v)` for argument `k`, grouped by the
/// value `f` takes there. Only keys with at least two values are listed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConflictClass<Y> {
    pub pivot: usize,
    pub key: (Elem, Y, Y),
    pub groups: BTreeMap<Y, Vec<Point>>,
}

pub fn conflict_classes<Y: Value>(f: &FunctionTable<Y>, k: usize) -> Result<Vec<ConflictClass<Y>>> {
    if k >= f.arity() {
        return Err(Error::IndexOutOfRange {
            index: k,
            arity: f.arity(),
        });
    }
    let mut keyed: BTreeMap<(Elem, Y, Y), BTreeMap<Y, Vec<Point>>> = BTreeMap::new();
    for i in 0..f.len() {
        let (u, v) = f.cofactor_pair(i, k);
        let x = f.point_at(i);
        keyed
            .entry((x[k], u.clone(), v.clone()))
            .or_default()
            .entry(f.value_at(i).clone())
            .or_default()
            .push(x);
    }
    Ok(keyed
        .into_iter()
        .filter(|(_, groups)| groups.len() > 1)
        .map(|(key, groups)| ConflictClass { pivot: k, key, groups })
        .collect())
}
