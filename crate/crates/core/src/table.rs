//! Dense value tables of functions `f: X^n -> Y` over a finite sort `X`.
//!
//! Points are encoded as base-`|X|` integers with the first coordinate as
//! the most significant digit. All argument indices in this module are
//! 0-based.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};
use crate::sort::{Elem, Sort, Value};

/// A point of `X^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point(Vec<Elem>);

impl Point {
    pub fn new(coordinates: Vec<Elem>) -> Self {
        Point(coordinates)
    }

    pub fn into_inner(self) -> Vec<Elem> {
        self.0
    }

    /// `x_k^a`: the point with coordinate `k` replaced by `a`.
    pub fn substitute(&self, k: usize, a: Elem) -> Result<Point> {
        if k >= self.0.len() {
            return Err(Error::IndexOutOfRange {
                index: k,
                arity: self.0.len(),
            });
        }
        let mut coords = self.0.clone();
        coords[k] = a;
        Ok(Point(coords))
    }

    /// The point with coordinate `k` removed.
    pub fn drop_coordinate(&self, k: usize) -> Point {
        let mut coords = self.0.clone();
        coords.remove(k);
        Point(coords)
    }

    /// Renders the point with the labels of `sort`, e.g. `(1/2,1/2,1/2)`.
    pub fn display(&self, sort: &Sort) -> String {
        let labels: Vec<String> = self.0.iter().map(|&e| sort.label(e)).collect();
        format!("({})", labels.join(","))
    }
}

impl Deref for Point {
    type Target = [Elem];

    fn deref(&self) -> &[Elem] {
        &self.0
    }
}

impl From<Vec<Elem>> for Point {
    fn from(coords: Vec<Elem>) -> Self {
        Point(coords)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Odometer over `X^n` in index order.
#[derive(Clone, Debug)]
pub struct Points {
    size: usize,
    current: Option<Vec<Elem>>,
}

impl Points {
    pub fn new(size: usize, arity: usize) -> Self {
        Points {
            size,
            current: (size > 0).then(|| vec![0; arity]),
        }
    }
}

impl Iterator for Points {
    type Item = Point;

    fn next(&mut self) -> Option<Point> {
        let current = self.current.as_mut()?;
        let out = Point(current.clone());
        let mut i = current.len();
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            current[i] += 1;
            if current[i] < self.size {
                break;
            }
            current[i] = 0;
        }
        Some(out)
    }
}

/// Maps `σ: [m] -> [n]` and `μ: [n] -> [m]` with `f = g_σ` and `g = f_μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceWitness {
    pub sigma: Vec<usize>,
    pub mu: Vec<usize>,
}

impl EquivalenceWitness {
    /// Checks both identities pointwise.
    pub fn verify<Y: Value>(&self, f: &FunctionTable<Y>, g: &FunctionTable<Y>) -> bool {
        let forward = g.remap(&self.sigma, f.arity());
        let backward = f.remap(&self.mu, g.arity());
        matches!((forward, backward), (Ok(a), Ok(b)) if &a == f && &b == g)
    }
}

/// Exhaustive value table of `f: X^n -> Y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FunctionTable<Y> {
    sort: Sort,
    arity: usize,
    values: Vec<Y>,
}

pub(crate) fn table_len(size: usize, arity: usize) -> Result<usize> {
    u32::try_from(arity)
        .ok()
        .and_then(|a| size.checked_pow(a))
        .filter(|&len| len <= 1 << 28)
        .ok_or(Error::TooLarge { size, arity })
}

impl<Y: Value> FunctionTable<Y> {
    pub fn new(sort: Sort, arity: usize, values: Vec<Y>) -> Result<Self> {
        if arity == 0 {
            return Err(Error::ZeroArity);
        }
        let expected = table_len(sort.size(), arity)?;
        if values.len() != expected {
            return Err(Error::LengthMismatch {
                expected,
                found: values.len(),
            });
        }
        Ok(FunctionTable {
            sort,
            arity,
            values,
        })
    }

    /// Tabulates `f` over every point of `X^n`.
    pub fn from_fn(sort: Sort, arity: usize, mut f: impl FnMut(&[Elem]) -> Y) -> Result<Self> {
        if arity == 0 {
            return Err(Error::ZeroArity);
        }
        let len = table_len(sort.size(), arity)?;
        let mut values = Vec::with_capacity(len);
        for x in Points::new(sort.size(), arity) {
            values.push(f(&x));
        }
        Ok(FunctionTable {
            sort,
            arity,
            values,
        })
    }

    pub fn constant(sort: Sort, arity: usize, value: Y) -> Result<Self> {
        let len = table_len(sort.size(), arity)?;
        Self::new(sort, arity, vec![value; len])
    }

    pub fn sort(&self) -> &Sort {
        &self.sort
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn values(&self) -> &[Y] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    fn stride(&self, k: usize) -> usize {
        self.sort.size().pow((self.arity - 1 - k) as u32)
    }

    pub fn index_of(&self, x: &[Elem]) -> Result<usize> {
        if x.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: x.len(),
            });
        }
        let size = self.sort.size();
        let mut index = 0;
        for &e in x {
            self.sort.check(e)?;
            index = index * size + e;
        }
        Ok(index)
    }

    pub fn point_at(&self, mut index: usize) -> Point {
        let size = self.sort.size();
        let mut coords = vec![0; self.arity];
        for slot in coords.iter_mut().rev() {
            *slot = index % size;
            index /= size;
        }
        Point(coords)
    }

    pub fn points(&self) -> Points {
        Points::new(self.sort.size(), self.arity)
    }

    pub fn evaluate(&self, x: &[Elem]) -> Result<&Y> {
        Ok(&self.values[self.index_of(x)?])
    }

    pub fn value_at(&self, index: usize) -> &Y {
        &self.values[index]
    }

    fn check_index(&self, k: usize) -> Result<()> {
        if k < self.arity {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: k,
                arity: self.arity,
            })
        }
    }

    /// `f(x_k^a)` for the point stored at `index`.
    pub fn value_with(&self, index: usize, k: usize, a: Elem) -> &Y {
        let stride = self.stride(k);
        let digit = (index / stride) % self.sort.size();
        &self.values[index - digit * stride + a * stride]
    }

    /// The cofactor pair `(f(x_k^1), f(x_k^0))` at the point stored at `index`.
    pub fn cofactor_pair(&self, index: usize, k: usize) -> (&Y, &Y) {
        (
            self.value_with(index, k, self.sort.one()),
            self.value_with(index, k, self.sort.zero()),
        )
    }

    /// Fixes argument `k` to `a`. A unary table yields a unary constant
    /// table (its argument inessential) in place of a nullary one.
    pub fn cofactor(&self, k: usize, a: Elem) -> Result<Self> {
        self.check_index(k)?;
        self.sort.check(a)?;
        if self.arity == 1 {
            let v = self.values[a].clone();
            return Self::constant(self.sort.clone(), 1, v);
        }
        Self::from_fn(self.sort.clone(), self.arity - 1, |y| {
            let mut x = Vec::with_capacity(self.arity);
            x.extend_from_slice(&y[..k]);
            x.push(a);
            x.extend_from_slice(&y[k..]);
            self.values[self.index_of(&x).expect("in range")].clone()
        })
    }

    /// The `S`-section `f_S^a`, with the arguments of `S` taken in
    /// increasing order.
    pub fn section(&self, s: &[usize], a: &[Elem]) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::EmptyArgumentSet);
        }
        let base = self.index_of(a)?;
        let args: BTreeSet<usize> = s.iter().copied().collect();
        for &k in &args {
            self.check_index(k)?;
        }
        let args: Vec<usize> = args.into_iter().collect();
        Self::from_fn(self.sort.clone(), args.len(), |y| {
            let mut index = base;
            for (&k, &e) in args.iter().zip(y) {
                let stride = self.stride(k);
                let digit = (index / stride) % self.sort.size();
                index = index - digit * stride + e * stride;
            }
            self.values[index].clone()
        })
    }

    /// Values of the unary section `f_k^a` at every element of the sort.
    pub fn unary_section(&self, k: usize, a: &[Elem]) -> Result<Vec<Y>> {
        self.check_index(k)?;
        let base = self.index_of(a)?;
        Ok((0..self.sort.size())
            .map(|e| self.value_with(base, k, e).clone())
            .collect())
    }

    pub fn constant_value(&self) -> Option<&Y> {
        let first = self.values.first()?;
        self.values.iter().all(|v| v == first).then_some(first)
    }

    pub fn is_constant(&self) -> bool {
        self.constant_value().is_some()
    }

    pub fn is_essential(&self, k: usize) -> bool {
        if k >= self.arity {
            return false;
        }
        let stride = self.stride(k);
        let size = self.sort.size();
        (0..self.values.len())
            .filter(|&i| (i / stride).is_multiple_of(size))
            .any(|i| (1..size).any(|e| self.values[i + e * stride] != self.values[i]))
    }

    /// Indices of the essential arguments, increasing.
    pub fn essential_arguments(&self) -> Vec<usize> {
        (0..self.arity).filter(|&k| self.is_essential(k)).collect()
    }

    /// `f_σ: X^m -> Y`, `f_σ(a) = f(a_σ(0), ..., a_σ(n-1))`.
    pub fn remap(&self, sigma: &[usize], m: usize) -> Result<Self> {
        if sigma.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: sigma.len(),
            });
        }
        if let Some((index, &target)) = sigma.iter().enumerate().find(|(_, &t)| t >= m) {
            return Err(Error::MapOutOfRange {
                index,
                target,
                bound: m,
            });
        }
        let mut x = vec![0; self.arity];
        Self::from_fn(self.sort.clone(), m, |a| {
            for (slot, &s) in x.iter_mut().zip(sigma) {
                *slot = a[s];
            }
            self.values[self.index_of(&x).expect("in range")].clone()
        })
    }

    /// Keeps only the listed arguments, fixing every other argument to the
    /// sort's `0`. Equivalent to `f` when the dropped arguments are
    /// inessential.
    pub fn restrict_to(&self, keep: &[usize]) -> Result<Self> {
        let base = vec![self.sort.zero(); self.arity];
        self.section(keep, &base)
    }

    /// The equivalent table with every inessential argument deleted, and the
    /// kept argument indices. Constant tables reduce to a unary constant.
    pub fn without_inessential(&self) -> (Self, Vec<usize>) {
        let essential = self.essential_arguments();
        if essential.is_empty() {
            let c = self.values[0].clone();
            let table = Self::constant(self.sort.clone(), 1, c).expect("unary table");
            return (table, essential);
        }
        let reduced = self.restrict_to(&essential).expect("valid argument set");
        (reduced, essential)
    }

    pub fn map_values<Z: Value>(&self, f: impl FnMut(&Y) -> Z) -> FunctionTable<Z> {
        FunctionTable {
            sort: self.sort.clone(),
            arity: self.arity,
            values: self.values.iter().map(f).collect(),
        }
    }

    /// Decides `f ≡ g` (equality up to permuting arguments and adding,
    /// deleting or identifying inessential arguments) and returns a
    /// verified witness.
    pub fn is_equivalent(&self, g: &Self) -> Result<Option<EquivalenceWitness>> {
        if self.sort != g.sort {
            return Err(Error::SortMismatch(format!("{:?} vs {:?}", self.sort, g.sort)));
        }
        let (hf, ef) = self.without_inessential();
        let (hg, eg) = g.without_inessential();
        if ef.len() != eg.len() {
            return Ok(None);
        }
        let (n, m) = (self.arity, g.arity);
        if ef.is_empty() {
            return Ok((self.values[0] == g.values[0]).then(|| EquivalenceWitness {
                sigma: vec![0; m],
                mu: vec![0; n],
            }));
        }
        let Some(perm) = matching_permutation(&hf, &hg) else {
            return Ok(None);
        };
        // perm[i]: position in g's essential list matched with f's i-th.
        let mut sigma = vec![ef[0]; m];
        let mut mu = vec![eg[0]; n];
        for (i, &j) in perm.iter().enumerate() {
            sigma[eg[j]] = ef[i];
            mu[ef[i]] = eg[j];
        }
        let witness = EquivalenceWitness { sigma, mu };
        Ok(witness.verify(self, g).then_some(witness))
    }
}

/// Per-argument invariant under permutations of the other arguments: for
/// each element `a`, the sorted values of `f` on the hyperplane `x_k = a`.
fn argument_signature<Y: Value>(f: &FunctionTable<Y>, k: usize) -> Vec<Vec<Y>> {
    let size = f.sort.size();
    let stride = f.stride(k);
    let mut groups = vec![Vec::new(); size];
    for (i, v) in f.values.iter().enumerate() {
        groups[(i / stride) % size].push(v.clone());
    }
    for g in &mut groups {
        g.sort();
    }
    groups
}

/// Finds `perm` with `f(y) = g(z)` where `z[perm[i]] = y[i]`, searching
/// only among arguments with equal signatures.
fn matching_permutation<Y: Value>(f: &FunctionTable<Y>, g: &FunctionTable<Y>) -> Option<Vec<usize>> {
    let e = f.arity;
    if g.arity != e {
        return None;
    }
    let sig_f: Vec<_> = (0..e).map(|k| argument_signature(f, k)).collect();
    let sig_g: Vec<_> = (0..e).map(|k| argument_signature(g, k)).collect();
    let candidates: Vec<Vec<usize>> = (0..e)
        .map(|i| (0..e).filter(|&j| sig_f[i] == sig_g[j]).collect())
        .collect();
    if candidates.iter().any(Vec::is_empty) {
        return None;
    }
    let mut perm = Vec::with_capacity(e);
    let mut used = vec![false; e];
    search(f, g, &candidates, &mut perm, &mut used)
}

fn search<Y: Value>(
    f: &FunctionTable<Y>,
    g: &FunctionTable<Y>,
    candidates: &[Vec<usize>],
    perm: &mut Vec<usize>,
    used: &mut [bool],
) -> Option<Vec<usize>> {
    let i = perm.len();
    if i == candidates.len() {
        let mut z = vec![0; i];
        let matches = f.points().all(|y| {
            for (a, &j) in y.iter().zip(perm.iter()) {
                z[j] = *a;
            }
            f.evaluate(&y).ok() == g.evaluate(&z).ok()
        });
        return matches.then(|| perm.clone());
    }
    for &j in &candidates[i] {
        if used[j] {
            continue;
        }
        used[j] = true;
        perm.push(j);
        if let Some(found) = search(f, g, candidates, perm, used) {
            return Some(found);
        }
        perm.pop();
        used[j] = false;
    }
    None
}

/// Boolean-valued tables over the Boolean sort.
impl FunctionTable<bool> {
    pub fn boolean(arity: usize, f: impl FnMut(&[Elem]) -> bool) -> Result<Self> {
        Self::from_fn(Sort::Boolean, arity, f)
    }

    /// The table whose value at index `i` is bit `i` of `bits`
    /// (index 0 is the all-zero point).
    pub fn from_bits(arity: usize, bits: u64) -> Result<Self> {
        let len = table_len(2, arity)?;
        if len > 64 {
            return Err(Error::TooLarge { size: 2, arity });
        }
        Self::new(Sort::Boolean, arity, (0..len).map(|i| bits >> i & 1 == 1).collect())
    }

    /// Inverse of [`FunctionTable::from_bits`]; `None` above arity 6.
    pub fn to_bits(&self) -> Option<u64> {
        (self.values.len() <= 64).then(|| {
            self.values
                .iter()
                .enumerate()
                .fold(0u64, |acc, (i, &b)| acc | (u64::from(b) << i))
        })
    }

    /// Every Boolean function of the given arity, in `from_bits` order.
    pub fn all_boolean(arity: usize) -> impl Iterator<Item = Self> {
        let count: u64 = 1 << (1u32 << arity);
        (0..count).map(move |bits| Self::from_bits(arity, bits).expect("arity <= 6"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::FiniteLattice;
    use proptest::prelude::*;

    fn and2() -> FunctionTable<bool> {
        FunctionTable::boolean(2, |x| x[0] == 1 && x[1] == 1).unwrap()
    }

    fn parity(n: usize) -> FunctionTable<bool> {
        FunctionTable::boolean(n, |x| x.iter().fold(false, |acc, &b| acc ^ (b == 1))).unwrap()
    }

    #[test]
    fn evaluate_examples() {
        assert!(*and2().evaluate(&[1, 1]).unwrap());
        assert!(!*and2().evaluate(&[1, 0]).unwrap());
        assert!(!*parity(3).evaluate(&[1, 1, 0]).unwrap());
    }

    #[test]
    fn evaluate_errors() {
        assert_eq!(
            and2().evaluate(&[1]),
            Err(Error::ArityMismatch {
                expected: 2,
                found: 1
            })
        );
        assert_eq!(
            and2().evaluate(&[1, 2]),
            Err(Error::ForeignElement { elem: 2, size: 2 })
        );
    }

    #[test]
    fn substitute_examples() {
        let p = Point::new(vec![0, 1]);
        assert_eq!(p.substitute(0, 1).unwrap(), Point::new(vec![1, 1]));
        let q = Point::new(vec![1, 1]);
        assert_eq!(q.substitute(0, 1).unwrap(), q);
        // (1/2,1/2,1/2) on the quarter grid, second coordinate set to 0
        let grid = Sort::unit_grid(4);
        let half = Point::new(vec![2, 2, 2]);
        let s = half.substitute(1, grid.zero()).unwrap();
        assert_eq!(s.display(&grid), "(1/2,0,1/2)");
        assert!(p.substitute(2, 0).is_err());
    }

    #[test]
    fn cofactor_examples() {
        let id_x2 = FunctionTable::boolean(1, |x| x[0] == 1).unwrap();
        assert_eq!(and2().cofactor(0, 1).unwrap(), id_x2);
        let zero = FunctionTable::constant(Sort::Boolean, 1, false).unwrap();
        assert_eq!(and2().cofactor(0, 0).unwrap(), zero);
        let xnor = FunctionTable::boolean(2, |x| x[0] == x[1]).unwrap();
        assert_eq!(parity(3).cofactor(1, 1).unwrap(), xnor);
        assert!(and2().cofactor(2, 0).is_err());
        assert!(and2().cofactor(0, 2).is_err());
    }

    #[test]
    fn unary_cofactor_is_constant_wrapper() {
        let id = FunctionTable::boolean(1, |x| x[0] == 1).unwrap();
        let c = id.cofactor(0, 1).unwrap();
        assert_eq!(c.arity(), 1);
        assert_eq!(c.constant_value(), Some(&true));
        assert!(c.essential_arguments().is_empty());
    }

    #[test]
    fn section_examples() {
        assert_eq!(and2().section(&[0, 1], &[0, 0]).unwrap(), and2());
        let id = FunctionTable::boolean(1, |x| x[0] == 1).unwrap();
        assert_eq!(and2().section(&[0], &[0, 1]).unwrap(), id);
        assert_eq!(and2().section(&[], &[0, 1]), Err(Error::EmptyArgumentSet));
        assert!(and2().section(&[0], &[0]).is_err());

        let chain = FiniteLattice::chain(3);
        let sort = Sort::lattice(chain.clone());
        let meet = FunctionTable::from_fn(sort.clone(), 2, |x| chain.meet_of(x[0], x[1])).unwrap();
        let m = 1;
        let got = meet.section(&[0], &[0, m]).unwrap();
        let expected =
            FunctionTable::from_fn(sort, 1, |x| chain.meet_of(x[0], m)).unwrap();
        assert_eq!(got, expected);
        assert_eq!(got.values(), &[0, 1, 1]);
    }

    #[test]
    fn essential_examples() {
        let proj = FunctionTable::boolean(2, |x| x[0] == 1).unwrap();
        assert_eq!(proj.essential_arguments(), vec![0]);
        let c = FunctionTable::constant(Sort::Boolean, 3, true).unwrap();
        assert!(c.essential_arguments().is_empty());
        // χ_(1,1) is AND₂; brute force over all unary sections
        let f = and2();
        let brute: Vec<usize> = (0..2)
            .filter(|&k| {
                f.points().any(|a| {
                    let s = f.unary_section(k, &a).unwrap();
                    s[0] != s[1]
                })
            })
            .collect();
        assert_eq!(f.essential_arguments(), brute);
        assert_eq!(brute, vec![0, 1]);
    }

    #[test]
    fn remap_examples() {
        let id = FunctionTable::boolean(1, |x| x[0] == 1).unwrap();
        let proj2 = FunctionTable::boolean(2, |x| x[1] == 1).unwrap();
        assert_eq!(id.remap(&[1], 2).unwrap(), proj2);
        assert_eq!(and2().remap(&[0, 0], 1).unwrap(), id);
        assert_eq!(and2().remap(&[1, 0], 2).unwrap(), and2());
        assert_eq!(
            and2().remap(&[0, 2], 2),
            Err(Error::MapOutOfRange {
                index: 1,
                target: 2,
                bound: 2
            })
        );
    }

    #[test]
    fn equivalence_examples() {
        let g = FunctionTable::boolean(3, |x| x[1] == 1 && x[2] == 1).unwrap();
        let w = and2().is_equivalent(&g).unwrap().expect("equivalent");
        assert!(w.verify(&and2(), &g));

        let zero = FunctionTable::constant(Sort::Boolean, 1, false).unwrap();
        let one = FunctionTable::constant(Sort::Boolean, 1, true).unwrap();
        assert_eq!(zero.is_equivalent(&one).unwrap(), None);

        let f = FunctionTable::boolean(2, |x| x[0] == 1 && x[1] == 0).unwrap();
        let h = FunctionTable::boolean(2, |x| x[0] == 0 && x[1] == 1).unwrap();
        let w = f.is_equivalent(&h).unwrap().expect("transposition");
        assert_eq!(w.sigma, vec![1, 0]);
        assert!(w.verify(&f, &h));

        let chain = FunctionTable::constant(Sort::Chain(3), 1, 0usize).unwrap();
        let boolean = FunctionTable::constant(Sort::Boolean, 1, 0usize).unwrap();
        assert!(chain.is_equivalent(&boolean).is_err());
    }

    /// Direct search over every pair of maps, independent of the signature
    /// pruning used by `is_equivalent`.
    fn brute_equivalent(f: &FunctionTable<bool>, g: &FunctionTable<bool>) -> bool {
        let (n, m) = (f.arity(), g.arity());
        let maps = |from: usize, to: usize| -> Vec<Vec<usize>> {
            (0..to.pow(from as u32))
                .map(|mut c| {
                    (0..from)
                        .map(|_| {
                            let d = c % to;
                            c /= to;
                            d
                        })
                        .collect()
                })
                .collect()
        };
        let sigmas = maps(m, n);
        let mus = maps(n, m);
        sigmas.iter().any(|s| g.remap(s, n).unwrap() == *f)
            && mus.iter().any(|u| f.remap(u, m).unwrap() == *g)
    }

    fn small_tables() -> Vec<FunctionTable<bool>> {
        (1..=2)
            .flat_map(FunctionTable::all_boolean)
            .chain(FunctionTable::all_boolean(3).step_by(7))
            .collect()
    }

    #[test]
    fn equivalence_matches_brute_force() {
        let tables = small_tables();
        for f in &tables {
            for g in &tables {
                let fast = f.is_equivalent(g).unwrap();
                assert_eq!(fast.is_some(), brute_equivalent(f, g), "{f:?} {g:?}");
                if fast.is_some() {
                    assert_eq!(f.essential_arguments().len(), g.essential_arguments().len());
                }
            }
        }
    }

    #[test]
    fn equivalence_is_an_equivalence_relation() {
        let tables: Vec<_> = (1..=2).flat_map(FunctionTable::all_boolean).collect();
        let eq = |a: &FunctionTable<bool>, b: &FunctionTable<bool>| a.is_equivalent(b).unwrap().is_some();
        for a in &tables {
            assert!(eq(a, a));
            for b in &tables {
                assert_eq!(eq(a, b), eq(b, a));
                if !eq(a, b) {
                    continue;
                }
                for c in &tables {
                    if eq(b, c) {
                        assert!(eq(a, c));
                    }
                }
            }
        }
    }

    #[test]
    fn equivalent_functions_have_equivalent_sections() {
        // f ≡ g implies every nonconstant section of f is equivalent to some
        // section of g
        let tables: Vec<_> = (1..=3)
            .flat_map(FunctionTable::all_boolean)
            .filter(|f| f.arity() < 3 || f.to_bits().unwrap() % 11 == 0)
            .collect();
        let sections = |f: &FunctionTable<bool>| -> Vec<FunctionTable<bool>> {
            let n = f.arity();
            let mut out = Vec::new();
            for mask in 1..(1usize << n) {
                let s: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
                for a in f.points() {
                    out.push(f.section(&s, &a).unwrap());
                }
            }
            out
        };
        for f in &tables {
            for g in &tables {
                if f.is_equivalent(g).unwrap().is_none() {
                    continue;
                }
                let sg = sections(g);
                for sf in sections(f) {
                    // constant sections over inessential arguments have no
                    // counterpart when g has fewer arguments
                    let constant_match = sf
                        .constant_value()
                        .is_some_and(|c| g.values().contains(c));
                    assert!(
                        constant_match || sg.iter().any(|t| sf.is_equivalent(t).unwrap().is_some()),
                        "{f:?} {g:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn full_section_is_identity() {
        for size in 2..=3 {
            let sort = Sort::chain(size).unwrap();
            for n in 1..=3usize {
                let f = FunctionTable::from_fn(sort.clone(), n, |x| {
                    x.iter().enumerate().map(|(i, &e)| (i + 1) * e).sum::<usize>() % size
                })
                .unwrap();
                let all: Vec<usize> = (0..n).collect();
                for a in f.points() {
                    assert_eq!(f.section(&all, &a).unwrap(), f);
                }
            }
        }
    }

    #[test]
    fn cofactor_coherence() {
        let sort = Sort::Chain(3);
        let f = FunctionTable::from_fn(sort, 3, |x| (x[0] * 2 + x[1] * x[2]) % 3).unwrap();
        for x in f.points() {
            for k in 0..3 {
                for a in 0..3 {
                    let c = f.cofactor(k, a).unwrap();
                    let lhs = c.evaluate(&x.drop_coordinate(k)).unwrap();
                    let rhs = f.evaluate(&x.substitute(k, a).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    proptest! {
        #[test]
        fn index_point_round_trip(size in 2usize..5, arity in 1usize..5, seed in any::<u64>()) {
            let f = FunctionTable::from_fn(Sort::chain(size).unwrap(), arity, |_| 0usize).unwrap();
            let index = (seed as usize) % f.len();
            prop_assert_eq!(f.index_of(&f.point_at(index)).unwrap(), index);
        }

        #[test]
        fn bits_round_trip(arity in 1usize..=6, bits in any::<u64>()) {
            let mask = if arity == 6 { u64::MAX } else { (1u64 << (1 << arity)) - 1 };
            let f = FunctionTable::from_bits(arity, bits & mask).unwrap();
            prop_assert_eq!(f.to_bits(), Some(bits & mask));
        }
    }
}
