//! Coefficient forms of pseudo-Boolean functions: the multilinear
//! extension, Möbius coefficients and the Lovász extension, plus the
//! monotone-orientation witness.
//!
//! Subsets `S ⊆ [n]` are bitmasks with bit `i` standing for argument `i`
//! (so `1_S` has `x_i = 1` exactly when bit `i` is set). Function tables
//! index points with `x_1` as the most significant digit; [`mask_index`]
//! converts between the two.

use crate::error::{Error, Result};
use crate::lattice::Order;
use crate::pivotal::{PhiMedian, Pivotal};
use crate::scalar::{Rational, Scalar};
use crate::sort::{Elem, Sort, Value};
use crate::table::FunctionTable;

/// Largest arity accepted by the coefficient forms.
pub const MAX_FORM_ARITY: usize = 20;

/// Table index of the characteristic vector `1_S`.
pub fn mask_index(arity: usize, mask: usize) -> usize {
    (0..arity)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| 1 << (arity - 1 - i))
        .sum()
}

/// The point `1_S`.
pub fn mask_point(arity: usize, mask: usize) -> Vec<Elem> {
    (0..arity).map(|i| mask >> i & 1).collect()
}

/// `f(1_S)` for every `S`, read from a table on the Boolean sort.
pub fn vertex_values<Y: Value>(f: &FunctionTable<Y>) -> Result<Vec<Y>> {
    if !f.sort().is_boolean() {
        return Err(Error::SortMismatch(format!(
            "vertex data needs the Boolean sort, found {:?}",
            f.sort()
        )));
    }
    check_arity(f.arity())?;
    let n = f.arity();
    Ok((0..1usize << n).map(|m| f.values()[mask_index(n, m)].clone()).collect())
}

/// First pair of masks `S ⊂ S ∪ {i}` with `v[S] > v[S ∪ {i}]`.
pub fn vertex_monotone_violation<Y, O: Order<Y>>(values: &[Y], order: &O) -> Option<(usize, usize)> {
    let len = values.len();
    (0..len).find_map(|m| {
        (0..usize::BITS as usize)
            .map(|i| 1usize << i)
            .take_while(|&bit| bit < len)
            .filter(|&bit| m & bit == 0)
            .find(|&bit| !order.leq(&values[m], &values[m | bit]))
            .map(|bit| (m, m | bit))
    })
}

fn check_arity(arity: usize) -> Result<()> {
    match arity {
        0 => Err(Error::ZeroArity),
        n if n > MAX_FORM_ARITY => Err(Error::TooLarge { size: 2, arity: n }),
        _ => Ok(()),
    }
}

fn check_point<T: Scalar>(arity: usize, x: &[T]) -> Result<()> {
    if x.len() != arity {
        return Err(Error::ArityMismatch {
            expected: arity,
            found: x.len(),
        });
    }
    match x.iter().position(|c| !c.in_unit_interval()) {
        Some(index) => Err(Error::OutsideUnitInterval {
            index,
            value: format!("{:?}", x[index]),
        }),
        None => Ok(()),
    }
}

fn check_pivot(arity: usize, k: usize) -> Result<()> {
    if k < arity {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { index: k, arity })
    }
}

/// In-place Möbius transform over the subset lattice.
pub fn mobius_transform<T: Scalar>(values: &mut [T]) {
    let len = values.len();
    let mut bit = 1;
    while bit < len {
        for m in 0..len {
            if m & bit != 0 {
                let lower = values[m ^ bit].clone();
                values[m] = values[m].clone() - lower;
            }
        }
        bit <<= 1;
    }
}

/// In-place zeta transform: `values[T] <- Σ_{S ⊆ T} values[S]`.
pub fn zeta_transform<T: Scalar>(values: &mut [T]) {
    let len = values.len();
    let mut bit = 1;
    while bit < len {
        for m in 0..len {
            if m & bit != 0 {
                let lower = values[m ^ bit].clone();
                values[m] = values[m].clone() + lower;
            }
        }
        bit <<= 1;
    }
}

/// The grid `{0, 1/4, 1/2, 3/4, 1}` in any scalar type.
pub fn validation_grid<T: Scalar>() -> Vec<T> {
    let two = T::one() + T::one();
    let four = two.clone() * two.clone();
    vec![
        T::zero(),
        T::one() / four.clone(),
        T::one() / two,
        (T::one() + T::one() + T::one()) / four,
        T::one(),
    ]
}

/// Every point of `grid^n`, first coordinate slowest.
pub fn grid_points<T: Clone>(arity: usize, grid: &[T]) -> Vec<Vec<T>> {
    let mut out = vec![Vec::with_capacity(arity)];
    for _ in 0..arity {
        out = out
            .into_iter()
            .flat_map(|p| {
                grid.iter().map(move |c| {
                    let mut q = p.clone();
                    q.push(c.clone());
                    q
                })
            })
            .collect();
    }
    out
}

fn with_coordinate<T: Clone>(x: &[T], k: usize, c: T) -> Vec<T> {
    let mut y = x.to_vec();
    y[k] = c;
    y
}

/// For each pivot `k`, whether `f(x) = x_k f(x_k^1) + (1 - x_k) f(x_k^0)`
/// at every point of `grid^n`.
pub fn check_pivot_identity<T: Scalar>(arity: usize, f: impl Fn(&[T]) -> T, grid: &[T]) -> Vec<bool> {
    check_on_grid(arity, f, grid, |p, hi, lo| p.clone() * hi + (T::one() - p.clone()) * lo)
}

/// For each pivot `k`, whether `f(x) = combine(x_k, f(x_k^1), f(x_k^0))` on
/// `grid^n`. Values are computed once per point when the grid holds 0 and 1.
fn check_on_grid<T: Scalar>(
    arity: usize,
    f: impl Fn(&[T]) -> T,
    grid: &[T],
    combine: impl Fn(&T, T, T) -> T,
) -> Vec<bool> {
    let points = grid_points(arity, grid);
    let values: Vec<T> = points.iter().map(|x| f(x)).collect();
    let zero = grid.iter().position(|c| c.is_zero());
    let one = grid.iter().position(|c| c.is_one());
    let g = grid.len();
    (0..arity)
        .map(|k| {
            let stride = g.pow((arity - 1 - k) as u32);
            points.iter().enumerate().all(|(i, x)| {
                let digit = i / stride % g;
                let at = |c: usize| values[i - digit * stride + c * stride].clone();
                let (hi, lo) = match (one, zero) {
                    (Some(o), Some(z)) => (at(o), at(z)),
                    _ => (f(&with_coordinate(x, k, T::one())), f(&with_coordinate(x, k, T::zero()))),
                };
                values[i] == combine(&x[k], hi, lo)
            })
        })
        .collect()
}

/// Per-pivot outcome of an identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub per_pivot: Vec<bool>,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        self.per_pivot.iter().all(|&b| b)
    }
}

/// `f̂(x) = Σ_S f(1_S) Π_{i∈S} x_i Π_{i∉S} (1 - x_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultilinearForm<T> {
    arity: usize,
    vertex_values: Vec<T>,
}

impl<T: Scalar> MultilinearForm<T> {
    /// `vertex_values[S] = f(1_S)`, indexed by mask.
    pub fn new(arity: usize, vertex_values: Vec<T>) -> Result<Self> {
        check_arity(arity)?;
        if vertex_values.len() != 1 << arity {
            return Err(Error::LengthMismatch {
                expected: 1 << arity,
                found: vertex_values.len(),
            });
        }
        Ok(MultilinearForm {
            arity,
            vertex_values,
        })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn vertex_values(&self) -> &[T] {
        &self.vertex_values
    }

    pub fn vertex(&self, mask: usize) -> &T {
        &self.vertex_values[mask]
    }

    /// Coefficients `c_S` of the expanded polynomial `Σ_S c_S Π_{i∈S} x_i`.
    pub fn monomial_coefficients(&self) -> Vec<T> {
        let mut c = self.vertex_values.clone();
        mobius_transform(&mut c);
        c
    }

    pub fn evaluate(&self, x: &[T]) -> Result<T> {
        check_point(self.arity, x)?;
        Ok(self.eval_raw(x))
    }

    fn eval_raw(&self, x: &[T]) -> T {
        let mut total = T::zero();
        for (mask, v) in self.vertex_values.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let mut term = v.clone();
            for (i, xi) in x.iter().enumerate() {
                term = if mask >> i & 1 == 1 {
                    term * xi.clone()
                } else {
                    term * (T::one() - xi.clone())
                };
            }
            total = total + term;
        }
        total
    }

    /// `f̂(x_k^1) - f̂(x_k^0)`; the value of `x_k` itself is ignored.
    pub fn partial(&self, k: usize, x: &[T]) -> Result<T> {
        check_pivot(self.arity, k)?;
        let mut y = x.to_vec();
        if y.len() == self.arity {
            y[k] = T::zero();
        }
        check_point(self.arity, &y)?;
        let hi = self.eval_raw(&with_coordinate(&y, k, T::one()));
        Ok(hi - self.eval_raw(&y))
    }

    /// Pivot identity `f(x) = x_k f(x_k^1) + (1 - x_k) f(x_k^0)`. Both sides
    /// are multilinear, so agreement on `{0,1}^n` already certifies it on
    /// `[0,1]^n`; the validation grid is checked as well.
    pub fn check_mle_identity(&self) -> IdentityReport {
        let eval = |x: &[T]| self.eval_raw(x);
        let boolean = check_pivot_identity(self.arity, eval, &[T::zero(), T::one()]);
        let grid = check_pivot_identity(self.arity, eval, &validation_grid());
        IdentityReport {
            per_pivot: boolean.iter().zip(&grid).map(|(a, b)| *a && *b).collect(),
        }
    }

    /// `f(x) = x_k (f(x_k^1) ∨ f(x_k^0)) + (1 - x_k)(f(x_k^1) ∧ f(x_k^0))` on
    /// the validation grid, for every pivot.
    pub fn check_monotone_identity(&self) -> IdentityReport {
        let eval = |x: &[T]| self.eval_raw(x);
        let per_pivot = check_on_grid(self.arity, eval, &validation_grid(), |p, hi, lo| {
            let (join, meet) = (T::max_of(&hi, &lo), T::min_of(&hi, &lo));
            p.clone() * join + (T::one() - p.clone()) * meet
        });
        IdentityReport { per_pivot }
    }
}

/// Sum-of-products form of a Boolean function.
pub fn sop_form<T: Scalar>(f: &FunctionTable<bool>) -> Result<MultilinearForm<T>> {
    let values = vertex_values(f)?.into_iter().map(T::from_bit).collect();
    MultilinearForm::new(f.arity(), values)
}

impl MultilinearForm<Rational> {
    /// Multilinear extension of a rational table on the Boolean sort.
    pub fn from_table(f: &FunctionTable<Rational>) -> Result<Self> {
        MultilinearForm::new(f.arity(), vertex_values(f)?)
    }
}

/// `L_f(x) = Σ_S a_S ⋀_{i∈S} x_i`, with the empty meet equal to 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LovaszForm<T> {
    arity: usize,
    mobius: Vec<T>,
}

impl<T: Scalar> LovaszForm<T> {
    /// From Möbius coefficients `a_S`, indexed by mask.
    pub fn new(arity: usize, mobius: Vec<T>) -> Result<Self> {
        check_arity(arity)?;
        if mobius.len() != 1 << arity {
            return Err(Error::LengthMismatch {
                expected: 1 << arity,
                found: mobius.len(),
            });
        }
        Ok(LovaszForm { arity, mobius })
    }

    /// From vertex values `f(1_S)`.
    pub fn from_vertices(arity: usize, mut values: Vec<T>) -> Result<Self> {
        check_arity(arity)?;
        if values.len() != 1 << arity {
            return Err(Error::LengthMismatch {
                expected: 1 << arity,
                found: values.len(),
            });
        }
        mobius_transform(&mut values);
        Ok(LovaszForm {
            arity,
            mobius: values,
        })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn mobius(&self) -> &[T] {
        &self.mobius
    }

    pub fn coefficient(&self, mask: usize) -> &T {
        &self.mobius[mask]
    }

    /// `f(1_T) = Σ_{S⊆T} a_S`.
    pub fn vertex_values(&self) -> Vec<T> {
        let mut v = self.mobius.clone();
        zeta_transform(&mut v);
        v
    }

    pub fn evaluate(&self, x: &[T]) -> Result<T> {
        check_point(self.arity, x)?;
        Ok(self.eval_raw(x))
    }

    fn eval_raw(&self, x: &[T]) -> T {
        let mut total = T::zero();
        for (mask, a) in self.mobius.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let meet = x
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .fold(T::one(), |m, (_, xi)| T::min_of(&m, xi));
            total = total + a.clone() * meet;
        }
        total
    }

    /// `(Π_1, Π_2)` with `L_f(x) = Π_k(x_k, L_f(x_k^1), L_f(x_k^0))` on
    /// `[0,1]^2`.
    pub fn binary_pivotals(&self) -> Result<(LovaszPivotal<T>, LovaszPivotal<T>)> {
        if self.arity != 2 {
            return Err(Error::ArityMismatch {
                expected: 2,
                found: self.arity,
            });
        }
        let a = &self.mobius;
        let make = |own: usize, other: usize| LovaszPivotal {
            a0: a[0].clone(),
            a_own: a[own].clone(),
            a_other: a[other].clone(),
            a12: a[3].clone(),
        };
        Ok((make(1, 2), make(2, 1)))
    }
}

impl LovaszForm<Rational> {
    pub fn from_table(f: &FunctionTable<Rational>) -> Result<Self> {
        LovaszForm::from_vertices(f.arity(), vertex_values(f)?)
    }

    /// The table of `L_f` sampled on a grid sort.
    pub fn sample(&self, grid: &Sort) -> Result<FunctionTable<Rational>> {
        if !matches!(grid, Sort::Grid(_)) && !grid.is_boolean() {
            return Err(Error::SortMismatch(format!("cannot sample on {grid:?}")));
        }
        let coords: Vec<Rational> = (0..grid.size())
            .map(|e| grid.coordinate(e).expect("grid coordinate"))
            .collect();
        check_point(coords.len(), &coords)?;
        FunctionTable::from_fn(grid.clone(), self.arity, |x| {
            let y: Vec<Rational> = x.iter().map(|&e| coords[e].clone()).collect();
            self.eval_raw(&y)
        })
    }
}

/// Möbius coefficients of a rational table on the Boolean sort.
pub fn mobius(f: &FunctionTable<Rational>) -> Result<LovaszForm<Rational>> {
    LovaszForm::from_table(f)
}

/// One pivotal function of a binary Lovász extension
/// `a_0 + a_1 x_1 + a_2 x_2 + a_12 (x_1 ∧ x_2)`, seen from the argument
/// whose linear coefficient is `a_own`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LovaszPivotal<T> {
    pub a0: T,
    pub a_own: T,
    pub a_other: T,
    pub a12: T,
}

impl<T: Scalar> LovaszPivotal<T> {
    /// Recovers the other coordinate from `v` (or from `u - v` when the
    /// other linear coefficient vanishes) and re-evaluates.
    pub fn eval(&self, p: &T, u: &T, v: &T) -> T {
        let base = self.a0.clone() + self.a_own.clone() * p.clone();
        if !self.a_other.is_zero() {
            let shift = v.clone() - self.a0.clone();
            let other = shift.clone() / self.a_other.clone();
            base + shift + self.a12.clone() * T::min_of(p, &other)
        } else if !self.a12.is_zero() {
            let other = (u.clone() - self.a0.clone() - self.a_own.clone()) / self.a12.clone();
            base + self.a12.clone() * T::min_of(p, &other)
        } else {
            base
        }
    }
}

impl Pivotal<Rational> for LovaszPivotal<Rational> {
    fn apply(&self, sort: &Sort, p: Elem, u: &Rational, v: &Rational) -> Option<Rational> {
        sort.coordinate(p).map(|p| self.eval(&p, u, v))
    }

    fn name(&self) -> String {
        "lovasz".into()
    }
}

/// Orientation of one argument of a monotone function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Identity,
    Negation,
}

impl Orientation {
    pub fn apply(self, e: Elem) -> Elem {
        match self {
            Orientation::Identity => e,
            Orientation::Negation => 1 - e,
        }
    }
}

/// Per-argument orientations making a function nondecreasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientationWitness {
    pub phis: Vec<Orientation>,
}

impl OrientationWitness {
    /// `g = f ∘ (φ_1, ..., φ_n)`, nondecreasing when the witness is valid.
    pub fn orient<Y: Value>(&self, f: &FunctionTable<Y>) -> Result<FunctionTable<Y>> {
        let values = vertex_values(f)?;
        let n = f.arity();
        FunctionTable::from_fn(Sort::Boolean, n, |x| {
            let mask = (0..n)
                .filter(|&i| self.phis[i].apply(x[i]) == 1)
                .fold(0, |m, i| m | 1 << i);
            values[mask].clone()
        })
    }

    /// `Π_k(p, u, v) = med(φ_k(p), u, v)` for each argument.
    pub fn pivotals<Y: Value, O: Order<Y> + Clone>(&self, order: O) -> Vec<PhiMedian<Y, O>> {
        self.phis
            .iter()
            .map(|phi| {
                let image = |e| Y::embed(&Sort::Boolean, phi.apply(e)).expect("Boolean embedding");
                PhiMedian::new(vec![image(0), image(1)], order.clone())
            })
            .collect()
    }
}

/// Orientations under which `f` becomes nondecreasing, if `f` is isotone or
/// antitone in each argument. Inessential arguments get the identity.
pub fn monotone_witness<Y: Value, O: Order<Y>>(
    f: &FunctionTable<Y>,
    order: &O,
) -> Result<Option<OrientationWitness>> {
    let values = vertex_values(f)?;
    let n = f.arity();
    let mut phis = Vec::with_capacity(n);
    for k in 0..n {
        let bit = 1 << k;
        let lower = (0..values.len()).filter(|m| m & bit == 0);
        if lower.clone().all(|m| order.leq(&values[m], &values[m | bit])) {
            phis.push(Orientation::Identity);
        } else if lower.clone().all(|m| order.leq(&values[m | bit], &values[m])) {
            phis.push(Orientation::Negation);
        } else {
            return Ok(None);
        }
    }
    Ok(Some(OrientationWitness { phis }))
}
