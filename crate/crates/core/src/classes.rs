//! Boolean derivatives, the sixteen classes of Boolean functions
//! characterized by their unary members, and membership in the class of
//! Π-decomposable functions.

use std::fmt;

use crate::error::{Error, Result};
use crate::pivotal::{check_decomposition, Pivotal};
use crate::sort::{Sort, Value};
use crate::table::FunctionTable;

/// The four unary Boolean functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum UnaryBool {
    Bot,
    Top,
    Id,
    Neg,
}

impl UnaryBool {
    pub const ALL: [UnaryBool; 4] = [UnaryBool::Bot, UnaryBool::Top, UnaryBool::Id, UnaryBool::Neg];

    /// From the values `(g(0), g(1))`.
    pub fn from_values(at0: bool, at1: bool) -> Self {
        match (at0, at1) {
            (false, false) => UnaryBool::Bot,
            (true, true) => UnaryBool::Top,
            (false, true) => UnaryBool::Id,
            (true, false) => UnaryBool::Neg,
        }
    }

    pub fn values(self) -> [bool; 2] {
        match self {
            UnaryBool::Bot => [false, false],
            UnaryBool::Top => [true, true],
            UnaryBool::Id => [false, true],
            UnaryBool::Neg => [true, false],
        }
    }

    fn bit(self) -> u8 {
        1 << self as u8
    }

    pub fn name(self) -> &'static str {
        match self {
            UnaryBool::Bot => "bot",
            UnaryBool::Top => "top",
            UnaryBool::Id => "id",
            UnaryBool::Neg => "neg",
        }
    }
}

/// A set of unary Boolean functions, standing for the class `C_V` of
/// functions whose essential unary sections lie in `V`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VSet(u8);

impl VSet {
    pub const EMPTY: VSet = VSet(0);
    pub const ALL: VSet = VSet(0b1111);

    pub fn from_bits(bits: u8) -> Option<Self> {
        (bits <= 0b1111).then_some(VSet(bits))
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn of(members: &[UnaryBool]) -> Self {
        VSet(members.iter().fold(0, |b, u| b | u.bit()))
    }

    pub fn contains(self, u: UnaryBool) -> bool {
        self.0 & u.bit() != 0
    }

    pub fn insert(&mut self, u: UnaryBool) {
        self.0 |= u.bit();
    }

    pub fn members(self) -> Vec<UnaryBool> {
        UnaryBool::ALL.into_iter().filter(|&u| self.contains(u)).collect()
    }

    pub fn is_subset(self, other: VSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn meet(self, other: VSet) -> VSet {
        VSet(self.0 & other.0)
    }

    pub fn join(self, other: VSet) -> VSet {
        VSet(self.0 | other.0)
    }

    pub fn complement(self) -> VSet {
        VSet(!self.0 & 0b1111)
    }

    /// All sixteen sets, by bit pattern.
    pub fn all() -> impl Iterator<Item = VSet> {
        (0..16).map(VSet)
    }

    /// Parses `{id,neg}`, `id,neg` or `{}`; `0`/`1` name the constants.
    pub fn parse(text: &str) -> Option<VSet> {
        let inner = text.trim().trim_start_matches('{').trim_end_matches('}');
        let mut v = VSet::EMPTY;
        for item in inner.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            v.insert(match item {
                "bot" | "0" | "⊥" => UnaryBool::Bot,
                "top" | "1" | "⊤" => UnaryBool::Top,
                "id" => UnaryBool::Id,
                "neg" | "¬" => UnaryBool::Neg,
                _ => return None,
            });
        }
        Some(v)
    }
}

impl fmt::Display for VSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<_> = self.members().into_iter().map(UnaryBool::name).collect();
        write!(f, "{{{}}}", names.join(","))
    }
}

/// The operations of the Boolean algebra of classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraOp {
    Meet,
    Join,
    Complement,
}

/// Meet and join need `b`; complement ignores it.
pub fn um_algebra(op: AlgebraOp, a: VSet, b: Option<VSet>) -> Result<VSet> {
    let needs = |b: Option<VSet>| {
        b.ok_or(Error::ArityMismatch {
            expected: 2,
            found: 1,
        })
    };
    Ok(match op {
        AlgebraOp::Meet => a.meet(needs(b)?),
        AlgebraOp::Join => a.join(needs(b)?),
        AlgebraOp::Complement => a.complement(),
    })
}

/// A function `{0,1}^n -> {-1, 0, 1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedTable {
    pub arity: usize,
    pub values: Vec<i8>,
}

impl SignedTable {
    pub fn all_nonnegative(&self) -> bool {
        self.values.iter().all(|&v| v >= 0)
    }

    pub fn all_nonpositive(&self) -> bool {
        self.values.iter().all(|&v| v <= 0)
    }
}

fn check_boolean<Y: Value>(f: &FunctionTable<Y>) -> Result<()> {
    if f.sort().is_boolean() {
        Ok(())
    } else {
        Err(Error::SortMismatch(format!("expected the Boolean sort, found {:?}", f.sort())))
    }
}

fn check_index(f: &FunctionTable<bool>, j: usize) -> Result<()> {
    check_boolean(f)?;
    if j < f.arity() {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange {
            index: j,
            arity: f.arity(),
        })
    }
}

/// `∂_j f(x) = f(x ⊕ δ_j) ⊕ f(x)`.
pub fn boolean_partial(f: &FunctionTable<bool>, j: usize) -> Result<FunctionTable<bool>> {
    check_index(f, j)?;
    let values = (0..f.len())
        .map(|i| {
            let x = f.point_at(i);
            f.value_with(i, j, 1 - x[j]) != f.value_at(i)
        })
        .collect();
    FunctionTable::new(Sort::Boolean, f.arity(), values)
}

/// `Δ_j f(x) = f(x_j^1) - f(x_j^0)`.
pub fn boolean_delta(f: &FunctionTable<bool>, j: usize) -> Result<SignedTable> {
    check_index(f, j)?;
    let values = (0..f.len())
        .map(|i| {
            let (hi, lo) = f.cofactor_pair(i, j);
            i8::from(*hi) - i8::from(*lo)
        })
        .collect();
    Ok(SignedTable {
        arity: f.arity(),
        values,
    })
}

/// The smallest `V` with `f ∈ C_V`: the essential unary sections of a
/// nonconstant `f`, or `{c}` for a constant `c`.
pub fn minimal_um_class(f: &FunctionTable<bool>) -> Result<VSet> {
    check_boolean(f)?;
    if let Some(&c) = f.constant_value() {
        return Ok(VSet::of(&[if c { UnaryBool::Top } else { UnaryBool::Bot }]));
    }
    let mut v = VSet::EMPTY;
    for k in f.essential_arguments() {
        for i in 0..f.len() {
            let (hi, lo) = f.cofactor_pair(i, k);
            v.insert(UnaryBool::from_values(*lo, *hi));
        }
    }
    Ok(v)
}

pub fn um_membership(f: &FunctionTable<bool>, v: VSet) -> Result<bool> {
    Ok(minimal_um_class(f)?.is_subset(v))
}

/// The sixteen classes in their customary numbering, `1..=16`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassId(u8);

const CLASS_NAMES: [&str; 16] = [
    "empty",
    "all",
    "const0",
    "const1",
    "id",
    "neg",
    "const",
    "chi-top",
    "chi-bot-or-0",
    "chi-bot-or-1",
    "chi-top-or-1",
    "parity-like",
    "cls13",
    "cls14",
    "nondecreasing",
    "nonincreasing",
];

const CLASS_SETS: [u8; 16] = {
    const B: u8 = 1;
    const T: u8 = 2;
    const I: u8 = 4;
    const N: u8 = 8;
    [
        0,
        B | T | I | N,
        B,
        T,
        I,
        N,
        B | T,
        B | I,
        B | N,
        T | I,
        T | N,
        I | N,
        B | I | N,
        T | I | N,
        B | T | I,
        B | T | N,
    ]
};

impl ClassId {
    pub fn new(id: u8) -> Result<Self> {
        if (1..=16).contains(&id) {
            Ok(ClassId(id))
        } else {
            Err(Error::InvalidClassId(id))
        }
    }

    pub fn all() -> impl Iterator<Item = ClassId> {
        (1..=16).map(ClassId)
    }

    pub fn id(self) -> u8 {
        self.0
    }

    pub fn name(self) -> &'static str {
        CLASS_NAMES[usize::from(self.0 - 1)]
    }

    pub fn from_name(name: &str) -> Option<Self> {
        CLASS_NAMES
            .iter()
            .position(|&n| n == name)
            .map(|i| ClassId(i as u8 + 1))
            .or_else(|| name.parse().ok().and_then(|id| ClassId::new(id).ok()))
    }

    pub fn vset(self) -> VSet {
        VSet(CLASS_SETS[usize::from(self.0 - 1)])
    }

    pub fn from_vset(v: VSet) -> Self {
        let i = CLASS_SETS.iter().position(|&b| b == v.0).expect("every set is listed");
        ClassId(i as u8 + 1)
    }
}

/// The reduced form of `f` is `g` on `m` arguments; `f ≡ g_m` for the
/// family member of matching arity.
fn equivalent_to(f: &FunctionTable<bool>, family: impl Fn(&[usize]) -> bool) -> bool {
    let (reduced, kept) = f.without_inessential();
    if kept.is_empty() {
        return false;
    }
    let target = FunctionTable::boolean(kept.len(), family).expect("small arity");
    reduced == target
}

fn is_constant_value(f: &FunctionTable<bool>, c: bool) -> bool {
    f.constant_value() == Some(&c)
}

fn partials(f: &FunctionTable<bool>) -> Vec<FunctionTable<bool>> {
    (0..f.arity())
        .map(|j| boolean_partial(f, j).expect("index in range"))
        .collect()
}

/// Membership through the closed-form description of each class rather
/// than through unary sections.
pub fn um_closed_form(f: &FunctionTable<bool>, class: ClassId) -> Result<bool> {
    check_boolean(f)?;
    let and = |x: &[usize]| x.iter().all(|&b| b == 1);
    let nor = |x: &[usize]| x.iter().all(|&b| b == 0);
    let or = |x: &[usize]| x.contains(&1);
    let nand = |x: &[usize]| x.contains(&0);
    let constant = f.is_constant();
    Ok(match class.0 {
        1 => false,
        2 => true,
        3 => is_constant_value(f, false),
        4 => is_constant_value(f, true),
        5 => equivalent_to(f, |x| x == [1]),
        6 => equivalent_to(f, |x| x == [0]),
        7 => constant,
        8 => equivalent_to(f, and) || is_constant_value(f, false),
        9 => equivalent_to(f, nor) || is_constant_value(f, false),
        10 => equivalent_to(f, or) || is_constant_value(f, true),
        11 => equivalent_to(f, nand) || is_constant_value(f, true),
        12 => !constant && partials(f).iter().all(|d| d.is_constant()),
        13 => {
            !is_constant_value(f, true)
                && partials(f).iter().all(|d| {
                    d.constant_value() == Some(&false) || d.values().iter().zip(f.values()).all(|(&dj, &fx)| dj || !fx)
                })
        }
        14 => {
            !is_constant_value(f, false)
                && partials(f).iter().all(|d| {
                    d.constant_value() == Some(&false) || d.values().iter().zip(f.values()).all(|(&dj, &fx)| dj || fx)
                })
        }
        15 => (0..f.arity()).all(|j| boolean_delta(f, j).expect("index").all_nonnegative()),
        16 => (0..f.arity()).all(|j| boolean_delta(f, j).expect("index").all_nonpositive()),
        _ => unreachable!("validated class id"),
    })
}

/// The three decomposition formulas that single out nondecreasing Boolean
/// functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonotoneFormula {
    /// `f(x) = (x_k ∧ f(x_k^1)) ∨ f(x_k^0)`
    Select,
    /// `f(x) = med(x_k, f(x_k^1), f(x_k^0))`
    Median,
    /// `f(x) = x_k (f(x_k^1) ∨ f(x_k^0)) + (1 - x_k)(f(x_k^1) ∧ f(x_k^0))`
    Affine,
}

/// Whether `f` satisfies the formula at every point and pivot.
pub fn satisfies_monotone_formula(f: &FunctionTable<bool>, formula: MonotoneFormula) -> Result<bool> {
    check_boolean(f)?;
    for i in 0..f.len() {
        let x = f.point_at(i);
        for k in 0..f.arity() {
            let (&hi, &lo) = f.cofactor_pair(i, k);
            let p = x[k] == 1;
            let rhs = match formula {
                MonotoneFormula::Select => (p && hi) || lo,
                MonotoneFormula::Median => (p && hi) || (hi && lo) || (lo && p),
                MonotoneFormula::Affine => {
                    let value = if p { u8::from(hi || lo) } else { u8::from(hi && lo) };
                    value == 1
                }
            };
            if rhs != *f.value_at(i) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether `f` lies in the class of Π-decomposable functions. A constant
/// `c` needs `Π(p, c, c) = c` for every `p`; a nonconstant function is
/// tested on its essential arguments only.
pub fn gamma_membership<Y: Value, P: Pivotal<Y>>(f: &FunctionTable<Y>, pi: &P) -> Result<bool> {
    if let Some(c) = f.constant_value() {
        let unary = FunctionTable::constant(f.sort().clone(), 1, c.clone())?;
        return Ok(check_decomposition(&unary, pi)?.holds);
    }
    let (reduced, _) = f.without_inessential();
    Ok(check_decomposition(&reduced, pi)?.holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::TotalOrder;
    use crate::pivotal::{Ite, Median};

    fn and2() -> FunctionTable<bool> {
        FunctionTable::boolean(2, |x| x[0] == 1 && x[1] == 1).unwrap()
    }

    fn parity(n: usize) -> FunctionTable<bool> {
        FunctionTable::boolean(n, |x| x.iter().sum::<usize>() % 2 == 1).unwrap()
    }

    #[test]
    fn partial_examples() {
        let d = boolean_partial(&parity(2), 0).unwrap();
        assert_eq!(d.constant_value(), Some(&true));
        let c = FunctionTable::constant(Sort::Boolean, 2, true).unwrap();
        assert_eq!(boolean_partial(&c, 1).unwrap().constant_value(), Some(&false));
        let d = boolean_partial(&and2(), 0).unwrap();
        assert_eq!(d, FunctionTable::boolean(2, |x| x[1] == 1).unwrap());
        assert!(boolean_partial(&and2(), 2).is_err());
    }

    #[test]
    fn delta_examples() {
        let or2 = FunctionTable::boolean(2, |x| x[0] == 1 || x[1] == 1).unwrap();
        let d = boolean_delta(&or2, 0).unwrap();
        for x in or2.points() {
            let expected = if x[1] == 0 { 1 } else { 0 };
            assert_eq!(d.values[or2.index_of(&x).unwrap()], expected);
        }
        let neg = FunctionTable::boolean(1, |x| x[0] == 0).unwrap();
        assert_eq!(boolean_delta(&neg, 0).unwrap().values, vec![-1, -1]);
        let c = FunctionTable::constant(Sort::Boolean, 3, false).unwrap();
        assert!(boolean_delta(&c, 2).unwrap().values.iter().all(|&v| v == 0));
    }

    #[test]
    fn minimal_class_examples() {
        use UnaryBool::*;
        assert_eq!(minimal_um_class(&and2()).unwrap(), VSet::of(&[Bot, Id]));
        assert_eq!(minimal_um_class(&parity(2)).unwrap(), VSet::of(&[Id, Neg]));
        let one = FunctionTable::constant(Sort::Boolean, 3, true).unwrap();
        assert_eq!(minimal_um_class(&one).unwrap(), VSet::of(&[Top]));
        assert!(um_membership(&and2(), VSet::of(&[Bot, Top, Id])).unwrap());
        assert!(!um_membership(&and2(), VSet::of(&[Id, Neg])).unwrap());
        for f in FunctionTable::all_boolean(2) {
            assert!(um_membership(&f, VSet::ALL).unwrap());
        }
    }

    #[test]
    fn closed_form_examples() {
        let chi00 = FunctionTable::boolean(2, |x| x[0] == 0 && x[1] == 0).unwrap();
        assert!(um_closed_form(&chi00, ClassId::new(9).unwrap()).unwrap());
        let or2 = FunctionTable::boolean(2, |x| x[0] == 1 || x[1] == 1).unwrap();
        assert!(um_closed_form(&or2, ClassId::new(15).unwrap()).unwrap());
        assert!(um_closed_form(&parity(3), ClassId::new(13).unwrap()).unwrap());
        assert_eq!(ClassId::new(17), Err(Error::InvalidClassId(17)));
        assert_eq!(ClassId::new(0), Err(Error::InvalidClassId(0)));
    }

    #[test]
    fn class_names_round_trip() {
        for c in ClassId::all() {
            assert_eq!(ClassId::from_name(c.name()), Some(c));
            assert_eq!(ClassId::from_vset(c.vset()), c);
        }
        let sets: std::collections::BTreeSet<_> = ClassId::all().map(ClassId::vset).collect();
        assert_eq!(sets.len(), 16);
        assert_eq!(ClassId::from_name("parity-like").unwrap().vset().to_string(), "{id,neg}");
        assert_eq!(VSet::parse("{id, neg}"), Some(VSet::of(&[UnaryBool::Id, UnaryBool::Neg])));
        assert_eq!(VSet::parse("{}"), Some(VSet::EMPTY));
        assert_eq!(VSet::parse("{foo}"), None);
    }

    #[test]
    fn closed_forms_agree_with_unary_sections() {
        for n in 1..=3 {
            for f in FunctionTable::all_boolean(n) {
                for c in ClassId::all() {
                    assert_eq!(
                        um_membership(&f, c.vset()).unwrap(),
                        um_closed_form(&f, c).unwrap(),
                        "class {} on {:?}",
                        c.id(),
                        f.to_bits()
                    );
                }
            }
        }
    }

    #[test]
    fn algebra_examples() {
        use UnaryBool::*;
        let up = VSet::of(&[Bot, Top, Id]);
        let down = VSet::of(&[Bot, Top, Neg]);
        assert_eq!(um_algebra(AlgebraOp::Meet, up, Some(down)).unwrap(), VSet::of(&[Bot, Top]));
        assert_eq!(um_algebra(AlgebraOp::Complement, VSet::EMPTY, None).unwrap(), VSet::ALL);
        assert_eq!(
            um_algebra(AlgebraOp::Join, VSet::of(&[Id]), Some(VSet::of(&[Neg]))).unwrap(),
            VSet::of(&[Id, Neg])
        );
        assert!(um_algebra(AlgebraOp::Join, up, None).is_err());
    }

    #[test]
    fn monotone_formulas_characterize_nondecreasing() {
        let fifteen = ClassId::new(15).unwrap();
        for n in 1..=3 {
            for f in FunctionTable::all_boolean(n) {
                let nondecreasing = f.points().all(|x| {
                    (0..n).all(|k| {
                        x[k] == 1 || f.evaluate(&x).unwrap() <= f.evaluate(&x.substitute(k, 1).unwrap()).unwrap()
                    })
                });
                for formula in [MonotoneFormula::Select, MonotoneFormula::Median, MonotoneFormula::Affine] {
                    assert_eq!(satisfies_monotone_formula(&f, formula).unwrap(), nondecreasing);
                }
                assert_eq!(um_closed_form(&f, fifteen).unwrap(), nondecreasing);
                let deltas = (0..n).all(|j| boolean_delta(&f, j).unwrap().all_nonnegative());
                assert_eq!(deltas, nondecreasing);
                let essential = f.essential_arguments();
                for j in 0..n {
                    let flat = boolean_partial(&f, j).unwrap().constant_value() == Some(&false);
                    assert_eq!(flat, !essential.contains(&j));
                }
            }
        }
    }

    #[test]
    fn gamma_examples() {
        for n in 1..=3 {
            for f in FunctionTable::all_boolean(n) {
                assert!(gamma_membership(&f, &Ite).unwrap());
            }
        }
        assert!(!gamma_membership(&parity(2), &Median::new(TotalOrder)).unwrap());
        let c = FunctionTable::constant(Sort::Boolean, 2, true).unwrap();
        assert!(gamma_membership(&c, &Ite).unwrap());
        // gamma membership of nondecreasing functions under the median
        for f in FunctionTable::all_boolean(3) {
            let fifteen = um_closed_form(&f, ClassId::new(15).unwrap()).unwrap();
            assert_eq!(gamma_membership(&f, &Median::new(TotalOrder)).unwrap(), fifteen);
        }
    }
}
