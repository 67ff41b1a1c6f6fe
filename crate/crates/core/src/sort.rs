//! Finite sorts used as function domains, and the [`Value`] trait for
//! codomain elements.

use std::fmt::{self, Debug};
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;
use crate::scalar::Rational;

/// A domain element, stored as its index in the sort.
pub type Elem = usize;

/// A finite domain with two distinguished elements `0` and `1`.
///
/// Elements are indices `0..size()`. For chains and grids the index order is
/// the natural order of the sort.
#[derive(Clone)]
pub enum Sort {
    Boolean,
    /// Chain with `m >= 2` elements; `Chain(2)` is the Boolean sort.
    Chain(usize),
    Lattice(Arc<FiniteLattice>),
    /// Strictly increasing rationals containing both 0 and 1.
    Grid(Arc<[Rational]>),
}

impl Sort {
    pub fn chain(m: usize) -> Result<Self> {
        match m {
            0 | 1 => Err(Error::SortMismatch(format!(
                "a chain needs at least two elements, got {m}"
            ))),
            2 => Ok(Sort::Boolean),
            m => Ok(Sort::Chain(m)),
        }
    }

    pub fn lattice(lattice: FiniteLattice) -> Self {
        Sort::Lattice(Arc::new(lattice))
    }

    /// The grid `{0, 1/d, ..., 1}`.
    pub fn unit_grid(divisions: usize) -> Self {
        Sort::Grid(crate::scalar::unit_grid(divisions).into())
    }

    pub fn grid(points: Vec<Rational>) -> Result<Self> {
        if points.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidGrid("points must be strictly increasing".into()));
        }
        if !points.iter().any(Zero::is_zero) || !points.iter().any(One::is_one) {
            return Err(Error::InvalidGrid("points must contain 0 and 1".into()));
        }
        Ok(Sort::Grid(points.into()))
    }

    pub fn size(&self) -> usize {
        match self {
            Sort::Boolean => 2,
            Sort::Chain(m) => *m,
            Sort::Lattice(l) => l.size(),
            Sort::Grid(g) => g.len(),
        }
    }

    pub fn zero(&self) -> Elem {
        match self {
            Sort::Boolean | Sort::Chain(_) => 0,
            Sort::Lattice(l) => l.bottom(),
            Sort::Grid(g) => g.iter().position(Zero::is_zero).expect("validated grid"),
        }
    }

    pub fn one(&self) -> Elem {
        match self {
            Sort::Boolean => 1,
            Sort::Chain(m) => m - 1,
            Sort::Lattice(l) => l.top(),
            Sort::Grid(g) => g.iter().position(One::is_one).expect("validated grid"),
        }
    }

    pub fn contains(&self, e: Elem) -> bool {
        e < self.size()
    }

    pub fn check(&self, e: Elem) -> Result<()> {
        if self.contains(e) {
            Ok(())
        } else {
            Err(Error::ForeignElement {
                elem: e,
                size: self.size(),
            })
        }
    }

    pub fn is_boolean(&self) -> bool {
        matches!(self, Sort::Boolean | Sort::Chain(2))
    }

    /// Rational coordinate of an element, for sorts embedded in the reals.
    pub fn coordinate(&self, e: Elem) -> Option<Rational> {
        match self {
            Sort::Boolean | Sort::Chain(2) if e < 2 => Some(Rational::from_integer(e.into())),
            Sort::Grid(g) => g.get(e).cloned(),
            _ => None,
        }
    }

    /// Element whose coordinate equals `value`.
    pub fn elem_at(&self, value: &Rational) -> Option<Elem> {
        (0..self.size()).find(|&e| self.coordinate(e).as_ref() == Some(value))
    }

    pub fn label(&self, e: Elem) -> String {
        match self {
            Sort::Boolean => e.to_string(),
            Sort::Chain(m) => chain_label(*m, e),
            Sort::Lattice(l) => l.name(e).to_string(),
            Sort::Grid(g) => g[e].to_string(),
        }
    }

    /// Looks an element up by its label. `0` and `1` always name the
    /// distinguished elements.
    pub fn parse_elem(&self, text: &str) -> Option<Elem> {
        let text = text.trim();
        if let Some(e) = (0..self.size()).find(|&e| self.label(e) == text) {
            return Some(e);
        }
        if let Sort::Grid(_) = self {
            if let Some(q) = crate::scalar::parse_rational(text) {
                return self.elem_at(&q);
            }
        }
        match text {
            "0" => Some(self.zero()),
            "1" => Some(self.one()),
            _ => None,
        }
    }

    /// Order of the sort: index order for chains and grids, the lattice order
    /// otherwise.
    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        match self {
            Sort::Lattice(l) => l.leq(a, b),
            _ => a <= b,
        }
    }

    /// The sort viewed as a lattice, when it is one (grids are chains too).
    pub fn as_lattice(&self) -> Option<Arc<FiniteLattice>> {
        match self {
            Sort::Boolean => Some(Arc::new(FiniteLattice::chain(2))),
            Sort::Chain(m) => Some(Arc::new(FiniteLattice::chain(*m))),
            Sort::Lattice(l) => Some(l.clone()),
            Sort::Grid(_) => None,
        }
    }

    fn key(&self) -> SortKey<'_> {
        match self {
            Sort::Boolean | Sort::Chain(2) => SortKey::Chain(2),
            Sort::Chain(m) => SortKey::Chain(*m),
            Sort::Lattice(l) => SortKey::Lattice(l),
            Sort::Grid(g) => SortKey::Grid(g),
        }
    }
}

fn chain_label(m: usize, e: Elem) -> String {
    match (m, e) {
        (_, 0) => "0".into(),
        (m, e) if e + 1 == m => "1".into(),
        (3, 1) => "m".into(),
        (_, e) => format!("c{e}"),
    }
}

#[derive(PartialEq, Eq, Hash)]
enum SortKey<'a> {
    Chain(usize),
    Lattice(&'a FiniteLattice),
    Grid(&'a [Rational]),
}

impl PartialEq for Sort {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for Sort {}

impl Hash for Sort {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key().hash(state)
    }
}

impl Debug for Sort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.key() {
            SortKey::Chain(2) => write!(f, "Boolean"),
            SortKey::Chain(m) => write!(f, "Chain({m})"),
            SortKey::Lattice(l) => write!(f, "Lattice({} elements)", l.size()),
            SortKey::Grid(g) => write!(f, "Grid({} points)", g.len()),
        }
    }
}

/// Codomain values of function tables.
pub trait Value: Clone + Eq + Ord + Hash + Debug + Send + Sync + 'static {
    /// Embeds a domain element into the value space (needed whenever a
    /// pivot value is combined with cofactor values, as in `med(p, u, v)`).
    fn embed(sort: &Sort, e: Elem) -> Option<Self>;

    /// The value as a real number, for codomains embedded in the reals.
    fn to_rational(&self) -> Option<Rational> {
        None
    }
}

impl Value for bool {
    fn embed(sort: &Sort, e: Elem) -> Option<Self> {
        if e == sort.one() {
            Some(true)
        } else if e == sort.zero() {
            Some(false)
        } else {
            None
        }
    }

    fn to_rational(&self) -> Option<Rational> {
        Some(Rational::from_integer(u8::from(*self).into()))
    }
}

/// Lattice- or chain-valued tables store element indices; embedding is the
/// identity, so the codomain is the domain sort itself.
impl Value for Elem {
    fn embed(sort: &Sort, e: Elem) -> Option<Self> {
        sort.contains(e).then_some(e)
    }
}

impl Value for Rational {
    fn embed(sort: &Sort, e: Elem) -> Option<Self> {
        sort.coordinate(e)
    }

    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    #[test]
    fn boolean_is_two_chain() {
        assert_eq!(Sort::chain(2).unwrap(), Sort::Boolean);
        assert_eq!(Sort::Chain(2), Sort::Boolean);
        assert_ne!(Sort::Chain(3), Sort::Boolean);
        assert!(Sort::chain(1).is_err());
    }

    #[test]
    fn distinguished_elements_differ() {
        let sorts = [
            Sort::Boolean,
            Sort::Chain(4),
            Sort::unit_grid(4),
            Sort::lattice(FiniteLattice::chain(3)),
        ];
        for s in sorts {
            assert_ne!(s.zero(), s.one(), "{s:?}");
        }
    }

    #[test]
    fn grid_validation() {
        assert!(Sort::grid(vec![ratio(0, 1), ratio(1, 2)]).is_err());
        assert!(Sort::grid(vec![ratio(1, 1), ratio(0, 1)]).is_err());
        let g = Sort::grid(vec![ratio(-1, 1), ratio(0, 1), ratio(1, 1)]).unwrap();
        assert_eq!(g.zero(), 1);
        assert_eq!(g.one(), 2);
    }

    #[test]
    fn labels_round_trip() {
        let s = Sort::unit_grid(4);
        for e in 0..s.size() {
            assert_eq!(s.parse_elem(&s.label(e)), Some(e));
        }
        assert_eq!(Sort::Chain(3).label(1), "m");
        assert_eq!(Sort::Chain(3).parse_elem("m"), Some(1));
    }
}
