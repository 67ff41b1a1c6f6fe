//! Reduced ordered decision diagrams obtained by pivoting on one argument
//! at a time over the vertex data `f|{0,1}^n`.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::extensions::vertex_monotone_violation;
use crate::lattice::Order;
use crate::scalar::Rational;
use crate::sort::Value;
use crate::table::FunctionTable;

/// How a node combines its pivot value with its two children.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    /// `Π(p, u, v) = u` if `p = 1`, `v` if `p = 0`.
    Shannon,
    /// `Π(p, u, v) = med(p, u, v)`; needs nondecreasing vertex data.
    Median,
    /// `Π(p, u, v) = p u + (1 - p) v`; needs a rational codomain.
    MleAffine,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::Shannon => "shannon",
            Rule::Median => "median",
            Rule::MleAffine => "mle",
        }
    }

    pub fn parse(text: &str) -> Option<Self> {
        match text {
            "shannon" => Some(Rule::Shannon),
            "median" => Some(Rule::Median),
            "mle" | "mle-affine" => Some(Rule::MleAffine),
            _ => None,
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Node<Y> {
    /// `level` is a position in the variable order; `lo` and `hi` are the
    /// children for pivot value 0 and 1.
    Internal { level: usize, lo: usize, hi: usize },
    Terminal(Y),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram<Y> {
    rule: Rule,
    order: Vec<usize>,
    nodes: Vec<Node<Y>>,
    root: usize,
}

fn check_order(arity: usize, order: &[usize]) -> Result<()> {
    if order.len() != arity {
        return Err(Error::ArityMismatch {
            expected: arity,
            found: order.len(),
        });
    }
    let mut seen = vec![false; arity];
    for (index, &v) in order.iter().enumerate() {
        if v >= arity || seen[v] {
            return Err(Error::MapOutOfRange {
                index,
                target: v,
                bound: arity,
            });
        }
        seen[v] = true;
    }
    Ok(())
}

impl<Y: Value> Diagram<Y> {
    /// Builds the diagram of the vertex data of `f` under `rule`, pivoting
    /// on `var_order[0]` first. `order` is the codomain order, used only by
    /// the median rule.
    pub fn build<O: Order<Y>>(f: &FunctionTable<Y>, rule: Rule, var_order: &[usize], order: &O) -> Result<Self> {
        let n = f.arity();
        check_order(n, var_order)?;
        let sort = f.sort();
        let (zero, one) = (sort.zero(), sort.one());
        let mut point = vec![zero; n];
        // vertex data in order-position layout: bit l (from the top) is
        // the value of argument var_order[l]
        let vertices: Vec<Y> = (0..1usize << n)
            .map(|b| {
                for (l, &v) in var_order.iter().enumerate() {
                    point[v] = if b >> (n - 1 - l) & 1 == 1 { one } else { zero };
                }
                f.evaluate(&point).cloned()
            })
            .collect::<Result<_>>()?;

        match rule {
            Rule::Shannon => {}
            Rule::MleAffine => {
                if let Some(v) = vertices.iter().find(|v| v.to_rational().is_none()) {
                    return Err(Error::RuleMismatch {
                        rule: rule.name().into(),
                        reason: format!("value {v:?} is not rational"),
                    });
                }
            }
            Rule::Median => {
                let by_mask: Vec<Y> = (0..1usize << n)
                    .map(|m| {
                        let b = (0..n)
                            .filter(|&l| m >> var_order[l] & 1 == 1)
                            .fold(0, |b, l| b | 1 << (n - 1 - l));
                        vertices[b].clone()
                    })
                    .collect();
                if let Some((lower, upper)) = vertex_monotone_violation(&by_mask, order) {
                    return Err(Error::NotMonotone { lower, upper });
                }
            }
        }

        let mut nodes = Vec::new();
        let mut terminals: HashMap<Y, usize> = HashMap::new();
        let mut current: Vec<usize> = vertices
            .into_iter()
            .map(|v| {
                *terminals.entry(v.clone()).or_insert_with(|| {
                    nodes.push(Node::Terminal(v));
                    nodes.len() - 1
                })
            })
            .collect();
        let mut unique: HashMap<(usize, usize, usize), usize> = HashMap::new();
        for level in (0..n).rev() {
            current = current
                .chunks(2)
                .map(|pair| {
                    let (lo, hi) = (pair[0], pair[1]);
                    if lo == hi {
                        return lo;
                    }
                    *unique.entry((level, lo, hi)).or_insert_with(|| {
                        nodes.push(Node::Internal { level, lo, hi });
                        nodes.len() - 1
                    })
                })
                .collect();
        }
        Ok(Diagram {
            rule,
            order: var_order.to_vec(),
            nodes,
            root: current[0],
        })
    }

    pub fn rule(&self) -> Rule {
        self.rule
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn arity(&self) -> usize {
        self.order.len()
    }

    pub fn nodes(&self) -> &[Node<Y>] {
        &self.nodes
    }

    pub fn root(&self) -> usize {
        self.root
    }

    /// `(internal, terminal)`.
    pub fn node_count(&self) -> (usize, usize) {
        let terminal = self
            .nodes
            .iter()
            .filter(|n| matches!(n, Node::Terminal(_)))
            .count();
        (self.nodes.len() - terminal, terminal)
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len == self.arity() {
            Ok(())
        } else {
            Err(Error::ArityMismatch {
                expected: self.arity(),
                found: len,
            })
        }
    }

    /// Follows the path selected by a Boolean point.
    pub fn select(&self, x: &[bool]) -> Result<&Y> {
        self.check_len(x.len())?;
        let mut id = self.root;
        loop {
            match &self.nodes[id] {
                Node::Terminal(y) => return Ok(y),
                Node::Internal { level, lo, hi } => {
                    id = if x[self.order[*level]] { *hi } else { *lo };
                }
            }
        }
    }

    /// Folds `x_k hi + (1 - x_k) lo` bottom-up; equals the multilinear
    /// extension of the vertex data.
    pub fn fold_affine(&self, x: &[Rational]) -> Result<Rational> {
        self.check_len(x.len())?;
        let mut memo: Vec<Option<Rational>> = vec![None; self.nodes.len()];
        for (id, node) in self.nodes.iter().enumerate() {
            let value = match node {
                Node::Terminal(y) => y.to_rational().ok_or_else(|| Error::RuleMismatch {
                    rule: Rule::MleAffine.name().into(),
                    reason: format!("terminal {y:?} is not rational"),
                })?,
                Node::Internal { level, lo, hi } => {
                    let p = &x[self.order[*level]];
                    let (lo, hi) = (memo[*lo].as_ref().expect("child first"), memo[*hi].as_ref().expect("child first"));
                    p * hi + (Rational::from_integer(1.into()) - p) * lo
                }
            };
            memo[id] = Some(value);
        }
        Ok(memo[self.root].take().expect("root evaluated"))
    }

    /// Folds `med(x_k, hi, lo)` bottom-up over the codomain order.
    pub fn fold_median<O: Order<Y>>(&self, x: &[Y], order: &O) -> Result<Y> {
        self.check_len(x.len())?;
        let mut memo: Vec<Option<Y>> = vec![None; self.nodes.len()];
        for (id, node) in self.nodes.iter().enumerate() {
            let value = match node {
                Node::Terminal(y) => y.clone(),
                Node::Internal { level, lo, hi } => {
                    let (lo, hi) = (memo[*lo].as_ref().expect("child first"), memo[*hi].as_ref().expect("child first"));
                    order.median(&x[self.order[*level]], hi, lo)
                }
            };
            memo[id] = Some(value);
        }
        Ok(memo[self.root].take().expect("root evaluated"))
    }

    /// Text dump: a `dd <rule> <n> <order>` header with 1-based order, then
    /// one line per node, `id level lo hi` or `id term <value>`, root last.
    pub fn dump(&self, value: impl Fn(&Y) -> String) -> String {
        let order: Vec<String> = self.order.iter().map(|v| (v + 1).to_string()).collect();
        let mut out = format!("dd {} {} {}\n", self.rule, self.arity(), order.join(","));
        let mut ids: Vec<usize> = (0..self.nodes.len()).filter(|&i| i != self.root).collect();
        ids.push(self.root);
        for id in ids {
            match &self.nodes[id] {
                Node::Terminal(y) => out += &format!("{id} term {}\n", value(y)),
                Node::Internal { level, lo, hi } => out += &format!("{id} {level} {lo} {hi}\n"),
            }
        }
        out
    }

    /// Rebuilds a diagram from its parts, checking that it is ordered,
    /// reduced and well-formed.
    pub fn from_parts(rule: Rule, order: Vec<usize>, nodes: Vec<Node<Y>>, root: usize) -> Result<Self> {
        check_order(order.len(), &order)?;
        let bad = |reason: String| Error::RuleMismatch {
            rule: rule.name().into(),
            reason,
        };
        if root >= nodes.len() {
            return Err(bad(format!("root {root} is not a node")));
        }
        let mut seen = std::collections::HashSet::new();
        for (id, node) in nodes.iter().enumerate() {
            if !seen.insert(node) {
                return Err(bad(format!("node {id} duplicates another node")));
            }
            if let Node::Internal { level, lo, hi } = node {
                if *level >= order.len() || lo == hi {
                    return Err(bad(format!("node {id} is not reduced or has a bad level")));
                }
                for &child in [lo, hi] {
                    let ordered = match nodes.get(child) {
                        Some(Node::Terminal(_)) => true,
                        Some(Node::Internal { level: l, .. }) => l > level && child < id,
                        None => false,
                    };
                    if !ordered {
                        return Err(bad(format!("child {child} of node {id} breaks the order")));
                    }
                }
            }
        }
        Ok(Diagram {
            rule,
            order,
            nodes,
            root,
        })
    }
}

/// The identity order `0, 1, ..., n - 1`.
pub fn natural_order(arity: usize) -> Vec<usize> {
    (0..arity).collect()
}
