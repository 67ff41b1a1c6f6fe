//! Plain-text file formats.
//!
//! | ext    | header                          | body                                  |
//! |--------|---------------------------------|---------------------------------------|
//! | `.tt`  | `bool <n>`                      | one line of `2^n` characters `0`/`1`  |
//! | `.pbf` | `pbf <n>`                       | `2^n` rationals                       |
//! | `.lat` | `lat <count>`                   | names, `bottom a top b`, `leq a b`... |
//! | `.lft` | `lft <n> <lattice-file>`        | `|X|^n` element names                 |
//! | `.pvf` | `pvf extensional <size>`        | lines `p u v -> w`                    |
//! | `.pvf` | `pvf builtin <family> [params]` |                                       |
//! | `.mlf` | `mlf <n>`                       | lines `S <rational>`                  |
//! | `.lvf` | `lvf <n>`                       | lines `S <rational>`                  |
//! | dump   | `dd <rule> <n> <order>`         | `id level lo hi` / `id term v`        |
//!
//! Table bodies use the table index order (`x_1` most significant). Blank
//! lines and lines starting with `#` are ignored.

use std::collections::BTreeMap;

use crate::diagram::{Diagram, Node, Rule};
use crate::error::{Error, Result};
use crate::extensions::{LovaszForm, MultilinearForm};
use crate::lattice::{FiniteLattice, LatticeSpec};
use crate::pivotal::Extensional;
use crate::scalar::{parse_rational, Rational};
use crate::sort::{Elem, Sort, Value};
use crate::table::FunctionTable;

/// Conversion between codomain values and file tokens.
pub trait TextValue: Value {
    fn parse_token(sort: &Sort, token: &str) -> Option<Self>;
    fn format_token(&self, sort: &Sort) -> String;
}

impl TextValue for bool {
    fn parse_token(_sort: &Sort, token: &str) -> Option<Self> {
        match token {
            "0" => Some(false),
            "1" => Some(true),
            _ => None,
        }
    }

    fn format_token(&self, _sort: &Sort) -> String {
        u8::from(*self).to_string()
    }
}

impl TextValue for Rational {
    fn parse_token(_sort: &Sort, token: &str) -> Option<Self> {
        parse_rational(token)
    }

    fn format_token(&self, _sort: &Sort) -> String {
        self.to_string()
    }
}

impl TextValue for Elem {
    fn parse_token(sort: &Sort, token: &str) -> Option<Self> {
        sort.parse_elem(token)
    }

    fn format_token(&self, sort: &Sort) -> String {
        sort.label(*self)
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Content lines with their 1-based line numbers.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    tag: &str,
) -> Result<(usize, Vec<&'a str>)> {
    let (no, line) = lines.next().ok_or_else(|| parse_err(1, format!("missing `{tag}` header")))?;
    let mut words = line.split_whitespace();
    if words.next() != Some(tag) {
        return Err(parse_err(no, format!("expected header `{tag} ...`")));
    }
    Ok((no, words.collect()))
}

fn parse_count(no: usize, word: Option<&&str>, what: &str) -> Result<usize> {
    word.and_then(|w| w.parse().ok())
        .ok_or_else(|| parse_err(no, format!("expected {what}")))
}

pub fn parse_tt(text: &str) -> Result<FunctionTable<bool>> {
    let mut it = lines(text);
    let (no, words) = header(&mut it, "bool")?;
    let n = parse_count(no, words.first(), "arity")?;
    let body: String = it.map(|(_, l)| l).collect();
    let bits = body
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            c => Err(parse_err(no + 1, format!("unexpected character `{c}` in truth table"))),
        })
        .collect::<Result<Vec<_>>>()?;
    let expected = 1usize.checked_shl(n as u32).unwrap_or(usize::MAX);
    if bits.len() != expected {
        return Err(parse_err(
            no + 1,
            format!("truth table has {} entries, expected {expected}", bits.len()),
        ));
    }
    FunctionTable::new(Sort::Boolean, n, bits)
}

pub fn write_tt(f: &FunctionTable<bool>) -> String {
    let bits: String = f.values().iter().map(|&b| if b { '1' } else { '0' }).collect();
    format!("bool {}\n{bits}\n", f.arity())
}

fn parse_values<'a, Y: TextValue>(
    it: impl Iterator<Item = (usize, &'a str)>,
    sort: &Sort,
    expected: usize,
    header_line: usize,
) -> Result<Vec<Y>> {
    let mut values = Vec::with_capacity(expected);
    for (no, line) in it {
        for token in line.split_whitespace() {
            values.push(
                Y::parse_token(sort, token).ok_or_else(|| parse_err(no, format!("bad value `{token}`")))?,
            );
        }
    }
    if values.len() != expected {
        return Err(parse_err(
            header_line,
            format!("found {} values, expected {expected}", values.len()),
        ));
    }
    Ok(values)
}

pub fn parse_pbf(text: &str) -> Result<FunctionTable<Rational>> {
    let mut it = lines(text);
    let (no, words) = header(&mut it, "pbf")?;
    let n = parse_count(no, words.first(), "arity")?;
    let len = 1usize.checked_shl(n as u32).ok_or(Error::TooLarge { size: 2, arity: n })?;
    let values = parse_values(it, &Sort::Boolean, len, no)?;
    FunctionTable::new(Sort::Boolean, n, values)
}

pub fn write_pbf(f: &FunctionTable<Rational>) -> String {
    let values: Vec<String> = f.values().iter().map(ToString::to_string).collect();
    format!("pbf {}\n{}\n", f.arity(), values.join(" "))
}

pub fn parse_lat(text: &str) -> Result<FiniteLattice> {
    let mut it = lines(text);
    let (no, words) = header(&mut it, "lat")?;
    let count = parse_count(no, words.first(), "element count")?;
    let (no, names) = it.next().ok_or_else(|| parse_err(no + 1, "missing element names"))?;
    let names: Vec<String> = names.split_whitespace().map(String::from).collect();
    if names.len() != count {
        return Err(parse_err(no, format!("{} names listed, header says {count}", names.len())));
    }
    let (no, bounds) = it.next().ok_or_else(|| parse_err(no + 1, "missing `bottom a top b` line"))?;
    let (bottom, top) = match bounds.split_whitespace().collect::<Vec<_>>()[..] {
        ["bottom", b, "top", t] => (b.to_string(), t.to_string()),
        _ => return Err(parse_err(no, "expected `bottom <name> top <name>`")),
    };
    let mut leq = Vec::new();
    for (no, line) in it {
        match line.split_whitespace().collect::<Vec<_>>()[..] {
            ["leq", a, b] => leq.push((a.to_string(), b.to_string())),
            _ => return Err(parse_err(no, "expected `leq <a> <b>`")),
        }
    }
    Ok(LatticeSpec {
        names,
        bottom,
        top,
        leq,
    }
    .validate()?)
}

pub fn write_lat(l: &FiniteLattice) -> String {
    let mut out = format!(
        "lat {}\n{}\nbottom {} top {}\n",
        l.size(),
        l.names().join(" "),
        l.name(l.bottom()),
        l.name(l.top())
    );
    for a in 0..l.size() {
        for b in 0..l.size() {
            if a != b && l.leq(a, b) {
                out += &format!("leq {} {}\n", l.name(a), l.name(b));
            }
        }
    }
    out
}

/// Parses a lattice-valued table; `load` resolves the lattice file named
/// in the header.
pub fn parse_lft(text: &str, load: impl FnOnce(&str) -> Result<FiniteLattice>) -> Result<FunctionTable<Elem>> {
    let mut it = lines(text);
    let (no, words) = header(&mut it, "lft")?;
    let n = parse_count(no, words.first(), "arity")?;
    let path = words.get(1).ok_or_else(|| parse_err(no, "expected lattice file"))?;
    let sort = Sort::lattice(load(path)?);
    let len = crate::table::table_len(sort.size(), n)?;
    let values = parse_values(it, &sort, len, no)?;
    FunctionTable::new(sort, n, values)
}

pub fn write_lft(f: &FunctionTable<Elem>, lattice_path: &str) -> String {
    let names: Vec<String> = f.values().iter().map(|&e| f.sort().label(e)).collect();
    format!("lft {} {lattice_path}\n{}\n", f.arity(), names.join(" "))
}

/// Contents of a `.pvf` file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PvfFile<Y> {
    Extensional(Extensional<Y>),
    Builtin { family: String, params: Vec<String> },
}

/// Parses a pivotal function file; pivot values are read as elements of
/// `sort`, cofactor values as codomain values.
pub fn parse_pvf<Y: TextValue>(text: &str, sort: &Sort) -> Result<PvfFile<Y>> {
    let mut it = lines(text);
    let (no, words) = header(&mut it, "pvf")?;
    match words.first() {
        Some(&"builtin") => {
            let family = words
                .get(1)
                .ok_or_else(|| parse_err(no, "expected a family name"))?
                .to_string();
            Ok(PvfFile::Builtin {
                family,
                params: words[2..].iter().map(|w| w.to_string()).collect(),
            })
        }
        Some(&"extensional") => {
            let size = parse_count(no, words.get(1), "domain size")?;
            if size != sort.size() {
                return Err(parse_err(no, format!("domain size {size} does not match the sort ({})", sort.size())));
            }
            let mut entries = BTreeMap::new();
            for (no, line) in it {
                let toks: Vec<&str> = line.split_whitespace().collect();
                let [p, u, v, "->", w] = toks[..] else {
                    return Err(parse_err(no, "expected `p u v -> w`"));
                };
                let p = sort.parse_elem(p).ok_or_else(|| parse_err(no, format!("unknown element `{p}`")))?;
                let value = |t: &str| Y::parse_token(sort, t).ok_or_else(|| parse_err(no, format!("bad value `{t}`")));
                let key = (p, value(u)?, value(v)?);
                let w = value(w)?;
                if let Some(old) = entries.insert(key, w.clone()) {
                    if old != w {
                        return Err(parse_err(no, "conflicting entry for the same triple"));
                    }
                }
            }
            Ok(PvfFile::Extensional(Extensional::new(entries)))
        }
        _ => Err(parse_err(no, "expected `extensional` or `builtin`")),
    }
}

pub fn write_pvf<Y: TextValue>(pi: &Extensional<Y>, sort: &Sort) -> String {
    let mut out = format!("pvf extensional {}\n", sort.size());
    for ((p, u, v), w) in pi.entries() {
        out += &format!(
            "{} {} {} -> {}\n",
            sort.label(*p),
            u.format_token(sort),
            v.format_token(sort),
            w.format_token(sort)
        );
    }
    out
}

fn parse_masked(text: &str, tag: &str) -> Result<(usize, Vec<Rational>)> {
    let mut it = lines(text);
    let (no, words) = header(&mut it, tag)?;
    let n = parse_count(no, words.first(), "arity")?;
    if n == 0 || n > crate::extensions::MAX_FORM_ARITY {
        return Err(parse_err(no, format!("arity {n} out of range")));
    }
    let mut values = vec![None; 1 << n];
    for (no, line) in it {
        let toks: Vec<&str> = line.split_whitespace().collect();
        let [s, r] = toks[..] else {
            return Err(parse_err(no, "expected `S <rational>`"));
        };
        let s: usize = s.parse().map_err(|_| parse_err(no, format!("bad mask `{s}`")))?;
        let slot = values
            .get_mut(s)
            .ok_or_else(|| parse_err(no, format!("mask {s} exceeds arity {n}")))?;
        if slot.is_some() {
            return Err(parse_err(no, format!("mask {s} listed twice")));
        }
        *slot = Some(parse_rational(r).ok_or_else(|| parse_err(no, format!("bad rational `{r}`")))?);
    }
    Ok((n, values.into_iter().map(|v| v.unwrap_or_else(|| Rational::from_integer(0.into()))).collect()))
}

fn write_masked(tag: &str, n: usize, values: &[Rational]) -> String {
    let mut out = format!("{tag} {n}\n");
    for (s, v) in values.iter().enumerate() {
        out += &format!("{s} {v}\n");
    }
    out
}

/// Vertex values `f(1_S)`; unlisted masks are 0.
pub fn parse_mlf(text: &str) -> Result<MultilinearForm<Rational>> {
    let (n, values) = parse_masked(text, "mlf")?;
    MultilinearForm::new(n, values)
}

pub fn write_mlf(m: &MultilinearForm<Rational>) -> String {
    write_masked("mlf", m.arity(), m.vertex_values())
}

/// Möbius coefficients `a_S`; unlisted masks are 0.
pub fn parse_lvf(text: &str) -> Result<LovaszForm<Rational>> {
    let (n, values) = parse_masked(text, "lvf")?;
    LovaszForm::new(n, values)
}

pub fn write_lvf(l: &LovaszForm<Rational>) -> String {
    write_masked("lvf", l.arity(), l.mobius())
}

pub fn write_dd<Y: TextValue>(d: &Diagram<Y>, sort: &Sort) -> String {
    d.dump(|y| y.format_token(sort))
}

pub fn parse_dd<Y: TextValue>(text: &str, sort: &Sort) -> Result<Diagram<Y>> {
    let mut it = lines(text);
    let (no, words) = header(&mut it, "dd")?;
    let [rule, n, order] = words[..] else {
        return Err(parse_err(no, "expected `dd <rule> <n> <order>`"));
    };
    let rule = Rule::parse(rule).ok_or_else(|| parse_err(no, format!("unknown rule `{rule}`")))?;
    let n: usize = n.parse().map_err(|_| parse_err(no, "bad arity"))?;
    let order = order
        .split(',')
        .map(|t| match t.trim().parse::<usize>() {
            Ok(v) if v >= 1 => Ok(v - 1),
            _ => Err(parse_err(no, format!("bad order entry `{t}`"))),
        })
        .collect::<Result<Vec<_>>>()?;
    if order.len() != n {
        return Err(parse_err(no, "order length differs from arity"));
    }
    let mut nodes: BTreeMap<usize, Node<Y>> = BTreeMap::new();
    let mut last = None;
    for (no, line) in it {
        let toks: Vec<&str> = line.split_whitespace().collect();
        let id_of = |t: &str| t.parse::<usize>().map_err(|_| parse_err(no, format!("bad node id `{t}`")));
        let (id, node) = match toks[..] {
            [id, "term", v] => (
                id_of(id)?,
                Node::Terminal(Y::parse_token(sort, v).ok_or_else(|| parse_err(no, format!("bad value `{v}`")))?),
            ),
            [id, level, lo, hi] => (
                id_of(id)?,
                Node::Internal {
                    level: id_of(level)?,
                    lo: id_of(lo)?,
                    hi: id_of(hi)?,
                },
            ),
            _ => return Err(parse_err(no, "expected `id level lo hi` or `id term <value>`")),
        };
        if nodes.insert(id, node).is_some() {
            return Err(parse_err(no, format!("node {id} defined twice")));
        }
        last = Some(id);
    }
    let root = last.ok_or_else(|| parse_err(no, "diagram has no nodes"))?;
    if nodes.keys().copied().ne(0..nodes.len()) {
        return Err(parse_err(no, "node ids must be 0..count"));
    }
    Diagram::from_parts(rule, order, nodes.into_values().collect(), root)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::TotalOrder;
    use crate::scalar::{int, ratio};

    #[test]
    fn tt_round_trip() {
        let f = FunctionTable::boolean(3, |x| x[0] == 1 || x[1] != x[2]).unwrap();
        let text = write_tt(&f);
        assert_eq!(parse_tt(&text).unwrap(), f);
        assert_eq!(parse_tt("bool 2\n0001\n").unwrap().values(), &[false, false, false, true]);
        assert!(matches!(parse_tt("bool 2\n001\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_tt("bool 2\n0021\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_tt("pbf 2\n0001\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn pbf_round_trip() {
        let text = "pbf 2\n0 1/2\n-3 0.25\n";
        let f = parse_pbf(text).unwrap();
        assert_eq!(f.values(), &[int(0), ratio(1, 2), int(-3), ratio(1, 4)]);
        assert_eq!(parse_pbf(&write_pbf(&f)).unwrap(), f);
    }

    #[test]
    fn lattice_and_lft_round_trip() {
        let text = "lat 4\n0 a b 1\nbottom 0 top 1\nleq 0 a\nleq 0 b\nleq a 1\nleq b 1\nleq 0 1\n";
        let l = parse_lat(text).unwrap();
        assert_eq!(l.size(), 4);
        assert_eq!(parse_lat(&write_lat(&l)).unwrap(), l);
        // transitivity is not inferred
        let missing = "lat 3\n0 m 1\nbottom 0 top 1\nleq 0 m\nleq m 1\n";
        assert!(matches!(parse_lat(missing), Err(Error::Lattice(_))));

        let lft = "lft 1 diamond.lat\n0 b a 1\n";
        let f = parse_lft(lft, |p| {
            assert_eq!(p, "diamond.lat");
            Ok(l.clone())
        })
        .unwrap();
        assert_eq!(f.values(), &[0, 2, 1, 3]);
        let again = parse_lft(&write_lft(&f, "diamond.lat"), |_| Ok(l.clone())).unwrap();
        assert_eq!(again, f);
    }

    #[test]
    fn pvf_round_trip() {
        let f = FunctionTable::boolean(2, |x| x[0] != x[1]).unwrap();
        let pi = crate::pivotal::synthesize_pivotal(&f).unwrap();
        let text = write_pvf(&pi, &Sort::Boolean);
        assert_eq!(parse_pvf::<bool>(&text, &Sort::Boolean).unwrap(), PvfFile::Extensional(pi));
        assert_eq!(
            parse_pvf::<bool>("pvf builtin tnorm 3 0 0 0 0 1 1 0 1 2", &Sort::Boolean).unwrap(),
            PvfFile::Builtin {
                family: "tnorm".into(),
                params: "3 0 0 0 0 1 1 0 1 2".split(' ').map(String::from).collect(),
            }
        );
        assert!(parse_pvf::<bool>("pvf extensional 2\n1 1 0 1\n", &Sort::Boolean).is_err());
        assert!(parse_pvf::<bool>("pvf extensional 2\n1 1 0 -> 1\n1 1 0 -> 0\n", &Sort::Boolean).is_err());
    }

    #[test]
    fn forms_round_trip() {
        let m = parse_mlf("mlf 2\n3 1\n1 1/2\n").unwrap();
        assert_eq!(m.vertex_values(), &[int(0), ratio(1, 2), int(0), int(1)]);
        assert_eq!(parse_mlf(&write_mlf(&m)).unwrap(), m);
        let l = parse_lvf("lvf 3\n3 1\n6 1\n").unwrap();
        assert_eq!(parse_lvf(&write_lvf(&l)).unwrap(), l);
        assert!(parse_lvf("lvf 2\n4 1\n").is_err());
        assert!(parse_lvf("lvf 2\n1 1\n1 2\n").is_err());
    }

    #[test]
    fn dd_round_trip() {
        let f = FunctionTable::boolean(3, |x| x.iter().sum::<usize>() >= 2).unwrap();
        let d = Diagram::build(&f, Rule::Median, &[1, 2, 0], &TotalOrder).unwrap();
        let text = write_dd(&d, &Sort::Boolean);
        assert_eq!(parse_dd::<bool>(&text, &Sort::Boolean).unwrap(), d);
    }
}
