//! Coefficient groups for weights.
//!
//! Two families are supported: direct products of cyclic groups (finite or
//! infinite, written multiplicatively with one generator per factor) and
//! finite permutation groups given by generators. Elements compare
//! structurally, so they can be hashed and stored in orbit sets.
//!
//! Products follow the convention `x * y` = "apply `y` first, then `x`"
//! for permutations, which matches reading path weights `W(α_n)⋯W(α_1)`
//! right to left.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Upper bound on the size of an enumerated permutation group.
pub const MAX_PERM_GROUP_ORDER: usize = 100_000;

/// Order of a cyclic factor or of an element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Order {
    Finite(u64),
    Infinite,
}

impl Order {
    pub fn is_finite(self) -> bool {
        matches!(self, Order::Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Order::Finite(n) => Some(n),
            Order::Infinite => None,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{n}"),
            Order::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Order {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Order::Finite(n) => s.serialize_u64(*n),
            Order::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Order {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(n) => Ok(Order::Finite(n)),
            Raw::Text(t) if t.eq_ignore_ascii_case("inf") => Ok(Order::Infinite),
            Raw::Text(t) => Err(serde::de::Error::custom(format!(
                "order must be a positive integer or \"inf\", got \"{t}\""
            ))),
        }
    }
}

/// One factor `⟨a | a^n = 1⟩` (or `⟨a⟩` when infinite) of an abelian product.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicFactor {
    #[serde(rename = "gen")]
    pub name: String,
    pub order: Order,
}

/// Elements of a finite permutation group, listed breadth-first from the
/// identity, together with a shortest generator word for each.
#[derive(Debug)]
struct PermClosure {
    elements: Vec<Vec<usize>>,
    words: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

/// A subgroup of `S_degree` given by named generators.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    /// Sorted by name.
    generators: Vec<(String, Vec<usize>)>,
    closure: OnceLock<Arc<PermClosure>>,
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.generators == other.generators
    }
}

impl Eq for PermGroup {}

impl PermGroup {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[(String, Vec<usize>)] {
        &self.generators
    }

    fn closure(&self) -> Result<Arc<PermClosure>> {
        if let Some(c) = self.closure.get() {
            return Ok(c.clone());
        }
        let built = Arc::new(self.build_closure()?);
        Ok(self.closure.get_or_init(|| built).clone())
    }

    fn build_closure(&self) -> Result<PermClosure> {
        let identity: Vec<usize> = (0..self.degree).collect();
        let mut elements = vec![identity.clone()];
        let mut words = vec![Vec::new()];
        let mut index = HashMap::from([(identity, 0usize)]);
        let mut level = vec![0usize];
        while !level.is_empty() {
            let mut next: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
            for &i in &level {
                for (g, (_, perm)) in self.generators.iter().enumerate() {
                    let y = compose(&elements[i], perm);
                    if index.contains_key(&y) || next.iter().any(|(p, _)| *p == y) {
                        continue;
                    }
                    let mut w = words[i].clone();
                    w.push(g);
                    next.push((y, w));
                }
            }
            next.sort();
            level.clear();
            for (perm, word) in next {
                if elements.len() >= MAX_PERM_GROUP_ORDER {
                    return Err(Error::GroupTooLarge(MAX_PERM_GROUP_ORDER));
                }
                index.insert(perm.clone(), elements.len());
                level.push(elements.len());
                elements.push(perm);
                words.push(word);
            }
        }
        Ok(PermClosure { elements, words, index })
    }
}

/// `(x * y)(i) = x(y(i))`.
fn compose(x: &[usize], y: &[usize]) -> Vec<usize> {
    y.iter().map(|&i| x[i]).collect()
}

fn is_bijection(perm: &[usize], degree: usize) -> bool {
    let mut seen = vec![false; degree];
    perm.len() == degree
        && perm.iter().all(|&i| i < degree && !std::mem::replace(&mut seen[i], true))
}

/// The coefficient group of a weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GroupRepr", into = "GroupRepr")]
pub enum GroupSpec {
    Abelian(Vec<CyclicFactor>),
    Permutation(PermGroup),
}

/// An element of a [`GroupSpec`].
///
/// Abelian elements are exponent vectors reduced into `[0, order)` on every
/// finite factor; permutation elements are one-line arrays.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupElement {
    Abelian(Vec<i64>),
    Permutation(Vec<usize>),
}

fn check_name(name: &str, seen: &mut Vec<String>) -> Result<()> {
    if name.is_empty() || name == "1" {
        return Err(Error::InvalidGroup(format!("generator name `{name}` is reserved or empty")));
    }
    if !name.chars().all(|c| c.is_alphanumeric() || c == '_') {
        return Err(Error::InvalidGroup(format!(
            "generator name `{name}` must be alphanumeric"
        )));
    }
    if name.chars().all(|c| c.is_ascii_digit()) {
        return Err(Error::InvalidGroup(format!("generator name `{name}` is numeric")));
    }
    if seen.iter().any(|s| s == name) {
        return Err(Error::InvalidGroup(format!("duplicate generator `{name}`")));
    }
    seen.push(name.to_owned());
    Ok(())
}

impl GroupSpec {
    pub fn abelian(factors: Vec<CyclicFactor>) -> Result<Self> {
        let mut seen = Vec::new();
        for f in &factors {
            check_name(&f.name, &mut seen)?;
            if f.order == Order::Finite(0) {
                return Err(Error::InvalidGroup(format!("factor `{}` has order 0", f.name)));
            }
        }
        Ok(GroupSpec::Abelian(factors))
    }

    /// The trivial group (empty product).
    pub fn trivial() -> Self {
        GroupSpec::Abelian(Vec::new())
    }

    /// `⟨name | name^n = 1⟩`.
    pub fn cyclic(name: &str, n: u64) -> Result<Self> {
        Self::abelian(vec![CyclicFactor { name: name.into(), order: Order::Finite(n) }])
    }

    /// The infinite cyclic group `⟨name⟩`.
    pub fn infinite_cyclic(name: &str) -> Result<Self> {
        Self::abelian(vec![CyclicFactor { name: name.into(), order: Order::Infinite }])
    }

    pub fn permutation(degree: usize, generators: Vec<(String, Vec<usize>)>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidGroup("permutation degree must be positive".into()));
        }
        let mut seen = Vec::new();
        for (name, perm) in &generators {
            check_name(name, &mut seen)?;
            if !is_bijection(perm, degree) {
                return Err(Error::InvalidGroup(format!(
                    "generator `{name}` is not a bijection on 0..{degree}"
                )));
            }
        }
        let mut generators = generators;
        generators.sort();
        Ok(GroupSpec::Permutation(PermGroup { degree, generators, closure: OnceLock::new() }))
    }

    /// Generator names in canonical order.
    pub fn generator_names(&self) -> Vec<&str> {
        match self {
            GroupSpec::Abelian(fs) => fs.iter().map(|f| f.name.as_str()).collect(),
            GroupSpec::Permutation(p) => p.generators.iter().map(|(n, _)| n.as_str()).collect(),
        }
    }

    pub fn generator(&self, name: &str) -> Result<GroupElement> {
        match self {
            GroupSpec::Abelian(fs) => {
                let pos = fs
                    .iter()
                    .position(|f| f.name == name)
                    .ok_or_else(|| Error::UnknownGenerator(name.into()))?;
                let mut v = vec![0; fs.len()];
                v[pos] = 1;
                Ok(self.reduce(GroupElement::Abelian(v)))
            }
            GroupSpec::Permutation(p) => p
                .generators
                .iter()
                .find(|(n, _)| n == name)
                .map(|(_, perm)| GroupElement::Permutation(perm.clone()))
                .ok_or_else(|| Error::UnknownGenerator(name.into())),
        }
    }

    pub fn identity(&self) -> GroupElement {
        match self {
            GroupSpec::Abelian(fs) => GroupElement::Abelian(vec![0; fs.len()]),
            GroupSpec::Permutation(p) => GroupElement::Permutation((0..p.degree).collect()),
        }
    }

    fn reduce(&self, x: GroupElement) -> GroupElement {
        match (self, x) {
            (GroupSpec::Abelian(fs), GroupElement::Abelian(mut v)) => {
                for (c, f) in v.iter_mut().zip(fs) {
                    if let Order::Finite(n) = f.order {
                        *c = c.rem_euclid(n as i64);
                    }
                }
                GroupElement::Abelian(v)
            }
            (_, x) => x,
        }
    }

    /// Shape check: right vector length / degree, reduced coordinates, bijection.
    fn check_shape(&self, x: &GroupElement) -> Result<()> {
        let ok = match (self, x) {
            (GroupSpec::Abelian(fs), GroupElement::Abelian(v)) => {
                v.len() == fs.len()
                    && v.iter().zip(fs).all(|(&c, f)| match f.order {
                        Order::Finite(n) => (0..n as i64).contains(&c),
                        Order::Infinite => true,
                    })
            }
            (GroupSpec::Permutation(p), GroupElement::Permutation(perm)) => {
                is_bijection(perm, p.degree)
            }
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::ElementMismatch(format!("{x:?}")))
        }
    }

    /// Whether `x` is an element of this group. For permutation groups this
    /// tests membership in the generated subgroup, not just in `S_degree`.
    pub fn contains(&self, x: &GroupElement) -> bool {
        if self.check_shape(x).is_err() {
            return false;
        }
        match (self, x) {
            (GroupSpec::Permutation(p), GroupElement::Permutation(perm)) => {
                p.closure().map(|c| c.index.contains_key(perm)).unwrap_or(false)
            }
            _ => true,
        }
    }

    pub fn multiply(&self, x: &GroupElement, y: &GroupElement) -> Result<GroupElement> {
        self.check_shape(x)?;
        self.check_shape(y)?;
        Ok(self.mul_unchecked(x, y))
    }

    pub(crate) fn mul_unchecked(&self, x: &GroupElement, y: &GroupElement) -> GroupElement {
        match (x, y) {
            (GroupElement::Abelian(a), GroupElement::Abelian(b)) => self.reduce(
                GroupElement::Abelian(a.iter().zip(b).map(|(p, q)| p + q).collect()),
            ),
            (GroupElement::Permutation(a), GroupElement::Permutation(b)) => {
                GroupElement::Permutation(compose(a, b))
            }
            _ => unreachable!("mixed element kinds"),
        }
    }

    pub fn inverse(&self, x: &GroupElement) -> Result<GroupElement> {
        self.check_shape(x)?;
        Ok(self.inv_unchecked(x))
    }

    pub(crate) fn inv_unchecked(&self, x: &GroupElement) -> GroupElement {
        match x {
            GroupElement::Abelian(v) => {
                self.reduce(GroupElement::Abelian(v.iter().map(|c| -c).collect()))
            }
            GroupElement::Permutation(p) => {
                let mut inv = vec![0; p.len()];
                for (i, &j) in p.iter().enumerate() {
                    inv[j] = i;
                }
                GroupElement::Permutation(inv)
            }
        }
    }

    /// `x^k` for any integer `k`.
    pub fn pow(&self, x: &GroupElement, k: i64) -> Result<GroupElement> {
        self.check_shape(x)?;
        Ok(self.pow_unchecked(x, k))
    }

    pub(crate) fn pow_unchecked(&self, x: &GroupElement, k: i64) -> GroupElement {
        if let GroupElement::Abelian(v) = x {
            return self.reduce(GroupElement::Abelian(v.iter().map(|c| c * k).collect()));
        }
        let mut base = if k < 0 { self.inv_unchecked(x) } else { x.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = self.identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_unchecked(&acc, &base);
            }
            base = self.mul_unchecked(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn is_identity(&self, x: &GroupElement) -> bool {
        *x == self.identity()
    }

    /// Least `k ≥ 1` with `x^k = 1`.
    pub fn element_order(&self, x: &GroupElement) -> Result<Order> {
        self.check_shape(x)?;
        Ok(match (self, x) {
            (GroupSpec::Abelian(fs), GroupElement::Abelian(v)) => {
                let mut ord = 1u64;
                for (&c, f) in v.iter().zip(fs) {
                    match f.order {
                        Order::Infinite if c != 0 => return Ok(Order::Infinite),
                        Order::Infinite => {}
                        Order::Finite(n) => ord = ord.lcm(&(n / (c as u64).gcd(&n))),
                    }
                }
                Order::Finite(ord)
            }
            (_, GroupElement::Permutation(p)) => {
                let mut seen = vec![false; p.len()];
                let mut ord = 1u64;
                for start in 0..p.len() {
                    let mut len = 0u64;
                    let mut i = start;
                    while !seen[i] {
                        seen[i] = true;
                        i = p[i];
                        len += 1;
                    }
                    if len > 0 {
                        ord = ord.lcm(&len);
                    }
                }
                Order::Finite(ord)
            }
            _ => unreachable!(),
        })
    }

    /// Group order: product of factor orders, or the size of the generated
    /// permutation group.
    pub fn order(&self) -> Result<Order> {
        match self {
            GroupSpec::Abelian(fs) => {
                let mut n = 1u64;
                for f in fs {
                    match f.order {
                        Order::Finite(k) => n *= k,
                        Order::Infinite => return Ok(Order::Infinite),
                    }
                }
                Ok(Order::Finite(n))
            }
            GroupSpec::Permutation(p) => Ok(Order::Finite(p.closure()?.elements.len() as u64)),
        }
    }

    pub fn is_finite(&self) -> bool {
        match self {
            GroupSpec::Abelian(fs) => fs.iter().all(|f| f.order.is_finite()),
            GroupSpec::Permutation(_) => true,
        }
    }

    /// Every element exactly once. Abelian products are listed in
    /// lexicographic order of exponent vectors; permutation groups
    /// breadth-first from the identity.
    pub fn enumerate(&self) -> Result<Vec<GroupElement>> {
        match self {
            GroupSpec::Abelian(fs) => {
                let orders = fs
                    .iter()
                    .map(|f| f.order.finite().ok_or(Error::InfiniteGroup))
                    .collect::<Result<Vec<u64>>>()?;
                let mut out = vec![Vec::new()];
                for &n in &orders {
                    out = out
                        .into_iter()
                        .flat_map(|prefix: Vec<i64>| {
                            (0..n as i64).map(move |c| {
                                let mut v = prefix.clone();
                                v.push(c);
                                v
                            })
                        })
                        .collect();
                }
                Ok(out.into_iter().map(GroupElement::Abelian).collect())
            }
            GroupSpec::Permutation(p) => Ok(p
                .closure()?
                .elements
                .iter()
                .cloned()
                .map(GroupElement::Permutation)
                .collect()),
        }
    }

    /// Parses a word such as `a^3*b^-1`; `1` denotes the identity.
    pub fn parse_word(&self, text: &str) -> Result<GroupElement> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::MalformedWord(text.into()));
        }
        let mut acc = self.identity();
        for token in text.split('*') {
            let token = token.trim();
            if token == "1" {
                continue;
            }
            let (name, exp) = match token.split_once('^') {
                Some((name, exp)) => {
                    let exp: i64 =
                        exp.trim().parse().map_err(|_| Error::MalformedWord(text.into()))?;
                    (name.trim(), exp)
                }
                None => (token, 1),
            };
            if name.is_empty() || !name.chars().all(|c| c.is_alphanumeric() || c == '_') {
                return Err(Error::MalformedWord(text.into()));
            }
            let g = self.generator(name)?;
            acc = self.mul_unchecked(&acc, &self.pow_unchecked(&g, exp));
        }
        Ok(acc)
    }

    /// Canonical word for `x`: reduced exponents in factor order for abelian
    /// products, the breadth-first shortest word for permutation groups.
    pub fn format_word(&self, x: &GroupElement) -> Result<String> {
        self.check_shape(x)?;
        let mut parts: Vec<(String, i64)> = Vec::new();
        match (self, x) {
            (GroupSpec::Abelian(fs), GroupElement::Abelian(v)) => {
                for (f, &c) in fs.iter().zip(v) {
                    if c != 0 {
                        parts.push((f.name.clone(), c));
                    }
                }
            }
            (GroupSpec::Permutation(p), GroupElement::Permutation(perm)) => {
                let closure = p.closure()?;
                let i = *closure
                    .index
                    .get(perm)
                    .ok_or_else(|| Error::ElementMismatch(format!("{perm:?} not in group")))?;
                for &g in &closure.words[i] {
                    let name = &p.generators[g].0;
                    match parts.last_mut() {
                        Some((last, k)) if last == name => *k += 1,
                        _ => parts.push((name.clone(), 1)),
                    }
                }
            }
            _ => unreachable!(),
        }
        if parts.is_empty() {
            return Ok("1".into());
        }
        Ok(parts
            .iter()
            .map(|(n, k)| if *k == 1 { n.clone() } else { format!("{n}^{k}") })
            .collect::<Vec<_>>()
            .join("*"))
    }

    /// Short human-readable name such as `C6`, `Z x C2` or `<a, b> ≤ S3`.
    pub fn describe(&self) -> String {
        match self {
            GroupSpec::Abelian(fs) if fs.is_empty() => "1".into(),
            GroupSpec::Abelian(fs) => fs
                .iter()
                .map(|f| match f.order {
                    Order::Finite(n) => format!("C{n}"),
                    Order::Infinite => "Z".into(),
                })
                .collect::<Vec<_>>()
                .join(" x "),
            GroupSpec::Permutation(p) => {
                let names: Vec<_> = p.generators.iter().map(|(n, _)| n.as_str()).collect();
                format!("<{}> <= S{}", names.join(", "), p.degree)
            }
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
enum GroupRepr {
    Abelian(Vec<CyclicFactor>),
    PermGroup(PermRepr),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PermRepr {
    degree: usize,
    generators: BTreeMap<String, Vec<usize>>,
}

impl TryFrom<GroupRepr> for GroupSpec {
    type Error = Error;

    fn try_from(repr: GroupRepr) -> Result<Self> {
        match repr {
            GroupRepr::Abelian(fs) => GroupSpec::abelian(fs),
            GroupRepr::PermGroup(p) => {
                GroupSpec::permutation(p.degree, p.generators.into_iter().collect())
            }
        }
    }
}

impl From<GroupSpec> for GroupRepr {
    fn from(spec: GroupSpec) -> Self {
        match spec {
            GroupSpec::Abelian(fs) => GroupRepr::Abelian(fs),
            GroupSpec::Permutation(p) => GroupRepr::PermGroup(PermRepr {
                degree: p.degree,
                generators: p.generators.into_iter().collect(),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> GroupSpec {
        GroupSpec::permutation(3, vec![("a".into(), vec![1, 2, 0]), ("b".into(), vec![1, 0, 2])])
            .unwrap()
    }

    fn c6() -> GroupSpec {
        GroupSpec::cyclic("a", 6).unwrap()
    }

    fn z() -> GroupSpec {
        GroupSpec::infinite_cyclic("a").unwrap()
    }

    #[test]
    fn identities() {
        assert_eq!(c6().identity(), GroupElement::Abelian(vec![0]));
        let zz = GroupSpec::abelian(vec![
            CyclicFactor { name: "a".into(), order: Order::Infinite },
            CyclicFactor { name: "b".into(), order: Order::Infinite },
        ])
        .unwrap();
        assert_eq!(zz.identity(), GroupElement::Abelian(vec![0, 0]));
        assert_eq!(s3().identity(), GroupElement::Permutation(vec![0, 1, 2]));
    }

    #[test]
    fn products() {
        let g = c6();
        let x = g.parse_word("a^3").unwrap();
        let y = g.parse_word("a^2").unwrap();
        assert_eq!(g.format_word(&g.multiply(&x, &y).unwrap()).unwrap(), "a^5");

        let s = s3();
        let a = s.generator("a").unwrap();
        let b = s.generator("b").unwrap();
        let aba = s.multiply(&s.multiply(&a, &b).unwrap(), &a).unwrap();
        assert_eq!(aba, b);
        assert!(s.is_identity(&s.pow(&a, 3).unwrap()));
        assert!(s.is_identity(&s.pow(&b, 2).unwrap()));

        let z = z();
        let r = z.multiply(&z.parse_word("a^2").unwrap(), &z.parse_word("a^-1").unwrap()).unwrap();
        assert_eq!(z.format_word(&r).unwrap(), "a");
    }

    #[test]
    fn permutation_product_applies_right_factor_first() {
        let s = s3();
        let a = s.generator("a").unwrap();
        let b = s.generator("b").unwrap();
        // b first: 0 -> 1, then a: 1 -> 2.
        let GroupElement::Permutation(ab) = s.multiply(&a, &b).unwrap() else { panic!() };
        assert_eq!(ab[0], 2);
    }

    #[test]
    fn inverses() {
        let g = c6();
        assert_eq!(g.inverse(&g.parse_word("a^2").unwrap()).unwrap(), g.parse_word("a^4").unwrap());
        let z = z();
        assert_eq!(z.inverse(&z.parse_word("a^3").unwrap()).unwrap(), GroupElement::Abelian(vec![-3]));
        let s = s3();
        assert_eq!(
            s.inverse(&GroupElement::Permutation(vec![1, 2, 0])).unwrap(),
            GroupElement::Permutation(vec![2, 0, 1])
        );
    }

    #[test]
    fn orders() {
        let g = c6();
        assert_eq!(g.element_order(&g.parse_word("a^3").unwrap()).unwrap(), Order::Finite(2));
        assert_eq!(g.element_order(&g.identity()).unwrap(), Order::Finite(1));
        assert_eq!(s3().element_order(&s3().identity()).unwrap(), Order::Finite(1));
        assert_eq!(z().element_order(&z().parse_word("a").unwrap()).unwrap(), Order::Infinite);
        assert_eq!(z().element_order(&z().identity()).unwrap(), Order::Finite(1));
    }

    #[test]
    fn enumeration() {
        let c2 = GroupSpec::cyclic("a", 2).unwrap();
        let els = c2.enumerate().unwrap();
        assert_eq!(els.len(), 2);
        assert_eq!(c2.format_word(&els[0]).unwrap(), "1");
        assert_eq!(c2.format_word(&els[1]).unwrap(), "a");
        let k4 = GroupSpec::abelian(vec![
            CyclicFactor { name: "a".into(), order: Order::Finite(2) },
            CyclicFactor { name: "b".into(), order: Order::Finite(2) },
        ])
        .unwrap();
        assert_eq!(k4.enumerate().unwrap().len(), 4);
        assert_eq!(s3().enumerate().unwrap().len(), 6);
        assert_eq!(z().enumerate(), Err(Error::InfiniteGroup));
        assert_eq!(GroupSpec::trivial().enumerate().unwrap().len(), 1);
    }

    #[test]
    fn generated_subgroup_not_full_symmetric_group() {
        let g = GroupSpec::permutation(4, vec![("c".into(), vec![1, 2, 3, 0])]).unwrap();
        assert_eq!(g.order().unwrap(), Order::Finite(4));
        assert!(!g.contains(&GroupElement::Permutation(vec![1, 0, 2, 3])));
    }

    #[test]
    fn words() {
        let z = z();
        assert_eq!(z.parse_word("a^-1").unwrap(), GroupElement::Abelian(vec![-1]));
        assert_eq!(c6().parse_word("a^3*a^4").unwrap(), GroupElement::Abelian(vec![1]));
        let s = s3();
        let ab = s.parse_word("a*b").unwrap();
        assert_eq!(ab, s.multiply(&s.generator("a").unwrap(), &s.generator("b").unwrap()).unwrap());
        assert_eq!(s.parse_word(&s.format_word(&ab).unwrap()).unwrap(), ab);
        assert_eq!(c6().parse_word(" 1 ").unwrap(), c6().identity());
        assert_eq!(c6().parse_word("c"), Err(Error::UnknownGenerator("c".into())));
        assert!(matches!(c6().parse_word("a^x"), Err(Error::MalformedWord(_))));
        assert!(matches!(c6().parse_word("a**a"), Err(Error::MalformedWord(_))));
        assert!(matches!(c6().parse_word(""), Err(Error::MalformedWord(_))));
    }

    #[test]
    fn invalid_specs() {
        assert!(GroupSpec::cyclic("1", 2).is_err());
        assert!(GroupSpec::cyclic("", 2).is_err());
        assert!(GroupSpec::cyclic("a", 0).is_err());
        assert!(GroupSpec::permutation(3, vec![("a".into(), vec![0, 0, 1])]).is_err());
        assert!(GroupSpec::permutation(
            2,
            vec![("a".into(), vec![1, 0]), ("a".into(), vec![0, 1])]
        )
        .is_err());
    }

    #[test]
    fn element_mismatch() {
        let g = c6();
        assert!(matches!(
            g.multiply(&GroupElement::Abelian(vec![0, 0]), &g.identity()),
            Err(Error::ElementMismatch(_))
        ));
        assert!(matches!(
            s3().inverse(&GroupElement::Permutation(vec![0, 1])),
            Err(Error::ElementMismatch(_))
        ));
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"abelian":[{"gen":"a","order":6},{"gen":"b","order":"inf"}]}"#;
        let g: GroupSpec = serde_json::from_str(text).unwrap();
        assert_eq!(serde_json::to_string(&g).unwrap(), text);
        let text = r#"{"perm_group":{"degree":3,"generators":{"a":[1,2,0],"b":[1,0,2]}}}"#;
        let g: GroupSpec = serde_json::from_str(text).unwrap();
        assert_eq!(g, s3());
        assert_eq!(serde_json::to_string(&g).unwrap(), text);
        assert!(serde_json::from_str::<GroupSpec>(r#"{"abelian":[{"gen":"1","order":2}]}"#).is_err());
    }
}
