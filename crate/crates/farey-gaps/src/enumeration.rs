//! Degenerate index tuples: admissibility, exhaustive search, spike families and tuple trees.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::continuants::{continuant_of, TupleSpec};
use crate::farey_triangle::{cell, region_of, single_area, Cell};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("modulus must be at least 2, got {0}")]
    Modulus(u64),
    #[error("residues must lie in [0, {d}), got c0 = {c0}, c1 = {c1}")]
    Residue { d: u64, c0: u64, c1: u64 },
    #[error("c1 must differ from c0 modulo D")]
    SameClass,
    #[error("gcd(D, c0, c1) must be 1")]
    NotCoprime,
    #[error("exact enumeration supports D in {{2, 3}} with c0 = 0 only (got D = {d}, c0 = {c0}); use bounded mode")]
    Unsupported { d: u64, c0: u64 },
    #[error("r must be at least 1")]
    ZeroLength,
    #[error("seed tuple {0} is not live with a non-empty region")]
    BadSeed(String),
    #[error(
        "spike template {template} at class {residue} mod {modulus} is inconsistent: {detail}"
    )]
    SpikeInconsistent {
        template: String,
        residue: u64,
        modulus: u64,
        detail: String,
    },
    #[error("tuple {0} has an entry above the spike cutoff but matches no family")]
    UnclassifiedSpike(String),
    #[error("no leaf of tree {tree} at n = {n}, level {level}")]
    NoLeaf { tree: char, n: u32, level: usize },
}

/// Residue data `(D, c0, c1)`: coloured denominators are `c0 mod D`, the first one after is `c1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CongruenceSpec {
    pub d: u64,
    pub c0: u64,
    pub c1: u64,
}

impl CongruenceSpec {
    pub fn new(d: u64, c0: u64, c1: u64) -> Result<Self, EnumError> {
        if d < 2 {
            return Err(EnumError::Modulus(d));
        }
        if c0 >= d || c1 >= d {
            return Err(EnumError::Residue { d, c0, c1 });
        }
        if c0 == c1 {
            return Err(EnumError::SameClass);
        }
        if d.gcd(&c0).gcd(&c1) != 1 {
            return Err(EnumError::NotCoprime);
        }
        Ok(CongruenceSpec { d, c0, c1 })
    }

    pub fn delta(&self) -> u64 {
        self.c0.gcd(&self.d)
    }

    /// Whether closed-form family tails are available.
    pub fn exact_supported(&self) -> bool {
        (self.d == 2 || self.d == 3) && self.c0 == 0
    }

    fn step(&self, prev: u64, cur: u64, k: u64) -> u64 {
        ((k % self.d) * cur + self.d - prev) % self.d
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Degenerate,
    Live,
    Rejected,
}

pub fn status_of(ks: &[u64], c: &CongruenceSpec) -> Status {
    let (mut prev, mut cur) = (c.c0, c.c1);
    for (i, &k) in ks.iter().enumerate() {
        let next = c.step(prev, cur, k);
        if next == c.c0 {
            return if i + 1 == ks.len() {
                Status::Degenerate
            } else {
                Status::Rejected
            };
        }
        prev = cur;
        cur = next;
    }
    Status::Live
}

pub fn admissibility_check(t: &TupleSpec, c: &CongruenceSpec) -> Status {
    status_of(&t.expand(), c)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Member {
    pub tuple: Vec<u64>,
    pub area: BigRational,
}

impl Member {
    pub fn spec(&self) -> TupleSpec {
        TupleSpec::from_indices(&self.tuple)
    }

    pub fn continuant(&self) -> BigInt {
        continuant_of(&self.tuple)
    }
}

/// The spike tuples `prefix, k, suffix` with `k = residue (mod modulus)`, `k >= k_min`.
///
/// Members have area `|T(k)|` except at the listed `exceptions`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TupleFamily {
    pub r: usize,
    pub prefix: Vec<u64>,
    pub suffix: Vec<u64>,
    pub modulus: u64,
    pub residue: u64,
    pub k_min: u64,
    pub exceptions: Vec<(u64, BigRational)>,
    /// The continuant of a member is `slope * k + offset`.
    pub continuant_slope: BigInt,
    pub continuant_offset: BigInt,
}

impl TupleFamily {
    pub fn position(&self) -> usize {
        self.prefix.len() + 1
    }

    pub fn instantiate(&self, k: u64) -> Vec<u64> {
        let mut v = self.prefix.clone();
        v.push(k);
        v.extend_from_slice(&self.suffix);
        v
    }

    /// The spike value if `ks` belongs to the family.
    pub fn member_index(&self, ks: &[u64]) -> Option<u64> {
        if ks.len() != self.r {
            return None;
        }
        let j = self.prefix.len();
        let k = ks[j];
        (ks[..j] == self.prefix[..]
            && ks[j + 1..] == self.suffix[..]
            && k % self.modulus == self.residue
            && k >= self.k_min)
            .then_some(k)
    }

    pub fn area_at(&self, k: u64) -> BigRational {
        self.exceptions
            .iter()
            .find(|(e, _)| *e == k)
            .map(|(_, a)| a.clone())
            .unwrap_or_else(|| single_area(k))
    }

    pub fn template(&self) -> String {
        let mut parts = Vec::new();
        if !self.prefix.is_empty() {
            parts.push(TupleSpec::from_indices(&self.prefix).to_string());
        }
        parts.push("k".to_string());
        if !self.suffix.is_empty() {
            parts.push(TupleSpec::from_indices(&self.suffix).to_string());
        }
        parts.join(",")
    }

    pub fn progression(&self) -> String {
        format!("{} mod {}", self.residue, self.modulus)
    }

    pub fn area_rule(&self) -> String {
        let mut s = "|T(k)|".to_string();
        for (k, a) in &self.exceptions {
            s.push_str(&format!("; {a} at k={k}"));
        }
        s
    }

    pub fn continuant_rule(&self) -> String {
        let (a, b) = (&self.continuant_slope, &self.continuant_offset);
        let lin = match a.to_i64() {
            Some(1) => "k".to_string(),
            Some(0) => String::new(),
            _ => format!("{a}k"),
        };
        if lin.is_empty() {
            return b.to_string();
        }
        match b.sign() {
            num_bigint::Sign::Minus => format!("{lin}{b}"),
            num_bigint::Sign::NoSign => lin,
            num_bigint::Sign::Plus => format!("{lin}+{b}"),
        }
    }
}

impl fmt::Display for TupleFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}), k = {}, k >= {}",
            self.template(),
            self.progression(),
            self.k_min
        )
    }
}

/// The degenerate tuples of length `r`, split into finitely many tuples and spike families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub r: usize,
    pub spec: CongruenceSpec,
    pub finite: Vec<Member>,
    pub families: Vec<TupleFamily>,
    /// `None` for a complete decomposition, otherwise the entry bound of a bounded search.
    pub cutoff: Option<u64>,
}

impl Decomposition {
    pub fn finite_area(&self) -> BigRational {
        self.finite.iter().map(|m| m.area.clone()).sum()
    }

    pub fn contains(&self, ks: &[u64]) -> bool {
        self.finite.iter().any(|m| m.tuple == ks)
            || self.families.iter().any(|f| f.member_index(ks).is_some())
    }

    /// All members with every entry at most `bound`.
    pub fn members_up_to(&self, bound: u64) -> Vec<Vec<u64>> {
        let mut out: Vec<Vec<u64>> = self
            .finite
            .iter()
            .filter(|m| m.tuple.iter().all(|&k| k <= bound))
            .map(|m| m.tuple.clone())
            .collect();
        for f in &self.families {
            let mut k = f.k_min;
            while k <= bound {
                let t = f.instantiate(k);
                if t.iter().all(|&x| x <= bound) {
                    out.push(t);
                }
                k += f.modulus;
            }
        }
        out.sort();
        out.dedup();
        out
    }
}

/// Index bound beyond which a single large entry forces the spike shape.
pub fn spike_cutoff(r: usize) -> u64 {
    4 * r as u64 + 1
}

/// Depth-first search over live non-empty cells; returns the degenerate tuples of each length.
fn search(max_r: usize, c: &CongruenceSpec, cap: u64) -> Vec<Vec<Member>> {
    let mut levels: Vec<Vec<Member>> = vec![Vec::new(); max_r + 1];
    if max_r == 0 {
        return levels;
    }
    struct Frame {
        cell: Cell,
        ks: Vec<u64>,
        prev: u64,
        cur: u64,
    }
    let mut stack = vec![Frame {
        cell: Cell::root(),
        ks: Vec::new(),
        prev: c.c0,
        cur: c.c1,
    }];
    while let Some(f) = stack.pop() {
        let mut live = Vec::new();
        for (k, child) in f.cell.children(cap) {
            let next = c.step(f.prev, f.cur, k);
            let mut ks = f.ks.clone();
            ks.push(k);
            if next == c.c0 {
                levels[ks.len()].push(Member {
                    tuple: ks,
                    area: child.region.area(),
                });
            } else if ks.len() < max_r {
                live.push(Frame {
                    cell: child,
                    ks,
                    prev: f.cur,
                    cur: next,
                });
            }
        }
        live.reverse();
        stack.extend(live);
    }
    for l in &mut levels {
        l.sort_by(|a, b| a.tuple.cmp(&b.tuple));
    }
    levels
}

/// The spike templates of length `r`: `(prefix, suffix)` around the large entry.
pub fn spike_templates(r: usize) -> Vec<(Vec<u64>, Vec<u64>)> {
    match r {
        0 => Vec::new(),
        1 => vec![(vec![], vec![])],
        2 => vec![(vec![], vec![1]), (vec![1], vec![])],
        _ => (1..=r)
            .map(|j| {
                if j == 1 {
                    (vec![], [vec![1], vec![2; r - 2]].concat())
                } else if j == r {
                    ([vec![2; r - 2], vec![1]].concat(), vec![])
                } else {
                    (
                        [vec![2; j - 2], vec![1]].concat(),
                        [vec![1], vec![2; r - j - 1]].concat(),
                    )
                }
            })
            .collect(),
    }
}

fn close_families(
    r: usize,
    c: &CongruenceSpec,
    found: Vec<Member>,
) -> Result<Decomposition, EnumError> {
    let mut pool: BTreeMap<Vec<u64>, BigRational> =
        found.into_iter().map(|m| (m.tuple, m.area)).collect();
    let start = spike_cutoff(r) + 1;
    let d = c.d;
    let mut families = Vec::new();
    for (prefix, suffix) in spike_templates(r) {
        let inst = |k: u64| [prefix.clone(), vec![k], suffix.clone()].concat();
        for h in 0..d {
            let k0 = start + (h + d - start % d) % d;
            let probes = [k0, k0 + d, k0 + 2 * d];
            let statuses: Vec<Status> = probes.iter().map(|&k| status_of(&inst(k), c)).collect();
            let template = TupleFamily {
                r,
                prefix: prefix.clone(),
                suffix: suffix.clone(),
                modulus: d,
                residue: h,
                k_min: k0,
                exceptions: Vec::new(),
                continuant_slope: BigInt::zero(),
                continuant_offset: BigInt::zero(),
            }
            .template();
            let fail = |detail: String| EnumError::SpikeInconsistent {
                template: template.clone(),
                residue: h,
                modulus: d,
                detail,
            };
            if statuses.iter().all(|&s| s != Status::Degenerate) {
                continue;
            }
            if statuses.iter().any(|&s| s != Status::Degenerate) {
                return Err(fail(format!(
                    "statuses {statuses:?} differ across the class"
                )));
            }
            for &k in &probes {
                let a = region_of(&inst(k)).area();
                if a != single_area(k) {
                    return Err(fail(format!("area {a} at k = {k} differs from |T(k)|")));
                }
            }
            let mut exceptions = Vec::new();
            let absorbed: Vec<Vec<u64>> = pool
                .keys()
                .filter(|t| {
                    t.len() == r
                        && t[..prefix.len()] == prefix[..]
                        && t[prefix.len() + 1..] == suffix[..]
                        && t[prefix.len()] % d == h
                        && t[prefix.len()] >= k0
                })
                .cloned()
                .collect();
            for t in absorbed {
                let a = pool.remove(&t).unwrap();
                let k = t[prefix.len()];
                if a != single_area(k) {
                    exceptions.push((k, a));
                }
            }
            let mut k_min = k0;
            while k_min > d {
                let k = k_min - d;
                let Some(a) = pool.remove(&inst(k)) else {
                    break;
                };
                if a != single_area(k) {
                    exceptions.push((k, a));
                }
                k_min = k;
            }
            exceptions.sort_by_key(|e| e.0);
            let kk0 = continuant_of(&inst(k0));
            let kk1 = continuant_of(&inst(k0 + d));
            let slope = (&kk1 - &kk0) / BigInt::from(d);
            let offset = &kk0 - &slope * BigInt::from(k0);
            families.push(TupleFamily {
                r,
                prefix: prefix.clone(),
                suffix: suffix.clone(),
                modulus: d,
                residue: h,
                k_min,
                exceptions,
                continuant_slope: slope,
                continuant_offset: offset,
            });
        }
    }
    let cutoff = spike_cutoff(r);
    let mut finite = Vec::new();
    for (tuple, area) in pool {
        if tuple.iter().any(|&k| k > cutoff) {
            return Err(EnumError::UnclassifiedSpike(
                TupleSpec::from_indices(&tuple).to_string(),
            ));
        }
        finite.push(Member { tuple, area });
    }
    Ok(Decomposition {
        r,
        spec: *c,
        finite,
        families,
        cutoff: None,
    })
}

/// Complete decomposition of the degenerate tuples of length `r`.
pub fn enumerate_a_circ(r: usize, c: &CongruenceSpec) -> Result<Decomposition, EnumError> {
    if r == 0 {
        return Err(EnumError::ZeroLength);
    }
    if !c.exact_supported() {
        return Err(EnumError::Unsupported { d: c.d, c0: c.c0 });
    }
    let found = search(r, c, spike_cutoff(r)).pop().unwrap();
    close_families(r, c, found)
}

/// Complete decompositions for every length `1..=max_r` from a single search.
pub fn enumerate_levels(max_r: usize, c: &CongruenceSpec) -> Result<Vec<Decomposition>, EnumError> {
    if !c.exact_supported() {
        return Err(EnumError::Unsupported { d: c.d, c0: c.c0 });
    }
    let levels = search(max_r, c, spike_cutoff(max_r));
    levels
        .into_iter()
        .enumerate()
        .skip(1)
        .map(|(r, found)| close_families(r, c, found))
        .collect()
}

/// Degenerate tuples of length `r` with every entry at most `cutoff`, no family closure.
pub fn enumerate_bounded(
    r: usize,
    c: &CongruenceSpec,
    cutoff: u64,
) -> Result<Decomposition, EnumError> {
    if r == 0 {
        return Err(EnumError::ZeroLength);
    }
    let finite = search(r, c, cutoff).pop().unwrap();
    let finite = finite
        .into_iter()
        .filter(|m| m.tuple.iter().all(|&k| k <= cutoff))
        .collect();
    Ok(Decomposition {
        r,
        spec: *c,
        finite,
        families: Vec::new(),
        cutoff: Some(cutoff),
    })
}

/// Independent search: every index `1..=bound` at every position, pruning only empty
/// regions and prefixes that already returned to the coloured class.
pub fn brute_force(r: usize, c: &CongruenceSpec, bound: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<u64>> = vec![Vec::new()];
    while let Some(ks) = stack.pop() {
        let parent = cell(&ks);
        for k in 1..=bound {
            let mut t = ks.clone();
            t.push(k);
            if parent.child(k).region.is_empty() {
                continue;
            }
            match status_of(&t, c) {
                Status::Degenerate if t.len() == r => out.push(t),
                Status::Live if t.len() < r => stack.push(t),
                _ => {}
            }
        }
    }
    out.sort();
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeNode {
    pub tuple: Vec<u64>,
    pub area: BigRational,
    pub status: Status,
    pub parent: Option<usize>,
    pub children: Vec<usize>,
}

/// Descendants of a live seed; degenerate nodes are leaves, rejected extensions are dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TupleTree {
    pub nodes: Vec<TreeNode>,
    pub spec: CongruenceSpec,
}

impl TupleTree {
    pub fn root(&self) -> &TreeNode {
        &self.nodes[0]
    }

    pub fn leaves_at(&self, level: usize) -> Vec<&TreeNode> {
        self.nodes
            .iter()
            .filter(|n| n.status == Status::Degenerate && n.tuple.len() == level)
            .collect()
    }

    /// Internal nodes whose children do not exactly tile them; an unbounded index
    /// range is credited with `sum_{k > cap} |T(k)|`.
    pub fn conservation_defects(&self, cap: u64) -> Vec<Vec<u64>> {
        let mut bad = Vec::new();
        for n in &self.nodes {
            if n.status != Status::Live || n.children.is_empty() {
                continue;
            }
            let cl = cell(&n.tuple);
            let all: BigRational = cl
                .children(cap)
                .into_iter()
                .map(|(_, c)| c.region.area())
                .sum();
            let tail = match cl.child_range() {
                Some((_, None)) => single_tail(cap),
                _ => BigRational::zero(),
            };
            if all + tail != n.area {
                bad.push(n.tuple.clone());
            }
        }
        bad
    }
}

/// Expands `seed` breadth-first until tuples have length `depth`.
///
/// Unbounded index ranges are truncated at `cap`.
pub fn build_tree(
    seed: &TupleSpec,
    c: &CongruenceSpec,
    depth: usize,
    cap: u64,
) -> Result<TupleTree, EnumError> {
    let ks = seed.expand();
    let root_cell = cell(&ks);
    if ks.is_empty() || root_cell.region.is_empty() || status_of(&ks, c) != Status::Live {
        return Err(EnumError::BadSeed(seed.to_string()));
    }
    let mut nodes = vec![TreeNode {
        tuple: ks,
        area: root_cell.region.area(),
        status: Status::Live,
        parent: None,
        children: Vec::new(),
    }];
    let mut frontier = vec![(0usize, root_cell)];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (idx, cl) in frontier {
            if nodes[idx].tuple.len() >= depth {
                continue;
            }
            for (k, child) in cl.children(cap) {
                let mut t = nodes[idx].tuple.clone();
                t.push(k);
                let status = status_of(&t, c);
                if status == Status::Rejected {
                    continue;
                }
                let id = nodes.len();
                nodes.push(TreeNode {
                    tuple: t,
                    area: child.region.area(),
                    status,
                    parent: Some(idx),
                    children: Vec::new(),
                });
                nodes[idx].children.push(id);
                if status == Status::Live {
                    next.push((id, child));
                }
            }
        }
        frontier = next;
    }
    Ok(TupleTree { nodes, spec: *c })
}

/// The three trees whose leaves make up every degenerate tuple of length at least 8.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LeafTree {
    A,
    B,
    C,
}

impl LeafTree {
    pub fn seed(self) -> TupleSpec {
        match self {
            LeafTree::A => TupleSpec::from_indices(&[2, 4]),
            LeafTree::B => TupleSpec::from_indices(&[5, 1]),
            LeafTree::C => TupleSpec::from_indices(&[1, 2]),
        }
    }

    fn letter(self) -> char {
        match self {
            LeafTree::A => 'A',
            LeafTree::B => 'B',
            LeafTree::C => 'C',
        }
    }
}

/// `sum_{k > cap} |T(k)| = 2 / ((cap + 1)(cap + 2))` for `cap >= 1`.
pub fn single_tail(cap: u64) -> BigRational {
    let c = BigInt::from(cap);
    BigRational::new(BigInt::from(2), (&c + 1) * (&c + 2))
}

fn frac(num: i128, den: i128) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Leaf tuples of the subtree with parameter `n`, paired with their closed-form areas.
pub fn leaves(tree: LeafTree, n: u32) -> Vec<(TupleSpec, BigRational)> {
    let t = TupleSpec::new;
    let mut out = Vec::new();
    let nn = n as i128;
    match tree {
        LeafTree::A if n >= 1 => {
            let areas = [
                frac(1, 2 * (6 * nn - 1) * (6 * nn + 1) * (12 * nn + 1)),
                frac(
                    3 * (4 * nn + 1),
                    2 * (3 * nn + 1) * (6 * nn + 1) * (12 * nn + 1) * (12 * nn + 5),
                ),
                frac(
                    3 * (2 * nn + 1),
                    2 * (3 * nn + 1) * (3 * nn + 2) * (12 * nn + 5) * (12 * nn + 7),
                ),
                frac(
                    3 * (4 * nn + 3),
                    2 * (3 * nn + 2) * (6 * nn + 5) * (12 * nn + 7) * (12 * nn + 11),
                ),
                frac(1, 2 * (6 * nn + 5) * (6 * nn + 7) * (12 * nn + 11)),
            ];
            for (i, a) in areas.into_iter().enumerate() {
                let tuple = t()
                    .push(2)
                    .repeat(&[4, 1], n)
                    .push(3)
                    .repeat(&[2], 3 * n - 2 + i as u32)
                    .push(1);
                out.push((tuple, a));
            }
        }
        LeafTree::B if n >= 1 => {
            let areas = [
                frac(1, 6 * (2 * nn + 1) * (6 * nn + 1) * (12 * nn + 5)),
                frac(
                    9 * nn + 5,
                    6 * (2 * nn + 1) * (3 * nn + 2) * (6 * nn + 5) * (12 * nn + 5),
                ),
                frac(
                    3 * (8 * nn + 7),
                    2 * (3 * nn + 2) * (6 * nn + 5) * (12 * nn + 11) * (12 * nn + 13),
                ),
                frac(
                    3 * (8 * nn + 9),
                    2 * (3 * nn + 4) * (6 * nn + 7) * (12 * nn + 11) * (12 * nn + 13),
                ),
                frac(
                    9 * nn + 13,
                    6 * (2 * nn + 3) * (3 * nn + 4) * (6 * nn + 7) * (12 * nn + 19),
                ),
                frac(1, 6 * (2 * nn + 3) * (6 * nn + 11) * (12 * nn + 19)),
            ];
            for (i, a) in areas.into_iter().enumerate() {
                let tuple = t()
                    .push(5)
                    .repeat(&[1, 4], n)
                    .push(1)
                    .push(3)
                    .repeat(&[2], 3 * n - 1 + i as u32)
                    .push(1);
                out.push((tuple, a));
            }
        }
        LeafTree::C if n >= 1 => {
            let m = n / 3;
            let mm = m as i128;
            let head = || t().push(1).repeat(&[2], n).push(3);
            let ends_two = |j: u32| head().repeat(&[1, 4], j).push(2);
            let ends_five = |j: u32| head().repeat(&[1, 4], j).push(1).push(5);
            match n % 3 {
                0 => {
                    out.push((
                        ends_five(m - 1),
                        frac(
                            9 * mm + 4,
                            6 * (2 * mm + 1) * (3 * mm + 1) * (6 * mm + 1) * (12 * mm + 7),
                        ),
                    ));
                    out.push((
                        ends_two(m),
                        frac(
                            3 * (2 * mm + 1),
                            2 * (3 * mm + 1) * (3 * mm + 2) * (12 * mm + 5) * (12 * mm + 7),
                        ),
                    ));
                    out.push((
                        ends_five(m),
                        frac(
                            9 * mm + 5,
                            6 * (2 * mm + 1) * (3 * mm + 2) * (6 * mm + 5) * (12 * mm + 5),
                        ),
                    ));
                }
                1 => {
                    if m >= 1 {
                        out.push((
                            ends_five(m - 1),
                            frac(1, 6 * (2 * mm + 1) * (6 * mm + 5) * (12 * mm + 7)),
                        ));
                    }
                    out.push((
                        ends_two(m),
                        frac(
                            3 * (4 * mm + 3),
                            2 * (3 * mm + 2) * (6 * mm + 5) * (12 * mm + 7) * (12 * mm + 11),
                        ),
                    ));
                    out.push((
                        ends_five(m),
                        frac(
                            3 * (8 * mm + 7),
                            2 * (3 * mm + 2) * (6 * mm + 5) * (12 * mm + 11) * (12 * mm + 13),
                        ),
                    ));
                    out.push((
                        ends_two(m + 1),
                        frac(1, 2 * (6 * mm + 5) * (6 * mm + 7) * (12 * mm + 13)),
                    ));
                }
                _ => {
                    out.push((
                        ends_two(m),
                        frac(1, 2 * (6 * mm + 5) * (6 * mm + 7) * (12 * mm + 11)),
                    ));
                    out.push((
                        ends_five(m),
                        frac(
                            3 * (8 * mm + 9),
                            2 * (3 * mm + 4) * (6 * mm + 7) * (12 * mm + 11) * (12 * mm + 13),
                        ),
                    ));
                    out.push((
                        ends_two(m + 1),
                        frac(
                            3 * (4 * mm + 5),
                            2 * (3 * mm + 4) * (6 * mm + 7) * (12 * mm + 13) * (12 * mm + 17),
                        ),
                    ));
                    out.push((
                        ends_five(m + 1),
                        frac(1, 6 * (2 * mm + 3) * (6 * mm + 7) * (12 * mm + 17)),
                    ));
                }
            }
            // Below the stated range the `1,5` leaf shares its closed form with `1,6,1`.
            if m == 0 && n % 3 != 0 {
                let five = ends_five(0);
                let six = head().push(1).push(6).push(1);
                out.retain(|(t, _)| *t != five);
                for t in [five, six] {
                    let a = cell(&t.expand()).region.area();
                    out.push((t, a));
                }
            }
        }
        _ => {}
    }
    out
}

/// Closed-form area of the leaf of length `level` in the subtree with parameter `n`.
pub fn leaf_area(tree: LeafTree, n: u32, level: usize) -> Result<BigRational, EnumError> {
    leaves(tree, n)
        .into_iter()
        .find(|(t, _)| t.len() == level)
        .map(|(_, a)| a)
        .ok_or(EnumError::NoLeaf {
            tree: tree.letter(),
            n,
            level,
        })
}
