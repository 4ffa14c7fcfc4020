//! The Farey triangle, the BCZ map, and exact convex regions cut out by index tuples.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::continuants::TupleSpec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TriangleError {
    #[error("point ({0}, {1}) lies outside the Farey triangle")]
    Outside(BigRational, BigRational),
}

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point2Q {
    pub x: BigRational,
    pub y: BigRational,
}

impl Point2Q {
    pub fn new(x: BigRational, y: BigRational) -> Self {
        Point2Q { x, y }
    }

    pub fn from_ints(xn: i64, xd: i64, yn: i64, yd: i64) -> Self {
        Point2Q::new(q(xn, xd), q(yn, yd))
    }

    /// Membership in `0 < x, y <= 1, x + y > 1`.
    pub fn in_triangle(&self) -> bool {
        let one = BigRational::one();
        self.x.is_positive()
            && self.y.is_positive()
            && self.x <= one
            && self.y <= one
            && &self.x + &self.y > one
    }

    /// Closure of the triangle with the corner `(1, 0)` removed, where the map is defined.
    pub fn in_map_domain(&self) -> bool {
        let one = BigRational::one();
        !self.x.is_negative()
            && self.y.is_positive()
            && self.x <= one
            && self.y <= one
            && &self.x + &self.y >= one
    }

    fn lex_cmp(&self, other: &Self) -> Ordering {
        self.x.cmp(&other.x).then_with(|| self.y.cmp(&other.y))
    }
}

impl fmt::Display for Point2Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

fn floor_int(v: &BigRational) -> BigInt {
    v.numer().div_floor(v.denom())
}

pub fn bcz_index(p: &Point2Q) -> Result<u64, TriangleError> {
    if !p.in_map_domain() {
        return Err(TriangleError::Outside(p.x.clone(), p.y.clone()));
    }
    let k = floor_int(&((BigRational::one() + &p.x) / &p.y));
    Ok(k.to_u64().expect("index fits in u64"))
}

/// `T(x, y) = (y, k y - x)` with `k = floor((1 + x) / y)`.
pub fn bcz_map(p: &Point2Q) -> Result<Point2Q, TriangleError> {
    let k = bcz_index(p)?;
    let y2 = BigRational::from_integer(BigInt::from(k)) * &p.y - &p.x;
    Ok(Point2Q::new(p.y.clone(), y2))
}

/// The first `r` BCZ indices along the orbit of `p`.
pub fn bcz_indices(p: &Point2Q, r: usize) -> Result<Vec<u64>, TriangleError> {
    let mut out = Vec::with_capacity(r);
    let mut cur = p.clone();
    for _ in 0..r {
        out.push(bcz_index(&cur)?);
        cur = bcz_map(&cur)?;
    }
    Ok(out)
}

/// `alpha x + beta y <= gamma`, or `<` when `strict`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfPlane {
    pub alpha: BigRational,
    pub beta: BigRational,
    pub gamma: BigRational,
    pub strict: bool,
}

impl HalfPlane {
    pub fn new(alpha: BigRational, beta: BigRational, gamma: BigRational, strict: bool) -> Self {
        assert!(
            !(alpha.is_zero() && beta.is_zero()),
            "half-plane needs a nonzero normal"
        );
        HalfPlane {
            alpha,
            beta,
            gamma,
            strict,
        }
    }

    fn slack(&self, p: &Point2Q) -> BigRational {
        &self.gamma - (&self.alpha * &p.x + &self.beta * &p.y)
    }

    pub fn contains(&self, p: &Point2Q) -> bool {
        let s = self.slack(p);
        if self.strict {
            s.is_positive()
        } else {
            !s.is_negative()
        }
    }

    pub fn contains_closure(&self, p: &Point2Q) -> bool {
        !self.slack(p).is_negative()
    }
}

/// An integer linear form `px x + py y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm {
    pub px: BigInt,
    pub py: BigInt,
}

impl LinearForm {
    fn eval(&self, p: &Point2Q) -> BigRational {
        BigRational::from_integer(self.px.clone()) * &p.x
            + BigRational::from_integer(self.py.clone()) * &p.y
    }

    fn next(&self, prev: &LinearForm, k: u64) -> LinearForm {
        let k = BigInt::from(k);
        LinearForm {
            px: &k * &self.px - &prev.px,
            py: &k * &self.py - &prev.py,
        }
    }

    fn le_one(&self) -> HalfPlane {
        HalfPlane::new(
            BigRational::from_integer(self.px.clone()),
            BigRational::from_integer(self.py.clone()),
            BigRational::one(),
            false,
        )
    }

    fn sum_gt_one(&self, other: &LinearForm) -> HalfPlane {
        HalfPlane::new(
            BigRational::from_integer(-(&self.px + &other.px)),
            BigRational::from_integer(-(&self.py + &other.py)),
            -BigRational::one(),
            true,
        )
    }
}

/// Closure of a region of the Farey triangle as a convex polygon.
///
/// Vertices run counter-clockwise from the lexicographically smallest one.
/// A region with zero area is empty; its vertex list then holds whatever
/// degenerate remains (at most two points) for diagnostics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexRegion {
    vertices: Vec<Point2Q>,
    empty: bool,
}

fn cross(o: &Point2Q, a: &Point2Q, b: &Point2Q) -> BigRational {
    (&a.x - &o.x) * (&b.y - &o.y) - (&a.y - &o.y) * (&b.x - &o.x)
}

impl ConvexRegion {
    /// Canonicalizes an arbitrary convex polygon given in either orientation.
    pub fn from_polygon(mut pts: Vec<Point2Q>) -> Self {
        pts.dedup();
        while pts.len() > 1 && pts.first() == pts.last() {
            pts.pop();
        }
        let twice: BigRational = shoelace2(&pts);
        if twice.is_zero() {
            let mut uniq = pts;
            uniq.sort_by(|a, b| a.lex_cmp(b));
            uniq.dedup();
            if uniq.len() > 2 {
                let last = uniq.pop().unwrap();
                uniq.truncate(1);
                uniq.push(last);
            }
            return ConvexRegion {
                vertices: uniq,
                empty: true,
            };
        }
        if twice.is_negative() {
            pts.reverse();
        }
        let mut changed = true;
        while changed && pts.len() > 3 {
            changed = false;
            let n = pts.len();
            for i in 0..n {
                let (a, b, c) = (&pts[(i + n - 1) % n], &pts[i], &pts[(i + 1) % n]);
                if cross(a, b, c).is_zero() {
                    pts.remove(i);
                    changed = true;
                    break;
                }
            }
        }
        let start = (0..pts.len())
            .min_by(|&i, &j| pts[i].lex_cmp(&pts[j]))
            .unwrap();
        pts.rotate_left(start);
        ConvexRegion {
            vertices: pts,
            empty: false,
        }
    }

    pub fn farey_triangle() -> Self {
        ConvexRegion::from_polygon(vec![
            Point2Q::from_ints(1, 1, 0, 1),
            Point2Q::from_ints(1, 1, 1, 1),
            Point2Q::from_ints(0, 1, 1, 1),
        ])
    }

    pub fn vertices(&self) -> &[Point2Q] {
        if self.empty {
            &[]
        } else {
            &self.vertices
        }
    }

    pub fn degenerate_remains(&self) -> &[Point2Q] {
        &self.vertices
    }

    pub fn is_empty(&self) -> bool {
        self.empty
    }

    pub fn area(&self) -> BigRational {
        if self.empty {
            return BigRational::zero();
        }
        shoelace2(&self.vertices) / BigRational::from_integer(BigInt::from(2))
    }

    /// Clips by a closed half-plane.
    pub fn clip(&self, h: &HalfPlane) -> ConvexRegion {
        if self.empty {
            return self.clone();
        }
        let pts = &self.vertices;
        let n = pts.len();
        let slacks: Vec<BigRational> = pts.iter().map(|p| h.slack(p)).collect();
        if slacks.iter().all(|s| !s.is_negative()) {
            return self.clone();
        }
        let mut out = Vec::with_capacity(n + 1);
        for i in 0..n {
            let j = (i + 1) % n;
            let (si, sj) = (&slacks[i], &slacks[j]);
            if !si.is_negative() {
                out.push(pts[i].clone());
            }
            if (si.is_negative() && sj.is_positive()) || (si.is_positive() && sj.is_negative()) {
                let t = si / (si - sj);
                let x = &pts[i].x + &t * (&pts[j].x - &pts[i].x);
                let y = &pts[i].y + &t * (&pts[j].y - &pts[i].y);
                out.push(Point2Q::new(x, y));
            }
        }
        ConvexRegion::from_polygon(out)
    }

    /// Whether `p` lies in the closed polygon.
    pub fn contains_closure(&self, p: &Point2Q) -> bool {
        if self.empty {
            return false;
        }
        let n = self.vertices.len();
        (0..n).all(|i| !cross(&self.vertices[i], &self.vertices[(i + 1) % n], p).is_negative())
    }

    /// The vertical segment `{(x, y)}` inside the closure, if any.
    pub fn vertical_slice(&self, x: &BigRational) -> Option<(BigRational, BigRational)> {
        if self.empty {
            return None;
        }
        let n = self.vertices.len();
        let mut ys = Vec::new();
        for i in 0..n {
            let (a, b) = (&self.vertices[i], &self.vertices[(i + 1) % n]);
            if &a.x == x {
                ys.push(a.y.clone());
            }
            let (lo, hi) = if a.x < b.x { (a, b) } else { (b, a) };
            if &lo.x < x && x < &hi.x {
                let t = (x - &lo.x) / (&hi.x - &lo.x);
                ys.push(&lo.y + t * (&hi.y - &lo.y));
            }
        }
        let lo = ys.iter().min()?.clone();
        let hi = ys.iter().max()?.clone();
        Some((lo, hi))
    }
}

fn shoelace2(pts: &[Point2Q]) -> BigRational {
    let n = pts.len();
    if n < 3 {
        return BigRational::zero();
    }
    let mut s = BigRational::zero();
    for i in 0..n {
        let (a, b) = (&pts[i], &pts[(i + 1) % n]);
        s += &a.x * &b.y - &b.x * &a.y;
    }
    s
}

/// A region together with the two linear forms that govern its next index.
#[derive(Debug, Clone)]
pub struct Cell {
    pub region: ConvexRegion,
    prev: LinearForm,
    cur: LinearForm,
    depth: usize,
}

impl Cell {
    pub fn root() -> Self {
        Cell {
            region: ConvexRegion::farey_triangle(),
            prev: LinearForm {
                px: BigInt::one(),
                py: BigInt::zero(),
            },
            cur: LinearForm {
                px: BigInt::zero(),
                py: BigInt::one(),
            },
            depth: 0,
        }
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    /// The two half-planes that select index `k` at the next step.
    pub fn constraints(&self, k: u64) -> [HalfPlane; 2] {
        let next = self.cur.next(&self.prev, k);
        [next.le_one(), self.cur.sum_gt_one(&next)]
    }

    pub fn child(&self, k: u64) -> Cell {
        let next = self.cur.next(&self.prev, k);
        let mut region = self.region.clip(&next.le_one());
        let mut lower = self.cur.sum_gt_one(&next);
        lower.strict = false;
        region = region.clip(&lower);
        Cell {
            region,
            prev: self.cur.clone(),
            cur: next,
            depth: self.depth + 1,
        }
    }

    /// Inclusive range of next indices met by the closure; `None` upper bound means unbounded.
    pub fn child_range(&self) -> Option<(u64, Option<u64>)> {
        if self.region.is_empty() {
            return None;
        }
        let one = BigRational::one();
        let mut lo: Option<BigInt> = None;
        let mut hi: Option<BigInt> = None;
        let mut unbounded = false;
        for v in self.region.vertices() {
            let yv = self.cur.eval(v);
            if !yv.is_positive() {
                unbounded = true;
                continue;
            }
            let f = floor_int(&((&one + self.prev.eval(v)) / yv));
            if lo.as_ref().map_or(true, |l| &f < l) {
                lo = Some(f.clone());
            }
            if hi.as_ref().map_or(true, |h| &f > h) {
                hi = Some(f);
            }
        }
        let lo = lo?.to_u64()?.max(1);
        let hi = if unbounded { None } else { Some(hi?.to_u64()?) };
        Some((lo, hi))
    }

    /// Nonempty children with index at most `cap` when the range is unbounded.
    pub fn children(&self, cap: u64) -> Vec<(u64, Cell)> {
        let Some((lo, hi)) = self.child_range() else {
            return Vec::new();
        };
        let hi = hi.unwrap_or(cap).min(cap.max(lo));
        (lo..=hi)
            .map(|k| (k, self.child(k)))
            .filter(|(_, c)| !c.region.is_empty())
            .collect()
    }
}

pub fn cell(ks: &[u64]) -> Cell {
    ks.iter().fold(Cell::root(), |c, &k| c.child(k))
}

/// Exact closure of the region of points whose first indices are `t`.
pub fn region(t: &TupleSpec) -> ConvexRegion {
    region_of(&t.expand())
}

pub fn region_of(ks: &[u64]) -> ConvexRegion {
    let mut c = Cell::root();
    for &k in ks {
        c = c.child(k);
        if c.region.is_empty() {
            break;
        }
    }
    c.region
}

/// The defining system: the triangle followed by two inequalities per index.
pub fn half_planes(t: &TupleSpec) -> Vec<HalfPlane> {
    let one = BigRational::one;
    let zero = BigRational::zero;
    let mut out = vec![
        HalfPlane::new(one(), zero(), one(), false),
        HalfPlane::new(zero(), one(), one(), false),
        HalfPlane::new(-one(), -one(), -one(), true),
    ];
    let mut c = Cell::root();
    for k in t.expand() {
        out.extend(c.constraints(k));
        c = c.child(k);
    }
    out
}

pub fn area(reg: &ConvexRegion) -> BigRational {
    reg.area()
}

pub fn reverse_map_check(t: &TupleSpec) -> (BigRational, BigRational) {
    (region(t).area(), region(&t.reversed()).area())
}

/// `|T(k)|`: `1/6` for `k = 1`, else `4 / (k (k + 1) (k + 2))`.
pub fn single_area(k: u64) -> BigRational {
    if k == 1 {
        return q(1, 6);
    }
    let k = BigInt::from(k);
    BigRational::new(BigInt::from(4), &k * (&k + 1) * (&k + 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t(s: &str) -> TupleSpec {
        s.parse().unwrap()
    }

    fn pts(v: &[(i64, i64, i64, i64)]) -> Vec<Point2Q> {
        v.iter()
            .map(|&(a, b, c, d)| Point2Q::from_ints(a, b, c, d))
            .collect()
    }

    fn same_vertex_set(reg: &ConvexRegion, expected: &[Point2Q]) -> bool {
        let mut a = reg.vertices().to_vec();
        let mut b = expected.to_vec();
        a.sort_by(|p, q| p.lex_cmp(q));
        b.sort_by(|p, q| p.lex_cmp(q));
        a == b
    }

    #[test]
    fn bcz_examples() {
        assert_eq!(bcz_index(&Point2Q::from_ints(1, 3, 2, 3)), Ok(2));
        assert_eq!(bcz_index(&Point2Q::from_ints(1, 1, 1, 1)), Ok(2));
        assert_eq!(bcz_index(&Point2Q::from_ints(4, 5, 3, 5)), Ok(3));
        assert_eq!(
            bcz_map(&Point2Q::from_ints(3, 5, 4, 5)),
            Ok(Point2Q::from_ints(4, 5, 1, 1))
        );
        assert!(bcz_index(&Point2Q::from_ints(1, 3, 1, 3)).is_err());
        assert!(bcz_index(&Point2Q::from_ints(1, 1, 0, 1)).is_err());
        assert!(bcz_index(&Point2Q::from_ints(1, 4, 1, 2)).is_err());
    }

    #[test]
    fn bcz_steps_farey_denominators() {
        let big_q = 5i64;
        for (a, b, c) in [(5, 4, 3), (4, 3, 5), (3, 5, 2), (5, 2, 5), (2, 5, 3)] {
            let p = Point2Q::from_ints(a, big_q, b, big_q);
            assert_eq!(bcz_map(&p), Ok(Point2Q::from_ints(b, big_q, c, big_q)));
        }
    }

    #[test]
    fn single_index_regions() {
        let r1 = region(&t("1"));
        assert!(same_vertex_set(
            &r1,
            &pts(&[(1, 3, 2, 3), (1, 1, 1, 1), (0, 1, 1, 1)])
        ));
        assert_eq!(r1.area(), q(1, 6));
        for k in 2..=50i64 {
            let r = region(&TupleSpec::new().push(k as u64));
            let expected = pts(&[
                (k, k + 2, 2, k + 2),
                (1, 1, 2, k),
                (1, 1, 2, k + 1),
                (k - 1, k + 1, 2, k + 1),
            ]);
            assert!(same_vertex_set(&r, &expected), "k = {k}");
            assert_eq!(r.area(), single_area(k as u64));
        }
    }

    #[test]
    fn named_regions() {
        let r = region(&t("2,4,1"));
        assert_eq!(
            r.vertices(),
            &pts(&[(4, 5, 3, 5), (1, 1, 2, 3), (1, 1, 5, 7)])[..]
        );
        assert_eq!(r.area(), q(1, 210));
        assert!(region(&t("3,1,3")).is_empty());
        assert_eq!(region(&t("2,2")).area(), q(1, 10));
        assert_eq!(region(&t("1,4")).area(), q(1, 35));
    }

    #[test]
    fn canonical_order_is_ccw_from_lex_min() {
        let r = ConvexRegion::from_polygon(pts(&[
            (0, 1, 1, 1),
            (1, 2, 1, 1),
            (1, 1, 1, 1),
            (1, 1, 0, 1),
        ]));
        assert_eq!(
            r.vertices(),
            &pts(&[(0, 1, 1, 1), (1, 1, 0, 1), (1, 1, 1, 1)])[..]
        );
        let single = ConvexRegion::from_polygon(pts(&[(1, 2, 1, 2)]));
        assert!(single.is_empty());
        assert_eq!(single.area(), BigRational::zero());
    }

    #[test]
    fn vertical_slices() {
        let tri = ConvexRegion::farey_triangle();
        assert_eq!(tri.vertical_slice(&q(1, 4)), Some((q(3, 4), q(1, 1))));
        assert_eq!(tri.vertical_slice(&q(1, 1)), Some((q(0, 1), q(1, 1))));
        assert_eq!(tri.vertical_slice(&q(3, 2)), None);
    }

    #[test]
    fn child_ranges_cover_children() {
        let root = Cell::root();
        assert_eq!(root.child_range(), Some((1, None)));
        let c = cell(&[2]);
        let (lo, hi) = c.child_range().unwrap();
        let kids = c.children(100);
        assert_eq!(kids.first().map(|k| k.0), Some(lo));
        assert!(hi.is_some());
        let total: BigRational = kids.iter().map(|(_, k)| k.region.area()).sum();
        assert_eq!(total, c.region.area());
    }

    #[test]
    fn half_plane_system_matches_orbit() {
        let tuple = t("2,(4,1)^2,3");
        let hs = half_planes(&tuple);
        assert_eq!(hs.len(), 3 + 2 * tuple.len());
        let reg = region(&tuple);
        let v = reg.vertices();
        let cx = v.iter().map(|p| p.x.clone()).sum::<BigRational>() / q(v.len() as i64, 1);
        let cy = v.iter().map(|p| p.y.clone()).sum::<BigRational>() / q(v.len() as i64, 1);
        let centre = Point2Q::new(cx, cy);
        assert!(hs.iter().all(|h| h.contains(&centre)));
        assert_eq!(bcz_indices(&centre, tuple.len()).unwrap(), tuple.expand());
    }

    proptest! {
        #![proptest_config(ProptestConfig { cases: 500, rng_algorithm: prop::test_runner::RngAlgorithm::ChaCha, ..ProptestConfig::default() })]

        #[test]
        fn orbit_points_lie_in_their_region(a in 1i64..2000, b in 1i64..2000, r in 1usize..7) {
            let den = 2000i64;
            let p = Point2Q::from_ints(den - a / 2, den, (den - b / 3).max(a / 2 + 1), den);
            prop_assume!(p.in_triangle());
            let ks = bcz_indices(&p, r).unwrap();
            prop_assert!(region_of(&ks).contains_closure(&p));
        }

        #[test]
        fn reversal_preserves_area(ks in prop::collection::vec(1u64..=6, 1..=7)) {
            let mut rev = ks.clone();
            rev.reverse();
            prop_assert_eq!(region_of(&ks).area(), region_of(&rev).area());
        }
    }
}
