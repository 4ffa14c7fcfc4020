//! Cyclic gap statistics of the Farey sequence of order `Q` with coloured denominators
//! `q = c0 mod D`.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::farey_triangle::{bcz_map, Point2Q};

/// Environment variable that fixes the worker count of segmented scans.
pub const THREADS_ENV: &str = "FAREY_GAPS_THREADS";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScanError {
    #[error("order Q = {0} must be at least 2 and below 2^30")]
    Order(u64),
    #[error("modulus D = {d} must satisfy 2 <= D <= Q = {q}")]
    Modulus { d: u64, q: u64 },
    #[error("residue c0 = {c0} is not reduced modulo {d}")]
    Residue { d: u64, c0: u64 },
    #[error("r_max must be at least 1")]
    RMax,
    #[error("no coloured fraction for Q = {q}, D = {d}, c0 = {c0}")]
    NoColoured { q: u64, d: u64, c0: u64 },
    #[error("({0}, {1}) is not a pair of neighbouring denominators")]
    NotNeighbours(u64, u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ScanConfig {
    pub q: u64,
    pub d: u64,
    pub c0: u64,
    pub r_max: usize,
}

impl ScanConfig {
    pub fn new(q: u64, d: u64, c0: u64, r_max: usize) -> Result<Self, ScanError> {
        if !(2..1 << 30).contains(&q) {
            return Err(ScanError::Order(q));
        }
        if d < 2 || d > q {
            return Err(ScanError::Modulus { d, q });
        }
        if c0 >= d {
            return Err(ScanError::Residue { d, c0 });
        }
        if r_max == 0 {
            return Err(ScanError::RMax);
        }
        Ok(ScanConfig { q, d, c0, r_max })
    }
}

/// Gap counts over one period of the Farey sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapHistogram {
    pub config: ScanConfig,
    /// `counts[r]` for `0 <= r <= r_max`.
    pub counts: Vec<u64>,
    pub overflow: u64,
    /// `sum (r+1)` over the overflow gaps.
    pub overflow_length: u64,
    pub coloured_total: u64,
    /// Number of fractions in `[0, 1)`.
    pub fraction_total: u64,
}

impl GapHistogram {
    pub fn count(&self, r: usize) -> u64 {
        self.counts.get(r).copied().unwrap_or(0)
    }

    /// Both counting identities of a full period.
    pub fn conservation_holds(&self) -> bool {
        let gaps: u64 = self.counts.iter().sum::<u64>() + self.overflow;
        let len: u64 = self
            .counts
            .iter()
            .enumerate()
            .map(|(r, c)| (r as u64 + 1) * c)
            .sum::<u64>()
            + self.overflow_length;
        gaps == self.coloured_total && (self.coloured_total == 0 || len == self.fraction_total)
    }
}

/// Denominator after `q_prev, q_cur` in the Farey sequence of order `q`.
#[inline(always)]
pub fn farey_next(q_prev: u64, q_cur: u64, q: u64) -> u64 {
    (q_prev + q) / q_cur * q_cur - q_prev
}

/// `x mod d` through one widening multiply.
#[derive(Clone, Copy)]
struct FastMod {
    d: u64,
    m: u64,
}

impl FastMod {
    fn new(d: u64) -> Self {
        FastMod {
            d,
            m: (u64::MAX / d).wrapping_add(1),
        }
    }

    #[inline(always)]
    fn rem(self, x: u32) -> u64 {
        let low = self.m.wrapping_mul(x as u64);
        ((low as u128 * self.d as u128) >> 64) as u64
    }
}

#[derive(Debug, Clone, Default)]
struct Segment {
    counts: Vec<u64>,
    overflow: u64,
    overflow_length: u64,
    coloured: u64,
    len: u64,
    first_run: u64,
    last_run: u64,
}

fn record(counts: &mut [u64], overflow: &mut u64, overflow_length: &mut u64, run: u64) {
    match counts.get_mut(run as usize) {
        Some(c) => *c += 1,
        None => {
            *overflow += 1;
            *overflow_length += run + 1;
        }
    }
}

/// Scans from the neighbour pair `start` until `stop` is reached.
fn scan_segment(cfg: &ScanConfig, start: (u64, u64), stop: (u64, u64)) -> Segment {
    let qq = cfg.q as u32;
    let fm = FastMod::new(cfg.d);
    let c0 = cfg.c0;
    let mut seg = Segment {
        counts: vec![0; cfg.r_max + 1],
        ..Segment::default()
    };
    let (mut a, mut b) = (start.0 as u32, start.1 as u32);
    let stop = (stop.0 as u32, stop.1 as u32);
    let mut run: u64 = 0;
    let mut seen = false;
    let mut len: u64 = 0;
    loop {
        len += 1;
        if fm.rem(a) == c0 {
            if seen {
                record(
                    &mut seg.counts,
                    &mut seg.overflow,
                    &mut seg.overflow_length,
                    run,
                );
            } else {
                seg.first_run = run;
                seen = true;
            }
            seg.coloured += 1;
            run = 0;
        } else {
            run += 1;
        }
        let s = a + qq;
        let next = if s < 2 * b {
            b - a
        } else if s < 3 * b {
            2 * b - a
        } else {
            s / b * b - a
        };
        a = b;
        b = next;
        if (a, b) == stop {
            break;
        }
    }
    seg.len = len;
    if seen {
        seg.last_run = run;
    } else {
        seg.first_run = run;
    }
    seg
}

/// Denominator of the successor of `a/b` in the Farey sequence of order `q`.
pub fn successor_denominator(a: u64, b: u64, q: u64) -> u64 {
    if b == 1 {
        return q;
    }
    let inv = mod_inverse(a % b, b).expect("reduced fraction");
    let d0 = (b - inv) % b;
    d0 + (q - d0) / b * b
}

fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let e = (a as i64).extended_gcd(&(m as i64));
    (e.gcd == 1).then(|| e.x.rem_euclid(m as i64) as u64)
}

/// Split points: the fractions of a coarse Farey sequence in `[0, 1)`.
fn split_points(q: u64, order: u64) -> Vec<(u64, u64)> {
    let order = order.min(q);
    let mut out = Vec::new();
    let (mut a, mut b, mut c, mut d) = (0u64, 1u64, 1u64, order);
    while a < b {
        out.push((a, b));
        let k = (order + b) / d;
        (a, b, c, d) = (c, d, k * c - a, k * d - b);
    }
    out
}

pub fn thread_count() -> usize {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|s| s.parse().ok())
        .filter(|&n: &usize| n > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

/// One full period; the result does not depend on the thread count.
pub fn scan(cfg: &ScanConfig) -> GapHistogram {
    scan_with(cfg, thread_count(), None)
}

/// Segmented scan with `threads` workers, reporting `(done, total)` segments.
pub fn scan_with(
    cfg: &ScanConfig,
    threads: usize,
    progress: Option<&(dyn Fn(usize, usize) + Sync)>,
) -> GapHistogram {
    let order = if cfg.q < 1000 { 1 } else { 40 };
    let splits = split_points(cfg.q, order);
    let pairs: Vec<(u64, u64)> = splits
        .iter()
        .map(|&(a, b)| (b, successor_denominator(a, b, cfg.q)))
        .collect();
    let n = pairs.len();
    let results: Mutex<Vec<Option<Segment>>> = Mutex::new(vec![None; n]);
    let next = AtomicUsize::new(0);
    let done = AtomicUsize::new(0);
    let work = || loop {
        let i = next.fetch_add(1, Ordering::Relaxed);
        if i >= n {
            break;
        }
        let stop = if i + 1 < n { pairs[i + 1] } else { (1, cfg.q) };
        let seg = scan_segment(cfg, pairs[i], stop);
        results.lock().unwrap()[i] = Some(seg);
        let k = done.fetch_add(1, Ordering::Relaxed) + 1;
        if let Some(p) = progress {
            p(k, n);
        }
    };
    std::thread::scope(|s| {
        for _ in 1..threads.max(1).min(n) {
            s.spawn(work);
        }
        work();
    });
    let segments: Vec<Segment> = results
        .into_inner()
        .unwrap()
        .into_iter()
        .map(Option::unwrap)
        .collect();
    merge(cfg, &segments)
}

fn merge(cfg: &ScanConfig, segments: &[Segment]) -> GapHistogram {
    let mut h = GapHistogram {
        config: *cfg,
        counts: vec![0; cfg.r_max + 1],
        overflow: 0,
        overflow_length: 0,
        coloured_total: 0,
        fraction_total: 0,
    };
    let mut leading: u64 = 0;
    let mut open: u64 = 0;
    for seg in segments {
        h.fraction_total += seg.len;
        if seg.coloured == 0 {
            if h.coloured_total == 0 {
                leading += seg.first_run;
            } else {
                open += seg.first_run;
            }
            continue;
        }
        if h.coloured_total == 0 {
            leading += seg.first_run;
        } else {
            record(
                &mut h.counts,
                &mut h.overflow,
                &mut h.overflow_length,
                open + seg.first_run,
            );
        }
        for (c, s) in h.counts.iter_mut().zip(&seg.counts) {
            *c += s;
        }
        h.overflow += seg.overflow;
        h.overflow_length += seg.overflow_length;
        h.coloured_total += seg.coloured;
        open = seg.last_run;
    }
    if h.coloured_total > 0 {
        record(
            &mut h.counts,
            &mut h.overflow,
            &mut h.overflow_length,
            open + leading,
        );
    }
    h
}

/// Plain sequential scan that also tracks numerators and checks `a' q - a q' = 1`.
pub fn scan_checked(cfg: &ScanConfig) -> Result<GapHistogram, ScanError> {
    let q = cfg.q as i64;
    let (mut qa, mut qb) = (1i64, q);
    let (mut na, mut nb) = (0i64, 1i64);
    let mut seg = Segment {
        counts: vec![0; cfg.r_max + 1],
        ..Segment::default()
    };
    let mut run = 0u64;
    let mut seen = false;
    loop {
        if nb * qa - na * qb != 1 {
            return Err(ScanError::NotNeighbours(qa as u64, qb as u64));
        }
        seg.len += 1;
        if (qa as u64) % cfg.d == cfg.c0 {
            if seen {
                record(
                    &mut seg.counts,
                    &mut seg.overflow,
                    &mut seg.overflow_length,
                    run,
                );
            } else {
                seg.first_run = run;
                seen = true;
            }
            seg.coloured += 1;
            run = 0;
        } else {
            run += 1;
        }
        let k = (qa + q) / qb;
        (qa, qb) = (qb, k * qb - qa);
        (na, nb) = (nb, k * nb - na);
        if na == 1 && qa == 1 {
            break;
        }
    }
    if seen {
        seg.last_run = run;
    } else {
        seg.first_run = run;
    }
    Ok(merge(cfg, &[seg]))
}

/// `N(Q; r, D, c0) / N(Q; D, c0)` for every observed `r`.
pub fn empirical_nu(h: &GapHistogram) -> Result<BTreeMap<usize, BigRational>, ScanError> {
    if h.coloured_total == 0 {
        return Err(ScanError::NoColoured {
            q: h.config.q,
            d: h.config.d,
            c0: h.config.c0,
        });
    }
    let total = BigInt::from(h.coloured_total);
    Ok(h.counts
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(r, &c)| (r, BigRational::new(BigInt::from(c), total.clone())))
        .collect())
}

/// `sum_{q <= Q, q = c0 mod D} phi(q)` by a sieve.
pub fn phi_sum(q: u64, d: u64, c0: u64) -> u64 {
    let n = q as usize;
    let mut phi: Vec<u32> = (0..=n as u32).collect();
    for p in 2..=n {
        if phi[p] == p as u32 {
            for m in (p..=n).step_by(p) {
                phi[m] -= phi[m] / p as u32;
            }
        }
    }
    (1..=n)
        .filter(|&m| m as u64 % d == c0)
        .map(|m| phi[m] as u64)
        .sum()
}

/// Checks `bcz_map(q_i/Q, q_{i+1}/Q) = (q_{i+1}/Q, q_{i+2}/Q)` at `samples` random places.
pub fn bcz_sample_check(q: u64, samples: usize, seed: u64) -> Result<usize, (u64, u64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0;
    while checked < samples {
        let b = rng.gen_range(1..=q);
        let a = rng.gen_range(0..b);
        if a.gcd(&b) != 1 {
            continue;
        }
        let d = successor_denominator(a, b, q);
        let e = farey_next(b, d, q);
        let qq = q as i64;
        let p = Point2Q::from_ints(b as i64, qq, d as i64, qq);
        let want = Point2Q::from_ints(d as i64, qq, e as i64, qq);
        match bcz_map(&p) {
            Ok(img) if img == want => checked += 1,
            _ => return Err((b, d)),
        }
    }
    Ok(checked)
}

/// Period of denominators of the Farey sequence of order `q`, for small `q`.
pub fn period(q: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let (mut a, mut b) = (1u64, q);
    loop {
        out.push(a);
        (a, b) = (b, farey_next(a, b, q));
        if (a, b) == (1, q) {
            return out;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

    #[test]
    fn next_denominator_examples() {
        assert_eq!(farey_next(1, 5, 5), 4);
        assert_eq!(farey_next(3, 5, 5), 2);
        assert_eq!(farey_next(2, 5, 5), 3);
        assert_eq!(period(5), vec![1, 5, 4, 3, 5, 2, 5, 3, 4, 5]);
    }

    #[test]
    fn order_five() {
        let cfg = ScanConfig::new(5, 3, 0, 10).unwrap();
        let h = scan(&cfg);
        assert_eq!(h.coloured_total, 2);
        assert_eq!((h.count(3), h.count(5)), (1, 1));
        assert_eq!(h.fraction_total, 10);
        let nu = empirical_nu(&h).unwrap();
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(nu, BTreeMap::from([(3, half.clone()), (5, half)]));
    }

    #[test]
    fn order_three() {
        let h = scan(&ScanConfig::new(3, 3, 0, 5).unwrap());
        assert_eq!(h.coloured_total, 2);
        assert_eq!(h.counts.iter().sum::<u64>() + h.overflow, 2);
    }

    #[test]
    fn config_errors() {
        assert!(matches!(
            ScanConfig::new(1, 2, 0, 3),
            Err(ScanError::Order(1))
        ));
        assert!(matches!(
            ScanConfig::new(5, 7, 0, 3),
            Err(ScanError::Modulus { .. })
        ));
        assert!(matches!(
            ScanConfig::new(5, 3, 3, 3),
            Err(ScanError::Residue { .. })
        ));
        assert!(matches!(ScanConfig::new(5, 3, 0, 0), Err(ScanError::RMax)));
    }

    #[test]
    fn empty_histogram_flagged() {
        let h = scan(&ScanConfig::new(5, 5, 0, 3).unwrap());
        assert_eq!(h.coloured_total, 4);
        let empty = GapHistogram {
            coloured_total: 0,
            counts: vec![0; 4],
            ..h
        };
        assert!(matches!(
            empirical_nu(&empty),
            Err(ScanError::NoColoured { .. })
        ));
    }

    #[test]
    fn successors() {
        for q in [5u64, 12, 37] {
            let p = period(q);
            let mut fracs = Vec::new();
            for b in 1..=q {
                for a in 0..b {
                    if a.gcd(&b) == 1 {
                        fracs.push((a, b));
                    }
                }
            }
            fracs.sort_by(|x, y| (x.0 * y.1).cmp(&(y.0 * x.1)));
            assert_eq!(fracs.iter().map(|f| f.1).collect::<Vec<_>>(), p);
            for (i, &(a, b)) in fracs.iter().enumerate() {
                let next = p.get(i + 1).copied().unwrap_or(1);
                assert_eq!(successor_denominator(a, b, q), next);
            }
        }
    }

    #[test]
    fn segmented_matches_checked() {
        for (q, d, c0) in [
            (1200, 3, 0),
            (1500, 3, 1),
            (1300, 2, 0),
            (1100, 4, 1),
            (1000, 7, 3),
        ] {
            let cfg = ScanConfig::new(q, d, c0, 20).unwrap();
            let a = scan_with(&cfg, 1, None);
            let b = scan_with(&cfg, 3, None);
            let c = scan_checked(&cfg).unwrap();
            assert_eq!(a, b);
            assert_eq!(a, c);
            assert!(a.conservation_holds());
            assert_eq!(a.coloured_total, phi_sum(q, d, c0));
        }
    }

    #[test]
    fn bcz_consistency() {
        assert_eq!(bcz_sample_check(997, 500, 7), Ok(500));
    }

    #[test]
    fn scan_properties() {
        let mut runner = TestRunner::new_with_rng(
            Config {
                cases: 1000,
                ..Config::default()
            },
            TestRng::deterministic_rng(RngAlgorithm::ChaCha),
        );
        runner
            .run(
                &(2u64..160, 2u64..9, 0u64..9, 1usize..12),
                |(q, d, c0, r_max)| {
                    prop_assume!(d <= q && c0 < d);
                    let cfg = ScanConfig::new(q, d, c0, r_max).unwrap();
                    let h = scan(&cfg);
                    prop_assert!(h.conservation_holds());
                    prop_assert_eq!(h.coloured_total, phi_sum(q, d, c0));
                    prop_assert_eq!(h.fraction_total, phi_sum(q, 1, 0));
                    prop_assert_eq!(&h, &scan_checked(&cfg).unwrap());
                    Ok(())
                },
            )
            .unwrap();
    }
}
