//! Limit proportions `nu(r; D, c0)`: assembly from enumerated areas, closed forms and
//! decimal rendering.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::enumeration::{
    enumerate_a_circ, enumerate_bounded, enumerate_levels, single_tail, CongruenceSpec,
    Decomposition, EnumError,
};
use crate::farey_triangle::single_area;
use crate::ratio_string;
use crate::reference::{BINARY_SMALL, TERNARY_SMALL};

/// `pi / sqrt(3)` to 70 decimals.
pub const PI_SQRT3: &str =
    "1.8137993642342178505940782576421557322840662480927405755698849353881230";
/// `ln 3` to 70 decimals.
pub const LN3: &str = "1.0986122886681096913952452369225257046474905578227494517346943336374942";
/// `ln 2` to 70 decimals.
pub const LN2: &str = "0.6931471805599453094172321214581765680755001343602552541206800094933936";

const SCALE_DIGITS: usize = 66;
pub const MAX_DIGITS: usize = 50;

fn big(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// An element of `Q + Q pi/sqrt(3) + Q ln 3 + Q ln 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymbolicValue {
    pub rational: BigRational,
    pub pi_sqrt3: BigRational,
    pub ln3: BigRational,
    pub ln2: BigRational,
}

impl SymbolicValue {
    pub fn zero() -> Self {
        SymbolicValue::from_rational(BigRational::zero())
    }

    pub fn from_rational(q: BigRational) -> Self {
        SymbolicValue {
            rational: q,
            pi_sqrt3: BigRational::zero(),
            ln3: BigRational::zero(),
            ln2: BigRational::zero(),
        }
    }

    pub fn new(
        rational: BigRational,
        pi_sqrt3: BigRational,
        ln3: BigRational,
        ln2: BigRational,
    ) -> Self {
        SymbolicValue {
            rational,
            pi_sqrt3,
            ln3,
            ln2,
        }
    }

    /// `Some(q)` when the value is rational.
    pub fn as_rational(&self) -> Option<&BigRational> {
        (self.pi_sqrt3.is_zero() && self.ln3.is_zero() && self.ln2.is_zero())
            .then_some(&self.rational)
    }

    fn transcendental_weight(&self) -> BigRational {
        self.pi_sqrt3.abs() + self.ln3.abs() + self.ln2.abs()
    }

    pub fn to_f64(&self) -> f64 {
        numeric_eval(self, 17).parse().unwrap()
    }
}

impl Add for SymbolicValue {
    type Output = SymbolicValue;
    fn add(self, o: SymbolicValue) -> SymbolicValue {
        SymbolicValue {
            rational: self.rational + o.rational,
            pi_sqrt3: self.pi_sqrt3 + o.pi_sqrt3,
            ln3: self.ln3 + o.ln3,
            ln2: self.ln2 + o.ln2,
        }
    }
}

impl AddAssign for SymbolicValue {
    fn add_assign(&mut self, o: SymbolicValue) {
        *self = std::mem::replace(self, SymbolicValue::zero()) + o;
    }
}

impl Neg for SymbolicValue {
    type Output = SymbolicValue;
    fn neg(self) -> SymbolicValue {
        SymbolicValue {
            rational: -self.rational,
            pi_sqrt3: -self.pi_sqrt3,
            ln3: -self.ln3,
            ln2: -self.ln2,
        }
    }
}

impl Sub for SymbolicValue {
    type Output = SymbolicValue;
    fn sub(self, o: SymbolicValue) -> SymbolicValue {
        self + (-o)
    }
}

impl Mul<&BigRational> for SymbolicValue {
    type Output = SymbolicValue;
    fn mul(self, q: &BigRational) -> SymbolicValue {
        SymbolicValue {
            rational: self.rational * q,
            pi_sqrt3: self.pi_sqrt3 * q,
            ln3: self.ln3 * q,
            ln2: self.ln2 * q,
        }
    }
}

impl std::iter::Sum for SymbolicValue {
    fn sum<I: Iterator<Item = SymbolicValue>>(it: I) -> SymbolicValue {
        it.fold(SymbolicValue::zero(), |a, b| a + b)
    }
}

impl fmt::Display for SymbolicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<(BigRational, &str)> = Vec::new();
        for (c, name) in [
            (&self.rational, ""),
            (&self.pi_sqrt3, "pi/sqrt(3)"),
            (&self.ln3, "ln(3)"),
            (&self.ln2, "ln(2)"),
        ] {
            if !c.is_zero() {
                terms.push((c.clone(), name));
            }
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (c, name)) in terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            match (name.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "{name}")?,
                (false, false) => write!(f, "{mag}*{name}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for SymbolicValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("SymbolicValue", 4)?;
        st.serialize_field("rational", &ratio_string(&self.rational))?;
        st.serialize_field("pi_sqrt3", &ratio_string(&self.pi_sqrt3))?;
        st.serialize_field("ln3", &ratio_string(&self.ln3))?;
        st.serialize_field("ln2", &ratio_string(&self.ln2))?;
        st.end()
    }
}

fn scaled_constant(s: &str) -> BigInt {
    let (int, frac) = s.split_once('.').unwrap();
    let digits = format!("{int}{}", &frac[..SCALE_DIGITS]);
    digits.parse().unwrap()
}

fn pow10(n: usize) -> BigInt {
    BigInt::from(10u32).pow(n as u32)
}

/// Round `q` to an integer, halves away from zero.
fn round_half_away(q: &BigRational) -> BigInt {
    let two = BigInt::from(2);
    let n = q.numer() * &two + q.denom();
    let d = q.denom() * &two;
    if q.is_negative() {
        -((-q.numer() * &two + q.denom()).div_floor(&d))
    } else {
        n.div_floor(&d)
    }
}

/// Approximation of `v` within `err * 10^-66`.
fn approx(v: &SymbolicValue) -> (BigRational, BigRational) {
    let scale = BigRational::from_integer(pow10(SCALE_DIGITS));
    let mut x = v.rational.clone();
    for (c, k) in [(&v.pi_sqrt3, PI_SQRT3), (&v.ln3, LN3), (&v.ln2, LN2)] {
        if !c.is_zero() {
            x += c * BigRational::from_integer(scaled_constant(k)) / &scale;
        }
    }
    let err = v.transcendental_weight() / scale;
    (x, err)
}

fn render(mag: BigInt, negative: bool, digits: usize) -> String {
    let s = mag.to_str_radix(10);
    let s = if s.len() <= digits {
        format!("{}{s}", "0".repeat(digits + 1 - s.len()))
    } else {
        s
    };
    let (int, frac) = s.split_at(s.len() - digits);
    let sign = if negative && mag.sign() != Sign::NoSign {
        "-"
    } else {
        ""
    };
    if digits == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

/// Decimal rendering of `v` with `digits <= 50` places, rounded half away from zero.
pub fn numeric_eval(v: &SymbolicValue, digits: usize) -> String {
    let digits = digits.min(MAX_DIGITS);
    let (x, _) = approx(v);
    let scaled = x * BigRational::from_integer(pow10(digits));
    let n = round_half_away(&scaled);
    render(n.abs(), n.is_negative(), digits)
}

/// Decimal rendering of `v` truncated toward zero after `digits` places.
pub fn numeric_truncated(v: &SymbolicValue, digits: usize) -> String {
    let digits = digits.min(MAX_DIGITS);
    let (x, _) = approx(v);
    let scaled = x * BigRational::from_integer(pow10(digits));
    let mag = scaled.abs().floor().to_integer();
    render(mag, scaled.is_negative(), digits)
}

/// Whether a printed decimal is the truncation or the rounding of `v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PrintedMatch {
    Both,
    Truncated,
    Rounded,
    Neither,
}

impl PrintedMatch {
    pub fn matches(self) -> bool {
        self != PrintedMatch::Neither
    }
}

pub fn match_printed(v: &SymbolicValue, printed: &str) -> PrintedMatch {
    let digits = printed.split_once('.').map_or(0, |(_, f)| f.len());
    let t = numeric_truncated(v, digits) == printed;
    let r = numeric_eval(v, digits) == printed;
    match (t, r) {
        (true, true) => PrintedMatch::Both,
        (true, false) => PrintedMatch::Truncated,
        (false, true) => PrintedMatch::Rounded,
        _ => PrintedMatch::Neither,
    }
}

/// `|q - printed| < 10^-digits`, i.e. `printed` is off by less than one unit in its last place.
pub fn within_last_place(q: &BigRational, printed: &str) -> bool {
    let Some((int, frac)) = printed.trim_start_matches('-').split_once('.') else {
        return false;
    };
    let Ok(mag) = format!("{int}{frac}").parse::<BigInt>() else {
        return false;
    };
    let scale = BigRational::from_integer(pow10(frac.len()));
    let mut p = BigRational::new(mag, BigInt::one()) / &scale;
    if printed.starts_with('-') {
        p = -p;
    }
    (q - p).abs() * scale < BigRational::one()
}

/// Compares the stored constants against independent series to `digits` places.
pub fn constants_cross_check(digits: usize) -> bool {
    let prec = digits + 10;
    let one = pow10(prec);
    // ln 2 = sum 1/(k 2^k)
    let mut ln2 = BigInt::zero();
    let mut p: BigInt = one.clone() / 2u32;
    let mut k = 1u32;
    while !p.is_zero() {
        ln2 += &p / k;
        p /= 2u32;
        k += 1;
    }
    // ln 3 = 2 atanh(1/2)
    let mut ln3 = BigInt::zero();
    let mut p: BigInt = one.clone() / 2u32;
    let mut j = 0u32;
    while !p.is_zero() {
        ln3 += &p / (2 * j + 1);
        p /= 4u32;
        j += 1;
    }
    ln3 *= 2;
    // pi/sqrt(3) = 2 sum (-1)^n / (3^n (2n+1))
    let mut ps = BigInt::zero();
    let mut p = one.clone();
    let mut n = 0u32;
    while !p.is_zero() {
        let t = &p / (2 * n + 1);
        if n % 2 == 0 {
            ps += t;
        } else {
            ps -= t;
        }
        p /= 3u32;
        n += 1;
    }
    ps *= 2;
    let agree = |series: &BigInt, stored: &str| {
        let (int, frac) = stored.split_once('.').unwrap();
        let want: BigInt = format!("{int}{}", &frac[..digits]).parse().unwrap();
        let got = series / pow10(prec - digits);
        (got - want).abs() <= BigInt::one()
    };
    agree(&ln2, LN2) && agree(&ln3, LN3) && agree(&ps, PI_SQRT3)
}

/// `sum_{k >= 1, k = a mod d} 4 / (k (k+1) (k+2))` for `d` in `{2, 3}`.
pub fn class_constant(d: u64, a: u64) -> Option<SymbolicValue> {
    let z = BigRational::zero;
    let v = match (d, a % d) {
        (3, 0) => SymbolicValue::new(big(3), big(-1), big(-1), z()),
        (3, 1) => SymbolicValue::new(z(), big(1), big(-1), z()),
        (3, 2) => SymbolicValue::new(big(-2), z(), big(2), z()),
        (2, 1) => SymbolicValue::new(big(-2), z(), z(), big(4)),
        (2, 0) => SymbolicValue::new(big(3), z(), z(), big(-4)),
        _ => return None,
    };
    Some(v)
}

fn cubic_term(k: u64) -> BigRational {
    let k = BigInt::from(k);
    BigRational::new(BigInt::from(4), &k * (&k + 1u32) * (&k + 2u32))
}

/// `sum_{k >= k_min, k = a mod d} |T(k)|`.
pub fn tail_sum(d: u64, a: u64, k_min: u64) -> Option<SymbolicValue> {
    let mut v = class_constant(d, a)?;
    let a = a % d;
    let mut k = if a == 0 { d } else { a };
    let mut head = BigRational::zero();
    while k < k_min {
        head += cubic_term(k);
        k += d;
    }
    v.rational -= head;
    if k_min <= 1 && a == 1 % d {
        v.rational += single_area(1) - cubic_term(1);
    }
    Some(v)
}

/// Prefactor `(2/D)(Delta/phi(Delta))` turning summed areas into proportions.
pub fn normalization(d: u64, c0: u64) -> BigRational {
    let delta = c0.gcd(&d);
    BigRational::new(BigInt::from(2 * delta), BigInt::from(d * euler_phi(delta)))
}

/// Limit of the mean cyclic gap length `sum (r+1) nu(r)`.
pub fn mean_gap(d: u64, c0: u64) -> BigRational {
    let delta = c0.gcd(&d);
    let mut v = BigRational::new(BigInt::from(d * delta), BigInt::from(euler_phi(delta)));
    for p in prime_factors(d) {
        v *= BigRational::new(BigInt::from(p * p - 1), BigInt::from(p * p));
    }
    v
}

pub fn euler_phi(n: u64) -> u64 {
    prime_factors(n).iter().fold(n, |acc, p| acc / p * (p - 1))
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Residues `c1` that may follow a coloured denominator `c0`.
pub fn admissible_c1(d: u64, c0: u64) -> Vec<u64> {
    (0..d)
        .filter(|&c1| c1 != c0 && d.gcd(&c0).gcd(&c1) == 1)
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    Enum,
    Closed,
    Bounded,
}

/// Exact value, or an enclosing interval in bounded mode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NuValue {
    Exact(SymbolicValue),
    Interval {
        lower: BigRational,
        upper: BigRational,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NuResult {
    pub r: usize,
    pub d: u64,
    pub c0: u64,
    pub value: NuValue,
    pub route: Route,
}

impl NuResult {
    pub fn exact(&self) -> Option<&SymbolicValue> {
        match &self.value {
            NuValue::Exact(v) => Some(v),
            NuValue::Interval { .. } => None,
        }
    }
}

/// Total area of a decomposition with closed family tails.
pub fn decomposition_area(dec: &Decomposition) -> SymbolicValue {
    let mut v = SymbolicValue::from_rational(dec.finite_area());
    for f in &dec.families {
        v += tail_sum(f.modulus, f.residue, f.k_min).expect("family modulus 2 or 3");
        for (k, a) in &f.exceptions {
            v.rational += a - single_area(*k);
        }
    }
    v
}

fn exact_spec(d: u64, c0: u64) -> Result<(CongruenceSpec, BigRational), EnumError> {
    let c1s = admissible_c1(d, c0);
    let c = CongruenceSpec::new(d, c0, *c1s.first().ok_or(EnumError::Modulus(d))?)?;
    if !c.exact_supported() {
        return Err(EnumError::Unsupported { d, c0 });
    }
    // scaling by a unit maps the tuple set for one c1 onto that of any other
    let factor = normalization(d, c0) * big(c1s.len() as i64);
    Ok((c, factor))
}

/// `nu(r; D, c0)` from the enumerated degenerate tuples.
pub fn nu_from_enumeration(r: usize, d: u64, c0: u64) -> Result<NuResult, EnumError> {
    let (c, factor) = exact_spec(d, c0)?;
    let dec = enumerate_a_circ(r, &c)?;
    Ok(NuResult {
        r,
        d,
        c0,
        value: NuValue::Exact(decomposition_area(&dec) * &factor),
        route: Route::Enum,
    })
}

/// `nu(r; D, c0)` for `r = 1..=max_r` from one shared search.
pub fn nu_levels(max_r: usize, d: u64, c0: u64) -> Result<Vec<SymbolicValue>, EnumError> {
    let (c, factor) = exact_spec(d, c0)?;
    Ok(enumerate_levels(max_r, &c)?
        .iter()
        .map(|dec| decomposition_area(dec) * &factor)
        .collect())
}

/// Interval for `nu(r; D, c0)` from tuples with entries at most `cutoff`.
///
/// The measure-preserving map makes `{k_j > K}` have area `sum_{k>K} |T(k)|` at each of the
/// `r` positions, which bounds the omitted mass.
pub fn nu_bounded(r: usize, d: u64, c0: u64, cutoff: u64) -> Result<NuResult, EnumError> {
    let c1s = admissible_c1(d, c0);
    let factor = normalization(d, c0);
    let mut lower = BigRational::zero();
    for &c1 in &c1s {
        let c = CongruenceSpec::new(d, c0, c1)?;
        lower += enumerate_bounded(r, &c, cutoff)?.finite_area();
    }
    lower *= &factor;
    let slack = &factor * big((c1s.len() * r) as i64) * single_tail(cutoff);
    let upper = &lower + slack;
    Ok(NuResult {
        r,
        d,
        c0,
        value: NuValue::Interval { lower, upper },
        route: Route::Bounded,
    })
}

/// `coef * prod(a m + b) / prod(a m + b)`.
#[derive(Debug, Clone, Copy)]
pub struct RationalTerm {
    pub coef: (i64, i64),
    pub num: &'static [(i64, i64)],
    pub den: &'static [(i64, i64)],
}

impl RationalTerm {
    pub fn at(&self, m: u64) -> BigRational {
        let m = m as i64;
        let mut v = rat(self.coef.0, self.coef.1);
        for (a, b) in self.num {
            v *= big(a * m + b);
        }
        for (a, b) in self.den {
            v /= big(a * m + b);
        }
        v
    }

    /// `K` with `term(m) <= K / m^(den - num)` for all `m >= m0`.
    pub fn power_bound(&self, m0: u64) -> BigRational {
        let m0 = big(m0 as i64);
        let mut v = rat(self.coef.0, self.coef.1);
        for &(a, b) in self.num {
            v *= if b > 0 { big(a) + big(b) / &m0 } else { big(a) };
        }
        for &(a, b) in self.den {
            v /= if b < 0 { big(a) + big(b) / &m0 } else { big(a) };
        }
        v
    }

    pub fn decay(&self) -> usize {
        self.den.len() - self.num.len()
    }
}

const fn term(
    coef: (i64, i64),
    num: &'static [(i64, i64)],
    den: &'static [(i64, i64)],
) -> RationalTerm {
    RationalTerm { coef, num, den }
}

/// `P_ij(m)` for `r = 5m + i >= 8`; row `i` lists the terms summed.
pub const P_TERMS: [&[RationalTerm]; 5] = [
    &[
        term((6, 1), &[(8, -1)], &[(3, -1), (6, -1), (12, -1), (12, 1)]),
        term((2, 1), &[], &[(6, -1), (6, 1), (12, -1)]),
    ],
    &[
        term((6, 1), &[(8, 1)], &[(3, 1), (6, 1), (12, -1), (12, 1)]),
        term((2, 1), &[], &[(6, -1), (6, 1), (12, 1)]),
    ],
    &[
        term((6, 1), &[(4, 1)], &[(3, 1), (6, 1), (12, 1), (12, 5)]),
        term((2, 3), &[(9, 4)], &[(2, 1), (3, 1), (6, 1), (12, 7)]),
    ],
    &[
        term((6, 1), &[(2, 1)], &[(3, 1), (3, 2), (12, 5), (12, 7)]),
        term((2, 3), &[], &[(2, 1), (6, 1), (12, 5)]),
        term((2, 3), &[], &[(2, 1), (6, 5), (12, 7)]),
    ],
    &[
        term((6, 1), &[(4, 3)], &[(3, 2), (6, 5), (12, 7), (12, 11)]),
        term((2, 3), &[(9, 5)], &[(2, 1), (3, 2), (6, 5), (12, 5)]),
    ],
];

fn symbolic_row(row: &crate::reference::SymbolicRow) -> SymbolicValue {
    let q = |(n, d): (i64, i64)| rat(n, d);
    SymbolicValue::new(q(row.rational), q(row.pi_sqrt3), q(row.ln3), q(row.ln2))
}

/// `nu(r; 3, 0)` from the stated formulas.
pub fn nu3_closed(r: usize) -> SymbolicValue {
    assert!(r >= 1);
    if r <= 7 {
        return symbolic_row(&TERNARY_SMALL[r - 1]);
    }
    let (m, i) = ((r / 5) as u64, r % 5);
    SymbolicValue::from_rational(P_TERMS[i].iter().map(|t| t.at(m)).sum())
}

/// `nu(r; 2, 0)` from the stated formulas.
pub fn nu2_closed(r: usize) -> SymbolicValue {
    assert!(r >= 1);
    if r <= 4 {
        return symbolic_row(&BINARY_SMALL[r - 1]);
    }
    let r = r as i64;
    SymbolicValue::from_rational(rat(8, (2 * r - 3) * (2 * r - 1) * (2 * r + 1)))
}

pub fn nu_closed_form(r: usize, d: u64, c0: u64) -> Result<NuResult, EnumError> {
    if r == 0 {
        return Err(EnumError::ZeroLength);
    }
    let v = match (d, c0) {
        (3, 0) => nu3_closed(r),
        (2, 0) => nu2_closed(r),
        _ => return Err(EnumError::Unsupported { d, c0 }),
    };
    Ok(NuResult {
        r,
        d,
        c0,
        value: NuValue::Exact(v),
        route: Route::Closed,
    })
}

/// Upper bound for `sum_{r > max_r} r^p nu(r; 3, 0)` with `p` in `{0, 1}`, `max_r >= 10`.
pub fn nu3_tail_bound(max_r: usize, weighted: bool) -> BigRational {
    assert!(max_r >= 10);
    // every r > max_r has m >= m0
    let m0 = (max_r / 5) as u64;
    let mut total = BigRational::zero();
    for terms in P_TERMS {
        for t in terms {
            let mut k = t.power_bound(m0);
            let mut decay = t.decay();
            if weighted {
                // r + 1 <= (5 + 5/m0) m
                k *= big(5) + rat(5, m0 as i64);
                decay -= 1;
            }
            // sum_{m >= m0} m^-s <= m0^-s + m0^(1-s)/(s-1)
            let s = decay as u32;
            let m0b = BigInt::from(m0);
            let head = BigRational::new(BigInt::one(), m0b.pow(s));
            let rest = BigRational::new(BigInt::one(), m0b.pow(s - 1) * BigInt::from(s - 1));
            total += k * (head + rest);
        }
    }
    total
}

/// Sorted `(r, value)` pairs, convenient for tables.
pub fn nu3_table(range: std::ops::RangeInclusive<usize>) -> Vec<(usize, SymbolicValue)> {
    range.map(|r| (r, nu3_closed(r))).collect()
}

pub fn to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reference::{BINARY_LIST, NON_MONOTONE, PROPORTION_TABLE};

    #[test]
    fn series_agree_with_constants() {
        assert!(constants_cross_check(45));
    }

    #[test]
    fn class_constants_match_partial_sums() {
        for (d, a) in [(3, 0), (3, 1), (3, 2), (2, 0), (2, 1)] {
            let c = class_constant(d, a).unwrap();
            let mut s = 0.0f64;
            let mut k = if a == 0 { d } else { a };
            while k < 1_000_000 {
                let x = k as f64;
                s += 4.0 / (x * (x + 1.0) * (x + 2.0));
                k += d;
            }
            // the remainder is below 2/(d k^2)
            let diff = s - c.to_f64();
            assert!(diff.abs() < 1e-11, "C({d},{a})");
        }
        assert_eq!(
            tail_sum(3, 1, 1).unwrap(),
            class_constant(3, 1).unwrap() - SymbolicValue::from_rational(rat(1, 2))
        );
        assert_eq!(tail_sum(3, 0, 3).unwrap(), class_constant(3, 0).unwrap());
    }

    #[test]
    fn rendering() {
        let v = SymbolicValue::from_rational(rat(1, 8));
        assert_eq!(numeric_eval(&v, 2), "0.13");
        assert_eq!(numeric_truncated(&v, 2), "0.12");
        assert_eq!(numeric_eval(&-v.clone(), 2), "-0.13");
        assert_eq!(
            numeric_eval(&SymbolicValue::from_rational(rat(-1, 1000)), 2),
            "0.00"
        );
        assert_eq!(numeric_eval(&SymbolicValue::from_rational(big(7)), 0), "7");
        let nu1 = nu3_closed(1);
        assert_eq!(nu1.to_string(), "6 - 2*pi/sqrt(3) - 2*ln(3)");
        assert_eq!(numeric_truncated(&nu1, 10), "0.1751766941");
        assert_eq!(numeric_eval(&nu1, 10), "0.1751766942");
        assert_eq!(match_printed(&nu1, "0.1751766941"), PrintedMatch::Truncated);
        let s = serde_json::to_string(&nu1).unwrap();
        assert_eq!(
            s,
            r#"{"rational":"6/1","pi_sqrt3":"-2/1","ln3":"-2/1","ln2":"0/1"}"#
        );
    }

    #[test]
    fn last_place_tolerance() {
        let x = BigRational::new(
            BigInt::from(1393968094904i64),
            BigInt::from(100000000000000i64),
        );
        assert!(within_last_place(&x, "0.0139396810"));
        assert!(within_last_place(&x, "0.0139396809"));
        assert!(!within_last_place(&x, "0.0139396811"));
        assert!(within_last_place(&-x.clone(), "-0.0139396810"));
        assert!(!within_last_place(&x, "x"));
    }

    #[test]
    fn normalization_factors() {
        assert_eq!(normalization(3, 0) * big(2), big(2));
        assert_eq!(normalization(2, 0), big(2));
        assert_eq!(mean_gap(3, 0), big(4));
        assert_eq!(mean_gap(2, 0), big(3));
        assert_eq!(admissible_c1(3, 0), vec![1, 2]);
        assert_eq!(admissible_c1(4, 2), vec![1, 3]);
    }

    #[test]
    fn routes_agree_ternary() {
        let levels = nu_levels(60, 3, 0).unwrap();
        for (i, v) in levels.iter().enumerate() {
            assert_eq!(v, &nu3_closed(i + 1), "r={}", i + 1);
        }
        for row in PROPORTION_TABLE.iter().take_while(|row| row.0 <= 60) {
            let q = levels[row.0 - 1].as_rational().unwrap();
            assert_eq!(q, &BigRational::new(row.1.into(), row.2.into()));
        }
    }

    #[test]
    fn routes_agree_binary() {
        let levels = nu_levels(40, 2, 0).unwrap();
        for (i, v) in levels.iter().enumerate() {
            assert_eq!(v, &nu2_closed(i + 1), "r={}", i + 1);
        }
        for (r, q, dec) in BINARY_LIST {
            assert_eq!(
                levels[r - 1],
                SymbolicValue::from_rational(rat(8, q as i64))
            );
            assert!(match_printed(&levels[r - 1], dec).matches());
        }
    }

    #[test]
    fn single_level_matches_batch() {
        for r in [1, 2, 3, 6, 9] {
            let v = nu_from_enumeration(r, 3, 0).unwrap();
            assert_eq!(v.exact().unwrap(), &nu3_closed(r));
        }
    }

    #[test]
    fn printed_table_digits() {
        for (r, _, _, dec) in PROPORTION_TABLE {
            assert!(match_printed(&nu3_closed(r), dec).matches(), "r={r}");
        }
    }

    #[test]
    fn non_monotone_pairs_and_class_monotonicity() {
        for (a, b) in NON_MONOTONE {
            assert!(nu3_closed(a).rational > nu3_closed(b).rational);
        }
        for r in 8..=195 {
            assert!(nu3_closed(r + 5).rational < nu3_closed(r).rational, "r={r}");
        }
    }

    #[test]
    fn normalization_with_tails() {
        let max_r = 200;
        let mut s = SymbolicValue::zero();
        let mut w = SymbolicValue::zero();
        for r in 1..=max_r {
            let v = nu3_closed(r);
            w += v.clone() * &big(r as i64 + 1);
            s += v;
        }
        let tail = to_f64(&nu3_tail_bound(max_r, false));
        let wtail = to_f64(&nu3_tail_bound(max_r, true));
        let gap = 1.0 - s.to_f64();
        let wgap = 4.0 - w.to_f64();
        assert!(gap > 0.0 && gap <= tail, "{gap} {tail}");
        assert!(wgap > 0.0 && wgap <= wtail, "{wgap} {wtail}");
    }

    #[test]
    fn tail_bound_dominates_partial_tail() {
        let exact: BigRational = (201..=5000).map(|r| nu3_closed(r).rational).sum();
        assert!(exact < nu3_tail_bound(200, false));
    }

    #[test]
    fn bounded_mode_encloses_exact() {
        for r in 1..=4 {
            let exact = nu3_closed(r).to_f64();
            let res = nu_bounded(r, 3, 0, 60).unwrap();
            let NuValue::Interval { lower, upper } = res.value else {
                panic!()
            };
            assert!(to_f64(&lower) <= exact && exact <= to_f64(&upper), "r={r}");
        }
        let res = nu_bounded(2, 5, 1, 30).unwrap();
        let NuValue::Interval { lower, upper } = res.value else {
            panic!()
        };
        assert!(lower <= upper && lower.is_positive());
    }

    #[test]
    fn positivity() {
        for r in 1..=300 {
            assert!(nu3_closed(r).to_f64() > 0.0);
            assert!(nu2_closed(r).to_f64() > 0.0);
        }
    }
}
