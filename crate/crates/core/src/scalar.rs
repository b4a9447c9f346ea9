//! Exact arithmetic in cyclotomic fields `Q(ζ_n)`.
//!
//! Elements are stored in the reduced power basis `1, ζ, …, ζ^{φ(n)-1}`
//! modulo the `n`-th cyclotomic polynomial, so two elements of the same
//! field are equal exactly when their coefficient vectors are equal.
//! Values over different conductors are lifted to the lcm before they are
//! combined or compared.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::ScalarError;

/// Exact rational number (always in lowest terms with positive denominator).
pub type Rational = BigRational;

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Shared data of one cyclotomic field.
#[derive(Debug)]
struct FieldData {
    n: u32,
    phi: usize,
    /// `powers[k]` is `ζ^k` reduced modulo `Φ_n`, for `0 <= k < n`.
    powers: Vec<Vec<i64>>,
}

/// Handle to the field `Q(ζ_n)`; cheap to clone.
#[derive(Clone, Debug)]
pub struct CyclotomicField(Arc<FieldData>);

impl PartialEq for CyclotomicField {
    fn eq(&self, other: &Self) -> bool {
        self.0.n == other.0.n
    }
}
impl Eq for CyclotomicField {}

impl CyclotomicField {
    pub fn new(n: u32) -> Self {
        assert!(n >= 1, "conductor must be positive");
        let modulus = cyclotomic_polynomial(n);
        let phi = modulus.len() - 1;
        let mut powers = Vec::with_capacity(n as usize);
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        for _ in 0..n {
            powers.push(cur.clone());
            // multiply by ζ and reduce the overflowing top coefficient
            let top = cur[phi - 1];
            let mut next = vec![0i64; phi];
            next[1..phi].copy_from_slice(&cur[..(phi - 1)]);
            for (j, m) in modulus.iter().take(phi).enumerate() {
                next[j] -= top * m;
            }
            cur = next;
        }
        CyclotomicField(Arc::new(FieldData { n, phi, powers }))
    }

    pub fn conductor(&self) -> u32 {
        self.0.n
    }

    pub fn degree(&self) -> usize {
        self.0.phi
    }

    pub fn zero(&self) -> Cyclotomic {
        Cyclotomic {
            field: self.clone(),
            coeffs: vec![Rational::zero(); self.0.phi],
        }
    }

    pub fn one(&self) -> Cyclotomic {
        self.from_rational(Rational::one())
    }

    pub fn from_rational(&self, q: Rational) -> Cyclotomic {
        let mut z = self.zero();
        z.coeffs[0] = q;
        z
    }

    pub fn from_int(&self, k: i64) -> Cyclotomic {
        self.from_rational(Rational::from_integer(BigInt::from(k)))
    }

    /// `ζ_n^k` for any integer `k`.
    pub fn root(&self, k: i64) -> Cyclotomic {
        let n = self.0.n as i64;
        let e = k.rem_euclid(n) as usize;
        self.from_power_row(&self.0.powers[e], &Rational::one())
    }

    fn from_power_row(&self, row: &[i64], scale: &Rational) -> Cyclotomic {
        let coeffs = row
            .iter()
            .map(|&c| scale * Rational::from_integer(BigInt::from(c)))
            .collect();
        Cyclotomic {
            field: self.clone(),
            coeffs,
        }
    }

    /// Sum `Σ c_k ζ^k` over exponents taken modulo `n`.
    fn from_exponent_coeffs(&self, terms: impl Iterator<Item = (usize, Rational)>) -> Cyclotomic {
        let phi = self.0.phi;
        let mut acc = vec![Rational::zero(); phi];
        for (e, c) in terms {
            if c.is_zero() {
                continue;
            }
            let e = e % self.0.n as usize;
            if e < phi {
                acc[e] += c;
            } else {
                for (slot, &p) in acc.iter_mut().zip(self.0.powers[e].iter()) {
                    if p != 0 {
                        *slot += &c * Rational::from_integer(BigInt::from(p));
                    }
                }
            }
        }
        Cyclotomic {
            field: self.clone(),
            coeffs: acc,
        }
    }

    /// Lifts `x` into this field; the conductor of `x` must divide ours.
    pub fn lift(&self, x: &Cyclotomic) -> Cyclotomic {
        let from = x.field.0.n;
        if from == self.0.n {
            return x.clone();
        }
        assert!(
            self.0.n % from == 0,
            "cannot lift conductor {} into {}",
            from,
            self.0.n
        );
        let step = (self.0.n / from) as usize;
        self.from_exponent_coeffs(
            x.coeffs
                .iter()
                .enumerate()
                .map(|(j, c)| (j * step, c.clone())),
        )
    }
}

/// An exact element of `Q(ζ_n)`.
#[derive(Clone)]
pub struct Cyclotomic {
    field: CyclotomicField,
    coeffs: Vec<Rational>,
}

/// `ζ_n^k` in reduced form.
pub fn root_of_unity(n: u32, k: i64) -> Cyclotomic {
    CyclotomicField::new(n).root(k)
}

/// `n`-th cyclotomic polynomial, coefficients from low to high degree.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    // x^n - 1 divided by Φ_d for every proper divisor d
    let mut num: Vec<i128> = vec![0; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let div: Vec<i128> = cyclotomic_polynomial(d).into_iter().map(i128::from).collect();
            num = exact_monic_division(&num, &div);
        }
    }
    num.into_iter()
        .map(|c| i64::try_from(c).expect("cyclotomic coefficient overflow"))
        .collect()
}

fn exact_monic_division(num: &[i128], den: &[i128]) -> Vec<i128> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut quot = vec![0i128; qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        for (j, &d) in den.iter().enumerate() {
            rem[k + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

impl Cyclotomic {
    pub fn rational(q: Rational) -> Self {
        Cyclotomic {
            field: CyclotomicField::new(1),
            coeffs: vec![q],
        }
    }

    pub fn from_int(k: i64) -> Self {
        Self::rational(Rational::from_integer(BigInt::from(k)))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn conductor(&self) -> u32 {
        self.field.0.n
    }

    pub fn field(&self) -> &CyclotomicField {
        &self.field
    }

    /// Coordinates in the reduced power basis of the element's own field.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// `Some(q)` when the element lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Lifts into `Q(ζ_m)`; `m` must be a multiple of the conductor.
    pub fn lift_to(&self, m: u32) -> Cyclotomic {
        if m == self.conductor() {
            return self.clone();
        }
        CyclotomicField::new(m).lift(self)
    }

    fn align(&self, other: &Cyclotomic) -> (Cyclotomic, Cyclotomic) {
        let m = lcm(self.conductor(), other.conductor());
        let f = CyclotomicField::new(m);
        (f.lift(self), f.lift(other))
    }

    /// Complex conjugation `ζ ↦ ζ^{-1}`.
    pub fn conjugate(&self) -> Cyclotomic {
        let n = self.field.0.n as usize;
        if self.field.0.phi == 1 {
            return self.clone();
        }
        self.field.from_exponent_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(j, c)| ((n - j) % n, c.clone())),
        )
    }

    pub fn scale(&self, q: &Rational) -> Cyclotomic {
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    fn mul_same_field(&self, other: &Cyclotomic) -> Cyclotomic {
        let phi = self.field.0.phi;
        let mut prod = vec![Rational::zero(); 2 * phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        self.field
            .from_exponent_coeffs(prod.into_iter().enumerate())
    }

    fn add_same_field(&self, other: &Cyclotomic) -> Cyclotomic {
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(other.coeffs.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Cyclotomic, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            let mut r = self.field.zero();
            r.coeffs[0] = q.recip();
            return Ok(r);
        }
        // Solve (multiplication-by-self) · y = e_0 over Q.
        let phi = self.field.0.phi;
        let mut mat: Vec<Vec<Rational>> = vec![vec![Rational::zero(); phi + 1]; phi];
        for j in 0..phi {
            let col = self.mul_same_field(&self.field.root(j as i64));
            for (i, c) in col.coeffs.into_iter().enumerate() {
                mat[i][j] = c;
            }
        }
        mat[0][phi] = Rational::one();
        let sol = solve_rational_system(mat).ok_or(ScalarError::DivisionByZero)?;
        Ok(Cyclotomic {
            field: self.field.clone(),
            coeffs: sol,
        })
    }

    pub fn checked_div(&self, other: &Cyclotomic) -> Result<Cyclotomic, ScalarError> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, mut e: u32) -> Cyclotomic {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Parses the textual form, e.g. `"1/2*z8^3 - z8"` or `"-3/4"`.
    pub fn parse(s: &str) -> Result<Cyclotomic, ScalarError> {
        parse_cyclotomic(s)
    }
}

/// Gaussian elimination on an augmented `phi × (phi+1)` system.
fn solve_rational_system(mut m: Vec<Vec<Rational>>) -> Option<Vec<Rational>> {
    let n = m.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(pivot_row.iter()) {
                    *x -= &f * p;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

/// Exact square root of a positive integer inside a cyclotomic field,
/// built from quadratic Gauss sums.
pub fn sqrt_positive_integer(m: u64) -> Option<Cyclotomic> {
    if m == 0 {
        return None;
    }
    // m = s^2 * q with q squarefree
    let mut s: u64 = 1;
    let mut q: u64 = 1;
    let mut rest = m;
    let mut p = 2;
    while p * p <= rest {
        let mut e = 0;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        s *= p.pow(e / 2);
        if e % 2 == 1 {
            q *= p;
        }
        p += 1;
    }
    if rest > 1 {
        q *= rest;
    }
    let mut acc = Cyclotomic::from_int(i64::try_from(s).ok()?);
    let mut qq = q;
    let mut p = 2;
    while qq > 1 {
        if qq % p == 0 {
            qq /= p;
            acc = &acc * &sqrt_prime(u32::try_from(p).ok()?);
        }
        p += 1;
    }
    debug_assert_eq!(
        &acc * &acc,
        Cyclotomic::from_int(i64::try_from(m).ok()?)
    );
    Some(acc)
}

fn sqrt_prime(p: u32) -> Cyclotomic {
    if p == 2 {
        // ζ_8 + ζ_8^{-1}
        let f = CyclotomicField::new(8);
        return &f.root(1) + &f.root(7);
    }
    let f = CyclotomicField::new(p);
    let mut g = f.zero();
    for a in 1..p {
        let term = f.root(a as i64);
        if legendre(a, p) == 1 {
            g = &g + &term;
        } else {
            g = &g - &term;
        }
    }
    if p % 4 == 1 {
        g
    } else {
        // g = i·√p
        let i = root_of_unity(4, 1);
        -(&i * &g)
    }
}

fn legendre(a: u32, p: u32) -> i32 {
    let mut r: u64 = 1;
    let mut base = u64::from(a % p);
    let mut e = (p - 1) / 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * base % u64::from(p);
        }
        base = base * base % u64::from(p);
        e >>= 1;
    }
    if r == 1 {
        1
    } else {
        -1
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor() == other.conductor() {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.align(other);
        a.coeffs == b.coeffs
    }
}
impl Eq for Cyclotomic {}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        match self.conductor().cmp(&rhs.conductor()) {
            Ordering::Equal => self.add_same_field(rhs),
            _ if rhs.conductor() == 1 => {
                let mut r = self.clone();
                r.coeffs[0] += &rhs.coeffs[0];
                r
            }
            _ if self.conductor() == 1 => rhs + self,
            _ => {
                let (a, b) = self.align(rhs);
                a.add_same_field(&b)
            }
        }
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        if self.conductor() == rhs.conductor() {
            if self.field.0.phi == 1 {
                return self.scale(&rhs.coeffs[0]);
            }
            return self.mul_same_field(rhs);
        }
        if rhs.conductor() == 1 {
            return self.scale(&rhs.coeffs[0]);
        }
        if self.conductor() == 1 {
            return rhs.scale(&self.coeffs[0]);
        }
        let (a, b) = self.align(rhs);
        a.mul_same_field(&b)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &'a Cyclotomic) -> Cyclotomic {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        if self.conductor() == rhs.conductor() {
            for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
                *a += b;
            }
        } else {
            *self = &*self + rhs;
        }
    }
}

impl PartialOrd for Cyclotomic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Arbitrary but fixed total order (by conductor, then coefficients), used
/// only for deterministic container keys.
impl Ord for Cyclotomic {
    fn cmp(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        let m = lcm(self.conductor(), other.conductor());
        let (a, b) = (self.lift_to(m), other.lift_to(m));
        a.coeffs().cmp(b.coeffs())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.conductor();
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            if j == 0 {
                write!(f, "{}", mag)?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{}*", mag)?;
            }
            if j == 1 {
                write!(f, "z{}", n)?;
            } else {
                write!(f, "z{}^{}", n, j)?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

fn parse_cyclotomic(s: &str) -> Result<Cyclotomic, ScalarError> {
    let bad = || ScalarError::Parse(String::from(s));
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(bad());
    }
    // split into signed terms
    let mut terms: Vec<(bool, &str)> = Vec::new();
    let bytes = compact.as_bytes();
    let mut start = 0;
    let mut neg = false;
    if bytes[0] == b'-' || bytes[0] == b'+' {
        neg = bytes[0] == b'-';
        start = 1;
    }
    let mut i = start;
    while i < bytes.len() {
        let b = bytes[i];
        // a sign right after '^' belongs to the exponent
        if (b == b'+' || b == b'-') && i > start && bytes[i - 1] != b'^' {
            terms.push((neg, &compact[start..i]));
            neg = b == b'-';
            start = i + 1;
        }
        i += 1;
    }
    terms.push((neg, &compact[start..]));

    let mut acc = Cyclotomic::zero();
    for (neg, t) in terms {
        if t.is_empty() {
            return Err(bad());
        }
        let (coef_part, root_part) = match t.find('z') {
            Some(pos) => {
                let c = &t[..pos];
                let c = c.strip_suffix('*').unwrap_or(c);
                (c, Some(&t[pos + 1..]))
            }
            None => (t, None),
        };
        let coef = if coef_part.is_empty() {
            Rational::one()
        } else {
            parse_rational(coef_part).ok_or_else(bad)?
        };
        let mut term = Cyclotomic::rational(coef);
        if let Some(r) = root_part {
            let (n_str, e_str) = match r.find('^') {
                Some(p) => (&r[..p], &r[p + 1..]),
                None => (r, "1"),
            };
            let n: u32 = n_str.parse().map_err(|_| bad())?;
            let e: i64 = e_str.parse().map_err(|_| bad())?;
            if n == 0 {
                return Err(bad());
            }
            term = &term * &root_of_unity(n, e);
        }
        if neg {
            term = -term;
        }
        acc = &acc + &term;
    }
    Ok(acc)
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rational::new(p, q))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}
