//! Exact arithmetic in the cyclotomic field Q(ζ), ζ a primitive e-th root of unity.
//!
//! Elements are residues modulo the cyclotomic polynomial Φ_e, so every nonzero
//! element is invertible. Coefficients are arbitrary-precision rationals.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Coefficient storage; inline for fields of degree at most two.
pub type Coeffs = SmallVec<[Rational; 2]>;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out: Vec<Rational> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
            let y = b.get(i).cloned().unwrap_or_else(Rational::zero);
            x - y
        })
        .collect();
    trim(&mut out);
    out
}

/// Quotient and remainder of polynomial division; `b` must be nonzero.
fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r: Vec<Rational> = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead = &b[db];
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![Rational::zero(); r.len() - db];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() / lead;
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] -= &c * bc;
        }
        q[shift] = c;
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

pub fn euler_phi(e: u32) -> usize {
    let mut n = e;
    let mut result = e;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

/// The e-th cyclotomic polynomial Φ_e, coefficients listed from the constant term up.
pub fn cyclotomic_poly(e: u32) -> Vec<Rational> {
    assert!(e >= 1, "cyclotomic order must be positive");
    let mut num = vec![Rational::zero(); e as usize + 1];
    num[0] = -Rational::one();
    num[e as usize] = Rational::one();
    for d in 1..e {
        if e.is_multiple_of(d) {
            let (q, r) = poly_divrem(&num, &cyclotomic_poly(d));
            debug_assert!(r.is_empty());
            num = q;
        }
    }
    num
}

#[derive(Debug)]
struct FieldInner {
    order: u32,
    modulus: Vec<Rational>,
    /// x^(degree + k) mod Φ_e for k in 0..degree-1.
    reductions: Vec<Coeffs>,
    zeta_powers: Vec<CycScalar>,
}

/// Context for Q(ζ_e). Cheap to clone.
#[derive(Clone, Debug)]
pub struct CycField(Arc<FieldInner>);

impl PartialEq for CycField {
    fn eq(&self, other: &Self) -> bool {
        self.0.order == other.0.order
    }
}

impl Eq for CycField {}

impl CycField {
    pub fn new(order: u32) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        let modulus = cyclotomic_poly(order);
        let degree = modulus.len() - 1;
        let mut reductions = Vec::new();
        // x^degree = -(lower terms of Φ)
        let mut cur: Vec<Rational> = modulus[..degree].iter().map(|c| -c).collect();
        for _ in 0..degree.saturating_sub(1) {
            reductions.push(cur.iter().cloned().collect::<Coeffs>());
            // multiply by x and fold the top coefficient
            let top = cur[degree - 1].clone();
            let mut next = vec![Rational::zero(); degree];
            for i in (1..degree).rev() {
                next[i] = cur[i - 1].clone();
            }
            for i in 0..degree {
                next[i] -= &top * &modulus[i];
            }
            cur = next;
        }
        let mut inner = FieldInner { order, modulus, reductions, zeta_powers: Vec::new() };
        let one = CycScalar::from_rational(order, degree, Rational::one());
        let mut zp = Vec::with_capacity(order as usize);
        let tmp = CycField(Arc::new(FieldInner {
            order,
            modulus: inner.modulus.clone(),
            reductions: inner.reductions.clone(),
            zeta_powers: Vec::new(),
        }));
        let zeta = tmp.reduce_poly(&[Rational::zero(), Rational::one()]);
        let mut acc = one;
        for _ in 0..order {
            zp.push(acc.clone());
            acc = tmp.mul(&acc, &zeta);
        }
        inner.zeta_powers = zp;
        CycField(Arc::new(inner))
    }

    pub fn order(&self) -> u32 {
        self.0.order
    }

    /// Degree of the field over Q, i.e. φ(e).
    pub fn degree(&self) -> usize {
        self.0.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[Rational] {
        &self.0.modulus
    }

    pub fn zero(&self) -> CycScalar {
        CycScalar::from_rational(self.0.order, self.degree(), Rational::zero())
    }

    pub fn one(&self) -> CycScalar {
        self.from_rational(Rational::one())
    }

    pub fn from_rational(&self, q: Rational) -> CycScalar {
        CycScalar::from_rational(self.0.order, self.degree(), q)
    }

    pub fn from_int(&self, n: i64) -> CycScalar {
        self.from_rational(rat(n))
    }

    pub fn zeta(&self) -> CycScalar {
        self.zeta_pow(1)
    }

    pub fn zeta_pow(&self, k: u64) -> CycScalar {
        self.0.zeta_powers[(k % self.0.order as u64) as usize].clone()
    }

    /// Reduce an arbitrary polynomial in ζ modulo Φ_e.
    pub fn reduce_poly(&self, p: &[Rational]) -> CycScalar {
        let (_, r) = poly_divrem(p, &self.0.modulus);
        let mut coeffs: Coeffs = r.into_iter().collect();
        coeffs.resize(self.degree(), Rational::zero());
        CycScalar { order: self.0.order, coeffs }
    }

    pub fn check(&self, a: &CycScalar) -> Result<()> {
        if a.order != self.0.order {
            return Err(Error::OrderMismatch { left: self.0.order, right: a.order });
        }
        Ok(())
    }

    pub fn mul(&self, a: &CycScalar, b: &CycScalar) -> CycScalar {
        debug_assert_eq!(a.order, self.0.order);
        debug_assert_eq!(b.order, self.0.order);
        let d = self.degree();
        if d == 1 {
            let mut coeffs = Coeffs::new();
            coeffs.push(&a.coeffs[0] * &b.coeffs[0]);
            return CycScalar { order: self.0.order, coeffs };
        }
        let mut full = vec![Rational::zero(); 2 * d - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    full[i + j] += x * y;
                }
            }
        }
        let mut coeffs: Coeffs = full[..d].iter().cloned().collect();
        for (k, c) in full[d..].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, r) in self.0.reductions[k].iter().enumerate() {
                coeffs[i] += c * r;
            }
        }
        CycScalar { order: self.0.order, coeffs }
    }

    pub fn inv(&self, a: &CycScalar) -> Result<CycScalar> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.degree() == 1 {
            return Ok(self.from_rational(a.coeffs[0].recip()));
        }
        // extended Euclid: s*a + t*Φ = g, g constant
        let mut r0: Vec<Rational> = self.0.modulus.clone();
        let mut r1: Vec<Rational> = a.coeffs.to_vec();
        trim(&mut r1);
        let mut s0: Vec<Rational> = Vec::new();
        let mut s1: Vec<Rational> = vec![Rational::one()];
        while r1.len() > 1 {
            let (q, r) = poly_divrem(&r0, &r1);
            let s = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = core::mem::replace(&mut r1, r);
            s0 = core::mem::replace(&mut s1, s);
        }
        // r1 is a nonzero constant because Φ_e is irreducible
        let c = r1[0].recip();
        let scaled: Vec<Rational> = s1.iter().map(|x| x * &c).collect();
        Ok(self.reduce_poly(&scaled))
    }

    pub fn div(&self, a: &CycScalar, b: &CycScalar) -> Result<CycScalar> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &CycScalar, mut k: u64) -> CycScalar {
        let mut base = a.clone();
        let mut acc = self.one();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            k >>= 1;
        }
        acc
    }
}

/// An element of Q(ζ_e) in reduced form: exactly φ(e) rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycScalar {
    order: u32,
    coeffs: Coeffs,
}

impl CycScalar {
    fn from_rational(order: u32, degree: usize, q: Rational) -> Self {
        let mut coeffs = Coeffs::new();
        coeffs.push(q);
        coeffs.resize(degree, Rational::zero());
        CycScalar { order, coeffs }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, when the element lies in Q.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    pub fn scale(&self, q: &Rational) -> CycScalar {
        CycScalar { order: self.order, coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    fn zip(&self, other: &CycScalar, f: impl Fn(&Rational, &Rational) -> Rational) -> CycScalar {
        assert_eq!(self.order, other.order, "scalars from different cyclotomic fields");
        CycScalar {
            order: self.order,
            coeffs: self.coeffs.iter().zip(other.coeffs.iter()).map(|(a, b)| f(a, b)).collect(),
        }
    }
}

impl Add for &CycScalar {
    type Output = CycScalar;
    fn add(self, rhs: &CycScalar) -> CycScalar {
        self.zip(rhs, |a, b| a + b)
    }
}

impl Sub for &CycScalar {
    type Output = CycScalar;
    fn sub(self, rhs: &CycScalar) -> CycScalar {
        self.zip(rhs, |a, b| a - b)
    }
}

impl Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        CycScalar { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        -&self
    }
}

/// Convenience product; builds the field context on every call. Hot loops
/// should go through [`CycField::mul`] instead.
impl Mul for &CycScalar {
    type Output = CycScalar;
    fn mul(self, rhs: &CycScalar) -> CycScalar {
        assert_eq!(self.order, rhs.order, "scalars from different cyclotomic fields");
        CycField::new(self.order).mul(self, rhs)
    }
}

pub(crate) fn fmt_rational(q: &Rational) -> String {
    use alloc::string::ToString;
    if q.is_integer() {
        q.numer().to_string()
    } else {
        alloc::format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for CycScalar {
    /// `c0 + c1*z + c2*z^2 + ...`, zero terms omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let body = match k {
                0 => fmt_rational(&mag),
                _ => {
                    let z = if k == 1 { String::from("z") } else { alloc::format!("z^{k}") };
                    if mag.is_one() {
                        z
                    } else {
                        alloc::format!("{}*{}", fmt_rational(&mag), z)
                    }
                }
            };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{body}")?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_poly(p: &[Rational]) -> Vec<i64> {
        p.iter()
            .map(|c| {
                assert!(c.is_integer());
                i64::try_from(c.numer()).unwrap()
            })
            .collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(int_poly(&cyclotomic_poly(1)), vec![-1, 1]);
        assert_eq!(int_poly(&cyclotomic_poly(2)), vec![1, 1]);
        assert_eq!(int_poly(&cyclotomic_poly(4)), vec![1, 0, 1]);
        assert_eq!(int_poly(&cyclotomic_poly(3)), vec![1, 1, 1]);
        assert_eq!(int_poly(&cyclotomic_poly(6)), vec![1, -1, 1]);
    }

    #[test]
    fn product_over_divisors_is_x_e_minus_one() {
        for e in 1..=24u32 {
            let mut prod = vec![Rational::one()];
            for d in 1..=e {
                if e % d == 0 {
                    prod = poly_mul(&prod, &cyclotomic_poly(d));
                }
            }
            let mut expected = vec![Rational::zero(); e as usize + 1];
            expected[0] = -Rational::one();
            expected[e as usize] = Rational::one();
            assert_eq!(prod, expected, "e = {e}");
            assert_eq!(cyclotomic_poly(e).len() - 1, euler_phi(e));
        }
    }

    #[test]
    fn zeta_identities() {
        let f2 = CycField::new(2);
        assert!(f2.mul(&f2.zeta(), &f2.zeta()).is_one());
        for e in 1..=12u32 {
            let f = CycField::new(e);
            let z = f.zeta();
            assert!(f.mul(&z, &f.pow(&z, e as u64 - 1)).is_one());
            assert!(f.pow(&z, e as u64).is_one());
            for k in 1..e {
                let w = &f.pow(&z, k as u64) - &f.one();
                assert!(!w.is_zero(), "zeta^{k} = 1 for e = {e}");
                assert!(f.mul(&w, &f.inv(&w).unwrap()).is_one());
            }
        }
    }

    #[test]
    fn gaussian_product() {
        // (1+i)(1-i) = 1 - i^2 = 2
        let f = CycField::new(4);
        let a = &f.one() + &f.zeta();
        let b = &f.one() - &f.zeta();
        assert_eq!(f.mul(&a, &b), f.from_int(2));
    }

    #[test]
    fn division_by_zero_is_reported() {
        let f = CycField::new(3);
        assert_eq!(f.inv(&f.zero()), Err(Error::DivisionByZero));
        assert_eq!(f.div(&f.one(), &f.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn display_format() {
        let f = CycField::new(3);
        let a = &f.from_rational(rat_frac(1, 2)) - &f.zeta().scale(&rat(3));
        assert_eq!(alloc::format!("{a}"), "1/2 - 3*z");
        assert_eq!(alloc::format!("{}", f.zero()), "0");
        assert_eq!(alloc::format!("{}", -f.zeta()), "-z");
    }
}
