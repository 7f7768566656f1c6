//! Dense univariate polynomials over the rationals, coefficients in ascending order.

use crate::rat::{self, Q};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    c: Vec<Q>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.c.iter().map(rat::fmt).collect();
        write!(f, "Poly[{}]", s.join(", "))
    }
}

impl Poly {
    pub fn new(mut c: Vec<Q>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly { c }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Poly::new(c.iter().map(|&x| rat::q(x)).collect())
    }

    pub fn zero() -> Self {
        Poly { c: vec![] }
    }

    pub fn constant(x: Q) -> Self {
        Poly::new(vec![x])
    }

    pub fn one() -> Self {
        Poly::constant(Q::one())
    }

    /// `x - r`
    pub fn linear_root(r: &Q) -> Self {
        Poly::new(vec![-r.clone(), Q::one()])
    }

    pub fn from_roots(roots: &[Q]) -> Self {
        roots
            .iter()
            .fold(Poly::one(), |acc, r| &acc * &Poly::linear_root(r))
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.c
    }

    pub fn coeff(&self, k: usize) -> Q {
        self.c.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn leading(&self) -> Q {
        self.c.last().cloned().unwrap_or_else(Q::zero)
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.leading();
        self.scale(&(Q::one() / l))
    }

    pub fn scale(&self, k: &Q) -> Poly {
        Poly::new(self.c.iter().map(|x| x * k).collect())
    }

    pub fn eval(&self, x: &Q) -> Q {
        let mut acc = Q::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for a in self.c.iter().rev() {
            acc = acc * x + rat::to_f64(a);
        }
        acc
    }

    pub fn eval_c(&self, x: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for a in self.c.iter().rev() {
            acc = acc * x + rat::to_f64(a);
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, a)| a * rat::q(k as i64))
                .collect(),
        )
    }

    /// Polynomial long division: `self = q·d + r` with `deg r < deg d`.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let lead = d.leading();
        let mut quo = vec![Q::zero(); r.len() - dd];
        for k in (0..quo.len()).rev() {
            let t = &r[k + dd] / &lead;
            if !t.is_zero() {
                for (i, b) in d.c.iter().enumerate() {
                    r[k + i] -= &t * b;
                }
            }
            quo[k] = t;
        }
        r.truncate(dd);
        (Poly::new(quo), Poly::new(r))
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r.primitive();
        }
        a.monic()
    }

    /// Same polynomial divided by the content, used to keep gcd chains small.
    fn primitive(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let den = self
            .c
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<BigInt> = self.c.iter().map(|x| (x * &den).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        Poly::new(ints.into_iter().map(|x| Q::from_integer(x / &g)).collect())
    }

    /// Coefficients scaled to coprime integers (sign of the leading term kept positive).
    pub fn integer_coeffs(&self) -> Vec<BigInt> {
        let p = self.primitive();
        let flip = p.leading().is_negative();
        p.c.iter()
            .map(|x| {
                let v = x.to_integer();
                if flip {
                    -v
                } else {
                    v
                }
            })
            .collect()
    }

    /// `p(a·x + b)`
    pub fn compose_affine(&self, a: &Q, b: &Q) -> Poly {
        let lin = Poly::new(vec![b.clone(), a.clone()]);
        let mut acc = Poly::zero();
        for coef in self.c.iter().rev() {
            acc = &(&acc * &lin) + &Poly::constant(coef.clone());
        }
        acc
    }

    pub fn square_free(&self) -> Poly {
        let g = self.gcd(&self.derivative());
        self.divrem(&g).0.monic()
    }

    pub fn has_simple_roots(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }

    /// Sturm chain of a square-free polynomial.
    pub fn sturm_chain(&self) -> Vec<Poly> {
        let mut chain = vec![self.clone(), self.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let (_, r) = chain[n - 2].divrem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            // positive rescaling keeps sign changes intact
            let r = r.primitive();
            chain.push(-&r);
        }
        chain
    }

    /// Cauchy bound on the absolute value of every root.
    pub fn root_bound(&self) -> Q {
        let l = self.leading().abs();
        let m = self.c[..self.c.len().saturating_sub(1)]
            .iter()
            .map(|x| x.abs() / &l)
            .max()
            .unwrap_or_else(Q::zero);
        m + Q::one()
    }
}

fn sign_changes(chain: &[Poly], x: &Q) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for p in chain {
        let v = p.eval(x);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// A certified real root: exact when rational, otherwise an isolating interval.
#[derive(Clone, Debug, PartialEq)]
pub struct RealRoot {
    pub lo: Q,
    pub hi: Q,
    pub exact: Option<Q>,
}

impl RealRoot {
    pub fn value(&self) -> f64 {
        match &self.exact {
            Some(x) => rat::to_f64(x),
            None => rat::to_f64(&((&self.lo + &self.hi) / rat::q(2))),
        }
    }

    pub fn width(&self) -> f64 {
        rat::to_f64(&(&self.hi - &self.lo))
    }
}

/// All distinct real roots, sorted, each isolated to width below `tol` (and
/// reported exactly when rational).
pub fn real_roots(p: &Poly, tol: f64) -> Vec<RealRoot> {
    if p.degree().unwrap_or(0) == 0 {
        return vec![];
    }
    let sf = p.square_free();
    let chain = sf.sturm_chain();
    let b = sf.root_bound();
    let ints = sf.integer_coeffs();
    let lead = ints.last().cloned().unwrap_or_else(BigInt::one);
    let lead_q = Q::from_integer(lead.clone());
    // rational roots have denominators dividing the leading integer coefficient
    let exact_width = Q::new(BigInt::one(), lead.clone() * BigInt::from(4));
    let tol_q = rat::from_f64(tol).min(exact_width.clone());

    let mut stack = vec![(-b.clone(), b.clone())];
    let mut out = vec![];
    let two = rat::q(2);
    while let Some((lo, hi)) = stack.pop() {
        let n = sign_changes(&chain, &lo) - sign_changes(&chain, &hi);
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push(refine(&sf, &chain, lo, hi, &tol_q, &lead_q));
            continue;
        }
        // Sturm counts roots in (lo, hi], so a root sitting on mid stays in the left half
        let mid = (&lo + &hi) / &two;
        stack.push((mid.clone(), hi));
        stack.push((lo, mid));
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    out
}

fn refine(p: &Poly, chain: &[Poly], mut lo: Q, mut hi: Q, tol: &Q, lead: &Q) -> RealRoot {
    let two = rat::q(2);
    if p.eval(&hi).is_zero() {
        return RealRoot {
            lo: hi.clone(),
            hi: hi.clone(),
            exact: Some(hi),
        };
    }
    while &(&hi - &lo) > tol {
        let mid = (&lo + &hi) / &two;
        let v = p.eval(&mid);
        if v.is_zero() {
            return RealRoot {
                lo: mid.clone(),
                hi: mid.clone(),
                exact: Some(mid),
            };
        }
        if sign_changes(chain, &lo) - sign_changes(chain, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let mid = (&lo + &hi) / &two;
    let cand = (&mid * lead).round() / lead;
    let exact = if cand > lo && cand <= hi && p.eval(&cand).is_zero() {
        Some(cand)
    } else {
        None
    };
    RealRoot { lo, hi, exact }
}

/// All complex roots by Durand–Kerner iteration (floating point, for seeding).
pub fn complex_roots(p: &Poly) -> Vec<Complex64> {
    if p.degree().unwrap_or(0) == 0 {
        return vec![];
    }
    let m = p.monic();
    let coeffs: Vec<Complex64> =
        m.c.iter()
            .map(|a| Complex64::new(rat::to_f64(a), 0.0))
            .collect();
    complex_roots_monic(&coeffs)
}

/// Roots of a monic polynomial with complex coefficients, lowest degree first.
/// The leading entry must be 1.
pub fn complex_roots_monic(coeffs: &[Complex64]) -> Vec<Complex64> {
    let deg = coeffs.len().saturating_sub(1);
    if deg == 0 {
        return vec![];
    }
    let eval = |z: Complex64| {
        let mut acc = Complex64::new(0.0, 0.0);
        for a in coeffs.iter().rev() {
            acc = acc * z + a;
        }
        acc
    };
    // Fujiwara-type bound
    let radius = coeffs[..deg]
        .iter()
        .enumerate()
        .map(|(k, a)| 2.0 * a.norm().powf(1.0 / (deg - k) as f64))
        .fold(1.0, f64::max);
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| {
            Complex64::from_polar(
                radius,
                0.4 + 2.0 * std::f64::consts::PI * k as f64 / deg as f64,
            )
        })
        .collect();
    for _ in 0..5000 {
        let mut delta: f64 = 0.0;
        for i in 0..deg {
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..deg {
                if i != j {
                    den *= z[i] - z[j];
                }
            }
            let step = eval(z[i]) / den;
            z[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 * radius {
            break;
        }
    }
    z
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        Poly::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        Poly::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![Q::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::new(c)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.c.iter().map(|x| -x).collect())
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, o: Poly) -> Poly {
        &self + &o
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, o: Poly) -> Poly {
        &self - &o
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, o: Poly) -> Poly {
        &self * &o
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{q, qf};

    #[test]
    fn divrem_roundtrip() {
        let a = Poly::from_ints(&[1, -3, 0, 2, 5]);
        let d = Poly::from_ints(&[2, 1, 3]);
        let (qq, r) = a.divrem(&d);
        assert_eq!(&(&qq * &d) + &r, a);
        assert!(r.degree().unwrap() < 2);
    }

    #[test]
    fn gcd_and_square_free() {
        let p = Poly::from_roots(&[q(1), q(1), qf(-1, 2)]);
        assert!(!p.has_simple_roots());
        assert_eq!(p.square_free(), Poly::from_roots(&[q(1), qf(-1, 2)]));
    }

    #[test]
    fn roots_irrational_and_rational() {
        // x^2 - 45/4 and (x+3/4)(x+27/4)
        let p = Poly::new(vec![qf(-45, 4), q(0), q(1)]);
        let r = real_roots(&p, 1e-14);
        assert_eq!(r.len(), 2);
        assert!((r[1].value() - 1.5 * 5f64.sqrt()).abs() < 1e-13);
        assert!(r[0].exact.is_none());
        let p = Poly::from_roots(&[qf(-3, 4), qf(-27, 4)]);
        let r = real_roots(&p, 1e-12);
        assert_eq!(r[0].exact, Some(qf(-27, 4)));
        assert_eq!(r[1].exact, Some(qf(-3, 4)));
    }

    #[test]
    fn root_at_bisection_midpoint() {
        let p = Poly::from_roots(&[q(0), q(2), q(-2)]);
        let r = real_roots(&p, 1e-10);
        let ex: Vec<_> = r.iter().map(|x| x.exact.clone().unwrap()).collect();
        assert_eq!(ex, vec![q(-2), q(0), q(2)]);
    }

    #[test]
    fn compose_affine_shift() {
        let p = Poly::from_ints(&[0, 0, 1]);
        // (2x+1)^2
        assert_eq!(p.compose_affine(&q(2), &q(1)), Poly::from_ints(&[1, 4, 4]));
    }

    #[test]
    fn complex_roots_quadratic() {
        let p = Poly::from_ints(&[1, 0, 1]);
        let mut r = complex_roots(&p);
        r.sort_by(|a, b| a.im.partial_cmp(&b.im).unwrap());
        assert!((r[0] - Complex64::new(0.0, -1.0)).norm() < 1e-12);
        assert!((r[1] - Complex64::new(0.0, 1.0)).norm() < 1e-12);
    }
}
