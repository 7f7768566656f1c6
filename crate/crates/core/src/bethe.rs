//! Bethe equations for the spectrum of `X`.
//!
//! Roots `ν` (n−1 of them) and `λ` (ℓ−1 of them) solve a pair of coupled
//! rational equations; each solution gives one eigenvalue of `X_m`. The same
//! system is encoded by a bilinear differential equation in the two monic
//! polynomials `y1 = Π(u−ν)`, `y2 = Π(u−λ)`, which is what the numeric solver
//! iterates on.

use crate::error::{Error, Result};
use crate::poly::{self, Poly};
use crate::rat::{self, q, qf, Q};
use crate::tridiag::{self, build_x, spectrum, xsca};
use crate::weights::{derive_ln, ParamSet};
use num_complex::Complex64;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

const POLE_EPS: f64 = 1e-12;

type C = Complex64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BetheConfig {
    pub params: ParamSet,
    pub m1: i64,
    pub m2: i64,
    pub mp1: i64,
    pub mp2: i64,
    pub n: i64,
    pub l: i64,
}

impl BetheConfig {
    pub fn from_params(p: ParamSet) -> Result<Self> {
        let d = derive_ln(p)?;
        if d.n < 1 || d.l < 1 {
            return Err(Error::NotPhysical);
        }
        Ok(BetheConfig {
            params: p,
            m1: p.m1,
            m2: p.m2,
            mp1: p.mp1,
            mp2: p.mp2,
            n: d.n,
            l: d.l,
        })
    }

    pub fn n_nu(&self) -> usize {
        (self.n - 1) as usize
    }

    pub fn n_lambda(&self) -> usize {
        (self.l - 1) as usize
    }

    /// Coefficient of `u` multiplying `y1'` in the master equation.
    fn c1(&self) -> i64 {
        self.mp1 - 2 * self.n + self.l + 2
    }

    fn c2(&self) -> i64 {
        self.mp2 - 2 * self.l + self.n + 2
    }

    fn master_constant(&self) -> i64 {
        let (n, l) = (self.n, self.l);
        (l - 1) * (l - 1 - self.mp2) + (n - 1) * (n - 1 - self.mp1) - (n - 1) * (l - 1)
    }

    /// Jacobi parameters `(α, β)` of the `ℓ = 1` degeneration, for `y1`.
    pub fn jacobi_params_nu(&self) -> (Q, Q) {
        (q(self.c1() + self.m1 - 2), q(-self.m1))
    }

    /// Same for `y2` in the `n = 1` degeneration.
    pub fn jacobi_params_lambda(&self) -> (Q, Q) {
        (q(self.c2() + self.m2 - 2), q(-self.m2))
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct BetheRoots {
    pub nu: Vec<C>,
    pub lambda: Vec<C>,
}

impl BetheRoots {
    pub fn real(nu: &[f64], lambda: &[f64]) -> Self {
        BetheRoots {
            nu: nu.iter().map(|&x| C::new(x, 0.0)).collect(),
            lambda: lambda.iter().map(|&x| C::new(x, 0.0)).collect(),
        }
    }

    pub fn all(&self) -> impl Iterator<Item = &C> {
        self.nu.iter().chain(self.lambda.iter())
    }

    /// Smallest distance between two roots, or to 0 or 1. Zero when a root is
    /// not finite.
    pub fn separation(&self) -> f64 {
        let all: Vec<C> = self.all().copied().collect();
        if all.iter().any(|z| !z.is_finite()) {
            return 0.0;
        }
        let mut s = f64::INFINITY;
        for (i, a) in all.iter().enumerate() {
            s = s.min(a.norm()).min((a - 1.0).norm());
            for b in &all[i + 1..] {
                s = s.min((a - b).norm());
            }
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BetheResidual {
    pub nu: Vec<f64>,
    pub lambda: Vec<f64>,
}

impl BetheResidual {
    /// Largest residual; infinite if any entry is not finite.
    pub fn max(&self) -> f64 {
        self.nu.iter().chain(&self.lambda).fold(0.0, |a, &b| {
            if b.is_finite() {
                a.max(b)
            } else {
                f64::INFINITY
            }
        })
    }
}

fn check_roots(cfg: &BetheConfig, r: &BetheRoots) -> Result<()> {
    if r.nu.len() != cfg.n_nu() {
        return Err(Error::DimensionMismatch(r.nu.len(), cfg.n_nu()));
    }
    if r.lambda.len() != cfg.n_lambda() {
        return Err(Error::DimensionMismatch(r.lambda.len(), cfg.n_lambda()));
    }
    if r.separation() < POLE_EPS {
        return Err(Error::PoleHit);
    }
    Ok(())
}

/// Signed left-minus-right of each equation, `ν` equations first.
fn bethe_equations(cfg: &BetheConfig, nu: &[C], lam: &[C]) -> Vec<C> {
    let mut out = Vec::with_capacity(nu.len() + lam.len());
    for (p, &x) in nu.iter().enumerate() {
        let mut v = ((cfg.m1 - 1) as f64 + x * cfg.c1() as f64) / (x * (1.0 - x));
        for (k, &y) in nu.iter().enumerate() {
            if k != p {
                v -= 2.0 / (x - y);
            }
        }
        for &y in lam {
            v += 1.0 / (x - y);
        }
        out.push(v);
    }
    for (s, &x) in lam.iter().enumerate() {
        let mut v = ((cfg.m2 - 1) as f64 + x * cfg.c2() as f64) / (x * (1.0 - x));
        for (r, &y) in lam.iter().enumerate() {
            if r != s {
                v -= 2.0 / (x - y);
            }
        }
        for &y in nu {
            v += 1.0 / (x - y);
        }
        out.push(v);
    }
    out
}

/// `|LHS − RHS|` for every Bethe equation.
pub fn bethe_residual(cfg: &BetheConfig, r: &BetheRoots) -> Result<BetheResidual> {
    check_roots(cfg, r)?;
    let e = bethe_equations(cfg, &r.nu, &r.lambda);
    let k = r.nu.len();
    Ok(BetheResidual {
        nu: e[..k].iter().map(|z| z.norm()).collect(),
        lambda: e[k..].iter().map(|z| z.norm()).collect(),
    })
}

/// Constant shift added to the scalar `x` in the eigenvalue formula.
pub fn eigenvalue_shift(cfg: &BetheConfig) -> Q {
    let (m1, m2, a1, a2, n, l) = (cfg.m1, cfg.m2, cfg.mp1, cfg.mp2, cfg.n, cfg.l);
    let inner = (4 * (a1 - a2) + 3 * (m1 - m2) + 6 * (l - n)) * (n - 1)
        + (l - m2 - a2) * (3 - 4 * a1 - 2 * a2);
    -qf((l - 1) * inner, 6)
}

/// The shift as printed in the literature; it disagrees with the spectrum of
/// `X` whenever `ℓ > 1`.
pub fn eigenvalue_shift_as_printed(cfg: &BetheConfig) -> Q {
    let (m1, m2, a1, a2, n, l) = (cfg.m1, cfg.m2, cfg.mp1, cfg.mp2, cfg.n, cfg.l);
    let inner = (m1 - m2 + 2 * a1 - 2 * a2 - 3 * n + 3 * l) * (n - 1)
        + (m2 + 2 * m1 - 2 * a1 - a2) * (l - m2 - a2);
    -qf((l - 1) * inner, 6)
}

fn pair_sum(cfg: &BetheConfig, r: &BetheRoots) -> Result<C> {
    let mut s = C::zero();
    for &v in &r.nu {
        for &w in &r.lambda {
            if (v - w).norm() < POLE_EPS {
                return Err(Error::PoleHit);
            }
            s += (v + w - 2.0) / (v - w);
        }
    }
    Ok(s * ((cfg.m1 + cfg.m2 - 1) as f64 / 2.0))
}

/// Eigenvalue of `X` attached to a set of Bethe roots.
pub fn eigenvalue_from_roots(cfg: &BetheConfig, r: &BetheRoots, x_scalar: &Q) -> Result<C> {
    let base = rat::to_f64(&(x_scalar + &eigenvalue_shift(cfg)));
    Ok(pair_sum(cfg, r)? + base)
}

pub fn eigenvalue_from_roots_as_printed(
    cfg: &BetheConfig,
    r: &BetheRoots,
    x_scalar: &Q,
) -> Result<C> {
    let base = rat::to_f64(&(x_scalar + &eigenvalue_shift_as_printed(cfg)));
    Ok(pair_sum(cfg, r)? + base)
}

/// Left side of the master equation, without any checks on `y1`, `y2`.
pub fn master_form(cfg: &BetheConfig, y1: &Poly, y2: &Poly) -> Poly {
    let uu1 = Poly::from_ints(&[0, -1, 1]);
    let (d1, d2) = (y1.derivative(), y2.derivative());
    let (dd1, dd2) = (d1.derivative(), d2.derivative());
    let t1 = &uu1 * &(&(&(y1 * &dd2) - &(&d1 * &d2)) + &(&dd1 * y2));
    let t2 = &Poly::from_ints(&[cfg.m1 - 1, cfg.c1()]) * &(&d1 * y2);
    let t3 = &Poly::from_ints(&[cfg.m2 - 1, cfg.c2()]) * &(y1 * &d2);
    let t4 = (y1 * y2).scale(&q(cfg.master_constant()));
    &(&(&t1 + &t2) + &t3) + &t4
}

/// Master-equation remainder for monic `y1`, `y2` with simple roots.
pub fn master_residual(cfg: &BetheConfig, y1: &Poly, y2: &Poly) -> Result<Poly> {
    for y in [y1, y2] {
        if y.is_zero() || !y.has_simple_roots() {
            return Err(Error::NonSimpleRoots);
        }
    }
    Ok(master_form(cfg, y1, y2))
}

#[derive(Clone, Debug, PartialEq)]
pub struct PjResidual {
    pub rho1: Poly,
    pub rem1: Poly,
    pub rho2: Poly,
    pub rem2: Poly,
}

impl PjResidual {
    pub fn is_solution(&self) -> bool {
        self.rem1.is_zero() && self.rem2.is_zero()
    }

    /// Leading coefficients of `ρ1`, `ρ2` read at degrees `ℓ−1` and `n−1`.
    pub fn leading_coefficients(&self, cfg: &BetheConfig) -> (Q, Q) {
        (self.rho1.coeff(cfg.n_lambda()), self.rho2.coeff(cfg.n_nu()))
    }

    pub fn expected_leading(cfg: &BetheConfig) -> (Q, Q) {
        let (n, l) = (cfg.n, cfg.l);
        (
            q((n - 1) * (n - 1 - cfg.mp1)),
            q((l - 1) * (l - 1 - cfg.mp2)),
        )
    }
}

/// Solve the two coupled second-order equations for `ρ1`, `ρ2` by division.
pub fn pj_residual(cfg: &BetheConfig, y1: &Poly, y2: &Poly) -> Result<PjResidual> {
    if y1.degree() != Some(cfg.n_nu()) {
        return Err(Error::DimensionMismatch(
            y1.degree().unwrap_or(0),
            cfg.n_nu(),
        ));
    }
    if y2.degree() != Some(cfg.n_lambda()) {
        return Err(Error::DimensionMismatch(
            y2.degree().unwrap_or(0),
            cfg.n_lambda(),
        ));
    }
    let uu1 = Poly::from_ints(&[0, -1, 1]);
    let u1u = Poly::from_ints(&[0, 1, -1]);
    let side = |ya: &Poly, yb: &Poly, lin: Poly| -> (Poly, Poly) {
        let da = ya.derivative();
        let head = &(&uu1 * yb) * &da.derivative();
        let coef = &(&lin * yb) + &(&u1u * &yb.derivative());
        let non_rho = &head + &(&coef * &da);
        let (quo, rem) = non_rho.divrem(ya);
        (quo.scale(&q(-1)), rem)
    };
    let (rho1, rem1) = side(y1, y2, Poly::from_ints(&[cfg.m1 - 1, cfg.c1()]));
    let (rho2, rem2) = side(y2, y1, Poly::from_ints(&[cfg.m2 - 1, cfg.c2()]));
    Ok(PjResidual {
        rho1,
        rem1,
        rho2,
        rem2,
    })
}

/// Monic polynomial in `u` proportional to `P_k^{(a,b)}(2u−1)`, from the
/// hypergeometric equation `u(u−1)y'' + ((a+b+2)u − (b+1))y' − k(k+a+b+1)y = 0`.
pub fn jacobi_monic(k: usize, a: &Q, b: &Q) -> Result<Poly> {
    let mut c = vec![Q::zero(); k + 1];
    c[k] = Q::one();
    let kq = q(k as i64);
    let s = a + b + Q::one();
    for j in (0..k).rev() {
        let jq = q(j as i64);
        let den = (&jq - &kq) * (&jq + &kq + &s);
        if den.is_zero() {
            return Err(Error::OutOfRange(format!(
                "Jacobi recursion degenerates at degree {j}"
            )));
        }
        c[j] = (&jq + Q::one()) * (&jq + b + Q::one()) * &c[j + 1] / den;
    }
    Ok(Poly::new(c))
}

/// `x(x−1)…(x−j+1)/j!`
fn gen_binomial(x: &Q, j: usize) -> Q {
    let mut acc = Q::one();
    for i in 0..j {
        acc = acc * (x - q(i as i64)) / q(i as i64 + 1);
    }
    acc
}

/// `P_k^{(a,b)}(2u−1)` with the classical normalization, as a polynomial in `u`.
pub fn jacobi_p(k: i64, a: &Q, b: &Q) -> Poly {
    if k < 0 {
        return Poly::zero();
    }
    let k_u = k as usize;
    let kq = q(k);
    let um1 = Poly::from_ints(&[-1, 1]);
    let u = Poly::from_ints(&[0, 1]);
    let mut out = Poly::zero();
    for s in 0..=k_u {
        let c = gen_binomial(&(&kq + a), k_u - s) * gen_binomial(&(&kq + b), s);
        let mut term = Poly::constant(c);
        for _ in 0..s {
            term = &term * &um1;
        }
        for _ in 0..k_u - s {
            term = &term * &u;
        }
        out = &out + &term;
    }
    out
}

/// `y1` for `ℓ = 1`: the monic Jacobi polynomial of degree `n−1`.
pub fn example1_y1(cfg: &BetheConfig) -> Result<Poly> {
    if cfg.l != 1 {
        return Err(Error::OutOfRange("Example 1 needs l = 1".into()));
    }
    let (a, b) = cfg.jacobi_params_nu();
    jacobi_monic(cfg.n_nu(), &a, &b)
}

/// Closed-form root pairs `(ν, λ)` for `[2,2] ⊗ [p+1,q+1] ∋ [p+1,q+1]`.
pub fn example2_roots(p: i64, qq: i64) -> [(f64, f64); 2] {
    let (pf, qf_) = (p as f64, qq as f64);
    let s = 2.0 * ((pf + qf_ + 1.5).powi(2) - pf * qf_).sqrt();
    let lam = |e: f64| (-2.0 * pf - 4.0 * qf_ - 3.0 + e * s) / (2.0 * qf_ * (pf + qf_ + 1.0));
    let nu = |e: f64| (-4.0 * pf - 2.0 * qf_ - 3.0 + e * s) / (2.0 * pf * (pf + qf_ + 1.0));
    // the sign choices pair up oppositely
    [(nu(1.0), lam(-1.0)), (nu(-1.0), lam(1.0))]
}

/// The quadratic whose zeros are the admissible `ν` in `[2,p+1] ⊗ [2,q+1] ∋ [L,p+q−2L+4]`.
pub fn example3_nu_poly(l: i64, p: i64, qq: i64) -> Poly {
    Poly::from_ints(&[p + 2, -(l * l - l * (p + qq + 4) - 1), qq + 2])
}

/// `y2 = A + ν·B` for the same family, as the pair `(A, B)`.
pub fn example3_y2_parts(l: i64, p: i64, qq: i64) -> (Poly, Poly) {
    let a = q(qq + p - 2 * l + 4);
    let pre = jacobi_norm(l, qq);
    let p1 = jacobi_p(l - 1, &a, &q(-p - 2));
    let p2 = jacobi_p(l - 2, &a, &q(-p - 1)).scale(&qf(1, l - 1));
    ((&p1 + &p2).scale(&pre), p2.scale(&pre))
}

/// `(ℓ−1)!(q−ℓ+1)!/q!`
fn jacobi_norm(l: i64, qq: i64) -> Q {
    Q::one() / gen_binomial(&q(qq), (l - 1) as usize)
}

/// Master-equation remainder for the Example-3 solution, reduced modulo the
/// quadratic for `ν`: returns `(R0, R1)` with remainder `R0 + ν·R1`.
pub fn example3_master_remainder(l: i64, p: i64, qq: i64) -> Result<(Poly, Poly)> {
    let cfg = BetheConfig::from_params(tridiag::Example::Three { l, p, q: qq }.params())?;
    let (a, b) = example3_y2_parts(l, p, qq);
    let u = Poly::from_ints(&[0, 1]);
    let one = Poly::one();
    let r_ua = master_form(&cfg, &u, &a);
    let r_ub = master_form(&cfg, &u, &b);
    let r_1a = master_form(&cfg, &one, &a);
    let r_1b = master_form(&cfg, &one, &b);
    // y1 = u − ν: R = R(u,A) + ν(R(u,B) − R(1,A)) − ν² R(1,B)
    let nz = example3_nu_poly(l, p, qq);
    let lead = nz.coeff(2);
    let nu2_1 = -nz.coeff(1) / &lead;
    let nu2_0 = -nz.coeff(0) / &lead;
    let r0 = &r_ua - &r_1b.scale(&nu2_0);
    let r1 = &(&r_ub - &r_1a) - &r_1b.scale(&nu2_1);
    Ok((r0, r1))
}

/// Numeric roots of a real polynomial, refined by Newton on the polynomial.
fn polished_roots(p: &Poly) -> Vec<C> {
    let mut z = poly::complex_roots(p);
    let d = p.derivative();
    for r in z.iter_mut() {
        for _ in 0..5 {
            let dv = d.eval_c(*r);
            if dv.norm() == 0.0 {
                break;
            }
            *r -= p.eval_c(*r) / dv;
        }
    }
    z
}

/// Closed-form Bethe roots of the worked examples.
pub fn example_roots(e: tridiag::Example) -> Result<Vec<BetheRoots>> {
    match e {
        tridiag::Example::One(p) => {
            let cfg = BetheConfig::from_params(p)?;
            let y1 = example1_y1(&cfg)?;
            Ok(vec![BetheRoots {
                nu: polished_roots(&y1),
                lambda: vec![],
            }])
        }
        tridiag::Example::Two { p, q } => Ok(example2_roots(p, q)
            .iter()
            .map(|&(n, l)| BetheRoots::real(&[n], &[l]))
            .collect()),
        tridiag::Example::Three { l, p, q } => {
            let nz = example3_nu_poly(l, p, q);
            let (a, b) = example3_y2_parts(l, p, q);
            let mut out = vec![];
            for nu in polished_roots(&nz) {
                let y2: Vec<C> = (0..=a.degree().unwrap_or(0))
                    .map(|k| C::new(rat::to_f64(&a.coeff(k)), 0.0) + nu * rat::to_f64(&b.coeff(k)))
                    .collect();
                let mut lam = poly::complex_roots_monic(&y2);
                for r in lam.iter_mut() {
                    for _ in 0..5 {
                        let (v, dv) = ceval_with_derivative(&y2, *r);
                        if dv.norm() == 0.0 {
                            break;
                        }
                        *r -= v / dv;
                    }
                }
                out.push(BetheRoots {
                    nu: vec![nu],
                    lambda: lam,
                });
            }
            Ok(out)
        }
    }
}

fn ceval_with_derivative(c: &[C], z: C) -> (C, C) {
    let mut v = C::zero();
    let mut d = C::zero();
    for a in c.iter().rev() {
        d = d * z + v;
        v = v * z + a;
    }
    (v, d)
}

// ---- complex polynomial helpers for the solver ----

fn cmul(a: &[C], b: &[C]) -> Vec<C> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![C::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn cder(a: &[C]) -> Vec<C> {
    a.iter()
        .enumerate()
        .skip(1)
        .map(|(k, x)| x * k as f64)
        .collect()
}

fn cadd_into(acc: &mut Vec<C>, b: &[C]) {
    if acc.len() < b.len() {
        acc.resize(b.len(), C::zero());
    }
    for (i, x) in b.iter().enumerate() {
        acc[i] += x;
    }
}

fn master_form_c(cfg: &BetheConfig, y1: &[C], y2: &[C]) -> Vec<C> {
    let uu1 = [C::zero(), C::new(-1.0, 0.0), C::one()];
    let (d1, d2) = (cder(y1), cder(y2));
    let (dd1, dd2) = (cder(&d1), cder(&d2));
    let mut inner = cmul(y1, &dd2);
    cadd_into(
        &mut inner,
        &cmul(&d1, &d2).iter().map(|x| -x).collect::<Vec<_>>(),
    );
    cadd_into(&mut inner, &cmul(&dd1, y2));
    let mut out = cmul(&uu1, &inner);
    let l1 = [
        C::new((cfg.m1 - 1) as f64, 0.0),
        C::new(cfg.c1() as f64, 0.0),
    ];
    let l2 = [
        C::new((cfg.m2 - 1) as f64, 0.0),
        C::new(cfg.c2() as f64, 0.0),
    ];
    cadd_into(&mut out, &cmul(&l1, &cmul(&d1, y2)));
    cadd_into(&mut out, &cmul(&l2, &cmul(y1, &d2)));
    let k = cfg.master_constant() as f64;
    cadd_into(
        &mut out,
        &cmul(y1, y2).iter().map(|x| x * k).collect::<Vec<_>>(),
    );
    out
}

fn monic_from(c: &[C]) -> Vec<C> {
    let mut v = c.to_vec();
    v.push(C::one());
    v
}

fn unit(j: usize, len: usize) -> Vec<C> {
    let mut v = vec![C::zero(); len];
    v[j] = C::one();
    v
}

/// Gaussian elimination with partial pivoting.
fn csolve(mut a: Vec<Vec<C>>, mut b: Vec<C>) -> Option<Vec<C>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).max_by(|&i, &j| a[i][col].norm().total_cmp(&a[j][col].norm()))?;
        if a[piv][col].norm() < 1e-300 {
            return None;
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for r in col + 1..n {
            let f = a[r][col] / a[col][col];
            if f == C::zero() {
                continue;
            }
            for c in col..n {
                let t = a[col][c];
                a[r][c] -= f * t;
            }
            let t = b[col];
            b[r] -= f * t;
        }
    }
    let mut x = vec![C::zero(); n];
    for r in (0..n).rev() {
        let mut s = b[r];
        for c in r + 1..n {
            s -= a[r][c] * x[c];
        }
        x[r] = s / a[r][r];
    }
    Some(x)
}

fn truncate(v: Vec<C>, k: usize) -> Vec<C> {
    let mut v = v;
    v.resize(k, C::zero());
    v
}

/// Newton in coefficient space on the master equation. The unknowns are the
/// non-leading coefficients of `y1` then `y2`; the leading coefficient of the
/// master remainder vanishes identically.
fn newton_coeffs(cfg: &BetheConfig, mut c: Vec<C>, max_iter: usize) -> Option<Vec<C>> {
    let (a, b) = (cfg.n_nu(), cfg.n_lambda());
    let dim = a + b;
    for _ in 0..max_iter {
        let y1 = monic_from(&c[..a]);
        let y2 = monic_from(&c[a..]);
        let f = truncate(master_form_c(cfg, &y1, &y2), dim);
        let scale = 1.0 + c.iter().fold(0.0f64, |m, z| m.max(z.norm())).powi(2);
        if f.iter().all(|z| z.norm() < 1e-12 * scale) {
            return Some(c);
        }
        let mut jac = vec![vec![C::zero(); dim]; dim];
        for j in 0..a {
            let col = truncate(master_form_c(cfg, &unit(j, a + 1), &y2), dim);
            for (r, v) in col.into_iter().enumerate() {
                jac[r][j] = v;
            }
        }
        for j in 0..b {
            let col = truncate(master_form_c(cfg, &y1, &unit(j, b + 1)), dim);
            for (r, v) in col.into_iter().enumerate() {
                jac[r][a + j] = v;
            }
        }
        let step = csolve(jac, f.iter().map(|z| -z).collect())?;
        for (x, d) in c.iter_mut().zip(step) {
            *x += d;
        }
        if c.iter().any(|z| !z.is_finite() || z.norm() > 1e8) {
            return None;
        }
    }
    None
}

/// Newton directly on the Bethe equations, to sharpen roots obtained from the
/// coefficient iteration.
fn polish_roots(cfg: &BetheConfig, r: &mut BetheRoots, iters: usize) {
    let k = r.nu.len();
    let dim = k + r.lambda.len();
    if dim == 0 {
        return;
    }
    let size = |f: &[C]| {
        f.iter().fold(0.0f64, |a, z| {
            if z.is_finite() {
                a.max(z.norm())
            } else {
                f64::INFINITY
            }
        })
    };
    for _ in 0..iters {
        if r.separation() < POLE_EPS {
            return;
        }
        let f = bethe_equations(cfg, &r.nu, &r.lambda);
        let before = size(&f);
        let mut jac = vec![vec![C::zero(); dim]; dim];
        let all: Vec<C> = r.all().copied().collect();
        for i in 0..dim {
            let x = all[i];
            let (own, c) = if i < k {
                ((cfg.m1 - 1) as f64, cfg.c1() as f64)
            } else {
                ((cfg.m2 - 1) as f64, cfg.c2() as f64)
            };
            // d/dx of (own + c x)/(x(1−x))
            let den = x * (1.0 - x);
            let mut diag = c / den - (own + c * x) * (1.0 - 2.0 * x) / (den * den);
            for j in 0..dim {
                if j == i {
                    continue;
                }
                let y = all[j];
                let same = (i < k) == (j < k);
                let w = if same { -2.0 } else { 1.0 };
                // term w/(x−y)
                let g = -w / ((x - y) * (x - y));
                diag += g;
                jac[i][j] = -g;
            }
            jac[i][i] = diag;
        }
        let Some(step) = csolve(jac, f.iter().map(|z| -z).collect()) else {
            return;
        };
        let mut next = r.clone();
        for (i, d) in step.into_iter().enumerate() {
            if i < k {
                next.nu[i] += d;
            } else {
                next.lambda[i - k] += d;
            }
        }
        if next.separation() < POLE_EPS
            || !(size(&bethe_equations(cfg, &next.nu, &next.lambda)) < before)
        {
            return;
        }
        *r = next;
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolveOptions {
    /// Random seeds in addition to the Jacobi seeds.
    pub seeds: usize,
    pub max_iter: usize,
    /// Accept a solution when every Bethe residual is below this.
    pub residual_tol: f64,
    /// Eigenvalues within `match_tol·(1+|x|)` of a spectral value count as recovered.
    pub match_tol: f64,
    /// Reject root sets closer than this to each other or to 0, 1.
    pub separation_tol: f64,
    pub rng_seed: u64,
    /// Largest `n` and `ℓ` accepted.
    pub cap: i64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            seeds: 200,
            max_iter: 100,
            residual_tol: 1e-10,
            match_tol: 1e-8,
            separation_tol: 1e-6,
            rng_seed: 1,
            cap: 5,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BetheSolution {
    pub roots: BetheRoots,
    pub residual: f64,
    pub eigenvalue: C,
    /// Index into the spectrum of `X`, or `None` when unmatched.
    pub matched: Option<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SolveReport {
    pub config: BetheConfig,
    pub spectrum: Vec<f64>,
    pub solutions: Vec<BetheSolution>,
    /// Converged master-equation solutions rejected because roots coincide,
    /// with their approximate eigenvalue and the nearest spectral index
    /// (matched loosely, these are ill-conditioned).
    pub exceptional: Vec<(C, Option<usize>)>,
}

impl SolveReport {
    pub fn recovered(&self) -> Vec<bool> {
        let mut r = vec![false; self.spectrum.len()];
        for s in &self.solutions {
            if let Some(i) = s.matched {
                r[i] = true;
            }
        }
        r
    }

    pub fn n_recovered(&self) -> usize {
        self.recovered().iter().filter(|&&b| b).count()
    }

    pub fn complete(&self) -> bool {
        self.n_recovered() == self.spectrum.len()
    }

    /// Spectral values missing from `solutions` but approached by an
    /// exceptional solution.
    pub fn explained_by_exceptional(&self) -> Vec<usize> {
        let rec = self.recovered();
        let mut out: Vec<usize> = self
            .exceptional
            .iter()
            .filter_map(|(_, m)| *m)
            .filter(|&i| !rec[i])
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn unmatched(&self) -> usize {
        self.solutions
            .iter()
            .filter(|s| s.matched.is_none())
            .count()
    }
}

fn jacobi_seed(k: usize, ab: (Q, Q)) -> Option<Vec<C>> {
    let p = jacobi_monic(k, &ab.0, &ab.1).ok()?;
    Some(
        (0..k)
            .map(|j| C::new(rat::to_f64(&p.coeff(j)), 0.0))
            .collect(),
    )
}

fn roots_from_coeffs(cfg: &BetheConfig, c: &[C]) -> BetheRoots {
    let a = cfg.n_nu();
    BetheRoots {
        nu: poly::complex_roots_monic(&monic_from(&c[..a])),
        lambda: poly::complex_roots_monic(&monic_from(&c[a..])),
    }
}

/// Best-effort numeric solution of the Bethe equations, cross-checked against
/// the spectrum of `X`.
pub fn numeric_solve(cfg: &BetheConfig, opts: &SolveOptions) -> Result<SolveReport> {
    if cfg.n > opts.cap || cfg.l > opts.cap {
        return Err(Error::OutOfRange(format!("n, l must be <= {}", opts.cap)));
    }
    let spec = spectrum(&build_x(cfg.params)?, tridiag::DEFAULT_TOL)?.values;
    let x0 = xsca(cfg.params)?;
    let (a, b) = (cfg.n_nu(), cfg.n_lambda());

    let candidates: Vec<BetheRoots> = if a + b == 0 {
        vec![BetheRoots::default()]
    } else {
        let mut seeds: Vec<Vec<C>> = vec![];
        let s1 = jacobi_seed(a, cfg.jacobi_params_nu());
        let s2 = jacobi_seed(b, cfg.jacobi_params_lambda());
        let base: Vec<C> = match (&s1, &s2) {
            (Some(x), Some(y)) => x.iter().chain(y).copied().collect(),
            _ => vec![C::zero(); a + b],
        };
        if s1.is_some() && s2.is_some() {
            seeds.push(base.clone());
        }
        let mut rng = ChaCha8Rng::seed_from_u64(opts.rng_seed);
        for i in 0..opts.seeds {
            let scale = [0.5, 2.0, 5.0][i % 3];
            let noise: Vec<C> = (0..a + b)
                .map(|_| C::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5) * (2.0 * scale))
                .collect();
            // alternate between perturbations of the Jacobi seed and free seeds
            if i % 2 == 0 {
                seeds.push(base.iter().zip(&noise).map(|(x, y)| x + y * 0.2).collect());
            } else {
                seeds.push(noise);
            }
        }
        seeds
            .into_par_iter()
            .filter_map(|s| newton_coeffs(cfg, s, opts.max_iter))
            .map(|c| roots_from_coeffs(cfg, &c))
            .collect()
    };

    let nearest = |ev: C, tol: f64| {
        spec.iter()
            .enumerate()
            .filter(|(_, &v)| (ev - v).norm() <= tol * (1.0 + v.abs()))
            .min_by(|x, y| (ev - x.1).norm().total_cmp(&(ev - y.1).norm()))
            .map(|(i, _)| i)
    };
    let mut solutions: Vec<BetheSolution> = vec![];
    let mut exceptional = vec![];
    for mut r in candidates {
        polish_roots(cfg, &mut r, 8);
        let residual = if r.separation() < opts.separation_tol {
            f64::INFINITY
        } else {
            bethe_residual(cfg, &r)
                .map(|x| x.max())
                .unwrap_or(f64::INFINITY)
        };
        if !(residual < opts.residual_tol) {
            // the master equation is solved but the roots are (nearly) coincident
            if let Ok(ev) =
                pair_sum(cfg, &r).map(|s| s + rat::to_f64(&(&x0 + &eigenvalue_shift(cfg))))
            {
                if ev.is_finite()
                    && !exceptional
                        .iter()
                        .any(|(e, _): &(C, _)| (e - ev).norm() < 1e-6 * (1.0 + ev.norm()))
                {
                    exceptional.push((ev, nearest(ev, 1e-3)));
                }
            }
            continue;
        }
        let Ok(ev) = eigenvalue_from_roots(cfg, &r, &x0) else {
            continue;
        };
        if solutions.iter().any(|s| same_root_set(&s.roots, &r, 1e-6)) {
            continue;
        }
        let matched = nearest(ev, opts.match_tol);
        solutions.push(BetheSolution {
            roots: r,
            residual,
            eigenvalue: ev,
            matched,
        });
    }
    solutions.sort_by(|x, y| x.eigenvalue.re.total_cmp(&y.eigenvalue.re));
    Ok(SolveReport {
        config: *cfg,
        spectrum: spec,
        solutions,
        exceptional,
    })
}

fn same_set(a: &[C], b: &[C], tol: f64) -> bool {
    let mut used = vec![false; b.len()];
    a.len() == b.len()
        && a.iter().all(|x| {
            match (0..b.len()).find(|&j| !used[j] && (x - b[j]).norm() < tol * (1.0 + x.norm())) {
                Some(j) => {
                    used[j] = true;
                    true
                }
                None => false,
            }
        })
}

fn same_root_set(a: &BetheRoots, b: &BetheRoots, tol: f64) -> bool {
    same_set(&a.nu, &b.nu, tol) && same_set(&a.lambda, &b.lambda, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tridiag::Example;

    fn cfg(a: [i64; 6]) -> BetheConfig {
        BetheConfig::from_params(ParamSet::from_array(a)).unwrap()
    }

    #[test]
    fn jacobi_low_degrees() {
        let (a, b) = (qf(3, 2), q(-2));
        assert_eq!(jacobi_monic(0, &a, &b).unwrap(), Poly::one());
        let p1 = jacobi_monic(1, &a, &b).unwrap();
        assert_eq!(p1.coeff(0), -(&b + Q::one()) / (&a + &b + q(2)));
        let p3 = jacobi_p(3, &a, &b);
        assert_eq!(p3.monic(), jacobi_monic(3, &a, &b).unwrap());
    }

    #[test]
    fn example2_residuals() {
        let c = cfg([2, 2, 2, 2, 2, 2]);
        let x0 = xsca(c.params).unwrap();
        let mut vals = vec![];
        for r in example_roots(Example::Two { p: 1, q: 1 }).unwrap() {
            assert!(bethe_residual(&c, &r).unwrap().max() < 1e-12);
            vals.push(eigenvalue_from_roots(&c, &r, &x0).unwrap().re);
        }
        vals.sort_by(f64::total_cmp);
        let e = 1.5 * 5f64.sqrt();
        assert!(
            (vals[0] + e).abs() < 1e-10 && (vals[1] - e).abs() < 1e-10,
            "{vals:?}"
        );
    }

    #[test]
    fn empty_and_pole() {
        let c = cfg([1, 1, 1, 1, 1, 1]);
        assert!(bethe_residual(&c, &BetheRoots::default()).unwrap().max() == 0.0);
        let c = cfg([2, 2, 2, 2, 2, 2]);
        let r = BetheRoots::real(&[0.0], &[-2.0]);
        assert_eq!(bethe_residual(&c, &r), Err(Error::PoleHit));
    }

    #[test]
    fn example3_exact() {
        let (r0, r1) = example3_master_remainder(3, 2, 2).unwrap();
        assert!(r0.is_zero() && r1.is_zero());
    }

    #[test]
    fn solve_small() {
        let c = cfg([2, 3, 2, 3, 3, 2]);
        let rep = numeric_solve(&c, &SolveOptions::default()).unwrap();
        assert!(rep.complete(), "{rep:?}");
        assert_eq!(rep.unmatched(), 0);
    }
}
