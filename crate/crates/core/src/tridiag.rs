//! The tridiagonal missing-label operators `X_m`, `Y_m`, their characteristic
//! polynomials and spectra.

use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::poly::{self, Poly};
use crate::rat::{self, q, qf, Q};
use crate::weights::{self, casimir_values, derive_ln, HighestWeightPair, ParamSet};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Branch {
    /// `ℓ ≤ n` (also used at `ℓ = n`)
    LLeN,
    /// `n < ℓ`
    NLtL,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XiParams {
    pub xi: [i64; 6],
    pub xi_a: i64,
    pub xi_b: i64,
    pub lambda: i64,
    pub lambda_plus: Q,
    pub lambda_minus: Q,
    pub branch: Branch,
}

impl XiParams {
    pub fn dim(&self) -> i64 {
        self.xi_a - self.xi_b
    }

    pub fn sum(&self) -> i64 {
        self.xi.iter().sum()
    }
}

pub fn xi_params(p: ParamSet) -> Result<XiParams> {
    let ln = derive_ln(p)?;
    let (l, n) = (ln.l, ln.n);
    let (first, branch) = if l <= n {
        ([l, p.m2, p.mp1 + l - n], Branch::LLeN)
    } else {
        ([n, p.mp1, p.m2 + n - l], Branch::NLtL)
    };
    let xi = [first[0], first[1], first[2], l - p.mp2, n - p.m1, 0];
    Ok(xi_from_values(xi, (l - n).abs(), branch))
}

/// Build the derived quantities from six ξ values and `|ℓ - n|`.
pub fn xi_from_values(xi: [i64; 6], abs_l_minus_n: i64, branch: Branch) -> XiParams {
    let xi_a = xi[..3].iter().copied().min().unwrap();
    let xi_b = xi[3..].iter().copied().max().unwrap();
    let lambda = xi[0] + xi[1] + xi[2] - xi[3] - xi[4] - xi[5] + 2 * abs_l_minus_n;
    let s: i64 = xi.iter().sum();
    let half = qf(lambda, 2);
    let sixth = qf(s, 6);
    XiParams {
        xi,
        xi_a,
        xi_b,
        lambda,
        lambda_plus: &sixth + &half,
        lambda_minus: &sixth - &half,
        branch,
    }
}

/// Power sums `E_k = Σ t_i^k` of six shifted values.
fn power_sums(t: &[Q; 6]) -> [Q; 5] {
    let mut e: [Q; 5] = Default::default();
    for x in t {
        let mut pw = Q::from_integer(1.into());
        for slot in e.iter_mut() {
            *slot += &pw;
            pw *= x;
        }
    }
    e
}

/// Diagonal entry of `X` from the six shifted values `t_i` and `Λ`.
pub fn x_diag_from_shifts(t: &[Q; 6], lambda: &Q) -> Q {
    let e = power_sums(t);
    let (e1, e2, e3) = (&e[1], &e[2], &e[3]);
    let cube = qf(7, 2) * e1 * e1 * e1 - q(18) * e1 * e2 + q(18) * e3;
    -(cube / q(108)) - e1 * (lambda * lambda + q(2)) / q(24)
}

/// Diagonal entry of `Y` from the six shifted values `t_i` and `Λ`.
pub fn y_diag_from_shifts(t: &[Q; 6], lambda: &Q) -> Q {
    let e = power_sums(t);
    let (e1, e2, e3, e4) = (&e[1], &e[2], &e[3], &e[4]);
    let l2 = lambda * lambda;
    let e1sq = e1 * e1;
    let s = qf(5, 2) * &e1sq * &e1sq
        + q(32) * e1 * e3
        + q(6) * (e2 * e2 - q(3) * &e1sq * e2 - q(4) * e4)
        + q(6) * e2 * (&l2 + q(2))
        - q(3) * &e1sq * (&l2 - q(2))
        - qf(3, 2) * &l2 * &l2
        + q(6) * &l2
        - q(36);
    s / q(288)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tridiagonal {
    pub diag: Vec<Q>,
    pub sup: Vec<Q>,
    pub sub: Vec<Q>,
}

impl Tridiagonal {
    pub fn new(diag: Vec<Q>, sup: Vec<Q>, sub: Vec<Q>) -> Self {
        assert_eq!(sup.len() + 1, diag.len().max(1));
        assert_eq!(sub.len(), sup.len());
        Tridiagonal { diag, sup, sub }
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn to_mat(&self) -> Mat {
        let n = self.dim();
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, self.diag[i].clone());
        }
        for i in 0..n.saturating_sub(1) {
            m.set(i, i + 1, self.sup[i].clone());
            m.set(i + 1, i, self.sub[i].clone());
        }
        m
    }

    /// Reads a tridiagonal matrix off a dense one (entries outside the band are ignored).
    pub fn from_mat(m: &Mat) -> Self {
        let n = m.rows;
        Tridiagonal {
            diag: (0..n).map(|i| m.get(i, i).clone()).collect(),
            sup: (0..n.saturating_sub(1))
                .map(|i| m.get(i, i + 1).clone())
                .collect(),
            sub: (0..n.saturating_sub(1))
                .map(|i| m.get(i + 1, i).clone())
                .collect(),
        }
    }

    /// `super_j · sub_j`, the diagonal-similarity invariants of the off-diagonal band.
    pub fn products(&self) -> Vec<Q> {
        self.sup.iter().zip(&self.sub).map(|(a, b)| a * b).collect()
    }

    pub fn negate(&self) -> Self {
        Tridiagonal {
            diag: self.diag.iter().map(|x| -x).collect(),
            sup: self.sup.iter().map(|x| -x).collect(),
            sub: self.sub.iter().map(|x| -x).collect(),
        }
    }

    /// Index-reversed copy (conjugation by the antidiagonal permutation).
    pub fn reversed(&self) -> Self {
        Tridiagonal {
            diag: self.diag.iter().rev().cloned().collect(),
            sup: self.sub.iter().rev().cloned().collect(),
            sub: self.sup.iter().rev().cloned().collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Tridiagonal {
            diag: self.diag.clone(),
            sup: self.sub.clone(),
            sub: self.sup.clone(),
        }
    }

    pub fn trace(&self) -> Q {
        self.diag.iter().sum()
    }

    /// Same diagonal and same off-diagonal products: the two matrices are
    /// conjugate by a diagonal matrix when no product vanishes.
    pub fn diagonally_similar(&self, o: &Tridiagonal) -> bool {
        self.diag == o.diag && self.products() == o.products()
    }
}

fn require_physical(p: ParamSet) -> Result<XiParams> {
    if weights::multiplicity(p) == 0 {
        return Err(Error::NotPhysical);
    }
    let xi = xi_params(p)?;
    debug_assert_eq!(xi.dim(), weights::multiplicity(p) as i64);
    Ok(xi)
}

fn shifts(xi: &XiParams, j: i64) -> [Q; 6] {
    xi.xi.map(|x| q(x - j - xi.xi_b) + qf(1, 2))
}

fn off_diagonals(xi: &XiParams) -> (Vec<Q>, Vec<Q>) {
    let d = xi.dim();
    let mut sup = vec![];
    let mut sub = vec![];
    for j in 1..d {
        let s = j + xi.xi_b;
        sup.push(q((s - xi.xi[0]) * (s - xi.xi[1]) * (s - xi.xi[2])));
        sub.push(q((s - xi.xi[3]) * (s - xi.xi[4]) * (s - xi.xi[5])));
    }
    (sup, sub)
}

pub fn build_x_from_xi(xi: &XiParams) -> Tridiagonal {
    let lam = q(xi.lambda);
    let diag = (1..=xi.dim())
        .map(|j| x_diag_from_shifts(&shifts(xi, j), &lam))
        .collect();
    let (sup, sub) = off_diagonals(xi);
    Tridiagonal::new(diag, sup, sub)
}

pub fn build_y_from_xi(xi: &XiParams) -> Tridiagonal {
    let lam = q(xi.lambda);
    let diag = (1..=xi.dim())
        .map(|j| y_diag_from_shifts(&shifts(xi, j), &lam))
        .collect();
    let (a_sup, a_sub) = off_diagonals(xi);
    let sup = a_sup
        .iter()
        .enumerate()
        .map(|(k, a)| a * (q(k as i64 + 1 + xi.xi_b) - &xi.lambda_minus))
        .collect();
    let sub = a_sub
        .iter()
        .enumerate()
        .map(|(k, a)| a * (q(k as i64 + 1 + xi.xi_b) - &xi.lambda_plus))
        .collect();
    Tridiagonal::new(diag, sup, sub)
}

pub fn build_x(p: ParamSet) -> Result<Tridiagonal> {
    Ok(build_x_from_xi(&require_physical(p)?))
}

pub fn build_y(p: ParamSet) -> Result<Tridiagonal> {
    Ok(build_y_from_xi(&require_physical(p)?))
}

/// Monic characteristic polynomial by the three-term recurrence.
pub fn char_poly(t: &Tridiagonal) -> Poly {
    let x = Poly::from_ints(&[0, 1]);
    let mut prev = Poly::one();
    let mut cur = Poly::one();
    for k in 0..t.dim() {
        let lin = &x - &Poly::constant(t.diag[k].clone());
        let next = if k == 0 {
            lin
        } else {
            let c = &t.sup[k - 1] * &t.sub[k - 1];
            &(&lin * &cur) - &prev.scale(&c)
        };
        prev = cur;
        cur = next;
    }
    cur
}

pub const DEFAULT_TOL: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub values: Vec<f64>,
    /// Exact value when the eigenvalue is rational.
    #[serde(skip)]
    pub exact: Vec<Option<Q>>,
    pub tolerance: f64,
}

pub fn spectrum_of_poly(p: &Poly, tol: f64) -> Result<Spectrum> {
    let deg = p.degree().unwrap_or(0);
    if deg == 0 {
        return Ok(Spectrum {
            values: vec![],
            exact: vec![],
            tolerance: tol,
        });
    }
    let roots = poly::real_roots(p, tol);
    if roots.len() != deg || roots.iter().any(|r| r.width() > tol) {
        return Err(Error::ToleranceNotMet(tol));
    }
    Ok(Spectrum {
        values: roots.iter().map(|r| r.value()).collect(),
        exact: roots.into_iter().map(|r| r.exact).collect(),
        tolerance: tol,
    })
}

/// Sorted eigenvalues. The characteristic polynomial is exact, so roots are
/// isolated by a Sturm chain over the rationals whatever the sign of the
/// off-diagonal products.
pub fn spectrum(t: &Tridiagonal, tol: f64) -> Result<Spectrum> {
    spectrum_of_poly(&char_poly(t), tol)
}

/// `(a + 2b)(2a + b)(a - b) / 9`
fn lval(a: i64, b: i64) -> Q {
    casimir_values(HighestWeightPair::new(a, b)).1
}

fn xsca_common(p: ParamSet) -> Result<(Q, Q)> {
    let n = derive_ln(p)?.n;
    let (m1, m2, a1, a2) = (p.m1, p.m2, p.mp1, p.mp2);
    let head = (lval(m1, m2) - lval(a1, a2)
        + lval(p.mpp1, p.mpp2)
        + q((n - 1) * (2 * a1 + 4 * a2 - 3) * (m1 + a1 - n) - m1 + m2 - a1 + a2))
        / q(6)
        - qf(a1 * a2 * (3 * m1 - 3 * m2 + a1 - a2), 27)
        - qf((m1 + m2) * (2 * a1 - 1 + 2 * a2) * (a1 - a2), 12);
    let tail = (qf(a1 - a2, 27) + qf(m1 - m2, 36)) * q((a1 + a2) * (2 * a1 + 2 * a2 - 9));
    Ok((head, tail))
}

/// Scalar value of `X` when `ℓ = 1`. The last cubic term enters with a minus
/// sign; with a plus sign the formula disagrees with the `1×1` diagonal entry.
pub fn xsca(p: ParamSet) -> Result<Q> {
    let (head, tail) = xsca_common(p)?;
    Ok(head - tail)
}

/// The same expression with the last term added, kept for comparison.
pub fn xsca_plus_reading(p: ParamSet) -> Result<Q> {
    let (head, tail) = xsca_common(p)?;
    Ok(head + tail)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Example {
    /// `d = ℓ = 1`
    One(ParamSet),
    /// `[2,2] ⊗ [p+1,q+1] ∋ [p+1,q+1]`
    Two { p: i64, q: i64 },
    /// `[2,p+1] ⊗ [2,q+1] ∋ [L,p+q-2L+4]`
    Three { l: i64, p: i64, q: i64 },
}

/// Closed-form eigenvalues `center ± sqrt(disc)` (or a single scalar).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosedForm {
    Scalar(Q),
    Pair { center: Q, disc: Q },
}

impl ClosedForm {
    pub fn values(&self) -> Vec<f64> {
        match self {
            ClosedForm::Scalar(x) => vec![rat::to_f64(x)],
            ClosedForm::Pair { center, disc } => {
                let c = rat::to_f64(center);
                let s = rat::to_f64(disc).sqrt();
                vec![c - s, c + s]
            }
        }
    }

    /// The monic polynomial with these roots.
    pub fn char_poly(&self) -> Poly {
        match self {
            ClosedForm::Scalar(x) => Poly::linear_root(x),
            ClosedForm::Pair { center, disc } => {
                Poly::new(vec![center * center - disc, -(q(2) * center), q(1)])
            }
        }
    }
}

impl Example {
    pub fn params(&self) -> ParamSet {
        match *self {
            Example::One(p) => p,
            Example::Two { p, q } => ParamSet::new(2, 2, p + 1, q + 1, p + 1, q + 1),
            Example::Three { l, p, q } => ParamSet::new(2, p + 1, 2, q + 1, l, p + q - 2 * l + 4),
        }
    }
}

pub fn example2_alpha(p: i64, qq: i64) -> Q {
    -qf((p - qq) * (3 + 2 * p + qq) * (3 + p + 2 * qq), 27)
}

pub fn example2_disc(p: i64, qq: i64) -> Q {
    let s = q(p + qq) + qf(3, 2);
    &s * &s - q(p * qq)
}

/// Center of the Example-3 pair with the sign that makes `L = 2` agree with Example 2.
pub fn example3_center(l: i64, p: i64, qq: i64) -> Q {
    -example3_center_as_printed(l, p, qq)
}

pub fn example3_center_as_printed(l: i64, p: i64, qq: i64) -> Q {
    qf(
        (p - qq)
            * (54 + 36 * p + 36 * qq + 4 * p * p + 4 * qq * qq + 10 * p * qq - 36 * l + 9 * l * l
                - 9 * l * p
                - 9 * l * qq),
        54,
    )
}

pub fn example3_disc(l: i64, p: i64, qq: i64) -> Q {
    let a = q(1 - 4 * l + l * l - l * p - l * qq);
    &a * &a / q(4) - q((2 - l + qq) * (2 - l + p))
}

pub fn closed_form_examples(e: Example) -> Result<ClosedForm> {
    match e {
        Example::One(p) => {
            let ln = derive_ln(p)?;
            if ln.l != 1 || weights::multiplicity(p) != 1 {
                return Err(Error::OutOfRange("Example 1 needs d = l = 1".into()));
            }
            Ok(ClosedForm::Scalar(xsca(p)?))
        }
        Example::Two { p, q } => {
            if p < 1 || q < 1 {
                return Err(Error::OutOfRange("Example 2 needs p, q >= 1".into()));
            }
            Ok(ClosedForm::Pair {
                center: example2_alpha(p, q),
                disc: example2_disc(p, q),
            })
        }
        Example::Three { l, p, q } => {
            if !(2 <= l && l <= p + 1 && p <= q) {
                return Err(Error::OutOfRange(
                    "Example 3 needs 2 <= L <= p+1 <= q+1".into(),
                ));
            }
            Ok(ClosedForm::Pair {
                center: example3_center(l, p, q),
                disc: example3_disc(l, p, q),
            })
        }
    }
}

/// Eigenvalues of `Y` in Example 2: `-3/4` and the second closed-form value.
pub fn example2_y_eigenvalues(p: i64, qq: i64) -> [Q; 2] {
    [
        qf(-3, 4),
        -qf(
            9 + 24 * p + 24 * qq + 8 * p * p + 8 * qq * qq + 8 * p * qq,
            12,
        ),
    ]
}

/// Check a spectrum against exact values, comparing floats within `tol`.
pub fn matches_values(s: &Spectrum, expected: &[f64], tol: f64) -> bool {
    let mut e = expected.to_vec();
    e.sort_by(|a, b| a.partial_cmp(b).unwrap());
    s.values.len() == e.len() && s.values.iter().zip(&e).all(|(a, b)| (a - b).abs() < tol)
}

pub fn is_strictly_increasing(s: &Spectrum) -> bool {
    s.values.windows(2).all(|w| w[0] < w[1])
}

/// Every off-diagonal product is nonzero.
pub fn off_diagonal_nonzero(t: &Tridiagonal) -> bool {
    t.products().iter().all(|x| !x.is_zero())
}

/// Every off-diagonal product is positive (the symmetrizable case).
pub fn symmetrizable(t: &Tridiagonal) -> bool {
    t.products().iter().all(|x| x.is_positive())
}
