//! Hahn matrices and the Heun–Hahn form of `X` and `Y`.

use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::rat::{q, qf, Q};
use crate::tridiag::{Tridiagonal, XiParams};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

/// η1..η6 with η6 = 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EtaParams {
    pub eta: [Q; 6],
}

impl EtaParams {
    pub fn eta_a(&self) -> Q {
        self.eta[0].clone().min(self.eta[1].clone())
    }

    pub fn eta_b(&self) -> Q {
        self.eta[4].clone().max(self.eta[5].clone())
    }

    /// ξ substituted for η. `X` and `Y` are symmetric in `{ξ1,ξ2,ξ3}` and in
    /// `{ξ4,ξ5}`, so the values are reordered to put the minimum of the
    /// first three among η1, η2 and the maximum of the last three among η5, η6
    /// (the only slots the Hahn matrices see).
    pub fn from_xi(xi: &XiParams) -> EtaParams {
        let mut x = xi.xi;
        if x[0] != xi.xi_a && x[1] != xi.xi_a {
            x.swap(1, 2);
        }
        if x[4] != xi.xi_b && x[5] != xi.xi_b {
            x.swap(3, 4);
        }
        EtaParams { eta: x.map(q) }
    }

    /// The identity substitution η_i = ξ_i with no reordering.
    pub fn identity_from_xi(xi: &XiParams) -> EtaParams {
        EtaParams { eta: xi.xi.map(q) }
    }

    fn s(&self) -> Q {
        &self.eta[0] + &self.eta[1] + &self.eta[4] + &self.eta[5]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HahnStructure {
    pub a2: Q,
    pub a3: Q,
}

pub fn hahn_structure(e: &EtaParams) -> HahnStructure {
    let [e1, e2, _, _, e5, e6] = &e.eta;
    let s = e.s();
    let a2 = qf(1, 2) * (q(1) - e1 * e1 - e2 * e2 - e5 * e5 - e6 * e6) + qf(1, 8) * &s * &s;
    let d1 = e1 - e2;
    let d2 = e5 - e6;
    let a3 = qf(-1, 4) * (e1 + e2 - e5 - e6) * (&d1 * &d1 - &d2 * &d2);
    HahnStructure { a2, a3 }
}

/// `α_{j,j+1}`, `α_{j+1,j}` and the constant shift of `α_{jj}`.
fn alphas(e: &EtaParams) -> (impl Fn(i64) -> Q + '_, impl Fn(i64) -> Q + '_, Q) {
    let eb = e.eta_b();
    let eb2 = eb.clone();
    let up = move |j: i64| -((q(j) + &eb - &e.eta[0]) * (q(j) + &eb - &e.eta[1]));
    let lo = move |j: i64| -((q(j) + &eb2 - &e.eta[4]) * (q(j) + &eb2 - &e.eta[5]));
    let t = &e.eta[0] + &e.eta[1] - &e.eta[4] - &e.eta[5];
    let c = qf(1, 4) * &t * (&t - q(2));
    (up, lo, c)
}

pub fn hahn_matrices_eta(e: &EtaParams) -> Result<(Mat, Tridiagonal)> {
    let n_q = e.eta_a() - e.eta_b();
    if !n_q.is_integer() || n_q < q(1) {
        return Err(Error::EmptyWindow);
    }
    let n: i64 = n_q
        .to_integer()
        .try_into()
        .map_err(|_| Error::EmptyWindow)?;
    let shift = (e.s() - q(2)) / q(4) - e.eta_b();
    let mut h1 = Mat::zeros(n as usize, n as usize);
    for i in 0..n {
        h1.set(i as usize, i as usize, q(-i) + &shift);
    }
    let (up, lo, c) = alphas(e);
    let mut diag = vec![];
    let mut sup = vec![];
    let mut sub = vec![];
    for j in 1..=n {
        let left = if j > 1 { lo(j - 1) } else { Q::zero() };
        let right = if j < n { up(j) } else { Q::zero() };
        diag.push(left + right + &c);
        if j < n {
            sup.push(up(j));
            sub.push(lo(j));
        }
    }
    Ok((h1, Tridiagonal::new(diag, sup, sub)))
}

pub fn hahn_matrices(xi: &XiParams) -> Result<(Mat, Tridiagonal)> {
    hahn_matrices_eta(&EtaParams::from_xi(xi))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZCoefficients {
    pub z: [Q; 13],
}

impl ZCoefficients {
    pub fn zero() -> Self {
        ZCoefficients {
            z: Default::default(),
        }
    }
}

/// Which reading of the constant term of `Y` to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Z5Reading {
    /// `-(Σξ²)²/48` as printed; off from `Y` by `(Σξ²)²/24`.
    AsPrinted,
    /// `+(Σξ²)²/48`, which reproduces `Y` exactly.
    Corrected,
}

pub fn z_coefficients(xi: &XiParams) -> ZCoefficients {
    z_coefficients_with(xi, Z5Reading::Corrected)
}

pub fn z_coefficients_with(xi: &XiParams, reading: Z5Reading) -> ZCoefficients {
    let e = EtaParams::from_xi(xi);
    z_from_eta(&e, &q(xi.lambda), reading)
}

pub fn z_from_eta(e: &EtaParams, lambda: &Q, reading: Z5Reading) -> ZCoefficients {
    let x = &e.eta;
    let l = lambda;
    let HahnStructure { a2, a3 } = hahn_structure(e);
    let s = e.s();
    let half = qf(1, 2);
    let z2 = (&x[2] + &x[3]) / q(2) - &s / q(4);
    let z3 = (&x[2] - &x[3]) / q(2);
    let l2 = l * l;
    let z3s = &z3 * &z3;
    let z1 = &z3s - &l2 / q(4);
    let z4 = half.clone();
    let z0 = &a3 / q(4) - &z2 / q(3) * (&l2 / q(4) + &z3s - q(2) * &z2 * &z2 / q(9) - &a2 - &half);
    let sq: Q = [0, 1, 4, 5].iter().map(|&i| &x[i] * &x[i]).sum();
    let quart: Q = [0, 1, 4, 5]
        .iter()
        .map(|&i| crate::rat::pow(&x[i], 4))
        .sum();
    let lz = l - q(2) * &z3;
    let w = &l2 - q(4) - q(4) * &z3s;
    let sq_term = match reading {
        Z5Reading::AsPrinted => -(&sq * &sq),
        Z5Reading::Corrected => &sq * &sq,
    };
    let z5 = &z3 * (&a2 * l + &z3) / q(3)
        - &z2 * &a3 / q(3)
        - &a2 * (&lz + q(4)) * (&lz + q(2)) / q(24)
        - &w * &w / q(192)
        - &a3 * &s / q(8)
        + (-(q(2) * &a2 - q(1)) * &s * &s + sq_term) / q(48)
        - quart / q(12);
    let z6 = (q(4) * &z3s - &l2) * &z2 / q(6) - &a3 / q(2);
    let z7 = (l + q(1)) * (q(2) * &z3 - q(1)) / q(4) - &z2 * &z2 / q(3);
    let z8 = (q(3) * l - q(2) * &z3) * &z2 / q(6);
    let z9 = q(-2) * &z2 / q(3);
    let z10 = (q(2) * &z3 - l) * (l + q(2) - q(2) * &z3) / q(4);
    let z11 = l / q(2) - &z3;
    let z12 = &z3 - l / q(2) - q(1);
    ZCoefficients {
        z: [z0, z1, z2, z3, z4, z5, z6, z7, z8, z9, z10, z11, z12],
    }
}

pub fn heun_hahn_compose(h1: &Mat, h2: &Mat, z: &ZCoefficients) -> Result<(Mat, Mat)> {
    if !h1.is_square() || !h2.is_square() || h1.rows != h2.rows {
        return Err(Error::DimensionMismatch(h1.rows, h2.rows));
    }
    let n = h1.rows;
    let z = &z.z;
    let h3 = h1.commutator(h2);
    let anti = h1.anticommutator(h2);
    let id = Mat::identity(n);
    let h11 = h1 * h1;
    let x = [
        id.scale(&z[0]),
        h1.scale(&z[1]),
        h2.scale(&z[2]),
        h3.scale(&z[3]),
        anti.scale(&z[4]),
    ]
    .into_iter()
    .fold(Mat::zeros(n, n), |a, b| a + b);
    let y = [
        id.scale(&z[5]),
        h1.scale(&z[6]),
        h2.scale(&z[7]),
        h3.scale(&z[8]),
        anti.scale(&z[9]),
        h11.scale(&z[10]),
        (&h11 * h2).scale(&z[11]),
        (&(h1 * h2) * h1).scale(&z[12]),
    ]
    .into_iter()
    .fold(Mat::zeros(n, n), |a, b| a + b);
    Ok((x, y))
}

/// `X` and `Y` rebuilt from the Hahn pair.
pub fn heun_hahn_xy(xi: &XiParams) -> Result<(Mat, Mat)> {
    let (h1, h2) = hahn_matrices(xi)?;
    heun_hahn_compose(&h1, &h2.to_mat(), &z_coefficients(xi))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HahnDefects {
    /// `[H3,H2] - 2{H1,H2} - A3`
    pub h3h2: Q,
    /// `[H1,H3] - 2H1² - H2 - A2`
    pub h1h3: Q,
}

impl HahnDefects {
    pub fn all_zero(&self) -> bool {
        self.h3h2.is_zero() && self.h1h3.is_zero()
    }
}

pub fn hahn_algebra_check(h1: &Mat, h2: &Mat, e: &EtaParams) -> Result<HahnDefects> {
    if h1.rows != h2.rows {
        return Err(Error::DimensionMismatch(h1.rows, h2.rows));
    }
    let HahnStructure { a2, a3 } = hahn_structure(e);
    let id = Mat::identity(h1.rows);
    let h3 = h1.commutator(h2);
    let r1 = &(&h3.commutator(h2) - &h1.anticommutator(h2).scale(&q(2))) - &id.scale(&a3);
    let r2 = &(&(&h1.commutator(&h3) - &(h1 * h1).scale(&q(2))) - h2) - &id.scale(&a2);
    Ok(HahnDefects {
        h3h2: r1.max_abs(),
        h1h3: r2.max_abs(),
    })
}

/// Off-diagonal entries of the composed `X` predicted from `α`:
/// `(z2 + z3 - (2i-1)z4)α_{i,i+1}` and `(z2 - z3 - (2i-1)z4)α_{i+1,i}`.
pub fn predicted_off_diagonals(xi: &XiParams) -> Result<(Vec<Q>, Vec<Q>)> {
    let e = EtaParams::from_xi(xi);
    let (_, h2) = hahn_matrices_eta(&e)?;
    let z = z_coefficients(xi).z;
    let n = h2.dim();
    let mut up = vec![];
    let mut lo = vec![];
    for i in 1..n {
        let k = q(2 * i as i64 - 1) * &z[4];
        up.push((&z[2] + &z[3] - &k) * &h2.sup[i - 1]);
        lo.push((&z[2] - &z[3] - &k) * &h2.sub[i - 1]);
    }
    Ok((up, lo))
}

pub fn max_abs(x: &Q) -> Q {
    x.abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tridiag::{build_x, build_y, xi_params};
    use crate::ParamSet;

    const TWOS: ParamSet = ParamSet {
        m1: 2,
        m2: 2,
        mp1: 2,
        mp2: 2,
        mpp1: 2,
        mpp2: 2,
    };

    #[test]
    fn hahn_pair_at_twos() {
        let xi = xi_params(TWOS).unwrap();
        let (h1, h2) = hahn_matrices(&xi).unwrap();
        assert_eq!(
            h1,
            Mat::from_rows(vec![vec![qf(1, 2), q(0)], vec![q(0), qf(-1, 2)]])
        );
        assert_eq!(h2.to_mat(), Mat::from_ints(&[&[1, -1], &[-1, 1]]));
    }

    #[test]
    fn z_at_twos() {
        let xi = xi_params(TWOS).unwrap();
        let z = z_coefficients(&xi).z;
        assert_eq!(z[4], qf(1, 2));
        assert_eq!(z[3], q(1));
        assert_eq!(z[2], q(0));
        assert_eq!(z[1], q(-8));
        assert_eq!(z[0], q(0));
        let hs = hahn_structure(&EtaParams::from_xi(&xi));
        assert_eq!(
            hs,
            HahnStructure {
                a2: qf(-3, 2),
                a3: q(0)
            }
        );
    }

    #[test]
    fn compose_at_twos() {
        let xi = xi_params(TWOS).unwrap();
        let (x, y) = heun_hahn_xy(&xi).unwrap();
        assert_eq!(x, build_x(TWOS).unwrap().to_mat());
        assert_eq!(y, build_y(TWOS).unwrap().to_mat());
        let z0 = ZCoefficients::zero();
        let (h1, h2) = hahn_matrices(&xi).unwrap();
        assert!(heun_hahn_compose(&h1, &h2.to_mat(), &z0)
            .unwrap()
            .0
            .is_zero());
    }

    #[test]
    fn printed_z5_is_off_by_a_scalar() {
        let xi = xi_params(TWOS).unwrap();
        let (h1, h2) = hahn_matrices(&xi).unwrap();
        let z = z_coefficients_with(&xi, Z5Reading::AsPrinted);
        let (_, y) = heun_hahn_compose(&h1, &h2.to_mat(), &z).unwrap();
        let diff = &build_y(TWOS).unwrap().to_mat() - &y;
        // (2² + 2² + 0²)² / 24
        assert_eq!(diff, Mat::scalar(2, &qf(64, 24)));
    }

    #[test]
    fn one_by_one_h2() {
        let e = EtaParams {
            eta: [q(3), q(1), q(5), q(0), q(0), q(0)],
        };
        let (_, h2) = hahn_matrices_eta(&e).unwrap();
        assert_eq!(
            h2.to_mat(),
            Mat::from_rows(vec![vec![qf(1, 4) * q(4) * q(2)]])
        );
        let e = EtaParams {
            eta: [q(1), q(1), q(5), q(0), q(1), q(0)],
        };
        assert_eq!(hahn_matrices_eta(&e).err(), Some(Error::EmptyWindow));
    }

    #[test]
    fn algebra_at_twos() {
        let xi = xi_params(TWOS).unwrap();
        let e = EtaParams::from_xi(&xi);
        let (h1, h2) = hahn_matrices_eta(&e).unwrap();
        assert!(hahn_algebra_check(&h1, &h2.to_mat(), &e)
            .unwrap()
            .all_zero());
    }
}
