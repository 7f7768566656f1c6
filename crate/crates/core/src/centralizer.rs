//! Structure constants of the centraliser algebra from W(E6)-invariant
//! polynomials, and exact checks of its defining relations.

use crate::e6::{root_forms3, root_value3, weyl_group, WEYL_ORDER};
use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::rat::{q, qf, Q};
use crate::weights::ParamSet;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantValues {
    pub p2: Q,
    pub p5: Q,
    pub p6: Q,
    pub p8: Q,
    pub p9: Q,
    pub p12: Q,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureConstants {
    pub a2: Q,
    pub a5: Q,
    pub a6: Q,
    pub a8: Q,
    pub a9: Q,
    pub a12: Q,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct XCoefficients {
    pub x1: Q,
    pub x2: Q,
    pub x3: Q,
    pub x4: Q,
    pub x5: Q,
    pub x7: Q,
}

impl StructureConstants {
    pub fn zero() -> Self {
        StructureConstants {
            a2: Q::zero(),
            a5: Q::zero(),
            a6: Q::zero(),
            a8: Q::zero(),
            a9: Q::zero(),
            a12: Q::zero(),
        }
    }

    pub fn x(&self) -> XCoefficients {
        XCoefficients {
            x1: q(6) * &self.a5 + q(2) * &self.a9,
            x2: q(-2) * &self.a6 - q(2) * &self.a8,
            x3: q(6) * &self.a2 + &self.a6,
            x4: -self.a5.clone(),
            x5: q(8) * &self.a2 - q(24),
            x7: q(-2) * &self.a2 + q(12),
        }
    }

    pub fn as_array(&self) -> [Q; 6] {
        [
            self.a2.clone(),
            self.a5.clone(),
            self.a6.clone(),
            self.a8.clone(),
            self.a9.clone(),
            self.a12.clone(),
        ]
    }
}

/// Exponents of `(m1, m2, m'1, m'2, m''1, m''2)` in the averaged monomial
/// and its prefactor, for `p2, p5, p6, p8, p9, p12`.
const MONOMIALS: [([u32; 6], i64, i64); 6] = [
    ([2, 0, 0, 0, 0, 0], 3, 2),
    ([0, 0, 2, 1, 1, 1], 8, 3),
    ([1, 1, 1, 1, 1, 1], 10, 1),
    ([2, 1, 2, 1, 1, 1], 5, 3),
    ([2, 2, 2, 1, 1, 1], 40, 27),
    ([2, 2, 2, 2, 2, 2], 20, 3),
];

fn monomial_i128(v: &[i128; 6], e: &[u32; 6]) -> Option<i128> {
    let mut acc: i128 = 1;
    for i in 0..6 {
        for _ in 0..e[i] {
            acc = acc.checked_mul(v[i])?;
        }
    }
    Some(acc)
}

fn monomial_big(v: &[i128; 6], e: &[u32; 6]) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..6 {
        acc *= num_traits::pow(BigInt::from(v[i]), e[i] as usize);
    }
    acc
}

/// `Σ_{s∈W} Π (3·(s·m)_i)^{e_i}` for all six monomials at once.
fn weyl_sums(p: ParamSet) -> [BigInt; 6] {
    let pa = p.to_array();
    let vals3: Vec<i128> = root_forms3()
        .iter()
        .map(|f| root_value3(f, &pa) as i128)
        .collect();
    let g = weyl_group();
    let partial: Option<[i128; 6]> = g
        .param_images
        .par_chunks(1024)
        .map(|chunk| {
            let mut acc = [0i128; 6];
            for idx in chunk {
                let v = idx.map(|k| vals3[k as usize]);
                for (k, (e, _, _)) in MONOMIALS.iter().enumerate() {
                    acc[k] = acc[k].checked_add(monomial_i128(&v, e)?)?;
                }
            }
            Some(acc)
        })
        .try_reduce(
            || [0i128; 6],
            |a, b| {
                let mut c = [0i128; 6];
                for k in 0..6 {
                    c[k] = a[k].checked_add(b[k])?;
                }
                Some(c)
            },
        );
    if let Some(s) = partial {
        return s.map(BigInt::from);
    }
    g.param_images
        .par_chunks(1024)
        .map(|chunk| {
            let mut acc: [BigInt; 6] = Default::default();
            for idx in chunk {
                let v = idx.map(|k| vals3[k as usize]);
                for (k, (e, _, _)) in MONOMIALS.iter().enumerate() {
                    acc[k] += monomial_big(&v, e);
                }
            }
            acc
        })
        .reduce(Default::default, |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        })
}

/// The six invariants by averaging over W(E6).
pub fn invariant_values(p: ParamSet) -> InvariantValues {
    let sums = weyl_sums(p);
    let vals: Vec<Q> = sums
        .into_iter()
        .zip(MONOMIALS.iter())
        .map(|(s, (e, num, den))| {
            let deg: u32 = e.iter().sum();
            let denom =
                BigInt::from(WEYL_ORDER as i64) * num_traits::pow(BigInt::from(3), deg as usize);
            Q::new(s, denom) * qf(*num, *den)
        })
        .collect();
    InvariantValues {
        p2: vals[0].clone(),
        p5: vals[1].clone(),
        p6: vals[2].clone(),
        p8: vals[3].clone(),
        p9: vals[4].clone(),
        p12: vals[5].clone(),
    }
}

pub fn constants_from_invariants(v: &InvariantValues) -> StructureConstants {
    let (p2, p5, p6, p8, p9, p12) = (&v.p2, &v.p5, &v.p6, &v.p8, &v.p9, &v.p12);
    let pw = |x: &Q, k: i32| crate::rat::pow(x, k as u32);
    let c = |n: i64, d: i64| qf(n, d);
    let a2 = p2 - q(3);
    let a5 = -p5.clone();
    let a6 = p6 + pw(p2, 3) * c(1, 9) + pw(p2, 2) * c(2, 3) - p2 * c(3, 2) + q(1);
    let a8 = -p8.clone()
        + pw(p2, 4) * c(1, 54)
        + p2 * p6 * c(1, 12)
        + pw(p2, 3) * c(1, 18)
        + p6 * c(1, 2)
        + pw(p2, 2) * c(1, 6)
        - p2 * c(1, 4)
        + c(1, 8);
    let a9 = -p9.clone() - p5 * (pw(p2, 2) * c(1, 27) + p2 * c(1, 3) - c(1, 4));
    let a12 =
        -p12.clone() + pw(p6, 2) * c(35, 12) + pw(p2, 6) * c(1, 36) + pw(p2, 3) * p6 * c(17, 72)
            - pw(p2, 2) * p8 * c(1, 18)
            - p2 * pw(p5, 2) * c(7, 18)
            + pw(p2, 5) * c(1, 162)
            - p2 * p8 * c(1, 3)
            + pw(p2, 2) * p6 * c(1, 36)
            - pw(p5, 2) * c(1, 4)
            - pw(p2, 4) * c(13, 108)
            + p8 * c(13, 2)
            - p2 * p6 * c(13, 24)
            - pw(p2, 3) * c(19, 54)
            - p6 * q(3)
            - pw(p2, 2) * c(11, 12)
            + p2 * c(11, 8)
            - c(11, 16);
    StructureConstants {
        a2,
        a5,
        a6,
        a8,
        a9,
        a12,
    }
}

pub fn structure_constants(p: ParamSet) -> StructureConstants {
    constants_from_invariants(&invariant_values(p))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationDefects {
    /// `[X,Z] + 6Y² - a2X² - a5X - a8`
    pub xz: Q,
    /// `[Y,Z] + 2X³ + a2{X,Y} + a5Y - a6X - a9`
    pub yz: Q,
    /// the degree-12 relation
    pub special: Q,
    /// commutators of the special relation's left side with `X` and `Y`
    pub central: Q,
}

impl RelationDefects {
    pub fn all_zero(&self) -> bool {
        self.xz.is_zero() && self.yz.is_zero() && self.special.is_zero() && self.central.is_zero()
    }
}

struct Words {
    z: Mat,
    x2: Mat,
    y2: Mat,
    xy_anti: Mat,
    xyx: Mat,
    id: Mat,
}

fn words(x: &Mat, y: &Mat) -> Words {
    let xy = x * y;
    let yx = y * x;
    Words {
        z: &xy - &yx,
        x2: x * x,
        y2: y * y,
        xy_anti: &xy + &yx,
        xyx: &xy * x,
        id: Mat::identity(x.rows),
    }
}

fn special_lhs(x: &Mat, y: &Mat, w: &Words, c: &StructureConstants) -> Mat {
    let xc = c.x();
    let mut lhs = x.scale(&xc.x1);
    lhs = &lhs + &y.scale(&xc.x2);
    lhs = &lhs + &w.x2.scale(&xc.x3);
    lhs = &lhs + &w.xy_anti.scale(&xc.x4);
    lhs = &lhs + &w.y2.scale(&xc.x5);
    lhs = &lhs + &w.xyx.scale(&xc.x7);
    lhs = &lhs - &(&w.x2 * &w.x2);
    lhs = &lhs + &(&w.y2 * y).scale(&q(4));
    &lhs + &(&w.z * &w.z)
}

/// The three relation matrices (zero in a representation) and the left side of
/// the degree-12 relation.
pub struct RelationMatrices {
    pub xz: Mat,
    pub yz: Mat,
    pub special: Mat,
    pub special_lhs: Mat,
}

pub fn relation_matrices(x: &Mat, y: &Mat, c: &StructureConstants) -> Result<RelationMatrices> {
    if !x.is_square() || !y.is_square() || x.rows != y.rows {
        return Err(Error::DimensionMismatch(x.rows, y.rows));
    }
    let w = words(x, y);
    let xz = &(&x.commutator(&w.z) + &w.y2.scale(&q(6)))
        - &(&(&w.x2.scale(&c.a2) + &x.scale(&c.a5)) + &w.id.scale(&c.a8));
    let yz = &(&(&y.commutator(&w.z) + &(&w.x2 * x).scale(&q(2))) + &w.xy_anti.scale(&c.a2))
        + &(&(&y.scale(&c.a5) - &x.scale(&c.a6)) - &w.id.scale(&c.a9));
    let lhs = special_lhs(x, y, &w, c);
    let special = &lhs - &w.id.scale(&c.a12);
    Ok(RelationMatrices {
        xz,
        yz,
        special,
        special_lhs: lhs,
    })
}

pub fn verify_relations(x: &Mat, y: &Mat, c: &StructureConstants) -> Result<RelationDefects> {
    let r = relation_matrices(x, y, c)?;
    let central = r
        .special_lhs
        .commutator(x)
        .max_abs()
        .max(r.special_lhs.commutator(y).max_abs());
    Ok(RelationDefects {
        xz: r.xz.max_abs(),
        yz: r.yz.max_abs(),
        special: r.special.max_abs(),
        central,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FittedConstants {
    pub a2: Option<Q>,
    pub a5: Option<Q>,
    pub a6: Option<Q>,
    pub a8: Option<Q>,
    pub a9: Option<Q>,
    pub a12: Option<Q>,
    pub rank: usize,
    /// `false` when the relations admit no constants at all.
    pub consistent: bool,
}

impl FittedConstants {
    pub fn as_array(&self) -> [Option<Q>; 6] {
        [
            self.a2.clone(),
            self.a5.clone(),
            self.a6.clone(),
            self.a8.clone(),
            self.a9.clone(),
            self.a12.clone(),
        ]
    }

    /// Every determined constant equals the given one.
    pub fn agrees_with(&self, c: &StructureConstants) -> bool {
        self.consistent
            && self
                .as_array()
                .iter()
                .zip(c.as_array().iter())
                .all(|(f, v)| f.as_ref().is_none_or(|f| f == v))
    }
}

/// Solves the three relations, entry by entry, as a linear system in
/// `(a2, a5, a6, a8, a9, a12)`; the x-coefficients are linear in these.
/// Constants not pinned down by the representation are `None`.
pub fn fit_constants_from_rep(x: &Mat, y: &Mat) -> Result<FittedConstants> {
    if !x.is_square() || !y.is_square() || x.rows != y.rows {
        return Err(Error::DimensionMismatch(x.rows, y.rows));
    }
    let d = x.rows;
    if d < 2 {
        return Err(Error::Underdetermined);
    }
    let w = words(x, y);
    let o = Mat::zeros(d, d);
    let mut rows: Vec<Vec<Q>> = vec![];
    let mut push = |cols: [&Mat; 6], rhs: &Mat| {
        for i in 0..d {
            for j in 0..d {
                let mut r: Vec<Q> = cols.iter().map(|m| m.get(i, j).clone()).collect();
                r.push(rhs.get(i, j).clone());
                rows.push(r);
            }
        }
    };
    // [X,Z] + 6Y² = a2 X² + a5 X + a8
    let rb = &x.commutator(&w.z) + &w.y2.scale(&q(6));
    push([&w.x2, x, &o, &w.id, &o, &o], &rb);
    // [Y,Z] + 2X³ = -a2{X,Y} - a5 Y + a6 X + a9
    let rc = &y.commutator(&w.z) + &(&w.x2 * x).scale(&q(2));
    let nanti = -&w.xy_anti;
    let ny = -y;
    push([&nanti, &ny, x, &o, &w.id, &o], &rc);
    // special relation with the x_i expanded
    let c2 = &(&w.x2.scale(&q(6)) + &w.y2.scale(&q(8))) - &w.xyx.scale(&q(2));
    let c5 = &x.scale(&q(6)) - &w.xy_anti;
    let c6 = &w.x2 - &y.scale(&q(2));
    let c8 = y.scale(&q(-2));
    let c9 = x.scale(&q(2));
    let c12 = w.id.scale(&q(-1));
    let base = &(&(&(&w.y2.scale(&q(-24)) + &w.xyx.scale(&q(12))) - &(&w.x2 * &w.x2))
        + &(&w.y2 * y).scale(&q(4)))
        + &(&w.z * &w.z);
    push([&c2, &c5, &c6, &c8, &c9, &c12], &(-&base));
    let (sol, rank, consistent) = solve_determined(rows, 6);
    Ok(FittedConstants {
        a2: sol[0].clone(),
        a5: sol[1].clone(),
        a6: sol[2].clone(),
        a8: sol[3].clone(),
        a9: sol[4].clone(),
        a12: sol[5].clone(),
        rank,
        consistent,
    })
}

/// Row-reduces an augmented system; returns the unknowns fixed by it.
fn solve_determined(mut rows: Vec<Vec<Q>>, n: usize) -> (Vec<Option<Q>>, usize, bool) {
    let mut pivots = vec![];
    let mut r = 0;
    for col in 0..n {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pv = rows[r][col].clone();
        for v in rows[r].iter_mut() {
            *v /= &pv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                for k in 0..=n {
                    let t = &rows[r][k] * &f;
                    rows[i][k] -= t;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    let consistent = rows[r..].iter().all(|row| row[n].is_zero());
    let mut out = vec![None; n];
    for (i, &col) in pivots.iter().enumerate() {
        if (0..n).all(|k| k == col || rows[i][k].is_zero()) {
            out[col] = Some(rows[i][n].clone());
        }
    }
    (out, r, consistent)
}

/// Sign pattern of the constants under `m → -m`: odd-degree ones flip.
pub fn negated(c: &StructureConstants) -> StructureConstants {
    StructureConstants {
        a2: c.a2.clone(),
        a5: -c.a5.clone(),
        a6: c.a6.clone(),
        a8: c.a8.clone(),
        a9: -c.a9.clone(),
        a12: c.a12.clone(),
    }
}

pub fn max_defect(d: &RelationDefects) -> Q {
    [&d.xz, &d.yz, &d.special, &d.central]
        .into_iter()
        .map(|x| x.abs())
        .max()
        .unwrap()
}
