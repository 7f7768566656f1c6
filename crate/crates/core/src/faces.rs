//! 4-faces of the E6 root polytope and the infinite tridiagonal
//! representations they carry.
//!
//! A face is five roots with pairwise inner product 1, orthogonal to a unique
//! positive root `Λ`. Evaluating the roots at a parameter point gives integers
//! `ξ1..ξ5` (with `ξ6 = 0`), and from them a pair of tridiagonal matrices
//! indexed by `j ∈ ℤ`. Square blocks between consecutive sorted `ξ` values are
//! finite representations; one of them is the physical `(X_m, Y_m)`.

use crate::centralizer::{relation_matrices, structure_constants, StructureConstants};
use crate::e6::{
    format_root, generate_roots, inner, is_positive, minimal_word, parse_root, reflect, root_value,
    word_to_element, RootVector, THETA,
};
use crate::error::{Error, Result};
use crate::rat::{q, qf, Q};
use crate::tridiag::{x_diag_from_shifts, y_diag_from_shifts, Tridiagonal};
use crate::weights::{derive_ln, multiplicity, ParamSet};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashSet, VecDeque};

pub const CANONICAL_ROOTS: [&str; 5] = ["12345", "1234", "123", "12", "1"];

/// `Θ − α6`
pub const THETA_MINUS_A6: RootVector = [1, 2, 3, 2, 1, 1];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FourFace {
    /// In construction order: slot `i` is the image of `ξ_i`.
    pub roots: [RootVector; 5],
    pub orthogonal_root: RootVector,
    pub k: u8,
    pub sign: i8,
}

impl FourFace {
    /// Sorted root list, for comparing faces as sets.
    pub fn key(&self) -> [RootVector; 5] {
        let mut r = self.roots;
        r.sort();
        r
    }

    pub fn negate(&self) -> FourFace {
        FourFace {
            roots: self.roots.map(|r| r.map(|x| -x)),
            sign: -self.sign,
            ..*self
        }
    }

    pub fn label(&self) -> String {
        format!(
            "{}Xi[{},{}]",
            if self.sign < 0 { "-" } else { "" },
            format_root(&self.orthogonal_root),
            self.k
        )
    }

    /// Pairwise inner products all 1 and every root orthogonal to `Λ`.
    pub fn is_valid(&self) -> bool {
        let rs = generate_roots();
        self.roots
            .iter()
            .all(|r| rs.contains(r) && inner(r, &self.orthogonal_root) == 0)
            && (0..5).all(|i| (i + 1..5).all(|j| inner(&self.roots[i], &self.roots[j]) == 1))
    }
}

fn key_of(roots: &[RootVector; 5]) -> [RootVector; 5] {
    let mut r = *roots;
    r.sort();
    r
}

pub fn canonical_face() -> FourFace {
    FourFace {
        roots: CANONICAL_ROOTS.map(|s| parse_root(s).expect("canonical roots")),
        orthogonal_root: THETA,
        k: 0,
        sign: 1,
    }
}

/// `±Ξ_{Λ,k}`.
pub fn face(lambda: &RootVector, k: u8, sign: i8) -> Result<FourFace> {
    if k > 5 {
        return Err(Error::OutOfRange(format!("k = {k} not in 0..5")));
    }
    if sign != 1 && sign != -1 {
        return Err(Error::OutOfRange(format!("sign = {sign}")));
    }
    let w = word_to_element(&minimal_word(lambda)?);
    debug_assert_eq!(w.apply(&THETA), *lambda);
    let base = canonical_face().roots.map(|r| w.apply(&r));
    let mut roots = base;
    if k > 0 {
        let xk = base[k as usize - 1];
        for (i, r) in roots.iter_mut().enumerate() {
            *r = if i + 1 == k as usize {
                xk.map(|x| -x)
            } else {
                std::array::from_fn(|c| base[i][c] - xk[c])
            };
        }
    }
    let f = FourFace {
        roots,
        orthogonal_root: *lambda,
        k,
        sign: 1,
    };
    Ok(if sign < 0 { f.negate() } else { f })
}

pub fn positive_roots() -> Vec<RootVector> {
    let mut v: Vec<RootVector> = generate_roots()
        .roots
        .iter()
        .copied()
        .filter(is_positive)
        .collect();
    v.sort();
    v
}

/// All 432 faces `±Ξ_{Λ,k}`, ordered by sign, `Λ`, `k`.
pub fn enumerate_faces() -> Vec<FourFace> {
    let mut out = vec![];
    for sign in [1i8, -1] {
        for l in positive_roots() {
            for k in 0..=5 {
                out.push(face(&l, k, sign).expect("positive root"));
            }
        }
    }
    out
}

/// Orbit of a face (as a root set) under the simple reflections, and also
/// under `−Id` when `with_neg` is set.
pub fn face_orbit(f: &FourFace, with_neg: bool) -> HashSet<[RootVector; 5]> {
    let start = f.key();
    let mut seen = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(cur) = queue.pop_front() {
        let mut next: Vec<[RootVector; 5]> = (1..=6)
            .map(|i| key_of(&cur.map(|r| reflect(i, &r))))
            .collect();
        if with_neg {
            next.push(key_of(&cur.map(|r| r.map(|x| -x))));
        }
        for n in next {
            if seen.insert(n) {
                queue.push_back(n);
            }
        }
    }
    seen
}

/// Positive roots orthogonal to every root of the face.
pub fn orthogonal_positive_roots(f: &FourFace) -> Vec<RootVector> {
    positive_roots()
        .into_iter()
        .filter(|r| f.roots.iter().all(|x| inner(x, r) == 0))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceValues {
    /// `ξ1..ξ5` in slot order, then `ξ6 = 0`.
    pub xi: [i64; 6],
    pub lambda_value: i64,
    pub lambda_plus: Q,
    pub lambda_minus: Q,
}

impl FaceValues {
    pub fn sorted(&self) -> [i64; 6] {
        let mut s = self.xi;
        s.sort();
        s
    }
}

fn int_value(r: &RootVector, p: ParamSet) -> Result<i64> {
    let v = root_value(r, p);
    if !v.is_integer() {
        return Err(Error::NonIntegral);
    }
    i64::try_from(v.to_integer()).map_err(|_| Error::OutOfRange("root value overflow".into()))
}

pub fn face_values(f: &FourFace, p: ParamSet) -> Result<FaceValues> {
    let mut xi = [0i64; 6];
    for (slot, r) in xi.iter_mut().zip(&f.roots) {
        *slot = int_value(r, p)?;
    }
    let lam = int_value(&f.orthogonal_root, p)?;
    let sixth = qf(xi.iter().sum(), 6);
    let half = qf(lam, 2);
    Ok(FaceValues {
        xi,
        lambda_value: lam,
        lambda_plus: &sixth + &half,
        lambda_minus: &sixth - &half,
    })
}

/// Row generator of the infinite pair `(X^F, Y^F) = (ε·A^F, B^F)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceRep {
    pub values: FaceValues,
    pub sign: i64,
}

impl FaceRep {
    pub fn new(f: &FourFace, p: ParamSet) -> Result<Self> {
        Ok(FaceRep {
            values: face_values(f, p)?,
            sign: f.sign as i64,
        })
    }

    fn shifts(&self, j: i64) -> [Q; 6] {
        self.values.xi.map(|x| q(x - j) + qf(1, 2))
    }

    /// `A_{j,j+1} = j·Π(j − ξ_i)`
    pub fn a_sup(&self, j: i64) -> Q {
        q(j * self.values.xi[..5].iter().map(|x| j - x).product::<i64>())
    }

    pub fn a_diag(&self, j: i64) -> Q {
        x_diag_from_shifts(&self.shifts(j), &q(self.values.lambda_value))
    }

    pub fn b_sub(&self, j: i64) -> Q {
        q(j) - &self.values.lambda_plus
    }

    pub fn b_sup(&self, j: i64) -> Q {
        self.a_sup(j) * (q(j) - &self.values.lambda_minus)
    }

    pub fn b_diag(&self, j: i64) -> Q {
        y_diag_from_shifts(&self.shifts(j), &q(self.values.lambda_value))
    }

    /// Rows and columns `j0 .. j0+width-1` of `X^F` and `Y^F`.
    pub fn window(&self, j0: i64, width: usize) -> (Tridiagonal, Tridiagonal) {
        let idx: Vec<i64> = (0..width as i64).map(|k| j0 + k).collect();
        let eps = q(self.sign);
        let x = Tridiagonal::new(
            idx.iter().map(|&j| &eps * self.a_diag(j)).collect(),
            idx[..width.saturating_sub(1)]
                .iter()
                .map(|&j| &eps * self.a_sup(j))
                .collect(),
            idx[..width.saturating_sub(1)]
                .iter()
                .map(|_| eps.clone())
                .collect(),
        );
        let y = Tridiagonal::new(
            idx.iter().map(|&j| self.b_diag(j)).collect(),
            idx[..width.saturating_sub(1)]
                .iter()
                .map(|&j| self.b_sup(j))
                .collect(),
            idx[..width.saturating_sub(1)]
                .iter()
                .map(|&j| self.b_sub(j))
                .collect(),
        );
        (x, y)
    }
}

pub fn rep_window(
    f: &FourFace,
    p: ParamSet,
    j0: i64,
    width: usize,
) -> Result<(Tridiagonal, Tridiagonal)> {
    if width == 0 {
        return Err(Error::EmptyWindow);
    }
    Ok(FaceRep::new(f, p)?.window(j0, width))
}

/// Relation defects on the column of the central basis vector of a 9×9 window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowDefects {
    pub center: i64,
    pub xz: Q,
    pub yz: Q,
    pub special: Q,
}

impl WindowDefects {
    pub fn all_zero(&self) -> bool {
        self.xz.is_zero() && self.yz.is_zero() && self.special.is_zero()
    }
}

fn column_max(m: &crate::matrix::Mat, col: usize) -> Q {
    (0..m.rows)
        .map(|i| m.get(i, col).abs())
        .max()
        .unwrap_or_else(Q::zero)
}

/// Every word in the relations has length at most 4, so on the window
/// `j0−4 .. j0+4` the column of `v_{j0}` is computed exactly.
pub fn verify_window_pair(
    x: &Tridiagonal,
    y: &Tridiagonal,
    c: &StructureConstants,
    center: i64,
) -> Result<WindowDefects> {
    if x.dim() != 9 || y.dim() != 9 {
        return Err(Error::DimensionMismatch(x.dim(), 9));
    }
    let r = relation_matrices(&x.to_mat(), &y.to_mat(), c)?;
    Ok(WindowDefects {
        center,
        xz: column_max(&r.xz, 4),
        yz: column_max(&r.yz, 4),
        special: column_max(&r.special, 4),
    })
}

pub fn verify_window_with(
    f: &FourFace,
    p: ParamSet,
    j0: i64,
    c: &StructureConstants,
) -> Result<WindowDefects> {
    let (x, y) = rep_window(f, p, j0 - 4, 9)?;
    verify_window_pair(&x, &y, c, j0)
}

pub fn verify_window(f: &FourFace, p: ParamSet, j0: i64) -> Result<WindowDefects> {
    verify_window_with(f, p, j0, &structure_constants(p))
}

/// Block with indices `ξ_a+1 .. ξ_{a+1}` of the sorted values (`a` in 1..5).
pub fn extraction_range(v: &FaceValues, a: usize) -> Result<(i64, i64)> {
    if !(1..=5).contains(&a) {
        return Err(Error::OutOfRange(format!("a = {a} not in 1..5")));
    }
    let s = v.sorted();
    let (lo, hi) = (s[a - 1] + 1, s[a]);
    if hi < lo {
        return Err(Error::EmptyWindow);
    }
    Ok((lo, hi))
}

pub fn extract_finite(f: &FourFace, p: ParamSet, a: usize) -> Result<(Tridiagonal, Tridiagonal)> {
    let rep = FaceRep::new(f, p)?;
    let (lo, hi) = extraction_range(&rep.values, a)?;
    Ok(rep.window(lo, (hi - lo + 1) as usize))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhysicalFace {
    pub face: FourFace,
    pub a: usize,
    pub range: (i64, i64),
}

/// The face and block that reproduce `(X_m, Y_m)`: `Ξ_{Θ,0}` when `n ≤ ℓ`,
/// `Ξ_{Θ−α6,0}` otherwise. The block is the one between `max(ξ4, ξ5, 0)` and
/// `min(ξ1, ξ2, ξ3)`, which is the third gap of the sorted values.
pub fn physical_face(p: ParamSet) -> Result<PhysicalFace> {
    if multiplicity(p) == 0 {
        return Err(Error::NotPhysical);
    }
    let d = derive_ln(p)?;
    let f = if d.n <= d.l {
        canonical_face()
    } else {
        face(&THETA_MINUS_A6, 0, 1)?
    };
    let v = face_values(&f, p)?;
    let range = extraction_range(&v, 3)?;
    Ok(PhysicalFace {
        face: f,
        a: 3,
        range,
    })
}

/// Sorted distinct root sets of a face list.
pub fn distinct_keys(faces: &[FourFace]) -> BTreeSet<[RootVector; 5]> {
    faces.iter().map(|f| f.key()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_properties() {
        let f = canonical_face();
        assert!(f.is_valid());
        assert_eq!(orthogonal_positive_roots(&f), vec![THETA]);
    }

    #[test]
    fn canonical_values_at_22() {
        let v = face_values(&canonical_face(), ParamSet::new(2, 2, 2, 2, 2, 2)).unwrap();
        let mut five = v.xi[..5].to_vec();
        five.sort();
        assert_eq!(five, vec![0, 0, 2, 2, 2]);
        assert_eq!(v.lambda_value, 6);
        assert_eq!((v.lambda_plus, v.lambda_minus), (q(4), q(-2)));
        let rep = FaceRep::new(&canonical_face(), ParamSet::new(2, 2, 2, 2, 2, 2)).unwrap();
        assert_eq!(rep.a_sup(1), q(-1));
    }

    #[test]
    fn empty_window() {
        let v = face_values(&canonical_face(), ParamSet::new(2, 2, 2, 2, 2, 2)).unwrap();
        assert_eq!(extraction_range(&v, 1), Err(Error::EmptyWindow));
        assert_eq!(extraction_range(&v, 3), Ok((1, 2)));
    }
}
