//! Parameters of a coupling problem, multiplicities and Casimir values.
//!
//! Weights use the shifted convention: `[m1, m2]` is the irreducible
//! representation of highest weight `(m1 - 1, m2 - 1)`, so `[1, 1]` is trivial.

use crate::error::{Error, Result};
use crate::rat::{self, Q};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HighestWeightPair {
    pub m1: i64,
    pub m2: i64,
}

impl HighestWeightPair {
    pub fn new(m1: i64, m2: i64) -> Self {
        HighestWeightPair { m1, m2 }
    }
}

/// `(m1, m2, m1', m2', m1'', m2'')`: multiplicity space of `[m1'', m2'']` in
/// `[m1, m2] ⊗ [m1', m2']`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ParamSet {
    pub m1: i64,
    pub m2: i64,
    pub mp1: i64,
    pub mp2: i64,
    pub mpp1: i64,
    pub mpp2: i64,
}

impl ParamSet {
    pub const fn new(m1: i64, m2: i64, mp1: i64, mp2: i64, mpp1: i64, mpp2: i64) -> Self {
        ParamSet {
            m1,
            m2,
            mp1,
            mp2,
            mpp1,
            mpp2,
        }
    }

    pub const fn from_array(a: [i64; 6]) -> Self {
        ParamSet::new(a[0], a[1], a[2], a[3], a[4], a[5])
    }

    pub const fn to_array(self) -> [i64; 6] {
        [self.m1, self.m2, self.mp1, self.mp2, self.mpp1, self.mpp2]
    }

    pub fn factors(self) -> (HighestWeightPair, HighestWeightPair, HighestWeightPair) {
        (
            HighestWeightPair::new(self.m1, self.m2),
            HighestWeightPair::new(self.mp1, self.mp2),
            HighestWeightPair::new(self.mpp1, self.mpp2),
        )
    }

    pub fn negate(self) -> Self {
        let a = self.to_array();
        ParamSet::from_array(a.map(|x| -x))
    }
}

impl std::fmt::Display for ParamSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let a = self.to_array();
        write!(f, "({},{},{},{},{},{})", a[0], a[1], a[2], a[3], a[4], a[5])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedLN {
    pub l: i64,
    pub n: i64,
}

pub fn derive_ln(p: ParamSet) -> Result<DerivedLN> {
    let l3 = p.m1 + 2 * p.m2 + p.mp1 + 2 * p.mp2 - p.mpp1 - 2 * p.mpp2;
    let n3 = 2 * p.m1 + p.m2 + 2 * p.mp1 + p.mp2 - 2 * p.mpp1 - p.mpp2;
    if l3.rem_euclid(3) != 0 || n3.rem_euclid(3) != 0 {
        return Err(Error::NonIntegral);
    }
    Ok(DerivedLN {
        l: l3 / 3,
        n: n3 / 3,
    })
}

/// Two 3×3 squares holding the eighteen linear forms whose minimum is the multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrangement {
    pub left: [[i64; 3]; 3],
    pub right: [[i64; 3]; 3],
}

impl Arrangement {
    pub fn entries(&self) -> impl Iterator<Item = i64> + '_ {
        self.left.iter().chain(self.right.iter()).flatten().copied()
    }

    /// Row, column, diagonal and antidiagonal sums of one square.
    pub fn line_sums(sq: &[[i64; 3]; 3]) -> [i64; 8] {
        let r = |i: usize| sq[i][0] + sq[i][1] + sq[i][2];
        let c = |j: usize| sq[0][j] + sq[1][j] + sq[2][j];
        [
            r(0),
            r(1),
            r(2),
            c(0),
            c(1),
            c(2),
            sq[0][0] + sq[1][1] + sq[2][2],
            sq[0][2] + sq[1][1] + sq[2][0],
        ]
    }

    /// Equal row and column sums in both squares. The diagonals do not
    /// share the common value in general.
    pub fn is_magic(&self) -> bool {
        [self.left, self.right].iter().all(|sq| {
            let s = Self::line_sums(sq);
            s[..6].iter().all(|&x| x == s[0])
        })
    }

    /// Read the six parameters back from their cells.
    pub fn params(&self) -> ParamSet {
        ParamSet::new(
            self.left[0][0],
            self.right[2][0],
            self.left[0][1],
            self.right[2][1],
            self.right[2][2],
            self.left[0][2],
        )
    }
}

pub fn arrangement(p: ParamSet) -> Result<Arrangement> {
    let DerivedLN { l, n } = derive_ln(p)?;
    let left = [
        [p.m1, p.mp1, p.mpp2],
        [p.mp1 + p.mp2 - l, p.m1 + p.m2 - l, n],
        [p.m2 + n - l, p.mp2 + n - l, p.mpp1 + n - l],
    ];
    let right = left.map(|row| row.map(|x| x + l - n));
    Ok(Arrangement { left, right })
}

pub fn multiplicity(p: ParamSet) -> u64 {
    match arrangement(p) {
        Err(_) => 0,
        Ok(a) => {
            let m = a.entries().min().unwrap();
            if m <= 0 {
                0
            } else {
                m as u64
            }
        }
    }
}

pub fn is_physical(p: ParamSet) -> bool {
    multiplicity(p) >= 1
}

/// Values of the quadratic and cubic Casimir elements on `[m1, m2]`.
pub fn casimir_values(w: HighestWeightPair) -> (Q, Q) {
    let (a, b) = (w.m1, w.m2);
    let k = rat::qf(2, 3) * rat::q(a * a + b * b + a * b) - rat::q(2);
    let l = rat::qf((a + 2 * b) * (2 * a + b) * (a - b), 9);
    (k, l)
}

pub const DEFAULT_ORACLE_BOUND: i64 = 12;

/// Weights (Dynkin labels of `λ`, not shifted) of `[m1, m2]` with multiplicity,
/// from Gelfand–Tsetlin patterns.
pub fn weight_multiplicities(w: HighestWeightPair) -> BTreeMap<(i64, i64), u64> {
    let (a, b) = (w.m1 - 1, w.m2 - 1);
    let (p1, p2, p3) = (a + b, b, 0);
    let mut out = BTreeMap::new();
    for q1 in p2..=p1 {
        for q2 in p3..=p2 {
            for r in q2..=q1 {
                let (w1, w2, w3) = (r, q1 + q2 - r, p1 + p2 + p3 - q1 - q2);
                *out.entry((w1 - w2, w2 - w3)).or_insert(0) += 1;
            }
        }
    }
    out
}

/// Decomposition of `[m1,m2] ⊗ [m1',m2']` into shifted highest weights with
/// multiplicities, by the Brauer–Klimyk rule.
pub fn decompose(w: HighestWeightPair, wp: HighestWeightPair) -> BTreeMap<(i64, i64), i64> {
    let mut out: BTreeMap<(i64, i64), i64> = BTreeMap::new();
    for ((d1, d2), mult) in weight_multiplicities(wp) {
        // λ + ρ in the shifted convention is just (m1, m2)
        let (mut x, mut y) = (w.m1 + d1, w.m2 + d2);
        let mut sign = 1i64;
        loop {
            if x == 0 || y == 0 {
                sign = 0;
                break;
            }
            if x < 0 {
                (x, y) = (-x, x + y);
                sign = -sign;
            } else if y < 0 {
                (x, y) = (x + y, -y);
                sign = -sign;
            } else {
                break;
            }
        }
        if sign != 0 {
            *out.entry((x, y)).or_insert(0) += sign * mult as i64;
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

pub fn lr_oracle_bounded(
    w: HighestWeightPair,
    wp: HighestWeightPair,
    wpp: HighestWeightPair,
    bound: i64,
) -> Result<u64> {
    for x in [w.m1, w.m2, wp.m1, wp.m2, wpp.m1, wpp.m2] {
        if x > bound {
            return Err(Error::BoundExceeded(bound));
        }
    }
    if [w.m1, w.m2, wp.m1, wp.m2].iter().any(|&x| x < 1) {
        return Ok(0);
    }
    let d = decompose(w, wp);
    let v = d.get(&(wpp.m1, wpp.m2)).copied().unwrap_or(0);
    debug_assert!(v >= 0);
    Ok(v.max(0) as u64)
}

pub fn lr_oracle(
    w: HighestWeightPair,
    wp: HighestWeightPair,
    wpp: HighestWeightPair,
) -> Result<u64> {
    lr_oracle_bounded(w, wp, wpp, DEFAULT_ORACLE_BOUND)
}

/// Dimension of `[m1, m2]`.
pub fn dimension(w: HighestWeightPair) -> i64 {
    w.m1 * w.m2 * (w.m1 + w.m2) / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{q, qf};

    fn hw(a: i64, b: i64) -> HighestWeightPair {
        HighestWeightPair::new(a, b)
    }

    #[test]
    fn ln_examples() {
        assert_eq!(
            derive_ln(ParamSet::new(2, 2, 2, 2, 2, 2)).unwrap(),
            DerivedLN { l: 2, n: 2 }
        );
        assert_eq!(
            derive_ln(ParamSet::new(1, 1, 3, 2, 3, 2)).unwrap(),
            DerivedLN { l: 1, n: 1 }
        );
        assert_eq!(
            derive_ln(ParamSet::new(2, 1, 2, 1, 1, 3)),
            Err(Error::NonIntegral)
        );
    }

    #[test]
    fn ln_inverse_relations() {
        let p = ParamSet::new(3, 4, 5, 2, 3, 4);
        let DerivedLN { l, n } = derive_ln(p).unwrap();
        assert_eq!(p.mpp1, p.m1 + p.mp1 + l - 2 * n);
        assert_eq!(p.mpp2, p.m2 + p.mp2 + n - 2 * l);
    }

    #[test]
    fn arrangement_examples() {
        let a = arrangement(ParamSet::new(2, 2, 2, 2, 2, 2)).unwrap();
        assert!(a.entries().all(|x| x == 2));
        let (p, qq, ll) = (3, 5, 2);
        let a = arrangement(ParamSet::new(2, p + 1, 2, qq + 1, ll, p + qq - 2 * ll + 4)).unwrap();
        assert_eq!(a.left[0], [2, 2, p + qq - 2 * ll + 4]);
        assert_eq!(a.right[0], [ll, ll, p + qq - ll + 2]);
        assert!(a.is_magic());
        assert_eq!(
            a.params(),
            ParamSet::new(2, p + 1, 2, qq + 1, ll, p + qq - 2 * ll + 4)
        );
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(multiplicity(ParamSet::new(2, 2, 2, 2, 2, 2)), 2);
        assert_eq!(multiplicity(ParamSet::new(1, 1, 3, 2, 3, 2)), 1);
        assert_eq!(multiplicity(ParamSet::new(2, 1, 2, 1, 3, 1)), 1);
        assert_eq!(multiplicity(ParamSet::new(2, 1, 2, 1, 1, 3)), 0);
    }

    #[test]
    fn casimir_examples() {
        assert_eq!(casimir_values(hw(1, 1)), (q(0), q(0)));
        assert_eq!(casimir_values(hw(2, 1)), (qf(8, 3), qf(20, 9)));
        assert_eq!(casimir_values(hw(2, 2)), (q(6), q(0)));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(lr_oracle(hw(2, 1), hw(2, 1), hw(3, 1)).unwrap(), 1);
        assert_eq!(lr_oracle(hw(2, 1), hw(2, 1), hw(1, 2)).unwrap(), 1);
        assert_eq!(lr_oracle(hw(1, 1), hw(5, 3), hw(5, 3)).unwrap(), 1);
        assert_eq!(lr_oracle(hw(2, 2), hw(2, 2), hw(2, 2)).unwrap(), 2);
        assert!(matches!(
            lr_oracle(hw(13, 1), hw(1, 1), hw(13, 1)),
            Err(Error::BoundExceeded(_))
        ));
    }

    #[test]
    fn decomposition_dimensions_add_up() {
        for (a, b) in [(2, 1), (3, 2), (2, 4)] {
            for (c, d) in [(1, 2), (3, 3), (4, 1)] {
                let total: i64 = decompose(hw(a, b), hw(c, d))
                    .iter()
                    .map(|(&(x, y), &k)| k * dimension(hw(x, y)))
                    .sum();
                assert_eq!(total, dimension(hw(a, b)) * dimension(hw(c, d)));
            }
        }
    }
}
