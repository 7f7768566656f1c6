//! The order-144 group acting on the two 3×3 squares of the arrangement:
//! line and column permutations, transposition and exchange of the squares.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rat::q;
use crate::tridiag::{build_x, build_y, char_poly};
use crate::weights::{derive_ln, multiplicity, ParamSet};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap};
use std::sync::OnceLock;

/// A permutation of `{0,1,2}` in one-line notation: `p[i]` is the image of `i`.
pub type Perm3 = [usize; 3];

pub const PERMS3: [Perm3; 6] = [
    [0, 1, 2],
    [1, 0, 2],
    [0, 2, 1],
    [2, 1, 0],
    [1, 2, 0],
    [2, 0, 1],
];

pub fn parity(p: Perm3) -> i64 {
    let mut inv = 0;
    for i in 0..3 {
        for j in i + 1..3 {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Normal form `π_C ∘ π'_L ∘ T^transpose ∘ S^swap` (rightmost applied first).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SymmetryElement {
    pub col_perm: Perm3,
    pub line_perm: Perm3,
    pub transpose: bool,
    pub swap: bool,
}

impl SymmetryElement {
    pub const IDENTITY: SymmetryElement = SymmetryElement {
        col_perm: [0, 1, 2],
        line_perm: [0, 1, 2],
        transpose: false,
        swap: false,
    };

    pub fn lines(p: Perm3) -> Self {
        SymmetryElement {
            line_perm: p,
            ..Self::IDENTITY
        }
    }

    pub fn cols(p: Perm3) -> Self {
        SymmetryElement {
            col_perm: p,
            ..Self::IDENTITY
        }
    }

    pub fn transposition() -> Self {
        SymmetryElement {
            transpose: true,
            ..Self::IDENTITY
        }
    }

    pub fn exchange() -> Self {
        SymmetryElement {
            swap: true,
            ..Self::IDENTITY
        }
    }

    /// Exchange of the squares composed with the exchange of lines 1 and 3:
    /// replaces every representation by its dual.
    pub fn dual() -> Self {
        SymmetryElement {
            line_perm: [2, 1, 0],
            swap: true,
            ..Self::IDENTITY
        }
    }

    /// Where a cell `(side, row, col)` goes.
    pub fn map_cell(&self, cell: Cell) -> Cell {
        let (mut s, mut r, mut c) = cell;
        if self.swap {
            s = 1 - s;
        }
        if self.transpose {
            std::mem::swap(&mut r, &mut c);
        }
        r = self.line_perm[r];
        c = self.col_perm[c];
        (s, r, c)
    }

    /// Permutation of the 18 cells, indexed by `cell_index`.
    pub fn cell_perm(&self) -> [usize; 18] {
        let mut out = [0; 18];
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = cell_index(self.map_cell(cell_of(i)));
        }
        out
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &SymmetryElement) -> SymmetryElement {
        let a = self.cell_perm();
        let b = other.cell_perm();
        let mut c = [0; 18];
        for i in 0..18 {
            c[i] = a[b[i]];
        }
        *by_cell_perm().get(&c).expect("group is closed")
    }

    pub fn inverse(&self) -> SymmetryElement {
        let a = self.cell_perm();
        let mut c = [0; 18];
        for i in 0..18 {
            c[a[i]] = i;
        }
        *by_cell_perm().get(&c).expect("group is closed")
    }

    /// Compact text form, e.g. `C012.L102.T0.S1`.
    pub fn to_code(&self) -> String {
        let p = |x: Perm3| format!("{}{}{}", x[0], x[1], x[2]);
        format!(
            "C{}.L{}.T{}.S{}",
            p(self.col_perm),
            p(self.line_perm),
            self.transpose as u8,
            self.swap as u8
        )
    }

    pub fn from_code(s: &str) -> Result<SymmetryElement> {
        let bad = || {
            Error::Parse(format!(
                "bad symmetry element '{s}', expected e.g. C012.L102.T0.S1"
            ))
        };
        let parts: Vec<&str> = s.split('.').collect();
        if parts.len() != 4 {
            return Err(bad());
        }
        let perm = |t: &str, tag: char| -> Result<Perm3> {
            let t = t.strip_prefix(tag).ok_or_else(bad)?;
            let d: Vec<usize> = t
                .chars()
                .map(|c| c.to_digit(10).map(|x| x as usize))
                .collect::<Option<_>>()
                .ok_or_else(bad)?;
            let p: Perm3 = d.try_into().map_err(|_| bad())?;
            let mut seen = [false; 3];
            for &x in &p {
                if x > 2 || seen[x] {
                    return Err(bad());
                }
                seen[x] = true;
            }
            Ok(p)
        };
        let flag = |t: &str, tag: char| -> Result<bool> {
            match t.strip_prefix(tag) {
                Some("0") => Ok(false),
                Some("1") => Ok(true),
                _ => Err(bad()),
            }
        };
        Ok(SymmetryElement {
            col_perm: perm(parts[0], 'C')?,
            line_perm: perm(parts[1], 'L')?,
            transpose: flag(parts[2], 'T')?,
            swap: flag(parts[3], 'S')?,
        })
    }
}

/// `(side, row, col)` with side 0 = left square.
pub type Cell = (usize, usize, usize);

pub fn cell_index((s, r, c): Cell) -> usize {
    s * 9 + r * 3 + c
}

pub fn cell_of(i: usize) -> Cell {
    (i / 9, (i % 9) / 3, i % 3)
}

fn by_cell_perm() -> &'static HashMap<[usize; 18], SymmetryElement> {
    static T: OnceLock<HashMap<[usize; 18], SymmetryElement>> = OnceLock::new();
    T.get_or_init(|| {
        enumerate_group()
            .into_iter()
            .map(|e| (e.cell_perm(), e))
            .collect()
    })
}

pub fn enumerate_group() -> Vec<SymmetryElement> {
    let mut out = Vec::with_capacity(144);
    for col_perm in PERMS3 {
        for line_perm in PERMS3 {
            for transpose in [false, true] {
                for swap in [false, true] {
                    out.push(SymmetryElement {
                        col_perm,
                        line_perm,
                        transpose,
                        swap,
                    });
                }
            }
        }
    }
    out
}

pub fn classical_subgroup() -> Vec<SymmetryElement> {
    let d = SymmetryElement::dual();
    let mut out = vec![];
    for p in PERMS3 {
        let c = SymmetryElement::cols(p);
        out.push(c);
        out.push(c.compose(&d));
    }
    out
}

pub fn sign_of(e: &SymmetryElement) -> i64 {
    parity(e.line_perm) * parity(e.col_perm)
}

/// The eighteen cells scaled by 3, valid for any integer parameters.
fn arrangement3(p: ParamSet) -> [i64; 18] {
    let l3 = p.m1 + 2 * p.m2 + p.mp1 + 2 * p.mp2 - p.mpp1 - 2 * p.mpp2;
    let n3 = 2 * p.m1 + p.m2 + 2 * p.mp1 + p.mp2 - 2 * p.mpp1 - p.mpp2;
    let left = [
        3 * p.m1,
        3 * p.mp1,
        3 * p.mpp2,
        3 * (p.mp1 + p.mp2) - l3,
        3 * (p.m1 + p.m2) - l3,
        n3,
        3 * p.m2 + n3 - l3,
        3 * p.mp2 + n3 - l3,
        3 * p.mpp1 + n3 - l3,
    ];
    let mut out = [0; 18];
    for i in 0..9 {
        out[i] = left[i];
        out[9 + i] = left[i] + l3 - n3;
    }
    out
}

/// Parameters whose arrangement is the transformed arrangement.
pub fn apply(e: &SymmetryElement, p: ParamSet) -> Result<ParamSet> {
    let cells = arrangement3(p);
    let perm = e.cell_perm();
    let mut new = [0; 18];
    for i in 0..18 {
        new[perm[i]] = cells[i];
    }
    let read = [
        new[cell_index((0, 0, 0))],
        new[cell_index((1, 2, 0))],
        new[cell_index((0, 0, 1))],
        new[cell_index((1, 2, 1))],
        new[cell_index((1, 2, 2))],
        new[cell_index((0, 0, 2))],
    ];
    if read.iter().any(|x| x % 3 != 0) {
        return Err(Error::NonIntegral);
    }
    Ok(ParamSet::from_array(read.map(|x| x / 3)))
}

/// Transformed arrangement cells (for checking that `apply` is consistent).
pub fn transformed_cells(e: &SymmetryElement, p: ParamSet) -> [i64; 18] {
    let cells = arrangement3(p);
    let perm = e.cell_perm();
    let mut new = [0; 18];
    for i in 0..18 {
        new[perm[i]] = cells[i];
    }
    new.map(|x| x / 3)
}

pub fn orbit(p: ParamSet) -> Result<BTreeSet<ParamSet>> {
    derive_ln(p)?;
    enumerate_group().iter().map(|e| apply(e, p)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceReport {
    pub sign: i64,
    pub x_charpoly_match: bool,
    pub y_charpoly_match: bool,
    pub dims_equal: bool,
}

impl EquivalenceReport {
    pub fn ok(&self) -> bool {
        self.x_charpoly_match && self.y_charpoly_match && self.dims_equal
    }
}

/// `s^d · f(s·x)`
pub fn sign_twist(f: &Poly, s: i64) -> Poly {
    let d = f.degree().unwrap_or(0) as u32;
    let g = f.compose_affine(&q(s), &q(0));
    if s < 0 && d % 2 == 1 {
        -&g
    } else {
        g
    }
}

pub fn verify_equivalence(p: ParamSet, e: &SymmetryElement) -> Result<EquivalenceReport> {
    if multiplicity(p) == 0 {
        return Err(Error::NotPhysical);
    }
    let pp = apply(e, p)?;
    let s = sign_of(e);
    let dims_equal = multiplicity(pp) == multiplicity(p);
    if !dims_equal {
        return Ok(EquivalenceReport {
            sign: s,
            x_charpoly_match: false,
            y_charpoly_match: false,
            dims_equal,
        });
    }
    let cx = char_poly(&build_x(p)?);
    let cxp = char_poly(&build_x(pp)?);
    let cy = char_poly(&build_y(p)?);
    let cyp = char_poly(&build_y(pp)?);
    Ok(EquivalenceReport {
        sign: s,
        x_charpoly_match: cxp == sign_twist(&cx, s),
        y_charpoly_match: cyp == cy,
        dims_equal,
    })
}

/// Checks every group element on one parameter set; returns the failures.
pub fn verify_all(p: ParamSet) -> Result<Vec<(SymmetryElement, EquivalenceReport)>> {
    let group = enumerate_group();
    let reports: Result<Vec<_>> = group
        .par_iter()
        .map(|e| verify_equivalence(p, e).map(|r| (*e, r)))
        .collect();
    Ok(reports?.into_iter().filter(|(_, r)| !r.ok()).collect())
}

/// Left square written through ξ when `n ≤ ℓ`:
/// `[[ξ1-ξ5, ξ2, ξ3-ξ4], [ξ2-ξ4, ξ3-ξ5, ξ1], [ξ3, ξ1-ξ4, ξ2-ξ5]]`.
/// The same index pattern describes the su(2) Wigner magic square in η.
pub fn square_pattern(x: &[i64; 6]) -> [[i64; 3]; 3] {
    [
        [x[0] - x[4], x[1], x[2] - x[3]],
        [x[1] - x[3], x[2] - x[4], x[0]],
        [x[2], x[0] - x[3], x[1] - x[4]],
    ]
}

/// Symbolic form of [`square_pattern`]: each cell as `(plus index, minus index)`
/// into η1..η5 (0 for "none").
pub const SQUARE_INDEX_PATTERN: [[(usize, usize); 3]; 3] = [
    [(1, 5), (2, 0), (3, 4)],
    [(2, 4), (3, 5), (1, 0)],
    [(3, 0), (1, 4), (2, 5)],
];
