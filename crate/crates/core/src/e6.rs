//! The E6 root system, its Weyl group and the identification of the six
//! parameters with roots.

use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::rat::{q, Q};
use crate::symmetry::{self, SymmetryElement};
use crate::weights::ParamSet;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::OnceLock;

/// Coefficients on the simple roots α1..α6.
pub type RootVector = [i64; 6];

/// Node 3 is the trivalent node; α6 hangs off it.
pub const CARTAN: [[i64; 6]; 6] = [
    [2, -1, 0, 0, 0, 0],
    [-1, 2, -1, 0, 0, 0],
    [0, -1, 2, -1, 0, -1],
    [0, 0, -1, 2, -1, 0],
    [0, 0, 0, -1, 2, 0],
    [0, 0, -1, 0, 0, 2],
];

pub const THETA: RootVector = [1, 2, 3, 2, 1, 2];

/// Roots attached to `m1, m2, m'1, m'2, m''1, m''2`.
pub const PARAM_ROOTS: [RootVector; 6] = [
    [0, 0, 1, 1, 1, 0],
    [1, 1, 1, 1, 0, 1],
    [1, 1, 1, 0, 0, 0],
    [0, 1, 1, 1, 1, 1],
    [0, 0, 1, 0, 0, 1],
    [0, 1, 1, 1, 0, 0],
];

/// The 18 roots laid out like the two 3×3 squares of the arrangement
/// (left square first, row-major).
pub const DEG_ROOTS_GRID: [&str; 18] = [
    "345", "123", "234", "23", "34", "12345", "1234", "2345", "3", //
    "3456", "1236", "2346", "236", "346", "123456", "12346", "23456", "36",
];

pub const WEYL_ORDER: usize = 51840;
const BFS_CAP: usize = 60000;

pub fn inner(a: &RootVector, b: &RootVector) -> i64 {
    let mut s = 0;
    for i in 0..6 {
        for j in 0..6 {
            s += a[i] * CARTAN[i][j] * b[j];
        }
    }
    s
}

pub fn root_from_digits(s: &str) -> Result<RootVector> {
    let mut r = [0; 6];
    for ch in s.chars() {
        let d = ch
            .to_digit(10)
            .ok_or_else(|| Error::Parse(format!("bad root '{s}'")))? as usize;
        if !(1..=6).contains(&d) {
            return Err(Error::Parse(format!("bad root '{s}'")));
        }
        r[d - 1] += 1;
    }
    Ok(r)
}

/// Accepts the short-hand `"345"` or six comma/space separated coefficients.
pub fn parse_root(s: &str) -> Result<RootVector> {
    let parts: Vec<&str> = s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .collect();
    if parts.len() == 6 {
        let mut r = [0; 6];
        for (i, p) in parts.iter().enumerate() {
            r[i] = p
                .parse()
                .map_err(|_| Error::Parse(format!("bad root '{s}'")))?;
        }
        return Ok(r);
    }
    let t = s.trim();
    let (neg, body) = match t.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, t),
    };
    let r = root_from_digits(body)?;
    Ok(if neg { r.map(|x| -x) } else { r })
}

/// Short-hand `ij..k` when all coefficients are 0 or 1 (with a leading `-`
/// for negatives), otherwise the coefficient list.
pub fn format_root(r: &RootVector) -> String {
    let sign = if r.iter().all(|&x| x <= 0) && r.iter().any(|&x| x < 0) {
        -1
    } else {
        1
    };
    let a = r.map(|x| x * sign);
    if a.iter().all(|&x| x == 0 || x == 1) {
        let body: String = (0..6)
            .filter(|&i| a[i] == 1)
            .map(|i| char::from(b'1' + i as u8))
            .collect();
        if sign < 0 {
            format!("-{body}")
        } else {
            body
        }
    } else {
        format!("({})", r.map(|x| x.to_string()).join(","))
    }
}

pub fn height(r: &RootVector) -> i64 {
    r.iter().sum()
}

pub fn is_positive(r: &RootVector) -> bool {
    r.iter().all(|&x| x >= 0) && r.iter().any(|&x| x > 0)
}

fn unit(i: usize) -> RootVector {
    let mut r = [0; 6];
    r[i] = 1;
    r
}

/// `s_i(x) = x - (x, α_i) α_i`, with `i` 1-based.
pub fn reflect(i: usize, x: &RootVector) -> RootVector {
    let mut y = *x;
    let c: i64 = (0..6).map(|j| x[j] * CARTAN[j][i - 1]).sum();
    y[i - 1] -= c;
    y
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub roots: Vec<RootVector>,
    pub positive: Vec<RootVector>,
    pub index: HashMap<RootVector, usize>,
}

impl RootSystem {
    pub fn contains(&self, r: &RootVector) -> bool {
        self.index.contains_key(r)
    }

    pub fn highest(&self) -> RootVector {
        *self.positive.iter().max_by_key(|r| height(r)).unwrap()
    }
}

pub fn generate_roots() -> &'static RootSystem {
    static R: OnceLock<RootSystem> = OnceLock::new();
    R.get_or_init(|| {
        let mut seen: HashSet<RootVector> = (0..6).map(unit).collect();
        let mut queue: VecDeque<RootVector> = seen.iter().copied().collect();
        while let Some(r) = queue.pop_front() {
            for i in 1..=6 {
                let s = reflect(i, &r);
                if seen.insert(s) {
                    queue.push_back(s);
                }
            }
        }
        let mut roots: Vec<RootVector> = seen.into_iter().collect();
        roots.sort_by_key(|r| (-height(r), *r));
        let positive = roots.iter().copied().filter(is_positive).collect();
        let index = roots.iter().enumerate().map(|(i, r)| (*r, i)).collect();
        RootSystem {
            roots,
            positive,
            index,
        }
    })
}

/// Integer matrix acting on root coordinates (column vectors).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeylElement {
    pub m: [[i64; 6]; 6],
}

impl WeylElement {
    pub fn identity() -> Self {
        let mut m = [[0; 6]; 6];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        WeylElement { m }
    }

    /// Simple reflection `s_i`, 1-based.
    pub fn simple(i: usize) -> Self {
        let mut w = Self::identity();
        for j in 0..6 {
            w.m[i - 1][j] -= CARTAN[j][i - 1];
        }
        w
    }

    pub fn apply(&self, x: &RootVector) -> RootVector {
        let mut y = [0; 6];
        for (i, yi) in y.iter_mut().enumerate() {
            *yi = (0..6).map(|j| self.m[i][j] * x[j]).sum();
        }
        y
    }

    /// `self ∘ o`
    pub fn compose(&self, o: &WeylElement) -> WeylElement {
        let mut m = [[0; 6]; 6];
        for i in 0..6 {
            for j in 0..6 {
                m[i][j] = (0..6).map(|k| self.m[i][k] * o.m[k][j]).sum();
            }
        }
        WeylElement { m }
    }

    pub fn neg(&self) -> [[i64; 6]; 6] {
        self.m.map(|r| r.map(|x| -x))
    }

    /// `A⁻¹ Sᵀ A`, exact because the element is an isometry.
    pub fn inverse(&self) -> WeylElement {
        let ai3 = cartan_inverse3();
        let mut st_a = [[0i64; 6]; 6];
        for i in 0..6 {
            for j in 0..6 {
                st_a[i][j] = (0..6).map(|k| self.m[k][i] * CARTAN[k][j]).sum();
            }
        }
        let mut m = [[0; 6]; 6];
        for i in 0..6 {
            for j in 0..6 {
                let x: i64 = (0..6).map(|k| ai3[i][k] * st_a[k][j]).sum();
                debug_assert_eq!(x % 3, 0);
                m[i][j] = x / 3;
            }
        }
        WeylElement { m }
    }

    pub fn preserves_form(&self) -> bool {
        let cols: Vec<RootVector> = (0..6).map(|j| self.apply(&unit(j))).collect();
        (0..6).all(|i| (0..6).all(|j| inner(&cols[i], &cols[j]) == CARTAN[i][j]))
    }

    pub fn to_mat(&self) -> Mat {
        Mat::from_rows(
            self.m
                .iter()
                .map(|r| r.iter().map(|&x| q(x)).collect())
                .collect(),
        )
    }
}

pub fn cartan_mat() -> Mat {
    Mat::from_rows(
        CARTAN
            .iter()
            .map(|r| r.iter().map(|&x| q(x)).collect())
            .collect(),
    )
}

fn cartan_inverse3() -> &'static [[i64; 6]; 6] {
    static M: OnceLock<[[i64; 6]; 6]> = OnceLock::new();
    M.get_or_init(|| {
        let ai = cartan_inverse();
        let mut m = [[0; 6]; 6];
        for i in 0..6 {
            for j in 0..6 {
                m[i][j] = (ai.get(i, j) * q(3)).to_integer().to_i64().unwrap();
            }
        }
        m
    })
}

pub fn cartan_inverse() -> &'static Mat {
    static M: OnceLock<Mat> = OnceLock::new();
    M.get_or_init(|| cartan_mat().inverse().expect("Cartan matrix is invertible"))
}

/// Fundamental weight ω_i (1-based) in root coordinates: the dual basis of
/// the simple roots under the bilinear form.
pub fn fundamental_weight(i: usize) -> Vec<Q> {
    let ai = cartan_inverse();
    (0..6).map(|r| ai.get(r, i - 1).clone()).collect()
}

pub struct WeylGroup {
    pub elements: Vec<WeylElement>,
    /// Length of each element (BFS depth from the identity).
    pub lengths: Vec<u8>,
    pub index: HashMap<WeylElement, usize>,
    /// For each element `s`, indices in `generate_roots().roots` of
    /// `s⁻¹(β_i)` for the six parameter roots; `(s·m)_i` is that root's
    /// value at `m`.
    pub param_images: Vec<[u8; 6]>,
}

pub fn weyl_group() -> &'static WeylGroup {
    static G: OnceLock<WeylGroup> = OnceLock::new();
    G.get_or_init(|| {
        let gens: Vec<WeylElement> = (1..=6).map(WeylElement::simple).collect();
        let id = WeylElement::identity();
        let mut index = HashMap::with_capacity(WEYL_ORDER);
        let mut elements = vec![id];
        let mut lengths = vec![0u8];
        index.insert(id, 0);
        let mut head = 0;
        while head < elements.len() {
            let g = elements[head];
            let l = lengths[head];
            head += 1;
            for s in &gens {
                let h = s.compose(&g);
                if !index.contains_key(&h) {
                    assert!(
                        elements.len() < BFS_CAP,
                        "Weyl group closure exceeded its bound"
                    );
                    index.insert(h, elements.len());
                    elements.push(h);
                    lengths.push(l + 1);
                }
            }
        }
        let rs = generate_roots();
        let param_images = elements
            .iter()
            .map(|g| {
                let inv = g.inverse();
                PARAM_ROOTS.map(|b| rs.index[&inv.apply(&b)] as u8)
            })
            .collect();
        WeylGroup {
            elements,
            lengths,
            index,
            param_images,
        }
    })
}

pub fn longest_element() -> WeylElement {
    let g = weyl_group();
    let i = (0..g.elements.len()).max_by_key(|&i| g.lengths[i]).unwrap();
    g.elements[i]
}

/// Element of ±W(E6).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedWeylElement {
    pub w: WeylElement,
    pub sign: i64,
}

impl SignedWeylElement {
    pub fn plus(w: WeylElement) -> Self {
        SignedWeylElement { w, sign: 1 }
    }

    pub fn minus(w: WeylElement) -> Self {
        SignedWeylElement { w, sign: -1 }
    }

    pub fn compose(&self, o: &SignedWeylElement) -> SignedWeylElement {
        SignedWeylElement {
            w: self.w.compose(&o.w),
            sign: self.sign * o.sign,
        }
    }

    pub fn apply(&self, x: &RootVector) -> RootVector {
        self.w.apply(x).map(|v| v * self.sign)
    }
}

/// Columns are the six parameter roots: `B e_i = β_i`.
pub struct ParamRootMap {
    pub b: Mat,
    pub b_inv: Mat,
}

pub fn param_root_map() -> &'static ParamRootMap {
    static M: OnceLock<ParamRootMap> = OnceLock::new();
    M.get_or_init(|| {
        let mut b = Mat::zeros(6, 6);
        for (j, r) in PARAM_ROOTS.iter().enumerate() {
            for i in 0..6 {
                b.set(i, j, q(r[i]));
            }
        }
        let b_inv = b.inverse().expect("parameter roots are a basis");
        ParamRootMap { b, b_inv }
    })
}

/// A root as a linear form in `(m1, m2, m'1, m'2, m''1, m''2)`.
pub fn root_as_form(r: &RootVector) -> Vec<Q> {
    let v: Vec<Q> = r.iter().map(|&x| q(x)).collect();
    param_root_map().b_inv.mul_vec(&v)
}

/// Value of a root at the parameters.
pub fn root_value(r: &RootVector, p: ParamSet) -> Q {
    root_as_form(r)
        .iter()
        .zip(p.to_array())
        .map(|(c, x)| c * q(x))
        .sum()
}

/// Value of a root at `p`, times 3 (always an integer).
pub fn root_value3(form3: &[i64; 6], p: &[i64; 6]) -> i64 {
    (0..6).map(|i| form3[i] * p[i]).sum()
}

/// Linear forms (scaled by 3, integral) of all 72 roots, in root-system order.
pub fn root_forms3() -> &'static Vec<[i64; 6]> {
    static F: OnceLock<Vec<[i64; 6]>> = OnceLock::new();
    F.get_or_init(|| {
        generate_roots()
            .roots
            .iter()
            .map(|r| {
                let f = root_as_form(r);
                let mut out = [0; 6];
                for i in 0..6 {
                    let x = &f[i] * q(3);
                    assert!(x.is_integer());
                    out[i] = x.to_integer().to_i64().unwrap();
                }
                out
            })
            .collect()
    })
}

/// Matrix `M_s` with `s·m = M_s m`, defined by `(s·m)_i = ⟨s⁻¹β_i⟩(m)`, so that
/// every root takes at `s·m` the value its image under `s⁻¹` takes at `m`.
pub fn param_action(s: &SignedWeylElement) -> Mat {
    let inv = s.w.inverse();
    let mut m = Mat::zeros(6, 6);
    for (i, b) in PARAM_ROOTS.iter().enumerate() {
        let img = inv.apply(b).map(|x| x * s.sign);
        let f = root_as_form(&img);
        for (j, c) in f.into_iter().enumerate() {
            m.set(i, j, c);
        }
    }
    m
}

/// Apply `M_s` to integer parameters; `NonIntegral` if the image is not integral.
pub fn act_on_params(s: &SignedWeylElement, p: ParamSet) -> Result<ParamSet> {
    let v: Vec<Q> = p.to_array().iter().map(|&x| q(x)).collect();
    let out = param_action(s).mul_vec(&v);
    let mut a = [0; 6];
    for i in 0..6 {
        if !out[i].is_integer() {
            return Err(Error::NonIntegral);
        }
        a[i] = out[i].to_integer().to_i64().ok_or(Error::NonIntegral)?;
    }
    Ok(ParamSet::from_array(a))
}

pub fn coefficient_one_roots() -> Vec<RootVector> {
    generate_roots()
        .positive
        .iter()
        .copied()
        .filter(|r| r[2] == 1)
        .collect()
}

pub fn deg_roots_grid() -> [RootVector; 18] {
    DEG_ROOTS_GRID.map(|s| root_from_digits(s).unwrap())
}

fn stabilizes_deg_set(s: &SignedWeylElement, set: &HashSet<RootVector>) -> bool {
    set.iter().all(|r| set.contains(&s.apply(r)))
}

/// Subgroup generated by `s1, s2, s4, s5, s6, -w0`.
pub fn missing_label_subgroup() -> Vec<SignedWeylElement> {
    let w0 = longest_element();
    let mut gens: Vec<SignedWeylElement> = [1, 2, 4, 5, 6]
        .iter()
        .map(|&i| SignedWeylElement::plus(WeylElement::simple(i)))
        .collect();
    gens.push(SignedWeylElement::minus(w0));
    let id = SignedWeylElement::plus(WeylElement::identity());
    let mut seen: HashSet<SignedWeylElement> = HashSet::from([id]);
    let mut out = vec![id];
    let mut head = 0;
    while head < out.len() {
        let g = out[head];
        head += 1;
        for s in &gens {
            let h = s.compose(&g);
            if seen.insert(h) {
                out.push(h);
            }
        }
    }
    out
}

/// Every element of ±W(E6) mapping the 18 coefficient-one roots to themselves.
pub fn deg_set_stabilizer() -> Vec<SignedWeylElement> {
    let set: HashSet<RootVector> = coefficient_one_roots().into_iter().collect();
    let g = weyl_group();
    let mut out = vec![];
    for &w in &g.elements {
        for sign in [1, -1] {
            let s = SignedWeylElement { w, sign };
            if stabilizes_deg_set(&s, &set) {
                out.push(s);
            }
        }
    }
    out
}

/// Sample points with integral `ℓ, n` used to pin down the bijection.
pub const SAMPLE_POINTS: [[i64; 6]; 5] = [
    [2, 2, 2, 2, 2, 2],
    [3, 4, 5, 2, 3, 4],
    [2, 3, 2, 3, 3, 2],
    [5, 1, 4, 3, 5, 3],
    [7, 3, 2, 5, 4, 6],
];

/// Pairs each element of [`missing_label_subgroup`] with the element of the
/// order-144 arrangement group acting identically on parameters.
pub fn symmetry_isomorphism() -> Result<Vec<(SignedWeylElement, SymmetryElement)>> {
    let group = symmetry::enumerate_group();
    let pts: Vec<ParamSet> = SAMPLE_POINTS
        .iter()
        .map(|a| ParamSet::from_array(*a))
        .collect();
    let table: Vec<Vec<ParamSet>> = group
        .iter()
        .map(|e| {
            pts.iter()
                .map(|&p| symmetry::apply(e, p))
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;
    let mut out = vec![];
    for s in missing_label_subgroup() {
        let imgs: Vec<ParamSet> = pts
            .iter()
            .map(|&p| act_on_params(&s, p))
            .collect::<Result<_>>()?;
        let hits: Vec<usize> = (0..group.len()).filter(|&i| table[i] == imgs).collect();
        if hits.len() != 1 {
            return Err(Error::OutOfRange(format!(
                "no unique arrangement symmetry for a subgroup element ({} candidates)",
                hits.len()
            )));
        }
        out.push((s, group[hits[0]]));
    }
    Ok(out)
}

/// Shortest word `[a1, .., ak]` with `s_{a1} ⋯ s_{ak}(Θ) = target`.
pub fn minimal_word(target: &RootVector) -> Result<Vec<u8>> {
    let rs = generate_roots();
    if !rs.contains(target) || !is_positive(target) {
        return Err(Error::NotARoot);
    }
    // BFS from Θ; parent[r] = (previous root, reflection used).
    let mut parent: HashMap<RootVector, (RootVector, u8)> = HashMap::new();
    let mut queue = VecDeque::from([THETA]);
    let mut seen = HashSet::from([THETA]);
    while let Some(r) = queue.pop_front() {
        if r == *target {
            break;
        }
        for i in 1..=6u8 {
            let s = reflect(i as usize, &r);
            if seen.insert(s) {
                parent.insert(s, (r, i));
                queue.push_back(s);
            }
        }
    }
    let mut word = vec![];
    let mut cur = *target;
    while cur != THETA {
        let (prev, i) = parent[&cur];
        word.push(i);
        cur = prev;
    }
    Ok(word)
}

pub fn word_to_element(word: &[u8]) -> WeylElement {
    word.iter().fold(WeylElement::identity(), |acc, &i| {
        acc.compose(&WeylElement::simple(i as usize))
    })
}

pub fn format_word(word: &[u8]) -> String {
    if word.is_empty() {
        return "id".into();
    }
    word.iter().map(|i| format!("s{i}")).collect()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RootPoset {
    pub nodes: Vec<RootVector>,
    /// `(from, to, i)`: `nodes[to] = nodes[from] + α_i`.
    pub edges: Vec<(usize, usize, u8)>,
}

impl RootPoset {
    pub fn maximal(&self) -> Vec<RootVector> {
        (0..self.nodes.len())
            .filter(|&i| !self.edges.iter().any(|e| e.0 == i))
            .map(|i| self.nodes[i])
            .collect()
    }

    pub fn covers_of(&self, r: &RootVector) -> Vec<(RootVector, u8)> {
        let Some(i) = self.nodes.iter().position(|x| x == r) else {
            return vec![];
        };
        self.edges
            .iter()
            .filter(|e| e.0 == i)
            .map(|e| (self.nodes[e.1], e.2))
            .collect()
    }
}

pub fn root_poset() -> RootPoset {
    let rs = generate_roots();
    let nodes = rs.positive.clone();
    let idx: HashMap<RootVector, usize> = nodes.iter().enumerate().map(|(i, r)| (*r, i)).collect();
    let mut edges = vec![];
    for (i, r) in nodes.iter().enumerate() {
        for k in 0..6 {
            let mut s = *r;
            s[k] += 1;
            if let Some(&j) = idx.get(&s) {
                edges.push((i, j, k as u8 + 1));
            }
        }
    }
    RootPoset { nodes, edges }
}

/// `Θ` as a linear form in the parameters.
pub fn theta_form() -> Vec<Q> {
    root_as_form(&THETA)
}

pub fn is_zero_form(f: &[Q]) -> bool {
    f.iter().all(|x| x.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let rs = generate_roots();
        assert_eq!(rs.roots.len(), 72);
        assert_eq!(rs.positive.len(), 36);
        assert_eq!(rs.highest(), THETA);
        assert!(rs.roots.iter().all(|r| inner(r, r) == 2));
    }

    #[test]
    fn reflections() {
        let s3 = WeylElement::simple(3);
        assert!(s3.preserves_form());
        assert_eq!(s3.compose(&s3), WeylElement::identity());
        let a3 = unit(2);
        for r in &generate_roots().roots {
            assert_eq!(s3.apply(r) == *r, inner(r, &a3) == 0);
        }
        assert_eq!(s3.inverse(), s3);
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_root("12346").unwrap(), [1, 1, 1, 1, 0, 1]);
        assert_eq!(parse_root("1,2,3,2,1,2").unwrap(), THETA);
        assert_eq!(format_root(&[0, 0, 1, 1, 1, 0]), "345");
        assert_eq!(format_root(&[0, 0, -1, 0, 0, -1]), "-36");
        assert_eq!(format_root(&THETA), "(1,2,3,2,1,2)");
        assert!(parse_root("7").is_err());
    }

    #[test]
    fn coefficient_one_set() {
        let c: HashSet<_> = coefficient_one_roots().into_iter().collect();
        assert_eq!(c.len(), 18);
        let g: HashSet<_> = deg_roots_grid().into_iter().collect();
        assert_eq!(c, g);
    }

    #[test]
    fn minimal_words() {
        assert_eq!(minimal_word(&THETA).unwrap(), Vec::<u8>::new());
        let mut t = THETA;
        t[5] -= 1;
        assert_eq!(minimal_word(&t).unwrap(), vec![6]);
        let w = minimal_word(&unit(0)).unwrap();
        assert_eq!(w.len(), 10);
        assert_eq!(word_to_element(&w).apply(&THETA), unit(0));
        assert_eq!(minimal_word(&[1, 0, 0, 0, 0, 1]), Err(Error::NotARoot));
    }

    #[test]
    fn poset() {
        let p = root_poset();
        assert_eq!(p.nodes.len(), 36);
        assert_eq!(p.maximal(), vec![THETA]);
        let mut c: Vec<String> = p
            .covers_of(&unit(2))
            .iter()
            .map(|(r, _)| format_root(r))
            .collect();
        c.sort();
        assert_eq!(c, vec!["23", "34", "36"]);
    }

    #[test]
    fn theta_is_simple_combination() {
        let f = theta_form();
        assert!(f.iter().all(|x| (x * q(3)).is_integer()));
        let p = ParamSet::new(2, 2, 2, 2, 2, 2);
        assert_eq!(root_value(&PARAM_ROOTS[0], p), q(2));
    }
}
