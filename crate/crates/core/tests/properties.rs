mod common;

use proptest::prelude::*;
use std::collections::HashSet;
use std::sync::OnceLock;
use su3ml::e6::{
    act_on_params, coefficient_one_roots, missing_label_subgroup, root_value, symmetry_isomorphism,
    SignedWeylElement, WeylElement, THETA,
};
use su3ml::faces::{face_values, physical_face, FaceRep, THETA_MINUS_A6};
use su3ml::rat::{q, qf};
use su3ml::symmetry::{self, enumerate_group, SymmetryElement};
use su3ml::tridiag::xi_params;
use su3ml::weights::{arrangement, derive_ln, multiplicity, Arrangement, ParamSet};

fn physical() -> &'static Vec<ParamSet> {
    static P: OnceLock<Vec<ParamSet>> = OnceLock::new();
    P.get_or_init(|| common::physical_points(6))
}

fn sym_group() -> &'static Vec<SymmetryElement> {
    static G: OnceLock<Vec<SymmetryElement>> = OnceLock::new();
    G.get_or_init(enumerate_group)
}

fn e6_group() -> &'static Vec<SignedWeylElement> {
    static G: OnceLock<Vec<SignedWeylElement>> = OnceLock::new();
    G.get_or_init(missing_label_subgroup)
}

fn iso() -> &'static Vec<(SignedWeylElement, SymmetryElement)> {
    static I: OnceLock<Vec<(SignedWeylElement, SymmetryElement)>> = OnceLock::new();
    I.get_or_init(|| symmetry_isomorphism().unwrap())
}

/// Integer parameters with integral ℓ and n: the last entry is nudged mod 3.
fn integral_params(lo: i64, hi: i64) -> impl Strategy<Value = ParamSet> {
    prop::array::uniform6(lo..=hi).prop_map(|mut m| {
        let s = m[0] + 2 * m[1] + m[2] + 2 * m[3] - m[4] - 2 * m[5];
        // −2·m''2 changes s by −2 per unit, i.e. +1 mod 3
        m[5] += (-s).rem_euclid(3);
        ParamSet::from_array(m)
    })
}

fn physical_point() -> impl Strategy<Value = ParamSet> {
    (0..physical().len()).prop_map(|i| physical()[i])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn rows_and_columns_share_one_sum(p in integral_params(-8, 12)) {
        let a = arrangement(p).unwrap();
        for sq in [a.left, a.right] {
            let s = Arrangement::line_sums(&sq);
            prop_assert!(s[..6].iter().all(|&x| x == s[0]));
        }
        let sum_l = Arrangement::line_sums(&a.left)[0];
        let sum_r = Arrangement::line_sums(&a.right)[0];
        let ln = derive_ln(p).unwrap();
        prop_assert_eq!(sum_r - sum_l, 3 * (ln.l - ln.n));
        prop_assert_eq!(a.params(), p);
        prop_assert!(a.is_magic());
        let m = a.entries().min().unwrap();
        prop_assert_eq!(multiplicity(p), m.max(0) as u64);
    }

    #[test]
    fn symmetry_group_axioms(i in 0usize..144, j in 0usize..144, k in 0usize..144) {
        let g = sym_group();
        let set: HashSet<_> = g.iter().copied().collect();
        let (a, b, c) = (g[i], g[j], g[k]);
        prop_assert!(set.contains(&a.compose(&b)));
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        prop_assert_eq!(a.compose(&SymmetryElement::IDENTITY), a);
        prop_assert_eq!(SymmetryElement::IDENTITY.compose(&a), a);
        prop_assert_eq!(a.compose(&a.inverse()), SymmetryElement::IDENTITY);
        prop_assert_eq!(SymmetryElement::from_code(&a.to_code()).unwrap(), a);
        prop_assert_eq!(symmetry::sign_of(&a.compose(&b)), symmetry::sign_of(&a) * symmetry::sign_of(&b));
    }

    #[test]
    fn symmetry_group_acts(i in 0usize..144, j in 0usize..144, p in integral_params(-5, 9)) {
        let g = sym_group();
        let (a, b) = (g[i], g[j]);
        // the action is on cells; the rightmost factor acts first
        let cells_ab = symmetry::transformed_cells(&a.compose(&b), p);
        let mut seq = [0i64; 18];
        let pb = symmetry::transformed_cells(&b, p);
        let perm = a.cell_perm();
        for c in 0..18 {
            seq[perm[c]] = pb[c];
        }
        prop_assert_eq!(cells_ab, seq);
    }

    #[test]
    fn e6_group_axioms(i in 0usize..144, j in 0usize..144, k in 0usize..144) {
        let g = e6_group();
        prop_assert_eq!(g.len(), 144);
        let set: HashSet<_> = g.iter().copied().collect();
        let (a, b, c) = (g[i], g[j], g[k]);
        prop_assert!(set.contains(&a.compose(&b)));
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        let id = SignedWeylElement::plus(WeylElement::identity());
        prop_assert!(set.contains(&id));
        prop_assert_eq!(a.compose(&id), a);
        let inv = SignedWeylElement { w: a.w.inverse(), sign: a.sign };
        prop_assert!(set.contains(&inv));
        prop_assert_eq!(a.compose(&inv), id);
        let deg: HashSet<_> = coefficient_one_roots().into_iter().collect();
        prop_assert!(deg.iter().all(|r| deg.contains(&a.apply(r))));
    }

    #[test]
    fn both_realizations_act_alike(i in 0usize..144, p in integral_params(-5, 9)) {
        let (s, e) = iso()[i];
        let via_e6 = act_on_params(&s, p);
        let via_sq = symmetry::apply(&e, p);
        if let (Ok(x), Ok(y)) = (&via_e6, &via_sq) {
            prop_assert_eq!(x, y);
        } else {
            prop_assert_eq!(via_e6.is_ok(), via_sq.is_ok());
        }
    }

    #[test]
    fn lambda_difference_is_lambda(p in physical_point()) {
        let xi = xi_params(p).unwrap();
        prop_assert_eq!(&xi.lambda_plus - &xi.lambda_minus, q(xi.lambda));
        prop_assert_eq!(&xi.lambda_plus + &xi.lambda_minus, qf(xi.sum(), 3));
        prop_assert_eq!(xi.xi[5], 0);
        prop_assert_eq!(xi.dim(), multiplicity(p) as i64);
        let f = physical_face(p).unwrap().face;
        let v = face_values(&f, p).unwrap();
        prop_assert_eq!(&v.lambda_plus - &v.lambda_minus, q(v.lambda_value));
        prop_assert_eq!(&v.lambda_plus + &v.lambda_minus, qf(v.xi.iter().sum(), 3));
    }

    #[test]
    fn lambda_is_theta_form(p in physical_point()) {
        let ln = derive_ln(p).unwrap();
        let xi = xi_params(p).unwrap();
        if ln.n <= ln.l {
            prop_assert_eq!(root_value(&THETA, p), q(xi.lambda));
        } else {
            prop_assert_eq!(root_value(&THETA_MINUS_A6, p), q(xi.lambda));
        }
    }

    #[test]
    fn boundary_zeros_isolate_the_block(p in physical_point()) {
        let pf = physical_face(p).unwrap();
        let rep = FaceRep::new(&pf.face, p).unwrap();
        let (lo, hi) = pf.range;
        prop_assert_eq!(hi - lo + 1, multiplicity(p) as i64);
        // coupling into and out of the block vanishes on the super-diagonal
        prop_assert_eq!(rep.a_sup(lo - 1), q(0));
        prop_assert_eq!(rep.a_sup(hi), q(0));
        prop_assert_eq!(rep.b_sup(lo - 1), q(0));
        prop_assert_eq!(rep.b_sup(hi), q(0));
        for j in lo..hi {
            prop_assert_ne!(rep.a_sup(j), q(0));
        }
    }
}
