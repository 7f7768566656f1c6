use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;
use su3ml::e6::*;
use su3ml::matrix::Mat;
use su3ml::rat::q;
use su3ml::symmetry::{self, sign_of};
use su3ml::tridiag::xi_params;
use su3ml::weights::{arrangement, derive_ln, multiplicity};
use su3ml::ParamSet;

#[test]
fn weyl_group_order_and_isometry() {
    let g = weyl_group();
    assert_eq!(g.elements.len(), WEYL_ORDER);
    assert!(g.elements.iter().step_by(97).all(|w| w.preserves_form()));
    let rs = generate_roots();
    let set: HashSet<_> = rs.roots.iter().copied().collect();
    for w in g.elements.iter().step_by(501) {
        assert!(rs.roots.iter().all(|r| set.contains(&w.apply(r))));
        assert_eq!(w.compose(&w.inverse()), WeylElement::identity());
    }
}

#[test]
fn longest_element_properties() {
    let w0 = longest_element();
    assert_eq!(w0.compose(&w0), WeylElement::identity());
    let m = SignedWeylElement::minus(w0);
    let e = |i: usize| {
        let mut r = [0; 6];
        r[i - 1] = 1;
        r
    };
    assert_eq!(m.apply(&e(1)), e(5));
    assert_eq!(m.apply(&e(2)), e(4));
    assert_eq!(m.apply(&e(3)), e(3));
    assert_eq!(m.apply(&e(6)), e(6));
    let s1 = WeylElement::simple(1);
    assert_eq!(w0.compose(&s1).compose(&w0), WeylElement::simple(5));
    assert_eq!(*weyl_group().lengths.iter().max().unwrap(), 36);
}

#[test]
fn param_action_is_homomorphism() {
    let g = weyl_group();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..100 {
        let a = g.elements[rng.gen_range(0..g.elements.len())];
        let b = g.elements[rng.gen_range(0..g.elements.len())];
        let sa = SignedWeylElement {
            w: a,
            sign: if rng.gen() { 1 } else { -1 },
        };
        let sb = SignedWeylElement {
            w: b,
            sign: if rng.gen() { 1 } else { -1 },
        };
        assert_eq!(
            param_action(&sa.compose(&sb)),
            &param_action(&sa) * &param_action(&sb)
        );
    }
    let id = SignedWeylElement::plus(WeylElement::identity());
    assert_eq!(param_action(&id), Mat::identity(6));
    let neg = SignedWeylElement::minus(WeylElement::identity());
    assert_eq!(param_action(&neg), Mat::scalar(6, &q(-1)));
}

#[test]
fn s6_negates_l_minus_n() {
    let s6 = SignedWeylElement::plus(WeylElement::simple(6));
    for a in SAMPLE_POINTS {
        let p = ParamSet::from_array(a);
        let d = derive_ln(p).unwrap();
        let pp = act_on_params(&s6, p).unwrap();
        let dd = derive_ln(pp).unwrap();
        assert_eq!(dd.l - dd.n, -(d.l - d.n));
        // α6 is the form ℓ - n
        assert_eq!(root_value(&[0, 0, 0, 0, 0, 1], p), q(d.l - d.n));
    }
}

#[test]
fn deg_roots_match_arrangement_forms() {
    let grid = deg_roots_grid();
    for a in SAMPLE_POINTS {
        let p = ParamSet::from_array(a);
        let arr = arrangement(p).unwrap();
        let cells: Vec<i64> = arr.entries().collect();
        for (k, r) in grid.iter().enumerate() {
            assert_eq!(
                root_value(r, p),
                q(cells[k]),
                "cell {k} root {}",
                format_root(r)
            );
        }
    }
    assert!(grid.contains(&[0, 0, 1, 0, 0, 0]));
    assert!(grid.contains(&[1, 1, 1, 1, 1, 1]));
}

#[test]
fn subgroup_is_full_stabilizer() {
    let sub = missing_label_subgroup();
    assert_eq!(sub.len(), 144);
    let stab: HashSet<_> = deg_set_stabilizer().into_iter().collect();
    let subset: HashSet<_> = sub.iter().copied().collect();
    assert_eq!(stab, subset);
    let w3 = fundamental_weight(3);
    for s in sub.iter().filter(|s| s.sign == 1) {
        let img = s.w.to_mat().mul_vec(&w3);
        assert_eq!(img, w3);
    }
}

#[test]
fn subgroup_isomorphic_to_arrangement_group() {
    let iso = symmetry_isomorphism().unwrap();
    assert_eq!(iso.len(), 144);
    let images: HashSet<_> = iso.iter().map(|(_, e)| *e).collect();
    assert_eq!(images.len(), 144);
    for (s, e) in &iso {
        assert_eq!(s.sign, sign_of(e));
    }
    // agreement on further physical points
    for a in [[1, 1, 3, 2, 3, 2], [4, 2, 3, 3, 6, 1], [2, 2, 3, 3, 3, 3]] {
        let p = ParamSet::from_array(a);
        assert!(multiplicity(p) > 0);
        for (s, e) in &iso {
            assert_eq!(act_on_params(s, p).unwrap(), symmetry::apply(e, p).unwrap());
        }
    }
}

#[test]
fn theta_is_big_lambda() {
    for a in [
        [2, 2, 2, 2, 2, 2],
        [3, 4, 5, 2, 3, 4],
        [2, 3, 2, 3, 3, 2],
        [4, 2, 3, 3, 6, 1],
    ] {
        let p = ParamSet::from_array(a);
        let d = derive_ln(p).unwrap();
        if d.n > d.l {
            continue;
        }
        let xi = xi_params(p).unwrap();
        assert_eq!(root_value(&THETA, p), q(xi.lambda), "{p}");
    }
}
