use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;
use su3ml::centralizer::structure_constants;
use su3ml::e6::{parse_root, word_to_element, THETA};
use su3ml::faces::*;
use su3ml::rat::q;
use su3ml::tridiag::{build_x, build_y, char_poly, Tridiagonal};
use su3ml::weights::{is_physical, ParamSet};

fn roots(list: &[&str]) -> HashSet<[i64; 6]> {
    list.iter().map(|s| parse_root(s).unwrap()).collect()
}

fn physical_points(max: i64) -> Vec<ParamSet> {
    let mut v = vec![];
    for a in 1..=max {
        for b in 1..=max {
            for c in 1..=max {
                for d in 1..=max {
                    for e in 1..=max {
                        for f in 1..=max {
                            let p = ParamSet::new(a, b, c, d, e, f);
                            if is_physical(p) {
                                v.push(p);
                            }
                        }
                    }
                }
            }
        }
    }
    v
}

#[test]
fn theta_minus_a6_face() {
    let f = face(&THETA_MINUS_A6, 0, 1).unwrap();
    let got: HashSet<_> = f.roots.iter().copied().collect();
    assert_eq!(got, roots(&["123456", "12346", "1236", "12", "1"]));
    assert!(f.is_valid());
}

#[test]
fn alpha1_face() {
    let a1 = parse_root("1").unwrap();
    let f = face(&a1, 0, 1).unwrap();
    let got: HashSet<_> = f.roots.iter().copied().collect();
    let t = |sub: &[usize]| {
        let mut r = THETA;
        for &i in sub {
            r[i - 1] -= 1;
        }
        r
    };
    let want: HashSet<_> = [t(&[]), t(&[6]), t(&[6, 3]), t(&[6, 3, 4]), t(&[6, 3, 4, 5])]
        .into_iter()
        .collect();
    assert_eq!(got, want);
    // the word s2 s3 s4 s5 s6 s3 s2 s4 s3 s6, read as a product, sends Θ to α1
    let w = word_to_element(&[2, 3, 4, 5, 6, 3, 2, 4, 3, 6]);
    assert_eq!(w.apply(&THETA), a1);
}

#[test]
fn reflected_face_contains_negated_root() {
    let f0 = canonical_face();
    let f1 = face(&THETA, 1, 1).unwrap();
    assert!(f1.roots.contains(&f0.roots[0].map(|x| -x)));
    assert!(f1.is_valid());
}

#[test]
fn four_hundred_thirty_two_faces() {
    let all = enumerate_faces();
    assert_eq!(all.len(), 432);
    assert_eq!(distinct_keys(&all).len(), 432);
    for f in &all {
        assert!(f.is_valid(), "{}", f.label());
        assert_eq!(orthogonal_positive_roots(f), vec![f.orthogonal_root]);
    }
    let orbit = face_orbit(&canonical_face(), true);
    assert_eq!(orbit, distinct_keys(&all).into_iter().collect());
    let plus: HashSet<_> = all
        .iter()
        .filter(|f| f.sign == 1)
        .map(|f| f.key())
        .collect();
    assert_eq!(face_orbit(&canonical_face(), false), plus);
    assert_eq!(plus.len(), 216);
}

#[test]
fn canonical_windows_close() {
    let p = ParamSet::new(2, 2, 2, 2, 2, 2);
    let c = structure_constants(p);
    for j0 in -3..=3 {
        let d = verify_window_with(&canonical_face(), p, j0, &c).unwrap();
        assert!(d.all_zero(), "{d:?}");
    }
}

#[test]
fn random_windows_close() {
    let faces = enumerate_faces();
    let pts = physical_points(5);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20 {
        let f = faces[rng.gen_range(0..faces.len())];
        let p = pts[rng.gen_range(0..pts.len())];
        let j0 = rng.gen_range(-6..=6);
        let d = verify_window(&f, p, j0).unwrap();
        assert!(d.all_zero(), "{} {p} {j0}: {d:?}", f.label());
    }
}

#[test]
fn corrupted_window_fails() {
    let p = ParamSet::new(2, 3, 2, 3, 3, 2);
    let c = structure_constants(p);
    let (x, y) = rep_window(&canonical_face(), p, -4, 9).unwrap();
    let mut bad = x.clone();
    bad.diag[4] += q(1);
    let d = su3ml::faces::verify_window_pair(&bad, &y, &c, 0).unwrap();
    assert!(!d.all_zero());
    let d = su3ml::faces::verify_window_pair(&x, &y, &c, 0).unwrap();
    assert!(d.all_zero());
}

#[test]
fn negative_face_negates_x() {
    let p = ParamSet::new(3, 4, 5, 2, 3, 4);
    let f = face(&THETA_MINUS_A6, 2, 1).unwrap();
    let (xp, _) = rep_window(&f, p, -2, 5).unwrap();
    let rep_plus = FaceRep::new(&f, p).unwrap();
    let rep_as_neg = FaceRep {
        sign: -1,
        ..rep_plus
    };
    let (xm, _) = rep_as_neg.window(-2, 5);
    assert_eq!(xm, xp.negate());
}

fn extract_matches(p: ParamSet) -> bool {
    let pf = physical_face(p).unwrap();
    let (xf, yf) = extract_finite(&pf.face, p, pf.a).unwrap();
    let (x, y) = (build_x(p).unwrap(), build_y(p).unwrap());
    char_poly(&xf) == char_poly(&x)
        && char_poly(&yf) == char_poly(&y)
        && xf.diagonally_similar(&x)
        && yf.diagonally_similar(&y)
}

#[test]
fn physical_identification() {
    let p = ParamSet::new(2, 2, 2, 2, 2, 2);
    let pf = physical_face(p).unwrap();
    assert_eq!(pf.face, canonical_face());
    assert_eq!(pf.range, (1, 2));
    assert!(extract_matches(p));
    // n < l selects the canonical face, n > l the other one
    assert_eq!(
        physical_face(ParamSet::new(2, 3, 2, 3, 3, 2)).unwrap().face,
        canonical_face()
    );
    let q_ = ParamSet::new(3, 2, 3, 2, 2, 3);
    assert_eq!(
        physical_face(q_).unwrap().face.orthogonal_root,
        THETA_MINUS_A6
    );
    for p in physical_points(4) {
        assert!(extract_matches(p), "{p}");
    }
}

fn shifted_equal(a: &(Tridiagonal, Tridiagonal), b: &(Tridiagonal, Tridiagonal)) -> bool {
    a.0 == b.0 && a.1 == b.1
}

#[test]
fn k_faces_are_index_shifts() {
    let p = ParamSet::new(3, 4, 5, 2, 3, 4);
    for lam in [
        THETA,
        THETA_MINUS_A6,
        parse_root("1").unwrap(),
        parse_root("2346").unwrap(),
    ] {
        let f0 = face(&lam, 0, 1).unwrap();
        let v0 = face_values(&f0, p).unwrap();
        for k in 1..=5u8 {
            let fk = face(&lam, k, 1).unwrap();
            let shift = v0.xi[k as usize - 1];
            let wk = rep_window(&fk, p, -3, 7).unwrap();
            let w0 = rep_window(&f0, p, -3 + shift, 7).unwrap();
            assert!(shifted_equal(&wk, &w0), "lam={lam:?} k={k}");
        }
    }
}

#[test]
fn negated_face_is_transpose_with_lambdas_exchanged() {
    let p = ParamSet::new(3, 4, 5, 2, 3, 4);
    for lam in [THETA, THETA_MINUS_A6, parse_root("236").unwrap()] {
        for k in 0..=5u8 {
            let f = face(&lam, k, 1).unwrap();
            let neg = FaceRep::new(&f.negate(), p).unwrap();
            let mut swapped = FaceRep::new(&f, p).unwrap();
            let v = &mut swapped.values;
            std::mem::swap(&mut v.lambda_plus, &mut v.lambda_minus);
            for a in 1..=5 {
                let Ok((lo, hi)) = extraction_range(&neg.values, a) else {
                    continue;
                };
                let (lo2, hi2) = extraction_range(&swapped.values, 6 - a).unwrap();
                assert_eq!(hi - lo, hi2 - lo2);
                let w = (hi - lo + 1) as usize;
                let (xn, yn) = neg.window(lo, w);
                let (xs, ys) = swapped.window(lo2, w);
                let (xt, yt) = (xs.transpose().reversed(), ys.transpose().reversed());
                assert_eq!(char_poly(&xn), char_poly(&xt));
                assert_eq!(char_poly(&yn), char_poly(&yt));
                assert_eq!(xn.diag, xt.diag);
                assert_eq!(yn.products(), yt.products());
            }
        }
    }
}
