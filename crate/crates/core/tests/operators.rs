mod common;

use su3ml::centralizer::{fit_constants_from_rep, structure_constants, verify_relations};
use su3ml::hahn::{hahn_algebra_check, hahn_matrices, heun_hahn_xy, EtaParams};
use su3ml::rat::qf;
use su3ml::symmetry::verify_all;
use su3ml::tridiag::*;
use su3ml::weights::{lr_oracle, multiplicity, ParamSet};
use su3ml::Error;

#[test]
fn multiplicity_agrees_with_decomposition() {
    for a in 1..=4 {
        for b in 1..=4 {
            for c in 1..=4 {
                for d in 1..=4 {
                    for e in 1..=4 {
                        for f in 1..=4 {
                            let p = ParamSet::new(a, b, c, d, e, f);
                            let (w, wp, wpp) = p.factors();
                            assert_eq!(multiplicity(p), lr_oracle(w, wp, wpp).unwrap(), "{p}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn example2_y_has_minus_three_quarters() {
    for p in 1..=5 {
        for qq in 1..=5 {
            let e = Example::Two { p, q: qq };
            let y = build_y(e.params()).unwrap();
            assert!(char_poly(&y).eval(&qf(-3, 4)) == qf(0, 1), "p={p} q={qq}");
            let s = spectrum(&build_x(e.params()).unwrap(), DEFAULT_TOL).unwrap();
            assert!(matches_values(
                &s,
                &closed_form_examples(e).unwrap().values(),
                1e-10
            ));
        }
    }
}

#[test]
fn example3_spectra_and_l2_coincidence() {
    for qq in 1..=5 {
        for p in 1..=qq {
            for l in 2..=p + 1 {
                let e = Example::Three { l, p, q: qq };
                let s = spectrum(&build_x(e.params()).unwrap(), DEFAULT_TOL).unwrap();
                assert!(matches_values(
                    &s,
                    &closed_form_examples(e).unwrap().values(),
                    1e-10
                ));
            }
            let v3 = closed_form_examples(Example::Three { l: 2, p, q: qq }).unwrap();
            let v2 = closed_form_examples(Example::Two { p, q: qq }).unwrap();
            assert_eq!(v3, v2);
        }
    }
}

#[test]
fn symmetry_small_scan() {
    for p in common::physical_points(3) {
        assert!(verify_all(p).unwrap().is_empty(), "{p}");
    }
}

#[test]
fn relations_and_fit_small_scan() {
    for p in common::physical_points(3) {
        let (x, y) = (build_x(p).unwrap().to_mat(), build_y(p).unwrap().to_mat());
        let c = structure_constants(p);
        assert!(verify_relations(&x, &y, &c).unwrap().all_zero(), "{p}");
        match fit_constants_from_rep(&x, &y) {
            Ok(fit) => assert!(fit.agrees_with(&c), "{p}"),
            Err(Error::Underdetermined) => assert_eq!(x.rows, 1),
            Err(e) => panic!("{p}: {e}"),
        }
    }
}

#[test]
fn heun_hahn_small_scan() {
    for p in common::physical_points(4) {
        let xi = xi_params(p).unwrap();
        let (hx, hy) = heun_hahn_xy(&xi).unwrap();
        assert_eq!(hx, build_x(p).unwrap().to_mat(), "{p}");
        assert_eq!(hy, build_y(p).unwrap().to_mat(), "{p}");
        let (h1, h2) = hahn_matrices(&xi).unwrap();
        assert!(
            hahn_algebra_check(&h1, &h2.to_mat(), &EtaParams::from_xi(&xi))
                .unwrap()
                .all_zero()
        );
    }
}
