#![allow(dead_code)]
use su3ml::weights::{is_physical, ParamSet};

/// Physical parameter sets with every entry in `1..=max`.
pub fn physical_points(max: i64) -> Vec<ParamSet> {
    let mut v = vec![];
    let r = 1..=max;
    for a in r.clone() {
        for b in r.clone() {
            for c in r.clone() {
                for d in r.clone() {
                    for e in r.clone() {
                        for f in r.clone() {
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
