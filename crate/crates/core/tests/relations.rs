mod common;

use common::*;
use uqgl::pbwcore::relations::{all_relations, higher_relations};

#[test]
fn defining_relations_hold() {
    for &(m, n) in SHAPES.iter() {
        let s = sh(m, n);
        for r in all_relations(s) {
            let v = r.evaluate(s);
            assert!(v.is_zero(), "({m},{n}) {} {}: {v:?}", r.family, r.label);
        }
    }
}

#[test]
fn uex_present_only_with_two_by_two_block() {
    let fams = |m, n| higher_relations(sh(m, n)).iter().filter(|r| r.family == "uex").count();
    assert_eq!(fams(2, 2), 2);
    assert_eq!(fams(1, 1), 0);
    assert_eq!(fams(3, 1), 0);
}
