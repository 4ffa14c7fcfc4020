//! Worked examples through the public API, one module after another.

use farey_gaps::continuants::{continuant, continuant_pair, TupleSpec};
use farey_gaps::empirical::{empirical_nu, farey_next, scan, successor_denominator, ScanConfig};
use farey_gaps::enumeration::{
    enumerate_a_circ, leaf_area, status_of, CongruenceSpec, LeafTree, Status,
};
use farey_gaps::farey_triangle::{bcz_index, bcz_map, q, region, Point2Q};
use farey_gaps::proportions::{nu_closed_form, nu_from_enumeration, numeric_eval, SymbolicValue};
use num_bigint::BigInt;

fn t(s: &str) -> TupleSpec {
    s.parse().unwrap()
}

fn d3() -> CongruenceSpec {
    CongruenceSpec::new(3, 0, 1).unwrap()
}

fn listed(r: usize, c: &CongruenceSpec) -> Vec<String> {
    let dec = enumerate_a_circ(r, c).unwrap();
    let mut v: Vec<String> = dec
        .finite
        .iter()
        .map(|m| TupleSpec::from_indices(&m.tuple).to_string())
        .collect();
    v.sort();
    v
}

#[test]
fn tuple_notation() {
    assert_eq!(t("2,(1,4)^2,3").expand(), vec![2, 1, 4, 1, 4, 3]);
    assert_eq!(t("(4,1)^3").expand(), vec![4, 1, 4, 1, 4, 1]);
    assert_eq!(t("5").expand(), vec![5]);
    let s = t("1,2^3,3,(1,4)^2,1,5");
    assert_eq!(t(&s.to_string()), s);
}

#[test]
fn continuant_values() {
    assert_eq!(continuant(&t("2,2")), BigInt::from(3));
    assert_eq!(continuant(&t("3,2^4,1,6")), BigInt::from(1));
    assert_eq!(continuant(&t("3,2^5,1,6")), BigInt::from(-1));
    for r in 2..=10 {
        assert_eq!(
            continuant(&TupleSpec::new().push(1).repeat(&[2], r - 1)),
            BigInt::from(1)
        );
    }
    for n in 1..=10u32 {
        assert_eq!(
            continuant(&TupleSpec::new().repeat(&[4, 1], n)),
            BigInt::from(2 * n + 1)
        );
    }
    assert_eq!(
        continuant_pair(&t("2,2")),
        (BigInt::from(3), BigInt::from(2))
    );
    assert_eq!(
        continuant_pair(&t("(4,1)^2,4")),
        (BigInt::from(12), BigInt::from(5))
    );
    assert_eq!(
        continuant_pair(&t("1,2,2")),
        (BigInt::from(1), BigInt::from(1))
    );
}

#[test]
fn bcz_examples() {
    assert_eq!(bcz_index(&Point2Q::from_ints(1, 3, 2, 3)).unwrap(), 2);
    assert_eq!(bcz_index(&Point2Q::from_ints(1, 1, 1, 1)).unwrap(), 2);
    assert_eq!(bcz_index(&Point2Q::from_ints(4, 5, 3, 5)).unwrap(), 3);
    assert_eq!(
        bcz_map(&Point2Q::from_ints(3, 5, 4, 5)).unwrap(),
        Point2Q::from_ints(4, 5, 1, 1)
    );
}

#[test]
fn region_examples() {
    let r = region(&t("2,4,1"));
    assert_eq!(r.area(), q(1, 210));
    assert_eq!(
        r.vertices(),
        &[
            Point2Q::from_ints(4, 5, 3, 5),
            Point2Q::from_ints(1, 1, 2, 3),
            Point2Q::from_ints(1, 1, 5, 7)
        ]
    );
    assert_eq!(region(&t("1")).area(), q(1, 6));
    assert!(region(&t("3,1,3")).is_empty());
    assert_eq!(region(&t("2,2")).area(), q(1, 10));
    assert_eq!(region(&t("1,4")).area(), q(1, 35));
    assert_eq!(region(&t("1,2,4")).area(), q(1, 210));
    assert_eq!(region(&t("4,2,1")).area(), q(1, 210));
    assert_eq!(region(&t("1,3,2")).area(), q(3, 140));
    assert_eq!(region(&t("2,3,1")).area(), q(3, 140));
}

#[test]
fn admissibility() {
    assert_eq!(status_of(&[3], &d3()), Status::Degenerate);
    assert_eq!(status_of(&[2, 2], &d3()), Status::Degenerate);
    assert_eq!(status_of(&[1, 2, 2], &d3()), Status::Live);
}

#[test]
fn enumeration_examples() {
    let two = enumerate_a_circ(2, &d3()).unwrap();
    assert_eq!(listed(2, &d3()), vec!["2^2"]);
    let mut fams: Vec<String> = two.families.iter().map(|f| f.template()).collect();
    fams.sort();
    assert_eq!(two.families.len(), 2);
    assert!(
        two.families
            .iter()
            .all(|f| f.modulus == 3 && f.residue == 1 && f.k_min == 4),
        "{fams:?}"
    );

    let seven = enumerate_a_circ(7, &d3()).unwrap();
    assert!(seven.families.is_empty());
    assert_eq!(seven.finite.len(), 7);

    let ten = enumerate_a_circ(10, &d3()).unwrap();
    assert!(ten.families.is_empty());
    assert_eq!(ten.finite.len(), 4);

    let d2 = CongruenceSpec::new(2, 0, 1).unwrap();
    assert_eq!(listed(5, &d2), vec!["1,2^3,3", "3,2^3,1"]);
}

#[test]
fn leaf_examples() {
    assert_eq!(leaf_area(LeafTree::A, 1, 6).unwrap(), q(1, 910));
    assert_eq!(leaf_area(LeafTree::B, 1, 8).unwrap(), q(1, 2142));
    assert_eq!(leaf_area(LeafTree::C, 3, 8).unwrap(), q(9, 12920));
}

#[test]
fn proportion_examples() {
    let rat = |n: i64, d: i64| SymbolicValue::from_rational(q(n, d));
    let exact = |r, d| {
        nu_from_enumeration(r, d, 0)
            .unwrap()
            .exact()
            .unwrap()
            .clone()
    };
    let closed = |r, d| nu_closed_form(r, d, 0).unwrap().exact().unwrap().clone();
    assert_eq!(exact(6, 3), rat(3089, 85085));
    assert_eq!(exact(1, 3).to_string(), "6 - 2*pi/sqrt(3) - 2*ln(3)");
    assert_eq!(exact(4, 2), rat(2, 45));
    assert_eq!(exact(10, 3), rat(284, 82225));
    assert_eq!(closed(13, 3), rat(100349, 83445180));
    assert_eq!(closed(5, 2), rat(8, 693));
    assert_eq!(closed(80, 3), rat(92056, 15965549615));
    assert_eq!(numeric_eval(&rat(284, 82225), 17), "0.00345393736698085");
}

#[test]
fn scan_examples() {
    assert_eq!(successor_denominator(0, 1, 5), 5);
    assert_eq!(farey_next(1, 5, 5), 4);
    assert_eq!(farey_next(3, 5, 5), 2);
    assert_eq!(farey_next(2, 5, 5), 3);
    let h = scan(&ScanConfig::new(5, 3, 0, 10).unwrap());
    assert_eq!(h.coloured_total, 2);
    assert_eq!((h.count(3), h.count(5)), (1, 1));
    let nu = empirical_nu(&h).unwrap();
    assert_eq!(nu.len(), 2);
    assert_eq!(nu[&3], q(1, 2));
    assert_eq!(nu[&5], q(1, 2));
    let h = scan(&ScanConfig::new(3, 3, 0, 10).unwrap());
    assert_eq!(h.coloured_total, 2);
}
