use num_bigint::BigInt;
use proptest::prelude::*;

use dedelat_core::oracle::{smith_normal_form, IntMatrix};
use dedelat_core::{FieldElem, FractionalIdeal, QuadElement, Rational, RingConfig};

fn rational() -> impl Strategy<Value = Rational> {
    (-49i64..50, 1i64..50).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

fn quad(d: i64) -> impl Strategy<Value = FieldElem> {
    (rational(), rational()).prop_map(move |(a, b)| QuadElement::new(a, b, d).unwrap())
}

fn od5() -> RingConfig {
    RingConfig::od(-5).unwrap()
}

fn pool_ideal() -> impl Strategy<Value = FractionalIdeal> {
    let gens = prop::sample::select(vec![
        vec!["1"],
        vec!["2", "1+sqrt(-5)"],
        vec!["3", "1+sqrt(-5)"],
        vec!["3", "1-sqrt(-5)"],
        vec!["7", "3+sqrt(-5)"],
        vec!["1+sqrt(-5)"],
    ]);
    (gens, any::<bool>()).prop_map(|(g, invert)| {
        let g: Vec<FieldElem> = g.iter().map(|s| s.parse().unwrap()).collect();
        let a = FractionalIdeal::from_generators(&od5(), &g).unwrap();
        if invert { a.inv() } else { a }
    })
}

proptest! {
    #[test]
    fn field_axioms(x in quad(-5), y in quad(-5), z in quad(-5)) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x - &x, FieldElem::zero());
        if !x.is_zero() {
            prop_assert_eq!(&x * &x.inverse().unwrap(), FieldElem::one());
        }
    }

    #[test]
    fn norm_is_multiplicative(x in quad(2), y in quad(2)) {
        prop_assert_eq!((&x * &y).norm(), &x.norm() * &y.norm());
    }

    #[test]
    fn text_round_trip(x in quad(-5)) {
        prop_assert_eq!(x.to_string().parse::<FieldElem>().unwrap(), x);
    }

    #[test]
    fn ideal_arithmetic(a in pool_ideal(), b in pool_ideal(), g in quad(-5)) {
        prop_assert_eq!(a.mul(&b).unwrap().norm(), &a.norm() * &b.norm());
        prop_assert!(a.mul(&a.inv()).unwrap().is_unit());
        let s = a.sum(&b).unwrap();
        prop_assert!(s.contains_ideal(&a).unwrap() && s.contains_ideal(&b).unwrap());
        if !g.is_zero() {
            let p = FractionalIdeal::principal(&od5(), &g).unwrap();
            prop_assert_eq!(p.norm(), g.norm().abs());
            prop_assert!(p.is_principal().unwrap().is_some());
        }
    }

    #[test]
    fn smith_form_of_diagonal(ds in prop::collection::vec(1i64..40, 1..5)) {
        let n = ds.len();
        let rows: Vec<Vec<BigInt>> =
            (0..n).map(|i| (0..n).map(|j| BigInt::from(if i == j { ds[i] } else { 0 })).collect()).collect();
        let snf = smith_normal_form(&IntMatrix::new(rows, n).unwrap());
        let product: BigInt = ds.iter().map(|&d| BigInt::from(d)).product();
        prop_assert_eq!(snf.iter().product::<BigInt>(), product);
        for w in snf.windows(2) {
            prop_assert!((&w[1] % &w[0]) == BigInt::from(0));
        }
    }
}
