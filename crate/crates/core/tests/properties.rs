mod common;

use std::sync::OnceLock;

use proptest::prelude::*;

use common::*;
use gradsym::algebra::*;
use gradsym::field::{Field, Scalar};
use gradsym::format;
use gradsym::group::GroupTable;
use gradsym::invariants;
use gradsym::replicate::{self, Checkpoint, CorpusEntry, HuntParams};
use gradsym::symmetry::{self, LinearFunctional, Mode, SymmetryStatus};

fn corpus() -> &'static [CorpusEntry] {
    static C: OnceLock<Vec<CorpusEntry>> = OnceLock::new();
    C.get_or_init(replicate::constructor_corpus_f2)
}

fn yes(a: &GradedAlgebra, mode: Mode) -> bool {
    symmetry::decide_form_existence(a, mode).unwrap().is_yes()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn modes_are_monotone(i in 0usize..1000) {
        let a = &corpus()[i % corpus().len()].algebra;
        let [gs, gf, s, f] = Mode::ALL.map(|m| yes(a, m));
        prop_assert!(!gs || (gf && s));
        prop_assert!(!gf || f);
        prop_assert!(!s || f);
    }

    #[test]
    fn random_algebras_are_monotone(seed in any::<u64>()) {
        for c in replicate::random_corpus(seed, 2) {
            let [_, _, s, f] = Mode::ALL.map(|m| yes(&c.algebra, m));
            prop_assert!(!s || f, "{}", c.name);
        }
    }

    #[test]
    fn products_preserve_graded_symmetry(i in 0usize..1000, j in 0usize..1000) {
        let c = corpus();
        let (a, b) = (&c[i % c.len()].algebra, &c[j % c.len()].algebra);
        prop_assume!(a.group() == b.group());
        let both = yes(a, Mode::GradedSymmetric) && yes(b, Mode::GradedSymmetric);
        let p = direct_product(a, b).unwrap();
        prop_assert!(is_associative_unital(&p));
        prop_assert_eq!(yes(&p, Mode::GradedSymmetric), both);
        if a.group().is_abelian() && a.dim() * b.dim() <= 9 {
            let t = tensor_product(a, b).unwrap();
            prop_assert!(is_associative_unital(&t));
            prop_assert!(!both || yes(&t, Mode::GradedSymmetric));
        }
    }

    #[test]
    fn json_round_trip(seed in any::<u64>(), i in 0usize..1000) {
        let mut algebras: Vec<GradedAlgebra> = replicate::random_corpus(seed, 2).into_iter().map(|c| c.algebra).collect();
        algebras.push(corpus()[i % corpus().len()].algebra.clone());
        for a in algebras {
            let v = format::algebra_to_json(&a);
            let text = format::canonical_string(&v);
            let back = format::parse_algebra_str(&text).unwrap();
            prop_assert_eq!(&back, &a);
            prop_assert_eq!(format::algebra_hash(&back), format::algebra_hash(&a));
        }
    }

    #[test]
    fn certificates_survive_serialization(i in 0usize..1000, m in 0usize..4) {
        let a = &corpus()[i % corpus().len()].algebra;
        let v = symmetry::decide_form_existence(a, Mode::ALL[m]).unwrap();
        let cert = format::Certificate::from_verdict(a, &v);
        let back = format::Certificate::from_json(a.field(), &cert.to_json(a.field())).unwrap();
        let check = format::check_certificate(a, &back).unwrap();
        prop_assert!(check.hash_matches && check.passed, "{:?}", check.detail);
    }

    #[test]
    fn averages_are_invariant((p, m) in prop::sample::select(vec![(3u64, 2usize), (5, 2), (7, 2), (5, 3), (7, 3), (2, 3)]),
                              raw in prop::collection::vec(0i64..7, 3)) {
        let big = Field::galois(p, m).unwrap();
        let k = big.prime_field();
        let g = GroupTable::cyclic(m).unwrap();
        let powers: Vec<usize> = (0..m).collect();
        let spec = frobenius_twisted_spec(&big, &g, &powers, &vec![big.one(); m * m]).unwrap();
        let mu = LinearFunctional::new(raw[..m].iter().map(|&c| k.from_i64(c)).collect());
        prop_assume!(!mu.coords()[0].is_zero());
        let lam = symmetry::average_functional(&spec, &mu).unwrap();
        let eval = |y: &Scalar| dot(&k, lam.coords(), &field_coords(y, &k));
        for y in big.elements() {
            prop_assert_eq!(eval(&y.frobenius().unwrap()), eval(&y));
        }
        prop_assert_eq!(eval(&big.one()), &k.from_i64(m as i64) * &mu.coords()[0]);
        let a = crossed_product(&spec).unwrap();
        let lifted = symmetry::lift_functional(&spec, &lam).unwrap();
        prop_assert!(symmetry::verify_certificate(&a, &lifted, Mode::GradedSymmetric).unwrap().passed());
    }

    #[test]
    fn criterion_matches_decision(a in -6i64..6, b in -6i64..6, p in prop::sample::select(vec![2u64, 3, 5])) {
        prop_assume!(a != 0 && b != 0);
        let q = Field::rationals();
        let mut cases = vec![
            quaternion_algebra(&q, &q.from_i64(a), &q.from_i64(b)).unwrap(),
            cyclic_algebra(p).unwrap(),
            group_algebra(&Field::prime(p).unwrap(), &GroupTable::cyclic(p as usize).unwrap()).unwrap(),
        ];
        let big = Field::galois(p, 2).unwrap();
        let units: Vec<Scalar> = big.elements().filter(|x| !x.is_zero()).collect();
        let c = units[(a.unsigned_abs() as usize) % units.len()].clone();
        let alpha = vec![big.one(), big.one(), big.one(), c];
        if let Ok(x) = frobenius_twisted_spec(&big, &GroupTable::cyclic(2).unwrap(), &[0, 1], &alpha).and_then(|s| crossed_product(&s)) {
            cases.push(x);
        }
        for x in &cases {
            let fast = symmetry::decide_with(x, Mode::GradedSymmetric, true).unwrap();
            let slow = symmetry::decide_with(x, Mode::GradedSymmetric, false).unwrap();
            prop_assert_eq!(fast.status, slow.status);
            if let Some(proper) = fast.division_criterion {
                prop_assert!(invariants::is_graded_division(x).is_yes());
                prop_assert_eq!(proper, matches!(fast.status, SymmetryStatus::Yes | SymmetryStatus::NoOverBaseField));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn hunt_split_equals_single_run(split in 1u64..60) {
        let params = HuntParams {
            characteristic: 2,
            ext_degrees: vec![1, 2],
            groups: vec![GroupTable::cyclic(2).unwrap(), GroupTable::cyclic(4).unwrap()],
            alpha_bound: None,
            budget: None,
        };
        let full = replicate::hunt_counterexample(&params).unwrap();
        let first = replicate::hunt_counterexample(&HuntParams { budget: Some(split), ..params.clone() }).unwrap();
        prop_assert!(first.next_index <= full.next_index);
        let cp = Checkpoint::from_json(&Checkpoint { report: first }.to_json()).unwrap();
        let rest = replicate::resume_hunt(&cp, None).unwrap();
        let strip = |r: &replicate::HuntReport| {
            let mut v = r.to_json();
            v["parameters"]["budget"] = serde_json::Value::Null;
            v
        };
        prop_assert_eq!(strip(&rest), strip(&full));
    }
}
