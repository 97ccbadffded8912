use qsync::cyclic::{self, bch_bound, is_dual_containing, min_distance, DEFAULT_BUDGET};
use qsync::qsc::{
    build_augmented_pair, qsc_params, theorem1_pair, PairOptions, SelectionVector, Theorem1Config,
};
use qsync::{CodeFamily, Error};

#[test]
fn example_two_through_public_api() {
    let fam = CodeFamily::new(41, 4).unwrap();
    let cfg = Theorem1Config {
        delta1: 1,
        extra: vec![6],
        eps: vec![0],
    };
    let out = theorem1_pair(
        &cfg,
        &fam,
        PairOptions {
            cl: 2,
            cr: 3,
            budget: DEFAULT_BUDGET,
        },
    )
    .unwrap();
    assert_eq!(out.report.qsc.notation, "(2,3)-[[21,2]]_41");
    assert!(out.report.qsc.floors_exact);
    assert!(out.report.verified);

    // same pair through the generic route
    let t = fam.table();
    let a = SelectionVector::from_residues(t, &[1, 3, 2, 4, 6]).unwrap();
    let b = SelectionVector::from_residues(t, &[3, 2, 4]).unwrap();
    let (ca, cb) = build_augmented_pair(&a, &b, &fam).unwrap();
    assert_eq!(ca, out.code_a);
    assert_eq!(cb, out.code_b);
    let da = min_distance(&ca, DEFAULT_BUDGET).unwrap();
    let db = min_distance(&cb, DEFAULT_BUDGET).unwrap();
    let r = qsc_params(&fam, &ca, &cb, &da, &db, 2, 3).unwrap();
    assert_eq!(r.qsc, out.report.qsc);
    assert!(matches!(
        qsc_params(&fam, &ca, &cb, &da, &db, 10, 6),
        Err(Error::Tolerance {
            total: 16,
            order: 16
        })
    ));
    assert!(matches!(
        qsc_params(&fam, &cb, &ca, &db, &da, 0, 0),
        Err(Error::ChainCondition(_))
    ));
}

#[test]
fn table_codes() {
    let fam = CodeFamily::new(5, 3).unwrap();
    let c = fam.code_from_residues(&[1, 2]);
    assert_eq!(min_distance(&c, DEFAULT_BUDGET).unwrap().exact, Some(3));
    assert!(is_dual_containing(&c, fam.table()).unwrap().holds);
    let d = c.dual();
    assert_eq!(
        (
            d.dimension(),
            min_distance(&d, DEFAULT_BUDGET).unwrap().exact
        ),
        (3, Some(4))
    );

    let fam = CodeFamily::new(5, 4).unwrap();
    let a = fam.code_from_residues(&[1, 4]);
    assert_eq!(a.dimension(), 11);
    let d = min_distance(&a, DEFAULT_BUDGET).unwrap();
    assert_eq!(d.exact, Some(3));
    assert_eq!(d.oracle, None);
    assert_eq!(bch_bound(&a).bound, 3);
}

#[test]
fn matrices_are_orthogonal() {
    let fam = CodeFamily::new(13, 4).unwrap();
    let c = fam.code_from_residues(&[1, 2, 6]);
    let g = c.generator_matrix().unwrap();
    let h = c.parity_check_matrix().unwrap();
    assert_eq!(
        (g.rows(), h.rows()),
        (c.dimension(), c.length() - c.dimension())
    );
    let t = qsync::gf::FieldTable::new(c.field()).unwrap();
    assert!(g.mul_transpose(&h, &t).is_zero());
    assert_eq!(cyclic::root_cosets(&c, fam.table()).unwrap().len(), 3);
}
