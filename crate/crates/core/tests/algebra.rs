use cshuffle_core::cyc::{ceval, CycStatId};
use cshuffle_core::qsym::{expand_monomials, f_cyc, k_cyc, perm_with_cyclic_peak_set, PkAlgElem, QSymElem};
use cshuffle_core::series::{rotation_census, v_cpkcdes, v_image, SeriesElem};
use cshuffle_core::perm::eval;
use cshuffle_core::{CycPerm, Error, Perm, StatId, StatValue};

#[test]
fn rotation_census_has_four_parts() {
    for n in 2..=7 {
        for c in CycPerm::all(n) {
            let j = ceval(&CycStatId::Cpk, &c).as_int().unwrap() as u32;
            let k = ceval(&CycStatId::Cdes, &c).as_int().unwrap() as u32;
            let n = n as u32;
            assert_eq!(rotation_census(&c), Some([j, j, k - j, n - j - k]), "{c}");
        }
    }
}

#[test]
fn f_mult_example() {
    let one = QSymElem::fundamental(&[1]);
    let want = &QSymElem::fundamental(&[2]) + &QSymElem::fundamental(&[1, 1]);
    assert_eq!(&one * &one, want);
    let p = expand_monomials(&QSymElem::fundamental(&[3]), 1);
    assert_eq!(p.terms().map(|(e, _)| e.clone()).collect::<Vec<_>>(), vec![vec![3]]);
}

fn int_set(st: StatId, p: &Perm) -> Vec<u32> {
    match eval(&st, p) {
        StatValue::IntSet(s) => s,
        other => panic!("expected a set, got {other}"),
    }
}

#[test]
fn kcyc_is_rotation_sum() {
    for n in 2..=6u32 {
        for c in CycPerm::all(n as usize) {
            let mut by_rotation = PkAlgElem::zero();
            for r in c.orbit() {
                by_rotation = &by_rotation + &PkAlgElem::k(n, &int_set(StatId::PkSet, &r)).unwrap();
            }
            let set = int_set(StatId::CPkL, c.rep());
            assert_eq!(k_cyc(n, &set).unwrap(), by_rotation, "{c}");
        }
    }
    assert!(matches!(k_cyc(4, &[1, 2]), Err(Error::InvalidPeakSet { .. })));
    assert!(perm_with_cyclic_peak_set(5, &[2, 4]).is_ok());
}

#[test]
fn image_of_small_classes() {
    let t = 12;
    let single: CycPerm = "1".parse().unwrap();
    assert_eq!(v_image(&CycPerm::all(0).next().unwrap(), t), SeriesElem::unit(t));
    // [1] ⧢ [2] = {[12]}, and [12] has cpk = cdes = 1.
    let sq = v_image(&single, t).hadamard(&v_image(&single, t)).unwrap();
    assert!(sq.agrees(&v_cpkcdes(2, 1, 1, t).unwrap()).unwrap());
    assert!(matches!(f_cyc(2, &[1, 2]), Err(Error::EscherSet { .. })));
}
