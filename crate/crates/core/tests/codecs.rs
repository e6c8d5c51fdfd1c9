use gemlink::codecs::{
    blackboard_frame, dq_to_diagram, dq_to_gauss, equivalent_up_to_relabeling, from_diagram, interlacement_parity_ok,
    linking_matrix, parse_dq, parse_gauss, realizable, serialize_dq, serialize_gauss, to_diagram, Diagonal,
    GaussCode, LinkingMatrix,
};
use gemlink::Error;
use proptest::prelude::*;

const R524: &str = include_str!("../data/r524.gauss");
const WEBER_SEIFERT: &str = include_str!("../data/weber_seifert.dq");

#[test]
fn dataset_round_trips() {
    let f = parse_dq(WEBER_SEIFERT).unwrap();
    let again = parse_dq(&serialize_dq(&f)).unwrap();
    assert_eq!(f, again);
    let code = dq_to_gauss(&f).unwrap();
    assert_eq!(code.components.len(), 9);
    assert_eq!(code.crossing_count(), 142);
    let d = dq_to_diagram(&f).unwrap();
    let m = linking_matrix(&d, None).unwrap();
    assert!(m.is_symmetric());
    assert_eq!(LinkingMatrix::from_csv(&m.to_csv(), Diagonal::Writhe).unwrap(), m);
}

#[test]
fn corrupted_dataset_is_rejected() {
    let broken = WEBER_SEIFERT.replacen("83,264", "83,26", 1);
    let err = parse_dq(&broken).and_then(|f| f.validate().map(|_| f)).unwrap_err();
    assert!(err.is_input_error(), "{err}");
}

#[test]
fn r524_frames_to_minus_three() {
    let code = parse_gauss(R524.trim()).unwrap();
    let d = to_diagram(&code).unwrap();
    let framed = blackboard_frame(&d, &[-3, -3, -3]).unwrap();
    for c in 0..3 {
        assert_eq!(framed.writhe(c).unwrap(), -3);
    }
    let m = linking_matrix(&framed, Some(&[-3, -3, -3])).unwrap();
    assert_eq!(m.entries, vec![vec![-3, 1, -1], vec![1, -3, -1], vec![-1, -1, -3]]);
}

#[test]
fn non_planar_codes() {
    assert!(!interlacement_parity_ok(&parse_gauss("((+1,+2,-1,-2))").unwrap()));
    let tricky = parse_gauss("((+1,+2,+3,+4,+5,-1,-4,-5,-2,-3))").unwrap();
    assert!(interlacement_parity_ok(&tricky));
    assert!(!realizable(&tricky).unwrap());
    assert!(matches!(to_diagram(&tricky), Err(Error::Topology(_))));
}

#[test]
fn malformed_codes() {
    for bad in ["", "((+1,-1", "((+1,+1))", "((+1,-2))", "((1,-1))", "((+a,-a))"] {
        assert!(parse_gauss(bad).and_then(|c| c.validate().map(|_| c)).is_err(), "{bad}");
    }
}

fn relabel(code: &GaussCode, shift: i64, rot: usize) -> GaussCode {
    let n = code.crossing_count() as i64;
    let components = code
        .components
        .iter()
        .map(|c| {
            let mut c: Vec<i64> = c.iter().map(|&e| e.signum() * ((e.abs() - 1 + shift) % n + 1)).collect();
            if !c.is_empty() {
                let k = rot % c.len();
                c.rotate_left(k);
            }
            c
        })
        .rev()
        .collect();
    GaussCode { components, signs: None }
}

proptest! {
    #[test]
    fn relabeling_keeps_equivalence(shift in 0i64..7, rot in 0usize..10) {
        let code = parse_gauss(R524.trim()).unwrap();
        let other = relabel(&code, shift, rot);
        prop_assert!(equivalent_up_to_relabeling(&code, &other));
        let d = to_diagram(&other).unwrap();
        let a = linking_matrix(&to_diagram(&code).unwrap(), None).unwrap();
        let b = linking_matrix(&d, None).unwrap();
        // components come back in reverse order, and without signs the
        // diagram is only fixed up to a mirror image
        let flipped: Vec<Vec<i64>> = (0..3).map(|i| (0..3).map(|j| b.entries[2 - i][2 - j]).collect()).collect();
        let mirrored: Vec<Vec<i64>> = flipped.iter().map(|r| r.iter().map(|x| -x).collect()).collect();
        prop_assert!(a.entries == flipped || a.entries == mirrored, "{:?} vs {:?}", a.entries, flipped);
    }

    #[test]
    fn serialization_is_identity(shift in 0i64..7, rot in 0usize..10) {
        let code = relabel(&parse_gauss(R524.trim()).unwrap(), shift, rot);
        let text = serialize_gauss(&code);
        prop_assert_eq!(serialize_gauss(&parse_gauss(&text).unwrap()), text);
    }

    #[test]
    fn framing_is_idempotent(t in prop::array::uniform3(-6i64..6)) {
        let d = to_diagram(&parse_gauss(R524.trim()).unwrap()).unwrap();
        let once = blackboard_frame(&d, &t).unwrap();
        let twice = blackboard_frame(&once, &t).unwrap();
        prop_assert_eq!(once.crossing_count(), twice.crossing_count());
        prop_assert_eq!(serialize_gauss(&from_diagram(&once)), serialize_gauss(&from_diagram(&twice)));
        for c in 0..3 {
            prop_assert_eq!(once.writhe(c).unwrap(), t[c]);
        }
        prop_assert!(realizable(&from_diagram(&once)).unwrap());
    }
}
