use hatelex::agreement::{offensiveness, ratio_bounded, Mean};

fn o(p: usize, n: usize) -> (f64, f64) {
    let r = ratio_bounded(p, n).unwrap();
    (
        r,
        offensiveness(u8::from(p > 0), Some(r), Mean::Harmonic).unwrap(),
    )
}

fn close(got: (f64, f64), want: (f64, f64)) {
    assert!(
        (got.0 - want.0).abs() <= 0.001 && (got.1 - want.1).abs() <= 0.001,
        "{got:?} vs {want:?}"
    );
}

#[test]
fn remaining_inter_agreement_rows() {
    close(o(199, 0), (1.0, 1.0));
    close(o(2, 1), (0.667, 0.8));
    close(o(3, 2), (0.6, 0.75));
    close(o(6, 2), (0.75, 0.857));
    close(o(91, 3), (0.968, 0.984));
    close(o(10723, 11), (0.999, 0.999));
}

#[test]
fn context_raises_offensiveness() {
    let bare = o(106, 680).1;
    for (p, n) in [(2, 1), (3, 2), (56, 3)] {
        assert!(o(p, n).1 > bare);
    }
}
