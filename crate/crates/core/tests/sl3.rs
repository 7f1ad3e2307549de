use congruence_euler::characters::HighestWeight;
use congruence_euler::eulerchar::{chi_gl, chi_sl};
use congruence_euler::ExactRational;

// −χ_h(GL₂(ℤ), Sym^{k−2}) for every even k ≥ 2, so weight 2 contributes −1.
fn s(k: i64) -> ExactRational {
    if k < 2 || k % 2 == 1 {
        return ExactRational::zero();
    }
    -chi_gl(2, &HighestWeight::new(vec![k - 2, 0]).unwrap()).unwrap()
}

fn sl3(parts: [i64; 3]) -> ExactRational {
    chi_sl(3, &HighestWeight::new(parts.to_vec()).unwrap()).unwrap()
}

#[test]
fn parity_cases_with_signed_weight_two() {
    let one = ExactRational::one();
    for a in 0..=6 {
        for b in 0..=a {
            let ee = -(&(&one + &s(2 * a - 2 * b + 2)) + &s(2 * b + 2));
            assert_eq!(sl3([2 * a, 2 * b, 0]), ee, "({}, {}, 0)", 2 * a, 2 * b);
            assert_eq!(sl3([2 * a + 1, 2 * b, 0]), &s(2 * a + 4) - &s(2 * b + 2));
            assert_eq!(sl3([2 * a + 1, 2 * b + 1, 0]), &s(2 * a + 4) - &s(2 * a - 2 * b + 2));
            if b < a {
                assert_eq!(sl3([2 * a, 2 * b + 1, 0]), ExactRational::zero());
            }
        }
    }
}

#[test]
fn duality_on_rank_three() {
    for l1 in 0..=8 {
        for l2 in 0..=l1 {
            assert_eq!(sl3([l1, l2, 0]), sl3([l1, l1 - l2, 0]));
        }
    }
}
