use convolutive::partitions::{count_series, SetSpec};
use convolutive::{EtaProductSpec, TruncatedSeries};

const N: usize = 30;

/// prod over allowed parts k of (1 + q^k + ... + q^{k * max_mult}), multiplied
/// out as plain integer polynomials.
fn product_oracle(allowed: impl Fn(usize) -> bool, max_mult: usize) -> Vec<i64> {
    let mut c = vec![0i64; N + 1];
    c[0] = 1;
    for k in (1..=N).filter(|&k| allowed(k)) {
        let mut next = vec![0i64; N + 1];
        for (n, &v) in c.iter().enumerate() {
            let mut j = 0;
            while j <= max_mult && n + j * k <= N {
                next[n + j * k] += v;
                j += 1;
            }
        }
        c = next;
    }
    c
}

fn check(name: &str, spec: SetSpec, eta: &[(u32, i32)], oracle: Vec<i64>) {
    let enumerated = count_series(&spec, N);
    let expanded = EtaProductSpec::from_pairs(eta).expand(N);
    let oracle = TruncatedSeries::from_i64s(&oracle);
    assert_eq!(enumerated, oracle, "{name}: enumeration vs product oracle");
    assert_eq!(expanded, oracle, "{name}: eta quotient vs product oracle");
}

#[test]
fn classes_match_their_eta_quotients() {
    check("P", SetSpec::unrestricted(), &[(1, -1)], product_oracle(|_| true, N));
    check("D", SetSpec::distinct(), &[(1, -1), (2, 1)], product_oracle(|_| true, 1));
    check("D_o", SetSpec::d_odd(), &[(1, -1), (2, 2), (4, -1)], product_oracle(|k| k % 2 == 1, 1));
    check("P3", SetSpec::p3(), &[(1, -1), (4, 1)], product_oracle(|_| true, 3));
    check(
        "P3_o",
        SetSpec::p3_odd(),
        &[(1, -1), (2, 1), (4, 1), (8, -1)],
        product_oracle(|k| k % 2 == 1, 3),
    );
    check(
        "D_{4,2}",
        SetSpec::d_mod(4, 2),
        &[(2, -1), (4, 2), (8, -1)],
        product_oracle(|k| k % 4 == 2, 1),
    );
    check("P_{4,0}", SetSpec::p_mod(4, 0), &[(4, -1)], product_oracle(|k| k % 4 == 0, N));
}

#[test]
fn squares_count_theta() {
    // phi(q) = f2^5 / (f1^2 f4^2) = sum over all integers s of q^{s^2}
    let expanded = EtaProductSpec::from_pairs(&[(1, -2), (2, 5), (4, -2)]).expand(N);
    assert_eq!(count_series(&SetSpec::squares(), N), expanded);
}
