use super::NeumaierSum;
use crate::{Error, Result};

/// Number of explicit terms before the tail correction.
pub const HURWITZ_TERMS: usize = 10_000;

/// Hurwitz zeta `ζ(k, a) = Σ_{n≥0} (n + a)^{−k}` for integer `k ≥ 2`, `0 < a ≤ 1`.
///
/// The first [`HURWITZ_TERMS`] terms are summed explicitly (smallest first);
/// the remainder is replaced by `(N+a)^{1−k}/(k−1) + (N+a)^{−k}/2`. The next
/// Euler–Maclaurin term, `k(N+a)^{−k−1}/12`, bounds the error (below 2e−13).
pub fn hurwitz_zeta(k: u32, a: f64) -> Result<f64> {
    if k < 2 {
        return Err(Error::Domain(format!("hurwitz_zeta needs k ≥ 2, got {k}")));
    }
    if !(a > 0.0 && a <= 1.0) {
        return Err(Error::Domain(format!(
            "hurwitz_zeta needs 0 < a ≤ 1, got {a}"
        )));
    }
    let k = k as i32;
    let edge = HURWITZ_TERMS as f64 + a;
    let mut acc = NeumaierSum::new();
    acc += edge.powi(1 - k) / f64::from(k - 1) + 0.5 * edge.powi(-k);
    for n in (0..HURWITZ_TERMS).rev() {
        acc += (n as f64 + a).powi(-k);
    }
    Ok(acc.value())
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force partial sum with an integral tail, independent of the
    /// production truncation point.
    fn oracle(k: i32, a: f64) -> f64 {
        let n = 200_000;
        let head: f64 = (0..n).rev().map(|j| (j as f64 + a).powi(-k)).sum();
        let edge = n as f64 + a;
        head + edge.powi(1 - k) / f64::from(k - 1) + 0.5 * edge.powi(-k)
    }

    #[test]
    fn classical_values() {
        assert!((hurwitz_zeta(2, 1.0).unwrap() - 1.644_934_066_848_226_4).abs() < 1e-12);
        assert!((hurwitz_zeta(2, 0.5).unwrap() - 4.934_802_200_544_679).abs() < 1e-12);
        assert!((hurwitz_zeta(3, 1.0).unwrap() - 1.202_056_903_159_594_3).abs() < 1e-12);
        assert!((hurwitz_zeta(3, 0.3).unwrap() - 37.636_268_294_363_02).abs() < 1e-12);
        assert!((hurwitz_zeta(4, 0.7).unwrap() - 4.313_191_613_071_289_7).abs() < 1e-12);
    }

    #[test]
    fn agrees_with_longer_partial_sum() {
        for &(k, a) in &[(2, 0.1), (2, 0.9), (3, 0.25), (5, 0.6)] {
            let v = hurwitz_zeta(k, a).unwrap();
            assert!((v - oracle(k as i32, a)).abs() < 1e-11, "k={k} a={a}");
        }
    }

    #[test]
    fn domain_errors() {
        assert!(hurwitz_zeta(2, 0.0).is_err());
        assert!(hurwitz_zeta(2, -0.5).is_err());
        assert!(hurwitz_zeta(2, 1.5).is_err());
        assert!(hurwitz_zeta(1, 0.5).is_err());
    }
}
