mod common;

use common::{c, random_lattice, rng};
use rand::Rng;
use wzeta::{ComplexValue, Lattice, Tau, UnimodularMatrix};

/// Writes `p` in the basis `(w1, w2)` and checks the coordinates are integers.
fn integer_coordinates(p: ComplexValue, w1: ComplexValue, w2: ComplexValue) -> Option<(i64, i64)> {
    // p = a·w1 + b·w2, solved by Cramer's rule on the real 2×2 system
    let det = w1.re * w2.im - w1.im * w2.re;
    let a = (p.re * w2.im - p.im * w2.re) / det;
    let b = (w1.re * p.im - w1.im * p.re) / det;
    let (ra, rb) = (a.round(), b.round());
    let back = w1 * ra + w2 * rb;
    ((back - p).norm() < 1e-12 * p.norm().max(1.0)).then_some((ra as i64, rb as i64))
}

#[test]
fn normalize_preserves_the_point_set_and_is_idempotent() {
    let mut rng = rng(5);
    for _ in 0..50 {
        let l = random_lattice(&mut rng);
        let nb = l.normalize().unwrap();
        assert!(nb.tau.im() > 0.0);
        for w in [nb.omega1, nb.omega2] {
            assert!(w == l.omega1 || w == l.omega2 || w == -l.omega1 || w == -l.omega2);
        }
        for m1 in -3..=3 {
            for m2 in -3..=3 {
                let p = l.point(m1, m2);
                assert!(integer_coordinates(p, nb.omega1, nb.omega2).is_some());
            }
        }
        let again = nb.lattice().normalize().unwrap();
        assert_eq!(
            (again.omega1, again.omega2, again.swapped),
            (nb.omega1, nb.omega2, false)
        );
    }
}

fn random_matrix(rng: &mut impl Rng) -> UnimodularMatrix {
    UnimodularMatrix::random_word(rng, 12, 5)
}

#[test]
fn mobius_is_a_group_action() {
    let mut rng = rng(17);
    for _ in 0..50 {
        let m = random_matrix(&mut rng);
        let n = random_matrix(&mut rng);
        assert!(m.max_abs_entry() <= 5);
        let tau = Tau::new(c(rng.gen_range(-1.0..1.0), rng.gen_range(0.5..2.0))).unwrap();
        let lhs = (m * n).mobius(tau).get();
        let rhs = m.mobius(n.mobius(tau)).get();
        assert!(
            (lhs - rhs).norm() < 1e-12 * lhs.norm().max(1.0),
            "{lhs} vs {rhs}"
        );
    }
}

#[test]
fn mobius_image_height() {
    let mut rng = rng(19);
    for _ in 0..50 {
        let m = UnimodularMatrix::random_word(&mut rng, 12, 10);
        let tau = Tau::new(c(rng.gen_range(-1.0..1.0), rng.gen_range(0.3..3.0))).unwrap();
        let image = m.mobius(tau);
        let expected = tau.im() / m.automorphy_factor(tau).norm_sqr();
        assert!(image.im() > 0.0);
        assert!((image.im() - expected).abs() < 1e-12 * expected.max(1.0));
    }
}

#[test]
fn lattice_relation_matches_point_sets() {
    let mut rng = rng(23);
    for _ in 0..20 {
        let m = UnimodularMatrix::random_word(&mut rng, 10, 6);
        let tau = Tau::new(c(rng.gen_range(-0.5..0.5), rng.gen_range(0.6..1.8))).unwrap();
        let (factor, image) = m.lattice_relation(tau);
        let source = Lattice::from_tau(tau);
        let target = Lattice::new(factor * image.get(), factor);
        // every point of L_τ is an integer combination of the scaled basis
        for cc in -4..=4 {
            for dd in -4..=4 {
                let p = source.point(cc, dd);
                let (a, b) = integer_coordinates(p, target.omega1, target.omega2)
                    .expect("in scaled lattice");
                assert!((target.point(a, b) - p).norm() < 1e-9);
                let q = target.point(cc, dd);
                let (a, b) = integer_coordinates(q, source.omega1, source.omega2).expect("in L_τ");
                assert!((source.point(a, b) - q).norm() < 1e-9);
            }
        }
    }
}

#[test]
fn explicit_lattice_relation_example() {
    let m = UnimodularMatrix::new(2, 1, 1, 1).unwrap();
    let (factor, image) = m.lattice_relation(Tau::i());
    assert_eq!(factor, c(1.0, 1.0));
    let scaled = Lattice::new(factor * image.get(), factor);
    for cc in -5i64..=5 {
        for dd in -5i64..=5 {
            let p = c(dd as f64, cc as f64);
            assert!(integer_coordinates(p, scaled.omega1, scaled.omega2).is_some());
        }
    }
}
