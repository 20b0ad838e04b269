#![allow(dead_code)]

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use wzeta::{ComplexValue, Lattice, Tau};

pub fn c(re: f64, im: f64) -> ComplexValue {
    ComplexValue::new(re, im)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// τ with |Re τ| ≤ 1/2 and Im τ in `im_range`.
pub fn random_tau(rng: &mut impl Rng, im_lo: f64, im_hi: f64) -> Tau {
    Tau::new(c(rng.gen_range(-0.5..0.5), rng.gen_range(im_lo..im_hi))).unwrap()
}

/// A point of the period parallelogram of `L_τ` at distance ≥ `margin`
/// from the lattice and with `Im z / Im τ` at least `margin` from an integer.
pub fn random_z(rng: &mut impl Rng, tau: Tau, margin: f64) -> ComplexValue {
    loop {
        let s: f64 = rng.gen_range(0.0..1.0);
        let t: f64 = rng.gen_range(0.0..1.0);
        let z = tau.get() * t + s;
        let x = z.im / tau.im();
        if (x - x.round()).abs() < margin {
            continue;
        }
        let near = [c(0.0, 0.0), c(1.0, 0.0), tau.get(), tau.get() + 1.0];
        if near.iter().all(|p| (z - p).norm() > margin) {
            return z;
        }
    }
}

/// A lattice with generators in the unit box scaled by a factor in [0.5, 4].
pub fn random_lattice(rng: &mut impl Rng) -> Lattice {
    loop {
        let scale = rng.gen_range(0.5..4.0);
        let w1 = c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)) * scale;
        let w2 = c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)) * scale;
        let l = Lattice::new(w1, w2);
        if let Ok(nb) = l.normalize() {
            // keep the generators reasonably independent
            if nb.tau.im() > 0.05 * nb.tau.get().norm().max(1.0)
                && w1.norm() > 0.1
                && w2.norm() > 0.1
            {
                return l;
            }
        }
    }
}
