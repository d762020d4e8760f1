//! Floating-point search for non-trivial common zeros of the three order-2
//! minors of the real Jacobian of `conj(xy)(x^p + y^q)`:
//!
//! ```text
//! p^2 |xy|^2 |x|^{2(p-1)} = |y|^2 |x^p + y^q|^2
//! q^2 |xy|^2 |y|^{2(q-1)} = |x|^2 |x^p + y^q|^2
//! x conj(y) |x^p + y^q|^2 = pq |xy|^2 conj(x)^{p-1} y^{q-1}
//! ```
//!
//! This is a diagnostic only. The isolated-singularity decision is made by
//! [`super::validate`]; sampling cannot certify that no zero exists.
//!
//! Every sample is drawn from its own ChaCha stream keyed by the sample
//! index, so any partition of `0..sample_count` into chunks, merged with
//! [`ScanAccumulator::merge`], gives the same report.

use alloc::vec::Vec;
use core::ops::Range;

use num_complex::Complex64;
use num_traits::ToPrimitive;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::Rational;

/// Number of best raw samples kept for local refinement.
const REFINE_CANDIDATES: usize = 8;
const REFINE_MAX_EVALUATIONS: usize = 20_000;

#[derive(Debug, Clone, PartialEq)]
pub struct ScanConfig {
    pub sample_count: u64,
    pub radius: Rational,
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanPoint {
    pub index: u64,
    pub x: Complex64,
    pub y: Complex64,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanReport {
    pub p: u32,
    pub q: u32,
    pub samples: u64,
    /// Smallest residual among the raw samples.
    pub best_sample: Option<ScanPoint>,
    /// Result of compass-search refinement started from the best samples.
    pub refined: Option<ScanPoint>,
}

impl ScanReport {
    pub fn min_residual(&self) -> Option<f64> {
        match (&self.best_sample, &self.refined) {
            (Some(a), Some(b)) => Some(a.residual.min(b.residual)),
            (Some(a), None) => Some(a.residual),
            (None, Some(b)) => Some(b.residual),
            (None, None) => None,
        }
    }
}

fn rel(lhs: f64, rhs: f64) -> f64 {
    let denom = lhs * lhs + rhs * rhs;
    if denom == 0.0 {
        1.0
    } else {
        (lhs - rhs) * (lhs - rhs) / denom
    }
}

fn rel_complex(lhs: Complex64, rhs: Complex64) -> f64 {
    let denom = lhs.norm_sqr() + rhs.norm_sqr();
    if denom == 0.0 {
        1.0
    } else {
        (lhs - rhs).norm_sqr() / denom
    }
}

fn powi(base: f64, exp: u32) -> f64 {
    (0..exp).fold(1.0, |acc, _| acc * base)
}

/// Largest of the three scale-free residuals `|L - R|^2 / (|L|^2 + |R|^2)`
/// of the minor equations. Invariant under `(x, y) -> (t^q x, t^p y)`, so it
/// does not decay toward the origin; it vanishes exactly at critical points.
pub fn minor_residual(p: u32, q: u32, x: Complex64, y: Complex64) -> f64 {
    let h = x.powu(p) + y.powu(q);
    let h2 = h.norm_sqr();
    let x2 = x.norm_sqr();
    let y2 = y.norm_sqr();
    let (pf, qf) = (p as f64, q as f64);

    let e1 = rel(pf * pf * x2 * y2 * powi(x2, p - 1), y2 * h2);
    let e2 = rel(qf * qf * x2 * y2 * powi(y2, q - 1), x2 * h2);
    let e3 = rel_complex(
        x * y.conj() * h2,
        x.conj().powu(p - 1) * y.powu(q - 1) * (pf * qf * x2 * y2),
    );
    e1.max(e2).max(e3)
}

fn unit(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

fn disc_point(rng: &mut ChaCha8Rng, radius: f64) -> Complex64 {
    loop {
        let u = 2.0 * unit(rng) - 1.0;
        let v = 2.0 * unit(rng) - 1.0;
        if u * u + v * v <= 1.0 && (u != 0.0 || v != 0.0) {
            return Complex64::new(radius * u, radius * v);
        }
    }
}

fn order(a: &ScanPoint, b: &ScanPoint) -> core::cmp::Ordering {
    a.residual
        .total_cmp(&b.residual)
        .then(a.index.cmp(&b.index))
}

/// Partial scan state; see the module docs.
#[derive(Debug, Clone)]
pub struct ScanAccumulator {
    p: u32,
    q: u32,
    radius: f64,
    seed: u64,
    samples: u64,
    best: Vec<ScanPoint>,
}

impl ScanAccumulator {
    pub fn new(p: u32, q: u32, config: &ScanConfig) -> Self {
        assert!(p >= 1 && q >= 1, "exponents must be positive");
        let radius = config
            .radius
            .numer()
            .to_f64()
            .zip(config.radius.denom().to_f64())
            .map(|(n, d)| n / d)
            .filter(|r| r.is_finite() && *r > 0.0)
            .expect("radius must be a positive finite rational");
        ScanAccumulator {
            p,
            q,
            radius,
            seed: config.seed,
            samples: 0,
            best: Vec::new(),
        }
    }

    pub fn sample(&self, index: u64) -> ScanPoint {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index);
        let x = disc_point(&mut rng, self.radius);
        let y = disc_point(&mut rng, self.radius);
        ScanPoint {
            index,
            x,
            y,
            residual: minor_residual(self.p, self.q, x, y),
        }
    }

    fn keep(&mut self, point: ScanPoint) {
        self.best.push(point);
        self.best.sort_by(order);
        self.best.truncate(REFINE_CANDIDATES);
    }

    pub fn add_range(&mut self, range: Range<u64>) {
        for index in range {
            let point = self.sample(index);
            self.samples += 1;
            if self.best.len() < REFINE_CANDIDATES
                || order(&point, self.best.last().expect("non-empty")).is_lt()
            {
                self.keep(point);
            }
        }
    }

    pub fn merge(mut self, other: ScanAccumulator) -> Self {
        self.samples += other.samples;
        for point in other.best {
            self.keep(point);
        }
        self
    }

    fn refine(&self, start: ScanPoint) -> ScanPoint {
        let floor = 1e-6 * self.radius;
        let admissible = |c: &[f64; 4]| {
            let x2 = c[0] * c[0] + c[1] * c[1];
            let y2 = c[2] * c[2] + c[3] * c[3];
            let r2 = self.radius * self.radius;
            x2 <= r2 && y2 <= r2 && x2 >= floor * floor && y2 >= floor * floor
        };
        let eval = |c: &[f64; 4]| {
            minor_residual(
                self.p,
                self.q,
                Complex64::new(c[0], c[1]),
                Complex64::new(c[2], c[3]),
            )
        };
        let mut point = [start.x.re, start.x.im, start.y.re, start.y.im];
        let mut value = start.residual;
        let mut step = self.radius / 8.0;
        let mut evaluations = 0;
        while step > self.radius * 1e-13 && evaluations < REFINE_MAX_EVALUATIONS && value > 0.0 {
            let mut improved = false;
            for axis in 0..4 {
                for sign in [1.0, -1.0] {
                    let mut trial = point;
                    trial[axis] += sign * step;
                    if !admissible(&trial) {
                        continue;
                    }
                    evaluations += 1;
                    let v = eval(&trial);
                    if v < value {
                        point = trial;
                        value = v;
                        improved = true;
                    }
                }
            }
            if !improved {
                step *= 0.5;
            }
        }
        ScanPoint {
            index: start.index,
            x: Complex64::new(point[0], point[1]),
            y: Complex64::new(point[2], point[3]),
            residual: value,
        }
    }

    pub fn finish(self) -> ScanReport {
        let refined = self
            .best
            .iter()
            .map(|start| self.refine(*start))
            .min_by(order);
        ScanReport {
            p: self.p,
            q: self.q,
            samples: self.samples,
            best_sample: self.best.first().copied(),
            refined,
        }
    }
}

/// Sequential scan over sample indices `0..config.sample_count`.
pub fn critical_point_scan(p: u32, q: u32, config: &ScanConfig) -> ScanReport {
    let mut acc = ScanAccumulator::new(p, q, config);
    acc.add_range(0..config.sample_count);
    acc.finish()
}
