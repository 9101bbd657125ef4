//! Globally adaptive 7/15-point Gauss-Kronrod quadrature for complex-valued
//! integrands on `[0, ∞)` with super-exponentially decaying tails.

#![allow(clippy::excessive_precision)]

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use num_complex::Complex64;
use num_traits::Zero;

// Kronrod abscissae on [-1, 1], descending; odd indices are the Gauss nodes.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

// Gauss weights for XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

pub(crate) const NODES_PER_RULE: usize = 15;

/// One application of the rule on `[a, b]`: (Kronrod estimate, error estimate).
pub(crate) fn gk15<F>(f: &mut F, a: f64, b: f64) -> (Complex64, f64)
where
    F: FnMut(f64) -> Complex64,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let f_center = f(center);
    let mut kronrod = f_center * WGK[7];
    let mut gauss = f_center * WG[3];
    let mut res_abs = f_center.norm() * WGK[7];
    let mut values = [(Complex64::zero(), Complex64::zero()); 7];
    for (j, slot) in values.iter_mut().enumerate() {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        kronrod += (f1 + f2) * WGK[j];
        res_abs += (f1.norm() + f2.norm()) * WGK[j];
        if j % 2 == 1 {
            gauss += (f1 + f2) * WG[j / 2];
        }
        *slot = (f1, f2);
    }
    let mean = kronrod * 0.5;
    let mut res_asc = WGK[7] * (f_center - mean).norm();
    for (j, (f1, f2)) in values.iter().enumerate() {
        res_asc += WGK[j] * ((f1 - mean).norm() + (f2 - mean).norm());
    }
    let scale = half.abs();
    let result = kronrod * half;
    let res_abs = res_abs * scale;
    let res_asc = res_asc * scale;
    let mut err = ((kronrod - gauss) * half).norm();
    if res_asc != 0.0 && err != 0.0 {
        err = res_asc * (200.0 * err / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    (result, err)
}

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: Complex64,
    err: f64,
    depth: u32,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Segment {}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Segment {
    // Largest error first; ties broken by position for determinism.
    fn cmp(&self, other: &Self) -> Ordering {
        self.err
            .total_cmp(&other.err)
            .then_with(|| other.a.total_cmp(&self.a))
    }
}

/// Outcome of an adaptive integration, successful or not.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Integral {
    pub value: Complex64,
    pub err: f64,
    pub evaluations: u64,
    pub converged: bool,
}

/// Settings for [`integrate_tail`].
#[derive(Debug, Clone, Copy)]
pub(crate) struct TailRule {
    /// Relative accuracy target.
    pub tol: f64,
    /// Maximum number of bisections of any initial panel.
    pub max_depth: u32,
    /// Relative tail cutoff.
    pub truncation_eps: f64,
    /// Width of the initial panels.
    pub panel: f64,
    /// Hard cap on the number of initial panels.
    pub max_panels: usize,
    /// Hard cap on the number of bisections overall.
    pub max_subdivisions: usize,
}

/// Integrates `f` over `[0, ∞)`.
///
/// The range is truncated at the first panel end `U` where `bound(U)` (an
/// upper bound for `|f(u)|`, valid and decreasing beyond `U` once
/// `tail_ready(U)` holds) falls below `truncation_eps` times the running
/// estimate. The bound at `U` is added to the error estimate to account for
/// the discarded tail.
pub(crate) fn integrate_tail<F, B, R>(
    mut f: F,
    mut bound: B,
    tail_ready: R,
    rule: &TailRule,
) -> Integral
where
    F: FnMut(f64) -> Complex64,
    B: FnMut(f64) -> f64,
    R: Fn(f64) -> bool,
{
    let mut heap = BinaryHeap::new();
    let mut total = Complex64::zero();
    let mut evaluations = 0u64;
    let mut tail = 0.0;
    let mut truncated = false;
    for i in 0..rule.max_panels {
        let a = i as f64 * rule.panel;
        let b = a + rule.panel;
        let (value, err) = gk15(&mut f, a, b);
        evaluations += NODES_PER_RULE as u64;
        total += value;
        heap.push(Segment {
            a,
            b,
            value,
            err,
            depth: 0,
        });
        if tail_ready(b) {
            let edge = bound(b);
            if edge <= rule.truncation_eps * total.norm() || edge == 0.0 {
                tail = edge;
                truncated = true;
                break;
            }
        }
    }

    let mut frozen: Vec<Segment> = Vec::new();
    let mut subdivisions = 0usize;
    let sum_err = |heap: &BinaryHeap<Segment>, frozen: &[Segment]| -> f64 {
        heap.iter().chain(frozen.iter()).map(|s| s.err).sum::<f64>()
    };
    let sum_value = |heap: &BinaryHeap<Segment>, frozen: &[Segment]| -> Complex64 {
        heap.iter()
            .chain(frozen.iter())
            .fold(Complex64::zero(), |acc, s| acc + s.value)
    };

    loop {
        let value = sum_value(&heap, &frozen);
        let err = sum_err(&heap, &frozen) + tail;
        if err <= rule.tol * value.norm() || err == 0.0 {
            return Integral {
                value,
                err,
                evaluations,
                converged: truncated,
            };
        }
        let exhausted = subdivisions >= rule.max_subdivisions;
        let Some(worst) = heap.pop().filter(|_| !exhausted) else {
            return Integral {
                value,
                err,
                evaluations,
                converged: false,
            };
        };
        if worst.depth >= rule.max_depth {
            frozen.push(worst);
            continue;
        }
        subdivisions += 1;
        let mid = 0.5 * (worst.a + worst.b);
        for (a, b) in [(worst.a, mid), (mid, worst.b)] {
            let (value, err) = gk15(&mut f, a, b);
            evaluations += NODES_PER_RULE as u64;
            heap.push(Segment {
                a,
                b,
                value,
                err,
                depth: worst.depth + 1,
            });
        }
    }
}
