//! Unconstrained benchmark functions.
//!
//! Formulations follow the standard benchmark literature (Jamil & Yang 2013,
//! "A literature survey of benchmark functions for global optimisation
//! problems"; Karaboga & Akay 2009, "A comparative study of Artificial Bee
//! Colony algorithm"). Known optima are the values conventionally reported
//! for each function.

use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::{E, PI};
use libm::{cos, exp, pow, sin, sqrt};

use super::sq;
use crate::problem::{scalar, Bounds, ProblemKind, ProblemSpec};

const JAMIL_YANG: &str = "Jamil & Yang (2013), benchmark survey";
const KARABOGA: &str = "Karaboga & Akay (2009), ABC comparative study";

fn spec(name: impl Into<String>, bounds: Bounds, f: fn(&[f64]) -> f64, known_best: f64, source: &str) -> ProblemSpec {
    ProblemSpec::new(name, bounds, scalar(f))
        .with_known_best(known_best)
        .with_source(source)
        .with_kind(ProblemKind::Unconstrained)
}

fn cube(dim: usize, lo: f64, hi: f64) -> Bounds {
    Bounds::uniform(dim, lo, hi).expect("static bounds")
}

pub fn sphere(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

pub fn sum_squares(x: &[f64]) -> f64 {
    x.iter().enumerate().map(|(i, v)| (i + 1) as f64 * v * v).sum()
}

pub fn beale(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    let t1 = 1.5 - a + a * b;
    let t2 = 2.25 - a + a * b * b;
    let t3 = 2.625 - a + a * b * b * b;
    t1 * t1 + t2 * t2 + t3 * t3
}

pub fn easom(x: &[f64]) -> f64 {
    let (a, b) = (x[0] - PI, x[1] - PI);
    -cos(x[0]) * cos(x[1]) * exp(-(a * a) - b * b)
}

pub fn matyas(x: &[f64]) -> f64 {
    0.26 * (x[0] * x[0] + x[1] * x[1]) - 0.48 * x[0] * x[1]
}

pub fn colville(x: &[f64]) -> f64 {
    let (x1, x2, x3, x4) = (x[0], x[1], x[2], x[3]);
    100.0 * sq(x1 * x1 - x2)
        + sq(x1 - 1.0)
        + sq(x3 - 1.0)
        + 90.0 * sq(x3 * x3 - x4)
        + 10.1 * (sq(x2 - 1.0) + sq(x4 - 1.0))
        + 19.8 * (x2 - 1.0) * (x4 - 1.0)
}

pub fn trid(x: &[f64]) -> f64 {
    let a: f64 = x.iter().map(|v| (v - 1.0) * (v - 1.0)).sum();
    let b: f64 = x.windows(2).map(|w| w[0] * w[1]).sum();
    a - b
}

pub fn zakharov(x: &[f64]) -> f64 {
    let s1: f64 = x.iter().map(|v| v * v).sum();
    let s2: f64 = x.iter().enumerate().map(|(i, v)| 0.5 * (i + 1) as f64 * v).sum();
    s1 + s2 * s2 + s2 * s2 * s2 * s2
}

pub fn schwefel_1_2(x: &[f64]) -> f64 {
    let mut prefix = 0.0;
    let mut total = 0.0;
    for v in x {
        prefix += v;
        total += prefix * prefix;
    }
    total
}

pub fn rosenbrock(x: &[f64]) -> f64 {
    x.windows(2).map(|w| 100.0 * sq(w[1] - w[0] * w[0]) + sq(w[0] - 1.0)).sum()
}

pub fn dixon_price(x: &[f64]) -> f64 {
    let head = sq(x[0] - 1.0);
    head + x.windows(2).enumerate().map(|(i, w)| (i + 2) as f64 * sq(2.0 * w[1] * w[1] - w[0])).sum::<f64>()
}

pub fn branin(x: &[f64]) -> f64 {
    let (x1, x2) = (x[0], x[1]);
    let b = 5.1 / (4.0 * PI * PI);
    let c = 5.0 / PI;
    let t = 1.0 / (8.0 * PI);
    sq(x2 - b * x1 * x1 + c * x1 - 6.0) + 10.0 * (1.0 - t) * cos(x1) + 10.0
}

pub fn bohachevsky_1(x: &[f64]) -> f64 {
    x[0] * x[0] + 2.0 * x[1] * x[1] - 0.3 * cos(3.0 * PI * x[0]) - 0.4 * cos(4.0 * PI * x[1]) + 0.7
}

pub fn bohachevsky_2(x: &[f64]) -> f64 {
    x[0] * x[0] + 2.0 * x[1] * x[1] - 0.3 * cos(3.0 * PI * x[0]) * cos(4.0 * PI * x[1]) + 0.3
}

pub fn bohachevsky_3(x: &[f64]) -> f64 {
    x[0] * x[0] + 2.0 * x[1] * x[1] - 0.3 * cos(3.0 * PI * x[0] + 4.0 * PI * x[1]) + 0.3
}

pub fn booth(x: &[f64]) -> f64 {
    sq(x[0] + 2.0 * x[1] - 7.0) + sq(2.0 * x[0] + x[1] - 5.0)
}

/// Steepness parameter `m = 10`.
pub fn michalewicz(x: &[f64]) -> f64 {
    -x.iter().enumerate().map(|(i, &v)| sin(v) * pow(sin((i + 1) as f64 * v * v / PI), 20.0)).sum::<f64>()
}

pub fn goldstein_price(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    let p = 1.0 + sq(a + b + 1.0) * (19.0 - 14.0 * a + 3.0 * a * a - 14.0 * b + 6.0 * a * b + 3.0 * b * b);
    let q = 30.0 + sq(2.0 * a - 3.0 * b) * (18.0 - 32.0 * a + 12.0 * a * a + 48.0 * b - 36.0 * a * b + 27.0 * b * b);
    p * q
}

/// Perm function with `beta = 0.5`; minimum 0 at `x_i = i`.
pub fn perm(x: &[f64]) -> f64 {
    const BETA: f64 = 0.5;
    let n = x.len();
    (1..=n)
        .map(|k| {
            let inner: f64 = x
                .iter()
                .enumerate()
                .map(|(i, &v)| {
                    let i = (i + 1) as f64;
                    (pow(i, k as f64) + BETA) * (pow(v / i, k as f64) - 1.0)
                })
                .sum();
            inner * inner
        })
        .sum()
}

pub fn ackley(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    let s1: f64 = x.iter().map(|v| v * v).sum();
    let s2: f64 = x.iter().map(|&v| cos(2.0 * PI * v)).sum();
    -20.0 * exp(-0.2 * sqrt(s1 / n)) - exp(s2 / n) + 20.0 + E
}

/// Shekel's foxholes.
pub fn foxholes(x: &[f64]) -> f64 {
    const GRID: [f64; 5] = [-32.0, -16.0, 0.0, 16.0, 32.0];
    let mut sum = 0.0;
    for j in 0..25 {
        let a1 = GRID[j % 5];
        let a2 = GRID[j / 5];
        let d = pow(x[0] - a1, 6.0) + pow(x[1] - a2, 6.0);
        sum += 1.0 / ((j + 1) as f64 + d);
    }
    1.0 / (1.0 / 500.0 + sum)
}

pub fn hartmann_3(x: &[f64]) -> f64 {
    const ALPHA: [f64; 4] = [1.0, 1.2, 3.0, 3.2];
    const A: [[f64; 3]; 4] = [[3.0, 10.0, 30.0], [0.1, 10.0, 35.0], [3.0, 10.0, 30.0], [0.1, 10.0, 35.0]];
    const P: [[f64; 3]; 4] =
        [[0.3689, 0.1170, 0.2673], [0.4699, 0.4387, 0.7470], [0.1091, 0.8732, 0.5547], [0.0381, 0.5743, 0.8828]];
    -(0..4)
        .map(|i| {
            let inner: f64 = (0..3).map(|j| A[i][j] * sq(x[j] - P[i][j])).sum();
            ALPHA[i] * exp(-inner)
        })
        .sum::<f64>()
}

fn penalty_u(x: f64, a: f64, k: f64, m: f64) -> f64 {
    if x > a {
        k * pow(x - a, m)
    } else if x < -a {
        k * pow(-x - a, m)
    } else {
        0.0
    }
}

/// Generalized penalized function no. 2 (Levy & Montalvo).
pub fn penalized_2(x: &[f64]) -> f64 {
    let n = x.len();
    let sin2 = |v: f64| {
        let s = sin(v);
        s * s
    };
    let mut core = sin2(3.0 * PI * x[0]);
    for i in 0..n - 1 {
        core += sq(x[i] - 1.0) * (1.0 + sin2(3.0 * PI * x[i + 1]));
    }
    core += sq(x[n - 1] - 1.0) * (1.0 + sin2(2.0 * PI * x[n - 1]));
    0.1 * core + x.iter().map(|&v| penalty_u(v, 5.0, 100.0, 4.0)).sum::<f64>()
}

/// Scalable functions and their default dimension.
pub(crate) const SCALABLE: [(&str, usize); 7] = [
    ("sphere", 30),
    ("sumsquares", 30),
    ("zakharov", 10),
    ("schwefel-1.2", 30),
    ("rosenbrock", 30),
    ("dixon-price", 30),
    ("ackley", 30),
];

/// Builds a scalable function at dimension `dim`.
pub(crate) fn scalable(base: &str, dim: usize) -> Option<ProblemSpec> {
    let name = alloc::format!("{base}-{dim}");
    let ones = || alloc::vec![1.0; dim];
    let p = match base {
        "sphere" => spec(name, cube(dim, -100.0, 100.0), sphere, 0.0, KARABOGA).with_witness(alloc::vec![0.0; dim]),
        "sumsquares" => {
            spec(name, cube(dim, -10.0, 10.0), sum_squares, 0.0, KARABOGA).with_witness(alloc::vec![0.0; dim])
        }
        "zakharov" => spec(name, cube(dim, -5.0, 10.0), zakharov, 0.0, KARABOGA).with_witness(alloc::vec![0.0; dim]),
        "schwefel-1.2" => {
            spec(name, cube(dim, -100.0, 100.0), schwefel_1_2, 0.0, KARABOGA).with_witness(alloc::vec![0.0; dim])
        }
        "rosenbrock" => spec(name, cube(dim, -30.0, 30.0), rosenbrock, 0.0, KARABOGA).with_witness(ones()),
        "dixon-price" => {
            let w: Vec<f64> = (1..=dim).map(|i| pow(2.0, -(pow(2.0, i as f64) - 2.0) / pow(2.0, i as f64))).collect();
            spec(name, cube(dim, -10.0, 10.0), dixon_price, 0.0, KARABOGA).with_witness(w)
        }
        "ackley" => spec(name, cube(dim, -32.0, 32.0), ackley, 0.0, KARABOGA).with_witness(alloc::vec![0.0; dim]),
        _ => return None,
    };
    Some(p)
}

/// The fixed-dimension functions.
pub(crate) fn fixed(name: &str) -> Option<ProblemSpec> {
    let p = match name {
        "beale" => spec(name, cube(2, -4.5, 4.5), beale, 0.0, KARABOGA).with_witness([3.0, 0.5].into()),
        "easom" => spec(name, cube(2, -100.0, 100.0), easom, -1.0, KARABOGA).with_witness([PI, PI].into()),
        "matyas" => spec(name, cube(2, -10.0, 10.0), matyas, 0.0, KARABOGA).with_witness([0.0, 0.0].into()),
        "colville" => spec(name, cube(4, -10.0, 10.0), colville, 0.0, KARABOGA).with_witness([1.0; 4].into()),
        "trid-6" => spec(name, cube(6, -36.0, 36.0), trid, -50.0, KARABOGA)
            .with_witness((1..=6).map(|i| (i * (7 - i)) as f64).collect()),
        "trid-10" => spec(name, cube(10, -100.0, 100.0), trid, -210.0, KARABOGA)
            .with_witness((1..=10).map(|i| (i * (11 - i)) as f64).collect()),
        "branin" => spec(
            name,
            Bounds::new([-5.0, 0.0].into(), [10.0, 15.0].into()).expect("static"),
            branin,
            0.397887,
            KARABOGA,
        )
        .with_witness([PI, 2.275].into()),
        "bohachevsky-1" => {
            spec(name, cube(2, -100.0, 100.0), bohachevsky_1, 0.0, KARABOGA).with_witness([0.0, 0.0].into())
        }
        "bohachevsky-2" => {
            spec(name, cube(2, -100.0, 100.0), bohachevsky_2, 0.0, KARABOGA).with_witness([0.0, 0.0].into())
        }
        "bohachevsky-3" => {
            spec(name, cube(2, -100.0, 100.0), bohachevsky_3, 0.0, KARABOGA).with_witness([0.0, 0.0].into())
        }
        "booth" => spec(name, cube(2, -10.0, 10.0), booth, 0.0, KARABOGA).with_witness([1.0, 3.0].into()),
        // Optimum printed to five significant digits; the witness sits 3.4e-6 below it.
        "michalewicz-2" => spec(name, cube(2, 0.0, PI), michalewicz, -1.8013, KARABOGA),
        "michalewicz-5" => spec(name, cube(5, 0.0, PI), michalewicz, -4.6877, KARABOGA),
        "goldstein-price" => {
            spec(name, cube(2, -2.0, 2.0), goldstein_price, 3.0, KARABOGA).with_witness([0.0, -1.0].into())
        }
        "perm" => spec(name, cube(4, -4.0, 4.0), perm, 0.0, KARABOGA).with_witness([1.0, 2.0, 3.0, 4.0].into()),
        "foxholes" => {
            spec(name, cube(2, -65.536, 65.536), foxholes, 0.998004, KARABOGA).with_witness([-32.0, -32.0].into())
        }
        "hartmann-3" => spec(name, cube(3, 0.0, 1.0), hartmann_3, -3.86278, JAMIL_YANG),
        "penalized-2" => spec(name, cube(30, -50.0, 50.0), penalized_2, 0.0, KARABOGA).with_witness([1.0; 30].into()),
        _ => return None,
    };
    Some(p)
}

/// Suite order: sphere, sumsquares, beale, easom, matyas, colville, trid-6,
/// trid-10, zakharov, schwefel-1.2, rosenbrock, dixon-price, branin,
/// bohachevsky-1/2/3, booth, michalewicz-2/5, goldstein-price, perm, ackley,
/// foxholes, hartmann-3, penalized-2.
pub(crate) const SUITE: [&str; 25] = [
    "sphere",
    "sumsquares",
    "beale",
    "easom",
    "matyas",
    "colville",
    "trid-6",
    "trid-10",
    "zakharov",
    "schwefel-1.2",
    "rosenbrock",
    "dixon-price",
    "branin",
    "bohachevsky-1",
    "bohachevsky-2",
    "bohachevsky-3",
    "booth",
    "michalewicz-2",
    "michalewicz-5",
    "goldstein-price",
    "perm",
    "ackley",
    "foxholes",
    "hartmann-3",
    "penalized-2",
];
