//! Classical constrained engineering design problems.
//!
//! All variables are continuous, including the ones that are integer or
//! discrete in some statements of these problems (gear teeth, plate
//! thicknesses, car side impact materials); they are optimized within the
//! same bounds without rounding. Every constraint is written as `g(x) <= 0`.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_4, PI, SQRT_2};
use libm::{fabs, pow, sqrt};

use super::sq;
use crate::problem::{scalar, Bounds, ConstraintSet, ProblemKind, ProblemSpec, ScalarFn};

fn problem(
    name: &str,
    lower: Vec<f64>,
    upper: Vec<f64>,
    objective: fn(&[f64]) -> f64,
    constraints: Vec<ScalarFn>,
    source: &str,
) -> ProblemSpec {
    ProblemSpec::new(name, Bounds::new(lower, upper).expect("static bounds"), scalar(objective))
        .with_constraints(ConstraintSet::inequalities(constraints))
        .with_kind(ProblemKind::Constrained)
        .with_source(source)
}

mod welded {
    use super::*;

    const P: f64 = 6000.0;
    const L: f64 = 14.0;
    const E: f64 = 30e6;
    const G: f64 = 12e6;

    pub fn cost(x: &[f64]) -> f64 {
        let (h, l, t, b) = (x[0], x[1], x[2], x[3]);
        1.10471 * h * h * l + 0.04811 * t * b * (14.0 + l)
    }

    pub fn shear_stress(x: &[f64]) -> f64 {
        let (h, l, t) = (x[0], x[1], x[2]);
        let primary = P / (SQRT_2 * h * l);
        let moment = P * (L + l / 2.0);
        let r = sqrt(l * l / 4.0 + sq((h + t) / 2.0));
        let j = 2.0 * (SQRT_2 * h * l * (l * l / 12.0 + sq((h + t) / 2.0)));
        let secondary = moment * r / j;
        sqrt(primary * primary + 2.0 * primary * secondary * l / (2.0 * r) + secondary * secondary)
    }

    pub fn bending_stress(x: &[f64]) -> f64 {
        6.0 * P * L / (x[3] * x[2] * x[2])
    }

    pub fn deflection(x: &[f64]) -> f64 {
        4.0 * P * L * L * L / (E * x[2] * x[2] * x[2] * x[3])
    }

    pub fn buckling_load(x: &[f64]) -> f64 {
        let (t, b) = (x[2], x[3]);
        4.013 * E * sqrt(t * t * pow(b, 6.0) / 36.0) / (L * L) * (1.0 - t / (2.0 * L) * sqrt(E / (4.0 * G)))
    }

    pub fn spec() -> ProblemSpec {
        problem(
            "welded-beam",
            vec![0.1, 0.1, 0.1, 0.1],
            vec![2.0, 10.0, 10.0, 2.0],
            cost,
            vec![
                scalar(|x| shear_stress(x) - 13_600.0),
                scalar(|x| bending_stress(x) - 30_000.0),
                scalar(|x| x[0] - x[3]),
                scalar(|x| 0.10471 * x[0] * x[0] + 0.04811 * x[2] * x[3] * (14.0 + x[1]) - 5.0),
                scalar(|x| 0.125 - x[0]),
                scalar(|x| deflection(x) - 0.25),
                scalar(|x| P - buckling_load(x)),
            ],
            "Ragsdell & Phillips (1976); constraint set as in Coello (2000)",
        )
    }
}

mod truss {
    use super::*;

    const LENGTH: f64 = 100.0;
    const LOAD: f64 = 2.0;
    const STRESS: f64 = 2.0;

    pub fn spec() -> ProblemSpec {
        problem(
            "three-bar-truss",
            vec![0.0, 0.0],
            vec![1.0, 1.0],
            |x| (2.0 * SQRT_2 * x[0] + x[1]) * LENGTH,
            vec![
                scalar(|x| (SQRT_2 * x[0] + x[1]) / (SQRT_2 * x[0] * x[0] + 2.0 * x[0] * x[1]) * LOAD - STRESS),
                scalar(|x| x[1] / (SQRT_2 * x[0] * x[0] + 2.0 * x[0] * x[1]) * LOAD - STRESS),
                scalar(|x| 1.0 / (SQRT_2 * x[1] + x[0]) * LOAD - STRESS),
            ],
            "Nowacki (1973); Ray & Saini (2001)",
        )
    }
}

fn cantilever() -> ProblemSpec {
    problem(
        "cantilever-beam",
        vec![0.01; 5],
        vec![100.0; 5],
        |x| 0.0624 * x.iter().sum::<f64>(),
        vec![scalar(|x| {
            61.0 / pow(x[0], 3.0)
                + 37.0 / pow(x[1], 3.0)
                + 19.0 / pow(x[2], 3.0)
                + 7.0 / pow(x[3], 3.0)
                + 1.0 / pow(x[4], 3.0)
                - 1.0
        })],
        "Chickermane & Gea (1996)",
    )
}

fn gear_train() -> ProblemSpec {
    ProblemSpec::new("gear-train", Bounds::uniform(4, 12.0, 60.0).expect("static bounds"), scalar(gear_train_error))
        .with_kind(ProblemKind::Constrained)
        .with_source("Sandgren (1990); teeth counts relaxed to continuous values")
}

/// Squared deviation of the gear ratio `x2 x3 / (x1 x4)` from `1 / 6.931`.
pub fn gear_train_error(x: &[f64]) -> f64 {
    sq(1.0 / 6.931 - x[1] * x[2] / (x[0] * x[3]))
}

fn spring() -> ProblemSpec {
    problem(
        "tension-compression-spring",
        vec![0.05, 0.25, 2.0],
        vec![2.0, 1.3, 15.0],
        |x| (x[2] + 2.0) * x[1] * x[0] * x[0],
        vec![
            scalar(|x| 1.0 - pow(x[1], 3.0) * x[2] / (71_785.0 * pow(x[0], 4.0))),
            scalar(|x| {
                let (d, dd) = (x[0], x[1]);
                (4.0 * dd * dd - d * dd) / (12_566.0 * (dd * pow(d, 3.0) - pow(d, 4.0))) + 1.0 / (5108.0 * d * d) - 1.0
            }),
            scalar(|x| 1.0 - 140.45 * x[0] / (x[1] * x[1] * x[2])),
            scalar(|x| (x[0] + x[1]) / 1.5 - 1.0),
        ],
        "Arora (1989); Belegundu (1982)",
    )
}

fn pressure_vessel() -> ProblemSpec {
    problem(
        "pressure-vessel",
        vec![0.0, 0.0, 10.0, 10.0],
        vec![99.0, 99.0, 200.0, 200.0],
        |x| {
            0.6224 * x[0] * x[2] * x[3]
                + 1.7781 * x[1] * x[2] * x[2]
                + 3.1661 * x[0] * x[0] * x[3]
                + 19.84 * x[0] * x[0] * x[2]
        },
        vec![
            scalar(|x| -x[0] + 0.0193 * x[2]),
            scalar(|x| -x[1] + 0.00954 * x[2]),
            scalar(|x| -PI * x[2] * x[2] * x[3] - 4.0 / 3.0 * PI * pow(x[2], 3.0) + 1_296_000.0),
            scalar(|x| x[3] - 240.0),
        ],
        "Kannan & Kramer (1994); shell and head thickness relaxed to continuous values",
    )
}

#[allow(clippy::approx_constant)]
fn speed_reducer() -> ProblemSpec {
    problem(
        "speed-reducer",
        vec![2.6, 0.7, 17.0, 7.3, 7.3, 2.9, 5.0],
        vec![3.6, 0.8, 28.0, 8.3, 8.3, 3.9, 5.5],
        |x| {
            0.7854 * x[0] * x[1] * x[1] * (3.3333 * x[2] * x[2] + 14.9334 * x[2] - 43.0934)
                - 1.508 * x[0] * (x[5] * x[5] + x[6] * x[6])
                + 7.4777 * (pow(x[5], 3.0) + pow(x[6], 3.0))
                + 0.7854 * (x[3] * x[5] * x[5] + x[4] * x[6] * x[6])
        },
        vec![
            scalar(|x| 27.0 / (x[0] * x[1] * x[1] * x[2]) - 1.0),
            scalar(|x| 397.5 / (x[0] * x[1] * x[1] * x[2] * x[2]) - 1.0),
            scalar(|x| 1.93 * pow(x[3], 3.0) / (x[1] * x[2] * pow(x[5], 4.0)) - 1.0),
            scalar(|x| 1.93 * pow(x[4], 3.0) / (x[1] * x[2] * pow(x[6], 4.0)) - 1.0),
            scalar(|x| sqrt(sq(745.0 * x[3] / (x[1] * x[2])) + 16.9e6) / (110.0 * pow(x[5], 3.0)) - 1.0),
            scalar(|x| sqrt(sq(745.0 * x[4] / (x[1] * x[2])) + 157.5e6) / (85.0 * pow(x[6], 3.0)) - 1.0),
            scalar(|x| x[1] * x[2] / 40.0 - 1.0),
            scalar(|x| 5.0 * x[1] / x[0] - 1.0),
            scalar(|x| x[0] / (12.0 * x[1]) - 1.0),
            scalar(|x| (1.5 * x[5] + 1.9) / x[3] - 1.0),
            scalar(|x| (1.1 * x[6] + 1.9) / x[4] - 1.0),
        ],
        "Golinski (1973); Mezura-Montes & Coello (2005)",
    )
}

fn i_beam() -> ProblemSpec {
    // x = (flange width b, height h, web thickness tw, flange thickness tf)
    problem(
        "i-beam-deflection",
        vec![10.0, 10.0, 0.9, 0.9],
        vec![50.0, 80.0, 5.0, 5.0],
        |x| {
            let (b, h, tw, tf) = (x[0], x[1], x[2], x[3]);
            let web = h - 2.0 * tf;
            5000.0 / (tw * pow(web, 3.0) / 12.0 + b * pow(tf, 3.0) / 6.0 + 2.0 * b * tf * sq((h - tf) / 2.0))
        },
        vec![
            scalar(|x| 2.0 * x[0] * x[3] + x[2] * (x[1] - 2.0 * x[3]) - 300.0),
            scalar(|x| {
                let (b, h, tw, tf) = (x[0], x[1], x[2], x[3]);
                let web = h - 2.0 * tf;
                18.0 * h * 1e4 / (tw * pow(web, 3.0) + 2.0 * b * tf * (4.0 * tf * tf + 3.0 * h * web))
                    + 15.0 * b * 1e3 / (web * pow(tw, 3.0) + 2.0 * tf * pow(b, 3.0))
                    - 6.0
            }),
        ],
        "Gold & Krishnamurty (1998); Gandomi, Yang & Alavi (2013)",
    )
}

fn tubular_column() -> ProblemSpec {
    const LOAD: f64 = 2500.0;
    const YIELD: f64 = 500.0;
    const MODULUS: f64 = 0.85e6;
    const LENGTH: f64 = 250.0;
    problem(
        "tubular-column",
        vec![2.0, 0.2],
        vec![14.0, 0.8],
        |x| 9.8 * x[0] * x[1] + 2.0 * x[0],
        vec![
            scalar(|x| LOAD / (PI * x[0] * x[1] * YIELD) - 1.0),
            scalar(|x| {
                8.0 * LOAD * LENGTH * LENGTH / (pow(PI, 3.0) * MODULUS * x[0] * x[1] * (x[0] * x[0] + x[1] * x[1]))
                    - 1.0
            }),
            scalar(|x| 2.0 / x[0] - 1.0),
            scalar(|x| x[0] / 14.0 - 1.0),
            scalar(|x| 0.2 / x[1] - 1.0),
            scalar(|x| x[1] / 0.8 - 1.0),
        ],
        "Hsu & Liu (2007)",
    )
}

mod piston {
    use super::*;

    const FORCE: f64 = 10_000.0;
    const LENGTH: f64 = 240.0;
    const MOMENT: f64 = 1.8e6;
    const PRESSURE: f64 = 1500.0;
    const THETA: f64 = FRAC_PI_4;

    // x = (H, B, X, D)
    fn arms(x: &[f64]) -> (f64, f64) {
        let (h, b, xx) = (x[0], x[1], x[2]);
        let (s, c) = (libm::sin(THETA), libm::cos(THETA));
        let l1 = sqrt(sq(xx - b) + h * h);
        let l2 = sqrt(sq(xx * s + h) + sq(b - xx * c));
        (l1, l2)
    }

    pub fn spec() -> ProblemSpec {
        problem(
            "piston-lever",
            vec![0.05, 0.05, 0.05, 0.05],
            vec![500.0, 500.0, 120.0, 500.0],
            |x| {
                let (l1, l2) = arms(x);
                FRAC_PI_4 * x[3] * x[3] * (l2 - l1)
            },
            vec![
                scalar(|x| {
                    let (h, b, xx, d) = (x[0], x[1], x[2], x[3]);
                    let (s, c) = (libm::sin(THETA), libm::cos(THETA));
                    let r = fabs(-xx * (xx * s + h) + h * (b - xx * c)) / sqrt(sq(xx - b) + h * h);
                    let f = PI * PRESSURE * d * d / 4.0;
                    FORCE * LENGTH * c - r * f
                }),
                scalar(|x| FORCE * (LENGTH - x[2]) - MOMENT),
                scalar(|x| {
                    let (l1, l2) = arms(x);
                    1.2 * (l2 - l1) - l1
                }),
                scalar(|x| x[3] / 2.0 - x[1]),
            ],
            "Bracken & McCormick (1968); Gandomi, Yang & Alavi (2013)",
        )
    }
}

fn corrugated_bulkhead() -> ProblemSpec {
    // x = (width b, depth h, length l, plate thickness t)
    fn span(x: &[f64]) -> f64 {
        x[0] + sqrt(fabs(x[2] * x[2] - x[1] * x[1]))
    }
    problem(
        "corrugated-bulkhead",
        vec![0.0, 0.0, 0.0, 0.0],
        vec![100.0, 100.0, 100.0, 5.0],
        |x| 5.885 * x[3] * (x[0] + x[2]) / span(x),
        vec![
            scalar(|x| -x[3] * x[1] * (0.4 * x[0] + x[2] / 6.0) + 8.94 * span(x)),
            scalar(|x| -x[3] * x[1] * x[1] * (0.2 * x[0] + x[2] / 12.0) + 2.2 * pow(8.94 * span(x), 4.0 / 3.0)),
            scalar(|x| -x[3] + 0.0156 * x[0] + 0.15),
            scalar(|x| -x[3] + 0.0156 * x[2] + 0.15),
            scalar(|x| -x[3] + 1.05),
            scalar(|x| -x[2] + x[1]),
        ],
        "Kvalie (1967); Ravindran, Ragsdell & Reklaitis (2006)",
    )
}

fn car_side_impact() -> ProblemSpec {
    problem(
        "car-side-impact",
        vec![0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.192, 0.192, -30.0, -30.0],
        vec![1.5, 1.5, 1.5, 1.5, 1.5, 1.5, 1.5, 0.345, 0.345, 30.0, 30.0],
        |x| 1.98 + 4.90 * x[0] + 6.67 * x[1] + 6.98 * x[2] + 4.01 * x[3] + 1.78 * x[4] + 2.73 * x[6],
        vec![
            // abdomen load
            scalar(|x| {
                1.16 - 0.3717 * x[1] * x[3] - 0.00931 * x[1] * x[9] - 0.484 * x[2] * x[8] + 0.01343 * x[5] * x[9] - 1.0
            }),
            // upper, middle and lower viscous criteria
            scalar(|x| {
                0.261 - 0.0159 * x[0] * x[1] - 0.188 * x[0] * x[7] - 0.019 * x[1] * x[6]
                    + 0.0144 * x[2] * x[4]
                    + 0.0008757 * x[4] * x[9]
                    + 0.08045 * x[5] * x[8]
                    + 0.00139 * x[7] * x[10]
                    + 0.00001575 * x[9] * x[10]
                    - 0.32
            }),
            scalar(|x| {
                0.214 + 0.00817 * x[4] - 0.131 * x[0] * x[7] - 0.0704 * x[0] * x[8] + 0.03099 * x[1] * x[5]
                    - 0.018 * x[1] * x[6]
                    + 0.0208 * x[2] * x[7]
                    + 0.121 * x[2] * x[8]
                    - 0.00364 * x[4] * x[5]
                    + 0.0007715 * x[4] * x[9]
                    - 0.0005354 * x[5] * x[9]
                    + 0.00121 * x[7] * x[10]
                    - 0.32
            }),
            scalar(|x| {
                0.074 - 0.061 * x[1] - 0.163 * x[2] * x[7] + 0.001232 * x[2] * x[9] - 0.166 * x[6] * x[8]
                    + 0.227 * x[1] * x[1]
                    - 0.32
            }),
            // upper, middle and lower rib deflections
            scalar(|x| {
                28.98 + 3.818 * x[2] - 4.2 * x[0] * x[1] + 0.0207 * x[4] * x[9] + 6.63 * x[5] * x[8] - 7.7 * x[6] * x[7]
                    + 0.32 * x[8] * x[9]
                    - 32.0
            }),
            scalar(|x| {
                33.86 + 2.95 * x[2] + 0.1792 * x[9]
                    - 5.057 * x[0] * x[1]
                    - 11.0 * x[1] * x[7]
                    - 0.0215 * x[4] * x[9]
                    - 9.98 * x[6] * x[7]
                    + 22.0 * x[7] * x[8]
                    - 32.0
            }),
            scalar(|x| 46.36 - 9.9 * x[1] - 12.9 * x[0] * x[7] + 0.1107 * x[2] * x[9] - 32.0),
            // pubic symphysis force
            scalar(|x| {
                4.72 - 0.5 * x[3] - 0.19 * x[1] * x[2] - 0.0122 * x[3] * x[9]
                    + 0.009325 * x[5] * x[9]
                    + 0.000191 * x[10] * x[10]
                    - 4.0
            }),
            // B-pillar velocity
            scalar(|x| {
                10.58 - 0.674 * x[0] * x[1] - 1.95 * x[1] * x[7] + 0.02054 * x[2] * x[9] - 0.0198 * x[3] * x[9]
                    + 0.028 * x[5] * x[9]
                    - 9.9
            }),
            // front door velocity
            scalar(|x| {
                16.45 - 0.489 * x[2] * x[6] - 0.843 * x[4] * x[5] + 0.0432 * x[8] * x[9]
                    - 0.0556 * x[8] * x[10]
                    - 0.000786 * x[10] * x[10]
                    - 15.7
            }),
        ],
        "Gu et al. (2001); Gandomi, Yang & Alavi (2011)",
    )
}

pub(crate) const SUITE: [&str; 12] = [
    "welded-beam",
    "three-bar-truss",
    "cantilever-beam",
    "gear-train",
    "tension-compression-spring",
    "pressure-vessel",
    "speed-reducer",
    "i-beam-deflection",
    "tubular-column",
    "piston-lever",
    "corrugated-bulkhead",
    "car-side-impact",
];

// Best known objective and a feasible point reproducing it to within a
// relative 1e-6.
const REFERENCE: [(&str, f64, &[f64]); 12] = [
    ("welded-beam", 1.724852309, &[0.205729639786079, 3.470488665628002, 9.03662391036667, 0.205729639786079]),
    ("three-bar-truss", 263.8958434, &[0.788675134594813, 0.408248290463863]),
    (
        "cantilever-beam",
        1.339956360599074,
        &[6.01601589415059, 5.309173857413238, 4.494329573323156, 3.50147497042532, 2.1526653296750182],
    ),
    ("gear-train", 0.0, &[31.592150923924127, 12.0, 12.0, 31.592150923924127]),
    ("tension-compression-spring", 0.012665233, &[0.05168906094831094, 0.356717736, 11.288966]),
    ("pressure-vessel", 5885.332774, &[0.7781686413758835, 0.3846491626282864, 40.31961872413903, 200.0]),
    ("speed-reducer", 2994.471066, &[3.5, 0.7, 17.0, 7.3, 7.715319977153199, 3.3502147, 5.2866545]),
    ("i-beam-deflection", 0.013074119, &[50.0, 80.0, 0.9, 2.3217922]),
    ("tubular-column", 26.4994965, &[5.45115623, 0.291965499196547]),
    ("piston-lever", 8.412698, &[0.05, 2.041513688299375, 120.0, 4.083027204152989]),
    ("corrugated-bulkhead", 6.842958, &[57.692307692, 34.14762, 57.69230192276923, 1.05]),
    (
        "car-side-impact",
        22.84297,
        &[0.5, 1.1164336842248948, 0.5, 1.3020840364540545, 0.5, 1.5, 0.5, 0.345, 0.192, -19.5493501954935, -0.00431],
    ),
];

pub(crate) fn lookup(name: &str) -> Option<ProblemSpec> {
    let spec = build(name)?;
    let &(_, best, witness) = REFERENCE.iter().find(|(n, _, _)| *n == name)?;
    Some(spec.with_known_best(best).with_witness(witness.to_vec()))
}

fn build(name: &str) -> Option<ProblemSpec> {
    Some(match name {
        "welded-beam" => welded::spec(),
        "three-bar-truss" => truss::spec(),
        "cantilever-beam" => cantilever(),
        "gear-train" => gear_train(),
        "tension-compression-spring" => spring(),
        "pressure-vessel" => pressure_vessel(),
        "speed-reducer" => speed_reducer(),
        "i-beam-deflection" => i_beam(),
        "tubular-column" => tubular_column(),
        "piston-lever" => piston::spec(),
        "corrugated-bulkhead" => corrugated_bulkhead(),
        "car-side-impact" => car_side_impact(),
        _ => return None,
    })
}
