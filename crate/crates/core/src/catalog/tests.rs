use super::*;
use crate::penalty::{is_feasible, violations, DEFAULT_EQUALITY_TOLERANCE};
use crate::rng::{RandomStream, SeededStream};
use alloc::vec;
use alloc::vec::Vec;

fn all_problems() -> Vec<ProblemSpec> {
    let mut v = suite(UNCONSTRAINED_SUITE).unwrap();
    v.extend(suite(ENGINEERING_SUITE).unwrap());
    v
}

fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * 1f64.max(a.abs()).max(b.abs())
}

#[test]
fn lookup_sphere_30() {
    let p = lookup("sphere-30").unwrap();
    assert_eq!(p.dimension(), 30);
    assert!(p.bounds.lower().iter().all(|&l| l == -100.0));
    assert!(p.bounds.upper().iter().all(|&u| u == 100.0));
    assert_eq!(p.known_best, Some(0.0));
    assert_eq!(lookup("sphere").unwrap().dimension(), 30);
}

#[test]
fn lookup_branin_and_errors() {
    assert_eq!(lookup("branin").unwrap().known_best, Some(0.397887));
    match lookup("no-such") {
        Err(Error::UnknownProblem { name, available }) => {
            assert_eq!(name, "no-such");
            assert!(available.iter().any(|n| n == "welded-beam"));
        }
        other => panic!("unexpected {other:?}"),
    }
    for r in RESERVED {
        assert!(matches!(lookup(r), Err(Error::ReservedProblem(_))));
    }
    assert!(matches!(lookup("sphere-0"), Err(Error::UnknownProblem { .. })));
    assert!(matches!(suite("nope"), Err(Error::UnknownSuite(_))));
}

#[test]
fn sphere_2_values() {
    let p = lookup("sphere-2").unwrap();
    assert_eq!(p.evaluate(&[-5.0, 18.0]).unwrap().objective, 349.0);
    assert_eq!(p.evaluate(&[7.0, -12.0]).unwrap().objective, 193.0);
    assert!(matches!(p.evaluate(&[1.0]), Err(Error::DimensionMismatch { expected: 2, found: 1 })));
}

#[test]
fn budgets() {
    assert_eq!(default_budget(&lookup("speed-reducer").unwrap()), 100_000);
    assert_eq!(default_budget(&lookup("sphere-30").unwrap()), 500_000);
    let wide =
        ProblemSpec::new("wide", crate::Bounds::uniform(22, 0.0, 1.0).unwrap(), crate::problem::scalar(|x| x[0]))
            .with_kind(ProblemKind::Constrained);
    assert_eq!(default_budget(&wide), 200_000);
}

#[test]
fn suites_have_expected_shape() {
    let u = suite(UNCONSTRAINED_SUITE).unwrap();
    let e = suite(ENGINEERING_SUITE).unwrap();
    assert_eq!(u.len(), 25);
    assert_eq!(e.len(), 12);
    assert!(u.iter().all(|p| p.kind == ProblemKind::Unconstrained && p.constraints.is_empty()));
    assert!(e.iter().all(|p| p.kind == ProblemKind::Constrained));
    assert!(all_problems().iter().all(|p| p.known_best.is_some() && !p.source_note.is_empty()));
}

#[test]
fn unconstrained_known_bests() {
    let expected: [(&str, usize, f64); 25] = [
        ("sphere-30", 30, 0.0),
        ("sumsquares-30", 30, 0.0),
        ("beale", 2, 0.0),
        ("easom", 2, -1.0),
        ("matyas", 2, 0.0),
        ("colville", 4, 0.0),
        ("trid-6", 6, -50.0),
        ("trid-10", 10, -210.0),
        ("zakharov-10", 10, 0.0),
        ("schwefel-1.2-30", 30, 0.0),
        ("rosenbrock-30", 30, 0.0),
        ("dixon-price-30", 30, 0.0),
        ("branin", 2, 0.397887),
        ("bohachevsky-1", 2, 0.0),
        ("bohachevsky-2", 2, 0.0),
        ("bohachevsky-3", 2, 0.0),
        ("booth", 2, 0.0),
        ("michalewicz-2", 2, -1.8013),
        ("michalewicz-5", 5, -4.6877),
        ("goldstein-price", 2, 3.0),
        ("perm", 4, 0.0),
        ("ackley-30", 30, 0.0),
        ("foxholes", 2, 0.998004),
        ("hartmann-3", 3, -3.86278),
        ("penalized-2", 30, 0.0),
    ];
    for (p, (name, dim, best)) in suite(UNCONSTRAINED_SUITE).unwrap().iter().zip(expected) {
        assert_eq!(p.name, name);
        assert_eq!(p.dimension(), dim, "{name}");
        assert_eq!(p.known_best, Some(best), "{name}");
    }
}

#[test]
fn witnesses_reproduce_known_best() {
    for p in all_problems() {
        let Some(w) = &p.witness else { continue };
        assert!(p.bounds.contains(w), "{} witness out of bounds", p.name);
        let e = p.evaluate(w).unwrap();
        let best = p.known_best.unwrap();
        assert!(close(e.objective, best, 1e-6), "{}: {} vs {}", p.name, e.objective, best);
        let report = violations(&e.inequalities, &e.equalities, DEFAULT_EQUALITY_TOLERANCE);
        assert!(is_feasible(&report), "{} witness infeasible: {:?}", p.name, report);
    }
}

#[test]
fn every_engineering_problem_has_a_witness() {
    assert!(suite(ENGINEERING_SUITE).unwrap().iter().all(|p| p.witness.is_some()));
}

#[test]
fn rounded_optima_are_close_to_true_minima() {
    // Minimizers from the literature; printed optima are rounded.
    let m2 = lookup("michalewicz-2").unwrap();
    let f = m2.evaluate(&[2.202_905_5, core::f64::consts::FRAC_PI_2]).unwrap().objective;
    assert!((f - -1.8013).abs() < 1e-5, "{f}");
    assert!(f <= -1.8013);

    let h3 = lookup("hartmann-3").unwrap();
    let f = h3.evaluate(&[0.114_614, 0.555_649, 0.852_547]).unwrap().objective;
    assert!((f - -3.86278).abs() < 1e-5, "{f}");
}

#[test]
fn objectives_finite_on_uniform_samples() {
    let mut rng = SeededStream::new(11);
    for p in all_problems() {
        let (lo, hi) = (p.bounds.lower().to_vec(), p.bounds.upper().to_vec());
        let mut finite = 0;
        for _ in 0..1000 {
            let x: Vec<f64> = lo.iter().zip(&hi).map(|(l, h)| l + (h - l) * rng.next_uniform().unwrap()).collect();
            let e = p.evaluate(&x).unwrap();
            if e.objective.is_finite() && e.inequalities.iter().all(|g| g.is_finite()) {
                finite += 1;
            }
        }
        assert_eq!(finite, 1000, "{}", p.name);
    }
}

#[test]
fn evaluation_is_pure() {
    for p in all_problems() {
        let x: Vec<f64> = p.bounds.lower().iter().zip(p.bounds.upper()).map(|(l, h)| l + 0.37 * (h - l)).collect();
        assert_eq!(p.evaluate(&x).unwrap(), p.evaluate(&x).unwrap(), "{}", p.name);
    }
}

#[test]
fn gear_train_integer_optimum() {
    let mut best = f64::INFINITY;
    for a in 12..=60 {
        for b in 12..=60 {
            for d in 12..=60 {
                for f in 12..=60 {
                    let v = engineering::gear_train_error(&[a as f64, b as f64, d as f64, f as f64]);
                    best = best.min(v);
                }
            }
        }
    }
    assert!((best - 2.700857e-12).abs() < 1e-17, "{best:e}");
    let equal = engineering::gear_train_error(&[30.0; 4]);
    assert!((equal - sq(1.0 / 6.931 - 1.0)).abs() < 1e-15);
}

#[test]
fn scalable_dimensions() {
    for (base, _) in unconstrained::SCALABLE {
        let p = lookup(&alloc::format!("{base}-3")).unwrap();
        assert_eq!(p.dimension(), 3);
        assert_eq!(p.name, alloc::format!("{base}-3"));
    }
    assert_eq!(lookup("dixon-price-2").unwrap().witness, Some(vec![1.0, 2f64.sqrt().recip()]));
}
