//! Building and running the checks of each suite.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bubblecalc::{
    digon_closed_form_z, digon_family_y, digon_family_z, digon_reduce_recursive,
    grassmannian_convert, grassmannian_residual, bubble_series, recursion_step, slide_convert,
    to_ccw_basis, y_poly, z_poly, BubbleConvention, BubbleFamily, BubblePoly, DigonState,
    Orientation, SlideDirection,
};
use crate::fockrep::{apply_word, verify_pair, RepConfig, Status, TensorState, VerifyReport, Witness};
use crate::presentations::{
    delta_relation_catalog, r_corollary_catalog, r_expansion, r_expansion_terms,
    schur_relation_catalog, Element, Generator, RelationPair, Sign, Word,
};
use crate::qarith::{quantum_factorial, RatFunc};
use crate::weightlat::Color;

use super::report::{summarize, ConfigEcho, Conventions, SuiteReport};
use super::{HarnessError, Suite, SuiteConfig};

/// Total dots of the digons in the bubble battery.
const DIGON_DOTS: u32 = 4;
/// Highest degree of the Grassmannian and involution checks.
const GRASSMANN_DEGREE: u32 = 6;
/// Highest offset of the slide checks.
const SLIDE_OFFSET: u32 = 5;
const DIVIDED_POWER_MAX: u32 = 3;
const DIVIDED_POWER_SAMPLES: usize = 100;

#[derive(Debug, Clone, Copy)]
enum BubbleCheck {
    RecursiveVsClosed,
    ZVsY,
    YEqualsZ,
    Grassmannian,
    Involution,
    SlideInverse,
    Pascal,
}

impl BubbleCheck {
    fn name(self) -> &'static str {
        match self {
            BubbleCheck::RecursiveVsClosed => "recursive_vs_closed",
            BubbleCheck::ZVsY => "z_vs_y",
            BubbleCheck::YEqualsZ => "y_eq_z",
            BubbleCheck::Grassmannian => "grassmannian",
            BubbleCheck::Involution => "involution",
            BubbleCheck::SlideInverse => "slide_inverse",
            BubbleCheck::Pascal => "pascal",
        }
    }
}

const BUBBLE_CHECKS: [BubbleCheck; 7] = [
    BubbleCheck::RecursiveVsClosed,
    BubbleCheck::ZVsY,
    BubbleCheck::YEqualsZ,
    BubbleCheck::Grassmannian,
    BubbleCheck::Involution,
    BubbleCheck::SlideInverse,
    BubbleCheck::Pascal,
];

enum Task {
    Pair {
        suite: Suite,
        pair: RelationPair,
        /// Checked in rank `n+1`.
        lifted: bool,
    },
    DividedPower {
        sign: Sign,
        color: Color,
        exponent: u32,
    },
    Bubble {
        check: BubbleCheck,
        color: Color,
    },
}

fn sign_str(s: Sign) -> &'static str {
    match s {
        Sign::Plus => "+",
        Sign::Minus => "-",
    }
}

/// `R^{∓1}1_λ` against its expansion monomial at `λ`, and both products of
/// the two expansions restricted to each `λ`.
pub fn r_expansion_pairs(n: usize) -> Vec<RelationPair> {
    let r = n as u32;
    let mut out = Vec::new();
    for sign in [Sign::Minus, Sign::Plus] {
        let name = match sign {
            Sign::Minus => "R^-1",
            Sign::Plus => "R",
        };
        let other = r_expansion(n, sign.flip());
        for (lam, word) in r_expansion_terms(n, sign) {
            let idem = Generator::Idem(lam.clone());
            let lhs = Element::monomial(
                RatFunc::one(),
                Word::new(vec![Generator::RShift(sign), idem.clone()]),
            );
            let rhs = Element::monomial(RatFunc::one(), word.clone());
            out.push(
                RelationPair::new(
                    format!("rexp[{name},λ={lam}]"),
                    lhs,
                    rhs.clone(),
                    n,
                    r,
                    Some(lam.clone()),
                )
                .with_sources(vec![lam.clone()]),
            );
            // R^{∓1}·(R^{±1}1_λ) = 1_λ with both sides expanded.
            let inv = match sign {
                Sign::Minus => "R",
                Sign::Plus => "R^-1",
            };
            out.push(
                RelationPair::new(
                    format!("rexp.product[{inv} {name},λ={lam}]"),
                    &other * &rhs,
                    Element::monomial(RatFunc::one(), Word::new(vec![idem])),
                    n,
                    r,
                    Some(lam.clone()),
                )
                .with_sources(vec![lam]),
            );
        }
    }
    out
}

fn pairs_for(suite: Suite, n: usize, r: u32) -> Result<Vec<RelationPair>, HarnessError> {
    Ok(match suite {
        Suite::Presentation => schur_relation_catalog(n, r),
        Suite::Delta => delta_relation_catalog(n),
        Suite::RCorollary => r_corollary_catalog(n),
        Suite::RExpansion => r_expansion_pairs(n),
        Suite::Iota => {
            let mut base = schur_relation_catalog(n, n as u32);
            base.extend(delta_relation_catalog(n));
            base.iter()
                .map(|p| p.iota(true))
                .collect::<Result<Vec<_>, _>>()?
        }
        Suite::DividedPowers | Suite::Bubbles => Vec::new(),
    })
}

fn bubble_ranks(n: usize) -> Vec<usize> {
    let mut v = vec![3, 4, 5, n];
    v.sort();
    v.dedup();
    v
}

fn build_tasks(cfg: &SuiteConfig, suites: &[Suite]) -> Result<Vec<Task>, HarnessError> {
    let (n, r) = (cfg.n, cfg.r);
    let mut tasks = Vec::new();
    for &suite in suites {
        for mut pair in pairs_for(suite, n, r)? {
            if cfg.corrupt.as_deref().is_some_and(|c| pair.id.starts_with(c)) {
                pair = pair.corrupted();
            }
            tasks.push(Task::Pair {
                suite,
                lifted: suite == Suite::Iota,
                pair,
            });
        }
        match suite {
            Suite::DividedPowers => {
                for sign in [Sign::Plus, Sign::Minus] {
                    for color in Color::all(n) {
                        for exponent in 1..=DIVIDED_POWER_MAX {
                            tasks.push(Task::DividedPower {
                                sign,
                                color,
                                exponent,
                            });
                        }
                    }
                }
            }
            Suite::Bubbles => {
                for rank in bubble_ranks(n) {
                    for check in BUBBLE_CHECKS {
                        for color in Color::all(rank) {
                            tasks.push(Task::Bubble { check, color });
                        }
                    }
                }
            }
            _ => {}
        }
    }
    Ok(tasks)
}

fn margin_for(tasks: &[Task]) -> usize {
    tasks
        .iter()
        .map(|t| match t {
            Task::Pair { pair, .. } => pair.effective_length(),
            Task::DividedPower { .. } => DIVIDED_POWER_MAX as usize,
            Task::Bubble { .. } => 0,
        })
        .max()
        .unwrap_or(0)
        .max(1)
}

fn rep_config(
    n: usize,
    r: u32,
    margin: usize,
    window: Option<(i64, i64)>,
) -> Result<RepConfig, HarnessError> {
    Ok(match window {
        Some((lo, hi)) => RepConfig::new(n, r, lo, hi, margin)?,
        None => RepConfig::auto(n, r, margin),
    })
}

fn failed(suite: &str, relation: String, tuple: Vec<i64>, residual: String, vectors: usize) -> VerifyReport {
    VerifyReport {
        suite: suite.to_string(),
        relation,
        lambda: None,
        vectors,
        status: Status::Fail,
        witness: Some(Witness { tuple, residual }),
    }
}

fn passed(suite: &str, relation: String, vectors: usize) -> VerifyReport {
    VerifyReport {
        suite: suite.to_string(),
        relation,
        lambda: None,
        vectors,
        status: Status::Pass,
        witness: None,
    }
}

fn run_pair(suite: Suite, pair: &RelationPair, rc: &RepConfig) -> VerifyReport {
    match verify_pair(pair, rc) {
        Ok(mut rep) => {
            rep.suite = suite.name().to_string();
            rep
        }
        Err(e) => {
            let mut rep = failed(suite.name(), pair.id.clone(), Vec::new(), format!("error: {e}"), 0);
            rep.lambda = pair.lambda.as_ref().map(|l| l.to_string());
            rep
        }
    }
}

/// `E_{±i}^a` on random safe vectors must be divisible by `[a]!`.
fn run_divided_power(sign: Sign, color: Color, exponent: u32, rc: &RepConfig) -> VerifyReport {
    let suite = Suite::DividedPowers.name();
    let id = format!("divided_power[{}i={},a={exponent}]", sign_str(sign), color);
    let seed = ((rc.n as u64 * 1000 + rc.r as u64) * 1000 + color.index() as u64) * 10
        + u64::from(exponent)
        + if sign == Sign::Plus { 0 } else { 1 << 32 };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (a, b) = rc.interior();
    let word = Word::new(vec![Generator::e(sign, color); exponent as usize]);
    let fact = quantum_factorial(i64::from(exponent)).expect("positive exponent");
    for k in 0..DIVIDED_POWER_SAMPLES {
        let tuple: Vec<i64> = (0..rc.r).map(|_| rng.gen_range(a..=b)).collect();
        let state = match apply_word(&word, &TensorState::basis(&tuple), rc) {
            Ok(s) => s,
            Err(e) => return failed(suite, id, tuple, format!("error: {e}"), k + 1),
        };
        if state.exact_divide(&fact).is_err() {
            let residual = format!("{state} is not divisible by {fact}");
            return failed(suite, id, tuple, residual, k + 1);
        }
    }
    passed(suite, id, DIVIDED_POWER_SAMPLES)
}

fn family_mismatch(got: &BubbleFamily, want: &BubbleFamily) -> String {
    format!("got {got}, expected {want}")
}

fn run_bubble(check: BubbleCheck, color: Color, conv: &BubbleConvention) -> VerifyReport {
    let suite = Suite::Bubbles.name();
    let n = color.rank();
    let id = format!("bubble.{}[n={n},i={color}]", check.name());
    let dots = |d: &DigonState| d.dots().iter().map(|&x| i64::from(x)).collect::<Vec<_>>();
    let fail = |tuple, residual: String, k| failed(suite, id.clone(), tuple, residual, k);
    let mut vectors = 0;
    match check {
        BubbleCheck::RecursiveVsClosed => {
            for d in DigonState::enumerate(color, DIGON_DOTS) {
                vectors += 1;
                let diff = &digon_reduce_recursive(&d, conv) - &digon_closed_form_z(&d, conv);
                if !diff.is_zero() {
                    return fail(dots(&d), diff.to_string(), vectors);
                }
            }
        }
        BubbleCheck::ZVsY => {
            for d in DigonState::enumerate(color, DIGON_DOTS) {
                vectors += 1;
                let want = digon_family_y(&d);
                match slide_convert(&digon_family_z(&d), SlideDirection::ToCcw) {
                    Ok(got) if got == want => {}
                    Ok(got) => return fail(dots(&d), family_mismatch(&got, &want), vectors),
                    Err(e) => return fail(dots(&d), format!("error: {e}"), vectors),
                }
            }
        }
        BubbleCheck::YEqualsZ => {
            vectors = 1;
            let diff = &y_poly(color.pred(), color) - &z_poly(color.shift(2), color);
            match to_ccw_basis(&diff, conv) {
                Ok(p) if p.is_zero() => {}
                Ok(p) => return fail(Vec::new(), p.to_string(), 1),
                Err(e) => return fail(Vec::new(), format!("error: {e}"), 1),
            }
        }
        BubbleCheck::Grassmannian => {
            for b in 0..=GRASSMANN_DEGREE {
                vectors += 1;
                match grassmannian_residual(color, b, conv) {
                    Ok(p) if p.is_zero() => {}
                    Ok(p) => return fail(vec![i64::from(b)], p.to_string(), vectors),
                    Err(e) => return fail(vec![i64::from(b)], format!("error: {e}"), vectors),
                }
            }
        }
        BubbleCheck::Involution => {
            vectors = GRASSMANN_DEGREE as usize + 1;
            let series = bubble_series(color, Orientation::Ccw, GRASSMANN_DEGREE, conv);
            let back = grassmannian_convert(&series, Orientation::Ccw, conv)
                .and_then(|cw| grassmannian_convert(&cw, Orientation::Cw, conv));
            match back {
                Ok(back) => {
                    for (b, (x, y)) in series.iter().zip(&back).enumerate() {
                        let diff = x - y;
                        if !diff.is_zero() {
                            return fail(vec![b as i64], diff.to_string(), vectors);
                        }
                    }
                }
                Err(e) => return fail(Vec::new(), format!("error: {e}"), vectors),
            }
        }
        BubbleCheck::SlideInverse => {
            let pairs = [
                (Orientation::Cw, color, SlideDirection::ToCcw, SlideDirection::ToCw),
                (Orientation::Ccw, color.succ(), SlideDirection::ToCw, SlideDirection::ToCcw),
            ];
            for (o, c, there, back) in pairs {
                for k in 0..=SLIDE_OFFSET {
                    vectors += 1;
                    let f = BubbleFamily::bubble(c, o, k);
                    match slide_convert(&f, there).and_then(|g| slide_convert(&g, back)) {
                        Ok(g) if g == f => {}
                        Ok(g) => return fail(vec![i64::from(k)], family_mismatch(&g, &f), vectors),
                        Err(e) => return fail(vec![i64::from(k)], format!("error: {e}"), vectors),
                    }
                }
            }
        }
        BubbleCheck::Pascal => {
            for m in Color::all(n).filter(|&m| m != color) {
                for t in 0..=2u32 {
                    for s in 1..=SLIDE_OFFSET {
                        vectors += 1;
                        let mut v = vec![0u32; n];
                        v[color.index() - 1] = t;
                        v[m.index() - 1] = s;
                        let d = DigonState::new(color, v).expect("valid state");
                        let (mm, moved, dropped) = recursion_step(&d).expect("has off-base dots");
                        let step = &digon_closed_form_z(&moved, conv)
                            + &(&z_poly(mm, color) * &digon_closed_form_z(&dropped, conv));
                        let diff: BubblePoly = &digon_closed_form_z(&d, conv) - &step;
                        if !diff.is_zero() {
                            return fail(dots(&d), diff.to_string(), vectors);
                        }
                    }
                }
            }
        }
    }
    passed(suite, id, vectors)
}

/// Runs the selected suites. Failing checks are reported, not raised.
pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteReport, HarnessError> {
    let start = Instant::now();
    let suites = cfg.suites()?;
    let tasks = build_tasks(cfg, &suites)?;
    let margin = margin_for(&tasks);
    let base = rep_config(cfg.n, cfg.r, margin, cfg.window)?;
    let lifted = if suites.contains(&Suite::Iota) {
        Some(rep_config(cfg.n + 1, cfg.n as u32, margin, cfg.window)?)
    } else {
        None
    };
    let conv = cfg.bubble_convention;
    let run = |t: &Task| match t {
        Task::Pair {
            suite,
            pair,
            lifted: up,
        } => {
            let rc = if *up { lifted.as_ref().expect("lifted config") } else { &base };
            run_pair(*suite, pair, rc)
        }
        Task::DividedPower {
            sign,
            color,
            exponent,
        } => run_divided_power(*sign, *color, *exponent, &base),
        Task::Bubble { check, color } => run_bubble(*check, *color, &conv),
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| HarnessError::Config(format!("thread pool: {e}")))?;
    let mut reports: Vec<VerifyReport> = pool.install(|| tasks.par_iter().map(run).collect());
    reports.sort_by(|a, b| (&a.suite, &a.relation).cmp(&(&b.suite, &b.relation)));
    let summary = summarize(&reports);
    Ok(SuiteReport {
        config: ConfigEcho {
            n: cfg.n,
            r: cfg.r,
            window: (base.lo, base.hi),
            margin,
            suites,
            corrupt: cfg.corrupt.clone(),
        },
        conventions: Conventions::new(&conv),
        reports,
        summary,
        duration_ms: start.elapsed().as_millis(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_square_run_passes() {
        let cfg = SuiteConfig::new(3).with_suites(&[Suite::RExpansion, Suite::DividedPowers]);
        let rep = run_suite(&cfg).unwrap();
        assert!(rep.passed(), "{:#?}", rep.failures().map(|r| r.to_string()).collect::<Vec<_>>());
        // 10 weights, two signs, expansion and product each.
        assert_eq!(rep.for_suite(Suite::RExpansion).count(), 40);
        assert_eq!(rep.for_suite(Suite::DividedPowers).count(), 18);
    }

    #[test]
    fn bubble_battery_detects_wrong_convention() {
        let mut cfg = SuiteConfig::new(3).with_suites(&[Suite::Bubbles]);
        assert!(run_suite(&cfg).unwrap().passed());
        cfg.bubble_convention = BubbleConvention { cw0: 1, ccw0: 1 };
        let rep = run_suite(&cfg).unwrap();
        let bad: Vec<_> = rep.failures().map(|r| r.relation.clone()).collect();
        assert!(bad.iter().any(|id| id.starts_with("bubble.y_eq_z")));
        assert!(bad.iter().any(|id| id.starts_with("bubble.grassmannian")));
    }

    #[test]
    fn corruption_is_caught() {
        let mut cfg = SuiteConfig::new(3).with_suites(&[Suite::Delta]);
        cfg.corrupt = Some("delta.iii".into());
        let rep = run_suite(&cfg).unwrap();
        assert_eq!(rep.summary.failed, 2);
        assert!(rep.failures().all(|r| r.witness.is_some()));
    }
}
