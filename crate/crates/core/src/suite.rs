//! The end-to-end verification suite: nine criteria covering QYBE, `Ω³ = Ω`,
//! the non-bijective example, the `kⁿ` reduction, the category isomorphisms,
//! invertibility of `g`, faithfully flat descent, the braided laws and
//! sensitivity of the verifiers to single-entry mutations.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::algebra::{kn, matrix_algebra, upper_triangular, Algebra, DualBasis};
use crate::braided::{
    braiding_between, end_action, end_action_on_tensor, end_module_from_comodule, comodule_from_end_module,
    flip_on_quotient, hexagon_check_with, tensor_over_a, transported_braiding, unit_check,
};
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix};
use crate::exec::Exec;
use crate::modules::{
    comodule_from_yd, counit_eps, counit_from_invertibility, descent_f, descent_from_yd, descent_g, g_inverse,
    is_bijective, unit_eta, verify_comodule, verify_descent, yd_from_comodule, yd_from_descent, Bimodule, Coaction,
};
use crate::report::Report;
use crate::ybe::{
    comodule_from_rmatrix, induced_operator, induced_over_k, omega_cubed_check, omega_from_comodule, omega_r,
    qybe_check_with, verify_induced, verify_rmatrix, Grouplike, RMatrix,
};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    /// Algebras of dimension at most 4.
    #[default]
    Quick,
    /// Adds 𝔽₅ and `M₃`.
    Full,
}

impl FromStr for Profile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Profile> {
        match s {
            "quick" => Ok(Profile::Quick),
            "full" => Ok(Profile::Full),
            _ => Err(Error::Parse(format!("unknown profile `{s}`; expected quick or full"))),
        }
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Profile::Quick => "quick",
            Profile::Full => "full",
        })
    }
}

/// Deliberate breakage used to check that the suite can fail.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mutation {
    #[default]
    None,
    /// Every braiding entering the hexagon checks is replaced by its negative.
    NegatedBraiding,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SuiteOptions {
    pub profile: Profile,
    pub exec: Exec,
    pub mutation: Mutation,
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub details: Vec<String>,
    pub elapsed_ms: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub profile: Profile,
    pub results: Vec<CriterionResult>,
    pub elapsed_ms: u128,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }
}

pub const CRITERIA: [&str; 9] = [
    "QYBE exactness",
    "Omega cubed equals Omega",
    "non-bijective Omega over k^2",
    "k^n reduction of the transported braiding",
    "category isomorphism roundtrips",
    "invertibility of g",
    "descent equivalence",
    "braided category laws",
    "mutation sensitivity",
];

pub fn run(opts: &SuiteOptions) -> SuiteReport {
    let start = Instant::now();
    let results = (1..=CRITERIA.len()).map(|id| run_criterion(id, opts)).collect();
    SuiteReport {
        profile: opts.profile,
        results,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

/// Runs criterion `id` (1-based). Panics on an id outside `1..=9`.
pub fn run_criterion(id: usize, opts: &SuiteOptions) -> CriterionResult {
    let start = Instant::now();
    let mut log = Log::default();
    let body: fn(&SuiteOptions, &mut Log) -> Result<()> = match id {
        1 => qybe_exactness,
        2 => cube,
        3 => non_bijective,
        4 => kn_reduction,
        5 => roundtrips,
        6 => g_invertibility,
        7 => descent_equivalence,
        8 => braided_laws,
        9 => mutation_sensitivity,
        _ => panic!("no criterion {id}"),
    };
    if let Err(e) = body(opts, &mut log) {
        log.fail(format!("error: {e}"));
    }
    CriterionResult {
        id,
        name: CRITERIA[id - 1],
        passed: log.ok,
        details: log.lines,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

struct Log {
    ok: bool,
    lines: Vec<String>,
}

impl Default for Log {
    fn default() -> Log {
        Log { ok: true, lines: Vec::new() }
    }
}

impl Log {
    fn check(&mut self, ok: bool, line: impl Into<String>) {
        let line = line.into();
        self.ok &= ok;
        self.lines.push(format!("[{}] {line}", if ok { "ok" } else { "FAIL" }));
    }

    fn fail(&mut self, line: impl Into<String>) {
        self.check(false, line);
    }

    fn report(&mut self, label: &str, r: &Report) {
        match r.failures().next() {
            None => self.check(true, format!("{label}: {} checks", r.checks.len())),
            Some(f) => self.check(false, format!("{label}: `{}` failed{}", f.name, witness_text(f))),
        }
    }

    /// Records only failures, then one summary line.
    fn tally(&mut self, label: &str, total: usize, failures: Vec<String>) {
        let bad = failures.len();
        for f in failures.into_iter().take(5) {
            self.lines.push(format!("  {f}"));
        }
        self.check(bad == 0, format!("{label}: {}/{total}", total - bad));
    }
}

fn witness_text(c: &crate::report::Check) -> String {
    match &c.witness {
        Some(w) => format!(" at {:?} ({})", w.indices, w.location),
        None => c.note.as_ref().map(|n| format!(" ({n})")).unwrap_or_default(),
    }
}

fn first_failure(r: &Report) -> Option<String> {
    r.failures().next().map(|f| format!("`{}`{}", f.name, witness_text(f)))
}

/// The comodules every suite-wide criterion runs over.
pub fn suite_comodules(profile: Profile) -> Result<Vec<(String, Coaction)>> {
    let q = Field::Rational;
    let mut out = Vec::new();
    for (name, a) in [
        ("k^2", kn(2, q)),
        ("k^3", kn(3, q)),
        ("M2", matrix_algebra(2, q)),
        ("upper:2", upper_triangular(2, q)),
    ] {
        out.push((format!("regular over {name}"), Coaction::regular(Arc::new(a))));
    }
    for (name, a) in [("k^2", kn(2, q)), ("M2", matrix_algebra(2, q))] {
        let a = Arc::new(a);
        for d in 1..=3 {
            out.push((format!("F(k^{d}) over {name}"), descent_f(a.clone(), d)));
        }
    }
    let r = RMatrix::matrix_algebra(2, q)?;
    for (name, v) in [("A", Bimodule::regular(r.algebra().clone())), ("A (x) A", Bimodule::free(r.algebra().clone()))] {
        out.push((format!("R-matrix comodule {name} over M2"), comodule_from_rmatrix(&v, &r)?));
    }
    if profile == Profile::Full {
        let m3 = Arc::new(matrix_algebra(3, q));
        out.push(("regular over M3".into(), Coaction::regular(m3)));
        let r3 = RMatrix::matrix_algebra(3, q)?;
        let v = Bimodule::regular(r3.algebra().clone());
        out.push(("R-matrix comodule A over M3".into(), comodule_from_rmatrix(&v, &r3)?));
        let f5 = Field::prime(5)?;
        out.push(("regular over M2(F5)".into(), Coaction::regular(Arc::new(matrix_algebra(2, f5)))));
    }
    Ok(out)
}

fn qybe_exactness(opts: &SuiteOptions, log: &mut Log) -> Result<()> {
    let case = |field: Field, n: usize, log: &mut Log| -> Result<()> {
        let r = RMatrix::matrix_algebra(n, field)?;
        let c = comodule_from_rmatrix(&Bimodule::regular(r.algebra().clone()), &r)?;
        let op = omega_from_comodule(&c)?;
        let big = op.space_dim().pow(3);
        log.report(&format!("M{n}({field}), V = A: QYBE on {big}x{big}"), &qybe_check_with(&op, opts.exec));
        Ok(())
    };
    let timed = |log: &mut Log, label: &str, budget: Duration, start: Instant| {
        let t = start.elapsed();
        log.check(t < budget, format!("{label}: {t:.2?} (budget {budget:?})"));
    };
    let start = Instant::now();
    case(Field::Rational, 2, log)?;
    timed(log, "M2(Q) runtime", Duration::from_secs(5), start);
    if opts.profile == Profile::Full {
        let start = Instant::now();
        case(Field::prime(5)?, 2, log)?;
        case(Field::Rational, 3, log)?;
        timed(log, "F5 and M3 runtime", Duration::from_secs(60), start);
    }
    Ok(())
}

fn cube(opts: &SuiteOptions, log: &mut Log) -> Result<()> {
    let comodules = suite_comodules(opts.profile)?;
    let failures = opts.exec.map_slice(&comodules, |(name, c)| -> Result<Option<String>> {
        let r = omega_cubed_check(&omega_from_comodule(c)?);
        Ok(first_failure(&r).map(|f| format!("{name}: {f}")))
    });
    let failures: Vec<String> = failures.into_iter().collect::<Result<Vec<_>>>()?.into_iter().flatten().collect();
    log.tally("Omega^3 = Omega and Omega^2 formula", comodules.len(), failures);

    // the R-matrix recipe proper, not only its comodule
    let r = RMatrix::matrix_algebra(2, Field::Rational)?;
    for (name, v) in [("A", Bimodule::regular(r.algebra().clone())), ("A (x) A", Bimodule::free(r.algebra().clone()))] {
        let op = omega_r(&v, &r)?;
        log.report(&format!("Omega_R on {name} over M2"), &omega_cubed_check(&op));
        let via = omega_from_comodule(&comodule_from_rmatrix(&v, &r)?)?;
        log.check(via.omega() == op.omega(), format!("Omega_R on {name} agrees with the comodule recipe"));
    }
    Ok(())
}

fn non_bijective(_: &SuiteOptions, log: &mut Log) -> Result<()> {
    let q = Field::Rational;
    let a = Arc::new(kn(2, q));
    let x = Grouplike::one(a);
    let induced = induced_over_k(&x, 1)?;
    log.report("induced comodule N (x)_k A", &verify_induced(&induced));
    let (op, formula) = induced_operator(&x, &induced)?;
    log.check(formula.passed, format!("induced Omega matches its defining formula{}", witness_text(&formula)));
    // Omega(e_a (x) e_b) = 1 (x) e_b e_a with 1 = e_0 + e_1: only e_a (x) e_a survives
    let hand = Matrix::from_i64_rows(q, &[&[1, 0, 0, 0], &[0, 0, 0, 1], &[1, 0, 0, 0], &[0, 0, 0, 1]]);
    log.check(op.omega() == &hand, "Omega(a (x) b) = 1 (x) ba entrywise");
    let rank = op.omega().rank();
    log.check(rank == 2, format!("rank Omega = {rank}"));
    log.report("QYBE", &qybe_check_with(&op, Exec::Sequential));
    Ok(())
}

fn is_permutation(m: &Matrix) -> bool {
    let f = m.field();
    m.is_square()
        && (0..m.rows()).all(|i| {
            let row = m.row(i);
            row.iter().filter(|x| !x.is_zero()).count() == 1 && row.iter().all(|x| x.is_zero() || *x == f.one())
        })
        && (0..m.cols()).all(|j| (0..m.rows()).filter(|&i| !m.get(i, j).is_zero()).count() == 1)
}

fn matrix_unit(field: Field, n: usize, i: usize, j: usize) -> Matrix {
    Matrix::from_fn(field, n, n, |r, c| if r == i && c == j { field.one() } else { field.zero() })
}

/// `A`, `F(k)` and `F(k²)`.
fn small_objects(a: &Arc<Algebra>) -> Result<Vec<(String, Coaction)>> {
    Ok(vec![
        ("A".into(), yd_from_comodule(&Coaction::regular(a.clone()))?),
        ("F(k)".into(), yd_from_comodule(&descent_f(a.clone(), 1))?),
        ("F(k^2)".into(), yd_from_comodule(&descent_f(a.clone(), 2))?),
    ])
}

fn kn_reduction(_: &SuiteOptions, log: &mut Log) -> Result<()> {
    let q = Field::Rational;
    for n in [2, 3] {
        let a = Arc::new(kn(n, q));
        let dual = DualBasis::new(a.clone());
        let objs = small_objects(&a)?;
        let (mut flips, mut diag, mut pairs) = (Vec::new(), Vec::new(), 0);
        for (vn, v) in &objs {
            for (wn, w) in &objs {
                pairs += 1;
                let (vw, wv) = (tensor_over_a(v, w)?, tensor_over_a(w, v)?);
                let transported = transported_braiding(&dual, &vw, &wv)?;
                let flip = flip_on_quotient(&vw, &wv)?;
                let direct = braiding_between(&vw, &wv)?;
                if transported != flip || !is_permutation(&flip) || direct != transported {
                    flips.push(format!("{vn} (x) {wn}"));
                }
                for (i, j) in (0..n).flat_map(|i| (0..n).map(move |j| (i, j))) {
                    let e = matrix_unit(q, n, i, j);
                    let (first, second) = end_action_on_tensor(&dual, &vw, &e)?;
                    let both = end_action(v, &e)?.kron(&end_action(w, &e)?)?;
                    let both = vw.quotient().induce(&both, vw.quotient(), "e_ij v (x) e_ij w")?;
                    if first != both || second != both {
                        diag.push(format!("{vn} (x) {wn}, e_{i}{j}"));
                    }
                }
            }
        }
        log.tally(&format!("k^{n}: transported braiding = flip (a permutation) = c"), pairs, flips);
        log.tally(&format!("k^{n}: e_ij (v (x) w) = e_ij v (x) e_ij w"), pairs * n * n, diag);
    }
    Ok(())
}

fn roundtrips(opts: &SuiteOptions, log: &mut Log) -> Result<()> {
    let comodules = suite_comodules(opts.profile)?;
    let results = opts.exec.map_slice(&comodules, |(name, c)| -> Result<Vec<String>> {
        let mut bad = Vec::new();
        let plain = comodule_from_yd(c);
        let yd = yd_from_comodule(&plain)?;
        if comodule_from_yd(&yd) != plain {
            bad.push(format!("{name}: U P != id"));
        }
        if c.is_yd() && yd_from_comodule(&comodule_from_yd(c))? != *c {
            bad.push(format!("{name}: P U != id"));
        }
        let d = descent_from_yd(&yd)?;
        let back = yd_from_descent(&d)?;
        if back != yd {
            bad.push(format!("{name}: yd_from_descent(descent_from_yd) != id"));
        }
        if descent_from_yd(&back)? != d {
            bad.push(format!("{name}: descent_from_yd(yd_from_descent) != id"));
        }
        let dual = DualBasis::new(c.algebra().clone());
        let e = end_module_from_comodule(&plain)?;
        let c2 = comodule_from_end_module(&e, &dual)?;
        if c2 != plain {
            bad.push(format!("{name}: comodule -> End module -> comodule != id"));
        }
        if end_module_from_comodule(&c2)? != e {
            bad.push(format!("{name}: End module -> comodule -> End module != id"));
        }
        Ok(bad)
    });
    let mut bad = Vec::new();
    for r in results {
        bad.extend(r?);
    }
    log.tally("P/U, descent and End-module roundtrips", comodules.len(), bad);

    // the two action formulas on V (x)_A W, over each algebra of the suite
    let mut by_algebra: Vec<(Arc<Algebra>, Vec<(String, Coaction)>)> = Vec::new();
    for (name, c) in comodules {
        match by_algebra.iter_mut().find(|(a, _)| **a == **c.algebra()) {
            Some((_, list)) => list.push((name, c)),
            None => by_algebra.push((c.algebra().clone(), vec![(name, c)])),
        }
    }
    let mut pairs = Vec::new();
    for (a, list) in &by_algebra {
        // keep V (x) W at most 64-dimensional
        let small: Vec<_> = list.iter().filter(|(_, c)| c.dim() <= 8).collect();
        for (vn, v) in &small {
            for (wn, w) in &small {
                pairs.push((a.clone(), format!("{vn} (x) {wn}"), (*v).clone(), (*w).clone()));
            }
        }
    }
    let results = opts.exec.map_slice(&pairs, |(a, name, v, w)| -> Result<Option<String>> {
        let dual = DualBasis::new(a.clone());
        let t = tensor_over_a(v, w)?;
        let n = a.dim();
        for (i, j) in (0..n).flat_map(|i| (0..n).map(move |j| (i, j))) {
            let f = matrix_unit(a.field(), n, i, j);
            let (first, second) = end_action_on_tensor(&dual, &t, &f)?;
            if first != second || first != end_action(t.coaction(), &f)? {
                return Ok(Some(format!("{name}: E_{i}{j}")));
            }
        }
        Ok(None)
    });
    let total = results.len();
    let bad = results.into_iter().collect::<Result<Vec<_>>>()?.into_iter().flatten().collect();
    log.tally("both End_k(A) action formulas on V (x)_A W agree with the tensor coaction", total, bad);
    Ok(())
}

fn g_invertibility(opts: &SuiteOptions, log: &mut Log) -> Result<()> {
    let comodules = suite_comodules(opts.profile)?;
    let results = opts.exec.map_slice(&comodules, |(name, c)| -> Result<Option<String>> {
        let yd = yd_from_comodule(&comodule_from_yd(c))?;
        let d = descent_from_yd(&yd)?;
        if let Err(e) = g_inverse(&d) {
            return Ok(Some(format!("{name}: {e}")));
        }
        let converse = counit_from_invertibility(&yd)?;
        Ok(first_failure(&converse).map(|f| format!("{name}: {f}")))
    });
    let total = results.len();
    let bad = results.into_iter().collect::<Result<Vec<_>>>()?.into_iter().flatten().collect();
    log.tally("tau g tau is a two-sided inverse of g", total, bad);

    for (name, a) in [("k^2", kn(2, Field::Rational)), ("M2", matrix_algebra(2, Field::Rational))] {
        let a = Arc::new(a);
        let zero = Coaction::zero(a.clone());
        let counit = verify_comodule(&zero, false);
        let counit_failed = !counit.passed(crate::modules::axiom::COUNIT);
        log.check(counit_failed, format!("zero coaction over {name}: counit axiom reported failed"));
        let zero = zero.with_left(Bimodule::regular(a).left().to_vec())?;
        match g_inverse(&descent_from_yd(&zero)?) {
            Ok(_) => log.fail(format!("zero coaction over {name}: g accepted as invertible")),
            Err(Error::Verification(r)) => {
                let singular = r.get("g injective").map(|c| !c.passed && c.witness.is_some()).unwrap_or(false);
                log.check(singular, format!("zero coaction over {name}: g singular with kernel witness"));
            }
            Err(e) => return Err(e),
        }
    }
    Ok(())
}

fn descent_equivalence(_: &SuiteOptions, log: &mut Log) -> Result<()> {
    for (name, a) in [("k^2", kn(2, Field::Rational)), ("M2", matrix_algebra(2, Field::Rational))] {
        let a = Arc::new(a);
        for d in 1..=3 {
            let eta = unit_eta(a.clone(), d)?;
            let f = descent_f(a.clone(), d);
            let eps = counit_eps(&f);
            let g = descent_g(&f).cols();
            log.check(
                is_bijective(&eta) && is_bijective(&eps) && g == d,
                format!("{name}, dim N = {d}: eta {}x{}, eps {}x{} bijective, dim G(F(N)) = {g}", eta.rows(), eta.cols(), eps.rows(), eps.cols()),
            );
        }
    }
    Ok(())
}

fn braided_laws(opts: &SuiteOptions, log: &mut Log) -> Result<()> {
    let negate = opts.mutation == Mutation::NegatedBraiding;
    for (name, a) in [("k^2", kn(2, Field::Rational)), ("M2", matrix_algebra(2, Field::Rational))] {
        let a = Arc::new(a);
        let objs = small_objects(&a)?;
        let k = objs.len();
        let results = opts.exec.map_range(k * k * k, |t| -> Result<Option<String>> {
            let (u, v, w) = (&objs[t / (k * k)], &objs[(t / k) % k], &objs[t % k]);
            let braid = |vw: &_, wv: &_| {
                let c = braiding_between(vw, wv)?;
                Ok(if negate { c.neg() } else { c })
            };
            let r = hexagon_check_with(&u.1, &v.1, &w.1, &braid)?;
            Ok(first_failure(&r).map(|f| format!("({}, {}, {}): {f}", u.0, v.0, w.0)))
        });
        let bad = results.into_iter().collect::<Result<Vec<_>>>()?.into_iter().flatten().collect();
        log.tally(&format!("{name}: hexagons and inverse laws over all triples"), k * k * k, bad);
        for (on, o) in &objs {
            log.report(&format!("{name}: unit constraints for {on}"), &unit_check(o)?);
        }
    }
    Ok(())
}

/// Whether some verifier reports a failure carrying a witness.
fn caught(reports: &[Report]) -> bool {
    reports.iter().any(|r| r.failures().any(|c| c.witness.is_some()))
}

fn bumped(m: &Matrix, i: usize, j: usize) -> Matrix {
    let mut out = m.clone();
    out.set(i, j, m.get(i, j) + &m.field().one());
    out
}

fn entries(m: &Matrix) -> Vec<(usize, usize)> {
    (0..m.rows()).flat_map(|i| (0..m.cols()).map(move |j| (i, j))).collect()
}

fn mutation_sensitivity(opts: &SuiteOptions, log: &mut Log) -> Result<()> {
    let q = Field::Rational;
    let exec = opts.exec;
    let k2 = Arc::new(kn(2, q));
    let m2 = Arc::new(matrix_algebra(2, q));
    let up = Arc::new(upper_triangular(2, q));
    let r = RMatrix::matrix_algebra(2, q)?;
    let rm = comodule_from_rmatrix(&Bimodule::regular(r.algebra().clone()), &r)?;

    for (name, a) in [("k^2", &k2), ("M2", &m2), ("upper:2", &up)] {
        let n = a.dim();
        let missed = exec.map_range(n * n * n, |t| {
            let (i, j, k) = (t / (n * n), (t / n) % n, t % n);
            let b = a.with_structure_constant(i, j, k, a.sc(i, j, k) + &q.one());
            (!caught(&[b.verify()])).then(|| format!("sc[{i}][{j}][{k}]"))
        });
        log.tally(&format!("sc of {name}"), n * n * n, missed.into_iter().flatten().collect());
    }

    let comodules = [
        ("regular over k^2", Coaction::regular(k2.clone())),
        ("regular over M2", Coaction::regular(m2.clone())),
        ("F(k^2) over k^2", descent_f(k2.clone(), 2)),
        ("R-matrix comodule over M2", rm.clone()),
    ];
    for (name, c) in &comodules {
        let cells = entries(c.rho());
        let missed = exec.map_slice(&cells, |&(i, j)| -> Result<Option<String>> {
            let c2 = c.with_rho(bumped(c.rho(), i, j))?;
            Ok((!caught(&[verify_comodule(&c2, c.is_yd())])).then(|| format!("rho[{i}][{j}]")))
        });
        let missed = missed.into_iter().collect::<Result<Vec<_>>>()?.into_iter().flatten().collect();
        log.tally(&format!("rho of {name}"), cells.len(), missed);
    }

    for (name, c) in [
        ("regular over k^2", Coaction::regular(k2.clone())),
        ("regular over M2", Coaction::regular(m2.clone())),
        ("F(k) over M2", descent_f(m2.clone(), 1)),
    ] {
        let d = descent_from_yd(&yd_from_comodule(&c)?)?;
        let cells = entries(d.g());
        let missed = exec.map_slice(&cells, |&(i, j)| -> Result<Option<String>> {
            let d2 = d.with_g(bumped(d.g(), i, j))?;
            Ok((!caught(&[verify_descent(&d2)])).then(|| format!("g[{i}][{j}]")))
        });
        let missed = missed.into_iter().collect::<Result<Vec<_>>>()?.into_iter().flatten().collect();
        log.tally(&format!("g of {name}"), cells.len(), missed);
    }

    let coeffs = r.coefficients();
    let missed = exec.map_range(coeffs.len(), |t| {
        let mut r2 = coeffs.to_vec();
        r2[t] = &r2[t] + &q.one();
        (!caught(&[verify_rmatrix(r.algebra(), &r2)])).then(|| format!("r[{t}]"))
    });
    log.tally("r of M2", coeffs.len(), missed.into_iter().flatten().collect());

    for (name, c) in [
        ("regular over k^2", Coaction::regular(k2)),
        ("regular over M2", Coaction::regular(m2)),
        ("R-matrix comodule over M2", rm),
    ] {
        let op = omega_from_comodule(&c)?;
        let cells = entries(op.omega());
        let missed = exec.map_slice(&cells, |&(i, j)| -> Result<Option<String>> {
            let op2 = op.with_omega(bumped(op.omega(), i, j))?;
            let reports = [qybe_check_with(&op2, Exec::Sequential), omega_cubed_check(&op2)];
            Ok((!caught(&reports)).then(|| format!("Omega[{i}][{j}]")))
        });
        let missed = missed.into_iter().collect::<Result<Vec<_>>>()?.into_iter().flatten().collect();
        log.tally(&format!("Omega of {name}"), cells.len(), missed);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profile_parses() {
        assert_eq!("full".parse::<Profile>().unwrap(), Profile::Full);
        assert!("slow".parse::<Profile>().is_err());
    }

    #[test]
    fn permutation_detection() {
        let q = Field::Rational;
        assert!(is_permutation(&crate::exactla::flip(q, 2, 3)));
        assert!(!is_permutation(&Matrix::zeros(q, 2, 2)));
        assert!(!is_permutation(&Matrix::from_i64_rows(q, &[&[1, 1], &[0, 1]])));
    }
}
