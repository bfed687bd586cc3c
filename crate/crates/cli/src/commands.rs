use std::path::Path;
use std::sync::Arc;

use serde::Serialize;

use coring::braided::{
    braiding_between, braiding_inverse_between, hexagon_check, naturality_check, tensor_over_a, unit_check,
    ComoduleMorphism,
};
use coring::io::{read_json, AlgebraFile, AlgebraRef, ComoduleFile, DescentFile, OperatorFile};
use coring::modules::{g_inverse, swap_counit_check, verify_comodule, verify_descent, with_induced_left, yd_from_comodule, Bimodule, Coaction};
use coring::suite::{self, SuiteOptions};
use coring::ybe::{
    induced_operator, induced_over_k, omega_cubed_check, omega_from_comodule, omega_from_yd, omega_r, qybe, qybe_check,
    Grouplike,
};
use coring::{Check, Error, Matrix, Report, Result};

use crate::inputs::{self, looks_like_path};
use crate::output::Outcome;
use crate::{BraidCheck, BuildArgs, ComoduleSpec, Global, PairArgs, Recipe};

fn export_ref(spec: &str, algebra: &str, a: &coring::algebra::Algebra) -> AlgebraRef {
    match inputs::file_algebra_ref(spec) {
        Some(r) => r,
        None if looks_like_path(spec) => AlgebraRef::Inline(AlgebraFile::from_algebra(a)),
        None => inputs::algebra_ref(algebra, a),
    }
}

pub fn algebra_check(g: &Global, spec: &str) -> Result<Outcome> {
    let a = inputs::algebra(spec, g.field)?;
    let mut out = Outcome::default();
    out.line(format!("algebra of dimension {} over {}", a.dim(), a.field()));
    out.add_report(a.verify());
    out.export(g, &AlgebraFile::from_algebra(&a))?;
    Ok(out)
}

pub fn comodule_verify(g: &Global, spec: &ComoduleSpec, yd: bool) -> Result<Outcome> {
    let mut c = inputs::comodule(&spec.comodule, &spec.algebra, g.field)?;
    let mut out = Outcome::default();
    out.line(format!("comodule of dimension {} over an algebra of dimension {}", c.dim(), c.algebra().dim()));
    if yd && c.left().is_none() {
        let base = verify_comodule(&c, false);
        if !base.all_passed() {
            out.line("no left action given and none can be induced");
            out.add_report(base);
            return Ok(out);
        }
        out.line("left action induced as a.v = v[0] a v[1]");
        c = yd_from_comodule(&c)?;
    }
    out.add_report(verify_comodule(&c, yd));
    if yd {
        out.checks.push(swap_counit_check(&c));
    }
    out.export(g, &ComoduleFile::from_coaction(&c, export_ref(&spec.comodule, &spec.algebra, c.algebra())))?;
    Ok(out)
}

pub fn descent_verify(g: &Global, spec: &str, algebra: &str) -> Result<Outcome> {
    let d = inputs::descent(spec, algebra, g.field)?;
    let mut out = Outcome::default();
    out.line(format!("g on A (x) V, dimension {}", d.g().rows()));
    out.add_report(verify_descent(&d));
    match g_inverse(&d) {
        Ok(_) => out.checks.push(Check::pass("tau g tau is a two-sided inverse of g")),
        Err(Error::Verification(r)) => out.add_report(*r),
        Err(e) => return Err(e),
    }
    out.export(g, &DescentFile::from_datum(&d, export_ref(spec, algebra, d.module().algebra())))?;
    Ok(out)
}

fn pair(g: &Global, p: &PairArgs) -> Result<(Coaction, Coaction)> {
    let v = inputs::comodule(&p.v, &p.algebra, g.field)?;
    let w = inputs::comodule(&p.w, &p.algebra, g.field)?;
    let check = |c: &Coaction| -> Result<Coaction> { with_induced_left(c) };
    Ok((check(&v)?, check(&w)?))
}

#[derive(Serialize)]
struct TensorExport {
    dim: usize,
    ambient_dim: usize,
    basis_coordinates: Vec<usize>,
    relations: Matrix,
    proj: Matrix,
    sect: Matrix,
    rho: Matrix,
    right: Vec<Matrix>,
}

pub fn tensor(g: &Global, p: &PairArgs) -> Result<Outcome> {
    let (v, w) = pair(g, p)?;
    let t = tensor_over_a(&v, &w)?;
    let mut out = Outcome::default();
    out.line(format!(
        "V (x)_A W has dimension {} (ambient {}, {} independent relations)",
        t.dim(),
        t.ambient_dim(),
        t.relations().rows()
    ));
    out.add_report(verify_comodule(t.coaction(), true));
    out.export(
        g,
        &TensorExport {
            dim: t.dim(),
            ambient_dim: t.ambient_dim(),
            basis_coordinates: t.quotient().basis_coordinates().to_vec(),
            relations: t.relations().clone(),
            proj: t.proj().clone(),
            sect: t.sect().clone(),
            rho: t.coaction().rho().clone(),
            right: t.coaction().right().to_vec(),
        },
    )?;
    Ok(out)
}

#[derive(Serialize)]
struct BraidExport {
    vw_basis: Vec<usize>,
    wv_basis: Vec<usize>,
    braiding: Matrix,
    inverse: Matrix,
}

fn labelled(label: &str, r: Report) -> impl Iterator<Item = Check> + '_ {
    r.checks.into_iter().map(move |mut c| {
        c.name = format!("{label}: {}", c.name);
        c
    })
}

pub fn braid(g: &Global, p: &PairArgs, laws: &[BraidCheck]) -> Result<Outcome> {
    let (v, w) = pair(g, p)?;
    let (vw, wv) = (tensor_over_a(&v, &w)?, tensor_over_a(&w, &v)?);
    let c = braiding_between(&vw, &wv)?;
    let ci = braiding_inverse_between(&vw, &wv)?;
    let field = c.field();
    let mut out = Outcome::default();
    out.line(format!("c_{{V,W}}: {} -> {}", vw.dim(), wv.dim()));
    out.checks.push(Check::maps_equal("c^-1 c = id", "on V (x)_A W", &ci.mul(&c)?, &Matrix::identity(field, vw.dim())));
    out.checks.push(Check::maps_equal("c c^-1 = id", "on W (x)_A V", &c.mul(&ci)?, &Matrix::identity(field, wv.dim())));
    let objs = [("V", &v), ("W", &w)];
    for law in laws {
        match law {
            BraidCheck::Hexagon => {
                for (xn, x) in objs {
                    for (yn, y) in objs {
                        for (zn, z) in objs {
                            let label = format!("({xn}, {yn}, {zn})");
                            out.checks.extend(labelled(&label, hexagon_check(x, y, z)?));
                        }
                    }
                }
            }
            BraidCheck::Naturality => {
                for ((xn, x), (_, y)) in [(objs[0], objs[1]), (objs[1], objs[0])] {
                    let two = field.from_i64(2);
                    let maps = [
                        ("2", ComoduleMorphism::scalar(x, &two)?),
                        ("rho", ComoduleMorphism::coaction(x)?),
                        ("counit", ComoduleMorphism::counit(x)?),
                    ];
                    for (fname, f) in maps {
                        out.checks.extend(labelled(&format!("f = {fname} on {xn}"), naturality_check(&f, y)?));
                    }
                }
            }
            BraidCheck::Unit => {
                for (xn, x) in objs {
                    out.checks.extend(labelled(xn, unit_check(x)?));
                }
            }
        }
    }
    out.export(
        g,
        &BraidExport {
            vw_basis: vw.quotient().basis_coordinates().to_vec(),
            wv_basis: wv.quotient().basis_coordinates().to_vec(),
            braiding: c,
            inverse: ci,
        },
    )?;
    Ok(out)
}

pub fn ybe_build(g: &Global, args: &BuildArgs) -> Result<Outcome> {
    let mut out = Outcome::default();
    let op = match args.recipe {
        Recipe::Comodule => omega_from_comodule(&inputs::comodule(&args.comodule, &args.algebra, g.field)?)?,
        Recipe::Yd => omega_from_yd(&with_induced_left(&inputs::comodule(&args.comodule, &args.algebra, g.field)?)?)?,
        Recipe::Rmatrix => {
            let r = inputs::rmatrix(&args.algebra, g.field)?;
            omega_r(&Bimodule::regular(r.algebra().clone()), &r)?
        }
        Recipe::Grouplike => {
            let a = Arc::new(inputs::algebra(&args.algebra, g.field)?);
            let x = Grouplike::one(a);
            let induced = induced_over_k(&x, args.n)?;
            let (op, formula) = induced_operator(&x, &induced)?;
            out.checks.push(formula);
            op
        }
    };
    out.line(format!(
        "Omega on V (x) V with dim V = {}, provenance {}, rank {}",
        op.space_dim(),
        op.provenance(),
        op.omega().rank()
    ));
    let q = qybe_check(&op);
    let cube = omega_cubed_check(&op);
    let file = OperatorFile::new(&op, q.all_passed(), cube.passed(qybe::CUBE));
    out.add_report(q);
    out.add_report(cube);
    out.export(g, &file)?;
    Ok(out)
}

pub fn ybe_check(g: &Global, path: &Path, want_qybe: bool, want_cube: bool) -> Result<Outcome> {
    let file: OperatorFile = read_json(path)?;
    let op = file.to_operator(g.field)?;
    let mut out = Outcome::default();
    out.line(format!("Omega on V (x) V with dim V = {}, provenance {}", op.space_dim(), op.provenance()));
    let mut recorded = OperatorFile { omega: op.omega().clone(), ..file };
    if want_qybe {
        let q = qybe_check(&op);
        let ok = q.all_passed();
        out.add_report(q);
        out.checks.push(Check::condition(
            "recorded qybe flag",
            recorded.qybe == ok,
            format!("file says {}, recomputed {ok}", recorded.qybe),
        ));
        recorded.qybe = ok;
    }
    if want_cube {
        let cube = omega_cubed_check(&op);
        let ok = cube.passed(qybe::CUBE);
        out.add_report(cube);
        out.checks.push(Check::condition(
            "recorded cube flag",
            recorded.cube == ok,
            format!("file says {}, recomputed {ok}", recorded.cube),
        ));
        recorded.cube = ok;
    }
    out.export(g, &recorded)?;
    Ok(out)
}

pub fn suite(g: &Global, opts: &SuiteOptions) -> Result<Outcome> {
    let report = suite::run(opts);
    let mut out = Outcome::default();
    out.line(format!("profile {}, {} ms", report.profile, report.elapsed_ms));
    for r in &report.results {
        let name = format!("criterion {}: {} ({} ms)", r.id, r.name, r.elapsed_ms);
        out.checks.push(if r.passed {
            Check::pass(name)
        } else {
            let first = r.details.iter().find(|l| l.starts_with("[FAIL]")).cloned();
            Check::fail(name, None, first)
        });
        for d in &r.details {
            out.line(format!("{}. {d}", r.id));
        }
    }
    out.export(g, &report)?;
    Ok(out)
}
