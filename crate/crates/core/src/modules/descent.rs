use super::bimodule::Bimodule;
use super::coaction::Coaction;
use crate::error::{Error, Result};
use crate::exactla::{flip, Matrix};
use crate::report::{Check, Report, Witness};

pub mod condition {
    pub const LEFT_LINEAR: &str = "A(2)-left linearity: g((b (x) c)(a (x) v)) = (b (x) c) g(a (x) v)";
    pub const RIGHT_LINEAR: &str = "A(2)-right linearity: g((a (x) v)(b (x) c)) = g(a (x) v)(b (x) c)";
    pub const COCYCLE: &str = "cocycle: g2 = g3 g1";
    pub const COUNIT: &str = "counit: psi(g(1 (x) v)) = v";
}

/// A bimodule `V` with `g: A⊗V → V⊗A` (an `(m·n) × (n·m)` matrix).
#[derive(Clone, Debug, PartialEq)]
pub struct DescentDatum {
    module: Bimodule,
    g: Matrix,
}

impl DescentDatum {
    pub fn new(module: Bimodule, g: Matrix) -> Result<DescentDatum> {
        let mn = module.dim() * module.algebra().dim();
        if g.shape() != (mn, mn) {
            return Err(Error::dimension("descent map g", format!("{mn}x{mn}"), format!("{}x{}", g.rows(), g.cols())));
        }
        if g.field() != module.algebra().field() {
            return Err(Error::FieldMismatch(module.algebra().field(), g.field()));
        }
        Ok(DescentDatum { module, g })
    }

    pub fn module(&self) -> &Bimodule {
        &self.module
    }

    pub fn g(&self) -> &Matrix {
        &self.g
    }

    pub fn with_g(&self, g: Matrix) -> Result<DescentDatum> {
        DescentDatum::new(self.module.clone(), g)
    }

    /// `ψ: V⊗A → V`.
    pub fn psi(&self) -> Matrix {
        super::coaction::action_map(self.module.algebra(), self.module.dim(), self.module.right(), super::bimodule::Side::Right)
    }
}

/// `g(a⊗v) = a·v[0] ⊗ v[1]`.
pub fn descent_from_yd(c: &Coaction) -> Result<DescentDatum> {
    let module = c
        .bimodule()
        .ok_or_else(|| Error::Invalid("descent data need a left action; apply yd_from_comodule first".into()))?;
    let a = c.algebra();
    let (m, n) = (c.dim(), a.dim());
    let id_n = Matrix::identity(a.field(), n);
    let mut g = Matrix::zeros(a.field(), m * n, n * m);
    for (i, l) in module.left().iter().enumerate() {
        let block = l.kron(&id_n).expect("field").mul(c.rho()).expect("shapes");
        for p in 0..m {
            for (r, v) in block.column_entries(p) {
                g.set(r, i * m + p, v.clone());
            }
        }
    }
    DescentDatum::new(module, g)
}

/// `ρ(v) = g(1⊗v)`, flagged Yetter–Drinfeld once the descent conditions hold.
pub fn yd_from_descent(d: &DescentDatum) -> Result<Coaction> {
    let report = verify_descent(d);
    if !report.all_passed() {
        return Err(Error::verification(report));
    }
    let c = coaction_of(d)?;
    c.into_verified_yd()
}

/// `ρ(v) = g(1⊗v)` without any checks.
pub fn coaction_of(d: &DescentDatum) -> Result<Coaction> {
    let a = d.module.algebra();
    let unit_in = a.unit_map().kron(&Matrix::identity(a.field(), d.module.dim()))?;
    Coaction::on_bimodule(&d.module, d.g.mul(&unit_in)?)
}

/// The induced maps on triple tensors:
/// `g1 = A⊗g`, `g2(a⊗b⊗v) = Σ vᵢ⊗b⊗aᵢ`, `g3 = g⊗A`.
pub fn lift_g(d: &DescentDatum) -> (Matrix, Matrix, Matrix) {
    let a = d.module.algebra();
    let field = a.field();
    let (m, n) = (d.module.dim(), a.dim());
    let id_n = Matrix::identity(field, n);
    let g1 = id_n.kron(&d.g).expect("field");
    let g3 = d.g.kron(&id_n).expect("field");
    let mut g2 = Matrix::zeros(field, m * n * n, n * n * m);
    for x in 0..n {
        for v in 0..m {
            for (r, c) in d.g.column_entries(x * m + v) {
                let (vi, ai) = (r / n, r % n);
                for b in 0..n {
                    g2.set((vi * n + b) * n + ai, (x * n + b) * m + v, c.clone());
                }
            }
        }
    }
    (g1, g2, g3)
}

/// Bimodule linearity over `A⊗A`, the cocycle condition and the counit condition.
pub fn verify_descent(d: &DescentDatum) -> Report {
    let a = d.module.algebra();
    let field = a.field();
    let (m, n) = (d.module.dim(), a.dim());
    let id_n = Matrix::identity(field, n);
    let id_m = Matrix::identity(field, m);
    let mut report = Report::new("descent datum");
    report.extend(d.module.verify());

    let mut left = Vec::new();
    let mut right = Vec::new();
    for i in 0..n {
        let e = a.basis(i);
        let (lm, rm) = (a.left_mul_matrix(&e), a.right_mul_matrix(&e));
        let (lv, rv) = (&d.module.left()[i], &d.module.right()[i]);
        // (b⊗c)(a⊗v) = ba⊗cv and (b⊗c)(v⊗a) = bv⊗ca; right actions likewise
        let families = [
            (true, lm.kron(&id_m), lv.kron(&id_n), "left by e_i (x) 1"),
            (true, id_n.kron(lv), id_m.kron(&lm), "left by 1 (x) e_i"),
            (false, rm.kron(&id_m), rv.kron(&id_n), "right by e_i (x) 1"),
            (false, id_n.kron(rv), id_m.kron(&rm), "right by 1 (x) e_i"),
        ];
        for (is_left, src, dst, loc) in families {
            let (src, dst) = (src.expect("field"), dst.expect("field"));
            let l = d.g.mul(&src).expect("shapes");
            let r = dst.mul(&d.g).expect("shapes");
            let check = Check::maps_equal_at(loc, loc, &[i], &l, &r);
            if is_left { left.push(check) } else { right.push(check) }
        }
    }
    report.push_all(condition::LEFT_LINEAR, left);
    report.push_all(condition::RIGHT_LINEAR, right);

    let (g1, g2, g3) = lift_g(d);
    let g31 = g3.mul(&g1).expect("shapes");
    report.push(Check::maps_equal(condition::COCYCLE, "g2(e_a (x) e_b (x) e_v) vs g3 g1", &g2, &g31));

    let unit_in = a.unit_map().kron(&id_m).expect("field");
    let counit = d.psi().mul(&d.g).expect("shapes").mul(&unit_in).expect("shapes");
    report.push(Check::maps_equal(condition::COUNIT, "psi(g(1 (x) e_v)) vs e_v", &counit, &id_m));
    report
}

/// `τ∘g∘τ`, returned only if it is a two-sided inverse of `g`. Otherwise the
/// error report carries a nonzero kernel vector of `g` when there is one.
pub fn g_inverse(d: &DescentDatum) -> Result<Matrix> {
    let field = d.module.algebra().field();
    let (m, n) = (d.module.dim(), d.module.algebra().dim());
    let tau = flip(field, m, n);
    let candidate = tau.mul(&d.g)?.mul(&tau)?;
    let id = Matrix::identity(field, m * n);
    let mut report = Report::new("inverse of g");
    report.push(Check::maps_equal("tau g tau g = id", "on A (x) V", &candidate.mul(&d.g)?, &id));
    report.push(Check::maps_equal("g tau g tau = id", "on V (x) A", &d.g.mul(&candidate)?, &id));
    if report.all_passed() {
        return Ok(candidate);
    }
    report.push(singularity_check(&d.g));
    Err(Error::verification(report))
}

fn singularity_check(g: &Matrix) -> Check {
    match g.kernel_basis().into_iter().next() {
        None => Check::pass("g injective"),
        Some(v) => {
            let gv = g.apply(&v).expect("shapes");
            let j = v.iter().position(|x| !x.is_zero()).unwrap_or(0);
            Check::fail(
                "g injective",
                Some(Witness {
                    indices: vec![j],
                    location: "kernel vector v of g: v vs g(v)".into(),
                    lhs: v,
                    rhs: gv,
                }),
                Some(format!("rank {} of {}", g.rank(), g.cols())),
            )
        }
    }
}

/// The converse direction: if `g` is invertible then the counit condition
/// follows, by cancelling `g` in `g(1 ⊗ v[0]v[1]) = g(1 ⊗ v)` and multiplying out.
pub fn counit_from_invertibility(c: &Coaction) -> Result<Report> {
    let d = descent_from_yd(c)?;
    let a = c.algebra();
    let field = a.field();
    let m = c.dim();
    let mut report = Report::new("counit from invertibility of g");
    let inv = match d.g.inverse() {
        Ok(inv) => {
            report.push(Check::pass("g invertible"));
            inv
        }
        Err(_) => {
            report.push(singularity_check(&d.g));
            return Ok(report);
        }
    };
    let unit_in = a.unit_map().kron(&Matrix::identity(field, m))?;
    let psi_rho = c.psi().mul(c.rho())?;
    let lhs = d.g.mul(&unit_in)?.mul(&psi_rho)?;
    let rhs = d.g.mul(&unit_in)?;
    report.push(Check::maps_equal(
        "g(1 (x) v[0]v[1]) = g(1 (x) v)",
        "both sides on e_v",
        &lhs,
        &rhs,
    ));
    let lambda = c.lambda().expect("descent data carry a left action");
    let recovered = lambda.mul(&inv)?.mul(&lhs)?;
    report.push(Check::maps_equal(
        "cancel g and multiply: v[0]v[1] = v",
        "mult(g^-1(g(1 (x) v[0]v[1]))) vs e_v",
        &recovered,
        &Matrix::identity(field, m),
    ));
    Ok(report)
}
