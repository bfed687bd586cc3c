use std::sync::Arc;

use super::Algebra;
use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::report::{Check, Report};

/// A unital algebra map `B → A`, stored as a `dim A × dim B` matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraMorphism {
    source: Arc<Algebra>,
    target: Arc<Algebra>,
    map: Matrix,
}

impl AlgebraMorphism {
    pub fn new(source: Arc<Algebra>, target: Arc<Algebra>, map: Matrix) -> Result<AlgebraMorphism> {
        if map.shape() != (target.dim(), source.dim()) {
            return Err(Error::dimension(
                "algebra morphism",
                format!("{}x{}", target.dim(), source.dim()),
                format!("{}x{}", map.rows(), map.cols()),
            ));
        }
        if source.field() != target.field() || map.field() != target.field() {
            return Err(Error::FieldMismatch(source.field(), target.field()));
        }
        let m = AlgebraMorphism { source, target, map };
        let report = m.verify();
        if !report.all_passed() {
            return Err(Error::verification(report));
        }
        Ok(m)
    }

    /// The structure map `k → A`.
    pub fn unit_of(target: Arc<Algebra>) -> AlgebraMorphism {
        let k = Arc::new(super::kn(1, target.field()));
        let map = target.unit_map();
        AlgebraMorphism::new(k, target, map).expect("the unit map is an algebra map")
    }

    pub fn source(&self) -> &Arc<Algebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Algebra> {
        &self.target
    }

    pub fn map(&self) -> &Matrix {
        &self.map
    }

    pub fn verify(&self) -> Report {
        let (b, a) = (&self.source, &self.target);
        let mut report = Report::new("algebra morphism");
        let unit = self.map.apply(b.unit()).expect("shape checked");
        report.push(Check::condition("unital", unit == a.unit(), "i(1_B) != 1_A"));
        let mut checks = Vec::new();
        for i in 0..b.dim() {
            for j in 0..b.dim() {
                let lhs = self.map.apply(b.basis_product(i, j)).expect("shape checked");
                let rhs = a.mul(&self.map.column(i), &self.map.column(j));
                let l = Matrix::from_column(a.field(), &lhs);
                let r = Matrix::from_column(a.field(), &rhs);
                checks.push(Check::maps_equal_at("multiplicative", "i(b_i b_j) vs i(b_i) i(b_j)", &[i, j], &l, &r));
            }
        }
        report.push_all("multiplicative", checks);
        report
    }
}
