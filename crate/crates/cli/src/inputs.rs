use std::path::Path;
use std::sync::Arc;

use coring::algebra::{self, Algebra};
use coring::io::{read_json, AlgebraFile, ComoduleFile, DescentFile};
use coring::modules::{descent_f, descent_from_yd, with_induced_left, Bimodule, Coaction, DescentDatum};
use coring::ybe::{comodule_from_rmatrix, RMatrix};
use coring::{Error, Field, Result};

pub fn looks_like_path(spec: &str) -> bool {
    spec.ends_with(".json") || spec.contains('/') || Path::new(spec).is_file()
}

/// A builtin algebra, or an algebra file loaded without validation.
pub fn algebra(spec: &str, field: Option<Field>) -> Result<Algebra> {
    if looks_like_path(spec) {
        read_json::<AlgebraFile>(Path::new(spec))?.to_algebra(field, false)
    } else {
        algebra::from_name(spec, field.unwrap_or(Field::Rational))
    }
}

fn matrix_size(name: &str) -> Result<usize> {
    name.strip_prefix("mat:")
        .and_then(|n| n.trim().parse().ok())
        .ok_or_else(|| Error::Invalid(format!("the R-matrix is only available for mat:N, not `{name}`")))
}

pub fn rmatrix(algebra: &str, field: Option<Field>) -> Result<RMatrix> {
    RMatrix::matrix_algebra(matrix_size(algebra)?, field.unwrap_or(Field::Rational))
}

/// Builtin comodules over `algebra`, or a comodule file.
pub fn comodule(spec: &str, algebra_name: &str, field: Option<Field>) -> Result<Coaction> {
    if looks_like_path(spec) {
        return read_json::<ComoduleFile>(Path::new(spec))?.to_coaction(field);
    }
    if spec == "rmatrix" {
        let r = rmatrix(algebra_name, field)?;
        return comodule_from_rmatrix(&Bimodule::regular(r.algebra().clone()), &r);
    }
    let a = Arc::new(algebra(algebra_name, field)?);
    match spec {
        "regular" => Ok(Coaction::regular(a)),
        "zero" => Ok(Coaction::zero(a)),
        "flipped" => Ok(Coaction::flipped_regular(a)),
        _ => match spec.strip_prefix("free:").map(|n| n.trim().parse::<usize>()) {
            Some(Ok(d)) if d > 0 => Ok(descent_f(a, d)),
            _ => Err(Error::Parse(format!(
                "unknown comodule `{spec}`; expected regular, zero, flipped, free:N, rmatrix or a .json file"
            ))),
        },
    }
}

/// A descent file, or the descent datum of a builtin comodule.
pub fn descent(spec: &str, algebra_name: &str, field: Option<Field>) -> Result<DescentDatum> {
    if looks_like_path(spec) {
        return read_json::<DescentFile>(Path::new(spec))?.to_datum(field);
    }
    descent_from_yd(&with_induced_left(&comodule(spec, algebra_name, field)?)?)
}

/// The algebra reference stored in a comodule or descent file, so that re-exports keep it.
pub fn file_algebra_ref(spec: &str) -> Option<coring::io::AlgebraRef> {
    #[derive(serde::Deserialize)]
    struct Head {
        algebra: coring::io::AlgebraRef,
    }
    if !looks_like_path(spec) {
        return None;
    }
    read_json::<Head>(Path::new(spec)).ok().map(|h| h.algebra)
}

/// How an algebra is referenced when exporting.
pub fn algebra_ref(spec: &str, a: &Algebra) -> coring::io::AlgebraRef {
    if looks_like_path(spec) || a.field() != Field::Rational {
        coring::io::AlgebraRef::Inline(AlgebraFile::from_algebra(a))
    } else {
        coring::io::AlgebraRef::Name(spec.to_string())
    }
}
