use super::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{unit_vector, Field};

pub(super) fn diagonal(n: usize, field: Field) -> Algebra {
    assert!(n >= 1, "k^n needs n >= 1");
    let unit = vec![field.one(); n];
    Algebra::from_table(field, n, unit, |i, j| {
        if i == j {
            unit_vector(field, n, i)
        } else {
            vec![field.zero(); n]
        }
    })
    .expect("diagonal algebras are associative")
}

pub(super) fn matrix_units(n: usize, field: Field) -> Algebra {
    assert!(n >= 1, "M_n needs n >= 1");
    let d = n * n;
    let mut unit = vec![field.zero(); d];
    for i in 0..n {
        unit[i * n + i] = field.one();
    }
    // e_{ij} e_{lm} = δ_{jl} e_{im}
    Algebra::from_table(field, d, unit, |a, b| {
        let (i, j) = (a / n, a % n);
        let (l, m) = (b / n, b % n);
        if j == l {
            unit_vector(field, d, i * n + m)
        } else {
            vec![field.zero(); d]
        }
    })
    .expect("matrix algebras are associative")
}

pub(super) fn upper(n: usize, field: Field) -> Algebra {
    assert!(n >= 1, "upper triangular algebra needs n >= 1");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let d = pairs.len();
    let index = |i: usize, j: usize| pairs.iter().position(|&p| p == (i, j));
    let mut unit = vec![field.zero(); d];
    for i in 0..n {
        unit[index(i, i).unwrap()] = field.one();
    }
    Algebra::from_table(field, d, unit, |a, b| {
        let ((i, j), (l, m)) = (pairs[a], pairs[b]);
        if j == l {
            unit_vector(field, d, index(i, m).unwrap())
        } else {
            vec![field.zero(); d]
        }
    })
    .expect("upper triangular algebras are associative")
}

/// Resolves `kn:<n>`, `mat:<n>` and `upper:<n>`.
pub fn from_name(name: &str, field: Field) -> Result<Algebra> {
    let (kind, n) = name
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("unknown algebra `{name}`; expected kn:N, mat:N or upper:N")))?;
    let n: usize = n
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad size in algebra name `{name}`")))?;
    if n == 0 {
        return Err(Error::Parse(format!("algebra size must be positive in `{name}`")));
    }
    match kind.trim() {
        "kn" => Ok(diagonal(n, field)),
        "mat" => Ok(matrix_units(n, field)),
        "upper" => Ok(upper(n, field)),
        _ => Err(Error::Parse(format!("unknown algebra family `{kind}`"))),
    }
}
