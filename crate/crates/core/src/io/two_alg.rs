use serde::{Deserialize, Serialize};

use crate::algebra::{AntilinearMap, StructureTensor, TwoAlgebra};
use crate::error::{Error, Result};
use crate::scalars::rational::{format_rational, parse_rational};
use crate::scalars::Rational;
use crate::semigroup::{is_inverse, FiniteMonoid, InverseSemigroup};

type Entry = (usize, usize, usize, String);

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixRepr {
    matrix: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TwoAlgRepr {
    dim: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    labels: Option<Vec<String>>,
    mult: Vec<Entry>,
    unit: Vec<String>,
    comult: Vec<Entry>,
    counit: Vec<String>,
    invol: MatrixRepr,
    coinvol: MatrixRepr,
    #[serde(skip_serializing_if = "std::ops::Not::not", default)]
    weakened: bool,
}

fn field_err(field: &str, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("field `{field}`: {msg}"))
}

fn scalar(field: &str, s: &str) -> Result<Rational> {
    parse_rational(s).map_err(|e| field_err(field, e))
}

fn vector(field: &str, v: &[String], dim: usize) -> Result<Vec<Rational>> {
    if v.len() != dim {
        return Err(field_err(field, format!("expected {dim} entries, found {}", v.len())));
    }
    v.iter().enumerate().map(|(i, s)| scalar(&format!("{field}[{i}]"), s)).collect()
}

fn tensor(field: &str, entries: &[Entry], dim: usize) -> Result<StructureTensor> {
    let parsed = entries
        .iter()
        .enumerate()
        .map(|(n, (i, j, k, s))| Ok((*i, *j, *k, scalar(&format!("{field}[{n}]"), s)?)))
        .collect::<Result<Vec<_>>>()?;
    StructureTensor::from_entries(dim, parsed).map_err(|e| field_err(field, e))
}

fn matrix(field: &str, m: &MatrixRepr, dim: usize) -> Result<AntilinearMap> {
    if m.matrix.len() != dim {
        return Err(field_err(field, format!("expected {dim} rows, found {}", m.matrix.len())));
    }
    let rows = m
        .matrix
        .iter()
        .enumerate()
        .map(|(r, row)| vector(&format!("{field}.matrix[{r}]"), row, dim))
        .collect::<Result<Vec<_>>>()?;
    AntilinearMap::new(rows).map_err(|e| field_err(field, e))
}

/// Parses the JSON encoding. Unknown keys, malformed rationals and shape
/// mismatches are errors naming the offending field or position.
pub fn parse_2alg(text: &str) -> Result<TwoAlgebra> {
    let r: TwoAlgRepr = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("line {} column {}: {e}", e.line(), e.column())))?;
    let n = r.dim;
    if let Some(l) = &r.labels {
        if l.len() != n {
            return Err(field_err("labels", format!("expected {n} labels, found {}", l.len())));
        }
    }
    let mut a = TwoAlgebra::new(
        n,
        tensor("mult", &r.mult, n)?,
        vector("unit", &r.unit, n)?,
        tensor("comult", &r.comult, n)?,
        vector("counit", &r.counit, n)?,
        matrix("invol", &r.invol, n)?,
        matrix("coinvol", &r.coinvol, n)?,
    )?;
    a.labels = r.labels;
    a.weakened = r.weakened;
    Ok(a)
}

fn emit_entries(t: &StructureTensor) -> Vec<Entry> {
    t.entries().iter().map(|(i, j, k, v)| (*i, *j, *k, format_rational(v))).collect()
}

fn emit_vec(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn emit_matrix(m: &AntilinearMap) -> MatrixRepr {
    MatrixRepr { matrix: m.matrix.iter().map(|r| emit_vec(r)).collect() }
}

fn compact<T: Serialize>(t: &T) -> String {
    serde_json::to_string(t).expect("2-algebra encoding is plain JSON")
}

fn rows<T: Serialize>(items: &[T], indent: &str) -> String {
    if items.is_empty() {
        return "[]".into();
    }
    let body: Vec<String> = items.iter().map(|x| format!("{indent}  {}", compact(x))).collect();
    format!("[\n{}\n{indent}]", body.join(",\n"))
}

/// Canonical text: keys in fixed order, one tensor entry or matrix row per
/// line, tensor entries sorted by index.
pub fn emit_2alg(a: &TwoAlgebra) -> String {
    let matrix = |m: &AntilinearMap| {
        let r = emit_matrix(m);
        format!("{{\n    \"matrix\": {}\n  }}", rows(&r.matrix, "    "))
    };
    let mut fields = vec![format!("\"dim\": {}", a.dim)];
    if let Some(l) = &a.labels {
        fields.push(format!("\"labels\": {}", compact(l)));
    }
    fields.push(format!("\"mult\": {}", rows(&emit_entries(&a.mult), "  ")));
    fields.push(format!("\"unit\": {}", compact(&emit_vec(&a.unit))));
    fields.push(format!("\"comult\": {}", rows(&emit_entries(&a.comult), "  ")));
    fields.push(format!("\"counit\": {}", compact(&emit_vec(&a.counit))));
    fields.push(format!("\"invol\": {}", matrix(&a.invol)));
    fields.push(format!("\"coinvol\": {}", matrix(&a.coinvol)));
    if a.weakened {
        fields.push("\"weakened\": true".into());
    }
    format!("{{\n  {}\n}}\n", fields.join(",\n  "))
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SemigroupRepr {
    size: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    unit: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    zero: Option<usize>,
    table: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    inv: Option<Vec<usize>>,
    labels: Vec<String>,
}

/// Parses a semigroup table. The unit, zero and inverse map are recomputed
/// and must agree with any values present in the file.
pub fn parse_semigroup(text: &str) -> Result<InverseSemigroup> {
    let r: SemigroupRepr = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("line {} column {}: {e}", e.line(), e.column())))?;
    if r.table.len() != r.size {
        return Err(field_err("table", format!("expected {} rows, found {}", r.size, r.table.len())));
    }
    let m = FiniteMonoid::new(r.table, r.labels)?;
    if r.unit.is_some() && r.unit != m.unit {
        return Err(field_err("unit", "not a two-sided identity"));
    }
    if r.zero.is_some() && r.zero != m.zero {
        return Err(field_err("zero", "not a two-sided zero"));
    }
    let (verdict, inv) = is_inverse(&m);
    let inv = inv.ok_or_else(|| Error::NotInverse(verdict.notes.clone()))?;
    if let Some(given) = r.inv {
        if given != inv {
            return Err(field_err("inv", "does not match the unique generalized inverses"));
        }
    }
    Ok(InverseSemigroup { base: m, inv })
}

pub fn emit_semigroup(s: &InverseSemigroup) -> String {
    let r = SemigroupRepr {
        size: s.base.size,
        unit: s.base.unit,
        zero: s.base.zero,
        table: s.base.table.clone(),
        inv: Some(s.inv.clone()),
        labels: s.base.labels.clone(),
    };
    let mut out = serde_json::to_string_pretty(&r).expect("semigroup encoding is plain JSON");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dilation::a_lambda;
    use crate::scalars::rational::rat;
    use crate::semigroup::matrix_unit_semigroup;

    #[test]
    fn a_lambda_round_trip() {
        let a = a_lambda(&rat(1, 2)).unwrap();
        let text = emit_2alg(&a);
        let b = parse_2alg(&text).unwrap();
        assert_eq!(a, b);
        assert_eq!(b.labels, a.labels);
        assert_eq!(emit_2alg(&b), text);
        let dim = text.find("\"dim\"").unwrap();
        let mult = text.find("\"mult\"").unwrap();
        let coinvol = text.find("\"coinvol\"").unwrap();
        assert!(dim < mult && mult < coinvol);
    }

    #[test]
    fn zero_denominator_names_field() {
        let text = emit_2alg(&a_lambda(&rat(1, 2)).unwrap()).replacen("\"1/2\"", "\"1/0\"", 1);
        let err = parse_2alg(&text).unwrap_err().to_string();
        assert!(err.contains("field `mult[") || err.contains("field `comult["), "{err}");
        assert!(err.contains("zero denominator"), "{err}");
    }

    #[test]
    fn unknown_key_rejected() {
        let text = emit_2alg(&a_lambda(&rat(1, 2)).unwrap()).replacen("{", "{\n  \"extra\": 1,", 1);
        let err = parse_2alg(&text).unwrap_err().to_string();
        assert!(err.contains("unknown field `extra`"), "{err}");
        assert!(err.contains("line 2"), "{err}");
    }

    #[test]
    fn semigroup_round_trip() {
        let s = matrix_unit_semigroup(2).unwrap();
        let t = parse_semigroup(&emit_semigroup(&s)).unwrap();
        assert_eq!(s.base, t.base);
        assert_eq!(s.inv, t.inv);
    }
}
