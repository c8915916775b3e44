//! Text grammars for scalars, multivectors, points, vector lists, matrices,
//! flats, and Gram forms. Every printed value parses back to itself.

use crate::error::{Error, Result};
use crate::exterior::{Matrix, Multivector, Vector};
use crate::field::{parse_scalar, FieldElement, FieldSpec};
use crate::metric::{gram_validate, standard_form, GramForm};
use crate::projective::ProjFlat;

fn err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn strip_ws(text: &str) -> String {
    text.chars().filter(|c| !c.is_whitespace()).collect()
}

/// A multivector expression before its ambient dimension is fixed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermList {
    pub dual: bool,
    pub terms: Vec<(FieldElement, Vec<usize>)>,
}

impl TermList {
    /// Largest index mentioned, or 0.
    pub fn max_index(&self) -> usize {
        self.terms.iter().flat_map(|(_, ix)| ix.iter().copied()).max().unwrap_or(0)
    }

    pub fn build(&self, field: FieldSpec, dim: usize) -> Result<Multivector> {
        let mut out = Multivector::zero(field, dim)?.with_dual(self.dual);
        for (c, ix) in &self.terms {
            let b = Multivector::basis(field, dim, ix)?.with_dual(self.dual);
            out = out.checked_add(&b.scale(c))?;
        }
        Ok(out)
    }
}

/// Parses `c*e{i,j,..} ± c*e{..} ± …` (or `E{..}` throughout), or `0`.
/// A missing coefficient reads as 1; indices may come in any order.
pub fn parse_terms(text: &str, field: FieldSpec) -> Result<TermList> {
    let s = strip_ws(text);
    if s == "0" {
        return Ok(TermList { dual: false, terms: Vec::new() });
    }
    let bytes = s.as_bytes();
    let mut pos = 0;
    let mut dual = None;
    let mut terms = Vec::new();
    while pos < bytes.len() {
        let start = pos;
        if bytes[pos] == b'+' || bytes[pos] == b'-' {
            pos += 1;
        } else if !terms.is_empty() {
            return Err(err(format!("expected `+` or `-` at offset {pos} in `{s}`")));
        }
        let sign_end = pos;
        while pos < bytes.len() && (bytes[pos].is_ascii_digit() || bytes[pos] == b'/') {
            pos += 1;
        }
        let coeff = if pos == sign_end {
            if bytes.get(start) == Some(&b'-') {
                -field.one()
            } else {
                field.one()
            }
        } else {
            let literal = &s[sign_end..pos];
            let c = parse_scalar(literal, field)?;
            let c = if bytes[start] == b'-' { -c } else { c };
            if bytes.get(pos) != Some(&b'*') {
                return Err(err(format!("expected `*` after `{literal}` in `{s}`")));
            }
            pos += 1;
            c
        };
        let letter_dual = match bytes.get(pos) {
            Some(b'e') => false,
            Some(b'E') => true,
            _ => return Err(err(format!("expected `e{{` or `E{{` at offset {pos} in `{s}`"))),
        };
        if *dual.get_or_insert(letter_dual) != letter_dual {
            return Err(err("cannot mix `e` and `E` terms"));
        }
        pos += 1;
        if bytes.get(pos) != Some(&b'{') {
            return Err(err(format!("expected `{{` at offset {pos} in `{s}`")));
        }
        let close = s[pos..].find('}').ok_or_else(|| err(format!("unclosed `{{` in `{s}`")))? + pos;
        let inner = &s[pos + 1..close];
        let indices = if inner.is_empty() {
            Vec::new()
        } else {
            inner
                .split(',')
                .map(|t| t.parse::<usize>().map_err(|_| err(format!("bad index `{t}`"))))
                .collect::<Result<Vec<_>>>()?
        };
        if indices.contains(&0) {
            return Err(err("indices start at 1"));
        }
        terms.push((coeff, indices));
        pos = close + 1;
    }
    if terms.is_empty() {
        return Err(err("empty multivector expression"));
    }
    Ok(TermList { dual: dual.unwrap_or(false), terms })
}

pub fn parse_multivector(text: &str, field: FieldSpec, dim: usize) -> Result<Multivector> {
    parse_terms(text, field)?.build(field, dim)
}

fn split_top_level(inner: &str) -> Result<Vec<&str>> {
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, ch) in inner.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => {
                depth -= 1;
                if depth < 0 {
                    return Err(err("unbalanced `]`"));
                }
            }
            ',' if depth == 0 => {
                parts.push(&inner[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(err("unbalanced `[`"));
    }
    parts.push(&inner[start..]);
    Ok(parts)
}

fn bracketed(s: &str) -> Result<&str> {
    s.strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| err(format!("expected `[...]`, found `{s}`")))
}

/// `[a,b,...]`.
pub fn parse_vector(text: &str, field: FieldSpec) -> Result<Vector> {
    let s = strip_ws(text);
    let inner = bracketed(&s)?;
    if inner.is_empty() {
        return Err(Error::EmptyInput);
    }
    let coords = inner.split(',').map(|t| parse_scalar(t, field)).collect::<Result<Vec<_>>>()?;
    Vector::new(coords)
}

fn parse_vector_list(inner: &str, field: FieldSpec) -> Result<Vec<Vector>> {
    if inner.is_empty() {
        return Err(Error::EmptyInput);
    }
    let vs = split_top_level(inner)?
        .into_iter()
        .map(|t| parse_vector(t, field))
        .collect::<Result<Vec<_>>>()?;
    if vs.iter().any(|v| v.dim() != vs[0].dim()) {
        return Err(Error::DimMismatch { expected: vs[0].dim(), found: vs.iter().map(Vector::dim).find(|&d| d != vs[0].dim()).unwrap() });
    }
    Ok(vs)
}

/// `span{[..],[..],...}`.
pub fn parse_span(text: &str, field: FieldSpec) -> Result<Vec<Vector>> {
    let s = strip_ws(text);
    let inner = s
        .strip_prefix("span{")
        .and_then(|r| r.strip_suffix('}'))
        .ok_or_else(|| err(format!("expected `span{{...}}`, found `{s}`")))?;
    parse_vector_list(inner, field)
}

/// `[[..],[..],...]`, row by row.
pub fn parse_matrix(text: &str, field: FieldSpec) -> Result<Matrix> {
    let s = strip_ws(text);
    let rows = parse_vector_list(bracketed(&s)?, field)?;
    Matrix::from_rows(rows.into_iter().map(Vector::into_coords).collect())
}

/// A flat given as either a blade expression or a `span{...}` list.
pub fn parse_flat(text: &str, field: FieldSpec, dim: Option<usize>) -> Result<ProjFlat> {
    if strip_ws(text).starts_with("span{") {
        let vs = parse_span(text, field)?;
        if let Some(d) = dim {
            if vs[0].dim() != d {
                return Err(Error::DimMismatch { expected: d, found: vs[0].dim() });
            }
        }
        return ProjFlat::from_span(&vs);
    }
    let terms = parse_terms(text, field)?;
    let d = dim.unwrap_or(terms.max_index());
    ProjFlat::new(terms.build(field, d)?)
}

/// `diag:+1,-1,...` or `matrix:[[..],[..]]`.
pub fn parse_gram(text: &str, field: FieldSpec) -> Result<GramForm> {
    let s = strip_ws(text);
    if let Some(rest) = s.strip_prefix("diag:") {
        let signs = rest
            .split(',')
            .map(|t| match t {
                "+1" | "1" => Ok(1),
                "-1" => Ok(-1),
                _ => Err(Error::BadSign),
            })
            .collect::<Result<Vec<i64>>>()?;
        standard_form(field, &signs)
    } else if let Some(rest) = s.strip_prefix("matrix:") {
        gram_validate(parse_matrix(rest, field)?)
    } else {
        Err(err(format!("expected `diag:...` or `matrix:...`, found `{s}`")))
    }
}
