//! Text formats: the matrix file grammar, vector literals, and the
//! renderers for procedure transcripts.
//!
//! A matrix file looks like:
//!
//! ```text
//! # any number of comment or blank lines
//! field GF(7)
//! matrix 2 3
//! 1 0 2
//! 3 1 6
//! ```
//!
//! The header names the field (`GF(p)` with p prime, or `Q`), the shape
//! line gives rows and columns, and each data line holds one row of
//! whitespace-separated scalars.  Blank lines and lines starting with `#`
//! are ignored.  When the matrix has zero columns or zero rows there are
//! no data lines.  [`format_matrix`] emits exactly this shape, so parsing
//! and formatting round-trip byte for byte.

use crate::classify::SetClassification;
use crate::dimension::{BasisExtraction, InjectiveSequence, RankNullity};
use crate::error::Error;
use crate::field::{FieldElement, FieldSpec};
use crate::matrix::{Matrix, Vector};

/// Parses a field token: `GF(p)` or `Q`.
pub fn parse_field(token: &str) -> Result<FieldSpec, Error> {
    if token == "Q" {
        return Ok(FieldSpec::rationals());
    }
    if let Some(inner) = token.strip_prefix("GF(").and_then(|s| s.strip_suffix(')')) {
        if !inner.is_empty() && inner.bytes().all(|b| b.is_ascii_digit()) {
            let p: u64 = inner
                .parse()
                .map_err(|_| Error::Parse(format!("modulus out of range in `{token}`")))?;
            return FieldSpec::prime(p).map_err(|e| Error::Parse(e.to_string()));
        }
    }
    Err(Error::Parse(format!("unknown field `{token}`")))
}

/// Parses a full matrix file.
pub fn parse_matrix(text: &str) -> Result<Matrix, Error> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));

    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("missing `field` header".into()))?;
    let spec = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["field", token] => parse_field(token)?,
        _ => return Err(Error::Parse(format!("expected `field <name>`, got `{header}`"))),
    };

    let shape = lines
        .next()
        .ok_or_else(|| Error::Parse("missing `matrix` shape line".into()))?;
    let (rows, cols) = match shape.split_whitespace().collect::<Vec<_>>()[..] {
        ["matrix", r, c] => {
            let rows: usize = r
                .parse()
                .map_err(|_| Error::Parse(format!("invalid row count `{r}`")))?;
            let cols: usize = c
                .parse()
                .map_err(|_| Error::Parse(format!("invalid column count `{c}`")))?;
            (rows, cols)
        }
        _ => {
            return Err(Error::Parse(format!(
                "expected `matrix <rows> <cols>`, got `{shape}`"
            )))
        }
    };

    let mut entries = Vec::with_capacity(rows * cols);
    if cols > 0 {
        for row in 0..rows {
            let line = lines.next().ok_or_else(|| {
                Error::Parse(format!("expected {rows} data rows, found {row}"))
            })?;
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.len() != cols {
                return Err(Error::Parse(format!(
                    "row {} has {} entries, expected {cols}",
                    row + 1,
                    tokens.len()
                )));
            }
            for t in tokens {
                entries.push(FieldElement::parse(spec, t)?);
            }
        }
    }
    if let Some(extra) = lines.next() {
        return Err(Error::Parse(format!("unexpected trailing content `{extra}`")));
    }
    Matrix::new(spec, rows, cols, entries)
}

/// Formats a matrix in the canonical file shape.
pub fn format_matrix(m: &Matrix) -> String {
    let mut out = format!("field {}\nmatrix {} {}\n", m.spec(), m.rows(), m.cols());
    if m.cols() > 0 {
        for r in 0..m.rows() {
            out.push_str(&m.row(r).to_string());
            out.push('\n');
        }
    }
    out
}

/// Parses a comma-separated vector literal such as `1, 0, -2/3`.  An
/// empty (or all-blank) literal is the vector of length zero.
pub fn parse_vector(spec: FieldSpec, text: &str) -> Result<Vector, Error> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Vector::new(spec, Vec::new());
    }
    let entries = trimmed
        .split(',')
        .map(|t| FieldElement::parse(spec, t.trim()))
        .collect::<Result<Vec<_>, _>>()?;
    Vector::new(spec, entries)
}

/// Formats a vector as a comma-separated literal accepted by
/// [`parse_vector`].
pub fn format_vector_literal(v: &Vector) -> String {
    v.entries()
        .iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// One line per stage (`step K row I vector …`) followed by `dim N`.
pub fn render_sequence(seq: &InjectiveSequence) -> String {
    let mut out = String::new();
    for s in seq.steps() {
        out.push_str(&format!("step {} row {} vector {}\n", s.step, s.basis_row, s.vector));
    }
    out.push_str(&format!("dim {}\n", seq.dim()));
    out
}

/// One line per stage (`step K kernel … drop I`) followed by the kept
/// original indices.
pub fn render_extraction(x: &BasisExtraction) -> String {
    let mut out = String::new();
    for s in &x.steps {
        out.push_str(&format!(
            "step {} kernel {} drop {}\n",
            s.step, s.kernel_vector, s.dropped
        ));
    }
    out.push_str("kept");
    for i in &x.kept {
        out.push_str(&format!(" {i}"));
    }
    out.push('\n');
    out
}

/// Three lines, one per property.
pub fn render_classification(c: &SetClassification) -> String {
    format!(
        "injective {}\nsurjective {}\nbasis {}\n",
        c.injective, c.surjective, c.basis
    )
}

/// The three related dimensions on one line.
pub fn render_rank_nullity(rn: &RankNullity) -> String {
    format!(
        "kernel {} image {} domain {}\n",
        rn.kernel_dim, rn.image_dim, rn.domain_dim
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    #[test]
    fn parse_reads_the_documented_shape() {
        let text = "# demo\nfield GF(2)\nmatrix 2 3\n1 0 1\n0 1 1\n";
        let m = parse_matrix(text).unwrap();
        assert_eq!(m, Matrix::from_int_rows(gf(2), &[&[1, 0, 1], &[0, 1, 1]]));
    }

    #[test]
    fn parse_skips_blank_lines_and_comments_anywhere() {
        let text = "\n  # leading comment\nfield Q\n\n# shape\nmatrix 2 2\n\n1/2 0\n# row two\n-1 2/3\n\n";
        let m = parse_matrix(text).unwrap();
        assert_eq!(m.at(0, 0).to_string(), "1/2");
        assert_eq!(m.at(1, 1).to_string(), "2/3");
    }

    #[test]
    fn format_and_parse_round_trip() {
        let samples = [
            Matrix::from_int_rows(gf(2), &[&[1, 0, 1], &[0, 1, 1]]),
            Matrix::from_int_rows(q(), &[&[1, -2], &[7, 9]]),
            Matrix::zeros(gf(7), 0, 3),
            Matrix::zeros(q(), 3, 0),
            Matrix::zeros(gf(5), 0, 0),
            Matrix::identity(gf(3), 3),
        ];
        for m in samples {
            let text = format_matrix(&m);
            assert_eq!(parse_matrix(&text).unwrap(), m, "{text}");
        }
        // Fractions print reduced and re-read identically.
        let frac = parse_matrix("field Q\nmatrix 1 2\n2/-4 6/4\n").unwrap();
        assert_eq!(format_matrix(&frac), "field Q\nmatrix 1 2\n-1/2 3/2\n");
    }

    #[test]
    fn zero_column_and_zero_row_files_have_no_data_lines() {
        assert_eq!(format_matrix(&Matrix::zeros(gf(2), 3, 0)), "field GF(2)\nmatrix 3 0\n");
        assert_eq!(format_matrix(&Matrix::zeros(gf(2), 0, 3)), "field GF(2)\nmatrix 0 3\n");
        assert_eq!(parse_matrix("field GF(2)\nmatrix 3 0\n").unwrap(), Matrix::zeros(gf(2), 3, 0));
    }

    #[test]
    fn parse_rejects_malformed_files() {
        let bad = [
            "",
            "matrix 1 1\n1\n",
            "field GF(4)\nmatrix 1 1\n1\n",
            "field GF(x)\nmatrix 1 1\n1\n",
            "field Z\nmatrix 1 1\n1\n",
            "field Q\nmatrix one 1\n1\n",
            "field Q\nmatrix 2 2\n1 2\n",
            "field Q\nmatrix 1 2\n1\n",
            "field Q\nmatrix 1 2\n1 2 3\n",
            "field Q\nmatrix 1 1\n1\nextra\n",
            "field GF(5)\nmatrix 1 1\n1/2\n",
            "field GF(5) extra\nmatrix 1 1\n1\n",
        ];
        for text in bad {
            let got = parse_matrix(text);
            assert!(matches!(got, Err(Error::Parse(_))), "{text:?} -> {got:?}");
        }
    }

    #[test]
    fn composite_modulus_reads_as_a_parse_error() {
        let err = parse_field("GF(6)").unwrap_err();
        assert!(err.is_parse());
        assert_eq!(err.to_string(), "parse error: modulus 6 is not prime");
    }

    #[test]
    fn vector_literals_round_trip() {
        let v = parse_vector(q(), "1, 0, -2/3").unwrap();
        assert_eq!(v, Vector::new(q(), vec![
            FieldElement::from_integer(q(), 1),
            FieldElement::from_integer(q(), 0),
            FieldElement::from_ratio(q(), -2, 3).unwrap(),
        ]).unwrap());
        assert_eq!(format_vector_literal(&v), "1,0,-2/3");
        assert_eq!(parse_vector(q(), &format_vector_literal(&v)).unwrap(), v);

        assert_eq!(parse_vector(gf(3), "4,5").unwrap(), Vector::from_ints(gf(3), &[1, 2]));
        assert_eq!(parse_vector(q(), "  ").unwrap(), Vector::zero(q(), 0));
        assert!(parse_vector(q(), "1,,2").is_err());
        assert!(parse_vector(gf(2), "1 0").is_err());
    }

    #[test]
    fn renderers_print_fixed_shapes() {
        let c = SetClassification {
            injective: true,
            surjective: false,
            basis: false,
        };
        assert_eq!(
            render_classification(&c),
            "injective true\nsurjective false\nbasis false\n"
        );
        let rn = RankNullity {
            kernel_dim: 1,
            image_dim: 1,
            domain_dim: 2,
        };
        assert_eq!(render_rank_nullity(&rn), "kernel 1 image 1 domain 2\n");
    }
}
