//! Naive enumeration oracle over small prime fields.
//!
//! Everything here works by brute force: enumerate every vector, apply
//! maps by accumulating scaled columns, collect sets of points.  None of
//! it touches the row reduction machinery, so the oracle and the
//! structured procedures can be checked against each other.

use std::collections::BTreeSet;

use crate::error::Error;
use crate::field::{FieldElement, FieldSpec};
use crate::map::LinearMap;
use crate::matrix::{Matrix, Vector};

/// Cap on how many points an enumeration may visit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationBudget {
    pub max_points: u64,
}

impl EnumerationBudget {
    pub const DEFAULT_MAX_POINTS: u64 = 1_000_000;

    pub fn new(max_points: u64) -> EnumerationBudget {
        EnumerationBudget { max_points }
    }
}

impl Default for EnumerationBudget {
    fn default() -> EnumerationBudget {
        EnumerationBudget::new(EnumerationBudget::DEFAULT_MAX_POINTS)
    }
}

/// Streams all p^n vectors of F^n in lexicographic order (first
/// coordinate most significant).
pub fn enumerate_vectors(
    spec: FieldSpec,
    n: usize,
    budget: &EnumerationBudget,
) -> Result<VectorEnumeration, Error> {
    let Some(p) = spec.modulus() else {
        return Err(Error::PrimeFieldRequired);
    };
    let needed = (p as u128)
        .checked_pow(n as u32)
        .unwrap_or(u128::MAX);
    if needed > budget.max_points as u128 {
        return Err(Error::BudgetExceeded {
            needed,
            budget: budget.max_points,
        });
    }
    Ok(VectorEnumeration {
        spec,
        p,
        digits: vec![0; n],
        done: false,
    })
}

/// Iterator over F^n produced by [`enumerate_vectors`].
pub struct VectorEnumeration {
    spec: FieldSpec,
    p: u64,
    digits: Vec<u64>,
    done: bool,
}

impl Iterator for VectorEnumeration {
    type Item = Vector;

    fn next(&mut self) -> Option<Vector> {
        if self.done {
            return None;
        }
        let entries = self
            .digits
            .iter()
            .map(|&d| FieldElement::from_residue(self.spec, d).expect("prime field enumeration"))
            .collect();
        let out = Vector::new(self.spec, entries).expect("residues share the field");
        // Odometer increment, least significant digit last.
        let mut i = self.digits.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.digits[i] += 1;
            if self.digits[i] < self.p {
                break;
            }
            self.digits[i] = 0;
        }
        Some(out)
    }
}

/// Applies a column matrix to a vector by accumulating scaled columns.
fn naive_apply(columns: &Matrix, x: &Vector) -> Vector {
    let mut acc = Vector::zero(columns.spec(), columns.rows());
    for j in 0..columns.cols() {
        let scaled = columns.column(j).scale(&x[j]).expect("uniform field");
        acc = acc.add(&scaled).expect("uniform length");
    }
    acc
}

/// Decides injectivity by checking all p^n inputs for a collision.
pub fn oracle_injective(f: &LinearMap, budget: &EnumerationBudget) -> Result<bool, Error> {
    let mut seen = BTreeSet::new();
    for x in enumerate_vectors(f.spec(), f.domain_dim(), budget)? {
        if !seen.insert(naive_apply(f.columns(), &x)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Collects the full image of `f` by applying it to every input.
pub fn oracle_image(f: &LinearMap, budget: &EnumerationBudget) -> Result<BTreeSet<Vector>, Error> {
    let mut image = BTreeSet::new();
    for x in enumerate_vectors(f.spec(), f.domain_dim(), budget)? {
        image.insert(naive_apply(f.columns(), &x));
    }
    Ok(image)
}

/// Collects the span of `vectors` in F^`ambient_dim` by enumerating every
/// coefficient tuple.
pub fn oracle_span(
    spec: FieldSpec,
    ambient_dim: usize,
    vectors: &[Vector],
    budget: &EnumerationBudget,
) -> Result<BTreeSet<Vector>, Error> {
    let columns = Matrix::from_columns(spec, ambient_dim, vectors)?;
    let mut span = BTreeSet::new();
    for coeffs in enumerate_vectors(spec, vectors.len(), budget)? {
        span.insert(naive_apply(&columns, &coeffs));
    }
    Ok(span)
}

/// The dimension of a span, read off from its cardinality p^d.
pub fn oracle_dimension(
    spec: FieldSpec,
    ambient_dim: usize,
    vectors: &[Vector],
    budget: &EnumerationBudget,
) -> Result<usize, Error> {
    let p = spec.modulus().ok_or(Error::PrimeFieldRequired)? as u128;
    let count = oracle_span(spec, ambient_dim, vectors, budget)?.len() as u128;
    let mut dim = 0;
    let mut acc: u128 = 1;
    while acc < count {
        acc *= p;
        dim += 1;
    }
    assert_eq!(acc, count, "span cardinality must be a power of p");
    Ok(dim)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    fn vec_of(spec: FieldSpec, entries: &[i64]) -> Vector {
        Vector::from_ints(spec, entries)
    }

    #[test]
    fn enumeration_is_lexicographic_and_complete() {
        let budget = EnumerationBudget::default();
        let all: Vec<Vector> = enumerate_vectors(gf(2), 2, &budget).unwrap().collect();
        assert_eq!(
            all,
            vec![
                vec_of(gf(2), &[0, 0]),
                vec_of(gf(2), &[0, 1]),
                vec_of(gf(2), &[1, 0]),
                vec_of(gf(2), &[1, 1]),
            ]
        );
        let gf3_line: Vec<Vector> = enumerate_vectors(gf(3), 1, &budget).unwrap().collect();
        assert_eq!(
            gf3_line,
            vec![vec_of(gf(3), &[0]), vec_of(gf(3), &[1]), vec_of(gf(3), &[2])]
        );
        assert_eq!(enumerate_vectors(gf(3), 2, &budget).unwrap().count(), 9);
        assert_eq!(enumerate_vectors(gf(5), 0, &budget).unwrap().count(), 1);
    }

    #[test]
    fn enumeration_respects_the_budget() {
        let tight = EnumerationBudget::new(4);
        assert!(enumerate_vectors(gf(2), 2, &tight).is_ok());
        assert_eq!(
            enumerate_vectors(gf(2), 3, &tight).err(),
            Some(Error::BudgetExceeded {
                needed: 8,
                budget: 4
            })
        );
        assert!(matches!(
            enumerate_vectors(gf(2), 200, &EnumerationBudget::default()).err(),
            Some(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn enumeration_needs_a_prime_field() {
        let budget = EnumerationBudget::default();
        assert_eq!(
            enumerate_vectors(FieldSpec::rationals(), 1, &budget).err(),
            Some(Error::PrimeFieldRequired)
        );
    }

    #[test]
    fn oracle_injectivity_matches_known_maps() {
        let budget = EnumerationBudget::default();
        let id = LinearMap::identity(gf(3), 2);
        assert!(oracle_injective(&id, &budget).unwrap());
        let collapse = LinearMap::from_matrix(Matrix::from_int_rows(gf(2), &[&[1, 1]]));
        assert!(!oracle_injective(&collapse, &budget).unwrap());
        let pad = LinearMap::from_matrix(Matrix::from_int_rows(gf(2), &[&[1, 0], &[0, 1], &[0, 0]]));
        assert!(oracle_injective(&pad, &budget).unwrap());
    }

    #[test]
    fn oracle_image_collects_every_output() {
        let budget = EnumerationBudget::default();
        let collapse = LinearMap::from_matrix(Matrix::from_int_rows(gf(2), &[&[1, 1]]));
        let image = oracle_image(&collapse, &budget).unwrap();
        assert_eq!(image.len(), 2, "the whole line F^1");

        let pad = LinearMap::from_matrix(Matrix::from_int_rows(gf(2), &[&[1], &[0]]));
        let image = oracle_image(&pad, &budget).unwrap();
        assert_eq!(
            image.into_iter().collect::<Vec<_>>(),
            vec![vec_of(gf(2), &[0, 0]), vec_of(gf(2), &[1, 0])]
        );
    }

    #[test]
    fn oracle_span_counts_match_dimension() {
        let budget = EnumerationBudget::default();
        let gens = [
            vec_of(gf(2), &[1, 1, 0]),
            vec_of(gf(2), &[0, 1, 1]),
            vec_of(gf(2), &[1, 0, 1]),
        ];
        let span = oracle_span(gf(2), 3, &gens, &budget).unwrap();
        assert_eq!(span.len(), 4);
        assert_eq!(oracle_dimension(gf(2), 3, &gens, &budget).unwrap(), 2);
        assert_eq!(oracle_dimension(gf(2), 3, &[], &budget).unwrap(), 0);
        assert_eq!(oracle_dimension(gf(3), 2, &[vec_of(gf(3), &[1, 2])], &budget).unwrap(), 1);
    }
}
