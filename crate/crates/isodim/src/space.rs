//! Subspaces of F^m in canonical form, and quotients V/U with canonical
//! coset representatives.
//!
//! A subspace is stored as the reduced row echelon basis of whatever
//! spanned it, so equal subspaces are structurally equal values.  The
//! canonical representative of a coset v + U is the unique member of the
//! coset whose coordinates at U's pivot columns are all zero; quotient
//! dimensions and the explicit quotient presentation both fall out of the
//! pivot bookkeeping.

use crate::error::Error;
use crate::field::FieldSpec;
use crate::map::LinearMap;
use crate::matrix::{Matrix, RrefResult, Vector};

/// A subspace of F^m together with its canonical echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Space {
    spec: FieldSpec,
    ambient_dim: usize,
    basis: Matrix,
    pivot_cols: Vec<usize>,
}

impl Space {
    /// The span of the given vectors inside F^`ambient_dim`.
    pub fn span_of(
        spec: FieldSpec,
        ambient_dim: usize,
        vectors: &[Vector],
    ) -> Result<Space, Error> {
        let rows = Matrix::from_rows(spec, ambient_dim, vectors)?;
        Ok(Space::spanned_by_rows(&rows))
    }

    /// The span of the rows of a matrix inside F^cols.
    pub fn spanned_by_rows(rows: &Matrix) -> Space {
        let RrefResult {
            rref, pivot_cols, ..
        } = rows.rref();
        let rank = pivot_cols.len();
        let kept: Vec<Vector> = (0..rank).map(|r| rref.row(r)).collect();
        let basis = Matrix::from_rows(rref.spec(), rref.cols(), &kept)
            .expect("echelon rows are uniform");
        Space {
            spec: rref.spec(),
            ambient_dim: rref.cols(),
            basis,
            pivot_cols,
        }
    }

    /// The span of the columns of a matrix inside F^rows.
    pub fn spanned_by_columns(cols: &Matrix) -> Space {
        Space::spanned_by_rows(&cols.transpose())
    }

    /// All of F^n.
    pub fn full(spec: FieldSpec, n: usize) -> Space {
        Space {
            spec,
            ambient_dim: n,
            basis: Matrix::identity(spec, n),
            pivot_cols: (0..n).collect(),
        }
    }

    /// The zero subspace of F^n.
    pub fn zero(spec: FieldSpec, n: usize) -> Space {
        Space {
            spec,
            ambient_dim: n,
            basis: Matrix::zeros(spec, 0, n),
            pivot_cols: Vec::new(),
        }
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Number of canonical basis vectors.
    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    /// The canonical basis, one echelon row per basis vector.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_row(&self, i: usize) -> Vector {
        self.basis.row(i)
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        (0..self.dim()).map(|i| self.basis.row(i)).collect()
    }

    pub fn pivot_cols(&self) -> &[usize] {
        &self.pivot_cols
    }

    /// Subtracts basis multiples to zero the pivot coordinates of `v`.
    ///
    /// The result is the canonical representative of the coset v + self:
    /// the unique vector in the coset that vanishes on every pivot column
    /// of this space.  `v` lies in the space exactly when the result is
    /// the zero vector.
    pub fn reduce(&self, v: &Vector) -> Result<Vector, Error> {
        self.spec.require_same(v.spec())?;
        if v.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                actual: v.len(),
            });
        }
        let mut w = v.clone();
        for (i, &pc) in self.pivot_cols.iter().enumerate() {
            if !w[pc].is_zero() {
                let scaled = self.basis.row(i).scale(&w[pc])?;
                w = w.sub(&scaled)?;
            }
        }
        Ok(w)
    }

    pub fn contains(&self, v: &Vector) -> Result<bool, Error> {
        Ok(self.reduce(v)?.is_zero())
    }

    /// True when every vector of `self` lies in `other`.
    pub fn is_subspace_of(&self, other: &Space) -> Result<bool, Error> {
        self.spec.require_same(other.spec)?;
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: other.ambient_dim,
                actual: self.ambient_dim,
            });
        }
        for i in 0..self.dim() {
            if !other.contains(&self.basis_row(i))? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// The quotient V/U of nested subspaces of the same ambient space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientSpace {
    total: Space,
    sub: Space,
}

impl QuotientSpace {
    /// Forms V/U, rejecting pairs where `sub` is not inside `total`.
    pub fn new(total: Space, sub: Space) -> Result<QuotientSpace, Error> {
        if !sub.is_subspace_of(&total)? {
            return Err(Error::NotSubspace);
        }
        Ok(QuotientSpace { total, sub })
    }

    pub fn total(&self) -> &Space {
        &self.total
    }

    pub fn sub(&self) -> &Space {
        &self.sub
    }

    /// dim V − dim U, matching the dimension of the presented quotient.
    pub fn dim(&self) -> usize {
        self.total.dim() - self.sub.dim()
    }

    /// The canonical representative of the coset v + U for v in V.
    pub fn coset_rep(&self, v: &Vector) -> Result<Coset, Error> {
        if !self.total.contains(v)? {
            return Err(Error::NotMember);
        }
        let rep = self.sub.reduce(v)?;
        Ok(Coset {
            quotient: self.clone(),
            rep,
        })
    }

    /// An explicit presentation F^(dim V − dim U) → F^m of the quotient.
    ///
    /// The columns are the canonical basis rows of V whose pivot column is
    /// not a pivot column of U.  Each column already vanishes on U's pivot
    /// columns, so the image of the map consists of canonical coset
    /// representatives, one per coset; the map is injective and two inputs
    /// agree exactly when they present the same coset.
    pub fn iso(&self) -> LinearMap {
        let cols: Vec<Vector> = (0..self.total.dim())
            .filter(|&i| !self.sub.pivot_cols.contains(&self.total.pivot_cols[i]))
            .map(|i| self.total.basis_row(i))
            .collect();
        let columns = Matrix::from_columns(self.total.spec, self.total.ambient_dim, &cols)
            .expect("basis rows are uniform");
        LinearMap::from_matrix_into(columns, self.total.clone())
            .expect("quotient columns lie in the total space")
    }
}

/// A coset v + U inside a fixed quotient, identified by its canonical
/// representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coset {
    quotient: QuotientSpace,
    rep: Vector,
}

impl Coset {
    pub fn quotient(&self) -> &QuotientSpace {
        &self.quotient
    }

    /// The canonical representative: zero at every pivot column of U.
    pub fn rep(&self) -> &Vector {
        &self.rep
    }
}

/// The isomorphism F^n/ker f → im f induced by a map f: F^n → F^m,
/// realized as an explicit map on quotient coordinates.
///
/// The domain quotient F^n/ker f is presented by [`QuotientSpace::iso`];
/// composing that presentation with f gives a map whose declared codomain
/// is im f, and the result is always an isomorphism onto it.
pub fn factor_map(f: &LinearMap) -> LinearMap {
    let spec = f.spec();
    let domain = Space::full(spec, f.domain_dim());
    let quotient = QuotientSpace::new(domain, f.kernel()).expect("kernel sits inside the domain");
    let presentation = quotient.iso();
    let columns = f
        .columns()
        .matmul(presentation.columns())
        .expect("inner dimensions agree");
    LinearMap::from_matrix_into(columns, f.image()).expect("columns lie in the image")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldElement;

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn vec_of(spec: FieldSpec, entries: &[i64]) -> Vector {
        Vector::from_ints(spec, entries)
    }

    /// Every GF(2) combination of `gens`, computed with plain loops.
    fn brute_span(gens: &[Vector], ambient: usize) -> Vec<Vector> {
        let spec = gf(2);
        let mut points = Vec::new();
        for mask in 0..(1u32 << gens.len()) {
            let mut acc = Vector::zero(spec, ambient);
            for (i, g) in gens.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    acc = acc.add(g).unwrap();
                }
            }
            if !points.contains(&acc) {
                points.push(acc);
            }
        }
        points.sort();
        points
    }

    #[test]
    fn span_produces_the_canonical_echelon_basis() {
        let gens = [
            vec_of(gf(2), &[1, 1, 0]),
            vec_of(gf(2), &[0, 1, 1]),
            vec_of(gf(2), &[1, 0, 1]),
        ];
        let s = Space::span_of(gf(2), 3, &gens).unwrap();
        assert_eq!(s.dim(), 2);
        assert_eq!(s.basis(), &Matrix::from_int_rows(gf(2), &[&[1, 0, 1], &[0, 1, 1]]));
        assert_eq!(s.pivot_cols(), &[0, 1]);
        // The canonical basis spans exactly the same point set.
        assert_eq!(brute_span(&gens, 3), brute_span(&s.basis_vectors(), 3));
    }

    #[test]
    fn equal_spans_compare_equal_regardless_of_generators() {
        let a = Space::span_of(gf(2), 2, &[vec_of(gf(2), &[1, 1]), vec_of(gf(2), &[0, 1])]).unwrap();
        assert_eq!(a, Space::full(gf(2), 2));
        let b = Space::span_of(q(), 2, &[vec_of(q(), &[2, 4])]).unwrap();
        let c = Space::span_of(q(), 2, &[vec_of(q(), &[1, 2]), vec_of(q(), &[-3, -6])]).unwrap();
        assert_eq!(b, c);
    }

    #[test]
    fn contains_agrees_with_enumerated_combinations() {
        let s = Space::span_of(gf(2), 2, &[vec_of(gf(2), &[1, 1])]).unwrap();
        let points = brute_span(&s.basis_vectors(), 2);
        for x in 0..2i64 {
            for y in 0..2i64 {
                let v = vec_of(gf(2), &[x, y]);
                assert_eq!(s.contains(&v).unwrap(), points.contains(&v));
            }
        }
        assert!(!s.contains(&vec_of(gf(2), &[1, 0])).unwrap());
    }

    #[test]
    fn zero_and_full_spaces_have_extreme_dimensions() {
        let z = Space::zero(gf(3), 4);
        assert_eq!(z.dim(), 0);
        assert!(z.contains(&Vector::zero(gf(3), 4)).unwrap());
        assert!(!z.contains(&vec_of(gf(3), &[0, 1, 0, 0])).unwrap());
        let f = Space::full(gf(3), 4);
        assert_eq!(f.dim(), 4);
        assert_eq!(f.pivot_cols(), &[0, 1, 2, 3]);
        assert!(z.is_subspace_of(&f).unwrap());
        assert!(!f.is_subspace_of(&z).unwrap());
    }

    #[test]
    fn subspace_relation_requires_actual_containment() {
        let u = Space::span_of(q(), 2, &[vec_of(q(), &[1, 0])]).unwrap();
        let w = Space::span_of(q(), 2, &[vec_of(q(), &[0, 1])]).unwrap();
        assert!(!u.is_subspace_of(&w).unwrap());
        assert!(u.is_subspace_of(&Space::full(q(), 2)).unwrap());
        assert!(u
            .is_subspace_of(&Space::span_of(q(), 3, &[vec_of(q(), &[1, 0, 0])]).unwrap())
            .is_err());
    }

    #[test]
    fn reduce_zeroes_the_pivot_coordinates() {
        let u = Space::span_of(q(), 2, &[vec_of(q(), &[1, 0])]).unwrap();
        assert_eq!(u.reduce(&vec_of(q(), &[3, 5])).unwrap(), vec_of(q(), &[0, 5]));

        let d = Space::span_of(gf(2), 2, &[vec_of(gf(2), &[1, 1])]).unwrap();
        let r10 = d.reduce(&vec_of(gf(2), &[1, 0])).unwrap();
        let r01 = d.reduce(&vec_of(gf(2), &[0, 1])).unwrap();
        assert_eq!(r10, r01);
        assert_eq!(r10, vec_of(gf(2), &[0, 1]));
        assert_eq!(
            d.reduce(&vec_of(gf(2), &[1, 1])).unwrap(),
            d.reduce(&Vector::zero(gf(2), 2)).unwrap()
        );
    }

    #[test]
    fn quotient_dimension_subtracts_nested_dimensions() {
        let v = Space::full(gf(2), 2);
        let u = Space::span_of(gf(2), 2, &[vec_of(gf(2), &[1, 1])]).unwrap();
        assert_eq!(QuotientSpace::new(v, u).unwrap().dim(), 1);

        let v = Space::span_of(q(), 3, &[vec_of(q(), &[1, 0, 0]), vec_of(q(), &[0, 1, 0])]).unwrap();
        let u = Space::span_of(q(), 3, &[vec_of(q(), &[1, 1, 0])]).unwrap();
        assert_eq!(QuotientSpace::new(v, u).unwrap().dim(), 1);
    }

    #[test]
    fn quotient_rejects_non_nested_pairs() {
        let v = Space::span_of(q(), 2, &[vec_of(q(), &[1, 0])]).unwrap();
        let u = Space::span_of(q(), 2, &[vec_of(q(), &[0, 1])]).unwrap();
        assert_eq!(QuotientSpace::new(v, u), Err(Error::NotSubspace));
    }

    #[test]
    fn coset_reps_identify_cosets_exactly() {
        let quotient = QuotientSpace::new(
            Space::full(gf(2), 2),
            Space::span_of(gf(2), 2, &[vec_of(gf(2), &[1, 1])]).unwrap(),
        )
        .unwrap();
        let rep = |a: i64, b: i64| {
            quotient
                .coset_rep(&vec_of(gf(2), &[a, b]))
                .unwrap()
                .rep()
                .clone()
        };
        assert_eq!(rep(0, 0), rep(1, 1));
        assert_eq!(rep(1, 0), rep(0, 1));
        assert_ne!(rep(0, 0), rep(1, 0));
    }

    #[test]
    fn coset_rep_requires_membership_in_the_total_space() {
        let v = Space::span_of(q(), 3, &[vec_of(q(), &[1, 0, 0])]).unwrap();
        let quotient = QuotientSpace::new(v.clone(), Space::zero(q(), 3)).unwrap();
        assert_eq!(
            quotient.coset_rep(&vec_of(q(), &[0, 1, 0])),
            Err(Error::NotMember)
        );
    }

    #[test]
    fn quotient_presentation_picks_the_non_shared_pivot_rows() {
        // V = F² over Q, U = span{(1,0)}: pivots {0,1} vs {0}, so the
        // surviving column is the second standard basis vector.
        let quotient = QuotientSpace::new(
            Space::full(q(), 2),
            Space::span_of(q(), 2, &[vec_of(q(), &[1, 0])]).unwrap(),
        )
        .unwrap();
        let iso = quotient.iso();
        assert_eq!(iso.domain_dim(), 1);
        assert_eq!(iso.columns(), &Matrix::from_int_rows(q(), &[&[0], &[1]]));
    }

    #[test]
    fn quotient_presentation_hits_each_coset_rep_once() {
        let total = Space::full(gf(2), 2);
        let sub = Space::span_of(gf(2), 2, &[vec_of(gf(2), &[1, 1])]).unwrap();
        let quotient = QuotientSpace::new(total, sub).unwrap();
        let iso = quotient.iso();
        assert!(iso.is_injective());
        // Enumerate the one-dimensional domain over GF(2).
        let mut reps = Vec::new();
        for x in 0..2i64 {
            let image = iso.apply(&vec_of(gf(2), &[x])).unwrap();
            let rep = quotient.coset_rep(&image).unwrap().rep().clone();
            assert_eq!(image, rep, "images are canonical representatives");
            reps.push(rep);
        }
        reps.dedup();
        assert_eq!(reps.len(), 2, "distinct inputs land in distinct cosets");
    }

    #[test]
    fn factor_map_is_an_isomorphism_onto_the_image() {
        let f = LinearMap::from_matrix(Matrix::from_int_rows(gf(2), &[&[1, 1]]));
        let factored = factor_map(&f);
        assert_eq!(factored.domain_dim(), 1);
        assert_eq!(factored.columns(), &Matrix::from_int_rows(gf(2), &[&[1]]));
        assert!(factored.is_isomorphism());

        let g = LinearMap::from_matrix(Matrix::from_int_rows(
            q(),
            &[&[1, 2, 3], &[2, 4, 6], &[0, 0, 1]],
        ));
        let factored = factor_map(&g);
        assert_eq!(factored.domain_dim(), 2);
        assert!(factored.is_isomorphism());
        assert_eq!(factored.codomain(), Some(&g.image()));
    }

    #[test]
    fn reduce_respects_field_elements_not_just_integers() {
        let u = Space::span_of(q(), 2, &[vec_of(q(), &[2, 6])]).unwrap();
        // Canonical basis is (1,3); reducing (1/2, 0) clears coordinate 0.
        let half = FieldElement::from_ratio(q(), 1, 2).unwrap();
        let v = Vector::new(q(), vec![half, FieldElement::zero(q())]).unwrap();
        let reduced = u.reduce(&v).unwrap();
        assert!(reduced[0].is_zero());
        assert_eq!(reduced[1].to_string(), "-3/2");
    }
}
