//! Linear maps F^n → F^m as explicit column matrices.
//!
//! A map is the matrix whose j-th column is the image of the j-th standard
//! basis vector; that matrix determines the map completely, and every
//! structural question (injectivity, surjectivity, kernel, image,
//! invertibility) reduces to ranks of that matrix.  A map may declare a
//! subspace of F^m as its codomain, which tightens the surjectivity test
//! to "fills the declared codomain" without changing how vectors are
//! transformed.

use crate::error::Error;
use crate::field::FieldSpec;
use crate::matrix::{Matrix, Vector};
use crate::space::Space;

/// A linear map out of a coordinate space, with an optional declared
/// subspace codomain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    columns: Matrix,
    codomain: Option<Space>,
}

impl LinearMap {
    /// A map into all of F^m, where `columns` is m × n.
    pub fn from_matrix(columns: Matrix) -> LinearMap {
        LinearMap {
            columns,
            codomain: None,
        }
    }

    /// A map into the declared `codomain`; every column must lie in it.
    pub fn from_matrix_into(columns: Matrix, codomain: Space) -> Result<LinearMap, Error> {
        columns.spec().require_same(codomain.spec())?;
        if codomain.ambient_dim() != columns.rows() {
            return Err(Error::DimensionMismatch {
                expected: columns.rows(),
                actual: codomain.ambient_dim(),
            });
        }
        for j in 0..columns.cols() {
            if !codomain.contains(&columns.column(j))? {
                return Err(Error::NotMember);
            }
        }
        Ok(LinearMap {
            columns,
            codomain: Some(codomain),
        })
    }

    /// The unique map sending the j-th standard basis vector to
    /// `images[j]` inside F^`ambient_dim`.
    pub fn from_images(
        spec: FieldSpec,
        ambient_dim: usize,
        images: &[Vector],
    ) -> Result<LinearMap, Error> {
        Ok(LinearMap::from_matrix(Matrix::from_columns(
            spec,
            ambient_dim,
            images,
        )?))
    }

    /// Like [`LinearMap::from_images`] but lands in a declared codomain.
    pub fn from_images_into(codomain: &Space, images: &[Vector]) -> Result<LinearMap, Error> {
        let columns = Matrix::from_columns(codomain.spec(), codomain.ambient_dim(), images)?;
        LinearMap::from_matrix_into(columns, codomain.clone())
    }

    pub fn identity(spec: FieldSpec, n: usize) -> LinearMap {
        LinearMap::from_matrix(Matrix::identity(spec, n))
    }

    pub fn spec(&self) -> FieldSpec {
        self.columns.spec()
    }

    /// Dimension n of the domain F^n.
    pub fn domain_dim(&self) -> usize {
        self.columns.cols()
    }

    /// Dimension m of the coordinate space F^m the outputs live in.
    pub fn ambient_dim(&self) -> usize {
        self.columns.rows()
    }

    /// Dimension of the declared codomain: `dim` of the subspace when one
    /// was declared, otherwise the full ambient dimension.
    pub fn codomain_dim(&self) -> usize {
        match &self.codomain {
            Some(s) => s.dim(),
            None => self.ambient_dim(),
        }
    }

    pub fn codomain(&self) -> Option<&Space> {
        self.codomain.as_ref()
    }

    /// The declared codomain as a space, defaulting to all of F^m.
    pub fn codomain_space(&self) -> Space {
        match &self.codomain {
            Some(s) => s.clone(),
            None => Space::full(self.spec(), self.ambient_dim()),
        }
    }

    pub fn columns(&self) -> &Matrix {
        &self.columns
    }

    /// The image of the j-th standard basis vector.
    pub fn column(&self, j: usize) -> Vector {
        self.columns.column(j)
    }

    pub fn apply(&self, x: &Vector) -> Result<Vector, Error> {
        self.columns.mul_vector(x)
    }

    /// The composite self ∘ inner, inheriting self's declared codomain.
    pub fn compose(&self, inner: &LinearMap) -> Result<LinearMap, Error> {
        let columns = self.columns.matmul(&inner.columns)?;
        Ok(LinearMap {
            columns,
            codomain: self.codomain.clone(),
        })
    }

    /// The kernel as a subspace of the domain F^n.
    pub fn kernel(&self) -> Space {
        Space::span_of(
            self.spec(),
            self.domain_dim(),
            &self.columns.kernel_basis(),
        )
        .expect("kernel vectors are uniform")
    }

    /// The image as a subspace of F^m.
    pub fn image(&self) -> Space {
        Space::spanned_by_columns(&self.columns)
    }

    /// A map is injective exactly when its rank fills the domain.
    pub fn is_injective(&self) -> bool {
        self.columns.rank() == self.domain_dim()
    }

    /// A map is surjective exactly when its rank fills the declared
    /// codomain.
    pub fn is_surjective(&self) -> bool {
        self.columns.rank() == self.codomain_dim()
    }

    pub fn is_isomorphism(&self) -> bool {
        let rank = self.columns.rank();
        rank == self.domain_dim() && rank == self.codomain_dim()
    }

    /// The inverse of an isomorphism.
    ///
    /// Row j of the inverse is the free-coordinates-zeroed solution of
    /// Aᵀ·y = e_j, so the inverse times A is the identity on the domain
    /// and the inverse is itself linear on all of F^m; on the declared
    /// codomain it agrees with the two-sided inverse.
    pub fn inverse(&self) -> Result<LinearMap, Error> {
        if !self.is_isomorphism() {
            return Err(Error::NotInvertible);
        }
        let spec = self.spec();
        let at = self.columns.transpose();
        let mut rows = Vec::with_capacity(self.domain_dim());
        for j in 0..self.domain_dim() {
            let e = Vector::unit(spec, self.domain_dim(), j);
            let y = at
                .solve(&e)?
                .expect("full column rank makes every unit vector reachable");
            rows.push(y);
        }
        let columns = Matrix::from_rows(spec, self.ambient_dim(), &rows)?;
        Ok(LinearMap::from_matrix(columns))
    }
}

/// The padding/truncation map between coordinate spaces: it keeps the
/// first min(from, to) coordinates and fills any remaining target
/// coordinates with zeros.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EmbedTruncate {
    pub from_dim: usize,
    pub to_dim: usize,
}

impl EmbedTruncate {
    /// Realizes the map F^from → F^to over the given field.
    pub fn map(&self, spec: FieldSpec) -> LinearMap {
        let cols: Vec<Vector> = (0..self.from_dim)
            .map(|j| {
                if j < self.to_dim {
                    Vector::unit(spec, self.to_dim, j)
                } else {
                    Vector::zero(spec, self.to_dim)
                }
            })
            .collect();
        LinearMap::from_matrix(
            Matrix::from_columns(spec, self.to_dim, &cols).expect("unit columns are uniform"),
        )
    }
}
