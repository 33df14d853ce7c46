//! Constructive dimension procedures.
//!
//! Dimension here is always witnessed by an explicit map: the dimension
//! of a space is the size of the coordinate space that maps onto it
//! isomorphically.  The procedures in this module build those witnesses —
//! growing injective maps one column at a time, shrinking spanning sets
//! one redundant vector at a time — with deterministic choices at every
//! step, and they record a transcript of what was chosen so a reader can
//! replay the construction.

use crate::error::Error;
use crate::map::LinearMap;
use crate::matrix::{Matrix, Vector};
use crate::space::Space;

/// A dimension together with the isomorphism that exhibits it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionWitness {
    pub dim: usize,
    /// An isomorphism F^dim → V whose columns are V's canonical basis.
    pub iso: LinearMap,
}

/// The dimension of a space, witnessed constructively.
pub fn isomorphic_dimension(v: &Space) -> DimensionWitness {
    let iso = LinearMap::from_images_into(v, &v.basis_vectors())
        .expect("canonical basis rows lie in their own span");
    debug_assert!(iso.is_isomorphism());
    DimensionWitness { dim: v.dim(), iso }
}

/// Appends one more column to an injective map, keeping it injective.
///
/// The new vector must lie in the declared codomain but outside the
/// current image; the result maps F^(n+1) into the same codomain.
pub fn extend_injective(f: &LinearMap, v: &Vector) -> Result<LinearMap, Error> {
    if !f.is_injective() {
        return Err(Error::NotInjective);
    }
    let codomain = f.codomain_space();
    if !codomain.contains(v)? {
        return Err(Error::NotMember);
    }
    if f.image().contains(v)? {
        return Err(Error::AlreadyInImage);
    }
    let mut cols: Vec<Vector> = (0..f.domain_dim()).map(|j| f.column(j)).collect();
    cols.push(v.clone());
    let out = match f.codomain() {
        Some(s) => LinearMap::from_images_into(s, &cols)?,
        None => LinearMap::from_images(f.spec(), f.ambient_dim(), &cols)?,
    };
    debug_assert!(out.is_injective());
    Ok(out)
}

/// One stage of a deterministic column-growing construction: at stage
/// `step` the canonical basis row numbered `basis_row` was appended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceStep {
    pub step: usize,
    pub basis_row: usize,
    pub vector: Vector,
}

/// A chain of injective maps F^0 → F^1 → … → F^dim(V), all landing in V,
/// where each map extends the previous one by a single column and the
/// last one is an isomorphism onto V.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InjectiveSequence {
    target: Space,
    columns: Matrix,
    steps: Vec<SequenceStep>,
}

/// Builds the chain for `v`, choosing at each stage the first canonical
/// basis row of `v` that is not yet in the image.
pub fn build_injective_sequence(v: &Space) -> InjectiveSequence {
    let mut current =
        LinearMap::from_images_into(v, &[]).expect("the empty column list needs no membership");
    let mut steps = Vec::with_capacity(v.dim());
    for stage in 1..=v.dim() {
        let image = current.image();
        let (basis_row, vector) = (0..v.dim())
            .map(|i| (i, v.basis_row(i)))
            .find(|(_, b)| !image.contains(b).expect("basis rows share the ambient space"))
            .expect("an injective non-isomorphism misses some basis row");
        current = extend_injective(&current, &vector).expect("the chosen row avoids the image");
        steps.push(SequenceStep {
            step: stage,
            basis_row,
            vector,
        });
    }
    debug_assert!(current.is_isomorphism());
    InjectiveSequence {
        target: v.clone(),
        columns: current.columns().clone(),
        steps,
    }
}

impl InjectiveSequence {
    pub fn target(&self) -> &Space {
        &self.target
    }

    /// Length of the chain, i.e. the dimension of the target.
    pub fn dim(&self) -> usize {
        self.columns.cols()
    }

    /// The k-th map in the chain: the first k columns, as F^k → V.
    pub fn map_at(&self, k: usize) -> LinearMap {
        assert!(k <= self.dim(), "stage out of range");
        let cols: Vec<Vector> = (0..k).map(|j| self.columns.column(j)).collect();
        LinearMap::from_images_into(&self.target, &cols).expect("prefix columns lie in the target")
    }

    /// The final map F^dim → V, an isomorphism.
    pub fn final_map(&self) -> LinearMap {
        self.map_at(self.dim())
    }

    /// What was chosen at each stage.
    pub fn steps(&self) -> &[SequenceStep] {
        &self.steps
    }
}

/// One stage of basis extraction: the first canonical kernel vector of
/// the active columns, and the original index of the vector it removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtractionStep {
    pub step: usize,
    pub kernel_vector: Vector,
    pub dropped: usize,
}

/// The result of extracting a basis from a spanning set: which input
/// indices survive, and the stage-by-stage dependency witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisExtraction {
    pub kept: Vec<usize>,
    pub steps: Vec<ExtractionStep>,
}

/// Shrinks a spanning set of `v` to a basis of `v`.
///
/// While the active vectors are dependent, the first canonical kernel
/// vector of the active column matrix names a dependency; its last
/// nonzero coordinate singles out an active vector that is a combination
/// of earlier ones, so removing it cannot shrink the span.  The surviving
/// vectors are independent and still span `v`, hence form a basis.
pub fn extract_basis(vectors: &[Vector], v: &Space) -> Result<BasisExtraction, Error> {
    let spanned = Space::span_of(v.spec(), v.ambient_dim(), vectors)?;
    if &spanned != v {
        return Err(Error::NotSurjective);
    }
    let mut active: Vec<usize> = (0..vectors.len()).collect();
    let mut steps = Vec::new();
    loop {
        let cols: Vec<Vector> = active.iter().map(|&i| vectors[i].clone()).collect();
        let m = Matrix::from_columns(v.spec(), v.ambient_dim(), &cols)
            .expect("span check already validated the vectors");
        let kernel = m.kernel_basis();
        let Some(kv) = kernel.first() else { break };
        let position = kv.last_nonzero().expect("kernel basis vectors are nonzero");
        steps.push(ExtractionStep {
            step: steps.len() + 1,
            kernel_vector: kv.clone(),
            dropped: active[position],
        });
        active.remove(position);
    }
    debug_assert_eq!(active.len(), v.dim());
    Ok(BasisExtraction {
        kept: active,
        steps,
    })
}

/// The result of extending an independent set to a basis: the appended
/// vectors and the stage-by-stage choices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisExtension {
    pub appended: Vec<Vector>,
    pub steps: Vec<SequenceStep>,
}

/// Grows an independent subset of `v` to a basis of `v` by repeatedly
/// appending the first canonical basis row of `v` outside the current
/// span.
pub fn extend_to_basis(vectors: &[Vector], v: &Space) -> Result<BasisExtension, Error> {
    let mut current = LinearMap::from_images_into(v, vectors)?;
    if !current.is_injective() {
        return Err(Error::NotInjective);
    }
    let mut appended = Vec::new();
    let mut steps = Vec::new();
    while !current.is_isomorphism() {
        let image = current.image();
        let (basis_row, vector) = (0..v.dim())
            .map(|i| (i, v.basis_row(i)))
            .find(|(_, b)| !image.contains(b).expect("basis rows share the ambient space"))
            .expect("an injective non-isomorphism misses some basis row");
        current = extend_injective(&current, &vector)?;
        steps.push(SequenceStep {
            step: steps.len() + 1,
            basis_row,
            vector: vector.clone(),
        });
        appended.push(vector);
    }
    Ok(BasisExtension { appended, steps })
}

/// The three dimensions related by rank–nullity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankNullity {
    pub kernel_dim: usize,
    pub image_dim: usize,
    pub domain_dim: usize,
}

/// Computes kernel and image dimensions of `f` and asserts they add up
/// to the domain dimension.
pub fn rank_nullity(f: &LinearMap) -> RankNullity {
    let kernel_dim = f.kernel().dim();
    let image_dim = f.image().dim();
    let domain_dim = f.domain_dim();
    assert_eq!(
        kernel_dim + image_dim,
        domain_dim,
        "kernel and image dimensions must account for the whole domain"
    );
    RankNullity {
        kernel_dim,
        image_dim,
        domain_dim,
    }
}
