//! Classifying finite vector lists against a target space.
//!
//! A list of vectors in V is *injective* when the map sending coordinates
//! to its linear combinations is injective (no dependency among the
//! vectors), *surjective* when that map fills V (the list spans), and a
//! *basis* when it is both — equivalently, when every vector of V has
//! exactly one coefficient tuple.

use crate::error::Error;
use crate::map::LinearMap;
use crate::matrix::{Matrix, Vector};
use crate::space::Space;

/// How a vector list sits inside its target space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SetClassification {
    pub injective: bool,
    pub surjective: bool,
    pub basis: bool,
}

/// Classifies `vectors` as a list in `v`; every vector must lie in `v`.
pub fn classify(vectors: &[Vector], v: &Space) -> Result<SetClassification, Error> {
    let map = LinearMap::from_images_into(v, vectors)?;
    let injective = map.is_injective();
    let surjective = map.is_surjective();
    Ok(SetClassification {
        injective,
        surjective,
        basis: injective && surjective,
    })
}

/// Coefficients expressing `target` as a combination of `vectors`, or
/// `None` when no combination reaches it.  Free coefficients are zero, so
/// the answer is deterministic.
pub fn linear_combination_of(
    target: &Vector,
    vectors: &[Vector],
) -> Result<Option<Vector>, Error> {
    let columns = Matrix::from_columns(target.spec(), target.len(), vectors)?;
    columns.solve(target)
}

/// True when every vector of `v` has exactly one representation as a
/// combination of `vectors`.
///
/// Checked constructively: each canonical basis vector of `v` must be
/// reachable (so everything in `v` is), and the coefficient kernel must
/// be trivial (so no vector is reachable twice).
pub fn unique_representation_check(vectors: &[Vector], v: &Space) -> Result<bool, Error> {
    for u in vectors {
        if !v.contains(u)? {
            return Err(Error::NotMember);
        }
    }
    let columns = Matrix::from_columns(v.spec(), v.ambient_dim(), vectors)?;
    for i in 0..v.dim() {
        if columns.solve(&v.basis_row(i))?.is_none() {
            return Ok(false);
        }
    }
    Ok(columns.kernel_basis().is_empty())
}
