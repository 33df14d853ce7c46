//! Seeded random generation of field elements, vectors, matrices, maps,
//! and spaces.
//!
//! All draws go through a caller-supplied RNG, so a fixed seed replays
//! the exact same history.  Rational draws keep numerators and
//! denominators single-digit; what matters downstream is exactness, not
//! magnitude.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::field::{FieldElement, FieldSpec};
use crate::map::LinearMap;
use crate::matrix::{Matrix, Vector};
use crate::space::Space;

pub fn element<R: Rng>(rng: &mut R, spec: FieldSpec) -> FieldElement {
    match spec.modulus() {
        Some(p) => FieldElement::from_residue(spec, rng.gen_range(0..p))
            .expect("prime field residues are valid"),
        None => {
            let numer = rng.gen_range(-9..=9);
            let denom = rng.gen_range(1..=9);
            FieldElement::from_ratio(spec, numer, denom).expect("nonzero denominator")
        }
    }
}

pub fn nonzero_element<R: Rng>(rng: &mut R, spec: FieldSpec) -> FieldElement {
    loop {
        let e = element(rng, spec);
        if !e.is_zero() {
            return e;
        }
    }
}

pub fn vector<R: Rng>(rng: &mut R, spec: FieldSpec, len: usize) -> Vector {
    let entries = (0..len).map(|_| element(rng, spec)).collect();
    Vector::new(spec, entries).expect("sampled entries share the field")
}

pub fn matrix<R: Rng>(rng: &mut R, spec: FieldSpec, rows: usize, cols: usize) -> Matrix {
    let entries = (0..rows * cols).map(|_| element(rng, spec)).collect();
    Matrix::new(spec, rows, cols, entries).expect("sampled entries share the field")
}

/// A random map F^n → F^m with both dimensions drawn from 0..=max_dim.
pub fn map<R: Rng>(rng: &mut R, spec: FieldSpec, max_dim: usize) -> LinearMap {
    let rows = rng.gen_range(0..=max_dim);
    let cols = rng.gen_range(0..=max_dim);
    LinearMap::from_matrix(matrix(rng, spec, rows, cols))
}

/// A random subspace of F^ambient: the span of 0..=ambient random
/// vectors.
pub fn space<R: Rng>(rng: &mut R, spec: FieldSpec, ambient: usize) -> Space {
    let count = rng.gen_range(0..=ambient);
    let gens: Vec<Vector> = (0..count).map(|_| vector(rng, spec, ambient)).collect();
    Space::span_of(spec, ambient, &gens).expect("sampled generators share shape")
}

/// A random member of a space: a random combination of its basis.
pub fn member<R: Rng>(rng: &mut R, of: &Space) -> Vector {
    let coords = vector(rng, of.spec(), of.dim());
    let mut acc = Vector::zero(of.spec(), of.ambient_dim());
    for (i, c) in coords.entries().iter().enumerate() {
        let scaled = of.basis_row(i).scale(c).expect("basis rows share the field");
        acc = acc.add(&scaled).expect("uniform ambient length");
    }
    acc
}

/// A random subspace of the given space.
pub fn subspace<R: Rng>(rng: &mut R, of: &Space) -> Space {
    let count = rng.gen_range(0..=of.dim());
    let gens: Vec<Vector> = (0..count).map(|_| member(rng, of)).collect();
    Space::span_of(of.spec(), of.ambient_dim(), &gens).expect("members share shape")
}

/// A spanning set of `of`: its basis plus `extra` random members, in
/// shuffled order.
pub fn spanning_set<R: Rng>(rng: &mut R, of: &Space, extra: usize) -> Vec<Vector> {
    let mut out = of.basis_vectors();
    for _ in 0..extra {
        out.push(member(rng, of));
    }
    out.shuffle(rng);
    out
}

/// An independent set of `size` vectors inside `of` (`size` must not
/// exceed the dimension).  Random members are kept whenever they grow the
/// span; if luck runs dry the unused canonical basis rows top it up.
pub fn independent_set<R: Rng>(rng: &mut R, of: &Space, size: usize) -> Vec<Vector> {
    assert!(size <= of.dim(), "independent sets cannot exceed the dimension");
    let mut out: Vec<Vector> = Vec::with_capacity(size);
    let mut attempts = 0;
    while out.len() < size && attempts < 100 * (size + 1) {
        attempts += 1;
        let candidate = member(rng, of);
        let current = Space::span_of(of.spec(), of.ambient_dim(), &out).expect("uniform shape");
        if !current.contains(&candidate).expect("uniform ambient") {
            out.push(candidate);
        }
    }
    let mut i = 0;
    while out.len() < size {
        let row = of.basis_row(i);
        let current = Space::span_of(of.spec(), of.ambient_dim(), &out).expect("uniform shape");
        if !current.contains(&row).expect("uniform ambient") {
            out.push(row);
        }
        i += 1;
    }
    out
}
