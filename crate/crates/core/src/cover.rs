//! Galois covers of closed surfaces as combinatorial triangle complexes.
//!
//! The base surface of genus `h` is a one-vertex cell structure: `2h`
//! loop edges and a single `4h`-gon glued along `∏ [a_i, b_i]`, fan
//! triangulated from corner 0 (no added vertices). The cover has one
//! copy of every base cell per group element; edge lifts follow the
//! monodromy by right translation of vertex labels, and the deck group
//! acts by left multiplication.
//!
//! Each triangle carries a vertex order chosen so all three of its
//! order-induced sides are honest forward edge cells; this makes the
//! front-face/back-face cup product on 1-cochains well defined, and the
//! form on first cohomology is its evaluation against the fundamental
//! cycle of the surface.

use crate::group::FiniteGroup;
use crate::linalg::{subquotient, Rat, RationalMatrix, Subspace};
use crate::rep::{GroupAlgebraElement, RationalRep};
use crate::symplectic::{ModuleError, SymplecticGModule};
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoverError {
    #[error("base genus must be at least 1")]
    GenusTooSmall,
    #[error("monodromy must list 2·genus element indices, got {0}")]
    WrongMonodromyLength(usize),
    #[error("monodromy contains element index {0}, group order is {1}")]
    ElementOutOfRange(usize, usize),
    #[error("surface relation fails: the product of commutators is element {0}, not the identity")]
    RelationFails(usize),
    #[error(
        "monodromy images generate a proper subgroup of order {0}; \
         pass the generated subgroup as the deck group instead"
    )]
    NotGenerating(usize),
    #[error("representation is over a group of order {0}, cover group has order {1}")]
    GroupMismatch(usize, usize),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error("complex verification failed: {0}")]
    ComplexCheck(String),
}

/// Monodromy data for a connected Galois cover of a genus-`h` surface:
/// images of the standard generators `a_1, b_1, …, a_h, b_h`.
#[derive(Debug, Clone)]
pub struct CoverSpec {
    base_genus: usize,
    group: FiniteGroup,
    monodromy: Vec<usize>,
}

impl CoverSpec {
    pub fn new(
        base_genus: usize,
        group: FiniteGroup,
        monodromy: Vec<usize>,
    ) -> Result<Self, CoverError> {
        if base_genus < 1 {
            return Err(CoverError::GenusTooSmall);
        }
        if monodromy.len() != 2 * base_genus {
            return Err(CoverError::WrongMonodromyLength(monodromy.len()));
        }
        for &m in &monodromy {
            if m >= group.order() {
                return Err(CoverError::ElementOutOfRange(m, group.order()));
            }
        }
        let mut rel = group.identity();
        for i in 0..base_genus {
            rel = group.mul(rel, group.commutator(monodromy[2 * i], monodromy[2 * i + 1]));
        }
        if rel != group.identity() {
            return Err(CoverError::RelationFails(rel));
        }
        let closure = group.closure(&monodromy);
        if closure.len() != group.order() {
            return Err(CoverError::NotGenerating(closure.len()));
        }
        Ok(CoverSpec {
            base_genus,
            group,
            monodromy,
        })
    }

    pub fn base_genus(&self) -> usize {
        self.base_genus
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn monodromy(&self) -> &[usize] {
        &self.monodromy
    }

    /// The boundary word of the `4h`-gon: `a_1 b_1 a_1⁻¹ b_1⁻¹ …` as
    /// (generator index in `0..2h`, sign).
    fn relator_letters(&self) -> Vec<(usize, i8)> {
        let mut letters = Vec::with_capacity(4 * self.base_genus);
        for i in 0..self.base_genus {
            letters.push((2 * i, 1));
            letters.push((2 * i + 1, 1));
            letters.push((2 * i, -1));
            letters.push((2 * i + 1, -1));
        }
        letters
    }

    /// `p[i]` = monodromy of the length-`i` prefix of the boundary word.
    fn prefix_monodromies(&self) -> Vec<usize> {
        let letters = self.relator_letters();
        let g = &self.group;
        let mut prefixes = Vec::with_capacity(letters.len() + 1);
        prefixes.push(g.identity());
        for &(k, s) in &letters {
            let m = self.monodromy[k];
            let step = if s > 0 { m } else { g.inv(m) };
            prefixes.push(g.mul(*prefixes.last().unwrap(), step));
        }
        prefixes
    }

    /// Fox derivatives `∂R/∂x_k` of the surface relator, pushed into the
    /// group algebra through the monodromy.
    pub fn fox_derivatives(&self) -> Vec<GroupAlgebraElement> {
        let letters = self.relator_letters();
        let prefixes = self.prefix_monodromies();
        let order = self.group.order();
        let mut out = vec![GroupAlgebraElement::zero(order); 2 * self.base_genus];
        for (i, &(k, s)) in letters.iter().enumerate() {
            if s > 0 {
                out[k].coeffs[prefixes[i]] += Rat::one();
            } else {
                out[k].coeffs[prefixes[i + 1]] -= Rat::one();
            }
        }
        out
    }
}

/// One lifted triangle: the edge cells of its ordered faces
/// (front = (v0,v1), middle = (v1,v2), third = (v0,v2)) and the sign of
/// its vertex order against the surface orientation.
#[derive(Debug, Clone)]
struct TriangleCell {
    front: usize,
    middle: usize,
    third: usize,
    orientation: i8,
}

/// The cover as a cellular complex with ordered triangles, boundary
/// matrices, deck tables and the normalized fundamental cycle.
pub struct CoverComplex {
    spec: CoverSpec,
    n_base_edges: usize,
    n_base_triangles: usize,
    edges: Vec<(usize, usize)>,
    triangles: Vec<TriangleCell>,
    d1: RationalMatrix,
    d2: RationalMatrix,
    fundamental_cycle: Vec<Rat>,
}

impl CoverComplex {
    pub fn spec(&self) -> &CoverSpec {
        &self.spec
    }

    pub fn vertex_count(&self) -> usize {
        self.spec.group.order()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn triangle_count(&self) -> usize {
        self.triangles.len()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.triangle_count() as i64
    }

    /// Boundary of edges: `E×V`, `∂e = end - start`.
    pub fn d1(&self) -> &RationalMatrix {
        &self.d1
    }

    /// Boundary of triangles: `F×E`, `∂T = middle - third + front`.
    pub fn d2(&self) -> &RationalMatrix {
        &self.d2
    }

    pub fn fundamental_cycle(&self) -> &[Rat] {
        &self.fundamental_cycle
    }

    fn edge_id(&self, sheet: usize, base_edge: usize) -> usize {
        sheet * self.n_base_edges + base_edge
    }

    fn triangle_id(&self, sheet: usize, base_tri: usize) -> usize {
        sheet * self.n_base_triangles + base_tri
    }

    /// Relabeling of edge cells by the deck transformation of `γ`
    /// (left multiplication on sheet labels).
    pub fn deck_edge_permutation(&self, gamma: usize) -> Vec<usize> {
        let g = &self.spec.group;
        (0..self.edge_count())
            .map(|id| {
                let (sheet, base) = (id / self.n_base_edges, id % self.n_base_edges);
                self.edge_id(g.mul(gamma, sheet), base)
            })
            .collect()
    }

    pub fn deck_triangle_permutation(&self, gamma: usize) -> Vec<usize> {
        let g = &self.spec.group;
        (0..self.triangle_count())
            .map(|id| {
                let (sheet, base) = (id / self.n_base_triangles, id % self.n_base_triangles);
                self.triangle_id(g.mul(gamma, sheet), base)
            })
            .collect()
    }
}

/// Build the cover complex and verify its structural invariants.
pub fn build_cover(spec: CoverSpec) -> Result<CoverComplex, CoverError> {
    let h = spec.base_genus;
    let group = spec.group.clone();
    let order = group.order();
    let letters = spec.relator_letters();
    let prefixes = spec.prefix_monodromies();
    let n_base_edges = 6 * h - 3;
    let n_base_triangles = 4 * h - 2;
    // Base edge layout: 0..2h are the generator loops, 2h + (c-2) is the
    // fan diagonal from corner 0 to corner c (c = 2 .. 4h-2).
    let diagonal = |corner: usize| 2 * h + (corner - 2);

    let mut complex = CoverComplex {
        spec,
        n_base_edges,
        n_base_triangles,
        edges: vec![(0, 0); order * n_base_edges],
        triangles: Vec::with_capacity(order * n_base_triangles),
        d1: RationalMatrix::zeros(0, 0),
        d2: RationalMatrix::zeros(0, 0),
        fundamental_cycle: vec![],
    };
    let spec = &complex.spec;

    // Edge cells with their endpoints.
    for sheet in 0..order {
        for k in 0..2 * h {
            let id = complex.edge_id(sheet, k);
            complex.edges[id] = (sheet, group.mul(sheet, spec.monodromy[k]));
        }
        for corner in 2..=4 * h - 2 {
            let id = complex.edge_id(sheet, diagonal(corner));
            complex.edges[id] = (sheet, group.mul(sheet, prefixes[corner]));
        }
    }

    // The directed polygon side `i → i+1` at a sheet, as (edge cell, forward?).
    let side_cell = |sheet: usize, i: usize| -> (usize, bool) {
        let (k, s) = letters[i];
        if s > 0 {
            (complex.edge_id(group.mul(sheet, prefixes[i]), k), true)
        } else {
            (complex.edge_id(group.mul(sheet, prefixes[i + 1]), k), false)
        }
    };

    // Ordered triangles of the fan: T_j has corners (0, j+1, j+2). Fan
    // sides from corner 0 are always forward cells; when the middle side
    // reads an inverse letter the vertex order (A, C, B) is used instead,
    // flipping the recorded orientation.
    let mut triangles = Vec::with_capacity(order * n_base_triangles);
    for sheet in 0..order {
        for j in 0..n_base_triangles {
            let side_ab = if j == 0 {
                side_cell(sheet, 0).0
            } else {
                complex.edge_id(sheet, diagonal(j + 1))
            };
            let side_ac = if j == n_base_triangles - 1 {
                // The closing side reads the inverse of the last letter,
                // so corner 0 → corner 4h-1 is that edge cell forward.
                let (cell, forward) = side_cell(sheet, 4 * h - 1);
                debug_assert!(!forward);
                cell
            } else {
                complex.edge_id(sheet, diagonal(j + 2))
            };
            let (side_bc, forward) = side_cell(sheet, j + 1);
            let tri = if forward {
                TriangleCell {
                    front: side_ab,
                    middle: side_bc,
                    third: side_ac,
                    orientation: 1,
                }
            } else {
                TriangleCell {
                    front: side_ac,
                    middle: side_bc,
                    third: side_ab,
                    orientation: -1,
                }
            };
            triangles.push(tri);
        }
    }
    complex.triangles = triangles;

    // Coherence of the face traces: the ordered sides of each lifted
    // triangle must connect its corner labels.
    for sheet in 0..order {
        for j in 0..n_base_triangles {
            let tri = &complex.triangles[complex.triangle_id(sheet, j)];
            let a = sheet;
            let b = group.mul(sheet, prefixes[j + 1]);
            let c = group.mul(sheet, prefixes[j + 2]);
            let (v0, v1, v2) = if tri.orientation == 1 { (a, b, c) } else { (a, c, b) };
            let ok = complex.edges[tri.front] == (v0, v1)
                && complex.edges[tri.middle] == (v1, v2)
                && complex.edges[tri.third] == (v0, v2);
            if !ok {
                return Err(CoverError::ComplexCheck(format!(
                    "face trace fails on triangle {j} of sheet {sheet}"
                )));
            }
        }
    }

    let n_edges = complex.edge_count();
    let n_tris = complex.triangle_count();
    let mut d1 = RationalMatrix::zeros(n_edges, order);
    for (id, &(from, to)) in complex.edges.iter().enumerate() {
        d1[(id, to)] += Rat::one();
        d1[(id, from)] -= Rat::one();
    }
    let mut d2 = RationalMatrix::zeros(n_tris, n_edges);
    for (id, tri) in complex.triangles.iter().enumerate() {
        d2[(id, tri.middle)] += Rat::one();
        d2[(id, tri.third)] -= Rat::one();
        d2[(id, tri.front)] += Rat::one();
    }
    if !d2.mul(&d1).is_zero() {
        return Err(CoverError::ComplexCheck("∂∘∂ is nonzero".into()));
    }
    complex.d1 = d1;
    complex.d2 = d2;

    // χ is multiplicative over the covering.
    let expected_chi = order as i64 * (2 - 2 * h as i64);
    if complex.euler_characteristic() != expected_chi {
        return Err(CoverError::ComplexCheck(format!(
            "Euler characteristic {} != {}",
            complex.euler_characteristic(),
            expected_chi
        )));
    }

    // Connectivity and closedness: one cohomology class in degree 0, one
    // homology class in degree 2, with a coherent (±1) fundamental cycle.
    if complex.d1.kernel().dim() != 1 {
        return Err(CoverError::ComplexCheck("H^0 rank is not 1".into()));
    }
    let h2 = complex.d2.transpose().kernel();
    if h2.dim() != 1 {
        return Err(CoverError::ComplexCheck("H_2 rank is not 1".into()));
    }
    let raw = h2.basis().row_vec(0);
    let lead = raw
        .iter()
        .find(|x| !x.is_zero())
        .expect("nonzero generator")
        .clone();
    let cycle: Vec<Rat> = raw.iter().map(|x| x / &lead).collect();
    if cycle.iter().any(|x| x.abs() != Rat::one()) {
        return Err(CoverError::ComplexCheck(
            "fundamental cycle is not coherent".into(),
        ));
    }
    complex.fundamental_cycle = cycle;
    Ok(complex)
}

/// First-cohomology symplectic module of a cover: the front/back-face cup
/// pairing against the fundamental cycle, with the deck group acting by
/// cochain pullback. Dimension is checked against `2 + (2h-2)·|G|`.
pub fn cohomology_module(complex: &CoverComplex) -> Result<SymplecticGModule, CoverError> {
    let group = complex.spec.group().clone();
    let n_edges = complex.edge_count();

    let cocycles = complex.d2.kernel();
    let coboundaries = Subspace::from_matrix_rows(n_edges, &complex.d1.transpose());
    if !cocycles.contains(&coboundaries) {
        return Err(CoverError::ComplexCheck(
            "coboundaries are not cocycles".into(),
        ));
    }
    let q = subquotient(&cocycles, &coboundaries).expect("nested subspaces");
    let section = q.section;
    let projection = q.projection;
    let dim = section.rows();

    let expected = 2 + (2 * complex.spec.base_genus() - 2) * group.order();
    if dim != expected {
        return Err(CoverError::ComplexCheck(format!(
            "H^1 dimension {dim} != {expected}"
        )));
    }

    // ⟨α, β⟩ = Σ_T z_T · α(front_T) · β(back_T).
    let omega = RationalMatrix::from_fn(dim, dim, |i, j| {
        let mut acc = Rat::zero();
        for (t, tri) in complex.triangles.iter().enumerate() {
            let z = &complex.fundamental_cycle[t];
            let a = &section[(i, tri.front)];
            let b = &section[(j, tri.middle)];
            if !a.is_zero() && !b.is_zero() {
                acc += z * &(a * b);
            }
        }
        acc
    });

    let mut action = Vec::with_capacity(group.order());
    for g in group.elements() {
        let perm = complex.deck_edge_permutation(g);
        // Pullback of a cochain row vector: (α·Π_γ)(e) = α(γ·e). These
        // compose as Π_γ·Π_δ = Π_(γδ), so g ↦ A_g is multiplicative with
        // no inversion needed under the row convention.
        let mut pi = RationalMatrix::zeros(n_edges, n_edges);
        for e in 0..n_edges {
            pi[(perm[e], e)] = Rat::one();
        }
        action.push(section.mul(&pi).mul(&projection));
    }

    Ok(SymplecticGModule::new(group, omega, action)?)
}

/// Dimensions `(dim H_0, dim H_1, dim H_2)` of homology twisted by a
/// representation, from the three-term complex of the one-relator
/// presentation: `∂_2` row-blocks are the Fox derivatives of the surface
/// relator pushed through the representation, `∂_1` stacks
/// `ρ(m_k) - Id`. Rows act on the right, so `∂_1 ∘ ∂_2 = 0` is exactly
/// the fundamental Fox identity.
pub fn twisted_homology_dims(
    spec: &CoverSpec,
    rep: &RationalRep,
) -> Result<(usize, usize, usize), CoverError> {
    if rep.matrices.len() != spec.group.order() {
        return Err(CoverError::GroupMismatch(
            rep.matrices.len(),
            spec.group.order(),
        ));
    }
    let d = rep.dim;
    let h = spec.base_genus;
    let fox = spec.fox_derivatives();
    let blocks: Vec<RationalMatrix> = fox.iter().map(|w| w.apply(&rep.matrices)).collect();
    let mut d2 = RationalMatrix::zeros(d, 0);
    for b in &blocks {
        d2 = d2.hstack(b);
    }
    let mut d1 = RationalMatrix::zeros(0, d);
    for k in 0..2 * h {
        let m = rep.matrices[spec.monodromy[k]].sub(&RationalMatrix::identity(d));
        d1 = d1.vstack(&m);
    }
    if d > 0 && !d2.mul(&d1).is_zero() {
        return Err(CoverError::ComplexCheck(
            "twisted boundary maps do not compose to zero".into(),
        ));
    }
    let r2 = d2.rank();
    let r1 = d1.rank();
    let h0 = d - r1;
    let h1 = 2 * h * d - r1 - r2;
    let h2 = d - r2;
    Ok((h0, h1, h2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::catalog_reps;

    fn c2() -> FiniteGroup {
        FiniteGroup::cyclic(2).unwrap()
    }

    fn trivial() -> FiniteGroup {
        FiniteGroup::cyclic(1).unwrap()
    }

    #[test]
    fn torus_counts() {
        let spec = CoverSpec::new(1, trivial(), vec![0, 0]).unwrap();
        let complex = build_cover(spec).unwrap();
        assert_eq!(complex.vertex_count(), 1);
        assert_eq!(complex.edge_count(), 3);
        assert_eq!(complex.triangle_count(), 2);
        assert_eq!(complex.euler_characteristic(), 0);
    }

    #[test]
    fn double_torus_cover_counts() {
        let spec = CoverSpec::new(1, c2(), vec![1, 0]).unwrap();
        let complex = build_cover(spec).unwrap();
        assert_eq!(complex.vertex_count(), 2);
        assert_eq!(complex.edge_count(), 6);
        assert_eq!(complex.triangle_count(), 4);
        assert_eq!(complex.euler_characteristic(), 0);
    }

    #[test]
    fn genus_two_c2_cover() {
        let spec = CoverSpec::new(2, c2(), vec![1, 0, 0, 0]).unwrap();
        let complex = build_cover(spec).unwrap();
        assert_eq!(complex.euler_characteristic(), -4);
    }

    #[test]
    fn monodromy_validation() {
        assert!(matches!(
            CoverSpec::new(1, c2(), vec![1]),
            Err(CoverError::WrongMonodromyLength(1))
        ));
        assert!(matches!(
            CoverSpec::new(1, c2(), vec![0, 0]),
            Err(CoverError::NotGenerating(1))
        ));
        // Non-commuting monodromy on the torus violates the relation.
        let d8 = FiniteGroup::dihedral(8).unwrap();
        let x = d8.generator_by_name("x").unwrap();
        let y = d8.generator_by_name("y").unwrap();
        assert!(matches!(
            CoverSpec::new(1, d8, vec![x, y]),
            Err(CoverError::RelationFails(_))
        ));
    }

    #[test]
    fn torus_module_is_standard() {
        let spec = CoverSpec::new(1, trivial(), vec![0, 0]).unwrap();
        let complex = build_cover(spec).unwrap();
        let module = cohomology_module(&complex).unwrap();
        assert_eq!(module.dim(), 2);
        let omega = module.omega();
        let std = crate::symplectic::standard_form(1);
        assert!(omega == &std || omega == &std.neg());
    }

    #[test]
    fn double_torus_cover_module() {
        let spec = CoverSpec::new(1, c2(), vec![1, 0]).unwrap();
        let complex = build_cover(spec).unwrap();
        let module = cohomology_module(&complex).unwrap();
        assert_eq!(module.dim(), 2);
        // The deck translation acts trivially on the cohomology of the
        // double torus cover.
        assert_eq!(module.action(1), &RationalMatrix::identity(2));
    }

    #[test]
    fn genus_two_c2_module_traces() {
        let spec = CoverSpec::new(2, c2(), vec![1, 0, 0, 0]).unwrap();
        let complex = build_cover(spec).unwrap();
        let module = cohomology_module(&complex).unwrap();
        assert_eq!(module.dim(), 6);
        assert_eq!(module.action(1).trace(), crate::linalg::rint(2));
        assert_eq!(module.action(0).trace(), crate::linalg::rint(6));
    }

    #[test]
    fn character_of_cover_cohomology() {
        // trace(A_g) = 2 for g ≠ e and dim for g = e, over several covers.
        let cases: Vec<CoverSpec> = vec![
            CoverSpec::new(2, FiniteGroup::cyclic(3).unwrap(), vec![1, 0, 2, 0]).unwrap(),
            CoverSpec::new(2, FiniteGroup::cyclic(4).unwrap(), vec![1, 0, 0, 0]).unwrap(),
            {
                let d8 = FiniteGroup::dihedral(8).unwrap();
                let x = d8.generator_by_name("x").unwrap();
                let y = d8.generator_by_name("y").unwrap();
                CoverSpec::new(2, d8, vec![x, 0, y, 0]).unwrap()
            },
        ];
        for spec in cases {
            let dim_expected = 2 + (2 * spec.base_genus() - 2) * spec.group().order();
            let complex = build_cover(spec).unwrap();
            let module = cohomology_module(&complex).unwrap();
            assert_eq!(module.dim(), dim_expected);
            for g in module.group().elements() {
                let want = if g == module.group().identity() {
                    dim_expected as i64
                } else {
                    2
                };
                assert_eq!(module.action(g).trace(), crate::linalg::rint(want));
            }
        }
    }

    #[test]
    fn fox_derivative_example() {
        // Genus 1 over C2 with ρ(a) = x, ρ(b) = e.
        let spec = CoverSpec::new(1, c2(), vec![1, 0]).unwrap();
        let fox = spec.fox_derivatives();
        assert!(fox[0].is_zero());
        let mut expected = GroupAlgebraElement::zero(2);
        expected.coeffs[1] = Rat::one();
        expected.coeffs[0] = -Rat::one();
        assert_eq!(fox[1], expected);
    }

    #[test]
    fn twisted_dims_examples() {
        let spec = CoverSpec::new(1, c2(), vec![1, 0]).unwrap();
        let reps = catalog_reps(&c2()).unwrap();
        let trivial_rep = reps.iter().find(|r| r.label == "trivial").unwrap();
        let sign = reps.iter().find(|r| r.label != "trivial").unwrap();
        // Untwisted homology of the base torus.
        assert_eq!(twisted_homology_dims(&spec, trivial_rep).unwrap(), (1, 2, 1));
        // The sign representation kills everything.
        assert_eq!(twisted_homology_dims(&spec, sign).unwrap(), (0, 0, 0));
    }

    #[test]
    fn twisted_euler_identity() {
        let spec = CoverSpec::new(2, FiniteGroup::cyclic(4).unwrap(), vec![1, 0, 0, 0]).unwrap();
        for rep in catalog_reps(spec.group()).unwrap() {
            let (h0, h1, h2) = twisted_homology_dims(&spec, &rep).unwrap();
            let d = rep.dim as i64;
            assert_eq!(
                h0 as i64 - h1 as i64 + h2 as i64,
                (2 - 2 * spec.base_genus() as i64) * d,
                "{}",
                rep.label
            );
        }
    }

    #[test]
    fn regular_representation_twisted_dims() {
        // The regular representation recovers the cover's own homology.
        let group = FiniteGroup::cyclic(3).unwrap();
        let spec = CoverSpec::new(2, group.clone(), vec![1, 0, 0, 0]).unwrap();
        // Regular representation: permutation matrices of left translation.
        let mats: Vec<RationalMatrix> = group
            .elements()
            .map(|g| {
                RationalMatrix::from_fn(3, 3, |i, j| {
                    if i == group.mul(g, j) {
                        Rat::one()
                    } else {
                        Rat::zero()
                    }
                })
            })
            .collect();
        crate::rep::validate_homomorphism(&group, &mats).unwrap();
        let reg = RationalRep {
            label: "regular".into(),
            dim: 3,
            matrices: mats,
            endo_dim: 3,
        };
        let (h0, h1, h2) = twisted_homology_dims(&spec, &reg).unwrap();
        assert_eq!((h0, h1, h2), (1, 2 + 2 * 3, 1));
    }

    #[test]
    fn deck_action_is_free_permutation() {
        let spec = CoverSpec::new(2, FiniteGroup::cyclic(3).unwrap(), vec![1, 0, 0, 0]).unwrap();
        let complex = build_cover(spec).unwrap();
        let group = complex.spec().group().clone();
        for g in group.elements() {
            let perm = complex.deck_edge_permutation(g);
            let mut seen = vec![false; perm.len()];
            for &p in &perm {
                assert!(!seen[p]);
                seen[p] = true;
            }
            if g != group.identity() {
                assert!(perm.iter().enumerate().all(|(i, &p)| i != p));
            }
        }
    }
}
