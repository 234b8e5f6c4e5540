//! Symplectic modules over a finite group: perpendiculars, coisotropic
//! reduction, the diagonal Lagrangian of Witt cancellation, transversal
//! averaging, hyperbolic modules, opposites, direct sums, induction from
//! a subgroup, and the group-ring-valued form.
//!
//! Every constructor re-verifies the full invariant set (skewness,
//! nondegeneracy, homomorphism property, form preservation) exhaustively
//! over the group, so a value of [`SymplecticGModule`] is trustworthy by
//! construction.

use crate::group::FiniteGroup;
use crate::linalg::{rat, subquotient, Rat, RationalMatrix, Subspace};
use crate::rep::{GroupAlgebraElement, RationalRep};
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModuleError {
    #[error("form matrix must be square of the module dimension")]
    MalformedForm,
    #[error("symplectic form must be skew-symmetric")]
    NotSkew,
    #[error("symplectic form must be nondegenerate")]
    Degenerate,
    #[error("need one action matrix of the right size per group element")]
    MalformedAction,
    #[error("action is not a homomorphism at pair ({0}, {1})")]
    ActionNotHomomorphism(usize, usize),
    #[error("action of element {0} does not preserve the form")]
    ActionNotSymplectic(usize),
    #[error("modules are over different groups")]
    GroupMismatch,
    #[error("subspace has ambient dimension {got}, module has {want}")]
    AmbientMismatch { got: usize, want: usize },
    #[error("subspace is not invariant under the group action")]
    NotInvariant,
    #[error("subspace is not contained in its perpendicular")]
    NotIsotropic,
    #[error("not a verified invariant Lagrangian: {0}")]
    BadLagrangian(String),
    #[error("embedding is not an injective homomorphism")]
    BadEmbedding,
    #[error("internal verification failed (this should be impossible): {0}")]
    InternalCheck(String),
}

/// Symplectic form plus form-preserving group action on `Q^dim`.
#[derive(Clone)]
pub struct SymplecticGModule {
    group: FiniteGroup,
    dim: usize,
    omega: RationalMatrix,
    action: Vec<RationalMatrix>,
}

impl std::fmt::Debug for SymplecticGModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "SymplecticGModule(dim {}, group {:?})",
            self.dim, self.group
        )
    }
}

impl SymplecticGModule {
    /// Validates all module invariants exhaustively.
    pub fn new(
        group: FiniteGroup,
        omega: RationalMatrix,
        action: Vec<RationalMatrix>,
    ) -> Result<Self, ModuleError> {
        let dim = omega.rows();
        if !omega.is_square() {
            return Err(ModuleError::MalformedForm);
        }
        if !omega.is_skew_symmetric() {
            return Err(ModuleError::NotSkew);
        }
        if dim > 0 && omega.inverse().is_err() {
            return Err(ModuleError::Degenerate);
        }
        // Nondegenerate skew forms only exist in even dimension; the rank
        // argument makes this a consequence, but we check directly.
        if dim % 2 != 0 {
            return Err(ModuleError::Degenerate);
        }
        if action.len() != group.order()
            || action.iter().any(|m| m.rows() != dim || m.cols() != dim)
        {
            return Err(ModuleError::MalformedAction);
        }
        if action[group.identity()] != RationalMatrix::identity(dim) {
            return Err(ModuleError::ActionNotHomomorphism(
                group.identity(),
                group.identity(),
            ));
        }
        for a in group.elements() {
            for b in group.elements() {
                if action[a].mul(&action[b]) != action[group.mul(a, b)] {
                    return Err(ModuleError::ActionNotHomomorphism(a, b));
                }
            }
        }
        for g in group.elements() {
            if action[g].mul(&omega).mul(&action[g].transpose()) != omega {
                return Err(ModuleError::ActionNotSymplectic(g));
            }
        }
        Ok(SymplecticGModule {
            group,
            dim,
            omega,
            action,
        })
    }

    /// Standard symplectic space with `pairs` hyperbolic pairs
    /// `(e_1,e_2), (e_3,e_4), …` and trivial group action.
    pub fn standard(pairs: usize) -> Self {
        let group = FiniteGroup::cyclic(1).expect("trivial group");
        let omega = standard_form(pairs);
        let dim = 2 * pairs;
        SymplecticGModule::new(group, omega, vec![RationalMatrix::identity(dim)])
            .expect("standard module is valid")
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn omega(&self) -> &RationalMatrix {
        &self.omega
    }

    pub fn action(&self, g: usize) -> &RationalMatrix {
        &self.action[g]
    }

    pub fn action_matrices(&self) -> &[RationalMatrix] {
        &self.action
    }

    /// `ω(x, y) = x · Ω · yᵀ`.
    pub fn form(&self, x: &[Rat], y: &[Rat]) -> Rat {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let xo = self.omega.act_on_row(x); // x·Ω as row
        xo.iter().zip(y).map(|(a, b)| a * b).sum()
    }

    /// Image of a subspace under the action of `g`.
    pub fn translate(&self, s: &Subspace, g: usize) -> Subspace {
        s.apply(&self.action[g])
    }

    pub fn is_invariant(&self, s: &Subspace) -> bool {
        self.group.elements().all(|g| self.translate(s, g) == *s)
    }

    fn check_ambient(&self, s: &Subspace) -> Result<(), ModuleError> {
        if s.ambient_dim() != self.dim {
            return Err(ModuleError::AmbientMismatch {
                got: s.ambient_dim(),
                want: self.dim,
            });
        }
        Ok(())
    }

    /// `S^⊥ = {v : ω(v, s) = 0 for all s ∈ S}`.
    pub fn perp(&self, s: &Subspace) -> Result<Subspace, ModuleError> {
        self.check_ambient(s)?;
        // ω(v, s) = 0 for all basis rows s ⇔ (S·Ωᵀ)·vᵀ = 0.
        Ok(s.basis().mul(&self.omega.transpose()).kernel())
    }

    pub fn classify(&self, s: &Subspace) -> Result<SubspaceClass, ModuleError> {
        self.check_ambient(s)?;
        let perp = self.perp(s)?;
        let isotropic = perp.contains(s);
        let coisotropic = s.contains(&perp);
        Ok(SubspaceClass {
            isotropic,
            coisotropic,
            lagrangian: isotropic && coisotropic,
            g_invariant: self.is_invariant(s),
        })
    }

    /// Gram matrix of the form restricted to a subspace basis.
    pub fn gram(&self, s: &Subspace) -> RationalMatrix {
        s.basis().mul(&self.omega).mul(&s.basis().transpose())
    }

    pub fn is_isotropic(&self, s: &Subspace) -> bool {
        self.gram(s).is_zero()
    }

    /// Quotient `I^⊥ / I` for an invariant subspace `I ⊆ I^⊥`, carrying
    /// the descended form and action. `projection` maps `I^⊥` onto the
    /// quotient coordinates, `section` lifts them back.
    pub fn coisotropic_reduction(&self, i: &Subspace) -> Result<Reduction, ModuleError> {
        self.check_ambient(i)?;
        if !self.is_invariant(i) {
            return Err(ModuleError::NotInvariant);
        }
        let perp = self.perp(i)?;
        if !perp.contains(i) {
            return Err(ModuleError::NotIsotropic);
        }
        let q = subquotient(&perp, i).expect("I is inside its perpendicular");
        let section = q.section.clone();
        let projection = q.projection.clone();
        let omega = section.mul(&self.omega).mul(&section.transpose());
        let action = self
            .group
            .elements()
            .map(|g| section.mul(&self.action[g]).mul(&projection))
            .collect();
        let module = SymplecticGModule::new(self.group.clone(), omega, action)?;
        Ok(Reduction {
            module,
            projection,
            section,
            isotropic: i.clone(),
            perp,
        })
    }

    /// Negated form, same action.
    pub fn opposite(&self) -> Self {
        SymplecticGModule {
            group: self.group.clone(),
            dim: self.dim,
            omega: self.omega.neg(),
            action: self.action.clone(),
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self, ModuleError> {
        if self.group != other.group {
            return Err(ModuleError::GroupMismatch);
        }
        let omega = RationalMatrix::block_diag(&[&self.omega, &other.omega]);
        let action = self
            .group
            .elements()
            .map(|g| RationalMatrix::block_diag(&[&self.action[g], &other.action[g]]))
            .collect();
        SymplecticGModule::new(self.group.clone(), omega, action)
    }

    /// `L ⊕ L*` with the evaluation form: dimension `2·dim(ρ)`, form
    /// `[[0, I], [-I, 0]]`, action `g ↦ diag(ρ(g), (ρ(g)⁻¹)ᵀ)`.
    pub fn hyperbolic(group: &FiniteGroup, rep: &RationalRep) -> Result<Self, ModuleError> {
        let d = rep.dim;
        let omega = RationalMatrix::from_fn(2 * d, 2 * d, |i, j| {
            if j == i + d {
                Rat::one()
            } else if i == j + d {
                -Rat::one()
            } else {
                Rat::zero()
            }
        });
        let action = group
            .elements()
            .map(|g| {
                let m = &rep.matrices[g];
                let dual = rep.matrices[group.inv(g)].transpose();
                RationalMatrix::block_diag(&[m, &dual])
            })
            .collect();
        SymplecticGModule::new(group.clone(), omega, action)
    }

    /// First-summand Lagrangian of a hyperbolic module built from a
    /// representation of dimension `d`.
    pub fn hyperbolic_lagrangian(d: usize) -> Subspace {
        Subspace::full(d).embed(2 * d, 0)
    }

    /// Induction along an injective homomorphism `embedding: H → G`:
    /// one block of `self` per right coset `H·r`, form summed blockwise,
    /// `g` sending block `i` to block `j` with twist `h` where
    /// `r_i·g = h·r_j`. Coset representatives are the minimal element
    /// index per coset, ascending.
    pub fn induce(&self, group: &FiniteGroup, embedding: &[usize]) -> Result<Self, ModuleError> {
        let h_group = &self.group;
        if embedding.len() != h_group.order() {
            return Err(ModuleError::BadEmbedding);
        }
        let mut seen = vec![false; group.order()];
        for &img in embedding {
            if img >= group.order() || seen[img] {
                return Err(ModuleError::BadEmbedding);
            }
            seen[img] = true;
        }
        for a in h_group.elements() {
            for b in h_group.elements() {
                if embedding[h_group.mul(a, b)] != group.mul(embedding[a], embedding[b]) {
                    return Err(ModuleError::BadEmbedding);
                }
            }
        }
        let into_h = |g: usize| embedding.iter().position(|&img| img == g);
        let reps = group.right_coset_representatives(embedding);
        let t = reps.len();
        let d = self.dim;
        let dim = d * t;
        let blocks: Vec<&RationalMatrix> = (0..t).map(|_| &self.omega).collect();
        let omega = RationalMatrix::block_diag(&blocks);
        let mut action = Vec::with_capacity(group.order());
        for g in group.elements() {
            let mut m = RationalMatrix::zeros(dim, dim);
            for (i, &ri) in reps.iter().enumerate() {
                let s = group.mul(ri, g);
                let (j, h) = reps
                    .iter()
                    .enumerate()
                    .find_map(|(j, &rj)| {
                        into_h(group.mul(s, group.inv(rj))).map(|h| (j, h))
                    })
                    .expect("cosets partition the group");
                let block = &self.action[h];
                for r in 0..d {
                    for c in 0..d {
                        m[(i * d + r, j * d + c)] = block[(r, c)].clone();
                    }
                }
            }
            action.push(m);
        }
        SymplecticGModule::new(group.clone(), omega, action)
    }

    /// The group-ring-valued form `ω_G(x, y)`: coefficient of `g` is
    /// `ω(x, g·y)`.
    pub fn group_ring_form(&self, x: &[Rat], y: &[Rat]) -> GroupAlgebraElement {
        let mut out = GroupAlgebraElement::zero(self.group.order());
        for g in self.group.elements() {
            let gy = self.action[g].act_on_row(y); // the action of g on y
            out.coeffs[g] = self.form(x, &gy);
        }
        out
    }

    /// The skew-conjugation identity `ω_G(y,x) = -conj(ω_G(x,y))` under
    /// the involution `g ↦ g⁻¹`; holds for any form-preserving action.
    pub fn group_ring_form_skew_holds(&self, x: &[Rat], y: &[Rat]) -> bool {
        let lhs = self.group_ring_form(y, x);
        let rhs = self
            .group_ring_form(x, y)
            .conj(&self.group)
            .scale(&-Rat::one());
        lhs == rhs
    }

    /// Verify that `l` is a G-invariant Lagrangian, recomputing every
    /// check from scratch; failures carry witness vectors.
    pub fn verify_lagrangian(
        &self,
        l: &Subspace,
        provenance: &str,
    ) -> Result<LagrangianCertificate, CertificateFailure> {
        if l.ambient_dim() != self.dim {
            return Err(CertificateFailure::Ambient {
                expected: self.dim,
                got: l.ambient_dim(),
            });
        }
        if 2 * l.dim() != self.dim {
            return Err(CertificateFailure::Dimension {
                expected: self.dim / 2,
                got: l.dim(),
            });
        }
        let gram = self.gram(l);
        for i in 0..l.dim() {
            for j in 0..l.dim() {
                if !gram[(i, j)].is_zero() {
                    return Err(CertificateFailure::Isotropy {
                        value: gram[(i, j)].clone(),
                        left: l.basis().row_vec(i),
                        right: l.basis().row_vec(j),
                    });
                }
            }
        }
        for g in self.group.elements() {
            let image = self.translate(l, g);
            if image != *l {
                let row = (0..l.dim())
                    .find(|&i| !l.contains_vector(image.basis().row(i)))
                    .unwrap_or(0);
                return Err(CertificateFailure::Invariance {
                    element: g,
                    vector: l.basis().row_vec(row.min(l.dim().saturating_sub(1))),
                    image: image.basis().row_vec(row),
                });
            }
        }
        Ok(LagrangianCertificate {
            lagrangian: l.clone(),
            checks: CertificateChecks {
                dimension: true,
                isotropy: true,
                invariance: true,
            },
            provenance: provenance.to_string(),
        })
    }

    /// The diagonal Lagrangian of two reductions: the image of
    /// `I^⊥ ∩ J^⊥` inside `(I^⊥/I) ⊕ -(J^⊥/J)` is a G-invariant
    /// Lagrangian. Returns the direct-sum module and the verified
    /// certificate.
    pub fn diagonal_lagrangian(
        &self,
        i: &Subspace,
        j: &Subspace,
    ) -> Result<(SymplecticGModule, LagrangianCertificate), ModuleError> {
        let red_i = self.coisotropic_reduction(i)?;
        let red_j = self.coisotropic_reduction(j)?;
        let sum = red_i.module.direct_sum(&red_j.module.opposite())?;
        let both_perps = red_i
            .perp
            .intersect(&red_j.perp)
            .expect("same ambient dimension");
        let pair_projection = red_i.projection.hstack(&red_j.projection);
        let diag = both_perps.apply(&pair_projection);
        let cert = sum
            .verify_lagrangian(&diag, "diagonal of double reduction")
            .map_err(|f| ModuleError::InternalCheck(format!("diagonal construction: {f}")))?;
        Ok((sum, cert))
    }

    /// Given a verified invariant Lagrangian `L`, produce a G-invariant
    /// Lagrangian transverse to it: pick a deterministic Lagrangian
    /// complement, write each group translate as a graph over it, and
    /// average the graph maps. All claimed properties are re-verified.
    pub fn transverse_invariant_lagrangian(
        &self,
        l: &Subspace,
    ) -> Result<LagrangianCertificate, ModuleError> {
        self.verify_lagrangian(l, "input")
            .map_err(|f| ModuleError::BadLagrangian(f.to_string()))?;
        let k = l.dim();
        if k == 0 {
            return self
                .verify_lagrangian(&Subspace::zero(0), "transversal of zero module")
                .map_err(|f| ModuleError::InternalCheck(f.to_string()));
        }

        // Greedy complement C of L from the standard basis, then the
        // symplectic correction c_i ↦ c_i - ½ Σ_j ω(c_i, c_j)·l'_j with
        // (l'_j) the ω-dual basis of L, making the complement Lagrangian.
        let mut complement_rows: Vec<Vec<Rat>> = Vec::with_capacity(k);
        let mut span = l.clone();
        for e in 0..self.dim {
            if complement_rows.len() == k {
                break;
            }
            let mut v = vec![Rat::zero(); self.dim];
            v[e] = Rat::one();
            if !span.contains_vector(&v) {
                span = span
                    .sum(&Subspace::from_rows(self.dim, vec![v.clone()]))
                    .expect("same ambient");
                complement_rows.push(v);
            }
        }
        let c = RationalMatrix::from_rows(complement_rows);
        let pairing = l.basis().mul(&self.omega).mul(&c.transpose());
        let dual = pairing
            .inverse()
            .map_err(|_| ModuleError::InternalCheck("L x complement pairing degenerate".into()))?
            .mul(l.basis());
        let s = c.mul(&self.omega).mul(&c.transpose());
        let m0 = c.sub(&s.scale(&rat(1, 2)).mul(&dual));
        let m0_space = Subspace::from_matrix_rows(self.dim, &m0);
        if !m0.mul(&self.omega).mul(&m0.transpose()).is_zero()
            || m0_space.dim() != k
            || m0_space.intersect(l).expect("ambient").dim() != 0
        {
            return Err(ModuleError::InternalCheck(
                "symplectic correction did not produce a transverse Lagrangian".into(),
            ));
        }

        // Average the graph maps of the translates of M0 in V = M0 ⊕ L.
        let basis = m0.vstack(l.basis());
        let basis_inv = basis
            .inverse()
            .map_err(|_| ModuleError::InternalCheck("M0 ⊕ L is not all of V".into()))?;
        let mut average = RationalMatrix::zeros(k, k);
        for g in self.group.elements() {
            let translated = m0.mul(&self.action[g]);
            let coords = translated.mul(&basis_inv);
            let mu = coords.submatrix(0..k, 0..k);
            let lambda = coords.submatrix(0..k, k..2 * k);
            let graph = mu
                .inverse()
                .map_err(|_| {
                    ModuleError::InternalCheck(format!(
                        "translate by {g} is not transverse to L"
                    ))
                })?
                .mul(&lambda);
            average = average.add(&graph);
        }
        average = average.scale(&rat(1, self.group.order() as i64));
        let m_rows = m0.add(&average.mul(l.basis()));
        let m = Subspace::from_matrix_rows(self.dim, &m_rows);

        let cert = self
            .verify_lagrangian(&m, "graph averaging over a transverse Lagrangian")
            .map_err(|f| ModuleError::InternalCheck(format!("averaged transversal: {f}")))?;
        if m.intersect(l).expect("ambient").dim() != 0 {
            return Err(ModuleError::InternalCheck(
                "averaged transversal is not transverse".into(),
            ));
        }
        Ok(cert)
    }
}

/// Standard form with hyperbolic pairs `(e_1, e_2), (e_3, e_4), …`.
pub fn standard_form(pairs: usize) -> RationalMatrix {
    let block = RationalMatrix::from_i64(&[&[0, 1], &[-1, 0]]);
    let blocks: Vec<&RationalMatrix> = (0..pairs).map(|_| &block).collect();
    RationalMatrix::block_diag(&blocks)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubspaceClass {
    pub isotropic: bool,
    pub coisotropic: bool,
    pub lagrangian: bool,
    pub g_invariant: bool,
}

/// Output of [`SymplecticGModule::coisotropic_reduction`].
pub struct Reduction {
    pub module: SymplecticGModule,
    /// dim×k matrix sending a row vector of `I^⊥` to quotient coordinates.
    pub projection: RationalMatrix,
    /// k×dim matrix of representative lifts (a section of the projection).
    pub section: RationalMatrix,
    pub isotropic: Subspace,
    pub perp: Subspace,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateChecks {
    pub dimension: bool,
    pub isotropy: bool,
    pub invariance: bool,
}

/// A Lagrangian subspace together with the record of its re-verified
/// checks and the strategy that produced it.
#[derive(Debug, Clone)]
pub struct LagrangianCertificate {
    pub lagrangian: Subspace,
    pub checks: CertificateChecks,
    pub provenance: String,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CertificateFailure {
    #[error("ambient dimension {got}, expected {expected}")]
    Ambient { expected: usize, got: usize },
    #[error("dimension {got}, expected {expected}")]
    Dimension { expected: usize, got: usize },
    #[error("isotropy fails: ω(u, v) = {value} on witness pair")]
    Isotropy {
        value: Rat,
        left: Vec<Rat>,
        right: Vec<Rat>,
    },
    #[error("invariance fails under element {element}")]
    Invariance {
        element: usize,
        vector: Vec<Rat>,
        image: Vec<Rat>,
    },
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rint;
    use crate::rep::catalog_reps;

    fn q4_standard() -> SymplecticGModule {
        SymplecticGModule::standard(2)
    }

    #[test]
    fn perp_examples() {
        let v = q4_standard();
        assert_eq!(v.perp(&Subspace::zero(4)).unwrap(), Subspace::full(4));
        assert_eq!(v.perp(&Subspace::full(4)).unwrap(), Subspace::zero(4));
        let e1 = Subspace::from_rows(4, vec![vec![rint(1), rint(0), rint(0), rint(0)]]);
        let perp = v.perp(&e1).unwrap();
        assert_eq!(perp.dim(), 3);
        assert!(perp.contains_vector(&[rint(1), rint(0), rint(0), rint(0)]));
        assert!(perp.contains_vector(&[rint(0), rint(0), rint(1), rint(0)]));
        assert!(perp.contains_vector(&[rint(0), rint(0), rint(0), rint(1)]));
        assert!(!perp.contains_vector(&[rint(0), rint(1), rint(0), rint(0)]));
        // Double perp.
        assert_eq!(v.perp(&perp).unwrap(), e1);
    }

    #[test]
    fn classify_examples() {
        let q2 = SymplecticGModule::standard(1);
        let e1 = Subspace::from_rows(2, vec![vec![rint(1), rint(0)]]);
        let class = q2.classify(&e1).unwrap();
        assert!(class.isotropic && class.lagrangian && class.g_invariant);

        let v = q4_standard();
        let l = Subspace::from_rows(
            4,
            vec![
                vec![rint(1), rint(0), rint(0), rint(0)],
                vec![rint(0), rint(0), rint(1), rint(0)],
            ],
        );
        let class = v.classify(&l).unwrap();
        assert!(class.lagrangian);

        let class = v.classify(&Subspace::full(4)).unwrap();
        assert!(class.coisotropic && !class.isotropic);

        assert!(matches!(
            v.classify(&Subspace::full(3)),
            Err(ModuleError::AmbientMismatch { .. })
        ));
    }

    #[test]
    fn reduction_examples() {
        let v = q4_standard();
        // I = 0 reproduces V.
        let red = v.coisotropic_reduction(&Subspace::zero(4)).unwrap();
        assert_eq!(red.module.dim(), 4);
        assert_eq!(red.module.omega(), v.omega());

        // I = span{e1}: quotient is the second hyperbolic pair.
        let e1 = Subspace::from_rows(4, vec![vec![rint(1), rint(0), rint(0), rint(0)]]);
        let red = v.coisotropic_reduction(&e1).unwrap();
        assert_eq!(red.module.dim(), 2);
        assert_eq!(red.module.omega(), &standard_form(1));

        // I Lagrangian: quotient is zero.
        let l = Subspace::from_rows(
            4,
            vec![
                vec![rint(1), rint(0), rint(0), rint(0)],
                vec![rint(0), rint(0), rint(1), rint(0)],
            ],
        );
        let red = v.coisotropic_reduction(&l).unwrap();
        assert_eq!(red.module.dim(), 0);

        // Dimension law dim W = dim V - 2 dim I.
        assert_eq!(
            v.coisotropic_reduction(&e1).unwrap().module.dim(),
            v.dim() - 2 * e1.dim()
        );

        // Non-isotropic input is rejected.
        let bad = Subspace::from_rows(
            4,
            vec![
                vec![rint(1), rint(0), rint(0), rint(0)],
                vec![rint(0), rint(1), rint(0), rint(0)],
            ],
        );
        assert!(matches!(
            v.coisotropic_reduction(&bad),
            Err(ModuleError::NotIsotropic)
        ));
    }

    #[test]
    fn opposite_and_direct_sum() {
        let v = q4_standard();
        let opp = v.opposite();
        assert_eq!(opp.opposite().omega(), v.omega());
        let sum = v.direct_sum(&opp).unwrap();
        assert_eq!(sum.dim(), 8);
    }

    #[test]
    fn hyperbolic_examples() {
        let triv = FiniteGroup::cyclic(1).unwrap();
        let reps = catalog_reps(&triv).unwrap();
        let h = SymplecticGModule::hyperbolic(&triv, &reps[0]).unwrap();
        assert_eq!(h.dim(), 2);
        assert_eq!(h.omega(), &standard_form(1));

        // Regular representation of C2 (as matrices: identity and swap).
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let swap = RationalMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        let reg = crate::rep::rep_from_generators(&c2, &[swap], "regular").unwrap();
        let h = SymplecticGModule::hyperbolic(&c2, &reg).unwrap();
        assert_eq!(h.dim(), 4);
        let l_block = SymplecticGModule::hyperbolic_lagrangian(2);
        let cert = h.verify_lagrangian(&l_block, "first summand").unwrap();
        assert!(cert.checks.invariance);
    }

    #[test]
    fn diagonal_lagrangian_zero_reductions() {
        let v = q4_standard();
        let zero = Subspace::zero(4);
        let (sum, cert) = v.diagonal_lagrangian(&zero, &zero).unwrap();
        assert_eq!(sum.dim(), 8);
        assert_eq!(cert.lagrangian.dim(), 4);
        // The diagonal {(v, v)}.
        let mut diag_rows = Vec::new();
        for i in 0..4 {
            let mut row = vec![rint(0); 8];
            row[i] = rint(1);
            row[i + 4] = rint(1);
            diag_rows.push(row);
        }
        assert_eq!(cert.lagrangian, Subspace::from_rows(8, diag_rows));
    }

    #[test]
    fn diagonal_lagrangian_with_lagrangian_input() {
        let v = q4_standard();
        let l = Subspace::from_rows(
            4,
            vec![
                vec![rint(1), rint(0), rint(0), rint(0)],
                vec![rint(0), rint(0), rint(1), rint(0)],
            ],
        );
        let (sum, cert) = v.diagonal_lagrangian(&l, &Subspace::zero(4)).unwrap();
        // I^⊥/I = 0, so the sum is 0 ⊕ (-V) and the certificate is the
        // image of L^⊥ ∩ V = L inside -V.
        assert_eq!(sum.dim(), 4);
        assert_eq!(cert.lagrangian.dim(), 2);
    }

    #[test]
    fn transverse_trivial_group() {
        let q2 = SymplecticGModule::standard(1);
        let l = Subspace::from_rows(2, vec![vec![rint(1), rint(0)]]);
        let cert = q2.transverse_invariant_lagrangian(&l).unwrap();
        assert_eq!(
            cert.lagrangian,
            Subspace::from_rows(2, vec![vec![rint(0), rint(1)]])
        );
    }

    #[test]
    fn transverse_c2_swap() {
        // C2 swaps the two hyperbolic pairs of Q^4.
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let swap = RationalMatrix::from_i64(&[
            &[0, 0, 1, 0],
            &[0, 0, 0, 1],
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
        ]);
        let v = SymplecticGModule::new(
            c2,
            standard_form(2),
            vec![RationalMatrix::identity(4), swap],
        )
        .unwrap();
        let l = Subspace::from_rows(
            4,
            vec![
                vec![rint(1), rint(0), rint(1), rint(0)],
                vec![rint(0), rint(1), rint(0), rint(-1)],
            ],
        );
        let cert = v.transverse_invariant_lagrangian(&l).unwrap();
        assert_eq!(cert.lagrangian.intersect(&l).unwrap().dim(), 0);
        assert!(v.is_invariant(&cert.lagrangian));
    }

    #[test]
    fn transverse_minus_identity() {
        // C2 acting by -identity fixes every line.
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let v = SymplecticGModule::new(
            c2,
            standard_form(1),
            vec![
                RationalMatrix::identity(2),
                RationalMatrix::identity(2).neg(),
            ],
        )
        .unwrap();
        let l = Subspace::from_rows(2, vec![vec![rint(1), rint(0)]]);
        let cert = v.transverse_invariant_lagrangian(&l).unwrap();
        assert_eq!(
            cert.lagrangian,
            Subspace::from_rows(2, vec![vec![rint(0), rint(1)]])
        );
    }

    #[test]
    fn induction_examples() {
        // H = G: same dimension and form.
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let swap = RationalMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        let reg = crate::rep::rep_from_generators(&c2, &[swap], "regular").unwrap();
        let v = SymplecticGModule::hyperbolic(&c2, &reg).unwrap();
        let same = v.induce(&c2.clone(), &[0, 1]).unwrap();
        assert_eq!(same.dim(), v.dim());

        // H trivial inside C2: the induced module has G swapping blocks.
        let triv = FiniteGroup::cyclic(1).unwrap();
        let q2 = SymplecticGModule::standard(1);
        let ind = q2.induce(&c2, &[0]).unwrap();
        assert_eq!(ind.dim(), 4);
        let x_action = ind.action(1);
        assert_eq!(
            x_action,
            &RationalMatrix::from_i64(&[
                &[0, 0, 1, 0],
                &[0, 0, 0, 1],
                &[1, 0, 0, 0],
                &[0, 1, 0, 0],
            ])
        );
        let _ = triv;

        // C2 inside C4 at index 2.
        let c4 = FiniteGroup::cyclic(4).unwrap();
        let ind = v.induce(&c4, &[0, 2]).unwrap();
        assert_eq!(ind.dim(), 8);

        // Bad embedding: not a homomorphism.
        assert!(matches!(
            v.induce(&c4, &[0, 1]),
            Err(ModuleError::BadEmbedding)
        ));
    }

    #[test]
    fn group_ring_form_examples() {
        // Trivial group: single coefficient ω(x, y).
        let q2 = SymplecticGModule::standard(1);
        let x = [rint(1), rint(0)];
        let y = [rint(0), rint(1)];
        let w = q2.group_ring_form(&x, &y);
        assert_eq!(w.coeffs, vec![rint(1)]);

        // Skewness: coefficient of the identity vanishes on x = y.
        let w = q2.group_ring_form(&x, &x);
        assert!(w.coeffs[0].is_zero());

        // Hyperbolic over the regular representation of C2.
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let swap = RationalMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        let reg = crate::rep::rep_from_generators(&c2, &[swap], "regular").unwrap();
        let h = SymplecticGModule::hyperbolic(&c2, &reg).unwrap();
        let x = [rint(1), rint(0), rint(0), rint(0)];
        let y = [rint(0), rint(0), rint(1), rint(0)];
        assert!(h.group_ring_form_skew_holds(&x, &y));
        // Composing with the delta pairing at the identity recovers ω.
        assert_eq!(h.group_ring_form(&x, &y).coeffs[0], h.form(&x, &y));
    }

    #[test]
    fn degenerate_forms_rejected() {
        let c1 = FiniteGroup::cyclic(1).unwrap();
        let omega = RationalMatrix::zeros(2, 2);
        assert!(matches!(
            SymplecticGModule::new(c1.clone(), omega, vec![RationalMatrix::identity(2)]),
            Err(ModuleError::Degenerate)
        ));
        let not_skew = RationalMatrix::identity(2);
        assert!(matches!(
            SymplecticGModule::new(c1, not_skew, vec![RationalMatrix::identity(2)]),
            Err(ModuleError::NotSkew)
        ));
    }

    #[test]
    fn zero_dimensional_module_is_legal() {
        let c1 = FiniteGroup::cyclic(1).unwrap();
        let v = SymplecticGModule::new(
            c1,
            RationalMatrix::zeros(0, 0),
            vec![RationalMatrix::zeros(0, 0)],
        )
        .unwrap();
        assert_eq!(v.dim(), 0);
        let cert = v.verify_lagrangian(&Subspace::zero(0), "zero").unwrap();
        assert_eq!(cert.lagrangian.dim(), 0);
    }
}
