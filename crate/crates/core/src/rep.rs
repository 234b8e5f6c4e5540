//! Irreducible rational representation catalogs, central idempotents of
//! the group algebra, and invariant-form averaging.
//!
//! Cyclotomic scalars are realized as multiplication operators on the
//! power basis of `Q[x]/Φ_d`, so a primitive root of order `d` is the
//! companion matrix of the d-th cyclotomic polynomial and every catalog
//! entry stays inside exact rational matrices.

use crate::group::{Family, FiniteGroup};
use crate::linalg::{rat, Rat, RationalMatrix, Subspace};
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RepError {
    #[error("no built-in representation catalog for {0}; supply representations explicitly")]
    UnsupportedFamily(String),
    #[error("representation catalog is incomplete: sum dim^2/endo = {got}, group order = {want}")]
    IncompleteCatalog { got: String, want: usize },
    #[error("matrices do not define a homomorphism at pair ({0}, {1})")]
    NotAHomomorphism(usize, usize),
    #[error("generator images: expected {expected} matrices of size {dim}x{dim}")]
    BadGeneratorImages { expected: usize, dim: usize },
    #[error("generator images do not extend to the whole group")]
    NotGenerating,
    #[error("idempotent validation failed: {0}")]
    IdempotentCheck(String),
}

// ---------------------------------------------------------------------
// Cyclotomic machinery
// ---------------------------------------------------------------------

fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// Exact division of polynomials, panicking on a nonzero remainder.
fn poly_div_exact(num: &[Rat], den: &[Rat]) -> Vec<Rat> {
    let mut rem: Vec<Rat> = num.to_vec();
    let dn = den.len() - 1;
    let lead = den[dn].clone();
    assert!(!lead.is_zero());
    let mut quot = vec![Rat::zero(); rem.len() - dn];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + dn] / &lead;
        if !c.is_zero() {
            for (i, d) in den.iter().enumerate() {
                let v = &rem[k + i] - &c * d;
                rem[k + i] = v;
            }
        }
        quot[k] = c;
    }
    assert!(rem.iter().all(|x| x.is_zero()), "polynomial division not exact");
    quot
}

/// Monic coefficients (low to high) of the d-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(d: usize) -> Vec<Rat> {
    assert!(d >= 1);
    // x^d - 1 divided by the product of the proper cyclotomic factors.
    let mut num = vec![Rat::zero(); d + 1];
    num[0] = -Rat::one();
    num[d] = Rat::one();
    let mut den = vec![Rat::one()];
    for e in 1..d {
        if d % e == 0 {
            den = poly_mul(&den, &cyclotomic_polynomial(e));
        }
    }
    poly_div_exact(&num, &den)
}

pub fn euler_phi(d: usize) -> usize {
    (1..=d).filter(|k| gcd(*k, d) == 1).count()
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Arithmetic in `Q(ζ_d)` on the power basis `1, ζ, …, ζ^(φ(d)-1)`.
pub struct Cyclotomic {
    pub order: usize,
    pub phi: usize,
    /// Coordinates of `ζ^i` for `i = 0 .. 2·order`.
    powers: Vec<Vec<Rat>>,
}

impl Cyclotomic {
    pub fn new(order: usize) -> Self {
        let modulus = cyclotomic_polynomial(order);
        let phi = modulus.len() - 1;
        let mut powers: Vec<Vec<Rat>> = Vec::with_capacity(2 * order + 1);
        let mut cur = vec![Rat::zero(); phi];
        cur[0] = Rat::one();
        powers.push(cur.clone());
        for _ in 0..2 * order {
            // Multiply by ζ: shift up, then reduce ζ^φ = -(c_0 + … + c_(φ-1)ζ^(φ-1)).
            let top = cur[phi - 1].clone();
            for i in (1..phi).rev() {
                cur[i] = cur[i - 1].clone();
            }
            cur[0] = Rat::zero();
            if !top.is_zero() {
                for i in 0..phi {
                    let v = &cur[i] - &top * &modulus[i];
                    cur[i] = v;
                }
            }
            powers.push(cur.clone());
        }
        Cyclotomic { order, phi, powers }
    }

    pub fn power(&self, k: i64) -> &[Rat] {
        let k = k.rem_euclid(self.order as i64) as usize;
        &self.powers[k]
    }

    /// Multiplication-by-`elem` operator on the power basis (columns are
    /// images of basis vectors).
    pub fn mult_matrix(&self, elem: &[Rat]) -> RationalMatrix {
        assert_eq!(elem.len(), self.phi);
        RationalMatrix::from_fn(self.phi, self.phi, |i, j| {
            // column j = coords of elem · ζ^j = Σ_k elem_k ζ^(k+j)
            let mut acc = Rat::zero();
            for (k, c) in elem.iter().enumerate() {
                if !c.is_zero() {
                    acc += c * &self.powers[k + j][i];
                }
            }
            acc
        })
    }

    /// Companion matrix of Φ_d: multiplication by ζ.
    pub fn zeta_matrix(&self) -> RationalMatrix {
        self.mult_matrix(&self.powers[1].clone())
    }

    pub fn zeta_power_matrix(&self, k: i64) -> RationalMatrix {
        self.mult_matrix(self.power(k))
    }

    /// The Q-linear map `ζ^j ↦ ζ^(-j)` (complex conjugation).
    pub fn conj_matrix(&self) -> RationalMatrix {
        RationalMatrix::from_fn(self.phi, self.phi, |i, j| {
            self.powers[(self.order - j) % self.order][i].clone()
        })
    }

    /// Coordinates of `ζ - ζ^(-1)`.
    pub fn zeta_minus_inverse(&self) -> Vec<Rat> {
        let plus = &self.powers[1];
        let minus = self.power(-1);
        plus.iter().zip(minus).map(|(a, b)| a - b).collect()
    }
}

// ---------------------------------------------------------------------
// Representations
// ---------------------------------------------------------------------

/// A rational representation given by one matrix per group element.
#[derive(Clone)]
pub struct RationalRep {
    pub label: String,
    pub dim: usize,
    /// `matrices[g]` for every element index; validated to satisfy
    /// `matrices[g]·matrices[h] = matrices[g·h]`.
    pub matrices: Vec<RationalMatrix>,
    /// Q-dimension of the commutant algebra, computed from the
    /// centralizer linear system.
    pub endo_dim: usize,
}

impl std::fmt::Debug for RationalRep {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "RationalRep({}, dim {}, endo {})", self.label, self.dim, self.endo_dim)
    }
}

impl RationalRep {
    pub fn apply_element(&self, g: usize) -> &RationalMatrix {
        &self.matrices[g]
    }
}

/// Extend generator images to the whole group by breadth-first products
/// and validate the homomorphism property exhaustively.
pub fn rep_from_generators(
    group: &FiniteGroup,
    gen_images: &[RationalMatrix],
    label: &str,
) -> Result<RationalRep, RepError> {
    let gens = group.generators();
    let dim = gen_images.first().map_or(1, |m| m.rows());
    if gen_images.len() != gens.len()
        || gen_images.iter().any(|m| m.rows() != dim || m.cols() != dim)
    {
        return Err(RepError::BadGeneratorImages {
            expected: gens.len(),
            dim,
        });
    }
    let mut matrices: Vec<Option<RationalMatrix>> = vec![None; group.order()];
    matrices[group.identity()] = Some(RationalMatrix::identity(dim));
    let mut frontier = vec![group.identity()];
    while let Some(g) = frontier.pop() {
        let mg = matrices[g].clone().unwrap();
        for (k, &gen) in gens.iter().enumerate() {
            let h = group.mul(g, gen);
            if matrices[h].is_none() {
                matrices[h] = Some(mg.mul(&gen_images[k]));
                frontier.push(h);
            }
        }
    }
    if matrices.iter().any(|m| m.is_none()) {
        return Err(RepError::NotGenerating);
    }
    let matrices: Vec<RationalMatrix> = matrices.into_iter().map(|m| m.unwrap()).collect();
    validate_homomorphism(group, &matrices)?;
    let endo_dim = commutant_basis(group, &matrices).len();
    Ok(RationalRep {
        label: label.to_string(),
        dim,
        matrices,
        endo_dim,
    })
}

pub fn validate_homomorphism(
    group: &FiniteGroup,
    matrices: &[RationalMatrix],
) -> Result<(), RepError> {
    assert_eq!(matrices.len(), group.order());
    let dim = matrices[group.identity()].rows();
    if matrices[group.identity()] != RationalMatrix::identity(dim) {
        return Err(RepError::NotAHomomorphism(group.identity(), group.identity()));
    }
    for a in group.elements() {
        for b in group.elements() {
            if matrices[a].mul(&matrices[b]) != matrices[group.mul(a, b)] {
                return Err(RepError::NotAHomomorphism(a, b));
            }
        }
    }
    Ok(())
}

/// Basis of `{X : X·M_g = M_g·X for all generators g}` — the commutant.
/// Commuting with the generators forces commuting with every element.
pub fn commutant_basis(group: &FiniteGroup, matrices: &[RationalMatrix]) -> Vec<RationalMatrix> {
    let dim = matrices[group.identity()].rows();
    if dim == 0 {
        return vec![];
    }
    let gens: Vec<usize> = if group.generators().is_empty() {
        vec![group.identity()]
    } else {
        group.generators().to_vec()
    };
    // Unknown X flattened row-major; equations (XM - MX)_(i,j) = 0.
    let mut rows = Vec::new();
    for &g in &gens {
        let m = &matrices[g];
        for i in 0..dim {
            for j in 0..dim {
                let mut row = vec![Rat::zero(); dim * dim];
                for l in 0..dim {
                    // + X_(i,l) M_(l,j)
                    row[i * dim + l] += m[(l, j)].clone();
                    // - M_(i,l) X_(l,j)
                    row[l * dim + j] -= m[(i, l)].clone();
                }
                rows.push(row);
            }
        }
    }
    let system = RationalMatrix::from_rows(rows);
    let kernel = system.kernel();
    (0..kernel.dim())
        .map(|i| {
            let v = kernel.basis().row(i);
            RationalMatrix::from_fn(dim, dim, |r, c| v[r * dim + c].clone())
        })
        .collect()
}

// ---------------------------------------------------------------------
// Catalogs
// ---------------------------------------------------------------------

/// Complete list of pairwise non-isomorphic irreducible rational
/// representations for the supported families.
pub fn catalog_reps(group: &FiniteGroup) -> Result<Vec<RationalRep>, RepError> {
    let reps = match group.family() {
        Family::Cyclic(n) => abelian_catalog(group, &[(n, group.generators()[0])]),
        Family::Product(n1, n2) => abelian_catalog(
            group,
            &[(n1, group.generators()[0]), (n2, group.generators()[1])],
        ),
        Family::Dihedral(order) => dihedral_catalog(group, order / 2)?,
        Family::Semidihedral(order) => semidihedral_catalog(group, order)?,
        Family::Quaternion(order) => quaternion_catalog(group, order)?,
        Family::Custom => {
            return Err(RepError::UnsupportedFamily("custom group".to_string()))
        }
    };
    check_dimension_identity(group, &reps)?;
    Ok(reps)
}

/// `Σ dim² / endo = |G|` — the computable shadow of the Wedderburn
/// decomposition, used as the completeness criterion for catalogs.
pub fn check_dimension_identity(
    group: &FiniteGroup,
    reps: &[RationalRep],
) -> Result<(), RepError> {
    let mut sum = Rat::zero();
    for rep in reps {
        sum += rat((rep.dim * rep.dim) as i64, rep.endo_dim as i64);
    }
    if sum != rat(group.order() as i64, 1) {
        return Err(RepError::IncompleteCatalog {
            got: sum.to_string(),
            want: group.order(),
        });
    }
    Ok(())
}

/// Irreducible rational representations of an abelian group presented by
/// cyclic generators: one per Galois orbit of characters. A character of
/// order `d` acts through powers of the companion matrix of Φ_d.
fn abelian_catalog(group: &FiniteGroup, factors: &[(usize, usize)]) -> Vec<RationalRep> {
    let ns: Vec<usize> = factors.iter().map(|&(n, _)| n).collect();
    // Enumerate exponent tuples; orbit representative = lexicographic min.
    let mut tuples: Vec<Vec<usize>> = vec![vec![]];
    for &n in &ns {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                (0..n).map(move |a| {
                    let mut t = t.clone();
                    t.push(a);
                    t
                })
            })
            .collect();
    }
    let char_order = |t: &[usize]| -> usize {
        t.iter()
            .zip(&ns)
            .map(|(&a, &n)| n / gcd(a, n))
            .fold(1, |acc, o| acc / gcd(acc, o) * o)
    };
    let mut seen: Vec<Vec<usize>> = Vec::new();
    let mut reps = Vec::new();
    for t in &tuples {
        if seen.contains(t) {
            continue;
        }
        let d = char_order(t);
        // Galois orbit {k·t : gcd(k, d) = 1}.
        let mut orbit: Vec<Vec<usize>> = Vec::new();
        for k in 1..=d {
            if gcd(k, d) != 1 {
                continue;
            }
            let kt: Vec<usize> = t.iter().zip(&ns).map(|(&a, &n)| (k * a) % n).collect();
            if !orbit.contains(&kt) {
                orbit.push(kt);
            }
        }
        seen.extend(orbit.clone());

        let cyc = Cyclotomic::new(d);
        // ζ_n^a = ζ_d^(a·d/n) for each factor.
        let gen_exponents: Vec<usize> = t
            .iter()
            .zip(&ns)
            .map(|(&a, &n)| (a * d / n) % d)
            .collect();
        let label = if d == 1 {
            "trivial".to_string()
        } else if factors.len() == 1 {
            format!("zeta{d}")
        } else {
            format!("chi{}_{}", t[0], t[1])
        };
        let gen_images: Vec<RationalMatrix> = gen_exponents
            .iter()
            .map(|&e| cyc.zeta_power_matrix(e as i64))
            .collect();
        let rep = rep_from_generators(group, &gen_images, &label)
            .expect("abelian character matrices form a representation");
        reps.push(rep);
    }
    reps.sort_by(|a, b| (a.dim, a.label.clone()).cmp(&(b.dim, b.label.clone())));
    reps
}

fn linear_characters(
    group: &FiniteGroup,
    pairs: &[(i64, i64, &str)],
) -> Result<Vec<RationalRep>, RepError> {
    pairs
        .iter()
        .map(|&(ex, ey, label)| {
            let images = vec![
                RationalMatrix::from_rows(vec![vec![rat(ex, 1)]]),
                RationalMatrix::from_rows(vec![vec![rat(ey, 1)]]),
            ];
            rep_from_generators(group, &images, label)
        })
        .collect()
}

/// Dihedral group of rotation order `m`: linear characters plus, for each
/// divisor `d ≥ 3` of `m`, the representation on `Q(ζ_d)` where the
/// rotation multiplies by ζ and the reflection conjugates.
fn dihedral_catalog(group: &FiniteGroup, m: usize) -> Result<Vec<RationalRep>, RepError> {
    let mut reps = if m % 2 == 0 {
        linear_characters(
            group,
            &[
                (1, 1, "trivial"),
                (1, -1, "sign_y"),
                (-1, 1, "sign_x"),
                (-1, -1, "sign_xy"),
            ],
        )?
    } else {
        linear_characters(group, &[(1, 1, "trivial"), (1, -1, "sign_y")])?
    };
    for d in 3..=m {
        if m % d != 0 {
            continue;
        }
        let cyc = Cyclotomic::new(d);
        let images = vec![cyc.zeta_matrix(), cyc.conj_matrix()];
        reps.push(rep_from_generators(group, &images, &format!("rot{d}"))?);
    }
    Ok(reps)
}

/// Shared linear + dihedral-quotient part for the order-2^n families with
/// presentation generators (x, y); `dq` is the largest rotation order of
/// a dihedral quotient (2^(n-2)).
fn two_group_common(group: &FiniteGroup, dq: usize) -> Result<Vec<RationalRep>, RepError> {
    let mut reps = linear_characters(
        group,
        &[
            (1, 1, "trivial"),
            (1, -1, "sign_y"),
            (-1, 1, "sign_x"),
            (-1, -1, "sign_xy"),
        ],
    )?;
    let mut d = 4;
    while d <= dq {
        let cyc = Cyclotomic::new(d);
        let images = vec![cyc.zeta_matrix(), cyc.conj_matrix()];
        reps.push(rep_from_generators(group, &images, &format!("rot{d}"))?);
        d *= 2;
    }
    Ok(reps)
}

/// Semidihedral of order 2^n: the faithful representation is carved out
/// of `Q(ζ)²` (ζ of order 2^(n-1)) with `x(u,v) = (ζu, -ζ⁻¹v)` and
/// `y(u,v) = (v,u)`, restricted to the invariant subspace generated by
/// `(1,1)` over `Q(ζ - ζ⁻¹)`.
fn semidihedral_catalog(group: &FiniteGroup, order: usize) -> Result<Vec<RationalRep>, RepError> {
    let m = order / 2;
    let mut reps = two_group_common(group, m / 2)?;

    let cyc = Cyclotomic::new(m);
    let phi = cyc.phi;
    let z = cyc.zeta_matrix();
    let z_inv_neg = cyc.zeta_power_matrix(-1).neg();
    let big_x = RationalMatrix::block_diag(&[&z, &z_inv_neg]);
    let big_y = RationalMatrix::from_fn(2 * phi, 2 * phi, |i, j| {
        if (i + phi) % (2 * phi) == j {
            Rat::one()
        } else {
            Rat::zero()
        }
    });
    let mu = cyc.mult_matrix(&cyc.zeta_minus_inverse());
    let big_mu = RationalMatrix::block_diag(&[&mu, &mu]);

    let mut seed = vec![Rat::zero(); 2 * phi];
    seed[0] = Rat::one();
    seed[phi] = Rat::one();
    let e = stable_subspace(2 * phi, &[seed], &[&big_x, &big_y, &big_mu]);
    let rx = restrict_operator(&big_x, &e);
    let ry = restrict_operator(&big_y, &e);
    reps.push(rep_from_generators(group, &[rx, ry], "faithful")?);
    Ok(reps)
}

/// Generalized quaternion of order 2^n: the faithful representation is
/// all of `Q(ζ)²` (ζ of order 2^(n-1)) with `x(u,v) = (ζu, ζ⁻¹v)` and
/// `y(u,v) = (-v, u)`.
fn quaternion_catalog(group: &FiniteGroup, order: usize) -> Result<Vec<RationalRep>, RepError> {
    let m = order / 2;
    let mut reps = two_group_common(group, m / 2)?;

    let cyc = Cyclotomic::new(m);
    let phi = cyc.phi;
    let big_x = RationalMatrix::block_diag(&[&cyc.zeta_matrix(), &cyc.zeta_power_matrix(-1)]);
    let big_y = RationalMatrix::from_fn(2 * phi, 2 * phi, |i, j| {
        if i < phi && j == i + phi {
            -Rat::one()
        } else if i >= phi && j == i - phi {
            Rat::one()
        } else {
            Rat::zero()
        }
    });
    reps.push(rep_from_generators(group, &[big_x, big_y], "faithful")?);
    Ok(reps)
}

/// Smallest subspace containing the seeds and stable under the given
/// column-convention operators.
fn stable_subspace(
    ambient: usize,
    seeds: &[Vec<Rat>],
    operators: &[&RationalMatrix],
) -> Subspace {
    let mut span = Subspace::zero(ambient);
    let mut worklist: Vec<Vec<Rat>> = seeds.to_vec();
    while let Some(v) = worklist.pop() {
        if span.contains_vector(&v) {
            continue;
        }
        span = span
            .sum(&Subspace::from_rows(ambient, vec![v.clone()]))
            .unwrap();
        for op in operators {
            // Column convention: the image of v (as a column) is op·vᵀ.
            worklist.push(op.transpose().act_on_row(&v));
        }
    }
    span
}

/// Matrix of a stable operator in the coordinates of a subspace basis:
/// solves `Bᵀ·R = M·Bᵀ` for R.
fn restrict_operator(m: &RationalMatrix, space: &Subspace) -> RationalMatrix {
    let bt = space.basis().transpose();
    let target = m.mul(&bt);
    solve_columns(&bt, &target).expect("operator does not stabilize the subspace")
}

/// Solve `A·X = C` for X when A has full column rank.
pub fn solve_columns(a: &RationalMatrix, c: &RationalMatrix) -> Option<RationalMatrix> {
    let k = a.cols();
    let (red, pivots) = a.hstack(c).rref();
    if pivots.len() < k || pivots[..k] != (0..k).collect::<Vec<_>>()[..] {
        return None;
    }
    if pivots.len() > k {
        return None;
    }
    Some(red.submatrix(0..k, k..k + c.cols()))
}

// ---------------------------------------------------------------------
// Group algebra
// ---------------------------------------------------------------------

/// Element of `Q[G]` as a coefficient vector indexed by element index.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    pub coeffs: Vec<Rat>,
}

impl std::fmt::Debug for GroupAlgebraElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(g, c)| format!("{c}·[{g}]"))
            .collect();
        write!(f, "{}", if terms.is_empty() { "0".into() } else { terms.join(" + ") })
    }
}

impl GroupAlgebraElement {
    pub fn zero(order: usize) -> Self {
        GroupAlgebraElement {
            coeffs: vec![Rat::zero(); order],
        }
    }

    pub fn delta(order: usize, g: usize) -> Self {
        let mut e = Self::zero(order);
        e.coeffs[g] = Rat::one();
        e
    }

    pub fn one(group: &FiniteGroup) -> Self {
        Self::delta(group.order(), group.identity())
    }

    pub fn add(&self, other: &Self) -> Self {
        GroupAlgebraElement {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        GroupAlgebraElement {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, s: &Rat) -> Self {
        GroupAlgebraElement {
            coeffs: self.coeffs.iter().map(|c| s * c).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Convolution product in `Q[G]`.
    pub fn mul(&self, other: &Self, group: &FiniteGroup) -> Self {
        let mut out = Self::zero(group.order());
        for (g, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (h, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[group.mul(g, h)] += a * b;
                }
            }
        }
        out
    }

    /// The standard involution `Σ c_g·g ↦ Σ c_g·g⁻¹`.
    pub fn conj(&self, group: &FiniteGroup) -> Self {
        let mut out = Self::zero(group.order());
        for (g, c) in self.coeffs.iter().enumerate() {
            out.coeffs[group.inv(g)] = c.clone();
        }
        out
    }

    pub fn is_central(&self, group: &FiniteGroup) -> bool {
        group.elements().all(|g| {
            let d = Self::delta(group.order(), g);
            self.mul(&d, group) == d.mul(self, group)
        })
    }

    /// `Σ c_g · M_g` through a list of per-element matrices.
    pub fn apply(&self, matrices: &[RationalMatrix]) -> RationalMatrix {
        let dim = matrices[0].rows();
        let mut out = RationalMatrix::zeros(dim, dim);
        for (g, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&matrices[g].scale(c));
            }
        }
        out
    }

    /// Coefficientwise pairing `⟨u, v⟩ = Σ_g u_g v_g`.
    pub fn pairing(&self, other: &Self) -> Rat {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a * b)
            .sum()
    }
}

/// Central idempotents cutting `Q[G]` into its simple blocks, computed
/// from catalog traces as `e_i = (dim/endo)/|G| · Σ_g tr(ρ_i(g⁻¹))·g`
/// and then validated rather than trusted.
pub fn central_idempotents(
    group: &FiniteGroup,
    reps: &[RationalRep],
) -> Result<Vec<GroupAlgebraElement>, RepError> {
    check_dimension_identity(group, reps)?;
    let order = group.order();
    let mut idempotents = Vec::with_capacity(reps.len());
    for rep in reps {
        let c = rat(rep.dim as i64, rep.endo_dim as i64) / rat(order as i64, 1);
        let mut e = GroupAlgebraElement::zero(order);
        for g in group.elements() {
            e.coeffs[g] = &c * &rep.matrices[group.inv(g)].trace();
        }
        idempotents.push(e);
    }
    // Validate: orthogonal idempotents summing to 1, central, acting as
    // identity/zero through the catalog.
    let mut sum = GroupAlgebraElement::zero(order);
    for e in &idempotents {
        sum = sum.add(e);
    }
    if sum != GroupAlgebraElement::one(group) {
        return Err(RepError::IdempotentCheck("sum is not 1".into()));
    }
    for (i, e) in idempotents.iter().enumerate() {
        if e.mul(e, group) != *e {
            return Err(RepError::IdempotentCheck(format!("e_{i} not idempotent")));
        }
        if !e.is_central(group) {
            return Err(RepError::IdempotentCheck(format!("e_{i} not central")));
        }
        for (j, f) in idempotents.iter().enumerate() {
            if i != j && !e.mul(f, group).is_zero() {
                return Err(RepError::IdempotentCheck(format!(
                    "e_{i}·e_{j} is not zero"
                )));
            }
        }
        for (j, rep) in reps.iter().enumerate() {
            let img = e.apply(&rep.matrices);
            let want = if i == j {
                RationalMatrix::identity(rep.dim)
            } else {
                RationalMatrix::zeros(rep.dim, rep.dim)
            };
            if img != want {
                return Err(RepError::IdempotentCheck(format!(
                    "e_{i} acts wrongly through representation {j}"
                )));
            }
        }
    }
    Ok(idempotents)
}

/// Group-average of the standard scalar product: symmetric positive
/// definite `B` with `M_g·B·M_gᵀ = B` for every `g`.
pub fn averaged_invariant_form(group: &FiniteGroup, rep: &RationalRep) -> RationalMatrix {
    let dim = rep.dim;
    let mut b = RationalMatrix::zeros(dim, dim);
    for g in group.elements() {
        let m = &rep.matrices[g];
        b = b.add(&m.mul(&m.transpose()));
    }
    let b = b.scale(&rat(1, group.order() as i64));
    debug_assert!(b.is_symmetric());
    b
}

/// Validation of the trace pairing on a simple block of `Q[G]`:
/// `⟨u, v⟩ = n_i/|G| · tr(ρ(u)·ρ(v)*)` where `*` is the adjoint for the
/// averaged invariant form and `n_i = dim/endo`. Pins down that the
/// averaged form realizes the block's Hermitian structure.
pub fn adjoint_trace_identity_holds(group: &FiniteGroup, reps: &[RationalRep]) -> Result<(), String> {
    let idempotents = central_idempotents(group, reps).map_err(|e| e.to_string())?;
    let order = group.order();
    for (rep, e) in reps.iter().zip(&idempotents) {
        let b = averaged_invariant_form(group, rep);
        let b_inv = b.inverse().map_err(|_| "averaged form is singular".to_string())?;
        let n_i = rat(rep.dim as i64, rep.endo_dim as i64);
        let scale = &n_i / rat(order as i64, 1);
        for a_elt in group.elements() {
            let u = e.mul(&GroupAlgebraElement::delta(order, a_elt), group);
            let rho_u = u.apply(&rep.matrices);
            for b_elt in group.elements() {
                let v = e.mul(&GroupAlgebraElement::delta(order, b_elt), group);
                let rho_v = v.apply(&rep.matrices);
                let adjoint = b.mul(&rho_v.transpose()).mul(&b_inv);
                let rhs = &scale * &rho_u.mul(&adjoint).trace();
                let lhs = u.pairing(&v);
                if lhs != rhs {
                    return Err(format!(
                        "trace pairing mismatch on block {} at pair ({a_elt}, {b_elt}): {lhs} vs {rhs}",
                        rep.label
                    ));
                }
            }
        }
    }
    Ok(())
}
