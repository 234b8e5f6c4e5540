//! Finite groups as validated multiplication tables.
//!
//! Elements are indices `0..order`. Constructors for the special families
//! fix a canonical enumeration so that certificates are reproducible:
//! rotation-type generators enumerate powers first, reflection-type
//! elements follow as `x^i·y`.

use std::fmt;

/// Everything here is desk-scale; tables keep it exact and simple.
pub const MAX_ORDER: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("group order {0} exceeds the supported maximum {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("multiplication table is not square or has out-of-range entries")]
    MalformedTable,
    #[error("no identity element in table")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("associativity fails at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("word uses generator {0} but only {1} are assigned")]
    UnassignedGenerator(usize, usize),
    #[error("generator set must be nonempty")]
    EmptyGenerators,
    #[error("permutation generators must be bijections on the same set")]
    MalformedPermutation,
}

/// Family metadata recorded by the constructors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Cyclic of order `n`.
    Cyclic(usize),
    /// Dihedral of total order `2m` (rotation order `m`).
    Dihedral(usize),
    /// Semidihedral of total order `2^n`, `n ≥ 4`.
    Semidihedral(usize),
    /// Generalized quaternion of total order `2^n`, `n ≥ 3`.
    Quaternion(usize),
    /// Direct product of two cyclic groups.
    Product(usize, usize),
    Custom,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Cyclic(n) => write!(f, "cyclic({n})"),
            Family::Dihedral(o) => write!(f, "dihedral({o})"),
            Family::Semidihedral(o) => write!(f, "semidihedral({o})"),
            Family::Quaternion(o) => write!(f, "quaternion({o})"),
            Family::Product(a, b) => write!(f, "product({a},{b})"),
            Family::Custom => write!(f, "custom"),
        }
    }
}

/// A finite group given by its full multiplication table.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
    identity: usize,
    generators: Vec<usize>,
    generator_names: Vec<String>,
    family: Family,
}

impl FiniteGroup {
    /// Validates the group axioms exhaustively and packages the table.
    pub fn from_table(
        table: Vec<Vec<usize>>,
        generators: Vec<usize>,
        generator_names: Vec<String>,
        family: Family,
    ) -> Result<Self, GroupError> {
        let order = table.len();
        if order == 0 || table.iter().any(|r| r.len() != order) {
            return Err(GroupError::MalformedTable);
        }
        if order > MAX_ORDER {
            return Err(GroupError::OrderTooLarge(order));
        }
        let mut mul = Vec::with_capacity(order * order);
        for row in &table {
            for &v in row {
                if v >= order {
                    return Err(GroupError::MalformedTable);
                }
                mul.push(v);
            }
        }
        let at = |a: usize, b: usize| mul[a * order + b];
        let identity = (0..order)
            .find(|&e| (0..order).all(|a| at(e, a) == a && at(a, e) == a))
            .ok_or(GroupError::NoIdentity)?;
        let mut inv = vec![usize::MAX; order];
        for a in 0..order {
            inv[a] = (0..order)
                .find(|&b| at(a, b) == identity && at(b, a) == identity)
                .ok_or(GroupError::NoInverse(a))?;
        }
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if at(at(a, b), c) != at(a, at(b, c)) {
                        return Err(GroupError::NotAssociative(a, b, c));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            order,
            mul,
            inv,
            identity,
            generators,
            generator_names,
            family,
        })
    }

    /// Cyclic group of order `n ≥ 1`; element `i` is `x^i`.
    pub fn cyclic(n: usize) -> Result<Self, GroupError> {
        if n < 1 {
            return Err(GroupError::ParameterOutOfRange(
                "cyclic order must be >= 1".into(),
            ));
        }
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        Self::from_table(table, vec![1 % n], vec!["x".into()], Family::Cyclic(n))
    }

    /// Dihedral group of total order `2m`, `m ≥ 2`, presented as
    /// `x^m = y^2 = 1`, `y·x·y⁻¹ = x⁻¹`. Element `i < m` is `x^i`,
    /// element `m + i` is `x^i·y`. Order 6 gives the symmetric group on
    /// three letters.
    pub fn dihedral(order: usize) -> Result<Self, GroupError> {
        if order < 4 || order % 2 != 0 {
            return Err(GroupError::ParameterOutOfRange(
                "dihedral order must be an even number >= 4".into(),
            ));
        }
        let m = order / 2;
        // (x^a y^e)(x^b y^d) = x^(a + (-1)^e b) y^(e+d)
        let idx = |a: usize, e: usize| e * m + a;
        let mut table = vec![vec![0; order]; order];
        for a in 0..m {
            for e in 0..2 {
                for b in 0..m {
                    for d in 0..2 {
                        let exp = if e == 0 { a + b } else { a + m - b };
                        table[idx(a, e)][idx(b, d)] = idx(exp % m, (e + d) % 2);
                    }
                }
            }
        }
        Self::from_table(
            table,
            vec![1, m],
            vec!["x".into(), "y".into()],
            Family::Dihedral(order),
        )
    }

    /// Semidihedral group of order `2^n`, `n ≥ 4`, presented as
    /// `x^(2^(n-1)) = y^2 = 1`, `y·x·y⁻¹ = x^(2^(n-2)-1)`.
    pub fn semidihedral(order: usize) -> Result<Self, GroupError> {
        if order < 16 || !order.is_power_of_two() {
            return Err(GroupError::ParameterOutOfRange(
                "semidihedral order must be 2^n with n >= 4".into(),
            ));
        }
        let m = order / 2;
        let twist = m / 2 - 1; // y x y^-1 = x^twist
        let idx = |a: usize, e: usize| e * m + a;
        let mut table = vec![vec![0; order]; order];
        for a in 0..m {
            for e in 0..2 {
                for b in 0..m {
                    for d in 0..2 {
                        // y x^b = x^(twist*b) y
                        let moved = if e == 0 { b } else { (twist * b) % m };
                        table[idx(a, e)][idx(b, d)] = idx((a + moved) % m, (e + d) % 2);
                    }
                }
            }
        }
        Self::from_table(
            table,
            vec![1, m],
            vec!["x".into(), "y".into()],
            Family::Semidihedral(order),
        )
    }

    /// Generalized quaternion group of order `2^n`, `n ≥ 3`, presented as
    /// `x^(2^(n-2)) = y^2 = (xy)^2`. Element `i < 2^(n-1)` is `x^i`,
    /// element `2^(n-1) + i` is `x^i·y`.
    pub fn quaternion(order: usize) -> Result<Self, GroupError> {
        if order < 8 || !order.is_power_of_two() {
            return Err(GroupError::ParameterOutOfRange(
                "quaternion order must be 2^n with n >= 3".into(),
            ));
        }
        let m = order / 2; // order of x
        let half = m / 2; // y^2 = x^half
        let idx = |a: usize, e: usize| e * m + a;
        let mut table = vec![vec![0; order]; order];
        for a in 0..m {
            for e in 0..2 {
                for b in 0..m {
                    for d in 0..2 {
                        // y x^b = x^-b y, and y^2 = x^half
                        let (exp, flips) = if e == 0 {
                            (a + b, d)
                        } else {
                            (a + m - b % m, 1 + d)
                        };
                        let extra = if flips == 2 { half } else { 0 };
                        table[idx(a, e)][idx(b, d)] = idx((exp + extra) % m, flips % 2);
                    }
                }
            }
        }
        Self::from_table(
            table,
            vec![1, m],
            vec!["x".into(), "y".into()],
            Family::Quaternion(order),
        )
    }

    /// Direct product of two cyclic groups; element `(i, j)` has index
    /// `i·n2 + j`, generators `x = (1,0)` and `y = (0,1)`.
    pub fn product_of_cyclic(n1: usize, n2: usize) -> Result<Self, GroupError> {
        if n1 < 1 || n2 < 1 {
            return Err(GroupError::ParameterOutOfRange(
                "product factors must be >= 1".into(),
            ));
        }
        let order = n1 * n2;
        if order > MAX_ORDER {
            return Err(GroupError::OrderTooLarge(order));
        }
        let idx = |i: usize, j: usize| i * n2 + j;
        let mut table = vec![vec![0; order]; order];
        for i1 in 0..n1 {
            for j1 in 0..n2 {
                for i2 in 0..n1 {
                    for j2 in 0..n2 {
                        table[idx(i1, j1)][idx(i2, j2)] = idx((i1 + i2) % n1, (j1 + j2) % n2);
                    }
                }
            }
        }
        Self::from_table(
            table,
            vec![idx(1 % n1, 0), idx(0, 1 % n2)],
            vec!["x".into(), "y".into()],
            Family::Product(n1, n2),
        )
    }

    /// Closure of permutation generators acting on `0..points`.
    pub fn from_permutations(perms: Vec<Vec<usize>>, names: Option<Vec<String>>) -> Result<Self, GroupError> {
        if perms.is_empty() {
            return Err(GroupError::EmptyGenerators);
        }
        let points = perms[0].len();
        for p in &perms {
            if p.len() != points {
                return Err(GroupError::MalformedPermutation);
            }
            let mut seen = vec![false; points];
            for &v in p {
                if v >= points || seen[v] {
                    return Err(GroupError::MalformedPermutation);
                }
                seen[v] = true;
            }
        }
        let compose = |a: &Vec<usize>, b: &Vec<usize>| -> Vec<usize> {
            // (a∘b)(p) = a(b(p))
            (0..points).map(|p| a[b[p]]).collect()
        };
        let identity: Vec<usize> = (0..points).collect();
        let mut elements = vec![identity.clone()];
        let mut frontier = vec![identity];
        while let Some(cur) = frontier.pop() {
            for p in &perms {
                let next = compose(p, &cur);
                if !elements.contains(&next) {
                    if elements.len() == MAX_ORDER {
                        return Err(GroupError::OrderTooLarge(MAX_ORDER + 1));
                    }
                    elements.push(next.clone());
                    frontier.push(next);
                }
            }
        }
        elements.sort();
        let order = elements.len();
        let find = |p: &Vec<usize>| elements.iter().position(|q| q == p).unwrap();
        let mut table = vec![vec![0; order]; order];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                table[i][j] = find(&compose(a, b));
            }
        }
        let generators: Vec<usize> = perms.iter().map(find).collect();
        let names = names.unwrap_or_else(|| {
            (0..generators.len()).map(|i| format!("g{i}")).collect()
        });
        Self::from_table(table, generators, names, Family::Custom)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(a) } else { a };
        let mut out = self.identity;
        for _ in 0..k.unsigned_abs() {
            out = self.mul(out, base);
        }
        out
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut cur = a;
        let mut n = 1;
        while cur != self.identity {
            cur = self.mul(cur, a);
            n += 1;
        }
        n
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.order
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn generator_by_name(&self, name: &str) -> Option<usize> {
        self.generator_names
            .iter()
            .position(|n| n == name)
            .map(|i| self.generators[i])
    }

    /// Closure of a set of elements, as a sorted list of indices.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[self.identity] = true;
        let mut frontier = vec![self.identity];
        while let Some(cur) = frontier.pop() {
            for &g in gens {
                let next = self.mul(cur, g);
                if !seen[next] {
                    seen[next] = true;
                    frontier.push(next);
                }
            }
        }
        (0..self.order).filter(|&i| seen[i]).collect()
    }

    /// Subgroup generated by `gens`, with the embedding of its element
    /// indices into `self`. Elements are enumerated in ascending order of
    /// their index in `self`.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Result<(FiniteGroup, Vec<usize>), GroupError> {
        if gens.is_empty() {
            return Err(GroupError::EmptyGenerators);
        }
        let elements = self.closure(gens);
        let order = elements.len();
        let find = |g: usize| elements.iter().position(|&h| h == g).unwrap();
        let mut table = vec![vec![0; order]; order];
        for (i, &a) in elements.iter().enumerate() {
            for (j, &b) in elements.iter().enumerate() {
                table[i][j] = find(self.mul(a, b));
            }
        }
        let sub_gens: Vec<usize> = gens.iter().map(|&g| find(g)).collect();
        let names = (0..sub_gens.len()).map(|i| format!("g{i}")).collect();
        let sub = FiniteGroup::from_table(table, sub_gens, names, Family::Custom)?;
        Ok((sub, elements))
    }

    /// Right-coset decomposition `{ H·r }` of `self` for the image of an
    /// embedded subgroup; representatives are the minimal element index
    /// per coset, ascending.
    pub fn right_coset_representatives(&self, subgroup_image: &[usize]) -> Vec<usize> {
        let mut assigned = vec![false; self.order];
        let mut reps = Vec::new();
        for r in 0..self.order {
            if assigned[r] {
                continue;
            }
            reps.push(r);
            for &h in subgroup_image {
                assigned[self.mul(h, r)] = true;
            }
        }
        reps
    }

    /// Human-readable element name in terms of the family's normal form.
    pub fn element_name(&self, g: usize) -> String {
        match self.family {
            Family::Cyclic(_) => {
                if g == 0 {
                    "e".into()
                } else {
                    format!("x^{g}")
                }
            }
            Family::Dihedral(o) | Family::Semidihedral(o) | Family::Quaternion(o) => {
                let m = o / 2;
                let (a, e) = (g % m, g / m);
                match (a, e) {
                    (0, 0) => "e".into(),
                    (_, 0) => format!("x^{a}"),
                    (0, _) => "y".into(),
                    _ => format!("x^{a}*y"),
                }
            }
            Family::Product(_, n2) => {
                let (i, j) = (g / n2, g % n2);
                if i == 0 && j == 0 {
                    "e".into()
                } else {
                    format!("x^{i}*y^{j}")
                }
            }
            Family::Custom => format!("g{g}"),
        }
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.family, self.order)
    }
}

/// Word in abstract generators, as (generator index, exponent) pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupWord {
    letters: Vec<(usize, i64)>,
}

impl GroupWord {
    pub fn new(letters: Vec<(usize, i64)>) -> Self {
        GroupWord {
            letters: letters.into_iter().filter(|&(_, e)| e != 0).collect(),
        }
    }

    pub fn empty() -> Self {
        GroupWord { letters: vec![] }
    }

    pub fn letters(&self) -> &[(usize, i64)] {
        &self.letters
    }

    pub fn concat(&self, other: &GroupWord) -> GroupWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        GroupWord::new(letters)
    }

    /// Parse `"x^3*y^-1"`-style words over the given generator names;
    /// `"e"` and `"1"` denote the empty word.
    pub fn parse(text: &str, names: &[String]) -> Result<GroupWord, String> {
        let text = text.trim();
        if text.is_empty() || text == "e" || text == "1" {
            return Ok(GroupWord::empty());
        }
        let mut letters = Vec::new();
        for token in text.split('*') {
            let token = token.trim();
            let (name, exp) = match token.split_once('^') {
                Some((n, e)) => {
                    let exp: i64 = e
                        .trim()
                        .parse()
                        .map_err(|_| format!("bad exponent in token '{token}'"))?;
                    (n.trim(), exp)
                }
                None => (token, 1),
            };
            if name == "e" || name == "1" {
                continue;
            }
            let idx = names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| format!("unknown generator '{name}' (known: {})", names.join(", ")))?;
            letters.push((idx, exp));
        }
        Ok(GroupWord::new(letters))
    }
}

/// Evaluate a word left to right under an assignment of group elements to
/// the abstract generators.
pub fn eval_word(group: &FiniteGroup, word: &GroupWord, assignment: &[usize]) -> Result<usize, GroupError> {
    let mut out = group.identity();
    for &(gen, exp) in word.letters() {
        let Some(&g) = assignment.get(gen) else {
            return Err(GroupError::UnassignedGenerator(gen, assignment.len()));
        };
        out = group.mul(out, group.pow(g, exp));
    }
    Ok(out)
}
