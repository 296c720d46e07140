//! Small finite classical groups as explicit matrix groups over a prime
//! field `F_q`, their actions on subspaces, forms and coset-like domains,
//! and exact base sizes and stabilizer orders.
//!
//! Matrices act on row vectors from the right (`x ↦ x g`, `A ↦ g^T A g`).
//! Projective groups are realized as matrices modulo scalars, each stored by
//! the representative whose first nonzero entry is 1.

use crate::formulas::BaseTriple;
use crate::linalg::{determinant, is_prime, nullspace, rank, rref, Field, Fp, Matrix};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use thiserror::Error;

/// Default maximum group order for full enumeration.
pub const ELEMENT_BOUND: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FiniteError {
    #[error("q = {0} must be a prime below 256")]
    BadField(u64),
    #[error("group order exceeds the enumeration bound {bound}")]
    TooLarge { bound: usize },
    #[error("the action has a kernel of order {kernel}; base sizes need a faithful action")]
    NotFaithful { kernel: usize },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("point index {0} out of range")]
    BadPoint(usize),
}

/// An `n × n` matrix over `F_q`, row-major.
pub type Mat = Vec<u8>;

fn mul(q: u32, n: usize, a: &[u8], b: &[u8]) -> Mat {
    let mut out = vec![0u8; n * n];
    for i in 0..n {
        for j in 0..n {
            let mut s = 0u32;
            for k in 0..n {
                s += a[i * n + k] as u32 * b[k * n + j] as u32;
            }
            out[i * n + j] = (s % q) as u8;
        }
    }
    out
}

fn inv_mod(q: u32, a: u32) -> u32 {
    Fp::new(q as u64).inv(&(a as u64)).expect("nonzero") as u32
}

fn projective_canonical(q: u32, m: &mut [u8]) {
    if let Some(&lead) = m.iter().find(|&&x| x != 0) {
        let s = inv_mod(q, lead as u32);
        for x in m.iter_mut() {
            *x = (*x as u32 * s % q) as u8;
        }
    }
}

fn to_matrix(rows: usize, cols: usize, data: &[u8]) -> Matrix<u64> {
    Matrix { rows, cols, data: data.iter().map(|&x| x as u64).collect() }
}

fn identity_mat(n: usize) -> Mat {
    (0..n * n).map(|k| u8::from(k / n == k % n)).collect()
}

fn unit_vec(n: usize, i: usize) -> Vec<u8> {
    (0..n).map(|k| u8::from(k == i)).collect()
}

/// Smallest generator of `F_q^*`.
pub fn primitive_root(q: u32) -> u32 {
    if q == 2 {
        return 1;
    }
    let f = Fp::new(q as u64);
    (2..q)
        .find(|&a| {
            let mut x = 1u64;
            (1..q - 1).all(|_| {
                x = f.mul(&x, &(a as u64));
                x != 1
            })
        })
        .expect("F_q^* is cyclic")
}

/// Classical family of the generated matrix group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FiniteFamily {
    GL,
    SL,
    Sp,
}

impl std::str::FromStr for FiniteFamily {
    type Err = FiniteError;
    fn from_str(s: &str) -> Result<Self, FiniteError> {
        match s {
            "GL" | "PGL" => Ok(FiniteFamily::GL),
            "SL" | "PSL" => Ok(FiniteFamily::SL),
            "Sp" | "PSp" => Ok(FiniteFamily::Sp),
            _ => Err(FiniteError::Unsupported(format!("family {s}"))),
        }
    }
}

/// The standard symplectic form `[[0, I], [-I, 0]]`.
pub fn symplectic_form(q: u32, n: usize) -> Mat {
    let m = n / 2;
    let mut j = vec![0u8; n * n];
    for i in 0..m {
        j[i * n + i + m] = 1;
        j[(i + m) * n + i] = (q - 1) as u8;
    }
    j
}

fn transvection(n: usize, i: usize, j: usize) -> Mat {
    let mut t = identity_mat(n);
    t[i * n + j] = 1;
    t
}

/// Generators: elementary transvections for `SL`, plus a primitive-root
/// diagonal matrix and a transposition for `GL`, and symplectic
/// transvections `x ↦ x + (x, v) v` for `v` among `e_i` and `e_i + e_j`
/// for `Sp`.
pub fn generators(family: FiniteFamily, n: usize, q: u32) -> Result<Vec<Mat>, FiniteError> {
    match family {
        FiniteFamily::SL | FiniteFamily::GL => {
            if n < 2 {
                return Err(FiniteError::Unsupported("n must be at least 2".into()));
            }
            let mut gens: Vec<Mat> = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        gens.push(transvection(n, i, j));
                    }
                }
            }
            if family == FiniteFamily::GL {
                let mut d = identity_mat(n);
                d[0] = primitive_root(q) as u8;
                gens.push(d);
                let mut w = vec![0u8; n * n];
                w[1] = 1;
                w[n] = 1;
                for k in 2..n {
                    w[k * n + k] = 1;
                }
                gens.push(w);
            }
            Ok(gens)
        }
        FiniteFamily::Sp => {
            if n < 2 || n % 2 == 1 {
                return Err(FiniteError::Unsupported("Sp needs even n".into()));
            }
            let j = symplectic_form(q, n);
            let mut vs: Vec<Vec<u8>> = (0..n).map(|i| unit_vec(n, i)).collect();
            for a in 0..n {
                for b in a + 1..n {
                    let mut v = unit_vec(n, a);
                    v[b] = 1;
                    vs.push(v);
                }
            }
            Ok(vs
                .iter()
                .map(|v| {
                    // Row-vector convention: x ↦ x + (x J v^T) v, i.e. g = I + J v^T v.
                    let jv: Vec<u32> = (0..n).map(|r| (0..n).map(|k| j[r * n + k] as u32 * v[k] as u32).sum::<u32>() % q).collect();
                    let mut g = identity_mat(n);
                    for r in 0..n {
                        for c in 0..n {
                            g[r * n + c] = ((g[r * n + c] as u32 + jv[r] * v[c] as u32) % q) as u8;
                        }
                    }
                    g
                })
                .collect())
        }
    }
}

/// An explicitly enumerated matrix group.
#[derive(Debug, Clone)]
pub struct MatrixGroup {
    pub family: FiniteFamily,
    pub n: usize,
    pub q: u32,
    pub projective: bool,
    pub generators: Vec<Mat>,
    pub elements: Vec<Mat>,
}

impl MatrixGroup {
    /// Breadth-first closure of the generators with a hard element cap.
    pub fn generate(family: FiniteFamily, n: usize, q: u32, projective: bool, bound: usize) -> Result<Self, FiniteError> {
        if q >= 256 || !is_prime(q as u64) {
            return Err(FiniteError::BadField(q as u64));
        }
        let mut gens = generators(family, n, q)?;
        if projective {
            for g in gens.iter_mut() {
                projective_canonical(q, g);
            }
        }
        let mut id = identity_mat(n);
        if projective {
            projective_canonical(q, &mut id);
        }
        let mut seen: HashSet<Mat> = HashSet::from([id.clone()]);
        let mut elements = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let mut y = mul(q, n, &x, g);
                if projective {
                    projective_canonical(q, &mut y);
                }
                if seen.insert(y.clone()) {
                    if elements.len() >= bound {
                        return Err(FiniteError::TooLarge { bound });
                    }
                    elements.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        Ok(MatrixGroup { family, n, q, projective, generators: gens, elements })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn name(&self) -> String {
        let p = if self.projective { "P" } else { "" };
        format!("{p}{:?}_{}({})", self.family, self.n, self.q)
    }
}

/// The action domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum ActionKind {
    /// `d`-dimensional subspaces.
    Subspaces { d: usize },
    /// Unordered pairs of complementary coordinate lines in dimension 2,
    /// the cosets of the normalizer of a split torus.
    TorusNormalizer,
    /// Unordered pairs `{U, U^⊥}` of non-degenerate `n/2`-spaces of a
    /// symplectic space.
    NondegPairs,
    /// Symmetric Gram matrices under `A ↦ g^T A g` (matrix groups only).
    Forms,
}

impl std::str::FromStr for ActionKind {
    type Err = FiniteError;
    fn from_str(s: &str) -> Result<Self, FiniteError> {
        match s {
            "points" => Ok(ActionKind::Subspaces { d: 1 }),
            "torus-normalizer" => Ok(ActionKind::TorusNormalizer),
            "nondeg-pairs" => Ok(ActionKind::NondegPairs),
            "forms" => Ok(ActionKind::Forms),
            other => match other.strip_prefix("subspaces:") {
                Some(d) => d.parse().map(|d| ActionKind::Subspaces { d }).map_err(|_| FiniteError::Unsupported(other.into())),
                None => Err(FiniteError::Unsupported(format!("action {other}"))),
            },
        }
    }
}

/// A transitive action of an enumerated group on the orbit of a base point,
/// with one permutation per group element.
#[derive(Debug, Clone)]
pub struct FiniteGroupAction {
    pub group: MatrixGroup,
    pub kind: ActionKind,
    pub points: Vec<Vec<u8>>,
    perms: Vec<Vec<u32>>,
}

fn span_canonical(q: u32, n: usize, rows: &[u8], d: usize) -> Vec<u8> {
    let f = Fp::new(q as u64);
    let (r, _) = rref(&f, &to_matrix(d, n, rows));
    r.data[..d * n].iter().map(|&x| x as u8).collect()
}

fn act_rows(q: u32, n: usize, rows: &[u8], g: &[u8]) -> Vec<u8> {
    let d = rows.len() / n;
    let mut out = vec![0u8; rows.len()];
    for i in 0..d {
        for j in 0..n {
            let s: u32 = (0..n).map(|k| rows[i * n + k] as u32 * g[k * n + j] as u32).sum();
            out[i * n + j] = (s % q) as u8;
        }
    }
    out
}

fn sorted_pair(a: Vec<u8>, b: Vec<u8>) -> Vec<u8> {
    let (x, y) = if a <= b { (a, b) } else { (b, a) };
    [x, y].concat()
}

impl FiniteGroupAction {
    pub fn new(group: MatrixGroup, kind: ActionKind) -> Result<Self, FiniteError> {
        let (n, q) = (group.n, group.q);
        let base: Vec<u8> = match kind {
            ActionKind::Subspaces { d } => {
                if d == 0 || d >= n {
                    return Err(FiniteError::Unsupported(format!("{d}-subspaces of a {n}-space")));
                }
                (0..d).flat_map(|i| unit_vec(n, i)).collect()
            }
            ActionKind::TorusNormalizer => {
                if n != 2 {
                    return Err(FiniteError::Unsupported("torus-normalizer cosets are implemented for n = 2".into()));
                }
                sorted_pair(unit_vec(2, 0), unit_vec(2, 1))
            }
            ActionKind::NondegPairs => {
                if group.family != FiniteFamily::Sp || n % 4 != 0 {
                    return Err(FiniteError::Unsupported("nondeg-pairs needs Sp with 4 | n".into()));
                }
                let (m, h) = (n / 2, n / 4);
                let u: Vec<u8> = (0..h).chain(m..m + h).flat_map(|i| unit_vec(n, i)).collect();
                let w: Vec<u8> = (h..m).chain(m + h..n).flat_map(|i| unit_vec(n, i)).collect();
                sorted_pair(span_canonical(q, n, &u, m), span_canonical(q, n, &w, m))
            }
            ActionKind::Forms => {
                if group.projective {
                    return Err(FiniteError::Unsupported("forms need a matrix (non-projective) group".into()));
                }
                identity_mat(n)
            }
        };
        let apply = |g: &[u8], x: &[u8]| -> Vec<u8> { Self::apply_kind(kind, q, n, g, x) };
        let mut index: HashMap<Vec<u8>, u32> = HashMap::from([(base.clone(), 0)]);
        let mut points = vec![base.clone()];
        let mut queue = VecDeque::from([base]);
        while let Some(x) = queue.pop_front() {
            for g in &group.generators {
                let y = apply(g, &x);
                if !index.contains_key(&y) {
                    index.insert(y.clone(), points.len() as u32);
                    points.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let mut perms = Vec::with_capacity(group.elements.len());
        for g in &group.elements {
            perms.push(points.iter().map(|x| index[&apply(g, x)]).collect());
        }
        Ok(FiniteGroupAction { group, kind, points, perms })
    }

    fn apply_kind(kind: ActionKind, q: u32, n: usize, g: &[u8], x: &[u8]) -> Vec<u8> {
        match kind {
            ActionKind::Subspaces { d } => span_canonical(q, n, &act_rows(q, n, x, g), d),
            ActionKind::TorusNormalizer | ActionKind::NondegPairs => {
                let d = x.len() / (2 * n);
                let (a, b) = x.split_at(d * n);
                sorted_pair(span_canonical(q, n, &act_rows(q, n, a, g), d), span_canonical(q, n, &act_rows(q, n, b, g), d))
            }
            ActionKind::Forms => {
                let mut gt = vec![0u8; n * n];
                for i in 0..n {
                    for j in 0..n {
                        gt[i * n + j] = g[j * n + i];
                    }
                }
                mul(q, n, &mul(q, n, &gt, x), g)
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.points.len()
    }

    fn check(&self, tuple: &[usize]) -> Result<(), FiniteError> {
        match tuple.iter().find(|&&x| x >= self.degree()) {
            Some(&x) => Err(FiniteError::BadPoint(x)),
            None => Ok(()),
        }
    }

    fn fixing(&self, from: &[u32], x: usize) -> Vec<u32> {
        from.iter().copied().filter(|&g| self.perms[g as usize][x] as usize == x).collect()
    }

    /// Indices of group elements fixing every point of the tuple.
    pub fn stabilizer(&self, tuple: &[usize]) -> Result<Vec<u32>, FiniteError> {
        self.check(tuple)?;
        let mut s: Vec<u32> = (0..self.group.order() as u32).collect();
        for &x in tuple {
            s = self.fixing(&s, x);
        }
        Ok(s)
    }

    /// Exact order of the pointwise stabilizer of the tuple.
    pub fn stabilizer_order(&self, tuple: &[usize]) -> Result<usize, FiniteError> {
        Ok(self.stabilizer(tuple)?.len())
    }

    /// Matrices of the pointwise stabilizer of the tuple.
    pub fn stabilizer_elements(&self, tuple: &[usize]) -> Result<Vec<Mat>, FiniteError> {
        Ok(self.stabilizer(tuple)?.into_iter().map(|g| self.group.elements[g as usize].clone()).collect())
    }

    /// Order of the kernel of the action.
    pub fn kernel_order(&self) -> usize {
        self.perms.iter().filter(|p| p.iter().enumerate().all(|(i, &x)| i == x as usize)).count()
    }

    /// Pointwise stabilizer orders of `(x_0, y)` for all `y`, as a histogram
    /// `order -> number of y`.
    pub fn pair_histogram(&self) -> BTreeMap<usize, usize> {
        let s0 = self.fixing(&(0..self.group.order() as u32).collect::<Vec<_>>(), 0);
        let mut h = BTreeMap::new();
        for y in 0..self.degree() {
            *h.entry(self.fixing(&s0, y).len()).or_insert(0) += 1;
        }
        h
    }

    /// Index of the point spanned by (or equal to) the given raw data,
    /// after canonicalization.
    pub fn index_of(&self, raw: &[u8]) -> Option<usize> {
        let id = identity_mat(self.group.n);
        let canon = Self::apply_kind(self.kind, self.group.q, self.group.n, &id, raw);
        self.points.iter().position(|p| *p == canon)
    }

    /// A partner `y` for the base point `x_0` in general position. For
    /// torus-normalizer cosets this is `{<e1 + e2>, <e1 + a e2>}` with `a` a
    /// primitive root, disjoint from and not harmonic to `{<e1>, <e2>}`;
    /// otherwise the first `y` whose pair stabilizer order is the most
    /// frequent one.
    pub fn general_position_partner(&self) -> usize {
        if self.kind == ActionKind::TorusNormalizer && self.group.q > 3 {
            let a = primitive_root(self.group.q) as u8;
            return self.index_of(&[1, 1, 1, a]).expect("pair lies in the orbit");
        }
        let s0 = self.fixing(&(0..self.group.order() as u32).collect::<Vec<_>>(), 0);
        let mut counts: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
        for y in 0..self.degree() {
            counts.entry(self.fixing(&s0, y).len()).or_insert((0, y)).0 += 1;
        }
        counts.into_iter().max_by_key(|(o, (c, _))| (*c, std::cmp::Reverse(*o))).map(|(_, (_, y))| y).expect("nonempty")
    }

    fn orbit_representatives(&self, s: &[u32]) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        let mut reps = Vec::new();
        for x in 0..self.degree() {
            if seen[x] {
                continue;
            }
            let mut moved = false;
            for &g in s {
                let y = self.perms[g as usize][x] as usize;
                seen[y] = true;
                moved |= y != x;
            }
            if moved {
                reps.push(x);
            }
        }
        reps
    }

    fn search(&self, s: &[u32], depth: usize, prefix: &mut Vec<usize>) -> bool {
        if s.len() == 1 {
            return true;
        }
        if depth == 0 || (self.degree() as f64).powi(depth as i32) < s.len() as f64 {
            return false;
        }
        for x in self.orbit_representatives(s) {
            prefix.push(x);
            if self.search(&self.fixing(s, x), depth - 1, prefix) {
                return true;
            }
            prefix.pop();
        }
        false
    }

    /// Some tuple of length at most `c` with trivial pointwise stabilizer,
    /// found by exhaustive search over orbit representatives.
    pub fn base_of_length(&self, c: usize) -> Option<Vec<usize>> {
        let all: Vec<u32> = (0..self.group.order() as u32).collect();
        let mut prefix = Vec::new();
        self.search(&all, c, &mut prefix).then_some(prefix)
    }

    /// Exact base size: seeded greedy random search for an upper bound,
    /// then exhaustive search at each shorter length.
    pub fn exact_base_size(&self, seed: u64) -> Result<BaseSizeResult, FiniteError> {
        let kernel = self.kernel_order();
        if kernel > 1 {
            return Err(FiniteError::NotFaithful { kernel });
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let all: Vec<u32> = (0..self.group.order() as u32).collect();
        let mut best: Option<Vec<usize>> = None;
        for _ in 0..64 {
            let mut s = all.clone();
            let mut tuple = Vec::new();
            while s.len() > 1 {
                let moved: Vec<usize> =
                    (0..self.degree()).filter(|&x| s.iter().any(|&g| self.perms[g as usize][x] as usize != x)).collect();
                let x = *moved.choose(&mut rng).expect("nontrivial stabilizer moves a point");
                tuple.push(x);
                s = self.fixing(&s, x);
            }
            if best.as_ref().is_none_or(|b| tuple.len() < b.len()) {
                best = Some(tuple);
            }
        }
        let mut witness = best.expect("at least one run");
        let random_upper = witness.len();
        while witness.len() > 1 {
            match self.base_of_length(witness.len() - 1) {
                Some(w) => witness = w,
                None => break,
            }
        }
        Ok(BaseSizeResult {
            group: self.group.name(),
            action: self.kind,
            group_order: self.group.order(),
            degree: self.degree(),
            base_size: witness.len(),
            witness,
            random_upper,
            seed,
        })
    }
}

/// Result of [`FiniteGroupAction::exact_base_size`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BaseSizeResult {
    pub group: String,
    pub action: ActionKind,
    pub group_order: usize,
    pub degree: usize,
    pub base_size: usize,
    pub witness: Vec<usize>,
    pub random_upper: usize,
    pub seed: u64,
}

/// Order of the stabilizer in `GL_n(q)` (or `SL_n(q)` when `det_one`) of a
/// tuple of subspaces, computed as the unit group of the algebra
/// `{X : U_i X ⊆ U_i}` by enumerating its `q^dim` elements.
pub fn algebra_stabilizer_order(q: u32, n: usize, parts: &[Vec<u8>], det_one: bool) -> Result<u64, FiniteError> {
    if q >= 256 || !is_prime(q as u64) {
        return Err(FiniteError::BadField(q as u64));
    }
    let f = Fp::new(q as u64);
    let mut eqs: Vec<Vec<u64>> = Vec::new();
    for rows in parts {
        let d = rows.len() / n;
        // Row vectors: U X ⊆ U iff (u X) K = 0 for K spanning the
        // annihilator columns of U.
        let k = nullspace(&f, &to_matrix(d, n, rows));
        for i in 0..d {
            for kv in &k {
                // Coefficient of X[a][b] in u_i X kv is u_i[a] kv[b].
                eqs.push((0..n * n).map(|ab| rows[i * n + ab / n] as u64 * kv[ab % n] % q as u64).collect());
            }
        }
    }
    let basis: Vec<Vec<u64>> = if eqs.is_empty() {
        (0..n * n).map(|k| (0..n * n).map(|j| u64::from(j == k)).collect()).collect()
    } else {
        let m = Matrix { rows: eqs.len(), cols: n * n, data: eqs.concat() };
        nullspace(&f, &m)
    };
    let dim = basis.len();
    let total = (q as u64).checked_pow(dim as u32).filter(|&t| t <= 50_000_000).ok_or(FiniteError::TooLarge { bound: 50_000_000 })?;
    let mut count = 0u64;
    let mut coeffs = vec![0u64; dim];
    for _ in 0..total {
        let x: Vec<u64> = (0..n * n).map(|e| (0..dim).map(|k| coeffs[k] * basis[k][e]).sum::<u64>() % q as u64).collect();
        let det = determinant(&f, &Matrix { rows: n, cols: n, data: x });
        if det != 0 && (!det_one || det == 1) {
            count += 1;
        }
        for c in coeffs.iter_mut() {
            *c += 1;
            if *c < q as u64 {
                break;
            }
            *c = 0;
        }
    }
    Ok(count)
}

/// Stabilizer orders of seeded random tuples of `c` pairwise transversal
/// `d`-subspaces of `F_q^n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TupleStabilizerReport {
    pub group: String,
    pub n: usize,
    pub d: usize,
    pub c: usize,
    pub q: u32,
    pub seed: u64,
    pub samples: usize,
    pub min_order: u64,
    pub histogram: BTreeMap<u64, usize>,
}

pub fn random_subspace_tuple_stabilizers(n: usize, d: usize, c: usize, q: u32, det_one: bool, seed: u64, samples: usize) -> Result<TupleStabilizerReport, FiniteError> {
    if q >= 256 || !is_prime(q as u64) {
        return Err(FiniteError::BadField(q as u64));
    }
    if d == 0 || d >= n {
        return Err(FiniteError::Unsupported(format!("{d}-subspaces of a {n}-space")));
    }
    let f = Fp::new(q as u64);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hist = BTreeMap::new();
    for _ in 0..samples {
        let mut parts: Vec<Vec<u8>> = Vec::new();
        let mut attempts = 0;
        while parts.len() < c {
            attempts += 1;
            if attempts > 10_000 {
                return Err(FiniteError::Unsupported("no transversal tuple found".into()));
            }
            let cand: Vec<u8> = (0..d * n).map(|_| rng.gen_range(0..q) as u8).collect();
            if rank(&f, &to_matrix(d, n, &cand)) != d {
                continue;
            }
            let ok = parts.iter().all(|p| {
                let both = [p.clone(), cand.clone()].concat();
                rank(&f, &to_matrix(2 * d, n, &both)) == n.min(2 * d)
            });
            if ok {
                parts.push(cand);
            }
        }
        *hist.entry(algebra_stabilizer_order(q, n, &parts, det_one)?).or_insert(0) += 1;
    }
    Ok(TupleStabilizerReport {
        group: format!("{}_{n}({q})", if det_one { "SL" } else { "GL" }),
        n,
        d,
        c,
        q,
        seed,
        samples,
        min_order: *hist.keys().next().expect("samples > 0"),
        histogram: hist,
    })
}

/// Outcome of comparing an algebraic triple with a finite base size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossCheck {
    pub name: String,
    pub q: u32,
    pub algebraic_b0: u32,
    pub finite_base_size: usize,
    /// `q > 2`, where the finite base size is at least `b^0`.
    pub applicable: bool,
    pub pass: bool,
}

/// Checks `b^0 <= b(G_q)` for `q > 2`; a failure indicates a bug in one of
/// the two computations.
pub fn cross_check_relations(name: &str, triple: &BaseTriple, q: u32, finite_base_size: usize) -> CrossCheck {
    let applicable = q > 2;
    CrossCheck {
        name: name.to_string(),
        q,
        algebraic_b0: triple.b0.lo,
        finite_base_size,
        applicable,
        pass: !applicable || triple.b0.lo as usize <= finite_base_size,
    }
}

/// The shipped finite cases: `(name, spec, family, n, q, action)`.
pub fn shipped_cases() -> Vec<(&'static str, crate::formulas::ActionSpec, FiniteFamily, usize, u32, ActionKind)> {
    use crate::formulas::{ActionSpec, CharCase, Flavor, GroupFamily, SubgroupSpec};
    let sl2_points = |q| ActionSpec::subspace(GroupFamily::SL, 2, 1, None, CharCase::point(q));
    let sl2_torus = |q| ActionSpec { family: GroupFamily::SL, n: Some(2), subgroup: SubgroupSpec::TorusNormalizer, char_case: CharCase::point(q) };
    vec![
        ("PGL_2(5) on the projective line", sl2_points(5), FiniteFamily::GL, 2, 5, ActionKind::Subspaces { d: 1 }),
        ("PGL_2(7) on the projective line", sl2_points(7), FiniteFamily::GL, 2, 7, ActionKind::Subspaces { d: 1 }),
        ("PGL_2(5) on torus-normalizer cosets", sl2_torus(5), FiniteFamily::GL, 2, 5, ActionKind::TorusNormalizer),
        ("PGL_2(7) on torus-normalizer cosets", sl2_torus(7), FiniteFamily::GL, 2, 7, ActionKind::TorusNormalizer),
        ("PGL_3(3) on points", ActionSpec::subspace(GroupFamily::SL, 3, 1, None, CharCase::point(3)), FiniteFamily::GL, 3, 3, ActionKind::Subspaces { d: 1 }),
        (
            "PSp_4(3) on pairs {U, U^perp}",
            ActionSpec::subspace(GroupFamily::Sp, 4, 2, Some(Flavor::Nondeg), CharCase::point(3)),
            FiniteFamily::Sp,
            4,
            3,
            ActionKind::NondegPairs,
        ),
    ]
}

/// Runs every shipped case: exact finite base size against the algebraic `b^0`.
pub fn shipped_cross_checks(seed: u64) -> Result<Vec<CrossCheck>, Box<dyn std::error::Error>> {
    let mut out = Vec::new();
    for (name, spec, family, n, q, kind) in shipped_cases() {
        let triple = crate::formulas::triple(&spec)?;
        let action = FiniteGroupAction::new(MatrixGroup::generate(family, n, q, true, ELEMENT_BOUND)?, kind)?;
        let b = action.exact_base_size(seed)?;
        out.push(cross_check_relations(name, &triple, q, b.base_size));
    }
    Ok(out)
}
