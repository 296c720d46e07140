//! Generic configurations of subspaces (and module vectors) with exact
//! stabilizer-algebra dimensions.
//!
//! A configuration is sampled with uniformly random entries over a large
//! prime field (or small random integers over `Q`), resampling each part
//! until the open conditions of genericity hold: full rank, pairwise
//! transversality and, for non-degenerate parts, invertible Gram matrices.
//! Totally singular parts are the span of the first `d` vectors of a
//! standard isotropic frame moved by a random group element obtained from
//! the Cayley transform of a random Lie algebra element.
//!
//! The stabilizer algebra `{X in g : X U_i ⊆ U_i for all i}` is the kernel
//! of the linear map `X ↦ (N_i X B_i)_i`, where `B_i` spans `U_i` and the
//! rows of `N_i` span its annihilator. The reported value at a given number
//! of parts is the minimum over trials, which is the generic value.

use crate::bounds::lower_bound_b0;
use crate::formulas::{action_dims, ActionSpec, Flavor, FormulaError, GroupFamily, SubgroupSpec};
use crate::linalg::{
    determinant, identity, inverse, is_prime, left_annihilator, mat_add, mat_mul, mat_sub, random_matrix, rank, zeros, Field, Fp,
    Matrix, Rationals,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest prime below `2^31`.
pub const DEFAULT_PRIME: u64 = 2_147_483_647;
/// Second prime used for cross-checking.
pub const SECOND_PRIME: u64 = 2_147_483_629;
/// Resampling budget per part.
pub const RESAMPLE_BUDGET: usize = 200;

/// Errors raised by the verifier.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenstabError {
    #[error("unsupported configuration: {0}")]
    Unsupported(String),
    #[error("resampling budget exhausted after {attempts} attempts at part {part}")]
    ResampleBudget { part: usize, attempts: usize },
    #[error("{0} is not a prime below 2^32")]
    InvalidPrime(u64),
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error("unknown module `{0}`")]
    UnknownModule(String),
    #[error("{0}")]
    Invalid(String),
}

/// Which geometry the parts live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Geometry {
    Linear,
    Symplectic,
    Orthogonal,
}

/// The kind of subspace sampled for each part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PartKind {
    Any,
    Nondeg,
    TotallySingular,
}

/// A classical subspace action in the form the verifier understands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SubspaceGeometry {
    pub geometry: Geometry,
    pub n: usize,
    pub d: usize,
    pub kind: PartKind,
}

impl SubspaceGeometry {
    /// Converts a classical subspace spec; characteristic 2 flavors are not
    /// supported since the verifier works in large characteristic.
    pub fn from_spec(spec: &ActionSpec) -> Result<Self, GenstabError> {
        let n = spec.n.ok_or_else(|| GenstabError::Unsupported("classical spec without n".into()))?;
        let (d, flavor) = match &spec.subgroup {
            SubgroupSpec::Subspace { d, flavor } => (*d, *flavor),
            _ => return Err(GenstabError::Unsupported("only subspace actions have sampled configurations".into())),
        };
        crate::formulas::subspace_triple(&spec.with_char(crate::formulas::CharCase::Good))?;
        let (geometry, kind) = match (spec.family, flavor) {
            (GroupFamily::SL, None) => (Geometry::Linear, PartKind::Any),
            (GroupFamily::Sp, Some(Flavor::Nondeg)) => (Geometry::Symplectic, PartKind::Nondeg),
            (GroupFamily::Sp, Some(Flavor::TotallySingular)) => (Geometry::Symplectic, PartKind::TotallySingular),
            (GroupFamily::SO, Some(Flavor::Nondeg)) => (Geometry::Orthogonal, PartKind::Nondeg),
            (GroupFamily::SO, Some(Flavor::TotallySingular)) => (Geometry::Orthogonal, PartKind::TotallySingular),
            (_, Some(f)) => return Err(GenstabError::Unsupported(format!("flavor {f:?} belongs to characteristic 2"))),
            (f, None) => return Err(GenstabError::Unsupported(format!("{f} subspaces need a flavor"))),
        };
        Ok(SubspaceGeometry { geometry, n, d, kind })
    }

    /// `d` for the parts and `n - d` for the dual.
    pub fn dual(&self) -> Result<Self, GenstabError> {
        if self.geometry != Geometry::Linear {
            return Err(GenstabError::Unsupported("duality is implemented for SL".into()));
        }
        Ok(SubspaceGeometry { d: self.n - self.d, ..*self })
    }

    fn algebra_name(&self) -> &'static str {
        match self.geometry {
            Geometry::Linear => "gl",
            Geometry::Symplectic => "sp",
            Geometry::Orthogonal => "so",
        }
    }

    /// Two maximal totally singular subspaces of one family of an even
    /// orthogonal space meet in a dimension congruent to `n/2` mod 2.
    fn forced_pair_meet(&self) -> usize {
        let maximal_ts = self.geometry == Geometry::Orthogonal && self.kind == PartKind::TotallySingular && 2 * self.d == self.n;
        usize::from(maximal_ts && self.d % 2 == 1)
    }

    /// Dimension of scalars inside the algebra used.
    fn scalar_dim(&self) -> usize {
        match self.geometry {
            Geometry::Linear => 1,
            _ => 0,
        }
    }
}

/// Which field the verifier computes over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldChoice {
    Prime(u64),
    Rational,
}

impl FieldChoice {
    pub fn describe(&self) -> String {
        match self {
            FieldChoice::Prime(p) => format!("F_{p}"),
            FieldChoice::Rational => "Q".into(),
        }
    }
}

/// A sampled configuration of subspaces.
#[derive(Debug, Clone)]
pub struct Configuration<F: Field> {
    pub field: F,
    pub geometry: SubspaceGeometry,
    pub form: Option<Matrix<F::Elem>>,
    /// `n × d` bases; totally singular parts satisfy `B^T J B = 0`.
    pub parts: Vec<Matrix<F::Elem>>,
    pub seed: u64,
    pub stream: u64,
    pub resamples: usize,
}

/// The standard form of the geometry: `[[0, I], [-I, 0]]` for symplectic,
/// `[[0, I], [I, 0]]` (plus a 1 in the corner for odd `n`) for orthogonal.
pub fn standard_form<F: Field>(f: &F, g: Geometry, n: usize) -> Option<Matrix<F::Elem>> {
    let m = n / 2;
    match g {
        Geometry::Linear => None,
        Geometry::Symplectic => Some(Matrix::from_fn(n, n, |i, j| {
            if i < m && j == i + m {
                f.one()
            } else if i >= m && j + m == i {
                f.neg(&f.one())
            } else {
                f.zero()
            }
        })),
        Geometry::Orthogonal => Some(Matrix::from_fn(n, n, |i, j| {
            if (i < m && j == i + m) || (i >= m && i < 2 * m && j + m == i) || (i == 2 * m && j == 2 * m) {
                f.one()
            } else {
                f.zero()
            }
        })),
    }
}

fn unit<F: Field>(f: &F, n: usize, i: usize, j: usize) -> Matrix<F::Elem> {
    Matrix::from_fn(n, n, |a, b| if a == i && b == j { f.one() } else { f.zero() })
}

/// A basis of the Lie algebra: all of `gl_n`, or `J^{-1} A` with `A`
/// symmetric (symplectic) or skew (orthogonal).
pub fn lie_algebra_basis<F: Field>(f: &F, g: Geometry, form: Option<&Matrix<F::Elem>>, n: usize) -> Vec<Matrix<F::Elem>> {
    match g {
        Geometry::Linear => (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| unit(f, n, i, j)).collect(),
        Geometry::Symplectic | Geometry::Orthogonal => {
            let jinv = inverse(f, form.expect("form present")).expect("form invertible");
            let mut out = Vec::new();
            for i in 0..n {
                let start = if g == Geometry::Symplectic { i } else { i + 1 };
                for j in start..n {
                    let a = if i == j {
                        unit(f, n, i, i)
                    } else if g == Geometry::Symplectic {
                        mat_add(f, &unit(f, n, i, j), &unit(f, n, j, i))
                    } else {
                        mat_sub(f, &unit(f, n, i, j), &unit(f, n, j, i))
                    };
                    out.push(mat_mul(f, &jinv, &a));
                }
            }
            out
        }
    }
}

/// Basis of `sl_n`.
pub fn sl_basis<F: Field>(f: &F, n: usize) -> Vec<Matrix<F::Elem>> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                out.push(unit(f, n, i, j));
            }
        }
    }
    for i in 0..n.saturating_sub(1) {
        out.push(mat_sub(f, &unit(f, n, i, i), &unit(f, n, n - 1, n - 1)));
    }
    out
}

fn gram<F: Field>(f: &F, b: &Matrix<F::Elem>, j: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    mat_mul(f, &mat_mul(f, &b.transpose(), j), b)
}

fn random_algebra_element<F: Field>(f: &F, basis: &[Matrix<F::Elem>], n: usize, rng: &mut ChaCha8Rng) -> Matrix<F::Elem> {
    let mut x = zeros(f, n, n);
    for b in basis {
        let c = f.random(rng);
        x = mat_add(f, &x, &Matrix::from_fn(n, n, |i, j| f.mul(&c, b.get(i, j))));
    }
    x
}

/// `(I + X)(I - X)^{-1}`, an element of the isometry group when `X` lies in
/// its Lie algebra.
pub fn cayley<F: Field>(f: &F, x: &Matrix<F::Elem>) -> Option<Matrix<F::Elem>> {
    let n = x.rows;
    let i = identity(f, n);
    let inv = inverse(f, &mat_sub(f, &i, x))?;
    Some(mat_mul(f, &mat_add(f, &i, x), &inv))
}

fn is_zero_matrix<F: Field>(f: &F, m: &Matrix<F::Elem>) -> bool {
    m.data.iter().all(|e| f.is_zero(e))
}

fn sample_part<F: Field>(
    f: &F,
    geo: &SubspaceGeometry,
    form: Option<&Matrix<F::Elem>>,
    basis: &[Matrix<F::Elem>],
    rng: &mut ChaCha8Rng,
) -> Option<Matrix<F::Elem>> {
    let (n, d) = (geo.n, geo.d);
    match geo.kind {
        PartKind::Any => {
            let b = random_matrix(f, n, d, rng);
            (rank(f, &b) == d).then_some(b)
        }
        PartKind::Nondeg => {
            let b = random_matrix(f, n, d, rng);
            let j = form.expect("form");
            (rank(f, &b) == d && !f.is_zero(&determinant(f, &gram(f, &b, j)))).then_some(b)
        }
        PartKind::TotallySingular => {
            let x = random_algebra_element(f, basis, n, rng);
            let g = cayley(f, &x)?;
            let e = Matrix::from_fn(n, d, |i, j| if i == j { f.one() } else { f.zero() });
            let b = mat_mul(f, &g, &e);
            let j = form.expect("form");
            debug_assert!(is_zero_matrix(f, &gram(f, &b, j)));
            (rank(f, &b) == d).then_some(b)
        }
    }
}

fn pair_ok<F: Field>(f: &F, geo: &SubspaceGeometry, form: Option<&Matrix<F::Elem>>, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> bool {
    let ab = a.hcat(b);
    let want = geo.n.min(a.cols + b.cols) - geo.forced_pair_meet();
    if rank(f, &ab) != want {
        return false;
    }
    if geo.kind == PartKind::Nondeg && a.cols + b.cols <= geo.n {
        let j = form.expect("form");
        return !f.is_zero(&determinant(f, &gram(f, &ab, j)));
    }
    true
}

/// Samples `c` generic parts using the ChaCha8 stream `stream` of `seed`.
pub fn sample_configuration_in<F: Field>(
    f: &F,
    geo: SubspaceGeometry,
    c: usize,
    seed: u64,
    stream: u64,
) -> Result<Configuration<F>, GenstabError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let form = standard_form(f, geo.geometry, geo.n);
    let basis = if geo.kind == PartKind::TotallySingular { lie_algebra_basis(f, geo.geometry, form.as_ref(), geo.n) } else { Vec::new() };
    let mut parts: Vec<Matrix<F::Elem>> = Vec::new();
    let mut resamples = 0;
    for idx in 0..c {
        let mut attempts = 0;
        loop {
            attempts += 1;
            if attempts > RESAMPLE_BUDGET {
                return Err(GenstabError::ResampleBudget { part: idx, attempts: attempts - 1 });
            }
            let Some(b) = sample_part(f, &geo, form.as_ref(), &basis, &mut rng) else {
                resamples += 1;
                continue;
            };
            if parts.iter().all(|a| pair_ok(f, &geo, form.as_ref(), a, &b)) {
                parts.push(b);
                break;
            }
            resamples += 1;
        }
    }
    Ok(Configuration { field: f.clone(), geometry: geo, form, parts, seed, stream, resamples })
}

/// Samples `c` generic parts over `F_p` (stream 0 of `seed`).
pub fn sample_configuration(spec: &ActionSpec, c: usize, seed: u64, prime: u64) -> Result<Configuration<Fp>, GenstabError> {
    let f = checked_prime(prime)?;
    let geo = SubspaceGeometry::from_spec(spec)?;
    if c == 0 {
        return Err(GenstabError::Invalid("c must be at least 1".into()));
    }
    sample_configuration_in(&f, geo, c, seed, 0)
}

fn checked_prime(p: u64) -> Result<Fp, GenstabError> {
    if p >= (1 << 32) || !is_prime(p) {
        return Err(GenstabError::InvalidPrime(p));
    }
    Ok(Fp::new(p))
}

/// Structural validity of a configuration: full column rank, and the
/// singularity or non-degeneracy of every part.
pub fn validate_configuration<F: Field>(cfg: &Configuration<F>) -> Result<(), String> {
    let f = &cfg.field;
    for (i, b) in cfg.parts.iter().enumerate() {
        if rank(f, b) != b.cols {
            return Err(format!("part {i} is not of full column rank"));
        }
        if let Some(j) = &cfg.form {
            let g = gram(f, b, j);
            match cfg.geometry.kind {
                PartKind::TotallySingular if !is_zero_matrix(f, &g) => return Err(format!("part {i} is not totally singular")),
                PartKind::Nondeg if f.is_zero(&determinant(f, &g)) => return Err(format!("part {i} is degenerate")),
                _ => {}
            }
        }
    }
    Ok(())
}

/// The annihilator-dual configuration (SL only): each `U_i` is replaced by
/// its annihilator in the dual space, on which `X` acts as `-X^T`.
pub fn dual_configuration<F: Field>(cfg: &Configuration<F>) -> Result<Configuration<F>, GenstabError> {
    let geo = cfg.geometry.dual()?;
    let f = &cfg.field;
    let parts = cfg.parts.iter().map(|b| left_annihilator(f, b).transpose()).collect();
    Ok(Configuration { field: f.clone(), geometry: geo, form: None, parts, seed: cfg.seed, stream: cfg.stream, resamples: cfg.resamples })
}

/// Dimension data for one configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AlgebraDim {
    pub algebra_dim: usize,
    pub projective_dim: usize,
}

fn stabilizer_dims_prefixes<F: Field>(cfg: &Configuration<F>) -> Vec<AlgebraDim> {
    let f = &cfg.field;
    let geo = &cfg.geometry;
    let n = geo.n;
    let basis = lie_algebra_basis(f, geo.geometry, cfg.form.as_ref(), n);
    let annihilators: Vec<Matrix<F::Elem>> = cfg.parts.iter().map(|b| left_annihilator(f, b)).collect();
    let mut rows: Vec<Vec<F::Elem>> = Vec::new();
    let mut out = Vec::new();
    for (nmat, b) in annihilators.iter().zip(&cfg.parts) {
        let images: Vec<Matrix<F::Elem>> = basis.iter().map(|x| mat_mul(f, &mat_mul(f, nmat, x), b)).collect();
        for r in 0..nmat.rows {
            for c in 0..b.cols {
                rows.push(images.iter().map(|m| m.get(r, c).clone()).collect());
            }
        }
        let m = Matrix { rows: rows.len(), cols: basis.len(), data: rows.iter().flatten().cloned().collect() };
        let alg = basis.len() - rank(f, &m);
        out.push(AlgebraDim { algebra_dim: alg, projective_dim: alg - geo.scalar_dim().min(alg) });
    }
    out
}

/// Stabilizer algebra dimension of a configuration.
pub fn stabilizer_algebra_dim<F: Field>(cfg: &Configuration<F>) -> AlgebraDim {
    stabilizer_dims_prefixes(cfg).last().copied().unwrap_or_else(|| {
        let dim = lie_algebra_basis(&cfg.field, cfg.geometry.geometry, cfg.form.as_ref(), cfg.geometry.n).len();
        AlgebraDim { algebra_dim: dim, projective_dim: dim - cfg.geometry.scalar_dim() }
    })
}

/// Trial settings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyOptions {
    pub trials: usize,
    pub seed: u64,
    /// Primes to run at; ignored when `rational` is set.
    pub primes: Vec<u64>,
    pub rational: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { trials: 5, seed: 1, primes: vec![DEFAULT_PRIME, SECOND_PRIME], rational: false }
    }
}

impl VerifyOptions {
    fn fields(&self) -> Result<Vec<FieldChoice>, GenstabError> {
        if self.rational {
            return Ok(vec![FieldChoice::Rational]);
        }
        if self.primes.is_empty() {
            return Err(GenstabError::Invalid("at least one prime is required".into()));
        }
        for &p in &self.primes {
            checked_prime(p)?;
        }
        Ok(self.primes.iter().map(|&p| FieldChoice::Prime(p)).collect())
    }
}

/// Aggregated stabilizer-algebra result for one number of parts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilizerReport {
    pub spec: String,
    pub c: usize,
    pub algebra: String,
    pub algebra_dim: usize,
    pub projective_dim: usize,
    pub trials: usize,
    /// Every trial at every field returned the same dimension.
    pub stable: bool,
    pub per_field: Vec<FieldResult>,
    pub primes_agree: bool,
    pub resamples: usize,
    pub seed: u64,
}

/// Minimum dimension at one field, with the per-trial values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FieldResult {
    pub field: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prime: Option<u64>,
    pub projective_dim: usize,
    pub per_trial: Vec<usize>,
}

fn stream_for(field_index: usize, trial: usize) -> u64 {
    ((field_index as u64) << 32) | trial as u64
}

type PrefixDims = Vec<(FieldChoice, Vec<Vec<AlgebraDim>>)>;

/// Runs all trials at all fields, sampling `c` parts each, and returns the
/// per-prefix dimensions `[field][trial][prefix]` plus total resamples.
fn run_prefixes(geo: SubspaceGeometry, c: usize, opts: &VerifyOptions) -> Result<(PrefixDims, usize), GenstabError> {
    fn trials_in<F: Field>(f: &F, geo: SubspaceGeometry, c: usize, opts: &VerifyOptions, fi: usize) -> Result<(Vec<Vec<AlgebraDim>>, usize), GenstabError> {
        let mut res = Vec::new();
        let mut resamples = 0;
        for t in 0..opts.trials.max(1) {
            let cfg = sample_configuration_in(f, geo, c, opts.seed, stream_for(fi, t))?;
            resamples += cfg.resamples;
            res.push(stabilizer_dims_prefixes(&cfg));
        }
        Ok((res, resamples))
    }
    let mut out = Vec::new();
    let mut total = 0;
    for (fi, fc) in opts.fields()?.into_iter().enumerate() {
        let (r, s) = match fc {
            FieldChoice::Prime(p) => trials_in(&Fp::new(p), geo, c, opts, fi)?,
            FieldChoice::Rational => trials_in(&Rationals, geo, c, opts, fi)?,
        };
        total += s;
        out.push((fc, r));
    }
    Ok((out, total))
}

fn report_at(spec: &str, geo: &SubspaceGeometry, prefix: usize, data: &PrefixDims, resamples: usize, opts: &VerifyOptions) -> StabilizerReport {
    let mut per_field = Vec::new();
    let mut all = Vec::new();
    let mut best_alg = usize::MAX;
    for (fc, trials) in data {
        let dims: Vec<AlgebraDim> = trials.iter().map(|t| t[prefix - 1]).collect();
        let proj: Vec<usize> = dims.iter().map(|d| d.projective_dim).collect();
        best_alg = best_alg.min(dims.iter().map(|d| d.algebra_dim).min().unwrap_or(usize::MAX));
        all.extend(proj.iter().copied());
        per_field.push(FieldResult {
            field: fc.describe(),
            prime: match fc {
                FieldChoice::Prime(p) => Some(*p),
                FieldChoice::Rational => None,
            },
            projective_dim: *proj.iter().min().expect("at least one trial"),
            per_trial: proj,
        });
    }
    let min = *all.iter().min().expect("nonempty");
    StabilizerReport {
        spec: spec.to_string(),
        c: prefix,
        algebra: geo.algebra_name().to_string(),
        algebra_dim: best_alg,
        projective_dim: min,
        trials: opts.trials.max(1),
        stable: all.iter().all(|&v| v == min),
        primes_agree: per_field.iter().all(|r| r.projective_dim == per_field[0].projective_dim),
        per_field,
        resamples,
        seed: opts.seed,
    }
}

/// Stabilizer report for `c` generic parts of the given spec.
pub fn verify(spec: &ActionSpec, c: usize, opts: &VerifyOptions) -> Result<StabilizerReport, GenstabError> {
    if c == 0 {
        return Err(GenstabError::Invalid("c must be at least 1".into()));
    }
    let geo = SubspaceGeometry::from_spec(spec)?;
    let (data, resamples) = run_prefixes(geo, c, opts)?;
    Ok(report_at(&spec.describe(), &geo, c, &data, resamples, opts))
}

/// Result of the `b^0` search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct B0Estimate {
    pub spec: String,
    /// Smallest `c <= c_max` with zero-dimensional generic stabilizer.
    pub b0: Option<usize>,
    pub c_max: usize,
    /// Generic projective stabilizer dimension for `c = 1, 2, ...`.
    pub profile: Vec<usize>,
    pub lower_bound: u64,
    pub consistent_with_lower_bound: bool,
    /// Reports at `b0 - 1` and `b0` (or at `c_max` when not found).
    pub reports: Vec<StabilizerReport>,
    pub primes_agree: bool,
    pub seed: u64,
}

/// Smallest number of generic parts with zero-dimensional stabilizer,
/// searching `c = 1..=c_max` on nested prefixes of one sample per trial.
pub fn estimate_b0(spec: &ActionSpec, c_max: usize, opts: &VerifyOptions) -> Result<B0Estimate, GenstabError> {
    if c_max == 0 {
        return Err(GenstabError::Invalid("c_max must be at least 1".into()));
    }
    let geo = SubspaceGeometry::from_spec(spec)?;
    let (data, resamples) = run_prefixes(geo, c_max, opts)?;
    let desc = spec.describe();
    let mut profile = Vec::new();
    let mut found = None;
    let mut agree = true;
    for c in 1..=c_max {
        let r = report_at(&desc, &geo, c, &data, resamples, opts);
        agree &= r.primes_agree;
        profile.push(r.projective_dim);
        if r.projective_dim == 0 && found.is_none() {
            found = Some(c);
            break;
        }
    }
    let dims = action_dims(&spec.with_char(crate::formulas::CharCase::Good), 7)?
        .ok_or_else(|| GenstabError::Unsupported("dimensions unavailable".into()))?;
    let lower = lower_bound_b0(dims.dim_g as i64, dims.dim_omega as i64).map_err(|e| GenstabError::Invalid(e.to_string()))?;
    let mut reports = Vec::new();
    let at = found.unwrap_or(c_max);
    if at > 1 {
        reports.push(report_at(&desc, &geo, at - 1, &data, resamples, opts));
    }
    reports.push(report_at(&desc, &geo, at, &data, resamples, opts));
    Ok(B0Estimate {
        spec: desc,
        b0: found,
        c_max,
        profile,
        lower_bound: lower,
        consistent_with_lower_bound: found.is_none_or(|v| v as u64 >= lower),
        reports,
        primes_agree: agree,
        seed: opts.seed,
    })
}

/// Profile of projective stabilizer dimensions for `c = 1..=c_max` on one
/// nested sample, for a single field and stream.
pub fn dimension_profile<F: Field>(f: &F, geo: SubspaceGeometry, c_max: usize, seed: u64, stream: u64) -> Result<Vec<usize>, GenstabError> {
    let cfg = sample_configuration_in(f, geo, c_max, seed, stream)?;
    Ok(stabilizer_dims_prefixes(&cfg).iter().map(|d| d.projective_dim).collect())
}

/// Projective stabilizer dimension of a configuration and of its dual.
pub fn dual_pair_dims<F: Field>(cfg: &Configuration<F>) -> Result<(usize, usize), GenstabError> {
    let d = dual_configuration(cfg)?;
    Ok((stabilizer_algebra_dim(cfg).projective_dim, stabilizer_algebra_dim(&d).projective_dim))
}

/// Module actions with generic vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "module", rename_all = "snake_case")]
pub enum ModuleSpec {
    /// `SL_n` on quadratic forms, `X·A = -(X^T A + A X)`.
    Sym2 { n: usize },
    /// `SO_a × SO_b` on `a × b` matrices, `(X_1, X_2)·W = X_1 W + W X_2^T`.
    SoTensor { a: usize, b: usize },
}

impl ModuleSpec {
    pub fn parse(label: &str, n: usize, m: Option<usize>) -> Result<Self, GenstabError> {
        match label {
            "sym2" => Ok(ModuleSpec::Sym2 { n }),
            "so_tensor" => Ok(ModuleSpec::SoTensor { a: n, b: m.unwrap_or(n) }),
            other => Err(GenstabError::UnknownModule(other.to_string())),
        }
    }

    fn describe(&self) -> String {
        match self {
            ModuleSpec::Sym2 { n } => format!("SL_{n} on symmetric bilinear forms"),
            ModuleSpec::SoTensor { a, b } => format!("SO_{a} x SO_{b} on V_{a} (x) V_{b}"),
        }
    }
}

fn module_trial<F: Field>(f: &F, spec: &ModuleSpec, c: usize, rng: &mut ChaCha8Rng) -> (usize, usize, usize) {
    match *spec {
        ModuleSpec::Sym2 { n } => {
            let basis = sl_basis(f, n);
            let mut resamples = 0;
            let mut forms = Vec::new();
            while forms.len() < c {
                let r = random_matrix(f, n, n, rng);
                let a = mat_add(f, &r, &r.transpose());
                if f.is_zero(&determinant(f, &a)) {
                    resamples += 1;
                    continue;
                }
                forms.push(a);
            }
            let mut rows: Vec<Vec<F::Elem>> = Vec::new();
            for a in &forms {
                let imgs: Vec<Matrix<F::Elem>> =
                    basis.iter().map(|x| mat_add(f, &mat_mul(f, &x.transpose(), a), &mat_mul(f, a, x))).collect();
                for i in 0..n {
                    for j in i..n {
                        rows.push(imgs.iter().map(|m| m.get(i, j).clone()).collect());
                    }
                }
            }
            let m = Matrix { rows: rows.len(), cols: basis.len(), data: rows.into_iter().flatten().collect() };
            (basis.len() - rank(f, &m), basis.len(), resamples)
        }
        ModuleSpec::SoTensor { a, b } => {
            let ja = standard_form(f, Geometry::Orthogonal, a).expect("form");
            let jb = standard_form(f, Geometry::Orthogonal, b).expect("form");
            let ba = lie_algebra_basis(f, Geometry::Orthogonal, Some(&ja), a);
            let bb = lie_algebra_basis(f, Geometry::Orthogonal, Some(&jb), b);
            let ws: Vec<Matrix<F::Elem>> = (0..c).map(|_| random_matrix(f, a, b, rng)).collect();
            let mut cols: Vec<Vec<F::Elem>> = Vec::new();
            for x in &ba {
                cols.push(ws.iter().flat_map(|w| mat_mul(f, x, w).data).collect());
            }
            for y in &bb {
                cols.push(ws.iter().flat_map(|w| mat_mul(f, w, &y.transpose()).data).collect());
            }
            let rows = cols[0].len();
            let m = Matrix::from_fn(rows, cols.len(), |i, j| cols[j][i].clone());
            (cols.len() - rank(f, &m), cols.len(), 0)
        }
    }
}

/// Stabilizer algebra of `c` generic vectors of a module.
pub fn module_stabilizer_dim(spec: &ModuleSpec, c: usize, opts: &VerifyOptions) -> Result<StabilizerReport, GenstabError> {
    match *spec {
        ModuleSpec::Sym2 { n } if n < 2 => return Err(GenstabError::Invalid("sym2 needs n >= 2".into())),
        ModuleSpec::SoTensor { a, b } if a < 2 || b < 2 => return Err(GenstabError::Invalid("so_tensor needs a, b >= 2".into())),
        _ => {}
    }
    let mut per_field = Vec::new();
    let mut all = Vec::new();
    let mut resamples = 0;
    let mut alg_total = 0;
    for (fi, fc) in opts.fields()?.into_iter().enumerate() {
        let mut per_trial = Vec::new();
        for t in 0..opts.trials.max(1) {
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            rng.set_stream(stream_for(fi, t));
            let (dim, total, rs) = match fc {
                FieldChoice::Prime(p) => module_trial(&Fp::new(p), spec, c, &mut rng),
                FieldChoice::Rational => module_trial(&Rationals, spec, c, &mut rng),
            };
            alg_total = total;
            resamples += rs;
            per_trial.push(dim);
        }
        all.extend(per_trial.iter().copied());
        per_field.push(FieldResult {
            field: fc.describe(),
            prime: match fc {
                FieldChoice::Prime(p) => Some(p),
                FieldChoice::Rational => None,
            },
            projective_dim: *per_trial.iter().min().expect("trial"),
            per_trial,
        });
    }
    let min = *all.iter().min().expect("nonempty");
    let _ = alg_total;
    Ok(StabilizerReport {
        spec: spec.describe(),
        c,
        algebra: match spec {
            ModuleSpec::Sym2 { .. } => "sl".into(),
            ModuleSpec::SoTensor { .. } => "so+so".into(),
        },
        algebra_dim: min,
        projective_dim: min,
        trials: opts.trials.max(1),
        stable: all.iter().all(|&v| v == min),
        primes_agree: per_field.iter().all(|r| r.projective_dim == per_field[0].projective_dim),
        per_field,
        resamples,
        seed: opts.seed,
    })
}
