//! Generic initial ideals by random coordinate changes.
//!
//! A generic coordinate change is replaced by random integer matrices drawn
//! from a seeded ChaCha stream; several independent trials must agree before
//! the result is reported as generic.

use std::fmt;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::{delta, AlgebraContext, FreePolynomial, GLMatrix, Word};
use crate::error::{Error, Result};
use crate::exterior::{groebner_ext, initial_ideal_ext, ExtIdeal, MonomialIdealExt};
use crate::free::{normal_word_count, FreeSlices, MonomialIdealFree};
use crate::lifting::{anti_commutators, lift_initial_ideal};
use crate::order::FreeOrderSpec;
use crate::scalar::int;

pub const DEFAULT_HEIGHT: u64 = 100;
pub const DEFAULT_TRIALS: usize = 2;

/// Integer matrix with entries uniform in `[-height, height]`, redrawn until
/// invertible. Deterministic in `seed`.
pub fn random_gl(n: usize, seed: u64, height: u64) -> Result<GLMatrix> {
    AlgebraContext::new(n)?;
    if height == 0 {
        return Err(Error::InvalidRequest(
            "coefficient height must be positive".into(),
        ));
    }
    let h = i64::try_from(height)
        .map_err(|_| Error::InvalidRequest("coefficient height too large".into()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|_| (0..n).map(|_| rng.random_range(-h..=h)).collect())
            .collect();
        if let Ok(g) = GLMatrix::from_integers(&rows) {
            return Ok(g);
        }
    }
}

/// Seeds of the individual trials, derived from the request seed.
pub fn trial_seeds(seed: u64, trials: usize) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials).map(|_| rng.next_u64()).collect()
}

/// Ideal whose generic initial ideal is requested.
#[derive(Debug, Clone)]
pub enum GinInput {
    Exterior(ExtIdeal),
    Free {
        order: FreeOrderSpec,
        generators: Vec<FreePolynomial>,
    },
}

impl GinInput {
    pub fn n(&self) -> usize {
        match self {
            GinInput::Exterior(i) => i.n(),
            GinInput::Free { order, .. } => order.n(),
        }
    }

    /// Generators in the free algebra: for an exterior ideal, the generators
    /// of its preimage (`delta` of the generators and the anti-commutators).
    pub fn free_generators(&self) -> (FreeOrderSpec, Vec<FreePolynomial>) {
        match self {
            GinInput::Exterior(i) => {
                let gens = i
                    .generators()
                    .iter()
                    .map(delta)
                    .chain(anti_commutators(i.n()))
                    .collect();
                (FreeOrderSpec::new(i.order().clone()), gens)
            }
            GinInput::Free { order, generators } => (order.clone(), generators.clone()),
        }
    }

    /// Whether the free generators contain the anti-commutator relations, so
    /// that everything of degree `n + 1` lies in the ideal.
    pub fn contains_anti_commutators(&self) -> bool {
        match self {
            GinInput::Exterior(_) => true,
            GinInput::Free { generators, .. } => {
                let n = self.n();
                anti_commutators(n).iter().all(|a| generators.contains(a))
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct GinRequest {
    pub input: GinInput,
    pub max_degree: usize,
    pub seed: u64,
    pub trials: usize,
    pub height: u64,
}

impl GinRequest {
    /// Defaults: degree cap `n` for exterior ideals and `n + 1` for free
    /// ideals containing the anti-commutators (beyond which nothing new can
    /// appear), two trials, height 100.
    pub fn new(input: GinInput, seed: u64) -> Self {
        let n = input.n();
        let max_degree = match &input {
            GinInput::Exterior(_) => n,
            GinInput::Free { .. } => n + 1,
        };
        GinRequest {
            input,
            max_degree,
            seed,
            trials: DEFAULT_TRIALS,
            height: DEFAULT_HEIGHT,
        }
    }

    pub fn with_max_degree(mut self, d: usize) -> Self {
        self.max_degree = d;
        self
    }

    pub fn with_trials(mut self, trials: usize) -> Self {
        self.trials = trials;
        self
    }

    pub fn with_height(mut self, height: u64) -> Self {
        self.height = height;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.trials < 2 {
            return Err(Error::InvalidRequest(
                "at least two trials are needed".into(),
            ));
        }
        if self.height == 0 {
            return Err(Error::InvalidRequest(
                "coefficient height must be positive".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GinIdeal {
    Exterior(MonomialIdealExt),
    Free(MonomialIdealFree),
}

impl GinIdeal {
    pub fn as_free(&self) -> Option<&MonomialIdealFree> {
        match self {
            GinIdeal::Free(b) => Some(b),
            GinIdeal::Exterior(_) => None,
        }
    }

    pub fn as_exterior(&self) -> Option<&MonomialIdealExt> {
        match self {
            GinIdeal::Exterior(l) => Some(l),
            GinIdeal::Free(_) => None,
        }
    }

    /// Monomials of degree `d` in the ideal.
    pub fn count_in_degree(&self, d: usize) -> u128 {
        match self {
            GinIdeal::Exterior(l) => l.count_in_degree(d),
            GinIdeal::Free(b) => {
                let total = (b.n() as u128).pow(d as u32);
                total - u128::try_from(normal_word_count(b, d)).expect("count fits")
            }
        }
    }
}

impl fmt::Display for GinIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GinIdeal::Exterior(l) => write!(f, "{l}"),
            GinIdeal::Free(b) => write!(f, "{b}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GinResult {
    /// Minimal generators up to the degree cap, from the first trial.
    pub gin: GinIdeal,
    /// `dim` of the transformed ideal in degrees `0..=max_degree`.
    pub dimensions: Vec<usize>,
    pub seeds: Vec<u64>,
    /// All trials produced the same monomial ideal.
    pub agreement: bool,
    /// Indices of trials whose result differs from the first.
    pub disagreeing: Vec<usize>,
    pub max_degree: usize,
}

impl GinResult {
    fn from_trials(
        trials: Vec<(GinIdeal, Vec<usize>)>,
        seeds: Vec<u64>,
        max_degree: usize,
    ) -> Self {
        let disagreeing: Vec<usize> = trials
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, t)| t.0 != trials[0].0)
            .map(|(k, _)| k)
            .collect();
        let (gin, dimensions) = trials.into_iter().next().expect("at least one trial");
        GinResult {
            gin,
            dimensions,
            seeds,
            agreement: disagreeing.is_empty(),
            disagreeing,
            max_degree,
        }
    }
}

/// Generic initial ideal in the exterior algebra, up to the degree cap.
pub fn gin_ext(req: &GinRequest) -> Result<GinResult> {
    req.validate()?;
    let GinInput::Exterior(ideal) = &req.input else {
        return Err(Error::InvalidRequest(
            "gin_ext needs an exterior ideal".into(),
        ));
    };
    let n = ideal.n();
    let seeds = trial_seeds(req.seed, req.trials);
    let trials: Result<Vec<_>> = seeds
        .par_iter()
        .map(|&s| {
            let g = random_gl(n, s, req.height)?;
            let gens = ideal
                .generators()
                .iter()
                .map(|f| g.apply_ext(f))
                .collect::<Result<Vec<_>>>()?;
            let moved = ExtIdeal::new(ideal.order().clone(), gens)?;
            let l = initial_ideal_ext(&groebner_ext(&moved));
            let l = MonomialIdealExt::new(
                n,
                l.generators()
                    .iter()
                    .copied()
                    .filter(|m| m.degree() <= req.max_degree),
            );
            let mut dims = moved.slice_dimensions();
            dims.resize(req.max_degree + 1, 0);
            Ok((GinIdeal::Exterior(l), dims))
        })
        .collect();
    Ok(GinResult::from_trials(trials?, seeds, req.max_degree))
}

/// Generic initial ideal in the free algebra, by row reduction of the
/// slices of the transformed ideal up to the degree cap.
pub fn gin_free(req: &GinRequest) -> Result<GinResult> {
    req.validate()?;
    let (order, generators) = req.input.free_generators();
    let n = order.n();
    let seeds = trial_seeds(req.seed, req.trials);
    let trials: Result<Vec<_>> = seeds
        .par_iter()
        .map(|&s| {
            let g = random_gl(n, s, req.height)?;
            let moved = generators
                .iter()
                .map(|f| g.apply_free(f))
                .collect::<Result<Vec<_>>>()?;
            let slices = FreeSlices::new(order.clone(), &moved, req.max_degree)?;
            Ok((GinIdeal::Free(slices.initial_ideal()), slices.dimensions()))
        })
        .collect();
    Ok(GinResult::from_trials(trials?, seeds, req.max_degree))
}

/// Generic initial ideal of the preimage of an exterior ideal, assembled
/// from the exterior gin: the lifted initial generators together with the
/// `X_jX_i`, `i <= j`.
pub fn gin_lifted(req: &GinRequest) -> Result<GinResult> {
    let GinInput::Exterior(ideal) = &req.input else {
        return Err(Error::InvalidRequest(
            "gin_lifted needs an exterior ideal".into(),
        ));
    };
    if let Some(f) = ideal
        .generators()
        .iter()
        .find(|f| f.homogeneous_degree().is_some_and(|d| d < 2))
    {
        return Err(Error::LinearGenerator(f.to_string()));
    }
    let n = ideal.n();
    let ext = gin_ext(&GinRequest {
        max_degree: n,
        ..req.clone()
    })?;
    let l = ext.gin.as_exterior().expect("exterior gin");
    let lifted = lift_initial_ideal(l)?;
    let cap = req.max_degree;
    let b = MonomialIdealFree::new(
        n,
        lifted
            .generators()
            .iter()
            .filter(|w| w.degree() <= cap)
            .cloned(),
    );
    let gin = GinIdeal::Free(b);
    let dimensions = (0..=cap).map(|d| gin.count_in_degree(d) as usize).collect();
    Ok(GinResult {
        gin,
        dimensions,
        seeds: ext.seeds,
        agreement: ext.agreement,
        disagreeing: ext.disagreeing,
        max_degree: cap,
    })
}

/// Failure of Borel-fixedness: the image of `generator` under
/// `X_from -> X_from + X_to` has the term `monomial` outside the ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorelWitness {
    pub generator: Word,
    pub from: usize,
    pub to: usize,
    pub monomial: Word,
}

impl fmt::Display for BorelWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "X{} -> X{} + X{} maps {} to a polynomial with the term {} outside the ideal",
            self.from, self.from, self.to, self.generator, self.monomial
        )
    }
}

/// Checks invariance under the upward elementary maps
/// `X_i -> X_i + X_j`, `i` below `j` in the variable ranking. Returns the
/// first failure, scanning generators by degree then letters and image terms
/// in lexicographic order.
pub fn borel_witness(b: &MonomialIdealFree, order: &FreeOrderSpec) -> Option<BorelWitness> {
    let n = b.n();
    let ranking = order.ext().ascending_vars();
    for gen in b.generators() {
        let f = FreePolynomial::monomial(n, gen.clone(), int(1));
        for (a, &from) in ranking.iter().enumerate() {
            for &to in &ranking[a + 1..] {
                let e = GLMatrix::elementary(n, from, to, int(1));
                let image = e.apply_free(&f).expect("same context");
                let outside = image.words().find(|w| !b.contains(w)).cloned();
                if let Some(monomial) = outside {
                    return Some(BorelWitness {
                        generator: gen.clone(),
                        from,
                        to,
                        monomial,
                    });
                }
            }
        }
    }
    None
}

pub fn is_borel_fixed(b: &MonomialIdealFree, order: &FreeOrderSpec) -> bool {
    borel_witness(b, order).is_none()
}

/// The untransformed ideal and the gin have equal dimensions in every
/// degree up to the cap.
pub fn hilbert_compare(input: &GinInput, result: &GinResult) -> Result<bool> {
    let cap = result.max_degree;
    let dims: Vec<usize> = match (input, &result.gin) {
        (GinInput::Exterior(i), GinIdeal::Exterior(_)) => {
            let mut d = i.slice_dimensions();
            d.resize(cap + 1, 0);
            d
        }
        (_, GinIdeal::Free(_)) => {
            let (order, gens) = input.free_generators();
            FreeSlices::new(order, &gens, cap)?.dimensions()
        }
        (GinInput::Free { .. }, GinIdeal::Exterior(_)) => {
            return Err(Error::InvalidRequest("exterior gin of a free ideal".into()));
        }
    };
    Ok((0..=cap).all(|d| dims[d] as u128 == result.gin.count_in_degree(d)))
}
