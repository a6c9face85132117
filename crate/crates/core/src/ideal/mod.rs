//! Ideals of a polynomial ring and the decision procedures built on reduced
//! Gröbner bases: membership, radical membership, ideal and variety equality,
//! elimination, saturation and dimension.
//!
//! Every procedure that runs Buchberger's algorithm takes a [`Budget`]. When
//! the budget is exhausted the call fails with
//! [`IdealError::BudgetExceeded`]; a basis is never returned incomplete.

mod groebner;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use num_traits::One;

pub use groebner::GroebnerBasis;

use crate::poly::{MonomialOrder, PolyError, Polynomial, Rational, Ring};

/// Cap on reduction steps for a single Gröbner basis computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_steps: u64,
}

impl Budget {
    pub const DEFAULT_STEPS: u64 = 1_000_000;

    pub fn new(max_steps: u64) -> Budget {
        Budget { max_steps }
    }
}

impl Default for Budget {
    fn default() -> Budget {
        Budget::new(Budget::DEFAULT_STEPS)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IdealError {
    #[error("step budget of {limit} reductions exhausted")]
    BudgetExceeded { limit: u64 },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

impl IdealError {
    pub fn is_budget(&self) -> bool {
        matches!(self, IdealError::BudgetExceeded { .. })
    }
}

/// A finitely generated ideal with a per-order cache of reduced bases.
pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
    cache: RwLock<HashMap<MonomialOrder, Arc<GroebnerBasis>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Ideal {
        Ideal {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            cache: RwLock::new(self.cache.read().expect("cache lock").clone()),
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal({self})")
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", gens.join(", "))
    }
}

impl Ideal {
    /// Zero generators are dropped; all generators must live in `ring`.
    pub fn new(ring: &Ring, generators: Vec<Polynomial>) -> Result<Ideal, PolyError> {
        if generators.iter().any(|g| g.ring() != ring) {
            return Err(PolyError::RingMismatch);
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
            cache: RwLock::new(HashMap::new()),
        })
    }

    /// Parses one polynomial per entry.
    pub fn parse<S: AsRef<str>>(ring: &Ring, texts: &[S]) -> Result<Ideal, PolyError> {
        let gens = texts
            .iter()
            .map(|t| crate::poly::parse_poly(t.as_ref(), ring))
            .collect::<Result<Vec<_>, _>>()?;
        Ideal::new(ring, gens)
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal::new(ring, Vec::new()).expect("empty generator list")
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// The ideal generated by both generator lists; repeated generators are dropped.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal, PolyError> {
        let mut gens = self.generators.clone();
        for g in &other.generators {
            if !gens.contains(g) {
                gens.push(g.clone());
            }
        }
        Ideal::new(&self.ring, gens)
    }

    pub fn with_generator(&self, f: Polynomial) -> Result<Ideal, PolyError> {
        let mut gens = self.generators.clone();
        gens.push(f);
        Ideal::new(&self.ring, gens)
    }

    /// Reduced Gröbner basis for `order`, computed once and cached.
    pub fn groebner(&self, order: MonomialOrder, budget: Budget) -> Result<Arc<GroebnerBasis>, IdealError> {
        if let Some(gb) = self.cache.read().expect("cache lock").get(&order) {
            return Ok(gb.clone());
        }
        let gb = Arc::new(groebner::reduced_basis(&self.ring, &self.generators, order, budget)?);
        let mut cache = self.cache.write().expect("cache lock");
        // A concurrent writer may have won; both bases are identical.
        Ok(cache.entry(order).or_insert(gb).clone())
    }

    fn default_basis(&self, budget: Budget) -> Result<Arc<GroebnerBasis>, IdealError> {
        self.groebner(MonomialOrder::GrevLex, budget)
    }

    pub fn member(&self, f: &Polynomial, budget: Budget) -> Result<bool, IdealError> {
        self.same_ring(f)?;
        if f.is_zero() {
            return Ok(true);
        }
        if self.generators.is_empty() {
            return Ok(false);
        }
        Ok(self.default_basis(budget)?.contains(f))
    }

    /// `f ∈ √I`, decided by testing `1 ∈ I + (1 - t f)` with a fresh `t`.
    pub fn rad_member(&self, f: &Polynomial, budget: Budget) -> Result<bool, IdealError> {
        if self.member(f, budget)? {
            return Ok(true);
        }
        if self.generators.is_empty() {
            return Ok(false);
        }
        let t = self.ring.fresh_name("t");
        let ext = self.ring.append(std::slice::from_ref(&t))?;
        let embed: Vec<usize> = (0..self.ring.arity()).collect();
        let mut gens: Vec<Polynomial> = self.generators.iter().map(|g| g.map_into(&ext, &embed)).collect();
        let tv = Polynomial::var_index(&ext, self.ring.arity());
        gens.push(&Polynomial::one(&ext) - &(&tv * &f.map_into(&ext, &embed)));
        let gb = groebner::reduced_basis(&ext, &gens, MonomialOrder::GrevLex, budget)?;
        Ok(gb.is_unit())
    }

    /// True unless `1 ∈ I`.
    pub fn is_proper(&self, budget: Budget) -> Result<bool, IdealError> {
        if self.generators.is_empty() {
            return Ok(true);
        }
        Ok(!self.default_basis(budget)?.is_unit())
    }

    /// Krull dimension of the zero set; `-1` when the zero set is empty.
    pub fn dim_variety(&self, budget: Budget) -> Result<i64, IdealError> {
        if self.generators.is_empty() {
            return Ok(self.ring.arity() as i64);
        }
        Ok(self.default_basis(budget)?.dimension())
    }

    /// `I ∩ Q[remaining variables]`, via a block order with `drop` first.
    /// The result lives in the original ring.
    pub fn eliminate<S: AsRef<str>>(&self, drop: &[S], budget: Budget) -> Result<Ideal, IdealError> {
        if drop.is_empty() {
            return Ok(self.clone());
        }
        let mut drop_idx = Vec::with_capacity(drop.len());
        for name in drop {
            let name = name.as_ref();
            let i = self
                .ring
                .index_of(name)
                .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
            if !drop_idx.contains(&i) {
                drop_idx.push(i);
            }
        }
        let keep_idx: Vec<usize> = (0..self.ring.arity()).filter(|i| !drop_idx.contains(i)).collect();
        let names: Vec<String> = drop_idx
            .iter()
            .chain(&keep_idx)
            .map(|&i| self.ring.variables()[i].clone())
            .collect();
        let work = Ring::new(names)?;
        let mut to_work = vec![0; self.ring.arity()];
        for (pos, &i) in drop_idx.iter().chain(&keep_idx).enumerate() {
            to_work[i] = pos;
        }
        let back: Vec<Option<usize>> = drop_idx
            .iter()
            .map(|_| None)
            .chain(keep_idx.iter().map(|&i| Some(i)))
            .collect();
        let gens: Vec<Polynomial> = self.generators.iter().map(|g| g.map_into(&work, &to_work)).collect();
        let gb = groebner::reduced_basis(&work, &gens, MonomialOrder::Block(drop_idx.len()), budget)?;
        let kept = gb
            .elements()
            .iter()
            .filter_map(|g| g.restrict_to(&self.ring, &back))
            .map(|g| g.with_order(MonomialOrder::GrevLex))
            .collect();
        Ok(Ideal::new(&self.ring, kept)?)
    }

    /// `I : f^∞`, computed as the elimination of `t` from `I + (1 - t f)`.
    pub fn saturate(&self, f: &Polynomial, budget: Budget) -> Result<Ideal, IdealError> {
        self.same_ring(f)?;
        assert!(!f.is_zero(), "saturation by the zero polynomial");
        let t = self.ring.fresh_name("t");
        let ext = self.ring.prepend(std::slice::from_ref(&t))?;
        let embed: Vec<usize> = (1..=self.ring.arity()).collect();
        let mut gens: Vec<Polynomial> = self.generators.iter().map(|g| g.map_into(&ext, &embed)).collect();
        let tv = Polynomial::var_index(&ext, 0);
        gens.push(&Polynomial::one(&ext) - &(&tv * &f.map_into(&ext, &embed)));
        let extended = Ideal::new(&ext, gens)?;
        let eliminated = extended.eliminate(&[t], budget)?;
        let back: Vec<Option<usize>> = std::iter::once(None).chain((0..self.ring.arity()).map(Some)).collect();
        let gens = eliminated
            .generators()
            .iter()
            .map(|g| g.restrict_to(&self.ring, &back).expect("t eliminated"))
            .collect();
        Ok(Ideal::new(&self.ring, gens)?)
    }

    fn same_ring(&self, f: &Polynomial) -> Result<(), IdealError> {
        if f.ring() == &self.ring {
            Ok(())
        } else {
            Err(PolyError::RingMismatch.into())
        }
    }
}

/// Remainder of `f` on division by `basis`.
pub fn normal_form(f: &Polynomial, basis: &GroebnerBasis) -> Polynomial {
    basis.normal_form(f)
}

/// `I = J` as ideals, by comparing reduced grevlex bases.
pub fn ideal_equal(i: &Ideal, j: &Ideal, budget: Budget) -> Result<bool, IdealError> {
    if i.ring != j.ring {
        return Err(PolyError::RingMismatch.into());
    }
    let a = basis_or_zero(i, budget)?;
    let b = basis_or_zero(j, budget)?;
    Ok(a == b)
}

fn basis_or_zero(i: &Ideal, budget: Budget) -> Result<Vec<Polynomial>, IdealError> {
    if i.generators.is_empty() {
        return Ok(Vec::new());
    }
    Ok(i.default_basis(budget)?.elements().to_vec())
}

/// `√I = √J`, by mutual radical membership of generators.
pub fn variety_equal(i: &Ideal, j: &Ideal, budget: Budget) -> Result<bool, IdealError> {
    Ok(first_outside_radical(i, j, budget)?.is_none() && first_outside_radical(j, i, budget)?.is_none())
}

/// The first generator of `from` that is not in `√into`, if any.
pub fn first_outside_radical<'a>(
    from: &'a Ideal,
    into: &Ideal,
    budget: Budget,
) -> Result<Option<&'a Polynomial>, IdealError> {
    if from.ring != into.ring {
        return Err(PolyError::RingMismatch.into());
    }
    for g in &from.generators {
        if !into.rad_member(g, budget)? {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

/// The whole ring, generated by 1.
pub fn unit_ideal(ring: &Ring) -> Ideal {
    Ideal::new(ring, vec![Polynomial::constant(ring, Rational::one())]).expect("same ring")
}
