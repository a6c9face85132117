//! Buchberger's algorithm with the Gebauer–Möller pair update (coprime and
//! chain criteria) and normal pair selection.

use num_traits::One;

use super::{Budget, IdealError};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};

/// A reduced Gröbner basis: monic elements sorted ascending by leading
/// monomial. The empty basis generates the zero ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    order: MonomialOrder,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    /// True when the basis is `{1}`, i.e. the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.elements.iter().map(|g| g.leading_monomial().expect("nonzero"))
    }

    /// Remainder of full multivariate division by the basis.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let basis: Vec<&Polynomial> = self.elements.iter().collect();
        let mut steps = Steps::unlimited();
        reduce(&f.with_order(self.order), &basis, &mut steps).expect("unlimited budget")
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Krull dimension of the zero set: the largest set of variables no
    /// leading monomial is supported in. `-1` for the unit ideal.
    pub fn dimension(&self) -> i64 {
        if self.is_unit() {
            return -1;
        }
        let n = self.ring.arity();
        let supports: Vec<Vec<usize>> = self
            .leading_monomials()
            .map(|m| m.support().collect())
            .collect();
        let mut chosen = vec![false; n];
        let mut best = 0;
        max_independent(0, 0, &supports, &mut chosen, &mut best);
        best as i64
    }
}

fn max_independent(
    next: usize,
    size: usize,
    supports: &[Vec<usize>],
    chosen: &mut Vec<bool>,
    best: &mut usize,
) {
    let n = chosen.len();
    if size + (n - next) <= *best {
        return;
    }
    if next == n {
        *best = size;
        return;
    }
    chosen[next] = true;
    let blocked = supports
        .iter()
        .any(|s| s.contains(&next) && s.iter().all(|&v| chosen[v]));
    if !blocked {
        max_independent(next + 1, size + 1, supports, chosen, best);
    }
    chosen[next] = false;
    max_independent(next + 1, size, supports, chosen, best);
}

pub(crate) struct Steps {
    used: u64,
    limit: u64,
}

impl Steps {
    pub(crate) fn new(budget: Budget) -> Steps {
        Steps {
            used: 0,
            limit: budget.max_steps,
        }
    }

    fn unlimited() -> Steps {
        Steps {
            used: 0,
            limit: u64::MAX,
        }
    }

    fn tick(&mut self) -> Result<(), IdealError> {
        self.used += 1;
        if self.used > self.limit {
            Err(IdealError::BudgetExceeded { limit: self.limit })
        } else {
            Ok(())
        }
    }
}

/// Full reduction of `f` by monic `basis` elements sharing its order.
fn reduce(f: &Polynomial, basis: &[&Polynomial], steps: &mut Steps) -> Result<Polynomial, IdealError> {
    let mut p = f.clone();
    let mut rest = Vec::new();
    while let Some((m, c)) = p.leading_term() {
        match basis
            .iter()
            .find(|g| g.leading_monomial().expect("nonzero").divides(m))
        {
            Some(g) => {
                steps.tick()?;
                let q = m.div(g.leading_monomial().expect("nonzero"));
                let c = c.clone();
                p.sub_mul_term(&c, &q, g);
            }
            None => rest.push(p.pop_leading().expect("nonempty")),
        }
    }
    Ok(Polynomial::from_sorted_terms(f.ring(), f.order(), rest))
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct Builder {
    order: MonomialOrder,
    polys: Vec<Polynomial>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl Builder {
    fn lm(&self, i: usize) -> &Monomial {
        self.polys[i].leading_monomial().expect("nonzero")
    }

    fn active_basis(&self) -> Vec<&Polynomial> {
        self.polys
            .iter()
            .zip(&self.active)
            .filter(|(_, &a)| a)
            .map(|(p, _)| p)
            .collect()
    }

    /// Gebauer–Möller update after appending a new monic element.
    fn insert(&mut self, h: Polynomial) {
        let hi = self.polys.len();
        self.polys.push(h);
        self.active.push(true);
        let lm_h = self.lm(hi).clone();

        let mut candidates: Vec<(usize, Monomial)> = (0..hi)
            .filter(|&g| self.active[g])
            .map(|g| (g, self.lm(g).lcm(&lm_h)))
            .collect();

        // Chain criterion among the new pairs. Coprime pairs are kept long
        // enough to shadow others and dropped afterwards.
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        while !candidates.is_empty() {
            let (g, lcm) = candidates.remove(0);
            let coprime = self.lm(g).is_coprime(&lm_h);
            let shadowed = candidates
                .iter()
                .chain(kept.iter())
                .any(|(_, other)| other.divides(&lcm));
            if coprime || !shadowed {
                kept.push((g, lcm));
            }
        }
        let new_pairs: Vec<Pair> = kept
            .into_iter()
            .filter(|(g, _)| !self.lm(*g).is_coprime(&lm_h))
            .map(|(g, lcm)| Pair { i: g, j: hi, lcm })
            .collect();

        // Prune old pairs whose lcm is strictly divisible by lm(h) in the
        // chain sense.
        let polys = &self.polys;
        let lm = |i: usize| polys[i].leading_monomial().expect("nonzero");
        self.pairs.retain(|p| {
            !(lm_h.divides(&p.lcm)
                && lm(p.i).lcm(&lm_h) != p.lcm
                && lm(p.j).lcm(&lm_h) != p.lcm)
        });
        self.pairs.extend(new_pairs);

        for g in 0..hi {
            if self.active[g] && lm_h.divides(self.lm(g)) {
                self.active[g] = false;
            }
        }
    }

    fn select_pair(&mut self) -> Option<Pair> {
        let order = self.order;
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
            order
                .cmp(&pa.lcm, &pb.lcm)
                .then_with(|| (pa.j, pa.i).cmp(&(pb.j, pb.i)))
        })?;
        Some(self.pairs.swap_remove(best))
    }

    fn s_polynomial(&self, pair: &Pair) -> Polynomial {
        let (f, g) = (&self.polys[pair.i], &self.polys[pair.j]);
        let one = num_rational::BigRational::one();
        let a = f.mul_term(&pair.lcm.div(self.lm(pair.i)), &one);
        let mut s = a;
        s.sub_mul_term(&one, &pair.lcm.div(self.lm(pair.j)), g);
        s
    }
}


/// Computes the reduced Gröbner basis of the ideal generated by `gens`.
pub(crate) fn reduced_basis(
    ring: &Ring,
    gens: &[Polynomial],
    order: MonomialOrder,
    budget: Budget,
) -> Result<GroebnerBasis, IdealError> {
    let mut steps = Steps::new(budget);
    let unit = || GroebnerBasis {
        ring: ring.clone(),
        order,
        elements: vec![Polynomial::one(ring).with_order(order)],
    };

    let mut inputs: Vec<Polynomial> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.with_order(order))
        .collect();
    inputs.sort_by(|a, b| {
        order
            .cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
            .then_with(|| a.num_terms().cmp(&b.num_terms()))
    });

    let mut b = Builder {
        order,
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    for f in inputs {
        let h = reduce(&f, &b.active_basis(), &mut steps)?;
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Ok(unit());
        }
        b.insert(h.monic());
    }

    while let Some(pair) = b.select_pair() {
        let s = b.s_polynomial(&pair);
        let h = reduce(&s, &b.active_basis(), &mut steps)?;
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Ok(unit());
        }
        b.insert(h.monic());
    }

    // Inter-reduce the minimal basis.
    let mut elements: Vec<Polynomial> = b
        .polys
        .iter()
        .zip(&b.active)
        .filter(|(_, &a)| a)
        .map(|(p, _)| p.clone())
        .collect();
    for k in 0..elements.len() {
        let others: Vec<&Polynomial> = elements
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != k)
            .map(|(_, p)| p)
            .collect();
        let (head, tail) = {
            let mut t = elements[k].clone();
            let head = t.pop_leading().expect("nonzero");
            (head, t)
        };
        let tail = reduce(&tail, &others, &mut steps)?;
        let mut terms = vec![head];
        terms.extend(tail.terms().iter().cloned());
        elements[k] = Polynomial::from_sorted_terms(ring, order, terms).monic();
    }
    elements.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    Ok(GroebnerBasis {
        ring: ring.clone(),
        order,
        elements,
    })
}
