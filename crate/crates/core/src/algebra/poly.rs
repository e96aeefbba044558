//! Multivariate polynomials over `Q` modulo monomial rewrite relations.
//!
//! Variables are ordered by declaration and monomials compare
//! lexicographically in that order. A relation `m -> p` rewrites the monic
//! monomial `m` (and its multiples); every term of `p` must be smaller than
//! `m`, so rewriting terminates. Confluence is checked at construction by
//! reducing every critical pair, so normal forms do not depend on the order
//! rules are applied in. All arithmetic returns normal forms.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Monomial = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub lhs: Monomial,
    pub rhs: BTreeMap<Monomial, BigRational>,
}

#[derive(Debug, PartialEq, Eq)]
pub struct PolyRing {
    names: Vec<String>,
    relations: Vec<Relation>,
}

#[derive(Clone, Debug)]
pub struct Poly {
    ring: Arc<PolyRing>,
    terms: BTreeMap<Monomial, BigRational>,
}

fn divides(a: &Monomial, b: &Monomial) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn mono_mul(a: &Monomial, b: &Monomial) -> Monomial {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn mono_div(a: &Monomial, b: &Monomial) -> Monomial {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn add_term(terms: &mut BTreeMap<Monomial, BigRational>, m: Monomial, c: BigRational) {
    use std::collections::btree_map::Entry;
    match terms.entry(m) {
        Entry::Vacant(v) => {
            if !c.is_zero() {
                v.insert(c);
            }
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl PolyRing {
    /// Ring without relations. Names must be distinct.
    pub fn free(names: &[&str]) -> Arc<PolyRing> {
        let mut sorted = names.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), names.len(), "variable names must be distinct");
        Arc::new(PolyRing { names: names.iter().map(|s| s.to_string()).collect(), relations: Vec::new() })
    }

    /// The same variables with the rules `lhs -> rhs` added. Each `lhs` must
    /// be a monic monomial; polynomials may come from any ring with the same
    /// variables.
    pub fn with_relations(self: &Arc<Self>, rules: &[(Poly, Poly)]) -> Result<Arc<PolyRing>> {
        let mut relations = self.relations.clone();
        for (lhs, rhs) in rules {
            if lhs.ring.names != self.names || rhs.ring.names != self.names {
                return Err(Error::IncompatibleRelations);
            }
            let lead = match lhs.terms.iter().next() {
                Some((m, c)) if lhs.terms.len() == 1 && c.is_one() && m.iter().any(|&e| e > 0) => m.clone(),
                _ => return Err(Error::NonTerminatingRelations(format!("{lhs} -> {rhs}: left side is not a monic monomial"))),
            };
            if rhs.terms.keys().any(|m| m >= &lead) {
                return Err(Error::NonTerminatingRelations(format!("{lhs} -> {rhs}")));
            }
            relations.push(Relation { lhs: lead, rhs: rhs.terms.clone() });
        }
        let ring = Arc::new(PolyRing { names: self.names.clone(), relations });
        ring.check_confluence()?;
        Ok(ring)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Panics if `name` is not a variable of the ring.
    pub fn var(self: &Arc<Self>, name: &str) -> Poly {
        let i = self.index(name).unwrap_or_else(|| panic!("unknown variable {name}"));
        let mut m = vec![0; self.names.len()];
        m[i] = 1;
        self.monomial(m, BigRational::one())
    }

    pub fn constant(self: &Arc<Self>, c: BigRational) -> Poly {
        self.monomial(vec![0; self.names.len()], c)
    }

    pub fn int(self: &Arc<Self>, c: i64) -> Poly {
        self.constant(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn zero(self: &Arc<Self>) -> Poly {
        Poly { ring: Arc::clone(self), terms: BTreeMap::new() }
    }

    pub fn monomial(self: &Arc<Self>, m: Monomial, c: BigRational) -> Poly {
        let mut terms = BTreeMap::new();
        add_term(&mut terms, m, c);
        self.reduce(terms)
    }

    /// Re-express `p` (same variables, any relations) in this ring.
    pub fn embed(self: &Arc<Self>, p: &Poly) -> Result<Poly> {
        if p.ring.names != self.names {
            return Err(Error::IncompatibleRelations);
        }
        Ok(self.reduce(p.terms.clone()))
    }

    fn rule_for(&self, m: &Monomial) -> Option<&Relation> {
        self.relations.iter().find(|r| divides(&r.lhs, m))
    }

    /// Normal form: greatest term first, so replacements (which are smaller)
    /// never touch finished terms.
    fn reduce(self: &Arc<Self>, mut todo: BTreeMap<Monomial, BigRational>) -> Poly {
        let mut done = BTreeMap::new();
        while let Some((m, c)) = todo.pop_last() {
            match self.rule_for(&m) {
                Some(rule) => {
                    let q = mono_div(&m, &rule.lhs);
                    for (rm, rc) in &rule.rhs {
                        add_term(&mut todo, mono_mul(&q, rm), &c * rc);
                    }
                }
                None => {
                    done.insert(m, c);
                }
            }
        }
        Poly { ring: Arc::clone(self), terms: done }
    }

    fn check_confluence(self: &Arc<Self>) -> Result<()> {
        for (i, a) in self.relations.iter().enumerate() {
            for b in &self.relations[i + 1..] {
                if a.lhs.iter().zip(&b.lhs).all(|(x, y)| x.min(y) == &0) {
                    continue;
                }
                let lcm: Monomial = a.lhs.iter().zip(&b.lhs).map(|(x, y)| *x.max(y)).collect();
                let side = |r: &Relation| {
                    let q = mono_div(&lcm, &r.lhs);
                    let mut t = BTreeMap::new();
                    for (m, c) in &r.rhs {
                        add_term(&mut t, mono_mul(&q, m), c.clone());
                    }
                    self.reduce(t)
                };
                if !(&side(a) - &side(b)).is_zero() {
                    let at = self.monomial(lcm, BigRational::one());
                    return Err(Error::NonConfluentRelations(at.to_string()));
                }
            }
        }
        Ok(())
    }

    /// Reduce with rules applied in an order chosen by `pick(n)`, which must
    /// return an index below `n`. Agrees with the normal form for confluent
    /// relations.
    pub fn reduce_in_order(self: &Arc<Self>, p: &Poly, pick: &mut dyn FnMut(usize) -> usize) -> Poly {
        let mut terms = p.terms.clone();
        loop {
            let redexes: Vec<(Monomial, usize)> = terms
                .keys()
                .flat_map(|m| {
                    self.relations.iter().enumerate().filter(|(_, r)| divides(&r.lhs, m)).map(move |(k, _)| (m.clone(), k))
                })
                .collect();
            if redexes.is_empty() {
                return Poly { ring: Arc::clone(self), terms };
            }
            let (m, k) = redexes[pick(redexes.len()) % redexes.len()].clone();
            let c = terms.remove(&m).expect("redex term present");
            let rule = &self.relations[k];
            let q = mono_div(&m, &rule.lhs);
            for (rm, rc) in &rule.rhs {
                add_term(&mut terms, mono_mul(&q, rm), &c * rc);
            }
        }
    }
}

impl Poly {
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, k: &BigRational) -> Poly {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            add_term(&mut terms, m.clone(), c * k);
        }
        Poly { ring: Arc::clone(&self.ring), terms }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = self.ring.int(1);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    fn same_ring(&self, other: &Poly) {
        assert!(
            Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring,
            "arithmetic between polynomials of different rings"
        );
    }
}

impl PartialEq for Poly {
    fn eq(&self, other: &Poly) -> bool {
        (Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring) && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.same_ring(rhs);
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            add_term(&mut terms, m.clone(), c.clone());
        }
        Poly { ring: Arc::clone(&self.ring), terms }
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-BigRational::one())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &-rhs
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.same_ring(rhs);
        let mut terms = BTreeMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                add_term(&mut terms, mono_mul(a, b), x * y);
            }
        }
        self.ring.reduce(terms)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let factors: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { self.ring.names[i].clone() } else { format!("{}^{e}", self.ring.names[i]) })
                .collect();
            let sign = if c.is_negative() { "-" } else { "+" };
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.abs();
            match (factors.is_empty(), a.is_one()) {
                (true, _) => write!(f, "{a}")?,
                (false, true) => write!(f, "{}", factors.join("*"))?,
                (false, false) => write!(f, "{a}*{}", factors.join("*"))?,
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub holds: bool,
    /// Normal form of `lhs - rhs`.
    pub remainder: Poly,
}

pub fn poly_identity_check(lhs: &Poly, rhs: &Poly) -> Result<IdentityCheck> {
    if !(Arc::ptr_eq(&lhs.ring, &rhs.ring) || lhs.ring == rhs.ring) {
        return Err(Error::IncompatibleRelations);
    }
    let remainder = lhs - rhs;
    Ok(IdentityCheck { holds: remainder.is_zero(), remainder })
}
