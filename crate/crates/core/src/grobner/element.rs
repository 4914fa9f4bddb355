use std::cmp::Ordering;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{admissible_compare, Quartet};
use crate::error::{Error, Result};
use crate::graph::OrderedDirectedGraph;
use crate::minor::OrderedMinorMorphism;

/// Node budget for the search over reduction choices in [`PPElement::reduce`].
const REDUCE_BUDGET: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub quartet: Quartet,
    pub coefficient: BigInt,
}

/// An element `Σ λ_μ x^m φ` of a principal projective evaluated at `d'`.
/// Terms are kept sorted ascending in the admissible order with nonzero
/// coefficients, so equal elements have equal representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PPElement {
    d: Arc<OrderedDirectedGraph>,
    d_prime: Arc<OrderedDirectedGraph>,
    terms: Vec<Term>,
}

impl PPElement {
    pub fn zero(d: Arc<OrderedDirectedGraph>, d_prime: Arc<OrderedDirectedGraph>) -> Self {
        PPElement {
            d,
            d_prime,
            terms: Vec::new(),
        }
    }

    /// The basis element `b_μ`.
    pub fn basis(q: Quartet) -> Self {
        Self::from_terms(q.d().clone(), q.d_prime().clone(), vec![(q, BigInt::from(1))]).expect("one quartet")
    }

    pub fn from_terms(
        d: Arc<OrderedDirectedGraph>,
        d_prime: Arc<OrderedDirectedGraph>,
        terms: Vec<(Quartet, BigInt)>,
    ) -> Result<Self> {
        let mut p = Self::zero(d, d_prime);
        for (q, c) in terms {
            p.add_term(q, c)?;
        }
        Ok(p)
    }

    pub fn d(&self) -> &Arc<OrderedDirectedGraph> {
        &self.d
    }

    pub fn d_prime(&self) -> &Arc<OrderedDirectedGraph> {
        &self.d_prime
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, q: Quartet, c: BigInt) -> Result<()> {
        if **q.d() != *self.d || **q.d_prime() != *self.d_prime {
            return Err(Error::ObjectMismatch("term does not live in this module".into()));
        }
        if c.is_zero() {
            return Ok(());
        }
        let mut pos = Err(0);
        for (k, t) in self.terms.iter().enumerate() {
            match admissible_compare(&t.quartet, &q)? {
                Ordering::Less => pos = Err(k + 1),
                Ordering::Equal => {
                    pos = Ok(k);
                    break;
                }
                Ordering::Greater => break,
            }
        }
        match pos {
            Ok(k) => {
                self.terms[k].coefficient += c;
                if self.terms[k].coefficient.is_zero() {
                    self.terms.remove(k);
                }
            }
            Err(k) => self.terms.insert(k, Term { quartet: q, coefficient: c }),
        }
        Ok(())
    }

    pub fn add(&self, other: &PPElement) -> Result<PPElement> {
        let mut out = self.clone();
        for t in &other.terms {
            out.add_term(t.quartet.clone(), t.coefficient.clone())?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> PPElement {
        let mut out = Self::zero(self.d.clone(), self.d_prime.clone());
        if !c.is_zero() {
            out.terms = self
                .terms
                .iter()
                .map(|t| Term {
                    quartet: t.quartet.clone(),
                    coefficient: &t.coefficient * c,
                })
                .collect();
        }
        out
    }

    pub fn sub(&self, other: &PPElement) -> Result<PPElement> {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    /// `x^n · p`.
    pub fn mul_monomial(&self, n: &[u32]) -> Result<PPElement> {
        let mut out = Self::zero(self.d.clone(), self.d_prime.clone());
        for t in &self.terms {
            out.terms.push(Term {
                quartet: t.quartet.add(n)?,
                coefficient: t.coefficient.clone(),
            });
        }
        // adding exponents is strictly monotone, so the order is kept
        Ok(out)
    }

    /// `ψ(p)` for `ψ: d'' -> d'`.
    pub fn push(&self, psi: &OrderedMinorMorphism) -> Result<PPElement> {
        if **psi.target() != *self.d_prime {
            return Err(Error::ObjectMismatch("morphism does not end at this module's object".into()));
        }
        let mut out = Self::zero(self.d.clone(), psi.source().clone());
        for t in &self.terms {
            out.add_term(t.quartet.push(psi)?, t.coefficient.clone())?;
        }
        Ok(out)
    }

    /// The term with the largest quartet.
    pub fn leading(&self) -> Result<&Term> {
        self.terms.last().ok_or(Error::ZeroElement)
    }

    /// Top-reduces against `basis` until the leading term is not divisible
    /// by any pushed basis leading term. Several pushes can reach the same
    /// leading quartet with different lower terms; a bounded search over
    /// these choices looks for a zero remainder before settling for the
    /// first choice at each step.
    pub fn reduce(&self, basis: &[PPElement]) -> Result<PPElement> {
        for b in basis {
            if *b.d != *self.d {
                return Err(Error::ObjectMismatch("basis element has a different first object".into()));
            }
        }
        let basis: Vec<&PPElement> = basis.iter().filter(|b| !b.is_zero()).collect();
        let mut budget = REDUCE_BUDGET;
        if reduces_to_zero(self, &basis, &mut budget)? {
            return Ok(Self::zero(self.d.clone(), self.d_prime.clone()));
        }
        let mut p = self.clone();
        while let Some(next) = top_reductions(&p, &basis)?.into_iter().next() {
            debug_assert!(
                next.is_zero() || admissible_compare(&next.leading()?.quartet, &p.leading()?.quartet)? == Ordering::Less
            );
            p = next;
        }
        Ok(p)
    }
}

fn reduces_to_zero(p: &PPElement, basis: &[&PPElement], budget: &mut usize) -> Result<bool> {
    if p.is_zero() {
        return Ok(true);
    }
    if *budget == 0 {
        return Ok(false);
    }
    *budget -= 1;
    for next in top_reductions(p, basis)? {
        if reduces_to_zero(&next, basis, budget)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Every `p - (λ/λ_i) x^n ψ(p_i)` cancelling the leading term of `p`.
fn top_reductions(p: &PPElement, basis: &[&PPElement]) -> Result<Vec<PPElement>> {
    let Some(lt) = p.terms.last() else {
        return Ok(Vec::new());
    };
    let mut out = Vec::new();
    for b in basis {
        let lb = b.leading()?;
        let (factor, rem) = lt.coefficient.div_rem(&lb.coefficient);
        if !rem.is_zero() {
            continue;
        }
        for (psi, n) in lb.quartet.leq_witnesses(&lt.quartet)? {
            let sub = b.push(&psi)?.mul_monomial(&n)?.scale(&factor);
            out.push(p.sub(&sub)?);
        }
    }
    debug_assert!(out.iter().all(|r| r.terms.last().is_none_or(|t| t.quartet != lt.quartet)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minor::{od_hom_set, Image};

    fn od(n: usize, arrows: &[(usize, usize)]) -> Arc<OrderedDirectedGraph> {
        Arc::new(OrderedDirectedGraph::new(n, arrows).unwrap())
    }

    #[test]
    fn zero_has_no_leading_term() {
        let d = od(1, &[]);
        let p = PPElement::zero(d.clone(), d);
        assert!(matches!(p.leading(), Err(Error::ZeroElement)));
    }

    #[test]
    fn terms_cancel() {
        let d = od(2, &[(1, 0)]);
        let q = Quartet::new(OrderedMinorMorphism::identity(d.clone()), vec![1]).unwrap();
        let p = PPElement::basis(q.clone());
        assert!(p.sub(&p).unwrap().is_zero());
        assert_eq!(p.scale(&BigInt::from(3)).leading().unwrap().coefficient, BigInt::from(3));
    }

    #[test]
    fn leading_prefers_larger_exponent() {
        let d = od(2, &[(1, 0)]);
        let id = OrderedMinorMorphism::identity(d.clone());
        let lo = Quartet::new(id.clone(), vec![1]).unwrap();
        let hi = Quartet::new(id, vec![2]).unwrap();
        let p = PPElement::from_terms(
            d.clone(),
            d,
            vec![(hi.clone(), BigInt::from(5)), (lo, BigInt::from(-1))],
        )
        .unwrap();
        assert_eq!(p.leading().unwrap().quartet, hi);
    }

    #[test]
    fn reduce_trivial_cases() {
        let d = od(2, &[(1, 0)]);
        let q = Quartet::new(OrderedMinorMorphism::identity(d.clone()), vec![0]).unwrap();
        let b = PPElement::basis(q);
        assert!(b.reduce(std::slice::from_ref(&b)).unwrap().is_zero());
        assert_eq!(b.reduce(&[]).unwrap(), b);
    }

    #[test]
    fn reduce_pushed_multiple() {
        let point = od(1, &[]);
        let single = od(2, &[(1, 0)]);
        let path = od(3, &[(1, 0), (2, 1)]);
        let to_point = od_hom_set(&single, &point).unwrap();
        let q = PPElement::from_terms(
            point.clone(),
            single.clone(),
            vec![
                (Quartet::new(to_point[0].clone(), vec![2]).unwrap(), BigInt::from(3)),
                (Quartet::new(to_point[0].clone(), vec![0]).unwrap(), BigInt::from(-2)),
            ],
        )
        .unwrap();
        let psi = OrderedMinorMorphism::new(path, single, vec![0, 1, 1], vec![Image::Arrow(0), Image::Vertex(1)]).unwrap();
        let p = q.push(&psi).unwrap().mul_monomial(&[1, 3]).unwrap();
        assert!(p.reduce(&[q]).unwrap().is_zero());
    }
}
