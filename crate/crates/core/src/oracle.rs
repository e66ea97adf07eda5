//! Brute-force reference computations.
//!
//! These deliberately avoid the sorted term storage and the leading-term
//! shortcuts used in [`crate::ring`], so that agreement between the two is
//! evidence rather than tautology.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::group::GroupElement;
use crate::ring::RingElement;

fn coefficient_map(r: &RingElement) -> HashMap<GroupElement, BigInt> {
    r.terms().iter().cloned().collect()
}

/// `r` versus `r'` by the coefficientwise definition: `r < r'` iff some `h*`
/// has `r_h* < r'_h*` while `r_h = r'_h` for every `h > h*`. Only elements in
/// the union of the supports can witness either condition.
pub fn quantifier_cmp(r: &RingElement, r_prime: &RingElement) -> Ordering {
    let a = coefficient_map(r);
    let b = coefficient_map(r_prime);
    let zero = BigInt::zero();
    let union: Vec<&GroupElement> = a.keys().chain(b.keys()).collect::<HashSet<_>>().into_iter().collect();
    let coeff = |m: &HashMap<GroupElement, BigInt>, h: &GroupElement| m.get(h).cloned().unwrap_or_else(|| zero.clone());
    let agree_above = |h_star: &GroupElement| {
        union
            .iter()
            .filter(|h| (**h).cmp(h_star) == Ordering::Greater)
            .all(|h| coeff(&a, h) == coeff(&b, h))
    };
    let less = union.iter().any(|h| coeff(&a, h) < coeff(&b, h) && agree_above(h));
    let greater = union.iter().any(|h| coeff(&a, h) > coeff(&b, h) && agree_above(h));
    match (less, greater) {
        (true, false) => Ordering::Less,
        (false, true) => Ordering::Greater,
        (false, false) => Ordering::Equal,
        (true, true) => panic!("coefficientwise order is not antisymmetric for {r} vs {r_prime}"),
    }
}

/// Maximum of the support by a linear scan of pairwise comparisons.
pub fn scan_leading(r: &RingElement) -> Option<(GroupElement, BigInt)> {
    let mut best: Option<&(GroupElement, BigInt)> = None;
    for t in r.terms() {
        best = match best {
            Some(b) if b.0.cmp(&t.0) != Ordering::Less => Some(b),
            _ => Some(t),
        };
    }
    best.cloned()
}

const SEARCH_BUDGET: usize = 1_000_000;

/// All two-sided inverses `r'` of `r` with support in `search_ball` and
/// coefficients in `[-coeff_bound, coeff_bound]`.
///
/// The condition `r r' = 1` is a linear system over the unknown coefficients
/// of `r'`, one equation per product element `h g`. The search assigns
/// unknowns by propagation (an equation with one open unknown forces it) and
/// branches over the coefficient range otherwise, so it is exhaustive over the
/// bounded space. Candidates are then checked for `r' r = 1` as well.
pub fn bounded_inverse_search(r: &RingElement, search_ball: &[GroupElement], coeff_bound: i64) -> Vec<RingElement> {
    if r.is_zero() {
        return Vec::new();
    }
    let terms: Vec<(GroupElement, i64)> = r
        .terms()
        .iter()
        .map(|(g, c)| (g.clone(), c.to_i64().expect("oracle coefficients fit in i64")))
        .collect();

    // equation index by product element
    let mut by_product: HashMap<GroupElement, usize> = HashMap::new();
    let mut equations: Vec<Equation> = Vec::new();
    for (var, g) in search_ball.iter().enumerate() {
        for (h, c) in &terms {
            let k = h.compose(g);
            let idx = *by_product.entry(k.clone()).or_insert_with(|| {
                equations.push(Equation { rhs: i64::from(k.is_identity()), vars: Vec::new() });
                equations.len() - 1
            });
            equations[idx].vars.push((var, *c));
        }
    }
    if !by_product.keys().any(GroupElement::is_identity) {
        return Vec::new();
    }
    let mut var_eqs = vec![Vec::new(); search_ball.len()];
    for (i, eq) in equations.iter().enumerate() {
        for &(v, _) in &eq.vars {
            var_eqs[v].push(i);
        }
    }

    let mut search = Search {
        equations: &equations,
        var_eqs: &var_eqs,
        bound: coeff_bound,
        nodes: 0,
        solutions: Vec::new(),
    };
    search.run(vec![None; search_ball.len()], (0..equations.len()).collect());

    let one = RingElement::one(r.group());
    search
        .solutions
        .into_iter()
        .map(|assign| {
            let terms = search_ball
                .iter()
                .zip(assign)
                .filter(|(_, c)| *c != 0)
                .map(|(g, c)| (g.clone(), BigInt::from(c)));
            RingElement::from_terms(r.group(), terms).expect("ball shares the kind")
        })
        .filter(|inv| r.mul(inv).is_ok_and(|p| p == one) && inv.mul(r).is_ok_and(|p| p == one))
        .collect()
}

struct Equation {
    rhs: i64,
    vars: Vec<(usize, i64)>,
}

struct Search<'a> {
    equations: &'a [Equation],
    var_eqs: &'a [Vec<usize>],
    bound: i64,
    nodes: usize,
    solutions: Vec<Vec<i64>>,
}

impl Search<'_> {
    fn run(&mut self, mut assign: Vec<Option<i64>>, mut queue: Vec<usize>) {
        self.nodes += 1;
        assert!(self.nodes <= SEARCH_BUDGET, "inverse search budget exhausted");
        while let Some(e) = queue.pop() {
            let eq = &self.equations[e];
            let mut sum = 0i64;
            let mut open = None;
            let mut open_count = 0;
            for &(v, c) in &eq.vars {
                match assign[v] {
                    Some(x) => sum += c * x,
                    None => {
                        open_count += 1;
                        open = Some((v, c));
                    }
                }
            }
            match (open_count, open) {
                (0, _) if sum != eq.rhs => return,
                (1, Some((v, c))) => {
                    let need = eq.rhs - sum;
                    if need % c != 0 || (need / c).abs() > self.bound {
                        return;
                    }
                    assign[v] = Some(need / c);
                    queue.extend(self.var_eqs[v].iter().copied());
                }
                _ => {}
            }
        }
        match assign.iter().position(Option::is_none) {
            None => self.solutions.push(assign.into_iter().map(|x| x.expect("assigned")).collect()),
            Some(v) => {
                for x in -self.bound..=self.bound {
                    let mut next = assign.clone();
                    next[v] = Some(x);
                    self.run(next, self.var_eqs[v].clone());
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupKind;

    fn x(e: i64, c: i64) -> RingElement {
        RingElement::term(GroupKind::FreeAbelian { rank: 1 }.elem(&[e]).unwrap(), c)
    }

    #[test]
    fn finds_trivial_inverses() {
        let ball = GroupKind::FreeAbelian { rank: 1 }.ball(3).unwrap();
        assert_eq!(bounded_inverse_search(&x(2, -1), &ball, 3), vec![x(-2, -1)]);
        assert!(bounded_inverse_search(&x(0, 2), &ball, 3).is_empty());
        assert!(bounded_inverse_search(&x(1, 1).add(&x(0, 1)).unwrap(), &ball, 3).is_empty());
        assert!(bounded_inverse_search(&RingElement::zero(&GroupKind::FreeAbelian { rank: 1 }), &ball, 3).is_empty());
    }

    #[test]
    fn quantifier_form_examples() {
        let p = x(1, 1).sub(&x(0, 5)).unwrap();
        assert_eq!(quantifier_cmp(&p, &RingElement::zero(p.group())), Ordering::Greater);
        assert_eq!(quantifier_cmp(&p, &p), Ordering::Equal);
        assert_eq!(quantifier_cmp(&x(0, 100), &x(1, 1)), Ordering::Less);
    }
}
