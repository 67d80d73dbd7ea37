//! The abstract LCM-monoid contract.
//!
//! An LCM monoid is a cancellative monoid in which the intersection of two
//! principal right ideals is empty or principal, and likewise for principal
//! left ideals. Everything downstream (constructible sets, the inverse
//! semigroup of triples, operator shadows) is written against this trait, so
//! a new instance only has to answer division and LCM queries with witnesses.

use crate::error::{Error, Result};

/// Which side an operation acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// An LCM together with its cofactors.
///
/// For `right_lcm(p, q)`: `p·w1 = q·w2 = r` and `pP ∩ qP = rP`.
/// For `left_lcm(p, q)`: `w1·p = w2·q = r` and `Pp ∩ Pq = Pr`.
#[derive(Clone, Debug)]
pub struct LcmWitness<E> {
    pub r: E,
    pub w1: E,
    pub w2: E,
}

/// Contract implemented by every concrete monoid instance.
///
/// `length` is a grading used only for truncation and enumeration; it must
/// satisfy `length(1) = 0` and `length(pq) >= max(length(p), length(q))` for
/// the shipped instances. Absence of a quotient, unit or LCM is a value
/// (`None`), never an error; `Err` is reserved for resource ceilings and for
/// bounded searches that ran out (automaton backends only).
pub trait LcmMonoid {
    type Elem: Clone + std::fmt::Debug;

    fn identity(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn eq(&self, a: &Self::Elem, b: &Self::Elem) -> bool;
    fn length(&self, a: &Self::Elem) -> usize;

    /// `Left`: the unique `x` with `p·x = q`. `Right`: the unique `x` with
    /// `x·p = q`. Uniqueness is cancellativity.
    fn divide(&self, side: Side, p: &Self::Elem, q: &Self::Elem) -> Result<Option<Self::Elem>>;

    /// A generator `r` of `pP ∩ qP` with cofactors, or `None` when the
    /// intersection is empty. The representative within its unit class is
    /// the instance's canonical choice and is stable across runs.
    fn right_lcm(
        &self,
        p: &Self::Elem,
        q: &Self::Elem,
    ) -> Result<Option<LcmWitness<Self::Elem>>>;

    /// Mirror of `right_lcm` for `Pp ∩ Pq`.
    fn left_lcm(&self, p: &Self::Elem, q: &Self::Elem)
        -> Result<Option<LcmWitness<Self::Elem>>>;

    fn is_unit(&self, a: &Self::Elem) -> Result<bool> {
        Ok(self.divide(Side::Left, a, &self.identity())?.is_some())
    }

    /// `Right`: a unit `u` with `p = q·u`. `Left`: a unit `u` with `p = u·q`.
    fn unit_solve(
        &self,
        side: Side,
        p: &Self::Elem,
        q: &Self::Elem,
    ) -> Result<Option<Self::Elem>> {
        let candidate = match side {
            // p = q·u  =>  u = q \ p on the left
            Side::Right => self.divide(Side::Left, q, p)?,
            // p = u·q  =>  u satisfies u·q = p
            Side::Left => self.divide(Side::Right, q, p)?,
        };
        match candidate {
            Some(u) if self.is_unit(&u)? => Ok(Some(u)),
            _ => Ok(None),
        }
    }

    /// Canonical representative of the one-sided unit class of `a`:
    /// `Side::Right` canonicalizes `aP`, `Side::Left` canonicalizes `Pa`.
    /// Instances with trivial unit group keep `a` itself.
    fn canon_class(&self, _side: Side, a: &Self::Elem) -> Self::Elem {
        a.clone()
    }

    /// All elements of length at most `n` in a deterministic
    /// length-then-lexicographic order. Instances with an infinite unit
    /// group additionally bound the group part (see the self-similar
    /// instances).
    fn enumerate_up_to(&self, n: usize) -> Result<Vec<Self::Elem>>;

    fn ceiling(&self) -> usize {
        1_000_000
    }

    fn check_ceiling(&self, count: usize) -> Result<()> {
        if count > self.ceiling() {
            Err(Error::ResourceLimit {
                count,
                ceiling: self.ceiling(),
            })
        } else {
            Ok(())
        }
    }

    fn fmt_elem(&self, a: &Self::Elem) -> String;
    fn parse_elem(&self, s: &str) -> Result<Self::Elem>;
}

/// The opposite monoid: same elements, reversed multiplication. Right and
/// left LCM data swap roles, as do the two division sides.
#[derive(Clone, Debug)]
pub struct Opposite<M>(pub M);

impl<M: LcmMonoid> LcmMonoid for Opposite<M> {
    type Elem = M::Elem;

    fn identity(&self) -> Self::Elem {
        self.0.identity()
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.0.mul(b, a)
    }

    fn eq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.0.eq(a, b)
    }

    fn length(&self, a: &Self::Elem) -> usize {
        self.0.length(a)
    }

    fn divide(&self, side: Side, p: &Self::Elem, q: &Self::Elem) -> Result<Option<Self::Elem>> {
        self.0.divide(side.flip(), p, q)
    }

    fn right_lcm(
        &self,
        p: &Self::Elem,
        q: &Self::Elem,
    ) -> Result<Option<LcmWitness<Self::Elem>>> {
        self.0.left_lcm(p, q)
    }

    fn left_lcm(
        &self,
        p: &Self::Elem,
        q: &Self::Elem,
    ) -> Result<Option<LcmWitness<Self::Elem>>> {
        self.0.right_lcm(p, q)
    }

    fn canon_class(&self, side: Side, a: &Self::Elem) -> Self::Elem {
        self.0.canon_class(side.flip(), a)
    }

    fn enumerate_up_to(&self, n: usize) -> Result<Vec<Self::Elem>> {
        self.0.enumerate_up_to(n)
    }

    fn ceiling(&self) -> usize {
        self.0.ceiling()
    }

    fn fmt_elem(&self, a: &Self::Elem) -> String {
        self.0.fmt_elem(a)
    }

    fn parse_elem(&self, s: &str) -> Result<Self::Elem> {
        self.0.parse_elem(s)
    }
}
