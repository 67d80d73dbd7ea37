//! The free-monoid action on bi-infinite sequences and its germs.
//!
//! Points are eventually periodic two-sided sequences `…x₃x₂x₁.y₁y₂y₃…`,
//! stored as two rays in canonical form (primitive period, minimal
//! pre-period), which makes equality decidable and the whole groupoid
//! computation exact. A triple `s = [α, β, γ]` with `β = γγ₁ = α₁α` acts on
//! the points carrying `β` across the origin with `γ` on the left, by
//! shifting the origin `h(s) = |β| − |α| − |γ|` steps; `h` is the integer
//! cocycle and `(h(s), point)` is a complete germ invariant.

use crate::error::{Error, Result};
use crate::instances::FreeMonoid;
use crate::isg::{self, Triple};
use crate::monoid::LcmMonoid;
use crate::word::Word;

/// A one-sided eventually periodic sequence `pre · period^∞` in canonical
/// form: the period is primitive and cannot be rotated into the pre-period.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ray {
    pre: Word,
    period: Word,
}

impl Ray {
    pub fn new(pre: Word, period: Word) -> Ray {
        assert!(!period.is_empty(), "period must be nonempty");
        let mut r = Ray { pre, period };
        r.canonicalize();
        r
    }

    pub fn constant(letter: u8) -> Ray {
        Ray::new(Word::empty(), Word::letter(letter))
    }

    pub fn pre(&self) -> &Word {
        &self.pre
    }

    pub fn period(&self) -> &Word {
        &self.period
    }

    fn canonicalize(&mut self) {
        // primitive period: the shortest word whose power is the period
        let n = self.period.len();
        for d in 1..n {
            if n.is_multiple_of(d) {
                let root = Word(self.period.0[..d].to_vec());
                let mut ok = true;
                for chunk in self.period.0.chunks(d) {
                    if chunk != &root.0[..] {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    self.period = root;
                    break;
                }
            }
        }
        // absorb the pre-period tail into the period by rotation
        while let Some(&last) = self.pre.0.last() {
            if *self.period.0.last().unwrap() == last {
                self.pre.0.pop();
                let c = self.period.0.pop().unwrap();
                self.period.0.insert(0, c);
            } else {
                break;
            }
        }
    }

    pub fn at(&self, i: usize) -> u8 {
        if i < self.pre.len() {
            self.pre.0[i]
        } else {
            self.period.0[(i - self.pre.len()) % self.period.len()]
        }
    }

    pub fn first(&self, n: usize) -> Word {
        Word((0..n).map(|i| self.at(i)).collect())
    }

    pub fn starts_with(&self, w: &Word) -> bool {
        self.first(w.len()) == *w
    }

    /// Drop the first letter.
    pub fn tail(&self) -> Ray {
        if self.pre.is_empty() {
            let mut period = self.period.clone();
            let c = period.0.remove(0);
            period.0.push(c);
            Ray::new(Word::empty(), period)
        } else {
            Ray::new(Word(self.pre.0[1..].to_vec()), self.period.clone())
        }
    }

    pub fn prepend(&self, letter: u8) -> Ray {
        let mut pre = self.pre.clone();
        pre.0.insert(0, letter);
        Ray::new(pre, self.period.clone())
    }

    /// All canonical rays with pre-period and period lengths bounded.
    pub fn enumerate(alphabet: u8, max_pre: usize, max_period: usize) -> Vec<Ray> {
        let mut out = Vec::new();
        for period in Word::all_up_to(alphabet, max_period) {
            if period.is_empty() {
                continue;
            }
            for pre in Word::all_up_to(alphabet, max_pre) {
                let r = Ray::new(pre, period.clone());
                if r.pre.len() <= max_pre
                    && r.period.len() <= max_period
                    && !out.contains(&r)
                {
                    out.push(r);
                }
            }
        }
        out.sort();
        out
    }
}

/// A bi-infinite point `…x₃x₂x₁.y₁y₂y₃…`: `left` is the ray `x₁x₂…` read
/// outward from the origin, `right` is `y₁y₂…`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BiPoint {
    pub left: Ray,
    pub right: Ray,
}

impl BiPoint {
    /// One step of the left shift `σ`: move `y₁` across the origin.
    pub fn shift(&self) -> BiPoint {
        let c = self.right.at(0);
        BiPoint {
            left: self.left.prepend(c),
            right: self.right.tail(),
        }
    }

    /// One step of `σ⁻¹`.
    pub fn unshift(&self) -> BiPoint {
        let c = self.left.at(0);
        BiPoint {
            left: self.left.tail(),
            right: self.right.prepend(c),
        }
    }

    pub fn shift_by(&self, n: i64) -> BiPoint {
        let mut pt = self.clone();
        for _ in 0..n.abs() {
            pt = if n > 0 { pt.shift() } else { pt.unshift() };
        }
        pt
    }

    pub fn fmt(&self) -> String {
        format!(
            "…({}){}.{}({})…",
            self.left.period().reversed(),
            self.left.pre().reversed(),
            self.right.pre(),
            self.right.period()
        )
    }
}

/// `h[α, β, γ] = |β| − |α| − |γ|`. Zero has no cocycle value.
pub fn cocycle_h(s: &Triple<Word>) -> Result<i64> {
    let t = s.parts().ok_or(Error::ZeroElement)?;
    Ok(t.q.len() as i64 - t.p.len() as i64 - t.r.len() as i64)
}

/// Apply `θ_s` to a point: defined on the cylinder where the left ray
/// starts with `reverse(γ)` and the right ray starts with `γ₁` (for
/// `s = [α, β, γ]`, `β = γγ₁`); there it is `σ^{h(s)}`.
pub fn theta_apply(s: &Triple<Word>, pt: &BiPoint) -> Result<Option<BiPoint>> {
    let t = s.parts().ok_or(Error::ZeroElement)?;
    let gamma1 = &t.r1;
    if !pt.left.starts_with(&t.r.reversed()) || !pt.right.starts_with(gamma1) {
        return Ok(None);
    }
    Ok(Some(pt.shift_by(cocycle_h(s)?)))
}

/// A germ `[s, pt]` with `pt` in the domain of `θ_s`.
#[derive(Clone, Debug)]
pub struct Germ {
    pub s: Triple<Word>,
    pub pt: BiPoint,
}

impl Germ {
    pub fn new(s: Triple<Word>, pt: BiPoint) -> Result<Option<Germ>> {
        Ok(theta_apply(&s, &pt)?.map(|_| Germ { s, pt }))
    }

    pub fn range(&self) -> BiPoint {
        theta_apply(&self.s, &self.pt)
            .expect("nonzero")
            .expect("in domain")
    }
}

/// Same germ: same point and same cocycle value (both are defined there).
pub fn germ_eq(g1: &Germ, g2: &Germ) -> Result<bool> {
    Ok(g1.pt == g2.pt && cocycle_h(&g1.s)? == cocycle_h(&g2.s)?)
}

/// The complete invariant `[s, pt] ↦ (h(s), pt)`.
pub fn phi_map(g: &Germ) -> Result<(i64, BiPoint)> {
    Ok((cocycle_h(&g.s)?, g.pt.clone()))
}

/// Compose `[t, θ_s(pt)] [s, pt] = [ts, pt]`.
pub fn germ_compose(m: &FreeMonoid, gt: &Germ, gs: &Germ) -> Result<Option<Germ>> {
    if gs.range() != gt.pt {
        return Ok(None);
    }
    let ts = isg::product(m, &gt.s, &gs.s)?;
    Germ::new(ts, gs.pt.clone())
}

/// Brute-force germ equality: search for a nonzero idempotent `e` defined
/// at the point with `se = te`. Used to cross-check `germ_eq`.
pub fn germ_eq_by_idempotent_search(
    m: &FreeMonoid,
    g1: &Germ,
    g2: &Germ,
    depth: usize,
) -> Result<bool> {
    if g1.pt != g2.pt {
        return Ok(false);
    }
    let elems = m.enumerate_up_to(depth)?;
    for p in &elems {
        for q in &elems {
            let e = isg::make_triple(m, p.clone(), m.mul(q, p), q.clone())?;
            // e defined at the point: left starts with reverse(q), right with p
            if !g1.pt.left.starts_with(&q.reversed()) || !g1.pt.right.starts_with(p) {
                continue;
            }
            let se = isg::product(m, &g1.s, &e)?;
            let te = isg::product(m, &g2.s, &e)?;
            if !se.is_zero() && isg::triple_eq(m, &se, &te)? {
                return Ok(true);
            }
        }
    }
    Ok(false)
}
