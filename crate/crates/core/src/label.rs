//! Group labels for triples: the map `[p,q,r] ↦ p·q⁻¹·r` into an ambient
//! group, multiplicative away from zero and sending exactly the idempotents
//! to the identity.
//!
//! Backends exist where the ambient group has certified arithmetic: the
//! free group on the alphabet (for free monoids, reduced words) and `Z^k`
//! (for grids). Self-similar products carry no certified ambient-group
//! arithmetic here, so asking for a label there is an `Unsupported` error
//! at the call sites that dispatch on instances.

use crate::error::{Error, Result};
use crate::instances::{FreeMonoid, GridElem, GridMonoid};
use crate::isg::Triple;
use crate::monoid::LcmMonoid;
use crate::word::Word;

/// Reduced word in the free group on the alphabet: letters with signs,
/// adjacent inverse pairs cancelled.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FreeGroupWord(pub Vec<(u8, bool)>);

impl FreeGroupWord {
    pub fn identity() -> Self {
        FreeGroupWord(Vec::new())
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn from_word(w: &Word) -> Self {
        FreeGroupWord(w.0.iter().map(|&x| (x, false)).collect())
    }

    pub fn inverse(&self) -> Self {
        FreeGroupWord(self.0.iter().rev().map(|&(x, s)| (x, !s)).collect())
    }

    pub fn mul(&self, other: &FreeGroupWord) -> Self {
        let mut out: Vec<(u8, bool)> = self.0.clone();
        for &l in &other.0 {
            match out.last() {
                Some(&(x, s)) if x == l.0 && s != l.1 => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        FreeGroupWord(out)
    }
}

impl std::fmt::Display for FreeGroupWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for &(x, s) in &self.0 {
            write!(f, "{}{}", x, if s { "⁻" } else { "" })?;
        }
        Ok(())
    }
}

/// Instances whose triples admit a certified group label.
pub trait GroupLabeled: LcmMonoid {
    type Label: Clone + PartialEq + std::fmt::Debug;

    fn label_of(&self, e: &Self::Elem) -> Self::Label;
    fn label_mul(&self, a: &Self::Label, b: &Self::Label) -> Self::Label;
    fn label_inv(&self, a: &Self::Label) -> Self::Label;
    fn label_identity(&self) -> Self::Label;
    fn label_fmt(&self, a: &Self::Label) -> String;
}

impl GroupLabeled for FreeMonoid {
    type Label = FreeGroupWord;

    fn label_of(&self, e: &Word) -> FreeGroupWord {
        FreeGroupWord::from_word(e)
    }

    fn label_mul(&self, a: &FreeGroupWord, b: &FreeGroupWord) -> FreeGroupWord {
        a.mul(b)
    }

    fn label_inv(&self, a: &FreeGroupWord) -> FreeGroupWord {
        a.inverse()
    }

    fn label_identity(&self) -> FreeGroupWord {
        FreeGroupWord::identity()
    }

    fn label_fmt(&self, a: &FreeGroupWord) -> String {
        a.to_string()
    }
}

impl GroupLabeled for GridMonoid {
    type Label = Vec<i64>;

    fn label_of(&self, e: &GridElem) -> Vec<i64> {
        e.0.iter().map(|&x| x as i64).collect()
    }

    fn label_mul(&self, a: &Vec<i64>, b: &Vec<i64>) -> Vec<i64> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    fn label_inv(&self, a: &Vec<i64>) -> Vec<i64> {
        a.iter().map(|x| -x).collect()
    }

    fn label_identity(&self) -> Vec<i64> {
        vec![0; self.rank()]
    }

    fn label_fmt(&self, a: &Vec<i64>) -> String {
        format!("{a:?}")
    }
}

/// `ψ[p,q,r] = p·q⁻¹·r`, reduced. Zero has no label.
pub fn group_label<M: GroupLabeled>(m: &M, s: &Triple<M::Elem>) -> Result<M::Label> {
    let t = s.parts().ok_or(Error::ZeroElement)?;
    let p = m.label_of(&t.p);
    let q = m.label_of(&t.q);
    let r = m.label_of(&t.r);
    Ok(m.label_mul(&m.label_mul(&p, &m.label_inv(&q)), &r))
}
