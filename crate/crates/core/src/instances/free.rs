//! The free monoid `X*` on a finite alphabet.
//!
//! `pX* ∩ qX*` is nonempty exactly when one of `p`, `q` is a prefix of the
//! other, in which case the longer word generates the intersection; left
//! ideals work the same with suffixes. The unit group is trivial, so all
//! canonical-representative questions are vacuous here.

use crate::error::{Error, Result};
use crate::monoid::{LcmMonoid, LcmWitness, Side};
use crate::word::Word;

#[derive(Clone, Debug)]
pub struct FreeMonoid {
    alphabet: u8,
    ceiling: usize,
}

impl FreeMonoid {
    pub fn new(alphabet: u8) -> Self {
        assert!(alphabet >= 2, "alphabet must have at least two letters");
        FreeMonoid {
            alphabet,
            ceiling: 1_000_000,
        }
    }

    pub fn with_ceiling(mut self, ceiling: usize) -> Self {
        self.ceiling = ceiling;
        self
    }

    pub fn alphabet(&self) -> u8 {
        self.alphabet
    }
}

impl LcmMonoid for FreeMonoid {
    type Elem = Word;

    fn identity(&self) -> Word {
        Word::empty()
    }

    fn mul(&self, a: &Word, b: &Word) -> Word {
        a.concat(b)
    }

    fn eq(&self, a: &Word, b: &Word) -> bool {
        a == b
    }

    fn length(&self, a: &Word) -> usize {
        a.len()
    }

    fn divide(&self, side: Side, p: &Word, q: &Word) -> Result<Option<Word>> {
        Ok(match side {
            Side::Left => p.strip_prefix(q),
            Side::Right => p.strip_suffix(q),
        })
    }

    fn right_lcm(&self, p: &Word, q: &Word) -> Result<Option<LcmWitness<Word>>> {
        if p.is_prefix_of(q) {
            Ok(Some(LcmWitness {
                r: q.clone(),
                w1: p.strip_prefix(q).unwrap(),
                w2: Word::empty(),
            }))
        } else if q.is_prefix_of(p) {
            Ok(Some(LcmWitness {
                r: p.clone(),
                w1: Word::empty(),
                w2: q.strip_prefix(p).unwrap(),
            }))
        } else {
            Ok(None)
        }
    }

    fn left_lcm(&self, p: &Word, q: &Word) -> Result<Option<LcmWitness<Word>>> {
        if p.is_suffix_of(q) {
            Ok(Some(LcmWitness {
                r: q.clone(),
                w1: p.strip_suffix(q).unwrap(),
                w2: Word::empty(),
            }))
        } else if q.is_suffix_of(p) {
            Ok(Some(LcmWitness {
                r: p.clone(),
                w1: Word::empty(),
                w2: q.strip_suffix(p).unwrap(),
            }))
        } else {
            Ok(None)
        }
    }

    fn enumerate_up_to(&self, n: usize) -> Result<Vec<Word>> {
        let k = self.alphabet as usize;
        let mut count = 1usize;
        let mut level = 1usize;
        for _ in 0..n {
            level = level.saturating_mul(k);
            count = count.saturating_add(level);
            if count > self.ceiling {
                return Err(Error::ResourceLimit {
                    count,
                    ceiling: self.ceiling,
                });
            }
        }
        Ok(Word::all_up_to(self.alphabet, n))
    }

    fn ceiling(&self) -> usize {
        self.ceiling
    }

    fn fmt_elem(&self, a: &Word) -> String {
        a.to_string()
    }

    fn parse_elem(&self, s: &str) -> Result<Word> {
        let w = Word::parse(s.trim()).ok_or_else(|| Error::Parse {
            pos: 0,
            msg: format!("not a word: {s:?}"),
        })?;
        if let Some(&x) = w.0.iter().find(|&&x| x >= self.alphabet) {
            return Err(Error::Parse {
                pos: 0,
                msg: format!("letter {x} out of range for alphabet of size {}", self.alphabet),
            });
        }
        Ok(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::Opposite;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    /// Brute-force oracle: scan all words up to a length bound for common
    /// right multiples of p and q, and return the minimal ones.
    fn common_right_multiples(m: &FreeMonoid, p: &Word, q: &Word, bound: usize) -> Vec<Word> {
        m.enumerate_up_to(bound)
            .unwrap()
            .into_iter()
            .filter(|c| {
                m.divide(Side::Left, p, c).unwrap().is_some()
                    && m.divide(Side::Left, q, c).unwrap().is_some()
            })
            .collect()
    }

    #[test]
    fn right_lcm_examples() {
        let m = FreeMonoid::new(2);
        let wit = m.right_lcm(&w("0"), &w("01")).unwrap().unwrap();
        assert_eq!(wit.r, w("01"));
        assert_eq!(wit.w1, w("1"));
        assert_eq!(wit.w2, Word::empty());
        assert!(m.right_lcm(&w("0"), &w("1")).unwrap().is_none());
        // identity absorbs
        let wit = m.right_lcm(&Word::empty(), &w("10")).unwrap().unwrap();
        assert_eq!(wit.r, w("10"));
        assert_eq!(wit.w1, w("10"));
        assert_eq!(wit.w2, Word::empty());
    }

    #[test]
    fn left_lcm_examples() {
        let m = FreeMonoid::new(2);
        let wit = m.left_lcm(&w("0"), &w("10")).unwrap().unwrap();
        assert_eq!(wit.r, w("10"));
        assert_eq!(wit.w1, w("1"));
        assert_eq!(wit.w2, Word::empty());
        // no common left multiple of 0 and 1: brute-force over words <= 4
        assert!(common_right_multiples(
            &Opposite(m.clone()).0,
            &w("0"),
            &w("1"),
            4
        )
        .is_empty());
        assert!(m.left_lcm(&w("0"), &w("1")).unwrap().is_none());
        let wit = m.left_lcm(&w("01"), &w("01")).unwrap().unwrap();
        assert_eq!(wit.r, w("01"));
        assert_eq!(wit.w1, Word::empty());
        assert_eq!(wit.w2, Word::empty());
    }

    #[test]
    fn lcm_agrees_with_brute_force() {
        let m = FreeMonoid::new(2);
        let elems = m.enumerate_up_to(3).unwrap();
        for p in &elems {
            for q in &elems {
                let mults = common_right_multiples(&m, p, q, 4);
                match m.right_lcm(p, q).unwrap() {
                    None => assert!(mults.is_empty(), "{p} {q}"),
                    Some(wit) => {
                        assert_eq!(m.mul(p, &wit.w1), wit.r);
                        assert_eq!(m.mul(q, &wit.w2), wit.r);
                        // every common multiple extends the lcm
                        for c in &mults {
                            assert!(m.divide(Side::Left, &wit.r, c).unwrap().is_some());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn divide_examples() {
        let m = FreeMonoid::new(2);
        assert_eq!(m.divide(Side::Left, &w("0"), &w("01")).unwrap(), Some(w("1")));
        assert_eq!(m.divide(Side::Right, &w("0"), &w("10")).unwrap(), Some(w("1")));
        assert_eq!(m.divide(Side::Left, &w("0"), &w("11")).unwrap(), None);
    }

    #[test]
    fn unit_solve_trivial_units() {
        let m = FreeMonoid::new(2);
        assert_eq!(
            m.unit_solve(Side::Right, &w("01"), &w("01")).unwrap(),
            Some(Word::empty())
        );
        assert_eq!(m.unit_solve(Side::Right, &w("01"), &w("0")).unwrap(), None);
    }

    #[test]
    fn enumeration_counts() {
        let m = FreeMonoid::new(2);
        assert_eq!(m.enumerate_up_to(1).unwrap().len(), 3);
        assert_eq!(m.enumerate_up_to(2).unwrap().len(), 7);
        let small = FreeMonoid::new(2).with_ceiling(5);
        assert!(matches!(
            small.enumerate_up_to(3),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn cancellativity_on_enumeration() {
        let m = FreeMonoid::new(2);
        let elems = m.enumerate_up_to(2).unwrap();
        for p in &elems {
            for q in &elems {
                for r in &elems {
                    if m.eq(&m.mul(p, q), &m.mul(p, r)) {
                        assert!(m.eq(q, r));
                    }
                    if m.eq(&m.mul(q, p), &m.mul(r, p)) {
                        assert!(m.eq(q, r));
                    }
                }
            }
        }
    }

    #[test]
    fn opposite_swaps_lcms() {
        let m = FreeMonoid::new(2);
        let op = Opposite(FreeMonoid::new(2));
        assert_eq!(op.mul(&w("0"), &w("1")), w("10"));
        let elems = m.enumerate_up_to(2).unwrap();
        for p in &elems {
            for q in &elems {
                let a = m.left_lcm(p, q).unwrap().map(|x| x.r);
                let b = op.right_lcm(p, q).unwrap().map(|x| x.r);
                assert_eq!(a, b);
                // double opposite behaves like the original
                let opop = Opposite(Opposite(FreeMonoid::new(2)));
                assert_eq!(m.mul(p, q), opop.mul(p, q));
            }
        }
    }
}
