//! The grid monoid `N^k` under addition.
//!
//! Commutative, so right and left data coincide: the LCM of two vectors is
//! their coordinatewise maximum and always exists. Length is the coordinate
//! sum. Elements print in canonical word form (generator `i` repeated `v_i`
//! times) so the expression grammar treats all instances uniformly; the
//! parser also accepts a `(a,b,...)` vector form.

use crate::error::{Error, Result};
use crate::monoid::{LcmMonoid, LcmWitness, Side};
use crate::word::Word;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridElem(pub Vec<u32>);

impl GridElem {
    pub fn zero(k: usize) -> Self {
        GridElem(vec![0; k])
    }
}

#[derive(Clone, Debug)]
pub struct GridMonoid {
    rank: usize,
    ceiling: usize,
}

impl GridMonoid {
    pub fn new(rank: usize) -> Self {
        assert!(rank >= 1);
        GridMonoid {
            rank,
            ceiling: 1_000_000,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

impl LcmMonoid for GridMonoid {
    type Elem = GridElem;

    fn identity(&self) -> GridElem {
        GridElem::zero(self.rank)
    }

    fn mul(&self, a: &GridElem, b: &GridElem) -> GridElem {
        GridElem(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
    }

    fn eq(&self, a: &GridElem, b: &GridElem) -> bool {
        a == b
    }

    fn length(&self, a: &GridElem) -> usize {
        a.0.iter().map(|&x| x as usize).sum()
    }

    fn divide(&self, _side: Side, p: &GridElem, q: &GridElem) -> Result<Option<GridElem>> {
        let mut out = Vec::with_capacity(self.rank);
        for (x, y) in p.0.iter().zip(&q.0) {
            if y < x {
                return Ok(None);
            }
            out.push(y - x);
        }
        Ok(Some(GridElem(out)))
    }

    fn right_lcm(&self, p: &GridElem, q: &GridElem) -> Result<Option<LcmWitness<GridElem>>> {
        let r = GridElem(p.0.iter().zip(&q.0).map(|(x, y)| *x.max(y)).collect());
        let w1 = self.divide(Side::Left, p, &r)?.unwrap();
        let w2 = self.divide(Side::Left, q, &r)?.unwrap();
        Ok(Some(LcmWitness { r, w1, w2 }))
    }

    fn left_lcm(&self, p: &GridElem, q: &GridElem) -> Result<Option<LcmWitness<GridElem>>> {
        self.right_lcm(p, q)
    }

    fn enumerate_up_to(&self, n: usize) -> Result<Vec<GridElem>> {
        // simplex enumeration: vectors with coordinate sum <= n
        let mut out = vec![GridElem::zero(self.rank)];
        let mut all = Vec::new();
        for _len in 0..=n {
            all.extend(out.iter().cloned());
            if all.len() > self.ceiling {
                return Err(Error::ResourceLimit {
                    count: all.len(),
                    ceiling: self.ceiling,
                });
            }
            // next shell: all vectors of sum len+1, built by bumping one
            // coordinate; dedup by keeping bumps at or after the last
            // nonzero coordinate
            let mut next = Vec::new();
            for v in &out {
                let last_nonzero = v.0.iter().rposition(|&x| x > 0).unwrap_or(0);
                for i in last_nonzero..self.rank {
                    let mut u = v.0.clone();
                    u[i] += 1;
                    next.push(GridElem(u));
                }
            }
            next.sort();
            next.dedup();
            out = next;
        }
        all.sort_by_key(|v| (self.length(v), v.clone()));
        Ok(all)
    }

    fn ceiling(&self) -> usize {
        self.ceiling
    }

    fn fmt_elem(&self, a: &GridElem) -> String {
        if self.length(a) == 0 {
            return "ε".to_string();
        }
        let mut w = Word::empty();
        for (i, &c) in a.0.iter().enumerate() {
            for _ in 0..c {
                w.0.push(i as u8);
            }
        }
        w.to_string()
    }

    fn parse_elem(&self, s: &str) -> Result<GridElem> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
            let coords: std::result::Result<Vec<u32>, _> =
                inner.split(',').map(|c| c.trim().parse::<u32>()).collect();
            let coords = coords.map_err(|e| Error::Parse {
                pos: 0,
                msg: format!("bad vector: {e}"),
            })?;
            if coords.len() != self.rank {
                return Err(Error::Parse {
                    pos: 0,
                    msg: format!("expected {} coordinates, got {}", self.rank, coords.len()),
                });
            }
            return Ok(GridElem(coords));
        }
        let w = Word::parse(s).ok_or_else(|| Error::Parse {
            pos: 0,
            msg: format!("not a word: {s:?}"),
        })?;
        let mut coords = vec![0u32; self.rank];
        for &x in &w.0 {
            if x as usize >= self.rank {
                return Err(Error::Parse {
                    pos: 0,
                    msg: format!("generator {x} out of range for rank {}", self.rank),
                });
            }
            coords[x as usize] += 1;
        }
        Ok(GridElem(coords))
    }
}
