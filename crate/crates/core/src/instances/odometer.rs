//! The binary odometer (adding machine) action of `Z = <a>` on `{0,1}*`.
//!
//! Words are read least-significant-bit first, so `a` acts by adding one
//! with carry: `a·(0w) = 1w` with `a|_0 = e`, and `a·(1w) = 0(a·w)` with
//! `a|_1 = a`. For `a^m` on a word of length `n` this is plain integer
//! arithmetic: the output word has value `(val + m) mod 2^n` and the
//! restriction is `a^q` with `q = (val + m) div 2^n` (floor division), which
//! makes every query here exact. The action is pseudo-free and recurrent,
//! and transport has the closed form
//! `m = val(delta) - val(alpha) + 2^n * exponent(k)`.

use crate::error::Result;
use crate::word::Word;

use super::selfsim::{SelfSimilarGroup, ZsMonoid};

#[derive(Clone, Debug, Default)]
pub struct Odometer;

pub type OdometerMonoid = ZsMonoid<Odometer>;

pub fn odometer_monoid() -> OdometerMonoid {
    ZsMonoid::new(Odometer)
}

fn floor_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

impl SelfSimilarGroup for Odometer {
    type G = i64;

    fn alphabet(&self) -> u8 {
        2
    }

    fn g_identity(&self) -> i64 {
        0
    }

    fn g_mul(&self, a: &i64, b: &i64) -> i64 {
        a + b
    }

    fn g_inv(&self, a: &i64) -> i64 {
        -a
    }

    fn g_eq(&self, a: &i64, b: &i64) -> bool {
        a == b
    }

    fn act_letter(&self, g: &i64, x: u8) -> (u8, i64) {
        let total = x as i64 + g;
        ((total.rem_euclid(2)) as u8, floor_div(total, 2))
    }

    fn transport(&self, alpha: &Word, delta: &Word, k: &i64) -> Result<Option<i64>> {
        let n = alpha.len() as u32;
        let m = delta.bit_value() - alpha.bit_value() + (1i64 << n) * k;
        Ok(Some(m))
    }

    fn enumerate_group(&self, bound: u32) -> Vec<i64> {
        let mut out = vec![0i64];
        for m in 1..=bound as i64 {
            out.push(m);
            out.push(-m);
        }
        out
    }

    fn canon_left_class(&self, w: &Word, _g: &i64) -> Option<(Word, i64)> {
        // P(w,g) depends only on |w|; the class contains every (word, group)
        // pair of that length
        Some((Word(vec![0; w.len()]), 0))
    }

    fn certified(&self) -> bool {
        true
    }

    fn g_fmt(&self, g: &i64) -> String {
        g.to_string()
    }

    fn g_from_exponent(&self, m: i64) -> i64 {
        m
    }

    fn g_to_exponent(&self, g: &i64) -> Option<i64> {
        Some(*g)
    }
}
