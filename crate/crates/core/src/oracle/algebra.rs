//! The loop algebra `sl_{l+1} ⊗ ℚ[t,t⁻¹] ⊕ ℚc` by elementary matrices.

use std::collections::BTreeMap;
use std::fmt;

use crate::rootdata::{FiniteRootSystem, Root, Series};
use crate::{Error, Result};

/// Basis of `sl_n`: off-diagonal `E_ab` and `H_i = E_ii − E_{i+1,i+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    E(u8, u8),
    H(u8),
}

/// `x ⊗ tⁿ` or the central element `c`. The derived order is the fixed
/// monomial order used for PBW bases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LoopElement {
    Loop { degree: i32, base: Gen },
    Central,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    /// In `n̂₊`.
    Positive,
    /// In `n̂₋`.
    Negative,
    /// `H_i ⊗ 1`.
    Cartan,
    Central,
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::E(a, b) => write!(f, "E{}{}", a + 1, b + 1),
            Gen::H(i) => write!(f, "H{}", i + 1),
        }
    }
}

impl fmt::Display for LoopElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoopElement::Loop { degree: 0, base } => write!(f, "{base}"),
            LoopElement::Loop { degree, base } => write!(f, "{base}t^{degree}"),
            LoopElement::Central => write!(f, "c"),
        }
    }
}

pub type Combo = BTreeMap<LoopElement, i64>;

fn push(out: &mut Combo, x: LoopElement, c: i64) {
    if c == 0 {
        return;
    }
    let e = out.entry(x).or_insert(0);
    *e += c;
    if *e == 0 {
        out.remove(&x);
    }
}

#[derive(Clone, Debug)]
pub struct LoopAlgebra {
    rank: usize,
}

impl LoopAlgebra {
    /// Only type `A` is realized.
    pub fn new(sys: &FiniteRootSystem) -> Result<Self> {
        if sys.series() != Series::A {
            return Err(Error::UnsupportedSeries(sys.name()));
        }
        Ok(LoopAlgebra { rank: sys.rank() })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn finite_basis(&self) -> Vec<Gen> {
        let n = (self.rank + 1) as u8;
        let mut out: Vec<Gen> = (0..n).flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| Gen::E(a, b))).collect();
        out.extend((0..self.rank as u8).map(Gen::H));
        out
    }

    /// All `x ⊗ tⁿ` with `|n| ≤ max_degree`, and `c`.
    pub fn basis(&self, max_degree: i32) -> Vec<LoopElement> {
        let fin = self.finite_basis();
        let mut out: Vec<LoopElement> = (-max_degree..=max_degree)
            .flat_map(|degree| fin.iter().map(move |&base| LoopElement::Loop { degree, base }))
            .collect();
        out.push(LoopElement::Central);
        out
    }

    /// Simple-root coordinates of the weight of a finite basis element.
    pub fn root_of(&self, g: &Gen) -> Root {
        let mut r = vec![0; self.rank];
        if let Gen::E(a, b) = *g {
            let (lo, hi, s) = if a < b { (a, b, 1) } else { (b, a, -1) };
            for x in &mut r[lo as usize..hi as usize] {
                *x = s;
            }
        }
        r
    }

    /// Finite root coordinates and `δ`-degree; `c` has weight zero.
    pub fn weight(&self, x: &LoopElement) -> (Root, i32) {
        match x {
            LoopElement::Loop { degree, base } => (self.root_of(base), *degree),
            LoopElement::Central => (vec![0; self.rank], 0),
        }
    }

    pub fn kind(&self, x: &LoopElement) -> Kind {
        match *x {
            LoopElement::Central => Kind::Central,
            LoopElement::Loop { degree, base } => match degree.cmp(&0) {
                std::cmp::Ordering::Greater => Kind::Positive,
                std::cmp::Ordering::Less => Kind::Negative,
                std::cmp::Ordering::Equal => match base {
                    Gen::H(_) => Kind::Cartan,
                    Gen::E(a, b) if a < b => Kind::Positive,
                    Gen::E(..) => Kind::Negative,
                },
            },
        }
    }

    /// `⟨root of y, α_i∨⟩`, i.e. the eigenvalue of `ad H_i` on `y`.
    pub fn h_eigenvalue(&self, i: usize, y: &Gen) -> i64 {
        match *y {
            Gen::H(_) => 0,
            Gen::E(a, b) => {
                let (a, b) = (a as usize, b as usize);
                let d = |k: usize| i64::from(k == i) - i64::from(k == i + 1);
                d(a) - d(b)
            }
        }
    }

    fn diagonal(&self, d: &[i64]) -> Vec<(Gen, i64)> {
        let mut acc = 0;
        let mut out = Vec::new();
        for (k, dk) in d.iter().take(self.rank).enumerate() {
            acc += dk;
            if acc != 0 {
                out.push((Gen::H(k as u8), acc));
            }
        }
        out
    }

    pub fn finite_bracket(&self, x: &Gen, y: &Gen) -> Vec<(Gen, i64)> {
        match (*x, *y) {
            (Gen::H(_), Gen::H(_)) => Vec::new(),
            (Gen::H(i), e @ Gen::E(..)) => {
                let v = self.h_eigenvalue(i as usize, &e);
                if v == 0 { Vec::new() } else { vec![(e, v)] }
            }
            (Gen::E(..), Gen::H(_)) => self.finite_bracket(y, x).into_iter().map(|(g, c)| (g, -c)).collect(),
            (Gen::E(a, b), Gen::E(c, d)) => {
                // [E_ab, E_cd] = δ_bc E_ad − δ_da E_cb
                let mut diag = vec![0i64; self.rank + 1];
                let mut out = Vec::new();
                if b == c {
                    if a == d {
                        diag[a as usize] += 1;
                    } else {
                        out.push((Gen::E(a, d), 1));
                    }
                }
                if d == a {
                    if c == b {
                        diag[c as usize] -= 1;
                    } else {
                        out.push((Gen::E(c, b), -1));
                    }
                }
                out.extend(self.diagonal(&diag));
                out
            }
        }
    }

    /// `tr(xy)`, the invariant form with `(θ|θ) = 2`.
    pub fn trace_form(&self, x: &Gen, y: &Gen) -> i64 {
        match (*x, *y) {
            (Gen::E(a, b), Gen::E(c, d)) => i64::from(b == c && a == d),
            (Gen::H(i), Gen::H(j)) => match i.abs_diff(j) {
                0 => 2,
                1 => -1,
                _ => 0,
            },
            _ => 0,
        }
    }

    /// `[x⊗tⁿ, y⊗tᵐ] = [x,y]⊗t^{n+m} + n·δ_{n+m,0}·(x|y)·c`.
    pub fn bracket(&self, a: &LoopElement, b: &LoopElement) -> Combo {
        let mut out = Combo::new();
        let (LoopElement::Loop { degree: n, base: x }, LoopElement::Loop { degree: m, base: y }) = (a, b) else {
            return out;
        };
        for (g, c) in self.finite_bracket(x, y) {
            push(&mut out, LoopElement::Loop { degree: n + m, base: g }, c);
        }
        if n + m == 0 {
            push(&mut out, LoopElement::Central, i64::from(*n) * self.trace_form(x, y));
        }
        out
    }

    pub fn bracket_combo(&self, u: &Combo, v: &Combo) -> Combo {
        let mut out = Combo::new();
        for (a, ca) in u {
            for (b, cb) in v {
                for (x, c) in self.bracket(a, b) {
                    push(&mut out, x, ca * cb * c);
                }
            }
        }
        out
    }

    /// Chevalley involution `σ(X⊗tⁿ) = −Xᵀ⊗t⁻ⁿ`, `σ(c) = −c`, returned as a
    /// sign and a basis element.
    pub fn sigma(&self, a: &LoopElement) -> (i64, LoopElement) {
        (-1, self.omega(a))
    }

    /// `ω = −σ`: the anti-involution `X⊗tⁿ ↦ Xᵀ⊗t⁻ⁿ`, `c ↦ c` defining the
    /// contravariant form.
    pub fn omega(&self, a: &LoopElement) -> LoopElement {
        match *a {
            LoopElement::Central => LoopElement::Central,
            LoopElement::Loop { degree, base } => {
                let base = match base {
                    Gen::E(x, y) => Gen::E(y, x),
                    h => h,
                };
                LoopElement::Loop { degree: -degree, base }
            }
        }
    }

    /// `e_0 = E_{l+1,1} ⊗ t` followed by `e_i = E_{i,i+1}`.
    pub fn chevalley_e(&self) -> Vec<LoopElement> {
        let l = self.rank as u8;
        let mut out = vec![LoopElement::Loop { degree: 1, base: Gen::E(l, 0) }];
        out.extend((0..l).map(|i| LoopElement::Loop { degree: 0, base: Gen::E(i, i + 1) }));
        out
    }
}
