//! Partition functions and truncated formal characters.

use std::collections::BTreeMap;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::rootdata::FiniteRootSystem;
use crate::weylcalc::{self, integral_roots, leq, BoxCoords, Classification, WeightBox};
use crate::{Error, Result, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PartitionKind {
    /// All positive affine roots, `nδ` counted with `l` colours.
    Full,
    /// Real positive affine roots only.
    RealOnly,
}

/// Partition counts for every `ν` in a box.
#[derive(Clone, Debug)]
pub struct PartitionTable {
    kind: PartitionKind,
    bx: WeightBox,
    rank: usize,
    values: Vec<u64>,
}

impl PartitionTable {
    pub fn new(sys: &FiniteRootSystem, kind: PartitionKind, bx: WeightBox) -> Self {
        let rank = sys.rank();
        let mut table = PartitionTable { kind, bx, rank, values: Vec::new() };
        let size = (bx.dmax as usize + 1) * (bx.hmax as usize + 1).pow(rank as u32);
        table.values = vec![0; size];
        table.values[0] = 1;
        let all = bx.coords(rank);
        for beta in sys.positive_affine_roots(bx.dmax) {
            if kind == PartitionKind::RealOnly && !beta.is_real() {
                continue;
            }
            let Some(b) = BoxCoords::of_root(sys, &beta) else { continue };
            if !bx.contains(&b) {
                continue;
            }
            for _ in 0..sys.mult(&beta) {
                // coordinates are visited in increasing order, so ν − b is
                // already updated: unbounded multiplicity for this part
                for nu in &all {
                    if let Some(rest) = nu.checked_sub(&b) {
                        let add = table.values[table.index(&rest)];
                        let i = table.index(nu);
                        table.values[i] = table.values[i].checked_add(add).expect("partition count overflow");
                    }
                }
            }
        }
        table
    }

    fn index(&self, c: &BoxCoords) -> usize {
        let radix = self.bx.hmax as usize + 1;
        c.cfin.iter().fold(c.c0 as usize, |acc, &x| acc * radix + x as usize)
    }

    pub fn kind(&self) -> PartitionKind {
        self.kind
    }

    pub fn bx(&self) -> WeightBox {
        self.bx
    }

    /// `None` when `ν` lies outside the table's box.
    pub fn get(&self, nu: &BoxCoords) -> Option<u64> {
        (nu.cfin.len() == self.rank && self.bx.contains(nu)).then(|| self.values[self.index(nu)])
    }
}

fn single_box(nu: &BoxCoords) -> WeightBox {
    WeightBox::new(nu.c0, nu.height())
}

/// `𝒫(ν)`: number of ways to write `ν` as a sum of positive affine roots,
/// imaginary roots with `l` colours.
pub fn kostant_p(sys: &FiniteRootSystem, nu: &BoxCoords) -> u64 {
    PartitionTable::new(sys, PartitionKind::Full, single_box(nu)).get(nu).unwrap()
}

/// `𝒫̄(ν)`: as [`kostant_p`] over real positive roots only.
pub fn restricted_p(sys: &FiniteRootSystem, nu: &BoxCoords) -> u64 {
    PartitionTable::new(sys, PartitionKind::RealOnly, single_box(nu)).get(nu).unwrap()
}

/// Partitions of `m` with `colours` colours per part.
pub fn colored_partitions(m: u32, colours: usize) -> u64 {
    let m = m as usize;
    let mut p = vec![0u64; m + 1];
    p[0] = 1;
    for part in 1..=m {
        for _ in 0..colours {
            for k in part..=m {
                p[k] += p[k - part];
            }
        }
    }
    p[m]
}

/// Finitely supported integer function on `{base − ν : ν in box}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    base: Weight,
    bx: WeightBox,
    rank: usize,
    coeffs: BTreeMap<BoxCoords, i64>,
}

impl Character {
    pub fn zero(base: Weight, bx: WeightBox) -> Self {
        let rank = base.rank();
        Character { base, bx, rank, coeffs: BTreeMap::new() }
    }

    pub fn from_fn(base: Weight, bx: WeightBox, mut f: impl FnMut(&BoxCoords) -> i64) -> Self {
        let mut ch = Character::zero(base, bx);
        for c in bx.coords(ch.rank) {
            let v = f(&c);
            if v != 0 {
                ch.coeffs.insert(c, v);
            }
        }
        ch
    }

    pub fn base(&self) -> &Weight {
        &self.base
    }

    pub fn bx(&self) -> WeightBox {
        self.bx
    }

    /// Coefficient at `base − ν`.
    pub fn coefficient(&self, nu: &BoxCoords) -> Result<i64> {
        if nu.cfin.len() != self.rank || !self.bx.contains(nu) {
            return Err(Error::OutOfBox);
        }
        Ok(self.coeffs.get(nu).copied().unwrap_or(0))
    }

    /// Coefficient at `μ`; weights not below the base, or below it but
    /// outside the box, are reported as [`Error::OutOfBox`].
    pub fn coefficient_at(&self, sys: &FiniteRootSystem, mu: &Weight) -> Result<i64> {
        let nu = leq(sys, mu, &self.base).ok_or(Error::OutOfBox)?;
        self.coefficient(&nu)
    }

    /// Nonzero entries in `BoxCoords` order.
    pub fn entries(&self) -> impl Iterator<Item = (&BoxCoords, i64)> {
        self.coeffs.iter().map(|(c, &v)| (c, v))
    }

    pub fn support(&self) -> Vec<BoxCoords> {
        self.coeffs.keys().cloned().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn combine(&self, other: &Character, sign: i64) -> Result<Character> {
        if self.base != other.base {
            return Err(Error::Dimension("characters have different base weights".into()));
        }
        let bx = self.bx.intersect(&other.bx);
        let mut coeffs = BTreeMap::new();
        for c in self.coeffs.keys().chain(other.coeffs.keys()) {
            if !bx.contains(c) || coeffs.contains_key(c) {
                continue;
            }
            let v = self.coeffs.get(c).copied().unwrap_or(0) + sign * other.coeffs.get(c).copied().unwrap_or(0);
            if v != 0 {
                coeffs.insert(c.clone(), v);
            }
        }
        Ok(Character { base: self.base.clone(), bx, rank: self.rank, coeffs })
    }

    /// Pointwise sum on the intersection of the boxes.
    pub fn add(&self, other: &Character) -> Result<Character> {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &Character) -> Result<Character> {
        self.combine(other, -1)
    }

    pub fn negated(&self) -> Character {
        Character { coeffs: self.coeffs.iter().map(|(c, v)| (c.clone(), -v)).collect(), ..self.clone() }
    }

    /// `e^{−by}·ch`: the base moves down by `by`, coordinates are unchanged.
    pub fn shifted(&self, sys: &FiniteRootSystem, by: &BoxCoords) -> Character {
        Character { base: weylcalc::weight_at(sys, &self.base, by), ..self.clone() }
    }

    /// The same function re-indexed below a higher base `new_base ≥ base`.
    /// The new box must not ask for values the old box does not know.
    pub fn rebased(&self, sys: &FiniteRootSystem, new_base: &Weight, bx: WeightBox) -> Result<Character> {
        let off = leq(sys, &self.base, new_base).ok_or(Error::NotBelow)?;
        if bx.dmax.saturating_sub(off.c0) > self.bx.dmax || bx.hmax.saturating_sub(off.height()) > self.bx.hmax {
            return Err(Error::OutOfBox);
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|(c, v)| (c.add(&off), *v))
            .filter(|(c, _)| bx.contains(c))
            .collect();
        Ok(Character { base: new_base.clone(), bx, rank: self.rank, coeffs })
    }
}

impl Serialize for Character {
    fn serialize<Z: Serializer>(&self, s: Z) -> std::result::Result<Z::Ok, Z::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            c0: u32,
            cfin: &'a [u32],
            value: i64,
        }
        let entries: Vec<Entry> = self.entries().map(|(c, value)| Entry { c0: c.c0, cfin: &c.cfin, value }).collect();
        let mut st = s.serialize_struct("Character", 2)?;
        st.serialize_field("base", &self.base)?;
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}

/// Character of a module whose weight multiplicities below `top` are given
/// by `table`, viewed on the box below `base ≥ top`.
pub fn partition_character_at(
    sys: &FiniteRootSystem,
    table: &PartitionTable,
    top: &Weight,
    base: &Weight,
    bx: WeightBox,
) -> Result<Character> {
    let off = leq(sys, top, base).ok_or(Error::NotBelow)?;
    if table.bx().dmax < bx.dmax || table.bx().hmax < bx.hmax {
        return Err(Error::OutOfBox);
    }
    Ok(Character::from_fn(base.clone(), bx, |c| match c.checked_sub(&off) {
        Some(rest) => i64::try_from(table.get(&rest).expect("inside table")).expect("coefficient overflow"),
        None => 0,
    }))
}

/// `ch Δ(λ)` on the box.
pub fn ch_verma(sys: &FiniteRootSystem, lambda: &Weight, bx: WeightBox) -> Character {
    let table = PartitionTable::new(sys, PartitionKind::Full, bx);
    partition_character_at(sys, &table, lambda, lambda, bx).expect("λ ≤ λ")
}

/// `ch Δ̄(λ)`, with multiplicities `𝒫̄`.
pub fn ch_restricted_verma(sys: &FiniteRootSystem, lambda: &Weight, bx: WeightBox) -> Result<Character> {
    if !weylcalc::is_critical(sys, lambda) {
        return Err(Error::NotCritical { crit: crate::scalar::fmt_rat(&sys.critical_level()) });
    }
    let table = PartitionTable::new(sys, PartitionKind::RealOnly, bx);
    partition_character_at(sys, &table, lambda, lambda, bx)
}

/// `Σ_k sign^k ch Δ̄(α↓ᵏλ)` for `k ≥ first`, viewed below `base`.
pub(crate) fn alternating_down_sum(
    sys: &FiniteRootSystem,
    table: &PartitionTable,
    alpha: &[i64],
    lambda: &Weight,
    first: usize,
    base: &Weight,
    bx: WeightBox,
) -> Result<Character> {
    let mut total = Character::zero(base.clone(), bx);
    let mut current = lambda.clone();
    let mut k = 0;
    loop {
        let off = leq(sys, &current, base).ok_or(Error::NotBelow)?;
        if !bx.contains(&off) {
            return Ok(total);
        }
        if k >= first {
            let term = partition_character_at(sys, table, &current, base, bx)?;
            total = if (k - first) % 2 == 0 { total.add(&term)? } else { total.sub(&term)? };
        }
        let next = weylcalc::down(sys, alpha, &current)?;
        if next == current {
            // ⟨λ+ρ,α∨⟩ = 0 along the whole chain: the series telescopes
            return Ok(Character::zero(base.clone(), bx));
        }
        current = next;
        k += 1;
    }
}

/// `ch L(λ)` when `λ` is generic or subgeneric.
pub fn ch_simple_subgeneric(sys: &FiniteRootSystem, lambda: &Weight, bx: WeightBox) -> Result<Character> {
    match integral_roots(sys, lambda).classification {
        Classification::Generic => ch_restricted_verma(sys, lambda, bx),
        Classification::Subgeneric(alpha) => {
            if !weylcalc::is_critical(sys, lambda) {
                return Err(Error::NotCritical { crit: crate::scalar::fmt_rat(&sys.critical_level()) });
            }
            let table = PartitionTable::new(sys, PartitionKind::RealOnly, bx);
            alternating_down_sum(sys, &table, &alpha, lambda, 0, lambda, bx)
        }
        Classification::General => Err(Error::General),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{AffineRoot, AffineWeight};
    use crate::scalar::{int, rat};
    use crate::Rat;
    use num_traits::Zero;

    fn sys(s: &str) -> FiniteRootSystem {
        FiniteRootSystem::from_series(s).unwrap()
    }

    fn crit(s: &FiniteRootSystem, fin: Vec<Rat>) -> Weight {
        AffineWeight::new(fin, s.critical_level(), Rat::zero())
    }

    /// Explicit multiset enumeration: parts are tried in a fixed order with
    /// non-increasing index, colours of `nδ` as separate parts.
    fn brute(sys: &FiniteRootSystem, nu: &BoxCoords, real_only: bool) -> u64 {
        let mut parts: Vec<BoxCoords> = Vec::new();
        for beta in sys.positive_affine_roots(nu.c0) {
            if real_only && !beta.is_real() {
                continue;
            }
            let b = BoxCoords::of_root(sys, &beta).unwrap();
            for _ in 0..sys.mult(&beta) {
                parts.push(b.clone());
            }
        }
        fn go(parts: &[BoxCoords], max: usize, rest: &BoxCoords) -> u64 {
            if rest.is_zero() {
                return 1;
            }
            (0..max)
                .filter_map(|i| rest.checked_sub(&parts[i]).map(|r| go(parts, i + 1, &r)))
                .sum()
        }
        go(&parts, parts.len(), nu)
    }

    #[test]
    fn a1_values() {
        let a1 = sys("A1");
        let delta = BoxCoords::new(1, vec![1]);
        assert_eq!(kostant_p(&a1, &BoxCoords::zero(1)), 1);
        assert_eq!(kostant_p(&a1, &delta), 2);
        assert_eq!(kostant_p(&a1, &delta.times(2)), 6);
        assert_eq!(restricted_p(&a1, &BoxCoords::zero(1)), 1);
        assert_eq!(restricted_p(&a1, &delta), 1);
        // 2δ − α
        assert_eq!(restricted_p(&a1, &BoxCoords::new(2, vec![1])), 2);
    }

    #[test]
    fn a2_values() {
        let a2 = sys("A2");
        assert_eq!(kostant_p(&a2, &BoxCoords::new(0, vec![1, 1])), 2);
        // −α is not positive
        let below_zero = BoxCoords::new(0, vec![2, 0]);
        assert_eq!(kostant_p(&a2, &below_zero), 1);
    }

    #[test]
    fn tables_match_brute_force() {
        for name in ["A1", "A2"] {
            let s = sys(name);
            let bx = WeightBox::new(2, 6);
            let full = PartitionTable::new(&s, PartitionKind::Full, bx);
            let real = PartitionTable::new(&s, PartitionKind::RealOnly, bx);
            for nu in bx.coords(s.rank()) {
                assert_eq!(full.get(&nu).unwrap(), brute(&s, &nu, false), "{name} {nu}");
                assert_eq!(real.get(&nu).unwrap(), brute(&s, &nu, true), "{name} {nu}");
            }
        }
    }

    #[test]
    fn convolution_identity() {
        for name in ["A1", "A2"] {
            let s = sys(name);
            let l = s.rank();
            let bx = WeightBox::new(3, 6);
            let full = PartitionTable::new(&s, PartitionKind::Full, bx);
            let real = PartitionTable::new(&s, PartitionKind::RealOnly, bx);
            let delta = BoxCoords::of_root(&s, &AffineRoot::imaginary(1)).unwrap();
            for nu in bx.coords(l) {
                let conv: u64 = (0..=nu.c0)
                    .filter_map(|m| nu.checked_sub(&delta.times(m)).map(|r| real.get(&r).unwrap() * colored_partitions(m, l)))
                    .sum();
                assert_eq!(full.get(&nu).unwrap(), conv, "{name} {nu}");
            }
        }
    }

    #[test]
    fn colored_partition_values() {
        assert_eq!(colored_partitions(0, 3), 1);
        assert_eq!((1..=5).map(|m| colored_partitions(m, 1)).collect::<Vec<_>>(), vec![1, 2, 3, 5, 7]);
        assert_eq!((1..=4).map(|m| colored_partitions(m, 2)).collect::<Vec<_>>(), vec![2, 5, 10, 20]);
    }

    #[test]
    fn verma_characters() {
        let a1 = sys("A1");
        let lam = crit(&a1, vec![int(0)]);
        let ch = ch_verma(&a1, &lam, WeightBox::new(2, 4));
        assert_eq!(ch.coefficient_at(&a1, &lam).unwrap(), 1);
        assert_eq!(ch.coefficient(&BoxCoords::new(1, vec![1])).unwrap(), 2);
        let a2 = sys("A2");
        let lam2 = crit(&a2, vec![int(0), int(0)]);
        let ch = ch_verma(&a2, &lam2, WeightBox::new(1, 3));
        assert_eq!(ch.coefficient(&BoxCoords::new(0, vec![1, 1])).unwrap(), 2);
        let r = ch_restricted_verma(&a1, &lam, WeightBox::new(2, 4)).unwrap();
        assert_eq!(r.coefficient(&BoxCoords::zero(1)).unwrap(), 1);
        assert_eq!(r.coefficient(&BoxCoords::new(1, vec![1])).unwrap(), 1);
        assert_eq!(r.coefficient(&BoxCoords::new(0, vec![1])).unwrap(), 1);
        assert!(matches!(
            ch_restricted_verma(&a1, &AffineWeight::from_ints(&[0], 0, 0), WeightBox::new(1, 2)),
            Err(Error::NotCritical { .. })
        ));
    }

    #[test]
    fn simple_characters() {
        let a1 = sys("A1");
        let bx = WeightBox::new(2, 4);
        let generic = crit(&a1, vec![rat(1, 2)]);
        assert_eq!(ch_simple_subgeneric(&a1, &generic, bx).unwrap(), ch_restricted_verma(&a1, &generic, bx).unwrap());
        let lam = crit(&a1, vec![int(0)]);
        let low = weylcalc::down(&a1, &[1], &lam).unwrap();
        let l = ch_simple_subgeneric(&a1, &low, bx).unwrap();
        // at λ−δ = (λ−α) − (δ−α) and at λ−2δ = (λ−α) − (2δ−α)
        assert_eq!(l.coefficient(&BoxCoords::new(1, vec![0])).unwrap(), 0);
        assert_eq!(l.coefficient(&BoxCoords::new(2, vec![1])).unwrap(), 1);
        let general = crit(&sys("A2"), vec![int(0), int(0)]);
        assert_eq!(ch_simple_subgeneric(&sys("A2"), &general, WeightBox::new(1, 3)), Err(Error::General));
    }

    #[test]
    fn short_exact_sequence() {
        for (name, fin, bx) in [
            ("A1", vec![int(0)], WeightBox::new(2, 4)),
            ("A1", vec![int(1)], WeightBox::new(2, 4)),
            ("A1", vec![int(-3)], WeightBox::new(2, 4)),
            ("A2", vec![int(1), rat(-2, 3)], WeightBox::new(1, 3)),
        ] {
            let s = sys(name);
            let lam = crit(&s, fin);
            let Classification::Subgeneric(alpha) = integral_roots(&s, &lam).classification else { panic!() };
            let low = weylcalc::down(&s, &alpha, &lam).unwrap();
            let top = ch_simple_subgeneric(&s, &lam, bx).unwrap();
            let bottom = ch_simple_subgeneric(&s, &low, bx).unwrap().rebased(&s, &lam, bx).unwrap();
            let verma = ch_restricted_verma(&s, &lam, bx).unwrap();
            assert_eq!(top.add(&bottom).unwrap(), verma, "{name}");
            assert!(top.entries().all(|(_, v)| v >= 0));
            assert!(bottom.entries().all(|(_, v)| v >= 0));
        }
    }

    #[test]
    fn arithmetic_and_signals() {
        let a1 = sys("A1");
        let lam = crit(&a1, vec![int(0)]);
        let bx = WeightBox::new(2, 4);
        let ch = ch_restricted_verma(&a1, &lam, bx).unwrap();
        assert!(ch.sub(&ch).unwrap().is_zero());
        let delta = BoxCoords::new(1, vec![1]);
        let shifted = ch.shifted(&a1, &delta);
        let lam_d = weylcalc::weight_at(&a1, &lam, &delta);
        assert_eq!(shifted.coefficient_at(&a1, &lam_d).unwrap(), ch.coefficient_at(&a1, &lam).unwrap());
        let low = weylcalc::down(&a1, &[1], &lam).unwrap();
        let below = ch_restricted_verma(&a1, &low, bx).unwrap();
        assert_eq!(below.coefficient_at(&a1, &lam), Err(Error::OutOfBox));
        assert_eq!(ch.coefficient(&BoxCoords::new(3, vec![0])), Err(Error::OutOfBox));
        assert!(ch.add(&below).is_err());
    }

    #[test]
    fn json_shape() {
        let a1 = sys("A1");
        let lam = crit(&a1, vec![rat(1, 2)]);
        let ch = ch_restricted_verma(&a1, &lam, WeightBox::new(0, 1)).unwrap();
        let js = serde_json::to_string(&ch).unwrap();
        assert_eq!(
            js,
            r#"{"base":{"finite":["1/2"],"level":"-2","ddeg":"0"},"entries":[{"c0":0,"cfin":[0],"value":1},{"c0":0,"cfin":[1],"value":1}]}"#
        );
    }
}
