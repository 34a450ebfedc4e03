//! Finite root systems built from Cartan data, and the affine weights and
//! roots of the associated untwisted affine algebra.
//!
//! Conventions: `cartan[i][j] = ⟨α_j, α_i∨⟩`; roots are integer vectors in
//! the simple-root basis; the finite part of a weight is stored by its
//! coroot pairings `⟨λ, α_i∨⟩`. The invariant form is normalized so that the
//! highest root has `(θ|θ) = 2`.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::exactalg::rref;
use crate::scalar::{fmt_rat, int, rat};
use crate::{DeformedWeight, Error, PolyT, Rat, Result, Scalar, Weight};

pub type Root = Vec<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    /// Number of roots of the finite system of this type and rank.
    pub fn root_count(self, rank: usize) -> usize {
        let l = rank;
        match self {
            Series::A => l * (l + 1),
            Series::B | Series::C => 2 * l * l,
            Series::D => 2 * l * (l - 1),
            Series::E => match l {
                6 => 72,
                7 => 126,
                _ => 240,
            },
            Series::F => 48,
            Series::G => 12,
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Cartan matrix of finite type together with its symmetrizers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanDatum {
    series: Series,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    /// `d_i = (α_i|α_i)/2`, so `d_i·a_ij = d_j·a_ji`; long roots have `d = 1`.
    symmetrizers: Vec<Rat>,
}

impl CartanDatum {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 3,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if !ok {
            return Err(Error::UnknownSeries(format!("{series}{rank}")));
        }
        let l = rank;
        let mut a = vec![vec![0i64; l]; l];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match series {
            Series::A | Series::B | Series::C | Series::F | Series::G => {
                for i in 0..l - 1 {
                    link(i, i + 1);
                }
            }
            Series::D => {
                for i in 0..l - 2 {
                    link(i, i + 1);
                }
                link(l - 3, l - 1);
            }
            Series::E => {
                link(0, 2);
                link(1, 3);
                for i in 2..l - 1 {
                    link(i, i + 1);
                }
            }
        }
        // the row index of the short end carries the larger entry
        match series {
            Series::B => a[l - 1][l - 2] = -2,
            Series::C => a[l - 2][l - 1] = -2,
            Series::F => a[2][1] = -2,
            Series::G => a[0][1] = -3,
            _ => {}
        }
        Self::from_matrix(series, a)
    }

    /// Validates a Cartan matrix and computes its symmetrizers. Finite type
    /// is checked later, when the roots are generated.
    pub fn from_matrix(series: Series, cartan: Vec<Vec<i64>>) -> Result<Self> {
        let l = cartan.len();
        if l == 0 || cartan.iter().any(|r| r.len() != l) {
            return Err(Error::Dimension("Cartan matrix must be square and non-empty".into()));
        }
        for i in 0..l {
            if cartan[i][i] != 2 {
                return Err(Error::NotFiniteType);
            }
            for j in 0..l {
                if i != j && (cartan[i][j] > 0 || (cartan[i][j] == 0) != (cartan[j][i] == 0)) {
                    return Err(Error::NotSymmetrizable);
                }
            }
        }
        let mut d: Vec<Option<Rat>> = vec![None; l];
        d[0] = Some(Rat::one());
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            let di = d[i].clone().unwrap();
            for j in 0..l {
                if i == j || cartan[i][j] == 0 {
                    continue;
                }
                let dj = &di * rat(cartan[i][j], cartan[j][i]);
                match &d[j] {
                    Some(old) if *old != dj => return Err(Error::NotSymmetrizable),
                    Some(_) => {}
                    None => {
                        d[j] = Some(dj);
                        queue.push_back(j);
                    }
                }
            }
        }
        // disconnected diagrams are not simple
        let d: Vec<Rat> = d.into_iter().collect::<Option<_>>().ok_or(Error::NotFiniteType)?;
        let max = d.iter().max().unwrap().clone();
        let symmetrizers = d.into_iter().map(|x| x / &max).collect();
        Ok(CartanDatum { series, rank: l, cartan, symmetrizers })
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizers(&self) -> &[Rat] {
        &self.symmetrizers
    }
}

impl FromStr for CartanDatum {
    type Err = Error;

    /// Series letter followed by the rank, e.g. `"A2"` or `"e8"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::UnknownSeries(s.to_string());
        let mut chars = s.chars();
        let series = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Series::A,
            Some('B') => Series::B,
            Some('C') => Series::C,
            Some('D') => Series::D,
            Some('E') => Series::E,
            Some('F') => Series::F,
            Some('G') => Series::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        CartanDatum::new(series, rank).map_err(|_| bad())
    }
}

/// Which line `λ + t·dir` a weight is deformed along.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Deformation {
    /// `dir = ρ`; moves the level, used for ordinary Verma modules.
    Rho,
    /// `dir = ρ̄`; vanishes on `c` and `d`, so restricted quotients exist.
    RhoBar,
}

impl FromStr for Deformation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "rho" => Ok(Deformation::Rho),
            "rhobar" | "rho-bar" | "rho_bar" => Ok(Deformation::RhoBar),
            _ => Err(Error::Parse(format!("unknown deformation direction {s:?}"))),
        }
    }
}

/// Element of `ĥ*`: coroot pairings of the finite part, the level `λ(c)`
/// and the coefficient of `δ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineWeight<S> {
    pub finite: Vec<S>,
    pub level: S,
    pub ddeg: S,
}

impl<S: Scalar> AffineWeight<S> {
    pub fn new(finite: Vec<S>, level: S, ddeg: S) -> Self {
        AffineWeight { finite, level, ddeg }
    }

    pub fn zero(rank: usize) -> Self {
        AffineWeight { finite: vec![S::zero(); rank], level: S::zero(), ddeg: S::zero() }
    }

    /// `Λ∘`: level one, orthogonal to the finite part.
    pub fn lambda0(rank: usize) -> Self {
        AffineWeight { level: S::one(), ..Self::zero(rank) }
    }

    pub fn delta(rank: usize) -> Self {
        AffineWeight { ddeg: S::one(), ..Self::zero(rank) }
    }

    pub fn rank(&self) -> usize {
        self.finite.len()
    }

    pub fn scaled(&self, k: &S) -> Self {
        AffineWeight {
            finite: self.finite.iter().map(|x| x.clone() * k.clone()).collect(),
            level: self.level.clone() * k.clone(),
            ddeg: self.ddeg.clone() * k.clone(),
        }
    }

    pub fn scaled_rat(&self, k: &Rat) -> Self {
        AffineWeight {
            finite: self.finite.iter().map(|x| x.scale(k)).collect(),
            level: self.level.scale(k),
            ddeg: self.ddeg.scale(k),
        }
    }
}

impl AffineWeight<Rat> {
    pub fn from_ints(finite: &[i64], level: i64, ddeg: i64) -> Self {
        AffineWeight { finite: finite.iter().map(|&x| int(x)).collect(), level: int(level), ddeg: int(ddeg) }
    }

    /// The same weight over another coefficient ring.
    pub fn lift<T: Scalar>(&self) -> AffineWeight<T> {
        AffineWeight {
            finite: self.finite.iter().map(T::from_rat).collect(),
            level: T::from_rat(&self.level),
            ddeg: T::from_rat(&self.ddeg),
        }
    }
}

impl AffineWeight<PolyT> {
    /// `base + t·dir`.
    pub fn deform(base: &Weight, dir: &Weight) -> Self {
        let line = |a: &Rat, b: &Rat| PolyT::linear(a.clone(), b.clone());
        AffineWeight {
            finite: base.finite.iter().zip(&dir.finite).map(|(a, b)| line(a, b)).collect(),
            level: line(&base.level, &dir.level),
            ddeg: line(&base.ddeg, &dir.ddeg),
        }
    }

    /// Specialization at `t = 0`.
    pub fn at_zero(&self) -> Weight {
        AffineWeight {
            finite: self.finite.iter().map(|p| p.constant_term()).collect(),
            level: self.level.constant_term(),
            ddeg: self.ddeg.constant_term(),
        }
    }
}

impl<S: Scalar> Add<&AffineWeight<S>> for &AffineWeight<S> {
    type Output = AffineWeight<S>;

    fn add(self, rhs: &AffineWeight<S>) -> AffineWeight<S> {
        AffineWeight {
            finite: self.finite.iter().zip(&rhs.finite).map(|(a, b)| a.clone() + b.clone()).collect(),
            level: self.level.clone() + rhs.level.clone(),
            ddeg: self.ddeg.clone() + rhs.ddeg.clone(),
        }
    }
}

impl<S: Scalar> Sub<&AffineWeight<S>> for &AffineWeight<S> {
    type Output = AffineWeight<S>;

    fn sub(self, rhs: &AffineWeight<S>) -> AffineWeight<S> {
        AffineWeight {
            finite: self.finite.iter().zip(&rhs.finite).map(|(a, b)| a.clone() - b.clone()).collect(),
            level: self.level.clone() - rhs.level.clone(),
            ddeg: self.ddeg.clone() - rhs.ddeg.clone(),
        }
    }
}

impl<S: Scalar> Neg for &AffineWeight<S> {
    type Output = AffineWeight<S>;

    fn neg(self) -> AffineWeight<S> {
        AffineWeight {
            finite: self.finite.iter().map(|a| -a.clone()).collect(),
            level: -self.level.clone(),
            ddeg: -self.ddeg.clone(),
        }
    }
}

impl<S: Scalar> Add for AffineWeight<S> {
    type Output = AffineWeight<S>;

    fn add(self, rhs: AffineWeight<S>) -> AffineWeight<S> {
        &self + &rhs
    }
}

impl<S: Scalar> Sub for AffineWeight<S> {
    type Output = AffineWeight<S>;

    fn sub(self, rhs: AffineWeight<S>) -> AffineWeight<S> {
        &self - &rhs
    }
}

impl fmt::Display for AffineWeight<Rat> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fin: Vec<String> = self.finite.iter().map(fmt_rat).collect();
        write!(f, "[{}; level {}; delta {}]", fin.join(", "), fmt_rat(&self.level), fmt_rat(&self.ddeg))
    }
}

impl Serialize for AffineWeight<Rat> {
    fn serialize<Z: Serializer>(&self, s: Z) -> std::result::Result<Z::Ok, Z::Error> {
        let mut st = s.serialize_struct("AffineWeight", 3)?;
        let fin: Vec<String> = self.finite.iter().map(fmt_rat).collect();
        st.serialize_field("finite", &fin)?;
        st.serialize_field("level", &fmt_rat(&self.level))?;
        st.serialize_field("ddeg", &fmt_rat(&self.ddeg))?;
        st.end()
    }
}

/// Real root `α + nδ` or imaginary root `nδ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AffineRoot {
    Real { finite: Root, n: i64 },
    Imaginary { n: i64 },
}

impl AffineRoot {
    pub fn real(finite: Root, n: i64) -> Self {
        AffineRoot::Real { finite, n }
    }

    pub fn imaginary(n: i64) -> Self {
        assert_ne!(n, 0, "0·δ is not a root");
        AffineRoot::Imaginary { n }
    }

    pub fn is_real(&self) -> bool {
        matches!(self, AffineRoot::Real { .. })
    }

    pub fn delta_degree(&self) -> i64 {
        match self {
            AffineRoot::Real { n, .. } | AffineRoot::Imaginary { n } => *n,
        }
    }

    pub fn is_positive(&self) -> bool {
        match self {
            AffineRoot::Real { finite, n } => *n > 0 || (*n == 0 && finite.iter().all(|&c| c >= 0)),
            AffineRoot::Imaginary { n } => *n > 0,
        }
    }

    pub fn negated(&self) -> Self {
        match self {
            AffineRoot::Real { finite, n } => AffineRoot::Real { finite: finite.iter().map(|c| -c).collect(), n: -n },
            AffineRoot::Imaginary { n } => AffineRoot::Imaginary { n: -n },
        }
    }
}

impl fmt::Display for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AffineRoot::Real { finite, n } => write!(f, "{finite:?}{n:+}d"),
            AffineRoot::Imaginary { n } => write!(f, "{n}d"),
        }
    }
}

impl Serialize for AffineRoot {
    fn serialize<Z: Serializer>(&self, s: Z) -> std::result::Result<Z::Ok, Z::Error> {
        let mut st = s.serialize_struct("AffineRoot", 3)?;
        match self {
            AffineRoot::Real { finite, n } => {
                st.serialize_field("kind", "real")?;
                st.serialize_field("root", finite)?;
                st.serialize_field("n", n)?;
            }
            AffineRoot::Imaginary { n } => {
                st.serialize_field("kind", "imaginary")?;
                st.serialize_field("root", &Vec::<i64>::new())?;
                st.serialize_field("n", n)?;
            }
        }
        st.end()
    }
}

/// Roots, `θ`, `ρ̄`, `h∨` and the normalized form of a finite root system.
#[derive(Clone, Debug)]
pub struct FiniteRootSystem {
    datum: CartanDatum,
    roots: Vec<Root>,
    positive: Vec<Root>,
    theta: Root,
    rho_bar: Vec<Rat>,
    dual_coxeter: i64,
    form: Vec<Vec<Rat>>,
    fund_form: Vec<Vec<Rat>>,
    cartan_inv: Vec<Vec<Rat>>,
}

fn invert(m: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = m.len();
    let aug: Vec<Vec<Rat>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut v = r.clone();
            v.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            v
        })
        .collect();
    let (red, piv) = rref(aug, 2 * n);
    assert_eq!(piv, (0..n).collect::<Vec<_>>(), "Cartan matrix is singular");
    red.into_iter().map(|r| r[n..].to_vec()).collect()
}

impl FiniteRootSystem {
    /// Generates all roots by closing the simple roots under simple
    /// reflections.
    pub fn build(datum: CartanDatum) -> Result<Self> {
        let l = datum.rank;
        let a = &datum.cartan;
        let bound = 2 * l * l + 240;
        let simple: Vec<Root> = (0..l).map(|i| (0..l).map(|j| i64::from(i == j)).collect()).collect();
        let mut seen: HashSet<Root> = simple.iter().cloned().collect();
        let mut queue: VecDeque<Root> = simple.into_iter().collect();
        while let Some(beta) = queue.pop_front() {
            for i in 0..l {
                let pair: i64 = (0..l).map(|j| a[i][j] * beta[j]).sum();
                let mut next = beta.clone();
                next[i] -= pair;
                if next[i].abs() > 64 {
                    return Err(Error::NotFiniteType);
                }
                if seen.insert(next.clone()) {
                    if seen.len() > bound {
                        return Err(Error::NotFiniteType);
                    }
                    queue.push_back(next);
                }
            }
        }
        let height = |r: &Root| r.iter().sum::<i64>();
        let mut positive: Vec<Root> = seen.iter().filter(|r| r.iter().all(|&c| c >= 0)).cloned().collect();
        positive.sort_by(|x, y| height(x).cmp(&height(y)).then_with(|| x.cmp(y)));
        if positive.len() * 2 != seen.len() {
            return Err(Error::NotFiniteType);
        }
        let mut roots = positive.clone();
        roots.extend(positive.iter().map(|r| r.iter().map(|c| -c).collect::<Root>()));
        let theta = positive.last().unwrap().clone();
        if positive.iter().filter(|r| height(r) == height(&theta)).count() != 1 {
            return Err(Error::NotFiniteType);
        }

        let d = &datum.symmetrizers;
        let form: Vec<Vec<Rat>> = (0..l).map(|i| (0..l).map(|j| &d[i] * int(a[i][j])).collect()).collect();
        let cartan_rat: Vec<Vec<Rat>> = a.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        let cartan_inv = invert(&cartan_rat);
        // (ω_i|ω_j) = (C⁻¹ᵀ B C⁻¹)_ij with fundamental coords x = C·a
        let fund_form: Vec<Vec<Rat>> = (0..l)
            .map(|i| {
                (0..l)
                    .map(|j| {
                        let mut s = Rat::zero();
                        for p in 0..l {
                            for q in 0..l {
                                s += &cartan_inv[p][i] * &form[p][q] * &cartan_inv[q][j];
                            }
                        }
                        s
                    })
                    .collect()
            })
            .collect();

        let mut sys = FiniteRootSystem {
            datum,
            roots,
            positive,
            theta,
            rho_bar: Vec::new(),
            dual_coxeter: 0,
            form,
            fund_form,
            cartan_inv,
        };
        let norm = sys.root_norm(&sys.theta.clone());
        if norm != int(2) {
            return Err(Error::NotFiniteType);
        }
        let mut rho_simple = vec![Rat::zero(); l];
        for r in &sys.positive {
            for (acc, &c) in rho_simple.iter_mut().zip(r) {
                *acc += rat(c, 2);
            }
        }
        sys.rho_bar = (0..l)
            .map(|i| (0..l).map(|j| int(sys.datum.cartan[i][j]) * &rho_simple[j]).sum())
            .collect();
        debug_assert!(sys.rho_bar.iter().all(|x| x.is_one()));
        let rho_theta = sys.finite_form(&sys.rho_bar, &sys.root_to_fund(&sys.theta));
        let h = Rat::one() + rho_theta * int(2) / norm;
        sys.dual_coxeter = h.to_integer().try_into().map_err(|_| Error::NotFiniteType)?;
        Ok(sys)
    }

    pub fn from_series(s: &str) -> Result<Self> {
        Self::build(s.parse()?)
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn rank(&self) -> usize {
        self.datum.rank
    }

    pub fn series(&self) -> Series {
        self.datum.series
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.datum.series, self.datum.rank)
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    /// Positive roots ordered by height.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn theta(&self) -> &Root {
        &self.theta
    }

    pub fn dual_coxeter(&self) -> i64 {
        self.dual_coxeter
    }

    /// Gram matrix `(α_i|α_j)` of the simple roots.
    pub fn form_matrix(&self) -> &[Vec<Rat>] {
        &self.form
    }

    pub fn critical_level(&self) -> Rat {
        int(-self.dual_coxeter)
    }

    pub fn is_root(&self, r: &[i64]) -> bool {
        self.roots.iter().any(|x| x == r)
    }

    /// Simple-root coordinates `→` coroot pairings.
    pub fn root_to_fund(&self, r: &[i64]) -> Vec<Rat> {
        let a = &self.datum.cartan;
        (0..self.rank()).map(|i| int(r.iter().zip(&a[i]).map(|(c, x)| c * x).sum())).collect()
    }

    /// Coroot pairings `→` simple-root coordinates.
    pub fn fund_to_simple<S: Scalar>(&self, x: &[S]) -> Vec<S> {
        (0..self.rank())
            .map(|i| x.iter().zip(&self.cartan_inv[i]).fold(S::zero(), |acc, (xi, c)| acc + xi.scale(c)))
            .collect()
    }

    /// `(α|α)` for a finite root in simple coordinates.
    pub fn root_norm(&self, r: &[i64]) -> Rat {
        let mut s = Rat::zero();
        for (i, ri) in r.iter().enumerate() {
            for (j, rj) in r.iter().enumerate() {
                s += &self.form[i][j] * int(ri * rj);
            }
        }
        s
    }

    /// Form on finite parts given by coroot pairings.
    pub fn finite_form<S: Scalar>(&self, x: &[S], y: &[S]) -> S {
        let mut s = S::zero();
        for (i, xi) in x.iter().enumerate() {
            for (j, yj) in y.iter().enumerate() {
                let c = &self.fund_form[i][j];
                if !c.is_zero() {
                    s = s + (xi.clone() * yj.clone()).scale(c);
                }
            }
        }
        s
    }

    /// `(x|y)` on `ĥ*`, with `(Λ∘|δ) = 1` and `δ`, `Λ∘` isotropic and
    /// orthogonal to the finite part.
    pub fn bilinear<S: Scalar>(&self, x: &AffineWeight<S>, y: &AffineWeight<S>) -> S {
        self.finite_form(&x.finite, &y.finite) + x.level.clone() * y.ddeg.clone() + x.ddeg.clone() * y.level.clone()
    }

    pub fn root_weight<S: Scalar>(&self, beta: &AffineRoot) -> AffineWeight<S> {
        match beta {
            AffineRoot::Real { finite, n } => AffineWeight {
                finite: self.root_to_fund(finite).iter().map(S::from_rat).collect(),
                level: S::zero(),
                ddeg: S::from_rat(&int(*n)),
            },
            AffineRoot::Imaginary { n } => AffineWeight::delta(self.rank()).scaled(&S::from_rat(&int(*n))),
        }
    }

    pub fn finite_root_weight(&self, r: &[i64]) -> Weight {
        AffineWeight { finite: self.root_to_fund(r), level: Rat::zero(), ddeg: Rat::zero() }
    }

    /// `(β|β)`: the finite norm for real roots, zero for imaginary ones.
    pub fn affine_root_norm(&self, beta: &AffineRoot) -> Rat {
        match beta {
            AffineRoot::Real { finite, .. } => self.root_norm(finite),
            AffineRoot::Imaginary { .. } => Rat::zero(),
        }
    }

    /// `⟨x, β∨⟩ = 2(x|β)/(β|β)` for a real root `β`.
    pub fn coroot_pairing<S: Scalar>(&self, x: &AffineWeight<S>, beta: &AffineRoot) -> Result<S> {
        if !beta.is_real() {
            return Err(Error::ImaginaryRoot);
        }
        let b = self.root_weight::<S>(beta);
        let norm = self.affine_root_norm(beta);
        Ok(self.bilinear(x, &b).scale(&(int(2) / norm)))
    }

    /// `ρ = ρ̄ + h∨Λ∘`.
    pub fn rho(&self) -> Weight {
        AffineWeight { finite: self.rho_bar.clone(), level: int(self.dual_coxeter), ddeg: Rat::zero() }
    }

    pub fn rho_bar(&self) -> Weight {
        AffineWeight { finite: self.rho_bar.clone(), level: Rat::zero(), ddeg: Rat::zero() }
    }

    pub fn direction(&self, d: Deformation) -> Weight {
        match d {
            Deformation::Rho => self.rho(),
            Deformation::RhoBar => self.rho_bar(),
        }
    }

    pub fn deform(&self, lambda: &Weight, d: Deformation) -> DeformedWeight {
        AffineWeight::deform(lambda, &self.direction(d))
    }

    /// Root space dimension: 1 for real roots, the rank for imaginary ones.
    pub fn mult(&self, beta: &AffineRoot) -> usize {
        if beta.is_real() {
            1
        } else {
            self.rank()
        }
    }

    /// Positive affine roots of `δ`-degree at most `max_degree`.
    pub fn positive_affine_roots(&self, max_degree: u32) -> Vec<AffineRoot> {
        let mut out: Vec<AffineRoot> = self.positive.iter().map(|r| AffineRoot::real(r.clone(), 0)).collect();
        for n in 1..=i64::from(max_degree) {
            out.extend(self.roots.iter().map(|r| AffineRoot::real(r.clone(), n)));
            out.push(AffineRoot::imaginary(n));
        }
        out
    }

    /// `α_0 = -θ + δ`.
    pub fn affine_simple_root(&self) -> AffineRoot {
        AffineRoot::real(self.theta.iter().map(|c| -c).collect(), 1)
    }
}
