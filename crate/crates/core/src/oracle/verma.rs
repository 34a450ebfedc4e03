//! Deformed Verma modules over `ℚ[t]` in PBW bases, and their contravariant
//! forms.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use super::algebra::{Kind, LoopAlgebra, LoopElement};
use crate::exactalg::{kernel_basis, saturate_at_t, Matrix};
use crate::rootdata::{AffineRoot, Deformation, FiniteRootSystem};
use crate::scalar::int;
use crate::weylcalc::{leq, BoxCoords};
use crate::{DeformedWeight, Error, LocalMatrix, PolyT, Result, Weight};

/// Non-decreasing list of `n̂₋` basis elements.
pub type Monomial = Vec<LoopElement>;

/// `Σ p_m · m·v_λ`.
pub type VermaVector = BTreeMap<Monomial, PolyT>;

fn add_scaled(out: &mut VermaVector, v: &VermaVector, c: &PolyT) {
    for (m, p) in v {
        let term = p * c;
        let e = out.entry(m.clone()).or_insert_with(PolyT::zero);
        *e += &term;
        if e.is_zero() {
            out.remove(m);
        }
    }
}

#[derive(Clone, Debug)]
struct WeightSpace {
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

/// `Δ_{ℚ[t]}(λ + t·dir)` for `sl_{l+1}`, with caches for straightening,
/// weight-space bases and Gram matrices.
#[derive(Clone, Debug)]
pub struct VermaLattice {
    sys: FiniteRootSystem,
    alg: LoopAlgebra,
    lambda: Weight,
    dir: Deformation,
    hw: DeformedWeight,
    act_cache: HashMap<(LoopElement, Monomial), VermaVector>,
    spaces: HashMap<BoxCoords, WeightSpace>,
    grams: HashMap<BoxCoords, LocalMatrix>,
}

impl VermaLattice {
    pub fn new(sys: &FiniteRootSystem, lambda: &Weight, dir: Deformation) -> Result<Self> {
        let alg = LoopAlgebra::new(sys)?;
        Ok(VermaLattice {
            sys: sys.clone(),
            alg,
            lambda: lambda.clone(),
            dir,
            hw: sys.deform(lambda, dir),
            act_cache: HashMap::new(),
            spaces: HashMap::new(),
            grams: HashMap::new(),
        })
    }

    pub fn system(&self) -> &FiniteRootSystem {
        &self.sys
    }

    pub fn algebra(&self) -> &LoopAlgebra {
        &self.alg
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn direction(&self) -> Deformation {
        self.dir
    }

    pub fn highest_weight(&self) -> &DeformedWeight {
        &self.hw
    }

    /// `ν` with `−ν` the weight of a negative element, or of its `ω`-image.
    pub fn depth(&self, x: &LoopElement) -> Option<BoxCoords> {
        let (root, degree) = self.alg.weight(x);
        let beta = if root.iter().all(|&c| c == 0) {
            if degree >= 0 {
                return None;
            }
            AffineRoot::imaginary(-i64::from(degree))
        } else {
            AffineRoot::real(root.iter().map(|c| -c).collect(), -i64::from(degree))
        };
        if !beta.is_positive() {
            return None;
        }
        BoxCoords::of_root(&self.sys, &beta)
    }

    fn space(&mut self, nu: &BoxCoords) -> &WeightSpace {
        if !self.spaces.contains_key(nu) {
            let mut cands: Vec<(LoopElement, BoxCoords)> = self
                .alg
                .basis(nu.c0 as i32)
                .into_iter()
                .filter(|x| self.alg.kind(x) == Kind::Negative)
                .filter_map(|x| self.depth(&x).map(|d| (x, d)))
                .collect();
            cands.sort();
            fn rec(
                cands: &[(LoopElement, BoxCoords)],
                start: usize,
                rest: &BoxCoords,
                cur: &mut Monomial,
                out: &mut Vec<Monomial>,
            ) {
                if rest.is_zero() {
                    out.push(cur.clone());
                    return;
                }
                for i in start..cands.len() {
                    if let Some(r) = rest.checked_sub(&cands[i].1) {
                        cur.push(cands[i].0);
                        rec(cands, i, &r, cur, out);
                        cur.pop();
                    }
                }
            }
            let mut basis = Vec::new();
            rec(&cands, 0, nu, &mut Vec::new(), &mut basis);
            basis.sort();
            let index = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
            self.spaces.insert(nu.clone(), WeightSpace { basis, index });
        }
        &self.spaces[nu]
    }

    /// PBW basis of the weight space `λ − ν`.
    pub fn basis(&mut self, nu: &BoxCoords) -> Vec<Monomial> {
        self.space(nu).basis.clone()
    }

    pub fn dim(&mut self, nu: &BoxCoords) -> usize {
        self.space(nu).basis.len()
    }

    /// Depth of a monomial below the highest weight.
    pub fn monomial_depth(&self, m: &[LoopElement]) -> BoxCoords {
        m.iter().fold(BoxCoords::zero(self.sys.rank()), |acc, x| acc.add(&self.depth(x).expect("negative element")))
    }

    /// Coordinates of a vector of weight `λ − ν` in the PBW basis.
    pub fn coordinates(&mut self, nu: &BoxCoords, v: &VermaVector) -> Vec<PolyT> {
        let space = self.space(nu);
        let mut row = vec![PolyT::zero(); space.basis.len()];
        for (m, p) in v {
            row[space.index[m]] = p.clone();
        }
        row
    }

    pub fn vector(&mut self, nu: &BoxCoords, coords: &[PolyT]) -> VermaVector {
        let basis = &self.space(nu).basis;
        basis.iter().zip(coords).filter(|(_, p)| !p.is_zero()).map(|(m, p)| (m.clone(), p.clone())).collect()
    }

    /// `g · m·v_λ` by PBW straightening.
    pub fn act(&mut self, g: LoopElement, m: &[LoopElement]) -> VermaVector {
        let key = (g, m.to_vec());
        if let Some(v) = self.act_cache.get(&key) {
            return v.clone();
        }
        let scalar = |p: PolyT| -> VermaVector {
            if p.is_zero() {
                VermaVector::new()
            } else {
                VermaVector::from([(m.to_vec(), p)])
            }
        };
        let out = match self.alg.kind(&g) {
            Kind::Central => scalar(self.hw.level.clone()),
            Kind::Cartan => {
                let LoopElement::Loop { base: super::algebra::Gen::H(i), .. } = g else { unreachable!() };
                let i = i as usize;
                let shift: i64 = m
                    .iter()
                    .map(|y| match y {
                        LoopElement::Loop { base, .. } => self.alg.h_eigenvalue(i, base),
                        LoopElement::Central => 0,
                    })
                    .sum();
                scalar(&self.hw.finite[i] + &PolyT::constant(int(shift)))
            }
            Kind::Positive if m.is_empty() => VermaVector::new(),
            Kind::Negative if m.first().is_none_or(|y| g <= *y) => {
                let mut mono = Vec::with_capacity(m.len() + 1);
                mono.push(g);
                mono.extend_from_slice(m);
                VermaVector::from([(mono, PolyT::one())])
            }
            _ => {
                // g·y·rest = y·(g·rest) + [g,y]·rest
                let y = m[0];
                let rest = &m[1..];
                let inner = self.act(g, rest);
                let mut out = self.act_vector(y, &inner);
                for (z, c) in self.alg.bracket(&g, &y) {
                    let part = self.act(z, rest);
                    add_scaled(&mut out, &part, &PolyT::constant(int(c)));
                }
                out
            }
        };
        self.act_cache.insert(key, out.clone());
        out
    }

    pub fn act_vector(&mut self, g: LoopElement, v: &VermaVector) -> VermaVector {
        let mut out = VermaVector::new();
        for (m, p) in v {
            let part = self.act(g, m);
            add_scaled(&mut out, &part, p);
        }
        out
    }

    /// `y₁(y₂(⋯(y_k · v)))` for `m = y₁⋯y_k`.
    pub fn apply_monomial(&mut self, m: &[LoopElement], v: &VermaVector) -> VermaVector {
        m.iter().rev().fold(v.clone(), |acc, &y| self.act_vector(y, &acc))
    }

    /// Gram matrix of `F(x, y)`, `F(ω(u)x, y) = F(x, uy)`, on the weight
    /// space `λ − ν` in the PBW basis.
    pub fn gram_matrix(&mut self, nu: &BoxCoords) -> LocalMatrix {
        if let Some(g) = self.grams.get(nu) {
            return g.clone();
        }
        let basis = self.basis(nu);
        let g = if nu.is_zero() {
            LocalMatrix::identity(1)
        } else {
            let mut rows = Vec::with_capacity(basis.len());
            for x in &basis {
                let x1 = x[0];
                let sub_nu = nu.checked_sub(&self.depth(&x1).unwrap()).expect("monomial inside ν");
                let lower = self.gram_matrix(&sub_nu);
                let xi = self.space(&sub_nu).index[&x[1..]];
                let up = self.alg.omega(&x1);
                let mut row = Vec::with_capacity(basis.len());
                for y in &basis {
                    let w = self.act(up, y);
                    let mut entry = PolyT::zero();
                    for (m, p) in &w {
                        let j = self.space(&sub_nu).index[m];
                        entry += &(p * &lower[(xi, j)]);
                    }
                    row.push(entry);
                }
                rows.push(row);
            }
            Matrix::with_cols(rows, basis.len())
        };
        self.grams.insert(nu.clone(), g.clone());
        g
    }

    /// `F(x, y)` by applying `ω(x)` to `y·v_λ` element by element.
    pub fn form_direct(&mut self, x: &[LoopElement], y: &VermaVector) -> PolyT {
        let mut v = y.clone();
        for g in x {
            let up = self.alg.omega(g);
            v = self.act_vector(up, &v);
        }
        v.get(&Vec::new()).cloned().unwrap_or_else(PolyT::zero)
    }

    /// `F(x, y)` for vectors of the same weight via the Gram matrix.
    pub fn form(&mut self, nu: &BoxCoords, x: &VermaVector, y: &VermaVector) -> PolyT {
        let g = self.gram_matrix(nu);
        let xs = self.coordinates(nu, x);
        let ys = self.coordinates(nu, y);
        let mut s = PolyT::zero();
        for (i, xi) in xs.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in ys.iter().enumerate() {
                if !yj.is_zero() {
                    s += &(&(xi * &g[(i, j)]) * yj);
                }
            }
        }
        s
    }

    /// Coordinates of a `ℚ[t]`-basis of the saturated lattice of singular
    /// vectors at `λ − nδ`: vectors killed by `e_0, …, e_l` over `ℚ(t)`.
    pub fn singular_vectors(&mut self, n: u32) -> Vec<Vec<PolyT>> {
        let delta = BoxCoords::of_root(&self.sys, &AffineRoot::imaginary(1)).unwrap().times(n);
        let basis = self.basis(&delta);
        let gens = self.alg.chevalley_e();
        let mut blocks: Vec<Vec<Vec<PolyT>>> = Vec::new();
        for e in gens {
            let target = delta.checked_sub(&self.depth(&self.alg.omega(&e)).unwrap()).expect("e lowers depth");
            let tdim = self.dim(&target);
            let mut block = vec![vec![PolyT::zero(); basis.len()]; tdim];
            for (col, y) in basis.iter().enumerate() {
                let img = self.act(e, y);
                for (r, p) in self.coordinates(&target, &img).into_iter().enumerate() {
                    block[r][col] = p;
                }
            }
            blocks.push(block);
        }
        let rows: Vec<Vec<PolyT>> = blocks.into_iter().flatten().collect();
        let kernel = kernel_basis(&Matrix::with_cols(rows, basis.len()));
        if kernel.is_empty() {
            return kernel;
        }
        saturate_at_t(&Matrix::with_cols(kernel, basis.len()), basis.len()).to_rows()
    }

    /// Singular vectors at `μ`, which must be `λ − nδ` with `n ≥ 1`.
    pub fn singular_vectors_at(&mut self, mu: &Weight) -> Result<Vec<Vec<PolyT>>> {
        let nu = leq(&self.sys, mu, &self.lambda).ok_or(Error::NotImaginaryShift)?;
        let delta = BoxCoords::of_root(&self.sys, &AffineRoot::imaginary(1)).unwrap();
        if nu.c0 == 0 || delta.times(nu.c0) != nu {
            return Err(Error::NotImaginaryShift);
        }
        Ok(self.singular_vectors(nu.c0))
    }
}
