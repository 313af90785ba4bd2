//! *-structures on the one-parameter category.
//!
//! For `d^2` real the adjoint of a diagram is
//! `D* = c^{#(D)} (conj(d)/d)^{l(D)} D'` with `D'` the reflect-reverse of
//! `D`, extended conjugate-linearly; `c` ranges over nonzero scalars with
//! `conj(c d) = c d`. The C* normalization takes `c = d/|d|`, and
//! positivity is probed by exact Gram matrices of the cup bases
//! `Hom(I, X^w)`.

use crate::diagrams::OrientedDiagram;
use crate::linalg::{self, Matrix, PsdVerdict};
use crate::morphisms::Morphism;
use crate::scalars::{Field, FieldContext};
use crate::words::Word;
use crate::Error;

/// A validated *-structure parameter: `c` nonzero with `conj(cd) = cd`, on
/// a one-parameter context with `d = ±conj(d)`.
#[derive(Clone, Debug)]
pub struct StarParams<K: Field> {
    c: K,
    ctx: FieldContext<K>,
}

impl<K: Field> StarParams<K> {
    pub fn new(c: K, ctx: FieldContext<K>) -> Result<Self, Error> {
        let d = ctx.d()?;
        if c.is_zero() {
            return Err(Error::InvalidStarParams("c must be nonzero".into()));
        }
        if !star_params_valid(&c, &ctx) {
            return Err(Error::InvalidStarParams(format!(
                "conj(cd) = cd and d = ±conj(d) required, got c = {c}, d = {d}"
            )));
        }
        Ok(StarParams { c, ctx })
    }

    pub fn c(&self) -> &K {
        &self.c
    }

    pub fn ctx(&self) -> &FieldContext<K> {
        &self.ctx
    }
}

/// Checks `conj(cd) = cd` and `d = ±conj(d)` (i.e. `d^2` real).
pub fn star_params_valid<K: Field>(c: &K, ctx: &FieldContext<K>) -> bool {
    let Ok(d) = ctx.d() else {
        return false;
    };
    if c.is_zero() {
        return false;
    }
    let cd = c.clone() * d.clone();
    if cd.conj() != cd {
        return false;
    }
    let dc = d.conj();
    dc == d.clone() || dc == -d.clone()
}

/// The *-operation: conjugate-linear, antimultiplicative, monoidal, and
/// involutive for valid parameters.
pub fn star<K: Field>(f: &Morphism<K>, params: &StarParams<K>) -> Result<Morphism<K>, Error> {
    let d = params.ctx.d()?;
    let ratio = d.conj().div(d)?;
    let mut out = Morphism::zero(f.codomain().clone(), f.domain().clone());
    for (diagram, coeff) in f.terms() {
        let census = diagram.arc_census();
        let factor = params.c.powi(census.sharp())? * ratio.powi(census.ell())?;
        let image = Morphism::single(diagram.reflect_reverse(), coeff.conj() * factor);
        out = out.add(&image)?;
    }
    Ok(out)
}

/// The C* adjoint: `star` with `c = d/|d|`; requires a real numeric `d`.
pub fn cstar_adjoint<K: Field>(
    f: &Morphism<K>,
    ctx: &FieldContext<K>,
) -> Result<Morphism<K>, Error> {
    let params = cstar_params(ctx)?;
    star(f, &params)
}

/// The unique-up-to-equivalence C* parameter `c = d/|d|`.
pub fn cstar_params<K: Field>(ctx: &FieldContext<K>) -> Result<StarParams<K>, Error> {
    let d = ctx.d()?;
    let sign = d
        .real_sign()
        .ok_or_else(|| Error::NonRealParameter(d.to_string()))?;
    let c = match sign {
        1 => K::one(),
        -1 => -K::one(),
        _ => return Err(Error::Domain("loop parameter d must be nonzero".into())),
    };
    StarParams::new(c, ctx.clone())
}

/// Equivalence of *-structure parameters: `c/c'` or `conj(c)/c'` is a
/// positive real.
pub fn star_equivalent<K: Field>(c: &K, c_prime: &K) -> Result<bool, Error> {
    let ratio = c.div(c_prime)?;
    let conj_ratio = c.conj().div(c_prime)?;
    Ok(ratio.real_sign() == Some(1) || conj_ratio.real_sign() == Some(1))
}

/// Gram matrix of the canonical cup basis `D_1, ..., D_N` of
/// `Hom(I, X^w)`: `G[i][j]` is the scalar `cstar(D_j) . D_i`.
pub fn gram_matrix<K: Field>(w: &Word, ctx: &FieldContext<K>) -> Result<Matrix<K>, Error> {
    let params = cstar_params(ctx)?;
    let basis = OrientedDiagram::enumerate(&Word::empty(), w);
    let n = basis.len();
    let adjoints: Vec<Morphism<K>> = basis
        .iter()
        .map(|d| star(&Morphism::from_diagram(d.clone()), &params))
        .collect::<Result<_, _>>()?;
    let mut g = Matrix::zero(n, n);
    let unit = OrientedDiagram::identity(&Word::empty());
    for (i, d_i) in basis.iter().enumerate() {
        let m_i = Morphism::from_diagram(d_i.clone());
        for (j, adj_j) in adjoints.iter().enumerate() {
            let scalar = adj_j.compose(&m_i, ctx)?;
            g[(i, j)] = scalar.coeff(&unit);
        }
    }
    Ok(g)
}

/// Exact PSD verdict for the Gram matrix of `w`.
pub fn gram_psd_verdict<K: Field>(
    w: &Word,
    ctx: &FieldContext<K>,
) -> Result<PsdVerdict, Error> {
    linalg::psd_verdict(&gram_matrix(w, ctx)?)
}
