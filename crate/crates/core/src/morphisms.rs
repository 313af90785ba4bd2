//! Formal linear combinations of diagrams and the linear-category
//! operations: bilinear composition and tensor, the transpose by pi
//! rotation, Jones-Wenzl idempotents, simple-object projectors, compressed
//! hom dimensions and the rescaling self-functors.

use crate::diagrams::{Arc, BoundaryPoint, OrientedDiagram};
use crate::linalg::Matrix;
use crate::scalars::{ensure_generic, quantum_integer, Field, FieldContext};
use crate::words::{Letter, Word};
use crate::Error;
use std::collections::BTreeMap;

/// A morphism `X^domain -> X^codomain`: a finite linear combination of
/// diagrams of type `(domain, codomain)` with nonzero coefficients.
///
/// Diagrams are drawn with the domain on the top edge and the codomain on
/// the bottom edge, so composition `f . g` glues `g`'s diagram above `f`'s.
#[derive(Clone, PartialEq, Debug)]
pub struct Morphism<K: Field> {
    domain: Word,
    codomain: Word,
    terms: BTreeMap<OrientedDiagram, K>,
}

impl<K: Field> Morphism<K> {
    pub fn zero(domain: Word, codomain: Word) -> Self {
        Morphism {
            domain,
            codomain,
            terms: BTreeMap::new(),
        }
    }

    /// Single diagram with coefficient 1.
    pub fn from_diagram(d: OrientedDiagram) -> Self {
        Self::single(d, K::one())
    }

    pub fn single(d: OrientedDiagram, coeff: K) -> Self {
        let mut m = Morphism::zero(d.top().clone(), d.bottom().clone());
        if !coeff.is_zero() {
            m.terms.insert(d, coeff);
        }
        m
    }

    pub fn identity(w: &Word) -> Self {
        Self::from_diagram(OrientedDiagram::identity(w))
    }

    /// The cap `x (x) x* -> I`.
    pub fn epsilon_x() -> Self {
        Self::from_diagram(cap_diagram(Letter::X))
    }

    /// The cap `x* (x) x -> I`.
    pub fn epsilon_xstar() -> Self {
        Self::from_diagram(cap_diagram(Letter::Xstar))
    }

    /// The cup `I -> x* (x) x`.
    pub fn delta_x() -> Self {
        Self::from_diagram(cup_diagram(Letter::Xstar))
    }

    /// The cup `I -> x (x) x*`.
    pub fn delta_xstar() -> Self {
        Self::from_diagram(cup_diagram(Letter::X))
    }

    pub fn domain(&self) -> &Word {
        &self.domain
    }

    pub fn codomain(&self) -> &Word {
        &self.codomain
    }

    pub fn terms(&self) -> impl Iterator<Item = (&OrientedDiagram, &K)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, d: &OrientedDiagram) -> K {
        self.terms.get(d).cloned().unwrap_or_else(K::zero)
    }

    fn insert(&mut self, d: OrientedDiagram, c: K) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(d) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, Error> {
        if self.domain != rhs.domain || self.codomain != rhs.codomain {
            return Err(Error::SignatureMismatch {
                expected: format!("({}, {})", self.domain, self.codomain),
                found: format!("({}, {})", rhs.domain, rhs.codomain),
            });
        }
        let mut out = self.clone();
        for (d, c) in &rhs.terms {
            out.insert(d.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, Error> {
        self.add(&rhs.scale(&-K::one()))
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Morphism::zero(self.domain.clone(), self.codomain.clone());
        }
        Morphism {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            terms: self
                .terms
                .iter()
                .map(|(d, a)| (d.clone(), a.clone() * c.clone()))
                .collect(),
        }
    }

    /// `self . g` (self after g); requires `domain(self) = codomain(g)`.
    /// Each diagram pair contributes `d_L^loops_left * d_R^loops_right`.
    pub fn compose(&self, g: &Self, ctx: &FieldContext<K>) -> Result<Self, Error> {
        if self.domain != g.codomain {
            return Err(Error::SignatureMismatch {
                expected: self.domain.to_string(),
                found: g.codomain.to_string(),
            });
        }
        let mut out = Morphism::zero(g.domain.clone(), self.codomain.clone());
        for (dg, cg) in &g.terms {
            for (df, cf) in &self.terms {
                let glued = OrientedDiagram::compose(dg, df)?;
                let mut coeff = cf.clone() * cg.clone();
                for _ in 0..glued.loops_left {
                    coeff = coeff * ctx.d_left().clone();
                }
                for _ in 0..glued.loops_right {
                    coeff = coeff * ctx.d_right().clone();
                }
                out.insert(glued.diagram, coeff);
            }
        }
        Ok(out)
    }

    /// Bilinear extension of diagram juxtaposition.
    pub fn tensor(&self, rhs: &Self) -> Self {
        let mut out = Morphism::zero(
            self.domain.concat(&rhs.domain),
            self.codomain.concat(&rhs.codomain),
        );
        for (da, ca) in &self.terms {
            for (db, cb) in &rhs.terms {
                out.insert(da.tensor(db), ca.clone() * cb.clone());
            }
        }
        out
    }

    /// Transpose by pi rotation: `X^{w'*} -> X^{w*}`, an involution,
    /// antimultiplicative for composition.
    pub fn transpose(&self) -> Self {
        let mut out = Morphism::zero(self.codomain.star(), self.domain.star());
        for (d, c) in &self.terms {
            out.insert(d.rotate_pi(), c.clone());
        }
        out
    }

    /// Flips every orientation label in every diagram.
    pub fn flip_orientations(&self) -> Self {
        let mut out = Morphism::zero(self.domain.flip_letters(), self.codomain.flip_letters());
        for (d, c) in &self.terms {
            out.insert(d.flip_orientations(), c.clone());
        }
        out
    }
}

fn cap_diagram(first: Letter) -> OrientedDiagram {
    OrientedDiagram::new_unchecked(
        Word::alternating(first, 2),
        Word::empty(),
        vec![Arc::new(BoundaryPoint::top(0), BoundaryPoint::top(1))],
    )
}

fn cup_diagram(first: Letter) -> OrientedDiagram {
    OrientedDiagram::new_unchecked(
        Word::empty(),
        Word::alternating(first, 2),
        vec![Arc::new(BoundaryPoint::bottom(0), BoundaryPoint::bottom(1))],
    )
}

/// The cap on adjacent strands `i, i+1` of `w`: `X^w -> X^{w minus i,i+1}`.
/// The two capped letters must differ.
pub fn cap_at<K: Field>(w: &Word, i: usize) -> Result<Morphism<K>, Error> {
    let letters = w.letters();
    if i + 1 >= letters.len() {
        return Err(Error::Domain(format!("cap position {i} out of range")));
    }
    if letters[i] == letters[i + 1] {
        return Err(Error::Domain(format!(
            "cap at {i} joins two `{}` points",
            letters[i]
        )));
    }
    let mut bottom = letters.to_vec();
    bottom.drain(i..=i + 1);
    let mut arcs = vec![Arc::new(BoundaryPoint::top(i), BoundaryPoint::top(i + 1))];
    for t in 0..letters.len() {
        if t < i {
            arcs.push(Arc::new(BoundaryPoint::top(t), BoundaryPoint::bottom(t)));
        } else if t > i + 1 {
            arcs.push(Arc::new(BoundaryPoint::top(t), BoundaryPoint::bottom(t - 2)));
        }
    }
    Ok(Morphism::from_diagram(OrientedDiagram::new_unchecked(
        w.clone(),
        Word::from_letters(bottom),
        arcs,
    )))
}

/// The cup producing adjacent strands `i, i+1` of `w`:
/// `X^{w minus i,i+1} -> X^w`.
pub fn cup_at<K: Field>(w: &Word, i: usize) -> Result<Morphism<K>, Error> {
    Ok(cap_at::<K>(w, i)?.transpose_flip())
}

impl<K: Field> Morphism<K> {
    /// Reflect-reverse applied termwise; sends the cap at `i` to the cup at
    /// `i` on the same word (coefficients untouched).
    fn transpose_flip(&self) -> Self {
        let mut out = Morphism::zero(self.codomain.clone(), self.domain.clone());
        for (d, c) in &self.terms {
            out.insert(d.reflect_reverse(), c.clone());
        }
        out
    }
}

/// The unnormalized cup-cap `U_i = cup_i . cap_i` in `End(X^w)`;
/// `U_i^2 = d U_i`.
pub fn cup_cap_at<K: Field>(
    w: &Word,
    i: usize,
    ctx: &FieldContext<K>,
) -> Result<Morphism<K>, Error> {
    cup_at::<K>(w, i)?.compose(&cap_at::<K>(w, i)?, ctx)
}

/// The `n`-th Jones-Wenzl idempotent on the alternating word of length `n`
/// starting with `first`.
///
/// Wenzl's recursion: `f_1 = 1`,
/// `f_{n+1} = f_n (x) 1 - ([n]/[n+1]) (f_n (x) 1) U_n (f_n (x) 1)`
/// with `U_n` the unnormalized cup-cap on strands `n, n+1`. The recursion
/// itself is a convention; the defining properties (idempotency, the
/// identity diagram has coefficient 1, every adjacent cap and cup
/// annihilates) are asserted in tests.
pub fn jones_wenzl<K: Field>(
    n: usize,
    first: Letter,
    ctx: &FieldContext<K>,
) -> Result<Morphism<K>, Error> {
    if n == 0 {
        return Err(Error::Domain("Jones-Wenzl index must be >= 1".into()));
    }
    ensure_generic(ctx, n as u32)?;
    let d = ctx.d()?;
    let mut f = Morphism::identity(&Word::alternating(first, 1));
    for k in 1..n {
        let word = Word::alternating(first, k + 1);
        let ext = f.tensor(&Morphism::identity(&Word::alternating(
            if k % 2 == 0 { first } else { first.flip() },
            1,
        )));
        let u = cup_cap_at::<K>(&word, k - 1, ctx)?;
        let ratio = quantum_integer(k as u32, d)?
            .div(&quantum_integer(k as u32 + 1, d)?)?;
        let correction = ext.compose(&u, ctx)?.compose(&ext, ctx)?;
        f = ext.sub(&correction.scale(&ratio))?;
    }
    Ok(f)
}

/// `P_w`: the tensor product of Jones-Wenzl idempotents over the maximal
/// alternating parts of `w`; the projector cutting the simple `X_w` out of
/// `X^w`.
pub fn simple_projector<K: Field>(
    w: &Word,
    ctx: &FieldContext<K>,
) -> Result<Morphism<K>, Error> {
    let mut p = Morphism::identity(&Word::empty());
    for part in w.alternating_decomposition() {
        let first = part.letters()[0];
        p = p.tensor(&jones_wenzl(part.len(), first, ctx)?);
    }
    Ok(p)
}

/// `dim K_{w,w'}`, the raw hom-space dimension.
pub fn hom_dimension(w: &Word, w_prime: &Word) -> usize {
    OrientedDiagram::enumerate(w, w_prime).len()
}

/// Dimension of `P_{w'} Hom(X^w, X^{w'}) P_w`: the rank of the compression
/// on the diagram basis. Equals `Hom(X_w, X_{w'})`'s dimension.
pub fn compressed_hom_dimension<K: Field>(
    w: &Word,
    w_prime: &Word,
    ctx: &FieldContext<K>,
) -> Result<usize, Error> {
    let basis = OrientedDiagram::enumerate(w, w_prime);
    if basis.is_empty() {
        return Ok(0);
    }
    let p_dom = simple_projector::<K>(w, ctx)?;
    let p_cod = simple_projector::<K>(w_prime, ctx)?;
    let mut columns = Matrix::zero(basis.len(), basis.len());
    for (col, d) in basis.iter().enumerate() {
        let m = Morphism::from_diagram(d.clone());
        let compressed = p_cod.compose(&m, ctx)?.compose(&p_dom, ctx)?;
        for (row, b) in basis.iter().enumerate() {
            columns[(row, col)] = compressed.coeff(b);
        }
    }
    Ok(columns.rank())
}

/// The rescaling self-functor determined by `eps_x -> lambda eps_x` and
/// `eps_xstar -> mu eps_xstar`; with `swap` set it sends `eps_x` to
/// `lambda eps_xstar` and `eps_xstar` to `mu eps_x` (labels flipped after
/// scaling by the census of the input diagram).
pub fn rescale_functor<K: Field>(
    f: &Morphism<K>,
    lambda: &K,
    mu: &K,
    swap: bool,
) -> Result<Morphism<K>, Error> {
    if lambda.is_zero() || mu.is_zero() {
        return Err(Error::Domain("rescale parameters must be nonzero".into()));
    }
    let (dom, cod) = if swap {
        (f.domain.flip_letters(), f.codomain.flip_letters())
    } else {
        (f.domain.clone(), f.codomain.clone())
    };
    let mut out = Morphism::zero(dom, cod);
    for (d, c) in &f.terms {
        let census = d.arc_census();
        let factor = lambda.powi(census.eps_x as i64 - census.delta_x as i64)?
            * mu.powi(census.eps_xstar as i64 - census.delta_xstar as i64)?;
        let image = if swap { d.flip_orientations() } else { d.clone() };
        out.insert(image, c.clone() * factor);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Rat, RatFn};
    use crate::scalars::Ring;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn rat_ctx(d: i64) -> FieldContext<Rat> {
        FieldContext::one_param(Rat::from_int(d)).unwrap()
    }

    #[test]
    fn generator_shapes() {
        let id_empty = Morphism::<Rat>::identity(&Word::empty());
        assert_eq!(id_empty.term_count(), 1);

        assert_eq!(Morphism::<Rat>::epsilon_x().term_count(), 1);
        assert_eq!(Morphism::<Rat>::epsilon_x().domain(), &w("x x*"));
        assert_eq!(Morphism::<Rat>::delta_x().codomain(), &w("x* x"));
        assert_eq!(Morphism::<Rat>::delta_xstar().codomain(), &w("x x*"));
        assert_eq!(Morphism::<Rat>::epsilon_xstar().domain(), &w("x* x"));
    }

    #[test]
    fn loop_values_two_parameter() {
        let ctx = FieldContext::two_param(Rat::from_int(3), Rat::from_int(5)).unwrap();
        let eps_x = Morphism::<Rat>::epsilon_x();
        let eps_xs = Morphism::<Rat>::epsilon_xstar();
        let del_x = Morphism::<Rat>::delta_x();
        let del_xs = Morphism::<Rat>::delta_xstar();

        let left = eps_x.compose(&del_xs, &ctx).unwrap();
        assert_eq!(
            left,
            Morphism::identity(&Word::empty()).scale(&Rat::from_int(3))
        );
        let right = eps_xs.compose(&del_x, &ctx).unwrap();
        assert_eq!(
            right,
            Morphism::identity(&Word::empty()).scale(&Rat::from_int(5))
        );
    }

    #[test]
    fn identity_is_neutral() {
        let ctx = rat_ctx(2);
        let f = Morphism::<Rat>::epsilon_x();
        assert_eq!(f.compose(&Morphism::identity(&w("x x*")), &ctx).unwrap(), f);
        assert_eq!(
            Morphism::identity(&Word::empty()).compose(&f, &ctx).unwrap(),
            f
        );
    }

    #[test]
    fn temperley_lieb_idempotents() {
        // e_1 = (1/d)(delta_xstar . eps_x) (x) 1_x on the word x x* x
        let ctx = rat_ctx(7);
        let d_inv = Rat::from_int(7).inv().unwrap();
        let e1 = Morphism::<Rat>::delta_xstar()
            .compose(&Morphism::epsilon_x(), &ctx)
            .unwrap()
            .tensor(&Morphism::identity(&w("x")))
            .scale(&d_inv);
        assert_eq!(e1.compose(&e1, &ctx).unwrap(), e1);

        let e2 = Morphism::<Rat>::identity(&w("x"))
            .tensor(
                &Morphism::<Rat>::delta_x()
                    .compose(&Morphism::epsilon_xstar(), &ctx)
                    .unwrap(),
            )
            .scale(&d_inv);
        assert_eq!(e2.compose(&e2, &ctx).unwrap(), e2);

        // e1 e2 e1 = d^-2 e1
        let lhs = e1
            .compose(&e2, &ctx)
            .unwrap()
            .compose(&e1, &ctx)
            .unwrap();
        assert_eq!(lhs, e1.scale(&(d_inv.clone() * d_inv)));
    }

    #[test]
    fn tensor_bilinear_and_interchange() {
        let ctx = rat_ctx(2);
        let a = Morphism::<Rat>::epsilon_x();
        let b = Morphism::<Rat>::delta_x();
        let two_a = a.scale(&Rat::from_int(2));
        let sum = a.add(&two_a).unwrap();
        assert_eq!(
            sum.tensor(&b),
            a.tensor(&b).add(&two_a.tensor(&b)).unwrap()
        );

        // interchange: (f1 (x) g1) . (f2 (x) g2) = (f1.f2) (x) (g1.g2)
        let f1 = Morphism::<Rat>::epsilon_x();
        let f2 = Morphism::<Rat>::delta_xstar();
        let g1 = Morphism::<Rat>::epsilon_xstar();
        let g2 = Morphism::<Rat>::delta_x();
        let lhs = f1
            .tensor(&g1)
            .compose(&f2.tensor(&g2), &ctx)
            .unwrap();
        let rhs = f1
            .compose(&f2, &ctx)
            .unwrap()
            .tensor(&g1.compose(&g2, &ctx).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn transpose_involution_and_antimultiplicativity() {
        let ctx = rat_ctx(3);
        assert_eq!(
            Morphism::<Rat>::identity(&w("x x")).transpose(),
            Morphism::identity(&w("x* x*"))
        );
        for top in [w("x x*"), w("x* x x* x")] {
            for bottom in [Word::empty(), w("x x*")] {
                for d in OrientedDiagram::enumerate(&top, &bottom) {
                    let m = Morphism::<Rat>::from_diagram(d);
                    assert_eq!(m.transpose().transpose(), m);
                }
            }
        }
        // t(f.g) = t(g).t(f)
        let f = Morphism::<Rat>::epsilon_x();
        let g = Morphism::<Rat>::delta_xstar();
        let lhs = f.compose(&g, &ctx).unwrap().transpose();
        let rhs = g.transpose().compose(&f.transpose(), &ctx).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn jones_wenzl_level_two() {
        // f_2 = 1 - (1/d)(delta_xstar . eps_x), the unique cap-killed
        // idempotent with identity coefficient 1
        let ctx = FieldContext::generic();
        let f2 = jones_wenzl::<RatFn>(2, Letter::X, &ctx).unwrap();
        let d_inv = RatFn::var().inv().unwrap();
        let expected = Morphism::identity(&w("x x*"))
            .sub(
                &Morphism::<RatFn>::delta_xstar()
                    .compose(&Morphism::epsilon_x(), &ctx)
                    .unwrap()
                    .scale(&d_inv),
            )
            .unwrap();
        assert_eq!(f2, expected);
    }

    #[test]
    fn jones_wenzl_properties_generic_small() {
        let ctx = FieldContext::generic();
        for first in [Letter::X, Letter::Xstar] {
            for n in 1..=4usize {
                let f = jones_wenzl::<RatFn>(n, first, &ctx).unwrap();
                assert_eq!(f.compose(&f, &ctx).unwrap(), f, "f_{n}^2 != f_{n}");
                let word = Word::alternating(first, n);
                assert!(
                    f.coeff(&OrientedDiagram::identity(&word)).is_one(),
                    "identity coefficient"
                );
                for i in 0..n.saturating_sub(1) {
                    let cap = cap_at::<RatFn>(&word, i).unwrap();
                    assert!(cap.compose(&f, &ctx).unwrap().is_zero());
                    let cup = cup_at::<RatFn>(&word, i).unwrap();
                    assert!(f.compose(&cup, &ctx).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn jones_wenzl_numeric_and_degenerate() {
        for d in [2i64, 3] {
            let ctx = rat_ctx(d);
            for n in 1..=5usize {
                let f = jones_wenzl::<Rat>(n, Letter::X, &ctx).unwrap();
                assert_eq!(f.compose(&f, &ctx).unwrap(), f);
            }
        }
        // [2](d) = d = 0 is impossible by context construction; [3](1) = 0
        let err = jones_wenzl::<Rat>(3, Letter::X, &rat_ctx(1)).unwrap_err();
        assert_eq!(err, Error::NotGeneric { level: 3 });
    }

    #[test]
    fn simple_projector_structure() {
        let ctx = FieldContext::generic();
        // single letters: identity
        assert_eq!(
            simple_projector::<RatFn>(&w("x"), &ctx).unwrap(),
            Morphism::identity(&w("x"))
        );
        // projector is idempotent on a non-alternating word
        let word = w("x x x*");
        let p = simple_projector::<RatFn>(&word, &ctx).unwrap();
        assert_eq!(p.compose(&p, &ctx).unwrap(), p);
        assert_eq!(p.domain(), &word);
    }

    #[test]
    fn lemma_caps_kill_projector() {
        // D . P_w = 0 for every diagram D: X^w -> I, small words
        let ctx = FieldContext::generic();
        for word in [w("x x*"), w("x* x"), w("x x x* x*"), w("x x* x x*")] {
            let p = simple_projector::<RatFn>(&word, &ctx).unwrap();
            for d in OrientedDiagram::enumerate(&word, &Word::empty()) {
                let m = Morphism::<RatFn>::from_diagram(d);
                assert!(m.compose(&p, &ctx).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn hom_dimensions() {
        assert_eq!(hom_dimension(&w("x x*"), &w("x x*")), 2);
        assert_eq!(hom_dimension(&w("x"), &w("x")), 1);
        assert_eq!(hom_dimension(&w("x x"), &w("x x")), 1);
        assert_eq!(hom_dimension(&w("x"), &w("x*")), 0);
    }

    #[test]
    fn compressed_hom_dimensions() {
        let ctx = FieldContext::generic();
        assert_eq!(
            compressed_hom_dimension::<RatFn>(&w("x x*"), &w("x x*"), &ctx).unwrap(),
            1
        );
        assert_eq!(
            compressed_hom_dimension::<RatFn>(&w("x"), &w("x*"), &ctx).unwrap(),
            0
        );
        assert_eq!(
            compressed_hom_dimension::<RatFn>(&Word::empty(), &Word::empty(), &ctx)
                .unwrap(),
            1
        );
        // distinct words with a nonzero raw hom space
        assert_eq!(
            compressed_hom_dimension::<RatFn>(&w("x x* x"), &w("x"), &ctx).unwrap(),
            0
        );
    }

    #[test]
    fn rescale_functor_basics() {
        let one = Rat::from_int(1);
        let f = Morphism::<Rat>::epsilon_x();
        assert_eq!(rescale_functor(&f, &one, &one, false).unwrap(), f);

        let lambda = Rat::from_int(2);
        let mu = Rat::from_int(3);
        assert_eq!(
            rescale_functor(&f, &lambda, &mu, false).unwrap(),
            f.scale(&lambda)
        );
        // swapped: eps_x -> lambda eps_xstar
        assert_eq!(
            rescale_functor(&f, &lambda, &mu, true).unwrap(),
            Morphism::epsilon_xstar().scale(&lambda)
        );
        // delta_x -> lambda^-1 delta_xstar under swap
        assert_eq!(
            rescale_functor(&Morphism::<Rat>::delta_x(), &lambda, &mu, true).unwrap(),
            Morphism::delta_xstar().scale(&lambda.inv().unwrap())
        );
        assert!(rescale_functor(&f, &Rat::zero(), &mu, false).is_err());
    }

    #[test]
    fn rescale_functor_intertwines_composition() {
        // source (d_L, d_R) = (3, 5), lambda = 2, mu = 3:
        // plain target (d_L', d_R') = (lambda^-1 mu 3, lambda mu^-1 5)
        // swapped target (d_L', d_R') = (lambda mu^-1 5, lambda^-1 mu 3)
        let lambda = Rat::from_int(2);
        let mu = Rat::from_int(3);
        let src = FieldContext::two_param(Rat::from_int(3), Rat::from_int(5)).unwrap();
        let plain_tgt = FieldContext::two_param(
            lambda.inv().unwrap() * mu.clone() * Rat::from_int(3),
            lambda.clone() * mu.inv().unwrap() * Rat::from_int(5),
        )
        .unwrap();
        let swap_tgt = FieldContext::two_param(
            lambda.clone() * mu.inv().unwrap() * Rat::from_int(5),
            lambda.inv().unwrap() * mu.clone() * Rat::from_int(3),
        )
        .unwrap();

        let words = [Word::empty(), w("x x*"), w("x* x")];
        for wa in &words {
            for wb in &words {
                for wc in &words {
                    for d1 in OrientedDiagram::enumerate(wa, wb) {
                        for d2 in OrientedDiagram::enumerate(wb, wc) {
                            let g = Morphism::<Rat>::from_diagram(d1.clone());
                            let f = Morphism::<Rat>::from_diagram(d2.clone());
                            for (swap, tgt) in
                                [(false, &plain_tgt), (true, &swap_tgt)]
                            {
                                let lhs = rescale_functor(
                                    &f.compose(&g, &src).unwrap(),
                                    &lambda,
                                    &mu,
                                    swap,
                                )
                                .unwrap();
                                let rhs = rescale_functor(&f, &lambda, &mu, swap)
                                    .unwrap()
                                    .compose(
                                        &rescale_functor(&g, &lambda, &mu, swap)
                                            .unwrap(),
                                        tgt,
                                    )
                                    .unwrap();
                                assert_eq!(lhs, rhs);
                            }
                        }
                    }
                }
            }
        }
    }
}
